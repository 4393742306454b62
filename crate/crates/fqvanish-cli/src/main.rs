//! Command-line front end for the fqvanish library: canonical reduction,
//! vanishing tests, zero enumeration, vanishing-ideal membership,
//! point-count bounds, and Groebner bases over a text polynomial format.
//!
//! Exit codes: 0 on success, 2 on input or parse errors, 3 on an internal
//! invariant violation, 4 when a resource limit is hit.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fqvanish::field::{factor_prime_power, Field, FieldElement, FieldSpec};
use fqvanish::groebner::{buchberger, footprint, reduced_footprint, Footprint};
use fqvanish::monomial::MonomialOrder;
use fqvanish::parse::{parse_polynomial, polynomial_text, VarStyle};
use fqvanish::poly::{IdealPresentation, Polynomial};
use fqvanish::reduce::{affine_reduce, projective_reduce};
use fqvanish::variety::{enumerate_affine_zeros, enumerate_projective_zeros, OreBound};
use serde_json::json;

#[derive(Parser)]
#[command(name = "fqvanish", version, about = "Exact polynomial algebra over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a polynomial to its canonical normal form
    Reduce {
        #[command(flatten)]
        job: JobArgs,
        /// Also print the rewrite cofactors
        #[arg(long)]
        cofactors: bool,
        /// The polynomial to reduce
        poly: String,
    },
    /// Test whether a polynomial vanishes at every rational point
    Vanish {
        #[command(flatten)]
        job: JobArgs,
        /// The polynomial to test
        poly: String,
    },
    /// Enumerate the common zeros of a system
    Points {
        #[command(flatten)]
        job: JobArgs,
        /// The generators; with none given, the whole space is listed
        polys: Vec<String>,
    },
    /// Test membership in the vanishing ideal of a zero set
    Member {
        #[command(flatten)]
        job: JobArgs,
        /// A generator of the ideal (repeatable)
        #[arg(long = "ideal", required = true)]
        ideal: Vec<String>,
        /// The polynomial to test
        poly: String,
    },
    /// Compare the exact zero count against the proven bounds
    Bounds {
        #[command(flatten)]
        job: JobArgs,
        /// The generators
        #[arg(required = true, num_args = 1..)]
        polys: Vec<String>,
    },
    /// Compute the reduced Groebner basis and its footprint
    Gb {
        #[command(flatten)]
        job: JobArgs,
        /// The generators
        #[arg(required = true, num_args = 1..)]
        polys: Vec<String>,
    },
}

#[derive(Args)]
struct JobArgs {
    /// Field order, as an integer or `P^E`
    #[arg(long = "q")]
    q: String,
    /// Modulus for the extension field, e.g. `t^2+t+1`
    #[arg(long)]
    modulus: Option<String>,
    /// Space dimension: A^n uses variables x1..xn, P^n uses x0..xn
    #[arg(long = "n")]
    n: usize,
    /// Work in projective space P^n
    #[arg(long)]
    projective: bool,
    /// Monomial order: lex, grlex, or grevlex
    #[arg(long, default_value = "grevlex")]
    order: String,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

/// A failed invocation, carrying the process exit code.
enum Failure {
    /// Bad input: exit code 2.
    Input(String),
    /// Internal invariant violation: exit code 3.
    Internal(String),
    /// Resource limit: exit code 4.
    Limit(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
            Failure::Limit(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(msg) | Failure::Internal(msg) | Failure::Limit(msg) => msg,
        }
    }
}

fn library_failure(err: fqvanish::Error) -> Failure {
    use fqvanish::Error;
    match err {
        Error::TooLarge { .. } | Error::ResourceLimit(_) => Failure::Limit(err.to_string()),
        Error::DivisionByZero | Error::ZeroDivisor | Error::FieldMismatch => {
            Failure::Internal(err.to_string())
        }
        _ => Failure::Input(err.to_string()),
    }
}

/// A resolved job: field, ring, order, and output mode.
struct Job {
    field: Field,
    nvars: usize,
    style: VarStyle,
    order: MonomialOrder,
    json: bool,
}

impl JobArgs {
    fn resolve(&self) -> Result<Job, Failure> {
        let (p, e) = field_params(&self.q)?;
        let field = match &self.modulus {
            Some(text) => {
                let field = FieldSpec::from_modulus_text(p, text).map_err(library_failure)?;
                if field.e() != e {
                    return Err(Failure::Input(format!(
                        "modulus degree {} does not match extension degree {e}",
                        field.e()
                    )));
                }
                field
            }
            None => FieldSpec::new(p, e, None).map_err(library_failure)?,
        };
        if self.n == 0 {
            return Err(Failure::Input("the dimension must be at least 1".into()));
        }
        let (nvars, style) = if self.projective {
            (self.n + 1, VarStyle::Projective)
        } else {
            (self.n, VarStyle::Affine)
        };
        let order = MonomialOrder::parse(&self.order)
            .ok_or_else(|| Failure::Input(format!("unknown monomial order `{}`", self.order)))?;
        Ok(Job {
            field,
            nvars,
            style,
            order,
            json: self.json,
        })
    }
}

/// Reads `--q` as a plain prime power or a `P^E` shorthand.
fn field_params(text: &str) -> Result<(u64, usize), Failure> {
    if let Some((p_text, e_text)) = text.split_once('^') {
        let p = p_text
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("invalid prime in `{text}`")))?;
        let e = e_text
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("invalid exponent in `{text}`")))?;
        Ok((p, e))
    } else {
        let q: u64 = text
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("invalid field order `{text}`")))?;
        let (p, e) =
            factor_prime_power(q).ok_or(Failure::Input(format!("{q} is not a prime power")))?;
        Ok((p, e))
    }
}

impl Job {
    fn parse_poly(&self, text: &str) -> Result<Polynomial, Failure> {
        let poly = parse_polynomial(text, &self.field, self.nvars, self.style)
            .map_err(|e| Failure::Input(format!("in `{text}`: {e}")))?;
        if self.style == VarStyle::Projective && !poly.is_homogeneous() {
            return Err(Failure::Input(format!("`{text}` is not homogeneous")));
        }
        Ok(poly)
    }

    fn parse_polys(&self, texts: &[String]) -> Result<Vec<Polynomial>, Failure> {
        texts.iter().map(|t| self.parse_poly(t)).collect()
    }

    fn poly_text(&self, poly: &Polynomial) -> String {
        polynomial_text(poly, self.style, self.order)
    }

    fn point_text(&self, point: &[FieldElement]) -> String {
        let coords: Vec<String> = point.iter().map(|c| c.to_string()).collect();
        match self.style {
            VarStyle::Affine => format!("({})", coords.join(",")),
            VarStyle::Projective => format!("[{}]", coords.join(":")),
        }
    }

    fn point_json(&self, point: &[FieldElement]) -> serde_json::Value {
        json!(point.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }

    fn require_affine(&self, command: &str) -> Result<(), Failure> {
        if self.style == VarStyle::Projective {
            return Err(Failure::Input(format!(
                "`{command}` works on affine space; drop --projective"
            )));
        }
        Ok(())
    }

    /// Prints either the JSON payload or the prepared text lines.
    fn emit(
        &self,
        command: &str,
        result: serde_json::Value,
        witness: serde_json::Value,
        lines: Vec<String>,
    ) {
        if self.json {
            let payload = json!({
                "command": command,
                "field": {
                    "p": self.field.p(),
                    "e": self.field.e(),
                    "modulus": self.field.modulus_text(),
                },
                "result": result,
                "witness": witness,
            });
            println!("{payload}");
        } else {
            for line in lines {
                println!("{line}");
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Reduce { job, cofactors, poly } => cmd_reduce(&job.resolve()?, &poly, cofactors),
        Command::Vanish { job, poly } => cmd_vanish(&job.resolve()?, &poly),
        Command::Points { job, polys } => cmd_points(&job.resolve()?, &polys),
        Command::Member { job, ideal, poly } => cmd_member(&job.resolve()?, &ideal, &poly),
        Command::Bounds { job, polys } => cmd_bounds(&job.resolve()?, &polys),
        Command::Gb { job, polys } => cmd_gb(&job.resolve()?, &polys),
    }
}

fn cmd_reduce(job: &Job, poly: &str, cofactors: bool) -> Result<(), Failure> {
    let f = job.parse_poly(poly)?;
    let (reduced, cofs) = match job.style {
        VarStyle::Affine => {
            let form = affine_reduce(&f);
            (form.reduced().clone(), form.cofactors().to_vec())
        }
        VarStyle::Projective => {
            let form = projective_reduce(&f).map_err(library_failure)?;
            (form.reduced().clone(), form.cofactors().to_vec())
        }
    };
    let mut lines = vec![job.poly_text(&reduced)];
    let witness = if cofactors {
        for (i, cof) in cofs.iter().enumerate() {
            lines.push(format!("cofactor {}: {}", i + 1, job.poly_text(cof)));
        }
        json!(cofs.iter().map(|c| job.poly_text(c)).collect::<Vec<_>>())
    } else {
        json!(null)
    };
    job.emit("reduce", json!(job.poly_text(&reduced)), witness, lines);
    Ok(())
}

fn cmd_vanish(job: &Job, poly: &str) -> Result<(), Failure> {
    let f = job.parse_poly(poly)?;
    let vanishes = match job.style {
        VarStyle::Affine => fqvanish::reduce::vanishes_on_affine_space(&f),
        VarStyle::Projective => {
            fqvanish::reduce::vanishes_on_projective_space(&f).map_err(library_failure)?
        }
    };
    let mut lines = vec![format!("vanishes: {vanishes}")];
    let witness = if vanishes {
        json!(null)
    } else {
        match nonzero_point(job, &f) {
            Some(point) => {
                lines.push(format!("witness: {}", job.point_text(&point)));
                job.point_json(&point)
            }
            None => {
                lines.push("witness: space too large to search".into());
                json!(null)
            }
        }
    };
    job.emit("vanish", json!(vanishes), witness, lines);
    Ok(())
}

/// A point where f does not vanish, if the space is small enough to scan.
fn nonzero_point(job: &Job, f: &Polynomial) -> Option<Vec<FieldElement>> {
    let points: Vec<Vec<FieldElement>> = match job.style {
        VarStyle::Affine => enumerate_affine_zeros(&job.field, job.nvars, &[])
            .ok()?
            .points()
            .to_vec(),
        VarStyle::Projective => enumerate_projective_zeros(&job.field, job.nvars, &[])
            .ok()?
            .points()
            .to_vec(),
    };
    points
        .into_iter()
        .find(|p| !f.eval(p).expect("point in the ring").is_zero())
}

fn cmd_points(job: &Job, polys: &[String]) -> Result<(), Failure> {
    let gens = job.parse_polys(polys)?;
    let (points, count) = match job.style {
        VarStyle::Affine => {
            let set = enumerate_affine_zeros(&job.field, job.nvars, &gens)
                .map_err(library_failure)?;
            (set.points().to_vec(), set.len())
        }
        VarStyle::Projective => {
            let set = enumerate_projective_zeros(&job.field, job.nvars, &gens)
                .map_err(library_failure)?;
            (set.points().to_vec(), set.len())
        }
    };
    let mut lines: Vec<String> = points.iter().map(|p| job.point_text(p)).collect();
    lines.push(format!("count: {count}"));
    let result = json!({
        "points": points.iter().map(|p| job.point_json(p)).collect::<Vec<_>>(),
        "count": count,
    });
    job.emit("points", result, json!(null), lines);
    Ok(())
}

fn cmd_member(job: &Job, ideal: &[String], poly: &str) -> Result<(), Failure> {
    job.require_affine("member")?;
    let mut gens = job.parse_polys(ideal)?;
    let f = job.parse_poly(poly)?;
    gens.extend(fqvanish::reduce::field_equations(&job.field, job.nvars));
    let augmented = IdealPresentation::new(gens).map_err(library_failure)?;
    let gb = buchberger(&augmented, job.order).map_err(library_failure)?;
    let remainder = gb.normal_form(&f);
    let member = remainder.is_zero();
    let lines = vec![format!("member: {member}")];
    let witness = if member {
        json!(null)
    } else {
        json!(job.poly_text(&remainder))
    };
    job.emit("member", json!(member), witness, lines);
    Ok(())
}

fn cmd_bounds(job: &Job, polys: &[String]) -> Result<(), Failure> {
    job.require_affine("bounds")?;
    let gens = job.parse_polys(polys)?;
    let ideal = IdealPresentation::new(gens.clone()).map_err(library_failure)?;
    let exact = enumerate_affine_zeros(&job.field, job.nvars, &gens)
        .map_err(library_failure)?
        .len() as u128;
    let footprint_bound =
        reduced_footprint(&ideal, job.order).map_err(library_failure)?.len() as u128;
    let degree = gens
        .iter()
        .map(|g| OreBound::for_polynomial(g).expect("generators are nonzero"))
        .min_by_key(|b| b.raw)
        .expect("at least one generator");

    if exact > footprint_bound {
        return Err(Failure::Internal(format!(
            "footprint bound violated: {exact} zeros > {footprint_bound}"
        )));
    }
    if exact > degree.clamped {
        return Err(Failure::Internal(format!(
            "degree bound violated: {exact} zeros > {}",
            degree.clamped
        )));
    }

    let lines = vec![
        format!("exact: {exact}"),
        format!("footprint bound: {footprint_bound}"),
        format!("degree bound: {}", degree.raw),
        format!("degree bound clamped: {}", degree.clamped),
    ];
    let as_u64 = |x: u128| u64::try_from(x).unwrap_or(u64::MAX);
    let result = json!({
        "exact": as_u64(exact),
        "footprint_bound": as_u64(footprint_bound),
        "degree_bound": {
            "raw": as_u64(degree.raw),
            "clamped": as_u64(degree.clamped),
            "space": as_u64(degree.space),
        },
    });
    job.emit("bounds", result, json!(null), lines);
    Ok(())
}

fn cmd_gb(job: &Job, polys: &[String]) -> Result<(), Failure> {
    let gens = job.parse_polys(polys)?;
    let ideal = IdealPresentation::new(gens).map_err(library_failure)?;
    let gb = buchberger(&ideal, job.order).map_err(library_failure)?;
    let basis: Vec<String> = gb.polynomials().iter().map(|g| job.poly_text(g)).collect();
    let mut lines = basis.clone();
    let fp = match footprint(&gb, None) {
        Ok(Footprint::Finite(monomials)) => Some(monomials.len()),
        Ok(Footprint::Truncated { .. }) | Err(fqvanish::Error::ResourceLimit(_)) => None,
        Err(err) => return Err(library_failure(err)),
    };
    match fp {
        Some(count) => lines.push(format!("footprint: {count}")),
        None => lines.push("footprint: infinite".into()),
    }
    let result = json!({ "basis": basis, "footprint": fp });
    job.emit("gb", result, json!(null), lines);
    Ok(())
}
