//! Buchberger's algorithm, footprints, and ideal membership.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{IdealPresentation, Polynomial};
use crate::reduce::field_equations;

/// Work caps for basis computations; exceeding either aborts with
/// `Error::ResourceLimit`.
#[derive(Clone, Copy, Debug)]
pub struct GroebnerLimits {
    /// Maximum number of S-pairs taken off the queue.
    pub max_pairs: usize,
    /// Maximum total degree allowed for a new basis element.
    pub max_degree: u64,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits {
            max_pairs: 10_000,
            max_degree: 60,
        }
    }
}

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading monomial of another, sorted ascending in the
/// order. This form is unique per (ideal, order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.basis.first().map_or(0, Polynomial::nvars)
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("basis is nonzero"))
            .collect()
    }

    /// Remainder of f on division by the basis; zero iff f is a member.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        f.normal_form(&self.basis, self.order)
            .expect("basis elements are nonzero")
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// S-polynomial of f and g, both nonzero.
fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (lmf, lcf) = f.leading_term(order).expect("nonzero");
    let (lmg, lcg) = g.leading_term(order).expect("nonzero");
    let lcm = lmf.lcm(lmg);
    let uf = lmf.divide_into(&lcm);
    let ug = lmg.divide_into(&lcm);
    let inv_f = lcf.inv().expect("leading coefficient is nonzero");
    let inv_g = lcg.inv().expect("leading coefficient is nonzero");
    &f.mul_term(&uf, &inv_f) - &g.mul_term(&ug, &inv_g)
}

/// Computes the reduced Groebner basis with default limits.
pub fn buchberger(ideal: &IdealPresentation, order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_limits(ideal, order, GroebnerLimits::default())
}

/// Computes the reduced Groebner basis. Pairs are processed lowest lcm
/// degree first; the coprime and chain criteria prune the queue.
pub fn buchberger_with_limits(
    ideal: &IdealPresentation,
    order: MonomialOrder,
    limits: GroebnerLimits,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = ideal.generators().to_vec();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pending.insert((i, j));
        }
    }
    let mut processed = 0usize;
    while !pending.is_empty() {
        if processed == limits.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "S-pair limit of {} reached",
                limits.max_pairs
            )));
        }
        processed += 1;
        // lowest lcm degree first, then lcm, then index order
        let &(i, j) = pending
            .iter()
            .min_by_key(|&&(i, j)| {
                let lcm = lm(&basis[i], order).lcm(lm(&basis[j], order));
                (lcm.degree(), lcm.clone(), i, j)
            })
            .expect("queue is nonempty");
        pending.remove(&(i, j));
        done.insert((i, j));

        let lmi = lm(&basis[i], order);
        let lmj = lm(&basis[j], order);
        if lmi.is_coprime_with(lmj) {
            continue;
        }
        let lcm = lmi.lcm(lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k], order).divides(&lcm)
                && done.contains(&pair(i, k))
                && done.contains(&pair(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let reduced = s.normal_form(&basis, order).expect("basis is nonzero");
        if reduced.is_zero() {
            continue;
        }
        let degree = reduced.degree().expect("nonzero");
        if degree > limits.max_degree {
            return Err(Error::ResourceLimit(format!(
                "degree limit of {} exceeded by a basis element of degree {degree}",
                limits.max_degree
            )));
        }
        let new_index = basis.len();
        basis.push(reduced);
        for k in 0..new_index {
            pending.insert((k, new_index));
        }
    }
    Ok(reduce_basis(basis, order))
}

fn lm(poly: &Polynomial, order: MonomialOrder) -> &Monomial {
    poly.leading_monomial(order).expect("nonzero")
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Minimizes, interreduces, and normalizes a basis into reduced form.
fn reduce_basis(basis: Vec<Polynomial>, order: MonomialOrder) -> GroebnerBasis {
    // minimize: ascending leading monomials, keep those not divisible by
    // the leading monomial of anything already kept
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.cmp(lm(a, order), lm(b, order)));
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in sorted {
        if !kept.iter().any(|h| lm(h, order).divides(lm(&g, order))) {
            kept.push(g);
        }
    }
    // interreduce to a fixpoint
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, g)| g.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let nf = kept[i]
                .normal_form(&others, order)
                .expect("basis is nonzero");
            if nf != kept[i] {
                kept[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut basis: Vec<Polynomial> = kept.iter().map(|g| g.monic(order)).collect();
    basis.sort_by(|a, b| order.cmp(lm(a, order), lm(b, order)));
    GroebnerBasis { order, basis }
}

/// The set of standard monomials of an ideal, read off a Groebner basis:
/// monomials divisible by no leading monomial. Their residues form a basis
/// of the quotient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Footprint {
    /// Zero-dimensional ideal: the complete finite set.
    Finite(BTreeSet<Monomial>),
    /// Positive-dimensional ideal: the standard monomials of total degree
    /// at most the cap, plus the variables with no pure power among the
    /// leading monomials.
    Truncated {
        cap: u64,
        monomials: BTreeSet<Monomial>,
        free_variables: Vec<usize>,
    },
}

impl Footprint {
    pub fn monomials(&self) -> &BTreeSet<Monomial> {
        match self {
            Footprint::Finite(monomials) => monomials,
            Footprint::Truncated { monomials, .. } => monomials,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials().len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials().is_empty()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Footprint::Finite(_))
    }
}

const FOOTPRINT_BOX_LIMIT: u128 = 1 << 24;

/// Computes the footprint from a Groebner basis. For positive-dimensional
/// ideals a degree cap must be supplied and the listing is truncated at it.
pub fn footprint(gb: &GroebnerBasis, degree_cap: Option<u64>) -> Result<Footprint> {
    let nvars = gb.nvars();
    let leading: Vec<Monomial> = gb
        .leading_monomials()
        .into_iter()
        .cloned()
        .collect();
    if leading.iter().any(Monomial::is_one) {
        // the ideal is the whole ring
        return Ok(Footprint::Finite(BTreeSet::new()));
    }
    // per-variable bound from the minimal pure power, if any
    let mut bounds: Vec<Option<u32>> = vec![None; nvars];
    for mono in &leading {
        if let Some(var) = pure_power_variable(mono) {
            let exp = mono.exponent(var);
            bounds[var] = Some(bounds[var].map_or(exp, |b| b.min(exp)));
        }
    }
    let free_variables: Vec<usize> = (0..nvars).filter(|&v| bounds[v].is_none()).collect();
    if free_variables.is_empty() {
        let per_var: Vec<u32> = bounds.into_iter().map(|b| b.expect("bounded")).collect();
        let size: u128 = per_var.iter().map(|&b| b as u128).product();
        if size > FOOTPRINT_BOX_LIMIT {
            return Err(Error::TooLarge {
                size,
                limit: FOOTPRINT_BOX_LIMIT,
            });
        }
        let monomials = box_standard_monomials(&per_var, &leading, None);
        Ok(Footprint::Finite(monomials))
    } else {
        let cap = degree_cap.ok_or_else(|| {
            Error::ResourceLimit(format!(
                "footprint is infinite (no pure power of variable slots {free_variables:?}); \
                 a degree cap is required"
            ))
        })?;
        let per_var: Vec<u32> = bounds
            .into_iter()
            .map(|b| {
                let box_edge = u32::try_from(cap + 1).unwrap_or(u32::MAX);
                b.map_or(box_edge, |e| e.min(box_edge))
            })
            .collect();
        let size: u128 = per_var.iter().map(|&b| b as u128).product();
        if size > FOOTPRINT_BOX_LIMIT {
            return Err(Error::TooLarge {
                size,
                limit: FOOTPRINT_BOX_LIMIT,
            });
        }
        let monomials = box_standard_monomials(&per_var, &leading, Some(cap));
        Ok(Footprint::Truncated {
            cap,
            monomials,
            free_variables,
        })
    }
}

/// The variable of a pure power monomial X_i^a, a >= 1.
fn pure_power_variable(mono: &Monomial) -> Option<usize> {
    let mut found = None;
    for (var, &exp) in mono.exponents().iter().enumerate() {
        if exp > 0 {
            if found.is_some() {
                return None;
            }
            found = Some(var);
        }
    }
    found
}

/// Monomials in the box with exponent(i) < per_var[i], not divisible by
/// any of `leading`, optionally filtered to total degree <= cap.
fn box_standard_monomials(
    per_var: &[u32],
    leading: &[Monomial],
    cap: Option<u64>,
) -> BTreeSet<Monomial> {
    let nvars = per_var.len();
    let mut out = BTreeSet::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let mono = Monomial::new(exps.clone());
        let degree_ok = cap.is_none_or(|c| mono.degree() <= c);
        if degree_ok && !leading.iter().any(|l| l.divides(&mono)) {
            out.insert(mono);
        }
        let mut idx = nvars;
        for k in (0..nvars).rev() {
            if exps[k] + 1 < per_var[k] {
                exps[k] += 1;
                idx = k;
                break;
            }
            exps[k] = 0;
        }
        if idx == nvars {
            return out;
        }
    }
}

/// The standard monomials of the generators as given, inside the box of
/// exponents below q: monomials with all exponents at most q - 1 that no
/// generator's leading monomial divides. The count bounds the number of
/// common zeros in F_q^n.
pub fn reduced_footprint(
    ideal: &IdealPresentation,
    order: MonomialOrder,
) -> Result<BTreeSet<Monomial>> {
    let q = ideal.field().q();
    let nvars = ideal.nvars();
    match (q as u128).checked_pow(nvars as u32) {
        Some(size) if size <= FOOTPRINT_BOX_LIMIT => {}
        overflow => {
            return Err(Error::TooLarge {
                size: overflow.unwrap_or(u128::MAX),
                limit: FOOTPRINT_BOX_LIMIT,
            })
        }
    }
    let leading: Vec<Monomial> = ideal
        .generators()
        .iter()
        .map(|g| lm(g, order).clone())
        .collect();
    let per_var = vec![q as u32; nvars];
    Ok(box_standard_monomials(&per_var, &leading, None))
}

/// Membership of f in the ideal, via a reduced basis in the given order.
pub fn ideal_member(
    f: &Polynomial,
    ideal: &IdealPresentation,
    order: MonomialOrder,
) -> Result<bool> {
    let gb = buchberger(ideal, order)?;
    Ok(gb.contains(f))
}

/// Membership of f in the ideal plus the field equations, which is the
/// vanishing ideal of the generators' common zero set in F_q^n.
pub fn vanishing_ideal_member(f: &Polynomial, ideal: &IdealPresentation) -> Result<bool> {
    let mut generators = ideal.generators().to_vec();
    generators.extend(field_equations(ideal.field(), ideal.nvars()));
    let augmented = IdealPresentation::new(generators)?;
    let gb = buchberger(&augmented, MonomialOrder::Grevlex)?;
    Ok(gb.contains(f))
}

/// Whether (candidate, power) certifies that the ideal is not radical:
/// candidate^power lies in the ideal while candidate itself does not.
pub fn is_radical_witness(
    ideal: &IdealPresentation,
    candidate: &Polynomial,
    power: u64,
) -> Result<bool> {
    let gb = buchberger(ideal, MonomialOrder::Grevlex)?;
    Ok(gb.contains(&candidate.pow(power)) && !gb.contains(candidate))
}
