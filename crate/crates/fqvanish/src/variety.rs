//! Rational point enumeration and the polynomial constructions attached
//! to finite point sets: indicator polynomials, interpolation bases, and
//! the footprint and degree bounds on the number of common zeros.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::groebner::reduced_footprint;
use crate::monomial::MonomialOrder;
use crate::poly::{IdealPresentation, Polynomial};

/// Hard cap on the number of candidate points an enumeration may visit.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

/// A set of points in F_q^n, kept in canonical enumeration order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffinePointSet {
    field: Field,
    nvars: usize,
    points: Vec<Vec<FieldElement>>,
}

impl AffinePointSet {
    /// Wraps explicit points, validating dimensions and fields.
    pub fn new(field: &Field, nvars: usize, points: Vec<Vec<FieldElement>>) -> Result<Self> {
        for point in &points {
            if point.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: point.len(),
                });
            }
            if point.iter().any(|c| c.field() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(AffinePointSet {
            field: field.clone(),
            nvars,
            points,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[FieldElement]) -> bool {
        self.points.iter().any(|p| p == point)
    }
}

/// A set of points in projective n-space, as canonical representatives
/// with first nonzero coordinate 1, in canonical enumeration order. The
/// ring has n + 1 coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectivePointSet {
    field: Field,
    nvars: usize,
    points: Vec<Vec<FieldElement>>,
}

impl ProjectivePointSet {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Number of homogeneous coordinates, n + 1.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[FieldElement]) -> bool {
        self.points.iter().any(|p| p == point)
    }
}

/// Walks all of F_q^nvars in canonical order (first coordinate slowest)
/// and yields the points where every generator vanishes. No generators
/// means the whole space.
pub fn enumerate_affine_zeros(
    field: &Field,
    nvars: usize,
    generators: &[Polynomial],
) -> Result<AffinePointSet> {
    check_generators(field, nvars, generators)?;
    let q = field.q();
    let total = q
        .checked_pow(nvars as u32)
        .filter(|&t| t <= ENUMERATION_LIMIT)
        .ok_or(Error::TooLarge {
            size: (q as u128).saturating_pow(nvars as u32),
            limit: ENUMERATION_LIMIT as u128,
        })?;
    let mut points = Vec::new();
    let mut indices = vec![0u64; nvars];
    for _ in 0..total {
        let point: Vec<FieldElement> = indices
            .iter()
            .map(|&k| field.element_from_index(k))
            .collect();
        if generators
            .iter()
            .all(|g| g.eval(&point).expect("point matches ring").is_zero())
        {
            points.push(point);
        }
        for k in (0..nvars).rev() {
            indices[k] += 1;
            if indices[k] < q {
                break;
            }
            indices[k] = 0;
        }
    }
    Ok(AffinePointSet {
        field: field.clone(),
        nvars,
        points,
    })
}

/// Walks the canonical representatives of projective n-space, ordered by
/// the position of the leading 1 and then by the remaining coordinates,
/// and yields those where every generator vanishes. Generators must be
/// homogeneous; none means all of projective space. `nvars` counts the
/// homogeneous coordinates, n + 1.
pub fn enumerate_projective_zeros(
    field: &Field,
    nvars: usize,
    generators: &[Polynomial],
) -> Result<ProjectivePointSet> {
    check_generators(field, nvars, generators)?;
    if generators.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let q = field.q();
    // (q^nvars - 1) / (q - 1) candidates; bound via the affine count
    q.checked_pow(nvars as u32)
        .filter(|&t| t <= ENUMERATION_LIMIT)
        .ok_or(Error::TooLarge {
            size: (q as u128).saturating_pow(nvars as u32),
            limit: ENUMERATION_LIMIT as u128,
        })?;
    let mut points = Vec::new();
    for lead in 0..nvars {
        let free = nvars - lead - 1;
        let mut indices = vec![0u64; free];
        let count = q.pow(free as u32);
        for _ in 0..count {
            let mut point = vec![field.zero(); lead];
            point.push(field.one());
            point.extend(indices.iter().map(|&k| field.element_from_index(k)));
            if generators
                .iter()
                .all(|g| g.eval(&point).expect("point matches ring").is_zero())
            {
                points.push(point);
            }
            for k in (0..free).rev() {
                indices[k] += 1;
                if indices[k] < q {
                    break;
                }
                indices[k] = 0;
            }
        }
    }
    Ok(ProjectivePointSet {
        field: field.clone(),
        nvars,
        points,
    })
}

fn check_generators(field: &Field, nvars: usize, generators: &[Polynomial]) -> Result<()> {
    for g in generators {
        if g.field() != field || g.nvars() != nvars {
            return Err(Error::RingMismatch);
        }
    }
    Ok(())
}

/// The pair (g, h) attached to generators f_1..f_r: h is the product of
/// the 1 - f_i^{q-1} and g = 1 - h. On F_q^n, g is 0 exactly on the
/// common zero set and 1 elsewhere, h the reverse, and g + h = 1.
pub fn indicator_polynomials(ideal: &IdealPresentation) -> (Polynomial, Polynomial) {
    let field = ideal.field();
    let nvars = ideal.nvars();
    let one = Polynomial::one(field, nvars);
    let mut h = one.clone();
    for f in ideal.generators() {
        h = &h * &(&one - &f.pow(field.q() - 1));
    }
    let g = &one - &h;
    (g, h)
}

/// Polynomials p_1..p_s with p_i = 1 at the i-th point and 0 at the
/// others: products over j != i of (X_t - a_j[t]) / (a_i[t] - a_j[t]),
/// where t is the first coordinate separating the two points.
pub fn interpolation_basis(points: &AffinePointSet) -> Result<Vec<Polynomial>> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let list = points.points();
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if list[i] == list[j] {
                return Err(Error::DuplicatePoints);
            }
        }
    }
    let field = points.field();
    let nvars = points.nvars();
    let mut basis = Vec::with_capacity(list.len());
    for (i, a_i) in list.iter().enumerate() {
        let mut p = Polynomial::one(field, nvars);
        for (j, a_j) in list.iter().enumerate() {
            if j == i {
                continue;
            }
            let t = (0..nvars)
                .find(|&t| a_i[t] != a_j[t])
                .expect("points are distinct");
            let scale = (&a_i[t] - &a_j[t]).inv().expect("coordinates differ");
            let factor = &Polynomial::variable(field, nvars, t)
                - &Polynomial::constant(field, nvars, a_j[t].clone());
            p = &p * &factor.scale(&scale);
        }
        basis.push(p);
    }
    Ok(basis)
}

/// The footprint bound: the number of common zeros in F_q^n is at most
/// the number of standard monomials of the generators inside the box of
/// exponents below q.
pub fn footprint_bound(ideal: &IdealPresentation, order: MonomialOrder) -> Result<u64> {
    Ok(reduced_footprint(ideal, order)?.len() as u64)
}

/// The degree bound d * q^(n-1) on the zeros of one polynomial of total
/// degree d in n variables, next to the size q^n of the whole space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OreBound {
    /// d * q^(n-1), without clamping.
    pub raw: u128,
    /// min(raw, q^n).
    pub clamped: u128,
    /// q^n, the size of the whole space.
    pub space: u128,
}

impl OreBound {
    /// Reads the bound off a nonzero polynomial and its ring.
    pub fn for_polynomial(f: &Polynomial) -> Result<OreBound> {
        let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(ore_bound(degree, f.field().q(), f.nvars()))
    }

    /// The bound does not beat the size of the space; this happens exactly
    /// when d >= q.
    pub fn is_vacuous(&self) -> bool {
        self.raw >= self.space
    }
}

/// Computes the degree bound for a polynomial of total degree `degree`
/// over F_q in `nvars` variables (at least one).
pub fn ore_bound(degree: u64, q: u64, nvars: usize) -> OreBound {
    assert!(nvars >= 1, "the bound needs at least one variable");
    let raw = (degree as u128).saturating_mul((q as u128).saturating_pow(nvars as u32 - 1));
    let space = (q as u128).saturating_pow(nvars as u32);
    OreBound {
        raw,
        clamped: raw.min(space),
        space,
    }
}
