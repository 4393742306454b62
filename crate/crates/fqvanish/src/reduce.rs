//! Canonical reduced forms modulo the field equations.
//!
//! Affine: the ideal generated by X_i^q - X_i vanishes identically on
//! F_q^n, and every polynomial is congruent to a unique one with all
//! exponents at most q - 1. The rewrite X_j^a -> X_j^{a-(q-1)} (for
//! a >= q) realizes the projection and its cofactor trail certifies
//! membership of the difference.
//!
//! Projective: the polynomials X_i^q X_j - X_i X_j^q (i < j) vanish on
//! every point of F_q^{n+1}, and every homogeneous polynomial is congruent
//! to a unique combination of projectively reduced monomials, where the
//! rewrite moves blocks of q - 1 from an early variable onto the last
//! variable of the monomial.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// The generators X_i^q - X_i of the vanishing ideal of affine space.
pub fn field_equations(field: &Field, nvars: usize) -> Vec<Polynomial> {
    let q = field.q();
    (0..nvars)
        .map(|var| {
            let x = Polynomial::variable(field, nvars, var);
            &x.pow(q) - &x
        })
        .collect()
}

/// The generators X_i^q X_j - X_i X_j^q for 0 <= i < j <= n of the
/// vanishing ideal of projective n-space; the ring has n + 1 variables.
pub fn fermat_polynomials(field: &Field, nvars: usize) -> Vec<Polynomial> {
    let q = field.q();
    let mut out = Vec::new();
    for i in 0..nvars {
        for j in i + 1..nvars {
            let xi = Polynomial::variable(field, nvars, i);
            let xj = Polynomial::variable(field, nvars, j);
            out.push(&(&xi.pow(q) * &xj) - &(&xi * &xj.pow(q)));
        }
    }
    out
}

/// Position of the pair (i, j), i < j, in the `fermat_polynomials` list.
fn fermat_pair_index(i: usize, j: usize, nvars: usize) -> usize {
    debug_assert!(i < j && j < nvars);
    // pairs with first component < i come first, then (i, i+1..j)
    i * nvars - i * (i + 1) / 2 + (j - i - 1)
}

/// Whether every exponent is at most q - 1.
pub fn is_affine_reduced_monomial(mono: &Monomial, q: u64) -> bool {
    mono.exponents().iter().all(|&a| (a as u64) < q)
}

/// Whether every monomial of the polynomial is affine reduced.
pub fn is_affine_reduced(poly: &Polynomial) -> bool {
    let q = poly.field().q();
    poly.terms().all(|(m, _)| is_affine_reduced_monomial(m, q))
}

/// A projectively reduced monomial is 1, or has every exponent before its
/// last variable at most q - 1 (the last exponent is unconstrained).
pub fn is_projectively_reduced_monomial(mono: &Monomial, q: u64) -> bool {
    match mono.last_variable() {
        None => true,
        Some(last) => mono.exponents()[..last]
            .iter()
            .all(|&a| (a as u64) < q),
    }
}

/// Whether every monomial of the polynomial is projectively reduced.
pub fn is_projectively_reduced(poly: &Polynomial) -> bool {
    let q = poly.field().q();
    poly.terms()
        .all(|(m, _)| is_projectively_reduced_monomial(m, q))
}

/// All monomials in `nvars` variables with exponents at most q - 1, in
/// odometer order (last variable fastest). There are q^nvars of them.
pub fn reduced_monomials(q: u64, nvars: usize) -> impl Iterator<Item = Monomial> {
    let max = (q - 1) as u32;
    let mut current = Some(vec![0u32; nvars]);
    std::iter::from_fn(move || {
        let mut next = current.take()?;
        let mono = Monomial::new(next.clone());
        for idx in (0..nvars).rev() {
            if next[idx] < max {
                next[idx] += 1;
                current = Some(next);
                return Some(mono);
            }
            next[idx] = 0;
        }
        Some(mono)
    })
}

/// The unique affine reduced polynomial congruent to the input modulo the
/// field equations, wrapped with cofactors certifying the congruence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineReducedForm {
    reduced: Polynomial,
    cofactors: Vec<Polynomial>,
}

impl AffineReducedForm {
    /// The reduced representative; evaluates identically to the input on
    /// every point of F_q^n.
    pub fn reduced(&self) -> &Polynomial {
        &self.reduced
    }

    /// One cofactor per variable: input = reduced + sum of
    /// cofactor_i * (X_i^q - X_i).
    pub fn cofactors(&self) -> &[Polynomial] {
        &self.cofactors
    }

    pub fn into_parts(self) -> (Polynomial, Vec<Polynomial>) {
        (self.reduced, self.cofactors)
    }
}

/// Reduces modulo the field equations of the polynomial's own field.
pub fn affine_reduce(poly: &Polynomial) -> AffineReducedForm {
    let field = poly.field().clone();
    let nvars = poly.nvars();
    let q = field.q();
    let mut work = poly.clone();
    let mut cofactors = vec![Polynomial::zero(&field, nvars); nvars];
    loop {
        let target = work
            .terms()
            .filter(|(m, _)| !is_affine_reduced_monomial(m, q))
            .max_by(|(a, _), (b, _)| MonomialOrder::Grevlex.cmp(a, b))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((mono, coeff)) = target else {
            return AffineReducedForm {
                reduced: work,
                cofactors,
            };
        };
        let j = mono
            .exponents()
            .iter()
            .position(|&a| (a as u64) >= q)
            .expect("monomial is not reduced");
        // X_j^a = X_j^{a-q} (X_j^q - X_j) + X_j^{a-(q-1)}
        let mut cof_exps = mono.exponents().to_vec();
        cof_exps[j] -= q as u32;
        cofactors[j] = &cofactors[j]
            + &Polynomial::from_terms(&field, nvars, vec![(Monomial::new(cof_exps), coeff.clone())]);
        let mut new_exps = mono.exponents().to_vec();
        new_exps[j] -= (q - 1) as u32;
        let replacement =
            Polynomial::from_terms(&field, nvars, vec![(Monomial::new(new_exps), coeff.clone())]);
        let removed = Polynomial::from_terms(&field, nvars, vec![(mono, coeff)]);
        work = &(&work - &removed) + &replacement;
    }
}

/// Cofactors g_1..g_n with input - reduced = sum g_i * (X_i^q - X_i).
pub fn gamma_q_cofactors(poly: &Polynomial) -> Vec<Polynomial> {
    affine_reduce(poly).cofactors
}

/// Whether the polynomial vanishes at every point of F_q^n, decided by
/// reduction alone.
pub fn vanishes_on_affine_space(poly: &Polynomial) -> bool {
    affine_reduce(poly).reduced.is_zero()
}

/// The unique projectively reduced polynomial congruent to the input
/// modulo the Fermat polynomials, with cofactors certifying it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectiveReducedForm {
    reduced: Polynomial,
    cofactors: Vec<Polynomial>,
}

impl ProjectiveReducedForm {
    pub fn reduced(&self) -> &Polynomial {
        &self.reduced
    }

    /// One cofactor per Fermat polynomial, in `fermat_polynomials` order:
    /// input = reduced + sum cofactor_k * (X_i^q X_j - X_i X_j^q).
    pub fn cofactors(&self) -> &[Polynomial] {
        &self.cofactors
    }

    pub fn into_parts(self) -> (Polynomial, Vec<Polynomial>) {
        (self.reduced, self.cofactors)
    }
}

/// Reduces a homogeneous polynomial modulo the Fermat polynomials.
pub fn projective_reduce(poly: &Polynomial) -> Result<ProjectiveReducedForm> {
    if !poly.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let field = poly.field().clone();
    let nvars = poly.nvars();
    let q = field.q();
    let npairs = nvars * (nvars.max(1) - 1) / 2;
    let mut work = poly.clone();
    let mut cofactors = vec![Polynomial::zero(&field, nvars); npairs];
    loop {
        let target = work
            .terms()
            .filter(|(m, _)| !is_projectively_reduced_monomial(m, q))
            .max_by(|(a, _), (b, _)| MonomialOrder::Grevlex.cmp(a, b))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((mono, coeff)) = target else {
            return Ok(ProjectiveReducedForm {
                reduced: work,
                cofactors,
            });
        };
        let last = mono.last_variable().expect("monomial is not 1");
        let j = mono.exponents()[..last]
            .iter()
            .position(|&a| (a as u64) >= q)
            .expect("monomial is not reduced");
        // X_j^a X_l^b = X_j^{a-q} X_l^{b-1} (X_j^q X_l - X_j X_l^q)
        //             + X_j^{a-(q-1)} X_l^{b+(q-1)}
        let mut cof_exps = mono.exponents().to_vec();
        cof_exps[j] -= q as u32;
        cof_exps[last] -= 1;
        let k = fermat_pair_index(j, last, nvars);
        cofactors[k] = &cofactors[k]
            + &Polynomial::from_terms(&field, nvars, vec![(Monomial::new(cof_exps), coeff.clone())]);
        let mut new_exps = mono.exponents().to_vec();
        new_exps[j] -= (q - 1) as u32;
        new_exps[last] = new_exps[last]
            .checked_add((q - 1) as u32)
            .expect("exponent overflow");
        let replacement =
            Polynomial::from_terms(&field, nvars, vec![(Monomial::new(new_exps), coeff.clone())]);
        let removed = Polynomial::from_terms(&field, nvars, vec![(mono, coeff)]);
        work = &(&work - &removed) + &replacement;
    }
}

/// Whether a homogeneous polynomial vanishes at every point of projective
/// n-space, decided by reduction alone.
pub fn vanishes_on_projective_space(poly: &Polynomial) -> Result<bool> {
    Ok(projective_reduce(poly)?.reduced.is_zero())
}
