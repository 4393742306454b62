//! Sparse multivariate polynomials over a finite field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial in F_q[X_1, ..., X_n], stored as its nonzero terms.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(field: &Field, nvars: usize) -> Self {
        Polynomial {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &Field, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn constant(field: &Field, nvars: usize, value: FieldElement) -> Self {
        let mut poly = Self::zero(field, nvars);
        poly.add_term(Monomial::one(nvars), value);
        poly
    }

    /// The variable X_{var+1} (0-indexed slot).
    pub fn variable(field: &Field, nvars: usize, var: usize) -> Self {
        let mut poly = Self::zero(field, nvars);
        poly.add_term(Monomial::variable(var, nvars), field.one());
        poly
    }

    /// Assembles a polynomial from (monomial, coefficient) pairs, merging
    /// repeats and dropping zeros.
    pub fn from_terms(
        field: &Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Self {
        let mut poly = Self::zero(field, nvars);
        for (mono, coeff) in terms {
            poly.add_term(mono, coeff);
        }
        poly
    }

    fn add_term(&mut self, mono: Monomial, coeff: FieldElement) {
        assert_eq!(mono.nvars(), self.nvars, "variable count mismatch");
        assert!(
            coeff.field() == &self.field,
            "coefficient from a different field"
        );
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of the given variable across all terms.
    pub fn max_exponent(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    /// Every term has the same total degree (vacuously true for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|other| other == d),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    /// Terms sorted descending in the given order.
    pub fn terms_sorted(&self, order: MonomialOrder) -> Vec<(&Monomial, &FieldElement)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        terms
    }

    pub fn coefficient(&self, mono: &Monomial) -> Option<&FieldElement> {
        self.terms.get(mono)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &FieldElement)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self, order: MonomialOrder) -> Option<&FieldElement> {
        self.leading_term(order).map(|(_, c)| c)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let mut out = Self::zero(&self.field, self.nvars);
        for (mono, coeff) in &self.terms {
            out.add_term(mono.clone(), coeff * c);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Self::zero(&self.field, self.nvars);
        for (mono, coeff) in &self.terms {
            out.add_term(mono.mul(m), coeff.clone());
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        let mut out = Self::zero(&self.field, self.nvars);
        for (mono, coeff) in &self.terms {
            out.add_term(mono.mul(m), coeff * c);
        }
        out
    }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_coefficient(order) {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn pow(&self, k: u64) -> Polynomial {
        let mut result = Self::one(&self.field, self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }

    /// Evaluates at a point with one coordinate per variable.
    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        if point.iter().any(|c| c.field() != &self.field) {
            return Err(Error::FieldMismatch);
        }
        let mut acc = self.field.zero();
        for (mono, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (var, &exp) in mono.exponents().iter().enumerate() {
                if exp > 0 {
                    term = &term * &point[var].pow(exp as u64);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Division with remainder by an ordered list of divisors: returns
    /// (quotients, remainder) with `self = sum q_i * g_i + r`, no monomial
    /// of r divisible by any leading monomial of the divisors, and each
    /// quotient term produced by the first divisor in list order whose
    /// leading monomial divides the term being cleared.
    pub fn divmod(
        &self,
        divisors: &[Polynomial],
        order: MonomialOrder,
    ) -> Result<(Vec<Polynomial>, Polynomial)> {
        let leading = self.check_divisors(divisors, order)?;
        let mut quotients = vec![Self::zero(&self.field, self.nvars); divisors.len()];
        let remainder = self.run_division(divisors, &leading, order, Some(&mut quotients));
        Ok((quotients, remainder))
    }

    /// Remainder of `divmod` without quotient bookkeeping.
    pub fn normal_form(&self, divisors: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
        let leading = self.check_divisors(divisors, order)?;
        Ok(self.run_division(divisors, &leading, order, None))
    }

    fn check_divisors<'a>(
        &self,
        divisors: &'a [Polynomial],
        order: MonomialOrder,
    ) -> Result<Vec<(&'a Monomial, &'a FieldElement)>> {
        divisors
            .iter()
            .map(|g| {
                if !self.same_ring(g) {
                    return Err(Error::RingMismatch);
                }
                g.leading_term(order).ok_or(Error::ZeroDivisor)
            })
            .collect()
    }

    fn run_division(
        &self,
        divisors: &[Polynomial],
        leading: &[(&Monomial, &FieldElement)],
        order: MonomialOrder,
        mut quotients: Option<&mut Vec<Polynomial>>,
    ) -> Polynomial {
        let mut work = self.clone();
        let mut remainder = Self::zero(&self.field, self.nvars);
        while let Some((mono, coeff)) = work
            .leading_term(order)
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            match leading.iter().position(|(lm, _)| lm.divides(&mono)) {
                Some(i) => {
                    let (lm, lc) = leading[i];
                    let qm = lm.divide_into(&mono);
                    let qc = &coeff * &lc.inv().expect("leading coefficient is nonzero");
                    work = &work - &divisors[i].mul_term(&qm, &qc);
                    if let Some(qs) = quotients.as_deref_mut() {
                        qs[i].add_term(qm, qc);
                    }
                }
                None => {
                    remainder.add_term(mono.clone(), coeff.clone());
                    work.terms.remove(&mono);
                }
            }
        }
        remainder
    }

    fn same_ring(&self, other: &Polynomial) -> bool {
        self.nvars == other.nvars
            && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.same_ring(other),
            "ring mismatch: F_{}[{} vars] vs F_{}[{} vars]",
            self.field.q(),
            self.nvars,
            other.field.q(),
            other.nvars
        );
    }

    /// Text form with terms descending in `order` and variable slot i
    /// rendered by `name`. Coefficients that are sums print parenthesized.
    pub fn text_with(&self, order: MonomialOrder, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms_sorted(order)
            .into_iter()
            .map(|(mono, coeff)| {
                let coeff_text = coeff.to_string();
                let coeff_text = if coeff_text.contains('+') {
                    format!("({coeff_text})")
                } else {
                    coeff_text
                };
                if mono.is_one() {
                    coeff_text
                } else if coeff.is_one() {
                    mono.text_with(&name)
                } else {
                    format!("{coeff_text}*{}", mono.text_with(&name))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.text_with(MonomialOrder::Grevlex, |i| format!("x{}", i + 1))
        )
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}[{}]({})", self.field.q(), self.nvars, self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (mono, coeff) in &rhs.terms {
            out.add_term(mono.clone(), coeff.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (mono, coeff) in &rhs.terms {
            out.add_term(mono.clone(), -coeff);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let mut out = Polynomial::zero(&self.field, self.nvars);
        for (mono, coeff) in &self.terms {
            out.add_term(mono.clone(), -coeff);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = Polynomial::zero(&self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// A finite list of nonzero generators of an ideal, with the ambient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealPresentation {
    field: Field,
    nvars: usize,
    generators: Vec<Polynomial>,
    homogeneous: bool,
}

impl IdealPresentation {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let field = first.field().clone();
        let nvars = first.nvars();
        for g in &generators {
            if !first.same_ring(g) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
        }
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ok(IdealPresentation {
            field,
            nvars,
            generators,
            homogeneous,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// All generators are homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use rand::{Rng, SeedableRng};

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    /// Random polynomial with up to `max_terms` terms of per-variable
    /// exponent below `max_exp`.
    fn random_poly(
        field: &Field,
        nvars: usize,
        max_exp: u32,
        max_terms: usize,
        rng: &mut impl Rng,
    ) -> Polynomial {
        let nterms = rng.gen_range(0..=max_terms);
        let terms = (0..nterms).map(|_| {
            let exps = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
            let coeff = field.element_from_index(rng.gen_range(0..field.q()));
            (Monomial::new(exps), coeff)
        });
        Polynomial::from_terms(field, nvars, terms.collect::<Vec<_>>())
    }

    fn random_point(field: &Field, nvars: usize, rng: &mut impl Rng) -> Vec<FieldElement> {
        (0..nvars)
            .map(|_| field.element_from_index(rng.gen_range(0..field.q())))
            .collect()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let f3 = FieldSpec::prime(3).unwrap();
        let poly = Polynomial::from_terms(
            &f3,
            2,
            vec![
                (m(&[1, 0]), f3.from_int(1)),
                (m(&[1, 0]), f3.from_int(2)),
                (m(&[0, 1]), f3.from_int(0)),
            ],
        );
        assert!(poly.is_zero());
        assert_eq!(poly.degree(), None);
    }

    #[test]
    fn ring_axioms_on_random_triples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(418);
        for q in [2u64, 3, 4, 5] {
            let field = FieldSpec::from_order(q).unwrap();
            for nvars in 1..=3 {
                for _ in 0..5 {
                    let f = random_poly(&field, nvars, 3, 4, &mut rng);
                    let g = random_poly(&field, nvars, 3, 4, &mut rng);
                    let h = random_poly(&field, nvars, 3, 4, &mut rng);
                    assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
                    assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
                    assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
                    assert_eq!(&f + &g, &g + &f);
                    assert_eq!(&f * &g, &g * &f);
                    assert!((&f - &f).is_zero());
                    assert_eq!(&f * &Polynomial::one(&field, nvars), f);
                }
            }
        }
    }

    #[test]
    fn freshman_dream_cubes() {
        let f3 = FieldSpec::prime(3).unwrap();
        let x1 = Polynomial::variable(&f3, 2, 0);
        let x2 = Polynomial::variable(&f3, 2, 1);
        let lhs = (&x1 + &x2).pow(3);
        let rhs = &x1.pow(3) + &x2.pow(3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn leading_monomials_by_order() {
        let f7 = FieldSpec::prime(7).unwrap();
        let poly = Polynomial::from_terms(
            &f7,
            3,
            vec![
                (m(&[1, 2, 1]), f7.one()),
                (m(&[2, 0, 2]), f7.one()),
                (m(&[3, 0, 0]), f7.one()),
            ],
        );
        assert_eq!(
            poly.leading_monomial(MonomialOrder::Lex).unwrap(),
            &m(&[3, 0, 0])
        );
        assert_eq!(
            poly.leading_monomial(MonomialOrder::Grlex).unwrap(),
            &m(&[2, 0, 2])
        );
        assert_eq!(
            poly.leading_monomial(MonomialOrder::Grevlex).unwrap(),
            &m(&[1, 2, 1])
        );
    }

    #[test]
    fn division_depends_on_divisor_order() {
        // x1^2 x2 + x1 x2^2 + x2^2 divided in lex by (x1 x2 - 1, x2^2 - 1)
        // leaves x1 + x2 + 1; swapping the divisors leaves 2 x1 + 1.
        let f7 = FieldSpec::prime(7).unwrap();
        let f = Polynomial::from_terms(
            &f7,
            2,
            vec![
                (m(&[2, 1]), f7.one()),
                (m(&[1, 2]), f7.one()),
                (m(&[0, 2]), f7.one()),
            ],
        );
        let g1 = Polynomial::from_terms(
            &f7,
            2,
            vec![(m(&[1, 1]), f7.one()), (m(&[0, 0]), -&f7.one())],
        );
        let g2 = Polynomial::from_terms(
            &f7,
            2,
            vec![(m(&[0, 2]), f7.one()), (m(&[0, 0]), -&f7.one())],
        );

        let (quotients, r) = f.divmod(&[g1.clone(), g2.clone()], MonomialOrder::Lex).unwrap();
        let expect_r = Polynomial::from_terms(
            &f7,
            2,
            vec![
                (m(&[1, 0]), f7.one()),
                (m(&[0, 1]), f7.one()),
                (m(&[0, 0]), f7.one()),
            ],
        );
        assert_eq!(r, expect_r);
        let expect_q1 = Polynomial::from_terms(
            &f7,
            2,
            vec![(m(&[1, 0]), f7.one()), (m(&[0, 1]), f7.one())],
        );
        assert_eq!(quotients[0], expect_q1);
        assert_eq!(quotients[1], Polynomial::one(&f7, 2));

        let (_, r_swapped) = f.divmod(&[g2, g1], MonomialOrder::Lex).unwrap();
        let expect_swapped = Polynomial::from_terms(
            &f7,
            2,
            vec![(m(&[1, 0]), f7.from_int(2)), (m(&[0, 0]), f7.one())],
        );
        assert_eq!(r_swapped, expect_swapped);
    }

    #[test]
    fn division_recombines_and_reduces() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(402);
        for q in [2u64, 3, 4, 5] {
            let field = FieldSpec::from_order(q).unwrap();
            for order in [
                MonomialOrder::Lex,
                MonomialOrder::Grlex,
                MonomialOrder::Grevlex,
            ] {
                for _ in 0..30 {
                    let f = random_poly(&field, 2, 4, 5, &mut rng);
                    let divisors: Vec<_> = (0..2)
                        .map(|_| loop {
                            let g = random_poly(&field, 2, 3, 3, &mut rng);
                            if !g.is_zero() {
                                break g;
                            }
                        })
                        .collect();
                    let (quotients, r) = f.divmod(&divisors, order).unwrap();
                    let mut recombined = r.clone();
                    for (qi, gi) in quotients.iter().zip(&divisors) {
                        recombined = &recombined + &(qi * gi);
                    }
                    assert_eq!(recombined, f);
                    for (mono, _) in r.terms() {
                        for g in &divisors {
                            assert!(!g.leading_monomial(order).unwrap().divides(mono));
                        }
                    }
                    assert_eq!(f.normal_form(&divisors, order).unwrap(), r);
                }
            }
        }
    }

    #[test]
    fn division_rejects_zero_divisor() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f = Polynomial::one(&f2, 1);
        let z = Polynomial::zero(&f2, 1);
        assert_eq!(
            f.divmod(&[z], MonomialOrder::Grevlex),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn eval_is_a_ring_homomorphism() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(403);
        for q in [2u64, 3, 4, 9] {
            let field = FieldSpec::from_order(q).unwrap();
            for _ in 0..40 {
                let a = random_poly(&field, 3, 3, 4, &mut rng);
                let b = random_poly(&field, 3, 3, 4, &mut rng);
                let point = random_point(&field, 3, &mut rng);
                let av = a.eval(&point).unwrap();
                let bv = b.eval(&point).unwrap();
                assert_eq!((&a + &b).eval(&point).unwrap(), &av + &bv);
                assert_eq!((&a * &b).eval(&point).unwrap(), &av * &bv);
            }
        }
    }

    #[test]
    fn eval_checks_the_point() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let poly = Polynomial::one(&f2, 2);
        assert_eq!(
            poly.eval(&[f2.one()]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            poly.eval(&[f2.one(), f3.one()]),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn homogeneity() {
        let f2 = FieldSpec::prime(2).unwrap();
        let x1 = Polynomial::variable(&f2, 2, 0);
        let x2 = Polynomial::variable(&f2, 2, 1);
        assert!(Polynomial::zero(&f2, 2).is_homogeneous());
        assert!((&x1 + &x2).is_homogeneous());
        assert!((&x1.pow(2) + &(&x1 * &x2)).is_homogeneous());
        assert!(!(&x1.pow(2) + &x2).is_homogeneous());
    }

    #[test]
    fn presentation_validation() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let x = Polynomial::variable(&f2, 1, 0);
        assert_eq!(
            IdealPresentation::new(vec![]).unwrap_err(),
            Error::EmptyGenerators
        );
        assert_eq!(
            IdealPresentation::new(vec![x.clone(), Polynomial::zero(&f2, 1)]).unwrap_err(),
            Error::ZeroGenerator
        );
        assert_eq!(
            IdealPresentation::new(vec![x.clone(), Polynomial::one(&f3, 1)]).unwrap_err(),
            Error::RingMismatch
        );
        assert_eq!(
            IdealPresentation::new(vec![x.clone(), Polynomial::one(&f2, 2)]).unwrap_err(),
            Error::RingMismatch
        );
        let ideal = IdealPresentation::new(vec![x.clone(), &x * &x]).unwrap();
        assert!(ideal.is_homogeneous());
        let affine = IdealPresentation::new(vec![&x + &Polynomial::one(&f2, 1)]).unwrap();
        assert!(!affine.is_homogeneous());
    }

    #[test]
    fn canonical_text() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let t = f4.from_rep(vec![0, 1]).unwrap();
        let tp1 = f4.from_rep(vec![1, 1]).unwrap();
        let poly = Polynomial::from_terms(
            &f4,
            2,
            vec![
                (m(&[2, 0]), tp1),
                (m(&[1, 1]), t),
                (m(&[0, 0]), f4.one()),
            ],
        );
        assert_eq!(
            poly.text_with(MonomialOrder::Grevlex, |i| format!("x{}", i + 1)),
            "(t+1)*x1^2 + t*x1*x2 + 1"
        );
    }
}
