//! Exact arithmetic in the finite field F_q, q = p^e.
//!
//! Prime fields are residues mod p. Extension fields are F_p[t]/(m) for a
//! monic irreducible m of degree e; when no modulus is supplied the
//! lexicographically smallest irreducible is chosen, so the same (p, e)
//! always yields the same field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order. Everything in this crate is verified
/// against exhaustive enumeration, which stops being a desk-scale activity
/// beyond this.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Shared handle to a field description.
pub type Field = Arc<FieldSpec>;

/// A finite field F_q with q = p^e elements.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    e: usize,
    /// Monic irreducible of degree e over F_p, constant term first.
    /// Canonicalized to `t` when e = 1 (it never enters arithmetic there).
    modulus: Vec<u64>,
    q: u64,
}

impl FieldSpec {
    /// Builds F_{p^e}. With `modulus = None` and e > 1 the lexicographically
    /// smallest monic irreducible of degree e is selected (coefficient tuple
    /// read from the constant term up).
    pub fn new(p: u64, e: usize, modulus: Option<Vec<u64>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidExtensionDegree(0));
        }
        let mut q: u64 = 1;
        for _ in 0..e {
            q = q
                .checked_mul(p)
                .filter(|&q| q <= MAX_FIELD_ORDER)
                .ok_or(Error::TooLarge {
                    size: (p as u128).pow(e as u32),
                    limit: MAX_FIELD_ORDER as u128,
                })?;
        }
        let modulus = match modulus {
            _ if e == 1 => vec![0, 1],
            Some(mut m) => {
                for c in &mut m {
                    *c %= p;
                }
                let deg = poly_degree(&m);
                if deg != Some(e) || m[e] != 1 {
                    return Err(Error::DegreeMismatch {
                        expected: e,
                        found: deg.unwrap_or(0),
                    });
                }
                m.truncate(e + 1);
                if !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => smallest_irreducible(p, e),
        };
        Ok(Arc::new(FieldSpec { p, e, modulus, q }))
    }

    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Field> {
        Self::new(p, 1, None)
    }

    /// Builds the field of order q, factoring q as a prime power.
    pub fn from_order(q: u64) -> Result<Field> {
        let (p, e) = factor_prime_power(q).ok_or(Error::NonPrime(q))?;
        Self::new(p, e, None)
    }

    /// Builds an extension field from a modulus written as a polynomial
    /// in t, e.g. `t^2+t+1`; the extension degree is its degree.
    pub fn from_modulus_text(p: u64, text: &str) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        let coeffs = parse_t_poly(text, p)?;
        let e = poly_degree(&coeffs).ok_or(Error::InvalidExtensionDegree(0))?;
        Self::new(p, e, Some(coeffs))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, constant term first; length e + 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Modulus in text form, e.g. `t^2+t+1`.
    pub fn modulus_text(&self) -> String {
        t_poly_text(&self.modulus)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            rep: vec![0; self.e],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_int(1)
    }

    /// The image of the integer k under the prime-subfield embedding.
    pub fn from_int(self: &Arc<Self>, k: u64) -> FieldElement {
        let mut rep = vec![0; self.e];
        rep[0] = k % self.p;
        FieldElement {
            spec: self.clone(),
            rep,
        }
    }

    /// The k-th element in canonical enumeration order, 0 <= k < q.
    /// The rep coordinates are the base-p digits of k, constant term fastest,
    /// so index 0 is zero and index 1 is one.
    pub fn element_from_index(self: &Arc<Self>, k: u64) -> FieldElement {
        assert!(k < self.q, "element index {k} out of range for F_{}", self.q);
        let mut rep = vec![0; self.e];
        let mut k = k;
        for c in rep.iter_mut() {
            *c = k % self.p;
            k /= self.p;
        }
        FieldElement {
            spec: self.clone(),
            rep,
        }
    }

    /// Builds an element from a coefficient vector of length e (entries are
    /// reduced mod p).
    pub fn from_rep(self: &Arc<Self>, rep: Vec<u64>) -> Result<FieldElement> {
        if rep.len() != self.e {
            return Err(Error::DimensionMismatch {
                expected: self.e,
                found: rep.len(),
            });
        }
        let rep = rep.into_iter().map(|c| c % self.p).collect();
        Ok(FieldElement {
            spec: self.clone(),
            rep,
        })
    }

    /// All q elements in canonical order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |k| self.element_from_index(k))
    }

    /// Parses an element from its text form: an integer for prime fields,
    /// a polynomial in `t` for extension fields.
    pub fn parse_element(self: &Arc<Self>, text: &str) -> Result<FieldElement> {
        let coeffs = parse_t_poly(text, self.p)?;
        if self.e == 1 && coeffs.len() > 1 {
            return Err(Error::CoefficientNotInField {
                pos: 0,
                text: text.trim().to_string(),
            });
        }
        if coeffs.len() > self.e {
            return Err(Error::CoefficientNotInField {
                pos: 0,
                text: text.trim().to_string(),
            });
        }
        let mut rep = coeffs;
        rep.resize(self.e, 0);
        Ok(FieldElement {
            spec: self.clone(),
            rep,
        })
    }
}

/// An element of a finite field, as the canonical representative in
/// F_p[t]/(modulus).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: Field,
    /// Coefficients of the representative, constant term first; length e,
    /// entries in [0, p).
    rep: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.spec
    }

    pub fn rep(&self) -> &[u64] {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.rep[0] == 1 && self.rep[1..].iter().all(|&c| c == 0)
    }

    /// Position of this element in the canonical enumeration order.
    pub fn index(&self) -> u64 {
        let p = self.spec.p;
        self.rep.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.spec.q - 2))
    }

    /// k-th power by square and multiply; `pow(0)` is one.
    pub fn pow(&self, k: u64) -> FieldElement {
        let mut result = self.spec.one();
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

    fn assert_same_field(&self, other: &FieldElement) {
        if !Arc::ptr_eq(&self.spec, &other.spec) {
            assert_eq!(
                self.spec, other.spec,
                "field mismatch: F_{} vs F_{}",
                self.spec.q, other.spec.q
            );
        }
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.spec.p;
        let rep = self
            .rep
            .iter()
            .zip(&rhs.rep)
            .map(|(a, b)| (a + b) % p)
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            rep,
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.spec.p;
        let rep = self
            .rep
            .iter()
            .zip(&rhs.rep)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        FieldElement {
            spec: self.spec.clone(),
            rep,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        let p = self.spec.p;
        let rep = self.rep.iter().map(|a| (p - a) % p).collect();
        FieldElement {
            spec: self.spec.clone(),
            rep,
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        let p = self.spec.p;
        let e = self.spec.e;
        if e == 1 {
            return FieldElement {
                spec: self.spec.clone(),
                rep: vec![self.rep[0] * rhs.rep[0] % p],
            };
        }
        // Schoolbook product, then reduction by the monic modulus.
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &a) in self.rep.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.rep.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        let m = &self.spec.modulus;
        for i in (e..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..e {
                let sub = c * m[j] % p;
                prod[i - e + j] = (prod[i - e + j] + p - sub) % p;
            }
        }
        prod.truncate(e);
        FieldElement {
            spec: self.spec.clone(),
            rep: prod,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", t_poly_text(&self.rep))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}({})", self.spec.q, self)
    }
}

/// Renders a dense coefficient vector (constant term first) as a polynomial
/// in `t`: highest power first, coefficient 1 suppressed on powers of t.
fn t_poly_text(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, _) => format!("{c}"),
            (1, 1) => "t".to_string(),
            (1, _) => format!("{c}*t"),
            (_, 1) => format!("t^{i}"),
            (_, _) => format!("{c}*t^{i}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// Parses a polynomial in `t` over F_p into a dense coefficient vector
/// (constant term first, trailing zeros trimmed). Accepts the grammar that
/// `t_poly_text` prints, plus optional whitespace, `-`, and implied `*`.
/// Integer literals must lie below p.
pub(crate) fn parse_t_poly(text: &str, p: u64) -> Result<Vec<u64>> {
    let chars: Vec<char> = text.chars().collect();
    let mut coeffs: Vec<u64> = Vec::new();
    let mut pos = 0;

    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };

    let parse_uint = |pos: &mut usize| -> Result<u64> {
        let start = *pos;
        let mut value: u64 = 0;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(chars[*pos] as u64 - '0' as u64))
                .ok_or(Error::Syntax {
                    pos: start,
                    msg: "integer literal too large".to_string(),
                })?;
            *pos += 1;
        }
        if *pos == start {
            return Err(Error::Syntax {
                pos: start,
                msg: "expected an integer".to_string(),
            });
        }
        Ok(value)
    };

    skip_ws(&mut pos);
    if pos == chars.len() {
        return Err(Error::Syntax {
            pos,
            msg: "empty element text".to_string(),
        });
    }
    let mut negate = false;
    loop {
        skip_ws(&mut pos);
        let term_start = pos;
        // coefficient
        let mut coeff: u64 = 1;
        let mut saw_coeff = false;
        if pos < chars.len() && chars[pos].is_ascii_digit() {
            let value = parse_uint(&mut pos)?;
            if value >= p {
                return Err(Error::CoefficientNotInField {
                    pos: term_start,
                    text: value.to_string(),
                });
            }
            coeff = value;
            saw_coeff = true;
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                skip_ws(&mut pos);
            }
        }
        // power of t
        let mut power = 0usize;
        if pos < chars.len() && chars[pos] == 't' {
            pos += 1;
            power = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let exp = parse_uint(&mut pos)?;
                power = usize::try_from(exp).map_err(|_| Error::Syntax {
                    pos,
                    msg: "exponent too large".to_string(),
                })?;
            }
        } else if !saw_coeff {
            return Err(Error::Syntax {
                pos,
                msg: "expected a coefficient or `t`".to_string(),
            });
        }
        if coeffs.len() < power + 1 {
            coeffs.resize(power + 1, 0);
        }
        let signed = if negate { (p - coeff % p) % p } else { coeff };
        coeffs[power] = (coeffs[power] + signed) % p;

        skip_ws(&mut pos);
        if pos == chars.len() {
            break;
        }
        match chars[pos] {
            '+' => {
                negate = false;
                pos += 1;
            }
            '-' => {
                negate = true;
                pos += 1;
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Factors q as p^e when q is a prime power.
pub fn factor_prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            return (rest == 1).then_some((p, e));
        }
        p += 1;
    }
    Some((q, 1))
}

/// Degree of a dense coefficient vector, None for the zero polynomial.
fn poly_degree(coeffs: &[u64]) -> Option<usize> {
    coeffs.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo the monic polynomial `m`, both dense over F_p.
fn rem_monic(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let md = poly_degree(m).expect("monic divisor");
    let mut r = a.to_vec();
    while let Some(rd) = poly_degree(&r) {
        if rd < md {
            break;
        }
        let c = r[rd];
        r[rd] = 0;
        for j in 0..md {
            let sub = c * m[j] % p;
            r[rd - md + j] = (r[rd - md + j] + p - sub) % p;
        }
    }
    r.truncate(md.max(1));
    r
}

fn poly_eval_fp(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// Irreducibility over F_p: root check for degree <= 3, exhaustive monic
/// divisor search up to degree d/2 otherwise.
fn is_irreducible(coeffs: &[u64], p: u64) -> bool {
    let d = match poly_degree(coeffs) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    if d <= 3 {
        return (0..p).all(|x| poly_eval_fp(coeffs, x, p) != 0);
    }
    for divisor_deg in 1..=d / 2 {
        let mut digits = vec![0u64; divisor_deg];
        loop {
            let mut candidate = digits.clone();
            candidate.push(1);
            let r = rem_monic(coeffs, &candidate, p);
            if poly_degree(&r).is_none() {
                return false;
            }
            // odometer over the p^divisor_deg lower coefficient tuples
            let mut i = 0;
            loop {
                if i == divisor_deg {
                    break;
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == divisor_deg {
                break;
            }
        }
    }
    true
}

/// First irreducible monic of degree e over F_p, scanning coefficient
/// tuples in base-p counting order (constant term least significant).
fn smallest_irreducible(p: u64, e: usize) -> Vec<u64> {
    let mut index: u64 = 0;
    loop {
        let mut coeffs = vec![0u64; e + 1];
        let mut k = index;
        for c in coeffs.iter_mut().take(e) {
            *c = k % p;
            k /= p;
        }
        assert!(k == 0, "no irreducible of degree {e} over F_{p}");
        coeffs[e] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
        index += 1;
    }
}
