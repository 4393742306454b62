//! Monomials in n variables and the three classical monomial orders.

use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial X_1^{a_1} ... X_n^{a_n}.
///
/// The derived `Ord` is plain lexicographic on the exponent vector and is
/// only a storage order; ranking for algebra goes through `MonomialOrder`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The monomial 1 in n variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    /// The single variable X_{var+1} (0-indexed) in n variables.
    pub fn variable(var: usize, nvars: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[var] = 1;
        Monomial { exponents }
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&a| a == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&a| a as u64).sum()
    }

    /// Index of the last variable with a positive exponent.
    pub fn last_variable(&self) -> Option<usize> {
        self.exponents.iter().rposition(|&a| a > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exponents }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// Quotient other / self; requires `self.divides(other)`.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        assert!(self.divides(other), "monomial does not divide");
        let exponents = other
            .exponents
            .iter()
            .zip(&self.exponents)
            .map(|(b, a)| b - a)
            .collect();
        Monomial { exponents }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial { exponents }
    }

    /// Whether the two monomials share no variable.
    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Text form like `x1^2*x3`, or `1` for the empty product. `style`
    /// gives the name of each variable slot.
    pub fn text_with(&self, name: impl Fn(usize) -> String) -> String {
        let mut parts = Vec::new();
        for (i, &a) in self.exponents.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(name(i)),
                _ => parts.push(format!("{}^{a}", name(i))),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text_with(|i| format!("x{}", i + 1)))
    }
}

/// The monomial orders supported throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Lexicographic with X_1 > X_2 > ... > X_n.
    Lex,
    /// Total degree, ties broken by Lex.
    Grlex,
    /// Total degree, ties broken by reverse lexicographic: of two monomials
    /// of equal degree the one with the smaller exponent on the last
    /// variable where they differ is greater.
    #[default]
    Grevlex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars(), "variable count mismatch");
        match self {
            MonomialOrder::Lex => Self::lex(a, b),
            MonomialOrder::Grlex => a.degree().cmp(&b.degree()).then_with(|| Self::lex(a, b)),
            MonomialOrder::Grevlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| Self::revlex(a, b)),
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    fn lex(a: &Monomial, b: &Monomial) -> Ordering {
        a.exponents.cmp(&b.exponents)
    }

    fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
        for (x, y) in a.exponents.iter().zip(&b.exponents).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grlex => "grlex",
            MonomialOrder::Grevlex => "grevlex",
        }
    }

    pub fn parse(text: &str) -> Option<MonomialOrder> {
        match text {
            "lex" => Some(MonomialOrder::Lex),
            "grlex" => Some(MonomialOrder::Grlex),
            "grevlex" => Some(MonomialOrder::Grevlex),
            _ => None,
        }
    }
}
