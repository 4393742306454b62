//! Text form of polynomials: parsing and canonical printing.
//!
//! The grammar is sums of terms, where a term is a product of factors
//! separated by optional `*`: integer literals below p, `t` powers and
//! parenthesized `t`-polynomials for extension-field coefficients, and
//! variable powers like `x2^3`. `+` and `-` separate terms.

use crate::error::{Error, Result};
use crate::field::{parse_t_poly, Field, FieldElement};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// Variable naming convention: affine rings use x1..xn, projective rings
/// (with n+1 slots) use x0..xn.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarStyle {
    Affine,
    Projective,
}

impl VarStyle {
    pub fn variable_name(&self, slot: usize) -> String {
        match self {
            VarStyle::Affine => format!("x{}", slot + 1),
            VarStyle::Projective => format!("x{slot}"),
        }
    }

    fn slot_of(&self, label: u64, nvars: usize) -> Option<usize> {
        match self {
            VarStyle::Affine => {
                (1..=nvars as u64).contains(&label).then(|| (label - 1) as usize)
            }
            VarStyle::Projective => (label < nvars as u64).then_some(label as usize),
        }
    }
}

/// Renders a polynomial with terms descending in `order`, named per `style`.
pub fn polynomial_text(poly: &Polynomial, style: VarStyle, order: MonomialOrder) -> String {
    poly.text_with(order, |slot| style.variable_name(slot))
}

/// Parses a polynomial over the given field with `nvars` variable slots.
pub fn parse_polynomial(
    text: &str,
    field: &Field,
    nvars: usize,
    style: VarStyle,
) -> Result<Polynomial> {
    Parser {
        chars: text.chars().collect(),
        pos: 0,
        field: field.clone(),
        nvars,
        style,
    }
    .parse()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    field: Field,
    nvars: usize,
    style: VarStyle,
}

impl Parser {
    fn parse(mut self) -> Result<Polynomial> {
        let mut poly = Polynomial::zero(&self.field, self.nvars);
        self.skip_ws();
        if self.pos == self.chars.len() {
            return Err(self.syntax("empty polynomial text"));
        }
        let mut negate = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.parse_term()?;
            poly = if negate { &poly - &term } else { &poly + &term };
            self.skip_ws();
            match self.peek() {
                None => return Ok(poly),
                Some('+') => {
                    negate = false;
                    self.pos += 1;
                }
                Some('-') => {
                    negate = true;
                    self.pos += 1;
                }
                Some(other) => {
                    return Err(self.syntax(format!("unexpected character `{other}`")))
                }
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        let mut coeff = self.field.one();
        let mut exps = vec![0u32; self.nvars];
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    let value = self.parse_uint()?;
                    if value >= self.field.p() {
                        return Err(Error::CoefficientNotInField {
                            pos: start,
                            text: value.to_string(),
                        });
                    }
                    if self.peek_after_ws() == Some('^') {
                        return Err(self.syntax("exponent must follow a variable or t"));
                    }
                    coeff = &coeff * &self.field.from_int(value);
                }
                Some('t') => {
                    let start = self.pos;
                    self.pos += 1;
                    let power = self.parse_optional_exponent()?;
                    if self.field.e() == 1 || power as usize >= self.field.e() {
                        return Err(Error::CoefficientNotInField {
                            pos: start,
                            text: if power == 1 {
                                "t".to_string()
                            } else {
                                format!("t^{power}")
                            },
                        });
                    }
                    let mut rep = vec![0; self.field.e()];
                    rep[power as usize] = 1;
                    let atom = self.field.from_rep(rep).expect("rep has length e");
                    coeff = &coeff * &atom;
                }
                Some('(') => {
                    let atom = self.parse_paren_element()?;
                    coeff = &coeff * &atom;
                }
                Some('x') => {
                    let start = self.pos;
                    self.pos += 1;
                    if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return Err(self.syntax("expected a variable index after `x`"));
                    }
                    let label = self.parse_uint()?;
                    let slot = self.style.slot_of(label, self.nvars).ok_or_else(|| {
                        Error::UnknownVariable {
                            pos: start,
                            name: format!("x{label}"),
                        }
                    })?;
                    let power = self.parse_optional_exponent()?;
                    exps[slot] = exps[slot]
                        .checked_add(power)
                        .ok_or_else(|| self.syntax("exponent too large"))?;
                }
                _ if first => return Err(self.syntax("expected a term")),
                _ => break,
            }
            first = false;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                // a `*` commits us to another factor
                self.skip_ws();
                if !matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == 't' || c == '(' || c == 'x')
                {
                    return Err(self.syntax("expected a factor after `*`"));
                }
            } else if !matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == 't' || c == '(' || c == 'x')
            {
                break;
            }
        }
        let mono = crate::monomial::Monomial::new(exps);
        Ok(Polynomial::from_terms(
            &self.field,
            self.nvars,
            vec![(mono, coeff)],
        ))
    }

    /// `^k` if present, otherwise 1.
    fn parse_optional_exponent(&mut self) -> Result<u32> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        let value = self.parse_uint()?;
        u32::try_from(value).map_err(|_| Error::Syntax {
            pos: start,
            msg: "exponent too large".to_string(),
        })
    }

    fn parse_paren_element(&mut self) -> Result<FieldElement> {
        let open = self.pos;
        self.pos += 1;
        let close = (self.pos..self.chars.len())
            .find(|&i| self.chars[i] == ')')
            .ok_or(Error::Syntax {
                pos: open,
                msg: "unclosed parenthesis".to_string(),
            })?;
        let inner: String = self.chars[self.pos..close].iter().collect();
        let offset = self.pos;
        self.pos = close + 1;
        if self.field.e() == 1 {
            return Err(Error::CoefficientNotInField {
                pos: open,
                text: inner.trim().to_string(),
            });
        }
        let coeffs = parse_t_poly(&inner, self.field.p()).map_err(|e| shift(e, offset))?;
        if coeffs.len() > self.field.e() {
            return Err(Error::CoefficientNotInField {
                pos: open,
                text: inner.trim().to_string(),
            });
        }
        let mut rep = coeffs;
        rep.resize(self.field.e(), 0);
        Ok(self.field.from_rep(rep).expect("rep has length e"))
    }

    fn parse_uint(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(c as u64 - '0' as u64))
                .ok_or(Error::Syntax {
                    pos: start,
                    msg: "integer literal too large".to_string(),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected an integer"));
        }
        Ok(value)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_after_ws(&self) -> Option<char> {
        self.chars[self.pos..]
            .iter()
            .find(|c| !c.is_whitespace())
            .copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }
}

fn shift(err: Error, offset: usize) -> Error {
    match err {
        Error::Syntax { pos, msg } => Error::Syntax {
            pos: pos + offset,
            msg,
        },
        Error::CoefficientNotInField { pos, text } => Error::CoefficientNotInField {
            pos: pos + offset,
            text,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::monomial::Monomial;
    use proptest::prelude::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn basic_affine_parse() {
        let f3 = FieldSpec::prime(3).unwrap();
        let poly = parse_polynomial("x1^2*x2 + 2*x2 + 1", &f3, 2, VarStyle::Affine).unwrap();
        let expect = Polynomial::from_terms(
            &f3,
            2,
            vec![
                (m(&[2, 1]), f3.one()),
                (m(&[0, 1]), f3.from_int(2)),
                (m(&[0, 0]), f3.one()),
            ],
        );
        assert_eq!(poly, expect);
    }

    #[test]
    fn signs_and_implicit_products() {
        let f3 = FieldSpec::prime(3).unwrap();
        let a = parse_polynomial("x1 - x2", &f3, 2, VarStyle::Affine).unwrap();
        let b = parse_polynomial("x1 + 2x2", &f3, 2, VarStyle::Affine).unwrap();
        assert_eq!(a, b);
        let c = parse_polynomial("-x1", &f3, 2, VarStyle::Affine).unwrap();
        let d = parse_polynomial("2 x1", &f3, 2, VarStyle::Affine).unwrap();
        assert_eq!(c, d);
        let e = parse_polynomial("2x1x2", &f3, 2, VarStyle::Affine).unwrap();
        let f = parse_polynomial("2*x1*x2", &f3, 2, VarStyle::Affine).unwrap();
        assert_eq!(e, f);
        let g = parse_polynomial("x1*x1^2", &f3, 2, VarStyle::Affine).unwrap();
        let h = parse_polynomial("x1^3", &f3, 2, VarStyle::Affine).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn extension_coefficients() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let poly = parse_polynomial("(t+1)x1 + t", &f4, 1, VarStyle::Affine).unwrap();
        let tp1 = f4.from_rep(vec![1, 1]).unwrap();
        let t = f4.from_rep(vec![0, 1]).unwrap();
        let expect = Polynomial::from_terms(&f4, 1, vec![(m(&[1]), tp1), (m(&[0]), t)]);
        assert_eq!(poly, expect);
        // t*t collapses to the canonical element t+1
        let sq = parse_polynomial("t*t", &f4, 1, VarStyle::Affine).unwrap();
        let lit = parse_polynomial("(t+1)", &f4, 1, VarStyle::Affine).unwrap();
        assert_eq!(sq, lit);
    }

    #[test]
    fn projective_variable_names() {
        let f2 = FieldSpec::prime(2).unwrap();
        let poly = parse_polynomial("x0*x1 + x1^2", &f2, 2, VarStyle::Projective).unwrap();
        let expect = Polynomial::from_terms(
            &f2,
            2,
            vec![(m(&[1, 1]), f2.one()), (m(&[0, 2]), f2.one())],
        );
        assert_eq!(poly, expect);
        assert!(matches!(
            parse_polynomial("x0", &f2, 2, VarStyle::Affine),
            Err(Error::UnknownVariable { .. })
        ));
        assert!(matches!(
            parse_polynomial("x2", &f2, 2, VarStyle::Projective),
            Err(Error::UnknownVariable { .. })
        ));
        assert!(matches!(
            parse_polynomial("x3", &f2, 2, VarStyle::Affine),
            Err(Error::UnknownVariable { .. })
        ));
    }

    #[test]
    fn rejections() {
        let f3 = FieldSpec::prime(3).unwrap();
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert!(matches!(
            parse_polynomial("3*x1", &f3, 1, VarStyle::Affine),
            Err(Error::CoefficientNotInField { .. })
        ));
        assert!(matches!(
            parse_polynomial("t*x1", &f3, 1, VarStyle::Affine),
            Err(Error::CoefficientNotInField { .. })
        ));
        assert!(matches!(
            parse_polynomial("t^2*x1", &f4, 1, VarStyle::Affine),
            Err(Error::CoefficientNotInField { .. })
        ));
        for bad in ["", "x1 +", "()", "1^3", "x1 * ", "x", "x1^", "y1", "(t"] {
            assert!(
                matches!(
                    parse_polynomial(bad, &f4, 1, VarStyle::Affine),
                    Err(Error::Syntax { .. })
                ),
                "expected syntax error for {bad:?}"
            );
        }
    }

    #[test]
    fn zero_round_trip() {
        let f2 = FieldSpec::prime(2).unwrap();
        let zero = Polynomial::zero(&f2, 2);
        let text = polynomial_text(&zero, VarStyle::Affine, MonomialOrder::Grevlex);
        assert_eq!(text, "0");
        assert_eq!(
            parse_polynomial(&text, &f2, 2, VarStyle::Affine).unwrap(),
            zero
        );
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(
            raw in prop::collection::vec(
                (prop::collection::vec(0u32..5, 3), 0u64..9),
                0..6,
            ),
            order_pick in 0usize..3,
            style_pick in 0usize..2,
        ) {
            let field = FieldSpec::new(3, 2, None).unwrap();
            let order = [MonomialOrder::Lex, MonomialOrder::Grlex, MonomialOrder::Grevlex][order_pick];
            let style = [VarStyle::Affine, VarStyle::Projective][style_pick];
            let poly = Polynomial::from_terms(
                &field,
                3,
                raw.into_iter()
                    .map(|(exps, c)| (Monomial::new(exps), field.element_from_index(c))),
            );
            let text = polynomial_text(&poly, style, order);
            let back = parse_polynomial(&text, &field, 3, style).unwrap();
            prop_assert_eq!(back, poly);
        }
    }
}
