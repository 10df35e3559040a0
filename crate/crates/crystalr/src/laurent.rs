//! Exact Laurent polynomials in one variable with integer coefficients.
//!
//! Coefficients are kept in a sorted map with no stored zeros, so equality
//! is structural.  The text form lists terms by ascending exponent, e.g.
//! `t^-1 + 2 + t + t^2`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        LaurentPolynomial::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exponent: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exponent, coeff);
        }
        LaurentPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, coeff: i64, exponent: i64) {
        let entry = self.coeffs.entry(exponent).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(c, e);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }

    /// Multiplies by `t^e`.
    pub fn scale_by_power(&self, e: i64) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&exp, &c)| (exp + e, c)).collect(),
        }
    }

    pub fn evaluate_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

fn render_term(coeff: i64, exponent: i64, first: bool) -> String {
    let mag = coeff.abs();
    let body = match exponent {
        0 => mag.to_string(),
        1 => {
            if mag == 1 {
                "t".to_string()
            } else {
                format!("{mag}t")
            }
        }
        e => {
            if mag == 1 {
                format!("t^{e}")
            } else {
                format!("{mag}t^{e}")
            }
        }
    };
    if first {
        if coeff < 0 {
            format!("-{body}")
        } else {
            body
        }
    } else if coeff < 0 {
        format!(" - {body}")
    } else {
        format!(" + {body}")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            write!(f, "{}", render_term(c, e, idx == 0))?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::PolyParse("empty input".into()));
        }
        if s == "0" {
            return Ok(LaurentPolynomial::zero());
        }
        // split into signed terms
        let mut out = LaurentPolynomial::zero();
        let normalized = s.replace(" - ", " + -");
        for raw in normalized.split(" + ") {
            let raw = raw.trim();
            let (sign, raw) = match raw.strip_prefix('-') {
                Some(rest) => (-1i64, rest.trim()),
                None => (1i64, raw),
            };
            let (coeff_str, exp): (&str, i64) = match raw.find('t') {
                None => (raw, 0),
                Some(pos) => {
                    let exp = match raw[pos + 1..].strip_prefix('^') {
                        None if raw[pos + 1..].is_empty() => 1,
                        Some(e) => e
                            .parse()
                            .map_err(|_| Error::PolyParse(format!("bad exponent in {raw:?}")))?,
                        None => {
                            return Err(Error::PolyParse(format!("bad term {raw:?}")));
                        }
                    };
                    (&raw[..pos], exp)
                }
            };
            let coeff: i64 = if coeff_str.is_empty() {
                1
            } else {
                coeff_str
                    .trim()
                    .parse()
                    .map_err(|_| Error::PolyParse(format!("bad coefficient in {raw:?}")))?
            };
            out.add_term(sign * coeff, exp);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn shift_example() {
        // (t^-1 + 1) * t = 1 + t
        let x = p("t^-1 + 1").scale_by_power(1);
        assert_eq!(x, p("1 + t"));
    }

    #[test]
    fn render_examples() {
        let mut x = LaurentPolynomial::one();
        x.add_term(2, 2);
        assert_eq!(x.to_string(), "1 + 2t^2");
        assert_eq!(p("t^-1 + 2 + t + t^2").to_string(), "t^-1 + 2 + t + t^2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(p("1 - t^2").to_string(), "1 - t^2");
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p("1 + t").mul(&p("1 + t")), p("1 + 2t + t^2"));
        assert_eq!(p("1 + t").add(&p("t^-1 - t")), p("t^-1 + 1"));
        assert!(p("t").add(&p("-t")).is_zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPolynomial>().is_err());
        assert!("t^".parse::<LaurentPolynomial>().is_err());
        assert!("q + 1".parse::<LaurentPolynomial>().is_err());
    }

    proptest! {
        /// parse . render = identity
        #[test]
        fn parse_render_round_trip(terms in proptest::collection::btree_map(-6i64..12, -9i64..9, 0..8)) {
            let mut poly = LaurentPolynomial::zero();
            for (&e, &c) in &terms {
                poly.add_term(c, e);
            }
            let rendered = poly.to_string();
            let back: LaurentPolynomial = rendered.parse().unwrap();
            prop_assert_eq!(back, poly);
        }
    }
}
