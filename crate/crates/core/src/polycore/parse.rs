//! Text grammar for polynomials:
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := factor (["*"] factor)*
//! factor := integer ["/" integer] | "z" index ["^" integer]
//! ```
//!
//! Variables are 1-based (`z1` is the first). Whitespace is ignored.

use super::{Monomial, PolyError, Polynomial};
use crate::exactmath::Rational;

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse {
            input: self.src.to_string(),
            position: self.pos,
            message: message.into(),
        }
    }
}

pub(super) fn parse_polynomial(src: &str, nvars: usize) -> Result<Polynomial, PolyError> {
    let mut cur = Cursor {
        src,
        bytes: src.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            None if !first => break,
            None => return Err(cur.error("empty polynomial")),
            Some(b'+') => {
                cur.pos += 1;
                Rational::ONE
            }
            Some(b'-') => {
                cur.pos += 1;
                -Rational::ONE
            }
            Some(_) if first => Rational::ONE,
            Some(_) => return Err(cur.error("expected `+` or `-`")),
        };
        first = false;
        let (c, m) = parse_term(&mut cur, nvars)?;
        terms.push((m, &sign * &c));
    }
    Ok(Polynomial::from_terms(nvars, terms))
}

fn parse_term(cur: &mut Cursor<'_>, nvars: usize) -> Result<(Rational, Monomial), PolyError> {
    let mut coeff = Rational::ONE;
    let mut exps = vec![0u32; nvars];
    let mut factors = 0;
    loop {
        match cur.peek() {
            Some(b'*') if factors > 0 => {
                cur.pos += 1;
                if !matches!(cur.peek(), Some(b'z' | b'0'..=b'9')) {
                    return Err(cur.error("expected a factor after `*`"));
                }
            }
            Some(b'z') => {
                cur.pos += 1;
                let idx: usize = cur
                    .digits()
                    .ok_or_else(|| cur.error("expected variable index"))?
                    .parse()
                    .map_err(|_| cur.error("variable index too large"))?;
                if idx == 0 || idx > nvars {
                    return Err(cur.error(format!("variable z{idx} outside z1..z{nvars}")));
                }
                let mut e = 1u32;
                if cur.peek() == Some(b'^') {
                    cur.pos += 1;
                    e = cur
                        .digits()
                        .ok_or_else(|| cur.error("expected exponent"))?
                        .parse()
                        .map_err(|_| cur.error("exponent too large"))?;
                }
                exps[idx - 1] = exps[idx - 1]
                    .checked_add(e)
                    .ok_or_else(|| cur.error("exponent overflow"))?;
                factors += 1;
            }
            Some(b'0'..=b'9') => {
                let num = cur.digits().expect("peeked a digit");
                let mut lit = num.to_string();
                if cur.peek() == Some(b'/') {
                    cur.pos += 1;
                    let den = cur
                        .digits()
                        .ok_or_else(|| cur.error("expected denominator"))?;
                    lit = format!("{num}/{den}");
                }
                let v: Rational = lit.parse().map_err(|_| cur.error("invalid coefficient"))?;
                coeff = &coeff * &v;
                factors += 1;
            }
            _ if factors == 0 => return Err(cur.error("expected a coefficient or variable")),
            _ => break,
        }
    }
    Ok((coeff, Monomial::from_exponents(&exps)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::MonomialOrder;
    use proptest::prelude::*;

    #[test]
    fn accepts_grammar_variants() {
        let a = Polynomial::parse("z1^3 - z1", 1).unwrap();
        let b = Polynomial::parse("  -z1 +z1 ^ 3 ", 1).unwrap();
        assert_eq!(a, b);
        let c = Polynomial::parse("2 z1 z2 - 1/2*z2^2 + 3", 2).unwrap();
        assert_eq!(c.to_string(), "2*z1*z2 - 1/2*z2^2 + 3");
        assert_eq!(
            Polynomial::parse("z1 - z1", 1).unwrap(),
            Polynomial::zero(1)
        );
        assert_eq!(Polynomial::parse("0", 3).unwrap(), Polynomial::zero(3));
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "z0", "z3", "z1 +", "z1 z", "1/0", "z1 ** z2", "z1 3 )"] {
            assert!(Polynomial::parse(bad, 2).is_err(), "{bad:?} should fail");
        }
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (proptest::collection::vec(0u32..4, 3), -9i64..10, 1i64..5)
            .prop_map(|(e, n, d)| (Monomial::from_exponents(&e), Rational::new(n, d)));
        proptest::collection::vec(term, 0..6).prop_map(|t| Polynomial::from_terms(3, t))
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(p in arb_poly()) {
            for ord in MonomialOrder::ALL {
                let text = p.display(ord).to_string();
                prop_assert_eq!(Polynomial::parse(&text, 3).unwrap(), p.clone());
            }
        }
    }
}
