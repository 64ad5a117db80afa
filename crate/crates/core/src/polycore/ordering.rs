use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{Monomial, PolyError};

/// Monomial term order. In every order `z1 > z2 > ... > zn`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GrevLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [
        MonomialOrder::Lex,
        MonomialOrder::GrLex,
        MonomialOrder::GrevLex,
    ];

    /// Compares two monomials of the same variable space.
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| ea.cmp(eb)),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // The smaller exponent in the last differing variable wins.
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// [`cmp`](Self::cmp) with a variable-space check.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.nvars() != b.nvars() {
            return Err(PolyError::VariableMismatch {
                left: a.nvars(),
                right: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GrevLex => "grevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::GrLex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(format!(
                "unknown ordering `{other}` (expected lex, grlex or grevlex)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn hand_examples() {
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 2])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::GrLex.cmp(&m(&[1, 1]), &m(&[2, 0])),
            Ordering::Less
        );
        // grevlex vs grlex differ on x^2z vs xy^2 (degree 3, three variables)
        let (a, b) = (m(&[2, 0, 1]), m(&[1, 2, 0]));
        assert_eq!(MonomialOrder::GrLex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&a, &b), Ordering::Less);
        for ord in MonomialOrder::ALL {
            assert_eq!(ord.cmp(&a, &a), Ordering::Equal);
        }
        assert!(MonomialOrder::Lex.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 3).prop_map(|e| Monomial::from_exponents(&e))
    }

    proptest! {
        #[test]
        fn order_axioms(a in mono3(), b in mono3(), c in mono3()) {
            for ord in MonomialOrder::ALL {
                let ab = ord.cmp(&a, &b);
                prop_assert_eq!(ab, ord.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
                if !a.is_one() {
                    prop_assert_eq!(ord.cmp(&a, &Monomial::one(3)), Ordering::Greater);
                }
                if ab == Ordering::Greater && ord.cmp(&b, &c) == Ordering::Greater {
                    prop_assert_eq!(ord.cmp(&a, &c), Ordering::Greater);
                }
            }
        }
    }
}
