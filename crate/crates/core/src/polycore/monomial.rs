use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub(crate) type Exponents = SmallVec<[u32; 12]>;

/// A power product `z1^e1 * ... * zn^en`. The all-zero vector is the monomial 1.
///
/// The derived order on `Monomial` itself is plain lexicographic on exponents
/// and only used for canonical storage; term orders live in
/// [`MonomialOrder`](super::MonomialOrder).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    /// The variable `z_{index+1}`.
    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(
            index < nvars,
            "variable index {index} out of range for {nvars} variables"
        );
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflow");
        Self {
            exps: SmallVec::from_slice(exps),
            degree,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self
                .degree
                .checked_add(other.degree)
                .expect("monomial degree overflow"),
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, when the division is exact.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - divisor.degree,
        })
    }

    /// Componentwise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// No variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Same exponents placed at `offset` inside a space of `nvars` variables.
    pub fn embed(&self, nvars: usize, offset: usize) -> Monomial {
        assert!(offset + self.nvars() <= nvars, "embedding out of range");
        let mut exps: Exponents = SmallVec::from_elem(0, nvars);
        exps[offset..offset + self.nvars()].copy_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z{}", i + 1)?;
            } else {
                write!(f, "z{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
