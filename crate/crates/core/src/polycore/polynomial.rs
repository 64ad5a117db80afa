use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, MonomialOrder, PolyError};
use crate::exactmath::Rational;

/// Leading monomial, coefficient and term of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub monomial: Monomial,
    pub coeff: Rational,
}

impl LeadingTerm {
    /// The leading term as a one-term polynomial.
    pub fn term(&self) -> Polynomial {
        Polynomial::term(self.coeff.clone(), self.monomial.clone())
    }
}

/// A multivariate polynomial over the rationals.
///
/// Terms are stored with nonzero coefficients only, in descending plain-lex
/// order of their exponent vectors. Term orders are passed to the operations
/// that need one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::ONE, nvars)
    }

    /// The variable `z_{index+1}`.
    pub fn var(index: usize, nvars: usize) -> Self {
        Self::term(Rational::ONE, Monomial::var(index, nvars))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Self {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Sums arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial outside the variable space");
            let e = acc.entry(m).or_insert(Rational::ZERO);
            *e += &c;
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { nvars, terms }
    }

    /// Linear form `sum coeffs[j] * z_{j+1}`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (Monomial::var(j, n), c.clone())),
        )
    }

    /// Trusted constructor for terms already sorted and nonzero.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Self { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms[0].1.is_one()
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::ZERO,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    /// Terms in canonical (plain lex, descending) order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or(Rational::ZERO)
    }

    /// Terms sorted descending under `ord`, leading term first.
    pub fn sorted_terms(&self, ord: MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut t = self.terms.clone();
        if ord != MonomialOrder::Lex {
            t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        t
    }

    pub fn leading(&self, ord: MonomialOrder) -> Result<LeadingTerm, PolyError> {
        let (m, c) = match ord {
            MonomialOrder::Lex => self.terms.first(),
            _ => self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0)),
        }
        .ok_or(PolyError::ZeroPolynomial)?;
        Ok(LeadingTerm {
            monomial: m.clone(),
            coeff: c.clone(),
        })
    }

    fn check_space(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a.1 + &b.1;
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial::from_sorted_terms(self.nvars, out))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(other)?;
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(Rational::ZERO);
                *e += &(ca * cb);
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(Polynomial::from_sorted_terms(self.nvars, terms))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial::from_sorted_terms(self.nvars, terms)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars, "monomial outside the variable space");
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        // Multiplying by a monomial preserves lex order.
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Polynomial::from_sorted_terms(self.nvars, terms)
    }

    fn neg_ref(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_sorted_terms(self.nvars, terms)
    }

    /// Divides by the leading coefficient under `ord`. Zero stays zero.
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.leading(ord) {
            Ok(lt) if !lt.coeff.is_one() => self.scale(&lt.coeff.recip()),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut acc = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            acc += &v;
        }
        acc
    }

    /// Integer evaluation; `None` when the value is not an integer fitting `i64`.
    pub fn eval_int(&self, point: &[i64]) -> Option<i64> {
        let p: Vec<Rational> = point.iter().map(|&v| Rational::from_int(v)).collect();
        self.eval(&p).to_i64()
    }

    /// Renames `z_j` to `z_{j+offset}` inside a space of `nvars` variables.
    pub fn embed(&self, nvars: usize, offset: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.embed(nvars, offset), c.clone()))
            .collect();
        // Shifting into a larger space keeps relative lex order.
        Polynomial::from_sorted_terms(nvars, terms)
    }

    /// Formats terms descending under `ord`, e.g. `z1^3 - z1`.
    pub fn display(&self, ord: MonomialOrder) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, ord }
    }

    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial, PolyError> {
        super::parse::parse_polynomial(s, nvars)
    }
}

/// Display adapter returned by [`Polynomial::display`].
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    ord: MonomialOrder,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.sorted_terms(self.ord).iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(MonomialOrder::Lex).fmt(f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on a variable-space mismatch; see [`Polynomial::checked_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("z1 + z2", 2) + &p("-z2", 2), p("z1", 2));
        assert_eq!(&p("z1 - 1", 1) * &p("z1 + 1", 1), p("z1^2 - 1", 1));
        let cubic = &(&p("z1", 1) * &p("z1 - 1", 1)) * &p("z1 + 1", 1);
        assert_eq!(cubic, p("z1^3 - z1", 1));
        assert_eq!(
            p("z1", 1).checked_add(&p("z1", 2)),
            Err(PolyError::VariableMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn leading_terms() {
        let lt = p("z1^3 - z1", 1).leading(MonomialOrder::Lex).unwrap();
        assert_eq!(lt.monomial, Monomial::from_exponents(&[3]));
        assert!(lt.coeff.is_one());

        let lt = p("5", 2).leading(MonomialOrder::GrevLex).unwrap();
        assert!(lt.monomial.is_one());
        assert_eq!(lt.coeff, Rational::from_int(5));

        let sum = p("z1 + z2 + z3 + z4", 4);
        assert_eq!(
            sum.leading(MonomialOrder::Lex).unwrap().monomial,
            Monomial::var(0, 4)
        );
        assert_eq!(
            Polynomial::zero(2).leading(MonomialOrder::Lex),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn display_follows_ordering() {
        let q = p("z1 + z2^2", 2);
        assert_eq!(q.display(MonomialOrder::Lex).to_string(), "z1 + z2^2");
        assert_eq!(q.display(MonomialOrder::GrevLex).to_string(), "z2^2 + z1");
        assert_eq!(p("-1/2*z1*z2 + 3", 2).to_string(), "-1/2*z1*z2 + 3");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
    }

    #[test]
    fn eval_and_embed() {
        let q = p("z1^2*z2 - 2*z2 + 1", 2);
        assert_eq!(q.eval_int(&[3, -1]), Some(-6));
        let e = q.embed(5, 3);
        assert_eq!(e.to_string(), "z4^2*z5 - 2*z5 + 1");
        assert_eq!(q.constant_term(), Rational::ONE);
    }
}
