//! Multivariate polynomials over the rationals: monomials, term orders,
//! leading terms, multivariate division and S-polynomials.
//!
//! Variables are indexed from 0 internally and printed as `z1..zn`.

mod monomial;
pub(crate) mod ordered;
mod ordering;
mod parse;
mod polynomial;

use std::cmp::Ordering;

pub use monomial::Monomial;
pub use ordering::MonomialOrder;
pub use polynomial::{LeadingTerm, PolyDisplay, Polynomial};

use ordered::OrderedPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable spaces differ ({left} vs {right} variables)")]
    VariableMismatch { left: usize, right: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("divisor {0} is the zero polynomial")]
    ZeroDivisor(usize),
    #[error("cannot parse `{input}` at byte {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
}

/// Quotients and remainder of a multivariate division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

pub fn compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering, PolyError> {
    ord.compare(a, b)
}

pub fn lcm_monomial(a: &Monomial, b: &Monomial) -> Result<Monomial, PolyError> {
    if a.nvars() != b.nvars() {
        return Err(PolyError::VariableMismatch {
            left: a.nvars(),
            right: b.nvars(),
        });
    }
    Ok(a.lcm(b))
}

fn check_spaces<'a>(
    nvars: usize,
    polys: impl IntoIterator<Item = &'a Polynomial>,
) -> Result<(), PolyError> {
    for p in polys {
        if p.nvars() != nvars {
            return Err(PolyError::VariableMismatch {
                left: nvars,
                right: p.nvars(),
            });
        }
    }
    Ok(())
}

/// Divides `f` by the ordered list `divisors`: `f = sum q_i * p_i + r` with no
/// monomial of `r` divisible by any `LM(p_i)`. Ties go to the lowest index.
pub fn reduce(
    f: &Polynomial,
    divisors: &[Polynomial],
    ord: MonomialOrder,
) -> Result<Division, PolyError> {
    check_spaces(f.nvars(), divisors)?;
    if let Some(i) = divisors.iter().position(Polynomial::is_zero) {
        return Err(PolyError::ZeroDivisor(i));
    }
    let ods: Vec<OrderedPoly> = divisors
        .iter()
        .map(|p| OrderedPoly::from_poly(p, ord))
        .collect();
    let refs: Vec<&OrderedPoly> = ods.iter().collect();
    let mut qs = Vec::new();
    let r = ordered::divide(&OrderedPoly::from_poly(f, ord), &refs, ord, Some(&mut qs));
    let quotients = qs
        .into_iter()
        .map(|terms| {
            OrderedPoly {
                nvars: f.nvars(),
                terms,
            }
            .to_poly()
        })
        .collect();
    Ok(Division {
        quotients,
        remainder: r.to_poly(),
    })
}

/// `(z^c / LT(p)) p - (z^c / LT(q)) q` with `z^c = lcm(LM(p), LM(q))`.
pub fn s_polynomial(
    p: &Polynomial,
    q: &Polynomial,
    ord: MonomialOrder,
) -> Result<Polynomial, PolyError> {
    check_spaces(p.nvars(), [q])?;
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let s = ordered::spoly(
        &OrderedPoly::from_poly(p, ord),
        &OrderedPoly::from_poly(q, ord),
        ord,
    );
    Ok(s.to_poly())
}

/// The pair of cofactors `(z^c / LT(p), z^c / LT(q))` used by [`s_polynomial`].
pub fn s_cofactors(
    p: &Polynomial,
    q: &Polynomial,
    ord: MonomialOrder,
) -> Result<(Polynomial, Polynomial), PolyError> {
    let (lp, lq) = (p.leading(ord)?, q.leading(ord)?);
    let c = lcm_monomial(&lp.monomial, &lq.monomial)?;
    let fp = Polynomial::term(
        lp.coeff.recip(),
        c.div(&lp.monomial).expect("lcm is a multiple"),
    );
    let fq = Polynomial::term(
        lq.coeff.recip(),
        c.div(&lq.monomial).expect("lcm is a multiple"),
    );
    Ok((fp, fq))
}
