//! Term vectors kept sorted under one term order, and the division loop.
//!
//! The public [`Polynomial`] keeps a canonical lex layout; the hot paths
//! (division, S-polynomials, Buchberger) convert once to this form and work on
//! ordered term vectors so that leading terms are O(1) and multiplication by a
//! monomial preserves order.

use std::cmp::Ordering;

use super::{Monomial, MonomialOrder, Polynomial};
use crate::exactmath::Rational;

pub(crate) type Term = (Monomial, Rational);

/// A polynomial whose terms are sorted descending under `ord`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OrderedPoly {
    pub nvars: usize,
    pub terms: Vec<Term>,
}

impl OrderedPoly {
    pub fn from_poly(p: &Polynomial, ord: MonomialOrder) -> Self {
        Self {
            nvars: p.nvars(),
            terms: p.sorted_terms(ord),
        }
    }

    pub fn to_poly(&self) -> Polynomial {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial::from_sorted_terms(self.nvars, t)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().recip();
        for t in &mut self.terms {
            t.1 = &t.1 * &inv;
        }
    }
}

/// `ca*ma*a + cb*mb*b` for descending term slices.
pub(crate) fn combine(
    a: &[Term],
    ca: &Rational,
    ma: &Monomial,
    b: &[Term],
    cb: &Rational,
    mb: &Monomial,
    ord: MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.iter().map(|(m, c)| (m.mul(ma), c * ca)).peekable();
    let mut ib = b.iter().map(|(m, c)| (m.mul(mb), c * cb)).peekable();
    loop {
        let step = match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
        };
        match step {
            Ordering::Greater => out.push(ia.next().unwrap()),
            Ordering::Less => out.push(ib.next().unwrap()),
            Ordering::Equal => {
                let (m, c1) = ia.next().unwrap();
                let (_, c2) = ib.next().unwrap();
                let c = &c1 + &c2;
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

/// S-polynomial of two nonzero ordered polynomials.
pub(crate) fn spoly(p: &OrderedPoly, q: &OrderedPoly, ord: MonomialOrder) -> OrderedPoly {
    let lcm = p.lm().lcm(q.lm());
    let mp = lcm.div(p.lm()).expect("lcm is a multiple");
    let mq = lcm.div(q.lm()).expect("lcm is a multiple");
    let cp = p.lc().recip();
    let cq = -q.lc().recip();
    OrderedPoly {
        nvars: p.nvars,
        terms: combine(&p.terms[1..], &cp, &mp, &q.terms[1..], &cq, &mq, ord),
    }
}

/// Multivariate division of `f` by `divisors` (all nonzero).
///
/// At each step the lowest-index divisor whose leading monomial divides the
/// current leading monomial is used. When `quotients` is given it receives one
/// term vector per divisor, sorted descending.
pub(crate) fn divide(
    f: &OrderedPoly,
    divisors: &[&OrderedPoly],
    ord: MonomialOrder,
    mut quotients: Option<&mut Vec<Vec<Term>>>,
) -> OrderedPoly {
    if let Some(q) = quotients.as_deref_mut() {
        q.clear();
        q.resize(divisors.len(), Vec::new());
    }
    // Ascending order so the leading term is at the end.
    let mut g: Vec<Term> = f.terms.iter().rev().cloned().collect();
    let mut scratch: Vec<Term> = Vec::new();
    let mut rem: Vec<Term> = Vec::new();
    while let Some((lm, lc)) = g.pop() {
        let Some(i) = divisors.iter().position(|d| d.lm().divides(&lm)) else {
            rem.push((lm, lc));
            continue;
        };
        let d = divisors[i];
        let qm = lm.div(d.lm()).expect("checked divisibility");
        let qc = &lc / d.lc();
        let neg = -&qc;
        scratch.clear();
        {
            let mut ia = g.drain(..).peekable();
            let mut ib = d.terms[1..]
                .iter()
                .rev()
                .map(|(m, c)| (m.mul(&qm), c * &neg))
                .peekable();
            loop {
                let step = match (ia.peek(), ib.peek()) {
                    (None, None) => break,
                    (Some(_), None) => Ordering::Less,
                    (None, Some(_)) => Ordering::Greater,
                    (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
                };
                match step {
                    Ordering::Less => scratch.push(ia.next().unwrap()),
                    Ordering::Greater => scratch.push(ib.next().unwrap()),
                    Ordering::Equal => {
                        let (m, c1) = ia.next().unwrap();
                        let (_, c2) = ib.next().unwrap();
                        let c = &c1 + &c2;
                        if !c.is_zero() {
                            scratch.push((m, c));
                        }
                    }
                }
            }
        }
        std::mem::swap(&mut g, &mut scratch);
        if let Some(q) = quotients.as_deref_mut() {
            q[i].push((qm, qc));
        }
    }
    OrderedPoly {
        nvars: f.nvars,
        terms: rem,
    }
}
