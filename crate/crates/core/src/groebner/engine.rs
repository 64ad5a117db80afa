//! Buchberger completion over [`OrderedPoly`] values.
//!
//! Pairs are processed by normal selection: smallest lcm under the term order
//! first, which for the graded orders means smallest total degree first. Pair
//! bookkeeping follows the Gebauer–Möller update, which contains Buchberger's
//! coprime-leading-monomial criterion.

use crate::polycore::ordered::{divide, spoly, OrderedPoly};
use crate::polycore::{Monomial, MonomialOrder};

use super::GroebnerError;

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Outcome of a completion run.
pub(crate) enum Completion {
    /// The ideal contains a nonzero constant.
    Unit,
    /// A Gröbner basis (not yet reduced), in insertion order.
    Basis(Vec<OrderedPoly>),
}

pub(crate) struct Completer {
    ord: MonomialOrder,
    polys: Vec<OrderedPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    reductions: u64,
    budget: u64,
}

impl Completer {
    pub fn new(ord: MonomialOrder, budget: u64) -> Self {
        Self {
            ord,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            reductions: 0,
            budget,
        }
    }

    /// Seeds with the members of an existing Gröbner basis: no pairs among them.
    pub fn seed_basis(&mut self, basis: Vec<OrderedPoly>) {
        for p in basis {
            self.polys.push(p);
            self.active.push(true);
        }
    }

    /// Active polynomials, smallest leading monomial first: preferring the
    /// smallest reducer keeps intermediate expressions small.
    fn divisors(&self) -> Vec<&OrderedPoly> {
        let mut d: Vec<&OrderedPoly> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter_map(|(p, &a)| a.then_some(p))
            .collect();
        d.sort_by(|a, b| self.ord.cmp(a.lm(), b.lm()));
        d
    }

    fn normal_form(&self, f: &OrderedPoly) -> OrderedPoly {
        divide(f, &self.divisors(), self.ord, None)
    }

    /// Adds an input that is already reduced by the smaller inputs.
    pub fn add_input(&mut self, f: OrderedPoly) {
        self.add_reduced(f);
    }

    /// Reduces `f` by the current basis and, if something is left, adds it.
    /// Returns `true` when the ideal became the unit ideal.
    pub fn insert(&mut self, f: &OrderedPoly) -> bool {
        let mut r = self.normal_form(f);
        if r.is_zero() {
            return false;
        }
        if r.is_constant() {
            return true;
        }
        r.make_monic();
        self.add_reduced(r);
        false
    }

    fn add_reduced(&mut self, h: OrderedPoly) {
        let hidx = self.polys.len();
        let hm = h.lm().clone();

        // New pairs (h, g), thinned by the lcm-divisibility and coprime criteria.
        let cands: Vec<(usize, Monomial, bool)> = (0..hidx)
            .filter(|&g| self.active[g])
            .map(|g| {
                let gm = self.polys[g].lm();
                (g, hm.lcm(gm), hm.is_coprime(gm))
            })
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for (c, (_, lcm, coprime)) in cands.iter().enumerate() {
            let dominated = || {
                cands[c + 1..].iter().any(|(_, l2, _)| l2.divides(lcm))
                    || kept.iter().any(|&k| cands[k].1.divides(lcm))
            };
            if *coprime || !dominated() {
                kept.push(c);
            }
        }

        // Old pairs made redundant by h.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !hm.divides(&p.lcm) {
                return true;
            }
            let l1 = hm.lcm(polys[p.i].lm());
            let l2 = hm.lcm(polys[p.j].lm());
            l1 == p.lcm || l2 == p.lcm
        });

        for c in kept {
            let (g, lcm, coprime) = &cands[c];
            if !coprime {
                self.pairs.push(Pair {
                    i: *g,
                    j: hidx,
                    lcm: lcm.clone(),
                });
            }
        }

        for g in 0..hidx {
            if self.active[g] && hm.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
        self.reduce_tails(hidx);
    }

    /// Reduces the tails of the other active elements now that `self.polys[h]`
    /// is available. Leading monomials do not change, so queued pairs and
    /// the criteria stay valid, and coefficients stay near those of the
    /// reduced basis.
    fn reduce_tails(&mut self, h: usize) {
        let hm = self.polys[h].lm().clone();
        let stale: Vec<usize> = (0..h)
            .filter(|&g| {
                self.active[g] && self.polys[g].terms[1..].iter().any(|(m, _)| hm.divides(m))
            })
            .collect();
        for g in stale {
            let tail = OrderedPoly {
                nvars: self.polys[g].nvars,
                terms: self.polys[g].terms[1..].to_vec(),
            };
            let divisors: Vec<&OrderedPoly> = self
                .divisors()
                .into_iter()
                .filter(|d| d.lm() != self.polys[g].lm())
                .collect();
            let mut r = divide(&tail, &divisors, self.ord, None);
            r.terms.insert(0, self.polys[g].terms[0].clone());
            self.polys[g] = r;
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                ord.cmp(&a.lcm, &b.lcm)
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    /// Runs the pair queue to exhaustion.
    pub fn complete(mut self) -> Result<Completion, GroebnerError> {
        while let Some(pair) = self.pop_pair() {
            self.reductions += 1;
            if self.reductions > self.budget {
                return Err(GroebnerError::BudgetExhausted { limit: self.budget });
            }
            let s = spoly(&self.polys[pair.i], &self.polys[pair.j], self.ord);
            if self.insert(&s) {
                return Ok(Completion::Unit);
            }
        }
        let basis = self
            .polys
            .into_iter()
            .zip(self.active)
            .filter_map(|(p, a)| a.then_some(p))
            .collect();
        Ok(Completion::Basis(basis))
    }
}

/// Reduces each polynomial by the ones before it, repeating until nothing
/// changes. Returns `None` if a nonzero constant appears.
pub(crate) fn prefix_interreduce(
    mut set: Vec<OrderedPoly>,
    ord: MonomialOrder,
) -> Option<Vec<OrderedPoly>> {
    loop {
        let mut next: Vec<OrderedPoly> = Vec::with_capacity(set.len());
        for (i, p) in set.iter().enumerate() {
            let prev: Vec<&OrderedPoly> = set[..i].iter().collect();
            let mut r = divide(p, &prev, ord, None);
            if r.is_zero() {
                continue;
            }
            if r.is_constant() {
                return None;
            }
            r.make_monic();
            next.push(r);
        }
        if next == set {
            return Some(set);
        }
        set = next;
    }
}

/// Minimalizes and tail-reduces a Gröbner basis, then sorts it by leading
/// monomial, largest first.
pub(crate) fn reduce_ordered(basis: Vec<OrderedPoly>, ord: MonomialOrder) -> Vec<OrderedPoly> {
    let mut basis: Vec<OrderedPoly> = basis.into_iter().filter(|p| !p.is_zero()).collect();
    if basis.iter().any(OrderedPoly::is_constant) {
        let nvars = basis[0].nvars;
        return vec![OrderedPoly {
            nvars,
            terms: vec![(Monomial::one(nvars), crate::exactmath::Rational::ONE)],
        }];
    }
    for p in &mut basis {
        p.make_monic();
    }
    // Keep one element per minimal leading monomial.
    basis.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<OrderedPoly> = Vec::new();
    for p in basis {
        if !minimal.iter().any(|q| q.lm().divides(p.lm())) {
            minimal.push(p);
        }
    }
    let mut out = minimal.clone();
    for i in 0..minimal.len() {
        let others: Vec<&OrderedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p)
            .collect();
        let lead = &minimal[i].terms[0];
        let tail = OrderedPoly {
            nvars: minimal[i].nvars,
            terms: minimal[i].terms[1..].to_vec(),
        };
        let mut r = divide(&tail, &others, ord, None);
        r.terms.insert(0, lead.clone());
        out[i] = r;
    }
    out.sort_by(|a, b| ord.cmp(b.lm(), a.lm()));
    out
}
