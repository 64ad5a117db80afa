//! The Gröbner basis route.
//!
//! The basis of `P` is a union of per-block bases in disjoint variables, so it
//! is assembled from one block rather than computed on all `a k` variables.

use crate::exactmath::Rational;
use crate::groebner::{
    buchberger_with, extend_basis_with, is_trivial, reduce_basis, shifted_reductions,
    GroebnerBasis, GroebnerConfig,
};
use crate::hamgraph::HammingGraph;
use crate::polycore::{MonomialOrder, Polynomial};
use crate::verdict::{Method, ResolvabilityVerdict};

use super::{
    block_polynomials, linear_equations, max_rank, sum_of_squares, ResolvabilitySystem,
    ResolverError,
};

/// Closed-form reduced lex basis of one block, on variables `0..a`.
fn closed_form_block(a: usize) -> Vec<Polynomial> {
    let z = |i: usize| Polynomial::var(i, a);
    let mut out = Vec::new();
    let mut sum = Polynomial::zero(a);
    for i in 0..a {
        sum = &sum + &z(i);
    }
    out.push(sum);
    for j in 1..a {
        out.push(&(&(&z(j) * &z(j)) * &z(j)) - &z(j));
    }
    for i in 1..a {
        for j in i + 1..a {
            out.push(&(&z(i) * &z(j)) * &(&z(i) + &z(j)));
        }
    }
    for i in 1..a {
        for j in i + 1..a {
            for l in j + 1..a {
                out.push(&(&z(i) * &z(j)) * &z(l));
            }
        }
    }
    out
}

fn union_of_blocks(g: &HammingGraph, block: &[Polynomial]) -> Vec<Polynomial> {
    (0..g.k())
        .flat_map(|b| block.iter().map(move |p| p.embed(g.dim(), b * g.a())))
        .collect()
}

/// The reduced lex basis of `P`, written down block by block from the closed
/// form and checked before it is returned.
pub fn structured_basis(
    g: &HammingGraph,
    ord: MonomialOrder,
) -> Result<GroebnerBasis, ResolverError> {
    if ord != MonomialOrder::Lex {
        return Err(ResolverError::UnsupportedOrdering(ord));
    }
    let polys = union_of_blocks(g, &closed_form_block(g.a()));
    Ok(GroebnerBasis::from_reduced(&polys, ord)?)
}

/// The reduced basis of `P` under any ordering: one block is completed by
/// Buchberger's algorithm and copied onto the others.
pub fn block_basis(
    g: &HammingGraph,
    ord: MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis, ResolverError> {
    let one = HammingGraph::new(1, g.a())?;
    let block =
        reduce_basis(&buchberger_with(&block_polynomials(&one, 0), ord, config)?).polynomials();
    Ok(GroebnerBasis::from_reduced(
        &union_of_blocks(g, &block),
        ord,
    )?)
}

/// Order in which the linear equations and the shifted polynomials are added
/// to the basis of `P`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Add the linear equations once, then each `f_i` separately.
    #[default]
    LinearFirst,
    /// Precompute the bases of `P + f_i` and add the linear equations to each.
    ShiftFirst,
}

/// Reusable state for checking many sets on one graph.
#[derive(Clone, Debug)]
pub struct GroebnerChecker {
    graph: HammingGraph,
    config: GroebnerConfig,
    strategy: Strategy,
    base: GroebnerBasis,
    squares: Polynomial,
    shifted: Vec<GroebnerBasis>,
}

impl GroebnerChecker {
    /// Uses the closed-form basis for lex and block completion otherwise.
    pub fn new(
        g: &HammingGraph,
        ord: MonomialOrder,
        config: GroebnerConfig,
    ) -> Result<Self, ResolverError> {
        let base = match ord {
            MonomialOrder::Lex => structured_basis(g, ord)?,
            _ => block_basis(g, ord, &config)?,
        };
        Ok(Self {
            graph: *g,
            config,
            strategy: Strategy::LinearFirst,
            base,
            squares: sum_of_squares(g),
            shifted: Vec::new(),
        })
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Result<Self, ResolverError> {
        self.strategy = strategy;
        if strategy == Strategy::ShiftFirst && self.shifted.is_empty() {
            self.shifted = self
                .shift_polys(&self.base)?
                .into_iter()
                .map(|f| self.close(&self.base, f))
                .collect::<Result<_, _>>()?;
        }
        Ok(self)
    }

    pub fn graph(&self) -> &HammingGraph {
        &self.graph
    }

    pub fn ordering(&self) -> MonomialOrder {
        self.base.ordering()
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// Reduced basis of `P`.
    pub fn base(&self) -> &GroebnerBasis {
        &self.base
    }

    /// Reduced bases of `P + f_i`, present under [`Strategy::ShiftFirst`].
    pub fn shifted_bases(&self) -> &[GroebnerBasis] {
        &self.shifted
    }

    /// The `f_i` reduced by `g`, using one reduction of the sum of squares.
    fn shift_polys(&self, g: &GroebnerBasis) -> Result<Vec<Polynomial>, ResolverError> {
        let shifts: Vec<Rational> = (1..=self.graph.k())
            .map(|i| Rational::from_int(2 * i as i64))
            .collect();
        Ok(shifted_reductions(g, &self.squares, &shifts)?)
    }

    fn close(&self, g: &GroebnerBasis, f: Polynomial) -> Result<GroebnerBasis, ResolverError> {
        if f.is_constant() {
            return Ok(extend_basis_with(
                g,
                &[Polynomial::one(g.nvars())],
                &self.config,
            )?);
        }
        Ok(extend_basis_with(g, &[f], &self.config)?)
    }

    /// True iff `P`, the given linear equations and each `f_i` have no common
    /// zero, i.e. no nonzero admissible vector satisfies the equations.
    /// Stops at the first `i` whose basis is not {1}.
    pub fn resolves(&self, linear: &[Polynomial]) -> Result<bool, ResolverError> {
        match self.strategy {
            Strategy::LinearFirst => {
                let gl = extend_basis_with(&self.base, linear, &self.config)?;
                if gl.is_unit() {
                    return Ok(true);
                }
                for f in self.shift_polys(&gl)? {
                    if f.is_constant() {
                        continue;
                    }
                    let gi = extend_basis_with(&gl, &[f], &self.config)?;
                    if !is_trivial(&gi)?.is_trivial_ideal {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Strategy::ShiftFirst => {
                for gi in &self.shifted {
                    if gi.is_unit() {
                        continue;
                    }
                    let g = extend_basis_with(gi, linear, &self.config)?;
                    if !is_trivial(&g)?.is_trivial_ideal {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    pub fn check(&self, sys: &ResolvabilitySystem) -> Result<ResolvabilityVerdict, ResolverError> {
        if sys.graph() != &self.graph {
            return Err(crate::hamgraph::GraphError::InvalidParameters {
                k: sys.graph().k(),
                a: sys.graph().a(),
            }
            .into());
        }
        if sys.rank() == max_rank(&self.graph) || self.resolves(&linear_equations(sys.matrix()))? {
            Ok(ResolvabilityVerdict::resolving(Method::Groebner))
        } else {
            Ok(ResolvabilityVerdict::not_resolving(Method::Groebner, None))
        }
    }
}

/// One-off check; build a [`GroebnerChecker`] to check many sets.
pub fn check_resolving_groebner(
    sys: &ResolvabilitySystem,
    ord: MonomialOrder,
    config: &GroebnerConfig,
) -> Result<ResolvabilityVerdict, ResolverError> {
    GroebnerChecker::new(sys.graph(), ord, *config)?.check(sys)
}
