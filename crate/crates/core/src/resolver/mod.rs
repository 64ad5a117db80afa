//! Resolvability as a polynomial system.
//!
//! A set `R` fails to resolve `H(k, a)` exactly when some nonzero admissible
//! vector `z` satisfies `A z = 0`, where the rows of `A` are the vectorized
//! one-hot encodings of `R`. Admissibility is the zero set of the system `P`
//! built here; the shifted sums of squares `f_i` split the nonzero solutions by
//! support size so that each case can be settled by a Nullstellensatz test.

mod algebraic;
mod enumerate;

use std::fmt::Write as _;

use crate::exactmath::{Rational, RationalMatrix};
use crate::groebner::GroebnerError;
use crate::hamgraph::{format_vertex, one_hot, GraphError, HammingGraph, Vertex};
use crate::polycore::{MonomialOrder, Polynomial};

pub use algebraic::{
    block_basis, check_resolving_groebner, structured_basis, GroebnerChecker, Strategy,
};
pub use enumerate::{
    check_resolving_enumeration, check_resolving_hypercube, find_kernel_vector, hypercube_matrix,
    DEFAULT_ENUM_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolverError {
    #[error("candidate set is empty")]
    EmptySet,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("enumeration needs {needed} vectors, budget is {budget}")]
    EnumerationBudget { needed: u128, budget: u128 },
    #[error("the closed-form basis is only available for lex, got {0}")]
    UnsupportedOrdering(MonomialOrder),
    #[error("the hypercube path needs a = 2, got a = {0}")]
    NotHypercube(usize),
    #[error("input set does not resolve the graph")]
    NotResolving,
}

impl ResolverError {
    /// True when the check ran out of budget rather than failing on bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            ResolverError::EnumerationBudget { .. }
                | ResolverError::Groebner(GroebnerError::BudgetExhausted { .. })
        )
    }
}

/// The linear system of a candidate set. The constraint polynomials of the
/// graph are built on request.
#[derive(Clone, Debug)]
pub struct ResolvabilitySystem {
    graph: HammingGraph,
    candidate: Vec<Vertex>,
    matrix: RationalMatrix,
}

/// Index of the variable for `symbol` in block `block`.
pub fn variable(g: &HammingGraph, block: usize, symbol: usize) -> usize {
    block * g.a() + symbol
}

/// Vectorized one-hot row of `v` as rationals.
pub fn one_hot_row(g: &HammingGraph, v: &Vertex) -> Result<Vec<Rational>, GraphError> {
    Ok(one_hot(g, v)?
        .vectorized()
        .iter()
        .map(|&x| Rational::from_int(i64::from(x)))
        .collect())
}

/// The constraints of block `block`: one cubic per variable, the block sum and
/// the quartic `s(2 - s)` with `s` the block's sum of squares.
pub fn block_polynomials(g: &HammingGraph, block: usize) -> Vec<Polynomial> {
    let n = g.dim();
    let vars: Vec<Polynomial> = (0..g.a())
        .map(|j| Polynomial::var(variable(g, block, j), n))
        .collect();
    let mut out: Vec<Polynomial> = vars.iter().map(|z| &(&(z * z) * z) - z).collect();
    let mut sum = Polynomial::zero(n);
    let mut squares = Polynomial::zero(n);
    for z in &vars {
        sum = &sum + z;
        squares = &squares + &(z * z);
    }
    out.push(sum);
    let two = Polynomial::constant(Rational::from_int(2), n);
    out.push(&squares * &(&two - &squares));
    out
}

/// `sum z_j^2` over every variable of the graph.
pub fn sum_of_squares(g: &HammingGraph) -> Polynomial {
    let n = g.dim();
    let mut s = Polynomial::zero(n);
    for i in 0..n {
        let z = Polynomial::var(i, n);
        s = &s + &(&z * &z);
    }
    s
}

/// `sum z_j^2 - 2i` for `i = 1..=k`.
pub fn shifted_polynomials(g: &HammingGraph) -> Vec<Polynomial> {
    let s = sum_of_squares(g);
    (1..=g.k())
        .map(|i| &s - &Polynomial::constant(Rational::from_int(2 * i as i64), g.dim()))
        .collect()
}

/// The linear polynomials of the nonzero rows of `rref(m)`.
pub fn linear_equations(m: &RationalMatrix) -> Vec<Polynomial> {
    let (r, pivots) = m.rref();
    (0..pivots.len())
        .map(|i| Polynomial::linear(r.row(i)))
        .collect()
}

/// Largest possible rank of a one-hot matrix of `g`. Every row has block sums
/// equal to one, so the rows span at most `k(a-1)+1` dimensions.
pub fn max_rank(g: &HammingGraph) -> usize {
    g.k() * (g.a() - 1) + 1
}

/// Builds the system for `r`. Repeated vertices are dropped with a warning;
/// row order follows the first occurrence of each vertex.
pub fn build_system(g: &HammingGraph, r: &[Vertex]) -> Result<ResolvabilitySystem, ResolverError> {
    if r.is_empty() {
        return Err(ResolverError::EmptySet);
    }
    let mut candidate: Vec<Vertex> = Vec::with_capacity(r.len());
    for v in r {
        g.check(v)?;
        if candidate.contains(v) {
            log::warn!("dropping repeated vertex {}", format_vertex(g, v));
        } else {
            candidate.push(v.clone());
        }
    }
    let rows = candidate
        .iter()
        .map(|v| one_hot_row(g, v))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ResolvabilitySystem {
        graph: *g,
        matrix: RationalMatrix::from_rows(g.dim(), rows),
        candidate,
    })
}

impl ResolvabilitySystem {
    pub fn graph(&self) -> &HammingGraph {
        &self.graph
    }

    pub fn candidate(&self) -> &[Vertex] {
        &self.candidate
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn p_blocks(&self) -> Vec<Vec<Polynomial>> {
        (0..self.graph.k())
            .map(|b| block_polynomials(&self.graph, b))
            .collect()
    }

    /// All of `P`, block by block.
    pub fn p(&self) -> Vec<Polynomial> {
        self.p_blocks().into_iter().flatten().collect()
    }

    pub fn f_polys(&self) -> Vec<Polynomial> {
        shifted_polynomials(&self.graph)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn linear_equations(&self) -> Vec<Polynomial> {
        linear_equations(&self.matrix)
    }

    /// `A`, `rref(A)`, `P` and the `f_i` as text.
    pub fn dump(&self, ord: MonomialOrder) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# H({},{}) candidate set",
            self.graph.k(),
            self.graph.a()
        );
        for v in &self.candidate {
            let _ = writeln!(out, "{}", format_vertex(&self.graph, v));
        }
        let _ = writeln!(out, "# A");
        let _ = write!(out, "{}", self.matrix);
        let _ = writeln!(out, "# rref(A)");
        let _ = write!(out, "{}", self.matrix.rref().0);
        let _ = writeln!(out, "# P");
        for p in self.p() {
            let _ = writeln!(out, "{}", p.display(ord));
        }
        let _ = writeln!(out, "# f");
        for f in self.f_polys() {
            let _ = writeln!(out, "{}", f.display(ord));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamgraph::parse_vertex_list;

    fn h(k: usize, a: usize) -> HammingGraph {
        HammingGraph::new(k, a).unwrap()
    }

    #[test]
    fn worked_example_matrix() {
        let g = h(3, 2);
        let r = parse_vertex_list(&g, "100,101,001").unwrap();
        let sys = build_system(&g, &r).unwrap();
        let expected = RationalMatrix::from_int_rows(&[
            [0, 1, 1, 0, 1, 0],
            [0, 1, 1, 0, 0, 1],
            [1, 0, 1, 0, 0, 1],
        ]);
        assert_eq!(sys.matrix(), &expected);
        assert_eq!(sys.rank(), 3);
    }

    #[test]
    fn p_has_cubics_sums_and_quartics() {
        let g = h(3, 2);
        let sys = build_system(&g, &parse_vertex_list(&g, "000").unwrap()).unwrap();
        let p = sys.p();
        assert_eq!(p.len(), 12);
        assert_eq!(p.iter().filter(|q| q.total_degree() == 3).count(), 6);
        assert_eq!(p.iter().filter(|q| q.total_degree() == 1).count(), 3);
        assert_eq!(p.iter().filter(|q| q.total_degree() == 4).count(), 3);
        assert!(p.contains(&Polynomial::parse("z3 + z4", 6).unwrap()));
        assert!(p.contains(&Polynomial::parse("z6^3 - z6", 6).unwrap()));
        let s = Polynomial::parse("z5^2 + z6^2", 6).unwrap();
        let quartic = &s * &(&Polynomial::constant(Rational::from_int(2), 6) - &s);
        assert!(p.contains(&quartic));
        let f1 = Polynomial::parse("z1^2+z2^2+z3^2+z4^2+z5^2+z6^2-2", 6).unwrap();
        assert_eq!(sys.f_polys()[0], f1);
        assert_eq!(sys.f_polys()[2].constant_term(), Rational::from_int(-6));
    }

    #[test]
    fn build_rejects_bad_input() {
        let g = h(3, 2);
        assert_eq!(build_system(&g, &[]).unwrap_err(), ResolverError::EmptySet);
        let bad = Vertex::new(vec![0, 2, 0]);
        assert!(matches!(
            build_system(&g, &[bad]),
            Err(ResolverError::Graph(_))
        ));
        let dup = parse_vertex_list(&g, "100,101,100").unwrap();
        assert_eq!(build_system(&g, &dup).unwrap().candidate().len(), 2);
    }

    #[test]
    fn linear_rows_come_from_rref() {
        let g = h(3, 2);
        let sys = build_system(&g, &parse_vertex_list(&g, "100,101,001,000").unwrap()).unwrap();
        let l = sys.linear_equations();
        // 000 = 100 - 101 + 001
        assert_eq!(l.len(), 3);
        assert_eq!(sys.rank(), 3);
        assert!(sys.dump(MonomialOrder::Lex).contains("# rref(A)"));
    }

    #[test]
    fn max_rank_is_reached_by_all_vertices() {
        for (k, a) in [(2, 2), (3, 2), (2, 3), (2, 4)] {
            let g = h(k, a);
            let all: Vec<Vertex> = g.vertices().unwrap().collect();
            assert_eq!(build_system(&g, &all).unwrap().rank(), max_rank(&g));
        }
    }
}
