//! Direct search over admissible vectors, and the hypercube shortcut.

use crate::exactmath::Rational;
use crate::groebner::{
    buchberger_with, extend_basis_with, is_trivial, reduce_basis, shifted_reductions,
    GroebnerConfig,
};
use crate::hamgraph::{HammingGraph, Vertex};
use crate::polycore::{MonomialOrder, Polynomial};
use crate::verdict::{AdmissibleVector, Method, ResolvabilityVerdict, Witness};

use super::{ResolvabilitySystem, ResolverError};

/// Default cap on the number of candidate vectors a search may visit.
pub const DEFAULT_ENUM_BUDGET: u128 = 10_000_000;

fn search_size(choices: u128, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(choices))
}

enum Search {
    Found(Vec<usize>),
    Empty,
    OutOfSteps,
}

/// Depth-first search for a nonzero `z` with `sum_b contrib[b][choice] = 0`
/// in every row. `contrib[b][c]` is the per-row contribution of choice `c` at
/// block `b`; choice 0 must be the zero block. Partial sums are pruned when
/// the remaining blocks, each worth at most 1 per row, cannot cancel them.
fn search(contrib: &[Vec<Vec<i32>>], rows: usize, max_steps: Option<u64>) -> Search {
    let k = contrib.len();
    let mut picks = vec![0usize; k];
    let mut sums = vec![vec![0i32; rows]; k + 1];
    let mut depth = 0;
    let mut steps = 0u64;
    loop {
        steps += 1;
        if max_steps.is_some_and(|m| steps > m) {
            return Search::OutOfSteps;
        }
        if depth == k {
            if picks.iter().any(|&c| c != 0) && sums[k].iter().all(|&s| s == 0) {
                return Search::Found(picks);
            }
        } else {
            let remaining = (k - depth - 1) as i32;
            let c = picks[depth];
            let (head, tail) = sums.split_at_mut(depth + 1);
            let mut ok = true;
            for r in 0..rows {
                let s = head[depth][r] + contrib[depth][c][r];
                tail[0][r] = s;
                ok &= s.abs() <= remaining;
            }
            if ok {
                depth += 1;
                if depth < k {
                    picks[depth] = 0;
                }
                continue;
            }
        }
        // Advance to the next choice, backtracking as needed.
        loop {
            if depth == k {
                depth -= 1;
            }
            picks[depth] += 1;
            if picks[depth] < contrib[depth].len() {
                break;
            }
            if depth == 0 {
                return Search::Empty;
            }
            depth -= 1;
        }
    }
}

/// Checks every admissible vector against `A`. Blocks are tried zero first,
/// then each ordered pair `(+1 at p, -1 at m)` with `p` and `m` ascending.
pub fn check_resolving_enumeration(
    sys: &ResolvabilitySystem,
    budget: u128,
) -> Result<ResolvabilityVerdict, ResolverError> {
    let g = sys.graph();
    let needed = search_size(1 + (g.a() * (g.a() - 1)) as u128, g.k());
    if needed > budget {
        return Err(ResolverError::EnumerationBudget { needed, budget });
    }
    Ok(match kernel_search(sys, None) {
        Some(w) => {
            ResolvabilityVerdict::not_resolving(Method::Enumeration, Some(Witness::Kernel(w)))
        }
        None => ResolvabilityVerdict::resolving(Method::Enumeration),
    })
}

/// Looks for a nonzero admissible kernel vector for at most `max_steps`
/// search steps. `None` means none was found, which proves nothing unless
/// the search was unbounded.
pub fn find_kernel_vector(sys: &ResolvabilitySystem, max_steps: u64) -> Option<AdmissibleVector> {
    kernel_search(sys, Some(max_steps))
}

fn kernel_search(sys: &ResolvabilitySystem, max_steps: Option<u64>) -> Option<AdmissibleVector> {
    let g = sys.graph();
    let (k, a) = (g.k(), g.a());
    let pairs: Vec<(usize, usize)> = (0..a)
        .flat_map(|p| (0..a).filter(move |&m| m != p).map(move |m| (p, m)))
        .collect();
    let rows = sys.candidate();
    let contrib: Vec<Vec<Vec<i32>>> = (0..k)
        .map(|b| {
            let mut choices = vec![vec![0; rows.len()]];
            for &(p, m) in &pairs {
                choices.push(
                    rows.iter()
                        .map(|v| {
                            let s = v.symbols()[b] as usize;
                            i32::from(s == p) - i32::from(s == m)
                        })
                        .collect(),
                );
            }
            choices
        })
        .collect();
    let Search::Found(picks) = search(&contrib, rows.len(), max_steps) else {
        return None;
    };
    let mut z = vec![0i8; g.dim()];
    for (b, &c) in picks.iter().enumerate() {
        if c > 0 {
            let (p, m) = pairs[c - 1];
            z[b * a + p] = 1;
            z[b * a + m] = -1;
        }
    }
    Some(AdmissibleVector::new(a, z).expect("search only builds admissible vectors"))
}

/// Rows `v - v̄` of the hypercube system, with symbol 1 as +1 and 0 as -1.
pub fn hypercube_matrix(r: &[Vertex]) -> Vec<Vec<i32>> {
    r.iter()
        .map(|v| {
            v.symbols()
                .iter()
                .map(|&s| if s == 1 { 1 } else { -1 })
                .collect()
        })
        .collect()
}

/// Resolvability on `H(k, 2)` through `B z = 0` with `z` in `{-1,0,1}^k`.
/// Small `k` is searched directly and yields a vertex pair as witness; larger
/// `k` goes through Gröbner bases of the reduced system.
pub fn check_resolving_hypercube(
    g: &HammingGraph,
    r: &[Vertex],
    enum_budget: u128,
    config: &GroebnerConfig,
) -> Result<ResolvabilityVerdict, ResolverError> {
    if g.a() != 2 {
        return Err(ResolverError::NotHypercube(g.a()));
    }
    if r.is_empty() {
        return Err(ResolverError::EmptySet);
    }
    for v in r {
        g.check(v)?;
    }
    let b = hypercube_matrix(r);
    let k = g.k();
    if search_size(3, k) <= enum_budget {
        let contrib: Vec<Vec<Vec<i32>>> = (0..k)
            .map(|j| {
                let col: Vec<i32> = b.iter().map(|row| row[j]).collect();
                let neg: Vec<i32> = col.iter().map(|x| -x).collect();
                vec![vec![0; b.len()], col, neg]
            })
            .collect();
        return Ok(match search(&contrib, b.len(), None) {
            Search::Empty | Search::OutOfSteps => {
                ResolvabilityVerdict::resolving(Method::Hypercube)
            }
            Search::Found(picks) => {
                // z_j = +1 means x_j = 1, y_j = 0; z_j = -1 the reverse.
                let x = picks.iter().map(|&c| u8::from(c == 1)).collect();
                let y = picks.iter().map(|&c| u8::from(c == 2)).collect();
                let w = Witness::Pair(Vertex::new(x), Vertex::new(y));
                ResolvabilityVerdict::not_resolving(Method::Hypercube, Some(w))
            }
        });
    }
    hypercube_groebner(k, &b, config)
}

/// Nonzero solutions have support size `i` for some `1 <= i <= k`, so the set
/// resolves iff every system `B z = 0, z_j^3 = z_j, sum z_j^2 = i` is empty.
fn hypercube_groebner(
    k: usize,
    b: &[Vec<i32>],
    config: &GroebnerConfig,
) -> Result<ResolvabilityVerdict, ResolverError> {
    let ord = MonomialOrder::Lex;
    let mut gens: Vec<Polynomial> = b
        .iter()
        .map(|row| {
            Polynomial::linear(
                &row.iter()
                    .map(|&x| Rational::from_int(i64::from(x)))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let mut squares = Polynomial::zero(k);
    for j in 0..k {
        let z = Polynomial::var(j, k);
        let z2 = &z * &z;
        gens.push(&(&z2 * &z) - &z);
        squares = &squares + &z2;
    }
    let base = reduce_basis(&buchberger_with(&gens, ord, config)?);
    let shifts: Vec<Rational> = (1..=k as i64).map(Rational::from_int).collect();
    for f in shifted_reductions(&base, &squares, &shifts)? {
        if f.is_constant() {
            continue;
        }
        let gi = extend_basis_with(&base, &[f], config)?;
        if !is_trivial(&gi)?.is_trivial_ideal {
            return Ok(ResolvabilityVerdict::not_resolving(Method::Hypercube, None));
        }
    }
    Ok(ResolvabilityVerdict::resolving(Method::Hypercube))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamgraph::{brute_force_is_resolving, distance_vector, parse_vertex_list};
    use crate::resolver::build_system;

    fn check_enum(k: usize, a: usize, list: &str) -> ResolvabilityVerdict {
        let g = HammingGraph::new(k, a).unwrap();
        let sys = build_system(&g, &parse_vertex_list(&g, list).unwrap()).unwrap();
        check_resolving_enumeration(&sys, DEFAULT_ENUM_BUDGET).unwrap()
    }

    #[test]
    fn enumeration_worked_example() {
        assert!(check_enum(3, 2, "100,101,001").resolving);
    }

    #[test]
    fn enumeration_finds_kernel_vector() {
        let v = check_enum(2, 2, "00");
        assert!(!v.resolving);
        let Some(Witness::Kernel(w)) = v.witness else {
            panic!("expected a kernel witness")
        };
        assert!(!w.is_zero());
        // The single row is (1,0,1,0).
        let z = w.values();
        assert_eq!(z[0] + z[2], 0);
        let (x, y) = w.vertex_pair();
        assert_ne!(x, y);
    }

    #[test]
    fn bounded_search() {
        let g = HammingGraph::new(6, 3).unwrap();
        let sys = build_system(&g, &parse_vertex_list(&g, "000000,111111").unwrap()).unwrap();
        let w = find_kernel_vector(&sys, 1000).expect("two vertices cannot resolve H(6,3)");
        let z: Vec<Rational> = w
            .values()
            .iter()
            .map(|&x| Rational::from_int(i64::from(x)))
            .collect();
        assert!(sys.matrix().mul_vec(&z).iter().all(Rational::is_zero));
        let g2 = HammingGraph::new(3, 2).unwrap();
        let sys2 = build_system(&g2, &parse_vertex_list(&g2, "100,101,001").unwrap()).unwrap();
        assert!(find_kernel_vector(&sys2, 1).is_none());
        assert!(find_kernel_vector(&sys2, 1 << 20).is_none());
    }

    #[test]
    fn enumeration_budget() {
        let g = HammingGraph::new(6, 3).unwrap();
        let sys = build_system(&g, &parse_vertex_list(&g, "000000").unwrap()).unwrap();
        let err = check_resolving_enumeration(&sys, 1000).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn hypercube_worked_example() {
        let g = HammingGraph::new(3, 2).unwrap();
        let r = parse_vertex_list(&g, "100,101,001").unwrap();
        assert_eq!(
            hypercube_matrix(&r),
            vec![vec![1, -1, -1], vec![1, -1, 1], vec![-1, -1, 1]]
        );
        let cfg = GroebnerConfig::default();
        assert!(
            check_resolving_hypercube(&g, &r, DEFAULT_ENUM_BUDGET, &cfg)
                .unwrap()
                .resolving
        );
        assert!(
            check_resolving_hypercube(&g, &r, 1, &cfg)
                .unwrap()
                .resolving
        );
        let g1 = HammingGraph::new(1, 2).unwrap();
        let r1 = parse_vertex_list(&g1, "0").unwrap();
        assert!(
            check_resolving_hypercube(&g1, &r1, DEFAULT_ENUM_BUDGET, &cfg)
                .unwrap()
                .resolving
        );
        let g3 = HammingGraph::new(2, 3).unwrap();
        assert!(
            check_resolving_hypercube(&g3, &parse_vertex_list(&g3, "00").unwrap(), 10, &cfg)
                .is_err()
        );
    }

    #[test]
    fn hypercube_witness_pairs_collide() {
        let g = HammingGraph::new(4, 2).unwrap();
        let cfg = GroebnerConfig::default();
        for list in ["0000", "0000,1111", "0011,0101", "0001,0010,0100"] {
            let r = parse_vertex_list(&g, list).unwrap();
            let v = check_resolving_hypercube(&g, &r, DEFAULT_ENUM_BUDGET, &cfg).unwrap();
            let oracle = brute_force_is_resolving(&g, &r).unwrap();
            assert_eq!(v.resolving, oracle.resolving, "{list}");
            if let Some(Witness::Pair(x, y)) = v.witness {
                assert_ne!(x, y);
                assert_eq!(
                    distance_vector(&x, &r).unwrap(),
                    distance_vector(&y, &r).unwrap()
                );
            }
            let slow = check_resolving_hypercube(&g, &r, 0, &cfg).unwrap();
            assert_eq!(slow.resolving, oracle.resolving, "{list}");
        }
    }
}
