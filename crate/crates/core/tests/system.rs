use hamres_core::groebner::{buchberger, reduce_basis, GroebnerConfig};
use hamres_core::hamgraph::{brute_force_is_resolving, HammingGraph, Vertex};
use hamres_core::polycore::{reduce, MonomialOrder, Polynomial};
use hamres_core::resolver::{
    build_system, check_resolving_enumeration, check_resolving_hypercube, structured_basis,
    GroebnerChecker, Strategy, DEFAULT_ENUM_BUDGET,
};
use hamres_core::setops::RandomSource;

fn h(k: usize, a: usize) -> HammingGraph {
    HammingGraph::new(k, a).unwrap()
}

/// Every point of {-1, 0, 1}^n.
fn ternary_points(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..3u64.pow(n as u32)).map(move |mut c| {
        (0..n)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                d
            })
            .collect()
    })
}

/// Each block is all zero or holds exactly one 1 and one -1.
fn admissible(z: &[i64], a: usize) -> bool {
    z.chunks(a).all(|b| {
        let ones = b.iter().filter(|&&x| x == 1).count();
        let negs = b.iter().filter(|&&x| x == -1).count();
        (ones, negs) == (0, 0) || (ones, negs) == (1, 1)
    })
}

fn subsets(all: &[Vertex]) -> impl Iterator<Item = Vec<Vertex>> + '_ {
    (1u32..1 << all.len()).map(move |mask| {
        (0..all.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| all[i].clone())
            .collect()
    })
}

fn random_subset(all: &[Vertex], rng: &mut RandomSource) -> Vec<Vertex> {
    let mut pool = all.to_vec();
    rng.shuffle(&mut pool);
    let n = 1 + rng.below(pool.len() as u64) as usize;
    pool.truncate(n);
    pool
}

#[test]
fn zero_set_of_p_is_admissible_vectors() {
    for (k, a) in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4)] {
        let g = h(k, a);
        let p = build_system(&g, &[Vertex::new(vec![0; k])]).unwrap().p();
        for z in ternary_points(g.dim()) {
            let vanishes = p.iter().all(|q| q.eval_int(&z) == Some(0));
            assert_eq!(vanishes, admissible(&z, a), "H({k},{a}) at {z:?}");
        }
    }
}

#[test]
fn exactly_one_shift_vanishes_on_nonzero_solutions() {
    for (k, a) in [(3, 2), (2, 3)] {
        let g = h(k, a);
        let sys = build_system(&g, &[Vertex::new(vec![0; k])]).unwrap();
        let f = sys.f_polys();
        for z in ternary_points(g.dim()).filter(|z| admissible(z, a)) {
            let blocks = z.chunks(a).filter(|b| b.iter().any(|&x| x != 0)).count();
            let roots: Vec<usize> = (0..k).filter(|&i| f[i].eval_int(&z) == Some(0)).collect();
            if blocks == 0 {
                assert!(roots.is_empty());
            } else {
                assert_eq!(roots, vec![blocks - 1]);
            }
        }
    }
}

#[test]
fn structured_basis_generates_the_ideal_of_p() {
    for (k, a) in [(2, 2), (2, 3), (1, 4)] {
        let g = h(k, a);
        let p = build_system(&g, &[Vertex::new(vec![0; k])]).unwrap().p();
        let g0 = structured_basis(&g, MonomialOrder::Lex)
            .unwrap()
            .polynomials();
        for q in &p {
            assert!(reduce(q, &g0, MonomialOrder::Lex)
                .unwrap()
                .remainder
                .is_zero());
        }
        let direct = buchberger(&p, MonomialOrder::Lex).unwrap();
        for q in &g0 {
            assert!(direct.contains(q).unwrap());
        }
    }
}

#[test]
fn redundant_generators_lie_in_the_ideal() {
    let g = h(1, 3);
    let p = build_system(&g, &[Vertex::new(vec![0])]).unwrap().p();
    // The cubic of the first variable follows from the rest.
    let rest: Vec<Polynomial> = p.iter().skip(1).cloned().collect();
    let basis = buchberger(&rest, MonomialOrder::Lex).unwrap();
    assert!(basis.contains(&p[0]).unwrap());
    let without_quartic: Vec<Polynomial> = p.iter().skip(1).take(3).cloned().collect();
    assert!(!buchberger(&without_quartic, MonomialOrder::Lex)
        .unwrap()
        .contains(&p[0])
        .unwrap());
}

/// Unit basis for every `P ∪ L ∪ {f_i}` computed from scratch.
fn resolves_from_scratch(g: &HammingGraph, r: &[Vertex], ord: MonomialOrder) -> bool {
    let sys = build_system(g, r).unwrap();
    let mut base = sys.p();
    base.extend(sys.linear_equations());
    sys.f_polys().into_iter().all(|f| {
        let mut gens = base.clone();
        gens.push(f);
        reduce_basis(&buchberger(&gens, ord).unwrap()).is_unit()
    })
}

#[test]
fn nullstellensatz_verdict_matches_brute_force_under_both_orders() {
    let g = h(2, 2);
    let all: Vec<Vertex> = g.vertices().unwrap().collect();
    for r in subsets(&all) {
        let truth = brute_force_is_resolving(&g, &r).unwrap().resolving;
        assert_eq!(
            resolves_from_scratch(&g, &r, MonomialOrder::Lex),
            truth,
            "{r:?}"
        );
        assert_eq!(
            resolves_from_scratch(&g, &r, MonomialOrder::GrevLex),
            truth,
            "{r:?}"
        );
    }
}

#[test]
fn checkers_agree_with_brute_force() {
    let config = GroebnerConfig::default();
    let mut rng = RandomSource::new(17);
    for (k, a, trials) in [(2, 2, 15), (3, 2, 60), (2, 3, 60), (2, 4, 30)] {
        let g = h(k, a);
        let all: Vec<Vertex> = g.vertices().unwrap().collect();
        let linear = GroebnerChecker::new(&g, MonomialOrder::Lex, config).unwrap();
        let shifted = GroebnerChecker::new(&g, MonomialOrder::Lex, config)
            .unwrap()
            .with_strategy(Strategy::ShiftFirst)
            .unwrap();
        for _ in 0..trials {
            let r = random_subset(&all, &mut rng);
            let truth = brute_force_is_resolving(&g, &r).unwrap().resolving;
            let sys = build_system(&g, &r).unwrap();
            assert_eq!(linear.check(&sys).unwrap().resolving, truth, "{r:?}");
            assert_eq!(shifted.check(&sys).unwrap().resolving, truth, "{r:?}");
            assert_eq!(
                check_resolving_enumeration(&sys, DEFAULT_ENUM_BUDGET)
                    .unwrap()
                    .resolving,
                truth
            );
            if a == 2 {
                assert_eq!(
                    check_resolving_hypercube(&g, &r, DEFAULT_ENUM_BUDGET, &config)
                        .unwrap()
                        .resolving,
                    truth
                );
            }
        }
    }
}

#[test]
fn grevlex_checker_agrees_with_lex() {
    let config = GroebnerConfig::default();
    let g = h(3, 2);
    let lex = GroebnerChecker::new(&g, MonomialOrder::Lex, config).unwrap();
    let grevlex = GroebnerChecker::new(&g, MonomialOrder::GrevLex, config).unwrap();
    let all: Vec<Vertex> = g.vertices().unwrap().collect();
    for r in subsets(&all).filter(|r| r.len() <= 3) {
        let sys = build_system(&g, &r).unwrap();
        assert_eq!(
            lex.check(&sys).unwrap(),
            grevlex.check(&sys).unwrap(),
            "{r:?}"
        );
    }
}
