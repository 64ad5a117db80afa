//! Gröbner bases: Buchberger completion, reduction, incremental extension and
//! the Nullstellensatz triviality test.

mod engine;

use std::fmt::Write as _;

use crate::exactmath::Rational;
use crate::polycore::ordered::{divide, spoly, OrderedPoly};
use crate::polycore::{MonomialOrder, PolyError, Polynomial};

use engine::{prefix_interreduce, reduce_ordered, Completer, Completion};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("no nonzero generators")]
    EmptyGenerators,
    #[error("step budget of {limit} S-pair reductions exhausted")]
    BudgetExhausted { limit: u64 },
    #[error("basis is not reduced")]
    NotReduced,
    #[error("polynomials do not form a Gröbner basis")]
    NotABasis,
    #[error("basis is {{1}}")]
    TrivialBasis,
    #[error("polynomial has a nonzero constant term")]
    ConstantTerm,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-pair reductions per completion run.
    pub max_reductions: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        Self {
            max_reductions: 1_000_000,
        }
    }
}

/// A Gröbner basis under a fixed ordering. Reduced bases are kept monic and
/// sorted by leading monomial, largest first, so `==` is ideal equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    ordering: MonomialOrder,
    reduced: bool,
    polys: Vec<OrderedPoly>,
}

/// Outcome of the Nullstellensatz test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrivialityVerdict {
    pub is_trivial_ideal: bool,
}

impl GroebnerBasis {
    fn unit(nvars: usize, ordering: MonomialOrder) -> Self {
        Self {
            nvars,
            ordering,
            reduced: true,
            polys: vec![OrderedPoly::from_poly(&Polynomial::one(nvars), ordering)],
        }
    }

    /// Wraps polynomials already known to be a reduced basis, after checking
    /// the criterion and the reduced-form conditions.
    pub fn from_reduced(
        polys: &[Polynomial],
        ordering: MonomialOrder,
    ) -> Result<Self, GroebnerError> {
        let nvars = common_nvars(polys)?;
        let mut ops: Vec<OrderedPoly> = polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| OrderedPoly::from_poly(p, ordering))
            .collect();
        ops.sort_by(|a, b| ordering.cmp(b.lm(), a.lm()));
        let g = Self {
            nvars,
            ordering,
            reduced: true,
            polys: ops,
        };
        if !g.is_reduced_form() {
            return Err(GroebnerError::NotReduced);
        }
        if !g.satisfies_criterion() {
            return Err(GroebnerError::NotABasis);
        }
        Ok(g)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ordering(&self) -> MonomialOrder {
        self.ordering
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// True if the basis contains a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(OrderedPoly::is_constant)
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.polys.iter().map(OrderedPoly::to_poly).collect()
    }

    fn refs(&self) -> Vec<&OrderedPoly> {
        self.polys.iter().collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        self.check_space(f)?;
        let r = divide(
            &OrderedPoly::from_poly(f, self.ordering),
            &self.refs(),
            self.ordering,
            None,
        );
        Ok(r.to_poly())
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every pairwise S-polynomial reduces to 0.
    pub fn satisfies_criterion(&self) -> bool {
        let refs = self.refs();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let (p, q) = (&self.polys[i], &self.polys[j]);
                if p.lm().is_coprime(q.lm()) {
                    continue;
                }
                if !divide(&spoly(p, q, self.ordering), &refs, self.ordering, None).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Monic, and no term of one element is divisible by another's leading monomial.
    pub fn is_reduced_form(&self) -> bool {
        self.polys.iter().enumerate().all(|(i, p)| {
            p.lc().is_one()
                && self
                    .polys
                    .iter()
                    .enumerate()
                    .all(|(j, q)| i == j || p.terms.iter().all(|(m, _)| !q.lm().divides(m)))
        })
    }

    /// One polynomial per line, largest leading monomial first.
    pub fn dump(&self) -> String {
        let mut polys = self.polys.clone();
        polys.sort_by(|a, b| self.ordering.cmp(b.lm(), a.lm()));
        let mut out = String::new();
        for p in polys {
            let _ = writeln!(out, "{}", p.to_poly().display(self.ordering));
        }
        out
    }

    fn check_space(&self, f: &Polynomial) -> Result<(), GroebnerError> {
        if f.nvars() != self.nvars {
            return Err(PolyError::VariableMismatch {
                left: self.nvars,
                right: f.nvars(),
            }
            .into());
        }
        Ok(())
    }
}

fn common_nvars(polys: &[Polynomial]) -> Result<usize, GroebnerError> {
    let first = polys.first().ok_or(GroebnerError::EmptyGenerators)?;
    for p in polys {
        if p.nvars() != first.nvars() {
            return Err(PolyError::VariableMismatch {
                left: first.nvars(),
                right: p.nvars(),
            }
            .into());
        }
    }
    Ok(first.nvars())
}

/// Buchberger's algorithm with the default budget. The result generates the
/// same ideal but is not reduced; see [`reduce_basis`].
pub fn buchberger(
    generators: &[Polynomial],
    ord: MonomialOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(generators, ord, &GroebnerConfig::default())
}

pub fn buchberger_with(
    generators: &[Polynomial],
    ord: MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    let nvars = common_nvars(generators)?;
    let gens: Vec<OrderedPoly> = generators
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| OrderedPoly::from_poly(p, ord))
        .collect();
    if gens.is_empty() {
        return Err(GroebnerError::EmptyGenerators);
    }
    let Some(mut gens) = prefix_interreduce(gens, ord) else {
        return Ok(GroebnerBasis::unit(nvars, ord));
    };
    gens.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let mut c = Completer::new(ord, config.max_reductions);
    for g in gens {
        c.add_input(g);
    }
    match c.complete()? {
        Completion::Unit => Ok(GroebnerBasis::unit(nvars, ord)),
        Completion::Basis(polys) => Ok(GroebnerBasis {
            nvars,
            ordering: ord,
            reduced: false,
            polys,
        }),
    }
}

/// The unique reduced basis of the same ideal.
pub fn reduce_basis(g: &GroebnerBasis) -> GroebnerBasis {
    if g.reduced {
        return g.clone();
    }
    GroebnerBasis {
        nvars: g.nvars,
        ordering: g.ordering,
        reduced: true,
        polys: reduce_ordered(g.polys.clone(), g.ordering),
    }
}

/// Reduced basis of the ideal generated by `g` and `new_polys`. Only pairs
/// involving the new polynomials are queued.
pub fn extend_basis(
    g: &GroebnerBasis,
    new_polys: &[Polynomial],
) -> Result<GroebnerBasis, GroebnerError> {
    extend_basis_with(g, new_polys, &GroebnerConfig::default())
}

pub fn extend_basis_with(
    g: &GroebnerBasis,
    new_polys: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    for p in new_polys {
        g.check_space(p)?;
    }
    if g.is_unit() {
        return Ok(GroebnerBasis::unit(g.nvars, g.ordering));
    }
    let mut c = Completer::new(g.ordering, config.max_reductions);
    c.seed_basis(g.polys.clone());
    for p in new_polys {
        if c.insert(&OrderedPoly::from_poly(p, g.ordering)) {
            return Ok(GroebnerBasis::unit(g.nvars, g.ordering));
        }
    }
    match c.complete()? {
        Completion::Unit => Ok(GroebnerBasis::unit(g.nvars, g.ordering)),
        Completion::Basis(polys) => Ok(GroebnerBasis {
            nvars: g.nvars,
            ordering: g.ordering,
            reduced: true,
            polys: reduce_ordered(polys, g.ordering),
        }),
    }
}

/// Weak Nullstellensatz: the system has no common zero iff its reduced basis is {1}.
pub fn is_trivial(g: &GroebnerBasis) -> Result<TrivialityVerdict, GroebnerError> {
    if !g.reduced {
        return Err(GroebnerError::NotReduced);
    }
    let is_trivial_ideal =
        g.polys.len() == 1 && g.polys[0].is_constant() && g.polys[0].lc().is_one();
    Ok(TrivialityVerdict { is_trivial_ideal })
}

/// Reduces `f` once and returns `r - c` for every shift `c`. Valid because a
/// constant is irreducible by a basis other than {1}.
pub fn shifted_reductions(
    g: &GroebnerBasis,
    f: &Polynomial,
    shifts: &[Rational],
) -> Result<Vec<Polynomial>, GroebnerError> {
    if !g.reduced {
        return Err(GroebnerError::NotReduced);
    }
    if g.is_unit() {
        return Err(GroebnerError::TrivialBasis);
    }
    if !f.constant_term().is_zero() {
        return Err(GroebnerError::ConstantTerm);
    }
    let r = g.normal_form(f)?;
    Ok(shifts
        .iter()
        .map(|c| &r - &Polynomial::constant(c.clone(), g.nvars))
        .collect())
}

/// A strategy for computing reduced Gröbner bases.
pub trait BasisEngine {
    fn reduced_basis(
        &self,
        generators: &[Polynomial],
        ord: MonomialOrder,
    ) -> Result<GroebnerBasis, GroebnerError>;

    fn extend(
        &self,
        g: &GroebnerBasis,
        new_polys: &[Polynomial],
    ) -> Result<GroebnerBasis, GroebnerError>;
}

/// Buchberger's algorithm with Gebauer–Möller pair management.
#[derive(Clone, Copy, Debug, Default)]
pub struct Buchberger {
    pub config: GroebnerConfig,
}

impl BasisEngine for Buchberger {
    fn reduced_basis(
        &self,
        generators: &[Polynomial],
        ord: MonomialOrder,
    ) -> Result<GroebnerBasis, GroebnerError> {
        Ok(reduce_basis(&buchberger_with(
            generators,
            ord,
            &self.config,
        )?))
    }

    fn extend(
        &self,
        g: &GroebnerBasis,
        new_polys: &[Polynomial],
    ) -> Result<GroebnerBasis, GroebnerError> {
        extend_basis_with(g, new_polys, &self.config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::Monomial;
    use proptest::prelude::*;

    const LEX: MonomialOrder = MonomialOrder::Lex;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn ps(v: &[&str], n: usize) -> Vec<Polynomial> {
        v.iter().map(|s| p(s, n)).collect()
    }

    fn reduced(v: &[&str], n: usize, ord: MonomialOrder) -> GroebnerBasis {
        reduce_basis(&buchberger(&ps(v, n), ord).unwrap())
    }

    #[test]
    fn single_generator() {
        let g = buchberger(&ps(&["z1"], 1), LEX).unwrap();
        assert_eq!(g.polynomials(), ps(&["z1"], 1));
        assert!(g.satisfies_criterion());
    }

    #[test]
    fn s_polynomial_joins_basis() {
        let g = buchberger(&ps(&["z1^2 + z2", "z1*z2 + 1"], 2), LEX).unwrap();
        assert!(g.satisfies_criterion());
        assert!(g.contains(&p("z2^2 - z1", 2)).unwrap());
        for f in ps(&["z1^2 + z2", "z1*z2 + 1"], 2) {
            assert!(g.contains(&f).unwrap());
        }
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(buchberger(&[], LEX), Err(GroebnerError::EmptyGenerators));
        assert_eq!(
            buchberger(&[Polynomial::zero(2)], LEX),
            Err(GroebnerError::EmptyGenerators)
        );
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduced(&["2*z1"], 1, LEX).polynomials(), ps(&["z1"], 1));
        assert_eq!(
            reduced(&["z1", "z1 + z2"], 2, LEX).polynomials(),
            ps(&["z1", "z2"], 2)
        );
        let g0 = reduced(&["z1 + z2", "z2^3 - z2"], 2, LEX);
        assert_eq!(g0.polynomials(), ps(&["z1 + z2", "z2^3 - z2"], 2));
        assert!(g0.is_reduced_form());
    }

    #[test]
    fn inconsistent_system_gives_unit() {
        let g = reduced(&["z1*z2 - 1", "z1"], 2, MonomialOrder::GrevLex);
        assert!(is_trivial(&g).unwrap().is_trivial_ideal);
        assert_eq!(g.dump(), "1\n");
    }

    #[test]
    fn extend_examples() {
        let g = reduced(&["z1 + z2", "z2^3 - z2"], 2, LEX);
        assert_eq!(extend_basis(&g, &[]).unwrap(), g);
        let e = extend_basis(&g, &ps(&["z2 - 1"], 2)).unwrap();
        assert_eq!(e.polynomials(), ps(&["z1 + 1", "z2 - 1"], 2));
        let u = extend_basis(&g, &ps(&["z2^2 - 4"], 2)).unwrap();
        assert!(is_trivial(&u).unwrap().is_trivial_ideal);
    }

    #[test]
    fn triviality() {
        let one = GroebnerBasis::unit(1, LEX);
        assert!(is_trivial(&one).unwrap().is_trivial_ideal);
        assert!(
            !is_trivial(&reduced(&["z1"], 1, LEX))
                .unwrap()
                .is_trivial_ideal
        );
        let raw = buchberger(&ps(&["z1", "z1 + z2"], 2), LEX).unwrap();
        if !raw.is_reduced() {
            assert_eq!(is_trivial(&raw), Err(GroebnerError::NotReduced));
        }
    }

    #[test]
    fn shifted_examples() {
        let g = reduced(&["z1"], 1, LEX);
        let f = p("z1^2", 1);
        assert_eq!(
            shifted_reductions(&g, &f, &[Rational::from(5)]).unwrap(),
            vec![p("-5", 1)]
        );
        let g2 = reduced(&["z1 + z2", "z2^3 - z2"], 2, LEX);
        let f2 = p("z1^2 + z2^2", 2);
        let r = g2.normal_form(&f2).unwrap();
        assert_eq!(
            shifted_reductions(&g2, &f2, &[Rational::ZERO]).unwrap(),
            vec![r]
        );
        assert_eq!(
            shifted_reductions(&g2, &p("z1 + 1", 2), &[Rational::ONE]),
            Err(GroebnerError::ConstantTerm)
        );
        assert_eq!(
            shifted_reductions(&GroebnerBasis::unit(2, LEX), &f2, &[Rational::ONE]),
            Err(GroebnerError::TrivialBasis)
        );
    }

    #[test]
    fn from_reduced_validates() {
        assert!(GroebnerBasis::from_reduced(&ps(&["z1 + z2", "z2^3 - z2"], 2), LEX).is_ok());
        assert_eq!(
            GroebnerBasis::from_reduced(&ps(&["z1", "z1 + z2"], 2), LEX),
            Err(GroebnerError::NotReduced)
        );
        assert_eq!(
            GroebnerBasis::from_reduced(&ps(&["z1^2 + z2", "z1*z2 + 1"], 2), LEX),
            Err(GroebnerError::NotABasis)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = GroebnerConfig { max_reductions: 1 };
        let gens = ps(&["z1^2*z2 - z3", "z1*z2^2 - z1", "z2^3 - z3^2 + z1"], 3);
        assert_eq!(
            buchberger_with(&gens, LEX, &cfg),
            Err(GroebnerError::BudgetExhausted { limit: 1 })
        );
    }

    #[test]
    fn dump_is_sorted() {
        let g = reduced(&["z2^3 - z2", "z1 + z2"], 2, LEX);
        assert_eq!(g.dump(), "z1 + z2\nz2^3 - z2\n");
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        let term = (proptest::collection::vec(0u32..3, nvars), -3i64..4)
            .prop_map(|(e, c)| (Monomial::from_exponents(&e), Rational::from(c)));
        proptest::collection::vec(term, 1..4).prop_map(move |t| Polynomial::from_terms(nvars, t))
    }

    fn arb_gens() -> impl Strategy<Value = Vec<Polynomial>> {
        proptest::collection::vec(arb_poly(3), 1..4).prop_filter("needs a nonzero generator", |v| {
            v.iter().any(|p| !p.is_zero())
        })
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop::sample::select(MonomialOrder::ALL.to_vec())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn criterion_and_membership(gens in arb_gens(), ord in arb_order()) {
            let g = buchberger(&gens, ord).unwrap();
            prop_assert!(g.satisfies_criterion());
            for f in &gens {
                prop_assert!(g.contains(f).unwrap());
            }
            let r = reduce_basis(&g);
            prop_assert!(r.is_reduced_form());
            prop_assert!(r.satisfies_criterion());
            for f in &gens {
                prop_assert!(r.contains(f).unwrap());
            }
        }

        #[test]
        fn reduced_basis_ignores_input_order(gens in arb_gens(), ord in arb_order(), seed in any::<u64>()) {
            let mut shuffled = gens.clone();
            let n = shuffled.len();
            for i in (1..n).rev() {
                shuffled.swap(i, (seed as usize).wrapping_add(i * 7) % (i + 1));
            }
            let a = reduce_basis(&buchberger(&gens, ord).unwrap());
            let b = reduce_basis(&buchberger(&shuffled, ord).unwrap());
            prop_assert_eq!(a.dump(), b.dump());
        }

        #[test]
        fn remainder_ignores_basis_order(gens in arb_gens(), f in arb_poly(3), ord in arb_order()) {
            let g = reduce_basis(&buchberger(&gens, ord).unwrap());
            let mut rev = g.clone();
            rev.polys.reverse();
            prop_assert_eq!(g.normal_form(&f).unwrap(), rev.normal_form(&f).unwrap());
        }

        #[test]
        fn extend_matches_recomputation(gens in arb_gens(), extra in proptest::collection::vec(arb_poly(3), 0..3), ord in arb_order()) {
            let g = reduce_basis(&buchberger(&gens, ord).unwrap());
            let e = extend_basis(&g, &extra).unwrap();
            let mut all = g.polynomials();
            all.extend(extra);
            let direct = reduce_basis(&buchberger(&all, ord).unwrap());
            prop_assert_eq!(e, direct);
        }
    }
}
