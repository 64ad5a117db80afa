//! Shrinking and building resolving sets.
//!
//! * [`reduce_top_down`] drops vertices one at a time while the rest still resolves.
//! * [`reduce_generative`] grows a subset of a resolving set until it resolves.
//! * [`generate_resolving`] grows a resolving set from random vertices.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::RowEchelon;
use crate::groebner::{extend_basis_with, GroebnerBasis, GroebnerConfig};
use crate::hamgraph::{GraphError, HammingGraph, Vertex};
use crate::polycore::{MonomialOrder, Polynomial};
use crate::resolver::{
    build_system, check_resolving_hypercube, find_kernel_vector, max_rank, one_hot_row,
    GroebnerChecker, ResolverError, Strategy, DEFAULT_ENUM_BUDGET,
};

/// Seeded randomness. The stream is ChaCha8 keyed by `seed_from_u64`, which
/// is fixed across platforms and releases of `rand_chacha`.
#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        items.shuffle(&mut self.rng);
    }

    /// Uniform in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.random_range(0..n)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SetOpsConfig {
    pub ordering: MonomialOrder,
    pub groebner: GroebnerConfig,
    pub enum_budget: u128,
}

impl Default for SetOpsConfig {
    fn default() -> Self {
        Self {
            ordering: MonomialOrder::Lex,
            groebner: GroebnerConfig::default(),
            enum_budget: DEFAULT_ENUM_BUDGET,
        }
    }
}

/// Steps of kernel-vector search tried before falling back to Gröbner bases.
const PROBE_STEPS: u64 = 20_000;

/// Rank test, then the hypercube path when `a = 2`. Otherwise a short search
/// for a kernel vector, which settles most non-resolving sets cheaply, and
/// then Gröbner bases.
struct Oracle {
    graph: HammingGraph,
    config: SetOpsConfig,
    groebner: Option<GroebnerChecker>,
}

impl Oracle {
    fn new(
        g: &HammingGraph,
        config: SetOpsConfig,
        strategy: Strategy,
    ) -> Result<Self, ResolverError> {
        let groebner = if g.a() == 2 {
            None
        } else {
            Some(
                GroebnerChecker::new(g, config.ordering, config.groebner)?
                    .with_strategy(strategy)?,
            )
        };
        Ok(Self {
            graph: *g,
            config,
            groebner,
        })
    }

    fn resolves(&self, r: &[Vertex]) -> Result<bool, ResolverError> {
        if r.is_empty() {
            return Ok(self.graph.vertex_count() == Some(1));
        }
        let sys = build_system(&self.graph, r)?;
        let linear = sys.linear_equations();
        if linear.len() == max_rank(&self.graph) {
            return Ok(true);
        }
        match &self.groebner {
            None => Ok(check_resolving_hypercube(
                &self.graph,
                r,
                self.config.enum_budget,
                &self.config.groebner,
            )?
            .resolving),
            Some(c) => Ok(find_kernel_vector(&sys, PROBE_STEPS).is_none() && c.resolves(&linear)?),
        }
    }
}

fn dedup(g: &HammingGraph, r: &[Vertex]) -> Result<Vec<Vertex>, ResolverError> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(r.len());
    for v in r {
        g.check(v)?;
        if seen.insert(v.clone()) {
            out.push(v.clone());
        }
    }
    Ok(out)
}

/// Keeps, in order, the vertices whose rows raise the rank of the rows kept so far.
fn independent_rows(g: &HammingGraph, r: Vec<Vertex>) -> Result<Vec<Vertex>, GraphError> {
    let mut e = RowEchelon::new(g.dim());
    let mut out = Vec::with_capacity(r.len());
    for v in r {
        if e.insert(&one_hot_row(g, &v)?) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Restores the caller's order for a subset of `r`.
fn in_input_order(r: &[Vertex], kept: &[Vertex]) -> Vec<Vertex> {
    let kept: HashSet<&Vertex> = kept.iter().collect();
    let mut seen = HashSet::new();
    r.iter()
        .filter(|v| kept.contains(v) && seen.insert(*v))
        .cloned()
        .collect()
}

/// Removes vertices from a resolving set, in random order, as long as the
/// remainder still resolves. Vertices whose rows depend linearly on the others
/// are dropped first without any check. The result is inclusion-minimal.
pub fn reduce_top_down(
    g: &HammingGraph,
    r: &[Vertex],
    rng: &mut RandomSource,
    config: &SetOpsConfig,
) -> Result<Vec<Vertex>, ResolverError> {
    let mut set = dedup(g, r)?;
    let oracle = Oracle::new(g, *config, Strategy::ShiftFirst)?;
    if !oracle.resolves(&set)? {
        return Err(ResolverError::NotResolving);
    }
    rng.shuffle(&mut set);
    let mut set = independent_rows(g, set)?;
    let order = set.clone();
    for v in &order {
        let without: Vec<Vertex> = set.iter().filter(|x| *x != v).cloned().collect();
        if oracle.resolves(&without)? {
            log::debug!("removed {v}");
            set = without;
        }
    }
    Ok(in_input_order(r, &set))
}

/// Bases of `P + f_i` extended one linear equation at a time. Equations are
/// queued per basis and only applied when that basis is inspected.
struct IncrementalBases {
    bases: Vec<GroebnerBasis>,
    pending: Vec<Vec<Polynomial>>,
    config: GroebnerConfig,
}

impl IncrementalBases {
    fn new(checker: &GroebnerChecker, config: GroebnerConfig) -> Self {
        let bases = checker.shifted_bases().to_vec();
        let pending = vec![Vec::new(); bases.len()];
        Self {
            bases,
            pending,
            config,
        }
    }

    fn push(&mut self, row: Polynomial) {
        for (b, p) in self.bases.iter().zip(self.pending.iter_mut()) {
            if !b.is_unit() {
                p.push(row.clone());
            }
        }
    }

    fn all_unit(&mut self) -> Result<bool, ResolverError> {
        for (b, p) in self.bases.iter_mut().zip(self.pending.iter_mut()) {
            if !p.is_empty() && !b.is_unit() {
                *b = extend_basis_with(b, p, &self.config)?;
                p.clear();
            }
            if !b.is_unit() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Adds the vertices of a resolving set, in random order, to an empty set
/// until it resolves. Fails with [`ResolverError::NotResolving`] if every
/// vertex has been added and the set still does not resolve.
pub fn reduce_generative(
    g: &HammingGraph,
    r: &[Vertex],
    rng: &mut RandomSource,
    config: &SetOpsConfig,
) -> Result<Vec<Vertex>, ResolverError> {
    let mut set = dedup(g, r)?;
    rng.shuffle(&mut set);
    let set = independent_rows(g, set)?;
    let oracle = Oracle::new(g, *config, Strategy::ShiftFirst)?;
    let mut bases = oracle
        .groebner
        .as_ref()
        .map(|c| IncrementalBases::new(c, config.groebner));
    let mut echelon = RowEchelon::new(g.dim());
    let mut out = Vec::new();
    for v in set {
        let row = one_hot_row(g, &v)?;
        echelon.insert(&row);
        out.push(v);
        let done = if echelon.rank() == max_rank(g) {
            true
        } else if let Some(b) = bases.as_mut() {
            b.push(Polynomial::linear(&row));
            b.all_unit()?
        } else {
            oracle.resolves(&out)?
        };
        if done {
            return Ok(in_input_order(r, &out));
        }
    }
    if g.vertex_count() == Some(1) {
        return Ok(out);
    }
    Err(ResolverError::NotResolving)
}

/// Draws vertices uniformly without replacement.
struct VertexStream {
    n: u64,
    order: Option<Vec<u64>>,
    seen: HashSet<u64>,
    pos: usize,
}

impl VertexStream {
    const SHUFFLE_LIMIT: u64 = 1 << 20;

    fn new(g: &HammingGraph, rng: &mut RandomSource) -> Result<Self, ResolverError> {
        let n = g.vertex_count().ok_or(GraphError::TooLarge)?;
        let order = (n <= Self::SHUFFLE_LIMIT).then(|| {
            let mut v: Vec<u64> = (0..n).collect();
            rng.shuffle(&mut v);
            v
        });
        Ok(Self {
            n,
            order,
            seen: HashSet::new(),
            pos: 0,
        })
    }

    fn next(&mut self, rng: &mut RandomSource) -> Option<u64> {
        match &self.order {
            Some(order) => {
                let i = order.get(self.pos).copied();
                self.pos += 1;
                i
            }
            None => {
                if self.seen.len() as u64 == self.n {
                    return None;
                }
                loop {
                    let i = rng.below(self.n);
                    if self.seen.insert(i) {
                        return Some(i);
                    }
                }
            }
        }
    }
}

/// Builds a resolving set from random vertices, admitting only those that
/// raise the rank of the one-hot matrix. At most `k(a-1)+1` vertices are
/// ever admitted, since that rank already forces resolvability.
pub fn generate_resolving(
    g: &HammingGraph,
    rng: &mut RandomSource,
    config: &SetOpsConfig,
) -> Result<Vec<Vertex>, ResolverError> {
    let oracle = Oracle::new(g, *config, Strategy::LinearFirst)?;
    let mut stream = VertexStream::new(g, rng)?;
    let mut echelon = RowEchelon::new(g.dim());
    let mut out = Vec::new();
    while let Some(i) = stream.next(rng) {
        let v = g.vertex(i);
        if !echelon.insert(&one_hot_row(g, &v)?) {
            continue;
        }
        out.push(v);
        if echelon.rank() == max_rank(g) || oracle.resolves(&out)? {
            return Ok(out);
        }
    }
    unreachable!("the full vertex set reaches maximal rank")
}
