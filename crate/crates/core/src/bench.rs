//! Timing harness comparing the resolvability checkers on generated sets.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::groebner::GroebnerConfig;
use crate::hamgraph::{brute_force_is_resolving, HammingGraph, Vertex};
use crate::polycore::MonomialOrder;
use crate::resolver::{
    build_system, check_resolving_enumeration, check_resolving_hypercube, GroebnerChecker,
    ResolverError, DEFAULT_ENUM_BUDGET,
};
use crate::setops::{generate_resolving, RandomSource, SetOpsConfig};
use crate::verdict::Method;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    #[serde(rename = "resolving")]
    Resolving,
    #[serde(rename = "not-resolving")]
    NotResolving,
    #[serde(rename = "unknown")]
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Resolving => "resolving",
            Outcome::NotResolving => "not-resolving",
            Outcome::Unknown => "unknown",
        })
    }
}

impl From<bool> for Outcome {
    fn from(resolving: bool) -> Self {
        if resolving {
            Outcome::Resolving
        } else {
            Outcome::NotResolving
        }
    }
}

/// One timed check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub trial: usize,
    pub k: usize,
    pub a: usize,
    pub set_size: usize,
    #[serde(serialize_with = "method_name")]
    pub method: Method,
    pub verdict: Outcome,
    pub micros: f64,
    pub seed: u64,
}

fn method_name<S: serde::Serializer>(m: &Method, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(m.name())
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub k: usize,
    pub a: usize,
    pub trials: usize,
    /// Share of trials that use a resolving set.
    pub fraction_resolving: f64,
    pub methods: Vec<Method>,
    pub seed: u64,
    pub ordering: MonomialOrder,
    pub groebner: GroebnerConfig,
    pub enum_budget: u128,
}

impl BenchConfig {
    /// Every method that applies to `H(k, a)`.
    pub fn new(k: usize, a: usize, trials: usize) -> Self {
        let methods = Method::ALL
            .into_iter()
            .filter(|&m| m != Method::Hypercube || a == 2)
            .collect();
        Self {
            k,
            a,
            trials,
            fraction_resolving: 0.5,
            methods,
            seed: 0,
            ordering: MonomialOrder::Lex,
            groebner: GroebnerConfig::default(),
            enum_budget: DEFAULT_ENUM_BUDGET,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error(transparent)]
    Resolver(#[from] ResolverError),
    #[error("trial {trial}: {method} says {found}, brute force says {expected}")]
    Disagreement {
        trial: usize,
        method: Method,
        found: Outcome,
        expected: Outcome,
    },
    #[error("fraction of resolving sets must lie in [0, 1], got {0}")]
    BadFraction(f64),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Drops random elements of a resolving set until it stops resolving.
fn break_set(
    g: &HammingGraph,
    mut r: Vec<Vertex>,
    rng: &mut RandomSource,
) -> Result<Vec<Vertex>, ResolverError> {
    while r.len() > 1 && brute_force_is_resolving(g, &r)?.resolving {
        let i = rng.below(r.len() as u64) as usize;
        r.remove(i);
    }
    Ok(r)
}

struct Runner<'a> {
    graph: HammingGraph,
    config: &'a BenchConfig,
    groebner: GroebnerChecker,
}

impl Runner<'_> {
    fn run(&self, method: Method, r: &[Vertex]) -> Result<Outcome, ResolverError> {
        let result = match method {
            Method::BruteForce => Ok(brute_force_is_resolving(&self.graph, r)?),
            Method::Groebner => self.groebner.check(&build_system(&self.graph, r)?),
            Method::Enumeration => {
                check_resolving_enumeration(&build_system(&self.graph, r)?, self.config.enum_budget)
            }
            Method::Hypercube => check_resolving_hypercube(
                &self.graph,
                r,
                self.config.enum_budget,
                &self.config.groebner,
            ),
        };
        match result {
            Ok(v) => Ok(v.resolving.into()),
            Err(e) if e.is_budget() => Ok(Outcome::Unknown),
            Err(e) => Err(e),
        }
    }

    /// One untimed warm-up run, then the timed run.
    fn timed(&self, method: Method, r: &[Vertex]) -> Result<(Outcome, f64), ResolverError> {
        self.run(method, r)?;
        let start = Instant::now();
        let outcome = self.run(method, r)?;
        Ok((outcome, start.elapsed().as_secs_f64() * 1e6))
    }
}

/// Runs `config.trials` trials. Trial `t` uses a resolving set when
/// `floor((t+1) f) > floor(t f)` for the resolving fraction `f`, which spreads
/// both kinds evenly. Any verdict that contradicts brute force aborts the run.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    let f = config.fraction_resolving;
    if !(0.0..=1.0).contains(&f) {
        return Err(BenchError::BadFraction(f));
    }
    let g = HammingGraph::new(config.k, config.a).map_err(ResolverError::from)?;
    let runner = Runner {
        graph: g,
        config,
        groebner: GroebnerChecker::new(&g, config.ordering, config.groebner)?,
    };
    let setops = SetOpsConfig {
        ordering: config.ordering,
        groebner: config.groebner,
        enum_budget: config.enum_budget,
    };
    let mut rng = RandomSource::new(config.seed);
    let mut records = Vec::new();
    for trial in 0..config.trials {
        let want_resolving = ((trial + 1) as f64 * f).floor() > (trial as f64 * f).floor();
        let mut r = generate_resolving(&g, &mut rng, &setops)?;
        if !want_resolving {
            r = break_set(&g, r, &mut rng)?;
        }
        let expected: Outcome = brute_force_is_resolving(&g, &r)
            .map_err(ResolverError::from)?
            .resolving
            .into();
        for &method in &config.methods {
            if method == Method::Hypercube && g.a() != 2 {
                continue;
            }
            let (verdict, micros) = runner.timed(method, &r)?;
            if verdict != Outcome::Unknown && verdict != expected {
                return Err(BenchError::Disagreement {
                    trial,
                    method,
                    found: verdict,
                    expected,
                });
            }
            records.push(BenchRecord {
                trial,
                k: g.k(),
                a: g.a(),
                set_size: r.len(),
                method,
                verdict,
                micros,
                seed: config.seed,
            });
        }
    }
    Ok(records)
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<(), BenchError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record([
        "trial", "k", "a", "set_size", "method", "verdict", "micros", "seed",
    ])?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Median wall time of the records matching `method` and `verdict`.
pub fn median_micros(records: &[BenchRecord], method: Method, verdict: Outcome) -> Option<f64> {
    let mut t: Vec<f64> = records
        .iter()
        .filter(|r| r.method == method && r.verdict == verdict)
        .map(|r| r.micros)
        .collect();
    if t.is_empty() {
        return None;
    }
    t.sort_by(f64::total_cmp);
    let n = t.len();
    Some(if n % 2 == 1 {
        t[n / 2]
    } else {
        (t[n / 2 - 1] + t[n / 2]) / 2.0
    })
}
