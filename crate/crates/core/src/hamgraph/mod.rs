//! Hamming graphs `H(k, a)`: words of length `k` over `{0, .., a-1}`, joined
//! when they differ in one position. Graph distance is Hamming distance.

mod io;

use std::fmt;

use crate::verdict::{Method, ResolvabilityVerdict, Witness};

pub use io::{format_vertex, parse_set_file, parse_vertex, parse_vertex_list};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("invalid graph parameters k={k}, a={a} (need k >= 1 and 2 <= a <= 256)")]
    InvalidParameters { k: usize, a: usize },
    #[error("vertex has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("symbol {symbol} is outside the alphabet 0..{a}")]
    SymbolOutOfRange { symbol: usize, a: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("search needs {needed} candidate sets, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("graph too large to enumerate")]
    TooLarge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HammingGraph {
    k: usize,
    a: usize,
}

/// A word of length `k`; symbol values are checked against a graph on use.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(Vec<u8>);

impl Vertex {
    pub fn new(symbols: Vec<u8>) -> Self {
        Self(symbols)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&s| s >= 10);
        for (i, s) in self.0.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({self})")
    }
}

impl HammingGraph {
    pub fn new(k: usize, a: usize) -> Result<Self, GraphError> {
        if k == 0 || !(2..=256).contains(&a) {
            return Err(GraphError::InvalidParameters { k, a });
        }
        Ok(Self { k, a })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn a(&self) -> usize {
        self.a
    }

    /// Number of one-hot coordinates, `a * k`.
    pub fn dim(&self) -> usize {
        self.a * self.k
    }

    /// `a^k`, or `None` on overflow.
    pub fn vertex_count(&self) -> Option<u64> {
        (self.a as u64).checked_pow(self.k.try_into().ok()?)
    }

    pub fn check(&self, v: &Vertex) -> Result<(), GraphError> {
        if v.len() != self.k {
            return Err(GraphError::LengthMismatch {
                expected: self.k,
                found: v.len(),
            });
        }
        if let Some(&s) = v.symbols().iter().find(|&&s| s as usize >= self.a) {
            return Err(GraphError::SymbolOutOfRange {
                symbol: s as usize,
                a: self.a,
            });
        }
        Ok(())
    }

    /// The vertex with lexicographic rank `index`.
    pub fn vertex(&self, mut index: u64) -> Vertex {
        let mut s = vec![0u8; self.k];
        for slot in s.iter_mut().rev() {
            *slot = (index % self.a as u64) as u8;
            index /= self.a as u64;
        }
        Vertex(s)
    }

    pub fn index_of(&self, v: &Vertex) -> u64 {
        v.symbols()
            .iter()
            .fold(0u64, |acc, &s| acc * self.a as u64 + s as u64)
    }

    /// All vertices in lexicographic order.
    pub fn vertices(&self) -> Result<impl Iterator<Item = Vertex> + '_, GraphError> {
        let n = self.vertex_count().ok_or(GraphError::TooLarge)?;
        Ok((0..n).map(move |i| self.vertex(i)))
    }
}

/// Column `j` of the `a x k` matrix is the indicator of symbol `v[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneHot {
    a: usize,
    k: usize,
    vectorized: Vec<u8>,
}

impl OneHot {
    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.vectorized[col * self.a + row]
    }

    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.a)
            .map(|r| (0..self.k).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    /// Column-wise vectorization: block `j` has length `a`, symbol index fastest.
    pub fn vectorized(&self) -> &[u8] {
        &self.vectorized
    }

    pub fn decode(&self) -> Vertex {
        Vertex(
            self.vectorized
                .chunks(self.a)
                .map(|b| b.iter().position(|&x| x == 1).expect("one-hot column") as u8)
                .collect(),
        )
    }
}

pub fn one_hot(g: &HammingGraph, v: &Vertex) -> Result<OneHot, GraphError> {
    g.check(v)?;
    let mut vectorized = vec![0u8; g.dim()];
    for (j, &s) in v.symbols().iter().enumerate() {
        vectorized[j * g.a + s as usize] = 1;
    }
    Ok(OneHot {
        a: g.a,
        k: g.k,
        vectorized,
    })
}

pub fn hamming_distance(x: &Vertex, y: &Vertex) -> Result<usize, GraphError> {
    if x.len() != y.len() {
        return Err(GraphError::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    Ok(distance(x.symbols(), y.symbols()))
}

fn distance(x: &[u8], y: &[u8]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Distances from one vertex to each reference vertex, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceVector(pub Vec<usize>);

pub fn distance_vector(v: &Vertex, r: &[Vertex]) -> Result<DistanceVector, GraphError> {
    r.iter()
        .map(|x| hamming_distance(v, x))
        .collect::<Result<_, _>>()
        .map(DistanceVector)
}

/// Distance vectors of `inputs` with respect to `r`.
pub fn embed(
    g: &HammingGraph,
    r: &[Vertex],
    inputs: &[Vertex],
) -> Result<Vec<DistanceVector>, GraphError> {
    for v in r.iter().chain(inputs) {
        g.check(v)?;
    }
    inputs.iter().map(|v| distance_vector(v, r)).collect()
}

/// Compares the distance vectors of every pair of vertices. On failure the
/// witness is the lexicographically smallest colliding pair.
pub fn brute_force_is_resolving(
    g: &HammingGraph,
    r: &[Vertex],
) -> Result<ResolvabilityVerdict, GraphError> {
    for v in r {
        g.check(v)?;
    }
    let n = usize::try_from(g.vertex_count().ok_or(GraphError::TooLarge)?)
        .map_err(|_| GraphError::TooLarge)?;
    let m = r.len();
    if m == 0 {
        return Ok(if n <= 1 {
            ResolvabilityVerdict::resolving(Method::BruteForce)
        } else {
            ResolvabilityVerdict::not_resolving(
                Method::BruteForce,
                Some(Witness::Pair(g.vertex(0), g.vertex(1))),
            )
        });
    }
    let mut table = Vec::with_capacity(n * m);
    for v in g.vertices()? {
        table.extend(r.iter().map(|x| distance(v.symbols(), x.symbols()) as u8));
    }
    for x in 0..n {
        let dx = &table[x * m..(x + 1) * m];
        for y in x + 1..n {
            if dx == &table[y * m..(y + 1) * m] {
                let w = Witness::Pair(g.vertex(x as u64), g.vertex(y as u64));
                return Ok(ResolvabilityVerdict::not_resolving(
                    Method::BruteForce,
                    Some(w),
                ));
            }
        }
    }
    Ok(ResolvabilityVerdict::resolving(Method::BruteForce))
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Smallest resolving set of size at most `max_size`, found by trying every
/// subset in order of size. `Ok(None)` means no subset of that size resolves.
/// Refuses to start if more than `budget` subsets might be examined.
pub fn metric_dimension_exhaustive(
    g: &HammingGraph,
    max_size: usize,
    budget: u128,
) -> Result<Option<(usize, Vec<Vertex>)>, GraphError> {
    let n = g.vertex_count().ok_or(GraphError::TooLarge)? as usize;
    let max_size = max_size.min(n);
    let needed: u128 = (1..=max_size).map(|s| binomial(n as u128, s as u128)).sum();
    if needed > budget {
        return Err(GraphError::BudgetExceeded { needed, budget });
    }
    let all: Vec<Vertex> = g.vertices()?.collect();
    for s in 1..=max_size {
        if let Some(set) = first_resolving_subset(g, &all, s)? {
            return Ok(Some((s, set)));
        }
    }
    Ok(None)
}

/// First `size`-subset of `pool`, in lexicographic index order, that resolves.
pub fn first_resolving_subset(
    g: &HammingGraph,
    pool: &[Vertex],
    size: usize,
) -> Result<Option<Vec<Vertex>>, GraphError> {
    let n = pool.len();
    if size > n {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let set: Vec<Vertex> = idx.iter().map(|&i| pool[i].clone()).collect();
        if brute_force_is_resolving(g, &set)?.resolving {
            return Ok(Some(set));
        }
        // Next combination.
        let Some(pos) = (0..size).rev().find(|&p| idx[p] < n - size + p) else {
            return Ok(None);
        };
        idx[pos] += 1;
        for q in pos + 1..size {
            idx[q] = idx[q - 1] + 1;
        }
    }
}
