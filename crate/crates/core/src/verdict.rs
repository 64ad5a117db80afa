//! Verdicts shared by every resolvability checker.

use std::fmt;

use crate::hamgraph::Vertex;

/// A vector in {-1,0,1}^(a*k) whose length-`a` blocks are each zero or hold
/// exactly one +1 and one -1. These are the differences `X - Y` of two
/// vectorized one-hot encodings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleVector {
    a: usize,
    z: Vec<i8>,
}

impl AdmissibleVector {
    /// Returns `None` if `z` is not admissible for block size `a`.
    pub fn new(a: usize, z: Vec<i8>) -> Option<Self> {
        if a == 0 || !z.len().is_multiple_of(a) {
            return None;
        }
        let ok = z.chunks(a).all(|b| {
            let pos = b.iter().filter(|&&x| x == 1).count();
            let neg = b.iter().filter(|&&x| x == -1).count();
            let zero = b.iter().filter(|&&x| x == 0).count();
            zero == a || (pos == 1 && neg == 1 && zero == a - 2)
        });
        ok.then_some(Self { a, z })
    }

    pub fn block_size(&self) -> usize {
        self.a
    }

    pub fn values(&self) -> &[i8] {
        &self.z
    }

    pub fn is_zero(&self) -> bool {
        self.z.iter().all(|&x| x == 0)
    }

    /// Splits into the pair of vertices whose encodings differ by this vector.
    /// Zero blocks are filled with symbol 0.
    pub fn vertex_pair(&self) -> (Vertex, Vertex) {
        let mut x = Vec::with_capacity(self.z.len() / self.a);
        let mut y = Vec::with_capacity(self.z.len() / self.a);
        for b in self.z.chunks(self.a) {
            let plus = b.iter().position(|&v| v == 1).unwrap_or(0);
            let minus = b.iter().position(|&v| v == -1).unwrap_or(0);
            x.push(plus as u8);
            y.push(minus as u8);
        }
        (Vertex::new(x), Vertex::new(y))
    }
}

impl fmt::Display for AdmissibleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.z.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Evidence that a set does not resolve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Two distinct vertices with equal distance vectors.
    Pair(Vertex, Vertex),
    /// A nonzero admissible vector in the kernel of the one-hot matrix.
    Kernel(AdmissibleVector),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Groebner,
    BruteForce,
    Enumeration,
    Hypercube,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Groebner,
        Method::BruteForce,
        Method::Enumeration,
        Method::Hypercube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Groebner => "groebner",
            Method::BruteForce => "bruteforce",
            Method::Enumeration => "enumeration",
            Method::Hypercube => "hypercube",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}` (expected groebner, bruteforce, enumeration or hypercube)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvabilityVerdict {
    pub resolving: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl ResolvabilityVerdict {
    pub fn resolving(method: Method) -> Self {
        Self {
            resolving: true,
            witness: None,
            method,
        }
    }

    pub fn not_resolving(method: Method, witness: Option<Witness>) -> Self {
        Self {
            resolving: false,
            witness,
            method,
        }
    }
}
