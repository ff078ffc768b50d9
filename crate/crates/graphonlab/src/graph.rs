use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite simple graph: a vertex count and a set of unordered edges.
///
/// Edges are stored as `(i, j)` with `i < j`, sorted lexicographically, so
/// two graphs with the same edge set always compare and serialize equal.
/// The same type plays both roles in this crate: pattern graph for density
/// computations and template graph for samplings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph from a vertex count and an edge list, normalizing
    /// endpoint order. Rejects loops, duplicate edges, and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::BadEdge { u, v, n });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            let (u, v) = normalized
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0])
                .unwrap();
            return Err(Error::BadEdge { u, v, n });
        }
        Ok(SimpleGraph { n, edges: normalized })
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        SimpleGraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// bijection on `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::NotAPermutation { q: self.n });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::NotAPermutation { q: self.n });
            }
            seen[p] = true;
        }
        SimpleGraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Same edges, `extra` additional isolated vertices.
    pub fn with_isolated_vertices(&self, extra: usize) -> Self {
        SimpleGraph {
            n: self.n + extra,
            edges: self.edges.clone(),
        }
    }
}

/// Text format: first line `n m`, then `m` lines `i j` with 0-based
/// endpoints.
impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad integer {t:?} in graph")))
            })
            .collect::<Result<Vec<usize>>>()?;
        if tokens.len() < 2 {
            return Err(Error::Parse("graph header \"n m\" missing".into()));
        }
        let (n, m) = (tokens[0], tokens[1]);
        if tokens.len() != 2 + 2 * m {
            return Err(Error::Parse(format!(
                "expected {} edge endpoints after \"n m\", found {}",
                2 * m,
                tokens.len() - 2
            )));
        }
        let edges = tokens[2..].chunks_exact(2).map(|e| (e[0], e[1]));
        SimpleGraph::new(n, edges)
    }
}
