//! The r-uniform hypergraph data model and its canonical text format.
//!
//! Vertices are the integers `0..n`. Every edge is a strictly increasing
//! sequence of `r` distinct vertices, and the edge list is kept sorted
//! lexicographically with no duplicates, so equal hypergraphs serialize
//! to identical bytes.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::binom;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph from any iterator of edges, canonicalizing as it
    /// goes: vertices inside each edge are sorted, and the edge list is
    /// sorted lexicographically. Duplicate edges, repeated vertices inside
    /// an edge, wrong cardinalities, and out-of-range vertices are rejected.
    pub fn new(n: usize, r: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParams(format!("r >= 2 violated (r={r})")));
        }
        let mut canon: Vec<Vec<usize>> = Vec::new();
        for mut edge in edges {
            edge.sort_unstable();
            if edge.len() != r {
                return Err(Error::InvalidEdge {
                    reason: format!("expected {r} vertices, got {}", edge.len()),
                    edge,
                });
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge {
                    reason: "repeated vertex".into(),
                    edge,
                });
            }
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            canon.push(edge);
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                edge: w[0].clone(),
            });
        }
        Ok(Hypergraph { n, r, edges: canon })
    }

    /// The complete r-uniform hypergraph on `n` vertices. For `n < r` this
    /// is the hypergraph with `n` vertices and no edges.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParams(format!("r >= 2 violated (r={r})")));
        }
        let edges: Vec<Vec<usize>> = (0..n).combinations(r).collect();
        Ok(Hypergraph { n, r, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn has_edge(&self, edge: &[usize]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.edges.iter().filter(|e| e.contains(&v)).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Returns a copy with `edge` added. Adding an edge that is already
    /// present is an error: in maximality loops it signals a caller bug.
    pub fn add_edge(&self, edge: &[usize]) -> Result<Self> {
        let e = self.validate_edge(edge)?;
        match self.edges.binary_search(&e) {
            Ok(_) => Err(Error::DuplicateEdge { edge: e }),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, e);
                Ok(Hypergraph { n: self.n, r: self.r, edges })
            }
        }
    }

    /// Returns a copy with `edge` removed; removing a missing edge is an error.
    pub fn remove_edge(&self, edge: &[usize]) -> Result<Self> {
        let e = self.validate_edge(edge)?;
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                let mut edges = self.edges.clone();
                edges.remove(pos);
                Ok(Hypergraph { n: self.n, r: self.r, edges })
            }
            Err(_) => Err(Error::MissingEdge { edge: e }),
        }
    }

    fn validate_edge(&self, edge: &[usize]) -> Result<Vec<usize>> {
        let mut e = edge.to_vec();
        e.sort_unstable();
        if e.len() != self.r || e.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge {
                reason: format!("not an {}-subset", self.r),
                edge: e,
            });
        }
        if let Some(&v) = e.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(e)
    }

    /// The subhypergraph induced by the vertex set `s`, relabeled to
    /// `0..|s|` by rank. Returns the sorted vertex list of `s`, whose
    /// positions are the new identifiers (so it maps new -> old).
    pub fn induced(&self, s: &[usize]) -> Result<(Hypergraph, Vec<usize>)> {
        let mut ids: Vec<usize> = s.to_vec();
        ids.sort_unstable();
        ids.dedup();
        if let Some(&v) = ids.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut to_new = vec![usize::MAX; self.n];
        for (new, &old) in ids.iter().enumerate() {
            to_new[old] = new;
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| to_new[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| to_new[v]).collect())
            .collect();
        // Relabeling by rank preserves both orders, so this is canonical.
        Ok((
            Hypergraph {
                n: ids.len(),
                r: self.r,
                edges,
            },
            ids,
        ))
    }

    /// All r-subsets of the vertex set that are not edges, in lexicographic
    /// order: the edge set of the complement.
    pub fn non_edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.n)
            .combinations(self.r)
            .filter(move |c| self.edges.binary_search(c).is_err())
    }

    /// Connected components as sorted vertex lists, ordered by their
    /// smallest vertex. Isolated vertices form singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.n);
        for e in &self.edges {
            for w in e.windows(2) {
                dsu.union(w[0], w[1]);
            }
        }
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            by_root[dsu.find(v)].push(v);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Edge sets mirrored as vertex bitmasks; valid only for `n <= 64`,
    /// which every brute-force guard in this crate already enforces.
    pub(crate) fn edge_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.edges
            .iter()
            .map(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }

    /// Canonical text form: `n r m` on the first line, then one edge per
    /// line. Output is bit-exact for equal hypergraphs.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.r, self.edges.len());
        for e in &self.edges {
            out.push_str(&e.iter().join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text format. Blank lines and `#`-prefixed comment lines
    /// are ignored; everything else must follow the format exactly, with
    /// vertices inside an edge line in strictly increasing order.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges: Vec<Vec<usize>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_num = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected a non-negative integer, got {s:?}"),
                })
            };
            match header {
                None => {
                    if fields.len() != 3 {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("expected header `n r m`, got {line:?}"),
                        });
                    }
                    let n = parse_num(fields[0])?;
                    let r = parse_num(fields[1])?;
                    let m = parse_num(fields[2])?;
                    header = Some((n, r, m));
                }
                Some((n, r, m)) => {
                    if edges.len() == m {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("more than the declared {m} edge lines"),
                        });
                    }
                    if fields.len() != r {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("expected {r} vertices, got {}", fields.len()),
                        });
                    }
                    let edge: Vec<usize> =
                        fields.iter().map(|s| parse_num(s)).collect::<Result<_>>()?;
                    if edge.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "vertices must be strictly increasing".into(),
                        });
                    }
                    if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("vertex {v} out of range for n={n}"),
                        });
                    }
                    edges.push(edge);
                }
            }
        }
        let (n, r, m) = header.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing header line `n r m`".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("declared {m} edges but found {}", edges.len()),
            });
        }
        Hypergraph::new(n, r, edges)
    }
}

/// Number of r-subsets of an n-set, as a usize; used for complement sizes.
pub fn subset_count(n: usize, r: usize) -> Result<usize> {
    let c = binom(n as u64, r as u64)?;
    usize::try_from(c).map_err(|_| Error::overflow(format!("binom({n}, {r}) as usize")))
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
