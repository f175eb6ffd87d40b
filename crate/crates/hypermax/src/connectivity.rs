//! Exact cuts, edge-connectivity, and strength of uniform hypergraphs.
//!
//! Edge-connectivity is computed by unit-capacity max-flow on the incidence
//! structure: every hyperedge becomes a capacity-1 node pair, vertices are
//! uncuttable. Strength comes from a recursive min-cut decomposition, and
//! both have literal brute-force counterparts used as oracles.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::hypergraph::Hypergraph;

/// A vertex subset together with the edges crossing to its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub side: Vec<usize>,
    pub crossing: Vec<Vec<usize>>,
    pub weight: usize,
}

impl Cut {
    fn new(side: Vec<usize>, crossing: Vec<Vec<usize>>) -> Self {
        let weight = crossing.len();
        Cut {
            side,
            crossing,
            weight,
        }
    }
}

/// One node of the recursive min-cut decomposition: the vertex subset in
/// original identifiers, the edge-connectivity of the induced subhypergraph,
/// the chosen minimum cut, and one child per component left after removing
/// the cut edges. The children's vertex sets partition the node's subset.
#[derive(Debug, Clone, Serialize)]
pub struct StrengthTree {
    pub vertices: Vec<usize>,
    pub kappa: usize,
    pub cut: Option<Cut>,
    pub children: Vec<StrengthTree>,
}

impl StrengthTree {
    /// Maximum `kappa` over this node and all descendants.
    pub fn strength(&self) -> usize {
        self.children
            .iter()
            .map(StrengthTree::strength)
            .fold(self.kappa, usize::max)
    }

    /// First node in preorder whose `kappa` satisfies the predicate.
    pub fn find(&self, pred: &dyn Fn(usize) -> bool) -> Option<&StrengthTree> {
        if pred(self.kappa) {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(pred))
    }

    /// Indented text outline, one node per line.
    pub fn to_outline(&self) -> String {
        let mut out = String::new();
        self.write_outline(0, &mut out);
        out
    }

    fn write_outline(&self, depth: usize, out: &mut String) {
        let ids = self
            .vertices
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&"  ".repeat(depth));
        out.push_str(&format!("[{ids}] kappa'={}", self.kappa));
        if let Some(cut) = &self.cut {
            let side = cut
                .side
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let crossing = cut
                .crossing
                .iter()
                .map(|e| e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join(" | ");
            out.push_str(&format!(" side=[{side}] crossing={{{crossing}}}"));
        }
        out.push('\n');
        for child in &self.children {
            child.write_outline(depth + 1, out);
        }
    }
}

/// Number of edges of `h` meeting both `x` and its complement. Vertices of
/// `x` outside the vertex range are ignored; the empty and full subsets
/// have cut degree 0.
pub fn cut_degree(h: &Hypergraph, x: &[usize]) -> usize {
    let mut inside = vec![false; h.n()];
    for &v in x.iter().filter(|&&v| v < h.n()) {
        inside[v] = true;
    }
    h.edges()
        .iter()
        .filter(|e| {
            let hits = e.iter().filter(|&&v| inside[v]).count();
            hits > 0 && hits < e.len()
        })
        .count()
}

/// The full cut witness for the subset `x`.
pub fn cut_of(h: &Hypergraph, x: &[usize]) -> Cut {
    let mut inside = vec![false; h.n()];
    let mut side: Vec<usize> = x.iter().copied().filter(|&v| v < h.n()).collect();
    side.sort_unstable();
    side.dedup();
    for &v in &side {
        inside[v] = true;
    }
    let crossing: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .filter(|e| {
            let hits = e.iter().filter(|&&v| inside[v]).count();
            hits > 0 && hits < e.len()
        })
        .cloned()
        .collect();
    Cut::new(side, crossing)
}

/// Max-flow network: vertex nodes `0..n`, then an (in, out) node pair per
/// hyperedge with a unit arc between them.
fn incidence_network(h: &Hypergraph) -> FlowNetwork {
    let n = h.n();
    let mut net = FlowNetwork::new(n + 2 * h.edge_count());
    for (j, e) in h.edges().iter().enumerate() {
        let e_in = n + 2 * j;
        let e_out = e_in + 1;
        net.add_arc(e_in, e_out, 1);
        for &v in e {
            net.add_infinite_arc(v, e_in);
            net.add_infinite_arc(e_out, v);
        }
    }
    net
}

fn min_cut_between(h: &Hypergraph, s: usize, t: usize) -> (usize, Vec<usize>) {
    let mut net = incidence_network(h);
    let value = net.max_flow(s, t) as usize;
    let reach = net.residual_reachable(s);
    let side: Vec<usize> = (0..h.n()).filter(|&v| reach[v]).collect();
    debug_assert!(!reach[t]);
    (value, side)
}

/// Minimum number of edges whose deletion separates `s` from `t`.
pub fn local_edge_connectivity(h: &Hypergraph, s: usize, t: usize) -> Result<usize> {
    for v in [s, t] {
        if v >= h.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: h.n() });
        }
    }
    if s == t {
        return Err(Error::InvalidParams(format!("s != t violated (s=t={s})")));
    }
    Ok(min_cut_between(h, s, t).0)
}

/// Exact edge-connectivity with a minimizing cut witness: the minimum over
/// all targets of the local edge-connectivity from vertex 0, taking the
/// first minimizer in increasing target order.
pub fn edge_connectivity(h: &Hypergraph) -> Result<(usize, Cut)> {
    if h.n() < 2 {
        return Err(Error::InvalidParams(format!(
            "edge-connectivity needs at least 2 vertices (n={})",
            h.n()
        )));
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for t in 1..h.n() {
        let (value, side) = min_cut_between(h, 0, t);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            let done = value == 0;
            best = Some((value, side));
            if done {
                break;
            }
        }
    }
    let (kappa, side) = best.expect("n >= 2 guarantees at least one target");
    let cut = cut_of(h, &side);
    debug_assert_eq!(cut.weight, kappa);
    Ok((kappa, cut))
}

/// Literal evaluation of the edge-connectivity definition: the minimum cut
/// degree over all nonempty proper subsets containing vertex 0.
pub fn edge_connectivity_bruteforce(h: &Hypergraph) -> Result<usize> {
    let n = h.n();
    if !(2..=20).contains(&n) {
        return Err(Error::guard(
            "edge_connectivity_bruteforce",
            format!("2 <= n <= 20 violated (n={n})"),
        ));
    }
    let masks = h.edge_masks();
    let full: u64 = (1 << n) - 1;
    let mut kappa = usize::MAX;
    for sub in 0..(1u64 << (n - 1)) {
        let x = (sub << 1) | 1;
        if x == full {
            continue;
        }
        let weight = masks
            .iter()
            .filter(|&&m| m & x != 0 && m & !x & full != 0)
            .count();
        kappa = kappa.min(weight);
    }
    Ok(kappa)
}

/// Strength (the maximum edge-connectivity over all subhypergraphs) with
/// its decomposition certificate.
///
/// Recursion: take a minimum cut, delete its crossing edges, recurse into
/// each remaining component, and return the maximum of the cut value and
/// the children. A subhypergraph more connected than the cut cannot have
/// vertices on both of its sides, so nothing is lost by splitting there.
pub fn strength(h: &Hypergraph) -> (usize, StrengthTree) {
    let tree = decompose(h, (0..h.n()).collect());
    (tree.strength(), tree)
}

fn decompose(h: &Hypergraph, ids: Vec<usize>) -> StrengthTree {
    debug_assert_eq!(h.n(), ids.len());
    if h.n() <= 1 {
        return StrengthTree {
            vertices: ids,
            kappa: 0,
            cut: None,
            children: Vec::new(),
        };
    }
    let (kappa, cut) = edge_connectivity(h).expect("n >= 2");
    let crossing: BTreeSet<&Vec<usize>> = cut.crossing.iter().collect();
    let remaining: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .filter(|e| !crossing.contains(e))
        .cloned()
        .collect();
    let stripped = Hypergraph::new(h.n(), h.r(), remaining).expect("subset of valid edges");
    let children: Vec<StrengthTree> = stripped
        .components()
        .iter()
        .map(|comp| {
            let (sub, local) = h.induced(comp).expect("component within range");
            let child_ids: Vec<usize> = local.iter().map(|&v| ids[v]).collect();
            decompose(&sub, child_ids)
        })
        .collect();
    let cut = Cut::new(
        cut.side.iter().map(|&v| ids[v]).collect(),
        cut.crossing
            .iter()
            .map(|e| e.iter().map(|&v| ids[v]).collect())
            .collect(),
    );
    StrengthTree {
        vertices: ids,
        kappa,
        cut: Some(cut),
        children,
    }
}

/// Literal strength: maximum brute-force edge-connectivity over all induced
/// subhypergraphs on at least two vertices. Induced subhypergraphs suffice
/// because adding edges never decreases edge-connectivity.
pub fn strength_bruteforce(h: &Hypergraph) -> Result<usize> {
    let n = h.n();
    if n > 12 {
        return Err(Error::guard(
            "strength_bruteforce",
            format!("n <= 12 violated (n={n})"),
        ));
    }
    let mut best = 0usize;
    for s_mask in 0..(1u64 << n) {
        if s_mask.count_ones() < 2 {
            continue;
        }
        let subset: Vec<usize> = (0..n).filter(|&v| s_mask >> v & 1 == 1).collect();
        let (sub, _) = h.induced(&subset)?;
        best = best.max(edge_connectivity_bruteforce(&sub)?);
    }
    Ok(best)
}

/// Checks whether every minimum edge-cut is peripheral, i.e. equals the set
/// of edges at a single vertex. Exhaustive over all subsets, exact for
/// `2 <= n <= 20`; returns the first non-peripheral minimum cut otherwise.
pub fn is_super_edge_connected(h: &Hypergraph) -> Result<(bool, Option<Cut>)> {
    let n = h.n();
    if !(2..=20).contains(&n) {
        return Err(Error::guard(
            "is_super_edge_connected",
            format!("2 <= n <= 20 violated (n={n})"),
        ));
    }
    let masks = h.edge_masks();
    let full: u64 = (1 << n) - 1;
    let incident: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            masks
                .iter()
                .enumerate()
                .filter(|(_, &m)| m >> v & 1 == 1)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let kappa = edge_connectivity_bruteforce(h)?;
    for sub in 0..(1u64 << (n - 1)) {
        let x = (sub << 1) | 1;
        if x == full {
            continue;
        }
        let crossing: Vec<usize> = masks
            .iter()
            .enumerate()
            .filter(|(_, &m)| m & x != 0 && m & !x & full != 0)
            .map(|(j, _)| j)
            .collect();
        if crossing.len() != kappa {
            continue;
        }
        let peripheral = incident.contains(&crossing);
        if !peripheral {
            let side: Vec<usize> = (0..n).filter(|&v| x >> v & 1 == 1).collect();
            let crossing_edges = crossing.iter().map(|&j| h.edges()[j].clone()).collect();
            return Ok((false, Some(Cut::new(side, crossing_edges))));
        }
    }
    Ok((true, None))
}
