//! Generators for the extremal families: the upper-bound family (complete
//! core plus attached vertices), the lower-bound family (complete blocks
//! along a tree joined by covering crossing edges), and the two
//! 1-edge-maximal families.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::params::{binom, Params};

/// A labeled tree on vertices `0..s`, stored as canonical sorted pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeSpec {
    pub s: usize,
    pub edges: Vec<(usize, usize)>,
}

impl TreeSpec {
    pub fn new(s: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if s < 1 {
            return Err(Error::InvalidParams("s >= 1 violated (s=0)".into()));
        }
        if edges.len() != s - 1 {
            return Err(Error::InvalidParams(format!(
                "a tree on {s} vertices needs {} edges, got {}",
                s - 1,
                edges.len()
            )));
        }
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParams(format!("loop edge ({a}, {b})")));
            }
            if a >= s || b >= s {
                return Err(Error::InvalidParams(format!(
                    "edge ({a}, {b}) out of range for s={s}"
                )));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams("repeated tree edge".into()));
        }
        // s-1 distinct edges and connectivity together rule out cycles.
        let mut parent: Vec<usize> = (0..s).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            if parent[v] != v {
                let root = find(parent, parent[v]);
                parent[v] = root;
            }
            parent[v]
        }
        for &(a, b) in &canon {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::InvalidParams(format!("edge ({a}, {b}) closes a cycle")));
            }
            parent[ra] = rb;
        }
        Ok(TreeSpec { s, edges: canon })
    }

    /// The path 0-1-...-(s-1).
    pub fn path(s: usize) -> Result<Self> {
        TreeSpec::new(s, (1..s).map(|v| (v - 1, v)).collect())
    }

    /// The star with center 0.
    pub fn star(s: usize) -> Result<Self> {
        TreeSpec::new(s, (1..s).map(|v| (0, v)).collect())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.s);
        for &(a, b) in &self.edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    /// Parses the tree format: a line with `s`, then `s - 1` lines `a b`.
    /// Blank and `#`-prefixed lines are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut s: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_num = |v: &str| -> Result<usize> {
                v.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected a non-negative integer, got {v:?}"),
                })
            };
            match s {
                None => {
                    if fields.len() != 1 {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("expected the vertex count, got {line:?}"),
                        });
                    }
                    s = Some(parse_num(fields[0])?);
                }
                Some(_) => {
                    if fields.len() != 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("expected `a b`, got {line:?}"),
                        });
                    }
                    edges.push((parse_num(fields[0])?, parse_num(fields[1])?));
                }
            }
        }
        let s = s.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing vertex count line".into(),
        })?;
        TreeSpec::new(s, edges)
    }
}

/// Uniform random labeled tree, decoded from a random Pruefer sequence.
pub fn random_tree(s: usize, seed: u64) -> Result<TreeSpec> {
    if s < 1 {
        return Err(Error::InvalidParams("s >= 1 violated (s=0)".into()));
    }
    if s <= 2 {
        return TreeSpec::new(s, if s == 2 { vec![(0, 1)] } else { vec![] });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..s - 2).map(|_| rng.gen_range(0..s)).collect();
    let mut degree = vec![1usize; s];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..s).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(s - 1);
    for &v in &seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut last = leaves.into_iter();
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a, b));
    TreeSpec::new(s, edges)
}

/// How a generator resolves the free choices the definitions leave open.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildStrategy {
    /// Fully deterministic: always the lexicographically smallest choice.
    Lexicographic,
    /// Reproducible pseudo-random choices from the given seed.
    Seeded(u64),
}

impl BuildStrategy {
    fn rng(&self) -> Option<ChaCha8Rng> {
        match self {
            BuildStrategy::Lexicographic => None,
            BuildStrategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        }
    }
}

/// Upper-bound family member: a complete core on `t` vertices, then each
/// new vertex `i` arrives with `k` distinct edges containing `i` and
/// `r - 1` earlier vertices. Always has `binom(t, r) + (n - t) k` edges.
pub fn build_m(n: usize, k: usize, r: usize, strategy: BuildStrategy) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k >= 2 violated (k={k})")));
    }
    let p = Params::new(n, k, r)?;
    if n < p.t {
        return Err(Error::InvalidParams(format!(
            "n >= t violated (n={n}, t={})",
            p.t
        )));
    }
    let mut edges = Hypergraph::complete(p.t, r)?.edges().to_vec();
    let mut rng = strategy.rng();
    for i in p.t..n {
        // Feasible because C(i, r-1) >= C(t, r-1) > k.
        let chosen: Vec<Vec<usize>> = match rng.as_mut() {
            None => (0..i).combinations(r - 1).take(k).collect(),
            Some(rng) => {
                let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
                while set.len() < k {
                    let mut sub = rand::seq::index::sample(rng, i, r - 1).into_vec();
                    sub.sort_unstable();
                    set.insert(sub);
                }
                set.into_iter().collect()
            }
        };
        if chosen.len() != k {
            return Err(Error::Internal(format!(
                "only {} attachment edges available for vertex {i}",
                chosen.len()
            )));
        }
        for mut sub in chosen {
            sub.push(i);
            edges.push(sub);
        }
    }
    Hypergraph::new(n, r, edges)
}

/// Lower-bound family member for a tree `T`: one complete block of `t`
/// vertices per tree vertex, and for every tree edge a group of `k`
/// crossing edges that jointly cover both blocks. Returns the hypergraph
/// and the forced `k = binom(t-1, r-1)`.
pub fn build_nt(
    t: usize,
    r: usize,
    tree: &TreeSpec,
    strategy: BuildStrategy,
) -> Result<(Hypergraph, usize)> {
    if r <= 2 {
        return Err(Error::InvalidParams(format!("r > 2 violated (r={r})")));
    }
    if t <= r {
        return Err(Error::InvalidParams(format!("t > r violated (t={t}, r={r})")));
    }
    let k = usize::try_from(binom(t as u64 - 1, r as u64 - 1)?)
        .map_err(|_| Error::overflow(format!("binom({}, {})", t - 1, r - 1)))?;
    if k.checked_mul(r).is_none_or(|kr| kr < 2 * t) {
        return Err(Error::InvalidParams(format!(
            "k*r >= 2*t violated (k={k}, r={r}, t={t})"
        )));
    }
    let n = tree.s * t;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for block in 0..tree.s {
        for e in Hypergraph::complete(t, r)?.edges() {
            edges.push(e.iter().map(|&v| v + block * t).collect());
        }
    }
    let mut rng = strategy.rng();
    for &(a, b) in &tree.edges {
        edges.extend(crossing_group(t, r, k, a * t, b * t, rng.as_mut())?);
    }
    Ok((Hypergraph::new(n, r, edges)?, k))
}

/// Builds one group of `k` crossing edges between the blocks starting at
/// `off_a` and `off_b`, covering all `2t` block vertices.
///
/// The block vertices are laid out in an alternating cyclic order and split
/// into `k` consecutive chunks (so chunks of two or more already touch both
/// blocks), then each chunk is completed to an r-set that crosses and is
/// distinct from the edges built so far. With `k*r >= 2*t` the chunks fit
/// inside r-sets, and crossing completions always outnumber the at most
/// `k - 1` earlier edges, so the scan cannot run dry.
fn crossing_group(
    t: usize,
    r: usize,
    k: usize,
    off_a: usize,
    off_b: usize,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<Vec<Vec<usize>>> {
    let mut order_a: Vec<usize> = (off_a..off_a + t).collect();
    let mut order_b: Vec<usize> = (off_b..off_b + t).collect();
    let mut rng = rng;
    if let Some(rng) = rng.as_mut() {
        use rand::seq::SliceRandom;
        order_a.shuffle(*rng);
        order_b.shuffle(*rng);
    }
    let cyc: Vec<usize> = order_a
        .iter()
        .zip(order_b.iter())
        .flat_map(|(&a, &b)| [a, b])
        .collect();
    let all: Vec<usize> = cyc.iter().copied().sorted().collect();
    let in_block = |v: usize, off: usize| v >= off && v < off + t;

    let base = cyc.len() / k;
    let rem = cyc.len() % k;
    let mut used: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut group: Vec<Vec<usize>> = Vec::with_capacity(k);
    let mut pos = 0;
    for c in 0..k {
        let take = base + usize::from(c < rem);
        let mut chunk: Vec<usize> = cyc[pos..pos + take].to_vec();
        pos += take;
        chunk.sort_unstable();
        let pool: Vec<usize> = all.iter().copied().filter(|v| !chunk.contains(v)).collect();
        let valid = |completion: &[usize]| -> Option<Vec<usize>> {
            let mut edge = chunk.clone();
            edge.extend_from_slice(completion);
            edge.sort_unstable();
            let crosses = edge.iter().any(|&v| in_block(v, off_a))
                && edge.iter().any(|&v| in_block(v, off_b));
            (crosses && !used.contains(&edge)).then_some(edge)
        };
        let need = r - chunk.len();
        let edge = match rng.as_mut() {
            None => pool.iter().copied().combinations(need).find_map(|c| valid(&c)),
            Some(rng) => {
                let candidates: Vec<Vec<usize>> = pool
                    .iter()
                    .copied()
                    .combinations(need)
                    .filter_map(|c| valid(&c))
                    .collect();
                (!candidates.is_empty())
                    .then(|| candidates[rng.gen_range(0..candidates.len())].clone())
            }
        };
        let edge = edge.ok_or_else(|| {
            Error::Internal(format!(
                "no crossing completion for chunk {chunk:?} between blocks {off_a} and {off_b}"
            ))
        })?;
        used.insert(edge.clone());
        group.push(edge);
    }

    // Re-verify the group contract before accepting it.
    let covered: BTreeSet<usize> = group.iter().flatten().copied().collect();
    let crossing_ok = group.iter().all(|e| {
        e.len() == r
            && e.iter().any(|&v| in_block(v, off_a))
            && e.iter().any(|&v| in_block(v, off_b))
            && e.iter().all(|&v| in_block(v, off_a) || in_block(v, off_b))
    });
    if group.len() != k || covered.len() != 2 * t || !crossing_ok {
        return Err(Error::Internal(format!(
            "crossing group between blocks {off_a} and {off_b} violates its contract"
        )));
    }
    Ok(group)
}

/// The 1-edge-maximal family with a shared (r-1)-core: edges
/// `{0, ..., r-2, v}` for every remaining vertex `v`. Size `n - r + 1`.
pub fn build_one_max_star(n: usize, r: usize) -> Result<Hypergraph> {
    check_one_max_params(n, r)?;
    let core: Vec<usize> = (0..r - 1).collect();
    let edges: Vec<Vec<usize>> = (r - 1..n)
        .map(|v| {
            let mut e = core.clone();
            e.push(v);
            e
        })
        .collect();
    Hypergraph::new(n, r, edges)
}

/// The 1-edge-maximal family of minimum size: consecutive (r-1)-blocks of
/// `0..n-1` each joined to the hub `n-1`, the last block right-aligned.
/// Size `ceil((n-1) / (r-1))`.
pub fn build_one_max_partition(n: usize, r: usize) -> Result<Hypergraph> {
    check_one_max_params(n, r)?;
    let hub = n - 1;
    let s = (n + r - 3) / (r - 1);
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(s);
    for i in 1..s {
        let mut e: Vec<usize> = ((i - 1) * (r - 1)..i * (r - 1)).collect();
        e.push(hub);
        edges.push(e);
    }
    let mut last: Vec<usize> = (n - r..n - 1).collect();
    last.push(hub);
    edges.push(last);
    Hypergraph::new(n, r, edges)
}

fn check_one_max_params(n: usize, r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParams(format!("r >= 2 violated (r={r})")));
    }
    if n < r {
        return Err(Error::InvalidParams(format!("n >= r violated (n={n}, r={r})")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{edge_connectivity, is_super_edge_connected, strength};
    use crate::extremal::{is_k_edge_maximal, lower_bound, upper_bound};

    #[test]
    fn tree_spec_validation() {
        assert!(TreeSpec::new(3, vec![(0, 1), (1, 2)]).is_ok());
        assert!(TreeSpec::new(3, vec![(0, 1)]).is_err());
        assert!(TreeSpec::new(3, vec![(0, 1), (1, 1)]).is_err());
        assert!(TreeSpec::new(3, vec![(0, 1), (0, 3)]).is_err());
        assert!(TreeSpec::new(4, vec![(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(TreeSpec::new(0, vec![]).is_err());
        // Canonicalization: pair order and list order do not matter.
        let a = TreeSpec::new(3, vec![(2, 1), (1, 0)]).unwrap();
        let b = TreeSpec::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tree_text_round_trip() {
        let t = TreeSpec::star(4).unwrap();
        assert_eq!(t.to_text(), "4\n0 1\n0 2\n0 3\n");
        assert_eq!(TreeSpec::parse_text(&t.to_text()).unwrap(), t);
        assert!(TreeSpec::parse_text("3\n0 1\n").is_err());
        assert!(matches!(
            TreeSpec::parse_text("3\n0 1\nx 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn random_tree_contract() {
        assert_eq!(random_tree(1, 0).unwrap().edges, vec![]);
        assert_eq!(random_tree(2, 0).unwrap().edges, vec![(0, 1)]);
        assert_eq!(random_tree(9, 42).unwrap(), random_tree(9, 42).unwrap());
        // All three labeled trees on 3 vertices appear across seeds.
        let mut seen = BTreeSet::new();
        for seed in 0..60 {
            seen.insert(random_tree(3, seed).unwrap().edges);
        }
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn build_m_examples() {
        // n = t collapses to the complete core.
        assert_eq!(
            build_m(4, 3, 3, BuildStrategy::Lexicographic).unwrap(),
            Hypergraph::complete(4, 3).unwrap()
        );
        let h = build_m(7, 3, 3, BuildStrategy::Lexicographic).unwrap();
        assert_eq!(h.edge_count(), 13);
        assert_eq!(h.edge_count() as u64, upper_bound(7, 3, 3).unwrap());

        let g = build_m(6, 2, 2, BuildStrategy::Lexicographic).unwrap();
        assert!(is_k_edge_maximal(&g, 2).is_maximal());
        assert_eq!(g.min_degree(), 2);
        assert!(is_super_edge_connected(&g).unwrap().0);
        assert_eq!(edge_connectivity(&g).unwrap().0, 2);
        assert_eq!(strength(&g).0, 2);

        assert!(build_m(3, 3, 3, BuildStrategy::Lexicographic).is_err());
        assert!(build_m(6, 1, 3, BuildStrategy::Lexicographic).is_err());
    }

    #[test]
    fn build_m_seeded_reproducible_and_valid() {
        let a = build_m(7, 3, 3, BuildStrategy::Seeded(5)).unwrap();
        let b = build_m(7, 3, 3, BuildStrategy::Seeded(5)).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.edge_count() as u64, upper_bound(7, 3, 3).unwrap());
        assert!(is_k_edge_maximal(&a, 3).is_maximal());
    }

    #[test]
    fn build_nt_example_counts() {
        let (h, k) = build_nt(4, 3, &TreeSpec::path(2).unwrap(), BuildStrategy::Lexicographic)
            .unwrap();
        assert_eq!(k, 3);
        assert_eq!(h.n(), 8);
        assert_eq!(h.edge_count(), 11);
        assert_eq!(h.edge_count() as u64, lower_bound(8, 3, 3).unwrap());
        assert!(h.min_degree() > k);
    }

    #[test]
    fn build_nt_groups_cover_and_cross() {
        for tree in [TreeSpec::path(3).unwrap(), TreeSpec::star(3).unwrap()] {
            for strategy in [BuildStrategy::Lexicographic, BuildStrategy::Seeded(7)] {
                let (h, k) = build_nt(4, 3, &tree, strategy).unwrap();
                for &(a, b) in &tree.edges {
                    let block = |i: usize| (i * 4..(i + 1) * 4).collect::<BTreeSet<_>>();
                    let (ba, bb) = (block(a), block(b));
                    let group: Vec<&Vec<usize>> = h
                        .edges()
                        .iter()
                        .filter(|e| {
                            e.iter().any(|v| ba.contains(v)) && e.iter().any(|v| bb.contains(v))
                        })
                        .collect();
                    assert_eq!(group.len(), k, "tree edge ({a}, {b})");
                    let covered: BTreeSet<usize> =
                        group.iter().flat_map(|e| e.iter().copied()).collect();
                    assert_eq!(covered.len(), 8, "every block vertex is covered");
                }
            }
        }
    }

    #[test]
    fn build_nt_seeded_reproducible() {
        let tree = TreeSpec::path(3).unwrap();
        let (a, _) = build_nt(4, 3, &tree, BuildStrategy::Seeded(9)).unwrap();
        let (b, _) = build_nt(4, 3, &tree, BuildStrategy::Seeded(9)).unwrap();
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn build_nt_rejects_bad_params_by_name() {
        let tree = TreeSpec::path(2).unwrap();
        let err = build_nt(4, 2, &tree, BuildStrategy::Lexicographic).unwrap_err();
        assert!(err.to_string().contains("r > 2"), "{err}");
        let err = build_nt(3, 3, &tree, BuildStrategy::Lexicographic).unwrap_err();
        assert!(err.to_string().contains("t > r"), "{err}");
    }

    #[test]
    fn one_max_star_examples() {
        let h = build_one_max_star(5, 3).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]);
        for (n, r) in [(5, 3), (7, 3), (6, 4), (4, 4)] {
            let h = build_one_max_star(n, r).unwrap();
            assert_eq!(h.edge_count(), n - r + 1);
        }
        assert!(build_one_max_star(2, 3).is_err());
    }

    #[test]
    fn one_max_partition_examples() {
        let h = build_one_max_partition(5, 3).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 4], vec![2, 3, 4]]);
        let h = build_one_max_partition(6, 3).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 5], vec![2, 3, 5], vec![3, 4, 5]]);
        for (n, r) in [(5, 3), (6, 3), (9, 4), (4, 4), (2, 2)] {
            let h = build_one_max_partition(n, r).unwrap();
            assert_eq!(h.edge_count(), (n + r - 3) / (r - 1));
        }
    }

    #[test]
    fn one_max_star_certifies_at_small_sizes() {
        for n in 3..=6 {
            let star = build_one_max_star(n, 3).unwrap();
            assert!(is_k_edge_maximal(&star, 1).is_maximal(), "star n={n}");
        }
        // The overlapping two-edge case of the other family.
        let part = build_one_max_partition(4, 3).unwrap();
        assert!(is_k_edge_maximal(&part, 1).is_maximal());
    }

    #[test]
    fn disjoint_petal_sunflower_is_not_one_edge_maximal() {
        // {014, 234} shares only the hub between its petals: adding 012
        // yields no subhypergraph of edge-connectivity 2, because every
        // candidate keeps a degree-1 vertex. The certifier must find that
        // addable edge rather than certify the hypergraph.
        let part = build_one_max_partition(5, 3).unwrap();
        let report = is_k_edge_maximal(&part, 1);
        assert!(!report.is_maximal());
        match report.witness.unwrap() {
            crate::extremal::Witness::AddableNonEdge { edge, strength_after } => {
                assert_eq!(edge, vec![0, 1, 2]);
                assert_eq!(strength_after, 1);
                let grown = part.add_edge(&edge).unwrap();
                assert_eq!(
                    crate::connectivity::strength_bruteforce(&grown).unwrap(),
                    1
                );
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }
}
