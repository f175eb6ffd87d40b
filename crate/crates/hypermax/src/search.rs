//! Exhaustive enumeration of labeled k-edge-maximal hypergraphs at desk
//! scale, confronting the observed extremal sizes with the bound formulas.
//!
//! Candidates are all subsets of the possible edge set (guarded to at most
//! 2^24). Workers split the space by a leading-bit prefix of the inclusion
//! bitmask and share nothing; results are merged by partition index and
//! then ordered by increasing edge count, lexicographic within a count, so
//! summaries are byte-identical for any worker count.

use std::collections::BTreeMap;
use std::thread;

use crate::error::{Error, Result};
use crate::extremal::{is_k_edge_maximal, lower_bound, upper_bound};
use crate::hypergraph::Hypergraph;
use crate::params::Params;

#[derive(Debug, Clone)]
pub struct SearchLimits {
    /// Hard cap on the number of candidate edge sets.
    pub max_candidates: u64,
    /// Worker count; 1 means fully sequential.
    pub jobs: usize,
    /// Allow the sound minimum-degree pruning rule when it applies.
    pub prune: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_candidates: 1 << 24,
            jobs: 1,
            prune: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchSummary {
    pub params: Params,
    /// Total candidate edge sets enumerated (2^m).
    pub candidates: u64,
    pub maximal_count: u64,
    /// Edge count -> number of maximal hypergraphs of that size.
    pub histogram: BTreeMap<usize, u64>,
    pub min_size: Option<usize>,
    pub max_size: Option<usize>,
    pub lower_bound: u64,
    pub upper_bound: u64,
    /// The pruning rule applied, if any, stated with its soundness reason.
    pub pruning: Option<String>,
    /// First maximal hypergraph found per size, in stream order.
    pub examples: BTreeMap<usize, Hypergraph>,
}

/// Enumerates every labeled k-edge-maximal r-uniform hypergraph on `n`
/// vertices. Returns the summary and the full stream of maximal
/// hypergraphs, ordered by edge count then lexicographically.
pub fn enumerate_maximal(
    n: usize,
    k: usize,
    r: usize,
    limits: &SearchLimits,
) -> Result<(SearchSummary, Vec<Hypergraph>)> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k >= 2 violated (k={k})")));
    }
    let params = Params::new(n, k, r)?;
    if n < params.t {
        return Err(Error::InvalidParams(format!(
            "n >= t violated (n={n}, t={})",
            params.t
        )));
    }
    let universe = Hypergraph::complete(n, r)?;
    let m = universe.edge_count();
    if m > 24 {
        return Err(Error::guard(
            "enumerate_maximal",
            format!("C({n}, {r}) = {m} possible edges exceed the limit of 24"),
        ));
    }
    let total: u64 = 1 << m;
    if total > limits.max_candidates {
        return Err(Error::guard(
            "enumerate_maximal",
            format!(
                "{total} candidates exceed the configured limit {}",
                limits.max_candidates
            ),
        ));
    }

    let prune_active = limits.prune && params.forces_exact_connectivity();
    let pruning = prune_active.then(|| {
        format!(
            "skipped candidates with a vertex of degree below {k}: at these \
             parameters every certified hypergraph has edge-connectivity \
             exactly {k}, so its minimum degree is at least {k}"
        )
    });
    let vertex_masks = universe.edge_masks();
    let full: u64 = (1 << n) - 1;
    let scan = Scan {
        universe: universe.edges(),
        vertex_masks: &vertex_masks,
        full,
        n,
        r,
        k,
        prune: prune_active,
    };

    let jobs = limits.jobs.max(1);
    let bits = usize::BITS as usize - (jobs - 1).leading_zeros() as usize;
    let bits = if jobs == 1 { 0 } else { bits.min(m) };
    let partitions = 1usize << bits;
    let span = total >> bits;

    let mut per_partition: Vec<Vec<(u32, Hypergraph)>> = vec![Vec::new(); partitions];
    if partitions == 1 {
        per_partition[0] = scan.range(0, total);
    } else {
        let results = thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    let scan = &scan;
                    scope.spawn(move || {
                        let mut mine = Vec::new();
                        let mut p = w;
                        while p < partitions {
                            mine.push((p, scan.range(p as u64 * span, (p as u64 + 1) * span)));
                            p += jobs;
                        }
                        mine
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect::<Vec<_>>()
        });
        for (p, found) in results {
            per_partition[p] = found;
        }
    }

    let mut found: Vec<(u32, Hypergraph)> = per_partition.into_iter().flatten().collect();
    found.sort_by_cached_key(|(mask, _)| {
        let indices: Vec<u32> = (0..m as u32).filter(|i| mask >> i & 1 == 1).collect();
        (mask.count_ones(), indices)
    });

    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    let mut examples: BTreeMap<usize, Hypergraph> = BTreeMap::new();
    let mut stream = Vec::with_capacity(found.len());
    for (mask, h) in found {
        let size = mask.count_ones() as usize;
        *histogram.entry(size).or_insert(0) += 1;
        examples.entry(size).or_insert_with(|| h.clone());
        stream.push(h);
    }
    let summary = SearchSummary {
        params,
        candidates: total,
        maximal_count: stream.len() as u64,
        min_size: histogram.keys().next().copied(),
        max_size: histogram.keys().next_back().copied(),
        lower_bound: lower_bound(n, k, r)?,
        upper_bound: upper_bound(n, k, r)?,
        histogram,
        pruning,
        examples,
    };
    Ok((summary, stream))
}

struct Scan<'a> {
    universe: &'a [Vec<usize>],
    vertex_masks: &'a [u64],
    full: u64,
    n: usize,
    r: usize,
    k: usize,
    prune: bool,
}

impl Scan<'_> {
    fn range(&self, lo: u64, hi: u64) -> Vec<(u32, Hypergraph)> {
        (lo..hi)
            .filter_map(|mask| self.test(mask as u32).map(|h| (mask as u32, h)))
            .collect()
    }

    fn test(&self, mask: u32) -> Option<Hypergraph> {
        if self.prune && !self.degrees_at_least_k(mask) {
            return None;
        }
        if !self.spanning_connected(mask) {
            return None;
        }
        let edges: Vec<Vec<usize>> = self
            .universe
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, e)| e.clone())
            .collect();
        let h = Hypergraph::new(self.n, self.r, edges).expect("subset of the complete edge set");
        is_k_edge_maximal(&h, self.k).is_maximal().then_some(h)
    }

    fn degrees_at_least_k(&self, mask: u32) -> bool {
        (0..self.n).all(|v| {
            let deg = self
                .vertex_masks
                .iter()
                .enumerate()
                .filter(|(j, &vm)| mask >> j & 1 == 1 && vm >> v & 1 == 1)
                .count();
            deg >= self.k
        })
    }

    /// A candidate qualifies only if it is connected and covers every
    /// vertex; disconnected or non-spanning hypergraphs are never maximal
    /// because crossing non-edges can complete nothing.
    fn spanning_connected(&self, mask: u32) -> bool {
        let mut reached: u64 = 1;
        loop {
            let mut grew = false;
            for (j, &vm) in self.vertex_masks.iter().enumerate() {
                if mask >> j & 1 == 1 && reached & vm != 0 && vm & !reached != 0 {
                    reached |= vm;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        reached == self.full
    }
}

/// An (n, k, r) grid point for `extremal_scan`.
pub type GridPoint = (usize, usize, usize);

/// Runs `enumerate_maximal` over a grid of parameter points; per-point
/// failures are recorded and the scan continues.
pub fn extremal_scan(
    points: &[GridPoint],
    limits: &SearchLimits,
) -> (Vec<SearchSummary>, Vec<(GridPoint, Error)>) {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &(n, k, r) in points {
        match enumerate_maximal(n, k, r, limits) {
            Ok((summary, _)) => rows.push(summary),
            Err(e) => failures.push(((n, k, r), e)),
        }
    }
    (rows, failures)
}

/// CSV rendering of search summaries; empty min/max cells when no maximal
/// hypergraph was found.
pub fn csv_table(rows: &[SearchSummary]) -> String {
    let mut out = String::from("n,k,r,t,count,min_size,max_size,lower_bound,upper_bound\n");
    for s in rows {
        let opt = |o: Option<usize>| o.map(|v| v.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            s.params.n,
            s.params.k,
            s.params.r,
            s.params.t,
            s.maximal_count,
            opt(s.min_size),
            opt(s.max_size),
            s.lower_bound,
            s.upper_bound
        ));
    }
    out
}
