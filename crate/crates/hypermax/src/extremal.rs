//! Size bounds for k-edge-maximal hypergraphs, the maximality certifier,
//! and structural audits of certified instances.

use serde::Serialize;

use crate::connectivity::{edge_connectivity, strength};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::params::{binom, Params};

/// Largest possible edge count of a k-edge-maximal r-uniform hypergraph on
/// n vertices: `binom(t, r) + (n - t) * k` with `t = t(k, r)`.
pub fn upper_bound(n: usize, k: usize, r: usize) -> Result<u64> {
    let p = bound_params(n, k, r)?;
    let core = binom(p.t as u64, r as u64)?;
    ((n - p.t) as u64)
        .checked_mul(k as u64)
        .and_then(|attached| core.checked_add(attached))
        .ok_or_else(|| Error::overflow(format!("upper_bound({n}, {k}, {r})")))
}

/// Smallest possible edge count: `(n-1)k - ((t-1)k - binom(t, r)) * floor(n/t)`.
pub fn lower_bound(n: usize, k: usize, r: usize) -> Result<u64> {
    let p = bound_params(n, k, r)?;
    let core = binom(p.t as u64, r as u64)? as i128;
    let (n, k, t) = (n as i128, k as i128, p.t as i128);
    let deficit = (t - 1) * k - core;
    let value = (n - 1) * k - deficit * (n / t);
    u64::try_from(value).map_err(|_| Error::overflow(format!("lower_bound({n}, {k}, {r})")))
}

fn bound_params(n: usize, k: usize, r: usize) -> Result<Params> {
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
    Ok(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Maximal,
    StrengthExceedsK,
    AddableNonEdge,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Maximal => "maximal",
            Verdict::StrengthExceedsK => "strength_exceeds_k",
            Verdict::AddableNonEdge => "addable_non_edge",
        }
    }
}

/// Witness for a failed maximality check; re-checkable against the
/// definition it violates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A vertex subset whose induced subhypergraph has edge-connectivity
    /// above `k`.
    StrengthExceedsK { subset: Vec<usize>, kappa: usize },
    /// A non-edge whose addition still leaves every subhypergraph at
    /// edge-connectivity `k` or below.
    AddableNonEdge { edge: Vec<usize>, strength_after: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalityReport {
    pub k: usize,
    pub strength_value: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl MaximalityReport {
    pub fn is_maximal(&self) -> bool {
        self.verdict == Verdict::Maximal
    }
}

/// Certifies k-edge-maximality: the strength must not exceed `k`, and
/// adding any missing r-subset must push some subhypergraph past `k`.
/// Non-edges are scanned in lexicographic order and the first violation
/// wins; a strength violation is reported before any non-edge is tried.
pub fn is_k_edge_maximal(h: &Hypergraph, k: usize) -> MaximalityReport {
    let (value, tree) = strength(h);
    if value > k {
        let node = tree
            .find(&|kappa| kappa > k)
            .expect("some node attains the strength");
        return MaximalityReport {
            k,
            strength_value: value,
            verdict: Verdict::StrengthExceedsK,
            witness: Some(Witness::StrengthExceedsK {
                subset: node.vertices.clone(),
                kappa: node.kappa,
            }),
        };
    }
    for e in h.non_edges() {
        let grown = h.add_edge(&e).expect("non-edge is addable");
        let (after, _) = strength(&grown);
        if after <= k {
            return MaximalityReport {
                k,
                strength_value: value,
                verdict: Verdict::AddableNonEdge,
                witness: Some(Witness::AddableNonEdge {
                    edge: e,
                    strength_after: after,
                }),
            };
        }
    }
    MaximalityReport {
        k,
        strength_value: value,
        verdict: Verdict::Maximal,
        witness: None,
    }
}

/// Structural membership test for the upper-bound family: peel vertices of
/// degree exactly `k` whose removal keeps the hypergraph connected on at
/// least `t` vertices, and accept iff the residue is the complete core.
/// Returns the peel order on success.
pub fn m_membership(h: &Hypergraph, k: usize) -> Result<Option<Vec<usize>>> {
    let p = Params::new(h.n(), k, h.r())?;
    if h.n() < p.t {
        return Ok(None);
    }
    let mut current = h.clone();
    let mut ids: Vec<usize> = (0..h.n()).collect();
    let mut peeled = Vec::new();
    while current.n() > p.t {
        let degrees = current.degrees();
        let eligible = (0..current.n()).find(|&v| {
            if degrees[v] != k {
                return false;
            }
            let rest: Vec<usize> = (0..current.n()).filter(|&u| u != v).collect();
            let (sub, _) = current.induced(&rest).expect("subset in range");
            sub.is_connected()
        });
        match eligible {
            Some(v) => {
                peeled.push(ids[v]);
                let rest: Vec<usize> = (0..current.n()).filter(|&u| u != v).collect();
                let (sub, local) = current.induced(&rest).expect("subset in range");
                ids = local.iter().map(|&u| ids[u]).collect();
                current = sub;
            }
            None => return Ok(None),
        }
    }
    let core_size = binom(p.t as u64, h.r() as u64)? as usize;
    if current.edge_count() == core_size {
        Ok(Some(peeled))
    } else {
        Ok(None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditClause {
    pub name: &'static str,
    pub status: ClauseStatus,
    pub detail: String,
}

/// Clause-by-clause audit of a certified maximal hypergraph against the
/// structural consequences of maximality.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub k: usize,
    pub t: usize,
    pub clauses: Vec<AuditClause>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.status != ClauseStatus::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.clauses {
            let status = match c.status {
                ClauseStatus::Pass => "pass",
                ClauseStatus::Fail => "FAIL",
                ClauseStatus::Skipped => "skipped",
            };
            out.push_str(&format!("audit {}: {} ({})\n", c.name, status, c.detail));
        }
        out
    }
}

/// Audits a hypergraph already certified k-edge-maximal:
/// (a) its edge-connectivity and strength both equal `k`;
/// (b) its size sits between the two bounds;
/// (c) for a minimum cut, every union of leftover components is itself
///     k-edge-maximal, and every side of intermediate size has at least
///     `t` vertices, exactly `t` when complete.
/// Clauses whose parameter hypotheses fail are reported as skipped.
pub fn audit_maximal(h: &Hypergraph, k: usize) -> Result<AuditReport> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k >= 2 violated (k={k})")));
    }
    let p = Params::new(h.n(), k, h.r())?;
    let mut clauses = Vec::new();
    let hypothesis = p.forces_exact_connectivity();

    // (a) connectivity pinned to k.
    if !hypothesis {
        clauses.push(AuditClause {
            name: "connectivity_equals_k",
            status: ClauseStatus::Skipped,
            detail: format!("n={} below the hypothesis for t={}", h.n(), p.t),
        });
    } else {
        let (kappa, _) = edge_connectivity(h)?;
        let (value, _) = strength(h);
        let ok = kappa == k && value == k;
        clauses.push(AuditClause {
            name: "connectivity_equals_k",
            status: if ok { ClauseStatus::Pass } else { ClauseStatus::Fail },
            detail: format!("kappa={kappa} strength={value} k={k}"),
        });
    }

    // (b) size between the bounds.
    if h.n() < p.t {
        clauses.push(AuditClause {
            name: "size_within_bounds",
            status: ClauseStatus::Skipped,
            detail: format!("n={} < t={}", h.n(), p.t),
        });
    } else {
        let lo = lower_bound(h.n(), k, h.r())?;
        let hi = upper_bound(h.n(), k, h.r())?;
        let m = h.edge_count() as u64;
        clauses.push(AuditClause {
            name: "size_within_bounds",
            status: if lo <= m && m <= hi {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            detail: format!("{lo} <= {m} <= {hi}"),
        });
    }

    // (c) minimum-cut decomposition structure.
    if h.n() < 2 {
        clauses.push(AuditClause {
            name: "cut_sides_maximal",
            status: ClauseStatus::Skipped,
            detail: "n < 2, no proper cut".into(),
        });
        return Ok(AuditReport { k, t: p.t, clauses });
    }
    let (_, cut) = edge_connectivity(h)?;
    let crossing: std::collections::BTreeSet<&Vec<usize>> = cut.crossing.iter().collect();
    let remaining: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .filter(|e| !crossing.contains(e))
        .cloned()
        .collect();
    let comps = Hypergraph::new(h.n(), h.r(), remaining)?.components();
    if comps.len() > 12 {
        clauses.push(AuditClause {
            name: "cut_sides_maximal",
            status: ClauseStatus::Skipped,
            detail: format!("{} components exceed the union guard", comps.len()),
        });
        return Ok(AuditReport { k, t: p.t, clauses });
    }

    let mut sides_checked = 0usize;
    let mut sides_failure: Option<String> = None;
    let mut sizes_checked = 0usize;
    let mut sizes_failure: Option<String> = None;
    for union_mask in 1..(1u32 << comps.len()) - 1 {
        let side: Vec<usize> = comps
            .iter()
            .enumerate()
            .filter(|(i, _)| union_mask >> i & 1 == 1)
            .flat_map(|(_, c)| c.iter().copied())
            .collect();
        let (sub, _) = h.induced(&side)?;
        sides_checked += 1;
        if sides_failure.is_none() && !is_k_edge_maximal(&sub, k).is_maximal() {
            sides_failure = Some(format!("side {side:?} is not {k}-edge-maximal"));
        }
        if hypothesis && side.len() >= h.r() && side.len() <= h.n() - 2 {
            sizes_checked += 1;
            let complete = sub.edge_count() as u64 == binom(side.len() as u64, h.r() as u64)?;
            let ok = if complete {
                side.len() == p.t
            } else {
                side.len() > p.t
            };
            if sizes_failure.is_none() && !ok {
                sizes_failure = Some(format!(
                    "side {side:?} has {} vertices (complete={complete}, t={})",
                    side.len(),
                    p.t
                ));
            }
        }
    }
    clauses.push(AuditClause {
        name: "cut_sides_maximal",
        status: match &sides_failure {
            None => ClauseStatus::Pass,
            Some(_) => ClauseStatus::Fail,
        },
        detail: sides_failure.unwrap_or_else(|| format!("{sides_checked} side(s) checked")),
    });
    clauses.push(AuditClause {
        name: "cut_side_sizes",
        status: if !hypothesis {
            ClauseStatus::Skipped
        } else if sizes_failure.is_none() {
            ClauseStatus::Pass
        } else {
            ClauseStatus::Fail
        },
        detail: if !hypothesis {
            format!("n={} below the hypothesis for t={}", h.n(), p.t)
        } else {
            sizes_failure.unwrap_or_else(|| format!("{sizes_checked} side(s) in range"))
        },
    });
    Ok(AuditReport { k, t: p.t, clauses })
}
