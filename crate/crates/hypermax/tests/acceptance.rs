//! Acceptance suite: the end-to-end checks the toolkit must satisfy, one
//! test per criterion, each printing a PASS line when it holds. All checks
//! are exact; there are no tolerances anywhere.

use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypermax::connectivity::{
    cut_degree, edge_connectivity, edge_connectivity_bruteforce, is_super_edge_connected,
    strength, strength_bruteforce,
};
use hypermax::constructions::{
    build_m, build_nt, build_one_max_partition, build_one_max_star, BuildStrategy, TreeSpec,
};
use hypermax::extremal::{is_k_edge_maximal, m_membership};
use hypermax::search::{enumerate_maximal, SearchLimits, SearchSummary};
use hypermax::{binom, Hypergraph, Params};

/// Parameter grid shared by criteria 1 and 7.
const UPPER_GRID: [(usize, usize); 7] = [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (4, 3), (6, 3)];

static SEARCH_533: Lazy<(SearchSummary, Vec<Hypergraph>)> =
    Lazy::new(|| enumerate_maximal(5, 3, 3, &SearchLimits::default()).unwrap());

static SEARCH_622: Lazy<(SearchSummary, Vec<Hypergraph>)> =
    Lazy::new(|| enumerate_maximal(6, 2, 2, &SearchLimits::default()).unwrap());

fn upper_family() -> Vec<(Hypergraph, usize)> {
    let mut members = Vec::new();
    for (k, r) in UPPER_GRID {
        let t = hypermax::threshold_t(k, r).unwrap();
        for n in t..=t + 4 {
            members.push((build_m(n, k, r, BuildStrategy::Lexicographic).unwrap(), k));
        }
    }
    members
}

fn lower_family() -> Vec<(Hypergraph, usize)> {
    let mut members = Vec::new();
    for s in [2usize, 3] {
        for tree in [TreeSpec::path(s).unwrap(), TreeSpec::star(s).unwrap()] {
            let (h, k) = build_nt(4, 3, &tree, BuildStrategy::Lexicographic).unwrap();
            members.push((h, k));
        }
    }
    members
}

#[test]
fn criterion_1_upper_bound_family() {
    for (k, r) in UPPER_GRID {
        let t = hypermax::threshold_t(k, r).unwrap();
        for n in t..=t + 4 {
            let h = build_m(n, k, r, BuildStrategy::Lexicographic).unwrap();
            let expected = binom(t as u64, r as u64).unwrap() + ((n - t) * k) as u64;
            assert_eq!(h.edge_count() as u64, expected, "size at n={n} k={k} r={r}");
            // Minimum degree and super-edge-connectivity are pinned only
            // where the parameters force edge-connectivity k; at n = t with
            // a strict core the complete hypergraph has smaller degree.
            if Params::new(n, k, r).unwrap().forces_exact_connectivity() {
                assert_eq!(h.min_degree(), k, "min degree at n={n} k={k} r={r}");
                let (super_ec, witness) = is_super_edge_connected(&h).unwrap();
                assert!(super_ec, "super at n={n} k={k} r={r}: {witness:?}");
            }
            assert!(
                is_k_edge_maximal(&h, k).is_maximal(),
                "maximality at n={n} k={k} r={r}"
            );
        }
    }
    println!("acceptance criterion 1 (upper-bound family): PASS");
}

#[test]
fn criterion_2_lower_bound_family() {
    for s in [2usize, 3] {
        for tree in [TreeSpec::path(s).unwrap(), TreeSpec::star(s).unwrap()] {
            let (h, k) = build_nt(4, 3, &tree, BuildStrategy::Lexicographic).unwrap();
            assert_eq!(k, 3);
            assert_eq!(h.edge_count(), s * 4 + (s - 1) * 3, "size for s={s}");
            assert_eq!(
                h.edge_count() as u64,
                hypermax::extremal::lower_bound(4 * s, 3, 3).unwrap()
            );
            assert!(
                is_k_edge_maximal(&h, 3).is_maximal(),
                "maximality for s={s} tree={:?}",
                tree.edges
            );
        }
    }
    println!("acceptance criterion 2 (lower-bound family): PASS");
}

#[test]
fn criterion_3_coinciding_bounds() {
    let (summary, stream) = &*SEARCH_533;
    assert_eq!(summary.lower_bound, 7);
    assert_eq!(summary.upper_bound, 7);
    assert!(summary.maximal_count > 0, "no maximal hypergraph found");
    assert_eq!(summary.min_size, Some(7));
    assert_eq!(summary.max_size, Some(7));
    for h in stream {
        assert_eq!(h.edge_count(), 7);
    }
    println!(
        "acceptance criterion 3 (coinciding bounds at (5,3,3), {} found): PASS",
        summary.maximal_count
    );
}

#[test]
fn criterion_4_graph_specialization() {
    let (summary, stream) = &*SEARCH_622;
    assert_eq!(summary.lower_bound, 8);
    assert_eq!(summary.upper_bound, 9);
    assert!(summary.maximal_count > 0, "no maximal graph found");
    assert!(summary.min_size.unwrap() >= 8, "{:?}", summary.min_size);
    assert!(summary.max_size.unwrap() <= 9, "{:?}", summary.max_size);
    for h in stream {
        let member = m_membership(h, 2).unwrap().is_some();
        assert_eq!(
            h.edge_count() == 9,
            member,
            "size {} vs membership {member}",
            h.edge_count()
        );
    }
    println!(
        "acceptance criterion 4 (graph specialization at (6,2,2), sizes {:?}..{:?}): PASS",
        summary.min_size.unwrap(),
        summary.max_size.unwrap()
    );
}

#[test]
fn criterion_5_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut kappa_checked = 0usize;
    for r in [2usize, 3, 4] {
        for _ in 0..70 {
            let n = rng.gen_range(2..=10);
            let h = random_hypergraph(n, r, &mut rng);
            assert_eq!(
                edge_connectivity(&h).unwrap().0,
                edge_connectivity_bruteforce(&h).unwrap(),
                "kappa mismatch on\n{}",
                h.to_text()
            );
            kappa_checked += 1;
        }
    }
    let mut strength_checked = 0usize;
    for _ in 0..100 {
        let r = rng.gen_range(2..=4);
        let n = rng.gen_range(2..=8);
        let h = random_hypergraph(n, r, &mut rng);
        assert_eq!(
            strength(&h).0,
            strength_bruteforce(&h).unwrap(),
            "strength mismatch on\n{}",
            h.to_text()
        );
        strength_checked += 1;
    }
    assert!(kappa_checked >= 200 && strength_checked >= 100);
    println!(
        "acceptance criterion 5 (oracle equivalence, {kappa_checked} kappa + {strength_checked} strength samples): PASS"
    );
}

#[test]
fn criterion_6_one_edge_maximal_families() {
    let mut violations = Vec::new();
    for r in [3usize, 4] {
        for n in r..=10 {
            let star = build_one_max_star(n, r).unwrap();
            assert_eq!(star.edge_count(), n - r + 1, "star size at n={n} r={r}");
            if !is_k_edge_maximal(&star, 1).is_maximal() {
                violations.push(format!("star n={n} r={r} is not 1-edge-maximal"));
            }
            let part = build_one_max_partition(n, r).unwrap();
            assert_eq!(
                part.edge_count(),
                (n + r - 3) / (r - 1),
                "partition size at n={n} r={r}"
            );
            let report = is_k_edge_maximal(&part, 1);
            if !report.is_maximal() {
                violations.push(format!(
                    "partition n={n} r={r} is not 1-edge-maximal: {:?}",
                    report.witness
                ));
            }
        }
    }
    assert!(
        violations.is_empty(),
        "constructions failing the 1-edge-maximal certification:\n{}",
        violations.join("\n")
    );
    println!("acceptance criterion 6 (1-edge-maximal families): PASS");
}

#[test]
fn criterion_7_connectivity_pinned_for_certified_instances() {
    let mut certified: Vec<(Hypergraph, usize)> = Vec::new();
    for (h, k) in upper_family().into_iter().chain(lower_family()) {
        if is_k_edge_maximal(&h, k).is_maximal() {
            certified.push((h, k));
        }
    }
    certified.extend(SEARCH_533.1.iter().cloned().map(|h| (h, 3)));
    certified.extend(SEARCH_622.1.iter().cloned().map(|h| (h, 2)));

    let mut checked = 0usize;
    for (h, k) in &certified {
        if !Params::new(h.n(), *k, h.r()).unwrap().forces_exact_connectivity() {
            continue;
        }
        let (kappa, _) = edge_connectivity(h).unwrap();
        let (value, _) = strength(h);
        assert_eq!(kappa, *k, "kappa on\n{}", h.to_text());
        assert_eq!(value, *k, "strength on\n{}", h.to_text());
        checked += 1;
    }
    assert!(checked > 0);
    println!(
        "acceptance criterion 7 (connectivity pinned, {checked}/{} instances in hypothesis): PASS",
        certified.len()
    );
}

#[test]
fn criterion_8_crossing_count_identity() {
    for r in 2..=4usize {
        for n in 1..=12usize {
            let h = Hypergraph::complete(n, r).unwrap();
            for n1 in 0..=n {
                let x: Vec<usize> = (0..n1).collect();
                let expected = binom(n as u64, r as u64).unwrap()
                    - binom(n1 as u64, r as u64).unwrap()
                    - binom((n - n1) as u64, r as u64).unwrap();
                assert_eq!(
                    cut_degree(&h, &x) as u64,
                    expected,
                    "split n1={n1} of K_{n}^{r}"
                );
            }
        }
    }
    println!("acceptance criterion 8 (crossing-count identity): PASS");
}

fn random_hypergraph(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Hypergraph {
    let density = rng.gen_range(0.15..0.85);
    let edges: Vec<Vec<usize>> = Hypergraph::complete(n, r)
        .unwrap()
        .edges()
        .iter()
        .filter(|_| rng.gen_bool(density))
        .cloned()
        .collect();
    Hypergraph::new(n, r, edges).unwrap()
}
