//! Shared generators, property checks and the brute-force ranking oracle.

#![allow(dead_code)]

pub mod published;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use profile_match::analysis::{rank_candidates, RankingEntry, TIE_RELATIVE_TOLERANCE};
use profile_match::dataset::DistanceTable;
use profile_match::{metric_distance, Metric, Profile, Unit};

pub const REFS: [&str; 4] = ["Norte", "Sur", "Este", "Oeste"];
pub const NAMES: [&str; 6] = ["Alpha", "Bravo", "Charlie", "Delta", "Echo", "Foxtrot"];

/// Metrics covered by the axiom checks.
pub fn axiom_metrics() -> Vec<Metric> {
    let mut out = vec![Metric::LINF];
    out.extend((1..=5).map(|n| Metric::ln(n).unwrap()));
    out
}

pub fn profile(values: &[f64]) -> Profile {
    Profile::from_parts(Unit::Kilometers, &REFS[..values.len()], values).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

/// Three profiles of a shared random length in [1, 4].
pub fn triples() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<f64>)> {
    (1usize..=4).prop_flat_map(|n| {
        let v = || proptest::collection::vec(0.0f64..500.0, n);
        (v(), v(), v())
    })
}

pub fn check_axioms(x: &[f64], y: &[f64], z: &[f64]) -> Result<(), TestCaseError> {
    let (px, py, pz) = (profile(x), profile(y), profile(z));
    for m in axiom_metrics() {
        let dxy = metric_distance(m, &px, &py).unwrap();
        let dyx = metric_distance(m, &py, &px).unwrap();
        let dxz = metric_distance(m, &px, &pz).unwrap();
        let dyz = metric_distance(m, &py, &pz).unwrap();
        prop_assert!(dxy >= 0.0, "{m}: negative distance {dxy}");
        prop_assert!(close(dxy, dyx, 1e-12), "{m}: asymmetric {dxy} vs {dyx}");
        prop_assert_eq!(metric_distance(m, &px, &px).unwrap(), 0.0);
        prop_assert_eq!(dxy == 0.0, x == y, "{}: identity of indiscernibles", m);
        prop_assert!(
            dxz <= (dxy + dyz) * (1.0 + 1e-12) + 1e-12,
            "{m}: triangle {dxz} > {dxy} + {dyz}"
        );
    }
    Ok(())
}

/// A profile and a copy differing in exactly one coordinate.
pub fn near_pairs() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            proptest::collection::vec(0.0f64..500.0, n),
            0..n,
            1e-6f64..50.0,
        )
            .prop_map(|(x, i, delta)| {
                let mut y = x.clone();
                y[i] += delta;
                (x, y)
            })
    })
}

pub fn check_indiscernibles(x: &[f64], y: &[f64]) -> Result<(), TestCaseError> {
    for m in axiom_metrics() {
        prop_assert!(
            metric_distance(m, &profile(x), &profile(y)).unwrap() > 0.0,
            "{m}"
        );
    }
    Ok(())
}

pub fn check_monotone_in_p(x: &[f64], y: &[f64]) -> Result<(), TestCaseError> {
    let (px, py) = (profile(x), profile(y));
    let mut previous = f64::INFINITY;
    for n in 1..=8 {
        let d = metric_distance(Metric::ln(n).unwrap(), &px, &py).unwrap();
        prop_assert!(
            d <= previous * (1.0 + 1e-12),
            "L{n} = {d} exceeds {previous}"
        );
        previous = d;
    }
    let inf = metric_distance(Metric::LINF, &px, &py).unwrap();
    prop_assert!(
        inf <= previous * (1.0 + 1e-12),
        "Linf {inf} exceeds L8 {previous}"
    );
    Ok(())
}

pub fn check_homogeneity(x: &[f64], y: &[f64], c: f64) -> Result<(), TestCaseError> {
    let (px, py) = (profile(x), profile(y));
    let (cx, cy) = (px.scaled(c).unwrap(), py.scaled(c).unwrap());
    for m in axiom_metrics() {
        let d = metric_distance(m, &px, &py).unwrap();
        let scaled = metric_distance(m, &cx, &cy).unwrap();
        prop_assert!(
            (scaled - c * d).abs() <= 1e-9 * (c * d).max(f64::MIN_POSITIVE),
            "{m}: d(cx, cy) = {scaled}, c d(x, y) = {}",
            c * d
        );
    }
    Ok(())
}

/// A random table description: reference count, rows and a target.
#[derive(Debug, Clone)]
pub struct SmallTable {
    pub rows: Vec<Vec<f64>>,
    pub target: Vec<f64>,
}

impl SmallTable {
    pub fn references(&self) -> &[&'static str] {
        &REFS[..self.target.len()]
    }

    pub fn table(&self) -> DistanceTable {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| (NAMES[i], r.clone()))
            .collect();
        DistanceTable::new(Unit::Kilometers, self.references(), rows).unwrap()
    }

    pub fn target(&self) -> Profile {
        profile(&self.target)
    }
}

/// Tables with at most 6 candidates and 4 references. Half of them are
/// integer valued so that exact ties occur often.
pub fn small_tables() -> impl Strategy<Value = SmallTable> {
    (1usize..=4, 2usize..=6, any::<bool>()).prop_flat_map(|(refs, cands, integer)| {
        let cell = move || {
            if integer {
                (1u32..=12).prop_map(f64::from).boxed()
            } else {
                (0.5f64..200.0).boxed()
            }
        };
        (
            proptest::collection::vec(proptest::collection::vec(cell(), refs), cands),
            proptest::collection::vec(cell(), refs),
        )
            .prop_map(|(rows, target)| SmallTable { rows, target })
    })
}

fn direct_distance(metric: Metric, a: &[f64], b: &[f64]) -> f64 {
    let diffs = a.iter().zip(b).map(|(x, y)| (x - y).abs());
    match metric {
        Metric::Infinity => diffs.fold(0.0, f64::max),
        Metric::Ln(n) => {
            let p = f64::from(n.get());
            diffs.map(|d| d.powf(p)).sum::<f64>().powf(1.0 / p)
        }
    }
}

fn tied(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_RELATIVE_TOLERANCE * a.abs().max(b.abs())
}

/// Brute-force ranking: every distance recomputed from the textbook formula,
/// then repeated selection of the candidate nothing else precedes.
pub fn oracle_ranking(t: &SmallTable, metric: Metric) -> Vec<(String, f64)> {
    let mut pool: Vec<(&str, f64, f64)> = t
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            (
                NAMES[i],
                direct_distance(metric, r, &t.target),
                direct_distance(Metric::L2, r, &t.target),
            )
        })
        .collect();
    let precedes = |a: &(&str, f64, f64), b: &(&str, f64, f64)| {
        if !tied(a.1, b.1) {
            return a.1 < b.1;
        }
        if !tied(a.2, b.2) {
            return a.2 < b.2;
        }
        a.0 < b.0
    };
    let mut out = Vec::new();
    while !pool.is_empty() {
        let mut best = 0;
        for i in 1..pool.len() {
            if precedes(&pool[i], &pool[best]) {
                best = i;
            }
        }
        let (name, d, _) = pool.remove(best);
        out.push((name.to_string(), d));
    }
    out
}

pub fn check_oracle(t: &SmallTable) -> Result<(), TestCaseError> {
    let table = t.table();
    let target = t.target();
    for metric in axiom_metrics() {
        let ranking = rank_candidates(&table, &target, metric).unwrap();
        let expected = oracle_ranking(t, metric);
        let got: Vec<&str> = ranking.iter().map(|e| e.candidate.as_str()).collect();
        let want: Vec<&str> = expected.iter().map(|(n, _)| n.as_str()).collect();
        prop_assert_eq!(&got, &want, "{} on {:?}", metric, t);
        for (entry, (_, d)) in ranking.iter().zip(&expected) {
            prop_assert!(
                close(entry.distance, *d, 1e-12),
                "{metric}: {} vs {d}",
                entry.distance
            );
        }
        prop_assert!(ranking.iter().enumerate().all(|(i, e)| e.rank == i + 1));
    }
    Ok(())
}

fn names(ranking: &[RankingEntry]) -> Vec<String> {
    ranking.iter().map(|e| e.candidate.clone()).collect()
}

/// Positive scaling of table and target, and any reordering of the reference
/// columns, leave every ranking unchanged.
pub fn check_ranking_invariance(
    t: &SmallTable,
    c: f64,
    order: &[usize],
) -> Result<(), TestCaseError> {
    let base_table = t.table();
    let base_target = t.target();
    let scaled = SmallTable {
        rows: t
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v * c).collect())
            .collect(),
        target: t.target.iter().map(|v| v * c).collect(),
    };
    let refs = t.references();
    let order: Vec<usize> = order.iter().copied().filter(|&i| i < refs.len()).collect();
    let permuted_refs: Vec<&str> = order.iter().map(|&i| refs[i]).collect();
    let permuted_rows = t
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| (NAMES[i], order.iter().map(|&j| r[j]).collect()))
        .collect();
    let permuted_table =
        DistanceTable::new(Unit::Kilometers, &permuted_refs, permuted_rows).unwrap();
    let permuted_target = Profile::from_parts(
        Unit::Kilometers,
        &permuted_refs,
        &order.iter().map(|&j| t.target[j]).collect::<Vec<_>>(),
    )
    .unwrap();

    for metric in axiom_metrics() {
        let base = names(&rank_candidates(&base_table, &base_target, metric).unwrap());
        let s = names(&rank_candidates(&scaled.table(), &scaled.target(), metric).unwrap());
        let p = names(&rank_candidates(&permuted_table, &permuted_target, metric).unwrap());
        prop_assert_eq!(&base, &s, "{} scaling by {}", metric, c);
        prop_assert_eq!(&base, &p, "{} permutation {:?}", metric, order);
    }
    Ok(())
}

/// Tables with continuous values, so that near-ties are vanishingly rare and
/// scaling cannot move a pair across the tie tolerance.
pub fn continuous_tables() -> impl Strategy<Value = SmallTable> {
    (1usize..=4, 2usize..=6).prop_flat_map(|(refs, cands)| {
        (
            proptest::collection::vec(proptest::collection::vec(0.5f64..200.0, refs), cands),
            proptest::collection::vec(0.5f64..200.0, refs),
        )
            .prop_map(|(rows, target)| SmallTable { rows, target })
    })
}

pub fn permutations() -> impl Strategy<Value = Vec<usize>> {
    Just((0..4).collect::<Vec<usize>>()).prop_shuffle()
}
