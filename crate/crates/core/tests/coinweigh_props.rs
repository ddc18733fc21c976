use drset::coinweigh::{
    algorithm1_bounds, bounds_up_to, brute_force_m, drs_to_strategy, extend_strategy,
    is_weighing_strategy, lindstrom_complex, project_strategy, strategy_to_drs,
    translate_to_origin, WeighingStrategy,
};
use drset::resolving::is_doubly_resolving;
use drset::solver::{solve_psi, SolveOptions, Symmetry};
use drset::{Family, LandmarkSet};
use itertools::Itertools;
use proptest::prelude::*;

/// Dot-product fingerprints are injective on all of {0,1}ⁿ.
fn separates(n: u32, rows: &[u64]) -> bool {
    (0..1u64 << n)
        .map(|u| {
            rows.iter()
                .map(|&x| (u & x).count_ones())
                .collect::<Vec<_>>()
        })
        .all_unique()
}

fn oracle_m(n: u32) -> usize {
    (0..=n as usize)
        .find(|&k| (1..1u64 << n).combinations(k).any(|r| separates(n, &r)))
        .unwrap()
}

#[test]
fn brute_force_m_matches_oracle() {
    for n in 1..=4 {
        let (m, s) = brute_force_m(n).unwrap();
        assert_eq!(m, oracle_m(n), "M({n})");
        assert!(separates(n, s.rows()));
    }
}

#[test]
fn m_plus_one_is_psi_of_cube() {
    for n in 1..=4 {
        let (m, s) = brute_force_m(n).unwrap();
        let q = Family::cube(n).unwrap();
        let psi = solve_psi(&q, Symmetry::VertexTransitive, SolveOptions::default()).unwrap();
        assert_eq!(m + 1, psi.value, "n = {n}");
        assert!(psi.value as u32 <= bounds_up_to(4).unwrap().get(n as usize).unwrap());

        let drs = strategy_to_drs(&s).unwrap();
        assert!(is_doubly_resolving(&q, &drs).unwrap());
        assert_eq!(drs_to_strategy(n, &drs).unwrap(), s);

        for &member in psi.witness.as_slice() {
            let moved = translate_to_origin(&psi.witness, member).unwrap();
            assert!(is_doubly_resolving(&q, &moved).unwrap());
            let strat = drs_to_strategy(n, &moved).unwrap();
            assert_eq!(strat.len(), m);
            assert!(separates(n, strat.rows()));
            assert_eq!(strategy_to_drs(&strat).unwrap().sorted(), moved.sorted());
        }
    }
}

#[test]
fn monotone_and_transforms() {
    let ms: Vec<usize> = (1..=5).map(|n| brute_force_m(n).unwrap().0).collect();
    for w in ms.windows(2) {
        assert!(w[0] <= w[1] && w[1] <= w[0] + 1, "{ms:?}");
    }
    for n in 1..=4 {
        let (_, s) = brute_force_m(n).unwrap();
        let up = extend_strategy(&s).unwrap();
        assert_eq!(up.len(), s.len() + 1);
        assert!(separates(n + 1, up.rows()));
        let (_, big) = brute_force_m(n + 1).unwrap();
        let down = project_strategy(&big).unwrap();
        assert!(down.len() <= big.len());
        assert!(separates(n, down.rows()));
    }
}

#[test]
fn lindstrom_consistency() {
    // |F_m| - 1 weighings for Σ|A| coins, checked where brute force reaches.
    for m in 2..=8u64 {
        let c = lindstrom_complex(m);
        assert!(c.is_subset_closed());
        let coins = c.total_size();
        if coins <= 4 {
            assert!(oracle_m(coins as u32) < c.len(), "m = {m}");
        }
    }
}

#[test]
fn bounds_table_shape() {
    let t = bounds_up_to(200).unwrap();
    assert_eq!(t.len(), 200);
    assert!(t.is_unit_step_monotone());
    // Direct restatement: P(n) = i + 1 for the popcount(i) values of n
    // following those already assigned.
    let mut expect = Vec::new();
    for i in 1u32.. {
        for _ in 0..i.count_ones() {
            expect.push(i + 1);
        }
        if expect.len() >= 200 {
            break;
        }
    }
    expect.truncate(200);
    assert_eq!(t.values(), &expect[..]);
    assert!(algorithm1_bounds(1).is_err());
    assert_eq!(bounds_up_to(1).unwrap().to_csv(), "n,P\n1,2\n");
}

proptest! {
    #[test]
    fn verification_agrees_with_oracle(n in 1u32..=8, rows in proptest::collection::vec(any::<u64>(), 0..8)) {
        let rows: Vec<u64> = rows.into_iter().map(|r| r & ((1 << n) - 1)).collect();
        let s = WeighingStrategy::new(n, rows.clone()).unwrap();
        let dedup: Vec<u64> = rows.into_iter().sorted().dedup().collect();
        prop_assert_eq!(is_weighing_strategy(&s).unwrap(), separates(n, &dedup));
    }

    #[test]
    fn drs_round_trip_on_random_sets(n in 2u32..=6, picks in proptest::collection::vec(any::<u64>(), 1..8)) {
        let q = Family::cube(n).unwrap();
        let mut v: Vec<usize> = picks.iter().map(|&p| (p % (1 << n)) as usize).unique().collect();
        if !v.contains(&0) {
            v.insert(0, 0);
        }
        let s = LandmarkSet::new(v).unwrap();
        let drs = s.len() >= 2 && is_doubly_resolving(&q, &s).unwrap();
        match drs_to_strategy(n, &s) {
            Ok(strat) => {
                prop_assert!(drs);
                prop_assert!(is_weighing_strategy(&strat).unwrap());
                prop_assert_eq!(strategy_to_drs(&strat).unwrap().sorted(), s.sorted());
            }
            Err(_) => prop_assert!(!drs),
        }
    }
}
