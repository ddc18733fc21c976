mod common;

use common::{
    floyd, naive_beta, naive_cover, naive_phi, naive_psi, naive_resolving, random_connected,
};
use drset::solver::{
    solve_beta, solve_cover, solve_phi, solve_phi_max, solve_psi, solve_psi_general,
    verify_witness, CoverInstance, Objective, SolveOptions, Symmetry,
};
use drset::{Error, Family, Graph, Metric};
use itertools::Itertools;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXACT: SolveOptions = SolveOptions { budget: None };

fn cover_strategy() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (1usize..=14, 1usize..=12).prop_flat_map(|(rows, cols)| {
        let column = proptest::collection::vec(0..rows, 0..=rows.min(5));
        (Just(rows), proptest::collection::vec(column, cols))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn cover_matches_enumeration((rows, cols) in cover_strategy()) {
        let inst = CoverInstance::generic(rows, &cols).unwrap();
        match (naive_cover(rows, &cols), solve_cover(&inst, EXACT)) {
            (Some(k), Ok(sol)) => {
                prop_assert!(sol.optimal);
                prop_assert_eq!(sol.columns.len(), k);
                for r in 0..rows {
                    prop_assert!(sol.columns.iter().any(|&c| cols[c].contains(&r)));
                }
            }
            (None, Err(Error::Infeasible(_))) => {}
            (expected, got) => prop_assert!(false, "{expected:?} vs {got:?}"),
        }
    }

    #[test]
    fn graph_objectives_match_definitions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.1..0.8);
        let g = random_connected(&mut rng, n, p);
        let d = floyd(&g);

        let beta = solve_beta(&g, EXACT).unwrap();
        prop_assert_eq!(beta.value, naive_beta(&d));
        prop_assert!(verify_witness(&g, Objective::Beta, None, &beta.witness).unwrap());
        let first = (0..n).combinations(beta.value).find(|c| naive_resolving(&d, c)).unwrap();
        prop_assert_eq!(beta.witness.as_slice(), &first[..]);

        let psi = solve_psi_general(&g, EXACT).unwrap();
        prop_assert_eq!(psi.value, naive_psi(&d));
        prop_assert!(verify_witness(&g, Objective::Psi, None, &psi.witness).unwrap());

        let a = rng.gen_range(0..n);
        let phi = solve_phi(&g, a, EXACT).unwrap();
        prop_assert_eq!(phi.value, naive_phi(&d, a));
        prop_assert!(verify_witness(&g, Objective::Phi, Some(a), &phi.witness).unwrap());
    }
}

#[test]
fn witnesses_are_sorted_and_lex_minimal() {
    // C₆: every pair of non-antipodal vertices resolves; {0,1} is the least.
    let r = solve_beta(&Graph::cycle(6), EXACT).unwrap();
    assert_eq!(r.witness.as_slice(), &[0, 1]);
    let r = solve_beta(&Graph::path(5), EXACT).unwrap();
    assert_eq!(r.witness.as_slice(), &[0]);
}

#[test]
fn vertex_transitive_anchoring() {
    let fams = [
        Family::cube(2).unwrap(),
        Family::cube(3).unwrap(),
        Family::folded(3).unwrap(),
        Family::folded(4).unwrap(),
        Family::hamming(2, 3).unwrap(),
    ];
    for fam in fams {
        let general = solve_psi_general(&fam, EXACT).unwrap();
        let anchored = solve_psi(&fam, Symmetry::VertexTransitive, EXACT).unwrap();
        assert_eq!(general.value, anchored.value, "{fam}");
        let phis: Vec<usize> = (0..fam.order())
            .map(|x| solve_phi(&fam, x, EXACT).unwrap().value)
            .collect();
        assert!(phis.iter().all(|&p| p == phis[0]), "{fam}: {phis:?}");
        let (_, max) = solve_phi_max(&fam, Symmetry::General, EXACT).unwrap();
        assert_eq!(max.value, phis[0]);
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let f = Family::folded(6).unwrap();
    let r = solve_beta(&f, SolveOptions::with_budget(Some(1))).unwrap();
    assert!(!r.optimal);
    assert!(r.value >= 8);
    assert!(verify_witness(&f, Objective::Beta, None, &r.witness).unwrap());
}

#[test]
fn rejects_bad_graphs() {
    let two = Graph::from_edge_list(2, &[]).unwrap();
    assert_eq!(solve_beta(&two, EXACT).unwrap_err(), Error::Disconnected);
    assert_eq!(
        solve_beta(&Graph::complete(1), EXACT).unwrap_err(),
        Error::TooFewVertices(1)
    );
}

#[test]
fn parallel_results_are_stable() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let g = random_connected(&mut rng, 8, 0.3);
        let first = solve_psi_general(&g, EXACT).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let single = pool.install(|| solve_psi_general(&g, EXACT).unwrap());
        assert_eq!(first, single);
    }
}
