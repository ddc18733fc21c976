mod common;

use common::{floyd, naive_doubly};
use drset::gadget::{
    build_gadget, matching_cost, witness_set, GadgetGraph, Part, Role, ThreeDMInstance, Variant,
    HUB_D,
};
use drset::resolving::is_ddrs;
use drset::Metric;
use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random instance with a planted perfect matching, shuffled in among
/// random extra triples.
fn planted(rng: &mut ChaCha8Rng, n: usize, tau: usize) -> ThreeDMInstance {
    let mut b: Vec<usize> = (0..n).collect();
    let mut c: Vec<usize> = (0..n).collect();
    b.shuffle(rng);
    c.shuffle(rng);
    let mut triples: Vec<(usize, usize, usize)> = (0..n).map(|a| (a, b[a], c[a])).collect();
    let cap = tau.min(n * n * n);
    while triples.len() < cap {
        let t = (
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
        );
        if !triples.contains(&t) {
            triples.push(t);
        }
    }
    triples.shuffle(rng);
    ThreeDMInstance::new(n, triples).unwrap()
}

/// Which of the seven construction cases an edge falls under.
fn edge_cases(g: &GadgetGraph, inst: &ThreeDMInstance, u: usize, v: usize) -> usize {
    let (r, s) = (g.roles[u], g.roles[v]);
    let tau = inst.triples().len();
    let mut hits = 0;
    for (x, y) in [(r, s), (s, r)] {
        let hub_elem = |hub: Role, part: Part| {
            x == hub && matches!(y, Role::Element { part: p, .. } if p == part)
        };
        hits += usize::from(hub_elem(Role::HubA, Part::A));
        hits += usize::from(hub_elem(Role::HubB, Part::B));
        hits += usize::from(hub_elem(Role::HubC, Part::C));
        hits += usize::from(x == Role::HubD && matches!(y, Role::Element { .. }));
        if let (
            Role::Triple { copy, index },
            Role::Element {
                part,
                copy: ec,
                index: ei,
            },
        ) = (x, y)
        {
            let (a, b, c) = inst.triples()[index];
            let want = match part {
                Part::A => a,
                Part::B => b,
                Part::C => c,
            };
            hits += usize::from(copy == ec && want == ei);
        }
        if let (Role::Selector(i), Role::Triple { copy, index }) = (x, y) {
            hits += usize::from((copy * tau + index) >> i & 1 == 1);
        }
        hits += usize::from(matches!(x, Role::Selector(_)) && y == Role::HubD);
    }
    hits
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gadget_invariants(seed in any::<u64>(), n in 1usize..=4, tau in 1usize..=10, copies in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = planted(&mut rng, n, tau.max(n));
        let tau = inst.triples().len();
        let matching = inst.find_perfect_matching().expect("planted matching");
        prop_assert!(inst.is_perfect_matching(&matching));
        prop_assert_eq!(matching_cost(&inst, &matching).unwrap(), n);

        let v = (copies * tau).next_power_of_two().trailing_zeros() as usize;
        for variant in Variant::ALL {
            let g = build_gadget(&inst, variant, copies).unwrap();
            prop_assert_eq!(g.i_count(), 4 + copies * tau);
            prop_assert_eq!(g.j_count(), 3 * n * copies + v);
            prop_assert!(g.graph.is_connected());

            let ceiling = if variant == Variant::Cobipartite { 1 } else { 2 };
            for u in 0..g.graph.vertex_count() {
                prop_assert!(g.graph.dist(u, HUB_D) <= ceiling);
            }

            if variant == Variant::Bipartite {
                for (a, b) in g.graph.edges() {
                    prop_assert_eq!(edge_cases(&g, &inst, a, b), 1, "edge {} {}", g.roles[a], g.roles[b]);
                    prop_assert_ne!(g.roles[a].in_i(), g.roles[b].in_i());
                }
            }

            let per_copy = vec![matching.clone(); copies];
            let w = witness_set(&g, &inst, &per_copy).unwrap();
            prop_assert_eq!(w.len(), g.thresholds().witness_size);
            let d = floyd(&g.graph);
            prop_assert!(naive_doubly(&d, w.as_slice()));
            let (anchor, hubs) = g.hub_ddrs();
            if !hubs.is_empty() {
                prop_assert!(is_ddrs(&g.graph, anchor, &hubs).unwrap());
            }
        }
    }
}

#[test]
fn cost_counts_coverage() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let inst = planted(&mut rng, 3, 8);
        for k in 0..=4 {
            for subset in (0..inst.triples().len()).combinations(k) {
                let covered: usize = (0..3)
                    .map(|part| {
                        subset
                            .iter()
                            .map(|&t| {
                                let (a, b, c) = inst.triples()[t];
                                [a, b, c][part]
                            })
                            .unique()
                            .count()
                    })
                    .sum();
                assert_eq!(matching_cost(&inst, &subset).unwrap(), k + 9 - covered);
            }
        }
    }
}

#[test]
fn text_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let inst = planted(&mut rng, 4, 9);
        assert_eq!(ThreeDMInstance::parse(&inst.to_text()).unwrap(), inst);
    }
}
