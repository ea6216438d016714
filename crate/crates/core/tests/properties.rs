use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

use homcirc::io::{
    chain_to_json, darts_to_json, graph_to_json, parse_chain, parse_darts, parse_graph,
};
use homcirc::random::{self, Rng64};
use homcirc::trp::min_circulation_above_with_capacity;
use homcirc::{
    abelianize, chain_leq, contract, count_dcc, cycle_basis, detect_dcc, detect_dcc_with,
    enumerate_circuits, is_circulation, min_circulation_above, solve_hscdp, Chain, Dart,
    DetectOptions, Graph,
};

fn instance(seed: u64) -> Option<(Rng64, Graph, Chain)> {
    let mut rng = random::rng(seed);
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(n.max(2)..=8);
    let g = random::connected_multigraph(&mut rng, n, m);
    let a = random::connected_circulation(&mut rng, &g, 10)?;
    Some((rng, g, a))
}

// components of the graph (0..n, pairs) by repeated relabelling
fn components(n: usize, pairs: &[(usize, usize)]) -> usize {
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for &(a, b) in pairs {
            let m = label[a].min(label[b]);
            if label[a] != m || label[b] != m {
                label[a] = m;
                label[b] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    label.iter().collect::<BTreeSet<_>>().len()
}

fn rank(rows: Vec<Vec<i64>>) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in c..cols {
                    let x = &f * &a[r][j];
                    a[i][j] -= x;
                }
            }
        }
        r += 1;
    }
    r
}

fn small_chain() -> impl Strategy<Value = Chain> {
    prop::collection::vec((0usize..6, -3i64..=3), 0..6).prop_map(Chain::from_pairs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dart_inverse_is_an_involution(edge in 0usize..1000, forward: bool) {
        let d = Dart::new(edge, forward);
        prop_assert_eq!(d.inverse().inverse(), d);
        prop_assert_ne!(d.inverse(), d);
        prop_assert_eq!(d.inverse().sign(), -d.sign());
    }

    #[test]
    fn detect_invariants(seed: u64) {
        let Some((mut rng, g, a)) = instance(seed) else { return Ok(()) };
        let c = detect_dcc(&g, &a).unwrap();
        prop_assert_eq!(abelianize(c.walk()), a.clone());
        prop_assert_eq!(c.len() as u64, a.norm());
        prop_assert!(c.walk().is_direction_consistent());
        prop_assert_eq!(detect_dcc(&g, &a).unwrap(), c.clone());
        let support: Vec<usize> = a.support_edges();
        let start = g.edge(support[rng.gen_range(0..support.len())]).u;
        let opts = DetectOptions { start: Some(start), edge_priority: vec![] };
        let s = detect_dcc_with(&g, &a, &opts).unwrap();
        prop_assert_eq!(abelianize(s.walk()), a);
    }

    #[test]
    fn translations_compose(seed: u64, j in -20isize..20, k in -20isize..20) {
        let Some((_, g, a)) = instance(seed) else { return Ok(()) };
        let c = detect_dcc(&g, &a).unwrap();
        let len = c.len() as isize;
        prop_assert_eq!(c.translate(&g, j).translate(&g, k), c.translate(&g, j + k));
        prop_assert_eq!(c.translate(&g, len), c.clone());
        let t = c.translate(&g, k);
        prop_assert!(homcirc::Circuit::new(&g, t.darts().to_vec()).is_ok());
        prop_assert_eq!(abelianize(t.walk()), a);
    }

    #[test]
    fn chain_leq_is_a_partial_order(a in small_chain(), b in small_chain(), c in small_chain()) {
        prop_assert!(chain_leq(&a, &a));
        if chain_leq(&a, &b) && chain_leq(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if chain_leq(&a, &b) && chain_leq(&b, &c) {
            prop_assert!(chain_leq(&a, &c));
        }
    }

    #[test]
    fn circulations_lie_in_the_cycle_space(seed: u64) {
        let Some((_, g, a)) = instance(seed) else { return Ok(()) };
        let basis = cycle_basis(&g).unwrap();
        let m = g.edge_count();
        prop_assert_eq!(basis.len() + g.vertex_count(), m + 1);
        for b in &basis {
            prop_assert!(is_circulation(&g, b));
        }
        let mut rows: Vec<Vec<i64>> = basis.iter().map(|b| b.dense(m)).collect();
        prop_assert_eq!(rank(rows.clone()), basis.len());
        rows.push(a.dense(m));
        prop_assert_eq!(rank(rows), basis.len());
    }

    #[test]
    fn count_matches_enumeration(seed: u64) {
        let Some((_, g, a)) = instance(seed) else { return Ok(()) };
        let r = count_dcc(&g, &a).unwrap();
        let all = enumerate_circuits(&g, &a, 20_000_000).unwrap();
        prop_assert_eq!(r.total, BigInt::from(all.len()));
        let distinct: BTreeSet<Vec<Dart>> = all.iter().map(|c| c.darts().to_vec()).collect();
        prop_assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn hscdp_certificate(seed: u64) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(2..=7);
        let (g, a) = random::disconnected_instance(&mut rng, n, &["1", "2", "1/3"]);
        let s = solve_hscdp(&g, &a).unwrap();
        prop_assert!(s.circuit.is_some());
        prop_assert_eq!(abelianize(&s.walk), a);
        prop_assert!(s.certificate_holds());
        prop_assert_eq!(g.walk_length(&s.walk), s.mu_length);
    }

    #[test]
    fn minimum_circulation_dominates(seed: u64) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(2..=6);
        let g = random::simple_connected(&mut rng, n, 3);
        let d = homcirc::double(&g).unwrap();
        let q = random::task_matrix(&mut rng, &g, 5);
        let alpha = homcirc::lift_task(&g, &d, &q).unwrap();
        let beta = min_circulation_above(&d.graph, &alpha).unwrap();
        prop_assert!(chain_leq(&alpha, &beta));
        prop_assert!(is_circulation(&d.graph, &beta));
        let cap = 2 * (alpha.norm() as i64).max(1);
        let wide = min_circulation_above_with_capacity(&d.graph, &alpha, cap).unwrap();
        prop_assert_eq!(homcirc::l1_norm(&d.graph, &wide), homcirc::l1_norm(&d.graph, &beta));
    }

    #[test]
    fn json_round_trips(seed: u64) {
        let Some((_, g, a)) = instance(seed) else { return Ok(()) };
        prop_assert_eq!(parse_graph(&graph_to_json(&g).to_string()).unwrap(), g.clone());
        prop_assert_eq!(parse_chain(&chain_to_json(&a).to_string()).unwrap(), a.clone());
        let c = detect_dcc(&g, &a).unwrap();
        prop_assert_eq!(parse_darts(&darts_to_json(c.darts()).to_string()).unwrap(), c.darts().to_vec());
    }

    #[test]
    fn contraction_counts(seed: u64, picks in prop::collection::btree_set(0usize..8, 0..5)) {
        let mut rng = random::rng(seed);
        let n = rng.gen_range(1..=6);
        let g = random::connected_multigraph(&mut rng, n, 8);
        let h: Vec<usize> = picks.into_iter().filter(|&e| e < g.edge_count()).collect();
        let c = contract(&g, &h).unwrap();
        prop_assert_eq!(c.graph.edge_count() + h.len(), g.edge_count());
        let pairs: Vec<(usize, usize)> = h.iter().map(|&e| (g.edge(e).u, g.edge(e).v)).collect();
        prop_assert_eq!(c.graph.vertex_count(), components(g.vertex_count(), &pairs));
        for (id, e) in g.edges().iter().enumerate() {
            match c.edge_map[id] {
                Some(k) => {
                    prop_assert_eq!(c.edge_origin[k], id);
                    prop_assert_eq!(c.graph.edge(k).u, c.vertex_map[e.u]);
                    prop_assert_eq!(c.graph.edge(k).v, c.vertex_map[e.v]);
                }
                None => prop_assert!(h.contains(&id)),
            }
        }
    }
}
