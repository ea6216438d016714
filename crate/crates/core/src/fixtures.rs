//! Built-in worked instances: the oriented K4 with a connected flow, and the
//! nine-vertex graph whose circulation has three support components.
//!
//! Vertices are 0-based, so `v1` is vertex 0. An edge named `eij` is stored
//! oriented from `vi` to `vj`.

use crate::counting::{count_dcc, enumerate_circuits};
use crate::graph::{Circuit, Dart, EdgeId, Graph};
use crate::hierholzer::{detect_dcc_with, DetectOptions};
use crate::homology::{chain_leq, Chain};
use crate::hscdp::{solve_hscdp, solve_hscdp_with, HscdpOptions};

pub const E12: EdgeId = 0;
pub const E14: EdgeId = 1;
pub const E24: EdgeId = 2;
pub const E31: EdgeId = 3;
pub const E32: EdgeId = 4;
pub const E43: EdgeId = 5;

/// K4 with reference orientations v1->v2, v1->v4, v2->v4, v3->v1, v3->v2, v4->v3.
pub fn k4() -> Graph {
    Graph::from_pairs(4, &[(0, 1), (0, 3), (1, 3), (2, 0), (2, 1), (3, 2)]).unwrap()
}

/// e12 + e14 + 2 e24 + 2 e31 + e32 + 3 e43.
pub fn k4_alpha() -> Chain {
    Chain::from_pairs([(E12, 1), (E14, 1), (E24, 2), (E31, 2), (E32, 1), (E43, 3)])
}

/// e43 e31 e12 e24 e43 e31 e14 e43 e32 e24.
pub fn k4_reference_circuit() -> Vec<Dart> {
    [E43, E31, E12, E24, E43, E31, E14, E43, E32, E24]
        .iter()
        .map(|&e| Dart::forward(e))
        .collect()
}

/// Edge preference reproducing the worked run: leave v1 along e14 first.
pub fn k4_reference_options() -> DetectOptions {
    DetectOptions {
        start: Some(0),
        edge_priority: vec![E14],
    }
}

pub const F_E12: EdgeId = 0;
pub const F_E23: EdgeId = 1;
pub const F_E32: EdgeId = 2;
pub const F_E34: EdgeId = 3;
pub const F_E26: EdgeId = 4;
pub const F_E16: EdgeId = 5;
pub const F_E45: EdgeId = 6;
pub const F_E54: EdgeId = 7;
pub const F_E56: EdgeId = 8;
pub const F_E64: EdgeId = 9;
pub const F_E57: EdgeId = 10;
pub const F_E68: EdgeId = 11;
pub const F_E79: EdgeId = 12;
pub const F_E98: EdgeId = 13;
pub const F_E87: EdgeId = 14;
pub const F_E19: EdgeId = 15;

/// Nine vertices; the support subgraph has components {v2,v3}, {v4,v5,v6}
/// and {v7,v8,v9}, and v1 lies outside it.
pub fn three_blocks() -> Graph {
    Graph::from_pairs(
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 1),
            (2, 3),
            (1, 5),
            (0, 5),
            (3, 4),
            (4, 3),
            (4, 5),
            (5, 3),
            (4, 6),
            (5, 7),
            (6, 8),
            (8, 7),
            (7, 6),
            (0, 8),
        ],
    )
    .unwrap()
}

/// 2 e23 + 2 e32 + 2 e45 + e54 + e56 + e64 + e79 + e98 + e87.
pub fn three_blocks_alpha() -> Chain {
    Chain::from_pairs([
        (F_E23, 2),
        (F_E32, 2),
        (F_E45, 2),
        (F_E54, 1),
        (F_E56, 1),
        (F_E64, 1),
        (F_E79, 1),
        (F_E98, 1),
        (F_E87, 1),
    ])
}

/// Star tree through v1: the edges v1-v2, v1-v6, v1-v9.
pub fn three_blocks_star_tree() -> Vec<EdgeId> {
    vec![F_E12, F_E16, F_E19]
}

/// Weight-2 tree: v3-v4 and v5-v7.
pub fn three_blocks_short_tree() -> Vec<EdgeId> {
    vec![F_E34, F_E57]
}

fn darts(spec: &[(EdgeId, bool)]) -> Vec<Dart> {
    spec.iter().map(|&(e, f)| Dart::new(e, f)).collect()
}

/// 18 darts: e23 e32 e23 e32 e21 e16 e64 e45 e54 e45 e56 e61 e19 e98 e87 e79 e91 e12.
pub fn three_blocks_star_circuit() -> Vec<Dart> {
    darts(&[
        (F_E23, true),
        (F_E32, true),
        (F_E23, true),
        (F_E32, true),
        (F_E12, false),
        (F_E16, true),
        (F_E64, true),
        (F_E45, true),
        (F_E54, true),
        (F_E45, true),
        (F_E56, true),
        (F_E16, false),
        (F_E19, true),
        (F_E98, true),
        (F_E87, true),
        (F_E79, true),
        (F_E19, false),
        (F_E12, true),
    ])
}

/// 16 darts: e32 e23 e32 e23 e34 e45 e54 e45 e57 e79 e98 e87 e75 e56 e64 e43.
pub fn three_blocks_short_circuit() -> Vec<Dart> {
    darts(&[
        (F_E32, true),
        (F_E23, true),
        (F_E32, true),
        (F_E23, true),
        (F_E34, true),
        (F_E45, true),
        (F_E54, true),
        (F_E45, true),
        (F_E57, true),
        (F_E79, true),
        (F_E98, true),
        (F_E87, true),
        (F_E57, false),
        (F_E56, true),
        (F_E64, true),
        (F_E34, false),
    ])
}

/// Outcome of one built-in check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> FixtureCheck {
    FixtureCheck { name, pass, detail }
}

/// Runs the worked instances against their known values.
pub fn check_all() -> Vec<FixtureCheck> {
    let mut out = Vec::new();
    let g = k4();
    let alpha = k4_alpha();

    let reference = Circuit::new(&g, k4_reference_circuit());
    out.push(check(
        "k4-reference-circuit-valid",
        reference.is_ok(),
        match &reference {
            Ok(c) => format!("length {}", c.len()),
            Err(e) => e.to_string(),
        },
    ));

    match detect_dcc_with(&g, &alpha, &k4_reference_options()) {
        Ok(c) => out.push(check(
            "k4-detect",
            c.darts() == k4_reference_circuit().as_slice(),
            format!("length {}", c.len()),
        )),
        Err(e) => out.push(check("k4-detect", false, e.to_string())),
    }

    match count_dcc(&g, &alpha) {
        Ok(r) => out.push(check(
            "k4-count",
            r.total == 20.into()
                && r.norm == 10.into()
                && r.determinant == 12.into()
                && r.multiplicity_factor == 24.into(),
            format!(
                "total {} norm {} det {} out-degree factor {} multiplicity factor {}",
                r.total, r.norm, r.determinant, r.out_degree_factor, r.multiplicity_factor
            ),
        )),
        Err(e) => out.push(check("k4-count", false, e.to_string())),
    }

    match enumerate_circuits(&g, &alpha, 1_000_000) {
        Ok(list) => out.push(check(
            "k4-enumerate",
            list.len() == 20,
            format!("{} circuits", list.len()),
        )),
        Err(e) => out.push(check("k4-enumerate", false, e.to_string())),
    }

    let f = three_blocks();
    let beta = three_blocks_alpha();
    match solve_hscdp(&f, &beta) {
        Ok(s) => out.push(check(
            "three_blocks-shortest",
            s.mu_length == num_rational::BigRational::from_integer(16.into())
                && s.certificate_holds()
                && s.walk.darts() == three_blocks_short_circuit().as_slice(),
            format!("length {} tree weight {}", s.mu_length, s.tree_weight),
        )),
        Err(e) => out.push(check("three_blocks-shortest", false, e.to_string())),
    }
    let star = HscdpOptions {
        force_tree: Some(three_blocks_star_tree()),
        ..HscdpOptions::default()
    };
    match solve_hscdp_with(&f, &beta, &star) {
        Ok(s) => out.push(check(
            "three_blocks-star-tree",
            s.walk.len() == 18
                && s.certificate_holds()
                && s.walk.darts() == three_blocks_star_circuit().as_slice(),
            format!("length {} tree weight {}", s.mu_length, s.tree_weight),
        )),
        Err(e) => out.push(check("three_blocks-star-tree", false, e.to_string())),
    }

    out.push(check(
        "leq-reflexive",
        chain_leq(&alpha, &alpha),
        String::new(),
    ));
    out
}
