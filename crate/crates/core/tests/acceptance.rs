//! Acceptance harness. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use homcirc::counting::{count_dcc_removing, determinant, for_each_circuit};
use homcirc::homology::{support_subgraph, vertex_degrees};
use homcirc::hscdp::shortest_circuit_bruteforce;
use homcirc::random::{self, Rng64};
use homcirc::trp::coverage;
use homcirc::{
    abelianize, brute_force_trp, count_dcc, detect_dcc, detect_dcc_with, double,
    enumerate_circuits, fixtures, l1_norm, reduced_determinant, solve_hscdp, solve_hscdp_with,
    solve_trp, weighted_laplacian, Circuit, Edge, Graph, HscdpOptions, Walk, Weight,
};

// Runtime ceilings per criterion.
const LIMIT_AC1: Duration = Duration::from_secs(1);
const LIMIT_AC2: Duration = Duration::from_secs(1);
const LIMIT_AC3: Duration = Duration::from_secs(1);
const LIMIT_AC4: Duration = Duration::from_secs(60);
const LIMIT_AC5: Duration = Duration::from_secs(120);
const LIMIT_AC6: Duration = Duration::from_secs(180);

// Case counts.
const AC4_CASES: usize = 200;
const AC5_CASES: usize = 50;
const AC6_CASES: usize = 100;
const AC7_CASES: usize = 500;

const ENUM_BUDGET: u64 = 50_000_000;
const SEARCH_BUDGET: u64 = 200_000_000;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, t: Duration) -> Result<(), String> {
    check(t <= limit, || format!("took {t:?}, limit {limit:?}"))
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn ac1() -> Outcome {
    let t = Instant::now();
    let g = fixtures::k4();
    let a = fixtures::k4_alpha();
    let r = count_dcc(&g, &a).map_err(|e| e.to_string())?;
    check(r.total == int(20), || format!("total {}", r.total))?;
    check(r.norm == int(10), || format!("norm {}", r.norm))?;
    check(r.multiplicity_factor == int(24), || {
        format!("edge factorials {}", r.multiplicity_factor)
    })?;
    let l = weighted_laplacian(&g, &a).map_err(|e| e.to_string())?;
    for w in 0..g.vertex_count() {
        let d = reduced_determinant(&l, w);
        check(d == int(12), || format!("determinant {d} removing {w}"))?;
        let r = count_dcc_removing(&g, &a, Some(w)).map_err(|e| e.to_string())?;
        check(r.total == int(20), || {
            format!("total {} removing {w}", r.total)
        })?;
    }
    let all = enumerate_circuits(&g, &a, ENUM_BUDGET).map_err(|e| e.to_string())?;
    check(all.len() == 20, || format!("enumerated {}", all.len()))?;
    within(LIMIT_AC1, t.elapsed())?;
    Ok(format!(
        "total=20 norm=10 edge-factorials=24 det=12 x4 enumerated=20 in {:?}",
        t.elapsed()
    ))
}

fn ac2() -> Outcome {
    let t = Instant::now();
    let g = fixtures::k4();
    let a = fixtures::k4_alpha();
    let c = detect_dcc(&g, &a).map_err(|e| e.to_string())?;
    check(c.len() == 10, || format!("length {}", c.len()))?;
    check(abelianize(c.walk()) == a, || {
        "abelianization differs".into()
    })?;
    let p =
        detect_dcc_with(&g, &a, &fixtures::k4_reference_options()).map_err(|e| e.to_string())?;
    check(
        p.darts() == fixtures::k4_reference_circuit().as_slice(),
        || format!("override run gave {:?}", p.darts()),
    )?;
    within(LIMIT_AC2, t.elapsed())?;
    Ok(format!(
        "length=10, literal sequence reproduced in {:?}",
        t.elapsed()
    ))
}

fn ac3() -> Outcome {
    let t = Instant::now();
    let g = fixtures::three_blocks();
    let a = fixtures::three_blocks_alpha();
    let s = solve_hscdp(&g, &a).map_err(|e| e.to_string())?;
    let two = BigRational::from_integer(int(2));
    check(s.circuit.is_some(), || {
        format!("not a circuit: {:?}", s.diagnostic)
    })?;
    check(s.walk.len() == 16, || format!("length {}", s.walk.len()))?;
    check(s.tree_weight == two, || {
        format!("tree weight {}", s.tree_weight)
    })?;
    check(s.norm == BigRational::from_integer(int(12)), || {
        format!("norm {}", s.norm)
    })?;
    check(s.certificate_holds(), || "length identity fails".into())?;
    let opts = HscdpOptions {
        force_tree: Some(fixtures::three_blocks_star_tree()),
        ..HscdpOptions::default()
    };
    let star = solve_hscdp_with(&g, &a, &opts).map_err(|e| e.to_string())?;
    check(star.walk.len() == 18, || {
        format!("star length {}", star.walk.len())
    })?;
    check(
        star.walk.darts() == fixtures::three_blocks_star_circuit().as_slice(),
        || "star circuit differs from the listed one".into(),
    )?;
    within(LIMIT_AC3, t.elapsed())?;
    Ok(format!(
        "length=16=2*2+12, star tree length=18 in {:?}",
        t.elapsed()
    ))
}

fn ac4() -> Outcome {
    let t = Instant::now();
    let mut rng = random::rng(0xac4);
    let mut cases = 0;
    let mut circuits = 0u64;
    while cases < AC4_CASES {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(n.max(2)..=8);
        let g = random::connected_multigraph(&mut rng, n, m);
        let Some(a) = random::connected_circulation(&mut rng, &g, 12) else {
            continue;
        };
        let r = count_dcc(&g, &a).map_err(|e| format!("case {cases}: {e}"))?;
        let want = a.dense(g.edge_count());
        let mut bad = None;
        let found = for_each_circuit(&g, &a, ENUM_BUDGET, |darts| {
            let mut ab = vec![0i64; want.len()];
            let mut dir: Vec<Option<bool>> = vec![None; want.len()];
            let mut consistent = true;
            for d in darts {
                ab[d.edge] += d.sign();
                consistent &= *dir[d.edge].get_or_insert(d.forward) == d.forward;
            }
            if bad.is_none() && (!consistent || ab != want || darts.len() as u64 != a.norm()) {
                bad = Some(darts.to_vec());
            }
        })
        .map_err(|e| format!("case {cases}: {e}"))?;
        check(bad.is_none(), || {
            format!("case {cases}: bad circuit {bad:?}")
        })?;
        check(r.total == BigInt::from(found), || {
            format!("case {cases}: count {} vs enumeration {found}", r.total)
        })?;
        circuits += found;
        cases += 1;
    }
    within(LIMIT_AC4, t.elapsed())?;
    Ok(format!(
        "{cases} instances, {circuits} circuits matched in {:?}",
        t.elapsed()
    ))
}

fn ac5() -> Outcome {
    let t = Instant::now();
    let mut rng = random::rng(0xac5);
    let weights = ["1", "2", "1/2", "3"];
    for case in 0..AC5_CASES {
        let n = rng.gen_range(2..=7);
        let pool = if case % 2 == 0 {
            &weights[..1]
        } else {
            &weights[..]
        };
        let (g, a) = random::disconnected_instance(&mut rng, n, pool);
        let s = solve_hscdp(&g, &a).map_err(|e| format!("case {case}: {e}"))?;
        check(s.circuit.is_some(), || {
            format!("case {case}: {:?}", s.diagnostic)
        })?;
        check(abelianize(&s.walk) == a, || {
            format!("case {case}: wrong abelianization")
        })?;
        check(s.certificate_holds(), || {
            format!("case {case}: length identity fails")
        })?;
        check(g.walk_length(&s.walk) == s.mu_length, || {
            format!("case {case}: length mismatch")
        })?;
        let best = shortest_circuit_bruteforce(&g, &a, &s.mu_length, SEARCH_BUDGET)
            .map_err(|e| format!("case {case}: search {e}"))?;
        let found = g.walk_length(best.walk());
        check(found == s.mu_length, || {
            format!("case {case}: search found {found} below {}", s.mu_length)
        })?;
    }
    within(LIMIT_AC5, t.elapsed())?;
    Ok(format!(
        "{AC5_CASES} instances, no shorter circuit found, identity exact in {:?}",
        t.elapsed()
    ))
}

fn ac6() -> Outcome {
    let t = Instant::now();
    let mut rng = random::rng(0xac6);
    let mut certified = 0;
    for case in 0..AC6_CASES {
        let n = rng.gen_range(2..=6);
        let extra = rng.gen_range(0..=4);
        let g = random::simple_connected(&mut rng, n, extra);
        let q = random::task_matrix(&mut rng, &g, 5);
        let depot = rng.gen_range(0..n);
        let s = solve_trp(&g, &q, depot).map_err(|e| format!("case {case}: {e}"))?;
        check(s.walk.start() == depot && s.walk.is_closed(), || {
            format!("case {case}: tour does not start and end at the depot")
        })?;
        let cov = coverage(&g, &s.walk, &q);
        check(
            cov.iter().all(|c| c.covered >= c.required) && s.is_feasible(),
            || format!("case {case}: demand not met"),
        )?;
        check(g.walk_length(&s.walk) == s.mu_length, || {
            format!("case {case}: length mismatch")
        })?;
        if s.certified_optimal {
            certified += 1;
            let best = brute_force_trp(&g, &q, depot, &s.mu_length, SEARCH_BUDGET)
                .map_err(|e| format!("case {case}: search {e}"))?;
            let found = g.walk_length(&best);
            check(found == s.mu_length, || {
                format!("case {case}: search found {found} below {}", s.mu_length)
            })?;
        }
    }
    within(LIMIT_AC6, t.elapsed())?;
    Ok(format!(
        "{AC6_CASES} instances feasible, {certified} certified and confirmed in {:?}",
        t.elapsed()
    ))
}

fn reweight(rng: &mut Rng64, g: &Graph) -> Graph {
    let pool = ["1", "2", "1/2", "5/3", "7"];
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let w: Weight = pool[rng.gen_range(0..pool.len())].parse().unwrap();
            Edge::weighted(e.u, e.v, w)
        })
        .collect();
    Graph::new(g.vertex_count(), edges).unwrap()
}

fn random_walk(rng: &mut Rng64, g: &Graph, len: usize) -> Walk {
    let mut v = rng.gen_range(0..g.vertex_count());
    let mut darts = Vec::with_capacity(len);
    for _ in 0..len {
        let out = g.out_darts(v);
        let d = out[rng.gen_range(0..out.len())];
        darts.push(d);
        v = g.head(d);
    }
    Walk::new(g, darts).unwrap()
}

fn ac7() -> Outcome {
    let t = Instant::now();
    let mut rng = random::rng(0xac7);

    // length of any walk, and of circuits in particular, bounds its norm
    let mut circuit_cases = 0;
    for case in 0..AC7_CASES {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(n.max(1)..=9);
        let base = random::connected_multigraph(&mut rng, n, m);
        let g = reweight(&mut rng, &base);
        let len = rng.gen_range(1..=14);
        let w = random_walk(&mut rng, &g, len);
        check(g.walk_length(&w) >= l1_norm(&g, &abelianize(&w)), || {
            format!("norm bound fails on walk {case}")
        })?;
        if let Ok(c) = Circuit::from_walk(w) {
            circuit_cases += 1;
            check(
                g.walk_length(c.walk()) >= l1_norm(&g, &abelianize(c.walk())),
                || format!("norm bound fails on circuit {case}"),
            )?;
        }
    }
    while circuit_cases < AC7_CASES {
        let n = rng.gen_range(2..=7);
        let (g, a) = random::disconnected_instance(&mut rng, n, &["1", "1/2", "3"]);
        let s = solve_hscdp(&g, &a).map_err(|e| e.to_string())?;
        let c = s.circuit.ok_or("woven walk is not a circuit")?;
        let k = rng.gen_range(0..c.len()) as isize;
        let c = c.translate(&g, k);
        check(g.walk_length(c.walk()) >= l1_norm(&g, &a), || {
            "norm bound fails on woven circuit".into()
        })?;
        circuit_cases += 1;
    }

    // boundary of an open walk is +1 at its start and -1 at its end
    let mut open = 0;
    while open < AC7_CASES {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(n..=9);
        let g = random::connected_multigraph(&mut rng, n, m);
        let len = rng.gen_range(1..=12);
        let w = random_walk(&mut rng, &g, len);
        if w.is_closed() {
            continue;
        }
        let deg = vertex_degrees(&g, &abelianize(&w));
        for (v, &d) in deg.iter().enumerate() {
            let want = if v == w.start() {
                1
            } else if v == w.end() {
                -1
            } else {
                0
            };
            check(d == want, || {
                format!("boundary {d} at vertex {v}, expected {want}")
            })?;
        }
        open += 1;
    }

    // lifting to the doubled graph preserves length and projects back
    let mut closed = 0;
    for case in 0..AC7_CASES {
        let n = rng.gen_range(2..=6);
        let extra = rng.gen_range(0..=4);
        let base = random::simple_connected(&mut rng, n, extra);
        let g = reweight(&mut rng, &base);
        let dbl = double(&g).map_err(|e| e.to_string())?;
        let len = rng.gen_range(1..=12);
        let w = random_walk(&mut rng, &g, len);
        let lifted = dbl.lift_walk(&w);
        check(dbl.graph.walk_length(&lifted) == g.walk_length(&w), || {
            format!("lift changes length in case {case}")
        })?;
        check(lifted.darts().iter().all(|d| d.forward), || {
            format!("lift uses a backward twin in case {case}")
        })?;
        check(dbl.project_walk(&g, &lifted) == w, || {
            format!("projection differs in case {case}")
        })?;
        if w.is_closed() {
            closed += 1;
            check(Circuit::from_walk(lifted).is_ok(), || {
                format!("closed lift is not a circuit in case {case}")
            })?;
        }
    }

    // reduced determinant does not depend on the removed vertex
    let mut dets = 0;
    while dets < AC7_CASES {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(n.max(2)..=9);
        let g = random::connected_multigraph(&mut rng, n, m);
        let Some(a) = random::connected_circulation(&mut rng, &g, 14) else {
            continue;
        };
        let (sub, sa, _) = support_subgraph(&g, &a).map_err(|e| e.to_string())?;
        let l = weighted_laplacian(&sub, &sa).map_err(|e| e.to_string())?;
        check(determinant(&l) == BigInt::from(0), || {
            "full Laplacian is not singular".into()
        })?;
        let first = reduced_determinant(&l, 0);
        check(first > BigInt::from(0), || "no arborescence".into())?;
        for w in 1..sub.vertex_count() {
            let d = reduced_determinant(&l, w);
            check(d == first, || {
                format!("determinant {d} removing {w}, {first} removing 0")
            })?;
        }
        dets += 1;
    }

    Ok(format!(
        "norm bound {AC7_CASES} walks + {circuit_cases} circuits, boundary {open}, lift {AC7_CASES} ({closed} closed), determinant {dets} in {:?}",
        t.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("AC1 k4-count", ac1),
        ("AC2 k4-detect", ac2),
        ("AC3 three_blocks-shortest", ac3),
        ("AC4 count-vs-enumeration", ac4),
        ("AC5 shortest-minimality", ac5),
        ("AC6 routing-certification", ac6),
        ("AC7 invariants", ac7),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
