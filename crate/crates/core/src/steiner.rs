//! Exact minimum Steiner trees by dynamic programming over terminal subsets.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, UnionFind, VertexId};

/// Default cap on the number of terminals.
pub const DEFAULT_TERMINAL_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerTree {
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
    pub weight: BigRational,
}

#[derive(Clone, Copy)]
enum Back {
    Leaf,
    Edge(EdgeId, VertexId),
    Merge(usize),
}

/// Minimum-weight tree containing every terminal. Among trees of equal
/// weight, the one containing the smallest edge id on which two candidates
/// differ wins.
pub fn steiner_tree(g: &Graph, terminals: &[VertexId]) -> Result<SteinerTree> {
    let mut terms = terminals.to_vec();
    terms.sort_unstable();
    terms.dedup();
    if terms.is_empty() {
        return Err(Error::BadTerminals("no terminals".into()));
    }
    for &t in &terms {
        g.check_vertex(t)?;
    }
    if terms.len() > 24 {
        return Err(Error::TooManyComponents {
            count: terms.len(),
            limit: 24,
        });
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let (_, scaled) = g.scaled_weights();
    // weight first, then a bonus 2^(m-1-e) for each edge used
    let big_m = (BigInt::one() << m) + 1;
    let cost: Vec<BigInt> = (0..m)
        .map(|e| &scaled[e] * &big_m - (BigInt::one() << (m - 1 - e)))
        .collect();

    let s = terms.len();
    let full = (1usize << s) - 1;
    let mut dp: Vec<Vec<Option<BigInt>>> = vec![vec![None; n]; full + 1];
    let mut back: Vec<Vec<Back>> = vec![vec![Back::Leaf; n]; full + 1];
    for (i, &t) in terms.iter().enumerate() {
        dp[1 << i][t] = Some(BigInt::zero());
    }
    for mask in 1..=full {
        if mask.count_ones() > 1 {
            let low = mask & mask.wrapping_neg();
            for v in 0..n {
                let mut sub = (mask - 1) & mask;
                while sub > 0 {
                    if sub & low != 0 {
                        if let (Some(a), Some(b)) = (&dp[sub][v], &dp[mask ^ sub][v]) {
                            let c = a + b;
                            if dp[mask][v].as_ref().is_none_or(|cur| c < *cur) {
                                dp[mask][v] = Some(c);
                                back[mask][v] = Back::Merge(sub);
                            }
                        }
                    }
                    sub = (sub - 1) & mask;
                }
            }
        }
        let mut heap: BinaryHeap<Reverse<(BigInt, VertexId)>> = (0..n)
            .filter_map(|v| dp[mask][v].clone().map(|c| Reverse((c, v))))
            .collect();
        let mut done = vec![false; n];
        while let Some(Reverse((c, v))) = heap.pop() {
            if done[v] || dp[mask][v].as_ref() != Some(&c) {
                continue;
            }
            done[v] = true;
            for &d in g.out_darts(v) {
                let u = g.head(d);
                if u == v || done[u] {
                    continue;
                }
                let nc = &c + &cost[d.edge];
                if dp[mask][u].as_ref().is_none_or(|cur| nc < *cur) {
                    dp[mask][u] = Some(nc.clone());
                    back[mask][u] = Back::Edge(d.edge, v);
                    heap.push(Reverse((nc, u)));
                }
            }
        }
    }
    if dp[full][terms[0]].is_none() {
        return Err(Error::Disconnected);
    }
    let mut edges = Vec::new();
    let mut stack = vec![(full, terms[0])];
    while let Some((mask, v)) = stack.pop() {
        match back[mask][v] {
            Back::Leaf => {}
            Back::Edge(e, prev) => {
                edges.push(e);
                stack.push((mask, prev));
            }
            Back::Merge(sub) => {
                stack.push((sub, v));
                stack.push((mask ^ sub, v));
            }
        }
    }
    edges.sort_unstable();
    let before = edges.len();
    edges.dedup();
    debug_assert_eq!(
        before,
        edges.len(),
        "optimal Steiner solution reuses an edge"
    );
    let weight = edges
        .iter()
        .fold(BigRational::zero(), |acc, &e| acc + g.weight(e));
    Ok(SteinerTree { edges, weight })
}

/// Checks that `edges` form a tree (no loops, no cycles, connected) whose
/// vertex set contains every terminal and whose leaves are all terminals.
pub fn check_steiner_tree(g: &Graph, edges: &[EdgeId], terminals: &[VertexId]) -> Result<()> {
    let bad = |msg: String| Err(Error::BadTree(msg));
    let mut seen = vec![false; g.edge_count()];
    let mut uf = UnionFind::new(g.vertex_count());
    let mut degree = vec![0usize; g.vertex_count()];
    for &e in edges {
        g.check_edge(e)?;
        if std::mem::replace(&mut seen[e], true) {
            return bad(format!("edge {e} listed twice"));
        }
        let edge = g.edge(e);
        if edge.is_loop() {
            return bad(format!("edge {e} is a loop"));
        }
        if !uf.union(edge.u, edge.v) {
            return bad(format!("edge {e} closes a cycle"));
        }
        degree[edge.u] += 1;
        degree[edge.v] += 1;
    }
    let mut terms = terminals.to_vec();
    terms.sort_unstable();
    terms.dedup();
    let Some(&t0) = terms.first() else {
        return bad("no terminals".into());
    };
    if edges.is_empty() {
        return if terms.len() == 1 {
            Ok(())
        } else {
            bad("empty tree with several terminals".into())
        };
    }
    let root = uf.find(t0);
    for &t in &terms {
        if degree[t] == 0 || uf.find(t) != root {
            return bad(format!("terminal {t} is not on the tree"));
        }
    }
    for v in 0..g.vertex_count() {
        if degree[v] > 0 && uf.find(v) != root {
            return bad("tree is not connected".into());
        }
        if degree[v] == 1 && terms.binary_search(&v).is_err() {
            return bad(format!("leaf {v} is not a terminal"));
        }
    }
    Ok(())
}
