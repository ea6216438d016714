//! One-carrier transportation routing on a simple graph: every demand moves
//! items between adjacent vertices, one at a time, on a tour from a depot.
//! The graph is doubled so each direction of travel has its own edge, the
//! demands become a chain on the doubling, and a minimum-norm circulation
//! above that chain is turned into a tour.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flow::{min_cost_circulation, Arc};
use crate::graph::{double, Dart, Doubling, EdgeId, Graph, VertexId, Walk};
use crate::homology::{l1_norm, support_info, Chain};
use crate::hscdp::solve_hscdp;

/// Nonnegative demands on ordered pairs of adjacent vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TaskMatrix {
    demands: BTreeMap<(VertexId, VertexId), u64>,
}

impl TaskMatrix {
    pub fn new() -> Self {
        TaskMatrix::default()
    }

    pub fn from_triples(items: impl IntoIterator<Item = (VertexId, VertexId, u64)>) -> Self {
        let mut q = TaskMatrix::new();
        for (i, j, k) in items {
            q.add(i, j, k);
        }
        q
    }

    pub fn add(&mut self, from: VertexId, to: VertexId, count: u64) {
        if count > 0 {
            *self.demands.entry((from, to)).or_insert(0) += count;
        }
    }

    pub fn get(&self, from: VertexId, to: VertexId) -> u64 {
        self.demands.get(&(from, to)).copied().unwrap_or(0)
    }

    /// Nonzero entries in ascending (from, to) order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId, u64)> + '_ {
        self.demands.iter().map(|(&(i, j), &k)| (i, j, k))
    }

    pub fn total(&self) -> u64 {
        self.demands.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.demands.is_empty()
    }
}

fn edge_between(g: &Graph, i: VertexId, j: VertexId) -> Option<EdgeId> {
    g.out_darts(i)
        .iter()
        .find(|&&d| g.head(d) == j)
        .map(|d| d.edge)
}

/// Chain on the doubling with `q_ij` on the twin running `i -> j`.
pub fn lift_task(g: &Graph, doubling: &Doubling, q: &TaskMatrix) -> Result<Chain> {
    let mut alpha = Chain::zero();
    for (i, j, k) in q.iter() {
        g.check_vertex(i)?;
        g.check_vertex(j)?;
        let e = edge_between(g, i, j)
            .filter(|_| i != j)
            .ok_or(Error::NonAdjacentDemand { from: i, to: j })?;
        let (a, b) = doubling.twins(e);
        let twin = if g.edge(e).u == i { a } else { b };
        alpha.add_to(twin, k as i64);
    }
    Ok(alpha)
}

/// Minimum-norm circulation `beta` with `alpha <= beta`. Among minima the
/// coefficient vector is lexicographically smallest.
pub fn min_circulation_above(g: &Graph, alpha: &Chain) -> Result<Chain> {
    let cap = alpha.norm().max(1) as i64;
    min_circulation_above_with_capacity(g, alpha, cap)
}

/// As [`min_circulation_above`] with an explicit per-arc capacity.
pub fn min_circulation_above_with_capacity(g: &Graph, alpha: &Chain, cap: i64) -> Result<Chain> {
    alpha.check_on(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if alpha.is_zero() {
        return Ok(Chain::zero());
    }
    let m = g.edge_count();
    let (_, w) = g.scaled_weights();
    // eps_e = K^(m-1-e) orders ties by edge id; M puts the weight first
    let k = BigInt::from(2 * cap + 1);
    let eps: Vec<BigInt> = (0..m)
        .map(|e| num_traits::pow(k.clone(), m - 1 - e))
        .collect();
    let eps_sum: BigInt = eps.iter().sum();
    let big_m = BigInt::from(2 * cap) * eps_sum + BigInt::one();

    let mut arcs = Vec::new();
    let mut owner = Vec::new();
    for e in 0..m {
        let edge = g.edge(e);
        let a = alpha.coeff(e);
        let fwd = &w[e] * &big_m + &eps[e];
        let bwd = &w[e] * &big_m - &eps[e];
        if a >= 0 {
            arcs.push(Arc {
                from: edge.u,
                to: edge.v,
                lower: a,
                cap,
                cost: fwd,
            });
            owner.push((e, 1));
        }
        if a <= 0 {
            arcs.push(Arc {
                from: edge.v,
                to: edge.u,
                lower: -a,
                cap,
                cost: bwd,
            });
            owner.push((e, -1));
        }
    }
    let flow = min_cost_circulation(g.vertex_count(), &arcs)?;
    let mut beta = Chain::zero();
    for ((e, sign), f) in owner.into_iter().zip(flow) {
        beta.add_to(e, sign * f);
    }
    Ok(beta)
}

/// Traversals of each demanded arc by the tour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub from: VertexId,
    pub to: VertexId,
    pub required: u64,
    pub covered: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrpSolution {
    /// Closed walk on the input graph starting at the depot.
    pub walk: Walk,
    pub mu_length: BigRational,
    /// Circulation on the doubled graph.
    pub beta: Chain,
    pub beta_norm: BigRational,
    /// True when `beta` has connected support, which makes the tour optimal.
    pub certified_optimal: bool,
    pub coverage: Vec<Coverage>,
    /// Extra length spent joining the components of `beta`.
    pub steiner_gap: BigRational,
}

impl TrpSolution {
    pub fn is_feasible(&self) -> bool {
        self.coverage.iter().all(|c| c.covered >= c.required)
    }
}

/// Number of traversals `i -> j` for each demanded pair.
pub fn coverage(g: &Graph, walk: &Walk, q: &TaskMatrix) -> Vec<Coverage> {
    let mut seen: BTreeMap<(VertexId, VertexId), u64> = BTreeMap::new();
    for &d in walk.darts() {
        *seen.entry((g.tail(d), g.head(d))).or_insert(0) += 1;
    }
    q.iter()
        .map(|(i, j, k)| Coverage {
            from: i,
            to: j,
            required: k,
            covered: seen.get(&(i, j)).copied().unwrap_or(0),
        })
        .collect()
}

fn validate_task(g: &Graph, q: &TaskMatrix, depot: VertexId) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::NotSimpleGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    g.check_vertex(depot)?;
    if q.is_empty() {
        return Err(Error::EmptyTask);
    }
    Ok(())
}

/// Tour from `depot` meeting every demand.
pub fn solve_trp(g: &Graph, q: &TaskMatrix, depot: VertexId) -> Result<TrpSolution> {
    validate_task(g, q, depot)?;
    let dbl = double(g)?;
    let gh = &dbl.graph;
    let alpha = lift_task(g, &dbl, q)?;
    let touches = |c: &Chain, v: VertexId| {
        c.iter()
            .any(|(e, _)| gh.edge(e).u == v || gh.edge(e).v == v)
    };

    let beta = if touches(&alpha, depot) {
        min_circulation_above(gh, &alpha)?
    } else {
        // force the tour through the depot along each twin leaving it
        let mut best: Option<((BigRational, bool, Vec<i64>), Chain)> = None;
        for &d in gh.out_darts(depot).iter().filter(|d| d.forward) {
            let mut a = alpha.clone();
            a.add_dart(d, 1);
            let b = min_circulation_above(gh, &a)?;
            let connected = support_info(gh, &b)?.connected;
            let key = (l1_norm(gh, &b), !connected, b.dense(gh.edge_count()));
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, b));
            }
        }
        best.expect("a connected graph has an edge at the depot").1
    };
    if !touches(&beta, depot) {
        return Err(Error::StartUnreachable(depot));
    }
    let info = support_info(gh, &beta)?;
    let sol = solve_hscdp(gh, &beta)?;
    let darts = sol.walk.darts();
    let k = darts
        .iter()
        .position(|&d| gh.tail(d) == depot)
        .ok_or(Error::StartUnreachable(depot))?;
    let rotated: Vec<Dart> = darts[k..].iter().chain(&darts[..k]).copied().collect();
    let lifted = Walk::new(gh, rotated).expect("rotation of a closed walk");
    let walk = dbl.project_walk(g, &lifted);
    Ok(TrpSolution {
        mu_length: g.walk_length(&walk),
        coverage: coverage(g, &walk, q),
        beta_norm: l1_norm(gh, &beta),
        steiner_gap: BigRational::from_integer(2.into()) * &sol.tree_weight,
        certified_optimal: info.connected,
        beta,
        walk,
    })
}

/// Shortest tour from `depot` meeting every demand with length at most
/// `bound`, by exhaustive search over closed walks (backtracks allowed).
pub fn brute_force_trp(
    g: &Graph,
    q: &TaskMatrix,
    depot: VertexId,
    bound: &BigRational,
    budget: u64,
) -> Result<Walk> {
    g.check_vertex(depot)?;
    if q.is_empty() {
        return Err(Error::EmptyTask);
    }
    let (denom, w) = g.scaled_weights();
    let limit = (bound * BigRational::from_integer(denom))
        .floor()
        .to_integer();
    let n = g.vertex_count();
    let mut unmet: BTreeMap<(VertexId, VertexId), u64> = BTreeMap::new();
    let mut unmet_cost = BigInt::zero();
    for (i, j, k) in q.iter() {
        g.check_vertex(i)?;
        g.check_vertex(j)?;
        let e = edge_between(g, i, j)
            .filter(|_| i != j)
            .ok_or(Error::NonAdjacentDemand { from: i, to: j })?;
        unmet.insert((i, j), k);
        unmet_cost += &w[e] * BigInt::from(k);
    }
    // distances to the depot under scaled weights
    let mut dist: Vec<Option<BigInt>> = vec![None; n];
    dist[depot] = Some(BigInt::zero());
    for _ in 0..n {
        for e in 0..g.edge_count() {
            let edge = g.edge(e);
            for (a, b) in [(edge.u, edge.v), (edge.v, edge.u)] {
                if let Some(db) = dist[b].clone() {
                    let nd = db + &w[e];
                    if dist[a].as_ref().is_none_or(|x| nd < *x) {
                        dist[a] = Some(nd);
                    }
                }
            }
        }
    }
    let mut search = TourSearch {
        g,
        w,
        dist,
        depot,
        unmet,
        unmet_cost,
        path: Vec::new(),
        len: BigInt::zero(),
        limit,
        best: None,
        nodes: 0,
        budget,
    };
    search.dfs(depot)?;
    let darts = search.best.ok_or(Error::NotFound)?;
    Walk::new(g, darts)
}

struct TourSearch<'a> {
    g: &'a Graph,
    w: Vec<BigInt>,
    dist: Vec<Option<BigInt>>,
    depot: VertexId,
    unmet: BTreeMap<(VertexId, VertexId), u64>,
    unmet_cost: BigInt,
    path: Vec<Dart>,
    len: BigInt,
    limit: BigInt,
    best: Option<Vec<Dart>>,
    nodes: u64,
    budget: u64,
}

impl TourSearch<'_> {
    fn dfs(&mut self, cur: VertexId) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if cur == self.depot && !self.path.is_empty() && self.unmet_cost.is_zero() {
            self.best = Some(self.path.clone());
            self.limit = &self.len - 1;
            return Ok(());
        }
        for &d in self.g.out_darts(cur) {
            let next = self.g.head(d);
            let Some(back) = self.dist[next].clone() else {
                continue;
            };
            let e = d.edge;
            let key = (cur, next);
            let hit = self.unmet.get(&key).is_some_and(|&k| k > 0);
            let unmet_cost = if hit {
                &self.unmet_cost - &self.w[e]
            } else {
                self.unmet_cost.clone()
            };
            let len = &self.len + &self.w[e];
            let lower = back.max(unmet_cost.clone());
            if &len + &lower > self.limit {
                continue;
            }
            if hit {
                *self.unmet.get_mut(&key).unwrap() -= 1;
            }
            let saved_cost = std::mem::replace(&mut self.unmet_cost, unmet_cost);
            let saved_len = std::mem::replace(&mut self.len, len);
            self.path.push(d);
            let r = self.dfs(next);
            self.path.pop();
            self.len = saved_len;
            self.unmet_cost = saved_cost;
            if hit {
                *self.unmet.get_mut(&key).unwrap() += 1;
            }
            r?;
        }
        Ok(())
    }
}
