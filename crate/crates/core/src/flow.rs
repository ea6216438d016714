//! Exact minimum-cost circulation with lower bounds, by successive shortest
//! paths on a lower-bound-reduced network.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub lower: i64,
    pub cap: i64,
    pub cost: BigInt,
}

struct Residual {
    to: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<BigInt>,
    adj: Vec<Vec<usize>>,
}

impl Residual {
    fn new(n: usize) -> Self {
        Residual {
            to: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    // forward residual arc is id, its reverse is id ^ 1
    fn add(&mut self, from: usize, to: usize, cap: i64, cost: BigInt) -> usize {
        let id = self.to.len();
        self.to.push(to);
        self.cap.push(cap);
        self.cost.push(cost.clone());
        self.adj[from].push(id);
        self.to.push(from);
        self.cap.push(0);
        self.cost.push(-cost);
        self.adj[to].push(id + 1);
        id
    }

    /// Cheapest augmenting path from `s` to `t` by queue-based Bellman-Ford.
    fn shortest_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut dist: Vec<Option<BigInt>> = vec![None; n];
        let mut via = vec![usize::MAX; n];
        let mut queued = vec![false; n];
        dist[s] = Some(BigInt::zero());
        let mut queue = VecDeque::from([s]);
        queued[s] = true;
        while let Some(v) = queue.pop_front() {
            queued[v] = false;
            let dv = dist[v].clone().expect("queued vertices have a distance");
            for &a in &self.adj[v] {
                if self.cap[a] == 0 {
                    continue;
                }
                let w = self.to[a];
                let nd = &dv + &self.cost[a];
                if dist[w].as_ref().is_none_or(|d| nd < *d) {
                    dist[w] = Some(nd);
                    via[w] = a;
                    if !queued[w] {
                        queued[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        dist[t].as_ref()?;
        let mut path = Vec::new();
        let mut v = t;
        while v != s {
            let a = via[v];
            path.push(a);
            v = self.to[a ^ 1];
        }
        path.reverse();
        Some(path)
    }
}

/// Flow on every arc of a minimum-cost circulation respecting
/// `lower <= flow <= cap`. Arc costs must admit no negative cycle.
pub fn min_cost_circulation(n: usize, arcs: &[Arc]) -> Result<Vec<i64>> {
    let (s, t) = (n, n + 1);
    let mut r = Residual::new(n + 2);
    let mut excess = vec![0i64; n];
    let mut ids = Vec::with_capacity(arcs.len());
    for a in arcs {
        if a.lower > a.cap || a.lower < 0 {
            return Err(Error::Infeasible);
        }
        ids.push(r.add(a.from, a.to, a.cap - a.lower, a.cost.clone()));
        excess[a.to] += a.lower;
        excess[a.from] -= a.lower;
    }
    let mut need = 0i64;
    for (v, &b) in excess.iter().enumerate() {
        if b > 0 {
            r.add(s, v, b, BigInt::zero());
            need += b;
        } else if b < 0 {
            r.add(v, t, -b, BigInt::zero());
        }
    }
    let mut sent = 0i64;
    while sent < need {
        let Some(path) = r.shortest_path(s, t) else {
            return Err(Error::Infeasible);
        };
        let push = path.iter().map(|&a| r.cap[a]).min().unwrap_or(0);
        for &a in &path {
            r.cap[a] -= push;
            r.cap[a ^ 1] += push;
        }
        sent += push;
    }
    Ok(arcs
        .iter()
        .zip(&ids)
        .map(|(a, &id)| a.lower + r.cap[id ^ 1])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(from: usize, to: usize, lower: i64, cap: i64, cost: i64) -> Arc {
        Arc {
            from,
            to,
            lower,
            cap,
            cost: cost.into(),
        }
    }

    #[test]
    fn forced_cycle() {
        // lower bound on 0 -> 1 forces a return through the cheaper of two arcs
        let arcs = vec![
            arc(0, 1, 2, 5, 1),
            arc(1, 0, 0, 5, 3),
            arc(1, 2, 0, 5, 1),
            arc(2, 0, 0, 5, 1),
        ];
        let f = min_cost_circulation(3, &arcs).unwrap();
        assert_eq!(f, vec![2, 0, 2, 2]);
    }

    #[test]
    fn zero_when_unconstrained() {
        let arcs = vec![arc(0, 1, 0, 3, 1), arc(1, 0, 0, 3, 1)];
        assert_eq!(min_cost_circulation(2, &arcs).unwrap(), vec![0, 0]);
    }

    #[test]
    fn infeasible() {
        assert_eq!(
            min_cost_circulation(2, &[arc(0, 1, 1, 1, 1)]),
            Err(Error::Infeasible)
        );
        let arcs = vec![arc(0, 1, 3, 3, 1), arc(1, 0, 0, 2, 1)];
        assert_eq!(min_cost_circulation(2, &arcs), Err(Error::Infeasible));
    }
}
