//! Integer 1-chains over the reference orientation, circulations, supports
//! with their induced partial orientation, L1 norms, the sign-and-magnitude
//! partial order, and fundamental cycle bases.

use std::collections::{BTreeMap, VecDeque};
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, EdgeId, Graph, VertexId, Walk};

/// Sparse integer 1-chain. Absent edges have coefficient zero and stored
/// coefficients are never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    coeffs: BTreeMap<EdgeId, i64>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (EdgeId, i64)>) -> Self {
        let mut c = Chain::zero();
        for (e, k) in pairs {
            c.add_to(e, k);
        }
        c
    }

    /// The chain `1 * d`.
    pub fn from_dart(d: Dart) -> Self {
        Chain::from_pairs([(d.edge, d.sign())])
    }

    pub fn coeff(&self, e: EdgeId) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    /// Degree of the chain at a dart: the coefficient, negated for backward darts.
    pub fn dart_coeff(&self, d: Dart) -> i64 {
        self.coeff(d.edge) * d.sign()
    }

    pub fn add_to(&mut self, e: EdgeId, k: i64) {
        if k == 0 {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert(0);
        *slot += k;
        if *slot == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn add_dart(&mut self, d: Dart, times: i64) {
        self.add_to(d.edge, d.sign() * times);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &k)| (e, k))
    }

    pub fn support_edges(&self) -> Vec<EdgeId> {
        self.coeffs.keys().copied().collect()
    }

    /// L1 norm under the trivial metric.
    pub fn norm(&self) -> u64 {
        self.coeffs.values().map(|k| k.unsigned_abs()).sum()
    }

    pub fn restrict(&self, edges: &[EdgeId]) -> Chain {
        Chain::from_pairs(edges.iter().map(|&e| (e, self.coeff(e))))
    }

    /// Dense coefficient vector over `0..m`.
    pub fn dense(&self, m: usize) -> Vec<i64> {
        (0..m).map(|e| self.coeff(e)).collect()
    }

    pub(crate) fn check_on(&self, g: &Graph) -> Result<()> {
        match self.coeffs.keys().next_back() {
            Some(&e) => g.check_edge(e),
            None => Ok(()),
        }
    }
}

impl Add for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        for (e, k) in rhs.iter() {
            out.add_to(e, k);
        }
        out
    }
}

impl Sub for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        self + &(-rhs)
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        Chain::from_pairs(self.iter().map(|(e, k)| (e, -k)))
    }
}

/// Formal sum of the darts of a walk.
pub fn abelianize(walk: &Walk) -> Chain {
    let mut c = Chain::zero();
    for &d in walk.darts() {
        c.add_dart(d, 1);
    }
    c
}

/// Net outflow of the chain at every vertex. Loops cancel.
pub fn vertex_degrees(g: &Graph, alpha: &Chain) -> Vec<i64> {
    let mut deg = vec![0i64; g.vertex_count()];
    for (e, k) in alpha.iter() {
        if e >= g.edge_count() {
            continue;
        }
        let edge = g.edge(e);
        deg[edge.u] += k;
        deg[edge.v] -= k;
    }
    deg
}

/// True when the balancing condition holds at every vertex. Chains that
/// mention edges outside the graph are never circulations.
pub fn is_circulation(g: &Graph, alpha: &Chain) -> bool {
    alpha.check_on(g).is_ok() && vertex_degrees(g, alpha).iter().all(|&d| d == 0)
}

/// One connected component of a support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportComponent {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportInfo {
    pub edges: Vec<EdgeId>,
    /// Positively oriented dart of each support edge, same order as `edges`.
    pub orientation: Vec<Dart>,
    /// Ordered by lowest vertex.
    pub components: Vec<SupportComponent>,
    pub out_degree: Vec<u64>,
    pub in_degree: Vec<u64>,
    pub connected: bool,
    pub universal: bool,
}

impl SupportInfo {
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self
            .components
            .iter()
            .flat_map(|c| c.vertices.iter().copied())
            .collect();
        vs.sort_unstable();
        vs
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.out_degree.get(v).is_some_and(|&d| d > 0)
            || self.in_degree.get(v).is_some_and(|&d| d > 0)
    }
}

pub fn support_info(g: &Graph, alpha: &Chain) -> Result<SupportInfo> {
    if alpha.is_zero() {
        return Err(Error::ZeroChain);
    }
    alpha.check_on(g)?;
    let edges = alpha.support_edges();
    let mut out_degree = vec![0u64; g.vertex_count()];
    let mut in_degree = vec![0u64; g.vertex_count()];
    let mut orientation = Vec::with_capacity(edges.len());
    for (e, k) in alpha.iter() {
        let d = Dart::new(e, k > 0);
        orientation.push(d);
        out_degree[g.tail(d)] += k.unsigned_abs();
        in_degree[g.head(d)] += k.unsigned_abs();
    }
    let components: Vec<SupportComponent> = g
        .components_of(edges.iter().copied())
        .into_iter()
        .map(|(vertices, edges)| SupportComponent { vertices, edges })
        .collect();
    let connected = components.len() == 1;
    let universal = edges.len() == g.edge_count();
    Ok(SupportInfo {
        edges,
        orientation,
        components,
        out_degree,
        in_degree,
        connected,
        universal,
    })
}

/// `sum |c_e| mu(e)` using the graph's weights.
pub fn l1_norm(g: &Graph, alpha: &Chain) -> BigRational {
    alpha.iter().fold(BigRational::zero(), |acc, (e, k)| {
        acc + g.weight(e) * BigRational::from_integer(k.unsigned_abs().into())
    })
}

/// `alpha <= beta`: on every edge where alpha is nonzero, beta has the same
/// sign and at least the same magnitude.
pub fn chain_leq(alpha: &Chain, beta: &Chain) -> bool {
    alpha.iter().all(|(e, a)| {
        let b = beta.coeff(e);
        a.signum() == b.signum() && a.abs() <= b.abs()
    })
}

/// The subgraph carried by the support, with vertices renumbered in ascending
/// order, the chain moved onto it, and the original id of each new vertex.
pub fn support_subgraph(g: &Graph, alpha: &Chain) -> Result<(Graph, Chain, Vec<VertexId>)> {
    let info = support_info(g, alpha)?;
    let old_ids = info.vertices();
    let mut new_id = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in old_ids.iter().enumerate() {
        new_id[v] = i;
    }
    let mut edges = Vec::with_capacity(info.edges.len());
    let mut chain = Chain::zero();
    for (i, &e) in info.edges.iter().enumerate() {
        let edge = g.edge(e);
        edges.push(Edge::weighted(
            new_id[edge.u],
            new_id[edge.v],
            edge.weight.clone(),
        ));
        chain.add_to(i, alpha.coeff(e));
    }
    Ok((Graph::new(old_ids.len(), edges)?, chain, old_ids))
}

/// Spanning forest by BFS from the lowest vertex, scanning darts by ascending
/// edge id. Returns the dart from each vertex to its parent (`None` at roots)
/// and the tree membership of each edge.
pub(crate) fn bfs_tree(g: &Graph) -> (Vec<Option<Dart>>, Vec<bool>) {
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut in_tree = vec![false; g.edge_count()];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &d in g.out_darts(v) {
                let w = g.head(d);
                if !seen[w] {
                    seen[w] = true;
                    in_tree[d.edge] = true;
                    parent[w] = Some(d.inverse());
                    queue.push_back(w);
                }
            }
        }
    }
    (parent, in_tree)
}

/// Fundamental cycles of the BFS spanning tree, one per non-tree edge in
/// ascending id order: the edge traversed forward, then the tree path back.
pub fn cycle_basis(g: &Graph) -> Result<Vec<Chain>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (parent, in_tree) = bfs_tree(g);
    let to_root = |mut v: VertexId| {
        let mut c = Chain::zero();
        while let Some(d) = parent[v] {
            c.add_dart(d, 1);
            v = g.head(d);
        }
        c
    };
    Ok((0..g.edge_count())
        .filter(|&e| !in_tree[e])
        .map(|e| {
            let edge = g.edge(e);
            let mut c = &to_root(edge.v) - &to_root(edge.u);
            c.add_to(e, 1);
            c
        })
        .collect())
}
