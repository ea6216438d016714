//! Multigraphs with a stored reference orientation, darts, walks and circuits,
//! plus the two graph transformations used by the solvers: subgraph
//! contraction and edge doubling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Strictly positive exact edge length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

impl Weight {
    pub fn one() -> Self {
        Weight(BigRational::one())
    }

    pub fn new(value: BigRational) -> Option<Self> {
        value.is_positive().then_some(Weight(value))
    }

    pub fn from_integer(value: i64) -> Option<Self> {
        Self::new(BigRational::from_integer(value.into()))
    }

    pub fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parses `"3"`, `"3/4"` or a finite decimal such as `"0.25"`, exactly.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadWeight(s.to_string());
        let t = s.trim();
        let value = if let Some((int, frac)) = t.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.starts_with('-');
            let int_part: BigInt = if int.is_empty() || int == "-" {
                BigInt::zero()
            } else {
                int.parse().map_err(|_| bad())?
            };
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
            let abs = int_part.abs() * &scale + frac_part;
            let num = if negative { -abs } else { abs };
            BigRational::new(num, scale)
        } else {
            t.parse::<BigRational>().map_err(|_| bad())?
        };
        Weight::new(value).ok_or_else(bad)
    }
}

/// An edge stored as `u -> v`; that stored order is its reference orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Weight,
}

impl Edge {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        Edge {
            u,
            v,
            weight: Weight::one(),
        }
    }

    pub fn weighted(u: VertexId, v: VertexId, weight: Weight) -> Self {
        Edge { u, v, weight }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// An oriented edge. `forward` means along the reference orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub forward: bool,
}

impl Dart {
    pub fn new(edge: EdgeId, forward: bool) -> Self {
        Dart { edge, forward }
    }

    pub fn forward(edge: EdgeId) -> Self {
        Dart {
            edge,
            forward: true,
        }
    }

    pub fn backward(edge: EdgeId) -> Self {
        Dart {
            edge,
            forward: false,
        }
    }

    pub fn inverse(self) -> Self {
        Dart {
            edge: self.edge,
            forward: !self.forward,
        }
    }

    /// +1 for forward darts, -1 for backward ones.
    pub fn sign(self) -> i64 {
        if self.forward {
            1
        } else {
            -1
        }
    }
}

/// Finite multigraph without isolated vertices. Loops and parallel edges are
/// allowed. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    // darts leaving each vertex, by ascending edge id, forward before backward
    out_darts: Vec<Vec<Dart>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut out_darts = vec![Vec::new(); vertex_count];
        for (id, e) in edges.iter().enumerate() {
            for &x in &[e.u, e.v] {
                if x >= vertex_count {
                    return Err(Error::BadEndpoint {
                        edge: id,
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if !e.weight.0.is_positive() {
                return Err(Error::NonPositiveWeight(id));
            }
            out_darts[e.u].push(Dart::forward(id));
            out_darts[e.v].push(Dart::backward(id));
        }
        if let Some(v) = out_darts.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(Graph {
            vertex_count,
            edges,
            out_darts,
        })
    }

    /// Unit-weight graph from endpoint pairs.
    pub fn from_pairs(vertex_count: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        Graph::new(
            vertex_count,
            pairs.iter().map(|&(u, v)| Edge::new(u, v)).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn weight(&self, id: EdgeId) -> &BigRational {
        &self.edges[id].weight.0
    }

    pub fn has_unit_weights(&self) -> bool {
        self.edges.iter().all(|e| e.weight.is_one())
    }

    /// Same graph with the trivial metric.
    pub fn with_unit_weights(&self) -> Graph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.weight = Weight::one();
        }
        g
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        let e = &self.edges[d.edge];
        if d.forward {
            e.u
        } else {
            e.v
        }
    }

    pub fn head(&self, d: Dart) -> VertexId {
        let e = &self.edges[d.edge];
        if d.forward {
            e.v
        } else {
            e.u
        }
    }

    /// Darts whose tail is `v`, sorted by edge id (forward first on loops).
    pub fn out_darts(&self, v: VertexId) -> &[Dart] {
        &self.out_darts[v]
    }

    /// The dart of `edge` leaving `v`. For a loop this is the forward dart.
    pub fn dart_from(&self, edge: EdgeId, v: VertexId) -> Option<Dart> {
        let e = &self.edges[edge];
        if e.u == v {
            Some(Dart::forward(edge))
        } else if e.v == v {
            Some(Dart::backward(edge))
        } else {
            None
        }
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.edges.iter().all(|e| {
            let key = (e.u.min(e.v), e.u.max(e.v));
            !e.is_loop() && seen.insert(key)
        })
    }

    pub fn is_connected(&self) -> bool {
        self.components_of(0..self.edge_count()).len() == 1
    }

    /// Connected components of the subgraph spanned by `edges`, as
    /// (sorted vertex list, sorted edge list), ordered by lowest vertex.
    pub fn components_of(
        &self,
        edges: impl IntoIterator<Item = EdgeId>,
    ) -> Vec<(Vec<VertexId>, Vec<EdgeId>)> {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut touched = vec![false; self.vertex_count];
        let edges: Vec<EdgeId> = edges.into_iter().collect();
        for &id in &edges {
            let e = &self.edges[id];
            touched[e.u] = true;
            touched[e.v] = true;
            uf.union(e.u, e.v);
        }
        let mut slot = vec![usize::MAX; self.vertex_count];
        let mut comps: Vec<(Vec<VertexId>, Vec<EdgeId>)> = Vec::new();
        for v in (0..self.vertex_count).filter(|&v| touched[v]) {
            let r = uf.find(v);
            if slot[r] == usize::MAX {
                slot[r] = comps.len();
                comps.push((Vec::new(), Vec::new()));
            }
            comps[slot[r]].0.push(v);
        }
        let mut sorted = edges;
        sorted.sort_unstable();
        sorted.dedup();
        for id in sorted {
            let r = uf.find(self.edges[id].u);
            comps[slot[r]].1.push(id);
        }
        comps
    }

    /// mu-length of a dart sequence.
    pub fn length_of(&self, darts: &[Dart]) -> BigRational {
        darts
            .iter()
            .fold(BigRational::zero(), |acc, d| acc + self.weight(d.edge))
    }

    /// mu-length of a walk.
    pub fn walk_length(&self, walk: &Walk) -> BigRational {
        self.length_of(walk.darts())
    }

    /// Common denominator `D` and integer weights `D * mu(e)`.
    pub fn scaled_weights(&self) -> (BigInt, Vec<BigInt>) {
        let denom = self
            .edges
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.weight.0.denom()));
        let scaled = self
            .edges
            .iter()
            .map(|e| (e.weight.0.numer() * &denom) / e.weight.0.denom())
            .collect();
        (denom, scaled)
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Nonempty sequence of consecutively incident darts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    start: VertexId,
    end: VertexId,
    darts: Vec<Dart>,
}

impl Walk {
    pub fn new(g: &Graph, darts: Vec<Dart>) -> Result<Self> {
        let first = *darts.first().ok_or(Error::EmptyWalk)?;
        for d in &darts {
            g.check_edge(d.edge)?;
        }
        for i in 1..darts.len() {
            if g.tail(darts[i]) != g.head(darts[i - 1]) {
                return Err(Error::NotIncident(i));
            }
        }
        Ok(Walk {
            start: g.tail(first),
            end: g.head(*darts.last().unwrap()),
            darts,
        })
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn into_darts(self) -> Vec<Dart> {
        self.darts
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.end
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.start == self.end
    }

    /// Vertices visited in order: `len() + 1` entries.
    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        std::iter::once(self.start)
            .chain(self.darts.iter().map(|&d| g.head(d)))
            .collect()
    }

    /// True when no edge is traversed in both directions.
    pub fn is_direction_consistent(&self) -> bool {
        let mut dir = std::collections::BTreeMap::new();
        self.darts
            .iter()
            .all(|d| *dir.entry(d.edge).or_insert(d.forward) == d.forward)
    }
}

/// Closed walk with no backtrack and no tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit(Walk);

impl Circuit {
    /// Checks incidence, closure, backtracks and tail, in that order.
    pub fn new(g: &Graph, darts: Vec<Dart>) -> Result<Self> {
        Circuit::from_walk(Walk::new(g, darts)?)
    }

    pub fn from_walk(walk: Walk) -> Result<Self> {
        if !walk.is_closed() {
            return Err(Error::NotClosed);
        }
        let d = &walk.darts;
        if let Some(i) = (0..d.len().saturating_sub(1)).find(|&i| d[i + 1] == d[i].inverse()) {
            return Err(Error::Backtrack(i));
        }
        if d[0] == d[d.len() - 1].inverse() {
            return Err(Error::Tail);
        }
        Ok(Circuit(walk))
    }

    pub fn walk(&self) -> &Walk {
        &self.0
    }

    pub fn into_walk(self) -> Walk {
        self.0
    }

    pub fn darts(&self) -> &[Dart] {
        &self.0.darts
    }

    pub fn len(&self) -> usize {
        self.0.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn base(&self) -> VertexId {
        self.0.start
    }

    /// Rotation sending dart `i` to position `(i - k) mod L`, i.e. the result
    /// starts with the old dart `k mod L`.
    pub fn translate(&self, g: &Graph, k: isize) -> Circuit {
        let len = self.len();
        let k = k.rem_euclid(len as isize) as usize;
        let mut darts = Vec::with_capacity(len);
        darts.extend_from_slice(&self.0.darts[k..]);
        darts.extend_from_slice(&self.0.darts[..k]);
        let start = g.tail(darts[0]);
        Circuit(Walk {
            start,
            end: start,
            darts,
        })
    }

    /// Rotation starting at the first dart leaving `v`.
    pub fn rotate_to(&self, g: &Graph, v: VertexId) -> Option<Circuit> {
        let k = self.darts().iter().position(|&d| g.tail(d) == v)?;
        Some(self.translate(g, k as isize))
    }
}

/// Result of collapsing each component of an edge subset `H` to one vertex.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    /// Vertex of the contracted graph for each original vertex.
    pub vertex_map: Vec<VertexId>,
    /// Contracted edge for each original edge; `None` for edges of `H`.
    pub edge_map: Vec<Option<EdgeId>>,
    /// Original edge for each contracted edge.
    pub edge_origin: Vec<EdgeId>,
}

impl Contraction {
    /// Original vertices collapsed onto `w`.
    pub fn members(&self, w: VertexId) -> Vec<VertexId> {
        (0..self.vertex_map.len())
            .filter(|&v| self.vertex_map[v] == w)
            .collect()
    }
}

/// Contracts every edge in `h`. Contracted vertices are numbered by the
/// lowest original vertex they contain. Edges outside `h` keep their relative
/// order and orientation; those with both ends in one component become loops.
pub fn contract(g: &Graph, h: &[EdgeId]) -> Result<Contraction> {
    let mut in_h = vec![false; g.edge_count()];
    for &e in h {
        if e >= g.edge_count() {
            return Err(Error::BadEdgeSubset(format!("edge {e} does not exist")));
        }
        if in_h[e] {
            return Err(Error::BadEdgeSubset(format!("edge {e} listed twice")));
        }
        in_h[e] = true;
    }
    let mut uf = UnionFind::new(g.vertex_count());
    for &e in h {
        uf.union(g.edge(e).u, g.edge(e).v);
    }
    let mut vertex_map = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    for v in 0..g.vertex_count() {
        let r = uf.find(v);
        if vertex_map[r] == usize::MAX {
            vertex_map[r] = next;
            next += 1;
        }
        vertex_map[v] = vertex_map[r];
    }
    let mut edges = Vec::new();
    let mut edge_map = vec![None; g.edge_count()];
    let mut edge_origin = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if !in_h[id] {
            edge_map[id] = Some(edges.len());
            edge_origin.push(id);
            edges.push(Edge::weighted(
                vertex_map[e.u],
                vertex_map[e.v],
                e.weight.clone(),
            ));
        }
    }
    let graph = Graph::new(next, edges)?;
    Ok(Contraction {
        graph,
        vertex_map,
        edge_map,
        edge_origin,
    })
}

/// Doubling of a simple graph. Edge `k` of the base graph becomes the twins
/// `2k` (oriented `u -> v`) and `2k + 1` (oriented `v -> u`); the stored
/// orientation of the doubled graph is this twin orientation.
#[derive(Clone, Debug)]
pub struct Doubling {
    pub graph: Graph,
    base_edges: Vec<(VertexId, VertexId)>,
}

pub fn double(g: &Graph) -> Result<Doubling> {
    if !g.is_simple() {
        return Err(Error::NotSimpleGraph);
    }
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for e in g.edges() {
        edges.push(Edge::weighted(e.u, e.v, e.weight.clone()));
        edges.push(Edge::weighted(e.v, e.u, e.weight.clone()));
    }
    Ok(Doubling {
        graph: Graph::new(g.vertex_count(), edges)?,
        base_edges: g.edges().iter().map(|e| (e.u, e.v)).collect(),
    })
}

impl Doubling {
    pub fn twins(&self, edge: EdgeId) -> (EdgeId, EdgeId) {
        (2 * edge, 2 * edge + 1)
    }

    pub fn project_edge(&self, twin: EdgeId) -> EdgeId {
        twin / 2
    }

    pub fn project_dart(&self, d: Dart) -> Dart {
        let along_base = d.edge.is_multiple_of(2) == d.forward;
        Dart::new(d.edge / 2, along_base)
    }

    /// Twin dart agreeing with `d` under the twin orientation.
    pub fn lift_dart(&self, d: Dart) -> Dart {
        Dart::forward(if d.forward {
            2 * d.edge
        } else {
            2 * d.edge + 1
        })
    }

    pub fn project_walk(&self, base: &Graph, walk: &Walk) -> Walk {
        let darts = walk.darts().iter().map(|&d| self.project_dart(d)).collect();
        Walk::new(base, darts).expect("projection of a walk is a walk")
    }

    pub fn lift_walk(&self, walk: &Walk) -> Walk {
        let darts = walk.darts().iter().map(|&d| self.lift_dart(d)).collect();
        Walk::new(&self.graph, darts).expect("lift of a walk is a walk")
    }

    pub fn base_endpoints(&self, edge: EdgeId) -> (VertexId, VertexId) {
        self.base_edges[edge]
    }
}
