//! Shortest circuits in a homology class. Each support component gets its own
//! direction-consistent circuit; a minimum Steiner tree of the contracted
//! graph joins them, and the pieces are woven into one closed walk that uses
//! every tree edge once in each direction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{contract, Circuit, Dart, EdgeId, Graph, VertexId, Walk};
use crate::hierholzer::detect_dcc;
use crate::homology::{
    is_circulation, l1_norm, support_info, Chain, SupportComponent, SupportInfo,
};
use crate::steiner::{check_steiner_tree, steiner_tree, DEFAULT_TERMINAL_LIMIT};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HscdpOptions {
    /// Use these edges (ids of the input graph) as the tree instead of
    /// solving for one.
    pub force_tree: Option<Vec<EdgeId>>,
    /// Maximum number of support components handed to the Steiner solver.
    pub steiner_limit: usize,
}

impl Default for HscdpOptions {
    fn default() -> Self {
        HscdpOptions {
            force_tree: None,
            steiner_limit: DEFAULT_TERMINAL_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HscdpSolution {
    pub walk: Walk,
    /// `Some` when the woven walk passed the circuit check.
    pub circuit: Option<Circuit>,
    /// Why the walk is not a circuit, if it is not.
    pub diagnostic: Option<String>,
    pub mu_length: BigRational,
    /// `||alpha||` under the graph metric.
    pub norm: BigRational,
    /// Tree edges, as sorted ids of the input graph.
    pub tree: Vec<EdgeId>,
    pub tree_weight: BigRational,
    /// One circuit per support component, ordered by lowest vertex, rotated
    /// to the lowest contact vertex.
    pub component_circuits: Vec<Circuit>,
}

impl HscdpSolution {
    /// `mu_length == 2 * tree_weight + norm`.
    pub fn certificate_holds(&self) -> bool {
        self.mu_length == BigRational::from_integer(2.into()) * &self.tree_weight + &self.norm
    }
}

/// Depth-first closed walk around a tree, children by ascending edge id.
pub fn tree_tour(g: &Graph, tree: &[EdgeId], root: VertexId) -> Result<Vec<Dart>> {
    g.check_vertex(root)?;
    if tree.is_empty() {
        return Ok(Vec::new());
    }
    let mut at: Vec<Vec<EdgeId>> = vec![Vec::new(); g.vertex_count()];
    for &e in tree {
        g.check_edge(e)?;
        let edge = g.edge(e);
        at[edge.u].push(e);
        at[edge.v].push(e);
    }
    let ends: Vec<VertexId> = tree
        .iter()
        .flat_map(|&e| [g.edge(e).u, g.edge(e).v])
        .collect();
    check_steiner_tree(g, tree, &ends)?;
    if at[root].is_empty() {
        return Err(Error::BadTree(format!("root {root} is not on the tree")));
    }
    for list in &mut at {
        list.sort_unstable();
    }
    let mut out = Vec::with_capacity(2 * tree.len());
    // explicit stack of (vertex, edge used to enter, next child index)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
    while let Some(top) = stack.last_mut() {
        let (v, parent, i) = *top;
        if i < at[v].len() {
            top.2 += 1;
            let e = at[v][i];
            if Some(e) == parent {
                continue;
            }
            let d = g.dart_from(e, v).expect("tree edge is incident");
            out.push(d);
            stack.push((g.head(d), Some(e), 0));
        } else {
            stack.pop();
            if let Some(e) = parent {
                out.push(g.dart_from(e, v).expect("tree edge is incident"));
            }
        }
    }
    Ok(out)
}

/// Shortest circuit with abelianization `alpha` under the graph's weights.
pub fn solve_hscdp(g: &Graph, alpha: &Chain) -> Result<HscdpSolution> {
    solve_hscdp_with(g, alpha, &HscdpOptions::default())
}

pub fn solve_hscdp_with(g: &Graph, alpha: &Chain, opts: &HscdpOptions) -> Result<HscdpSolution> {
    if alpha.is_zero() {
        return Err(Error::ZeroChain);
    }
    alpha.check_on(g)?;
    if !is_circulation(g, alpha) {
        return Err(Error::NotCirculation);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let info = support_info(g, alpha)?;
    let s = info.components.len();
    let circuits: Vec<Circuit> = info
        .components
        .iter()
        .map(|c| detect_dcc(g, &alpha.restrict(&c.edges)))
        .collect::<Result<_>>()?;

    let tree = match &opts.force_tree {
        Some(forced) => forced_tree(g, &info, forced)?,
        None if s == 1 => Vec::new(),
        None => {
            if s > opts.steiner_limit {
                return Err(Error::TooManyComponents {
                    count: s,
                    limit: opts.steiner_limit,
                });
            }
            let c = contract(g, &info.edges)?;
            let terms: Vec<VertexId> = info
                .components
                .iter()
                .map(|comp| c.vertex_map[comp.vertices[0]])
                .collect();
            let t = steiner_tree(&c.graph, &terms)?;
            let mut edges: Vec<EdgeId> = t.edges.iter().map(|&e| c.edge_origin[e]).collect();
            edges.sort_unstable();
            edges
        }
    };
    let tree_weight = tree
        .iter()
        .fold(BigRational::zero(), |acc, &e| acc + g.weight(e));

    let mut weaver = Weaver::new(g, &info.components, circuits, &tree);
    let darts = weaver.run();
    let walk = Walk::new(g, darts).expect("woven pieces are incident");
    let (circuit, diagnostic) = match Circuit::from_walk(walk.clone()) {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(HscdpSolution {
        mu_length: g.walk_length(&walk),
        walk,
        circuit,
        diagnostic,
        norm: l1_norm(g, alpha),
        tree,
        tree_weight,
        component_circuits: weaver.rotated,
    })
}

/// Validates a user-supplied tree: edges outside the support forming a tree
/// of the contracted graph whose leaves are all support components.
fn forced_tree(g: &Graph, info: &SupportInfo, forced: &[EdgeId]) -> Result<Vec<EdgeId>> {
    let support = &info.edges;
    if forced.is_empty() && info.connected {
        return Ok(Vec::new());
    }
    let bad = |msg: String| Err(Error::BadForcedTree(msg));
    for &e in forced {
        if e >= g.edge_count() {
            return bad(format!("edge {e} does not exist"));
        }
        if support.binary_search(&e).is_ok() {
            return bad(format!("edge {e} lies in the support"));
        }
    }
    let c = contract(g, support).map_err(|e| Error::BadForcedTree(e.to_string()))?;
    let mapped: Vec<EdgeId> = forced.iter().map(|&e| c.edge_map[e].unwrap()).collect();
    let terms: Vec<VertexId> = info
        .components
        .iter()
        .map(|comp| c.vertex_map[comp.vertices[0]])
        .collect();
    check_steiner_tree(&c.graph, &mapped, &terms)
        .map_err(|e| Error::BadForcedTree(e.to_string()))?;
    let mut edges = forced.to_vec();
    edges.sort_unstable();
    Ok(edges)
}

struct Weaver<'a> {
    g: &'a Graph,
    comp_of: Vec<Option<usize>>,
    tree_at: Vec<Vec<EdgeId>>,
    // per component: rotated circuit and its split positions
    rotated: Vec<Circuit>,
    splits: Vec<Vec<usize>>,
    out: Vec<Dart>,
}

impl<'a> Weaver<'a> {
    fn new(
        g: &'a Graph,
        components: &[SupportComponent],
        circuits: Vec<Circuit>,
        tree: &[EdgeId],
    ) -> Self {
        let mut comp_of = vec![None; g.vertex_count()];
        for (i, c) in components.iter().enumerate() {
            for &v in &c.vertices {
                comp_of[v] = Some(i);
            }
        }
        let mut tree_at = vec![Vec::new(); g.vertex_count()];
        for &e in tree {
            tree_at[g.edge(e).u].push(e);
            tree_at[g.edge(e).v].push(e);
        }
        for list in &mut tree_at {
            list.sort_unstable();
        }
        let mut rotated = Vec::with_capacity(circuits.len());
        let mut splits = Vec::with_capacity(circuits.len());
        for (c, comp) in circuits.into_iter().zip(components) {
            let contacts: Vec<VertexId> = comp
                .vertices
                .iter()
                .copied()
                .filter(|&v| !tree_at[v].is_empty())
                .collect();
            let Some(&first) = contacts.first() else {
                rotated.push(c);
                splits.push(vec![0]);
                continue;
            };
            let c = c
                .rotate_to(g, first)
                .expect("contact lies on its component circuit");
            let mut pos = vec![0];
            for &u in &contacts[1..] {
                let last = c
                    .darts()
                    .iter()
                    .rposition(|&d| g.tail(d) == u)
                    .expect("contact lies on its component circuit");
                pos.push(last);
            }
            pos.sort_unstable();
            rotated.push(c);
            splits.push(pos);
        }
        Weaver {
            g,
            comp_of,
            tree_at,
            rotated,
            splits,
            out: Vec::new(),
        }
    }

    fn run(&mut self) -> Vec<Dart> {
        self.weave_component(0, None);
        std::mem::take(&mut self.out)
    }

    /// Walks component `i` once around, starting at the contact where it was
    /// entered, and hangs every other tree branch off its contact.
    fn weave_component(&mut self, i: usize, entry: Option<(VertexId, EdgeId)>) {
        let len = self.rotated[i].len();
        let splits = self.splits[i].clone();
        let k0 = match entry {
            None => 0,
            Some((c, _)) => splits
                .iter()
                .position(|&p| self.g.tail(self.rotated[i].darts()[p]) == c)
                .expect("entry vertex is a contact"),
        };
        for step in 0..splits.len() {
            let k = (k0 + step) % splits.len();
            let from = splits[k];
            let to = if k + 1 < splits.len() {
                splits[k + 1]
            } else {
                len
            };
            self.out
                .extend_from_slice(&self.rotated[i].darts()[from..to]);
            let end = self.g.head(self.rotated[i].darts()[to - 1]);
            let exclude = match entry {
                Some((c, e)) if c == end => Some(e),
                _ => None,
            };
            self.excursions(end, exclude);
        }
    }

    fn excursions(&mut self, u: VertexId, exclude: Option<EdgeId>) {
        let edges = self.tree_at[u].clone();
        for f in edges {
            if Some(f) == exclude {
                continue;
            }
            let d = self.g.dart_from(f, u).expect("tree edge at u");
            self.out.push(d);
            self.descend(self.g.head(d), f);
            self.out.push(d.inverse());
        }
    }

    fn descend(&mut self, x: VertexId, f: EdgeId) {
        match self.comp_of[x] {
            Some(j) => self.weave_component(j, Some((x, f))),
            None => self.excursions(x, Some(f)),
        }
    }
}

/// Shortest circuit with abelianization `alpha` of length at most `bound`,
/// found by exhaustive branch and bound over non-backtracking walks. Each
/// circuit is searched from its lowest vertex only.
pub fn shortest_circuit_bruteforce(
    g: &Graph,
    alpha: &Chain,
    bound: &BigRational,
    budget: u64,
) -> Result<Circuit> {
    alpha.check_on(g)?;
    let (denom, w) = g.scaled_weights();
    let scaled_bound = (bound * BigRational::from_integer(denom))
        .floor()
        .to_integer();
    let mut search = Bruteforce {
        g,
        w,
        residual: alpha.dense(g.edge_count()),
        residual_norm: BigInt::zero(),
        path: Vec::new(),
        len: BigInt::zero(),
        best: None,
        limit: scaled_bound,
        nodes: 0,
        budget,
        start: 0,
    };
    search.residual_norm = (0..g.edge_count())
        .map(|e| &search.w[e] * BigInt::from(search.residual[e].unsigned_abs()))
        .sum();
    for s in 0..g.vertex_count() {
        search.start = s;
        search.dfs(s)?;
    }
    let (_, darts) = search.best.ok_or(Error::NotFound)?;
    Circuit::new(g, darts)
}

struct Bruteforce<'a> {
    g: &'a Graph,
    w: Vec<BigInt>,
    residual: Vec<i64>,
    residual_norm: BigInt,
    path: Vec<Dart>,
    len: BigInt,
    best: Option<(BigInt, Vec<Dart>)>,
    // accept lengths <= limit; tightened to best - 1 once something is found
    limit: BigInt,
    nodes: u64,
    budget: u64,
    start: VertexId,
}

impl Bruteforce<'_> {
    fn dfs(&mut self, cur: VertexId) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if !self.path.is_empty()
            && cur == self.start
            && self.residual_norm.is_zero()
            && self.path[0] != self.path[self.path.len() - 1].inverse()
        {
            self.best = Some((self.len.clone(), self.path.clone()));
            self.limit = &self.len - 1;
            return Ok(());
        }
        for &d in self.g.out_darts(cur) {
            if self.g.head(d) < self.start {
                continue;
            }
            if self.path.last().is_some_and(|&p| p == d.inverse()) {
                continue;
            }
            let e = d.edge;
            let before = self.residual[e];
            let after = before - d.sign();
            let norm = &self.residual_norm - &self.w[e] * BigInt::from(before.unsigned_abs())
                + &self.w[e] * BigInt::from(after.unsigned_abs());
            let len = &self.len + &self.w[e];
            if &len + &norm > self.limit {
                continue;
            }
            self.residual[e] = after;
            let saved_norm = std::mem::replace(&mut self.residual_norm, norm);
            let saved_len = std::mem::replace(&mut self.len, len);
            self.path.push(d);
            let r = self.dfs(self.g.head(d));
            self.path.pop();
            self.len = saved_len;
            self.residual_norm = saved_norm;
            self.residual[e] = before;
            r?;
        }
        Ok(())
    }
}
