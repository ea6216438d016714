//! Seeded instance generators for the property suites and `homcirc generate`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Edge, Graph, VertexId, Weight};
use crate::homology::{cycle_basis, is_circulation, support_info, Chain};
use crate::trp::TaskMatrix;

/// Seeded generator used everywhere.
pub type Rng64 = rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    rand::SeedableRng::seed_from_u64(seed)
}

fn random_tree(rng: &mut impl Rng, vertices: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    (1..vertices.len())
        .map(|i| (vertices[rng.gen_range(0..i)], vertices[i]))
        .collect()
}

fn orient(rng: &mut impl Rng, (a, b): (VertexId, VertexId)) -> (VertexId, VertexId) {
    if rng.gen_bool(0.5) {
        (a, b)
    } else {
        (b, a)
    }
}

fn build(
    rng: &mut impl Rng,
    n: usize,
    mut pairs: Vec<(VertexId, VertexId)>,
    weights: &[&str],
) -> Graph {
    pairs.shuffle(rng);
    let edges = pairs
        .into_iter()
        .map(|p| {
            let (u, v) = orient(rng, p);
            let w: Weight = weights[rng.gen_range(0..weights.len())].parse().unwrap();
            Edge::weighted(u, v, w)
        })
        .collect();
    Graph::new(n, edges).expect("generated graph is valid")
}

/// Connected multigraph with `n` vertices and `m >= n - 1` unit edges;
/// parallel edges and loops appear among the extra edges.
pub fn connected_multigraph(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut perm: Vec<VertexId> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = random_tree(rng, &perm);
    if n == 1 {
        pairs.push((0, 0));
    }
    while pairs.len() < m {
        pairs.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    build(rng, n, pairs, &["1"])
}

/// Random nonzero circulation with connected support and norm at most
/// `max_norm`, as a small combination of fundamental cycles.
pub fn connected_circulation(rng: &mut impl Rng, g: &Graph, max_norm: u64) -> Option<Chain> {
    let basis = cycle_basis(g).ok()?;
    if basis.is_empty() {
        return None;
    }
    for _ in 0..200 {
        let mut c = Chain::zero();
        for b in &basis {
            let k: i64 = [-2, -1, 0, 0, 1, 1, 2][rng.gen_range(0..7)];
            for (e, x) in b.iter() {
                c.add_to(e, k * x);
            }
        }
        if c.is_zero() || c.norm() > max_norm {
            continue;
        }
        if support_info(g, &c).is_ok_and(|i| i.connected) {
            return Some(c);
        }
    }
    None
}

/// A connected graph on at most `n` vertices carrying a circulation whose
/// support has at least two components, with weights drawn from `weights`.
pub fn disconnected_instance(rng: &mut impl Rng, n: usize, weights: &[&str]) -> (Graph, Chain) {
    assert!(n >= 2);
    loop {
        let mut perm: Vec<VertexId> = (0..n).collect();
        perm.shuffle(rng);
        let blocks = rng.gen_range(2..=3.min(n));
        let mut sizes = vec![1usize; blocks];
        let mut spare = n - blocks;
        for s in sizes.iter_mut() {
            let grow = rng.gen_range(0..=spare.min(2));
            *s += grow;
            spare -= grow;
        }
        let mut pairs = Vec::new();
        let mut coeff = Vec::new();
        let mut at = 0;
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        for &s in &sizes {
            let vs = perm[at..at + s].to_vec();
            at += s;
            // a closed loop through the block, taken once or twice
            let times = rng.gen_range(1..=2);
            if s == 1 {
                pairs.push((vs[0], vs[0]));
                coeff.push(times);
            } else {
                for i in 0..s {
                    pairs.push((vs[i], vs[(i + 1) % s]));
                    coeff.push(times);
                }
                if s >= 3 && rng.gen_bool(0.5) {
                    pairs.push((vs[0], vs[1]));
                    coeff.push(1);
                    pairs.push((vs[1], vs[0]));
                    coeff.push(1);
                }
            }
            groups.push(vs);
        }
        let free: Vec<VertexId> = perm[at..].to_vec();
        let support_len = pairs.len();
        // join blocks and free vertices by a random tree on representatives
        let mut nodes: Vec<Vec<VertexId>> = groups.clone();
        nodes.extend(free.iter().map(|&v| vec![v]));
        nodes.shuffle(rng);
        for i in 1..nodes.len() {
            let j = rng.gen_range(0..i);
            let a = nodes[i][rng.gen_range(0..nodes[i].len())];
            let b = nodes[j][rng.gen_range(0..nodes[j].len())];
            pairs.push((a, b));
        }
        for _ in 0..rng.gen_range(0..=2) {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if a != b {
                pairs.push((a, b));
            }
        }
        // build keeping track of which new edge carries which coefficient
        let mut order: Vec<usize> = (0..pairs.len()).collect();
        order.shuffle(rng);
        let mut edges = Vec::with_capacity(pairs.len());
        let mut alpha = Chain::zero();
        for (id, &k) in order.iter().enumerate() {
            let (a, b) = pairs[k];
            let flip = rng.gen_bool(0.5);
            let (u, v) = if flip { (b, a) } else { (a, b) };
            let w: Weight = weights[rng.gen_range(0..weights.len())].parse().unwrap();
            edges.push(Edge::weighted(u, v, w));
            if k < support_len {
                let c = coeff[k] as i64;
                alpha.add_to(id, if flip { -c } else { c });
            }
        }
        let g = Graph::new(n, edges).expect("generated graph is valid");
        if g.is_connected()
            && is_circulation(&g, &alpha)
            && support_info(&g, &alpha).is_ok_and(|i| i.components.len() >= 2)
        {
            return (g, alpha);
        }
    }
}

/// Simple connected graph with `n` vertices and up to `extra` chords.
pub fn simple_connected(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut perm: Vec<VertexId> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = random_tree(rng, &perm);
    let mut have: std::collections::BTreeSet<(VertexId, VertexId)> =
        pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && have.insert((a.min(b), a.max(b))) {
            pairs.push((a, b));
        }
    }
    build(rng, n, pairs, &["1"])
}

/// Random demands on edges of a simple graph with total between 1 and
/// `max_total`.
pub fn task_matrix(rng: &mut impl Rng, g: &Graph, max_total: u64) -> TaskMatrix {
    let total = rng.gen_range(1..=max_total);
    let mut q = TaskMatrix::new();
    for _ in 0..total {
        let e = g.edge(rng.gen_range(0..g.edge_count()));
        let (i, j) = orient(rng, (e.u, e.v));
        q.add(i, j, 1);
    }
    q
}
