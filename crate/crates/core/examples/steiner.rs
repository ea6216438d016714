//! Exact minimum Steiner tree on a weighted multigraph.

use homcirc::{steiner_tree, Edge, Graph, Weight};

fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

fn main() -> homcirc::Result<()> {
    // a square with a cheap hub in the middle
    let edges = vec![
        Edge::weighted(0, 1, w("3")),
        Edge::weighted(1, 2, w("3")),
        Edge::weighted(2, 3, w("3")),
        Edge::weighted(3, 0, w("3")),
        Edge::weighted(0, 4, w("7/4")),
        Edge::weighted(1, 4, w("7/4")),
        Edge::weighted(2, 4, w("7/4")),
        Edge::weighted(3, 4, w("5/2")),
    ];
    let g = Graph::new(5, edges)?;
    for terminals in [vec![0, 1], vec![0, 1, 2], vec![0, 1, 2, 3]] {
        let t = steiner_tree(&g, &terminals)?;
        println!("{terminals:?}: edges {:?}, weight {}", t.edges, t.weight);
    }
    Ok(())
}
