//! Collapse edge subsets and double a simple graph.

use homcirc::{contract, double, fixtures, Graph};

fn main() -> homcirc::Result<()> {
    let g = fixtures::three_blocks();
    let c = contract(&g, &fixtures::three_blocks_short_tree())?;
    println!(
        "{} vertices, {} edges -> {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count(),
        c.graph.vertex_count(),
        c.graph.edge_count()
    );
    for w in 0..c.graph.vertex_count() {
        println!("  w{w} <- {:?}", c.members(w));
    }

    let tri = Graph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)])?;
    let d = double(&tri)?;
    for k in 0..tri.edge_count() {
        let (a, b) = d.twins(k);
        println!("edge {k} -> twins {a}, {b}");
    }
    Ok(())
}
