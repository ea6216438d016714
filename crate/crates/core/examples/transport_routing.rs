//! Route a single carrier from a depot so that every requested move
//! between adjacent vertices is made.

use homcirc::{brute_force_trp, solve_trp, Graph, TaskMatrix};

fn main() -> homcirc::Result<()> {
    // a 4-cycle and a path with two far-apart shuttles
    let cycle = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let path = Graph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?;
    let jobs = [
        (cycle, TaskMatrix::from_triples([(2, 3, 1)])),
        (
            path,
            TaskMatrix::from_triples([(0, 1, 1), (1, 0, 1), (3, 4, 1), (4, 3, 1)]),
        ),
    ];

    for (g, q) in &jobs {
        let s = solve_trp(g, q, 0)?;
        println!("tour {:?}", s.walk.vertices(g));
        println!(
            "  length {}, optimal certified: {}, joining cost {}",
            s.mu_length, s.certified_optimal, s.steiner_gap
        );
        let best = brute_force_trp(g, q, 0, &s.mu_length, 1_000_000)?;
        println!("  exhaustive optimum {}", g.walk_length(&best));
    }
    Ok(())
}
