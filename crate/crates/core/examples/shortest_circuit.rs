//! Shortest circuit for a circulation whose support falls apart into
//! several components, joined through a Steiner tree.

use homcirc::hscdp::shortest_circuit_bruteforce;
use homcirc::{fixtures, solve_hscdp, solve_hscdp_with, HscdpOptions};

fn main() -> homcirc::Result<()> {
    let g = fixtures::three_blocks();
    let alpha = fixtures::three_blocks_alpha();

    let s = solve_hscdp(&g, &alpha)?;
    println!(
        "length {} = 2 * {} + {} (tree {:?})",
        s.mu_length, s.tree_weight, s.norm, s.tree
    );
    println!("certificate holds: {}", s.certificate_holds());

    let star = solve_hscdp_with(
        &g,
        &alpha,
        &HscdpOptions {
            force_tree: Some(fixtures::three_blocks_star_tree()),
            ..Default::default()
        },
    )?;
    println!("through the star tree instead: {}", star.mu_length);

    // exhaustive search agrees
    let best = shortest_circuit_bruteforce(&g, &alpha, &s.mu_length, 10_000_000)?;
    println!("brute force: {}", g.walk_length(best.walk()));
    Ok(())
}
