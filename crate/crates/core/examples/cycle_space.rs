//! Fundamental cycles, support structure and the balancing condition.

use homcirc::homology::vertex_degrees;
use homcirc::{cycle_basis, fixtures, is_circulation, support_info, Chain};

fn main() -> homcirc::Result<()> {
    let g = fixtures::three_blocks();
    let basis = cycle_basis(&g)?;
    println!("{} fundamental cycles", basis.len());
    for b in basis.iter().take(3) {
        println!("  {:?}", b.iter().collect::<Vec<_>>());
    }

    let alpha = fixtures::three_blocks_alpha();
    let info = support_info(&g, &alpha)?;
    println!("connected support: {}", info.connected);
    for c in &info.components {
        println!("  component {:?}", c.vertices);
    }

    let open = Chain::from_pairs([(fixtures::F_E12, 1)]);
    println!(
        "circulation: {}, boundary {:?}",
        is_circulation(&g, &open),
        vertex_degrees(&g, &open)
    );
    Ok(())
}
