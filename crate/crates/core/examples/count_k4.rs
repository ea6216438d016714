//! Count and list the circuits of minimal length in a homology class.

use homcirc::counting::{count_dcc_removing, enumerate_circuits};
use homcirc::{count_dcc, fixtures, reduced_determinant, weighted_laplacian};

fn main() -> homcirc::Result<()> {
    let g = fixtures::k4();
    let alpha = fixtures::k4_alpha();

    let r = count_dcc(&g, &alpha)?;
    println!(
        "total {} = {} * {} * {} / {}",
        r.total, r.norm, r.determinant, r.out_degree_factor, r.multiplicity_factor
    );
    println!("distinct up to rotation: {}", r.cycles());

    let l = weighted_laplacian(&g, &alpha)?;
    for w in 0..g.vertex_count() {
        let via = count_dcc_removing(&g, &alpha, Some(w))?;
        println!(
            "remove v{w}: determinant {}, total {}",
            reduced_determinant(&l, w),
            via.total
        );
    }

    let all = enumerate_circuits(&g, &alpha, 1_000_000)?;
    println!("enumerated {} circuits", all.len());
    Ok(())
}
