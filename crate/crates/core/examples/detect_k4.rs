//! Find a shortest circuit realizing a connected flow on K4.

use homcirc::{abelianize, detect_dcc, detect_dcc_with, fixtures, DetectOptions};

fn main() -> homcirc::Result<()> {
    let g = fixtures::k4();
    let alpha = fixtures::k4_alpha();

    let c = detect_dcc(&g, &alpha)?;
    println!("default choices: {} darts", c.len());
    for d in c.darts() {
        let dir = if d.forward { "+" } else { "-" };
        print!("{dir}e{} ", d.edge);
    }
    println!();
    assert_eq!(abelianize(c.walk()), alpha);

    // start at vertex 0 and leave it along edge 1 first
    let opts = DetectOptions {
        start: Some(0),
        edge_priority: vec![fixtures::E14],
    };
    let c = detect_dcc_with(&g, &alpha, &opts)?;
    println!("vertices visited: {:?}", c.walk().vertices(&g));
    Ok(())
}
