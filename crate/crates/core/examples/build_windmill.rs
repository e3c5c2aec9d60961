//! Builds D^4_3 and prints it in Graphviz DOT format.
//!
//! ```text
//! cargo run --example build_windmill | dot -Tsvg > d43.svg
//! ```

use windmill::{build_windmill, cycle_vertices, export_dot, WindmillParams};

fn main() -> windmill::Result<()> {
    let p = WindmillParams::new(4, 3)?;
    let g = build_windmill(p);
    for k in 1..=p.m() {
        let cycle = cycle_vertices(p, k)?;
        eprintln!("cycle {k}: {:?}", cycle.walk);
    }
    eprintln!(
        "{} vertices, {} arcs, hub out-degree {}",
        g.vertex_count(),
        g.edge_count(),
        g.out_degree(1)
    );
    print!("{}", export_dot(&g));
    Ok(())
}
