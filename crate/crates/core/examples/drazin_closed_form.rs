//! Drazin inverse of the windmill adjacency matrix, computed both from the
//! minimal polynomial and from the closed form (1/m) M^(n-1).

use windmill::{build_windmill, drazin_general, drazin_windmill_closed, WindmillParams};

fn main() -> windmill::Result<()> {
    let p = WindmillParams::new(3, 4)?;
    let a = build_windmill(p).adjacency_matrix();

    let general = drazin_general(&a)?;
    let closed = drazin_windmill_closed(p)?;
    assert_eq!(general.inverse, closed.inverse);

    println!("index: {}", general.index);
    println!("annihilator: {}", general.annihilator);
    println!("equations hold: {:?}", general.verified);
    println!("nonzero positions: {}", closed.inverse.support().len());
    println!("{}", closed.to_json_string());
    Ok(())
}
