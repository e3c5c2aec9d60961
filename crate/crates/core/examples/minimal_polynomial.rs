//! Minimal and characteristic polynomials of windmill adjacency matrices,
//! and the Drazin index read off as the multiplicity of the zero root.

use windmill::{build_windmill, char_polynomial, drazin_index, minimal_polynomial, WindmillParams};

fn main() -> windmill::Result<()> {
    for (m, n) in [(1, 4), (2, 3), (3, 4), (5, 5)] {
        let a = build_windmill(WindmillParams::new(m, n)?).adjacency_matrix();
        let psi = minimal_polynomial(&a)?;
        let delta = char_polynomial(&a)?;
        assert!(psi.divides(&delta));
        println!("D^{m}_{n}: rank {}, index {}", a.rank(), drazin_index(&a)?);
        println!("  minimal:        {psi}");
        println!("  characteristic: {delta}");
    }
    Ok(())
}
