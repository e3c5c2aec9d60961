//! Counts and lists walks in D^2_3 and compares the counts with powers of the
//! adjacency matrix.

use windmill::{
    build_windmill, count_walks, count_walks_matrix, enumerate_walks, shortest_walk_length,
    WindmillParams,
};

fn main() -> windmill::Result<()> {
    let g = build_windmill(WindmillParams::new(2, 3)?);
    let a = g.adjacency_matrix();

    for len in 0..=6 {
        let counts = count_walks_matrix(&g, len);
        assert_eq!(counts, a.pow(len as u64)?);
        println!("length {len}: {} walks 1 -> 1", count_walks(&g, 1, 1, len)?);
    }

    let list = enumerate_walks(&g, 1, 3, 5, 100)?;
    println!("walks 1 -> 3 of length 5:");
    for walk in &list.walks {
        println!("  {:?}", walk.vertices());
    }
    println!("shortest 2 -> 5: {:?}", shortest_walk_length(&g, 2, 5)?);
    Ok(())
}
