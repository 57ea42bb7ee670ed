//! Holonomy representation of `Γ_q` for cyclic odd `q`: the matrix, its
//! block form and characteristic polynomial, and the Betti number.
//!
//! Run with `cargo run --example holonomy -- 15`.

use braidcryst::holonomy::{
    betti_first, betti_rank, block_structure, center_basis, char_poly_factored, holonomy_matrix,
};

fn main() -> braidcryst::Result<()> {
    let q: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let h = holonomy_matrix(q)?;
    let blocks = block_structure(q)?;
    let names: Vec<String> = blocks.blocks.iter().map(ToString::to_string).collect();
    println!("q = {q}: dimension {}, blocks {}", h.dim(), names.join(" + "));
    println!("action matrix equals block assembly: {}", h.matrix == blocks.assemble());
    if h.dim() <= 12 {
        println!("{}", h.matrix);
    }
    println!("char poly {}", char_poly_factored(q)?);
    println!("det {}", h.matrix.determinant());
    println!("betti_1 = {} (rank count {})", betti_first(q)?, betti_rank(&h.matrix));
    for l in center_basis(q)?.labels {
        println!("  center: {l}");
    }
    Ok(())
}
