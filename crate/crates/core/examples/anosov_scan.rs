//! Anosov verdicts and cyclotomic multiplicities for odd cyclic holonomy.

use braidcryst::analysis::{anosov_for_q, cyclotomic_multiplicities};
use braidcryst::holonomy::char_poly_factored;

fn main() -> braidcryst::Result<()> {
    let top: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(45);
    for q in (3..=top).step_by(2) {
        let v = anosov_for_q(q)?;
        let m = cyclotomic_multiplicities(&char_poly_factored(q)?);
        println!(
            "q = {q:>3}  anosov {:<5}  Phi_1 x{}  Phi_3 x{}",
            v.admits.unwrap_or(false),
            m.get(1),
            m.get(3)
        );
    }
    Ok(())
}
