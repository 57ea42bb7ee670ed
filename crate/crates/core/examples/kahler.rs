//! Kähler and Calabi-Yau verdicts for prime power holonomy, cross-checked
//! against the parity of real irreducible multiplicities.

use braidcryst::analysis::{calabi_yau, kahler_verdict, real_irrep_multiplicities};
use braidcryst::group_spec::PrimePower;
use braidcryst::holonomy::holonomy_matrix;

fn main() -> braidcryst::Result<()> {
    for (p, r) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1)] {
        let pp = PrimePower { p, r };
        let q = pp.value();
        let m = holonomy_matrix(q)?.matrix;
        let irreps = real_irrep_multiplicities(&m, q)?;
        let cy = match calabi_yau(Some(pp), m.determinant() == 1.into()) {
            Some(d) => format!("Calabi-Yau of dimension {d}"),
            None => "no Calabi-Yau structure".into(),
        };
        println!(
            "{q:>3}: kahler {:<3} multiplicities {:?}  {cy}",
            kahler_verdict(Some(pp)).to_string(),
            irreps.multiplicities
        );
    }
    Ok(())
}
