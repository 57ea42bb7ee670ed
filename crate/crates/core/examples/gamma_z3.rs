//! Builds the Bieberbach group for `Z3`, prints its generators and lattice
//! basis, and checks both certificates.

use braidcryst::gamma::{
    build_generators, build_preimage, verify_basis, verify_torsion_free, DEFAULT_MAX_ORDER,
};
use braidcryst::group_spec::GroupSpec;

fn main() -> braidcryst::Result<()> {
    let spec = GroupSpec::parse("Z3")?;
    let gamma = build_generators(&spec)?;
    println!("n = {}, lattice rank {}", gamma.n(), gamma.dimension());
    for g in gamma.generators() {
        println!("  {g}");
    }
    for b in gamma.lattice_basis() {
        println!("  basis {:<10} {}", b.label, b.vector);
    }

    let basis = verify_basis(&gamma, DEFAULT_MAX_ORDER)?;
    println!(
        "Schreier generators: {}, Hermite forms equal: {}",
        basis.schreier_generators, basis.hermite_forms_equal
    );
    let torsion = verify_torsion_free(&gamma, DEFAULT_MAX_ORDER)?;
    println!("torsion free: {}", torsion.torsion_free());

    // the full preimage of Z3 in B_3/[P_3,P_3] does have torsion
    let control = build_preimage(&spec)?;
    let t = verify_torsion_free(&control, DEFAULT_MAX_ORDER)?;
    for c in t.witnesses() {
        let w = c.witness.as_ref().expect("witness");
        println!("control: coset {:?} has {w} of order {:?}", c.exponents, w.finite_order());
    }
    Ok(())
}
