//! Places the constructions for `Z3` and `Z5` on disjoint strands of `B_8`
//! and certifies the product.

use braidcryst::gamma::{embed_product, sections_commute, verify_torsion_free, DEFAULT_MAX_ORDER};
use braidcryst::group_spec::GroupSpec;

fn main() -> braidcryst::Result<()> {
    let specs = [GroupSpec::parse("Z3")?, GroupSpec::parse("Z5")?];
    let g = embed_product(&specs, 8)?;
    println!("{}: n = {}, lattice rank {}", g.name(), g.n(), g.lattice().rank());
    println!("blocks commute: {}", sections_commute(&g));
    for s in g.sections() {
        println!("  {s}");
    }
    let t = verify_torsion_free(&g, DEFAULT_MAX_ORDER)?;
    println!("{} nontrivial cosets, torsion free: {}", t.cosets.len(), t.torsion_free());

    match embed_product(&specs, 7) {
        Err(e) => println!("m = 7: {e}"),
        Ok(_) => unreachable!("Z3 x Z5 needs 8 strands"),
    }
    Ok(())
}
