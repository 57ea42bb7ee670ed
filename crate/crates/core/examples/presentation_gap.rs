//! Emits a finite presentation of `Γ_q` as GAP source after checking every
//! relation in the group.
//!
//! Run with `cargo run --example presentation_gap -- 5 > gamma5.g`.

use braidcryst::analysis::presentation;

fn main() -> braidcryst::Result<()> {
    let q: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let p = presentation(q)?;
    let bad = p.failing_relations();
    if !bad.is_empty() {
        eprintln!("relations {bad:?} do not hold");
        std::process::exit(2);
    }
    eprintln!("{} generators, {} relations, all verified", p.generators.len(), p.relations.len());
    print!("{}", p.to_gap());
    Ok(())
}
