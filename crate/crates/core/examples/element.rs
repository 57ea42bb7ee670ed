//! Normal forms in `B_n/[P_n,P_n]` and the group law on them.
//!
//! Run with `cargo run --example element -- 4 "s1 s2 S3 s1"`.

use braidcryst::braid::{generator_a, normal_form, BraidWord};

fn main() -> braidcryst::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let text = args.next().unwrap_or_else(|| "s1 s2 S3 s1".to_string());

    let w = BraidWord::parse(n, &text)?;
    let x = normal_form(&w)?;
    println!("{w}  ->  {x}");
    println!("permutation {} of order {}", x.perm(), x.perm().order());
    match x.finite_order() {
        Some(m) => println!("finite order {m}"),
        None => println!("infinite order"),
    }

    let a = generator_a(1, 2, n)?;
    let conj = &(&x * &a) * &x.inverse();
    println!("x A_{{1,2}} x^-1 = {}", conj.pure());
    println!("x^3 = {}", x.power(3));
    Ok(())
}
