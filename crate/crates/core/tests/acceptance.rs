//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use braidcryst::analysis::{
    anosov_for_q, calabi_yau, inn_dimension, inn_dimension_formula, kahler_verdict, presentation,
    real_irrep_multiplicities, Kahler,
};
use braidcryst::braid::{
    delta_word, normal_form, section_word, BraidWord, Letter, PairIndex, Perm, PureClassVector,
    QuotientElement,
};
use braidcryst::gamma::{
    build_generators, build_preimage, embed_product, sections_commute, verify_basis,
    verify_torsion_free, DEFAULT_MAX_ORDER,
};
use braidcryst::group_spec::{GroupSpec, PrimePower};
use braidcryst::holonomy::{
    betti_first, center_basis, char_poly_direct, char_poly_factored, holonomy_matrix, n_block,
};
use braidcryst::intmat::{integer_kernel, Int, Lattice, Matrix};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn nf(w: &BraidWord) -> QuotientElement {
    normal_form(w).expect("valid word")
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, lens: std::ops::Range<usize>) -> BraidWord {
    let len = rng.gen_range(lens);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n);
            if rng.gen() {
                Letter::pos(g)
            } else {
                Letter::neg(g)
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn all_perms(n: usize) -> Vec<Perm> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for x in (1..=n).filter(|x| !p.contains(x)) {
                let mut q = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        out = next;
    }
    out.into_iter().map(|p| Perm::from_images(p).unwrap()).collect()
}

fn group_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pairs = 600;
    for _ in 0..pairs {
        let n = rng.gen_range(3..=8);
        let u = random_word(&mut rng, n, 0..24);
        let v = random_word(&mut rng, n, 0..24);
        let lhs = nf(&u.concat(&v).unwrap());
        let rhs = &nf(&u) * &nf(&v);
        ensure!(lhs == rhs, "normal form of {u} · {v} is not the product");
    }
    for n in 3..=8 {
        for i in 1..n - 1 {
            let w = BraidWord::parse(n, &format!("s{i} s{} s{i} S{} S{i} S{}", i + 1, i + 1, i + 1))
                .unwrap();
            ensure!(nf(&w).is_identity(), "braid relation fails at n={n}, i={i}");
        }
        for i in 1..n {
            for j in i + 2..n {
                let w = BraidWord::parse(n, &format!("s{i} s{j} S{i} S{j}")).unwrap();
                ensure!(nf(&w).is_identity(), "far commutation fails at n={n}, {i},{j}");
            }
        }
    }
    let mut checked = 0;
    for n in 3..=4 {
        let perms = all_perms(n);
        for p in &perms {
            let s = section_word(p);
            ensure!(&s.permutation() == p, "section of {p} has the wrong permutation");
            let x = nf(&s);
            ensure!(x.pure().is_zero() && x.perm() == p, "section of {p} is not normal");
            for r in &perms {
                let sr = section_word(r);
                let direct = nf(&s.concat(&sr).unwrap());
                ensure!(direct == &x * &nf(&sr), "section product {p}·{r} disagrees");
                checked += 1;
            }
        }
    }
    Ok(format!("{pairs} random pairs, {checked} section products"))
}

fn torsion_facts() -> Outcome {
    for p in [3usize, 5, 7] {
        let w = delta_word(0, p, p).unwrap();
        for k in 1..p {
            ensure!(!nf(&w.repeat(k)).is_identity(), "δ for p={p} has order dividing {k}");
        }
        ensure!(nf(&w.repeat(p)).is_identity(), "δ^{p} is not trivial");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut found = 0;
    while found < 200 {
        let n = rng.gen_range(3..=8);
        let w = random_word(&mut rng, n, 1..20);
        let m = w.permutation().order();
        if m % 2 == 1 {
            continue;
        }
        found += 1;
        let wm = nf(&w.repeat(m as usize));
        ensure!(!wm.pure().is_zero(), "{w} has finite even order {m}");
        ensure!(!nf(&w).is_finite_order(), "finite_order misreports {w}");
    }
    Ok("δ orders 3, 5, 7; 200 even-order samples".into())
}

fn bieberbach_certificates() -> Outcome {
    let specs = ["Z3", "Z5", "Z7", "Z9", "Z3xZ5", "Z3xZ2", "Z9xZ4"];
    for s in specs {
        let spec = GroupSpec::parse(s).unwrap();
        let g = build_generators(&spec).map_err(|e| e.to_string())?;
        let t = verify_torsion_free(&g, DEFAULT_MAX_ORDER).map_err(|e| e.to_string())?;
        ensure!(t.torsion_free(), "{s}: torsion found");
        ensure!(t.cosets.len() as u64 == spec.order() - 1, "{s}: coset count");
        let b = verify_basis(&g, DEFAULT_MAX_ORDER).map_err(|e| e.to_string())?;
        ensure!(b.hermite_forms_equal && b.passed(), "{s}: Schreier lattice differs");
    }
    let control = build_preimage(&GroupSpec::parse("Z3").unwrap()).map_err(|e| e.to_string())?;
    let t = verify_torsion_free(&control, DEFAULT_MAX_ORDER).map_err(|e| e.to_string())?;
    let w = t.witnesses().next().ok_or("control group has no torsion witness")?;
    let x = w.witness.as_ref().unwrap();
    ensure!(x.finite_order() == Some(3), "witness order is {:?}", x.finite_order());
    ensure!(x.power(3).is_identity() && !x.is_identity(), "witness is not of order 3");
    Ok(format!("{} specs, control witness of order 3", specs.len()))
}

/// `det(M)` by fraction-free elimination.
fn bareiss_det(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn eval(poly: &[Int], x: i64) -> Int {
    poly.iter().rev().fold(Int::zero(), |acc, c| acc * Int::from(x) + c)
}

/// Checks an ascending coefficient list against `det(xI - M)` at `dim + 1`
/// integer points.
fn matches_det_samples(m: &Matrix, poly: &[Int]) -> bool {
    let d = m.rows();
    (-(d as i64) / 2..=d as i64 / 2 + 1).take(d + 1).all(|x| {
        let rows: Vec<Vec<Int>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let e = -m.get(i, j).clone();
                        if i == j {
                            e + Int::from(x)
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        bareiss_det(&rows) == eval(poly, x)
    })
}

fn holonomy_blocks() -> Outcome {
    for q in [3, 5, 9, 15] {
        let h = holonomy_matrix(q).map_err(|e| e.to_string())?;
        let blocks = braidcryst::holonomy::block_structure(q).map_err(|e| e.to_string())?;
        ensure!(h.matrix == blocks.assemble(), "q={q}: action matrix differs from blocks");
        let expanded = char_poly_factored(q).unwrap().expand();
        ensure!(expanded == char_poly_direct(&h.matrix), "q={q}: char polys differ");
        ensure!(matches_det_samples(&h.matrix, &expanded), "q={q}: det(xI-M) samples differ");
    }
    let h3 = holonomy_matrix(3).unwrap();
    ensure!(h3.matrix == n_block(3, 3), "q=3 matrix is not N_3[3]");
    let f15 = char_poly_factored(15).unwrap().to_string();
    ensure!(f15 == "(x^3 - 1)(x^5 - 1)^2(x^15 - 1)", "q=15 factored form {f15}");
    Ok("q = 3, 5, 9, 15".into())
}

/// Rank over Q by fraction-free elimination, independent of the library.
fn rank_oracle(m: &Matrix) -> usize {
    let mut a: Vec<Vec<Int>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let (top, here) = (a[rank][c].clone(), a[r][c].clone());
            for k in c..cols {
                let v = &a[r][k] * &top - &a[rank][k] * &here;
                a[r][k] = v;
            }
        }
        rank += 1;
    }
    rank
}

fn orientability_betti_anosov() -> Outcome {
    let expected = [(3, 1), (5, 2), (7, 3), (9, 4), (15, 4)];
    for (q, b) in expected {
        let h = holonomy_matrix(q).map_err(|e| e.to_string())?;
        ensure!(h.matrix.determinant().is_one(), "q={q}: det is not 1");
        let formula = betti_first(q).unwrap();
        let oracle = (h.dim() - rank_oracle(&h.matrix.minus_identity())) as u64;
        ensure!(formula == b && oracle == b, "q={q}: betti formula {formula}, oracle {oracle}");
    }
    for q in (3..=45).step_by(2) {
        let v = anosov_for_q(q).map_err(|e| e.to_string())?;
        ensure!(v.admits == Some(q != 3), "q={q}: anosov verdict {:?}", v.admits);
    }
    Ok("betti 1, 2, 3, 4, 4; anosov scan over odd q <= 45".into())
}

fn center_and_inn() -> Outcome {
    for q in [3, 5, 7, 9, 15] {
        let h = holonomy_matrix(q).unwrap();
        let c = center_basis(q).unwrap();
        for v in &c.coords {
            ensure!(h.matrix.mul_vec(v) == *v, "q={q}: center vector not fixed");
        }
        let kernel = integer_kernel(&h.matrix.minus_identity());
        let fixed = Lattice::from_generators(h.dim(), kernel.iter());
        let spanned = Lattice::from_generators(h.dim(), c.coords.iter());
        ensure!(fixed == spanned, "q={q}: center does not span the fixed lattice");
        ensure!(c.rank() as u64 == betti_first(q).unwrap(), "q={q}: center rank");
        for v in &c.vectors {
            let x = QuotientElement::from_pure(v.clone()).unwrap();
            let gen = braidcryst::holonomy::generator(h.basis.spec()).unwrap();
            ensure!((&(&gen * &x) * &gen.inverse()) == x, "q={q}: center vector not central");
        }
    }
    for q in [3, 5, 15] {
        let spec = GroupSpec::cyclic_odd(q).unwrap();
        let a = inn_dimension(q).unwrap();
        let b = inn_dimension_formula(&spec);
        ensure!(a == b, "q={q}: inn dimension {a} vs formula {b}");
    }
    Ok("q = 3, 5, 7, 9, 15; inn for 3, 5, 15".into())
}

fn kahler_calabi_yau() -> Outcome {
    for (p, r) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (5, 2), (3, 3)] {
        let pp = PrimePower { p, r };
        let z = pp.value();
        let k = kahler_verdict(Some(pp));
        ensure!((k == Kahler::Yes) == (z % 4 == 1), "{z}: kahler verdict {k}");
        let h = holonomy_matrix(z).map_err(|e| e.to_string())?;
        let irreps = real_irrep_multiplicities(&h.matrix, z).map_err(|e| e.to_string())?;
        ensure!(irreps.all_even() == (k == Kahler::Yes), "{z}: parity disagrees");
        let cy = calabi_yau(Some(pp), true);
        if k == Kahler::Yes {
            let u = (z - 1) / 4;
            ensure!(cy == Some(z * (z - 1) / 2) && cy == Some(2 * u * (4 * u + 1)), "{z}: CY {cy:?}");
        } else {
            ensure!(cy.is_none(), "{z}: CY reported without Kähler");
        }
    }
    Ok("p^r in 3, 5, 7, 9, 11, 13, 25, 27".into())
}

fn presentations() -> Outcome {
    let mut total = 0;
    for q in [3, 5, 9] {
        let p = presentation(q).map_err(|e| e.to_string())?;
        let bad = p.failing_relations();
        ensure!(bad.is_empty(), "q={q}: relations {bad:?} fail");
        total += p.relations.len();
    }
    Ok(format!("{total} relations"))
}

fn product_embedding() -> Outcome {
    let specs = [GroupSpec::parse("Z3").unwrap(), GroupSpec::parse("Z5").unwrap()];
    let g = embed_product(&specs, 8).map_err(|e| e.to_string())?;
    ensure!(g.n() == 8, "n = {}", g.n());
    ensure!(g.lattice().rank() == 13, "lattice rank {}", g.lattice().rank());
    ensure!(sections_commute(&g), "block sections do not commute");
    for (a, b) in [(1, 4), (3, 8), (2, 6)] {
        let x = QuotientElement::from_pure(PureClassVector::unit(PairIndex::new(a, b), 8)).unwrap();
        ensure!(!g.lattice().contains(x.pure().coords()), "cross pair {a},{b} in lattice");
    }
    let t = verify_torsion_free(&g, DEFAULT_MAX_ORDER).map_err(|e| e.to_string())?;
    ensure!(t.torsion_free(), "torsion in the product");
    ensure!(t.cosets.len() == 14, "{} cosets", t.cosets.len());
    Ok("rank 13, commuting blocks, torsion free".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("group law and sections", group_law),
        ("torsion facts", torsion_facts),
        ("torsion-free and basis certificates", bieberbach_certificates),
        ("holonomy block form and characteristic polynomials", holonomy_blocks),
        ("orientability, Betti numbers, Anosov scan", orientability_betti_anosov),
        ("center and inner automorphisms", center_and_inn),
        ("Kähler and Calabi-Yau", kahler_calabi_yau),
        ("presentation relations", presentations),
        ("product embedding", product_embedding),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {}: {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
