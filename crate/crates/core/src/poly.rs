//! Integer polynomials (ascending coefficient vectors), cyclotomic
//! polynomials and small number-theoretic helpers.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::intmat::Int;

/// Prime factorisation by trial division, primes ascending.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut r = 0;
            while n.is_multiple_of(p) {
                n /= p;
                r += 1;
            }
            out.push((p, r));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    factor_u64(n)
        .into_iter()
        .map(|(p, r)| (p - 1) * p.pow(r - 1))
        .product()
}

pub fn mobius(n: u64) -> i64 {
    let f = factor_u64(n);
    if f.iter().any(|&(_, r)| r > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Ramanujan's sum `c_e(k) = Σ_{d | gcd(e,k)} μ(e/d) d`, the sum of the
/// `k`-th powers of the primitive `e`-th roots of unity.
pub fn ramanujan_sum(e: u64, k: u64) -> i64 {
    let g = e.gcd(&k);
    divisors(g)
        .into_iter()
        .map(|d| mobius(e / d) * d as i64)
        .sum()
}

fn trim(mut p: Vec<Int>) -> Vec<Int> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Division by a monic polynomial: `(quotient, remainder)`.
pub fn poly_divrem_monic(a: &[Int], b: &[Int]) -> (Vec<Int>, Vec<Int>) {
    assert!(b.last().is_some_and(One::is_one), "divisor must be monic");
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (vec![Int::zero()], trim(rem));
    }
    let mut quot = vec![Int::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

/// `x^z - 1`.
pub fn x_pow_minus_one(z: u64) -> Vec<Int> {
    let mut p = vec![Int::zero(); z as usize + 1];
    p[0] = -Int::one();
    p[z as usize] = Int::one();
    p
}

/// The `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u64) -> Vec<Int> {
    let mut p = x_pow_minus_one(d);
    for e in divisors(d) {
        if e < d {
            let (q, r) = poly_divrem_monic(&p, &cyclotomic(e));
            debug_assert!(r.iter().all(Zero::is_zero));
            p = q;
        }
    }
    p
}

/// Expands `∏ (x^z - 1)^m`.
pub fn expand_factored(factors: &[(u64, u64)]) -> Vec<Int> {
    let mut acc = vec![Int::one()];
    for &(z, m) in factors {
        let f = x_pow_minus_one(z);
        for _ in 0..m {
            acc = poly_mul(&acc, &f);
        }
    }
    acc
}

/// Φ_d multiplicities of `∏ (x^z - 1)^m`.
pub fn cyclotomic_multiplicities(factors: &[(u64, u64)]) -> BTreeMap<u64, u64> {
    let mut out = BTreeMap::new();
    for &(z, m) in factors {
        for d in divisors(z) {
            *out.entry(d).or_insert(0) += m;
        }
    }
    out
}

/// Factors a monic polynomial whose roots are all `e`-th roots of unity for
/// some `e | order` into cyclotomic polynomials. Returns `None` when
/// something other than cyclotomic factors remains.
pub fn cyclotomic_decomposition(poly: &[Int], order: u64) -> Option<BTreeMap<u64, u64>> {
    let mut rest = trim(poly.to_vec());
    let mut out = BTreeMap::new();
    for d in divisors(order) {
        let phi = cyclotomic(d);
        loop {
            let (q, r) = poly_divrem_monic(&rest, &phi);
            if rest.len() < phi.len() || !r.iter().all(Zero::is_zero) {
                break;
            }
            rest = q;
            *out.entry(d).or_insert(0) += 1;
        }
    }
    (rest.len() == 1 && rest[0].is_one()).then_some(out)
}

/// Renders an ascending coefficient vector as `x^3 - 1`.
pub fn format_poly(p: &[Int]) -> String {
    let mut terms = Vec::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Int::zero();
        let mag = if neg { -c } else { c.clone() };
        let body = match (k, mag.is_one()) {
            (0, _) => mag.to_string(),
            (1, true) => "x".into(),
            (1, false) => format!("{mag}x"),
            (_, true) => format!("x^{k}"),
            (_, false) => format!("{mag}x^{k}"),
        };
        let sign = match (terms.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        terms.push(format!("{sign}{body}"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.concat()
    }
}
