//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers: fraction-free
//! (Bareiss) elimination for rank and determinant, Faddeev-LeVerrier for the
//! characteristic polynomial, Hermite normal form for lattice equality and
//! integer kernels, and Smith normal form for integer solvability.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The integer type used everywhere in the crate.
pub type Int = BigInt;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    /// Builds a matrix from rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(height: usize, cols: &[Vec<Int>]) -> Self {
        let mut m = Matrix::zeros(height, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), height, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Int {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Int) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Int> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if !x.is_zero() {
                    t.set(c, r, x.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn minus_identity(&self) -> Matrix {
        assert!(self.is_square());
        self.sub(&Matrix::identity(self.rows))
    }

    pub fn pow(&self, mut k: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Int {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    let x = b.get(r, c);
                    if !x.is_zero() {
                        out.set(r0 + r, c0 + c, x.clone());
                    }
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, Matrix::cols);
        let mut rows = Vec::new();
        for p in parts {
            assert_eq!(p.cols, cols);
            rows.extend(p.to_rows());
        }
        if rows.is_empty() {
            return Matrix::zeros(0, cols);
        }
        Matrix::from_rows(rows)
    }

    /// Determinant by Bareiss elimination.
    pub fn determinant(&self) -> Int {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return Int::one();
        }
        let mut rows = self.to_rows();
        let (rank, negate) = bareiss_echelon(&mut rows);
        if rank < self.rows {
            return Int::zero();
        }
        let d = rows[self.rows - 1][self.cols - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Rank by Bareiss elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        bareiss_echelon(&mut rows).0
    }

    /// Characteristic polynomial det(xI - A), coefficients from the constant
    /// term upwards (so the last entry is 1).
    ///
    /// Faddeev-LeVerrier: every division is exact over the integers, which is
    /// asserted.
    pub fn char_poly(&self) -> Vec<Int> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Int::zero(); n + 1];
        coeffs[n] = Int::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m);
            for i in 0..n {
                let v = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, v);
            }
            let tr = self.mul(&next).trace();
            let (q, r) = tr.div_rem(&Int::from(k as u64));
            assert!(r.is_zero(), "inexact division in Faddeev-LeVerrier");
            coeffs[n - k] = -q;
            m = next;
        }
        coeffs
    }
}

impl fmt::Display for Matrix {
    /// Aligned plain-text grid.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Fraction-free row echelon form in place. Returns the rank and whether the
/// row swaps flipped the sign of the determinant.
fn bareiss_echelon(a: &mut [Vec<Int>]) -> (usize, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = Int::one();
    let mut r = 0;
    let mut negate = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
            row[c] = Int::zero();
        }
        prev = pivot;
        r += 1;
    }
    (r, negate)
}

/// Extended gcd returning `(g, s, t)` with `g = s*a + t*b` and `g >= 0`.
pub fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

fn combine_rows(a: &[Int], sa: &Int, b: &[Int], sb: &Int) -> Vec<Int> {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let mut acc = Int::zero();
            if !x.is_zero() && !sa.is_zero() {
                acc += sa * x;
            }
            if !y.is_zero() && !sb.is_zero() {
                acc += sb * y;
            }
            acc
        })
        .collect()
}

/// A sublattice of `Z^width`, stored by its row Hermite normal form.
///
/// Two lattices are equal iff their Hermite forms are equal, so `PartialEq`
/// is lattice equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    width: usize,
    hnf: Vec<Vec<Int>>,
}

impl Lattice {
    pub fn from_generators<'a, I>(width: usize, generators: I) -> Lattice
    where
        I: IntoIterator<Item = &'a Vec<Int>>,
    {
        let mut pivots: BTreeMap<usize, Vec<Int>> = BTreeMap::new();
        for g in generators {
            assert_eq!(g.len(), width, "generator has wrong length");
            insert_reduced(&mut pivots, g.clone());
        }
        let mut hnf: Vec<Vec<Int>> = pivots.into_values().collect();
        reduce_above_pivots(&mut hnf);
        Lattice { width, hnf }
    }

    pub fn full(width: usize) -> Lattice {
        let id = Matrix::identity(width).to_rows();
        Lattice::from_generators(width, id.iter())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.hnf.len()
    }

    /// The Hermite basis, one row per basis vector.
    pub fn hermite_basis(&self) -> &[Vec<Int>] {
        &self.hnf
    }

    /// Index of the lattice in Z^width when it has full rank (product of the
    /// Hermite pivots).
    pub fn index(&self) -> Option<Int> {
        if self.rank() != self.width {
            return None;
        }
        Some(
            self.hnf
                .iter()
                .map(|row| row.iter().find(|x| !x.is_zero()).expect("pivot").clone())
                .product(),
        )
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        let mut v = v.to_vec();
        for row in &self.hnf {
            let c = leading(row).expect("zero row in hnf");
            if let Some(lv) = leading(&v) {
                if lv < c {
                    return false;
                }
            }
            if v[c].is_zero() {
                continue;
            }
            let (q, r) = v[c].div_rem(&row[c]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &q * y;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

fn leading(v: &[Int]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn insert_reduced(pivots: &mut BTreeMap<usize, Vec<Int>>, mut v: Vec<Int>) {
    loop {
        let Some(c) = leading(&v) else { return };
        match pivots.remove(&c) {
            None => {
                if v[c].is_negative() {
                    v.iter_mut().for_each(|x| *x = -&*x);
                }
                pivots.insert(c, v);
                return;
            }
            Some(row) => {
                let (g, s, t) = ext_gcd(&row[c], &v[c]);
                let a = row[c].div_floor(&g);
                let b = v[c].div_floor(&g);
                let new_row = combine_rows(&row, &s, &v, &t);
                let rest = combine_rows(&row, &-b, &v, &a);
                debug_assert!(rest[c].is_zero());
                pivots.insert(c, new_row);
                v = rest;
            }
        }
    }
}

fn reduce_above_pivots(hnf: &mut [Vec<Int>]) {
    for j in 0..hnf.len() {
        let c = leading(&hnf[j]).expect("zero row");
        let (above, below) = hnf.split_at_mut(j);
        let pivot_row = &below[0];
        let p = &pivot_row[c];
        for row in above.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let q = row[c].div_floor(p);
            if q.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x -= &q * y;
                }
            }
        }
    }
}

/// Basis of the integer kernel `{x in Z^cols : A x = 0}`, returned as rows in
/// Hermite normal form. The kernel of an integer matrix is always saturated,
/// and so is the returned basis.
pub fn integer_kernel(a: &Matrix) -> Vec<Vec<Int>> {
    let n = a.cols();
    let m = a.rows();
    // Rows of [A^T | I]; unimodular row operations on the left block.
    let mut work: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut row: Vec<Int> = a.column(i);
            row.extend((0..n).map(|j| if i == j { Int::one() } else { Int::zero() }));
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..m {
        loop {
            // smallest nonzero entry in column c among rows >= r
            let pick = (r..n)
                .filter(|&i| !work[i][c].is_zero())
                .min_by(|&i, &j| work[i][c].abs().cmp(&work[j][c].abs()));
            let Some(p) = pick else { break };
            work.swap(p, r);
            let mut done = true;
            for i in r + 1..n {
                if work[i][c].is_zero() {
                    continue;
                }
                let q = work[i][c].div_floor(&work[r][c]);
                let (top, bottom) = work.split_at_mut(i);
                let piv = &top[r];
                for (x, y) in bottom[0].iter_mut().zip(piv) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
                if !bottom[0][c].is_zero() {
                    done = false;
                }
            }
            if done {
                r += 1;
                break;
            }
        }
        if r == n {
            break;
        }
    }
    let kernel: Vec<Vec<Int>> = work[r..].iter().map(|row| row[m..].to_vec()).collect();
    Lattice::from_generators(n, kernel.iter()).hnf
}

/// Smith normal form `left * A * right = D` with `D` diagonal, nonnegative,
/// and each invariant factor dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// The nonzero invariant factors, in order.
    pub diagonal: Vec<Int>,
    pub left: Matrix,
    pub right: Matrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct SnfWork {
    a: Vec<Vec<Int>>,
    u: Vec<Vec<Int>>,
    v: Vec<Vec<Int>>,
}

impl SnfWork {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_i -= q * row_j
    fn sub_row(&mut self, i: usize, j: usize, q: &Int) {
        for mat in [&mut self.a, &mut self.u] {
            let (src, dst) = if i < j {
                let (lo, hi) = mat.split_at_mut(j);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = mat.split_at_mut(i);
                (&lo[j], &mut hi[0])
            };
            for (x, y) in dst.iter_mut().zip(src.iter()) {
                if !y.is_zero() {
                    *x -= q * y;
                }
            }
        }
    }

    /// col_i -= q * col_j
    fn sub_col(&mut self, i: usize, j: usize, q: &Int) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            if !row[j].is_zero() {
                let d = q * &row[j];
                row[i] -= d;
            }
        }
    }

    fn add_row(&mut self, i: usize, j: usize) {
        self.sub_row(i, j, &-Int::one());
    }
}

pub fn smith_normal_form(matrix: &Matrix) -> SmithForm {
    let (m, n) = (matrix.rows(), matrix.cols());
    let mut w = SnfWork {
        a: matrix.to_rows(),
        u: Matrix::identity(m).to_rows(),
        v: Matrix::identity(n).to_rows(),
    };
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // Locate the nonzero entry of least absolute value in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = &w.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < w.a[bi][bj].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        break;
                    }
                }
            }
            if best.is_some_and(|(bi, bj)| w.a[bi][bj].abs().is_one()) {
                break;
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            clear_pivot_cross(&mut w, t);
            // divisibility of the trailing block by the pivot
            let p = w.a[t][t].clone();
            let bad = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !w.a[i][j].is_zero() && !w.a[i][j].is_multiple_of(&p))
            });
            match bad {
                Some(i) => w.add_row(t, i),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            for x in w.a[t].iter_mut().chain(w.u[t].iter_mut()) {
                *x = -&*x;
            }
        }
        diagonal.push(w.a[t][t].clone());
        t += 1;
    }
    SmithForm {
        diagonal,
        left: Matrix::from_rows_sized(m, m, w.u),
        right: Matrix::from_rows_sized(n, n, w.v),
    }
}

/// Zero out row `t` and column `t` outside the diagonal, shrinking the pivot
/// by Euclid steps when needed.
fn clear_pivot_cross(w: &mut SnfWork, t: usize) {
    let m = w.a.len();
    let n = w.v.len();
    loop {
        let mut changed = false;
        for i in t + 1..m {
            if w.a[i][t].is_zero() {
                continue;
            }
            let q = w.a[i][t].div_floor(&w.a[t][t]);
            w.sub_row(i, t, &q);
            if !w.a[i][t].is_zero() {
                // remainder smaller than the pivot: promote it
                w.swap_rows(i, t);
                changed = true;
            }
        }
        for j in t + 1..n {
            if w.a[t][j].is_zero() {
                continue;
            }
            let q = w.a[t][j].div_floor(&w.a[t][t]);
            w.sub_col(j, t, &q);
            if !w.a[t][j].is_zero() {
                w.swap_cols(j, t);
                changed = true;
            }
        }
        if !changed {
            let clean = (t + 1..m).all(|i| w.a[i][t].is_zero())
                && (t + 1..n).all(|j| w.a[t][j].is_zero());
            if clean {
                return;
            }
        }
    }
}

impl Matrix {
    fn from_rows_sized(rows: usize, cols: usize, data: Vec<Vec<Int>>) -> Matrix {
        if rows == 0 || cols == 0 {
            return Matrix::zeros(rows, cols);
        }
        Matrix::from_rows(data)
    }
}

/// Outcome of solving `A x = b` over the integers.
#[derive(Clone, Debug)]
pub struct IntegerSolve {
    /// Invariant factors of `A`.
    pub diagonal: Vec<Int>,
    /// An integer solution, if one exists.
    pub solution: Option<Vec<Int>>,
}

/// Decides integer solvability of `A x = b` through the Smith form of `A`.
pub fn solve_integer(a: &Matrix, b: &[Int]) -> IntegerSolve {
    assert_eq!(a.rows(), b.len());
    let snf = smith_normal_form(a);
    let ub = snf.left.mul_vec(b);
    let r = snf.rank();
    let consistent_tail = ub[r..].iter().all(Zero::is_zero);
    let mut y = vec![Int::zero(); a.cols()];
    let mut ok = consistent_tail;
    if ok {
        for i in 0..r {
            let (q, rem) = ub[i].div_rem(&snf.diagonal[i]);
            if !rem.is_zero() {
                ok = false;
                break;
            }
            y[i] = q;
        }
    }
    let solution = ok.then(|| snf.right.mul_vec(&y));
    IntegerSolve {
        diagonal: snf.diagonal,
        solution,
    }
}

/// Why a rational solve failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveFailure {
    /// The basis columns are linearly dependent.
    DependentBasis,
    /// Right-hand side `index` is outside the rational span of the basis.
    NotInSpan(usize),
}

/// Coordinates of each right-hand side in terms of linearly independent
/// basis columns, over the rationals.
///
/// Sparse Gauss-Jordan with columns processed from sparsest to densest; this
/// keeps fill-in near zero for the bases used in this crate (scaled unit
/// vectors plus a few orbit sums).
pub fn rational_coordinates(
    basis: &[Vec<Int>],
    rhs: &[Vec<Int>],
) -> Result<Vec<Vec<BigRational>>, SolveFailure> {
    let r = basis.len();
    let k = rhs.len();
    let height = basis
        .first()
        .or_else(|| rhs.first())
        .map_or(0, Vec::len);
    let mut rows: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); height];
    let mut col_nnz = vec![0usize; r];
    for (j, col) in basis.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            if !x.is_zero() {
                rows[i].insert(j, BigRational::from_integer(x.clone()));
                col_nnz[j] += 1;
            }
        }
    }
    for (j, col) in rhs.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            if !x.is_zero() {
                rows[i].insert(r + j, BigRational::from_integer(x.clone()));
            }
        }
    }
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&j| (col_nnz[j], j));
    let mut used = vec![false; height];
    let mut pivot_of_col = vec![usize::MAX; r];
    for &c in &order {
        let pick = (0..height)
            .filter(|&i| !used[i] && rows[i].contains_key(&c))
            .min_by_key(|&i| rows[i].len());
        let Some(p) = pick else {
            return Err(SolveFailure::DependentBasis);
        };
        used[p] = true;
        pivot_of_col[c] = p;
        let inv = rows[p][&c].recip();
        let pivot_row: BTreeMap<usize, BigRational> =
            rows[p].iter().map(|(&j, x)| (j, x * &inv)).collect();
        rows[p] = pivot_row.clone();
        for i in 0..height {
            if i == p {
                continue;
            }
            let Some(f) = rows[i].get(&c).cloned() else {
                continue;
            };
            for (&j, x) in &pivot_row {
                let entry = rows[i].entry(j).or_insert_with(BigRational::zero);
                *entry -= &f * x;
                if entry.is_zero() {
                    rows[i].remove(&j);
                }
            }
        }
    }
    for (i, row) in rows.iter().enumerate() {
        if !used[i] {
            if let Some((&j, _)) = row.iter().find(|(&j, _)| j >= r) {
                return Err(SolveFailure::NotInSpan(j - r));
            }
        }
    }
    let mut out = vec![vec![BigRational::zero(); r]; k];
    for c in 0..r {
        let p = pivot_of_col[c];
        for (&j, x) in &rows[p] {
            if j >= r {
                out[j - r][c] = x.clone();
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_i64_rows(rows)
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn determinant_and_rank() {
        let a = m(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(a.determinant(), Int::zero());
        assert_eq!(a.rank(), 2);
        let b = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(b.determinant(), Int::from(-1));
        let c = m(&[vec![1, 0, 3], vec![0, 0, -1], vec![0, 1, -1]]);
        assert_eq!(c.determinant(), Int::one());
        assert_eq!(m(&[vec![0, 0], vec![0, 0]]).rank(), 0);
        assert_eq!(m(&[vec![1, 2, 3], vec![2, 4, 6]]).rank(), 1);
    }

    #[test]
    fn char_poly_of_companion() {
        // companion matrix of x^3 - 1
        let c = m(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(c.char_poly(), ints(&[-1, 0, 0, 1]));
        let d = m(&[vec![2, 1], vec![1, 3]]);
        assert_eq!(d.char_poly(), ints(&[5, -5, 1]));
    }

    #[test]
    fn lattice_equality_is_basis_independent() {
        let a = Lattice::from_generators(2, [ints(&[2, 0]), ints(&[0, 3])].iter());
        let b = Lattice::from_generators(2, [ints(&[2, 3]), ints(&[4, 3]), ints(&[0, 6])].iter());
        assert_eq!(a, b);
        assert_eq!(a.index(), Some(Int::from(6)));
        assert!(a.contains(&ints(&[4, -3])));
        assert!(!a.contains(&ints(&[1, 0])));
    }

    #[test]
    fn smith_form_diagonal() {
        let a = m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.diagonal, ints(&[2, 6, 12]));
        let d = s.left.mul(&a).mul(&s.right);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { s.diagonal[i].clone() } else { Int::zero() };
                assert_eq!(d.get(i, j), &expect);
            }
        }
        assert_eq!(s.left.determinant().abs(), Int::one());
        assert_eq!(s.right.determinant().abs(), Int::one());
    }

    #[test]
    fn integer_solvability() {
        let a = m(&[vec![3, 0], vec![0, 3]]);
        assert!(solve_integer(&a, &ints(&[3, 6])).solution.is_some());
        assert!(solve_integer(&a, &ints(&[1, 0])).solution.is_none());
        let b = m(&[vec![1, 1, 1]]);
        let sol = solve_integer(&b, &ints(&[-1])).solution.unwrap();
        assert_eq!(sol.iter().sum::<Int>(), Int::from(-1));
    }

    #[test]
    fn kernel_is_saturated() {
        let a = m(&[vec![2, 2, 0], vec![0, 0, 0]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 2);
        let lat = Lattice::from_generators(3, k.iter());
        assert!(lat.contains(&ints(&[1, -1, 0])));
        assert!(lat.contains(&ints(&[0, 0, 1])));
    }

    #[test]
    fn rational_coordinates_in_structured_basis() {
        // basis: s = (1,1,1), 3e_2, 3e_3
        let basis = vec![ints(&[1, 1, 1]), ints(&[0, 3, 0]), ints(&[0, 0, 3])];
        let rhs = vec![ints(&[3, 0, 0])];
        let x = rational_coordinates(&basis, &rhs).unwrap();
        let want: Vec<BigRational> = [3, -1, -1]
            .iter()
            .map(|&v| BigRational::from_integer(Int::from(v)))
            .collect();
        assert_eq!(x[0], want);
        assert_eq!(
            rational_coordinates(&[ints(&[1, 0, 0])], &[ints(&[0, 1, 0])]),
            Err(SolveFailure::NotInSpan(0))
        );
    }
}
