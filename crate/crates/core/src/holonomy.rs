//! Holonomy representations: the integral action by conjugation of the
//! holonomy group on the translation lattice.
//!
//! For cyclic `Z_q` with `q = ∏ z_j` odd (pairwise coprime prime powers
//! `z_j`) there is an ordered basis `e_{j,h,k}` in which the generator acts
//! block diagonally by `N_{z_j}[q]`, cyclic shifts `M_{z_j}` and, for each
//! pair of blocks, `M_{z_j z_h}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::braid::{act, delta_element, PairIndex, PureClassVector, QuotientElement};
use crate::error::{Error, Result};
use crate::gamma::{build_generators, GammaData, LabeledVector};
use crate::group_spec::GroupSpec;
use crate::intmat::{integer_kernel, rational_coordinates, Int, Lattice, Matrix, SolveFailure};
use crate::poly::expand_factored;

/// A basis vector `e_{j,h,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry {
    pub j: usize,
    pub h: usize,
    pub k: usize,
    pub vector: PureClassVector,
}

impl BasisEntry {
    pub fn label(&self) -> String {
        format!("e_{{{},{},{}}}", self.j, self.h, self.k)
    }
}

/// An orbit of basis vectors under the generator: a run of consecutive
/// entries sharing `(j, h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub j: usize,
    pub h: usize,
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug)]
pub struct OrderedBasis {
    spec: GroupSpec,
    entries: Vec<BasisEntry>,
    orbits: Vec<Orbit>,
}

impl OrderedBasis {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn q(&self) -> u64 {
        self.spec.order()
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vectors(&self) -> Vec<Vec<Int>> {
        self.entries.iter().map(|e| e.vector.coords().to_vec()).collect()
    }

    pub fn lattice(&self) -> Lattice {
        let v = self.vectors();
        Lattice::from_generators(crate::braid::pair_count(self.spec.n()), v.iter())
    }

    /// Position of `e_{j,h,k}`.
    pub fn position(&self, j: usize, h: usize, k: usize) -> Option<usize> {
        self.entries
            .iter()
            .position(|e| (e.j, e.h, e.k) == (j, h, k))
    }
}

fn cyclic_spec(spec: &GroupSpec) -> Result<()> {
    if spec.is_cyclic_odd() {
        Ok(())
    } else {
        Err(Error::OutOfScope(format!(
            "{spec} is not cyclic of odd order; no block decomposition"
        )))
    }
}

/// `δ = ∏_l δ_{n_{l-1}, z_l}`, whose permutation generates the holonomy.
pub fn generator(spec: &GroupSpec) -> Result<QuotientElement> {
    let n = spec.n();
    let mut x = QuotientElement::identity(n)?;
    for b in spec.odd_blocks() {
        x = &x * &delta_element(b.offset, b.size, n)?;
    }
    Ok(x)
}

pub fn ordered_basis(q: u64) -> Result<OrderedBasis> {
    ordered_basis_for(&GroupSpec::cyclic_odd(q)?)
}

/// The ordered basis for a cyclic odd spec: per block `j` the orbit
/// `h = 0` (`e_{j,0,1}` the sum of the adjacent-strand pairs, followed by
/// conjugates of `q·A_{o+2,o+3}`), then orbits `h ≥ 1` of `q·A_{o+1,o+h+2}`;
/// then for blocks `j < h` the orbit of `q·A_{o_j+1,o_h+1}`, labelled
/// `(t+j, t+h)`.
pub fn ordered_basis_for(spec: &GroupSpec) -> Result<OrderedBasis> {
    cyclic_spec(spec)?;
    let n = spec.n();
    let q = Int::from(spec.order());
    let inv = generator(spec)?.perm().inverse();
    let conj = |v: &PureClassVector| act(&inv, v);
    let blocks = spec.odd_blocks();
    let gamma = build_generators(spec)?;
    let x1 = gamma.x1();
    let t = blocks.len();
    let mut entries = Vec::new();
    let mut orbits = Vec::new();
    for (jj, b) in blocks.iter().enumerate() {
        let j = jj + 1;
        let z = b.size;
        let o = b.offset;
        let c1 = x1[jj].element.power(z as i64);
        let start = entries.len();
        entries.push(BasisEntry {
            j,
            h: 0,
            k: 1,
            vector: c1.pure().clone(),
        });
        let mut v = PureClassVector::unit(PairIndex::new(o + 2, o + 3), n).scaled(&q);
        for k in 2..=z {
            let next = conj(&v);
            entries.push(BasisEntry { j, h: 0, k, vector: v });
            v = next;
        }
        orbits.push(Orbit {
            j,
            h: 0,
            start,
            len: z,
        });
        for h in 1..=(z - 3) / 2 {
            let first = PureClassVector::unit(PairIndex::new(o + 1, o + h + 2), n).scaled(&q);
            push_orbit(&mut entries, &mut orbits, &conj, (j, h), first, z);
        }
    }
    for a in 0..t {
        for c in a + 1..t {
            let first =
                PureClassVector::unit(PairIndex::new(blocks[a].offset + 1, blocks[c].offset + 1), n)
                    .scaled(&q);
            push_orbit(
                &mut entries,
                &mut orbits,
                &conj,
                (t + a + 1,
                t + c + 1),
                first,
                blocks[a].size * blocks[c].size,
            );
        }
    }
    Ok(OrderedBasis {
        spec: spec.clone(),
        entries,
        orbits,
    })
}

fn push_orbit(
    entries: &mut Vec<BasisEntry>,
    orbits: &mut Vec<Orbit>,
    conj: &dyn Fn(&PureClassVector) -> PureClassVector,
    (j, h): (usize, usize),
    first: PureClassVector,
    len: usize,
) {
    let start = entries.len();
    let mut v = first;
    for k in 1..=len {
        let next = conj(&v);
        entries.push(BasisEntry { j, h, k, vector: v });
        v = next;
    }
    orbits.push(Orbit { j, h, start, len });
}

/// Matrix of conjugation by `g` in the basis given by `basis` (one vector
/// per column), or an error if `g` does not preserve the lattice.
pub fn matrix_of(g: &QuotientElement, basis: &[Vec<Int>]) -> Result<Matrix> {
    let n = g.n();
    let inv = g.perm().inverse();
    let images: Vec<Vec<Int>> = basis
        .iter()
        .map(|b| {
            let v = PureClassVector::from_coords(n, b.clone())?;
            Ok(act(&inv, &v).into_coords())
        })
        .collect::<Result<_>>()?;
    let coords = rational_coordinates(basis, &images).map_err(|e| match e {
        SolveFailure::DependentBasis => Error::LatticeNotPreserved("basis is dependent".into()),
        SolveFailure::NotInSpan(i) => {
            Error::LatticeNotPreserved(format!("image of basis vector {} leaves the span", i + 1))
        }
    })?;
    let mut cols = Vec::with_capacity(coords.len());
    for (i, c) in coords.into_iter().enumerate() {
        let mut col = Vec::with_capacity(c.len());
        for x in c {
            if !x.is_integer() {
                return Err(Error::LatticeNotPreserved(format!(
                    "image of basis vector {} has coordinate {x}",
                    i + 1
                )));
            }
            col.push(x.to_integer());
        }
        cols.push(col);
    }
    Ok(Matrix::from_columns(basis.len(), &cols))
}

/// Matrix of the generator's conjugation action in the ordered basis.
#[derive(Clone, Debug)]
pub struct HolonomyMatrix {
    pub basis: OrderedBasis,
    pub generator: QuotientElement,
    pub matrix: Matrix,
}

impl HolonomyMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

pub fn holonomy_matrix(q: u64) -> Result<HolonomyMatrix> {
    holonomy_matrix_for(&GroupSpec::cyclic_odd(q)?)
}

pub fn holonomy_matrix_for(spec: &GroupSpec) -> Result<HolonomyMatrix> {
    let basis = ordered_basis_for(spec)?;
    let generator = generator(spec)?;
    let matrix = matrix_of(&generator, &basis.vectors())?;
    Ok(HolonomyMatrix {
        basis,
        generator,
        matrix,
    })
}

/// One diagonal block of the decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HolonomyBlock {
    /// `N_z[q]`.
    N { z: usize, q: u64 },
    /// The cyclic shift `M_z`.
    M { z: usize },
}

impl HolonomyBlock {
    pub fn size(self) -> usize {
        match self {
            HolonomyBlock::N { z, .. } | HolonomyBlock::M { z } => z,
        }
    }

    pub fn matrix(self) -> Matrix {
        match self {
            HolonomyBlock::N { z, q } => n_block(z, q),
            HolonomyBlock::M { z } => m_block(z),
        }
    }
}

impl fmt::Display for HolonomyBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HolonomyBlock::N { z, q } => write!(f, "N_{z}[{q}]"),
            HolonomyBlock::M { z } => write!(f, "M_{z}"),
        }
    }
}

/// `N_z[q]`: first row `(1, 0, …, 0, q)`, ones on the subdiagonal from the
/// second column on, last column `(q, -1, …, -1)`.
pub fn n_block(z: usize, q: u64) -> Matrix {
    let mut m = Matrix::zeros(z, z);
    m.set(0, 0, Int::one());
    for c in 1..z - 1 {
        m.set(c + 1, c, Int::one());
    }
    m.set(0, z - 1, Int::from(q));
    for r in 1..z {
        m.set(r, z - 1, -Int::one());
    }
    m
}

/// Cyclic shift: `e_k ↦ e_{k+1}`, `e_z ↦ e_1`.
pub fn m_block(z: usize) -> Matrix {
    let mut m = Matrix::zeros(z, z);
    for c in 0..z {
        m.set((c + 1) % z, c, Int::one());
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSpec {
    pub blocks: Vec<HolonomyBlock>,
}

impl BlockSpec {
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.size()).sum()
    }

    pub fn assemble(&self) -> Matrix {
        let parts: Vec<Matrix> = self.blocks.iter().map(|b| b.matrix()).collect();
        Matrix::direct_sum(&parts)
    }
}

pub fn block_structure(q: u64) -> Result<BlockSpec> {
    block_structure_for(&GroupSpec::cyclic_odd(q)?)
}

pub fn block_structure_for(spec: &GroupSpec) -> Result<BlockSpec> {
    cyclic_spec(spec)?;
    let q = spec.order();
    let zs: Vec<usize> = spec.odd_blocks().iter().map(|b| b.size).collect();
    let mut blocks = Vec::new();
    for &z in &zs {
        blocks.push(HolonomyBlock::N { z, q });
        for _ in 0..(z - 3) / 2 {
            blocks.push(HolonomyBlock::M { z });
        }
    }
    for a in 0..zs.len() {
        for c in a + 1..zs.len() {
            blocks.push(HolonomyBlock::M { z: zs[a] * zs[c] });
        }
    }
    Ok(BlockSpec { blocks })
}

/// `∏ (x^z - 1)^m`, keyed by `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredCharPoly {
    pub factors: BTreeMap<u64, u64>,
}

impl FactoredCharPoly {
    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|(z, m)| z * m).sum()
    }

    pub fn as_pairs(&self) -> Vec<(u64, u64)> {
        self.factors.iter().map(|(&z, &m)| (z, m)).collect()
    }

    pub fn expand(&self) -> Vec<Int> {
        expand_factored(&self.as_pairs())
    }
}

impl fmt::Display for FactoredCharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(z, m)| {
                if *m == 1 {
                    format!("(x^{z} - 1)")
                } else {
                    format!("(x^{z} - 1)^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(""))
    }
}

/// `∏_j (x^{z_j} - 1)^{(z_j - 1)/2} ∏_{j<h} (x^{z_j z_h} - 1)`.
pub fn char_poly_factored(q: u64) -> Result<FactoredCharPoly> {
    char_poly_factored_for(&GroupSpec::cyclic_odd(q)?)
}

pub fn char_poly_factored_for(spec: &GroupSpec) -> Result<FactoredCharPoly> {
    cyclic_spec(spec)?;
    let zs: Vec<u64> = spec.factor_orders();
    let mut factors = BTreeMap::new();
    for &z in &zs {
        *factors.entry(z).or_insert(0) += (z - 1) / 2;
    }
    for a in 0..zs.len() {
        for c in a + 1..zs.len() {
            *factors.entry(zs[a] * zs[c]).or_insert(0) += 1;
        }
    }
    Ok(FactoredCharPoly { factors })
}

/// Characteristic polynomial by exact Faddeev–LeVerrier, ascending.
pub fn char_poly_direct(m: &Matrix) -> Vec<Int> {
    m.char_poly()
}

/// `Σ_j (z_j - 1)/2 + t(t-1)/2`.
pub fn betti_first(q: u64) -> Result<u64> {
    betti_first_for(&GroupSpec::cyclic_odd(q)?)
}

pub fn betti_first_for(spec: &GroupSpec) -> Result<u64> {
    cyclic_spec(spec)?;
    let t = spec.t() as u64;
    Ok(spec.factor_orders().iter().map(|z| (z - 1) / 2).sum::<u64>() + t * (t - 1) / 2)
}

/// `dim - rank(M - I)`.
pub fn betti_rank(m: &Matrix) -> usize {
    m.rows() - m.minus_identity().rank()
}

/// Rank of the fixed sublattice of several commuting matrices.
pub fn betti_rank_common(ms: &[Matrix]) -> usize {
    let dim = ms.first().map_or(0, Matrix::rows);
    let stacked: Vec<Matrix> = ms.iter().map(Matrix::minus_identity).collect();
    if stacked.is_empty() {
        return dim;
    }
    dim - Matrix::vstack(&stacked).rank()
}

/// Generators of the center: `e_{j,0,1}` and the sum of every other orbit.
#[derive(Clone, Debug)]
pub struct CenterBasis {
    pub labels: Vec<String>,
    /// Coordinates in the ordered basis.
    pub coords: Vec<Vec<Int>>,
    /// The same vectors in the `A_{i,j}` basis.
    pub vectors: Vec<PureClassVector>,
}

impl CenterBasis {
    pub fn rank(&self) -> usize {
        self.coords.len()
    }
}

pub fn center_basis(q: u64) -> Result<CenterBasis> {
    center_basis_for(&ordered_basis(q)?)
}

pub fn center_basis_for(basis: &OrderedBasis) -> Result<CenterBasis> {
    let dim = basis.len();
    let n = basis.spec().n();
    let mut labels = Vec::new();
    let mut coords = Vec::new();
    let mut vectors = Vec::new();
    for o in basis.orbits() {
        let range: Vec<usize> = if o.h == 0 && o.j <= basis.spec().t() {
            vec![o.start]
        } else {
            (o.start..o.start + o.len).collect()
        };
        let mut c = vec![Int::zero(); dim];
        let mut v = PureClassVector::zero(n);
        for &i in &range {
            c[i] = Int::one();
            v = &v + &basis.entries()[i].vector;
        }
        labels.push(if range.len() == 1 {
            basis.entries()[o.start].label()
        } else {
            format!("sum e_{{{},{},k}}", o.j, o.h)
        });
        coords.push(c);
        vectors.push(v);
    }
    Ok(CenterBasis {
        labels,
        coords,
        vectors,
    })
}

/// Whether `vs` spans exactly the saturated integer kernel of `M - I`.
pub fn spans_fixed_lattice(m: &Matrix, vs: &[Vec<Int>]) -> bool {
    let kernel = integer_kernel(&m.minus_identity());
    let fixed = Lattice::from_generators(m.rows(), kernel.iter());
    let spanned = Lattice::from_generators(m.rows(), vs.iter());
    fixed == spanned && vs.iter().all(|v| m.mul_vec(v) == *v)
}

/// Smallest `k ≥ 1` with `M^k = I`, searching up to `limit`.
pub fn matrix_order(m: &Matrix, limit: u64) -> Option<u64> {
    let mut p = m.clone();
    for k in 1..=limit {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}

/// `tr(M^k)` for `k = 0..count`, using sparse matrix-vector products.
pub fn trace_vector(m: &Matrix, count: usize) -> Vec<Int> {
    let dim = m.rows();
    let cols: Vec<Vec<(usize, Int)>> = (0..dim)
        .map(|c| {
            (0..dim)
                .filter_map(|r| {
                    let x = m.get(r, c);
                    (!x.is_zero()).then(|| (r, x.clone()))
                })
                .collect()
        })
        .collect();
    let mut traces = vec![Int::zero(); count];
    for i in 0..dim {
        let mut v: BTreeMap<usize, Int> = BTreeMap::from([(i, Int::one())]);
        for tr in traces.iter_mut() {
            if let Some(x) = v.get(&i) {
                *tr += x;
            }
            let mut next: BTreeMap<usize, Int> = BTreeMap::new();
            for (&c, x) in &v {
                for (r, y) in &cols[c] {
                    let e = next.entry(*r).or_insert_with(Int::zero);
                    *e += x * y;
                }
            }
            next.retain(|_, x| !x.is_zero());
            v = next;
        }
    }
    traces
}

/// Matrices of the section generators over the `C1 ∪ C2 ∪ C3` basis: the
/// holonomy representation for arbitrary abelian specs.
pub fn section_matrices(gamma: &GammaData) -> Result<Vec<(String, Matrix)>> {
    let basis: Vec<Vec<Int>> = gamma
        .lattice_basis()
        .iter()
        .map(|b: &LabeledVector| b.vector.coords().to_vec())
        .collect();
    gamma
        .sections()
        .iter()
        .map(|s| Ok((s.label.clone(), matrix_of(&s.element, &basis)?)))
        .collect()
}
