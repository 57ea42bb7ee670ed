//! Construction of Bieberbach subgroups `Γ_G ≤ B_n/[P_n,P_n]` with finite
//! abelian holonomy `G`, and certificates for their basic properties.
//!
//! For `G = Z_{p_1^{r_1}} × ⋯ × Z_{2^{s_v}}` the group is generated by
//!
//! * `X1`: `A_{o+1,o+2} δ_{o,z}` for each odd block (offset `o`, size `z`),
//! * `X2`: `A_{r,s}^d` for the pairs inside the odd strands,
//! * `X3`: `A_{i,j}` for every other pair,
//! * `X4`: `η = σ_{o+1}⋯σ_{o+z-1}` for each 2-block.
//!
//! Its translation lattice has the basis `C1 ∪ C2 ∪ C3` made of the pure
//! parts of `x^z` for `x ∈ X1`, `d·A_{r,s}` for odd pairs other than the
//! first pair of each block, and `A_{i,j}` for the remaining pairs.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::braid::{
    a_word, act, delta_word, eta_word, normal_form, BraidWord, PairIndex, Perm, PureClassVector,
    QuotientElement,
};
use crate::error::{Error, Result};
use crate::group_spec::GroupSpec;
use crate::intmat::{solve_integer, Int, Lattice, Matrix};

/// Default bound on `|G|` for coset enumeration.
pub const DEFAULT_MAX_ORDER: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    /// `A δ` section of an odd block.
    X1,
    /// `d`-th power of an odd-block pair generator.
    X2,
    /// Pair generator outside the odd blocks.
    X3,
    /// `η` section of a 2-block.
    X4,
    /// Bare `δ` section, used by the full preimage.
    Delta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub label: String,
    pub word: BraidWord,
    pub element: QuotientElement,
}

impl Generator {
    fn from_word(kind: GeneratorKind, label: String, word: BraidWord) -> Result<Generator> {
        let element = normal_form(&word)?;
        Ok(Generator {
            kind,
            label,
            word,
            element,
        })
    }

    fn shifted(&self, offset: usize, n: usize) -> Result<Generator> {
        let element = self.element.shifted(offset, n)?;
        let mut label = self.label.clone();
        if element.is_pure() {
            if let Some((p, c)) = element.pure().entries().next() {
                label = if c.is_one() {
                    pair_label(p)
                } else {
                    format!("{}^{c}", pair_label(p))
                };
            }
        }
        Ok(Generator {
            kind: self.kind,
            label,
            word: self.word.shifted(offset, n)?,
            element,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledVector {
    pub label: String,
    pub vector: PureClassVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// The group built from the `X` sets; torsion free.
    Bieberbach,
    /// `σ^{-1}(H)/[P_n,P_n]`: the full pure lattice plus a section of each
    /// cyclic factor. Torsion free exactly when `H` is a 2-group.
    Preimage,
    /// Disjoint-strand product of smaller constructions.
    Product,
}

/// Generators, lattice basis and holonomy layout of a crystallographic
/// subgroup of `B_n/[P_n,P_n]` with abelian holonomy.
#[derive(Clone, Debug)]
pub struct GammaData {
    construction: Construction,
    name: String,
    spec: Option<GroupSpec>,
    n: usize,
    factor_orders: Vec<u64>,
    /// One section element per cyclic factor, in factor order.
    sections: Vec<Generator>,
    pure_generators: Vec<Generator>,
    basis: Vec<LabeledVector>,
}

impl GammaData {
    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factor_orders(&self) -> &[u64] {
        &self.factor_orders
    }

    pub fn order(&self) -> u64 {
        self.factor_orders.iter().product()
    }

    pub fn sections(&self) -> &[Generator] {
        &self.sections
    }

    pub fn pure_generators(&self) -> &[Generator] {
        &self.pure_generators
    }

    fn of_kind(&self, kind: GeneratorKind) -> Vec<&Generator> {
        self.sections
            .iter()
            .chain(&self.pure_generators)
            .filter(|g| g.kind == kind)
            .collect()
    }

    pub fn x1(&self) -> Vec<&Generator> {
        self.of_kind(GeneratorKind::X1)
    }

    pub fn x2(&self) -> Vec<&Generator> {
        self.of_kind(GeneratorKind::X2)
    }

    pub fn x3(&self) -> Vec<&Generator> {
        self.of_kind(GeneratorKind::X3)
    }

    pub fn x4(&self) -> Vec<&Generator> {
        self.of_kind(GeneratorKind::X4)
    }

    /// All group generators: sections first, then pure generators.
    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.sections.iter().chain(&self.pure_generators)
    }

    pub fn lattice_basis(&self) -> &[LabeledVector] {
        &self.basis
    }

    pub fn lattice(&self) -> Lattice {
        let rows: Vec<Vec<Int>> = self.basis.iter().map(|b| b.vector.coords().to_vec()).collect();
        Lattice::from_generators(crate::braid::pair_count(self.n), rows.iter())
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Int>> = self.basis.iter().map(|b| b.vector.coords().to_vec()).collect();
        Matrix::from_columns(crate::braid::pair_count(self.n), &cols)
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

fn pair_label(p: PairIndex) -> String {
    format!("A_{{{},{}}}", p.i, p.j)
}

fn unit(p: PairIndex, n: usize) -> PureClassVector {
    PureClassVector::unit(p, n)
}

/// Pairs `(r, s)` with both strands among the odd blocks.
fn odd_pairs(spec: &GroupSpec) -> Vec<PairIndex> {
    let m = spec.n_odd();
    PairIndex::all(spec.n()).filter(|p| p.j <= m).collect()
}

fn x1_generator(offset: usize, size: usize, n: usize, l: usize) -> Result<Generator> {
    let word = a_word(offset + 1, offset + 2, n)?.concat(&delta_word(offset, size, n)?)?;
    Generator::from_word(GeneratorKind::X1, format!("x{l}"), word)
}

fn eta_generator(offset: usize, size: usize, n: usize, f: usize) -> Result<Generator> {
    Generator::from_word(GeneratorKind::X4, format!("eta{f}"), eta_word(offset, size, n)?)
}

/// Generators `X1 ∪ X2 ∪ X3 ∪ X4` and the lattice basis of `Γ_G`.
///
/// A 2-group has no odd blocks and is built as the full preimage instead.
pub fn build_generators(spec: &GroupSpec) -> Result<GammaData> {
    if spec.is_two_group() {
        return build_preimage(spec);
    }
    let n = spec.n();
    let d = Int::from(spec.d());
    let mut sections = Vec::new();
    for (l, b) in spec.odd_blocks().iter().enumerate() {
        sections.push(x1_generator(b.offset, b.size, n, l + 1)?);
    }
    for (f, b) in spec.two_blocks().iter().enumerate() {
        sections.push(eta_generator(b.offset, b.size, n, f + 1)?);
    }
    let odd: HashSet<PairIndex> = odd_pairs(spec).into_iter().collect();
    let mut x2 = Vec::new();
    let mut x3 = Vec::new();
    for p in PairIndex::all(n) {
        let base = a_word(p.i, p.j, n)?;
        if odd.contains(&p) {
            let word = base.repeat(spec.d() as usize);
            let element = QuotientElement::from_pure(unit(p, n).scaled(&d))?;
            x2.push(Generator {
                kind: GeneratorKind::X2,
                label: format!("{}^{}", pair_label(p), spec.d()),
                word,
                element,
            });
        } else {
            x3.push(Generator::from_word(GeneratorKind::X3, pair_label(p), base)?);
        }
    }
    let basis = build_lattice_basis(spec)?;
    x2.extend(x3);
    Ok(GammaData {
        construction: Construction::Bieberbach,
        name: spec.to_string(),
        spec: Some(spec.clone()),
        n,
        factor_orders: spec.factor_orders(),
        sections,
        pure_generators: x2,
        basis,
    })
}

/// The basis `C1 ∪ C2 ∪ C3` of the translation lattice of `Γ_G`.
pub fn build_lattice_basis(spec: &GroupSpec) -> Result<Vec<LabeledVector>> {
    if spec.is_two_group() {
        return Ok(full_basis(spec.n()));
    }
    let n = spec.n();
    let d = Int::from(spec.d());
    let mut out = Vec::new();
    let mut skipped = HashSet::new();
    for (l, b) in spec.odd_blocks().iter().enumerate() {
        let x = x1_generator(b.offset, b.size, n, l + 1)?.element;
        let c = x.power(b.size as i64);
        if !c.is_pure() {
            return Err(Error::Internal("section power is not pure".into()));
        }
        out.push(LabeledVector {
            label: format!("(x{})^{}", l + 1, b.size),
            vector: c.pure().clone(),
        });
        skipped.insert(PairIndex::new(b.offset + 1, b.offset + 2));
    }
    for p in odd_pairs(spec) {
        if !skipped.contains(&p) {
            out.push(LabeledVector {
                label: format!("{}*{}", spec.d(), pair_label(p)),
                vector: unit(p, n).scaled(&d),
            });
        }
    }
    let m = spec.n_odd();
    for p in PairIndex::all(n).filter(|p| p.j > m) {
        out.push(LabeledVector {
            label: pair_label(p),
            vector: unit(p, n),
        });
    }
    Ok(out)
}

fn full_basis(n: usize) -> Vec<LabeledVector> {
    PairIndex::all(n)
        .map(|p| LabeledVector {
            label: pair_label(p),
            vector: unit(p, n),
        })
        .collect()
}

/// `σ^{-1}(H)/[P_n,P_n]` for the permutation group `H` of the spec: the full
/// pure lattice together with `δ` for each odd block and `η` for each 2-block.
///
/// For a 2-group this is a Bieberbach group; with odd factors it contains
/// torsion and serves as a control.
pub fn build_preimage(spec: &GroupSpec) -> Result<GammaData> {
    let n = spec.n();
    let mut sections = Vec::new();
    for (l, b) in spec.odd_blocks().iter().enumerate() {
        sections.push(Generator::from_word(
            GeneratorKind::Delta,
            format!("delta{}", l + 1),
            delta_word(b.offset, b.size, n)?,
        )?);
    }
    for (f, b) in spec.two_blocks().iter().enumerate() {
        sections.push(eta_generator(b.offset, b.size, n, f + 1)?);
    }
    let pure_generators = PairIndex::all(n)
        .map(|p| Generator::from_word(GeneratorKind::X3, pair_label(p), a_word(p.i, p.j, n)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(GammaData {
        construction: Construction::Preimage,
        name: format!("preimage of {spec}"),
        spec: Some(spec.clone()),
        n,
        factor_orders: spec.factor_orders(),
        sections,
        pure_generators,
        basis: full_basis(n),
    })
}

/// Places the constructions for `specs` on consecutive disjoint strand
/// blocks of `B_m`. The result has lattice rank `Σ n_i(n_i-1)/2` and
/// holonomy `∏ G_i`.
pub fn embed_product(specs: &[GroupSpec], m: usize) -> Result<GammaData> {
    if specs.is_empty() {
        return Err(Error::InvalidSpec("no blocks to embed".into()));
    }
    let needed: usize = specs.iter().map(GroupSpec::n).sum();
    if needed > m {
        return Err(Error::StrandBudget {
            needed,
            available: m,
        });
    }
    let mut offset = 0;
    let mut sections = Vec::new();
    let mut pure_generators = Vec::new();
    let mut basis = Vec::new();
    let mut factor_orders = Vec::new();
    let mut names = Vec::new();
    for (b, spec) in specs.iter().enumerate() {
        let g = build_generators(spec)?;
        let tag = |s: &str| format!("{}@{}", s, b + 1);
        for s in g.sections() {
            let mut s = s.shifted(offset, m)?;
            s.label = tag(&s.label);
            sections.push(s);
        }
        for s in g.pure_generators() {
            pure_generators.push(s.shifted(offset, m)?);
        }
        for v in g.lattice_basis() {
            basis.push(LabeledVector {
                label: tag(&v.label),
                vector: v.vector.shifted(offset, m),
            });
        }
        factor_orders.extend_from_slice(g.factor_orders());
        names.push(spec.to_string());
        offset += spec.n();
    }
    Ok(GammaData {
        construction: Construction::Product,
        name: format!("{} in B_{m}", names.join(" + ")),
        spec: None,
        n: m,
        factor_orders,
        sections,
        pure_generators,
        basis,
    })
}

/// A coset representative `∏ s_α^{e_α}` of the lattice in the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRep {
    pub exponents: Vec<u64>,
    pub element: QuotientElement,
}

impl CosetRep {
    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn label(&self) -> String {
        let e: Vec<String> = self.exponents.iter().map(ToString::to_string).collect();
        format!("({})", e.join(","))
    }
}

fn check_bound(order: u64, bound: u64) -> Result<()> {
    if order > bound {
        Err(Error::OrderBoundExceeded { order, bound })
    } else {
        Ok(())
    }
}

/// All `|G|` coset representatives, exponent vectors in lexicographic order.
pub fn coset_reps(gamma: &GammaData, bound: u64) -> Result<Vec<CosetRep>> {
    check_bound(gamma.order(), bound)?;
    let orders = gamma.factor_orders();
    let powers: Vec<Vec<QuotientElement>> = gamma
        .sections
        .iter()
        .zip(orders)
        .map(|(s, &o)| {
            let mut acc = vec![QuotientElement::identity(gamma.n).expect("n >= 3")];
            for _ in 1..o {
                let next = acc.last().expect("nonempty") * &s.element;
                acc.push(next);
            }
            acc
        })
        .collect();
    let mut reps = Vec::with_capacity(gamma.order() as usize);
    let mut exps = vec![0u64; orders.len()];
    loop {
        let mut x = QuotientElement::identity(gamma.n).expect("n >= 3");
        for (a, &e) in exps.iter().enumerate() {
            x = &x * &powers[a][e as usize];
        }
        reps.push(CosetRep {
            exponents: exps.clone(),
            element: x,
        });
        // odometer, last factor fastest
        let mut k = orders.len();
        loop {
            if k == 0 {
                return Ok(reps);
            }
            k -= 1;
            exps[k] += 1;
            if exps[k] < orders[k] {
                break;
            }
            exps[k] = 0;
        }
    }
}

fn rep_index(reps: &[CosetRep]) -> Result<HashMap<Perm, usize>> {
    let mut idx = HashMap::new();
    for (k, r) in reps.iter().enumerate() {
        if idx.insert(r.element.perm().clone(), k).is_some() {
            return Err(Error::Internal(format!(
                "two coset representatives share the permutation of {}",
                r.label()
            )));
        }
    }
    Ok(idx)
}

/// Schreier generators `y = M x (rep(M x))^{-1}` over all representatives
/// `M` and generators `x`. Each is pure; their pure parts are returned
/// (deduplicated, first-seen order).
pub fn schreier_generators(gamma: &GammaData, bound: u64) -> Result<Vec<PureClassVector>> {
    let reps = coset_reps(gamma, bound)?;
    let idx = rep_index(&reps)?;
    let inverses: Vec<QuotientElement> = reps.iter().map(|r| r.element.inverse()).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in &reps {
        for x in gamma.generators() {
            let mx = &r.element * &x.element;
            let k = *idx.get(mx.perm()).ok_or_else(|| {
                Error::Internal(format!("{} * {} leaves the coset set", r.label(), x.label))
            })?;
            let y = &mx * &inverses[k];
            if !y.is_pure() {
                return Err(Error::Internal("Schreier generator is not pure".into()));
            }
            if !y.pure().is_zero() && seen.insert(y.pure().clone()) {
                out.push(y.pure().clone());
            }
        }
    }
    Ok(out)
}

/// Outcome of comparing the Schreier lattice with the claimed basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisCertificate {
    pub schreier_generators: usize,
    pub schreier_rank: usize,
    pub claimed_rank: usize,
    pub claimed_independent: bool,
    pub hermite_forms_equal: bool,
    #[serde(serialize_with = "crate::json::ser_opt_int")]
    pub index_in_pure_lattice: Option<Int>,
}

impl BasisCertificate {
    pub fn passed(&self) -> bool {
        self.hermite_forms_equal && self.claimed_independent
    }
}

pub fn verify_basis(gamma: &GammaData, bound: u64) -> Result<BasisCertificate> {
    let ys = schreier_generators(gamma, bound)?;
    let width = crate::braid::pair_count(gamma.n);
    let coords: Vec<Vec<Int>> = ys.into_iter().map(PureClassVector::into_coords).collect();
    let schreier = Lattice::from_generators(width, coords.iter());
    let claimed = gamma.lattice();
    Ok(BasisCertificate {
        schreier_generators: coords.len(),
        schreier_rank: schreier.rank(),
        claimed_rank: claimed.rank(),
        claimed_independent: claimed.rank() == gamma.basis.len(),
        hermite_forms_equal: schreier == claimed,
        index_in_pure_lattice: claimed.index(),
    })
}

/// Result of the torsion question for one coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTorsion {
    pub exponents: Vec<u64>,
    /// Order of the coset's image in the holonomy group.
    pub holonomy_order: u64,
    /// Invariant factors of the linear system.
    pub diagonal: Vec<Int>,
    /// `θ·A` of finite order, when one exists.
    pub witness: Option<QuotientElement>,
}

/// Decides whether the coset `L·A` contains an element of finite order.
///
/// For `θ ∈ L`, `(θA)^m` with `m` the order of `A`'s permutation is pure
/// with pure part `Σ_{k<m} A^k θ A^{-k} + pure(A^m)`, affine in `θ`. Writing
/// `θ = B λ` over the lattice basis turns the question into integer
/// solvability of `T B λ = -pure(A^m)`.
pub fn coset_has_torsion(gamma: &GammaData, rep: &CosetRep) -> Result<CosetTorsion> {
    if rep.is_trivial() {
        return Err(Error::TrivialCoset);
    }
    toral_torsion(gamma, &rep.element, rep.exponents.clone())
}

fn toral_torsion(gamma: &GammaData, a: &QuotientElement, exponents: Vec<u64>) -> Result<CosetTorsion> {
    let n = gamma.n;
    let width = crate::braid::pair_count(n);
    let m = a.perm().order();
    let am = a.power(m as i64);
    if !am.is_pure() {
        return Err(Error::Internal("power by the holonomy order is not pure".into()));
    }
    let basis = gamma.basis_matrix();
    // columns of T·B: orbit sums of the basis vectors under conjugation by A
    let inv = a.perm().inverse();
    let mut cols = Vec::with_capacity(basis.cols());
    for b in &gamma.basis {
        let mut acc = PureClassVector::zero(n);
        let mut cur = b.vector.clone();
        for _ in 0..m {
            acc = &acc + &cur;
            cur = act(&inv, &cur);
        }
        cols.push(acc.into_coords());
    }
    let tb = Matrix::from_columns(width, &cols);
    let rhs: Vec<Int> = (-am.pure()).into_coords();
    let solved = solve_integer(&tb, &rhs);
    let witness = match solved.solution {
        Some(lambda) => {
            let theta = basis.mul_vec(&lambda);
            let theta = QuotientElement::from_pure(PureClassVector::from_coords(n, theta)?)?;
            let w = &theta * a;
            if w.finite_order() != Some(m) {
                return Err(Error::Internal(format!(
                    "torsion witness in coset {exponents:?} fails the order check"
                )));
            }
            Some(w)
        }
        None => None,
    };
    Ok(CosetTorsion {
        exponents,
        holonomy_order: m,
        diagonal: solved.diagonal,
        witness,
    })
}

/// Torsion verdict over all nontrivial cosets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCertificate {
    pub cosets: Vec<CosetTorsion>,
}

impl TorsionCertificate {
    pub fn torsion_free(&self) -> bool {
        self.cosets.iter().all(|c| c.witness.is_none())
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &CosetTorsion> {
        self.cosets.iter().filter(|c| c.witness.is_some())
    }
}

pub fn verify_torsion_free(gamma: &GammaData, bound: u64) -> Result<TorsionCertificate> {
    let reps = coset_reps(gamma, bound)?;
    let nontrivial: Vec<&CosetRep> = reps.iter().filter(|r| !r.is_trivial()).collect();
    let workers = std::thread::available_parallelism().map_or(1, usize::from).min(8);
    let chunk = nontrivial.len().div_ceil(workers).max(1);
    let results: Vec<Result<Vec<CosetTorsion>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = nontrivial
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|r| coset_has_torsion(gamma, r))
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("torsion worker panicked"))
            .collect()
    });
    let mut cosets = Vec::with_capacity(nontrivial.len());
    for r in results {
        cosets.extend(r?);
    }
    Ok(TorsionCertificate { cosets })
}

/// Subgroup of `S_n` generated by the section permutations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionCheck {
    pub subgroup_order: u64,
    pub generators_commute: bool,
    pub generator_orders: Vec<u64>,
    pub expected_orders: Vec<u64>,
}

impl ProjectionCheck {
    /// The image is abelian, each generator has the expected order and the
    /// order is the product, so it is the expected direct product.
    pub fn isomorphic(&self) -> bool {
        self.generators_commute
            && self.generator_orders == self.expected_orders
            && self.subgroup_order == self.expected_orders.iter().product::<u64>()
    }
}

pub fn check_projection(gamma: &GammaData, bound: u64) -> Result<ProjectionCheck> {
    check_bound(gamma.order(), bound)?;
    let gens: Vec<Perm> = gamma
        .sections
        .iter()
        .map(|s| s.element.perm().clone())
        .collect();
    let commute = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)));
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let id = Perm::identity(gamma.n);
    seen.insert(id.clone());
    queue.push_back(id);
    // stop well past the expected order so a wrong layout cannot run away
    let cap = 4 * bound.max(gamma.order()) + 1;
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            let q = p.then(g);
            if seen.insert(q.clone()) {
                if seen.len() as u64 > cap {
                    break;
                }
                queue.push_back(q);
            }
        }
    }
    Ok(ProjectionCheck {
        subgroup_order: seen.len() as u64,
        generators_commute: commute,
        generator_orders: gens.iter().map(Perm::order).collect(),
        expected_orders: gamma.factor_orders.clone(),
    })
}

/// Pairwise commutators of the section generators of different blocks.
pub fn sections_commute(gamma: &GammaData) -> bool {
    let s = &gamma.sections;
    s.iter()
        .enumerate()
        .all(|(i, a)| s[i + 1..].iter().all(|b| a.element.commutator(&b.element).is_identity()))
}

/// Checks that `v` lies in the lattice of `gamma`.
pub fn in_lattice(gamma: &GammaData, v: &PureClassVector) -> bool {
    gamma.lattice().contains(v.coords())
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind == GeneratorKind::X2 {
            write!(f, "{}", self.label)
        } else {
            write!(f, "{} = {}", self.label, self.word)
        }
    }
}
