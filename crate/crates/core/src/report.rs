//! The analysis report: one record collecting construction, certificates,
//! holonomy data and verdicts for a group spec, with text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::analysis::{self, AnosovVerdict, CyclotomicMultiplicities, Kahler, RealIrreps};
use crate::braid::{PureClassVector, QuotientElement};
use crate::error::Result;
use crate::gamma::{
    build_generators, check_projection, verify_basis, verify_torsion_free, BasisCertificate,
    Construction, GammaData, GeneratorKind, ProjectionCheck,
};
use crate::group_spec::GroupSpec;
use crate::holonomy::{self, HolonomyBlock};
use crate::intmat::{integer_kernel, Int, Lattice, Matrix};
use crate::json::{int_vec, matrix_rows, JsonInt};
use crate::poly::{cyclotomic_decomposition, format_poly};

pub const SCHEMA_ID: &str = "braidcryst.report/1";

/// Matrices larger than this are left out of text output unless asked for.
pub const TEXT_MATRIX_LIMIT: usize = 40;

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub max_order: u64,
    pub verify: bool,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_order: crate::gamma::DEFAULT_MAX_ORDER,
            verify: true,
            timings: false,
        }
    }
}

type PureEntries = Vec<(usize, usize, JsonInt)>;

fn pure_entries(v: &PureClassVector) -> PureEntries {
    v.entries().map(|(p, c)| (p.i, p.j, JsonInt(c.clone()))).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupInfo {
    pub construction: Construction,
    pub description: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorOut {
    pub label: String,
    pub kind: GeneratorKind,
    pub word: String,
    pub element: QuotientElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisOut {
    pub label: String,
    pub pure: PureEntries,
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetOut {
    pub exponents: Vec<u64>,
    pub holonomy_order: u64,
    pub snf_diagonal: Vec<JsonInt>,
    pub witness: Option<QuotientElement>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionOut {
    pub torsion_free: bool,
    pub expected_torsion_free: bool,
    pub passed: bool,
    pub cosets: Vec<CosetOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionOut {
    #[serde(flatten)]
    pub check: ProjectionCheck,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisCertOut {
    #[serde(flatten)]
    pub certificate: BasisCertificate,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificates {
    pub projection: ProjectionOut,
    pub basis: BasisCertOut,
    pub torsion: TorsionOut,
    pub all_passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharPolyOut {
    pub factors: Vec<(u64, u64)>,
    pub text: String,
    pub coefficients: Vec<JsonInt>,
    pub matches_direct: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionMatrixOut {
    pub section: String,
    pub matrix: Vec<Vec<JsonInt>>,
    pub determinant: JsonInt,
    pub char_poly: Vec<JsonInt>,
    pub cyclotomic: Option<BTreeMap<u64, u64>>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HolonomyOut {
    Cyclic {
        basis_labels: Vec<String>,
        blocks: Vec<HolonomyBlock>,
        block_equality: bool,
        matrix: Vec<Vec<JsonInt>>,
        determinant: JsonInt,
        order: Option<u64>,
        char_poly: CharPolyOut,
        cyclotomic: CyclotomicMultiplicities,
        betti_formula: u64,
        betti_rank: u64,
        real_irreps: Option<RealIrreps>,
    },
    Generic {
        basis_labels: Vec<String>,
        sections: Vec<SectionMatrixOut>,
        betti_rank: u64,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictsOut {
    pub orientable: bool,
    pub betti1: u64,
    pub anosov: AnosovVerdict,
    pub kahler: Kahler,
    pub calabi_yau: Option<u64>,
    pub inn_dimension: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterOut {
    pub rank: usize,
    pub labels: Vec<String>,
    pub vectors: Vec<PureEntries>,
    pub spans_fixed_lattice: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationOut {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub all_hold: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub spec: String,
    pub notices: Vec<String>,
    pub factor_orders: Vec<u64>,
    pub order: u64,
    pub group: GroupInfo,
    pub n: usize,
    pub dimension: usize,
    pub generators: Vec<GeneratorOut>,
    pub lattice_basis: Vec<BasisOut>,
    pub certificates: Option<Certificates>,
    pub holonomy: HolonomyOut,
    pub verdicts: VerdictsOut,
    pub center: CenterOut,
    pub presentation: Option<PresentationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
    /// Checks that did not pass; empty for a sound build.
    #[serde(skip)]
    pub failures: Vec<String>,
}

struct Clock {
    enabled: bool,
    marks: BTreeMap<String, f64>,
    last: Instant,
}

impl Clock {
    fn new(enabled: bool) -> Clock {
        Clock {
            enabled,
            marks: BTreeMap::new(),
            last: Instant::now(),
        }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        if self.enabled {
            let ms = (now - self.last).as_secs_f64() * 1000.0;
            self.marks.insert(stage.to_string(), (ms * 1000.0).round() / 1000.0);
        }
        self.last = now;
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then_some(self.marks)
    }
}

fn describe(gamma: &GammaData) -> String {
    match gamma.construction() {
        Construction::Bieberbach => "Bieberbach group built from the X1-X4 generator sets".into(),
        Construction::Preimage => {
            "two-group preimage: Bieberbach (no even-order torsion)".into()
        }
        Construction::Product => "product of block constructions".into(),
    }
}

/// Certificates for the construction; `failures` collects what did not pass.
pub fn certify(gamma: &GammaData, max_order: u64, failures: &mut Vec<String>) -> Result<Certificates> {
    let projection = check_projection(gamma, max_order)?;
    let proj_ok = projection.isomorphic();
    let basis = verify_basis(gamma, max_order)?;
    let basis_ok = basis.passed();
    let torsion = verify_torsion_free(gamma, max_order)?;
    let expected = gamma.construction() != Construction::Preimage
        || gamma.factor_orders().iter().all(|o| o.is_power_of_two());
    let torsion_free = torsion.torsion_free();
    let torsion_ok = torsion_free == expected;
    if !proj_ok {
        failures.push("section permutations do not generate the holonomy group".into());
    }
    if !basis_ok {
        failures.push("Schreier lattice differs from the claimed basis".into());
    }
    if !torsion_ok {
        failures.push("torsion verdict differs from the expected one".into());
    }
    Ok(Certificates {
        projection: ProjectionOut {
            check: projection,
            passed: proj_ok,
        },
        basis: BasisCertOut {
            certificate: basis,
            passed: basis_ok,
        },
        torsion: TorsionOut {
            torsion_free,
            expected_torsion_free: expected,
            passed: torsion_ok,
            cosets: torsion
                .cosets
                .into_iter()
                .map(|c| CosetOut {
                    exponents: c.exponents,
                    holonomy_order: c.holonomy_order,
                    snf_diagonal: int_vec(&c.diagonal),
                    witness: c.witness,
                })
                .collect(),
        },
        all_passed: proj_ok && basis_ok && torsion_ok,
    })
}

pub fn check_bound(spec: &GroupSpec, bound: u64) -> Result<()> {
    if spec.order() > bound {
        return Err(crate::Error::OrderBoundExceeded {
            order: spec.order(),
            bound,
        });
    }
    Ok(())
}

pub fn analyze(spec: &GroupSpec, opts: Options) -> Result<Report> {
    check_bound(spec, opts.max_order)?;
    let mut clock = Clock::new(opts.timings);
    let mut failures = Vec::new();
    let gamma = build_generators(spec)?;
    clock.lap("construction");
    let certificates = if opts.verify {
        let c = certify(&gamma, opts.max_order, &mut failures)?;
        clock.lap("certificates");
        Some(c)
    } else {
        None
    };
    let (holonomy, verdicts, center, presentation) = if spec.is_cyclic_odd() {
        cyclic_part(spec, opts, &mut failures, &mut clock)?
    } else {
        generic_part(&gamma, &mut failures, &mut clock)?
    };
    Ok(Report {
        schema: SCHEMA_ID,
        spec: spec.to_string(),
        notices: spec.notices().to_vec(),
        factor_orders: spec.factor_orders(),
        order: spec.order(),
        group: GroupInfo {
            construction: gamma.construction(),
            description: describe(&gamma),
        },
        n: gamma.n(),
        dimension: gamma.dimension(),
        generators: gamma
            .generators()
            .map(|g| GeneratorOut {
                label: g.label.clone(),
                kind: g.kind,
                word: g.word.to_string(),
                element: g.element.clone(),
            })
            .collect(),
        lattice_basis: gamma
            .lattice_basis()
            .iter()
            .map(|b| BasisOut {
                label: b.label.clone(),
                pure: pure_entries(&b.vector),
            })
            .collect(),
        certificates,
        holonomy,
        verdicts,
        center,
        presentation,
        timings: clock.finish(),
        failures,
    })
}

type Parts = (HolonomyOut, VerdictsOut, CenterOut, Option<PresentationOut>);

fn cyclic_part(
    spec: &GroupSpec,
    opts: Options,
    failures: &mut Vec<String>,
    clock: &mut Clock,
) -> Result<Parts> {
    let a = analysis::analyze_cyclic(spec)?;
    clock.lap("holonomy");
    let m = &a.holonomy.matrix;
    let block_equality = *m == a.blocks.assemble();
    let expanded = a.factored.expand();
    let matches_direct = expanded == holonomy::char_poly_direct(m);
    let order = holonomy::matrix_order(m, spec.order());
    let spans = holonomy::spans_fixed_lattice(m, &a.center.coords);
    clock.lap("invariants");
    if !block_equality {
        failures.push("holonomy matrix differs from the block assembly".into());
    }
    if !matches_direct {
        failures.push("factored characteristic polynomial differs from the direct one".into());
    }
    if a.betti_formula != a.betti_rank {
        failures.push("Betti formula differs from the rank computation".into());
    }
    if order != Some(spec.order()) {
        failures.push("holonomy matrix does not have order q".into());
    }
    if !spans || a.center.rank() as u64 != a.betti_rank {
        failures.push("center basis does not span the fixed lattice".into());
    }
    if let Some(r) = &a.real_irreps {
        if r.all_even() != (a.verdicts.kahler == Kahler::Yes) {
            failures.push("Kähler criterion disagrees with real irrep parities".into());
        }
    }
    let pres = analysis::presentation_for(spec)?;
    let all_hold = opts.verify.then(|| pres.all_relations_hold());
    if all_hold == Some(false) {
        failures.push("a presentation relation fails in the group".into());
    }
    clock.lap("presentation");
    let text = pres.to_text();
    let relations = text
        .lines()
        .skip(2)
        .map(|l| l.trim().to_string())
        .collect();
    let labels: Vec<String> = a.holonomy.basis.entries().iter().map(|e| e.label()).collect();
    let holonomy = HolonomyOut::Cyclic {
        basis_labels: labels,
        blocks: a.blocks.blocks.clone(),
        block_equality,
        matrix: matrix_rows(m),
        determinant: JsonInt(m.determinant()),
        order,
        char_poly: CharPolyOut {
            factors: a.factored.as_pairs(),
            text: a.factored.to_string(),
            coefficients: int_vec(&expanded),
            matches_direct,
        },
        cyclotomic: a.multiplicities.clone(),
        betti_formula: a.betti_formula,
        betti_rank: a.betti_rank,
        real_irreps: a.real_irreps.clone(),
    };
    let v = &a.verdicts;
    let verdicts = VerdictsOut {
        orientable: v.orientable,
        betti1: v.betti1,
        anosov: v.anosov.clone(),
        kahler: v.kahler,
        calabi_yau: v.calabi_yau,
        inn_dimension: v.inn_dimension,
    };
    let center = CenterOut {
        rank: a.center.rank(),
        labels: a.center.labels.clone(),
        vectors: a.center.vectors.iter().map(pure_entries).collect(),
        spans_fixed_lattice: spans,
    };
    let presentation = PresentationOut {
        generators: pres.generator_names().iter().map(|s| s.to_string()).collect(),
        relations,
        all_hold,
    };
    Ok((holonomy, verdicts, center, Some(presentation)))
}

fn generic_part(gamma: &GammaData, failures: &mut Vec<String>, clock: &mut Clock) -> Result<Parts> {
    let mats = holonomy::section_matrices(gamma)?;
    clock.lap("holonomy");
    let only: Vec<Matrix> = mats.iter().map(|(_, m)| m.clone()).collect();
    let betti = holonomy::betti_rank_common(&only) as u64;
    let mut orientable = true;
    let mut sections = Vec::new();
    for ((label, m), order) in mats.iter().zip(gamma.factor_orders()) {
        let det = m.determinant();
        orientable &= det.is_one();
        let cp = m.char_poly();
        let cyclotomic = cyclotomic_decomposition(&cp, *order);
        if cyclotomic.is_none() {
            failures.push(format!("characteristic polynomial of {label} is not cyclotomic"));
        }
        sections.push(SectionMatrixOut {
            section: label.clone(),
            matrix: matrix_rows(m),
            determinant: JsonInt(det),
            char_poly: int_vec(&cp),
            cyclotomic,
        });
    }
    // the center of a Bieberbach group is the fixed lattice
    let dim = gamma.dimension();
    let stacked = Matrix::vstack(&only.iter().map(Matrix::minus_identity).collect::<Vec<_>>());
    let kernel = if only.is_empty() {
        Matrix::identity(dim).to_rows()
    } else {
        integer_kernel(&stacked)
    };
    let basis = gamma.basis_matrix();
    let vectors: Vec<PureEntries> = kernel
        .iter()
        .map(|c| {
            let v = PureClassVector::from_coords(gamma.n(), basis.mul_vec(c))?;
            Ok(pure_entries(&v))
        })
        .collect::<Result<_>>()?;
    let fixed_ok = kernel.len() as u64 == betti
        && kernel
            .iter()
            .all(|v| only.iter().all(|m| m.mul_vec(v) == *v));
    if !fixed_ok {
        failures.push("fixed lattice rank differs from the Betti number".into());
    }
    let saturated = Lattice::from_generators(dim, kernel.iter());
    clock.lap("invariants");
    let labels: Vec<String> = gamma.lattice_basis().iter().map(|b| b.label.clone()).collect();
    let holonomy = HolonomyOut::Generic {
        basis_labels: labels,
        sections,
        betti_rank: betti,
    };
    let verdicts = VerdictsOut {
        orientable,
        betti1: betti,
        anosov: analysis::anosov_verdict(gamma.spec().expect("builder groups carry a spec")),
        kahler: Kahler::NotDecided,
        calabi_yau: None,
        inn_dimension: Some(dim as u64 - betti),
    };
    let center = CenterOut {
        rank: saturated.rank(),
        labels: (1..=kernel.len()).map(|i| format!("z{i}")).collect(),
        vectors,
        spans_fixed_lattice: fixed_ok,
    };
    Ok((holonomy, verdicts, center, None))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn fmt_entries(e: &PureEntries) -> String {
    if e.is_empty() {
        return "0".into();
    }
    e.iter()
        .map(|(i, j, c)| {
            if c.0.is_one() {
                format!("A_{{{i},{j}}}")
            } else {
                format!("{}*A_{{{i},{j}}}", c.0)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn matrix_from_json(rows: &[Vec<JsonInt>]) -> Matrix {
    crate::json::matrix_from_rows(rows)
}

impl Report {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Pretty JSON with keys sorted.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("report serializes")
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self, full: bool) -> String {
        let mut o = String::new();
        let _ = writeln!(o, "group:        {} (order {})", self.spec, self.order);
        for n in &self.notices {
            let _ = writeln!(o, "note:         {n}");
        }
        let _ = writeln!(o, "construction: {}", self.group.description);
        let _ = writeln!(o, "strands:      n = {}", self.n);
        let _ = writeln!(o, "dimension:    {}", self.dimension);
        let _ = writeln!(o, "\ngenerators:");
        for g in &self.generators {
            if g.kind == GeneratorKind::X2 {
                continue;
            }
            if g.element.is_pure() && g.kind == GeneratorKind::X3 {
                continue;
            }
            let _ = writeln!(o, "  {:<8} {}", g.label, g.word);
        }
        let pure = self
            .generators
            .iter()
            .filter(|g| matches!(g.kind, GeneratorKind::X2 | GeneratorKind::X3))
            .count();
        if pure > 0 {
            let _ = writeln!(o, "  plus {pure} pure generators A_{{i,j}} or their powers");
        }
        let _ = writeln!(o, "\nlattice basis ({} vectors):", self.lattice_basis.len());
        for b in self.lattice_basis.iter().take(if full { usize::MAX } else { 12 }) {
            let _ = writeln!(o, "  {:<14} {}", b.label, fmt_entries(&b.pure));
        }
        if !full && self.lattice_basis.len() > 12 {
            let _ = writeln!(o, "  ... ({} more, use --full)", self.lattice_basis.len() - 12);
        }
        if let Some(c) = &self.certificates {
            o.push('\n');
            o.push_str(&certificates_text(c));
        }
        o.push('\n');
        match &self.holonomy {
            HolonomyOut::Cyclic {
                blocks,
                block_equality,
                matrix,
                determinant,
                char_poly,
                cyclotomic,
                betti_formula,
                betti_rank,
                real_irreps,
                ..
            } => {
                let names: Vec<String> = blocks.iter().map(ToString::to_string).collect();
                let _ = writeln!(o, "holonomy blocks: {}", names.join(" + "));
                let _ = writeln!(o, "  matches action:  {}", yes_no(*block_equality));
                let _ = writeln!(o, "  determinant:     {}", determinant.0);
                let _ = writeln!(o, "  char poly:       {}", char_poly.text);
                let _ = writeln!(o, "  direct check:    {}", yes_no(char_poly.matches_direct));
                let _ = writeln!(o, "  cyclotomic:      {cyclotomic}");
                let _ = writeln!(o, "  betti (formula / rank): {betti_formula} / {betti_rank}");
                if let Some(r) = real_irreps {
                    let m: Vec<String> = r.multiplicities.iter().map(ToString::to_string).collect();
                    let _ = writeln!(o, "  real irrep multiplicities: {}", m.join(" "));
                }
                o.push_str(&matrix_text("holonomy matrix", matrix, full));
            }
            HolonomyOut::Generic {
                sections,
                betti_rank,
                ..
            } => {
                let _ = writeln!(o, "holonomy (generic, over the lattice basis):");
                for s in sections {
                    let cp: Vec<Int> = s.char_poly.iter().map(|x| x.0.clone()).collect();
                    let _ = writeln!(
                        o,
                        "  {}: det {}, char poly {}",
                        s.section,
                        s.determinant.0,
                        format_poly(&cp)
                    );
                    o.push_str(&matrix_text(&format!("matrix of {}", s.section), &s.matrix, full));
                }
                let _ = writeln!(o, "  betti (rank): {betti_rank}");
            }
        }
        let v = &self.verdicts;
        let _ = writeln!(o, "\nverdicts:");
        let _ = writeln!(o, "  orientable:     {}", yes_no(v.orientable));
        let _ = writeln!(o, "  betti_1:        {}", v.betti1);
        let anosov = match v.anosov.admits {
            Some(b) => format!("{} ({})", yes_no(b), v.anosov.reason),
            None => v.anosov.reason.clone(),
        };
        let _ = writeln!(o, "  anosov:         {anosov}");
        let kahler = match v.kahler {
            Kahler::NotDecided => "not decided (holonomy is not an odd prime power)".to_string(),
            k => k.to_string(),
        };
        let _ = writeln!(o, "  kahler:         {kahler}");
        let cy = match v.calabi_yau {
            Some(d) => format!("yes, dimension {d}"),
            None => "no".into(),
        };
        let _ = writeln!(o, "  calabi-yau:     {cy}");
        if let Some(d) = v.inn_dimension {
            let _ = writeln!(o, "  dim Inn:        {d}");
        }
        let _ = writeln!(o, "\ncenter (rank {}):", self.center.rank);
        for (l, vec) in self.center.labels.iter().zip(&self.center.vectors) {
            let _ = writeln!(o, "  {:<16} {}", l, fmt_entries(vec));
        }
        if let Some(p) = &self.presentation {
            let held = match p.all_hold {
                Some(true) => "all hold",
                Some(false) => "SOME FAIL",
                None => "not checked",
            };
            let _ = writeln!(
                o,
                "\npresentation: {} generators, {} relations ({held})",
                p.generators.len(),
                p.relations.len()
            );
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(o, "\ntimings (ms):");
            for (k, ms) in t {
                let _ = writeln!(o, "  {k:<14} {ms:.3}");
            }
        }
        if !self.failures.is_empty() {
            let _ = writeln!(o, "\nFAILED CHECKS:");
            for f in &self.failures {
                let _ = writeln!(o, "  {f}");
            }
        }
        o
    }
}

pub fn certificates_text(c: &Certificates) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "certificates:");
    let p = &c.projection.check;
    let _ = writeln!(
        o,
        "  projection:  {} (image of order {}, generator orders {:?})",
        if c.projection.passed { "pass" } else { "FAIL" },
        p.subgroup_order,
        p.generator_orders
    );
    let b = &c.basis.certificate;
    let _ = writeln!(
        o,
        "  basis:       {} ({} Schreier generators, Hermite forms {}, rank {})",
        if c.basis.passed { "pass" } else { "FAIL" },
        b.schreier_generators,
        if b.hermite_forms_equal { "equal" } else { "differ" },
        b.claimed_rank
    );
    let t = &c.torsion;
    let witnesses = t.cosets.iter().filter(|c| c.witness.is_some()).count();
    let _ = writeln!(
        o,
        "  torsion:     {} ({} nontrivial cosets, {})",
        if t.passed { "pass" } else { "FAIL" },
        t.cosets.len(),
        if t.torsion_free {
            "torsion free".to_string()
        } else {
            format!("{witnesses} cosets with torsion")
        }
    );
    o
}

fn matrix_text(title: &str, rows: &[Vec<JsonInt>], full: bool) -> String {
    let m = matrix_from_json(rows);
    if m.rows() > TEXT_MATRIX_LIMIT && !full {
        return format!(
            "  {title}: {}x{} (omitted, use --full)\n",
            m.rows(),
            m.cols()
        );
    }
    let mut o = format!("  {title}:\n");
    for line in m.to_string().lines() {
        let _ = writeln!(o, "    {line}");
    }
    o
}

/// Certificates alone, for `verify`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub spec: String,
    pub group: GroupInfo,
    pub certificates: Certificates,
    #[serde(skip)]
    pub failures: Vec<String>,
}

pub fn verify(spec: &GroupSpec, max_order: u64) -> Result<VerifyReport> {
    check_bound(spec, max_order)?;
    let gamma = build_generators(spec)?;
    let mut failures = Vec::new();
    let certificates = certify(&gamma, max_order, &mut failures)?;
    Ok(VerifyReport {
        schema: SCHEMA_ID,
        spec: spec.to_string(),
        group: GroupInfo {
            construction: gamma.construction(),
            description: describe(&gamma),
        },
        certificates,
        failures,
    })
}

/// Normal form of a braid word, for `element`.
#[derive(Clone, Debug, Serialize)]
pub struct ElementReport {
    pub word: String,
    pub element: QuotientElement,
    pub finite_order: Option<u64>,
}

impl ElementReport {
    pub fn to_text(&self) -> String {
        let e = &self.element;
        let order = match self.finite_order {
            Some(1) => "identity".to_string(),
            Some(m) => format!("finite, order {m}"),
            None => "infinite".into(),
        };
        format!(
            "word:  {}\nperm:  {}{}\npure:  {}\norder: {order}\n",
            self.word,
            e.perm(),
            if e.perm().is_identity() { " (id)" } else { "" },
            e.pure()
        )
    }
}

pub fn element(n: usize, word: &str) -> Result<ElementReport> {
    let w = crate::braid::BraidWord::parse(n, word)?;
    let element = crate::braid::normal_form(&w)?;
    Ok(ElementReport {
        word: w.to_string(),
        finite_order: element.finite_order(),
        element,
    })
}

/// True when every coefficient of the holonomy JSON matrix is zero; used to
/// guard against empty output in tests.
pub fn is_zero_matrix(rows: &[Vec<JsonInt>]) -> bool {
    rows.iter().flatten().all(|x| x.0.is_zero())
}
