//! Geometric invariants of the flat manifolds read off the holonomy
//! representation: orientability, first Betti number, Anosov
//! diffeomorphisms, Kähler and Calabi–Yau structures, and the dimension of
//! the inner automorphism group.

pub mod presentation;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_spec::{GroupSpec, PrimePower};
use crate::holonomy::{self, FactoredCharPoly};
use crate::intmat::{Int, Matrix};
use crate::poly::{divisors, euler_phi, ramanujan_sum};

pub use presentation::{presentation, presentation_for, Presentation, Relation, RelationKind};

/// Orders `d` whose primitive roots of unity obstruct Anosov maps unless
/// they occur with multiplicity at least two.
pub const CRITICAL_ORDERS: [u64; 5] = [1, 2, 3, 4, 6];

/// Multiplicity of each cyclotomic polynomial `Φ_d` in a characteristic
/// polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CyclotomicMultiplicities(pub BTreeMap<u64, u64>);

impl CyclotomicMultiplicities {
    pub fn get(&self, d: u64) -> u64 {
        self.0.get(&d).copied().unwrap_or(0)
    }

    /// `Σ mult(d) φ(d)`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|(&d, &m)| euler_phi(d) * m).sum()
    }
}

impl fmt::Display for CyclotomicMultiplicities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(d, m)| format!("Phi_{d}:{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn cyclotomic_multiplicities(f: &FactoredCharPoly) -> CyclotomicMultiplicities {
    CyclotomicMultiplicities(crate::poly::cyclotomic_multiplicities(&f.as_pairs()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnosovVerdict {
    /// `None` when the criterion is not applied to this holonomy.
    pub admits: Option<bool>,
    pub critical: BTreeMap<u64, u64>,
    pub reason: String,
}

/// Applies the critical-multiplicity test to a multiplicity table.
pub fn anosov_from_multiplicities(m: &CyclotomicMultiplicities) -> AnosovVerdict {
    let critical: BTreeMap<u64, u64> = CRITICAL_ORDERS.iter().map(|&d| (d, m.get(d))).collect();
    let offending: Vec<String> = critical
        .iter()
        .filter(|(_, &k)| k == 1)
        .map(|(d, _)| format!("Phi_{d}"))
        .collect();
    let admits = offending.is_empty();
    let reason = if admits {
        "every critical cyclotomic factor has multiplicity 0 or at least 2".into()
    } else {
        format!("multiplicity one for {}", offending.join(", "))
    };
    AnosovVerdict {
        admits: Some(admits),
        critical,
        reason,
    }
}

/// Anosov verdict for cyclic odd holonomy; other specs are not decided.
pub fn anosov_verdict(spec: &GroupSpec) -> AnosovVerdict {
    match holonomy::char_poly_factored_for(spec) {
        Ok(f) => anosov_from_multiplicities(&cyclotomic_multiplicities(&f)),
        Err(_) => AnosovVerdict {
            admits: None,
            critical: BTreeMap::new(),
            reason: "not decided: holonomy is not cyclic of odd order".into(),
        },
    }
}

pub fn anosov_for_q(q: u64) -> Result<AnosovVerdict> {
    Ok(anosov_verdict(&GroupSpec::cyclic_odd(q)?))
}

/// Multiplicities of the real irreducible representations of `Z_q` in a
/// representation of finite order `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealIrreps {
    /// `tr(M^k)` for `k = 0..q`.
    #[serde(serialize_with = "ser_ints")]
    pub traces: Vec<Int>,
    /// For each real irrep `ζ^a ⊕ ζ^{-a}`, `a = 0..=(q-1)/2`, the order of `ζ^a`.
    pub orders: Vec<u64>,
    pub multiplicities: Vec<u64>,
}

fn ser_ints<S: serde::Serializer>(v: &[Int], s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&crate::json::int_vec(v), s)
}

impl RealIrreps {
    pub fn all_even(&self) -> bool {
        self.multiplicities.iter().all(|m| m % 2 == 0)
    }
}

/// From the character `χ(k) = tr(M^k)`: the multiplicity of a complex
/// character of order `e` is `Σ_k χ(k) c_e(k) / (q φ(e))`, with `c_e` the
/// Ramanujan sum. Real irreps pair `ζ^a` with `ζ^{-a}`, which share it.
pub fn real_irrep_multiplicities(m: &Matrix, q: u64) -> Result<RealIrreps> {
    if q.is_multiple_of(2) {
        return Err(Error::OutOfScope("even holonomy order".into()));
    }
    let traces = holonomy::trace_vector(m, q as usize);
    let mut by_order = BTreeMap::new();
    for e in divisors(q) {
        let mut acc = Int::zero();
        for (k, chi) in traces.iter().enumerate() {
            acc += chi * Int::from(ramanujan_sum(e, k as u64));
        }
        let den = Int::from(q * euler_phi(e));
        let (mult, rem) = acc.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "character sum for order {e} is not divisible by {den}"
            )));
        }
        let mult = mult
            .to_u64()
            .ok_or_else(|| Error::Internal("negative irrep multiplicity".into()))?;
        by_order.insert(e, mult);
    }
    let orders: Vec<u64> = (0..=(q - 1) / 2).map(|a| q / q.gcd(&a)).collect();
    let multiplicities = orders.iter().map(|e| by_order[e]).collect();
    Ok(RealIrreps {
        traces,
        orders,
        multiplicities,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kahler {
    Yes,
    No,
    NotDecided,
}

impl fmt::Display for Kahler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kahler::Yes => "yes",
            Kahler::No => "no",
            Kahler::NotDecided => "not decided",
        })
    }
}

/// Kähler exactly when `p^r ≡ 1 (mod 4)`; decided only for odd prime powers.
pub fn kahler_verdict(pp: Option<PrimePower>) -> Kahler {
    match pp {
        Some(pp) if pp.p % 2 == 1 => {
            if pp.value() % 4 == 1 {
                Kahler::Yes
            } else {
                Kahler::No
            }
        }
        _ => Kahler::NotDecided,
    }
}

/// Dimension `p^r(p^r-1)/2` of the Calabi–Yau manifold, when there is one.
pub fn calabi_yau(pp: Option<PrimePower>, orientable: bool) -> Option<u64> {
    let pp = pp?;
    (kahler_verdict(Some(pp)) == Kahler::Yes && orientable).then(|| {
        let z = pp.value();
        z * (z - 1) / 2
    })
}

/// `n(n-1)/2 - rank Z(Γ_q)`, from the center basis.
pub fn inn_dimension(q: u64) -> Result<u64> {
    let b = holonomy::ordered_basis(q)?;
    let c = holonomy::center_basis_for(&b)?;
    Ok((b.len() - c.rank()) as u64)
}

/// `Σ z(z-1)/2 + Σ_{j<h} z_j z_h - Σ (z-1)/2 - t(t-1)/2`.
pub fn inn_dimension_formula(spec: &GroupSpec) -> u64 {
    let zs = spec.factor_orders();
    let t = zs.len() as u64;
    let mut total: u64 = zs.iter().map(|z| z * (z - 1) / 2).sum();
    for a in 0..zs.len() {
        for c in a + 1..zs.len() {
            total += zs[a] * zs[c];
        }
    }
    total - zs.iter().map(|z| (z - 1) / 2).sum::<u64>() - t * (t - 1) / 2
}

/// The collected verdicts for one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub orientable: bool,
    pub betti1: u64,
    pub anosov: AnosovVerdict,
    pub kahler: Kahler,
    /// Real dimension of the Calabi–Yau manifold, if the group gives one.
    pub calabi_yau: Option<u64>,
    pub inn_dimension: Option<u64>,
}

/// Everything computed for a cyclic group of odd order.
#[derive(Clone, Debug)]
pub struct CyclicAnalysis {
    pub holonomy: holonomy::HolonomyMatrix,
    pub blocks: holonomy::BlockSpec,
    pub factored: FactoredCharPoly,
    pub multiplicities: CyclotomicMultiplicities,
    pub betti_formula: u64,
    pub betti_rank: u64,
    pub center: holonomy::CenterBasis,
    pub real_irreps: Option<RealIrreps>,
    pub verdicts: Verdicts,
}

pub fn analyze_cyclic(spec: &GroupSpec) -> Result<CyclicAnalysis> {
    let h = holonomy::holonomy_matrix_for(spec)?;
    let blocks = holonomy::block_structure_for(spec)?;
    let factored = holonomy::char_poly_factored_for(spec)?;
    let multiplicities = cyclotomic_multiplicities(&factored);
    let betti_formula = holonomy::betti_first_for(spec)?;
    let betti_rank = holonomy::betti_rank(&h.matrix) as u64;
    let center = holonomy::center_basis_for(&h.basis)?;
    let orientable = h.matrix.determinant() == Int::from(1);
    let pp = spec.odd_prime_power();
    let real_irreps = match pp {
        Some(_) => Some(real_irrep_multiplicities(&h.matrix, spec.order())?),
        None => None,
    };
    let kahler = kahler_verdict(pp);
    let verdicts = Verdicts {
        orientable,
        betti1: betti_rank,
        anosov: anosov_from_multiplicities(&multiplicities),
        kahler,
        calabi_yau: calabi_yau(pp, orientable),
        inn_dimension: Some((h.dim() - center.rank()) as u64),
    };
    Ok(CyclicAnalysis {
        holonomy: h,
        blocks,
        factored,
        multiplicities,
        betti_formula,
        betti_rank,
        center,
        real_irreps,
        verdicts,
    })
}
