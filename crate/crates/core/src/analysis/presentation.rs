//! Finite presentations of `Γ_q` for cyclic odd `q`, carried together with
//! the group elements they describe so that every relation can be checked.

use std::fmt::Write as _;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::braid::QuotientElement;
use crate::error::{Error, Result};
use crate::gamma::build_generators;
use crate::group_spec::GroupSpec;
use crate::holonomy::{matrix_of, ordered_basis_for, OrderedBasis};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresGenerator {
    /// Identifier used in GAP output: `g_j_h_k` or `a_l`.
    pub name: String,
    #[serde(skip)]
    pub element: QuotientElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    Commutator,
    Power,
    Conjugation,
}

/// A word as syllables `(generator index, exponent)`.
pub type Word = Vec<(usize, i64)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug, Serialize)]
pub struct Presentation {
    pub generators: Vec<PresGenerator>,
    pub relations: Vec<Relation>,
}

fn commutator(a: usize, b: usize) -> Word {
    vec![(a, 1), (b, 1), (a, -1), (b, -1)]
}

pub fn presentation(q: u64) -> Result<Presentation> {
    presentation_for(&GroupSpec::cyclic_odd(q)?)
}

/// Generators `e_{j,h,k}` and `a_j = A_{o+1,o+2} δ_j`; relations: the `e`'s
/// commute, `a_j^{z_j} = e_{j,0,1}`, and conjugation of each `e` by each
/// `a_j`. For `j`'s own orbits the conjugate is given by the shift table
/// (`k+1` taken in `1..=z`); for other orbits it is read off the action.
/// With several blocks the `a_j` commute pairwise.
pub fn presentation_for(spec: &GroupSpec) -> Result<Presentation> {
    let basis = ordered_basis_for(spec)?;
    let gamma = build_generators(spec)?;
    let sections = gamma.x1();
    let dim = basis.len();
    let q = spec.order() as i64;
    let mut generators: Vec<PresGenerator> = basis
        .entries()
        .iter()
        .map(|e| {
            Ok(PresGenerator {
                name: format!("g_{}_{}_{}", e.j, e.h, e.k),
                element: QuotientElement::from_pure(e.vector.clone())?,
            })
        })
        .collect::<Result<_>>()?;
    for (l, s) in sections.iter().enumerate() {
        generators.push(PresGenerator {
            name: format!("a_{}", l + 1),
            element: s.element.clone(),
        });
    }
    let a = |l: usize| dim + l;
    let mut relations = Vec::new();
    for i in 0..dim {
        for k in i + 1..dim {
            relations.push(Relation {
                kind: RelationKind::Commutator,
                lhs: commutator(i, k),
                rhs: Vec::new(),
            });
        }
    }
    for (l, b) in spec.odd_blocks().iter().enumerate() {
        let e1 = basis
            .position(l + 1, 0, 1)
            .ok_or_else(|| Error::Internal("missing e_{j,0,1}".into()))?;
        relations.push(Relation {
            kind: RelationKind::Power,
            lhs: vec![(a(l), b.size as i64)],
            rhs: vec![(e1, 1)],
        });
    }
    let vectors = basis.vectors();
    let t = spec.t();
    for (l, s) in sections.iter().enumerate() {
        let j = l + 1;
        let z = spec.odd_blocks()[l].size;
        let action = matrix_of(&s.element, &vectors)?;
        for (c, e) in basis.entries().iter().enumerate() {
            let rhs = if e.j == j && e.h == 0 {
                own_h0(&basis, j, e.k, z, q)?
            } else if e.j == j {
                let next = e.k % z + 1;
                vec![(pos(&basis, j, e.h, next)?, 1)]
            } else if e.j <= t {
                vec![(c, 1)]
            } else {
                (0..dim)
                    .filter_map(|r| {
                        let x = action.get(r, c);
                        (!x.is_zero()).then(|| x.to_i64().map(|x| (r, x)))
                    })
                    .collect::<Option<Word>>()
                    .ok_or_else(|| Error::Internal("action entry out of range".into()))?
            };
            relations.push(Relation {
                kind: RelationKind::Conjugation,
                lhs: vec![(a(l), 1), (c, 1), (a(l), -1)],
                rhs,
            });
        }
    }
    for l in 0..t {
        for m in l + 1..t {
            relations.push(Relation {
                kind: RelationKind::Commutator,
                lhs: commutator(a(l), a(m)),
                rhs: Vec::new(),
            });
        }
    }
    Ok(Presentation {
        generators,
        relations,
    })
}

fn pos(basis: &OrderedBasis, j: usize, h: usize, k: usize) -> Result<usize> {
    basis
        .position(j, h, k)
        .ok_or_else(|| Error::Internal(format!("missing e_{{{j},{h},{k}}}")))
}

fn own_h0(basis: &OrderedBasis, j: usize, k: usize, z: usize, q: i64) -> Result<Word> {
    Ok(if k == 1 {
        vec![(pos(basis, j, 0, 1)?, 1)]
    } else if k == z {
        let mut w = vec![(pos(basis, j, 0, 1)?, q)];
        for kk in 1..z {
            w.push((pos(basis, j, 0, kk + 1)?, -1));
        }
        w
    } else {
        vec![(pos(basis, j, 0, k + 1)?, 1)]
    })
}

impl Presentation {
    pub fn evaluate(&self, w: &[(usize, i64)]) -> QuotientElement {
        let n = self.generators[0].element.n();
        let mut x = QuotientElement::identity(n).expect("n >= 3");
        for &(g, e) in w {
            x = &x * &self.generators[g].element.power(e);
        }
        x
    }

    /// Indices of relations whose two sides differ in the group.
    pub fn failing_relations(&self) -> Vec<usize> {
        self.relations
            .iter()
            .enumerate()
            .filter(|(_, r)| self.evaluate(&r.lhs) != self.evaluate(&r.rhs))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn all_relations_hold(&self) -> bool {
        self.failing_relations().is_empty()
    }

    fn word_text(&self, w: &[(usize, i64)], sep: &str) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&(g, e)| {
                let name = &self.generators[g].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let names: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        let _ = writeln!(out, "generators ({}): {}", names.len(), names.join(", "));
        let _ = writeln!(out, "relations ({}):", self.relations.len());
        for r in &self.relations {
            let _ = writeln!(out, "  {} = {}", self.word_text(&r.lhs, " "), self.word_text(&r.rhs, " "));
        }
        out
    }

    /// GAP source defining the finitely presented group `G`.
    pub fn to_gap(&self) -> String {
        let mut out = String::new();
        let quoted: Vec<String> = self.generators.iter().map(|g| format!("\"{}\"", g.name)).collect();
        let _ = writeln!(out, "F := FreeGroup({});;", quoted.join(", "));
        for (i, g) in self.generators.iter().enumerate() {
            let _ = writeln!(out, "{} := F.{};;", g.name, i + 1);
        }
        let _ = writeln!(out, "rels := [");
        let last = self.relations.len().saturating_sub(1);
        for (i, r) in self.relations.iter().enumerate() {
            let lhs = self.word_text(&r.lhs, "*");
            let body = if r.rhs.is_empty() {
                lhs
            } else {
                format!("{lhs}*({})^-1", self.word_text(&r.rhs, "*"))
            };
            let _ = writeln!(out, "  {body}{}", if i == last { "" } else { "," });
        }
        let _ = writeln!(out, "];;");
        let _ = writeln!(out, "G := F / rels;;");
        out
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }
}
