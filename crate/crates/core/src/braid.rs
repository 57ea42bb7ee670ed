//! Exact arithmetic in the quotient `B_n/[P_n,P_n]`.
//!
//! The abelianised pure braid group `P_n/[P_n,P_n]` is free abelian on the
//! classes `A_{i,j}`, `1 <= i < j <= n`; the coordinate of a pure braid on
//! `A_{i,j}` is half the signed number of crossings between the strands that
//! start at positions `i` and `j`. An element of the quotient is stored as
//! `pure * s(perm)` where `s` is a fixed positive lift of permutations into
//! braids, so every element has a unique normal form `(pure, perm)`.
//!
//! Permutations compose left to right, `(a*b)(i) = b(a(i))`, and the
//! permutation of a braid word sends a strand's starting position to its
//! final position.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::Int;
use crate::json::JsonInt;

/// Number of unordered strand pairs, `n(n-1)/2`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_strands(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::StrandCount(n))
    } else {
        Ok(())
    }
}

/// An unordered pair of strands, stored with `i < j` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairIndex {
    pub i: usize,
    pub j: usize,
}

impl PairIndex {
    /// `A_{j,i} = A_{i,j}`: the order of the arguments does not matter.
    pub fn new(a: usize, b: usize) -> PairIndex {
        assert!(a != b && a >= 1 && b >= 1, "invalid strand pair ({a},{b})");
        PairIndex {
            i: a.min(b),
            j: a.max(b),
        }
    }

    pub fn checked(a: usize, b: usize, n: usize) -> Result<PairIndex> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::IndexOutOfRange(format!("pair ({a},{b}) with n = {n}")));
        }
        Ok(PairIndex::new(a, b))
    }

    /// Position in the lexicographic order of pairs.
    pub fn offset(self, n: usize) -> usize {
        let before = (self.i - 1) * n - (self.i - 1) * self.i / 2;
        before + (self.j - self.i - 1)
    }

    pub fn all(n: usize) -> impl Iterator<Item = PairIndex> {
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| PairIndex { i, j }))
    }

    pub fn shifted(self, offset: usize) -> PairIndex {
        PairIndex {
            i: self.i + offset,
            j: self.j + offset,
        }
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{{{},{}}}", self.i, self.j)
    }
}

/// Element of `P_n/[P_n,P_n] = Z^{n(n-1)/2}` in the `A_{i,j}` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureClassVector {
    n: usize,
    coords: Vec<Int>,
}

impl PureClassVector {
    pub fn zero(n: usize) -> Self {
        PureClassVector {
            n,
            coords: vec![Int::zero(); pair_count(n)],
        }
    }

    pub fn unit(pair: PairIndex, n: usize) -> Self {
        let mut v = PureClassVector::zero(n);
        v.coords[pair.offset(n)] = Int::one();
        v
    }

    pub fn from_coords(n: usize, coords: Vec<Int>) -> Result<Self> {
        if coords.len() != pair_count(n) {
            return Err(Error::IndexOutOfRange(format!(
                "{} coordinates for n = {n}",
                coords.len()
            )));
        }
        Ok(PureClassVector { n, coords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.coords
    }

    pub fn get(&self, pair: PairIndex) -> &Int {
        &self.coords[pair.offset(self.n)]
    }

    pub fn set(&mut self, pair: PairIndex, value: Int) {
        let k = pair.offset(self.n);
        self.coords[k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Nonzero coordinates in lexicographic pair order.
    pub fn entries(&self) -> impl Iterator<Item = (PairIndex, &Int)> + '_ {
        PairIndex::all(self.n)
            .zip(&self.coords)
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn scaled(&self, k: &Int) -> Self {
        PureClassVector {
            n: self.n,
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Re-embeds the vector into `new_n` strands, moving strand `s` to `s + offset`.
    pub fn shifted(&self, offset: usize, new_n: usize) -> Self {
        let mut out = PureClassVector::zero(new_n);
        for (p, c) in self.entries() {
            out.set(p.shifted(offset), c.clone());
        }
        out
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(self.n, other.n, "pure vectors on different strand counts");
    }
}

impl Add for &PureClassVector {
    type Output = PureClassVector;
    fn add(self, rhs: &PureClassVector) -> PureClassVector {
        self.assert_same(rhs);
        PureClassVector {
            n: self.n,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &PureClassVector {
    type Output = PureClassVector;
    fn sub(self, rhs: &PureClassVector) -> PureClassVector {
        self.assert_same(rhs);
        PureClassVector {
            n: self.n,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &PureClassVector {
    type Output = PureClassVector;
    fn neg(self) -> PureClassVector {
        PureClassVector {
            n: self.n,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for PureClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .entries()
            .map(|(p, c)| {
                if c.is_one() {
                    format!("{p}")
                } else {
                    format!("{p}^{c}")
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", terms.join(" "))
        }
    }
}

/// A permutation of `{1..n}`, stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::IndexOutOfRange(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm { images })
    }

    /// The adjacent transposition `(k, k+1)`.
    pub fn transposition(k: usize, n: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.images.swap(k - 1, k);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Left-to-right product: `self.then(other)(i) = other(self(i))`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.n());
        for _ in 0..k.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// Lengths of the cycles, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                x = self.apply(x);
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    pub fn shifted(&self, offset: usize, new_n: usize) -> Perm {
        let mut p = Perm::identity(new_n);
        for (i, &x) in self.images.iter().enumerate() {
            p.images[i + offset] = x + offset;
        }
        p
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

/// `σ_gen` when `positive`, else its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Letter {
        Letter { gen, positive: true }
    }

    pub fn neg(gen: usize) -> Letter {
        Letter {
            gen,
            positive: false,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            positive: !self.positive,
        }
    }
}

/// A word in the Artin generators `σ_1, ..., σ_{n-1}`.
///
/// Text form: `s3 S1 s2` is `σ_3 σ_1^{-1} σ_2` (lowercase positive,
/// uppercase inverse).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        check_strands(n)?;
        if let Some(bad) = letters.iter().find(|l| l.gen == 0 || l.gen >= n) {
            return Err(Error::IndexOutOfRange(format!(
                "generator σ_{} with n = {n}",
                bad.gen
            )));
        }
        Ok(BraidWord { n, letters })
    }

    pub fn empty(n: usize) -> Result<BraidWord> {
        BraidWord::new(n, Vec::new())
    }

    pub fn parse(n: usize, text: &str) -> Result<BraidWord> {
        let letters = text
            .split_whitespace()
            .map(parse_letter)
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::MismatchedStrands {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn repeat(&self, k: usize) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.repeat(k),
        }
    }

    pub fn shifted(&self, offset: usize, new_n: usize) -> Result<BraidWord> {
        BraidWord::new(
            new_n,
            self.letters
                .iter()
                .map(|l| Letter {
                    gen: l.gen + offset,
                    positive: l.positive,
                })
                .collect(),
        )
    }

    /// Image in `S_n`.
    pub fn permutation(&self) -> Perm {
        let mut at: Vec<usize> = (1..=self.n).collect();
        for l in &self.letters {
            at.swap(l.gen - 1, l.gen);
        }
        let mut images = vec![0; self.n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand - 1] = pos + 1;
        }
        Perm { images }
    }
}

fn parse_letter(tok: &str) -> Result<Letter> {
    let mut chars = tok.chars();
    let head = chars.next();
    let rest: String = chars.collect();
    let gen: usize = rest
        .parse()
        .map_err(|_| Error::ParseWord(format!("bad letter `{tok}`")))?;
    match head {
        Some('s') => Ok(Letter::pos(gen)),
        Some('S') => Ok(Letter::neg(gen)),
        _ => Err(Error::ParseWord(format!("bad letter `{tok}`"))),
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|l| format!("{}{}", if l.positive { 's' } else { 'S' }, l.gen))
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// Signed crossing number of every pair of strands, strands labelled by
/// their starting positions. For a pure braid this is twice its class in
/// `P_n/[P_n,P_n]`.
pub fn crossing_counts(w: &BraidWord) -> PureClassVector {
    let n = w.n;
    let mut counts = vec![0i64; pair_count(n)];
    let mut at: Vec<usize> = (1..=n).collect();
    for l in &w.letters {
        let (a, b) = (at[l.gen - 1], at[l.gen]);
        let k = PairIndex::new(a, b).offset(n);
        counts[k] += if l.positive { 1 } else { -1 };
        at.swap(l.gen - 1, l.gen);
    }
    PureClassVector {
        n,
        coords: counts.into_iter().map(Int::from).collect(),
    }
}

/// The canonical section `s(π)`: the reduced positive word obtained by
/// bubbling each strand into its final position, target positions filled
/// from the left.
pub fn section_word(perm: &Perm) -> BraidWord {
    let n = perm.n();
    let mut target = vec![0; n];
    for i in 1..=n {
        target[perm.apply(i) - 1] = i;
    }
    let mut at: Vec<usize> = (1..=n).collect();
    let mut letters = Vec::new();
    for p in 0..n {
        let mut q = at.iter().position(|&s| s == target[p]).expect("strand present");
        while q > p {
            letters.push(Letter::pos(q));
            at.swap(q - 1, q);
            q -= 1;
        }
    }
    BraidWord { n, letters }
}

fn halved(counts: PureClassVector) -> Result<PureClassVector> {
    let two = Int::from(2);
    let mut coords = Vec::with_capacity(counts.coords.len());
    for c in counts.coords {
        let (q, r) = c.div_rem(&two);
        if !r.is_zero() {
            return Err(Error::Internal("odd crossing count on a pure braid".into()));
        }
        coords.push(q);
    }
    Ok(PureClassVector {
        n: counts.n,
        coords,
    })
}

/// Permutes coordinates: the output coordinate at `(π(i), π(j))` is the input
/// coordinate at `(i, j)`.
///
/// Conjugating a pure class by `α` acts this way with `π` the permutation of
/// `α^{-1}`.
pub fn act(pi: &Perm, v: &PureClassVector) -> PureClassVector {
    assert_eq!(pi.n(), v.n, "permutation and vector on different strand counts");
    let n = v.n;
    let mut out = PureClassVector::zero(n);
    for (k, p) in PairIndex::all(n).enumerate() {
        let c = &v.coords[k];
        if !c.is_zero() {
            let img = PairIndex::new(pi.apply(p.i), pi.apply(p.j));
            out.coords[img.offset(n)] = c.clone();
        }
    }
    out
}

/// Pure part of `s(π) s(ρ) s(πρ)^{-1}`.
pub fn cocycle(pi: &Perm, rho: &Perm) -> PureClassVector {
    let prod = pi.then(rho);
    let mut letters = section_word(pi).letters;
    letters.extend(section_word(rho).letters);
    letters.extend(section_word(&prod).inverse().letters);
    let w = BraidWord {
        n: pi.n(),
        letters,
    };
    halved(crossing_counts(&w)).expect("section products are pure")
}

/// Element of `B_n/[P_n,P_n]` in normal form `pure * s(perm)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "ElementJson", try_from = "ElementJson")]
pub struct QuotientElement {
    pure: PureClassVector,
    perm: Perm,
}

impl QuotientElement {
    pub fn identity(n: usize) -> Result<Self> {
        check_strands(n)?;
        Ok(QuotientElement {
            pure: PureClassVector::zero(n),
            perm: Perm::identity(n),
        })
    }

    pub fn from_parts(pure: PureClassVector, perm: Perm) -> Result<Self> {
        check_strands(perm.n())?;
        if pure.n != perm.n() {
            return Err(Error::MismatchedStrands {
                left: pure.n,
                right: perm.n(),
            });
        }
        Ok(QuotientElement { pure, perm })
    }

    /// The pure element with the given class.
    pub fn from_pure(pure: PureClassVector) -> Result<Self> {
        let n = pure.n;
        QuotientElement::from_parts(pure, Perm::identity(n))
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn pure(&self) -> &PureClassVector {
        &self.pure
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.pure.is_zero()
    }

    pub fn is_pure(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::MismatchedStrands {
                left: self.n(),
                right: other.n(),
            });
        }
        // a s(π) b s(ρ) = a + s(π) b s(π)^{-1} + s(π)s(ρ)s(πρ)^{-1}, then s(πρ)
        let moved = act(&self.perm.inverse(), &other.pure);
        let c = cocycle(&self.perm, &other.perm);
        Ok(QuotientElement {
            pure: &(&self.pure + &moved) + &c,
            perm: self.perm.then(&other.perm),
        })
    }

    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let moved = act(&self.perm, &self.pure);
        let c = cocycle(&inv, &self.perm);
        QuotientElement {
            pure: -&(&moved + &c),
            perm: inv,
        }
    }

    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = QuotientElement {
            pure: PureClassVector::zero(self.n()),
            perm: Perm::identity(self.n()),
        };
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// `Some(order)` when the element has finite order.
    ///
    /// With `m` the order of the permutation, `x^m` is pure; the lattice is
    /// torsion free, so `x` has finite order iff `x^m = 1`, and then the
    /// order is exactly `m`.
    pub fn finite_order(&self) -> Option<u64> {
        let m = self.perm.order();
        self.power(m as i64).is_identity().then_some(m)
    }

    pub fn is_finite_order(&self) -> bool {
        self.finite_order().is_some()
    }

    /// Pure part of `self * v * self^{-1}`, computed through the group law.
    pub fn conjugate_pure(&self, v: &PureClassVector) -> PureClassVector {
        let x = QuotientElement::from_pure(v.clone()).expect("valid n");
        let c = &(self * &x) * &self.inverse();
        debug_assert!(c.is_pure());
        c.pure
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(&(self * other) * &self.inverse()) * &other.inverse()
    }

    pub fn shifted(&self, offset: usize, new_n: usize) -> Result<Self> {
        QuotientElement::from_parts(
            self.pure.shifted(offset, new_n),
            self.perm.shifted(offset, new_n),
        )
    }
}

impl Mul for &QuotientElement {
    type Output = QuotientElement;

    /// Panics on mismatched strand counts; use [`QuotientElement::multiply`]
    /// for a fallible product.
    fn mul(self, rhs: &QuotientElement) -> QuotientElement {
        self.multiply(rhs).expect("strand counts agree")
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) · s{}", self.pure, self.perm)
    }
}

/// Normal form of a braid word.
pub fn normal_form(w: &BraidWord) -> Result<QuotientElement> {
    let perm = w.permutation();
    let pure_word = w.concat(&section_word(&perm).inverse())?;
    let pure = halved(crossing_counts(&pure_word))?;
    Ok(QuotientElement { pure, perm })
}

/// Word for `A_{i,j} = σ_{j-1}⋯σ_{i+1} σ_i^2 σ_{i+1}^{-1}⋯σ_{j-1}^{-1}`.
pub fn a_word(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    let p = PairIndex::checked(i, j, n)?;
    let mut letters: Vec<Letter> = (p.i + 1..p.j).rev().map(Letter::pos).collect();
    letters.push(Letter::pos(p.i));
    letters.push(Letter::pos(p.i));
    letters.extend((p.i + 1..p.j).map(Letter::neg));
    BraidWord::new(n, letters)
}

pub fn generator_a(i: usize, j: usize, n: usize) -> Result<QuotientElement> {
    check_strands(n)?;
    let p = PairIndex::checked(i, j, n)?;
    QuotientElement::from_pure(PureClassVector::unit(p, n))
}

pub fn generator_sigma(i: usize, n: usize) -> Result<QuotientElement> {
    normal_form(&BraidWord::new(n, vec![Letter::pos(i)])?)
}

/// `δ_{offset,p} = σ_{offset+p-1}⋯σ_{offset+(p+1)/2} σ_{offset+(p-1)/2}^{-1}⋯σ_{offset+1}^{-1}`,
/// a braid whose permutation is the `p`-cycle on strands `offset+1..offset+p`.
pub fn delta_word(offset: usize, p: usize, n: usize) -> Result<BraidWord> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::IndexOutOfRange(format!("δ needs an odd block size >= 3, got {p}")));
    }
    if offset + p > n {
        return Err(Error::IndexOutOfRange(format!(
            "δ block {}..{} does not fit in n = {n}",
            offset + 1,
            offset + p
        )));
    }
    let half = (p - 1) / 2;
    let mut letters: Vec<Letter> = (offset + half + 1..=offset + p - 1)
        .rev()
        .map(Letter::pos)
        .collect();
    letters.extend((offset + 1..=offset + half).rev().map(Letter::neg));
    BraidWord::new(n, letters)
}

pub fn delta_element(offset: usize, p: usize, n: usize) -> Result<QuotientElement> {
    normal_form(&delta_word(offset, p, n)?)
}

/// `η = σ_{offset+1}⋯σ_{offset+size-1}`, a `size`-cycle on the block.
pub fn eta_word(offset: usize, size: usize, n: usize) -> Result<BraidWord> {
    if size < 2 || offset + size > n {
        return Err(Error::IndexOutOfRange(format!(
            "η block of size {size} at offset {offset} with n = {n}"
        )));
    }
    BraidWord::new(n, (offset + 1..offset + size).map(Letter::pos).collect())
}

pub fn eta_element(offset: usize, size: usize, n: usize) -> Result<QuotientElement> {
    normal_form(&eta_word(offset, size, n)?)
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Letter> {
        parse_letter(s)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    perm: Vec<usize>,
    /// `[i, j, coefficient]` for every nonzero coordinate, pairs in
    /// lexicographic order.
    pure: Vec<(usize, usize, JsonInt)>,
}

impl From<QuotientElement> for ElementJson {
    fn from(x: QuotientElement) -> Self {
        ElementJson {
            n: x.n(),
            perm: x.perm.images.clone(),
            pure: x
                .pure
                .entries()
                .map(|(p, c)| (p.i, p.j, JsonInt(c.clone())))
                .collect(),
        }
    }
}

impl TryFrom<ElementJson> for QuotientElement {
    type Error = Error;
    fn try_from(j: ElementJson) -> Result<Self> {
        let perm = Perm::from_images(j.perm)?;
        if perm.n() != j.n {
            return Err(Error::MismatchedStrands {
                left: j.n,
                right: perm.n(),
            });
        }
        check_strands(j.n)?;
        let mut pure = PureClassVector::zero(j.n);
        for (a, b, c) in j.pure {
            let p = PairIndex::checked(a, b, j.n)?;
            if p.i != a {
                return Err(Error::IndexOutOfRange(format!("pair ({a},{b}) must have i < j")));
            }
            pure.set(p, c.0);
        }
        QuotientElement::from_parts(pure, perm)
    }
}

impl Perm {
    /// Sign-free magnitude check used by tests and reports.
    pub fn moved_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| x != i + 1)
            .count()
    }
}

/// Sum of the absolute values of the coordinates.
pub fn l1_norm(v: &PureClassVector) -> Int {
    v.coords.iter().map(|c| c.abs()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn pair_offsets_are_lexicographic() {
        for n in 3..8 {
            for (k, p) in PairIndex::all(n).enumerate() {
                assert_eq!(p.offset(n), k);
            }
        }
        assert_eq!(PairIndex::new(3, 1), PairIndex { i: 1, j: 3 });
    }

    #[test]
    fn crossing_counts_of_a_generator() {
        let c = crossing_counts(&word(3, "s1 s1"));
        assert_eq!(c.get(PairIndex::new(1, 2)), &Int::from(2));
        assert_eq!(c.get(PairIndex::new(1, 3)), &Int::zero());
        assert!(crossing_counts(&BraidWord::empty(4).unwrap()).is_zero());
    }

    #[test]
    fn normal_form_of_sigma_squared_is_a12() {
        let x = normal_form(&word(3, "s1 s1")).unwrap();
        assert!(x.perm().is_identity());
        assert_eq!(x, generator_a(1, 2, 3).unwrap());
    }

    #[test]
    fn a_words_normalize_to_units() {
        for n in 3..7 {
            for p in PairIndex::all(n) {
                let x = normal_form(&a_word(p.i, p.j, n).unwrap()).unwrap();
                assert_eq!(x, generator_a(p.i, p.j, n).unwrap(), "{p}");
            }
        }
    }

    #[test]
    fn delta_word_shape() {
        assert_eq!(delta_word(0, 3, 3).unwrap().to_string(), "s2 S1");
        assert_eq!(delta_word(0, 5, 5).unwrap().to_string(), "s4 s3 S2 S1");
        assert_eq!(delta_word(3, 5, 8).unwrap().to_string(), "s7 s6 S5 S4");
        assert!(delta_word(0, 4, 5).is_err());
        assert!(delta_word(2, 5, 6).is_err());
        assert_eq!(delta_element(0, 3, 3).unwrap().perm().order(), 3);
    }

    #[test]
    fn delta_cubed_is_trivial() {
        let d = normal_form(&word(3, "s2 S1 s2 S1 s2 S1")).unwrap();
        assert!(d.is_identity());
    }

    #[test]
    fn commuting_generators() {
        assert!(normal_form(&word(4, "s1 s3 S1 S3")).unwrap().is_identity());
    }

    #[test]
    fn sigma_has_infinite_order() {
        let s = generator_sigma(1, 3).unwrap();
        assert_eq!(s.multiply(&s).unwrap(), generator_a(1, 2, 3).unwrap());
        assert_eq!(s.finite_order(), None);
        assert_eq!(delta_element(0, 3, 3).unwrap().finite_order(), Some(3));
        assert_eq!(generator_a(1, 2, 3).unwrap().finite_order(), None);
    }

    #[test]
    fn strand_count_is_validated() {
        assert_eq!(BraidWord::parse(2, "s1"), Err(Error::StrandCount(2)));
        assert!(QuotientElement::identity(1).is_err());
        assert!(BraidWord::parse(3, "s3").is_err());
        assert!(BraidWord::parse(3, "x1").is_err());
        assert!(generator_a(1, 4, 3).is_err());
        let a = QuotientElement::identity(3).unwrap();
        let b = QuotientElement::identity(4).unwrap();
        assert!(matches!(a.multiply(&b), Err(Error::MismatchedStrands { .. })));
    }

    #[test]
    fn word_text_round_trip() {
        let w = word(5, "s3 S1 s2 s4 S4");
        assert_eq!(BraidWord::parse(5, &w.to_string()).unwrap(), w);
    }

    #[test]
    fn json_shape() {
        let x = normal_form(&word(3, "s1 s1 s2")).unwrap();
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v["n"], 3);
        assert_eq!(v["perm"], serde_json::json!([1, 3, 2]));
        let back: QuotientElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn eta_full_twist() {
        // (σ1σ2σ3)^4 in B_4 is the full twist: product of all A_{i,j}
        let eta = eta_element(0, 4, 4).unwrap();
        let twist = eta.power(4);
        assert!(twist.is_pure());
        for p in PairIndex::all(4) {
            assert_eq!(twist.pure().get(p), &Int::one());
        }
    }
}
