//! Finite abelian groups as ordered lists of cyclic prime-power factors,
//! together with the strand layout used to realise them inside `S_n`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::factor_u64;

/// A cyclic factor `Z_{p^r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimePower {
    pub p: u64,
    pub r: u32,
}

impl PrimePower {
    pub fn value(self) -> u64 {
        self.p.pow(self.r)
    }
}

/// A block of consecutive strands `offset+1 ..= offset+size` carrying one
/// cyclic factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub offset: usize,
    pub size: usize,
}

impl Block {
    pub fn strands(self) -> std::ops::RangeInclusive<usize> {
        self.offset + 1..=self.offset + self.size
    }

    pub fn contains(self, strand: usize) -> bool {
        strand > self.offset && strand <= self.offset + self.size
    }
}

/// `G = Z_{p_1^{r_1}} × ⋯ × Z_{p_t^{r_t}} × Z_{2^{s_1}} × ⋯ × Z_{2^{s_v}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    odd_parts: Vec<PrimePower>,
    two_parts: Vec<u32>,
    #[serde(skip)]
    notices: Vec<String>,
}

impl GroupSpec {
    pub fn new(odd_parts: Vec<PrimePower>, two_parts: Vec<u32>) -> Result<GroupSpec> {
        if odd_parts.is_empty() && two_parts.is_empty() {
            return Err(Error::InvalidSpec("the trivial group has no holonomy".into()));
        }
        for pp in &odd_parts {
            if pp.r == 0 || pp.p < 3 || factor_u64(pp.p) != vec![(pp.p, 1)] {
                return Err(Error::InvalidSpec(format!(
                    "{}^{} is not an odd prime power",
                    pp.p, pp.r
                )));
            }
            pp.p.checked_pow(pp.r)
                .ok_or_else(|| Error::InvalidSpec(format!("{}^{} is too large", pp.p, pp.r)))?;
        }
        if two_parts.iter().any(|&r| r == 0 || r > 20) {
            return Err(Error::InvalidSpec(format!("bad 2-part exponents {two_parts:?}")));
        }
        Ok(GroupSpec {
            odd_parts,
            two_parts,
            notices: Vec::new(),
        })
    }

    /// `Z_q` for odd `q`, one block per prime power in increasing order of primes.
    pub fn cyclic_odd(q: u64) -> Result<GroupSpec> {
        if q < 3 || q.is_multiple_of(2) {
            return Err(Error::InvalidSpec(format!("{q} is not an odd integer >= 3")));
        }
        let parts = factor_u64(q)
            .into_iter()
            .map(|(p, r)| PrimePower { p, r })
            .collect();
        GroupSpec::new(parts, Vec::new())
    }

    pub fn parse(text: &str) -> Result<GroupSpec> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::ParseSpec("empty group spec".into()));
        }
        let mut odd = Vec::new();
        let mut two = Vec::new();
        let mut notices = Vec::new();
        for term in text.split(['x', '×', '*']) {
            let term = term.trim();
            let digits = term
                .strip_prefix('Z')
                .or_else(|| term.strip_prefix('z'))
                .map(|s| s.strip_prefix('_').unwrap_or(s))
                .ok_or_else(|| Error::ParseSpec(format!("term `{term}` must look like Z<k>")))?;
            let k: u64 = digits
                .parse()
                .map_err(|_| Error::ParseSpec(format!("term `{term}` must look like Z<k>")))?;
            if k < 2 {
                return Err(Error::InvalidSpec(format!("Z{k} is trivial")));
            }
            let factors = factor_u64(k);
            if factors.len() > 1 {
                let pieces: Vec<String> = factors
                    .iter()
                    .map(|&(p, r)| format!("Z{}", p.pow(r)))
                    .collect();
                notices.push(format!("Z{k} factored as {}", pieces.join("x")));
            }
            for (p, r) in factors {
                if p == 2 {
                    two.push(r);
                } else {
                    odd.push(PrimePower { p, r });
                }
            }
        }
        let mut spec = GroupSpec::new(odd, two)?;
        spec.notices = notices;
        Ok(spec)
    }

    pub fn odd_parts(&self) -> &[PrimePower] {
        &self.odd_parts
    }

    pub fn two_parts(&self) -> &[u32] {
        &self.two_parts
    }

    /// Messages produced while parsing, e.g. about factored terms.
    pub fn notices(&self) -> &[String] {
        &self.notices
    }

    pub fn t(&self) -> usize {
        self.odd_parts.len()
    }

    pub fn v(&self) -> usize {
        self.two_parts.len()
    }

    pub fn odd_blocks(&self) -> Vec<Block> {
        let mut offset = 0;
        self.odd_parts
            .iter()
            .map(|pp| {
                let b = Block {
                    offset,
                    size: pp.value() as usize,
                };
                offset += b.size;
                b
            })
            .collect()
    }

    pub fn two_blocks(&self) -> Vec<Block> {
        let mut offset = self.n_odd();
        self.two_parts
            .iter()
            .map(|&r| {
                let b = Block {
                    offset,
                    size: 1usize << r,
                };
                offset += b.size;
                b
            })
            .collect()
    }

    /// All cyclic blocks, odd ones first.
    pub fn blocks(&self) -> Vec<Block> {
        let mut b = self.odd_blocks();
        b.extend(self.two_blocks());
        b
    }

    /// Orders of the cyclic factors, in block order.
    pub fn factor_orders(&self) -> Vec<u64> {
        self.odd_parts
            .iter()
            .map(|pp| pp.value())
            .chain(self.two_parts.iter().map(|&r| 1u64 << r))
            .collect()
    }

    /// `n_t`: strands used by the odd blocks.
    pub fn n_odd(&self) -> usize {
        self.odd_parts.iter().map(|pp| pp.value() as usize).sum()
    }

    /// Strands used by all blocks, before padding.
    pub fn strands_used(&self) -> usize {
        self.n_odd() + self.two_parts.iter().map(|&r| 1usize << r).sum::<usize>()
    }

    /// Strand count of the ambient braid group. `Z_2` alone needs only two
    /// strands and is padded to three.
    pub fn n(&self) -> usize {
        self.strands_used().max(3)
    }

    pub fn dimension(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }

    /// `d = lcm` of the odd prime powers (1 when there are none).
    pub fn d(&self) -> u64 {
        self.odd_parts.iter().fold(1, |acc, pp| acc.lcm(&pp.value()))
    }

    pub fn order(&self) -> u64 {
        self.factor_orders().iter().product()
    }

    /// Cyclic of odd order, i.e. pairwise distinct odd primes and no 2-part.
    pub fn is_cyclic_odd(&self) -> bool {
        if !self.two_parts.is_empty() {
            return false;
        }
        let mut primes: Vec<u64> = self.odd_parts.iter().map(|pp| pp.p).collect();
        primes.sort_unstable();
        primes.windows(2).all(|w| w[0] != w[1])
    }

    /// `Some((p, r))` when `G = Z_{p^r}` with `p` odd.
    pub fn odd_prime_power(&self) -> Option<PrimePower> {
        match (self.odd_parts.as_slice(), self.two_parts.is_empty()) {
            ([pp], true) => Some(*pp),
            _ => None,
        }
    }

    pub fn is_two_group(&self) -> bool {
        self.odd_parts.is_empty()
    }

    /// Index of the block containing `strand`, if any.
    pub fn block_of(&self, strand: usize) -> Option<usize> {
        self.blocks().iter().position(|b| b.contains(strand))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupSpec> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.factor_orders().iter().map(|k| format!("Z{k}")).collect();
        write!(f, "{}", terms.join("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_of_mixed_spec() {
        let s = GroupSpec::parse("Z9xZ5xZ4").unwrap();
        assert_eq!(s.t(), 2);
        assert_eq!(s.v(), 1);
        assert_eq!(s.n_odd(), 14);
        assert_eq!(s.n(), 18);
        assert_eq!(s.d(), 45);
        assert_eq!(s.order(), 180);
        assert_eq!(s.two_blocks(), vec![Block { offset: 14, size: 4 }]);
        assert_eq!(s.to_string(), "Z9xZ5xZ4");
    }

    #[test]
    fn composite_terms_are_factored() {
        let s = GroupSpec::parse("Z6").unwrap();
        assert_eq!(s.odd_parts(), &[PrimePower { p: 3, r: 1 }]);
        assert_eq!(s.two_parts(), &[1]);
        assert_eq!(s.notices().len(), 1);
        let s = GroupSpec::parse("Z15").unwrap();
        assert!(s.is_cyclic_odd());
        assert_eq!(s.n(), 8);
    }

    #[test]
    fn cyclic_detection() {
        assert!(GroupSpec::parse("Z3xZ5").unwrap().is_cyclic_odd());
        assert!(!GroupSpec::parse("Z3xZ3").unwrap().is_cyclic_odd());
        assert!(!GroupSpec::parse("Z3xZ2").unwrap().is_cyclic_odd());
        assert_eq!(
            GroupSpec::parse("Z9").unwrap().odd_prime_power(),
            Some(PrimePower { p: 3, r: 2 })
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(GroupSpec::parse(""), Err(Error::ParseSpec(_))));
        assert!(matches!(GroupSpec::parse("Z1"), Err(Error::InvalidSpec(_))));
        assert!(matches!(GroupSpec::parse("Q3"), Err(Error::ParseSpec(_))));
        assert!(matches!(GroupSpec::parse("Z3x"), Err(Error::ParseSpec(_))));
    }

    #[test]
    fn z2_is_padded() {
        let s = GroupSpec::parse("Z2").unwrap();
        assert_eq!(s.strands_used(), 2);
        assert_eq!(s.n(), 3);
        assert_eq!(s.d(), 1);
    }
}
