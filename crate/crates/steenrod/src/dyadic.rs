//! Dyadic expansions and the split-based lower-bound function F.
//!
//! A dyadic expansion keeps leading zeros; `0alpha` and `alpha` expand the
//! same integer. `z` counts non-trailing zeros, i.e. zeros with some 1 to
//! their right. `F(n) = n - 2^(len(beta) - 2) + 1` where `[n] = alpha beta`
//! is split so that `|alpha| < z(beta)` with `len(beta)` minimal over all
//! leading-zero paddings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bit string, most significant bit first; leading zeros are significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryString {
    bits: Vec<u8>,
}

impl BinaryString {
    pub fn new(bits: impl IntoIterator<Item = u8>) -> Self {
        let bits: Vec<u8> = bits.into_iter().collect();
        assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
        BinaryString { bits }
    }

    pub fn empty() -> Self {
        BinaryString { bits: Vec::new() }
    }

    /// The minimal expansion of `n` (no leading zeros; empty for 0).
    pub fn expansion_of(n: u64) -> Self {
        if n == 0 {
            return Self::empty();
        }
        let width = 64 - n.leading_zeros();
        BinaryString::new((0..width).rev().map(|i| ((n >> i) & 1) as u8))
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The integer this string expands.
    pub fn value(&self) -> u64 {
        self.bits.iter().fold(0, |acc, &b| (acc << 1) | b as u64)
    }

    pub fn prepend_zeros(&self, count: usize) -> Self {
        let mut bits = vec![0; count];
        bits.extend_from_slice(&self.bits);
        BinaryString { bits }
    }

    pub fn concat(&self, other: &BinaryString) -> Self {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BinaryString { bits }
    }

    /// Count of zeros strictly left of the last 1; 0 when no 1 exists.
    pub fn z_count(&self) -> usize {
        match self.bits.iter().rposition(|&b| b == 1) {
            None => 0,
            Some(last_one) => self.bits[..last_one].iter().filter(|&&b| b == 0).count(),
        }
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BinaryString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!("invalid bit {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinaryString::new)
    }
}

/// Count of non-trailing zeros of `s`.
pub fn z_count(s: &BinaryString) -> usize {
    s.z_count()
}

/// A split `alpha beta` of a dyadic expansion with `|alpha| < z(beta)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub alpha: BinaryString,
    pub beta: BinaryString,
}

impl Split {
    pub fn concatenation(&self) -> BinaryString {
        self.alpha.concat(&self.beta)
    }
}

/// Minimal-`len(beta)` split of the expansion of `n`, searching paddings
/// `0^p [n]` for `p` up to `len([n]) + 1`; ties go to the smallest padding.
pub fn find_split(n: u64) -> Result<Split> {
    if n == 0 {
        return Err(Error::InvalidParameter("find_split needs n >= 1".into()));
    }
    find_split_from(&BinaryString::expansion_of(n))
}

/// As [`find_split`], starting from a given expansion (which may already
/// carry leading zeros).
pub fn find_split_from(expansion: &BinaryString) -> Result<Split> {
    if expansion.value() == 0 {
        return Err(Error::InvalidParameter(
            "find_split needs an expansion of a positive integer".into(),
        ));
    }
    let mut best: Option<(usize, usize)> = None; // (len(beta), padding)
    for padding in 0..=expansion.len() + 1 {
        let padded = expansion.prepend_zeros(padding);
        let bits = padded.bits();
        let last_one = bits.iter().rposition(|&b| b == 1).expect("value > 0");
        let mut zeros_before = vec![0usize; bits.len() + 1];
        for (i, &b) in bits.iter().enumerate() {
            zeros_before[i + 1] = zeros_before[i] + usize::from(b == 0);
        }
        let mut alpha_value = 0u64;
        for cut in 0..=bits.len() {
            let beta_len = bits.len() - cut;
            let z = if cut <= last_one {
                zeros_before[last_one] - zeros_before[cut]
            } else {
                0
            };
            if (alpha_value as usize) < z
                && best.is_none_or(|(bl, bp)| (beta_len, padding) < (bl, bp))
            {
                best = Some((beta_len, padding));
            }
            if cut < bits.len() {
                alpha_value = alpha_value.saturating_mul(2) + bits[cut] as u64;
            }
        }
    }
    let (beta_len, padding) = best.expect("a padded split always exists for n >= 1");
    let padded = expansion.prepend_zeros(padding);
    let cut = padded.len() - beta_len;
    Ok(Split {
        alpha: BinaryString::new(padded.bits()[..cut].iter().copied()),
        beta: BinaryString::new(padded.bits()[cut..].iter().copied()),
    })
}

/// The lower-bound function `F(n) = n - 2^(len(beta) - 2) + 1`.
pub fn f_bound(n: u64) -> Result<u64> {
    let split = find_split(n)?;
    // z(beta) >= 1 forces a 1 to the right of a 0, so len(beta) >= 2,
    // and 2^(len(beta)-2) <= n keeps the bound positive.
    let exponent = split.beta.len() as u32 - 2;
    Ok(n - (1u64 << exponent) + 1)
}

/// The loop-count bound `F(2n + 2)` for the sphere `S^{2n+1}`.
pub fn loop_bound(sphere_dim: u64) -> Result<u64> {
    if sphere_dim.is_multiple_of(2) {
        return Err(Error::EvenSphereDimension(sphere_dim));
    }
    let n = sphere_dim
        .checked_add(1)
        .ok_or_else(|| Error::InvalidParameter("sphere dimension out of range".into()))?;
    f_bound(n)
}
