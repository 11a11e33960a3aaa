//! Adem normalization to the admissible basis.
//!
//! For `i < 2j` the Adem relation rewrites
//! `Sq^i Sq^j = sum_{0 <= s <= i/2} C(j-s-1, i-2s) Sq^{i+j-s} Sq^s` over F2.
//! Normalization repeatedly replaces the leftmost inadmissible adjacent pair
//! by the right-hand side until every term is admissible; F2 set semantics
//! takes care of cancellation. Rewriting preserves degree, so the degree cap
//! only ever needs to be checked on the input.

use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use crate::binom::choose_mod2;
use crate::element::SteenrodElement;
use crate::error::{Error, Result};
use crate::monomial::SqMonomial;

/// Default bound on the degree of any element fed to the rewriting engine.
pub const DEFAULT_DEGREE_CAP: u32 = 512;

/// Hard bound on pair expansions per top-level call; a guard for the
/// termination of the rewriting order, not a tunable.
const FUEL_LIMIT: u64 = 100_000_000;

/// Memo of monomial normal forms, shareable across calls on one thread.
#[derive(Default)]
pub struct AdemCache {
    normal_forms: FxHashMap<SqMonomial, BTreeSet<SqMonomial>>,
}

impl AdemCache {
    pub fn new() -> Self {
        Self::default()
    }
}

/// Expansion of one inadmissible pair `Sq^i Sq^j`, `i < 2j`.
fn expand_pair(i: u32, j: u32) -> Vec<SqMonomial> {
    debug_assert!(i < 2 * j);
    let mut out = Vec::new();
    for s in 0..=i / 2 {
        if choose_mod2((j - s - 1) as u64, (i - 2 * s) as u64) {
            out.push(SqMonomial::new([i + j - s, s]));
        }
    }
    out
}

fn normal_form(
    m: &SqMonomial,
    cache: &mut AdemCache,
    fuel: &mut u64,
) -> Result<BTreeSet<SqMonomial>> {
    if m.is_admissible() {
        return Ok(BTreeSet::from([m.clone()]));
    }
    if let Some(known) = cache.normal_forms.get(m) {
        return Ok(known.clone());
    }
    let p = m.first_inadmissible().expect("inadmissible monomial");
    let exps = m.exponents();
    let (i, j) = (exps[p], exps[p + 1]);

    let mut acc: BTreeSet<SqMonomial> = BTreeSet::new();
    for piece in expand_pair(i, j) {
        *fuel = fuel
            .checked_sub(1)
            .ok_or(Error::FuelExhausted { limit: FUEL_LIMIT })?;
        let rewritten = SqMonomial::new(
            exps[..p]
                .iter()
                .copied()
                .chain(piece.exponents().iter().copied())
                .chain(exps[p + 2..].iter().copied()),
        );
        for term in normal_form(&rewritten, cache, fuel)? {
            if !acc.remove(&term) {
                acc.insert(term);
            }
        }
    }
    cache.normal_forms.insert(m.clone(), acc.clone());
    Ok(acc)
}

fn check_cap(e: &SteenrodElement, cap: u32) -> Result<()> {
    if let Some(degree) = e.max_term_degree() {
        if degree > cap {
            return Err(Error::DegreeCapExceeded { degree, cap });
        }
    }
    Ok(())
}

/// Rewrites `e` into admissible form, reusing `cache` for monomial normal
/// forms.
pub fn adem_normalize_cached(
    e: &SteenrodElement,
    cap: u32,
    cache: &mut AdemCache,
) -> Result<SteenrodElement> {
    check_cap(e, cap)?;
    let mut fuel = FUEL_LIMIT;
    let mut out = SteenrodElement::zero();
    for m in e.terms() {
        for term in normal_form(m, cache, &mut fuel)? {
            out.toggle(term);
        }
    }
    Ok(out)
}

/// Admissible form of `e` under an explicit degree cap.
pub fn adem_normalize_with_cap(e: &SteenrodElement, cap: u32) -> Result<SteenrodElement> {
    adem_normalize_cached(e, cap, &mut AdemCache::new())
}

/// Admissible form of `e` under the default degree cap.
pub fn adem_normalize(e: &SteenrodElement) -> Result<SteenrodElement> {
    adem_normalize_with_cap(e, DEFAULT_DEGREE_CAP)
}

/// Product `a * b` in admissible form, reusing `cache`.
pub fn multiply_cached(
    a: &SteenrodElement,
    b: &SteenrodElement,
    cap: u32,
    cache: &mut AdemCache,
) -> Result<SteenrodElement> {
    adem_normalize_cached(&a.concat_mul(b), cap, cache)
}

pub fn multiply_with_cap(a: &SteenrodElement, b: &SteenrodElement, cap: u32) -> Result<SteenrodElement> {
    multiply_cached(a, b, cap, &mut AdemCache::new())
}

/// Product `a * b` in admissible form under the default degree cap.
pub fn multiply(a: &SteenrodElement, b: &SteenrodElement) -> Result<SteenrodElement> {
    multiply_with_cap(a, b, DEFAULT_DEGREE_CAP)
}
