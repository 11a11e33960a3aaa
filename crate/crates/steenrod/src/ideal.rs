//! Membership in the left ideals `L(k) = A{Sq^1, Sq^2, ..., Sq^{2^k}}`.

use rustc_hash::FxHashMap;

use crate::adem::{adem_normalize_cached, AdemCache, DEFAULT_DEGREE_CAP};
use crate::basis::admissible_basis;
use crate::element::SteenrodElement;
use crate::error::{Error, Result};
use crate::gf2::Gf2Span;
use crate::monomial::SqMonomial;

/// Decides whether a homogeneous element lies in `L(k)`.
///
/// The degree-d piece of `L(k)` is spanned by the normal forms of
/// `m * Sq^{2^j}` over admissible `m` of degree `d - 2^j`, `0 <= j <= k`;
/// membership is Gaussian elimination over F2 in admissible coordinates.
pub fn ideal_member(e: &SteenrodElement, k: u32) -> Result<bool> {
    ideal_member_with_cap(e, k, DEFAULT_DEGREE_CAP, &mut AdemCache::new())
}

pub fn ideal_member_with_cap(
    e: &SteenrodElement,
    k: u32,
    cap: u32,
    cache: &mut AdemCache,
) -> Result<bool> {
    let normalized = adem_normalize_cached(e, cap, cache)?;
    if normalized.is_zero() {
        return Ok(true);
    }
    let d = normalized.degree().ok_or(Error::NotHomogeneous)?;

    let target_basis = admissible_basis(d);
    let coords: FxHashMap<&SqMonomial, usize> = target_basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let to_row = |span: &Gf2Span, elem: &SteenrodElement| {
        span.row_from_bits(elem.terms().map(|m| coords[m]))
    };

    let mut span = Gf2Span::new(target_basis.len());
    for j in 0..=k {
        let Some(generator) = 1u32.checked_shl(j) else { break };
        if generator > d {
            continue;
        }
        for m in admissible_basis(d - generator) {
            let product = SteenrodElement::from(m.concat(&SqMonomial::sq(generator)));
            let reduced = adem_normalize_cached(&product, cap, cache)?;
            span.insert(to_row(&span, &reduced));
        }
    }
    Ok(span.contains(to_row(&span, &normalized)))
}

/// Smallest `k` with `Sq^d` in `L(k)`; exists since `Sq^{2^m}` is in `L(m)`.
pub fn min_ideal_k(d: u32) -> Result<u32> {
    min_ideal_k_with_cap(d, DEFAULT_DEGREE_CAP, &mut AdemCache::new())
}

pub fn min_ideal_k_with_cap(d: u32, cap: u32, cache: &mut AdemCache) -> Result<u32> {
    if d == 0 {
        return Err(Error::InvalidParameter("min_ideal_k needs d >= 1".into()));
    }
    let e = SteenrodElement::sq(d);
    let limit = d.next_power_of_two().trailing_zeros(); // ceil(log2 d)
    for k in 0..=limit {
        if ideal_member_with_cap(&e, k, cap, cache)? {
            return Ok(k);
        }
    }
    Err(Error::InvalidParameter(format!(
        "Sq{d} not found in L({limit}); the generator bound is violated"
    )))
}
