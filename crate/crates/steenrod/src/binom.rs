//! Binomial-coefficient parity via 2-adic digits.
//!
//! Two conventions appear throughout: `choose_mod2(n, k)` is the usual
//! $\binom{n}{k}$, while `binom_pair_mod2(a, b)` is the pair form
//! $(a, b) = (a+b)!/(a!\,b!)$ used by the Nishida relations.

/// Parity of the pair coefficient $(a, b) = (a+b)!/(a!\,b!)$.
///
/// Computed digit by digit on the 2-adic expansions of `a + b` over `b`:
/// the coefficient is odd exactly when every digit of `b` fits under the
/// corresponding digit of `a + b`.
pub fn binom_pair_mod2(a: u64, b: u64) -> bool {
    let mut m = a
        .checked_add(b)
        .expect("binomial pair arguments overflow u64");
    let mut k = b;
    while k != 0 {
        if k & 1 > m & 1 {
            return false;
        }
        m >>= 1;
        k >>= 1;
    }
    true
}

/// Parity of $\binom{n}{k}$; zero when `k > n`.
pub fn choose_mod2(n: u64, k: u64) -> bool {
    if k > n {
        return false;
    }
    binom_pair_mod2(n - k, k)
}
