//! Independent oracles for the test suites.
//!
//! The polynomial model acts Steenrod squares on F2[x_1..x_m] (the mod-2
//! cohomology of a product of m infinite projective spaces) via
//! `Sq^t(x^a) = C(a, t) x^{a+t}` and the Cartan formula. The algebra acts
//! faithfully on the product class `x_1 ... x_m` in degrees up to `m`, so
//! two elements of degree `d <= m` are equal exactly when they act equally
//! on it. None of this code shares anything with the rewriting engine it
//! checks.

use std::collections::HashSet;

use steenrod::SteenrodElement;

type Monomial = Vec<u16>;
type Poly = HashSet<Monomial>;

fn toggle(set: &mut Poly, m: Monomial) {
    if !set.remove(&m) {
        set.insert(m);
    }
}

/// All ways to raise `mono` by a total of `t` with odd per-variable
/// binomials, i.e. the Cartan expansion of one `Sq^t`.
fn sq_on_monomial(t: u16, mono: &Monomial) -> Vec<Monomial> {
    fn rec(t: u16, var: usize, mono: &Monomial, current: &mut Monomial, out: &mut Vec<Monomial>) {
        if t == 0 {
            let mut done = current.clone();
            done.extend_from_slice(&mono[var..]);
            out.push(done);
            return;
        }
        if var == mono.len() {
            return;
        }
        // C(a, i) is odd exactly when i is a submask of a (Lucas at p = 2).
        let a = mono[var];
        let mut i = a;
        loop {
            if i <= t {
                current.push(mono[var] + i);
                rec(t - i, var + 1, mono, current, out);
                current.pop();
            }
            if i == 0 {
                break;
            }
            i = (i - 1) & a;
        }
    }
    let mut out = Vec::new();
    rec(t, 0, mono, &mut Vec::new(), &mut out);
    out
}

fn sq_on_poly(t: u16, poly: &Poly) -> Poly {
    let mut out = Poly::new();
    for mono in poly {
        for image in sq_on_monomial(t, mono) {
            toggle(&mut out, image);
        }
    }
    out
}

/// Applies `e` to the product class `x_1 ... x_m`, monomials right to left.
pub fn act_on_product(e: &SteenrodElement, m: usize) -> Poly {
    let product: Monomial = vec![1; m];
    let mut out = Poly::new();
    for term in e.terms() {
        let mut current = Poly::from([product.clone()]);
        for &i in term.exponents().iter().rev() {
            current = sq_on_poly(i as u16, &current);
        }
        for mono in current {
            toggle(&mut out, mono);
        }
    }
    out
}

/// Faithfulness check: elements of degree `<= m` agree exactly when their
/// actions on the product class agree.
pub fn agree_on_product(a: &SteenrodElement, b: &SteenrodElement, m: usize) -> bool {
    act_on_product(a, m) == act_on_product(b, m)
}

/// Exact binomial parity from Legendre's formula: `v_2(n!) = sum floor(n/2^i)`,
/// so the pair `(a, b)` is odd exactly when the valuations cancel.
pub fn valuation_pair_parity(a: u64, b: u64) -> bool {
    fn v2_factorial(mut n: u64) -> u64 {
        let mut total = 0;
        while n > 0 {
            n /= 2;
            total += n;
        }
        total
    }
    v2_factorial(a + b) == v2_factorial(a) + v2_factorial(b)
}
