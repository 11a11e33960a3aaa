//! Factorizations `Sq^d = sum a_i Sq^{t_i}` with `t_i < d`.
//!
//! These drive the secondary-operation machinery: the right factors `Sq^{t_i}`
//! index the fiber, the coefficients `a_i` are the operations whose vanishing
//! is checked on module cohomology.

use std::collections::BTreeMap;
use std::fmt;

use crate::adem::{adem_normalize_cached, AdemCache, DEFAULT_DEGREE_CAP};
use crate::element::SteenrodElement;
use crate::error::{Error, Result};
use crate::monomial::SqMonomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    target_degree: u32,
    /// Pairs `(a_i, t_i)`, kept sorted by `t_i`.
    terms: Vec<(SteenrodElement, u32)>,
}

impl Factorization {
    /// Builds a factorization, checking the shape invariants: each `t_i` is
    /// in `1..target`, appears once, and `a_i` is homogeneous of degree
    /// `target - t_i`.
    pub fn new(target_degree: u32, terms: Vec<(SteenrodElement, u32)>) -> Result<Self> {
        let mut seen = BTreeMap::new();
        for (a, t) in terms {
            if t == 0 || t >= target_degree {
                return Err(Error::BadRightFactor { t, target: target_degree });
            }
            if a.is_zero() {
                continue;
            }
            let expected = target_degree - t;
            match a.degree() {
                Some(actual) if actual == expected => {}
                _ => {
                    return Err(Error::TermDegreeMismatch {
                        term: a.to_string(),
                        t,
                        expected,
                        actual: a.max_term_degree().unwrap_or(0),
                    })
                }
            }
            let slot = seen.entry(t).or_insert_with(SteenrodElement::zero);
            *slot += a;
        }
        let terms = seen
            .into_iter()
            .filter(|(_, a)| !a.is_zero())
            .map(|(t, a)| (a, t))
            .collect();
        Ok(Factorization { target_degree, terms })
    }

    /// Splits each monomial of a homogeneous element at its rightmost square
    /// and groups by that factor. Nested products are expanded into this flat
    /// form before splitting, so the fiber stays indexed by the rightmost
    /// squares.
    pub fn from_element(e: &SteenrodElement) -> Result<Self> {
        let target_degree = e.degree().ok_or(Error::NotHomogeneous)?;
        let mut terms = Vec::new();
        for m in e.terms() {
            let (prefix, t) = m
                .split_last()
                .ok_or(Error::BadRightFactor { t: 0, target: target_degree })?;
            terms.push((SteenrodElement::from(prefix), t));
        }
        Factorization::new(target_degree, terms)
    }

    pub fn target_degree(&self) -> u32 {
        self.target_degree
    }

    pub fn terms(&self) -> &[(SteenrodElement, u32)] {
        &self.terms
    }

    /// The flat element `sum a_i Sq^{t_i}` without any rewriting.
    pub fn as_element(&self) -> SteenrodElement {
        let mut e = SteenrodElement::zero();
        for (a, t) in &self.terms {
            e += a.concat_mul(&SteenrodElement::sq(*t));
        }
        e
    }

    /// True when the normal form of `sum a_i Sq^{t_i}` equals `Sq^d`.
    pub fn verify(&self) -> Result<bool> {
        self.verify_with_cap(DEFAULT_DEGREE_CAP, &mut AdemCache::new())
    }

    pub fn verify_with_cap(&self, cap: u32, cache: &mut AdemCache) -> Result<bool> {
        for (a, t) in &self.terms {
            let expected = self.target_degree - t;
            if !a.is_zero() && a.degree() != Some(expected) {
                return Err(Error::TermDegreeMismatch {
                    term: a.to_string(),
                    t: *t,
                    expected,
                    actual: a.max_term_degree().unwrap_or(0),
                });
            }
        }
        let reduced = adem_normalize_cached(&self.as_element(), cap, cache)?;
        Ok(reduced == SteenrodElement::sq(self.target_degree))
    }

    /// `verify` hardened into an error carrying the residue.
    pub fn ensure_verified(&self, cap: u32, cache: &mut AdemCache) -> Result<()> {
        if self.verify_with_cap(cap, cache)? {
            return Ok(());
        }
        let mut residue = adem_normalize_cached(&self.as_element(), cap, cache)?;
        residue.toggle(SqMonomial::sq(self.target_degree));
        Err(Error::UnverifiedFactorization {
            target: self.target_degree,
            residue: residue.to_string(),
        })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sq{} =", self.target_degree)?;
        let mut first = true;
        for (a, t) in &self.terms {
            if !first {
                write!(f, " +")?;
            }
            if a.term_count() > 1 {
                write!(f, " ({a}) Sq{t}")?;
            } else if a == &SteenrodElement::unit() {
                write!(f, " Sq{t}")?;
            } else {
                write!(f, " {a} Sq{t}")?;
            }
            first = false;
        }
        Ok(())
    }
}
