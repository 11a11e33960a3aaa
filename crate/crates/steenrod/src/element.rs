use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::SqMonomial;

/// A finite F2-sum of Steenrod-square monomials.
///
/// Coefficients live in F2, so an element is just the set of monomials with
/// coefficient 1 and adding a monomial twice cancels it. Terms print in
/// descending lexicographic order of their exponent sequences.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct SteenrodElement {
    terms: BTreeSet<SqMonomial>,
}

impl SteenrodElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        SteenrodElement::from(SqMonomial::unit())
    }

    /// The single square `Sq^i`.
    pub fn sq(i: u32) -> Self {
        SteenrodElement::from(SqMonomial::sq(i))
    }

    /// Sums monomials with F2 cancellation.
    pub fn from_monomials(monomials: impl IntoIterator<Item = SqMonomial>) -> Self {
        let mut e = Self::zero();
        for m in monomials {
            e.toggle(m);
        }
        e
    }

    /// F2 addition of a single monomial.
    pub fn toggle(&mut self, m: SqMonomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn contains(&self, m: &SqMonomial) -> bool {
        self.terms.contains(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = &SqMonomial> {
        self.terms.iter()
    }

    /// True when all terms share one degree (vacuously for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.iter().map(SqMonomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// The common degree of a homogeneous nonzero element.
    pub fn degree(&self) -> Option<u32> {
        let d = self.terms.iter().next()?.degree();
        self.is_homogeneous().then_some(d)
    }

    pub fn max_term_degree(&self) -> Option<u32> {
        self.terms.iter().map(SqMonomial::degree).max()
    }

    /// True when every term is admissible.
    pub fn is_admissible_form(&self) -> bool {
        self.terms.iter().all(SqMonomial::is_admissible)
    }

    /// Bilinear concatenation product, with no Adem rewriting.
    pub fn concat_mul(&self, other: &SteenrodElement) -> SteenrodElement {
        let mut out = SteenrodElement::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.concat(b));
            }
        }
        out
    }
}

impl From<SqMonomial> for SteenrodElement {
    fn from(m: SqMonomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        SteenrodElement { terms }
    }
}

impl Add for SteenrodElement {
    type Output = SteenrodElement;
    fn add(mut self, rhs: SteenrodElement) -> SteenrodElement {
        self += rhs;
        self
    }
}

impl AddAssign for SteenrodElement {
    fn add_assign(&mut self, rhs: SteenrodElement) {
        for m in rhs.terms {
            self.toggle(m);
        }
    }
}

impl fmt::Display for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
            first = false;
        }
        Ok(())
    }
}

/// Grammar: `element := term ('+' term)* | '0'`, `term := '1' | sq+`,
/// `sq := 'Sq' integer`, whitespace insignificant.
impl FromStr for SteenrodElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(SteenrodElement::zero());
        }
        let mut element = SteenrodElement::zero();
        for chunk in s.split('+') {
            element.toggle(parse_term(chunk)?);
        }
        Ok(element)
    }
}

fn parse_term(chunk: &str) -> Result<SqMonomial> {
    let text: String = chunk.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse(format!("empty term in {chunk:?}")));
    }
    if text == "1" {
        return Ok(SqMonomial::unit());
    }
    let mut exponents = Vec::new();
    let mut rest = text.as_str();
    while !rest.is_empty() {
        rest = rest
            .strip_prefix("Sq")
            .ok_or_else(|| Error::Parse(format!("expected 'Sq' at {rest:?}")))?;
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(Error::Parse(format!("expected an exponent after 'Sq' in {chunk:?}")));
        }
        let i: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("exponent {digits:?} is out of range")))?;
        exponents.push(i);
        rest = &rest[digits.len()..];
    }
    Ok(SqMonomial::new(exponents))
}
