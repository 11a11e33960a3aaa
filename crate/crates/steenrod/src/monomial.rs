use std::fmt;

/// A composite of Steenrod squares `Sq^{i_1} ... Sq^{i_m}`.
///
/// Exponents are strictly positive; `Sq^0` is the identity and is erased on
/// construction, so the empty sequence is the unit of the algebra. The
/// derived ordering is lexicographic on the exponent sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SqMonomial {
    exponents: Vec<u32>,
}

impl SqMonomial {
    /// Builds a monomial, dropping every zero exponent.
    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        SqMonomial {
            exponents: exponents.into_iter().filter(|&i| i != 0).collect(),
        }
    }

    pub fn unit() -> Self {
        SqMonomial { exponents: Vec::new() }
    }

    /// The single square `Sq^i` (the unit when `i = 0`).
    pub fn sq(i: u32) -> Self {
        Self::new([i])
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Saturating on absurd exponent sums, which any degree cap rejects.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().fold(0u32, |a, &b| a.saturating_add(b))
    }

    /// Admissibility: `i_j >= 2 i_{j+1}` for every adjacent pair.
    pub fn is_admissible(&self) -> bool {
        self.exponents.windows(2).all(|w| w[0] >= 2 * w[1])
    }

    /// Index of the leftmost adjacent pair violating admissibility.
    pub(crate) fn first_inadmissible(&self) -> Option<usize> {
        self.exponents.windows(2).position(|w| w[0] < 2 * w[1])
    }

    /// Concatenation, i.e. composition of operations.
    pub fn concat(&self, other: &SqMonomial) -> SqMonomial {
        let mut exponents = Vec::with_capacity(self.len() + other.len());
        exponents.extend_from_slice(&self.exponents);
        exponents.extend_from_slice(&other.exponents);
        SqMonomial { exponents }
    }

    /// Splits off the rightmost square, `(prefix, last exponent)`.
    pub fn split_last(&self) -> Option<(SqMonomial, u32)> {
        let (&last, prefix) = self.exponents.split_last()?;
        Some((
            SqMonomial {
                exponents: prefix.to_vec(),
            },
            last,
        ))
    }
}

impl fmt::Display for SqMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for &i in &self.exponents {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "Sq{i}")?;
            first = false;
        }
        Ok(())
    }
}
