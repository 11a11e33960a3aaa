//! Row-reduced spans over GF(2) on u64 bitset rows.

/// A set of vectors kept in row echelon form, one u64 word per 64 columns.
#[derive(Debug, Clone, Default)]
pub struct Gf2Span {
    width: usize,
    /// (pivot column, reduced row) sorted by pivot.
    rows: Vec<(usize, Vec<u64>)>,
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

impl Gf2Span {
    pub fn new(width: usize) -> Self {
        Gf2Span { width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn row_from_bits(&self, bits: impl IntoIterator<Item = usize>) -> Vec<u64> {
        let mut row = vec![0u64; self.width.div_ceil(64)];
        for b in bits {
            debug_assert!(b < self.width);
            row[b / 64] ^= 1 << (b % 64);
        }
        row
    }

    fn reduce(&self, mut row: Vec<u64>) -> Vec<u64> {
        for (pivot, basis_row) in &self.rows {
            if row[pivot / 64] >> (pivot % 64) & 1 == 1 {
                xor_into(&mut row, basis_row);
            }
        }
        row
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, row: Vec<u64>) -> bool {
        let reduced = self.reduce(row);
        match leading_bit(&reduced) {
            None => false,
            Some(pivot) => {
                let at = self.rows.partition_point(|(p, _)| *p < pivot);
                self.rows.insert(at, (pivot, reduced));
                true
            }
        }
    }

    pub fn contains(&self, row: Vec<u64>) -> bool {
        leading_bit(&self.reduce(row)).is_none()
    }
}
