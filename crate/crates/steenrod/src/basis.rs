//! Enumeration of the admissible basis degree by degree.

use crate::monomial::SqMonomial;

/// All admissible monomials of degree `d` in descending lexicographic order
/// of exponent sequences. Degree 0 yields exactly the unit.
pub fn admissible_basis(d: u32) -> Vec<SqMonomial> {
    // table[t] lists admissible exponent sequences of degree t, largest
    // leading exponent first; a sequence (i, rest) is admissible exactly
    // when rest is and i >= 2 * rest[0].
    let d = d as usize;
    let mut table: Vec<Vec<Vec<u32>>> = Vec::with_capacity(d + 1);
    table.push(vec![Vec::new()]);
    for t in 1..=d {
        let mut rows = Vec::new();
        for i in (1..=t).rev() {
            for rest in &table[t - i] {
                if rest.first().is_none_or(|&r| i as u32 >= 2 * r) {
                    let mut seq = Vec::with_capacity(1 + rest.len());
                    seq.push(i as u32);
                    seq.extend_from_slice(rest);
                    rows.push(seq);
                }
            }
        }
        table.push(rows);
    }
    table
        .pop()
        .unwrap()
        .into_iter()
        .map(SqMonomial::new)
        .collect()
}
