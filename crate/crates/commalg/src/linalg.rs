//! Dense-over-Q row reduction on sparse rows.

use std::collections::BTreeMap;

use hilbfix_core::exactalg::Rational;
use num_traits::Zero;

pub type SparseRow = BTreeMap<usize, Rational>;

/// Incremental echelon form keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots; returns the remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let hit = row.iter().find(|(c, _)| self.pivots.contains_key(c)).map(|(c, v)| (*c, v.clone()));
            let Some((col, val)) = hit else { return row };
            let piv = &self.pivots[&col];
            for (c, v) in piv {
                let e = row.entry(*c).or_insert_with(Rational::zero);
                *e -= &val * v;
                if e.is_zero() {
                    row.remove(c);
                }
            }
        }
    }

    /// Adds a row; returns whether it was independent of the previous ones.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&col, lead)) = row.iter().next() else { return false };
        let inv = lead.recip();
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivots.insert(col, row);
        true
    }
}

/// Rank of a list of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use hilbfix_core::exactalg::rat;

    fn row(v: &[i64]) -> SparseRow {
        v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, rat(*x))).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])]), 2);
        assert_eq!(rank(vec![row(&[1, 0]), row(&[0, 1]), row(&[1, 1])]), 2);
        assert_eq!(rank(Vec::new()), 0);
    }
}
