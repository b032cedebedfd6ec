//! Witness-count matrix.
//!
//! `counts[u][z]` holds the number of active insertion centers r with
//! `u ∈ In[r]` and `z ∈ Out[r]`, i.e. the number of centers certifying a
//! directed path u -> z. A reachability query is a positivity test on one
//! cell. Insertions credit a full In x Out rectangle to the new center;
//! deletions debit the two disjoint rectangles that cover exactly the
//! ceased witness pairs.

use crate::error::{Error, Result};
use crate::store::VertexId;

#[derive(Debug, Clone)]
pub struct WitnessMatrix {
    n: u32,
    counts: Vec<u32>,
    cell_updates: u64,
}

impl WitnessMatrix {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroVertexCount);
        }
        Ok(WitnessMatrix {
            n,
            counts: vec![0; n as usize * n as usize],
            cell_updates: 0,
        })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// Cumulative number of single-cell increments and decrements.
    pub fn cell_update_count(&self) -> u64 {
        self.cell_updates
    }

    fn cell(&self, row: VertexId, col: VertexId) -> usize {
        row.index() * self.n as usize + col.index()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.get() == 0 || v.get() > self.n {
            return Err(Error::VertexOutOfRange { id: v.get(), n: self.n });
        }
        Ok(())
    }

    /// True iff at least one center witnesses a path v -> u.
    pub fn query_cell(&self, v: VertexId, u: VertexId) -> Result<bool> {
        self.check_vertex(v)?;
        self.check_vertex(u)?;
        Ok(self.counts[self.cell(v, u)] > 0)
    }

    pub fn count(&self, v: VertexId, u: VertexId) -> u32 {
        self.counts[self.cell(v, u)]
    }

    /// Credit one center's In x Out cross product.
    pub fn apply_center_increment(&mut self, in_set: &[VertexId], out_set: &[VertexId]) {
        for &u in in_set {
            let row = u.index() * self.n as usize;
            for &z in out_set {
                self.counts[row + z.index()] += 1;
            }
        }
        self.cell_updates += in_set.len() as u64 * out_set.len() as u64;
    }

    /// Debit one center's previously credited In x Out cross product.
    pub fn apply_center_decrement(&mut self, in_set: &[VertexId], out_set: &[VertexId]) -> Result<()> {
        self.decrement_rectangle(in_set, out_set)
    }

    /// Debit the witness pairs a center lost in one deletion batch.
    ///
    /// The ceased pairs are exactly (in_delete x out_before) with
    /// (in_after x out_delete): the first rectangle covers every pair whose
    /// source can no longer reach the center, the second covers pairs whose
    /// source still can but whose target became unreachable. The rectangles
    /// are disjoint because in_delete and in_after are.
    pub fn apply_deletion_delta(
        &mut self,
        in_delete: &[VertexId],
        out_before: &[VertexId],
        in_after: &[VertexId],
        out_delete: &[VertexId],
    ) -> Result<()> {
        assert!(
            sorted_disjoint(in_delete, in_after),
            "in_delete and in_after must be disjoint"
        );
        self.decrement_rectangle(in_delete, out_before)?;
        self.decrement_rectangle(in_after, out_delete)?;
        Ok(())
    }

    fn decrement_rectangle(&mut self, rows: &[VertexId], cols: &[VertexId]) -> Result<()> {
        for &u in rows {
            let row = u.index() * self.n as usize;
            for &z in cols {
                let cell = &mut self.counts[row + z.index()];
                if *cell == 0 {
                    return Err(Error::WitnessUnderflow { row: u.get(), col: z.get() });
                }
                *cell -= 1;
            }
        }
        self.cell_updates += rows.len() as u64 * cols.len() as u64;
        Ok(())
    }

    /// Row-major dump of all counts (row = source vertex).
    pub fn counts_row_major(&self) -> &[u32] {
        &self.counts
    }

    pub fn total_count(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }
}

/// Both slices ascending; true iff they share no element.
fn sorted_disjoint(a: &[VertexId], b: &[VertexId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(raw: &[u32]) -> Vec<VertexId> {
        raw.iter().map(|&i| VertexId(i)).collect()
    }

    #[test]
    fn query_on_zero_matrix_is_false() {
        let m = WitnessMatrix::new(3).unwrap();
        assert!(!m.query_cell(VertexId(1), VertexId(2)).unwrap());
    }

    #[test]
    fn query_is_a_positivity_test() {
        let mut m = WitnessMatrix::new(3).unwrap();
        m.apply_center_increment(&ids(&[1]), &ids(&[3]));
        m.apply_center_increment(&ids(&[1]), &ids(&[3]));
        assert_eq!(m.count(VertexId(1), VertexId(3)), 2);
        assert!(m.query_cell(VertexId(1), VertexId(3)).unwrap());
    }

    #[test]
    fn query_rejects_out_of_range() {
        let m = WitnessMatrix::new(3).unwrap();
        assert_eq!(
            m.query_cell(VertexId(0), VertexId(2)).unwrap_err(),
            Error::VertexOutOfRange { id: 0, n: 3 }
        );
        assert_eq!(
            m.query_cell(VertexId(1), VertexId(4)).unwrap_err(),
            Error::VertexOutOfRange { id: 4, n: 3 }
        );
    }

    #[test]
    fn center_increment_fills_cross_product() {
        let mut m = WitnessMatrix::new(3).unwrap();
        m.apply_center_increment(&ids(&[1, 2]), &ids(&[2, 3]));
        assert_eq!(m.count(VertexId(1), VertexId(2)), 1);
        assert_eq!(m.count(VertexId(1), VertexId(3)), 1);
        assert_eq!(m.count(VertexId(2), VertexId(2)), 1);
        assert_eq!(m.count(VertexId(2), VertexId(3)), 1);
        assert_eq!(m.count(VertexId(3), VertexId(3)), 0);
        assert_eq!(m.cell_update_count(), 4);
    }

    #[test]
    fn isolated_center_touches_only_its_diagonal_cell() {
        let mut m = WitnessMatrix::new(3).unwrap();
        m.apply_center_increment(&ids(&[2]), &ids(&[2]));
        assert_eq!(m.count(VertexId(2), VertexId(2)), 1);
        assert_eq!(m.total_count(), 1);
    }

    #[test]
    fn decrement_inverts_increment() {
        let mut m = WitnessMatrix::new(3).unwrap();
        m.apply_center_increment(&ids(&[1, 2]), &ids(&[2, 3]));
        m.apply_center_decrement(&ids(&[1, 2]), &ids(&[2, 3])).unwrap();
        assert_eq!(m.total_count(), 0);
        assert_eq!(m.cell_update_count(), 8);
    }

    #[test]
    fn decrement_on_zero_matrix_reports_underflow() {
        let mut m = WitnessMatrix::new(3).unwrap();
        let err = m.apply_center_decrement(&ids(&[1]), &ids(&[2])).unwrap_err();
        assert_eq!(err, Error::WitnessUnderflow { row: 1, col: 2 });
    }

    #[test]
    fn deletion_delta_with_empty_deltas_is_a_noop() {
        let mut m = WitnessMatrix::new(3).unwrap();
        m.apply_center_increment(&ids(&[1, 2]), &ids(&[2, 3]));
        m.apply_deletion_delta(&[], &ids(&[2, 3]), &ids(&[1, 2]), &[])
            .unwrap();
        assert_eq!(m.total_count(), 4);
    }

    #[test]
    fn deletion_delta_debits_out_delete_rectangle() {
        // Center 2 with In={1,2}, Out={2,3}; killing (2,3) drops vertex 3
        // from Out while In stays intact.
        let mut m = WitnessMatrix::new(3).unwrap();
        m.apply_center_increment(&ids(&[1, 2]), &ids(&[2, 3]));
        m.apply_deletion_delta(&[], &ids(&[2, 3]), &ids(&[1, 2]), &ids(&[3]))
            .unwrap();
        assert_eq!(m.count(VertexId(1), VertexId(3)), 0);
        assert_eq!(m.count(VertexId(2), VertexId(3)), 0);
        assert_eq!(m.count(VertexId(1), VertexId(2)), 1);
        assert_eq!(m.count(VertexId(2), VertexId(2)), 1);
    }

    #[test]
    fn deletion_delta_decrements_overlap_cell_exactly_once() {
        // The double-count trap: killing (1,2) and (2,3) together leaves
        // center 2 with in_delete={1}, out_delete={3}. Cell (1,3) lies in
        // in_delete x out_before and in in_before x out_delete; the second
        // rectangle must use post-deletion In so the cell is debited once.
        let mut m = WitnessMatrix::new(3).unwrap();
        m.apply_center_increment(&ids(&[1, 2]), &ids(&[2, 3]));
        m.apply_deletion_delta(&ids(&[1]), &ids(&[2, 3]), &ids(&[2]), &ids(&[3]))
            .unwrap();
        assert_eq!(m.count(VertexId(1), VertexId(2)), 0);
        assert_eq!(m.count(VertexId(1), VertexId(3)), 0);
        assert_eq!(m.count(VertexId(2), VertexId(3)), 0);
        assert_eq!(m.count(VertexId(2), VertexId(2)), 1);
    }

    #[test]
    #[should_panic(expected = "disjoint")]
    fn deletion_delta_rejects_overlapping_in_sets() {
        let mut m = WitnessMatrix::new(3).unwrap();
        m.apply_center_increment(&ids(&[1, 2]), &ids(&[2, 3]));
        let _ = m.apply_deletion_delta(&ids(&[1]), &ids(&[2, 3]), &ids(&[1, 2]), &[]);
    }

    #[test]
    fn reinsert_algebra_preserves_overlap_cells() {
        // Decrement old In x Out then increment a new, overlapping one:
        // cells covered by both end where they started.
        let mut m = WitnessMatrix::new(3).unwrap();
        m.apply_center_increment(&ids(&[1, 2]), &ids(&[2, 3]));
        m.apply_center_decrement(&ids(&[1, 2]), &ids(&[2, 3])).unwrap();
        m.apply_center_increment(&ids(&[1, 2]), &ids(&[1, 2, 3]));
        assert_eq!(m.count(VertexId(1), VertexId(3)), 1);
        assert_eq!(m.count(VertexId(1), VertexId(1)), 1);
        assert_eq!(m.count(VertexId(2), VertexId(2)), 1);
    }
}
