//! Fully dynamic reachability oracle.
//!
//! Combines the versioned store, per-center In/Out reachability trees and
//! the witness matrix. An insertion batch centered at v gets v a pair of
//! trees on the new graph version and credits the In x Out rectangle to the
//! matrix (debiting v's previous rectangle first if v was already a center).
//! A deletion batch tombstones edges in the store, lets every center's trees
//! shrink on their own versions, and debits exactly the ceased witness
//! pairs. Queries are a single matrix lookup plus the reflexive convention.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::store::{VersionedEdgeStore, VertexId};
use crate::tcm::WitnessMatrix;
use crate::tree::{Direction, ReachTree};

/// One active insertion center: its trees live on the graph version created
/// by the insertion that (re)built it.
pub struct CenterRecord {
    vertex: VertexId,
    version: u32,
    in_tree: ReachTree,
    out_tree: ReachTree,
    in_size_at_build: usize,
    out_size_at_build: usize,
    lifetime_decrements: u64,
}

impl CenterRecord {
    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    pub fn in_tree(&self) -> &ReachTree {
        &self.in_tree
    }

    pub fn out_tree(&self) -> &ReachTree {
        &self.out_tree
    }

    pub fn in_size_at_build(&self) -> usize {
        self.in_size_at_build
    }

    pub fn out_size_at_build(&self) -> usize {
        self.out_size_at_build
    }

    /// Deletion-driven witness decrements charged to this center since it
    /// was last (re)built.
    pub fn lifetime_decrements(&self) -> u64 {
        self.lifetime_decrements
    }
}

/// Counter snapshot, pure read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterReport {
    pub ins: u64,
    pub del: u64,
    pub timeline: u64,
    pub tcm_cell_updates: u64,
    pub tree_work: u64,
    pub centers: Vec<CenterCounters>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterCounters {
    pub vertex: VertexId,
    pub version: u32,
    pub lifetime_decrements: u64,
    pub in_size_at_build: usize,
    pub out_size_at_build: usize,
}

pub struct DynamicOracle {
    store: VersionedEdgeStore,
    centers: BTreeMap<u32, CenterRecord>,
    tcm: WitnessMatrix,
    ins: u64,
    del: u64,
    timeline: u64,
    /// Tree work of centers that have since been rebuilt, so the global
    /// counter stays cumulative.
    retired_tree_work: u64,
}

impl DynamicOracle {
    pub fn new(n: u32) -> Result<Self> {
        Ok(DynamicOracle {
            store: VersionedEdgeStore::new(n)?,
            centers: BTreeMap::new(),
            tcm: WitnessMatrix::new(n)?,
            ins: 0,
            del: 0,
            timeline: 0,
            retired_tree_work: 0,
        })
    }

    pub fn vertex_count(&self) -> u32 {
        self.store.vertex_count()
    }

    pub fn store(&self) -> &VersionedEdgeStore {
        &self.store
    }

    pub fn tcm(&self) -> &WitnessMatrix {
        &self.tcm
    }

    /// Active centers with the version each was built on, ascending by
    /// vertex.
    pub fn centers(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.centers.values().map(|r| (r.vertex, r.version))
    }

    pub fn center_record(&self, v: VertexId) -> Option<&CenterRecord> {
        self.centers.get(&v.get())
    }

    pub fn center_count(&self) -> usize {
        self.centers.len()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        let n = self.store.vertex_count();
        if v.get() == 0 || v.get() > n {
            return Err(Error::VertexOutOfRange { id: v.get(), n });
        }
        Ok(())
    }

    /// Insert a batch of edges all touching `center`; rebuilds the center's
    /// trees on the new version and re-credits its witness rectangle.
    pub fn insert(&mut self, center: VertexId, edge_set: &[(VertexId, VertexId)]) -> Result<()> {
        let version = self.store.record_insertion(center, edge_set)?;

        // Retire the previous incarnation of this center. Its trees live on
        // an older version, which the insertion above did not change, so the
        // debited rectangle matches what the center currently contributes.
        if let Some(old) = self.centers.remove(&center.get()) {
            let in_members = old.in_tree.members();
            let out_members = old.out_tree.members();
            self.tcm
                .apply_center_decrement(&in_members, &out_members)
                .expect("center rectangle was credited before");
            self.retired_tree_work += old.in_tree.work() + old.out_tree.work();
        }

        let view = self.store.version_view(version)?;
        let out_tree = ReachTree::build(&view, center, Direction::Out)?;
        let in_tree = ReachTree::build(&view.reversed(), center, Direction::In)?;
        let in_members = in_tree.members();
        let out_members = out_tree.members();
        self.tcm.apply_center_increment(&in_members, &out_members);
        self.centers.insert(
            center.get(),
            CenterRecord {
                vertex: center,
                version,
                in_tree,
                out_tree,
                in_size_at_build: in_members.len(),
                out_size_at_build: out_members.len(),
                lifetime_decrements: 0,
            },
        );
        self.ins += 1;
        self.timeline += 1;
        Ok(())
    }

    /// Delete an arbitrary batch of edges. Every center processes the killed
    /// edges that exist in its own version view; centers reduced to their
    /// root stay registered.
    pub fn delete(&mut self, edge_set: &[(VertexId, VertexId)]) -> Result<()> {
        let killed = self.store.record_deletion(edge_set)?;
        self.del += 1;
        self.timeline += 1;
        if killed.is_empty() {
            return Ok(());
        }
        let killed_pairs: Vec<(VertexId, VertexId)> =
            killed.iter().map(|r| (r.src, r.dst)).collect();

        // All tree deltas are computed before any matrix delta is applied.
        struct CenterDelta {
            vertex: u32,
            in_delete: Vec<VertexId>,
            out_before: Vec<VertexId>,
            in_after: Vec<VertexId>,
            out_delete: Vec<VertexId>,
        }
        let mut deltas: Vec<CenterDelta> = Vec::new();
        for (&vertex, record) in self.centers.iter_mut() {
            let in_report = record.in_tree.delete_edges(&killed_pairs);
            let out_report = record.out_tree.delete_edges(&killed_pairs);
            if in_report.is_empty() && out_report.is_empty() {
                continue;
            }
            let out_after = record.out_tree.members();
            let out_before = merge_sorted(&out_after, &out_report.removed);
            let in_after = record.in_tree.members();
            deltas.push(CenterDelta {
                vertex,
                in_delete: in_report.removed,
                out_before,
                in_after,
                out_delete: out_report.removed,
            });
        }

        for delta in deltas {
            self.tcm
                .apply_deletion_delta(
                    &delta.in_delete,
                    &delta.out_before,
                    &delta.in_after,
                    &delta.out_delete,
                )
                .expect("witness rectangles stay non-negative");
            let decrements = delta.in_delete.len() as u64 * delta.out_before.len() as u64
                + delta.in_after.len() as u64 * delta.out_delete.len() as u64;
            self.centers
                .get_mut(&delta.vertex)
                .expect("delta refers to a registered center")
                .lifetime_decrements += decrements;
        }
        Ok(())
    }

    /// O(1) reachability query on the newest version. v == u is true by the
    /// reflexive convention even when no center witnesses it.
    pub fn query(&self, v: VertexId, u: VertexId) -> Result<bool> {
        self.check_vertex(v)?;
        self.check_vertex(u)?;
        if v == u {
            return Ok(true);
        }
        self.tcm.query_cell(v, u)
    }

    pub fn snapshot_counters(&self) -> CounterReport {
        let live_tree_work: u64 = self
            .centers
            .values()
            .map(|r| r.in_tree.work() + r.out_tree.work())
            .sum();
        CounterReport {
            ins: self.ins,
            del: self.del,
            timeline: self.timeline,
            tcm_cell_updates: self.tcm.cell_update_count(),
            tree_work: self.retired_tree_work + live_tree_work,
            centers: self
                .centers
                .values()
                .map(|r| CenterCounters {
                    vertex: r.vertex,
                    version: r.version,
                    lifetime_decrements: r.lifetime_decrements,
                    in_size_at_build: r.in_size_at_build,
                    out_size_at_build: r.out_size_at_build,
                })
                .collect(),
        }
    }
}

/// Union of two sorted, disjoint vertex lists.
fn merge_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            debug_assert_ne!(a[i], b[j], "membership and delta overlap");
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(id: u32) -> VertexId {
        VertexId(id)
    }

    fn e(pairs: &[(u32, u32)]) -> Vec<(VertexId, VertexId)> {
        pairs.iter().map(|&(a, b)| (v(a), v(b))).collect()
    }

    #[test]
    fn first_insert_credits_the_cross_product() {
        let mut oracle = DynamicOracle::new(3).unwrap();
        oracle.insert(v(2), &e(&[(1, 2), (2, 3)])).unwrap();
        assert_eq!(oracle.center_count(), 1);
        for (row, col) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            assert_eq!(oracle.tcm().count(v(row), v(col)), 1, "cell ({row},{col})");
        }
        assert!(oracle.query(v(1), v(3)).unwrap());
        assert!(!oracle.query(v(3), v(1)).unwrap());
    }

    #[test]
    fn reinsert_refreshes_the_center_rectangle() {
        let mut oracle = DynamicOracle::new(3).unwrap();
        oracle.insert(v(2), &e(&[(1, 2), (2, 3)])).unwrap();
        oracle.insert(v(2), &e(&[(2, 1)])).unwrap();
        // In[2] = {1,2}, Out[2] = {1,2,3} on version 2.
        assert_eq!(oracle.tcm().count(v(1), v(3)), 1);
        assert_eq!(oracle.tcm().count(v(2), v(1)), 1);
        assert_eq!(oracle.tcm().total_count(), 6);
        assert_eq!(oracle.center_count(), 1);
        // 4 credited, 4 debited, 6 credited.
        assert_eq!(oracle.snapshot_counters().tcm_cell_updates, 14);
    }

    #[test]
    fn self_loop_center_touches_only_its_diagonal() {
        let mut oracle = DynamicOracle::new(5).unwrap();
        oracle.insert(v(5), &e(&[(5, 5)])).unwrap();
        assert_eq!(oracle.tcm().count(v(5), v(5)), 1);
        assert_eq!(oracle.tcm().total_count(), 1);
    }

    #[test]
    fn delete_severs_the_witnessed_path() {
        let mut oracle = DynamicOracle::new(3).unwrap();
        oracle.insert(v(2), &e(&[(1, 2), (2, 3)])).unwrap();
        oracle.delete(&e(&[(2, 3)])).unwrap();
        assert!(!oracle.query(v(1), v(3)).unwrap());
        assert!(!oracle.query(v(2), v(3)).unwrap());
        assert!(oracle.query(v(1), v(2)).unwrap());
        assert_eq!(oracle.tcm().count(v(1), v(3)), 0);
    }

    #[test]
    fn delete_of_never_inserted_edge_is_a_noop_update() {
        let mut oracle = DynamicOracle::new(3).unwrap();
        oracle.insert(v(2), &e(&[(1, 2)])).unwrap();
        let before = oracle.tcm().counts_row_major().to_vec();
        oracle.delete(&e(&[(2, 3)])).unwrap();
        assert_eq!(oracle.tcm().counts_row_major(), &before[..]);
        let counters = oracle.snapshot_counters();
        assert_eq!(counters.del, 1);
        assert_eq!(counters.timeline, counters.ins + counters.del);
    }

    #[test]
    fn two_witnesses_survive_losing_one() {
        // Parallel paths 1 -> 2 -> 3 and 1 -> 4 -> 3; centers 2 and 4 both
        // witness (1,3).
        let mut oracle = DynamicOracle::new(4).unwrap();
        oracle.insert(v(2), &e(&[(1, 2), (2, 3)])).unwrap();
        oracle.insert(v(4), &e(&[(1, 4), (4, 3)])).unwrap();
        assert_eq!(oracle.tcm().count(v(1), v(3)), 2);

        oracle.delete(&e(&[(2, 3)])).unwrap();
        assert_eq!(oracle.tcm().count(v(1), v(3)), 1);
        assert!(oracle.query(v(1), v(3)).unwrap());
    }

    #[test]
    fn reflexive_queries_hold_on_the_empty_graph() {
        let oracle = DynamicOracle::new(3).unwrap();
        for id in 1..=3 {
            assert!(oracle.query(v(id), v(id)).unwrap());
        }
        assert!(!oracle.query(v(1), v(2)).unwrap());
        assert_eq!(
            oracle.query(v(4), v(4)).unwrap_err(),
            Error::VertexOutOfRange { id: 4, n: 3 }
        );
    }

    #[test]
    fn queries_leave_counters_unchanged() {
        let mut oracle = DynamicOracle::new(4).unwrap();
        oracle.insert(v(2), &e(&[(1, 2), (2, 3)])).unwrap();
        let before = oracle.snapshot_counters();
        for a in 1..=4 {
            for b in 1..=4 {
                let _ = oracle.query(v(a), v(b)).unwrap();
            }
        }
        assert_eq!(oracle.snapshot_counters(), before);
    }

    #[test]
    fn counters_track_cross_product_sizes() {
        let mut oracle = DynamicOracle::new(3).unwrap();
        let zero = oracle.snapshot_counters();
        assert_eq!(zero.ins, 0);
        assert_eq!(zero.tcm_cell_updates, 0);
        assert!(zero.centers.is_empty());

        oracle.insert(v(2), &e(&[(1, 2), (2, 3)])).unwrap();
        let counters = oracle.snapshot_counters();
        // |In| = 2, |Out| = 2 at a fresh center.
        assert_eq!(counters.tcm_cell_updates, 4);
        assert_eq!(counters.centers.len(), 1);
        assert_eq!(counters.centers[0].in_size_at_build, 2);
        assert_eq!(counters.centers[0].out_size_at_build, 2);
    }

    #[test]
    fn center_reduced_to_root_keeps_its_diagonal_witness() {
        let mut oracle = DynamicOracle::new(3).unwrap();
        oracle.insert(v(2), &e(&[(1, 2), (2, 3)])).unwrap();
        oracle.delete(&e(&[(1, 2), (2, 3)])).unwrap();
        assert_eq!(oracle.center_count(), 1);
        assert_eq!(oracle.tcm().count(v(2), v(2)), 1);
        assert_eq!(oracle.tcm().total_count(), 1);
    }
}
