//! Versioned edge store.
//!
//! The store owns a fixed vertex set `1..=n` and the full history of edge
//! insertions. Every insertion batch bumps the version counter and stamps its
//! edges with the new version; deletions tombstone edges in place and leave
//! the version counter alone, so a deleted edge disappears from every version
//! that contained it. Version `i` is the set of alive edges stamped `<= i`,
//! and version `0` is always empty.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A vertex handle. Valid ids run from 1 to the store's vertex count;
/// range checks happen at the store boundary because only the store knows n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based index for dense per-vertex arrays.
    pub fn index(self) -> usize {
        debug_assert!(self.0 >= 1);
        self.0 as usize - 1
    }

    pub fn from_index(idx: usize) -> Self {
        VertexId(idx as u32 + 1)
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// One inserted edge. A re-insert of the same endpoints after a deletion
/// creates a fresh record with a new version stamp; records are never
/// resurrected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRecord {
    pub src: VertexId,
    pub dst: VertexId,
    pub insert_version: u32,
    pub alive: bool,
}

/// Direction of edge iteration in a view. Reversed views swap src/dst and are
/// used to build In trees as Out trees of the reverse graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Forward,
    Reversed,
}

/// A read-only view of one graph version: all alive edges whose insert
/// version is at most `version`, in forward or reversed orientation.
#[derive(Debug, Clone, Copy)]
pub struct EdgeView<'a> {
    edges: &'a [EdgeRecord],
    n: u32,
    version: u32,
    orientation: Orientation,
}

impl<'a> EdgeView<'a> {
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// The same view with src/dst swapped.
    pub fn reversed(self) -> EdgeView<'a> {
        EdgeView {
            orientation: match self.orientation {
                Orientation::Forward => Orientation::Reversed,
                Orientation::Reversed => Orientation::Forward,
            },
            ..self
        }
    }

    /// Alive edges of this version, honoring the view's orientation.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + 'a {
        let version = self.version;
        let orientation = self.orientation;
        self.edges
            .iter()
            .filter(move |e| e.alive && e.insert_version <= version)
            .map(move |e| match orientation {
                Orientation::Forward => (e.src, e.dst),
                Orientation::Reversed => (e.dst, e.src),
            })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }
}

/// Global edge list with insertion-version stamps and alive flags.
#[derive(Debug, Clone)]
pub struct VersionedEdgeStore {
    n: u32,
    edges: Vec<EdgeRecord>,
    /// (src,dst) -> index of the single alive record for that pair, if any.
    alive_index: HashMap<(u32, u32), usize>,
    current_version: u32,
}

impl VersionedEdgeStore {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroVertexCount);
        }
        Ok(VersionedEdgeStore {
            n,
            edges: Vec::new(),
            alive_index: HashMap::new(),
            current_version: 0,
        })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn current_version(&self) -> u32 {
        self.current_version
    }

    /// Number of alive edges in the newest version.
    pub fn alive_edge_count(&self) -> usize {
        self.alive_index.len()
    }

    pub fn is_alive(&self, src: VertexId, dst: VertexId) -> bool {
        self.alive_index.contains_key(&(src.get(), dst.get()))
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.get() == 0 || v.get() > self.n {
            return Err(Error::VertexOutOfRange { id: v.get(), n: self.n });
        }
        Ok(())
    }

    /// Record an insertion batch centered at `center`. Every edge must touch
    /// the center. Duplicate pairs within the batch are collapsed; a pair
    /// already alive in the current view is rejected. Returns the new
    /// version index.
    pub fn record_insertion(
        &mut self,
        center: VertexId,
        edge_set: &[(VertexId, VertexId)],
    ) -> Result<u32> {
        self.check_vertex(center)?;
        if edge_set.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }
        let mut batch: Vec<(u32, u32)> = Vec::with_capacity(edge_set.len());
        for &(src, dst) in edge_set {
            self.check_vertex(src)?;
            self.check_vertex(dst)?;
            if src != center && dst != center {
                return Err(Error::CenterViolation {
                    src: src.get(),
                    dst: dst.get(),
                    center: center.get(),
                });
            }
            if self.alive_index.contains_key(&(src.get(), dst.get())) {
                return Err(Error::EdgeAlreadyAlive { src: src.get(), dst: dst.get() });
            }
            batch.push((src.get(), dst.get()));
        }
        batch.sort_unstable();
        batch.dedup();

        let version = self.current_version + 1;
        for (src, dst) in batch {
            self.alive_index.insert((src, dst), self.edges.len());
            self.edges.push(EdgeRecord {
                src: VertexId(src),
                dst: VertexId(dst),
                insert_version: version,
                alive: true,
            });
        }
        self.current_version = version;
        Ok(version)
    }

    /// Tombstone every alive record whose endpoints appear in `edge_set`.
    /// Pairs with no alive record are skipped. Returns the records actually
    /// killed, in store order. The version counter does not move.
    pub fn record_deletion(
        &mut self,
        edge_set: &[(VertexId, VertexId)],
    ) -> Result<Vec<EdgeRecord>> {
        for &(src, dst) in edge_set {
            self.check_vertex(src)?;
            self.check_vertex(dst)?;
        }
        let mut killed = Vec::new();
        for &(src, dst) in edge_set {
            if let Some(idx) = self.alive_index.remove(&(src.get(), dst.get())) {
                self.edges[idx].alive = false;
                killed.push(self.edges[idx]);
            }
        }
        Ok(killed)
    }

    /// View of version `i`: alive edges stamped `<= i`, forward orientation.
    pub fn version_view(&self, i: u32) -> Result<EdgeView<'_>> {
        if i > self.current_version {
            return Err(Error::VersionOutOfRange {
                requested: i,
                current: self.current_version,
            });
        }
        Ok(EdgeView {
            edges: &self.edges,
            n: self.n,
            version: i,
            orientation: Orientation::Forward,
        })
    }

    /// View of the newest version.
    pub fn current_view(&self) -> EdgeView<'_> {
        self.version_view(self.current_version)
            .expect("current version is always valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(id: u32) -> VertexId {
        VertexId(id)
    }

    fn pairs(view: &EdgeView<'_>) -> Vec<(u32, u32)> {
        let mut out: Vec<_> = view.edges().map(|(a, b)| (a.get(), b.get())).collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn new_store_starts_empty_at_version_zero() {
        let store = VersionedEdgeStore::new(3).unwrap();
        assert_eq!(store.current_version(), 0);
        assert_eq!(store.version_view(0).unwrap().edge_count(), 0);
    }

    #[test]
    fn new_store_accepts_single_vertex() {
        let store = VersionedEdgeStore::new(1).unwrap();
        assert_eq!(store.vertex_count(), 1);
    }

    #[test]
    fn new_store_rejects_zero_vertices() {
        assert_eq!(VersionedEdgeStore::new(0).unwrap_err(), Error::ZeroVertexCount);
    }

    #[test]
    fn first_insert_creates_version_one() {
        let mut store = VersionedEdgeStore::new(3).unwrap();
        let t = store
            .record_insertion(v(2), &[(v(1), v(2)), (v(2), v(3))])
            .unwrap();
        assert_eq!(t, 1);
        assert_eq!(pairs(&store.version_view(1).unwrap()), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn insert_rejects_edge_not_touching_center() {
        let mut store = VersionedEdgeStore::new(3).unwrap();
        let err = store.record_insertion(v(1), &[(v(2), v(3))]).unwrap_err();
        assert_eq!(err, Error::CenterViolation { src: 2, dst: 3, center: 1 });
    }

    #[test]
    fn insert_rejects_out_of_range_endpoint() {
        let mut store = VersionedEdgeStore::new(3).unwrap();
        let err = store.record_insertion(v(2), &[(v(2), v(4))]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { id: 4, n: 3 });
    }

    #[test]
    fn insert_rejects_empty_batch_and_duplicate_alive_edge() {
        let mut store = VersionedEdgeStore::new(3).unwrap();
        assert_eq!(store.record_insertion(v(1), &[]).unwrap_err(), Error::EmptyEdgeSet);
        store.record_insertion(v(1), &[(v(1), v(2))]).unwrap();
        let err = store.record_insertion(v(2), &[(v(1), v(2))]).unwrap_err();
        assert_eq!(err, Error::EdgeAlreadyAlive { src: 1, dst: 2 });
    }

    #[test]
    fn successive_inserts_nest_views() {
        let mut store = VersionedEdgeStore::new(3).unwrap();
        store.record_insertion(v(1), &[(v(1), v(2))]).unwrap();
        store.record_insertion(v(2), &[(v(2), v(3))]).unwrap();
        assert_eq!(pairs(&store.version_view(1).unwrap()), vec![(1, 2)]);
        assert_eq!(pairs(&store.version_view(2).unwrap()), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn deletion_removes_edge_from_all_versions() {
        let mut store = VersionedEdgeStore::new(3).unwrap();
        store.record_insertion(v(1), &[(v(1), v(2))]).unwrap();
        store.record_insertion(v(2), &[(v(2), v(3))]).unwrap();
        let killed = store.record_deletion(&[(v(1), v(2))]).unwrap();
        assert_eq!(killed.len(), 1);
        assert_eq!(killed[0].insert_version, 1);
        assert_eq!(pairs(&store.version_view(1).unwrap()), vec![]);
        assert_eq!(pairs(&store.version_view(2).unwrap()), vec![(2, 3)]);
        assert_eq!(store.current_version(), 2);
    }

    #[test]
    fn deletion_of_absent_edge_is_a_noop() {
        let mut store = VersionedEdgeStore::new(3).unwrap();
        let killed = store.record_deletion(&[(v(1), v(2))]).unwrap();
        assert!(killed.is_empty());
        assert_eq!(store.current_version(), 0);
    }

    #[test]
    fn reinsert_after_delete_creates_fresh_record() {
        let mut store = VersionedEdgeStore::new(3).unwrap();
        store.record_insertion(v(1), &[(v(1), v(2))]).unwrap();
        store.record_insertion(v(2), &[(v(2), v(3))]).unwrap();
        store.record_deletion(&[(v(1), v(2))]).unwrap();
        let t = store.record_insertion(v(1), &[(v(1), v(2))]).unwrap();
        assert_eq!(t, 3);
        assert_eq!(pairs(&store.version_view(1).unwrap()), vec![]);
        assert_eq!(pairs(&store.version_view(3).unwrap()), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn version_view_rejects_future_version() {
        let store = VersionedEdgeStore::new(3).unwrap();
        let err = store.version_view(1).unwrap_err();
        assert_eq!(err, Error::VersionOutOfRange { requested: 1, current: 0 });
    }

    #[test]
    fn reversed_view_swaps_endpoints() {
        let mut store = VersionedEdgeStore::new(2).unwrap();
        store.record_insertion(v(1), &[(v(1), v(2))]).unwrap();
        let view = store.version_view(1).unwrap().reversed();
        assert_eq!(pairs(&view), vec![(2, 1)]);
    }
}
