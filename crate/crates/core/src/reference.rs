//! Brute-force reference oracles for differential testing.
//!
//! These recompute reachability and witness counts from scratch with plain
//! graph searches. They deliberately share no traversal code with the
//! maintained structures; if they did, the differential tests would prove
//! nothing. Performance is a non-goal.

use crate::oracle::DynamicOracle;
use crate::store::{EdgeView, VertexId};

/// Dense boolean reachability matrix, diagonal always true.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolMatrix {
    n: u32,
    cells: Vec<bool>,
}

impl BoolMatrix {
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn get(&self, from: VertexId, to: VertexId) -> bool {
        self.cells[from.index() * self.n as usize + to.index()]
    }
}

fn forward_adjacency(view: &EdgeView<'_>) -> Vec<Vec<usize>> {
    let n = view.vertex_count() as usize;
    let mut adj = vec![Vec::new(); n];
    for (src, dst) in view.edges() {
        adj[src.index()].push(dst.index());
    }
    adj
}

/// Vertices reachable from `start` (inclusive), as a flag vector.
/// Returns the number of vertex/edge visits alongside.
fn search(adj: &[Vec<usize>], start: usize) -> (Vec<bool>, u64) {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    let mut visits = 1u64;
    seen[start] = true;
    while let Some(v) = stack.pop() {
        visits += 1;
        for &w in &adj[v] {
            visits += 1;
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (seen, visits)
}

/// True iff a directed path from `v` to `u` exists in the view (v == u is
/// trivially true).
pub fn reachable_bruteforce(view: &EdgeView<'_>, v: VertexId, u: VertexId) -> bool {
    if v == u {
        return true;
    }
    let adj = forward_adjacency(view);
    let (seen, _) = search(&adj, v.index());
    seen[u.index()]
}

/// Full transitive closure by one search per vertex.
pub fn transitive_closure_bruteforce(view: &EdgeView<'_>) -> BoolMatrix {
    closure_with_work(view).0
}

/// Transitive closure plus the number of vertex/edge visits it cost.
/// The visit count is the work measure for the recompute baseline.
pub fn closure_with_work(view: &EdgeView<'_>) -> (BoolMatrix, u64) {
    let n = view.vertex_count() as usize;
    let adj = forward_adjacency(view);
    let mut cells = vec![false; n * n];
    let mut work = 0u64;
    for v in 0..n {
        let (seen, visits) = search(&adj, v);
        work += visits;
        for (u, &hit) in seen.iter().enumerate() {
            cells[v * n + u] = hit;
        }
        cells[v * n + v] = true;
    }
    (BoolMatrix { n: n as u32, cells }, work)
}

/// Independent recomputation of the witness-count matrix: for every active
/// center, redo In/Out membership by fresh searches on that center's own
/// graph version, then sum the cross products. Row-major, row = source.
pub fn witness_count_oracle(oracle: &DynamicOracle) -> Vec<u32> {
    let n = oracle.vertex_count() as usize;
    let mut counts = vec![0u32; n * n];
    for (center, version) in oracle.centers() {
        let view = oracle
            .store()
            .version_view(version)
            .expect("registered center version is valid");
        let fwd = forward_adjacency(&view);
        let rev = forward_adjacency(&view.reversed());
        let (out_set, _) = search(&fwd, center.index());
        let (in_set, _) = search(&rev, center.index());
        for (u, &u_in) in in_set.iter().enumerate() {
            if !u_in {
                continue;
            }
            for (z, &z_out) in out_set.iter().enumerate() {
                if z_out {
                    counts[u * n + z] += 1;
                }
            }
        }
    }
    counts
}
