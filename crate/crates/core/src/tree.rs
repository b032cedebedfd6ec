//! Decremental reachability tree.
//!
//! A `ReachTree` answers "does the root reach v" (direction Out) or "does v
//! reach the root" (direction In) on one fixed graph version that only loses
//! edges. The nodes of the tree are strongly connected components, not
//! individual vertices: the tree keeps the SCC condensation of the region
//! reachable from the root's component and a per-vertex membership bitmap,
//! so queries are a single lookup.
//!
//! Deletion handling works in three layers:
//!
//! 1. Cross-component edges feed a support counter per component (live
//!    in-edges from components still in the tree). The condensation is a
//!    DAG, so a non-root component belongs to the tree exactly while its
//!    support is positive; a counter hitting zero removes the component and
//!    cascades along its out-edges. Each component is removed at most once.
//! 2. Edges inside a component are checked against two internal spanning
//!    certificates (an out-tree and an in-tree rooted at the component's
//!    anchor member). Killing a non-certificate edge cannot break strong
//!    connectivity and costs O(1).
//! 3. When a certificate edge dies, orphaned subtrees are reattached by
//!    scanning their members' edges. If some orphan cannot be reattached the
//!    component has genuinely fractured: its members are re-partitioned by a
//!    Tarjan pass restricted to the component, the fragments get fresh
//!    certificates and support counts, and removal cascades as in layer 1.
//!
//! An In tree is an Out tree of the reversed edge view; `delete_edges`
//! accepts store-oriented pairs and normalizes them internally.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::store::{EdgeView, Orientation, VertexId};

const NO_EDGE: u32 = u32::MAX;
const NO_VERTEX: u32 = u32::MAX;
const UNDEF: u32 = u32::MAX;

/// Tree orientation: Out answers root-reaches-v, In answers v-reaches-root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
}

/// Vertices removed from the tree by one deletion batch, ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DeltaReport {
    pub removed: Vec<VertexId>,
}

impl DeltaReport {
    pub fn is_empty(&self) -> bool {
        self.removed.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CertKind {
    Out,
    In,
}

#[derive(Debug, Clone)]
struct Comp {
    /// Sorted vertex indices. Taken (emptied) when the component is removed
    /// or split.
    members: Vec<u32>,
    /// Live cross in-edges from components still in the tree. Meaningless
    /// for the root component and for components outside the tree.
    support: u64,
    /// False once the component has been split into fragments.
    alive: bool,
    in_tree: bool,
}

#[derive(Debug)]
pub struct ReachTree {
    root: usize,
    direction: Direction,
    version: u32,
    n: usize,

    // Edges in tree orientation, sorted by (src, dst); the position in these
    // arrays is the edge id. out_start is a CSR over that order; in_adj lists
    // edge ids sorted by (dst, src) with in_start as its CSR.
    edge_src: Vec<u32>,
    edge_dst: Vec<u32>,
    edge_alive: Vec<bool>,
    out_start: Vec<u32>,
    in_start: Vec<u32>,
    in_adj: Vec<u32>,

    comp_of: Vec<u32>,
    comps: Vec<Comp>,
    root_comp: u32,
    membership: Vec<bool>,
    member_count: usize,

    // Certificate state, meaningful only for members of in-tree components
    // with more than one member. parent_* hold the edge id of the cert
    // parent edge, NO_EDGE for anchors and singletons.
    parent_out: Vec<u32>,
    parent_in: Vec<u32>,
    children_out: Vec<Vec<u32>>,
    children_in: Vec<Vec<u32>>,

    // Scratch: local_pos maps vertices to positions during restricted
    // Tarjan runs, flag marks visited/orphaned vertices. Both are reset to
    // their idle state before every return.
    local_pos: Vec<u32>,
    flag: Vec<bool>,

    work: u64,
}

impl ReachTree {
    /// Build a tree over `view` rooted at `root`. In trees are built by
    /// passing the reversed view together with `Direction::In`.
    pub fn build(view: &EdgeView<'_>, root: VertexId, direction: Direction) -> Result<Self> {
        let n = view.vertex_count();
        if root.get() == 0 || root.get() > n {
            return Err(Error::VertexOutOfRange { id: root.get(), n });
        }
        debug_assert_eq!(
            direction == Direction::In,
            view.orientation() == Orientation::Reversed,
            "In trees are built from reversed views"
        );
        let n = n as usize;

        let mut pairs: Vec<(u32, u32)> = view
            .edges()
            .map(|(a, b)| (a.index() as u32, b.index() as u32))
            .collect();
        pairs.sort_unstable();
        debug_assert!(pairs.windows(2).all(|w| w[0] != w[1]), "view holds duplicate pairs");
        let m = pairs.len();

        let mut edge_src = Vec::with_capacity(m);
        let mut edge_dst = Vec::with_capacity(m);
        for &(s, d) in &pairs {
            edge_src.push(s);
            edge_dst.push(d);
        }

        let mut out_start = vec![0u32; n + 1];
        for &s in &edge_src {
            out_start[s as usize + 1] += 1;
        }
        for i in 0..n {
            out_start[i + 1] += out_start[i];
        }

        let mut in_adj: Vec<u32> = (0..m as u32).collect();
        in_adj.sort_unstable_by_key(|&e| (edge_dst[e as usize], edge_src[e as usize]));
        let mut in_start = vec![0u32; n + 1];
        for &d in &edge_dst {
            in_start[d as usize + 1] += 1;
        }
        for i in 0..n {
            in_start[i + 1] += in_start[i];
        }

        let mut tree = ReachTree {
            root: root.index(),
            direction,
            version: view.version(),
            n,
            edge_src,
            edge_dst,
            edge_alive: vec![true; m],
            out_start,
            in_start,
            in_adj,
            comp_of: vec![0; n],
            comps: Vec::new(),
            root_comp: 0,
            membership: vec![false; n],
            member_count: 0,
            parent_out: vec![NO_EDGE; n],
            parent_in: vec![NO_EDGE; n],
            children_out: vec![Vec::new(); n],
            children_in: vec![Vec::new(); n],
            local_pos: vec![NO_VERTEX; n],
            flag: vec![false; n],
            work: 0,
        };
        tree.init_components();
        Ok(tree)
    }

    pub fn root(&self) -> VertexId {
        VertexId::from_index(self.root)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    /// Cumulative edges and vertices touched while building and maintaining
    /// the tree.
    pub fn work(&self) -> u64 {
        self.work
    }

    pub fn member_count(&self) -> usize {
        self.member_count
    }

    /// O(1) membership test: does the root reach `v` (Out) or does `v` reach
    /// the root (In)? Out-of-range vertices are never members.
    pub fn reaches(&self, v: VertexId) -> bool {
        v.get() >= 1 && v.get() <= self.n as u32 && self.membership[v.index()]
    }

    /// Current membership set, ascending.
    pub fn members(&self) -> Vec<VertexId> {
        self.membership
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m)
            .map(|(i, _)| VertexId::from_index(i))
            .collect()
    }

    /// Member sets of the live condensation nodes in the tree, each sorted.
    pub fn scc_nodes(&self) -> Vec<Vec<VertexId>> {
        self.comps
            .iter()
            .filter(|c| c.alive && c.in_tree)
            .map(|c| c.members.iter().map(|&v| VertexId::from_index(v as usize)).collect())
            .collect()
    }

    /// Remove a batch of store-oriented edge pairs from the tree's view and
    /// report every vertex that lost membership. Pairs not present (wrong
    /// version, already dead, out of range) are skipped.
    pub fn delete_edges(&mut self, killed: &[(VertexId, VertexId)]) -> DeltaReport {
        let mut dirty: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        let mut seeds: Vec<u32> = Vec::new();

        for &(a, b) in killed {
            let (sv, dv) = match self.direction {
                Direction::Out => (a, b),
                Direction::In => (b, a),
            };
            if sv.get() == 0 || sv.get() > self.n as u32 || dv.get() == 0 || dv.get() > self.n as u32 {
                continue;
            }
            let (s, d) = (sv.index() as u32, dv.index() as u32);
            let Some(e) = self.find_edge(s, d) else { continue };
            if !self.edge_alive[e] {
                continue;
            }
            self.edge_alive[e] = false;
            self.work += 1;

            let cs = self.comp_of[s as usize];
            let cd = self.comp_of[d as usize];
            if cs == cd {
                if self.comps[cs as usize].in_tree {
                    dirty.entry(cs).or_default().push(e as u32);
                }
            } else if self.comps[cs as usize].in_tree && self.comps[cd as usize].in_tree {
                let sup = &mut self.comps[cd as usize].support;
                debug_assert!(*sup > 0, "support undercount");
                *sup -= 1;
                self.work += 1;
                if *sup == 0 && cd != self.root_comp {
                    seeds.push(cd);
                }
            }
        }

        for (&c, eids) in &dirty {
            let comp = &self.comps[c as usize];
            if !comp.alive || !comp.in_tree {
                continue;
            }
            let mut out_roots = Vec::new();
            let mut in_roots = Vec::new();
            for &e in eids {
                let d = self.edge_dst[e as usize] as usize;
                let s = self.edge_src[e as usize] as usize;
                if self.parent_out[d] == e {
                    out_roots.push(d as u32);
                }
                if self.parent_in[s] == e {
                    in_roots.push(s as u32);
                }
            }
            if out_roots.is_empty() && in_roots.is_empty() {
                continue;
            }
            let repaired = (out_roots.is_empty() || self.repair_cert(c, &out_roots, CertKind::Out))
                && (in_roots.is_empty() || self.repair_cert(c, &in_roots, CertKind::In));
            if !repaired {
                self.split_comp(c, &mut seeds);
            }
        }

        let mut removed: Vec<u32> = Vec::new();
        let mut queue: VecDeque<u32> = seeds.into();
        while let Some(c) = queue.pop_front() {
            {
                let comp = &mut self.comps[c as usize];
                if !comp.alive || !comp.in_tree {
                    continue;
                }
                debug_assert_ne!(c, self.root_comp, "root component is never removed");
                comp.in_tree = false;
            }
            let members = std::mem::take(&mut self.comps[c as usize].members);
            for &v in &members {
                self.membership[v as usize] = false;
                removed.push(v);
                self.work += 1;
                let (lo, hi) = self.out_range(v);
                for e in lo..hi {
                    self.work += 1;
                    if !self.edge_alive[e] {
                        continue;
                    }
                    let cw = self.comp_of[self.edge_dst[e] as usize];
                    if self.comps[cw as usize].in_tree {
                        let sup = &mut self.comps[cw as usize].support;
                        debug_assert!(*sup > 0, "support undercount");
                        *sup -= 1;
                        if *sup == 0 && cw != self.root_comp {
                            queue.push_back(cw);
                        }
                    }
                }
            }
            self.member_count -= members.len();
        }

        removed.sort_unstable();
        DeltaReport {
            removed: removed.into_iter().map(|v| VertexId::from_index(v as usize)).collect(),
        }
    }

    fn out_range(&self, v: u32) -> (usize, usize) {
        (self.out_start[v as usize] as usize, self.out_start[v as usize + 1] as usize)
    }

    fn in_range(&self, v: u32) -> (usize, usize) {
        (self.in_start[v as usize] as usize, self.in_start[v as usize + 1] as usize)
    }

    fn find_edge(&self, s: u32, d: u32) -> Option<usize> {
        let (lo, hi) = self.out_range(s);
        self.edge_dst[lo..hi].binary_search(&d).ok().map(|p| lo + p)
    }

    fn init_components(&mut self) {
        let all: Vec<u32> = (0..self.n as u32).collect();
        let comps = self.tarjan_members(&all);
        for members in comps {
            let id = self.comps.len() as u32;
            for &v in &members {
                self.comp_of[v as usize] = id;
            }
            self.comps.push(Comp { members, support: 0, alive: true, in_tree: false });
        }
        self.root_comp = self.comp_of[self.root];

        // Reachable components from the root's component.
        let mut comp_adj: Vec<Vec<u32>> = vec![Vec::new(); self.comps.len()];
        for e in 0..self.edge_src.len() {
            let cs = self.comp_of[self.edge_src[e] as usize];
            let cd = self.comp_of[self.edge_dst[e] as usize];
            if cs != cd {
                comp_adj[cs as usize].push(cd);
            }
            self.work += 1;
        }
        let mut queue = VecDeque::new();
        self.comps[self.root_comp as usize].in_tree = true;
        queue.push_back(self.root_comp);
        while let Some(c) = queue.pop_front() {
            self.work += 1;
            for i in 0..comp_adj[c as usize].len() {
                let d = comp_adj[c as usize][i] as usize;
                if !self.comps[d].in_tree {
                    self.comps[d].in_tree = true;
                    queue.push_back(d as u32);
                }
            }
        }

        for c in 0..self.comps.len() {
            if !self.comps[c].in_tree {
                continue;
            }
            for i in 0..self.comps[c].members.len() {
                let v = self.comps[c].members[i];
                self.membership[v as usize] = true;
            }
            self.member_count += self.comps[c].members.len();
        }

        for e in 0..self.edge_src.len() {
            let cs = self.comp_of[self.edge_src[e] as usize] as usize;
            let cd = self.comp_of[self.edge_dst[e] as usize] as usize;
            if cs != cd && self.comps[cs].in_tree && self.comps[cd].in_tree {
                self.comps[cd].support += 1;
            }
        }

        for c in 0..self.comps.len() as u32 {
            if self.comps[c as usize].in_tree && self.comps[c as usize].members.len() > 1 {
                let ok = self.rebuild_certs(c);
                debug_assert!(ok, "fresh component must be strongly connected");
            }
        }
    }

    /// Strongly connected components of the subgraph induced by `verts` over
    /// live edges, in Tarjan emission order, each member list sorted.
    fn tarjan_members(&mut self, verts: &[u32]) -> Vec<Vec<u32>> {
        let k = verts.len();
        for (i, &v) in verts.iter().enumerate() {
            self.local_pos[v as usize] = i as u32;
        }
        let mut index = vec![UNDEF; k];
        let mut low = vec![0u32; k];
        let mut on_stack = vec![false; k];
        let mut stack: Vec<u32> = Vec::new();
        let mut call: Vec<(u32, u32)> = Vec::new();
        let mut next = 0u32;
        let mut out: Vec<Vec<u32>> = Vec::new();

        for start in 0..k as u32 {
            if index[start as usize] != UNDEF {
                continue;
            }
            index[start as usize] = next;
            low[start as usize] = next;
            next += 1;
            stack.push(start);
            on_stack[start as usize] = true;
            call.push((start, self.out_start[verts[start as usize] as usize]));

            while let Some(&(v, cur)) = call.last() {
                let vg = verts[v as usize] as usize;
                if cur < self.out_start[vg + 1] {
                    call.last_mut().unwrap().1 += 1;
                    let e = cur as usize;
                    self.work += 1;
                    if !self.edge_alive[e] {
                        continue;
                    }
                    let w = self.local_pos[self.edge_dst[e] as usize];
                    if w == NO_VERTEX {
                        continue;
                    }
                    if index[w as usize] == UNDEF {
                        index[w as usize] = next;
                        low[w as usize] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w as usize] = true;
                        call.push((w, self.out_start[self.edge_dst[e] as usize]));
                    } else if on_stack[w as usize] {
                        low[v as usize] = low[v as usize].min(index[w as usize]);
                    }
                } else {
                    call.pop();
                    if low[v as usize] == index[v as usize] {
                        let mut members = Vec::new();
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w as usize] = false;
                            members.push(verts[w as usize]);
                            if w == v {
                                break;
                            }
                        }
                        members.sort_unstable();
                        out.push(members);
                    }
                    if let Some(last) = call.last() {
                        let p = last.0 as usize;
                        low[p] = low[p].min(low[v as usize]);
                    }
                }
            }
        }

        for &v in verts {
            self.local_pos[v as usize] = NO_VERTEX;
        }
        out
    }

    /// Rebuild both certificates of component `c` by BFS from its anchor
    /// over live intra edges. Returns false when either search misses a
    /// member, i.e. the component is no longer strongly connected.
    fn rebuild_certs(&mut self, c: u32) -> bool {
        let members = self.comps[c as usize].members.clone();
        for &v in &members {
            self.parent_out[v as usize] = NO_EDGE;
            self.parent_in[v as usize] = NO_EDGE;
            self.children_out[v as usize].clear();
            self.children_in[v as usize].clear();
        }
        if members.len() <= 1 {
            return true;
        }
        let anchor = members[0];
        let out_ok = self.bfs_cert(c, anchor, members.len(), CertKind::Out);
        let in_ok = self.bfs_cert(c, anchor, members.len(), CertKind::In);
        out_ok && in_ok
    }

    fn bfs_cert(&mut self, c: u32, anchor: u32, member_count: usize, kind: CertKind) -> bool {
        let mut touched = vec![anchor];
        self.flag[anchor as usize] = true;
        let mut queue = VecDeque::new();
        queue.push_back(anchor);
        let mut covered = 1usize;
        while let Some(v) = queue.pop_front() {
            match kind {
                CertKind::Out => {
                    let (lo, hi) = self.out_range(v);
                    for e in lo..hi {
                        self.work += 1;
                        if !self.edge_alive[e] {
                            continue;
                        }
                        let w = self.edge_dst[e];
                        if self.comp_of[w as usize] != c || self.flag[w as usize] {
                            continue;
                        }
                        self.flag[w as usize] = true;
                        touched.push(w);
                        self.parent_out[w as usize] = e as u32;
                        self.children_out[v as usize].push(w);
                        covered += 1;
                        queue.push_back(w);
                    }
                }
                CertKind::In => {
                    let (lo, hi) = self.in_range(v);
                    for idx in lo..hi {
                        let e = self.in_adj[idx] as usize;
                        self.work += 1;
                        if !self.edge_alive[e] {
                            continue;
                        }
                        let w = self.edge_src[e];
                        if self.comp_of[w as usize] != c || self.flag[w as usize] {
                            continue;
                        }
                        self.flag[w as usize] = true;
                        touched.push(w);
                        self.parent_in[w as usize] = e as u32;
                        self.children_in[v as usize].push(w);
                        covered += 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        for &v in &touched {
            self.flag[v as usize] = false;
        }
        covered == member_count
    }

    fn cert_parent(&self, v: u32, kind: CertKind) -> u32 {
        match kind {
            CertKind::Out => self.parent_out[v as usize],
            CertKind::In => self.parent_in[v as usize],
        }
    }

    fn cert_parent_vertex(&self, e: u32, kind: CertKind) -> u32 {
        match kind {
            CertKind::Out => self.edge_src[e as usize],
            CertKind::In => self.edge_dst[e as usize],
        }
    }

    fn set_cert_parent(&mut self, v: u32, e: u32, kind: CertKind) {
        match kind {
            CertKind::Out => self.parent_out[v as usize] = e,
            CertKind::In => self.parent_in[v as usize] = e,
        }
    }

    fn detach_child(&mut self, parent: u32, child: u32, kind: CertKind) {
        let list = match kind {
            CertKind::Out => &mut self.children_out[parent as usize],
            CertKind::In => &mut self.children_in[parent as usize],
        };
        if let Some(pos) = list.iter().position(|&x| x == child) {
            list.swap_remove(pos);
        }
    }

    fn attach_child(&mut self, parent: u32, child: u32, kind: CertKind) {
        match kind {
            CertKind::Out => self.children_out[parent as usize].push(child),
            CertKind::In => self.children_in[parent as usize].push(child),
        }
    }

    /// Mark (or clear) the cert subtree rooted at `r`, collecting the
    /// vertices touched. Subtrees of detached roots are disjoint.
    fn mark_subtree(&mut self, r: u32, kind: CertKind, value: bool, touched: &mut Vec<u32>) {
        let mut stack = vec![r];
        while let Some(v) = stack.pop() {
            if self.flag[v as usize] == value {
                continue;
            }
            self.flag[v as usize] = value;
            touched.push(v);
            self.work += 1;
            let children = match kind {
                CertKind::Out => &self.children_out[v as usize],
                CertKind::In => &self.children_in[v as usize],
            };
            stack.extend_from_slice(children);
        }
    }

    /// Reattach the orphaned cert subtrees of component `c` after the cert
    /// edges feeding `dead_roots` were killed. Returns false when some
    /// orphan cannot be reattached, which means the component fractured.
    fn repair_cert(&mut self, c: u32, dead_roots: &[u32], kind: CertKind) -> bool {
        for &r in dead_roots {
            let e = self.cert_parent(r, kind);
            debug_assert!(e != NO_EDGE && !self.edge_alive[e as usize]);
            let p = self.cert_parent_vertex(e, kind);
            self.detach_child(p, r, kind);
            self.set_cert_parent(r, NO_EDGE, kind);
        }

        let mut orphans: Vec<u32> = Vec::new();
        for &r in dead_roots {
            self.mark_subtree(r, kind, true, &mut orphans);
        }
        let mut remaining = orphans.len();

        loop {
            let mut progress = false;
            for i in 0..orphans.len() {
                let v = orphans[i];
                if !self.flag[v as usize] {
                    continue;
                }
                let Some(e) = self.find_anchored_parent(c, v, kind) else { continue };
                // Rehang v (and with it its whole cert subtree) under the
                // anchored neighbor.
                let old = self.cert_parent(v, kind);
                if old != NO_EDGE {
                    let p = self.cert_parent_vertex(old, kind);
                    self.detach_child(p, v, kind);
                }
                self.set_cert_parent(v, e, kind);
                let p = self.cert_parent_vertex(e, kind);
                self.attach_child(p, v, kind);
                let mut rescued = Vec::new();
                self.mark_subtree(v, kind, false, &mut rescued);
                remaining -= rescued.len();
                progress = true;
            }
            if remaining == 0 {
                return true;
            }
            if !progress {
                for &v in &orphans {
                    self.flag[v as usize] = false;
                }
                return false;
            }
        }
    }

    /// A live intra edge from a non-orphaned member of `c` that can serve as
    /// `v`'s cert parent edge.
    fn find_anchored_parent(&mut self, c: u32, v: u32, kind: CertKind) -> Option<u32> {
        match kind {
            CertKind::Out => {
                let (lo, hi) = self.in_range(v);
                for idx in lo..hi {
                    let e = self.in_adj[idx] as usize;
                    self.work += 1;
                    if !self.edge_alive[e] {
                        continue;
                    }
                    let u = self.edge_src[e] as usize;
                    if self.comp_of[u] == c && !self.flag[u] {
                        return Some(e as u32);
                    }
                }
            }
            CertKind::In => {
                let (lo, hi) = self.out_range(v);
                for e in lo..hi {
                    self.work += 1;
                    if !self.edge_alive[e] {
                        continue;
                    }
                    let u = self.edge_dst[e] as usize;
                    if self.comp_of[u] == c && !self.flag[u] {
                        return Some(e as u32);
                    }
                }
            }
        }
        None
    }

    /// Re-partition a fractured component into its current strongly
    /// connected fragments, rebuild their certificates and supports, and
    /// seed the removal cascade with unsupported fragments.
    fn split_comp(&mut self, c: u32, seeds: &mut Vec<u32>) {
        let members = std::mem::take(&mut self.comps[c as usize].members);
        let frags = self.tarjan_members(&members);
        self.comps[c as usize].alive = false;
        self.comps[c as usize].in_tree = false;
        let was_root = c == self.root_comp;

        let first_new = self.comps.len() as u32;
        for frag in frags {
            let id = self.comps.len() as u32;
            for &v in &frag {
                self.comp_of[v as usize] = id;
            }
            self.comps.push(Comp { members: frag, support: 0, alive: true, in_tree: true });
        }
        if was_root {
            self.root_comp = self.comp_of[self.root];
        }

        for id in first_new..self.comps.len() as u32 {
            let ok = self.rebuild_certs(id);
            debug_assert!(ok, "tarjan fragment must be strongly connected");
            let members = self.comps[id as usize].members.clone();
            let mut support = 0u64;
            for &v in &members {
                let (lo, hi) = self.in_range(v);
                for idx in lo..hi {
                    let e = self.in_adj[idx] as usize;
                    self.work += 1;
                    if !self.edge_alive[e] {
                        continue;
                    }
                    let cu = self.comp_of[self.edge_src[e] as usize];
                    if cu != id && self.comps[cu as usize].in_tree {
                        support += 1;
                    }
                }
            }
            self.comps[id as usize].support = support;
            if support == 0 && id != self.root_comp {
                seeds.push(id);
            }
        }
    }
}
