//! Property tests for the versioned store's view semantics.

use proptest::prelude::*;

use dynreach::{VersionedEdgeStore, VertexId};

const N: u32 = 8;

#[derive(Debug, Clone)]
enum Op {
    Insert { center: u32, others: Vec<(u32, bool)> },
    Delete { pairs: Vec<(u32, u32)> },
}

fn op_strategy() -> impl Strategy<Value = Op> {
    prop_oneof![
        (1..=N, prop::collection::vec((1..=N, any::<bool>()), 1..4))
            .prop_map(|(center, others)| Op::Insert { center, others }),
        prop::collection::vec((1..=N, 1..=N), 1..4).prop_map(|pairs| Op::Delete { pairs }),
    ]
}

fn apply(store: &mut VersionedEdgeStore, op: &Op) {
    match op {
        Op::Insert { center, others } => {
            let c = VertexId(*center);
            let mut batch: Vec<(VertexId, VertexId)> = Vec::new();
            for &(other, outward) in others {
                let o = VertexId(other);
                let pair = if outward { (c, o) } else { (o, c) };
                if !store.is_alive(pair.0, pair.1) && !batch.contains(&pair) {
                    batch.push(pair);
                }
            }
            if !batch.is_empty() {
                store.record_insertion(c, &batch).unwrap();
            }
        }
        Op::Delete { pairs } => {
            let batch: Vec<(VertexId, VertexId)> =
                pairs.iter().map(|&(a, b)| (VertexId(a), VertexId(b))).collect();
            store.record_deletion(&batch).unwrap();
        }
    }
}

fn view_pairs(store: &VersionedEdgeStore, version: u32) -> Vec<(u32, u32)> {
    let mut pairs: Vec<(u32, u32)> = store
        .version_view(version)
        .unwrap()
        .edges()
        .map(|(a, b)| (a.get(), b.get()))
        .collect();
    pairs.sort_unstable();
    pairs
}

proptest! {
    #[test]
    fn views_nest_monotonically(ops in prop::collection::vec(op_strategy(), 1..40)) {
        let mut store = VersionedEdgeStore::new(N).unwrap();
        let mut insertions = 0u32;
        for op in &ops {
            let before = store.current_version();
            apply(&mut store, op);
            if store.current_version() > before {
                insertions += 1;
            }
            prop_assert_eq!(store.current_version(), insertions);
            let mut previous: Vec<(u32, u32)> = Vec::new();
            for version in 0..=store.current_version() {
                let current = view_pairs(&store, version);
                prop_assert!(previous.iter().all(|p| current.contains(p)),
                    "view {} lost an edge of view {}", version, version.saturating_sub(1));
                previous = current;
            }
        }
    }

    #[test]
    fn killed_edges_vanish_from_every_version(ops in prop::collection::vec(op_strategy(), 1..40)) {
        let mut store = VersionedEdgeStore::new(N).unwrap();
        for op in &ops {
            if let Op::Delete { pairs } = op {
                let batch: Vec<(VertexId, VertexId)> =
                    pairs.iter().map(|&(a, b)| (VertexId(a), VertexId(b))).collect();
                let killed = store.record_deletion(&batch).unwrap();
                for record in killed {
                    let pair = (record.src.get(), record.dst.get());
                    for version in 0..=store.current_version() {
                        prop_assert!(!view_pairs(&store, version).contains(&pair));
                    }
                }
            } else {
                apply(&mut store, op);
            }
        }
    }

    #[test]
    fn replay_produces_identical_views(ops in prop::collection::vec(op_strategy(), 1..40)) {
        let mut first = VersionedEdgeStore::new(N).unwrap();
        let mut second = VersionedEdgeStore::new(N).unwrap();
        for op in &ops {
            apply(&mut first, op);
            apply(&mut second, op);
        }
        prop_assert_eq!(first.current_version(), second.current_version());
        for version in 0..=first.current_version() {
            prop_assert_eq!(view_pairs(&first, version), view_pairs(&second, version));
        }
    }
}
