//! Census of all graphs on a given number of vertices, one per
//! isomorphism class.
//!
//! Built by vertex augmentation: every graph on `n` vertices arises from
//! some graph on `n - 1` vertices by adding one vertex with some
//! neighborhood, so extending every smaller representative with every
//! neighborhood and deduplicating by canonical form is exhaustive.

use std::collections::BTreeMap;

use crate::canon::canonical_graph;
use crate::graph::{Graph, Vertex};

/// All graphs on exactly `n` labeled-as-`0..n` vertices up to isomorphism,
/// as canonical representatives sorted by canonical form.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "the census grows too fast past 9 vertices");
    let mut current = vec![Graph::new()];
    for k in 1..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for g in &current {
            for mask in 0u32..(1 << (k - 1)) {
                let mut h = g.clone();
                let v = (k - 1) as Vertex;
                h.add_vertex(v);
                for i in 0..k - 1 {
                    if mask >> i & 1 == 1 {
                        h.add_edge(i as Vertex, v);
                    }
                }
                let c = canonical_graph(&h);
                let form = crate::format::to_graph6(&c).expect("census graphs are small and simple");
                next.entry(form).or_insert(c);
            }
        }
        current = next.into_values().collect();
    }
    current
}

/// The connected members of [`all_graphs`], same order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
