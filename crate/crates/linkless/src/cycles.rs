//! Enumeration of all simple cycles of a simple graph.
//!
//! Each cycle is reported once, as its vertex sequence rotated to start at
//! the cycle's smallest vertex and oriented so the second vertex is smaller
//! than the last. The result is sorted by length, then lexicographically.

use crate::error::{Error, Result};
use crate::graph::{bits, Adj, Graph, Vertex};

/// Default vertex cap for cycle enumeration; the cycle count grows
/// super-exponentially past this.
pub const DEFAULT_CYCLE_CAP: usize = 12;

/// All simple cycles of `g`, in the canonical order described above.
/// Errors if `g` is not simple or has more than `cap` vertices.
pub fn enumerate_cycles(g: &Graph, cap: usize) -> Result<Vec<Vec<Vertex>>> {
    if !g.is_simple() {
        return Err(Error::input("cycle enumeration requires a simple graph"));
    }
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded {
            size: g.vertex_count(),
            cap,
        });
    }
    Ok(all_cycles(g))
}

/// Cap-free enumeration for internal callers that have already bounded the
/// input.
pub(crate) fn all_cycles(g: &Graph) -> Vec<Vec<Vertex>> {
    let adj = Adj::from_simple(g);
    let mut out: Vec<Vec<Vertex>> = index_cycles(&adj)
        .into_iter()
        .map(|c| c.into_iter().map(|i| adj.label(i)).collect())
        .collect();
    // Vertex labels are increasing in index, so sorting by label sequences
    // matches sorting by index sequences.
    out.sort_unstable_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Cycles as index sequences: anchored at their minimum index, second
/// index smaller than the last, enumerated by DFS from each anchor over
/// larger indices only.
fn index_cycles(adj: &Adj) -> Vec<Vec<usize>> {
    let n = adj.n();
    let mut found = Vec::new();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.push(s);
        dfs(adj, s, 1 << s, &mut path, &mut found);
        path.pop();
    }
    found
}

fn dfs(adj: &Adj, s: usize, visited: u64, path: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
    let v = *path.last().expect("path holds the anchor");
    if path.len() >= 3 && adj.adjacent(v, s) && path[1] < v {
        found.push(path.clone());
    }
    let above_anchor = if s + 1 >= 64 { 0 } else { !((1u64 << (s + 1)) - 1) };
    for w in bits(adj.row(v) & above_anchor & !visited) {
        path.push(w);
        dfs(adj, s, visited | 1 << w, path, found);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    use crate::smallgraphs::{complete, complete_bipartite, cycle, path, petersen};

    /// Independent count: try every injective sequence over every vertex
    /// subset and dedupe by edge set, which determines a cycle uniquely.
    fn cycle_count_oracle(g: &Graph) -> usize {
        let adj = Adj::from_simple(g);
        let n = adj.n();
        let mut seen: BTreeSet<BTreeSet<(usize, usize)>> = BTreeSet::new();
        let mut seq: Vec<usize> = Vec::new();
        fn extend(
            adj: &Adj,
            pool: u64,
            seq: &mut Vec<usize>,
            seen: &mut BTreeSet<BTreeSet<(usize, usize)>>,
        ) {
            let last = *seq.last().unwrap();
            if seq.len() >= 3 && adj.adjacent(last, seq[0]) {
                let mut edges: BTreeSet<(usize, usize)> = seq
                    .windows(2)
                    .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                    .collect();
                edges.insert((seq[0].min(last), seq[0].max(last)));
                seen.insert(edges);
            }
            for w in bits(pool) {
                if adj.adjacent(last, w) {
                    seq.push(w);
                    extend(adj, pool & !(1 << w), seq, seen);
                    seq.pop();
                }
            }
        }
        for s in 0..n {
            seq.push(s);
            extend(&adj, !((1u64 << (s + 1)) - 1) & ((1 << n) - 1), &mut seq, &mut seen);
            seq.pop();
        }
        seen.len()
    }

    #[test]
    fn counts_on_small_graphs() {
        assert_eq!(enumerate_cycles(&complete(4), 12).unwrap().len(), 7);
        assert_eq!(enumerate_cycles(&cycle(5), 12).unwrap().len(), 1);
        assert_eq!(enumerate_cycles(&path(6), 12).unwrap().len(), 0);
        assert_eq!(enumerate_cycles(&complete(3), 12).unwrap().len(), 1);
        assert_eq!(enumerate_cycles(&Graph::with_vertices(4), 12).unwrap().len(), 0);
    }

    #[test]
    fn k6_matches_the_brute_force_oracle() {
        let g = complete(6);
        let cycles = enumerate_cycles(&g, 12).unwrap();
        assert_eq!(cycles.len(), cycle_count_oracle(&g));
        let triangles = cycles.iter().filter(|c| c.len() == 3).count();
        assert_eq!(triangles, 20);
    }

    #[test]
    fn bipartite_and_petersen_match_the_oracle() {
        let k33 = complete_bipartite(3, 3);
        assert_eq!(enumerate_cycles(&k33, 12).unwrap().len(), cycle_count_oracle(&k33));
        let p = petersen();
        let cycles = enumerate_cycles(&p, 12).unwrap();
        assert_eq!(cycles.len(), cycle_count_oracle(&p));
        assert_eq!(cycles.iter().filter(|c| c.len() == 5).count(), 12);
        assert!(cycles.iter().all(|c| c.len() != 10), "no Hamiltonian cycle exists");
    }

    #[test]
    fn representatives_are_canonical_and_sorted() {
        let cycles = enumerate_cycles(&complete(5), 12).unwrap();
        for c in &cycles {
            let min = *c.iter().min().unwrap();
            assert_eq!(c[0], min, "cycle starts at its smallest vertex");
            assert!(c[1] < c[c.len() - 1], "orientation fixed by second versus last");
            let distinct: BTreeSet<_> = c.iter().collect();
            assert_eq!(distinct.len(), c.len());
        }
        for w in cycles.windows(2) {
            assert!((w[0].len(), &w[0]) < (w[1].len(), &w[1]), "output is sorted");
        }
    }

    #[test]
    fn respects_the_cap_and_simplicity() {
        assert!(matches!(
            enumerate_cycles(&complete(7), 6),
            Err(Error::CapExceeded { size: 7, cap: 6 })
        ));
        let mut g = Graph::with_vertices(2);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        assert!(matches!(enumerate_cycles(&g, 12), Err(Error::Input(_))));
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_cycles(&petersen(), 12).unwrap();
        let b = enumerate_cycles(&petersen(), 12).unwrap();
        assert_eq!(a, b);
    }
}
