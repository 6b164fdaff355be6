//! Constructors for the named graphs the test suites and search seeds use.

use crate::graph::{Graph, Vertex};

/// Complete graph on `0..n`, edges in lexicographic order.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in (u + 1)..n as Vertex {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complete bipartite graph with parts `0..a` and `a..a + b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph; part `k` occupies the next `parts[k]`
/// labels. Edges join every pair of vertices from different parts.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let part_of: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(k, &size)| std::iter::repeat(k).take(size))
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u as Vertex, v as Vertex));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Cycle 0-1-...-(n-1)-0. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n)
        .map(|i| (i as Vertex, ((i + 1) % n) as Vertex))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Path 0-1-...-(n-1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| ((i - 1) as Vertex, i as Vertex)).collect();
    Graph::from_edges(n, &edges)
}

/// The Petersen graph: outer cycle 0..5, inner pentagram 5..10 stepping by
/// two, spokes `i` to `i + 5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5u32 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    for i in 0..5u32 {
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_match_the_formulas() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(complete_multipartite(&[3, 3, 1]).edge_count(), 15);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(path(6).edge_count(), 5);
        assert_eq!(path(1).edge_count(), 0);
    }

    #[test]
    fn petersen_is_cubic_with_girth_five() {
        let p = petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.vertices().iter().all(|&v| p.degree(v) == 3));
        assert_eq!(p.girth(), Some(5));
    }

    #[test]
    fn multipartite_parts_are_independent_sets() {
        let g = complete_multipartite(&[3, 3, 1]);
        for u in 0..3 {
            for v in (u + 1)..3 {
                assert!(!g.has_edge_between(u, v));
                assert!(!g.has_edge_between(u + 3, v + 3));
            }
        }
        assert_eq!(g.degree(6), 6, "the singleton part sees everyone");
    }
}
