//! Triangle-star exchange moves and the family they generate from K6.
//!
//! A star-to-triangle move removes a degree-3 vertex and joins its three
//! neighbors pairwise; the inverse replaces a triangle by a new vertex
//! joined to its three corners. Closing K6 under both moves yields exactly
//! seven graphs, the obstructions to linkless embeddability; the Petersen
//! graph is the largest of them, and the closure is what the membership
//! certificates in this crate ultimately point at.

use std::collections::{BTreeMap, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;

use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::{Graph, Vertex};
use crate::smallgraphs::complete;

/// A site where an exchange move applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExchangeMove {
    /// Replace the star at a degree-3 vertex by a triangle.
    YDelta { center: Vertex },
    /// Replace a triangle by a star at a fresh vertex.
    DeltaY { triangle: (Vertex, Vertex, Vertex) },
}

/// Star-to-triangle at `center`, which must have degree exactly 3 in a
/// simple graph. Neighbor pairs that are already adjacent keep their single
/// edge, so the result is always simple (and smaller by that many edges).
pub fn y_delta(g: &Graph, center: Vertex) -> Result<Graph> {
    if !g.is_simple() {
        return Err(Error::input("exchange moves are defined on simple graphs"));
    }
    if !g.has_vertex(center) {
        return Err(Error::input(format!("no vertex {center}")));
    }
    let d = g.degree(center);
    if d != 3 {
        return Err(Error::input(format!(
            "vertex {center} has degree {d}, a star-to-triangle move needs degree 3"
        )));
    }
    let nb = g.neighbors(center);
    let mut h = g.delete_vertex(center)?;
    for i in 0..3 {
        for j in (i + 1)..3 {
            if !h.has_edge_between(nb[i], nb[j]) {
                h.add_edge(nb[i], nb[j]);
            }
        }
    }
    Ok(h)
}

/// Triangle-to-star on three mutually adjacent vertices. The new center is
/// labeled one past the current maximum vertex; edge count is preserved.
pub fn delta_y(g: &Graph, triangle: (Vertex, Vertex, Vertex)) -> Result<Graph> {
    if !g.is_simple() {
        return Err(Error::input("exchange moves are defined on simple graphs"));
    }
    let mut t = [triangle.0, triangle.1, triangle.2];
    t.sort_unstable();
    if t[0] == t[1] || t[1] == t[2] {
        return Err(Error::input("triangle vertices must be distinct"));
    }
    for &v in &t {
        if !g.has_vertex(v) {
            return Err(Error::input(format!("no vertex {v}")));
        }
    }
    let mut h = g.clone();
    for i in 0..3 {
        for j in (i + 1)..3 {
            match g.edge_between(t[i], t[j]) {
                Some(id) => h = h.delete_edge(id)?,
                None => {
                    return Err(Error::input(format!(
                        "vertices {} and {} are not adjacent, not a triangle",
                        t[i], t[j]
                    )))
                }
            }
        }
    }
    let center = g.vertices().last().expect("triangle implies vertices") + 1;
    h.add_vertex(center);
    for &v in &t {
        h.add_edge(v, center);
    }
    Ok(h)
}

/// Every applicable move on a simple graph: star sites in vertex order,
/// then triangle sites in lexicographic order.
pub fn legal_moves(g: &Graph) -> Vec<ExchangeMove> {
    assert!(g.is_simple(), "exchange moves are defined on simple graphs");
    let mut moves = Vec::new();
    for &v in g.vertices() {
        if g.degree(v) == 3 {
            moves.push(ExchangeMove::YDelta { center: v });
        }
    }
    let vs = g.vertices();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            if !g.has_edge_between(a, b) {
                continue;
            }
            for &c in &vs[j + 1..] {
                if g.has_edge_between(a, c) && g.has_edge_between(b, c) {
                    moves.push(ExchangeMove::DeltaY { triangle: (a, b, c) });
                }
            }
        }
    }
    moves
}

pub fn apply_move(g: &Graph, mv: &ExchangeMove) -> Result<Graph> {
    match *mv {
        ExchangeMove::YDelta { center } => y_delta(g, center),
        ExchangeMove::DeltaY { triangle } => delta_y(g, triangle),
    }
}

/// Closure of `seed` under both moves, up to isomorphism. Members are
/// canonical copies sorted by vertex count, then canonical form. Moves
/// whose result would exceed `max_vertices` are not explored, so the
/// returned set is the closure within that bound.
pub fn exchange_closure(seed: &Graph, max_vertices: usize) -> Result<Vec<Graph>> {
    if !seed.is_simple() {
        return Err(Error::input("exchange closures are defined on simple graphs"));
    }
    if seed.vertex_count() > max_vertices {
        return Err(Error::CapExceeded {
            size: seed.vertex_count(),
            cap: max_vertices,
        });
    }
    let start = canonical_graph(seed);
    let start_form = to_graph6(&start)?;
    let mut members: BTreeMap<String, Graph> = BTreeMap::new();
    let mut queue = VecDeque::from([start.clone()]);
    members.insert(start_form, start);
    while let Some(g) = queue.pop_front() {
        for mv in legal_moves(&g) {
            let h = apply_move(&g, &mv).expect("legal moves apply");
            if h.vertex_count() > max_vertices {
                continue;
            }
            let c = canonical_graph(&h);
            let form = to_graph6(&c)?;
            if !members.contains_key(&form) {
                queue.push_back(c.clone());
                members.insert(form, c);
            }
        }
    }
    let mut out: Vec<(String, Graph)> = members.into_iter().collect();
    out.sort_by(|(fa, a), (fb, b)| (a.vertex_count(), fa).cmp(&(b.vertex_count(), fb)));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

static FAMILY: OnceLock<Vec<Graph>> = OnceLock::new();

/// The seven obstruction graphs: the closure of K6 under both exchange
/// moves, smallest first, so member 1 is K6 and member 7 is the Petersen
/// graph. Computed once, then cached.
///
/// The closure stays within 10 vertices and every member keeps all 15
/// edges; both facts are asserted, so a miscomputed closure cannot leak
/// out as a family.
pub fn petersen_family() -> &'static [Graph] {
    FAMILY.get_or_init(|| {
        // 30 vertices is past any reachable size for a 15-edge closure
        // (no move creates isolated vertices), so nothing gets truncated.
        let family = exchange_closure(&complete(6), 30).expect("K6 is simple and small");
        assert_eq!(family.len(), 7, "the closure of K6 has exactly seven members");
        for g in &family {
            assert_eq!(g.edge_count(), 15, "exchange moves preserve the edge count here");
            assert!(g.vertex_count() <= 10, "no member outgrows the Petersen graph");
            assert!(g.is_connected());
        }
        family
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::planarity::is_planar;
    use crate::smallgraphs::{complete_bipartite, complete_multipartite, petersen};

    #[test]
    fn star_becomes_triangle() {
        // A claw collapses to a triangle on the leaves.
        let claw = complete_bipartite(1, 3);
        let h = y_delta(&claw, 0).unwrap();
        assert_eq!(h.vertices(), &[1, 2, 3]);
        assert_eq!(h.edge_count(), 3);
        assert!(h.has_edge_between(1, 2) && h.has_edge_between(1, 3) && h.has_edge_between(2, 3));
    }

    #[test]
    fn existing_edges_absorb_the_triangle() {
        // In K4 the neighbors are already mutually adjacent, so the move
        // only deletes: 6 edges down to 3.
        let h = y_delta(&complete(4), 0).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(canonical_form(&h), canonical_form(&complete(3)));
    }

    #[test]
    fn triangle_becomes_star() {
        let h = delta_y(&complete(3), (2, 0, 1)).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.degree(3), 3, "the fresh center picks the next label");
        assert_eq!(canonical_form(&h), canonical_form(&complete_bipartite(1, 3)));
    }

    #[test]
    fn the_moves_invert_each_other() {
        let g = complete(6);
        let grown = delta_y(&g, (0, 1, 2)).unwrap();
        assert_eq!(grown.vertex_count(), 7);
        assert_eq!(grown.edge_count(), 15);
        let back = y_delta(&grown, 6).unwrap();
        assert_eq!(canonical_form(&back), canonical_form(&g));
    }

    #[test]
    fn moves_validate_their_sites() {
        let g = complete(6);
        assert!(matches!(y_delta(&g, 0), Err(Error::Input(_))), "degree 5 is not 3");
        assert!(matches!(y_delta(&g, 9), Err(Error::Input(_))), "no such vertex");
        assert!(matches!(delta_y(&g, (0, 0, 1)), Err(Error::Input(_))));
        let p = crate::smallgraphs::path(3);
        assert!(matches!(delta_y(&p, (0, 1, 2)), Err(Error::Input(_))), "not a triangle");
        let mut m = Graph::with_vertices(2);
        m.add_edge(0, 1);
        m.add_edge(0, 1);
        assert!(matches!(y_delta(&m, 0), Err(Error::Input(_))));
    }

    #[test]
    fn move_listing_is_ordered() {
        let moves = legal_moves(&complete(4));
        assert_eq!(moves.len(), 8, "four star sites and four triangles");
        assert_eq!(moves[0], ExchangeMove::YDelta { center: 0 });
        assert_eq!(moves[4], ExchangeMove::DeltaY { triangle: (0, 1, 2) });
        assert_eq!(moves[7], ExchangeMove::DeltaY { triangle: (1, 2, 3) });
        assert!(legal_moves(&petersen()).len() == 10, "ten star sites, no triangles");
    }

    #[test]
    fn closure_of_k4_is_small() {
        // K4 <-> K3 and the claw by star moves, K4 -> K2,3 by the triangle
        // move, and K2,3 closes back into K4.
        let closure = exchange_closure(&complete(4), 10).unwrap();
        assert_eq!(closure.len(), 4);
        let forms: Vec<String> = closure.iter().map(canonical_form).collect();
        for g in [complete(4), complete(3), complete_bipartite(1, 3), complete_bipartite(2, 3)] {
            assert!(forms.contains(&canonical_form(&g)));
        }
    }

    #[test]
    fn family_members_and_sizes() {
        let family = petersen_family();
        assert_eq!(family.len(), 7);
        let sizes: Vec<usize> = family.iter().map(Graph::vertex_count).collect();
        assert_eq!(sizes, vec![6, 7, 7, 8, 8, 9, 10]);
        assert!(family.iter().all(|g| g.edge_count() == 15));
        assert_eq!(canonical_form(&family[0]), canonical_form(&complete(6)));
        assert_eq!(canonical_form(&family[6]), canonical_form(&petersen()));
    }

    #[test]
    fn family_contains_the_independently_built_members() {
        // Three members have well-known direct constructions: K6, the
        // complete tripartite K331, and the Petersen graph. The triangle
        // move on K6 gives the other seven-vertex member.
        let family = petersen_family();
        let forms: Vec<String> = family.iter().map(canonical_form).collect();
        assert!(forms.contains(&canonical_form(&complete(6))));
        assert!(forms.contains(&canonical_form(&petersen())));
        assert!(forms.contains(&canonical_form(&complete_multipartite(&[3, 3, 1]))));
        let grown = delta_y(&complete(6), (0, 1, 2)).unwrap();
        assert!(forms.contains(&canonical_form(&grown)));
        assert_ne!(
            canonical_form(&grown),
            canonical_form(&complete_multipartite(&[3, 3, 1])),
            "the two seven-vertex members are different graphs"
        );
    }

    #[test]
    fn family_is_closed_and_nonplanar() {
        let family = petersen_family();
        let forms: Vec<String> = family.iter().map(canonical_form).collect();
        for g in family {
            assert!(!is_planar(g).planar());
            assert!(g.min_degree() >= 3);
            for mv in legal_moves(g) {
                let h = apply_move(g, &mv).unwrap();
                assert_eq!(h.edge_count(), 15, "no move inside the family loses edges");
                assert!(forms.contains(&canonical_form(&h)));
            }
        }
    }

    #[test]
    fn closure_respects_the_vertex_bound() {
        assert!(matches!(
            exchange_closure(&complete(6), 5),
            Err(Error::CapExceeded { size: 6, cap: 5 })
        ));
        // With the bound at the seed size, triangle moves cannot fire.
        let closure = exchange_closure(&complete(6), 6).unwrap();
        assert_eq!(closure.len(), 1);
    }
}
