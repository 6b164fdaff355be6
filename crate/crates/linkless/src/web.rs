//! The web of Kuratowski subgraphs of a graph.
//!
//! Nodes are the topological K5/K33 subgraphs. Two nodes are 1-adjacent
//! when one can be rerouted onto the other along a single path attached to
//! it; two K33 nodes are 2-adjacent when they share a three-branch side
//! and two further branch vertices with identical paths, their remaining
//! branch vertices differ, and an extra path joins the two shared branch
//! vertices away from both subgraphs. The web's connectivity is what makes
//! local certificates compose into global ones.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Adj, EdgeId, Graph, Vertex};
use crate::subdivision::{find_all, BranchPath, SubdivisionKind, SubdivisionModel};

/// Default vertex cap for web construction; the node count explodes past
/// this.
pub const DEFAULT_WEB_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AdjacencyKind {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "both")]
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WebLink {
    pub a: usize,
    pub b: usize,
    pub kind: AdjacencyKind,
}

/// All Kuratowski subgraphs of a graph plus their adjacency relation.
/// `links` holds node index pairs `a < b`.
#[derive(Debug, Clone, Serialize)]
pub struct KuratowskiWeb {
    pub nodes: Vec<SubdivisionModel>,
    pub links: Vec<WebLink>,
}

/// Every topological K5/K33 subgraph, each once, sorted by edge set.
/// Errors if the graph exceeds `cap` vertices.
pub fn enumerate_kuratowski_subgraphs(g: &Graph, cap: usize) -> Result<Vec<SubdivisionModel>> {
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded {
            size: g.vertex_count(),
            cap,
        });
    }
    Ok(find_all(&g.simplify()))
}

/// Whether one subgraph reroutes onto the other along a single path: some
/// path with distinct endpoints on the first subgraph and interior outside
/// it covers all edges the second has beyond the first (checked both ways
/// round, so the relation is symmetric).
pub fn is_1_adjacent(g: &Graph, h1: &SubdivisionModel, h2: &SubdivisionModel) -> bool {
    let s = g.simplify();
    debug_assert!(h1.validate(&s) && h2.validate(&s));
    let adj = Adj::from_simple(&s);
    single_path_reroute(&adj, h1, h2) || single_path_reroute(&adj, h2, h1)
}

fn single_path_reroute(adj: &Adj, base: &SubdivisionModel, target: &SubdivisionModel) -> bool {
    let extra: BTreeSet<EdgeId> = target.edge_set.difference(&base.edge_set).copied().collect();
    if extra.is_empty() {
        // Distinct Kuratowski subgraphs never nest, so this is the same
        // subgraph; a node is not adjacent to itself.
        return false;
    }
    let base_mask = vertex_mask(adj, &base.vertex_set());
    for x in bits(base_mask) {
        let mut edges = Vec::new();
        if path_covers(adj, base_mask, x, x, 0, &mut edges, &extra) {
            return true;
        }
    }
    false
}

/// Depth-first walk from `x` through vertices off the base subgraph,
/// ending on any other base vertex; true once some such path picks up all
/// of `extra`.
fn path_covers(
    adj: &Adj,
    base_mask: u64,
    x: usize,
    v: usize,
    visited: u64,
    edges: &mut Vec<EdgeId>,
    extra: &BTreeSet<EdgeId>,
) -> bool {
    for w in bits(adj.row(v) & !visited) {
        let id = adj.edge_id(v, w);
        if base_mask >> w & 1 == 1 {
            if w != x {
                edges.push(id);
                let done = extra.iter().all(|e| edges.contains(e));
                edges.pop();
                if done {
                    return true;
                }
            }
        } else {
            edges.push(id);
            let found = path_covers(adj, base_mask, x, w, visited | 1 << w, edges, extra);
            edges.pop();
            if found {
                return true;
            }
        }
    }
    false
}

/// The double-K33 relation: writing the shared side as u5, u6, u7 and the
/// shared branch vertices as u3, u4, the two subgraphs must consist of the
/// paths from u2 (respectively u1) and from u3, u4 to the side, with the
/// u3, u4 paths identical in both, all paths disjoint apart from shared
/// endpoints, u1 and u2 distinct, and one more path joining u3 to u4 with
/// only its endpoints on either subgraph.
pub fn is_2_adjacent(g: &Graph, h1: &SubdivisionModel, h2: &SubdivisionModel) -> bool {
    if h1.kind != SubdivisionKind::K33 || h2.kind != SubdivisionKind::K33 {
        return false;
    }
    let s = g.simplify();
    debug_assert!(h1.validate(&s) && h2.validate(&s));
    let sides1 = sides(h1);
    let sides2 = sides(h2);
    let mut both_vertices = h1.vertex_set();
    both_vertices.extend(h2.vertex_set());
    for (s1, o1) in [(&sides1.0, &sides1.1), (&sides1.1, &sides1.0)] {
        for (s2, o2) in [(&sides2.0, &sides2.1), (&sides2.1, &sides2.0)] {
            if s1.iter().collect::<BTreeSet<_>>() != s2.iter().collect::<BTreeSet<_>>() {
                continue;
            }
            for i in 0..3 {
                for j in (i + 1)..3 {
                    let (u3, u4) = (o1[i], o1[j]);
                    if !o2.contains(&u3) || !o2.contains(&u4) {
                        continue;
                    }
                    let u2 = o1[3 - i - j];
                    let u1 = *o2.iter().find(|&&v| v != u3 && v != u4).expect("three per side");
                    if u1 == u2 {
                        continue;
                    }
                    if !shared_paths_match(h1, h2, u3, u4, s1)
                        || !fresh_stars_disjoint(h1, h2, u2, u1, s1)
                    {
                        continue;
                    }
                    if connecting_path_exists(&s, u3, u4, &both_vertices) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Branch vertices split into the two sides of a K33 model.
fn sides(h: &SubdivisionModel) -> (Vec<Vertex>, Vec<Vertex>) {
    (h.branch_vertices[..3].to_vec(), h.branch_vertices[3..].to_vec())
}

fn branch_path<'m>(h: &'m SubdivisionModel, a: Vertex, b: Vertex) -> &'m BranchPath {
    h.paths
        .iter()
        .find(|p| {
            let ea = h.branch_vertices[p.ends.0];
            let eb = h.branch_vertices[p.ends.1];
            (ea, eb) == (a, b) || (ea, eb) == (b, a)
        })
        .expect("a K33 model has a path for every cross pair")
}

fn same_route(p: &BranchPath, q: &BranchPath) -> bool {
    let rev: Vec<Vertex> = q.vertices.iter().rev().copied().collect();
    p.vertices == q.vertices || p.vertices == rev
}

fn shared_paths_match(
    h1: &SubdivisionModel,
    h2: &SubdivisionModel,
    u3: Vertex,
    u4: Vertex,
    side: &[Vertex],
) -> bool {
    [u3, u4].iter().all(|&x| {
        side.iter()
            .all(|&sv| same_route(branch_path(h1, x, sv), branch_path(h2, x, sv)))
    })
}

/// The three paths from `u2` (in the first subgraph) and the three from
/// `u1` (in the second) may only meet at a common side endpoint.
fn fresh_stars_disjoint(
    h1: &SubdivisionModel,
    h2: &SubdivisionModel,
    u2: Vertex,
    u1: Vertex,
    side: &[Vertex],
) -> bool {
    for &sv in side {
        let p = branch_path(h1, u2, sv);
        let pv: BTreeSet<Vertex> = p.vertices.iter().copied().collect();
        for &sw in side {
            let q = branch_path(h2, u1, sw);
            let qv: BTreeSet<Vertex> = q.vertices.iter().copied().collect();
            let meet: BTreeSet<Vertex> = pv.intersection(&qv).copied().collect();
            let allowed: BTreeSet<Vertex> = if sv == sw {
                [sv].into_iter().collect()
            } else {
                BTreeSet::new()
            };
            if meet != allowed {
                return false;
            }
        }
    }
    true
}

/// Simple path from `a` to `b` whose interior avoids `forbidden` (which
/// contains both subgraphs; `a`, `b` themselves are exempt).
fn connecting_path_exists(g: &Graph, a: Vertex, b: Vertex, forbidden: &BTreeSet<Vertex>) -> bool {
    fn walk(g: &Graph, v: Vertex, b: Vertex, forbidden: &BTreeSet<Vertex>, seen: &mut BTreeSet<Vertex>) -> bool {
        for w in g.neighbors(v) {
            if w == b {
                return true;
            }
            if !forbidden.contains(&w) && seen.insert(w) && walk(g, w, b, forbidden, seen) {
                return true;
            }
        }
        false
    }
    let mut seen = BTreeSet::from([a]);
    walk(g, a, b, forbidden, &mut seen)
}

/// Builds the full web: all nodes, with every pair tested for both
/// adjacencies.
pub fn build_web(g: &Graph, cap: usize) -> Result<KuratowskiWeb> {
    let nodes = enumerate_kuratowski_subgraphs(g, cap)?;
    let s = g.simplify();
    let adj = Adj::from_simple(&s);
    let mut links = Vec::new();
    for a in 0..nodes.len() {
        for b in (a + 1)..nodes.len() {
            let one = single_path_reroute(&adj, &nodes[a], &nodes[b])
                || single_path_reroute(&adj, &nodes[b], &nodes[a]);
            let two = is_2_adjacent(&s, &nodes[a], &nodes[b]);
            let kind = match (one, two) {
                (true, true) => AdjacencyKind::Both,
                (true, false) => AdjacencyKind::One,
                (false, true) => AdjacencyKind::Two,
                (false, false) => continue,
            };
            links.push(WebLink { a, b, kind });
        }
    }
    Ok(KuratowskiWeb { nodes, links })
}

/// Whether the web is connected as an undirected graph on its nodes.
/// Webs with at most one node count as connected.
pub fn is_connected_web(web: &KuratowskiWeb) -> bool {
    let n = web.nodes.len();
    if n <= 1 {
        return true;
    }
    let mut reach = vec![false; n];
    reach[0] = true;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for l in &web.links {
            let next = match (l.a == i, l.b == i) {
                (true, _) => l.b,
                (_, true) => l.a,
                _ => continue,
            };
            if !reach[next] {
                reach[next] = true;
                stack.push(next);
            }
        }
    }
    reach.into_iter().all(|r| r)
}

fn vertex_mask(adj: &Adj, vs: &BTreeSet<Vertex>) -> u64 {
    let mut mask = 0;
    for (i, &label) in adj.labels().iter().enumerate() {
        if vs.contains(&label) {
            mask |= 1 << i;
        }
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smallgraphs::{complete, complete_bipartite, cycle};

    /// Model of a K33 drawn with plain edges, no subdivided paths.
    fn direct_k33(g: &Graph, side_a: [Vertex; 3], side_b: [Vertex; 3]) -> SubdivisionModel {
        let branch_vertices: Vec<Vertex> = side_a.iter().chain(&side_b).copied().collect();
        let mut paths = Vec::new();
        let mut edge_set = BTreeSet::new();
        for (i, &a) in side_a.iter().enumerate() {
            for (j, &b) in side_b.iter().enumerate() {
                paths.push(BranchPath {
                    ends: (i, j + 3),
                    vertices: vec![a, b],
                });
                edge_set.insert(g.edge_between(a, b).expect("side pairs are adjacent"));
            }
        }
        SubdivisionModel {
            kind: SubdivisionKind::K33,
            branch_vertices,
            paths,
            edge_set,
        }
    }

    #[test]
    fn planar_graphs_have_empty_webs() {
        let web = build_web(&complete(4), 10).unwrap();
        assert!(web.nodes.is_empty());
        assert!(web.links.is_empty());
        assert!(is_connected_web(&web), "vacuously connected");
        assert!(is_connected_web(&build_web(&cycle(9), 10).unwrap()));
    }

    #[test]
    fn k5_web_is_a_single_node() {
        let web = build_web(&complete(5), 10).unwrap();
        assert_eq!(web.nodes.len(), 1);
        assert!(web.links.is_empty());
        assert!(is_connected_web(&web));
    }

    #[test]
    fn k6_web_has_76_nodes_and_hangs_together() {
        let web = build_web(&complete(6), 10).unwrap();
        // 6 * 11 K5 subdivisions (six branch sets, pure or with the spare
        // vertex on one of ten paths) plus 10 K33 bipartitions.
        assert_eq!(web.nodes.len(), 76);
        assert!(is_connected_web(&web));
        assert!(
            web.links.iter().all(|l| l.kind == AdjacencyKind::One),
            "six vertices cannot host the seven distinct vertices 2-adjacency needs"
        );
    }

    #[test]
    fn rerouting_one_path_is_1_adjacency() {
        let g = complete(6);
        let nodes = enumerate_kuratowski_subgraphs(&g, 10).unwrap();
        // The K5 on vertices 0..5 drawn with plain edges, and the variant
        // routing the 0-1 connection through vertex 5.
        let pure: BTreeSet<EdgeId> = [0, 1, 2, 3, 5, 6, 7, 9, 10, 12].into_iter().collect();
        let rerouted: BTreeSet<EdgeId> = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12].into_iter().collect();
        let a = nodes.iter().find(|m| m.edge_set == pure).expect("plain K5 present");
        let b = nodes.iter().find(|m| m.edge_set == rerouted).expect("rerouted K5 present");
        assert!(is_1_adjacent(&g, a, b));
        assert!(is_1_adjacent(&g, b, a));
        assert!(!is_1_adjacent(&g, a, a), "a node is not adjacent to itself");
    }

    #[test]
    fn k5_and_k33_in_k6_are_not_1_adjacent() {
        let g = complete(6);
        let nodes = enumerate_kuratowski_subgraphs(&g, 10).unwrap();
        let pure: BTreeSet<EdgeId> = [0, 1, 2, 3, 5, 6, 7, 9, 10, 12].into_iter().collect();
        let k5 = nodes.iter().find(|m| m.edge_set == pure).unwrap();
        let k33 = nodes.iter().find(|m| m.kind == SubdivisionKind::K33).unwrap();
        // Each direction needs three or four fresh edges on one path; a
        // simple path cannot carry three edges at one vertex.
        assert!(!is_1_adjacent(&g, k5, k33));
    }

    #[test]
    fn seven_vertices_allow_2_adjacency() {
        let g = complete(7);
        let h1 = direct_k33(&g, [1, 2, 3], [4, 5, 6]);
        let h2 = direct_k33(&g, [0, 2, 3], [4, 5, 6]);
        assert!(h1.validate(&g) && h2.validate(&g));
        assert!(is_2_adjacent(&g, &h1, &h2));
        assert!(is_2_adjacent(&g, &h2, &h1), "the relation is symmetric");
        assert!(
            !is_1_adjacent(&g, &h1, &h2),
            "three fresh edges meet at one vertex, too many for one path"
        );
    }

    #[test]
    fn two_adjacency_needs_a_shared_side() {
        let g = complete(7);
        let h1 = direct_k33(&g, [1, 2, 3], [4, 5, 6]);
        // Shares only two side vertices with h1's sides.
        let h3 = direct_k33(&g, [1, 2, 4], [3, 5, 6]);
        assert!(h3.validate(&g));
        assert!(!is_2_adjacent(&g, &h1, &h3));
        assert!(!is_2_adjacent(&g, &h1, &h1), "u1 equals u2 on itself");
    }

    #[test]
    fn two_adjacency_needs_the_connecting_path() {
        // Remove the 2-3 edge: u3 and u4 have no route outside the two
        // subgraphs, which blanket all seven vertices.
        let mut g = complete(7);
        let e23 = g.edge_between(2, 3).unwrap();
        g = g.delete_edge(e23).unwrap();
        let h1 = direct_k33(&g, [1, 2, 3], [4, 5, 6]);
        let h2 = direct_k33(&g, [0, 2, 3], [4, 5, 6]);
        assert!(h1.validate(&g) && h2.validate(&g));
        assert!(!is_2_adjacent(&g, &h1, &h2));
    }

    #[test]
    fn witnessed_reroute_differences_form_single_paths() {
        // When a reroute of h1 covers h2's extra edges, those extras must
        // themselves be one path: the covering path's interior is off h1,
        // so its stretch inside h2 cannot break.
        let g = complete(6);
        let s = g.simplify();
        let adj = Adj::from_simple(&s);
        let nodes = enumerate_kuratowski_subgraphs(&g, 10).unwrap();
        let mut witnessed = 0;
        for h1 in &nodes {
            for h2 in &nodes {
                if h1.edge_set == h2.edge_set || !single_path_reroute(&adj, h1, h2) {
                    continue;
                }
                witnessed += 1;
                let extra: BTreeSet<EdgeId> =
                    h2.edge_set.difference(&h1.edge_set).copied().collect();
                let sub = g.edge_subgraph(&extra).unwrap();
                let degrees = sub.degree_sequence();
                assert!(sub.is_connected());
                assert!(degrees.iter().all(|&d| d <= 2));
                assert_eq!(sub.vertex_count(), sub.edge_count() + 1, "a path, not a cycle");
            }
        }
        assert!(witnessed > 0);
    }

    #[test]
    fn k33_web_is_one_node_too() {
        let web = build_web(&complete_bipartite(3, 3), 10).unwrap();
        assert_eq!(web.nodes.len(), 1);
        assert_eq!(web.nodes[0].kind, SubdivisionKind::K33);
        assert!(is_connected_web(&web));
    }

    #[test]
    fn disconnected_webs_are_detected() {
        // Two K5 blocks sharing nothing: each is a node, no adjacency.
        let mut edges = Vec::new();
        for base in [0u32, 5] {
            for i in 0..5 {
                for j in (i + 1)..5 {
                    edges.push((base + i, base + j));
                }
            }
        }
        let g = Graph::from_edges(10, &edges);
        let web = build_web(&g, 10).unwrap();
        assert_eq!(web.nodes.len(), 2);
        assert!(web.links.is_empty());
        assert!(!is_connected_web(&web));
    }

    #[test]
    fn web_respects_the_cap() {
        assert!(matches!(
            build_web(&complete(11), DEFAULT_WEB_CAP),
            Err(Error::CapExceeded { size: 11, cap: 10 })
        ));
    }
}
