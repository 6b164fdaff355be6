//! Finite undirected multigraphs with stable edge identities.
//!
//! Loops and parallel edges are allowed; deletion and contraction are pure
//! (they return a new graph) and never renumber surviving edges, so an edge
//! id recorded in a certificate stays meaningful across the operations that
//! produced the certificate.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type Vertex = u32;
pub type EdgeId = u32;

/// An undirected edge. `u == v` is a loop. Endpoints are stored as given;
/// use [`Edge::key`] for an orientation-free view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// Endpoints as an ordered pair `(min, max)`.
    pub fn key(&self) -> (Vertex, Vertex) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    pub fn touches(&self, w: Vertex) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint opposite `w`. For a loop at `w` this is `w` itself.
    pub fn other(&self, w: Vertex) -> Vertex {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected multigraph. Vertices are kept strictly increasing; edges keep
/// their insertion order and their ids survive deletions untouched.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Graph on vertices `0..n` with no edges.
    pub fn with_vertices(n: usize) -> Self {
        Graph {
            vertices: (0..n as Vertex).collect(),
            edges: Vec::new(),
        }
    }

    /// Graph on vertices `0..n` with the given edges, ids assigned in order.
    ///
    /// Panics if an endpoint is out of range; this constructor is for
    /// statically known graphs, not for user input.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) leaves the vertex range 0..{n}"
            );
            g.push_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    /// Lowest-id edge joining `u` and `v`, if any. `u == v` looks up a loop.
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.edges
            .iter()
            .filter(|e| e.key() == (u.min(v), u.max(v)))
            .map(|e| e.id)
            .min()
    }

    pub fn has_edge_between(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Adds an isolated vertex. Re-adding an existing vertex is a no-op.
    pub fn add_vertex(&mut self, v: Vertex) {
        if let Err(pos) = self.vertices.binary_search(&v) {
            self.vertices.insert(pos, v);
        }
    }

    /// Adds an edge with a fresh id (one past the current maximum) and
    /// returns that id. Both endpoints must already exist.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> EdgeId {
        assert!(self.has_vertex(u), "endpoint {u} is not a vertex");
        assert!(self.has_vertex(v), "endpoint {v} is not a vertex");
        self.push_edge(u, v)
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex) -> EdgeId {
        let id = self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0);
        self.edges.push(Edge { id, u, v });
        id
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }

    /// Sorted distinct neighbors of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .edges
            .iter()
            .filter(|e| e.touches(v) && !e.is_loop())
            .map(|e| e.other(v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|e| !e.is_loop() && seen.insert(e.key()))
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices.iter().map(|&v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        self.vertices
            .iter()
            .map(|&v| self.degree(v))
            .min()
            .unwrap_or(0)
    }

    /// Deletes one edge, keeping both endpoints even if they become isolated.
    pub fn delete_edge(&self, id: EdgeId) -> Result<Graph> {
        if self.edge(id).is_none() {
            return Err(Error::input(format!("no edge with id {id}")));
        }
        let mut g = self.clone();
        g.edges.retain(|e| e.id != id);
        Ok(g)
    }

    /// Contracts a non-loop edge: both endpoints merge into the smaller
    /// endpoint label, the contracted edge disappears, and every other edge
    /// survives under its old id with endpoints rewritten. Loops and
    /// parallel edges created by the merge are kept.
    pub fn contract_edge(&self, id: EdgeId) -> Result<Graph> {
        let e = self
            .edge(id)
            .ok_or_else(|| Error::input(format!("no edge with id {id}")))?;
        if e.is_loop() {
            return Err(Error::input(format!("edge {id} is a loop and cannot be contracted")));
        }
        let keep = e.u.min(e.v);
        let gone = e.u.max(e.v);
        let mut g = Graph {
            vertices: self.vertices.iter().copied().filter(|&v| v != gone).collect(),
            edges: Vec::with_capacity(self.edges.len() - 1),
        };
        for f in &self.edges {
            if f.id == id {
                continue;
            }
            let map = |w| if w == gone { keep } else { w };
            g.edges.push(Edge {
                id: f.id,
                u: map(f.u),
                v: map(f.v),
            });
        }
        Ok(g)
    }

    /// Deletes a vertex together with every incident edge.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Graph> {
        if !self.has_vertex(v) {
            return Err(Error::input(format!("no vertex {v}")));
        }
        Ok(Graph {
            vertices: self.vertices.iter().copied().filter(|&w| w != v).collect(),
            edges: self.edges.iter().copied().filter(|e| !e.touches(v)).collect(),
        })
    }

    /// Removes loops and, in each parallel class, every edge except the one
    /// with the smallest id. The vertex set is unchanged.
    pub fn simplify(&self) -> Graph {
        let mut keep: BTreeSet<EdgeId> = BTreeSet::new();
        let mut best: std::collections::BTreeMap<(Vertex, Vertex), EdgeId> = Default::default();
        for e in &self.edges {
            if e.is_loop() {
                continue;
            }
            let slot = best.entry(e.key()).or_insert(e.id);
            *slot = (*slot).min(e.id);
        }
        keep.extend(best.values());
        Graph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().copied().filter(|e| keep.contains(&e.id)).collect(),
        }
    }

    /// Subgraph spanned by the given edge ids, on exactly the vertices those
    /// edges touch. Unknown ids are an error.
    pub fn edge_subgraph(&self, ids: &BTreeSet<EdgeId>) -> Result<Graph> {
        let mut vs = BTreeSet::new();
        let mut edges = Vec::new();
        for e in &self.edges {
            if ids.contains(&e.id) {
                vs.insert(e.u);
                vs.insert(e.v);
                edges.push(*e);
            }
        }
        if edges.len() != ids.len() {
            return Err(Error::input("edge subgraph refers to unknown edge ids".to_string()));
        }
        Ok(Graph {
            vertices: vs.into_iter().collect(),
            edges,
        })
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp: Vec<Vec<Vertex>> = Vec::new();
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        for &s in &self.vertices {
            if seen.contains(&s) {
                continue;
            }
            let mut stack = vec![s];
            let mut here = BTreeSet::new();
            here.insert(s);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if here.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen.extend(here.iter().copied());
            comp.push(here.into_iter().collect());
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabels vertex `vertices()[i]` to `names[i]`, keeping edge ids.
    /// `names` must be distinct and of matching length.
    pub fn relabel(&self, names: &[Vertex]) -> Graph {
        assert_eq!(names.len(), self.vertices.len(), "relabel length mismatch");
        let mut distinct: Vec<Vertex> = names.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        assert_eq!(distinct.len(), names.len(), "relabel names must be distinct");
        let map = |w: Vertex| {
            let i = self.vertices.binary_search(&w).expect("endpoint exists");
            names[i]
        };
        Graph {
            vertices: distinct,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    id: e.id,
                    u: map(e.u),
                    v: map(e.v),
                })
                .collect(),
        }
    }

    /// Length of a shortest cycle in the underlying simple graph, or `None`
    /// for forests. Loops and parallel edges are ignored.
    pub fn girth(&self) -> Option<usize> {
        let g = self.simplify();
        let mut best: Option<usize> = None;
        for &s in &g.vertices {
            // BFS from s; a non-tree edge between ranks d1, d2 closes a cycle
            // through s of length d1 + d2 + 1.
            let mut dist: std::collections::BTreeMap<Vertex, usize> = Default::default();
            let mut parent: std::collections::BTreeMap<Vertex, Vertex> = Default::default();
            dist.insert(s, 0);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in g.neighbors(v) {
                    if !dist.contains_key(&w) {
                        dist.insert(w, dist[&v] + 1);
                        parent.insert(w, v);
                        queue.push_back(w);
                    } else if parent.get(&v) != Some(&w) && parent.get(&w) != Some(&v) {
                        let len = dist[&v] + dist[&w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Vertex connectivity of a simple graph: 0 if disconnected or trivial,
    /// `n - 1` for complete graphs, otherwise the smallest number of
    /// vertices whose removal disconnects the graph.
    pub fn vertex_connectivity(&self) -> usize {
        assert!(self.is_simple(), "vertex connectivity requires a simple graph");
        let n = self.vertex_count();
        if n <= 1 || !self.is_connected() {
            return 0;
        }
        let adj = Adj::from_simple(self);
        if adj.degrees().iter().all(|&d| d == n - 1) {
            return n - 1;
        }
        // Menger: min over non-adjacent pairs of the max number of
        // internally disjoint paths, by unit-capacity flow with split
        // vertices.
        let mut best = n - 1;
        for a in 0..n {
            for b in 0..n {
                if a == b || adj.adjacent(a, b) {
                    continue;
                }
                best = best.min(adj.disjoint_path_count(a, b, best));
            }
        }
        best
    }
}

/// Dense index-based view of a simple graph for the search kernels.
///
/// Vertex `i` here is `labels()[i]` in the source graph; adjacency is a row
/// of bits per vertex. At most 64 vertices.
#[derive(Debug, Clone)]
pub(crate) struct Adj {
    n: usize,
    rows: Vec<u64>,
    labels: Vec<Vertex>,
    /// Edge id for the pair `(i, j)` at `i * n + j`, `EdgeId::MAX` if absent.
    ids: Vec<EdgeId>,
}

impl Adj {
    pub fn from_simple(g: &Graph) -> Adj {
        assert!(g.is_simple(), "index view requires a simple graph");
        let n = g.vertex_count();
        assert!(n <= 64, "index view supports at most 64 vertices");
        let labels: Vec<Vertex> = g.vertices().to_vec();
        let index = |w: Vertex| labels.binary_search(&w).expect("endpoint exists");
        let mut rows = vec![0u64; n];
        let mut ids = vec![EdgeId::MAX; n * n];
        for e in g.edges() {
            let (i, j) = (index(e.u), index(e.v));
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
            ids[i * n + j] = e.id;
            ids[j * n + i] = e.id;
        }
        Adj { n, rows, labels, ids }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> Vertex {
        self.labels[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn edge_id(&self, i: usize, j: usize) -> EdgeId {
        self.ids[i * self.n + j]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// Union of the neighborhoods of every vertex in `set`.
    pub fn neighborhood(&self, set: u64) -> u64 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.rows[i];
        }
        out & !set
    }

    /// Whether `set` induces a connected subgraph (the empty set counts).
    #[cfg(test)]
    pub fn is_connected_set(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        let start = 1u64 << set.trailing_zeros();
        let mut reach = start;
        loop {
            let grown = reach | (self.neighborhood(reach) & set);
            if grown == reach {
                return reach == set;
            }
            reach = grown;
        }
    }

    /// Max number of internally disjoint `a`..`b` paths for non-adjacent
    /// `a`, `b`, stopping early once `limit` paths are found.
    fn disjoint_path_count(&self, a: usize, b: usize, limit: usize) -> usize {
        // Unit-capacity digraph: each vertex v splits into v_in = 2v and
        // v_out = 2v + 1 joined by one unit; each edge {u, v} contributes
        // u_out -> v_in and v_out -> u_in. Augment with DFS.
        let n2 = 2 * self.n;
        let mut cap = vec![0u8; n2 * n2];
        for v in 0..self.n {
            cap[(2 * v) * n2 + 2 * v + 1] = 1;
        }
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && self.adjacent(u, v) {
                    cap[(2 * u + 1) * n2 + 2 * v] = 1;
                }
            }
        }
        let (src, dst) = (2 * a + 1, 2 * b);
        let mut flow = 0;
        while flow < limit {
            let mut seen = vec![false; n2];
            let mut prev = vec![usize::MAX; n2];
            let mut stack = vec![src];
            seen[src] = true;
            while let Some(x) = stack.pop() {
                for y in 0..n2 {
                    if !seen[y] && cap[x * n2 + y] > 0 {
                        seen[y] = true;
                        prev[y] = x;
                        stack.push(y);
                    }
                }
            }
            if !seen[dst] {
                break;
            }
            let mut y = dst;
            while y != src {
                let x = prev[y];
                cap[x * n2 + y] -= 1;
                cap[y * n2 + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }
}

/// Iterates the set bit positions of a mask in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
