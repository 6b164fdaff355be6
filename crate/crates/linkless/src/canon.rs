//! Canonical labelings of simple graphs.
//!
//! Two graphs get the same canonical form exactly when they are isomorphic,
//! so isomorphism checks and dedup both reduce to string equality. The form
//! is the graph6 line of the relabeling whose upper-triangle bit string
//! (column order, the graph6 bit order) is lexicographically largest-free:
//! we search for the minimum string over all vertex orders compatible with
//! an iterated-degree partition.

use std::cmp::Ordering;

use crate::format::to_graph6;
use crate::graph::{bits, Adj, Graph, Vertex};

/// Canonical graph6 line for a simple graph with at most 62 vertices.
/// Equal output means isomorphic input.
pub fn canonical_form(g: &Graph) -> String {
    to_graph6(&canonical_graph(g)).expect("canonical graph is simple and within graph6 range")
}

/// The canonically relabeled copy: vertices `0..n`, edges sorted by
/// endpoints with ids `0..m`.
pub fn canonical_graph(g: &Graph) -> Graph {
    assert!(g.is_simple(), "canonical labeling requires a simple graph");
    assert!(g.vertex_count() <= 62, "canonical labeling supports at most 62 vertices");
    let adj = Adj::from_simple(g);
    let order = canonical_order(&adj);
    let n = adj.n();
    let mut pos = vec![0usize; n];
    for (p, &x) in order.iter().enumerate() {
        pos[x] = p;
    }
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(g.edge_count());
    for i in 0..n {
        for j in bits(adj.row(i)) {
            if i < j {
                let (a, b) = (pos[i].min(pos[j]), pos[i].max(pos[j]));
                edges.push((a as Vertex, b as Vertex));
            }
        }
    }
    edges.sort_unstable();
    Graph::from_edges(n, &edges)
}

/// Orders the indices of `adj` canonically: position `p` holds index
/// `order[p]`.
fn canonical_order(adj: &Adj) -> Vec<usize> {
    let n = adj.n();
    if n == 0 {
        return Vec::new();
    }
    let colors = refined_colors(adj);
    let mut target = colors.clone();
    target.sort_unstable();
    let mut search = Search {
        adj,
        colors: &colors,
        target,
        placed: Vec::with_capacity(n),
        used: 0,
        prefix: Vec::with_capacity(n * (n - 1) / 2),
        best_bits: None,
        best_order: Vec::new(),
        generation: 0,
    };
    search.place(false);
    search.best_order
}

/// Iterated neighborhood refinement. Colors are canonical ids: they depend
/// only on the isomorphism class, not on the input labeling.
fn refined_colors(adj: &Adj) -> Vec<usize> {
    let n = adj.n();
    let mut colors = rank(adj.degrees());
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = bits(adj.row(v)).map(|w| colors[w]).collect();
                nc.sort_unstable();
                (colors[v], nc)
            })
            .collect();
        let next = rank(sigs);
        // Refinement only ever splits classes, so an equal class count
        // means the partition is stable.
        if class_count(&next) == class_count(&colors) {
            return next;
        }
        colors = next;
    }
}

/// Replaces each value by its rank among the sorted distinct values.
fn rank<T: Ord + Clone>(values: Vec<T>) -> Vec<usize> {
    let mut distinct = values.clone();
    distinct.sort();
    distinct.dedup();
    values
        .iter()
        .map(|v| distinct.binary_search(v).expect("value present"))
        .collect()
}

fn class_count(colors: &[usize]) -> usize {
    let mut seen = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

struct Search<'a> {
    adj: &'a Adj,
    colors: &'a [usize],
    /// Required color per position, ascending.
    target: Vec<usize>,
    placed: Vec<usize>,
    used: u64,
    /// Column-order adjacency bits of the placed prefix, one byte per bit.
    prefix: Vec<u8>,
    best_bits: Option<Vec<u8>>,
    best_order: Vec<usize>,
    /// Bumped on every improvement so ancestors can tell their prefix
    /// became a prefix of the new best.
    generation: u64,
}

impl Search<'_> {
    /// `tight` records that `prefix` equals the best string's prefix; when
    /// false and a best exists, `prefix` is strictly smaller, so the whole
    /// subtree beats the best.
    fn place(&mut self, mut tight: bool) {
        let n = self.adj.n();
        let p = self.placed.len();
        if p == n {
            if self.best_bits.is_none() || !tight {
                self.best_bits = Some(self.prefix.clone());
                self.best_order = self.placed.clone();
                self.generation += 1;
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for x in 0..n {
            if self.used >> x & 1 == 1 || self.colors[x] != self.target[p] {
                continue;
            }
            // Swapping interchangeable siblings is an automorphism fixing
            // everything placed so far; one of them is enough.
            if tried.iter().any(|&w| self.interchangeable(x, w)) {
                continue;
            }
            tried.push(x);
            let appended: Vec<u8> = self
                .placed
                .iter()
                .map(|&q| self.adj.adjacent(x, q) as u8)
                .collect();
            let child_tight = if let (true, Some(best)) = (tight, self.best_bits.as_ref()) {
                let seg = &best[self.prefix.len()..self.prefix.len() + p];
                match appended.as_slice().cmp(seg) {
                    Ordering::Greater => continue,
                    Ordering::Less => false,
                    Ordering::Equal => true,
                }
            } else {
                false
            };
            let generation = self.generation;
            self.placed.push(x);
            self.used |= 1 << x;
            self.prefix.extend_from_slice(&appended);
            self.place(child_tight);
            self.prefix.truncate(self.prefix.len() - appended.len());
            self.used &= !(1 << x);
            self.placed.pop();
            if self.generation != generation {
                // The new best ran through this node, so our prefix now
                // matches it exactly.
                tight = true;
            }
        }
    }

    fn interchangeable(&self, x: usize, w: usize) -> bool {
        let pair = 1 << x | 1 << w;
        self.adj.row(x) & !pair == self.adj.row(w) & !pair
    }
}
