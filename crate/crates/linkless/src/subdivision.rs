//! Exact search for topological K5 and K33 subgraphs.
//!
//! A subdivision is certified by a model: the branch vertices together with
//! one path per pattern edge, the paths sharing nothing but their declared
//! endpoints. The search fixes the branch set first and then packs the
//! paths one pattern pair at a time, so each subdivision subgraph of the
//! host is produced exactly once: the branch vertices of a subdivision
//! subgraph are forced (they are its degree-3-or-more vertices) and the
//! decomposition into paths is forced as well.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::{bits, Adj, EdgeId, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SubdivisionKind {
    K5,
    K33,
}

/// Pattern pairs for K5: all pairs over branch indices 0..5.
const K5_PAIRS: [(usize, usize); 10] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
];

/// Pattern pairs for K33: indices 0..3 form one side, 3..6 the other.
const K33_PAIRS: [(usize, usize); 9] = [
    (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
];

impl SubdivisionKind {
    pub fn branch_count(self) -> usize {
        match self {
            SubdivisionKind::K5 => 5,
            SubdivisionKind::K33 => 6,
        }
    }

    /// Degree of every branch vertex inside the subdivision.
    pub fn branch_degree(self) -> usize {
        match self {
            SubdivisionKind::K5 => 4,
            SubdivisionKind::K33 => 3,
        }
    }

    pub fn pairs(self) -> &'static [(usize, usize)] {
        match self {
            SubdivisionKind::K5 => &K5_PAIRS,
            SubdivisionKind::K33 => &K33_PAIRS,
        }
    }
}

/// One branch path of a subdivision model: the pattern pair it realizes
/// (as indices into `branch_vertices`) and its full vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BranchPath {
    pub ends: (usize, usize),
    pub vertices: Vec<Vertex>,
}

impl BranchPath {
    /// Vertices strictly between the two ends.
    pub fn interior(&self) -> &[Vertex] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// Certificate that a graph contains a subdivision of K5 or K33.
///
/// For K33 the first three branch vertices form one side of the
/// bipartition. `paths` follows [`SubdivisionKind::pairs`] order, and
/// `edge_set` lists every host edge the paths traverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SubdivisionModel {
    pub kind: SubdivisionKind,
    pub branch_vertices: Vec<Vertex>,
    pub paths: Vec<BranchPath>,
    pub edge_set: BTreeSet<EdgeId>,
}

impl SubdivisionModel {
    /// Checks the model against `g`: correct shape, paths that really run
    /// through `g`, disjointness, and an exactly matching edge set.
    pub fn validate(&self, g: &Graph) -> bool {
        let pairs = self.kind.pairs();
        let bc = self.kind.branch_count();
        if self.branch_vertices.len() != bc || self.paths.len() != pairs.len() {
            return false;
        }
        let branch: BTreeSet<Vertex> = self.branch_vertices.iter().copied().collect();
        if branch.len() != bc || !branch.iter().all(|&v| g.has_vertex(v)) {
            return false;
        }
        let mut interiors: BTreeSet<Vertex> = BTreeSet::new();
        let mut edges: BTreeSet<EdgeId> = BTreeSet::new();
        let mut edge_total = 0usize;
        for (path, &(a, b)) in self.paths.iter().zip(pairs) {
            if path.ends != (a, b) || path.vertices.len() < 2 {
                return false;
            }
            if path.vertices[0] != self.branch_vertices[a]
                || *path.vertices.last().unwrap() != self.branch_vertices[b]
            {
                return false;
            }
            let distinct: BTreeSet<Vertex> = path.vertices.iter().copied().collect();
            if distinct.len() != path.vertices.len() {
                return false;
            }
            for w in path.vertices.windows(2) {
                match g.edge_between(w[0], w[1]) {
                    Some(id) => {
                        edges.insert(id);
                        edge_total += 1;
                    }
                    None => return false,
                }
            }
            for &w in path.interior() {
                if branch.contains(&w) || !interiors.insert(w) {
                    return false;
                }
            }
        }
        edges.len() == edge_total && edges == self.edge_set
    }

    /// Every vertex the subdivision touches.
    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.paths
            .iter()
            .flat_map(|p| p.vertices.iter().copied())
            .collect()
    }
}

/// Runs `emit` on every subdivision subgraph of the simple graph `g`, K5
/// models before K33 models, each exactly once, in a fixed search order.
pub(crate) fn for_each_subdivision<F>(g: &Graph, emit: &mut F) -> ControlFlow<()>
where
    F: FnMut(SubdivisionModel) -> ControlFlow<()>,
{
    let adj = Adj::from_simple(g);
    let m = g.edge_count();
    for kind in [SubdivisionKind::K5, SubdivisionKind::K33] {
        let bc = kind.branch_count();
        if adj.n() < bc || m < kind.pairs().len() {
            continue;
        }
        let candidates: Vec<usize> = (0..adj.n())
            .filter(|&v| adj.row(v).count_ones() as usize >= kind.branch_degree())
            .collect();
        if candidates.len() < bc {
            continue;
        }
        let mut combo = Vec::with_capacity(bc);
        branch_combos(&adj, kind, &candidates, 0, &mut combo, emit)?;
    }
    ControlFlow::Continue(())
}

/// First subdivision in search order, if any.
pub(crate) fn find_first(g: &Graph) -> Option<SubdivisionModel> {
    let mut found = None;
    let _ = for_each_subdivision(g, &mut |model| {
        found = Some(model);
        ControlFlow::Break(())
    });
    found
}

/// All subdivision subgraphs, sorted by edge set (which identifies a
/// subgraph uniquely).
pub(crate) fn find_all(g: &Graph) -> Vec<SubdivisionModel> {
    let mut out = Vec::new();
    let _ = for_each_subdivision(g, &mut |model| {
        out.push(model);
        ControlFlow::Continue(())
    });
    out.sort_unstable_by(|a, b| a.edge_set.cmp(&b.edge_set));
    out
}

fn branch_combos<F>(
    adj: &Adj,
    kind: SubdivisionKind,
    candidates: &[usize],
    from: usize,
    combo: &mut Vec<usize>,
    emit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(SubdivisionModel) -> ControlFlow<()>,
{
    let bc = kind.branch_count();
    if combo.len() == bc {
        return with_branch_set(adj, kind, combo, emit);
    }
    let needed = bc - combo.len();
    for i in from..candidates.len() {
        if candidates.len() - i < needed {
            break;
        }
        combo.push(candidates[i]);
        branch_combos(adj, kind, candidates, i + 1, combo, emit)?;
        combo.pop();
    }
    ControlFlow::Continue(())
}

fn with_branch_set<F>(
    adj: &Adj,
    kind: SubdivisionKind,
    combo: &[usize],
    emit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(SubdivisionModel) -> ControlFlow<()>,
{
    match kind {
        SubdivisionKind::K5 => pack_paths(adj, kind, combo.to_vec(), emit),
        SubdivisionKind::K33 => {
            // A subdivision determines its bipartition up to swapping the
            // sides; keeping the smallest branch vertex on side A makes
            // each one count once.
            for i in 1..5 {
                for j in (i + 1)..6 {
                    let mut branch = vec![combo[0], combo[i], combo[j]];
                    for (k, &c) in combo.iter().enumerate() {
                        if k != 0 && k != i && k != j {
                            branch.push(c);
                        }
                    }
                    pack_paths(adj, kind, branch, emit)?;
                }
            }
            ControlFlow::Continue(())
        }
    }
}

struct Packer<'a, F> {
    adj: &'a Adj,
    kind: SubdivisionKind,
    branch: Vec<usize>,
    branch_mask: u64,
    /// Interior vertices committed by completed paths.
    used: u64,
    paths: Vec<Vec<usize>>,
    emit: &'a mut F,
}

fn pack_paths<F>(
    adj: &Adj,
    kind: SubdivisionKind,
    branch: Vec<usize>,
    emit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(SubdivisionModel) -> ControlFlow<()>,
{
    let branch_mask = branch.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut packer = Packer {
        adj,
        kind,
        branch,
        branch_mask,
        used: 0,
        paths: Vec::with_capacity(kind.pairs().len()),
        emit,
    };
    packer.pack(0)
}

impl<F> Packer<'_, F>
where
    F: FnMut(SubdivisionModel) -> ControlFlow<()>,
{
    fn pack(&mut self, pair_idx: usize) -> ControlFlow<()> {
        let pairs = self.kind.pairs();
        if pair_idx == pairs.len() {
            let model = self.model();
            return (self.emit)(model);
        }
        let (a, b) = pairs[pair_idx];
        let (x, y) = (self.branch[a], self.branch[b]);
        let mut path = vec![x];
        self.extend(pair_idx, y, &mut path, 0)
    }

    /// Grows the current path toward `y` over free interior vertices,
    /// ascending neighbor order. `visited` holds this path's interiors.
    fn extend(
        &mut self,
        pair_idx: usize,
        y: usize,
        path: &mut Vec<usize>,
        visited: u64,
    ) -> ControlFlow<()> {
        let v = *path.last().expect("path starts nonempty");
        let free = !(self.branch_mask | self.used | visited);
        for w in bits(self.adj.row(v) & (free | 1 << y)) {
            if w == y {
                path.push(y);
                self.used |= visited;
                self.paths.push(path.clone());
                self.pack(pair_idx + 1)?;
                self.paths.pop();
                self.used &= !visited;
                path.pop();
            } else {
                path.push(w);
                self.extend(pair_idx, y, path, visited | 1 << w)?;
                path.pop();
            }
        }
        ControlFlow::Continue(())
    }

    fn model(&self) -> SubdivisionModel {
        let branch_vertices: Vec<Vertex> =
            self.branch.iter().map(|&i| self.adj.label(i)).collect();
        let mut edge_set = BTreeSet::new();
        let mut paths = Vec::with_capacity(self.paths.len());
        for (p, &(a, b)) in self.paths.iter().zip(self.kind.pairs()) {
            for w in p.windows(2) {
                edge_set.insert(self.adj.edge_id(w[0], w[1]));
            }
            paths.push(BranchPath {
                ends: (a, b),
                vertices: p.iter().map(|&i| self.adj.label(i)).collect(),
            });
        }
        SubdivisionModel {
            kind: self.kind,
            branch_vertices,
            paths,
            edge_set,
        }
    }
}
