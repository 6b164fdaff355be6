//! Exact minor containment and the linkless embeddability decision.
//!
//! A minor model certifies containment: one connected branch set of host
//! vertices per pattern vertex, pairwise disjoint, with a distinct host
//! edge realizing every pattern edge. The search assigns branch sets in
//! pattern vertex order, enumerating candidate connected sets smallest
//! first, so the first model found is reproducible run to run.
//!
//! A graph embeds linklessly in 3-space exactly when it has none of the
//! seven obstruction graphs of [`petersen_family`] as a minor, so the
//! decision is a scan over those patterns, returning the first hit as a
//! checkable certificate.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exchange::petersen_family;
use crate::graph::{bits, Adj, EdgeId, Graph, Vertex};

/// Default vertex cap for minor searches and the linkless decision.
pub const DEFAULT_DECIDE_CAP: usize = 16;

/// Certificate that a pattern is a minor of a host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    /// `branch_sets[k]`: sorted host vertices standing for the k-th
    /// pattern vertex, pattern vertices taken in sorted order.
    pub branch_sets: Vec<Vec<Vertex>>,
    /// One `(pattern edge id, host edge id)` pair per pattern edge, in
    /// pattern edge order; host ids are distinct.
    pub edge_map: Vec<(EdgeId, EdgeId)>,
}

/// Searches for `pattern` as a minor of `host`. `Ok(Some(model))` comes
/// with a verified certificate; `Ok(None)` means the exhaustive search
/// ruled a model out. The pattern must be simple; the host may carry loops
/// and parallel edges, which minors ignore.
pub fn has_minor(host: &Graph, pattern: &Graph, cap: usize) -> Result<Option<MinorModel>> {
    if host.vertex_count() > cap {
        return Err(Error::CapExceeded {
            size: host.vertex_count(),
            cap,
        });
    }
    if !pattern.is_simple() {
        return Err(Error::input("minor patterns must be simple graphs"));
    }
    Ok(search_minor(&host.simplify(), pattern))
}

/// Cap-free search core on an already simplified host.
pub(crate) fn search_minor(host: &Graph, pattern: &Graph) -> Option<MinorModel> {
    debug_assert!(host.is_simple());
    let pn = pattern.vertex_count();
    // Branch sets are disjoint and nonempty, and pattern edges map to
    // distinct host edges, so both counts bound the pattern.
    if pn > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let adj = Adj::from_simple(host);
    let pvs = pattern.vertices();
    let mut pat = vec![0u64; pn];
    for e in pattern.edges() {
        let i = pvs.binary_search(&e.u).expect("pattern endpoint");
        let j = pvs.binary_search(&e.v).expect("pattern endpoint");
        pat[i] |= 1 << j;
        pat[j] |= 1 << i;
    }
    let all = if adj.n() == 64 { !0u64 } else { (1u64 << adj.n()) - 1 };
    let mut search = Search {
        host: &adj,
        pat,
        branch: Vec::with_capacity(pn),
        used: 0,
        all,
    };
    if !search.place(0) {
        return None;
    }
    let model = build_model(&adj, pattern, &search.branch);
    debug_assert!(verify_minor_model(host, pattern, &model));
    Some(model)
}

struct Search<'a> {
    host: &'a Adj,
    pat: Vec<u64>,
    branch: Vec<u64>,
    used: u64,
    all: u64,
}

impl Search<'_> {
    /// Assigns a branch set to pattern vertex `k`; true once all are
    /// placed.
    fn place(&mut self, k: usize) -> bool {
        if k == self.pat.len() {
            return true;
        }
        let free = self.all & !self.used;
        let remaining = self.pat.len() - k;
        if (free.count_ones() as usize) < remaining {
            return false;
        }
        // Later pattern vertices need one free vertex each at minimum.
        let max_size = free.count_ones() as usize - (remaining - 1);
        for root in bits(free) {
            // Candidate sets whose minimum is `root`: grow within the free
            // vertices at or above it, so each connected set comes up once.
            let univ = free & !((1u64 << root) - 1);
            let cand = self.host.row(root) & univ;
            if self.grow(k, 1 << root, cand, 0, max_size, univ) {
                return true;
            }
        }
        false
    }

    /// Connected-set enumeration: try the current set, then extend through
    /// each candidate in turn, excluding it afterwards so every connected
    /// subset of `univ` shows up exactly once, smallest first.
    fn grow(&mut self, k: usize, set: u64, cand: u64, excluded: u64, max_size: usize, univ: u64) -> bool {
        if self.commit(k, set) {
            return true;
        }
        if set.count_ones() as usize >= max_size {
            return false;
        }
        let mut cand = cand;
        let mut excluded = excluded;
        while cand != 0 {
            let v = cand & cand.wrapping_neg();
            cand &= !v;
            let vi = v.trailing_zeros() as usize;
            let added = self.host.row(vi) & univ & !(set | v | excluded);
            if self.grow(k, set | v, cand | added, excluded, max_size, univ) {
                return true;
            }
            excluded |= v;
        }
        false
    }

    /// Accepts `set` for pattern vertex `k` if it touches every placed
    /// pattern neighbor and can still reach enough future ones.
    fn commit(&mut self, k: usize, set: u64) -> bool {
        let nb = self.host.neighborhood(set);
        let placed_mask = (1u64 << k) - 1;
        for j in bits(self.pat[k] & placed_mask) {
            if nb & self.branch[j] == 0 {
                return false;
            }
        }
        let later = (self.pat[k] & !placed_mask & !(1 << k)).count_ones();
        let future_free = self.all & !self.used & !set;
        if ((nb & future_free).count_ones()) < later {
            return false;
        }
        self.branch.push(set);
        self.used |= set;
        if self.place(k + 1) {
            return true;
        }
        self.used &= !set;
        self.branch.pop();
        false
    }
}

fn build_model(adj: &Adj, pattern: &Graph, branch: &[u64]) -> MinorModel {
    let pvs = pattern.vertices();
    let branch_sets: Vec<Vec<Vertex>> = branch
        .iter()
        .map(|&mask| bits(mask).map(|i| adj.label(i)).collect())
        .collect();
    let mut edge_map = Vec::with_capacity(pattern.edge_count());
    for e in pattern.edges() {
        let i = pvs.binary_search(&e.u).expect("pattern endpoint");
        let j = pvs.binary_search(&e.v).expect("pattern endpoint");
        let host_id = bits(branch[i])
            .flat_map(|x| bits(adj.row(x) & branch[j]).map(move |y| adj.edge_id(x, y)))
            .min()
            .expect("committed sets touch");
        edge_map.push((e.id, host_id));
    }
    MinorModel { branch_sets, edge_map }
}

/// Checks a model against arbitrary host and pattern graphs: disjoint
/// nonempty connected branch sets, and a distinct host edge between the
/// right branch sets for every pattern edge, each pattern edge covered
/// exactly once.
pub fn verify_minor_model(host: &Graph, pattern: &Graph, model: &MinorModel) -> bool {
    if !pattern.is_simple() {
        return false;
    }
    let pvs = pattern.vertices();
    if model.branch_sets.len() != pvs.len() {
        return false;
    }
    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    for set in &model.branch_sets {
        if set.is_empty() || !set.iter().all(|&v| host.has_vertex(v)) {
            return false;
        }
        for &v in set {
            if !seen.insert(v) {
                return false;
            }
        }
        if !connected_in(host, set) {
            return false;
        }
    }
    if model.edge_map.len() != pattern.edge_count() {
        return false;
    }
    let mut pattern_ids: Vec<EdgeId> = model.edge_map.iter().map(|&(p, _)| p).collect();
    pattern_ids.sort_unstable();
    let mut expected: Vec<EdgeId> = pattern.edges().iter().map(|e| e.id).collect();
    expected.sort_unstable();
    if pattern_ids != expected {
        return false;
    }
    let mut host_ids: Vec<EdgeId> = model.edge_map.iter().map(|&(_, h)| h).collect();
    host_ids.sort_unstable();
    host_ids.dedup();
    if host_ids.len() != model.edge_map.len() {
        return false;
    }
    for &(pid, hid) in &model.edge_map {
        let pe = pattern.edge(pid).expect("pattern id checked");
        let Some(he) = host.edge(hid) else { return false };
        let i = pvs.binary_search(&pe.u).expect("pattern endpoint");
        let j = pvs.binary_search(&pe.v).expect("pattern endpoint");
        let si = &model.branch_sets[i];
        let sj = &model.branch_sets[j];
        let forward = si.contains(&he.u) && sj.contains(&he.v);
        let backward = si.contains(&he.v) && sj.contains(&he.u);
        if !forward && !backward {
            return false;
        }
    }
    true
}

fn connected_in(host: &Graph, set: &[Vertex]) -> bool {
    let members: BTreeSet<Vertex> = set.iter().copied().collect();
    let mut reach: BTreeSet<Vertex> = BTreeSet::new();
    let mut stack = vec![set[0]];
    reach.insert(set[0]);
    while let Some(v) = stack.pop() {
        for w in host.neighbors(v) {
            if members.contains(&w) && reach.insert(w) {
                stack.push(w);
            }
        }
    }
    reach.len() == members.len()
}

/// Outcome of the linkless embeddability decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinklessVerdict {
    /// No obstruction minor: the graph has a linkless embedding.
    Embeddable,
    /// The graph contains obstruction family member `family_member`
    /// (1-based index into [`petersen_family`]) as a minor, so every
    /// embedding has a nontrivially linked pair of cycles.
    Linked {
        family_member: usize,
        model: MinorModel,
    },
}

impl LinklessVerdict {
    pub fn embeddable(&self) -> bool {
        matches!(self, LinklessVerdict::Embeddable)
    }

    pub fn witness(&self) -> Option<(usize, &MinorModel)> {
        match self {
            LinklessVerdict::Embeddable => None,
            LinklessVerdict::Linked { family_member, model } => Some((*family_member, model)),
        }
    }
}

/// Decides linkless embeddability by scanning the obstruction family in
/// order and reporting the first member found as a minor.
pub fn is_linklessly_embeddable(g: &Graph, cap: usize) -> Result<LinklessVerdict> {
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded {
            size: g.vertex_count(),
            cap,
        });
    }
    let s = g.simplify();
    for (idx, member) in petersen_family().iter().enumerate() {
        if let Some(model) = search_minor(&s, member) {
            return Ok(LinklessVerdict::Linked {
                family_member: idx + 1,
                model,
            });
        }
    }
    Ok(LinklessVerdict::Embeddable)
}
