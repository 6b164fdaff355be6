//! Convex-position diagrams and mod-2 linking numbers.
//!
//! Vertices sit on a circle in a chosen order and edges are straight
//! chords, so two edges cross exactly when their endpoints interleave
//! around the circle. An over/under choice at each crossing turns the
//! drawing into a spatial embedding; the mod-2 linking number of two
//! disjoint cycles counts the crossings at which the first passes over
//! the second. Summed over all disjoint cycle pairs of K6 this is 1 no
//! matter how the crossings are resolved, which is why K6 has no
//! embedding with all cycle pairs unlinked.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cycles::{all_cycles, enumerate_cycles};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// An element of Z/2Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Mod2(u8);

impl Mod2 {
    pub fn zero() -> Mod2 {
        Mod2(0)
    }

    pub fn one() -> Mod2 {
        Mod2(1)
    }

    /// The class of an integer.
    pub fn from_count(n: usize) -> Mod2 {
        Mod2((n % 2) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for Mod2 {
    type Output = Mod2;

    fn add(self, rhs: Mod2) -> Mod2 {
        Mod2(self.0 ^ rhs.0)
    }
}

impl AddAssign for Mod2 {
    fn add_assign(&mut self, rhs: Mod2) {
        self.0 ^= rhs.0;
    }
}

impl Sum for Mod2 {
    fn sum<I: Iterator<Item = Mod2>>(iter: I) -> Mod2 {
        iter.fold(Mod2::zero(), Add::add)
    }
}

impl fmt::Display for Mod2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which edge of a crossing passes over: the one with the smaller id
/// (`A`) or the larger (`B`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OverEdge {
    A,
    B,
}

/// A crossing between chords `a` and `b`, with `a < b` as edge ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub a: EdgeId,
    pub b: EdgeId,
    pub over: OverEdge,
}

/// How to resolve crossings when building a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverRule {
    /// The edge whose endpoint pair is lexicographically smaller goes
    /// over. Deterministic and seed-free.
    Lex,
    /// Each crossing resolved by a coin flip from a seeded generator.
    Seeded(u64),
}

/// A graph drawn with its vertices in convex position plus an over/under
/// choice at every chord crossing.
#[derive(Debug, Clone, Serialize)]
pub struct Diagram {
    #[serde(skip)]
    graph: Graph,
    order: Vec<Vertex>,
    crossings: Vec<Crossing>,
}

/// Builds the diagram given by placing `order` around a circle. The
/// graph must be simple and `order` must list its vertices exactly once
/// each. Crossings come out sorted by edge id pair.
pub fn convex_diagram(g: &Graph, order: &[Vertex], rule: OverRule) -> Result<Diagram> {
    if !g.is_simple() {
        return Err(Error::input("diagram requires a simple graph"));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted != g.vertices() {
        return Err(Error::input(
            "diagram order must list every vertex exactly once",
        ));
    }
    let position: BTreeMap<Vertex, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut crossings = Vec::new();
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let (e, f) = (&edges[i], &edges[j]);
            if e.touches(f.u) || e.touches(f.v) {
                continue;
            }
            if chords_cross(&position, (e.u, e.v), (f.u, f.v)) {
                let over = match rule {
                    OverRule::Lex => {
                        if e.key() < f.key() {
                            OverEdge::A
                        } else {
                            OverEdge::B
                        }
                    }
                    // Placeholder; the seeded pass below overwrites it.
                    OverRule::Seeded(_) => OverEdge::A,
                };
                let (a, b) = if e.id < f.id { (e.id, f.id) } else { (f.id, e.id) };
                crossings.push(Crossing { a, b, over });
            }
        }
    }
    crossings.sort_by_key(|c| (c.a, c.b));
    if let OverRule::Seeded(seed) = rule {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for c in &mut crossings {
            c.over = if rng.gen_bool(0.5) { OverEdge::A } else { OverEdge::B };
        }
    }
    Ok(Diagram {
        graph: g.clone(),
        order: order.to_vec(),
        crossings,
    })
}

/// Two chords cross exactly when each separates the other's endpoints
/// around the circle; with all four positions distinct that means exactly
/// one endpoint of the second lies strictly between those of the first.
fn chords_cross(
    position: &BTreeMap<Vertex, usize>,
    (a, b): (Vertex, Vertex),
    (c, d): (Vertex, Vertex),
) -> bool {
    let (pa, pb) = (position[&a].min(position[&b]), position[&a].max(position[&b]));
    let inside = |p: usize| pa < p && p < pb;
    inside(position[&c]) != inside(position[&d])
}

impl Diagram {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// The same diagram with one crossing resolved the other way.
    pub fn crossing_change(&self, index: usize) -> Result<Diagram> {
        let mut out = self.clone();
        let c = out
            .crossings
            .get_mut(index)
            .ok_or_else(|| Error::input(format!("no crossing with index {index}")))?;
        c.over = match c.over {
            OverEdge::A => OverEdge::B,
            OverEdge::B => OverEdge::A,
        };
        Ok(out)
    }

    /// The same diagram with every crossing resolved as given. The
    /// assignment must cover exactly the crossings this diagram has.
    pub fn with_assignment(&self, assignment: &[Crossing]) -> Result<Diagram> {
        let mut sorted = assignment.to_vec();
        sorted.sort_by_key(|c| (c.a, c.b));
        let ours: Vec<(EdgeId, EdgeId)> = self.crossings.iter().map(|c| (c.a, c.b)).collect();
        let theirs: Vec<(EdgeId, EdgeId)> = sorted.iter().map(|c| (c.a, c.b)).collect();
        if ours != theirs {
            return Err(Error::input(
                "assignment must cover exactly the diagram's crossing pairs",
            ));
        }
        let mut out = self.clone();
        out.crossings = sorted;
        Ok(out)
    }

    /// Mod-2 linking number of two vertex-disjoint cycles, each given as
    /// a cyclic vertex sequence.
    pub fn linking_number(&self, c1: &[Vertex], c2: &[Vertex]) -> Result<Mod2> {
        let e1 = self.cycle_edges(c1)?;
        let e2 = self.cycle_edges(c2)?;
        let v1: BTreeSet<Vertex> = c1.iter().copied().collect();
        if c2.iter().any(|v| v1.contains(v)) {
            return Err(Error::input("cycles must be vertex-disjoint"));
        }
        let first_over = self
            .crossings
            .iter()
            .filter(|c| {
                (e1.contains(&c.a) && e2.contains(&c.b) && c.over == OverEdge::A)
                    || (e2.contains(&c.a) && e1.contains(&c.b) && c.over == OverEdge::B)
            })
            .count();
        Ok(Mod2::from_count(first_over))
    }

    /// Sum of the linking numbers over all unordered pairs of
    /// vertex-disjoint cycles.
    pub fn conway_gordon_sum(&self) -> Mod2 {
        let cycles = all_cycles(&self.graph);
        let n = self.graph.vertex_count();
        let mut total = Mod2::zero();
        for i in 0..cycles.len() {
            for j in (i + 1)..cycles.len() {
                // Disjoint cycles fit side by side in the vertex set.
                if cycles[i].len() + cycles[j].len() > n {
                    continue;
                }
                if vertex_disjoint(&cycles[i], &cycles[j]) {
                    total += self
                        .linking_number(&cycles[i], &cycles[j])
                        .expect("enumerated cycles are valid and disjoint");
                }
            }
        }
        total
    }

    /// Validates a cyclic vertex sequence and returns its edge ids.
    fn cycle_edges(&self, cycle: &[Vertex]) -> Result<BTreeSet<EdgeId>> {
        if cycle.len() < 3 {
            return Err(Error::input("a cycle needs at least three vertices"));
        }
        let distinct: BTreeSet<Vertex> = cycle.iter().copied().collect();
        if distinct.len() != cycle.len() {
            return Err(Error::input("cycle vertices must be distinct"));
        }
        let mut ids = BTreeSet::new();
        for (k, &v) in cycle.iter().enumerate() {
            let w = cycle[(k + 1) % cycle.len()];
            let id = self
                .graph
                .edge_between(v, w)
                .ok_or_else(|| Error::input(format!("no edge between {v} and {w}")))?;
            ids.insert(id);
        }
        Ok(ids)
    }
}

fn vertex_disjoint(c1: &[Vertex], c2: &[Vertex]) -> bool {
    let s1: BTreeSet<Vertex> = c1.iter().copied().collect();
    c2.iter().all(|v| !s1.contains(v))
}

/// All unordered pairs of vertex-disjoint cycles, in enumeration order.
/// Errors if the graph is not simple or exceeds `cap` vertices.
pub fn disjoint_cycle_pairs(g: &Graph, cap: usize) -> Result<Vec<(Vec<Vertex>, Vec<Vertex>)>> {
    let cycles = enumerate_cycles(g, cap)?;
    let n = g.vertex_count();
    let mut pairs = Vec::new();
    for i in 0..cycles.len() {
        for j in (i + 1)..cycles.len() {
            if cycles[i].len() + cycles[j].len() > n {
                continue;
            }
            if vertex_disjoint(&cycles[i], &cycles[j]) {
                pairs.push((cycles[i].clone(), cycles[j].clone()));
            }
        }
    }
    Ok(pairs)
}
