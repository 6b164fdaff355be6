//! Deciding linkless embeddability of graphs.
//!
//! A graph can be embedded in 3-space with every pair of disjoint cycles
//! unlinked exactly when it has none of the seven Petersen-family graphs as
//! a minor. This crate builds that family by closing K6 under the two
//! triangle-star exchange moves, runs an exact minor search that produces
//! checkable certificates either way, and rounds the toolkit out with the
//! pieces the surrounding theory leans on: planarity with Kuratowski
//! witnesses, the web of Kuratowski subgraphs of a graph, and mod-2 linking
//! numbers of cycle pairs in convex-position diagrams, including the
//! invariant sum over all disjoint cycle pairs of K6.

pub mod canon;
pub mod cycles;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod exchange;
pub mod format;
pub mod graph;
pub mod minor;
pub mod planarity;
pub mod smallgraphs;
pub mod subdivision;
pub mod web;

pub use canon::{canonical_form, canonical_graph};
pub use cycles::{enumerate_cycles, DEFAULT_CYCLE_CAP};
pub use diagram::{convex_diagram, disjoint_cycle_pairs, Crossing, Diagram, Mod2, OverEdge, OverRule};
pub use enumerate::{all_graphs, connected_graphs};
pub use error::{Error, Result};
pub use exchange::{delta_y, exchange_closure, legal_moves, petersen_family, y_delta, ExchangeMove};
pub use format::{from_graph6, parse_edge_list, parse_graph, to_graph6, InputFormat, LabeledGraph};
pub use graph::{Edge, EdgeId, Graph, Vertex};
pub use minor::{
    has_minor, is_linklessly_embeddable, verify_minor_model, LinklessVerdict, MinorModel,
    DEFAULT_DECIDE_CAP,
};
pub use planarity::{is_planar, Planarity};
pub use subdivision::{SubdivisionKind, SubdivisionModel};
pub use web::{
    build_web, enumerate_kuratowski_subgraphs, is_1_adjacent, is_2_adjacent, is_connected_web,
    AdjacencyKind, KuratowskiWeb, WebLink, DEFAULT_WEB_CAP,
};
