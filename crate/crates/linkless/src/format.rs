//! Text formats: graph6 and whitespace-separated edge lists.
//!
//! Parse errors carry the byte offset of the offending character in the
//! original input so callers can point at the exact spot.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest vertex count the short graph6 header can express.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const G6_OPTIONAL_PREFIX: &str = ">>graph6<<";

/// A parsed graph together with the input's own vertex names.
///
/// The graph uses dense internal labels `0..n`; `labels[i]` is the name the
/// input used for internal vertex `i`. Certificates that leave the library
/// should be translated back through `labels`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<Vertex>,
}

impl LabeledGraph {
    /// Wraps a graph whose labels are already the ones to report.
    pub fn identity(graph: Graph) -> Self {
        let labels = graph.vertices().to_vec();
        LabeledGraph { graph, labels }
    }

    /// Input name of internal vertex `v`.
    pub fn original(&self, v: Vertex) -> Vertex {
        self.labels[v as usize]
    }
}

/// Input format selector for [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    EdgeList,
    Graph6,
    /// Decide by the first meaningful line: a leading digit means an edge
    /// list, anything else is treated as graph6 (whose header bytes are
    /// never digits).
    #[default]
    Auto,
}

/// Encodes a simple graph with at most 62 vertices as one graph6 line
/// (without trailing newline). Vertex labels are forgotten; position in the
/// sorted vertex list is what is encoded.
pub fn to_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::input("graph6 cannot express loops or parallel edges"));
    }
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::input(format!(
            "graph6 short form supports at most {GRAPH6_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let vs = g.vertices();
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    // Upper triangle in column order: pair (i, j) for j = 1..n, i = 0..j.
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge_between(vs[i], vs[j]) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}

/// Decodes one graph6 line. Accepts the optional `>>graph6<<` prefix and
/// trailing whitespace; offsets in errors point into `s` as given.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let mut base = 0;
    let mut body = s;
    if let Some(rest) = body.strip_prefix(G6_OPTIONAL_PREFIX) {
        base = G6_OPTIONAL_PREFIX.len();
        body = rest;
    }
    let body = body.trim_end();
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 input"));
    }
    let header = bytes[0];
    if header == 126 {
        return Err(Error::parse(base, "multi-byte graph6 sizes are not supported"));
    }
    if !(63..=125).contains(&header) {
        return Err(Error::parse(
            base,
            format!("invalid graph6 header byte {:?}", bytes[0] as char),
        ));
    }
    let n = (header - 63) as usize;
    let bit_count = n * (n - 1) / 2;
    let need = bit_count.div_ceil(6);
    if bytes.len() < 1 + need {
        return Err(Error::parse(
            base + bytes.len(),
            format!(
                "truncated graph6 data: expected {need} data characters, found {}",
                bytes.len() - 1
            ),
        ));
    }
    if bytes.len() > 1 + need {
        return Err(Error::parse(base + 1 + need, "unexpected data after graph6 payload"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::parse(
                    base + 1 + bit / 6,
                    format!("invalid graph6 data byte {:?}", byte as char),
                ));
            }
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                edges.push((i as Vertex, j as Vertex));
            }
            bit += 1;
        }
    }
    // Validate every data byte even when the tail bits carry no pairs, and
    // require zero padding.
    for (k, &byte) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&byte) {
            return Err(Error::parse(
                base + k,
                format!("invalid graph6 data byte {:?}", byte as char),
            ));
        }
    }
    if bit_count % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(base + bytes.len() - 1, "nonzero graph6 padding bits"));
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Parses an edge list: one `u v` pair per line, `#` starts a comment,
/// blank lines are skipped. Labels may be any distinct u32 values; the
/// result maps them to dense internal vertices and remembers the originals.
/// Loops (`u u`) and repeated pairs are kept as given.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for (line_start, line) in lines_with_offsets(text) {
        let visible = match line.find('#') {
            Some(h) => &line[..h],
            None => line,
        };
        let tokens = tokens_with_offsets(visible);
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            let (off, tok) = if tokens.len() < 2 { tokens[0] } else { tokens[2] };
            return Err(Error::parse(
                line_start + off,
                format!(
                    "expected exactly two vertex labels per line, line has {} (near {tok:?})",
                    tokens.len()
                ),
            ));
        }
        let mut ends = [0 as Vertex; 2];
        for (slot, &(off, tok)) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse::<Vertex>().map_err(|_| {
                Error::parse(line_start + off, format!("invalid vertex label {tok:?}"))
            })?;
        }
        pairs.push((ends[0], ends[1]));
    }
    let mut labels: Vec<Vertex> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let index = |w: Vertex| labels.binary_search(&w).expect("label collected") as Vertex;
    let dense: Vec<(Vertex, Vertex)> = pairs.iter().map(|&(u, v)| (index(u), index(v))).collect();
    Ok(LabeledGraph {
        graph: Graph::from_edges(labels.len(), &dense),
        labels,
    })
}

/// Renders a graph as an edge list in edge order, using the graph's own
/// vertex labels.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Parses `text` according to `format`, auto-detecting if asked.
pub fn parse_graph(text: &str, format: InputFormat) -> Result<LabeledGraph> {
    let format = match format {
        InputFormat::Auto => detect_format(text),
        f => f,
    };
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Graph6 => {
            let (start, line) = first_meaningful_line(text)
                .ok_or_else(|| Error::parse(text.len(), "empty graph6 input"))?;
            for (later_start, later) in lines_with_offsets(text) {
                let t = later.trim();
                if later_start > start && !t.is_empty() && !t.starts_with('#') {
                    return Err(Error::parse(later_start, "expected a single graph6 line"));
                }
            }
            from_graph6(line).map(Graph::into_labeled).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: start + offset,
                    message,
                },
                other => other,
            })
        }
        InputFormat::Auto => unreachable!("auto resolved above"),
    }
}

impl Graph {
    fn into_labeled(self) -> LabeledGraph {
        LabeledGraph::identity(self)
    }
}

fn detect_format(text: &str) -> InputFormat {
    match first_meaningful_line(text) {
        Some((_, line)) if line.trim_start().as_bytes()[0].is_ascii_digit() => InputFormat::EdgeList,
        _ => InputFormat::Graph6,
    }
}

/// First line that is neither blank nor a pure comment, with its offset.
fn first_meaningful_line(text: &str) -> Option<(usize, &str)> {
    lines_with_offsets(text).find(|(_, line)| {
        let t = line.trim_start();
        !t.is_empty() && !t.starts_with('#')
    })
}

fn lines_with_offsets(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split_inclusive('\n').map(move |raw| {
        let start = offset;
        offset += raw.len();
        (start, raw.trim_end_matches(['\n', '\r']))
    })
}

fn tokens_with_offsets(line: &str) -> Vec<(usize, &str)> {
    let bytes = line.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        out.push((start, &line[start..i]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smallgraphs::{complete, cycle, petersen};

    #[test]
    fn known_graph6_encodings() {
        assert_eq!(to_graph6(&complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&complete(5)).unwrap(), "D~{");
        assert_eq!(to_graph6(&Graph::with_vertices(0)).unwrap(), "?");
        assert_eq!(to_graph6(&Graph::with_vertices(1)).unwrap(), "@");
        // Five vertices, edges 0-2, 0-4, 1-3, 3-4; value taken from an
        // independent graph6 implementation.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn graph6_round_trips() {
        for g in [complete(6), petersen(), cycle(9), Graph::with_vertices(3)] {
            let s = to_graph6(&g).unwrap();
            let back = from_graph6(&s).unwrap();
            assert_eq!(back.vertex_count(), g.vertex_count());
            for e in g.edges() {
                assert!(back.has_edge_between(e.u, e.v), "{s}: lost edge {:?}", e.key());
            }
            assert_eq!(back.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn graph6_accepts_prefix_and_trailing_newline() {
        let g = from_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn graph6_rejects_bad_input_with_offsets() {
        match from_graph6("") {
            Err(Error::Parse { offset: 0, .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
        match from_graph6("~??") {
            Err(Error::Parse { offset: 0, message }) => {
                assert!(message.contains("multi-byte"), "{message}")
            }
            other => panic!("{other:?}"),
        }
        match from_graph6("D~") {
            Err(Error::Parse { offset: 2, message }) => {
                assert!(message.contains("truncated"), "{message}")
            }
            other => panic!("{other:?}"),
        }
        match from_graph6("C~~") {
            Err(Error::Parse { offset: 2, message }) => {
                assert!(message.contains("after graph6 payload"), "{message}")
            }
            other => panic!("{other:?}"),
        }
        match from_graph6("C!") {
            Err(Error::Parse { offset: 1, message }) => {
                assert!(message.contains("invalid graph6 data byte"), "{message}")
            }
            other => panic!("{other:?}"),
        }
        // K4 payload is 6 bits '~'; 'B' header needs only 3 bits, so the
        // same data byte with nonzero low bits is bad padding.
        match from_graph6("B~") {
            Err(Error::Parse { offset: 1, message }) => {
                assert!(message.contains("padding"), "{message}")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn graph6_refuses_non_simple_and_oversize() {
        let mut g = Graph::with_vertices(2);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        assert!(matches!(to_graph6(&g), Err(Error::Input(_))));
        assert!(matches!(to_graph6(&Graph::with_vertices(63)), Err(Error::Input(_))));
    }

    #[test]
    fn edge_list_parses_comments_and_sparse_labels() {
        let text = "# a triangle on sparse labels\n5 17\n\n17 42   # with a comment\n42 5\n";
        let lg = parse_edge_list(text).unwrap();
        assert_eq!(lg.labels, vec![5, 17, 42]);
        assert_eq!(lg.graph.vertex_count(), 3);
        assert_eq!(lg.graph.edge_count(), 3);
        assert!(lg.graph.has_edge_between(0, 1));
        assert_eq!(lg.original(2), 42);
    }

    #[test]
    fn edge_list_keeps_loops_and_parallels() {
        let lg = parse_edge_list("1 1\n1 2\n2 1\n").unwrap();
        assert_eq!(lg.graph.edge_count(), 3);
        assert!(!lg.graph.is_simple());
        assert_eq!(lg.graph.simplify().edge_count(), 1);
    }

    #[test]
    fn edge_list_errors_point_at_the_token() {
        match parse_edge_list("0 1\n2 x\n") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 6);
                assert!(message.contains("invalid vertex label"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        match parse_edge_list("0 1 2\n") {
            Err(Error::Parse { offset: 4, message }) => {
                assert!(message.contains("two vertex labels"), "{message}")
            }
            other => panic!("{other:?}"),
        }
        match parse_edge_list("7\n") {
            Err(Error::Parse { offset: 0, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn auto_detection_prefers_digits_for_edge_lists() {
        let edge = parse_graph("# comment\n0 1\n1 2\n", InputFormat::Auto).unwrap();
        assert_eq!(edge.graph.edge_count(), 2);
        let g6 = parse_graph("C~\n", InputFormat::Auto).unwrap();
        assert_eq!(g6.graph.vertex_count(), 4);
        assert_eq!(g6.labels, vec![0, 1, 2, 3]);
    }

    #[test]
    fn graph6_mode_offsets_account_for_leading_blank_lines() {
        match parse_graph("\nC!\n", InputFormat::Graph6) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph("C~\nC~\n", InputFormat::Graph6) {
            Err(Error::Parse { offset: 3, message }) => {
                assert!(message.contains("single graph6 line"), "{message}")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn edge_list_renders_in_edge_order() {
        let g = Graph::from_edges(3, &[(0, 1), (2, 1)]);
        assert_eq!(to_edge_list(&g), "0 1\n2 1\n");
    }
}
