//! Weighted graph representation, source sets and the text file format.
//!
//! Undirected input is expanded into two directed arcs at construction time,
//! so every solver works on a single directed adjacency structure. Weights are
//! strictly positive `f64`; parallel edges are kept as given.
//!
//! File format:
//!
//! ```text
//! # sources: 1,6          <- optional, read by `load_instance`
//! 8 12 undirected         <- N M directed|undirected
//! coords                  <- optional, followed by N lines `x y`
//! 0.0 1.5
//! ...
//! 0 4 1                   <- M lines `u v w`
//! ```
//!
//! Lines starting with `#` are comments and blank lines are ignored.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

/// Dense node index in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub usize);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for NodeId {
    fn from(value: usize) -> Self {
        NodeId(value)
    }
}

/// An input edge, exactly as it appeared in the file or constructor call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub from: NodeId,
    pub to: NodeId,
    pub weight: f64,
}

/// One directed arc in an adjacency list.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub to: NodeId,
    pub weight: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Directed,
    Undirected,
}

impl EdgeKind {
    fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Directed => "directed",
            EdgeKind::Undirected => "undirected",
        }
    }
}

/// Where a malformed edge came from, for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location(pub Option<usize>);

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(line) => write!(f, "line {line}: "),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{at}non-positive weight {weight} on edge {from} -> {to}")]
    NonPositiveWeight {
        at: Location,
        from: usize,
        to: usize,
        weight: f64,
    },
    #[error("{at}endpoint {node} out of range for {n} nodes")]
    EndpointOutOfRange { at: Location, node: usize, n: usize },
    #[error("{at}self-loop at node {node}")]
    SelfLoop { at: Location, node: usize },
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("non-finite coordinate for node {node}")]
    NonFiniteCoordinate { node: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SourceError {
    #[error("source set is empty")]
    Empty,
    #[error("duplicate source {0}")]
    Duplicate(NodeId),
    #[error("source {node} out of range for {n} nodes")]
    OutOfRange { node: NodeId, n: usize },
    #[error("cannot parse source list {0:?}")]
    Parse(String),
}

/// Immutable weighted graph. Safe to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    kind: EdgeKind,
    edges: Vec<Edge>,
    adj: Vec<Vec<Arc>>,
    coords: Option<Vec<Point>>,
}

impl Graph {
    /// Builds a validated graph from `(u, v, w)` triples.
    pub fn from_edges<I>(n: usize, kind: EdgeKind, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let located = edges.into_iter().map(|e| (Location(None), e));
        Self::build(n, kind, located)
    }

    fn build<I>(n: usize, kind: EdgeKind, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Location, (usize, usize, f64))>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut stored = Vec::new();
        for (at, (u, v, w)) in edges {
            for node in [u, v] {
                if node >= n {
                    return Err(GraphError::EndpointOutOfRange { at, node, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { at, node: u });
            }
            if !w.is_finite() || w <= 0.0 {
                return Err(GraphError::NonPositiveWeight {
                    at,
                    from: u,
                    to: v,
                    weight: w,
                });
            }
            adj[u].push(Arc {
                to: NodeId(v),
                weight: w,
            });
            if kind == EdgeKind::Undirected {
                adj[v].push(Arc {
                    to: NodeId(u),
                    weight: w,
                });
            }
            stored.push(Edge {
                from: NodeId(u),
                to: NodeId(v),
                weight: w,
            });
        }
        Ok(Graph {
            kind,
            edges: stored,
            adj,
            coords: None,
        })
    }

    /// Attaches one coordinate per node.
    pub fn with_coords(mut self, coords: Vec<Point>) -> Result<Graph, GraphError> {
        if coords.len() != self.node_count() {
            return Err(GraphError::CoordinateCount {
                expected: self.node_count(),
                got: coords.len(),
            });
        }
        if let Some(node) = coords
            .iter()
            .position(|p| !p.x.is_finite() || !p.y.is_finite())
        {
            return Err(GraphError::NonFiniteCoordinate { node });
        }
        self.coords = Some(coords);
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of directed arcs after mirroring.
    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn kind(&self) -> EdgeKind {
        self.kind
    }

    pub fn is_undirected(&self) -> bool {
        self.kind == EdgeKind::Undirected
    }

    /// Input edges in the order they were given.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, node: NodeId) -> &[Arc] {
        &self.adj[node.0]
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count()).map(NodeId)
    }

    pub fn coords(&self) -> Option<&[Point]> {
        self.coords.as_deref()
    }

    /// Graph with every arc reversed. Solving on it measures node -> source
    /// travel instead of source -> node. Undirected graphs are returned as is.
    pub fn reversed(&self) -> Graph {
        if self.is_undirected() {
            return self.clone();
        }
        let flipped = self
            .edges
            .iter()
            .map(|e| (e.to.0, e.from.0, e.weight))
            .collect::<Vec<_>>();
        let mut g = Graph::from_edges(self.node_count(), self.kind, flipped)
            .expect("reversing a valid graph keeps it valid");
        g.coords = self.coords.clone();
        g
    }

    fn sorted_edges(&self) -> Vec<Edge> {
        let mut edges = self.edges.clone();
        edges.sort_by(|a, b| {
            a.from
                .cmp(&b.from)
                .then(a.to.cmp(&b.to))
                .then(a.weight.total_cmp(&b.weight))
        });
        edges
    }

    /// Canonical text form: edges sorted by `(u, v, w)`, LF line endings.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{} {} {}",
            self.node_count(),
            self.edges.len(),
            self.kind.as_str()
        )
        .unwrap();
        if let Some(coords) = &self.coords {
            out.push_str("coords\n");
            for p in coords {
                writeln!(out, "{} {}", p.x, p.y).unwrap();
            }
        }
        for e in self.sorted_edges() {
            writeln!(out, "{} {} {}", e.from, e.to, e.weight).unwrap();
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), GraphError> {
        fs::write(path, self.to_canonical_string())?;
        Ok(())
    }

    /// Graphviz text. Nodes are emitted in index order, edges in canonical
    /// order; `annotations[i]` is appended to node `i`'s label.
    pub fn export_dot(&self, annotations: Option<&[String]>) -> String {
        let (keyword, arrow) = match self.kind {
            EdgeKind::Directed => ("digraph", "->"),
            EdgeKind::Undirected => ("graph", "--"),
        };
        let mut out = format!("{keyword} meetpoint {{\n");
        for node in 0..self.node_count() {
            match annotations.and_then(|a| a.get(node)) {
                Some(note) => {
                    writeln!(out, "  {node} [label=\"{node}\\n{}\"];", escape_dot(note)).unwrap()
                }
                None => writeln!(out, "  {node} [label=\"{node}\"];").unwrap(),
            }
        }
        for e in self.sorted_edges() {
            writeln!(
                out,
                "  {} {arrow} {} [label=\"{}\"];",
                e.from, e.to, e.weight
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_instance(s).map(|(g, _)| g)
    }
}

/// Reads a graph file.
pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    load_instance(path).map(|(g, _)| g)
}

/// Reads a graph file plus the source list from a `# sources: a,b,c` comment,
/// if one is present.
pub fn load_instance(path: impl AsRef<Path>) -> Result<(Graph, Option<Vec<NodeId>>), GraphError> {
    let text = fs::read_to_string(path)?;
    parse_instance(&text)
}

/// Parses graph text; see the module docs for the format.
pub fn parse_instance(text: &str) -> Result<(Graph, Option<Vec<NodeId>>), GraphError> {
    let mut sources = None;
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(list) = comment.trim().strip_prefix("sources:") {
                let parsed = parse_id_list(list).map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("bad source list {:?}", list.trim()),
                })?;
                sources = Some(parsed);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        lines.push((line_no, line));
    }

    let mut it = lines.into_iter();
    let (hline, header) = it.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing header `N M directed|undirected`".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(parse_err(hline, "header must be `N M directed|undirected`"));
    }
    let n: usize = parse_field(hline, fields[0], "node count")?;
    let m: usize = parse_field(hline, fields[1], "edge count")?;
    let kind = match fields[2] {
        "directed" => EdgeKind::Directed,
        "undirected" => EdgeKind::Undirected,
        other => {
            return Err(parse_err(
                hline,
                &format!("expected `directed` or `undirected`, got {other:?}"),
            ))
        }
    };

    let rest: Vec<(usize, &str)> = it.collect();
    let mut cursor = 0;
    let mut coords = None;
    if rest.first().is_some_and(|(_, l)| *l == "coords") {
        cursor = 1;
        let mut pts = Vec::with_capacity(n);
        for _ in 0..n {
            let (line, text) = *rest.get(cursor).ok_or_else(|| {
                parse_err(
                    rest.last().map_or(hline, |r| r.0),
                    "too few coordinate lines",
                )
            })?;
            let f: Vec<&str> = text.split_whitespace().collect();
            if f.len() != 2 {
                return Err(parse_err(line, "coordinate line must be `x y`"));
            }
            pts.push(Point::new(
                parse_field(line, f[0], "x")?,
                parse_field(line, f[1], "y")?,
            ));
            cursor += 1;
        }
        coords = Some(pts);
    }

    let edge_lines = &rest[cursor..];
    if edge_lines.len() != m {
        let line = edge_lines.get(m).map_or(hline, |l| l.0);
        return Err(parse_err(
            line,
            &format!("header declares {m} edges, found {}", edge_lines.len()),
        ));
    }
    let mut triples = Vec::with_capacity(m);
    for &(line, text) in edge_lines {
        let f: Vec<&str> = text.split_whitespace().collect();
        if f.len() != 3 {
            return Err(parse_err(line, "edge line must be `u v w`"));
        }
        triples.push((
            Location(Some(line)),
            (
                parse_field::<usize>(line, f[0], "u")?,
                parse_field::<usize>(line, f[1], "v")?,
                parse_field::<f64>(line, f[2], "w")?,
            ),
        ));
    }
    let mut graph = Graph::build(n, kind, triples)?;
    if let Some(pts) = coords {
        graph = graph.with_coords(pts)?;
    }
    Ok((graph, sources))
}

fn parse_err(line: usize, message: &str) -> GraphError {
    GraphError::Parse {
        line,
        message: message.to_string(),
    }
}

fn parse_field<T: FromStr>(line: usize, field: &str, what: &str) -> Result<T, GraphError> {
    field
        .parse()
        .map_err(|_| parse_err(line, &format!("invalid {what} {field:?}")))
}

fn parse_id_list(list: &str) -> Result<Vec<NodeId>, SourceError> {
    list.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map(NodeId)
                .map_err(|_| SourceError::Parse(list.trim().to_string()))
        })
        .collect()
}

/// The S query sources. Order fixes the alternation schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceSet(Vec<NodeId>);

impl SourceSet {
    /// Validates `sources` against `graph`.
    pub fn new(graph: &Graph, sources: Vec<NodeId>) -> Result<SourceSet, SourceError> {
        validate_sources(graph, SourceSet(sources))
    }

    /// Parses a comma-separated id list such as `"1,6"` and validates it.
    pub fn parse(graph: &Graph, csv: &str) -> Result<SourceSet, SourceError> {
        SourceSet::new(graph, parse_id_list(csv)?)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[NodeId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.0.iter().copied()
    }

    pub fn get(&self, index: usize) -> NodeId {
        self.0[index]
    }

    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Returns `sources` unchanged when it is non-empty, duplicate-free and in range.
pub fn validate_sources(graph: &Graph, sources: SourceSet) -> Result<SourceSet, SourceError> {
    if sources.0.is_empty() {
        return Err(SourceError::Empty);
    }
    let n = graph.node_count();
    let mut seen = vec![false; n];
    for &s in &sources.0 {
        if s.0 >= n {
            return Err(SourceError::OutOfRange { node: s, n });
        }
        if std::mem::replace(&mut seen[s.0], true) {
            return Err(SourceError::Duplicate(s));
        }
    }
    Ok(sources)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_nodes() -> Graph {
        Graph::from_edges(2, EdgeKind::Directed, [(0, 1, 3.0)]).unwrap()
    }

    #[test]
    fn undirected_edges_are_mirrored() {
        let g: Graph = "3 2 undirected\n0 1 2\n1 2 5\n".parse().unwrap();
        assert_eq!(g.arc_count(), 4);
        assert_eq!(
            g.neighbors(NodeId(1)),
            &[
                Arc {
                    to: NodeId(0),
                    weight: 2.0
                },
                Arc {
                    to: NodeId(2),
                    weight: 5.0
                }
            ]
        );
    }

    #[test]
    fn self_loop_rejected_with_line() {
        let err = "2 1 directed\n# c\n1 1 5\n".parse::<Graph>().unwrap_err();
        assert!(matches!(
            err,
            GraphError::SelfLoop {
                at: Location(Some(3)),
                node: 1
            }
        ));
        assert_eq!(err.to_string(), "line 3: self-loop at node 1");
    }

    #[test]
    fn bad_weights_and_endpoints() {
        for (text, want) in [
            ("2 1 directed\n0 1 0\n", "non-positive"),
            ("2 1 directed\n0 1 -2\n", "non-positive"),
            ("2 1 directed\n0 1 NaN\n", "non-positive"),
            ("2 1 directed\n0 2 1\n", "out of range"),
            ("2 1 directed\n0 x 1\n", "invalid v"),
            ("2 2 directed\n0 1 1\n", "declares 2 edges"),
            ("2 1 sideways\n0 1 1\n", "expected `directed`"),
            ("", "missing header"),
        ] {
            let err = text.parse::<Graph>().unwrap_err().to_string();
            assert!(err.contains(want), "{text:?} -> {err}");
        }
    }

    #[test]
    fn coords_block() {
        let g: Graph = "2 1 directed\ncoords\n0 0\n3 4\n0 1 5\n".parse().unwrap();
        let c = g.coords().unwrap();
        assert_eq!(c[0].distance(&c[1]), 5.0);
        let err = "2 1 directed\ncoords\n0 0\n0 1 5\n"
            .parse::<Graph>()
            .unwrap_err();
        assert!(matches!(err, GraphError::Parse { .. }), "{err}");
    }

    #[test]
    fn sources_comment() {
        let (g, s) = parse_instance("# sources: 1, 0\n2 1 directed\n0 1 1\n").unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(s, Some(vec![NodeId(1), NodeId(0)]));
    }

    #[test]
    fn canonical_sorts_edges() {
        let g: Graph = "3 3 directed\n2 0 1\n0 2 4\n0 1 2.5\n".parse().unwrap();
        assert_eq!(
            g.to_canonical_string(),
            "3 3 directed\n0 1 2.5\n0 2 4\n2 0 1\n"
        );
    }

    #[test]
    fn reversed_flips_arcs() {
        let r = two_nodes().reversed();
        assert!(r.neighbors(NodeId(0)).is_empty());
        assert_eq!(r.neighbors(NodeId(1))[0].to, NodeId(0));
    }

    #[test]
    fn source_validation() {
        let g = Graph::from_edges(8, EdgeKind::Undirected, [(0, 1, 1.0)]).unwrap();
        assert!(SourceSet::parse(&g, "1,6").is_ok());
        assert_eq!(
            SourceSet::parse(&g, "1,1"),
            Err(SourceError::Duplicate(NodeId(1)))
        );
        assert_eq!(
            SourceSet::parse(&g, "9"),
            Err(SourceError::OutOfRange {
                node: NodeId(9),
                n: 8
            })
        );
        assert_eq!(SourceSet::new(&g, vec![]), Err(SourceError::Empty));
        assert!(matches!(
            SourceSet::parse(&g, "1,a"),
            Err(SourceError::Parse(_))
        ));
    }

    #[test]
    fn dot_small_cases() {
        let empty = Graph::from_edges(0, EdgeKind::Directed, []).unwrap();
        assert_eq!(empty.export_dot(None), "digraph meetpoint {\n}\n");
        assert_eq!(
            two_nodes().export_dot(None),
            "digraph meetpoint {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -> 1 [label=\"3\"];\n}\n"
        );
        let notes = vec!["a\"b".to_string(), "c".to_string()];
        assert!(two_nodes()
            .export_dot(Some(&notes))
            .contains("0 [label=\"0\\na\\\"b\"]"));
    }
}
