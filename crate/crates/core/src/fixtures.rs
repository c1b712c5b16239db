//! Small reference instances shipped with the crate.

use crate::graph::{parse_instance, Graph, SourceSet};

/// 8 nodes, 12 undirected edges, sources `1,6`. Center is node 4 (max 4),
/// centroid is node 4 (sum 8); the early-stop center search settles 4 + 4
/// nodes and the early-stop centroid search 5 + 6.
pub const WORKED_EXAMPLE: &str = include_str!("../fixtures/worked_example.graph");

/// 9 nodes, sources `4,1,6`. The early-stop centroid search settles on node 3
/// (sum 13) while the true centroid is node 5 (sum 11). Node 2 is isolated.
pub const RELATIVE_MINIMUM: &str = include_str!("../fixtures/relative_minimum.graph");

fn load(text: &str) -> (Graph, SourceSet) {
    let (graph, ids) = parse_instance(text).expect("bundled fixture parses");
    let sources = SourceSet::new(&graph, ids.expect("bundled fixture lists sources"))
        .expect("bundled fixture sources are valid");
    (graph, sources)
}

pub fn worked_example() -> (Graph, SourceSet) {
    load(WORKED_EXAMPLE)
}

pub fn relative_minimum() -> (Graph, SourceSet) {
    load(RELATIVE_MINIMUM)
}
