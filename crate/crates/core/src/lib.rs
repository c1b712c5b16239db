//! Fair meeting-node search on weighted graphs.
//!
//! Given `S` source nodes, find the node that minimizes the largest travel
//! distance (the *center*) or the summed travel distance (the *centroid*).
//! Both are solved by running one Dijkstra per source in lock-step rounds and
//! watching for nodes settled by every source. The early-stopping variants
//! cut each search off once it cannot improve on the best meeting node seen.
//!
//! ```
//! use meetpoint::{fixtures, search};
//!
//! let (graph, sources) = fixtures::worked_example();
//! let r = search::solve_center_early(&graph, &sources, false).unwrap();
//! assert_eq!((r.node.0, r.value), (4, 4.0));
//! assert_eq!(r.explored_pct(), 50.0);
//! ```

pub mod bench;
pub mod cli;
pub mod fixtures;
pub mod graph;
pub mod graphgen;
pub mod oracle;
pub mod search;

pub use graph::{EdgeKind, Graph, GraphError, NodeId, Point, SourceError, SourceSet};
pub use search::{
    solve, solve_center_astar, solve_center_early, solve_center_full, solve_centroid_early,
    solve_centroid_full, AStarConfig, Objective, SolveError, SolveResult, Strategy,
};
