//! Brute-force ground truth.
//!
//! Everything here is deliberately independent of the search engine: a plain
//! textbook Dijkstra over `std::collections::BinaryHeap`, an O(V^3)
//! Floyd-Warshall for tiny graphs, and argmin scans over the resulting matrix.
//!
//! Ties between nodes with equal objective value are broken the way the
//! alternating search discovers them: node `v` is first finalized by all
//! sources in round `max_j rank_j(v)`, where `rank_j(v)` is `v`'s position when
//! source `j`'s reachable nodes are sorted by `(distance, id)`, and within that
//! round by the index of the last source to reach it. The earliest discovery
//! wins. This is computed from distances alone.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::graph::{Graph, NodeId, SourceSet};

pub const DEFAULT_FLOYD_WARSHALL_CAP: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no node is reachable from every source")]
    NoIntersection,
    #[error("graph has {n} nodes, all-pairs oracle is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// `S x N` shortest distances, row `j` from source `j`. Unreachable is `f64::INFINITY`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    sources: Vec<NodeId>,
    rows: Vec<Vec<f64>>,
}

impl DistanceMatrix {
    pub fn sources(&self) -> &[NodeId] {
        &self.sources
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.rows[j]
    }

    pub fn get(&self, j: usize, node: NodeId) -> f64 {
        self.rows[j][node.0]
    }

    pub fn node_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Column `v`, in source order.
    pub fn column(&self, node: NodeId) -> impl Iterator<Item = f64> + '_ {
        self.rows.iter().map(move |r| r[node.0])
    }

    /// Nodes reachable from every source.
    pub fn intersection_nodes(&self) -> Vec<NodeId> {
        (0..self.node_count())
            .map(NodeId)
            .filter(|&v| self.column(v).all(f64::is_finite))
            .collect()
    }

    /// Round and source index at which the alternating search first sees `v`
    /// finalized by every source. `None` if some source cannot reach `v`.
    pub fn discovery(&self, node: NodeId) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (j, row) in self.rows.iter().enumerate() {
            let d = row[node.0];
            if !d.is_finite() {
                return None;
            }
            let rank = row
                .iter()
                .enumerate()
                .filter(|&(u, &du)| du < d || (du == d && u < node.0))
                .count();
            if best.is_none_or(|(r, _)| rank >= r) {
                best = Some((rank, j));
            }
        }
        best
    }
}

#[derive(Clone, Copy, PartialEq)]
struct Item(f64, usize);

impl Eq for Item {}

impl Ord for Item {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0).then(self.1.cmp(&other.1))
    }
}

impl PartialOrd for Item {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exhaustive single-source shortest distances.
pub fn single_source(graph: &Graph, source: NodeId) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; graph.node_count()];
    let mut done = vec![false; graph.node_count()];
    let mut heap = BinaryHeap::new();
    dist[source.0] = 0.0;
    heap.push(Reverse(Item(0.0, source.0)));
    while let Some(Reverse(Item(d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for arc in graph.neighbors(NodeId(u)) {
            let nd = d + arc.weight;
            if nd < dist[arc.to.0] {
                dist[arc.to.0] = nd;
                heap.push(Reverse(Item(nd, arc.to.0)));
            }
        }
    }
    dist
}

/// One full shortest-path run per source.
pub fn full_distances(graph: &Graph, sources: &SourceSet) -> DistanceMatrix {
    DistanceMatrix {
        sources: sources.as_slice().to_vec(),
        rows: sources.iter().map(|s| single_source(graph, s)).collect(),
    }
}

pub fn allpairs_floyd_warshall(graph: &Graph) -> Result<Vec<Vec<f64>>, OracleError> {
    allpairs_floyd_warshall_capped(graph, DEFAULT_FLOYD_WARSHALL_CAP)
}

#[allow(clippy::needless_range_loop)]
pub fn allpairs_floyd_warshall_capped(
    graph: &Graph,
    cap: usize,
) -> Result<Vec<Vec<f64>>, OracleError> {
    let n = graph.node_count();
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    for u in graph.nodes() {
        for arc in graph.neighbors(u) {
            let cell = &mut d[u.0][arc.to.0];
            *cell = cell.min(arc.weight);
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i][k];
            if dik == f64::INFINITY {
                continue;
            }
            for j in 0..n {
                let through = dik + d[k][j];
                if through < d[i][j] {
                    d[i][j] = through;
                }
            }
        }
    }
    Ok(d)
}

/// An exact optimum together with every node that attains the same value.
#[derive(Debug, Clone, PartialEq)]
pub struct Optimum {
    pub node: NodeId,
    pub value: f64,
    pub ties: Vec<NodeId>,
}

fn argmin_by(
    dm: &DistanceMatrix,
    objective: impl Fn(&DistanceMatrix, NodeId) -> f64,
) -> Result<Optimum, OracleError> {
    let candidates = dm.intersection_nodes();
    let value = candidates
        .iter()
        .map(|&v| objective(dm, v))
        .min_by(f64::total_cmp)
        .ok_or(OracleError::NoIntersection)?;
    let ties: Vec<NodeId> = candidates
        .into_iter()
        .filter(|&v| objective(dm, v) == value)
        .collect();
    let node = *ties
        .iter()
        .min_by_key(|&&v| dm.discovery(v))
        .expect("at least one optimal node");
    Ok(Optimum { node, value, ties })
}

/// Column max over sources, then argmin over nodes.
pub fn center_value(dm: &DistanceMatrix, node: NodeId) -> f64 {
    dm.column(node).fold(0.0, f64::max)
}

/// Column sum in source order.
pub fn centroid_value(dm: &DistanceMatrix, node: NodeId) -> f64 {
    dm.column(node).sum()
}

pub fn oracle_center(dm: &DistanceMatrix) -> Result<Optimum, OracleError> {
    argmin_by(dm, center_value)
}

pub fn oracle_centroid(dm: &DistanceMatrix) -> Result<Optimum, OracleError> {
    argmin_by(dm, centroid_value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeKind;

    #[test]
    fn single_node() {
        let g = Graph::from_edges(1, EdgeKind::Directed, []).unwrap();
        let s = SourceSet::new(&g, vec![NodeId(0)]).unwrap();
        assert_eq!(full_distances(&g, &s).rows(), &[vec![0.0]]);
    }

    #[test]
    fn floyd_warshall_directed_pair() {
        let g = Graph::from_edges(2, EdgeKind::Directed, [(0, 1, 7.0)]).unwrap();
        let d = allpairs_floyd_warshall(&g).unwrap();
        assert_eq!(d[0][1], 7.0);
        assert_eq!(d[1][0], f64::INFINITY);
    }

    #[test]
    fn floyd_warshall_triangle() {
        let g = Graph::from_edges(
            3,
            EdgeKind::Undirected,
            [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 3.0)],
        )
        .unwrap();
        let d = allpairs_floyd_warshall(&g).unwrap();
        assert_eq!(d[0][2], 2.0);
        assert_eq!(d[2][0], 2.0);
    }

    #[test]
    fn floyd_warshall_cap() {
        let g = Graph::from_edges(5, EdgeKind::Directed, []).unwrap();
        assert_eq!(
            allpairs_floyd_warshall_capped(&g, 4),
            Err(OracleError::TooLarge { n: 5, cap: 4 })
        );
    }

    #[test]
    fn single_source_is_its_own_optimum() {
        let g = Graph::from_edges(3, EdgeKind::Directed, [(0, 1, 2.0), (1, 2, 2.0)]).unwrap();
        let s = SourceSet::new(&g, vec![NodeId(1)]).unwrap();
        let dm = full_distances(&g, &s);
        let c = oracle_center(&dm).unwrap();
        assert_eq!((c.node, c.value), (NodeId(1), 0.0));
        let c = oracle_centroid(&dm).unwrap();
        assert_eq!((c.node, c.value), (NodeId(1), 0.0));
    }

    #[test]
    fn no_intersection() {
        let g = Graph::from_edges(2, EdgeKind::Directed, []).unwrap();
        let s = SourceSet::new(&g, vec![NodeId(0), NodeId(1)]).unwrap();
        assert_eq!(
            oracle_center(&full_distances(&g, &s)),
            Err(OracleError::NoIntersection)
        );
    }

    #[test]
    fn discovery_order_breaks_ties() {
        // path 0 - 1 - 2 with unit weights, sources 0 and 2: every node sums to 2.
        let g = Graph::from_edges(3, EdgeKind::Undirected, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let s = SourceSet::new(&g, vec![NodeId(0), NodeId(2)]).unwrap();
        let dm = full_distances(&g, &s);
        // ranks: row 0 -> [0,1,2], row 1 -> [2,1,0]; node 1 is seen in round 1.
        assert_eq!(dm.discovery(NodeId(1)), Some((1, 1)));
        assert_eq!(dm.discovery(NodeId(0)), Some((2, 1)));
        assert_eq!(dm.discovery(NodeId(2)), Some((2, 0)));
        let c = oracle_centroid(&dm).unwrap();
        assert_eq!(c.node, NodeId(1));
        assert_eq!(c.ties, vec![NodeId(0), NodeId(1), NodeId(2)]);
    }
}
