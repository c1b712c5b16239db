#![allow(dead_code)]

use meetpoint::graph::{EdgeKind, Graph, NodeId, Point, SourceSet};
use meetpoint::graphgen::{self, sub_seed, GenConfig, InstanceRng};

/// Generator instance as used by the sweep: directed, m = 4n, weights 1..=100.
pub fn bench_instance(n: usize, s: usize, seed: u64) -> (Graph, SourceSet) {
    graphgen::generate(&GenConfig::new(n, s, seed)).expect("instance generates")
}

/// Unfiltered random graph: may be undirected, sparse, disconnected, and have
/// many equal distances. Weights are multiples of 1/4 so sums are exact in
/// any order. Sources are distinct.
pub fn wild_instance(seed: u64, max_n: usize) -> (Graph, SourceSet) {
    let mut rng = InstanceRng::new(sub_seed(seed, 0xA11));
    let n = 1 + rng.below(max_n as u64) as usize;
    let kind = if rng.below(2) == 0 {
        EdgeKind::Directed
    } else {
        EdgeKind::Undirected
    };
    let m = rng.below((3 * n) as u64 + 1) as usize;
    let small_weights = rng.below(2) == 0;
    let edges: Vec<_> = (0..m)
        .filter_map(|_| {
            let u = rng.below(n as u64) as usize;
            let v = rng.below(n as u64) as usize;
            let w = if small_weights {
                rng.range_inclusive(1, 3) as f64
            } else {
                rng.range_inclusive(1, 200) as f64 * 0.25
            };
            (u != v).then_some((u, v, w))
        })
        .collect();
    let g = Graph::from_edges(n, kind, edges).unwrap();
    let s = 1 + rng.below(n.min(6) as u64) as usize;
    let mut ids: Vec<usize> = (0..n).collect();
    for i in 0..s {
        let j = i + rng.below((n - i) as u64) as usize;
        ids.swap(i, j);
    }
    let sources = SourceSet::new(&g, ids[..s].iter().map(|&i| NodeId(i)).collect()).unwrap();
    (g, sources)
}

/// Undirected geometric graph whose weights are at least the Euclidean
/// length of each edge, so the straight-line estimate never overshoots.
pub fn geometric_instance(seed: u64, n: usize, s: usize) -> (Graph, SourceSet) {
    let mut rng = InstanceRng::new(sub_seed(seed, 0x6E0));
    let pts: Vec<Point> = (0..n)
        .map(|_| Point::new(rng.unit() * 100.0, rng.unit() * 100.0))
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        let mut near: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        near.sort_by(|&a, &b| {
            pts[u]
                .distance(&pts[a])
                .total_cmp(&pts[u].distance(&pts[b]))
        });
        for &v in near.iter().take(3) {
            let stretch = 1.0 + rng.unit() * 0.5;
            edges.push((u, v, pts[u].distance(&pts[v]).max(1e-9) * stretch));
        }
    }
    let g = Graph::from_edges(n, EdgeKind::Undirected, edges)
        .unwrap()
        .with_coords(pts)
        .unwrap();
    let mut ids: Vec<usize> = (0..n).collect();
    for i in 0..s {
        let j = i + rng.below((n - i) as u64) as usize;
        ids.swap(i, j);
    }
    let sources = SourceSet::new(&g, ids[..s].iter().map(|&i| NodeId(i)).collect()).unwrap();
    (g, sources)
}

/// `w x h` grid with unit spacing; weights equal edge lengths.
pub fn grid(w: usize, h: usize) -> Graph {
    let id = |x: usize, y: usize| y * w + x;
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                edges.push((id(x, y), id(x + 1, y), 1.0));
            }
            if y + 1 < h {
                edges.push((id(x, y), id(x, y + 1), 1.0));
            }
        }
    }
    let pts = (0..h)
        .flat_map(|y| (0..w).map(move |x| Point::new(x as f64, y as f64)))
        .collect();
    Graph::from_edges(w * h, EdgeKind::Undirected, edges)
        .unwrap()
        .with_coords(pts)
        .unwrap()
}
