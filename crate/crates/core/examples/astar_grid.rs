//! Alternating A* on a unit grid, where edge lengths equal straight-line
//! distances and the heuristic is admissible.

use meetpoint::graph::{EdgeKind, Graph, NodeId, Point, SourceSet};
use meetpoint::search::{self, admissibility_check, AStarConfig};

fn grid(w: usize, h: usize) -> Graph {
    let id = |x, y| y * w + x;
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
    let coords = (0..h)
        .flat_map(|y| (0..w).map(move |x| Point::new(x as f64, y as f64)))
        .collect();
    Graph::from_edges(w * h, EdgeKind::Undirected, edges)
        .unwrap()
        .with_coords(coords)
        .unwrap()
}

fn main() {
    let g = grid(10, 10);
    let sources = SourceSet::new(&g, vec![NodeId(0), NodeId(9), NodeId(95)]).unwrap();

    let rep = admissibility_check(&g, &AStarConfig::default(), Some(1000), 7).unwrap();
    println!(
        "{} pairs checked, {} violations",
        rep.pairs_checked,
        rep.violations.len()
    );

    let full = search::solve_center_full(&g, &sources, false).unwrap();
    let astar = search::solve_center_astar(&g, &sources, AStarConfig::default(), false).unwrap();
    println!(
        "full:  node {} max {} ({} settles)",
        full.node, full.value, full.explored
    );
    println!(
        "astar: node {} max {} ({} settles)",
        astar.node, astar.value, astar.explored
    );

    let budget = AStarConfig {
        budget: Some(120),
        ..AStarConfig::default()
    };
    let capped = search::solve_center_astar(&g, &sources, budget, false).unwrap();
    println!(
        "astar, 120 settles: node {} max {}",
        capped.node, capped.value
    );
}
