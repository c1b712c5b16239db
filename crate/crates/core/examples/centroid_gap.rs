//! The early-stopping centroid search is a heuristic. On this instance it
//! settles for a node whose distance sum is worse than the true centroid's.

use meetpoint::fixtures;
use meetpoint::oracle;
use meetpoint::search;

fn main() {
    let (graph, sources) = fixtures::relative_minimum();
    let early = search::solve_centroid_early(&graph, &sources, false).unwrap();
    let full = search::solve_centroid_full(&graph, &sources, false).unwrap();
    let exact = oracle::oracle_centroid(&oracle::full_distances(&graph, &sources)).unwrap();

    println!("sources {}", sources.to_csv());
    println!(
        "early: node {} sum {} ({} settles)",
        early.node, early.value, early.explored
    );
    println!(
        "full:  node {} sum {} ({} settles)",
        full.node, full.value, full.explored
    );
    println!("exact: node {} sum {}", exact.node, exact.value);
    println!("ratio: {:.2}%", 100.0 * early.value / exact.value);
}
