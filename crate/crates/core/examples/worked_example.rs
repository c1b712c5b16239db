//! Solves the bundled 8-node instance every way and prints a comparison.

use meetpoint::fixtures;
use meetpoint::search::{self, Objective, Strategy};

fn main() {
    let (graph, sources) = fixtures::worked_example();
    println!(
        "{} nodes, {} edges, sources {}",
        graph.node_count(),
        graph.edges().len(),
        sources.to_csv()
    );
    for objective in [Objective::Center, Objective::Centroid] {
        for strategy in [Strategy::Full, Strategy::Early] {
            let r = search::solve(&graph, &sources, objective, strategy, false).unwrap();
            println!(
                "{:<8} {:<5} node={} value={} per-source={:?} explored={}/{} ({}%)",
                objective.as_str(),
                format!("{strategy:?}").to_lowercase(),
                r.node,
                r.value,
                r.per_source_dist,
                r.explored,
                r.explored_possible,
                r.explored_pct()
            );
        }
    }
}
