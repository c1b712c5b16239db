//! Generates a few seeded random instances and prints their summaries. The
//! same seed always yields the same instance.

use meetpoint::graphgen::{self, sub_seed, EdgeModel, GenConfig};
use meetpoint::oracle;

fn main() {
    for i in 0..3 {
        let cfg = GenConfig::new(50, 3, sub_seed(7, i));
        let (g, s) = graphgen::generate(&cfg).unwrap();
        let dm = oracle::full_distances(&g, &s);
        println!(
            "seed {:>20}: {} arcs, sources {}, {} common nodes",
            cfg.seed,
            g.edges().len(),
            s.to_csv(),
            dm.intersection_nodes().len()
        );
    }

    let sparse = GenConfig {
        edges: EdgeModel::Density(0.02),
        coords: Some(100.0),
        ..GenConfig::new(40, 2, 1)
    };
    let (g, s) = graphgen::generate(&sparse).unwrap();
    print!(
        "{}",
        graphgen::instance_text(&g, &s)
            .lines()
            .take(8)
            .collect::<Vec<_>>()
            .join("\n")
    );
    println!("\n...");
}
