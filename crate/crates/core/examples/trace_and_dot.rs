//! Writes the event trace and one Graphviz snapshot per round to a
//! directory (default `target/trace_demo`). Render with
//! `dot -Tpng round_003.dot -o round_003.png`.

use std::fs;
use std::path::PathBuf;

use meetpoint::fixtures;
use meetpoint::search::{self, format_trace, Objective, Strategy};

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map_or_else(|| PathBuf::from("target/trace_demo"), PathBuf::from);
    fs::create_dir_all(&dir)?;

    let (graph, sources) = fixtures::worked_example();
    let mut engine =
        search::start(&graph, &sources, Objective::Centroid, Strategy::Early, true).unwrap();
    loop {
        let path = dir.join(format!("round_{:03}.dot", engine.round()));
        fs::write(path, graph.export_dot(Some(&engine.dist_labels())))?;
        if engine.is_done() {
            break;
        }
        engine.step_round();
    }
    let rounds = engine.round();
    let result = engine.finish().unwrap();
    let trace = format_trace(result.trace.as_ref().unwrap());
    fs::write(dir.join("centroid_early.trace"), &trace)?;
    print!("{trace}");
    println!(
        "{} snapshots and the trace in {}",
        rounds + 1,
        dir.display()
    );
    Ok(())
}
