//! Steps the early-stopping center search one round at a time and shows
//! when each source gives up.

use meetpoint::fixtures;
use meetpoint::search::{self, EventKind, Objective, Strategy};

fn main() {
    let (graph, sources) = fixtures::worked_example();
    let mut engine = search::start(&graph, &sources, Objective::Center, Strategy::Early, false)
        .expect("no heuristic needed");
    while !engine.is_done() {
        let events = engine.step_round();
        let best = engine.tracker().best_value();
        println!("round {} (minimax {best})", engine.round());
        for e in events.iter().filter(|e| e.kind != EventKind::Relax) {
            println!("  {e}");
        }
    }
    let r = engine.finish().unwrap();
    println!(
        "center {} with max distance {}, {} of {} settles",
        r.node, r.value, r.explored, r.explored_possible
    );
}
