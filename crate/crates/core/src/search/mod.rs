//! Center and centroid solvers built on one alternating search core.

mod astar;
mod engine;
mod trace;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, NodeId, SourceSet};

pub use astar::{admissibility_check, AStarConfig, AdmissibilityReport, Violation};
pub use engine::{AlternatingSearch, IntersectionTracker, PerSourceSearch};
pub use trace::{format_trace, parse_trace, EventKind, TraceEvent};

use engine::StopRule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Minimize the largest source distance.
    Center,
    /// Minimize the summed source distance.
    Centroid,
}

impl Objective {
    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Center => "center",
            Objective::Centroid => "centroid",
        }
    }

    /// Objective value from per-source distances, in source order.
    pub fn evaluate(self, dists: &[f64]) -> f64 {
        match self {
            Objective::Center => dists.iter().copied().fold(0.0, f64::max),
            Objective::Centroid => dists.iter().sum(),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "center" => Ok(Objective::Center),
            "centroid" => Ok(Objective::Centroid),
            other => Err(format!("unknown objective {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Strategy {
    /// Explore everything reachable from every source.
    Full,
    /// Stop each source by the minimax / minsum rule.
    Early,
    /// Exhaustive alternating A* keyed by `g + h`.
    AStar(AStarConfig),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("no node is reachable from every source")]
    NoIntersection,
    #[error("graph has no node coordinates")]
    MissingCoordinates,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub objective: Objective,
    pub node: NodeId,
    /// Max (center) or sum (centroid) of `per_source_dist`.
    pub value: f64,
    pub per_source_dist: Vec<f64>,
    pub per_source_explored: Vec<usize>,
    /// Nodes settled, summed over sources.
    pub explored: usize,
    /// `S * N`.
    pub explored_possible: usize,
    pub rounds: usize,
    pub trace: Option<Vec<TraceEvent>>,
}

impl SolveResult {
    /// Share of `S * N` settled, in percent.
    pub fn explored_pct(&self) -> f64 {
        if self.explored_possible == 0 {
            return 0.0;
        }
        100.0 * self.explored as f64 / self.explored_possible as f64
    }
}

/// Dispatches to the matching solver.
pub fn solve(
    graph: &Graph,
    sources: &SourceSet,
    objective: Objective,
    strategy: Strategy,
    trace: bool,
) -> Result<SolveResult, SolveError> {
    start(graph, sources, objective, strategy, trace)?.finish()
}

/// Builds the engine for a solve without running it, for callers that want
/// to step rounds themselves.
pub fn start<'g>(
    graph: &'g Graph,
    sources: &SourceSet,
    objective: Objective,
    strategy: Strategy,
    trace: bool,
) -> Result<AlternatingSearch<'g>, SolveError> {
    Ok(match strategy {
        Strategy::Full => AlternatingSearch::new(
            graph,
            sources,
            objective,
            StopRule::Exhaust,
            None,
            None,
            trace,
        ),
        Strategy::Early => AlternatingSearch::new(
            graph,
            sources,
            objective,
            StopRule::Early,
            None,
            None,
            trace,
        ),
        Strategy::AStar(cfg) => {
            let h = cfg.heuristic_values(graph, sources)?;
            let budget = cfg.budget.unwrap_or(sources.len() * graph.node_count());
            AlternatingSearch::new(
                graph,
                sources,
                objective,
                StopRule::Exhaust,
                h,
                Some(budget),
                trace,
            )
        }
    })
}

pub fn solve_center_full(g: &Graph, s: &SourceSet, trace: bool) -> Result<SolveResult, SolveError> {
    solve(g, s, Objective::Center, Strategy::Full, trace)
}

/// Center with the minimax stopping rule; same answer as the full search.
pub fn solve_center_early(
    g: &Graph,
    s: &SourceSet,
    trace: bool,
) -> Result<SolveResult, SolveError> {
    solve(g, s, Objective::Center, Strategy::Early, trace)
}

pub fn solve_centroid_full(
    g: &Graph,
    s: &SourceSet,
    trace: bool,
) -> Result<SolveResult, SolveError> {
    solve(g, s, Objective::Centroid, Strategy::Full, trace)
}

/// Centroid with the minsum stopping rule. This is a heuristic: it can stop
/// at a local minimum whose sum exceeds the true centroid's.
pub fn solve_centroid_early(
    g: &Graph,
    s: &SourceSet,
    trace: bool,
) -> Result<SolveResult, SolveError> {
    solve(g, s, Objective::Centroid, Strategy::Early, trace)
}

pub fn solve_center_astar(
    g: &Graph,
    s: &SourceSet,
    cfg: AStarConfig,
    trace: bool,
) -> Result<SolveResult, SolveError> {
    solve(g, s, Objective::Center, Strategy::AStar(cfg), trace)
}
