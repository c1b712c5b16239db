//! The alternating multi-source stepping core.
//!
//! One round gives every live source exactly one selection, in source-set
//! order. Stopping thresholds (`minimax` / `minsum`) are read as they stood at
//! the start of the round and refreshed when the round ends, so all sources in
//! a round see the same threshold.
//!
//! * Center early stop: a popped key strictly above the threshold ends that
//!   source; the popped node is not settled.
//! * Centroid early stop: settling an intersection node whose sum is strictly
//!   above the threshold ends that source; the node counts as explored.
//!
//! Among intersection nodes with equal objective value the first one
//! discovered is kept.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use super::trace::{EventKind, TraceEvent};
use super::{Objective, SolveError, SolveResult};
use crate::graph::{Graph, NodeId, SourceSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum StopRule {
    Exhaust,
    Early,
}

#[derive(Clone, Copy, Debug)]
struct Entry {
    key: f64,
    node: NodeId,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

// (key, node id) ascending once wrapped in `Reverse`.
impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key
            .total_cmp(&other.key)
            .then(self.node.cmp(&other.node))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// State of the search rooted at one source. Stale frontier entries are
/// skipped on extraction instead of being decreased in place.
#[derive(Debug, Clone)]
pub struct PerSourceSearch {
    source: NodeId,
    dist: Vec<f64>,
    visited: Vec<bool>,
    frontier: BinaryHeap<Reverse<Entry>>,
    terminated: bool,
    extracted_count: usize,
}

impl PerSourceSearch {
    fn new(n: usize, source: NodeId, source_key: f64) -> Self {
        let mut dist = vec![f64::INFINITY; n];
        dist[source.0] = 0.0;
        let mut frontier = BinaryHeap::new();
        frontier.push(Reverse(Entry {
            key: source_key,
            node: source,
        }));
        PerSourceSearch {
            source,
            dist,
            visited: vec![false; n],
            frontier,
            terminated: false,
            extracted_count: 0,
        }
    }

    pub fn source(&self) -> NodeId {
        self.source
    }

    /// Tentative distances; final for settled nodes.
    pub fn dist(&self) -> &[f64] {
        &self.dist
    }

    pub fn is_settled(&self, node: NodeId) -> bool {
        self.visited[node.0]
    }

    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    pub fn extracted_count(&self) -> usize {
        self.extracted_count
    }

    fn pop_unsettled(&mut self) -> Option<Entry> {
        while let Some(Reverse(entry)) = self.frontier.pop() {
            if !self.visited[entry.node.0] {
                return Some(entry);
            }
        }
        None
    }
}

/// Tracks how many sources have settled each node and the best
/// intersection node seen so far.
#[derive(Debug, Clone)]
pub struct IntersectionTracker {
    settled_by: Vec<u32>,
    best: Option<(NodeId, f64)>,
}

impl IntersectionTracker {
    fn new(n: usize) -> Self {
        IntersectionTracker {
            settled_by: vec![0; n],
            best: None,
        }
    }

    pub fn settled_by(&self, node: NodeId) -> usize {
        self.settled_by[node.0] as usize
    }

    pub fn best_node(&self) -> Option<NodeId> {
        self.best.map(|b| b.0)
    }

    /// Running `minimax` / `minsum`; infinite until the first intersection.
    pub fn best_value(&self) -> f64 {
        self.best.map_or(f64::INFINITY, |b| b.1)
    }

    /// Records an intersection node. Returns whether it became the best.
    fn offer(&mut self, node: NodeId, value: f64) -> bool {
        if value < self.best_value() {
            self.best = Some((node, value));
            true
        } else {
            false
        }
    }
}

/// Alternating search over all sources, advanced one round at a time.
#[derive(Debug, Clone)]
pub struct AlternatingSearch<'g> {
    graph: &'g Graph,
    sources: SourceSet,
    objective: Objective,
    stop: StopRule,
    heuristic: Option<Vec<f64>>,
    budget: Option<usize>,
    searches: Vec<PerSourceSearch>,
    tracker: IntersectionTracker,
    round: usize,
    done: bool,
    record: bool,
    trace: Vec<TraceEvent>,
}

impl<'g> AlternatingSearch<'g> {
    pub(crate) fn new(
        graph: &'g Graph,
        sources: &SourceSet,
        objective: Objective,
        stop: StopRule,
        heuristic: Option<Vec<f64>>,
        budget: Option<usize>,
        record: bool,
    ) -> Self {
        let n = graph.node_count();
        let searches = sources
            .iter()
            .map(|s| {
                let h = heuristic.as_ref().map_or(0.0, |h| h[s.0]);
                PerSourceSearch::new(n, s, h)
            })
            .collect();
        AlternatingSearch {
            graph,
            sources: sources.clone(),
            objective,
            stop,
            heuristic,
            budget,
            searches,
            tracker: IntersectionTracker::new(n),
            round: 0,
            done: false,
            record,
            trace: Vec::new(),
        }
    }

    /// Plain alternating Dijkstra with the given stopping behaviour.
    pub fn dijkstra(
        graph: &'g Graph,
        sources: &SourceSet,
        objective: Objective,
        early_stop: bool,
    ) -> Self {
        let stop = if early_stop {
            StopRule::Early
        } else {
            StopRule::Exhaust
        };
        Self::new(graph, sources, objective, stop, None, None, false)
    }

    pub fn searches(&self) -> &[PerSourceSearch] {
        &self.searches
    }

    pub fn tracker(&self) -> &IntersectionTracker {
        &self.tracker
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn is_done(&self) -> bool {
        self.done
    }

    pub fn explored(&self) -> usize {
        self.searches.iter().map(|s| s.extracted_count).sum()
    }

    /// Per-node label `d_0,d_1,...` with `-` for unreached and `*` for
    /// settled, for rendering intermediate states.
    pub fn dist_labels(&self) -> Vec<String> {
        (0..self.graph.node_count())
            .map(|v| {
                self.searches
                    .iter()
                    .map(|s| {
                        let d = s.dist[v];
                        match (d.is_finite(), s.visited[v]) {
                            (false, _) => "-".to_string(),
                            (true, true) => format!("{d}*"),
                            (true, false) => d.to_string(),
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect()
    }

    fn objective_at(&self, node: NodeId) -> f64 {
        let column = self.searches.iter().map(|s| s.dist[node.0]);
        match self.objective {
            Objective::Center => column.fold(0.0, f64::max),
            Objective::Centroid => column.sum(),
        }
    }

    fn h(&self, node: NodeId) -> f64 {
        self.heuristic.as_ref().map_or(0.0, |h| h[node.0])
    }

    fn budget_spent(&self) -> bool {
        self.budget.is_some_and(|b| self.explored() >= b)
    }

    /// One selection + relaxation per live source, in source-set order.
    /// Returns the events of this round; a no-op once the search is done.
    pub fn step_round(&mut self) -> Vec<TraceEvent> {
        if self.done {
            return Vec::new();
        }
        self.round += 1;
        let iteration = self.round;
        let threshold = self.tracker.best_value();
        let total = self.searches.len();
        let mut events = Vec::new();
        let mut emit = |source: Option<usize>, kind, node: Option<NodeId>, value| {
            events.push(TraceEvent {
                iteration,
                source,
                kind,
                node,
                value,
            })
        };

        for j in 0..total {
            if self.searches[j].terminated {
                continue;
            }
            if self.budget_spent() {
                break;
            }
            let Some(entry) = self.searches[j].pop_unsettled() else {
                self.searches[j].terminated = true;
                continue;
            };
            let node = entry.node;
            let g = self.searches[j].dist[node.0];

            if self.stop == StopRule::Early && self.objective == Objective::Center && g > threshold
            {
                self.searches[j].terminated = true;
                emit(Some(j), EventKind::SourceTerminated, Some(node), g);
                continue;
            }

            let search = &mut self.searches[j];
            search.visited[node.0] = true;
            search.extracted_count += 1;
            emit(Some(j), EventKind::Extract, Some(node), g);
            for arc in self.graph.neighbors(node) {
                let to = arc.to;
                let nd = g + arc.weight;
                if !self.searches[j].visited[to.0] && nd < self.searches[j].dist[to.0] {
                    let key = nd + self.h(to);
                    let search = &mut self.searches[j];
                    search.dist[to.0] = nd;
                    search.frontier.push(Reverse(Entry { key, node: to }));
                    emit(Some(j), EventKind::Relax, Some(to), nd);
                }
            }

            self.tracker.settled_by[node.0] += 1;
            if self.tracker.settled_by[node.0] as usize == total {
                let value = self.objective_at(node);
                emit(Some(j), EventKind::Intersection, Some(node), value);
                if self.tracker.offer(node, value) && self.stop == StopRule::Early {
                    let kind = match self.objective {
                        Objective::Center => EventKind::MinimaxUpdate,
                        Objective::Centroid => EventKind::MinsumUpdate,
                    };
                    emit(Some(j), kind, Some(node), value);
                }
                if self.stop == StopRule::Early
                    && self.objective == Objective::Centroid
                    && value > threshold
                {
                    self.searches[j].terminated = true;
                    emit(Some(j), EventKind::SourceTerminated, Some(node), value);
                }
            }
        }

        if self.budget_spent() {
            for s in &mut self.searches {
                s.terminated = true;
            }
        }
        if self.searches.iter().all(|s| s.terminated) {
            self.done = true;
            emit(
                None,
                EventKind::Finished,
                self.tracker.best_node(),
                self.tracker.best_value(),
            );
        }
        if self.record {
            self.trace.extend(events.iter().cloned());
        }
        events
    }

    /// Runs remaining rounds to completion.
    pub fn run(&mut self) {
        while !self.done {
            self.step_round();
        }
    }

    /// Runs to completion and packages the result.
    pub fn finish(mut self) -> Result<SolveResult, SolveError> {
        self.run();
        let node = self.tracker.best_node().ok_or(SolveError::NoIntersection)?;
        let per_source_dist = self.searches.iter().map(|s| s.dist[node.0]).collect();
        Ok(SolveResult {
            objective: self.objective,
            node,
            value: self.tracker.best_value(),
            per_source_dist,
            per_source_explored: self.searches.iter().map(|s| s.extracted_count).collect(),
            explored: self.explored(),
            explored_possible: self.sources.len() * self.graph.node_count(),
            rounds: self.round,
            trace: self.record.then_some(self.trace),
        })
    }
}
