use std::collections::HashMap;

use super::SolveError;
use crate::graph::{Graph, NodeId, SourceSet};
use crate::graphgen::InstanceRng;
use crate::oracle;

/// Settings for the alternating A* variant.
///
/// The heuristic is `h(v) = max_j |v - s_j| / speed_divisor` over node
/// coordinates. It is only sound when every edge weight is at least its
/// Euclidean length divided by `speed_divisor`; use [`admissibility_check`]
/// to test a graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AStarConfig {
    pub speed_divisor: f64,
    /// With `false` the keys reduce to plain Dijkstra and coordinates are
    /// not needed.
    pub heuristic: bool,
    /// Total settled-node budget across sources; `None` means `S * N`.
    pub budget: Option<usize>,
}

impl Default for AStarConfig {
    fn default() -> Self {
        AStarConfig {
            speed_divisor: 1.0,
            heuristic: true,
            budget: None,
        }
    }
}

impl AStarConfig {
    pub fn with_speed_divisor(speed_divisor: f64) -> Self {
        AStarConfig {
            speed_divisor,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), SolveError> {
        if self.speed_divisor.is_nan() || self.speed_divisor <= 0.0 {
            return Err(SolveError::InvalidConfig(format!(
                "speed divisor must be positive, got {}",
                self.speed_divisor
            )));
        }
        Ok(())
    }

    pub(crate) fn heuristic_values(
        &self,
        graph: &Graph,
        sources: &SourceSet,
    ) -> Result<Option<Vec<f64>>, SolveError> {
        self.validate()?;
        if !self.heuristic {
            return Ok(None);
        }
        let coords = graph.coords().ok_or(SolveError::MissingCoordinates)?;
        let h = coords
            .iter()
            .map(|p| {
                sources
                    .iter()
                    .map(|s| p.distance(&coords[s.0]))
                    .fold(0.0, f64::max)
                    / self.speed_divisor
            })
            .collect();
        Ok(Some(h))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub from: NodeId,
    pub to: NodeId,
    /// Straight-line distance over the speed divisor.
    pub estimate: f64,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct AdmissibilityReport {
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares `|u - v| / speed_divisor` with the true shortest distance.
///
/// `samples = Some(k)` checks `k` random ordered pairs drawn from `seed`;
/// `None` checks every ordered pair. Unreachable pairs never violate.
pub fn admissibility_check(
    graph: &Graph,
    cfg: &AStarConfig,
    samples: Option<usize>,
    seed: u64,
) -> Result<AdmissibilityReport, SolveError> {
    cfg.validate()?;
    let coords = graph.coords().ok_or(SolveError::MissingCoordinates)?;
    let n = graph.node_count();
    let pairs: Vec<(usize, usize)> = match samples {
        None => (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect(),
        Some(_) if n < 2 => Vec::new(),
        Some(k) => {
            let mut rng = InstanceRng::new(seed);
            (0..k)
                .map(|_| {
                    let u = rng.below(n as u64) as usize;
                    let mut v = rng.below(n as u64 - 1) as usize;
                    if v >= u {
                        v += 1;
                    }
                    (u, v)
                })
                .collect()
        }
    };

    let mut rows: HashMap<usize, Vec<f64>> = HashMap::new();
    let mut report = AdmissibilityReport::default();
    for (u, v) in pairs {
        let row = rows
            .entry(u)
            .or_insert_with(|| oracle::single_source(graph, NodeId(u)));
        let distance = row[v];
        let estimate = coords[u].distance(&coords[v]) / cfg.speed_divisor;
        report.pairs_checked += 1;
        if estimate > distance {
            report.violations.push(Violation {
                from: NodeId(u),
                to: NodeId(v),
                estimate,
                distance,
            });
        }
    }
    Ok(report)
}
