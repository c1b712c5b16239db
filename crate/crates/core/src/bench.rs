//! Randomized experiment harness.
//!
//! For every `(S, V)` cell, `iterations` instances are generated and solved
//! four ways. Per instance:
//!
//! * center explored % = `100 * k / n`, `k` settled by the early center
//!   search and `n` settled by the full center search;
//! * centroid explored % = same, with `k` from the early centroid search
//!   (the denominator stays the full center search);
//! * value ratio % = `100 * early centroid sum / exact centroid sum`;
//! * hit = the early centroid node is the exact centroid node.
//!
//! Means and standard deviations use the population convention. Instances are
//! solved in parallel but collected in index order, so output bytes do not
//! depend on scheduling.

use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::graphgen::{self, sub_seed, GenError, GenTemplate};
use crate::oracle::{self, OracleError};
use crate::search::{self, SolveError};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub sources_list: Vec<usize>,
    pub vertices_list: Vec<usize>,
    pub iterations: usize,
    pub gen: GenTemplate,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            sources_list: vec![2, 3, 5, 10],
            vertices_list: vec![20, 50, 100, 500],
            iterations: 1000,
            gen: GenTemplate::default(),
            seed: 0,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.iterations == 0 {
            return Err(BenchError::InvalidConfig("iterations must be >= 1".into()));
        }
        if self.sources_list.is_empty() || self.vertices_list.is_empty() {
            return Err(BenchError::InvalidConfig(
                "source and vertex lists must be non-empty".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("invalid sweep config: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Summary {
    pub mean: f64,
    pub sd: f64,
}

impl Summary {
    /// Population mean and standard deviation. Zero for empty input.
    pub fn of(values: &[f64]) -> Summary {
        if values.is_empty() {
            return Summary::default();
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
        Summary {
            mean,
            sd: var.sqrt(),
        }
    }
}

/// Metrics of one solved instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceMetrics {
    pub center_full_explored: usize,
    pub center_early_explored: usize,
    pub centroid_early_explored: usize,
    pub center_explored_pct: f64,
    pub centroid_explored_pct: f64,
    pub value_ratio_pct: f64,
    pub hit: bool,
    /// Early center matched the full center exactly (node and value).
    pub center_exact: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentStats {
    pub sources: usize,
    pub vertices: usize,
    pub iterations: usize,
    pub seed: u64,
    pub center_explored_pct: Summary,
    pub centroid_explored_pct: Summary,
    pub value_ratio_pct: Summary,
    /// Mean is the hit rate in percent; sd is over the 0/100 indicator.
    pub centroid_hit_rate_pct: Summary,
    /// Instances where the early center search disagreed with the full one.
    pub center_mismatches: usize,
}

impl ExperimentStats {
    pub fn metric(&self, metric: Metric) -> Summary {
        match metric {
            Metric::CenterExplored => self.center_explored_pct,
            Metric::CentroidExplored => self.centroid_explored_pct,
            Metric::ValueRatio => self.value_ratio_pct,
            Metric::HitRate => self.centroid_hit_rate_pct,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    CenterExplored,
    CentroidExplored,
    ValueRatio,
    HitRate,
}

impl Metric {
    pub const ALL: [Metric; 4] = [
        Metric::CenterExplored,
        Metric::CentroidExplored,
        Metric::ValueRatio,
        Metric::HitRate,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Metric::CenterExplored => "center_explored_pct",
            Metric::CentroidExplored => "centroid_explored_pct",
            Metric::ValueRatio => "centroid_value_ratio_pct",
            Metric::HitRate => "centroid_hit_rate_pct",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Metric::CenterExplored => "Percentage of nodes explored, center (early vs full)",
            Metric::CentroidExplored => {
                "Percentage of nodes explored, centroid (early vs full center)"
            }
            Metric::ValueRatio => "Early centroid sum over exact centroid sum, percent",
            Metric::HitRate => "Early centroid hit rate, percent",
        }
    }
}

/// Seed of cell `(S, V)` within a sweep.
pub fn cell_seed(sweep_seed: u64, sources: usize, vertices: usize) -> u64 {
    sub_seed(sweep_seed, ((sources as u64) << 32) | vertices as u64)
}

/// Generates and measures instance `index` of a cell.
pub fn run_instance(
    sources: usize,
    vertices: usize,
    seed: u64,
    index: usize,
    template: &GenTemplate,
) -> Result<InstanceMetrics, BenchError> {
    let cfg = template.config(vertices, sources, sub_seed(seed, index as u64));
    let (graph, set) = graphgen::generate(&cfg)?;
    let center_full = search::solve_center_full(&graph, &set, false)?;
    let center_early = search::solve_center_early(&graph, &set, false)?;
    let centroid_early = search::solve_centroid_early(&graph, &set, false)?;
    let exact = oracle::oracle_centroid(&oracle::full_distances(&graph, &set))?;

    let pct = |k: usize| 100.0 * k as f64 / center_full.explored as f64;
    let value_ratio_pct = if exact.value == 0.0 {
        100.0
    } else {
        100.0 * centroid_early.value / exact.value
    };
    Ok(InstanceMetrics {
        center_full_explored: center_full.explored,
        center_early_explored: center_early.explored,
        centroid_early_explored: centroid_early.explored,
        center_explored_pct: pct(center_early.explored),
        centroid_explored_pct: pct(centroid_early.explored),
        value_ratio_pct,
        hit: centroid_early.node == exact.node && centroid_early.value == exact.value,
        center_exact: center_early.node == center_full.node
            && center_early.value == center_full.value,
    })
}

/// Runs `iterations` instances of one `(S, V)` cell.
pub fn run_cell(
    sources: usize,
    vertices: usize,
    iterations: usize,
    seed: u64,
    template: &GenTemplate,
) -> Result<ExperimentStats, BenchError> {
    if iterations == 0 {
        return Err(BenchError::InvalidConfig("iterations must be >= 1".into()));
    }
    let metrics = (0..iterations)
        .into_par_iter()
        .map(|i| run_instance(sources, vertices, seed, i, template))
        .collect::<Result<Vec<_>, _>>()?;

    let column = |f: fn(&InstanceMetrics) -> f64| -> Summary {
        Summary::of(&metrics.iter().map(f).collect::<Vec<_>>())
    };
    Ok(ExperimentStats {
        sources,
        vertices,
        iterations,
        seed,
        center_explored_pct: column(|m| m.center_explored_pct),
        centroid_explored_pct: column(|m| m.centroid_explored_pct),
        value_ratio_pct: column(|m| m.value_ratio_pct),
        centroid_hit_rate_pct: column(|m| if m.hit { 100.0 } else { 0.0 }),
        center_mismatches: metrics.iter().filter(|m| !m.center_exact).count(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellOutcome {
    pub sources: usize,
    pub vertices: usize,
    pub seed: u64,
    pub result: Result<ExperimentStats, BenchError>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub config: SweepConfig,
    pub cells: Vec<CellOutcome>,
}

impl SweepResult {
    pub fn stats(&self) -> Vec<ExperimentStats> {
        self.cells
            .iter()
            .filter_map(|c| c.result.as_ref().ok().cloned())
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("# sd: population standard deviation (divisor n)\n");
        out.push_str("S,V,metric,mean,sd,iters,seed\n");
        for cell in &self.cells {
            let Ok(stats) = &cell.result else { continue };
            for metric in Metric::ALL {
                let s = stats.metric(metric);
                writeln!(
                    out,
                    "{},{},{},{:.6},{:.6},{},{}",
                    stats.sources,
                    stats.vertices,
                    metric.key(),
                    s.mean,
                    s.sd,
                    stats.iterations,
                    stats.seed
                )
                .unwrap();
            }
        }
        out
    }

    /// One block per metric: rows are source counts, columns vertex counts,
    /// mean above standard deviation.
    pub fn to_text_table(&self) -> String {
        let cfg = &self.config;
        let mut out = String::new();
        for metric in Metric::ALL {
            writeln!(out, "{}", metric.title()).unwrap();
            write!(out, "{:>8}", "S \\ V").unwrap();
            for v in &cfg.vertices_list {
                write!(out, " {v:>12}").unwrap();
            }
            out.push('\n');
            for &s in &cfg.sources_list {
                let cells: Vec<_> = cfg
                    .vertices_list
                    .iter()
                    .map(|&v| {
                        self.cells
                            .iter()
                            .find(|c| c.sources == s && c.vertices == v)
                            .map(|c| c.result.as_ref().map(|st| st.metric(metric)))
                    })
                    .collect();
                write!(out, "{s:>8}").unwrap();
                for c in &cells {
                    match c {
                        Some(Ok(sum)) => write!(out, " {:>12.6}", sum.mean).unwrap(),
                        _ => write!(out, " {:>12}", "absent").unwrap(),
                    }
                }
                out.push('\n');
                write!(out, "{:>8}", "").unwrap();
                for c in &cells {
                    match c {
                        Some(Ok(sum)) => write!(out, " {:>12.2}", sum.sd).unwrap(),
                        _ => write!(out, " {:>12}", "").unwrap(),
                    }
                }
                out.push('\n');
            }
            out.push('\n');
        }
        for cell in &self.cells {
            if let Err(e) = &cell.result {
                writeln!(
                    out,
                    "cell S={} V={} absent: {e}",
                    cell.sources, cell.vertices
                )
                .unwrap();
            }
        }
        out
    }
}

/// Maps `run_cell` over the `S x V` grid. A failing cell is recorded and the
/// sweep continues.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult, BenchError> {
    cfg.validate()?;
    let mut cells = Vec::new();
    for &s in &cfg.sources_list {
        for &v in &cfg.vertices_list {
            let seed = cell_seed(cfg.seed, s, v);
            cells.push(CellOutcome {
                sources: s,
                vertices: v,
                seed,
                result: run_cell(s, v, cfg.iterations, seed, &cfg.gen),
            });
        }
    }
    Ok(SweepResult {
        config: cfg.clone(),
        cells,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrendFamily {
    /// Center explored % rises with S and falls with V.
    CenterExplored,
    /// The same shape for centroid explored %.
    CentroidExplored,
    /// Hit rate falls with V.
    HitRate,
    /// Mean value ratio stays within [100, 125].
    ValueRatioBand,
    /// At the smallest S, the largest V explores at most half of the smallest V.
    CenterScaling,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrendCheck {
    pub family: TrendFamily,
    pub description: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TrendReport {
    pub checks: Vec<TrendCheck>,
}

impl TrendReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn family(&self, family: TrendFamily) -> impl Iterator<Item = &TrendCheck> {
        self.checks.iter().filter(move |c| c.family == family)
    }

    pub fn family_passed(&self, family: TrendFamily) -> bool {
        self.family(family).all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TrendCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn lookup(stats: &[ExperimentStats], s: usize, v: usize) -> Option<&ExperimentStats> {
    stats.iter().find(|c| c.sources == s && c.vertices == v)
}

fn sorted_unique(values: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = values.collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Monotonicity and band checks over whatever cells are present. Adjacent
/// cells are compared with weak inequalities.
pub fn trend_checks(stats: &[ExperimentStats]) -> TrendReport {
    let ss = sorted_unique(stats.iter().map(|c| c.sources));
    let vs = sorted_unique(stats.iter().map(|c| c.vertices));
    let mut checks = Vec::new();

    let mut monotone = |family, metric: Metric, in_s: bool, in_v: bool| {
        let name = metric.key();
        if in_s {
            for &v in &vs {
                for w in ss.windows(2) {
                    if let (Some(a), Some(b)) = (lookup(stats, w[0], v), lookup(stats, w[1], v)) {
                        let (x, y) = (a.metric(metric).mean, b.metric(metric).mean);
                        checks.push(TrendCheck {
                            family,
                            description: format!(
                                "{name} V={v}: S={} ({x:.3}) <= S={} ({y:.3})",
                                w[0], w[1]
                            ),
                            passed: x <= y,
                        });
                    }
                }
            }
        }
        if in_v {
            for &s in &ss {
                for w in vs.windows(2) {
                    if let (Some(a), Some(b)) = (lookup(stats, s, w[0]), lookup(stats, s, w[1])) {
                        let (x, y) = (a.metric(metric).mean, b.metric(metric).mean);
                        checks.push(TrendCheck {
                            family,
                            description: format!(
                                "{name} S={s}: V={} ({x:.3}) >= V={} ({y:.3})",
                                w[0], w[1]
                            ),
                            passed: x >= y,
                        });
                    }
                }
            }
        }
    };
    monotone(
        TrendFamily::CenterExplored,
        Metric::CenterExplored,
        true,
        true,
    );
    monotone(
        TrendFamily::CentroidExplored,
        Metric::CentroidExplored,
        true,
        true,
    );
    monotone(TrendFamily::HitRate, Metric::HitRate, false, true);

    for c in stats {
        let m = c.value_ratio_pct.mean;
        checks.push(TrendCheck {
            family: TrendFamily::ValueRatioBand,
            description: format!(
                "centroid_value_ratio_pct S={} V={}: {m:.3} in [100, 125]",
                c.sources, c.vertices
            ),
            passed: (100.0..=125.0).contains(&m),
        });
    }

    if let (Some(&s), Some(&vlo), Some(&vhi)) = (ss.first(), vs.first(), vs.last()) {
        if vlo != vhi {
            if let (Some(a), Some(b)) = (lookup(stats, s, vlo), lookup(stats, s, vhi)) {
                let (x, y) = (a.center_explored_pct.mean, b.center_explored_pct.mean);
                checks.push(TrendCheck {
                    family: TrendFamily::CenterScaling,
                    description: format!(
                        "center_explored_pct S={s}: V={vhi} ({y:.3}) * 2 <= V={vlo} ({x:.3})"
                    ),
                    passed: 2.0 * y <= x,
                });
            }
        }
    }
    TrendReport { checks }
}
