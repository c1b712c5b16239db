//! Deterministic random instances.
//!
//! Randomness comes from ChaCha8 seeded through `rand_core`'s `seed_from_u64`.
//! Integers are drawn with Lemire's multiply-and-reject method and floats
//! from the top 53 bits of a `u64`, so a given seed yields the same instance
//! on any platform. Draw order for one attempt: arcs, then weights (in sorted
//! arc order), then sources, then coordinates when requested.
//!
//! Attempt `k` of `generate` is seeded with `sub_seed(cfg.seed, k)`. An
//! attempt is rejected when no node is reachable from every source.

use std::collections::HashSet;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::graph::{EdgeKind, Graph, NodeId, Point, SourceSet};
use crate::oracle;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent seed for stream `stream` of `seed`. For a fixed `seed` this
/// is injective in `stream`.
pub fn sub_seed(seed: u64, stream: u64) -> u64 {
    mix64(seed.wrapping_add(stream.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

/// Seeded generator with portable sampling helpers.
#[derive(Debug, Clone)]
pub struct InstanceRng(ChaCha8Rng);

impl InstanceRng {
    pub fn new(seed: u64) -> Self {
        InstanceRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `[0, bound)`. `bound` must be non-zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let m = (self.next_u64() as u128) * (bound as u128);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeModel {
    /// Exactly `m` distinct ordered pairs.
    Count(usize),
    /// Each ordered pair independently with this probability.
    Density(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    pub edges: EdgeModel,
    pub sources: usize,
    pub weight_min: u64,
    pub weight_max: u64,
    pub seed: u64,
    pub max_rejects: usize,
    /// Also draw node coordinates uniformly in `[0, coord_extent)^2`.
    pub coords: Option<f64>,
}

impl GenConfig {
    /// Directed graph with `m = 4n` arcs (clamped to `n(n-1)`), weights 1..=100.
    pub fn new(n: usize, sources: usize, seed: u64) -> Self {
        GenTemplate::default().config(n, sources, seed)
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let bad = |m: &str| Err(GenError::InvalidConfig(m.to_string()));
        if self.sources == 0 || self.sources > self.n {
            return bad("need 1 <= sources <= n");
        }
        if self.weight_min < 1 || self.weight_min > self.weight_max {
            return bad("need 1 <= weight_min <= weight_max");
        }
        match self.edges {
            EdgeModel::Count(m) if m > max_arcs(self.n) => {
                return Err(GenError::InvalidConfig(format!(
                    "{m} arcs requested, at most {} possible",
                    max_arcs(self.n)
                )))
            }
            EdgeModel::Density(p) if !(0.0..=1.0).contains(&p) => {
                return bad("density must lie in [0, 1]")
            }
            _ => {}
        }
        if let Some(extent) = self.coords {
            if !(extent > 0.0 && extent.is_finite()) {
                return bad("coordinate extent must be positive");
            }
        }
        Ok(())
    }
}

/// How many arcs an instance of size `n` gets, before `n` is known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeRule {
    /// `default_edge_count(n)`.
    Default,
    Count(usize),
    Density(f64),
}

impl EdgeRule {
    pub fn model(self, n: usize) -> EdgeModel {
        match self {
            EdgeRule::Default => EdgeModel::Count(default_edge_count(n)),
            EdgeRule::Count(m) => EdgeModel::Count(m),
            EdgeRule::Density(p) => EdgeModel::Density(p),
        }
    }
}

/// Generator settings shared by every instance of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct GenTemplate {
    pub edges: EdgeRule,
    pub weight_min: u64,
    pub weight_max: u64,
    pub max_rejects: usize,
}

impl Default for GenTemplate {
    fn default() -> Self {
        GenTemplate {
            edges: EdgeRule::Default,
            weight_min: 1,
            weight_max: 100,
            max_rejects: 1000,
        }
    }
}

impl GenTemplate {
    pub fn config(&self, n: usize, sources: usize, seed: u64) -> GenConfig {
        GenConfig {
            n,
            edges: self.edges.model(n),
            sources,
            weight_min: self.weight_min,
            weight_max: self.weight_max,
            seed,
            max_rejects: self.max_rejects,
            coords: None,
        }
    }
}

pub fn default_edge_count(n: usize) -> usize {
    (4 * n).min(max_arcs(n))
}

fn max_arcs(n: usize) -> usize {
    n * n.saturating_sub(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("no usable instance after {0} attempts")]
    RejectionBudgetExceeded(usize),
}

/// Maps a pair index in `[0, n(n-1))` to an ordered pair with `u != v`.
fn pair_from_index(n: usize, idx: usize) -> (usize, usize) {
    let u = idx / (n - 1);
    let r = idx % (n - 1);
    (u, if r >= u { r + 1 } else { r })
}

fn sample_pairs(rng: &mut InstanceRng, n: usize, model: EdgeModel) -> Vec<(usize, usize)> {
    let total = max_arcs(n);
    let mut pairs: Vec<(usize, usize)> = match model {
        EdgeModel::Count(m) => {
            // Floyd's subset sampling over the pair index space.
            let mut chosen = HashSet::with_capacity(m);
            for j in (total - m)..total {
                let t = rng.below(j as u64 + 1) as usize;
                if !chosen.insert(t) {
                    chosen.insert(j);
                }
            }
            chosen.into_iter().map(|i| pair_from_index(n, i)).collect()
        }
        EdgeModel::Density(p) => (0..total)
            .filter(|_| rng.unit() < p)
            .map(|i| pair_from_index(n, i))
            .collect(),
    };
    pairs.sort_unstable();
    pairs
}

fn attempt(cfg: &GenConfig, seed: u64) -> (Graph, SourceSet) {
    let mut rng = InstanceRng::new(seed);
    let pairs = sample_pairs(&mut rng, cfg.n, cfg.edges);
    let triples: Vec<(usize, usize, f64)> = pairs
        .into_iter()
        .map(|(u, v)| {
            (
                u,
                v,
                rng.range_inclusive(cfg.weight_min, cfg.weight_max) as f64,
            )
        })
        .collect();

    // partial Fisher-Yates
    let mut ids: Vec<usize> = (0..cfg.n).collect();
    for i in 0..cfg.sources {
        let j = i + rng.below((cfg.n - i) as u64) as usize;
        ids.swap(i, j);
    }
    let chosen = ids[..cfg.sources].iter().map(|&i| NodeId(i)).collect();

    let mut graph =
        Graph::from_edges(cfg.n, EdgeKind::Directed, triples).expect("generated edges are valid");
    if let Some(extent) = cfg.coords {
        let pts = (0..cfg.n)
            .map(|_| Point::new(rng.unit() * extent, rng.unit() * extent))
            .collect();
        graph = graph
            .with_coords(pts)
            .expect("generated coordinates are valid");
    }
    let sources = SourceSet::new(&graph, chosen).expect("generated sources are valid");
    (graph, sources)
}

/// Draws instances until one has a node reachable from every source.
pub fn generate(cfg: &GenConfig) -> Result<(Graph, SourceSet), GenError> {
    cfg.validate()?;
    for k in 0..cfg.max_rejects {
        let (graph, sources) = attempt(cfg, sub_seed(cfg.seed, k as u64));
        let dm = oracle::full_distances(&graph, &sources);
        if !dm.intersection_nodes().is_empty() {
            return Ok((graph, sources));
        }
    }
    Err(GenError::RejectionBudgetExceeded(cfg.max_rejects))
}

/// Graph file text with a leading `# sources:` comment.
pub fn instance_text(graph: &Graph, sources: &SourceSet) -> String {
    format!(
        "# sources: {}\n{}",
        sources.to_csv(),
        graph.to_canonical_string()
    )
}
