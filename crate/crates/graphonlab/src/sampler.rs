//! Random graphs drawn from a step graphon.
//!
//! The model: each vertex independently receives a latent part (with
//! probabilities given by the part measures), and each candidate edge
//! is then included independently with the kernel value of its
//! endpoints' parts. All randomness is keyed: a trial index selects a
//! dedicated RNG stream under the caller's seed, so every sampler here
//! is reproducible bit for bit and unaffected by thread scheduling.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;
use crate::graphon::StepGraphon;
use crate::pmf::EdgeCountPMF;

/// RNG for one trial: the seed picks the generator, the trial index
/// picks an independent stream under that seed.
pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// The kernel as a plain `f64` matrix, for the samplers' inner loops.
pub(crate) fn kernel_matrix(w: &StepGraphon) -> Vec<Vec<f64>> {
    (0..w.num_parts())
        .map(|i| (0..w.num_parts()).map(|j| w.value(i, j).to_f64()).collect())
        .collect()
}

/// Draws parts with probabilities given by the part measures, by
/// inverting the cumulative distribution. Thresholds are accumulated in
/// the graphon's own arithmetic and converted to `f64` once; a uniform
/// draw that lands beyond the last threshold (possible only through
/// rounding at the 1e-16 scale) falls into the last part.
pub(crate) struct PartSampler {
    thresholds: Vec<f64>,
}

impl PartSampler {
    pub(crate) fn new(w: &StepGraphon) -> Self {
        let mut running = crate::scalar::Scalar::zero();
        let thresholds = w
            .parts()
            .iter()
            .map(|mu| {
                running = &running + mu;
                running.to_f64()
            })
            .collect();
        PartSampler { thresholds }
    }

    pub(crate) fn draw<R: Rng>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.random();
        self.thresholds
            .partition_point(|&t| t <= u)
            .min(self.thresholds.len() - 1)
    }
}

/// Samples a graph on `n` labelled vertices from the graphon: latent
/// parts first (in vertex order), then one inclusion draw per vertex
/// pair in lexicographic order.
pub fn sample_graph(n: usize, w: &StepGraphon, seed: u64) -> SimpleGraph {
    let mut rng = trial_rng(seed, 0);
    let parts = PartSampler::new(w);
    let kernel = kernel_matrix(w);
    let assignment: Vec<usize> = (0..n).map(|_| parts.draw(&mut rng)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < kernel[assignment[u]][assignment[v]] {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("sampled edges are valid by construction")
}

/// Samples a random subgraph of `s`: latent parts for all vertices of
/// `s` (in vertex order), then one inclusion draw per edge of `s` in
/// edge order. The vertex set is kept whole; only edges are thinned.
/// Sampling a subgraph of the complete graph on `n` vertices draws from
/// the same distribution as [`sample_graph`] with the same arguments.
pub fn sample_subgraph(s: &SimpleGraph, w: &StepGraphon, seed: u64) -> SimpleGraph {
    let mut rng = trial_rng(seed, 0);
    let kept = thinned_edges(s, &PartSampler::new(w), &kernel_matrix(w), &mut rng);
    SimpleGraph::new(s.vertex_count(), kept).expect("subgraph edges are valid by construction")
}

/// One thinning trial: draw parts, then keep each edge independently.
fn thinned_edges<R: Rng>(
    s: &SimpleGraph,
    parts: &PartSampler,
    kernel: &[Vec<f64>],
    rng: &mut R,
) -> Vec<(usize, usize)> {
    let assignment: Vec<usize> = (0..s.vertex_count()).map(|_| parts.draw(rng)).collect();
    s.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| rng.random::<f64>() < kernel[assignment[u]][assignment[v]])
        .collect()
}

/// Outcome of an empirical edge-count experiment: the observed
/// distribution of the number of surviving edges, plus the parameters
/// needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub empirical: EdgeCountPMF,
    pub trials: u64,
    pub seed: u64,
}

impl fmt::Display for SampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} trials, seed {})", self.empirical, self.trials, self.seed)
    }
}

/// Number of trials per scheduling unit; chunk histograms are merged in
/// chunk order.
const TRIAL_CHUNK: u64 = 4096;

/// Estimates the distribution of the surviving-edge count of random
/// subgraphs of `s` by repeated sampling. Trial `i` uses the RNG stream
/// for `(seed, i)`, so reports are reproducible bit for bit and
/// independent of thread count.
pub fn empirical_edge_pmf(s: &SimpleGraph, w: &StepGraphon, trials: u64, seed: u64) -> SampleReport {
    assert!(trials > 0, "at least one trial is required");
    let parts = PartSampler::new(w);
    let kernel = kernel_matrix(w);
    let support = s.edge_count() + 1;

    let num_chunks = trials.div_ceil(TRIAL_CHUNK);
    let histograms: Vec<Vec<u64>> = (0..num_chunks)
        .into_par_iter()
        .map(|chunk| {
            let lo = chunk * TRIAL_CHUNK;
            let hi = (lo + TRIAL_CHUNK).min(trials);
            let mut counts = vec![0u64; support];
            for trial in lo..hi {
                let mut rng = trial_rng(seed, trial);
                let kept = thinned_edges(s, &parts, &kernel, &mut rng);
                counts[kept.len()] += 1;
            }
            counts
        })
        .collect();

    let mut counts = vec![0u64; support];
    for histogram in histograms {
        for (total, c) in counts.iter_mut().zip(histogram) {
            *total += c;
        }
    }
    let empirical = EdgeCountPMF::from_histogram(&counts, trials)
        .expect("histogram frequencies form a distribution");
    SampleReport { empirical, trials, seed }
}
