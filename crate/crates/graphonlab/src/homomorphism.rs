//! Homomorphism densities of a simple graph in a step graphon.
//!
//! The density `t(F, W)` is the probability that a uniformly random map
//! from the vertices of `F` into `[0, 1]` sends every edge of `F` to a
//! pair of points connected by `W`. For a step graphon this is a finite
//! sum over part assignments, so it can be computed exactly; there is
//! also a Monte Carlo estimator for cases where the exact sum is out of
//! reach.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::{assignment_cost, back_edges, ensure_within_limit};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::graphon::StepGraphon;
use crate::sampler::{kernel_matrix, trial_rng, PartSampler};
use crate::scalar::Scalar;
use crate::DEFAULT_EVAL_LIMIT;

/// Exact homomorphism density `t(F, W)`, refusing computations that
/// would evaluate more than [`DEFAULT_EVAL_LIMIT`] part assignments.
pub fn t_exact(f: &SimpleGraph, w: &StepGraphon) -> Result<Scalar> {
    t_exact_with_limit(f, w, Some(DEFAULT_EVAL_LIMIT))
}

/// Exact homomorphism density with an explicit assignment budget.
/// `limit = None` removes the guardrail entirely.
///
/// The sum runs over all `q^n` assignments of vertices to parts; each
/// assignment contributes the product of its part measures times the
/// product of kernel values over the edges. Branches whose partial
/// product is already zero are skipped, which changes nothing on the
/// floating-point path and saves a lot of work on sparse kernels.
pub fn t_exact_with_limit(
    f: &SimpleGraph,
    w: &StepGraphon,
    limit: Option<u128>,
) -> Result<Scalar> {
    let n = f.vertex_count();
    let q = w.num_parts();
    ensure_within_limit(assignment_cost(q, n), limit)?;
    if n == 0 {
        return Ok(Scalar::one());
    }

    let back = back_edges(f);
    // One chunk per choice of part for vertex 0. Chunks are summed in
    // part order afterwards, so the result does not depend on how rayon
    // schedules them.
    let chunks: Vec<Scalar> = (0..q)
        .into_par_iter()
        .map(|first| {
            let mut assignment = vec![0usize; n];
            assignment[0] = first;
            let mut acc = Scalar::zero();
            descend(w, &back, 1, &mut assignment, w.part(first), &mut acc);
            acc
        })
        .collect();
    Ok(chunks.into_iter().sum())
}

/// Depth-first sweep over assignments of vertices `depth..n`, carrying
/// the partial product `weight` for the vertices already placed.
fn descend(
    w: &StepGraphon,
    back: &[Vec<usize>],
    depth: usize,
    assignment: &mut [usize],
    weight: &Scalar,
    acc: &mut Scalar,
) {
    if depth == assignment.len() {
        *acc = &*acc + weight;
        return;
    }
    for part in 0..w.num_parts() {
        let mut extended = weight * w.part(part);
        for &earlier in &back[depth] {
            extended = &extended * w.value(assignment[earlier], part);
        }
        if extended.is_zero() {
            continue;
        }
        assignment[depth] = part;
        descend(w, back, depth + 1, assignment, &extended, acc);
    }
}

/// Result of a Monte Carlo density estimate.
///
/// `stderr` is the standard error of the mean (sample standard
/// deviation over the square root of the sample count); it is zero when
/// every sample agreed or when there was only one sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
}

impl fmt::Display for DensityEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {} ({} samples)", self.mean, self.stderr, self.samples)
    }
}

impl FromStr for DensityEstimate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `mean ± stderr (N samples)`, got {s:?}"));
        let (mean, rest) = s.split_once(" ± ").ok_or_else(bad)?;
        let (stderr, rest) = rest.split_once(" (").ok_or_else(bad)?;
        let samples = rest.strip_suffix(" samples)").ok_or_else(bad)?;
        Ok(DensityEstimate {
            mean: mean.trim().parse().map_err(|_| bad())?,
            stderr: stderr.trim().parse().map_err(|_| bad())?,
            samples: samples.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// Number of trials evaluated per scheduling unit in the Monte Carlo
/// estimator. Statistics are merged in chunk order, so the estimate is
/// a pure function of `(f, w, samples, seed)` regardless of thread
/// count.
const TRIAL_CHUNK: u64 = 4096;

/// Per-chunk running statistics for the Monte Carlo estimator.
struct ChunkStats {
    sum: f64,
    sum_sq: f64,
    min: f64,
    max: f64,
}

/// Monte Carlo estimate of `t(F, W)` from `samples` independent trials.
///
/// Each trial draws one part per vertex of `F` (independently, with
/// probabilities given by the part measures) and records the product of
/// kernel values over the edges of `F`; the estimate is the mean of
/// those products. Trial `i` uses its own RNG stream derived from
/// `(seed, i)`, so results are reproducible bit for bit and independent
/// of the number of threads.
pub fn t_monte_carlo(f: &SimpleGraph, w: &StepGraphon, samples: u64, seed: u64) -> DensityEstimate {
    assert!(samples > 0, "at least one sample is required");
    let n = f.vertex_count();
    let parts = PartSampler::new(w);
    let kernel = kernel_matrix(w);

    let num_chunks = samples.div_ceil(TRIAL_CHUNK);
    let chunks: Vec<ChunkStats> = (0..num_chunks)
        .into_par_iter()
        .map(|chunk| {
            let lo = chunk * TRIAL_CHUNK;
            let hi = (lo + TRIAL_CHUNK).min(samples);
            let mut stats = ChunkStats {
                sum: 0.0,
                sum_sq: 0.0,
                min: f64::INFINITY,
                max: f64::NEG_INFINITY,
            };
            let mut assignment = vec![0usize; n];
            for trial in lo..hi {
                let mut rng = trial_rng(seed, trial);
                for slot in assignment.iter_mut() {
                    *slot = parts.draw(&mut rng);
                }
                let mut product = 1.0;
                for &(u, v) in f.edges() {
                    product *= kernel[assignment[u]][assignment[v]];
                }
                stats.sum += product;
                stats.sum_sq += product * product;
                stats.min = stats.min.min(product);
                stats.max = stats.max.max(product);
            }
            stats
        })
        .collect();

    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for chunk in chunks {
        sum += chunk.sum;
        sum_sq += chunk.sum_sq;
        min = min.min(chunk.min);
        max = max.max(chunk.max);
    }

    // All trials agreeing means zero spread; report the common value
    // directly rather than letting accumulated rounding smear it.
    if min == max {
        return DensityEstimate { mean: min, stderr: 0.0, samples };
    }
    let count = samples as f64;
    let mean = sum / count;
    let variance = ((sum_sq - sum * sum / count) / (count - 1.0)).max(0.0);
    DensityEstimate {
        mean,
        stderr: (variance / count).sqrt(),
        samples,
    }
}
