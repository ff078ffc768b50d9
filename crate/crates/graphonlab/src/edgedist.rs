//! The distribution of the number of edges that survive random
//! subgraph sampling.
//!
//! Sampling a subgraph of a template `S` from a graphon `W` keeps each
//! edge with a probability depending on the latent parts of its
//! endpoints, so the surviving-edge count `N` is a random variable on
//! `{0, ..., m}`. This module computes its distribution exactly,
//! together with the comparison tools used downstream: binomial
//! references, total variation distance, and normalized falling
//! moments.

use rayon::prelude::*;

use crate::enumeration::{assignment_cost, back_edges, ensure_within_limit};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::graphon::StepGraphon;
use crate::pmf::EdgeCountPMF;
use crate::scalar::{binomial_big, Scalar};
use crate::DEFAULT_EVAL_LIMIT;

/// Exact distribution of the surviving-edge count of random subgraphs
/// of `s`, refusing computations that would evaluate more than
/// [`DEFAULT_EVAL_LIMIT`] part assignments.
pub fn edge_count_pmf_exact(s: &SimpleGraph, w: &StepGraphon) -> Result<EdgeCountPMF> {
    edge_count_pmf_exact_with_limit(s, w, Some(DEFAULT_EVAL_LIMIT))
}

/// Exact surviving-edge distribution with an explicit assignment
/// budget. `limit = None` removes the guardrail entirely.
///
/// Conditioned on a part assignment, edges survive independently, so
/// the conditional edge count is a sum of independent biased coins and
/// its generating polynomial is a product of linear factors — one
/// `(1 - w) + w·z` per edge. The unconditional distribution is the
/// measure-weighted sum of those polynomials over all assignments.
pub fn edge_count_pmf_exact_with_limit(
    s: &SimpleGraph,
    w: &StepGraphon,
    limit: Option<u128>,
) -> Result<EdgeCountPMF> {
    let n = s.vertex_count();
    let q = w.num_parts();
    let m = s.edge_count();
    ensure_within_limit(assignment_cost(q, n), limit)?;
    if n == 0 {
        return EdgeCountPMF::point_mass(0, 0);
    }

    let back = back_edges(s);
    // One chunk per part of vertex 0, merged coefficient-wise in part
    // order so the result is independent of rayon's scheduling.
    let chunks: Vec<Vec<Scalar>> = (0..q)
        .into_par_iter()
        .map(|first| {
            let mut assignment = vec![0usize; n];
            assignment[0] = first;
            let mut acc = vec![Scalar::zero(); m + 1];
            descend_poly(
                w,
                &back,
                1,
                &mut assignment,
                w.part(first),
                &[Scalar::one()],
                &mut acc,
            );
            acc
        })
        .collect();

    let mut mass = vec![Scalar::zero(); m + 1];
    for chunk in chunks {
        for (total, term) in mass.iter_mut().zip(&chunk) {
            *total = &*total + term;
        }
    }
    EdgeCountPMF::new(mass)
}

/// Depth-first sweep accumulating `weight * poly` at the leaves, where
/// `poly` is the conditional edge-count generating polynomial of the
/// edges seen so far.
fn descend_poly(
    w: &StepGraphon,
    back: &[Vec<usize>],
    depth: usize,
    assignment: &mut [usize],
    weight: &Scalar,
    poly: &[Scalar],
    acc: &mut [Scalar],
) {
    if depth == assignment.len() {
        debug_assert_eq!(poly.len(), acc.len());
        for (slot, coeff) in acc.iter_mut().zip(poly) {
            *slot = &*slot + &(weight * coeff);
        }
        return;
    }
    for part in 0..w.num_parts() {
        let extended_weight = weight * w.part(part);
        let mut extended_poly = poly.to_vec();
        for &earlier in &back[depth] {
            multiply_by_coin(&mut extended_poly, w.value(assignment[earlier], part));
        }
        assignment[depth] = part;
        descend_poly(w, back, depth + 1, assignment, &extended_weight, &extended_poly, acc);
    }
}

/// Multiplies a generating polynomial by `(1 - hit) + hit·z`.
fn multiply_by_coin(poly: &mut Vec<Scalar>, hit: &Scalar) {
    let miss = &Scalar::one() - hit;
    let mut carried = Scalar::zero();
    for coeff in poly.iter_mut() {
        let original = coeff.clone();
        *coeff = &(&*coeff * &miss) + &(&carried * hit);
        carried = original;
    }
    poly.push(&carried * hit);
}

/// Probability that random subgraph sampling of `s` keeps exactly the
/// edges in `kept` (in particular, loses every other edge). Uses the
/// default assignment budget.
pub fn subgraph_probability(
    s: &SimpleGraph,
    w: &StepGraphon,
    kept: &[(usize, usize)],
) -> Result<Scalar> {
    subgraph_probability_with_limit(s, w, kept, Some(DEFAULT_EVAL_LIMIT))
}

/// Exact-outcome probability with an explicit assignment budget.
///
/// `kept` must be a set of edges of `s` (in either endpoint order);
/// anything else — duplicates, loops, non-edges — is rejected.
pub fn subgraph_probability_with_limit(
    s: &SimpleGraph,
    w: &StepGraphon,
    kept: &[(usize, usize)],
    limit: Option<u128>,
) -> Result<Scalar> {
    let mut wanted: Vec<(usize, usize)> = kept
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    wanted.sort_unstable();
    wanted.dedup();
    if wanted.len() != kept.len() || !wanted.iter().all(|&(u, v)| s.has_edge(u, v)) {
        return Err(Error::NotASubset);
    }

    let n = s.vertex_count();
    let q = w.num_parts();
    ensure_within_limit(assignment_cost(q, n), limit)?;
    if n == 0 {
        return Ok(Scalar::one());
    }

    let back = back_edges(s);
    let chunks: Vec<Scalar> = (0..q)
        .into_par_iter()
        .map(|first| {
            let mut assignment = vec![0usize; n];
            assignment[0] = first;
            let mut acc = Scalar::zero();
            descend_outcome(w, &back, &wanted, 1, &mut assignment, w.part(first), &mut acc);
            acc
        })
        .collect();
    Ok(chunks.into_iter().sum())
}

/// Depth-first sweep for one exact outcome: each edge contributes its
/// kernel value if it must survive and the complement if it must not.
fn descend_outcome(
    w: &StepGraphon,
    back: &[Vec<usize>],
    wanted: &[(usize, usize)],
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
            let value = w.value(assignment[earlier], part);
            extended = if wanted.binary_search(&(earlier, depth)).is_ok() {
                &extended * value
            } else {
                &extended * &(&Scalar::one() - value)
            };
        }
        if extended.is_zero() {
            continue;
        }
        assignment[depth] = part;
        descend_outcome(w, back, wanted, depth + 1, assignment, &extended, acc);
    }
}

/// The binomial distribution on `{0, ..., m}` with success probability
/// `p`: the surviving-edge distribution of any `m`-edge template under
/// a constant graphon.
pub fn binomial_pmf(m: usize, p: &Scalar) -> Result<EdgeCountPMF> {
    if !p.in_unit_interval() {
        return Err(Error::BadProbability { value: p.to_string() });
    }
    let miss = &Scalar::one() - p;
    let mass = (0..=m)
        .map(|k| {
            let ways = Scalar::from_big(binomial_big(m, k));
            &(&ways * &p.pow(k as u32)) * &miss.pow((m - k) as u32)
        })
        .collect();
    EdgeCountPMF::new(mass)
}

/// Total variation distance between two distributions on the same
/// support: half the sum of the absolute mass differences.
pub fn total_variation(a: &EdgeCountPMF, b: &EdgeCountPMF) -> Result<Scalar> {
    if a.mass().len() != b.mass().len() {
        return Err(Error::LengthMismatch {
            a: a.mass().len(),
            b: b.mass().len(),
        });
    }
    let total: Scalar = a
        .mass()
        .iter()
        .zip(b.mass())
        .map(|(x, y)| (x - y).abs())
        .sum();
    Ok(&total * &Scalar::ratio(1, 2))
}

/// The `k`-th normalized falling moment `E[C(N, k)] / C(m, k)` of an
/// edge-count distribution on `{0, ..., m}`.
///
/// This equals the probability that `k` edges chosen uniformly at
/// random from the template all survive, which is what makes it the
/// right summary for comparing against subgraph densities. For a
/// binomial distribution it is exactly `p^k`.
pub fn normalized_falling_moment(pmf: &EdgeCountPMF, k: usize) -> Result<Scalar> {
    let m = pmf.support_max();
    if k > m {
        return Err(Error::BadK { k, m });
    }
    let numerator: Scalar = pmf
        .mass()
        .iter()
        .enumerate()
        .map(|(i, mass)| mass * &Scalar::from_big(binomial_big(i, k)))
        .sum();
    Ok(&numerator / &Scalar::from_big(binomial_big(m, k)))
}
