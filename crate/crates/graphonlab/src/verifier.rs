//! Consistency checks connecting edge-count distributions to
//! homomorphism densities.
//!
//! The guiding fact: if the surviving-edge count of random subgraphs of
//! a template `G` is exactly binomial — indistinguishable from sampling
//! out of a constant graphon — and `G` contains a 4-cycle, then the
//! graphon must itself be constant. The checks here replay the chain of
//! density identities behind that fact one step at a time (edge
//! density, stars, degrees, paths, triangles, 4-cycles, and finally the
//! quasirandomness criterion), so a discrepancy pinpoints exactly which
//! identity an implementation or an input breaks.
//!
//! Every comparison demands literal equality on the exact path and a
//! small tolerance on the floating-point path. The interesting outcome
//! is the `contradiction` flag: the mathematics proves it can never be
//! set, so seeing it means the toolkit itself is buggy.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::edgedist::{binomial_pmf, edge_count_pmf_exact_with_limit, total_variation};
use crate::enumeration::{assignment_cost, ensure_within_limit};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::graphon::StepGraphon;
use crate::homomorphism::t_exact_with_limit;
use crate::scalar::{binomial_big, Scalar};
use crate::{DEFAULT_EVAL_LIMIT, DEFAULT_FLOAT_TOL};

/// One named comparison: a computed value against its predicted value,
/// with the absolute gap and whether it counts as a pass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifierCheck {
    pub name: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub gap: Scalar,
    pub pass: bool,
}

impl VerifierCheck {
    /// Compares `lhs` against `rhs`: exact values must agree literally,
    /// floating-point values within `tol`.
    fn compare(name: &str, lhs: Scalar, rhs: Scalar, tol: f64) -> Self {
        let gap = (&lhs - &rhs).abs();
        let pass = if gap.is_exact() {
            gap.is_zero()
        } else {
            gap.to_f64() <= tol
        };
        VerifierCheck { name: name.to_owned(), lhs, rhs, gap, pass }
    }
}

impl fmt::Display for VerifierCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} vs {} (gap {}) {}",
            self.name,
            self.lhs,
            self.rhs,
            self.gap,
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

/// Overall classification of a probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// Every check available on this input passed, but the kernel is
    /// not flagged as constant (reachable only through floating-point
    /// tolerances, or when the probe was cut short).
    ConsistentWithTheorem,
    /// The edge-count hypothesis holds and the kernel is constant — the
    /// predicted conclusion, observed directly.
    ConstantGraphon,
    /// The edge-count distribution is not binomial, so no conclusion
    /// about the kernel is implied.
    NonbinomialEdgeCounts,
    /// The template contains no 4-cycle, so the probe is inapplicable.
    NoC4Precondition,
}

/// Outcome of a probe: the individual checks in a fixed order, the
/// verdict, and the impossibility flag.
///
/// `contradiction` is set when the binomial hypothesis held on a
/// template with a 4-cycle and yet some downstream check failed; that
/// combination is provably impossible, so the flag is a built-in
/// self-test of the toolkit rather than a statement about the input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifierReport {
    pub checks: Vec<VerifierCheck>,
    pub verdict: Verdict,
    pub contradiction: bool,
}

impl fmt::Display for VerifierReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        write!(f, "verdict: {:?}", self.verdict)?;
        if self.contradiction {
            write!(f, "\ncontradiction: the passing hypothesis and the failing checks cannot both be right")?;
        }
        Ok(())
    }
}

/// Degree of each part: the measure-weighted average of its row of the
/// kernel. Exact on exact input.
pub fn degree_vector(w: &StepGraphon) -> Vec<Scalar> {
    (0..w.num_parts())
        .map(|i| {
            (0..w.num_parts())
                .map(|j| w.part(j) * w.value(i, j))
                .sum()
        })
        .collect()
}

/// Variance of the degree of a uniformly random point: zero exactly
/// when the graphon is regular (all parts have the same degree).
///
/// Computed from the degree vector; it coincides with the density gap
/// `t(two-edge star) − t(single edge)²`, and the test suite holds the
/// two computation paths to exact agreement.
pub fn degree_variance(w: &StepGraphon) -> Scalar {
    let degrees = degree_vector(w);
    let mean: Scalar = degrees.iter().enumerate().map(|(i, d)| w.part(i) * d).sum();
    let mean_sq: Scalar = degrees
        .iter()
        .enumerate()
        .map(|(i, d)| &(w.part(i) * d) * d)
        .sum();
    &mean_sq - &(&mean * &mean)
}

/// Mean homomorphism density over all `k`-edge subsets of the template:
/// the probability that `k` edges drawn uniformly without replacement
/// from `g` all survive subgraph sampling.
pub fn average_subgraph_density(g: &SimpleGraph, k: usize, w: &StepGraphon) -> Result<Scalar> {
    let n = g.vertex_count();
    let q = w.num_parts();
    let subsets = u128::try_from(binomial_big(g.edge_count(), k)).ok();
    let cost = match (subsets, assignment_cost(q, n)) {
        (Some(a), Some(b)) => a.checked_mul(b),
        _ => None,
    };
    ensure_within_limit(cost, Some(DEFAULT_EVAL_LIMIT))?;

    let mut total = Scalar::zero();
    for subset in catalog::k_edge_subgraphs(g, k)? {
        let pattern = SimpleGraph::new(n, subset).expect("subset of valid edges is valid");
        total = &total + &t_exact_with_limit(&pattern, w, None)?;
    }
    Ok(&total / &Scalar::from_big(binomial_big(g.edge_count(), k)))
}

/// Checks that the `k`-th normalized falling moment of the edge-count
/// distribution equals the mean `k`-subset survival probability. This
/// identity holds for every template and every graphon, which makes it
/// a strong cross-check between the two computation routes.
pub fn moment_identity_check(g: &SimpleGraph, w: &StepGraphon, k: usize) -> Result<VerifierCheck> {
    let lhs = average_subgraph_density(g, k, w)?;
    let pmf = edge_count_pmf_exact_with_limit(g, w, Some(DEFAULT_EVAL_LIMIT))?;
    let rhs = crate::edgedist::normalized_falling_moment(&pmf, k)?;
    Ok(VerifierCheck::compare(
        &format!("moment_identity_k{k}"),
        lhs,
        rhs,
        DEFAULT_FLOAT_TOL,
    ))
}

/// Checks the pendant-extension identity: for a regular graphon,
/// attaching one new leaf vertex to any vertex of a pattern multiplies
/// its density by the common degree.
///
/// Errors with [`Error::HypothesisViolated`] when the graphon is not
/// regular, since the identity is only promised in that case.
pub fn pendant_lemma_check(f: &SimpleGraph, attach: usize, w: &StepGraphon) -> Result<VerifierCheck> {
    let variance = degree_variance(w);
    let regular = if variance.is_exact() {
        variance.is_zero()
    } else {
        variance.to_f64().abs() <= DEFAULT_FLOAT_TOL
    };
    if !regular {
        return Err(Error::HypothesisViolated(format!(
            "pendant extension needs a regular graphon, but the degree variance is {variance}"
        )));
    }

    let extended = catalog::pendant_extension(f, attach)?;
    let lhs = t_exact_with_limit(&extended, w, Some(DEFAULT_EVAL_LIMIT))?;
    let edge = catalog::path(1).expect("single edge is constructible");
    let p = t_exact_with_limit(&edge, w, Some(DEFAULT_EVAL_LIMIT))?;
    let base = t_exact_with_limit(f, w, Some(DEFAULT_EVAL_LIMIT))?;
    Ok(VerifierCheck::compare(
        "pendant_extension",
        lhs,
        &p * &base,
        DEFAULT_FLOAT_TOL,
    ))
}

/// The quasirandomness criterion: the 4-cycle density of any graphon is
/// at least the fourth power of its edge density, with equality exactly
/// for constant graphons. The check reports the gap and passes when it
/// vanishes.
pub fn quasirandom_check(w: &StepGraphon, tol: f64) -> Result<VerifierCheck> {
    let c4 = catalog::cycle(4).expect("4-cycle is constructible");
    let edge = catalog::path(1).expect("single edge is constructible");
    let lhs = t_exact_with_limit(&c4, w, Some(DEFAULT_EVAL_LIMIT))?;
    let rhs = t_exact_with_limit(&edge, w, Some(DEFAULT_EVAL_LIMIT))?.pow(4);
    Ok(VerifierCheck::compare("quasirandom_gap", lhs, rhs, tol))
}

/// Largest deviation of a kernel entry from `p`; zero exactly when the
/// graphon is the constant-`p` graphon. Parts have positive measure, so
/// for step graphons "constant almost everywhere" and "constant as a
/// matrix" coincide.
fn kernel_constancy_gap(w: &StepGraphon, p: &Scalar) -> Scalar {
    let mut worst = Scalar::zero();
    for i in 0..w.num_parts() {
        for j in 0..w.num_parts() {
            let gap = (w.value(i, j) - p).abs();
            if gap > worst {
                worst = gap;
            }
        }
    }
    worst
}

/// The edge density `t(single edge, W)`, used as the default reference
/// probability when the caller does not supply one.
fn resolve_p(w: &StepGraphon, p: Option<&Scalar>, limit: Option<u128>) -> Result<Scalar> {
    match p {
        Some(p) => {
            if !p.in_unit_interval() {
                return Err(Error::BadProbability { value: p.to_string() });
            }
            Ok(p.clone())
        }
        None => {
            let edge = catalog::path(1).expect("single edge is constructible");
            t_exact_with_limit(&edge, w, limit)
        }
    }
}

/// Decision procedure for the constancy question with the default
/// enumeration budget. See [`theorem_probe_with_limit`].
pub fn theorem_probe(
    g: &SimpleGraph,
    w: &StepGraphon,
    p: Option<&Scalar>,
    tol: f64,
) -> Result<VerifierReport> {
    theorem_probe_with_limit(g, w, p, tol, Some(DEFAULT_EVAL_LIMIT))
}

/// Probes whether the sampling behaviour of `w` on the template `g`
/// forces `w` to be constant.
///
/// Three facts are checked, in order: the template contains a 4-cycle;
/// the surviving-edge distribution is the binomial with success
/// probability `p` (total variation zero); the kernel is the constant-`p`
/// matrix. The verdict reads them off: no 4-cycle means the probe is
/// inapplicable, a non-binomial distribution means nothing is implied,
/// and a binomial distribution with a 4-cycle present must come with a
/// constant kernel — if it does not, the report raises `contradiction`,
/// which indicts the implementation rather than the input.
///
/// When `p` is `None` the edge density of `w` is used.
pub fn theorem_probe_with_limit(
    g: &SimpleGraph,
    w: &StepGraphon,
    p: Option<&Scalar>,
    tol: f64,
    limit: Option<u128>,
) -> Result<VerifierReport> {
    let p = resolve_p(w, p, limit)?;
    let has_c4 = catalog::contains_c4(g);
    let cycle4_present = VerifierCheck::compare(
        "cycle4_present",
        if has_c4 { Scalar::one() } else { Scalar::zero() },
        Scalar::one(),
        0.0,
    );

    let pmf = edge_count_pmf_exact_with_limit(g, w, limit)?;
    let reference = binomial_pmf(g.edge_count(), &p)?;
    let tv = total_variation(&pmf, &reference)?;
    let edge_count_tv = VerifierCheck::compare("edge_count_tv", tv, Scalar::zero(), tol);

    let kernel_constant = VerifierCheck::compare(
        "kernel_constancy",
        kernel_constancy_gap(w, &p),
        Scalar::zero(),
        tol,
    );

    let binomial = edge_count_tv.pass;
    let constant = kernel_constant.pass;
    let verdict = if !has_c4 {
        Verdict::NoC4Precondition
    } else if !binomial {
        Verdict::NonbinomialEdgeCounts
    } else if constant {
        Verdict::ConstantGraphon
    } else {
        Verdict::ConsistentWithTheorem
    };
    Ok(VerifierReport {
        checks: vec![cycle4_present, edge_count_tv, kernel_constant],
        verdict,
        contradiction: has_c4 && binomial && !constant,
    })
}

/// Replays the density identities with the default enumeration budget.
/// See [`lemma_chain_replay_with_limit`].
pub fn lemma_chain_replay(
    g: &SimpleGraph,
    w: &StepGraphon,
    p: Option<&Scalar>,
    tol: f64,
) -> Result<VerifierReport> {
    lemma_chain_replay_with_limit(g, w, p, tol, Some(DEFAULT_EVAL_LIMIT))
}

/// Replays, one identity at a time, the consequences of the hypothesis
/// that the surviving-edge count of `g` under `w` is binomial with
/// success probability `p`.
///
/// The hypothesis itself is a precondition: if the total variation to
/// the binomial reference is nonzero the function errors with
/// [`Error::HypothesisViolated`] instead of producing a report. Under
/// the hypothesis the chain of forced density values is: edge density
/// `p`, two-edge star `p²`, every degree equal to `p`, three-edge path
/// and star `p³`, triangle `p³`, and 4-cycle `p⁴`.
///
/// Each identity is checked only when the template actually forces it:
/// the edge density needs an edge, everything from the two-edge star
/// through the three-edge patterns needs a pair of adjacent edges (a
/// matching template constrains nothing beyond the edge density), the
/// triangle density needs a triangle in the template, and the 4-cycle
/// density needs a 4-cycle. Within those gates every emitted check is a
/// theorem, so any failure raises `contradiction`.
pub fn lemma_chain_replay_with_limit(
    g: &SimpleGraph,
    w: &StepGraphon,
    p: Option<&Scalar>,
    tol: f64,
    limit: Option<u128>,
) -> Result<VerifierReport> {
    let p = resolve_p(w, p, limit)?;
    let pmf = edge_count_pmf_exact_with_limit(g, w, limit)?;
    let reference = binomial_pmf(g.edge_count(), &p)?;
    let tv = total_variation(&pmf, &reference)?;
    let hypothesis_holds = if tv.is_exact() {
        tv.is_zero()
    } else {
        tv.to_f64() <= tol
    };
    if !hypothesis_holds {
        return Err(Error::HypothesisViolated(format!(
            "edge counts are not binomial: total variation {tv}"
        )));
    }

    let density = |template: &SimpleGraph| t_exact_with_limit(template, w, limit);
    let has_adjacent_pair = (0..g.vertex_count()).any(|v| g.degree(v) >= 2);
    let mut checks = Vec::new();
    if g.edge_count() >= 1 {
        checks.push(VerifierCheck::compare(
            "edge_density",
            density(&catalog::path(1).expect("single edge is constructible"))?,
            p.clone(),
            tol,
        ));
    }
    if has_adjacent_pair {
        checks.push(VerifierCheck::compare(
            "star2_density",
            density(&catalog::star(2).expect("two-edge star is constructible"))?,
            p.pow(2),
            tol,
        ));
        let degrees = degree_vector(w);
        let worst = degrees
            .iter()
            .map(|d| (d - &p).abs())
            .fold(Scalar::zero(), |best, gap| if gap > best { gap } else { best });
        checks.push(VerifierCheck::compare("degree_gap", worst, Scalar::zero(), tol));
        checks.push(VerifierCheck::compare(
            "path3_density",
            density(&catalog::path(3).expect("three-edge path is constructible"))?,
            p.pow(3),
            tol,
        ));
        checks.push(VerifierCheck::compare(
            "star3_density",
            density(&catalog::star(3).expect("three-edge star is constructible"))?,
            p.pow(3),
            tol,
        ));
    }
    if catalog::contains_triangle(g) {
        checks.push(VerifierCheck::compare(
            "triangle_density",
            density(&catalog::complete(3).expect("triangle is constructible"))?,
            p.pow(3),
            tol,
        ));
    }
    if catalog::contains_c4(g) {
        checks.push(VerifierCheck::compare(
            "cycle4_density",
            density(&catalog::cycle(4).expect("4-cycle is constructible"))?,
            p.pow(4),
            tol,
        ));
    }

    let all_pass = checks.iter().all(|c| c.pass);
    let constant = {
        let gap = kernel_constancy_gap(w, &p);
        if gap.is_exact() { gap.is_zero() } else { gap.to_f64() <= tol }
    };
    let verdict = if constant {
        Verdict::ConstantGraphon
    } else {
        Verdict::ConsistentWithTheorem
    };
    Ok(VerifierReport { checks, verdict, contradiction: !all_pass })
}
