//! Shared bookkeeping for the exact enumeration routines: cost accounting
//! against the assignment-evaluation guardrail, and the edge grouping used
//! by the depth-first sweeps over part assignments.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Number of part assignments `q^n`, or `None` on overflow (which only
/// happens far beyond any enforceable limit).
pub(crate) fn assignment_cost(q: usize, n: usize) -> Option<u128> {
    let mut cost: u128 = 1;
    for _ in 0..n {
        cost = cost.checked_mul(q as u128)?;
    }
    Some(cost)
}

/// Errors with [`Error::TooLarge`] when `cost` exceeds `limit`.
/// `limit = None` means the caller forced the computation.
pub(crate) fn ensure_within_limit(cost: Option<u128>, limit: Option<u128>) -> Result<()> {
    let Some(limit) = limit else { return Ok(()) };
    match cost {
        Some(cost) if cost <= limit => Ok(()),
        _ => Err(Error::TooLarge {
            cost: cost.unwrap_or(u128::MAX),
            limit,
        }),
    }
}

/// For each vertex `v`, the earlier endpoints of edges `{u, v}` with
/// `u < v`. A depth-first sweep assigning vertices in index order can then
/// evaluate every edge exactly once, at its higher endpoint.
pub(crate) fn back_edges(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut grouped = vec![Vec::new(); g.vertex_count()];
    for &(u, v) in g.edges() {
        grouped[v].push(u);
    }
    grouped
}
