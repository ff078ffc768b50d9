//! Exact edge-count distributions of random subgraphs.
//!
//! Sampling a graphon through a template S keeps each edge of S with the
//! kernel probability attached to its endpoints' parts; the number of
//! surviving edges is then a random variable on 0..=|E(S)|. This example
//! computes that distribution exactly, shows the binomial collapse on
//! constant kernels, measures how far a structured kernel strays from it,
//! and walks the normalized falling moments that connect the distribution
//! to subgraph densities.
//!
//! Run with: `cargo run --example edge_count_distribution`

use graphonlab::catalog;
use graphonlab::edgedist::{
    binomial_pmf, edge_count_pmf_exact, normalized_falling_moment, subgraph_probability,
    total_variation,
};
use graphonlab::{Scalar, StepGraphon};

fn main() -> graphonlab::Result<()> {
    // Constant kernel: the m edge indicators are independent coins, so
    // the count is binomial no matter what the template looks like.
    let half = StepGraphon::constant(Scalar::ratio(1, 2))?;
    let k3 = catalog::builtin("K3")?;
    let triangle_counts = edge_count_pmf_exact(&k3, &half)?;
    println!("N(K3, constant 1/2)   = {triangle_counts}");
    println!("B(3, 1/2)             = {}", binomial_pmf(3, &Scalar::ratio(1, 2))?);
    println!();

    // Two-block kernel: the surviving-edge count of a 4-cycle can only
    // be 0, 2, or 4 — the survivors around the cycle pair up — and the
    // distribution is far from any binomial.
    let two_block = StepGraphon::new(
        vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
        vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one()],
        ],
    )?;
    let c4 = catalog::builtin("C4")?;
    let cycle_counts = edge_count_pmf_exact(&c4, &two_block)?;
    let reference = binomial_pmf(4, &Scalar::ratio(1, 2))?;
    println!("N(C4, two-block)      = {cycle_counts}");
    println!("B(4, 1/2)             = {reference}");
    println!(
        "total variation       = {}",
        total_variation(&cycle_counts, &reference)?
    );
    println!();

    // Individual labeled outcomes. Keeping no edge at all forces an
    // assignment that alternates blocks around the cycle; keeping exactly
    // one edge is geometrically impossible.
    let empty: &[(usize, usize)] = &[];
    let one_edge = [(0usize, 1usize)];
    let opposite = [(0usize, 1usize), (2usize, 3usize)];
    println!(
        "P(keep nothing)       = {}",
        subgraph_probability(&c4, &two_block, empty)?
    );
    println!(
        "P(keep only {{0,1}})    = {}",
        subgraph_probability(&c4, &two_block, &one_edge)?
    );
    println!(
        "P(keep opposite pair) = {}",
        subgraph_probability(&c4, &two_block, &opposite)?
    );
    println!();

    // Normalized falling moments E[C(N,k)]/C(m,k). For a binomial these
    // are exactly p^k; the two-block cycle agrees up to k = 3 and breaks
    // at k = 4 — precisely the moment that detects the missing 4-cycles.
    println!("k   two-block moment   binomial moment");
    for k in 0..=4usize {
        let structured = normalized_falling_moment(&cycle_counts, k)?;
        let binomial = normalized_falling_moment(&reference, k)?;
        let marker = if structured == binomial { "" } else { "   <- differs" };
        println!("{k}   {:<18} {}{marker}", structured.to_string(), binomial);
    }

    Ok(())
}
