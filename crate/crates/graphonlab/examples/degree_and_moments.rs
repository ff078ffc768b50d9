//! Degree statistics and the subgraph-moment identity.
//!
//! Three smaller identities that the constancy machinery is built from:
//! the degree vector and its variance (zero exactly for degree-regular
//! kernels), the identity between the average density of random k-edge
//! subgraphs and the k-th normalized falling moment of the edge-count
//! distribution, and the pendant rule — attaching a fresh degree-one
//! vertex multiplies a template's density by the edge density whenever
//! the kernel is regular.
//!
//! Run with: `cargo run --example degree_and_moments`

use graphonlab::catalog;
use graphonlab::verifier::{
    average_subgraph_density, degree_vector, degree_variance, moment_identity_check,
    pendant_lemma_check,
};
use graphonlab::{Scalar, StepGraphon};

fn main() -> graphonlab::Result<()> {
    // A regular-but-not-constant kernel and an irregular one.
    let two_block = StepGraphon::new(
        vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
        vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one()],
        ],
    )?;
    let lopsided = StepGraphon::new(
        vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
        vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero()],
        ],
    )?;

    for (label, w) in [("two-block", &two_block), ("lopsided", &lopsided)] {
        let degrees: Vec<String> = degree_vector(w).iter().map(|d| d.to_string()).collect();
        println!(
            "{label}: degrees [{}], variance {}",
            degrees.join(", "),
            degree_variance(w)
        );
    }
    println!();

    // Picking a uniformly random k-edge subgraph of C4 and asking for its
    // density gives, averaged, exactly the k-th normalized falling moment
    // of N(C4, W) — two very different computations, one number.
    let c4 = catalog::builtin("C4")?;
    println!("moment identity on C4 over the two-block kernel:");
    for k in 0..=4usize {
        let average = average_subgraph_density(&c4, k, &two_block)?;
        let check = moment_identity_check(&c4, &two_block, k)?;
        println!(
            "  k={k}: average k-edge subgraph density = {:<8} gap to moment = {} ({})",
            average.to_string(),
            check.gap,
            if check.pass { "pass" } else { "FAIL" }
        );
    }
    println!();

    // The pendant rule needs regularity. The two-block kernel is regular,
    // so extending K3 by a pendant edge at any vertex multiplies its
    // density by the edge density 1/2.
    let k3 = catalog::builtin("K3")?;
    let check = pendant_lemma_check(&k3, 0, &two_block)?;
    println!("pendant at a K3 vertex, two-block kernel: {check}");

    // The lopsided kernel has degree variance 1/16 > 0; the rule's
    // hypothesis fails and the check refuses to pretend otherwise.
    match pendant_lemma_check(&k3, 0, &lopsided) {
        Err(err) => println!("pendant on the lopsided kernel: error: {err}"),
        Ok(_) => unreachable!("the lopsided kernel is not regular"),
    }

    Ok(())
}
