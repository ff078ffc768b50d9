//! Weak isomorphism: different presentations, identical behaviour.
//!
//! A step graphon's partition can be sliced finer or listed in another
//! order without changing the kernel it presents. Splitting a part in two
//! (both halves inheriting its values) and permuting the part list
//! generate these re-presentations; every density and every edge-count
//! distribution is invariant under both. This example refines and
//! shuffles the two-block kernel and watches nothing change.
//!
//! Run with: `cargo run --example weak_isomorphism`

use graphonlab::catalog;
use graphonlab::edgedist::edge_count_pmf_exact;
use graphonlab::homomorphism::t_exact;
use graphonlab::{Scalar, SimpleGraph, StepGraphon};

fn describe(label: &str, w: &StepGraphon, templates: &[(&str, SimpleGraph)]) -> graphonlab::Result<()> {
    let parts: Vec<String> = w.parts().iter().map(|p| p.to_string()).collect();
    println!("{label}: {} parts with measures [{}]", w.num_parts(), parts.join(", "));
    for (name, template) in templates {
        println!(
            "  t({name}) = {:<8} N({name}) = {}",
            t_exact(template, w)?.to_string(),
            edge_count_pmf_exact(template, w)?
        );
    }
    Ok(())
}

fn main() -> graphonlab::Result<()> {
    let templates = vec![
        ("P1", catalog::builtin("P1")?),
        ("K3", catalog::builtin("K3")?),
        ("C4", catalog::builtin("C4")?),
    ];

    let original = StepGraphon::new(
        vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
        vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one()],
        ],
    )?;
    describe("original two-block", &original, &templates)?;
    println!();

    // Split part 0 into a 1/3-sized slice and its 2/3-sized remainder.
    // The kernel as a function on [0,1]² has not moved.
    let refined = original.refine_part(0, Scalar::ratio(1, 3))?;
    describe("part 0 split 1/3 : 2/3", &refined, &templates)?;
    println!();

    // Splitting again and reversing the part list still presents the
    // same kernel, now in four parts.
    let shuffled = refined
        .refine_part(2, Scalar::ratio(1, 2))?
        .permute_parts(&[3, 2, 1, 0])?;
    describe("split again, parts reversed", &shuffled, &templates)?;
    println!();

    let agree = templates.iter().try_fold(true, |acc, (_, g)| {
        Ok::<bool, graphonlab::Error>(
            acc && t_exact(g, &original)? == t_exact(g, &shuffled)?
                && edge_count_pmf_exact(g, &original)? == edge_count_pmf_exact(g, &shuffled)?,
        )
    })?;
    println!("all densities and distributions identical across presentations: {agree}");

    Ok(())
}
