//! Exact homomorphism densities.
//!
//! Builds two step graphons — the constant-1/3 kernel and the two-block
//! 0/1 kernel — and evaluates the density of several small templates in
//! each, all in exact rational arithmetic. Also shows how floating-point
//! entries infect results and what the enumeration guardrail looks like
//! when it trips.
//!
//! Run with: `cargo run --example exact_density`

use graphonlab::catalog;
use graphonlab::homomorphism::{t_exact, t_exact_with_limit};
use graphonlab::{Scalar, StepGraphon};

fn main() -> graphonlab::Result<()> {
    let constant = StepGraphon::constant(Scalar::ratio(1, 3))?;
    let two_block = StepGraphon::new(
        vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
        vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one()],
        ],
    )?;

    println!("template     constant 1/3    two-block [[1,0],[0,1]]");
    for name in ["P1", "P2", "S3", "K3", "C4", "K4"] {
        let template = catalog::builtin(name)?;
        let in_constant = t_exact(&template, &constant)?;
        let in_blocks = t_exact(&template, &two_block)?;
        println!("{name:<12} {:<15} {}", in_constant.to_string(), in_blocks);
    }

    // On a constant kernel every edge contributes an independent factor,
    // so t(F, p) = p^|E(F)|; the two-block column instead remembers the
    // block structure: a template only scores when each connected piece
    // lands inside a single block.
    let c4 = catalog::builtin("C4")?;
    println!();
    println!(
        "t(C4, 1/3) = {} = (1/3)^4, while t(C4, two-block) = {}",
        t_exact(&c4, &constant)?,
        t_exact(&c4, &two_block)?
    );

    // A single floating entry poisons exactness for every result that
    // touches it.
    let float_kernel = StepGraphon::constant(Scalar::float(1.0 / 3.0))?;
    let poisoned = t_exact(&c4, &float_kernel)?;
    println!(
        "with a floating 1/3 the same density is inexact: {} (exact? {})",
        poisoned,
        poisoned.is_exact()
    );

    // Exact enumeration costs q^n part assignments. A limit of 10 cannot
    // cover the 2^4 = 16 assignments of C4 in a two-part kernel.
    match t_exact_with_limit(&c4, &two_block, Some(10)) {
        Err(err) => println!("with an assignment budget of 10: error: {err}"),
        Ok(_) => unreachable!("the budget is below the assignment count"),
    }
    // `None` removes the cap (the CLI spells this --force).
    let forced = t_exact_with_limit(&c4, &two_block, None)?;
    println!("with the cap removed the value is back: {forced}");

    Ok(())
}
