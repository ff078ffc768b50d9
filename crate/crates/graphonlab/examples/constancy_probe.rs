//! The constancy decision procedure.
//!
//! If the surviving-edge count of a template containing a 4-cycle is
//! exactly binomial B(m, p), the kernel must be the constant p — there is
//! no non-constant kernel with that sampling signature. `theorem_probe`
//! decides the question for a given template and kernel, and
//! `lemma_chain_replay` retraces the individual density identities the
//! binomial hypothesis forces. The reports carry a `contradiction` flag
//! that can only fire on an implementation bug, making every probe a
//! self-test.
//!
//! Run with: `cargo run --example constancy_probe`

use graphonlab::catalog;
use graphonlab::verifier::{lemma_chain_replay, theorem_probe};
use graphonlab::{Scalar, StepGraphon, DEFAULT_FLOAT_TOL};

fn main() -> graphonlab::Result<()> {
    let c4 = catalog::builtin("C4")?;
    let constant = StepGraphon::constant(Scalar::ratio(1, 3))?;
    let two_block = StepGraphon::new(
        vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
        vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one()],
        ],
    )?;

    // A constant kernel: binomial counts, constant kernel, verdict says so.
    println!("== probe: C4 against the constant-1/3 kernel");
    println!("{}", theorem_probe(&c4, &constant, None, DEFAULT_FLOAT_TOL)?);
    println!();

    // A structured kernel: the counts are not binomial, so the theorem is
    // silent about the kernel — and indeed it is not constant.
    println!("== probe: C4 against the two-block kernel");
    println!("{}", theorem_probe(&c4, &two_block, None, DEFAULT_FLOAT_TOL)?);
    println!();

    // Without a 4-cycle in the template the question is out of scope: the
    // probe reports its precondition missing rather than guessing.
    let p2 = catalog::builtin("P2")?;
    println!("== probe: P2 (no 4-cycle) against the constant-1/3 kernel");
    println!("{}", theorem_probe(&p2, &constant, None, DEFAULT_FLOAT_TOL)?);
    println!();

    // The replay: under the binomial hypothesis on K4 the chain of forced
    // densities is p for an edge, p² for the two-edge star, degree p
    // everywhere, p³ for three-edge paths, stars and triangles, p⁴ for
    // the 4-cycle. On a constant kernel every link holds exactly.
    let k4 = catalog::builtin("K4")?;
    println!("== replay: identity chain for K4 under the constant-1/3 kernel");
    println!("{}", lemma_chain_replay(&k4, &constant, None, DEFAULT_FLOAT_TOL)?);
    println!();

    // The replay refuses inputs whose counts are not binomial: the chain
    // only makes sense under the hypothesis.
    println!("== replay: C4 under the two-block kernel is rejected up front");
    match lemma_chain_replay(&c4, &two_block, None, DEFAULT_FLOAT_TOL) {
        Err(err) => println!("error: {err}"),
        Ok(_) => unreachable!("the two-block cycle counts are not binomial"),
    }

    Ok(())
}
