//! Exact and Monte Carlo toolkit for step graphons.
//!
//! A step graphon is a symmetric kernel `W: [0,1]² → [0,1]` that is constant
//! on the rectangles of a finite partition, described by part measures and a
//! symmetric value matrix. Everything this crate computes about such kernels
//! — homomorphism densities, the distribution of subgraphs drawn through a
//! template graph, edge-count distributions, degree statistics — reduces to a
//! finite sum over part assignments, so all of it is available in exact
//! rational arithmetic whenever the inputs are rational. Floating inputs are
//! supported too; exactness is tracked per value and any floating operand
//! poisons the result.
//!
//! The crate has three layers:
//!
//! * core types ([`Scalar`], [`SimpleGraph`], [`StepGraphon`],
//!   [`EdgeCountPMF`]) with validation and the weak-isomorphism generators
//!   (part refinement and relabeling),
//! * computations: exact and Monte Carlo densities ([`homomorphism`]),
//!   exact sampling distributions ([`edgedist`]), and seeded W-random graph
//!   generation ([`sampler`]),
//! * the [`verifier`], which replays the chain of density identities forced
//!   on a graphon by a binomial edge-count distribution and probes the
//!   quasirandomness criterion `t(C4, W) = t(P1, W)⁴`.
//!
//! Runnable walkthroughs for each capability live in `examples/`.

pub mod catalog;
pub mod cli;
pub mod edgedist;
mod enumeration;
mod error;
mod graph;
mod graphon;
pub mod homomorphism;
mod pmf;
pub mod sampler;
mod scalar;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use graphon::StepGraphon;
pub use homomorphism::DensityEstimate;
pub use pmf::EdgeCountPMF;
pub use sampler::SampleReport;
pub use scalar::Scalar;
pub use verifier::{Verdict, VerifierCheck, VerifierReport};

/// Default cap on the number of part-assignment evaluations a single
/// exact enumeration may perform before erroring with [`Error::TooLarge`].
pub const DEFAULT_EVAL_LIMIT: u128 = 100_000_000;

/// Default comparison tolerance for floating-point check paths.
/// Exact (rational) paths never use it; they require literal equality.
pub const DEFAULT_FLOAT_TOL: f64 = 1e-10;
