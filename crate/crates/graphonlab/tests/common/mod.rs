//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles recompute densities and edge-count distributions by the most
//! naive route available — flat odometer enumeration of every part
//! assignment (and, for distributions, every edge subset), with each product
//! built from scratch in `BigRational` arithmetic. They share no code with
//! the library's pruned depth-first evaluators, so agreement between the two
//! is meaningful evidence rather than a tautology.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use graphonlab::{EdgeCountPMF, Scalar, SimpleGraph, StepGraphon};

/// Deterministic generator for a test, keyed by an explicit seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The exact rational behind a scalar; panics on floating input, which no
/// oracle here should ever see.
pub fn scalar_to_ratio(s: &Scalar) -> BigRational {
    s.as_rational().expect("oracle inputs must be exact").clone()
}

/// The mass vector of an exact pmf as raw rationals.
pub fn pmf_to_ratios(pmf: &EdgeCountPMF) -> Vec<BigRational> {
    pmf.mass().iter().map(scalar_to_ratio).collect()
}

pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Two equal parts, all mass within a part, none across: values
/// [[1,0],[0,1]]. The standard non-constant example whose 4-cycle
/// distribution is far from binomial.
pub fn two_block() -> StepGraphon {
    StepGraphon::new(
        vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
        vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one()],
        ],
    )
    .expect("two-block fixture is valid")
}

pub fn constant_graphon(numer: i64, denom: i64) -> StepGraphon {
    StepGraphon::constant(Scalar::ratio(numer, denom)).expect("constant fixture is valid")
}

/// A random exact graphon: part count uniform in 1..=max_parts, part
/// measures proportional to small random integers, values random fractions
/// with denominators up to 8.
#[allow(clippy::needless_range_loop)] // the loops fill values[i][j] and values[j][i]
pub fn random_rational_graphon(rng: &mut ChaCha8Rng, max_parts: usize) -> StepGraphon {
    let q = rng.random_range(1..=max_parts);
    let weights: Vec<i64> = (0..q).map(|_| rng.random_range(1..=6)).collect();
    let total: i64 = weights.iter().sum();
    let parts = weights.iter().map(|&a| Scalar::ratio(a, total)).collect();
    let mut values = vec![vec![Scalar::zero(); q]; q];
    for i in 0..q {
        for j in i..q {
            let denom = rng.random_range(1..=8i64);
            let value = Scalar::ratio(rng.random_range(0..=denom), denom);
            values[i][j] = value.clone();
            values[j][i] = value;
        }
    }
    StepGraphon::new(parts, values).expect("generated graphon is valid")
}

/// A random two-part graphon with equal parts and a symmetric value matrix
/// [[a,b],[b,a]]; every such kernel is degree-regular, which is exactly the
/// hypothesis the pendant-extension identity needs.
pub fn random_symmetric_two_block(rng: &mut ChaCha8Rng) -> StepGraphon {
    let draw = |rng: &mut ChaCha8Rng| {
        let denom = rng.random_range(1..=8i64);
        Scalar::ratio(rng.random_range(0..=denom), denom)
    };
    let a = draw(rng);
    let b = draw(rng);
    StepGraphon::new(
        vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
        vec![vec![a.clone(), b.clone()], vec![b, a]],
    )
    .expect("symmetric two-block is valid")
}

/// Every labeled simple graph on `n` vertices, one per subset of the
/// C(n,2) vertex pairs. Meant for small n (≤ 4 gives 64 graphs).
pub fn all_labeled_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(e, _)| mask & (1 << e) != 0)
                .map(|(_, &pair)| pair);
            SimpleGraph::new(n, edges).expect("pair subsets are canonical")
        })
        .collect()
}

fn kernel_ratios(w: &StepGraphon) -> (Vec<BigRational>, Vec<Vec<BigRational>>) {
    let q = w.num_parts();
    let parts = w.parts().iter().map(scalar_to_ratio).collect();
    let values = (0..q)
        .map(|i| (0..q).map(|j| scalar_to_ratio(w.value(i, j))).collect())
        .collect();
    (parts, values)
}

/// Advances `assignment` as a base-`q` odometer; false once it wraps.
fn next_assignment(assignment: &mut [usize], q: usize) -> bool {
    for digit in assignment.iter_mut() {
        *digit += 1;
        if *digit < q {
            return true;
        }
        *digit = 0;
    }
    false
}

/// Homomorphism density by flat enumeration: sum over all q^n part
/// assignments of (product of part measures) × (product of kernel values
/// over the template's edges), every product built from scratch.
pub fn oracle_density(f: &SimpleGraph, w: &StepGraphon) -> BigRational {
    let n = f.vertex_count();
    let q = w.num_parts();
    let (parts, values) = kernel_ratios(w);
    let mut total = BigRational::zero();
    let mut assignment = vec![0usize; n];
    loop {
        let mut product = BigRational::one();
        for &part in &assignment {
            product *= &parts[part];
        }
        for &(u, v) in f.edges() {
            product *= &values[assignment[u]][assignment[v]];
        }
        total += product;
        if !next_assignment(&mut assignment, q) {
            break;
        }
    }
    total
}

/// Edge-count distribution by double enumeration: for every part
/// assignment and every one of the 2^m edge subsets, accumulate the
/// probability of exactly that subset surviving into the bucket for its
/// size. Exponential in m, which is the point — it cannot share a mistake
/// with the generating-polynomial route.
pub fn oracle_edge_pmf(s: &SimpleGraph, w: &StepGraphon) -> Vec<BigRational> {
    let n = s.vertex_count();
    let m = s.edge_count();
    let q = w.num_parts();
    let (parts, values) = kernel_ratios(w);
    let one = BigRational::one();
    let mut mass = vec![BigRational::zero(); m + 1];
    let mut assignment = vec![0usize; n];
    loop {
        let mut weight = BigRational::one();
        for &part in &assignment {
            weight *= &parts[part];
        }
        for subset in 0u32..1 << m {
            let mut product = weight.clone();
            for (e, &(u, v)) in s.edges().iter().enumerate() {
                let value = &values[assignment[u]][assignment[v]];
                if subset & (1 << e) != 0 {
                    product *= value;
                } else {
                    product *= &(&one - value);
                }
            }
            mass[subset.count_ones() as usize] += product;
        }
        if !next_assignment(&mut assignment, q) {
            break;
        }
    }
    mass
}

/// E[C(N,k)] / C(m,k) for a distribution over 0..=m, by direct summation
/// with the binomial coefficients recomputed here.
pub fn oracle_falling_moment(mass: &[BigRational], k: usize) -> BigRational {
    let m = mass.len() - 1;
    let numerator: BigRational = mass
        .iter()
        .enumerate()
        .map(|(i, p)| p * BigRational::from(num_integer::binomial(BigInt::from(i), BigInt::from(k))))
        .sum();
    numerator / BigRational::from(num_integer::binomial(BigInt::from(m), BigInt::from(k)))
}
