use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Tolerance for the part-measure sum when any measure is floating.
/// Exact inputs must sum to 1 exactly. Floating sums within this distance
/// of 1 are renormalized; anything further out is rejected.
const MEASURE_SUM_TOL: f64 = 1e-12;

/// A step graphon: a symmetric kernel `[0,1]² → [0,1]` that is constant on
/// the rectangles of a finite partition of `[0,1]`.
///
/// `parts[i]` is the measure of the i-th part (positive, summing to 1) and
/// `values[i][j]` the kernel value between parts `i` and `j`. A point of
/// `[0,1]` is represented by its part index throughout the crate.
///
/// Instances are immutable; the weak-isomorphism generators
/// ([`refine_part`](Self::refine_part), [`permute_parts`](Self::permute_parts))
/// return new graphons.
#[derive(Debug, Clone, PartialEq)]
pub struct StepGraphon {
    parts: Vec<Scalar>,
    values: Vec<Vec<Scalar>>,
}

impl StepGraphon {
    /// Validates raw parts and values into a graphon.
    ///
    /// Requirements: `values` is a square `q×q` matrix over `[0,1]`,
    /// exactly symmetric; every measure is positive; measures sum to 1
    /// (exactly on the rational path, within `1e-12` and then renormalized
    /// on the floating path).
    pub fn new(parts: Vec<Scalar>, values: Vec<Vec<Scalar>>) -> Result<Self> {
        let q = parts.len();
        if q == 0 {
            return Err(Error::MeasuresDontSumToOne { sum: "0".into() });
        }
        if values.len() != q || values.iter().any(|row| row.len() != q) {
            return Err(Error::Parse(format!("values must form a {q}x{q} matrix")));
        }
        for (i, row) in values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.in_unit_interval() {
                    return Err(Error::ValueOutOfRange {
                        i,
                        j,
                        value: v.to_string(),
                    });
                }
                if j < i && values[j][i] != *v {
                    return Err(Error::AsymmetricValues { i, j });
                }
            }
        }
        for (i, mu) in parts.iter().enumerate() {
            if !mu.is_positive() {
                return Err(Error::NonpositiveMeasure {
                    i,
                    value: mu.to_string(),
                });
            }
        }
        let sum: Scalar = parts.iter().cloned().sum();
        let parts = if sum.is_exact() {
            if sum != Scalar::one() {
                return Err(Error::MeasuresDontSumToOne { sum: sum.to_string() });
            }
            parts
        } else {
            if (sum.to_f64() - 1.0).abs() > MEASURE_SUM_TOL {
                return Err(Error::MeasuresDontSumToOne { sum: sum.to_string() });
            }
            parts.iter().map(|mu| mu / &sum).collect()
        };
        Ok(StepGraphon { parts, values })
    }

    /// The constant kernel `W ≡ p` on a single part.
    pub fn constant(p: Scalar) -> Result<Self> {
        if !p.in_unit_interval() {
            return Err(Error::ValueOutOfRange {
                i: 0,
                j: 0,
                value: p.to_string(),
            });
        }
        Ok(StepGraphon {
            parts: vec![Scalar::one()],
            values: vec![vec![p]],
        })
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, i: usize) -> &Scalar {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[Scalar] {
        &self.parts
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        &self.values[i][j]
    }

    /// True when every measure and kernel value is exact.
    pub fn is_exact(&self) -> bool {
        self.parts.iter().all(Scalar::is_exact)
            && self.values.iter().flatten().all(Scalar::is_exact)
    }

    /// Splits part `i` into two parts with measures `fraction·μ_i` and
    /// `(1−fraction)·μ_i`, duplicating its value row and column. The result
    /// is weakly isomorphic to the input: no density or sampling
    /// distribution can tell them apart.
    pub fn refine_part(&self, i: usize, fraction: Scalar) -> Result<Self> {
        let q = self.num_parts();
        if i >= q {
            return Err(Error::BadIndex { i, q });
        }
        if !(fraction.is_positive() && (&Scalar::one() - &fraction).is_positive()) {
            return Err(Error::BadFraction {
                value: fraction.to_string(),
            });
        }
        let mut parts = Vec::with_capacity(q + 1);
        for (k, mu) in self.parts.iter().enumerate() {
            if k == i {
                parts.push(&fraction * mu);
                parts.push(&(&Scalar::one() - &fraction) * mu);
            } else {
                parts.push(mu.clone());
            }
        }
        // duplicate row i, then column i, keeping the split parts adjacent
        let expand_row = |row: &[Scalar]| -> Vec<Scalar> {
            let mut out = Vec::with_capacity(q + 1);
            for (k, v) in row.iter().enumerate() {
                out.push(v.clone());
                if k == i {
                    out.push(v.clone());
                }
            }
            out
        };
        let mut values = Vec::with_capacity(q + 1);
        for (k, row) in self.values.iter().enumerate() {
            values.push(expand_row(row));
            if k == i {
                values.push(expand_row(row));
            }
        }
        Ok(StepGraphon { parts, values })
    }

    /// Relabels parts: the k-th part of the result is part `perm[k]` of the
    /// input. Another weak-isomorphism generator.
    pub fn permute_parts(&self, perm: &[usize]) -> Result<Self> {
        let q = self.num_parts();
        if perm.len() != q {
            return Err(Error::NotAPermutation { q });
        }
        let mut seen = vec![false; q];
        for &p in perm {
            if p >= q || seen[p] {
                return Err(Error::NotAPermutation { q });
            }
            seen[p] = true;
        }
        let parts = perm.iter().map(|&p| self.parts[p].clone()).collect();
        let values = perm
            .iter()
            .map(|&pi| perm.iter().map(|&pj| self.values[pi][pj].clone()).collect())
            .collect();
        Ok(StepGraphon { parts, values })
    }

    /// Parses the JSON file format, keeping the two failure modes
    /// apart: text that is not a well-formed graphon object is a parse
    /// error, while a well-formed object that breaks a graphon
    /// invariant reports the specific violation.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawGraphon =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        StepGraphon::new(raw.parts, raw.values)
    }
}

#[derive(Serialize, Deserialize)]
struct RawGraphon {
    parts: Vec<Scalar>,
    values: Vec<Vec<Scalar>>,
}

/// Serializes as an object `{"parts": [...], "values": [[...]]}` where each
/// number is either a JSON number (exact when integral) or an `"a/b"` string.
impl Serialize for StepGraphon {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawGraphon {
            parts: self.parts.clone(),
            values: self.values.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StepGraphon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGraphon::deserialize(deserializer)?;
        StepGraphon::new(raw.parts, raw.values).map_err(de::Error::custom)
    }
}
