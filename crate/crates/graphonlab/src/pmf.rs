use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

const MASS_SUM_TOL: f64 = 1e-12;

/// A probability mass function on `{0, …, m}`, used for edge-count
/// distributions of graph samplings. `m` is the edge count of the template
/// graph, so the dense vector has `m + 1` entries.
///
/// Masses can be exact rationals or floats; on the exact path the total must
/// be literally 1, on the floating path within `1e-12`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeCountPMF {
    mass: Vec<Scalar>,
}

impl EdgeCountPMF {
    pub fn new(mass: Vec<Scalar>) -> Result<Self> {
        if mass.is_empty() {
            return Err(Error::Parse("a pmf needs at least one entry".into()));
        }
        for (k, p) in mass.iter().enumerate() {
            // Negative mass and incomparable (NaN) mass are both rejected.
            let nonnegative = matches!(
                p.partial_cmp(&Scalar::zero()),
                Some(Ordering::Greater | Ordering::Equal)
            );
            if !nonnegative {
                return Err(Error::NegativeMass {
                    k,
                    value: p.to_string(),
                });
            }
        }
        let sum: Scalar = mass.iter().cloned().sum();
        let ok = if sum.is_exact() {
            sum == Scalar::one()
        } else {
            (sum.to_f64() - 1.0).abs() <= MASS_SUM_TOL
        };
        if !ok {
            return Err(Error::MassDoesntSumToOne { sum: sum.to_string() });
        }
        Ok(EdgeCountPMF { mass })
    }

    /// All mass on the single count `at`.
    pub fn point_mass(m: usize, at: usize) -> Result<Self> {
        if at > m {
            return Err(Error::BadK { k: at, m });
        }
        let mass = (0..=m)
            .map(|k| if k == at { Scalar::one() } else { Scalar::zero() })
            .collect();
        EdgeCountPMF::new(mass)
    }

    /// Normalizes a histogram of observed counts into a floating pmf.
    pub fn from_histogram(counts: &[u64], trials: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::Parse("histogram needs at least one trial".into()));
        }
        let mass = counts
            .iter()
            .map(|&c| Scalar::float(c as f64 / trials as f64))
            .collect();
        EdgeCountPMF::new(mass)
    }

    /// Largest representable count; the template's edge count.
    pub fn support_max(&self) -> usize {
        self.mass.len() - 1
    }

    pub fn mass(&self) -> &[Scalar] {
        &self.mass
    }

    pub fn prob(&self, k: usize) -> &Scalar {
        &self.mass[k]
    }

    pub fn is_exact(&self) -> bool {
        self.mass.iter().all(Scalar::is_exact)
    }
}

/// Prints as `[p0, p1, …, pm]` with each entry in [`Scalar`] notation, e.g.
/// `[1/8, 0, 3/4, 0, 1/8]`.
impl fmt::Display for EdgeCountPMF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.mass.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for EdgeCountPMF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("pmf must be bracketed: [p0, p1, …]".into()))?;
        let mass = inner
            .split(',')
            .map(|tok| tok.trim().parse::<Scalar>())
            .collect::<Result<Vec<_>>>()?;
        EdgeCountPMF::new(mass)
    }
}

impl Serialize for EdgeCountPMF {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.mass.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EdgeCountPMF {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let mass = Vec::<Scalar>::deserialize(deserializer)?;
        EdgeCountPMF::new(mass).map_err(de::Error::custom)
    }
}
