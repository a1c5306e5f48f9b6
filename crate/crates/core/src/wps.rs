//! Hilbert series of weighted complete intersections, the Riemann–Roch
//! polynomial of a Gorenstein Fano threefold, and recovery of generator and
//! relation degrees from a Hilbert function.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default number of series coefficients used by the verification suite.
pub const DEFAULT_TRUNCATION: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WpsError {
    #[error("a weighted projective space needs at least one weight")]
    NoWeights,
    #[error("weights must be positive, got {0}")]
    NonPositiveWeight(u32),
    #[error("relation degrees must be at least 2, got {0}")]
    RelationDegreeTooSmall(u32),
    #[error("{relations} relations in {variables} variables leave no positive-dimensional locus")]
    TooManyRelations { relations: usize, variables: usize },
    #[error("expected a threefold, got dimension {0}")]
    WrongDimension(i64),
    #[error("χ(-{k}K) is not an integer for degree {degree}")]
    NonIntegralChi { degree: i64, k: i64 },
    #[error("Hilbert function must start with 1 and have at least two terms")]
    InvalidSeries,
    #[error("coefficient {value} in degree {degree} cannot be matched by adding relations")]
    Inconsistent { degree: usize, value: i64 },
}

/// Weights `(w_0, ..., w_N)` and relation degrees `(e_1, ..., e_c)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedCI {
    weights: Vec<u32>,
    rel_degrees: Vec<u32>,
}

/// First coefficients of a Hilbert series, index = degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPrefix(pub Vec<i64>);

impl HilbertPrefix {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// `(a_0, a_s, a_{2s}, ...)`: the Hilbert function of the Veronese
    /// subring generated in multiples of `s`.
    pub fn every(&self, step: usize) -> HilbertPrefix {
        HilbertPrefix(self.0.iter().copied().step_by(step).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnticanonicalDegree {
    /// `Σw - Σe`, so that `-K = O(amplitude)`.
    pub amplitude: i64,
    /// `(O(1))³ = Πe / Πw`.
    pub hyperplane_cube: Ratio<i64>,
    /// `(-K)³ = amplitude³ · Πe / Πw`.
    pub degree: Ratio<i64>,
    /// Whether the degree is an integer `≥ 1`.
    pub is_integral: bool,
}

/// Generator and relation degrees of a graded ring model, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingModel {
    pub generators: Vec<u32>,
    pub relations: Vec<u32>,
}

impl WeightedCI {
    pub fn new(weights: Vec<u32>, rel_degrees: Vec<u32>) -> Result<Self, WpsError> {
        if weights.is_empty() {
            return Err(WpsError::NoWeights);
        }
        if let Some(&w) = weights.iter().find(|&&w| w == 0) {
            return Err(WpsError::NonPositiveWeight(w));
        }
        if let Some(&e) = rel_degrees.iter().find(|&&e| e < 2) {
            return Err(WpsError::RelationDegreeTooSmall(e));
        }
        if rel_degrees.len() >= weights.len() {
            return Err(WpsError::TooManyRelations {
                relations: rel_degrees.len(),
                variables: weights.len(),
            });
        }
        Ok(WeightedCI {
            weights,
            rel_degrees,
        })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn rel_degrees(&self) -> &[u32] {
        &self.rel_degrees
    }

    /// `N - c`.
    pub fn dimension(&self) -> i64 {
        self.weights.len() as i64 - 1 - self.rel_degrees.len() as i64
    }

    pub fn amplitude(&self) -> i64 {
        let w: i64 = self.weights.iter().map(|&w| i64::from(w)).sum();
        let e: i64 = self.rel_degrees.iter().map(|&e| i64::from(e)).sum();
        w - e
    }

    /// Coefficients of `Π(1 - t^e) / Π(1 - t^w)` up to degree `n_max`.
    pub fn hilbert_coeffs(&self, n_max: usize) -> HilbertPrefix {
        HilbertPrefix(series(&self.weights, &self.rel_degrees, n_max + 1))
    }

    pub fn anticanonical_degree(&self) -> Result<AnticanonicalDegree, WpsError> {
        if self.dimension() != 3 {
            return Err(WpsError::WrongDimension(self.dimension()));
        }
        let amplitude = self.amplitude();
        let num: i64 = self.rel_degrees.iter().map(|&e| i64::from(e)).product();
        let den: i64 = self.weights.iter().map(|&w| i64::from(w)).product();
        let hyperplane_cube = Ratio::new(num, den);
        let degree = hyperplane_cube * amplitude.pow(3);
        Ok(AnticanonicalDegree {
            amplitude,
            hyperplane_cube,
            degree,
            is_integral: degree.is_integer() && degree >= Ratio::from_integer(1),
        })
    }
}

/// Expands `Π(1 - t^e) / Π(1 - t^w)` to `len` terms by exact integer
/// convolution.
fn series(weights: &[u32], rel_degrees: &[u32], len: usize) -> Vec<i64> {
    let mut c = vec![0i64; len];
    if len == 0 {
        return c;
    }
    c[0] = 1;
    for &e in rel_degrees {
        let e = e as usize;
        for i in (e..len).rev() {
            c[i] -= c[i - e];
        }
    }
    for &w in weights {
        let w = w as usize;
        for i in w..len {
            c[i] += c[i - w];
        }
    }
    c
}

/// `χ(-kK) = (2k + 1) + k(k + 1)(2k + 1)·degree / 12`.
pub fn rr_chi(degree: i64, k: i64) -> Result<i64, WpsError> {
    let (d, k128) = (i128::from(degree), i128::from(k));
    let cubic = k128 * (k128 + 1) * (2 * k128 + 1) * d;
    if cubic % 12 != 0 {
        return Err(WpsError::NonIntegralChi { degree, k });
    }
    i64::try_from(2 * k128 + 1 + cubic / 12).map_err(|_| WpsError::NonIntegralChi { degree, k })
}

/// Recovers generator and relation degrees degree by degree: a deficit
/// against the candidate series adds generators, a surplus adds relations.
///
/// A generator and a relation of the same degree cancel in the Hilbert
/// series, so the result is the minimal such model.
pub fn infer_ring(seq: &HilbertPrefix) -> Result<RingModel, WpsError> {
    let target = seq.coeffs();
    if target.len() < 2 || target[0] != 1 {
        return Err(WpsError::InvalidSeries);
    }
    let mut model = RingModel {
        generators: Vec::new(),
        relations: Vec::new(),
    };
    let mut candidate = series(&[], &[], target.len());
    for (d, &want) in target.iter().enumerate().skip(1) {
        if want < 0 {
            return Err(WpsError::Inconsistent {
                degree: d,
                value: want,
            });
        }
        let have = candidate[d];
        if want > have {
            model
                .generators
                .extend(std::iter::repeat_n(d as u32, (want - have) as usize));
        } else if want < have {
            model
                .relations
                .extend(std::iter::repeat_n(d as u32, (have - want) as usize));
        } else {
            continue;
        }
        candidate = series(&model.generators, &model.relations, target.len());
    }
    debug_assert_eq!(candidate, target);
    Ok(model)
}
