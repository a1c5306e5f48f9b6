//! Degree bookkeeping for blowups of threefolds along curves.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error("splitting type O({a}) + O({b}) must have a >= b")]
    UnorderedSplitting { a: i64, b: i64 },
    #[error("m = {0} is out of range, need m >= 3")]
    InvalidM(i64),
    #[error("degree {0} must be at least 1")]
    InvalidDegree(i64),
}

/// Splitting type `O(a) ⊕ O(b)` of the normal bundle of a rational curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalBundle {
    pub a: i64,
    pub b: i64,
}

impl fmt::Display for NormalBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({}) + O({})", self.a, self.b)
    }
}

impl NormalBundle {
    pub fn new(a: i64, b: i64) -> Result<Self, BlowupError> {
        if a < b {
            return Err(BlowupError::UnorderedSplitting { a, b });
        }
        Ok(NormalBundle { a, b })
    }

    /// `m = a + b + 4`, since `-K·Γ = m - 2 = deg N + 2`.
    pub fn m(&self) -> i64 {
        self.a + self.b + 4
    }

    /// The exceptional divisor `P(N*)` is `Σ_{a-b}`.
    pub fn exceptional_surface_index(&self) -> i64 {
        self.a - self.b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupStep {
    /// `(-K)³` before blowing up.
    pub ambient_degree: i64,
    /// `-K·C`.
    pub curve_degree: i64,
    pub genus: u32,
}

/// `(-K_Y)³ = (-K_X)³ - 2(-K_X·C) + 2g - 2` for `Y` the blowup of `X` along
/// a smooth curve `C` of genus `g`.
pub fn blowup_degree(step: BlowupStep) -> i64 {
    step.ambient_degree - 2 * step.curve_degree - 2 + 2 * i64::from(step.genus)
}

/// When the anticanonical image is a cone the splitting is forced to be
/// `O(m-2) ⊕ O(-2)`.
pub fn cone_case_normal_bundle(m: i64) -> Result<NormalBundle, BlowupError> {
    if m < 3 {
        return Err(BlowupError::InvalidM(m));
    }
    NormalBundle::new(m - 2, -2)
}

/// Coefficient of the fibre class in `-K = Z + (a + 2)·F` on the blowup.
pub fn decomposition_fiber_coeff(a: i64) -> i64 {
    a + 2
}

/// `(-K)³` of `S × P^1` for a del Pezzo surface `S` with `K_S² = d`.
pub fn product_degree(dp_degree: i64) -> Result<i64, BlowupError> {
    if dp_degree < 1 {
        return Err(BlowupError::InvalidDegree(dp_degree));
    }
    Ok(6 * dp_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn step(ambient_degree: i64, curve_degree: i64, genus: u32) -> BlowupStep {
        BlowupStep {
            ambient_degree,
            curve_degree,
            genus,
        }
    }

    #[test]
    fn blowup_examples() {
        assert_eq!(blowup_degree(step(12, 1, 0)), 8);
        assert_eq!(blowup_degree(step(8, 2, 1)), 4);
        for m in 3..=12 {
            assert_eq!(blowup_degree(step(2 * m - 2, m - 2, 0)), 0);
            assert_eq!(blowup_degree(step(4 * m - 8, m - 4, 0)), 2 * m - 2);
        }
    }

    #[test]
    fn blowup_monotone() {
        for d in -5..20 {
            for g in 0..5u32 {
                assert!(blowup_degree(step(30, d + 1, g)) < blowup_degree(step(30, d, g)));
                assert!(blowup_degree(step(30, d, g + 1)) > blowup_degree(step(30, d, g)));
            }
        }
    }

    #[test]
    fn exceptional_index_examples() {
        for m in 3..=12 {
            assert_eq!(
                NormalBundle::new(m - 2, -2)
                    .unwrap()
                    .exceptional_surface_index(),
                m
            );
        }
        assert_eq!(
            NormalBundle::new(0, 0).unwrap().exceptional_surface_index(),
            0
        );
        assert_eq!(
            NormalBundle::new(0, -1)
                .unwrap()
                .exceptional_surface_index(),
            1
        );
        assert_eq!(
            NormalBundle::new(-1, 0),
            Err(BlowupError::UnorderedSplitting { a: -1, b: 0 })
        );
    }

    #[test]
    fn cone_bundle_examples() {
        assert_eq!(cone_case_normal_bundle(3), Ok(NormalBundle { a: 1, b: -2 }));
        assert_eq!(cone_case_normal_bundle(5), Ok(NormalBundle { a: 3, b: -2 }));
        assert_eq!(
            cone_case_normal_bundle(12),
            Ok(NormalBundle { a: 10, b: -2 })
        );
        assert_eq!(cone_case_normal_bundle(2), Err(BlowupError::InvalidM(2)));
        for m in 3..=40 {
            let nb = cone_case_normal_bundle(m).unwrap();
            assert_eq!(nb.m(), m);
            assert_eq!(nb.exceptional_surface_index(), m);
        }
    }

    #[test]
    fn fiber_coeff_examples() {
        for m in 3..=12 {
            assert_eq!(decomposition_fiber_coeff(m - 2), m);
        }
        assert_eq!(decomposition_fiber_coeff(0), 2);
        assert_eq!(decomposition_fiber_coeff(-2), 0);
    }

    #[test]
    fn product_examples() {
        assert_eq!(product_degree(1), Ok(6));
        assert_eq!(product_degree(9), Ok(54));
        assert_eq!(product_degree(2), Ok(12));
        assert_eq!(product_degree(0), Err(BlowupError::InvalidDegree(0)));
    }
}
