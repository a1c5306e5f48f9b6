//! The rank-2 lattice spanned by a section `Γ` (`Γ² = -2`) and an elliptic
//! fibre `f` (`f² = 0`, `Γ·f = 1`) on a K3 elephant.
//!
//! The restriction of `-K` to the elephant has normal form `Γ + m·f` with
//! `m ≥ 2`; the integer `m` is always read off such a class.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::surface::SurfaceClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PencilError {
    #[error("{0} is not of the form Γ + m·f with m ≥ 2")]
    NotElephantShape(PencilClass),
    #[error("m = {0} is out of range")]
    InvalidM(i64),
    #[error("double-cover pullback is defined on Σ4, got Σ{0}")]
    WrongSurface(u32),
    #[error("{0} contains no copy of the section Γ")]
    NoSection(PencilClass),
}

/// `gamma·Γ + ell·f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PencilClass {
    pub gamma: i64,
    pub ell: i64,
}

impl fmt::Display for PencilClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Γ + {}f", self.gamma, self.ell)
    }
}

impl PencilClass {
    pub const SECTION: PencilClass = PencilClass { gamma: 1, ell: 0 };
    pub const FIBER: PencilClass = PencilClass { gamma: 0, ell: 1 };

    pub const fn new(gamma: i64, ell: i64) -> Self {
        PencilClass { gamma, ell }
    }

    /// `Γ + m·f`.
    pub const fn elephant(m: i64) -> Self {
        PencilClass::new(1, m)
    }

    /// Pairing with Gram matrix `[[-2, 1], [1, 0]]`.
    pub fn dot(&self, other: &PencilClass) -> i64 {
        -2 * self.gamma * other.gamma + self.gamma * other.ell + other.gamma * self.ell
    }

    pub fn square(&self) -> i64 {
        self.dot(self)
    }

    pub fn saint_donat_form(&self) -> Result<i64, PencilError> {
        match *self {
            PencilClass { gamma: 1, ell } if ell >= 2 => Ok(ell),
            _ => Err(PencilError::NotElephantShape(*self)),
        }
    }

    /// Blowing up the section removes one copy of it from the class.
    pub fn blowup_section_reduce(&self) -> Result<PencilClass, PencilError> {
        if self.gamma < 1 {
            return Err(PencilError::NoSection(*self));
        }
        Ok(PencilClass::new(self.gamma - 1, self.ell))
    }
}

/// `0` when the base locus is a point (`m = 2`), `1` when it is a curve.
pub fn base_locus_dimension(m: i64) -> Result<u8, PencilError> {
    match m {
        2 => Ok(0),
        m if m >= 3 => Ok(1),
        _ => Err(PencilError::InvalidM(m)),
    }
}

/// `(-K)³ = (Γ + m·f)² = 2m - 2`.
pub fn fano_degree(m: i64) -> Result<i64, PencilError> {
    if m < 2 {
        return Err(PencilError::InvalidM(m));
    }
    let degree = 2 * m - 2;
    debug_assert_eq!(degree, PencilClass::elephant(m).square());
    Ok(degree)
}

/// Pullback along the double cover of `Σ_4` branched over `ξ` and a
/// residual curve: `ξ` pulls back to `2Γ`, the fibre to the elliptic fibre.
pub fn cover_pullback(c: &SurfaceClass) -> Result<PencilClass, PencilError> {
    if c.e != 4 {
        return Err(PencilError::WrongSurface(c.e));
    }
    Ok(PencilClass::new(2 * c.xi, c.fib))
}
