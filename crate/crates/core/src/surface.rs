//! Hirzebruch surfaces `Σ_e` in the basis of the minimal section `ξ`
//! (`ξ² = -e`) and the fibre `𝔣` (`ξ·𝔣 = 1`, `𝔣² = 0`).
//!
//! `Σ_e` is always identified with the scroll `F(e, 0)`. A rank-2 scroll
//! `F(d_1, d_2)` maps to `Σ_{d_1 - d_2}` by `(h, f) ↦ (h, h·d_1 + f)`, so
//! `O(1) = ξ + d_1·𝔣`.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scroll::{DivisorClass, Scroll};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("classes live on different surfaces: Σ{left} and Σ{right}")]
    SurfaceMismatch { left: u32, right: u32 },
    #[error("class has negative ξ-coefficient {0}")]
    NotEffectiveShape(i64),
    #[error("linear system {0} is empty")]
    EmptySystem(SurfaceClass),
    #[error("expected a rank-2 scroll, got rank {0}")]
    RankMismatch(usize),
}

/// The class `xi·ξ_e + fib·𝔣` on `Σ_e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceClass {
    pub e: u32,
    pub xi: i64,
    pub fib: i64,
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) on Σ{}", self.xi, self.fib, self.e)
    }
}

impl Add for SurfaceClass {
    type Output = SurfaceClass;
    fn add(self, rhs: SurfaceClass) -> SurfaceClass {
        debug_assert_eq!(self.e, rhs.e);
        SurfaceClass::new(self.e, self.xi + rhs.xi, self.fib + rhs.fib)
    }
}

impl Sub for SurfaceClass {
    type Output = SurfaceClass;
    fn sub(self, rhs: SurfaceClass) -> SurfaceClass {
        debug_assert_eq!(self.e, rhs.e);
        SurfaceClass::new(self.e, self.xi - rhs.xi, self.fib - rhs.fib)
    }
}

impl SurfaceClass {
    pub const fn new(e: u32, xi: i64, fib: i64) -> Self {
        SurfaceClass { e, xi, fib }
    }

    pub const fn minimal_section(e: u32) -> Self {
        SurfaceClass::new(e, 1, 0)
    }

    pub const fn fiber(e: u32) -> Self {
        SurfaceClass::new(e, 0, 1)
    }

    /// `K = -2ξ - (e + 2)𝔣`.
    pub const fn canonical(e: u32) -> Self {
        SurfaceClass::new(e, -2, -(e as i64) - 2)
    }

    pub fn dot(&self, other: &SurfaceClass) -> Result<i64, SurfaceError> {
        if self.e != other.e {
            return Err(SurfaceError::SurfaceMismatch {
                left: self.e,
                right: other.e,
            });
        }
        let e = i64::from(self.e);
        Ok(-e * self.xi * other.xi + self.xi * other.fib + other.xi * self.fib)
    }

    fn dot_same(&self, other: &SurfaceClass) -> i64 {
        self.dot(other).expect("same surface")
    }

    /// Arithmetic genus by adjunction, `2g - 2 = C·(C + K)`.
    pub fn genus(&self) -> Result<i64, SurfaceError> {
        if self.xi < 0 {
            return Err(SurfaceError::NotEffectiveShape(self.xi));
        }
        let adj = self.dot_same(&(*self + SurfaceClass::canonical(self.e)));
        // C·(C+K) ≡ 2e·xi (mod 2) for integral classes.
        assert!(adj % 2 == 0, "odd adjunction number {adj} for {self}");
        Ok(1 + adj / 2)
    }

    /// `h⁰` computed on the scroll `F(e, 0)`.
    pub fn h0(&self) -> u64 {
        let (scroll, class) = self.to_scroll();
        scroll.h0(class)
    }

    /// Splits off copies of `ξ` while the class meets `ξ` negatively.
    /// Returns the number of forced copies and the residual class.
    pub fn forced_minimal_decomposition(&self) -> Result<(u32, SurfaceClass), SurfaceError> {
        if self.h0() == 0 {
            return Err(SurfaceError::EmptySystem(*self));
        }
        let xi = SurfaceClass::minimal_section(self.e);
        let mut residual = *self;
        let mut mu = 0u32;
        while residual.dot_same(&xi) < 0 {
            if residual.xi <= 0 {
                return Err(SurfaceError::EmptySystem(*self));
            }
            residual = residual - xi;
            mu += 1;
        }
        Ok((mu, residual))
    }

    /// The same class as `(h, f)` on `F(e, 0)`.
    pub fn to_scroll(&self) -> (Scroll, DivisorClass) {
        let e = i64::from(self.e);
        let scroll = Scroll::new(vec![e, 0]).expect("rank 2");
        (scroll, DivisorClass::new(self.xi, self.fib - self.xi * e))
    }

    /// Writes the class in the basis of a given rank-2 scroll `F(d_1, d_2)`
    /// with `d_1 - d_2 = e`. Inverse of [`from_scroll`].
    pub fn in_scroll(&self, s: &Scroll) -> Result<DivisorClass, SurfaceError> {
        let e = surface_index(s)?;
        if e != self.e {
            return Err(SurfaceError::SurfaceMismatch {
                left: self.e,
                right: e,
            });
        }
        Ok(DivisorClass::new(
            self.xi,
            self.fib - self.xi * s.twists()[0],
        ))
    }
}

fn surface_index(s: &Scroll) -> Result<u32, SurfaceError> {
    match s.twists() {
        &[d1, d2] => Ok((d1 - d2) as u32),
        other => Err(SurfaceError::RankMismatch(other.len())),
    }
}

/// Change of basis from a rank-2 scroll `F(d_1, d_2)` to `Σ_{d_1 - d_2}`.
pub fn from_scroll(s: &Scroll, c: DivisorClass) -> Result<SurfaceClass, SurfaceError> {
    let e = surface_index(s)?;
    Ok(SurfaceClass::new(e, c.h, c.h * s.twists()[0] + c.f))
}
