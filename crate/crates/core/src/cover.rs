//! Double covers of scrolls whose anticanonical class is the pullback of
//! `O(1)`, and the branch-divisor analysis of the covers `U_m` of
//! `F(m, m-4, 0)`.
//!
//! For `μ: U → W` branched along `D = 2L` we have `K_U = μ*(K_W + L)`, so
//! `-K_U = μ*O(1)` forces `L = -K_W - O(1)`.

use serde::Serialize;
use thiserror::Error;

use crate::scroll::{DivisorClass, Multiplicity, Scroll, ScrollError};

/// Largest fibre multiplicity of the branch divisor compatible with
/// Du Val singularities of the cover over that fibre.
pub const DU_VAL_MAX_MULTIPLICITY: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("expected a rank-3 scroll, got rank {0}")]
    WrongRank(usize),
    #[error("m = {0} is out of range, need m >= 3")]
    InvalidM(i64),
    #[error("branch class {branch} is not twice {half}")]
    OddBranch {
        branch: DivisorClass,
        half: DivisorClass,
    },
    #[error(transparent)]
    Scroll(#[from] ScrollError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCoverSpec {
    pub base: Scroll,
    pub branch: DivisorClass,
    pub half: DivisorClass,
}

impl DoubleCoverSpec {
    pub fn new(base: Scroll, branch: DivisorClass, half: DivisorClass) -> Result<Self, CoverError> {
        if branch != 2 * half {
            return Err(CoverError::OddBranch { branch, half });
        }
        Ok(DoubleCoverSpec { base, branch, half })
    }

    /// `K_W + L`; the canonical class of the cover is its pullback.
    pub fn canonical_pullback(&self) -> DivisorClass {
        self.base.canonical_class() + self.half
    }

    /// `(-K_U)^n = 2·(O(1))^n`.
    pub fn cover_degree(&self) -> i64 {
        let taut = vec![DivisorClass::TAUTOLOGICAL; self.base.rank()];
        2 * self.base.intersect(&taut).expect("arity matches rank")
    }
}

/// The branch data making `-K` of the double cover equal to `μ*O(1)`.
pub fn branch_for_taut_anticanonical(s: &Scroll) -> Result<DoubleCoverSpec, CoverError> {
    if s.rank() != 3 {
        return Err(CoverError::WrongRank(s.rank()));
    }
    let half = -s.canonical_class() - DivisorClass::TAUTOLOGICAL;
    DoubleCoverSpec::new(s.clone(), 2 * half, half)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    PassesDuValNecessary,
    FailsDuValNecessary,
}

impl Verdict {
    pub fn passes(self) -> bool {
        self == Verdict::PassesDuValNecessary
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchReport {
    pub m: i64,
    pub base: Scroll,
    pub branch: DivisorClass,
    /// Class of the rigid surface `B ∈ |O(1) - mF|`.
    pub b_class: DivisorClass,
    /// Number of copies of `B` contained in every member of `|D|`.
    pub b_mult: u32,
    /// `D - b_mult·B`.
    pub residual_class: DivisorClass,
    /// `(D - B)·B·Σ` with `Σ ∈ |O(1)|`.
    pub r_dot_b_sigma: i64,
    /// Coordinate index (1-based) of the distinguished fibre point.
    pub point_index: usize,
    pub fiber_mult: Multiplicity,
    pub verdict: Verdict,
}

/// Runs the branch analysis for the double cover `U_m → F(m, m-4, 0)`.
pub fn analyze_um(m: i64) -> Result<BranchReport, CoverError> {
    if m < 3 {
        return Err(CoverError::InvalidM(m));
    }
    let base = Scroll::new(vec![m, m - 4, 0])?;
    let cover = branch_for_taut_anticanonical(&base)?;
    let branch = cover.branch;
    let b_class = DivisorClass::new(1, -m);
    let b_mult = base.fixed_component_multiplicity(b_class, branch)?;
    let residual_class = branch - i64::from(b_mult) * b_class;
    let r_dot_b_sigma = base.intersect(&[branch - b_class, b_class, DivisorClass::TAUTOLOGICAL])?;

    // the coordinate point of the smallest twist
    let point_index = base.rank();
    let fiber_mult = base.fiber_multiplicity_at(branch, point_index)?;
    let verdict = if fiber_mult <= Multiplicity::Finite(DU_VAL_MAX_MULTIPLICITY) {
        Verdict::PassesDuValNecessary
    } else {
        Verdict::FailsDuValNecessary
    };
    Ok(BranchReport {
        m,
        base,
        branch,
        b_class,
        b_mult,
        residual_class,
        r_dot_b_sigma,
        point_index,
        fiber_mult,
        verdict,
    })
}
