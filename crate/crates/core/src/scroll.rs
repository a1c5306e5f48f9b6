//! Divisor arithmetic on rational normal scrolls over the line.
//!
//! `F(d_1, ..., d_n)` is the projectivisation of `O(d_1) + ... + O(d_n)` over
//! `P^1`, with tautological class `H = O(1)` and fibre class `F`. A divisor
//! class is the pair `(h, f)` meaning `h·H + f·F`; the system usually written
//! `|O(k) - lF|` is `(k, -l)`.
//!
//! The Chow ring is generated by `H` and `F` subject to
//! `H^n = δ·H^{n-1}F`, `F^2 = 0` and `∫ H^{n-1}F = 1`, where `δ = Σ d_i`.
//! Sections are counted monomial by monomial: the coefficient of
//! `x_1^{e_1} ⋯ x_n^{e_n}` in a member of `(h, f)` is a section of
//! `O_{P^1}(e·d + f)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Upper bound on the length of the h⁰ chain walked by
/// [`Scroll::fixed_component_multiplicity`].
pub const MAX_CHAIN: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScrollError {
    #[error("a scroll needs at least two summands, got {0}")]
    TooFewSummands(usize),
    #[error("class has negative O(1)-coefficient {0}")]
    NegativeDegree(i64),
    #[error("expected {expected} classes, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("component {class} has h0 = {h0}; a unique member is required")]
    NotRigid { class: DivisorClass, h0: u64 },
    #[error("linear system {0} is empty")]
    EmptySystem(DivisorClass),
    #[error("coordinate index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("summand index {0} listed twice")]
    DuplicateIndex(usize),
    #[error("twist {0} is negative, so O(1) is not globally generated")]
    NegativeTwist(i64),
    #[error("fixed-component chain did not terminate within {0} steps")]
    ChainTooLong(u32),
}

/// The class `h·O(1) + f·F`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct DivisorClass {
    pub h: i64,
    pub f: i64,
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { h: 0, f: 0 };
    /// `O(1)`.
    pub const TAUTOLOGICAL: DivisorClass = DivisorClass { h: 1, f: 0 };
    /// The fibre `F` of the projection to the line.
    pub const FIBER: DivisorClass = DivisorClass { h: 0, f: 1 };

    pub const fn new(h: i64, f: i64) -> Self {
        DivisorClass { h, f }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.f)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.h + rhs.h, self.f + rhs.f)
    }
}

impl AddAssign for DivisorClass {
    fn add_assign(&mut self, rhs: DivisorClass) {
        *self = *self + rhs;
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.h - rhs.h, self.f - rhs.f)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.h, -self.f)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * rhs.h, self * rhs.f)
    }
}

/// Exponent vector of a fibre monomial `x_1^{e_1} ⋯ x_n^{e_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `e·d`, the degree contributed by the twists.
    pub fn weight(&self, twists: &[i64]) -> i64 {
        weight(&self.0, twists)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Multiplicity of the generic member at a point; `Infinite` when every
/// member contains the point's fibre coordinate locus (empty support).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(k) => write!(f, "{k}"),
            Multiplicity::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Multiplicity {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Multiplicity::Finite(k) => serializer.serialize_u32(*k),
            Multiplicity::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinimalDegreeData {
    pub degree: i64,
    pub ambient_dim: i64,
    pub is_minimal_degree: bool,
}

/// A scroll `F(d_1, ..., d_n)` with `d_1 ≥ ... ≥ d_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scroll {
    twists: Vec<i64>,
}

impl fmt::Display for Scroll {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twists.iter().map(i64::to_string).collect();
        write!(f, "F({})", parts.join(","))
    }
}

impl Scroll {
    /// Builds the scroll, sorting the twists into non-increasing order.
    pub fn new(mut twists: Vec<i64>) -> Result<Self, ScrollError> {
        if twists.len() < 2 {
            return Err(ScrollError::TooFewSummands(twists.len()));
        }
        twists.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Scroll { twists })
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// Number of summands; also the dimension of the total space.
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// `δ = Σ d_i = ∫ H^n`.
    pub fn delta(&self) -> i64 {
        self.twists.iter().sum()
    }

    /// `h⁰(h·O(1) + f·F) = Σ_{|e| = h} max(0, e·d + f + 1)`.
    pub fn h0(&self, c: DivisorClass) -> u64 {
        if c.h < 0 {
            return 0;
        }
        let mut total = 0u64;
        for_each_exponent(self.rank(), c.h as u32, |e| {
            let deg = weight(e, &self.twists) + c.f;
            if deg >= 0 {
                total += (deg + 1) as u64;
            }
        });
        total
    }

    /// Exponents whose coefficient space is non-zero, in descending
    /// lexicographic order.
    pub fn monomial_support(&self, c: DivisorClass) -> Result<Vec<ExponentVector>, ScrollError> {
        if c.h < 0 {
            return Err(ScrollError::NegativeDegree(c.h));
        }
        let mut support = Vec::new();
        for_each_exponent(self.rank(), c.h as u32, |e| {
            if weight(e, &self.twists) + c.f >= 0 {
                support.push(ExponentVector(e.to_vec()));
            }
        });
        Ok(support)
    }

    /// Top intersection number of `n` classes.
    pub fn intersect(&self, classes: &[DivisorClass]) -> Result<i64, ScrollError> {
        if classes.len() != self.rank() {
            return Err(ScrollError::ArityMismatch {
                expected: self.rank(),
                got: classes.len(),
            });
        }
        let h_product: i64 = classes.iter().map(|c| c.h).product();
        let mut total = self.delta() * h_product;
        for (i, ci) in classes.iter().enumerate() {
            let others: i64 = classes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, c)| c.h)
                .product();
            total += ci.f * others;
        }
        Ok(total)
    }

    /// `K = -n·O(1) + (δ - 2)·F`.
    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass::new(-(self.rank() as i64), self.delta() - 2)
    }

    /// How many times the unique member of `comp` splits off every member of
    /// `sys`.
    ///
    /// Multiplication by the section of `comp` injects `H⁰(sys - comp)` into
    /// `H⁰(sys)`, so equal dimensions mean every section of `sys` is
    /// divisible. The walk stops at the first drop.
    pub fn fixed_component_multiplicity(
        &self,
        comp: DivisorClass,
        sys: DivisorClass,
    ) -> Result<u32, ScrollError> {
        let rigid = self.h0(comp);
        if rigid != 1 {
            return Err(ScrollError::NotRigid {
                class: comp,
                h0: rigid,
            });
        }
        let base = self.h0(sys);
        if base == 0 {
            return Err(ScrollError::EmptySystem(sys));
        }
        let mut mu = 0u32;
        while self.h0(sys - (i64::from(mu) + 1) * comp) == base {
            mu += 1;
            if mu >= MAX_CHAIN {
                return Err(ScrollError::ChainTooLong(MAX_CHAIN));
            }
        }
        Ok(mu)
    }

    /// Multiplicity of the generic member of `c` at the fibre point where
    /// every coordinate except `x_index` vanishes (`index` is 1-based).
    pub fn fiber_multiplicity_at(
        &self,
        c: DivisorClass,
        index: usize,
    ) -> Result<Multiplicity, ScrollError> {
        if index == 0 || index > self.rank() {
            return Err(ScrollError::IndexOutOfRange {
                index,
                rank: self.rank(),
            });
        }
        let support = self.monomial_support(c)?;
        let h = c.h as u32;
        Ok(support
            .iter()
            .map(|e| h - e.0[index - 1])
            .min()
            .map_or(Multiplicity::Infinite, Multiplicity::Finite))
    }

    /// The sub-scroll on the summands `keep` (1-based) together with the
    /// restricted class. Restriction keeps `(h, f)` unchanged.
    pub fn restrict_to_subscroll(
        &self,
        keep: &[usize],
        c: DivisorClass,
    ) -> Result<(Scroll, DivisorClass), ScrollError> {
        if keep.len() < 2 {
            return Err(ScrollError::TooFewSummands(keep.len()));
        }
        let mut seen = vec![false; self.rank()];
        let mut twists = Vec::with_capacity(keep.len());
        for &i in keep {
            if i == 0 || i > self.rank() {
                return Err(ScrollError::IndexOutOfRange {
                    index: i,
                    rank: self.rank(),
                });
            }
            if std::mem::replace(&mut seen[i - 1], true) {
                return Err(ScrollError::DuplicateIndex(i));
            }
            twists.push(self.twists[i - 1]);
        }
        Ok((Scroll::new(twists)?, c))
    }

    /// Degree and ambient dimension of the image under `|O(1)|` in
    /// `P_{δ + n - 1}`.
    pub fn minimal_degree_data(&self) -> Result<MinimalDegreeData, ScrollError> {
        let smallest = *self.twists.last().expect("rank >= 2");
        if smallest < 0 {
            return Err(ScrollError::NegativeTwist(smallest));
        }
        let n = self.rank() as i64;
        let degree = self.delta();
        let ambient_dim = degree + n - 1;
        Ok(MinimalDegreeData {
            degree,
            ambient_dim,
            is_minimal_degree: degree == (ambient_dim - n) + 1,
        })
    }
}

fn weight(e: &[u32], twists: &[i64]) -> i64 {
    e.iter().zip(twists).map(|(&a, &d)| i64::from(a) * d).sum()
}

/// Visits every `e ∈ N^parts` with `|e| = total`, in descending
/// lexicographic order.
fn for_each_exponent(parts: usize, total: u32, mut visit: impl FnMut(&[u32])) {
    fn go(cur: &mut [u32], pos: usize, left: u32, visit: &mut dyn FnMut(&[u32])) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            visit(cur);
            return;
        }
        for v in (0..=left).rev() {
            cur[pos] = v;
            go(cur, pos + 1, left - v, visit);
        }
    }
    let mut cur = vec![0u32; parts];
    go(&mut cur, 0, total, &mut visit);
}
