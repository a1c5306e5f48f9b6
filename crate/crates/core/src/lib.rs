//! Exact divisor calculus on rational normal scrolls, Hirzebruch surfaces,
//! elliptic K3 pencils and weighted complete intersections, assembled into
//! a checker for the classification of Gorenstein Fano threefolds whose
//! anticanonical system has base points.
//!
//! All arithmetic is over the integers, with rationals only where a degree
//! on a weighted projective space is genuinely fractional.

pub mod blowup;
pub mod classify;
pub mod cli;
pub mod cover;
pub mod k3;
pub mod report;
pub mod scroll;
pub mod surface;
pub mod wps;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scroll(#[from] scroll::ScrollError),
    #[error(transparent)]
    Surface(#[from] surface::SurfaceError),
    #[error(transparent)]
    Pencil(#[from] k3::PencilError),
    #[error(transparent)]
    Wps(#[from] wps::WpsError),
    #[error(transparent)]
    Cover(#[from] cover::CoverError),
    #[error(transparent)]
    Blowup(#[from] blowup::BlowupError),
    #[error(transparent)]
    Classify(#[from] classify::ClassifyError),
}
