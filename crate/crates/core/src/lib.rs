//! Exact combinatorics of staircase shapes: corner posets, Bruhat orders on
//! compositions, generalized bubble-sort over arborescent posets, DL-dense
//! arrays, key polynomials and verification of Cauchy-type identities.

pub mod bruhat;
pub mod dl;
pub mod dominant;
pub mod identities;
pub mod poly;
pub mod poset;
pub mod shapes;

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Shape(#[from] shapes::ShapeError),
    #[error(transparent)]
    Poset(#[from] poset::PosetError),
    #[error(transparent)]
    Bruhat(#[from] bruhat::BruhatError),
    #[error(transparent)]
    Dominant(#[from] dominant::DominantError),
    #[error(transparent)]
    Dl(#[from] dl::DlError),
    #[error(transparent)]
    Poly(#[from] poly::PolyError),
}
