//! Exact arithmetic: rationals, α-polynomials and rational functions,
//! polynomials in multirectangular coordinates, and the falling-factorial basis.

pub mod falling;
pub mod faulhaber;
pub mod linalg;
pub mod multipoly;
pub mod poly;
pub mod rat_alpha;
pub mod rational;

pub use falling::{
    from_falling_factorial, stirling1_signed, stirling2, to_falling_factorial, Certificate, FFExpansion, FfKey,
};
pub use faulhaber::faulhaber;
pub use multipoly::{JsonTerm, Monomial, MultiPoly};
pub use poly::{PolyAlpha, UniPoly};
pub use rat_alpha::RatAlpha;
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("coefficient is a rational function of alpha, not a polynomial")]
    NonPolynomialAlpha,
    #[error("evaluation hit a pole")]
    PoleEncountered,
    #[error("malformed input: {0}")]
    Schema(String),
}
