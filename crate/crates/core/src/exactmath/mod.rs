//! Exact arithmetic substrate: rationals, univariate polynomials, binary
//! forms, places of the projective line and Q-divisors on it.

pub mod divisor;
pub mod form;
pub mod parse;
pub mod place;
pub mod poly;
pub mod rational;

use thiserror::Error;

pub use divisor::DivisorP1;
pub use form::{BinaryForm, Mat2};
pub use place::{place_profile, Place, ProfileEntry, Valuation};
pub use poly::{Degree, UniPoly};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("indeterminate profile: every input form is zero")]
    IndeterminateProfile,
    #[error("singular change of coordinates")]
    SingularMatrix,
    #[error("a degree-{degree} form needs {} coefficients, got {got}", *degree as usize + 1)]
    SlotCount { degree: u32, got: usize },
    #[error("polynomial of degree {poly_degree} does not fit a degree-{form_degree} form")]
    DegreeTooLarge {
        poly_degree: usize,
        form_degree: u32,
    },
    #[error("forms of degree {0} and {1} cannot be added")]
    DegreeMismatch(u32, u32),
}

/// Valuation of `form` at `place`.
pub fn valuation(form: &BinaryForm, place: &Place) -> Valuation {
    form.valuation(place)
}

/// `form` composed with the substitution `(s, t) -> g (s, t)`.
pub fn mobius(form: &BinaryForm, g: &Mat2) -> Result<BinaryForm, ExactError> {
    form.mobius(g)
}
