//! Exact analysis of elliptic fibrations over the projective line.
//!
//! The pipeline runs bottom-up through the modules:
//!
//! * [`exactmath`]: rationals, polynomials, binary forms, places, divisors.
//! * [`weierstrass`]: discriminants, minimalization, Kodaira fiber types.
//! * [`canbundle`]: log canonical thresholds, discriminant and moduli parts.
//! * [`stability`]: beta/delta invariants and K-stability verdicts.
//! * [`dfweights`]: CM weights, Donaldson-Futaki invariants of point
//!   degenerations and Hilbert-Mumford weights.
//! * [`batch`]: data-parallel evaluation of many inputs.
//!
//! No floating point is used anywhere.

pub mod batch;
pub mod canbundle;
pub mod dfweights;
pub mod exactmath;
pub mod stability;
pub mod weierstrass;

pub use exactmath::rational::{int, rat, Rational};
