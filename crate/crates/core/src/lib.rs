//! Exact character arithmetic for SL2(F5) and its central extensions, and a
//! formal calculus of isobaric sums, Rankin–Selberg pole orders and
//! Landau–Siegel exponent counting for icosahedral symmetric powers.
//!
//! The arithmetic core is generic over the rational coefficient type (see
//! [`scalar::Coefficient`]); the aliases below fix it to arbitrary-precision
//! rationals, which is what the rest of the crate uses.

pub mod chartab;
pub mod error;
pub mod group;
pub mod icostruct;
pub mod isobaric;
pub mod report;
pub mod scalar;
pub mod siegel;
pub mod verify;

pub use error::{Error, Result};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// An element `a + b√5` of Q(√5) with exact rational parts.
pub type ExactScalar = scalar::QSqrt5<Rational>;
/// The same field over 64-bit rationals; exact but overflow-prone.
pub type SmallScalar = scalar::QSqrt5<num_rational::Rational64>;
/// Class functions on SL2(F5) with values in Q(√5).
pub type ClassFn = chartab::ClassFunction<Rational>;
/// The character table with arbitrary-precision values.
pub type Table = chartab::CharacterTable<Rational>;
