//! Exact arithmetic in `Z[q, q^-1]` and `Q(q)`.
//!
//! [`LaurentPoly`] carries arbitrary-precision integer coefficients,
//! [`RationalQ`] is a canonical-form quotient, and [`Membership`] answers
//! the ring questions (`A`, its maximal ideal, `Z[q]`, `N[q, q^-1]`) that the
//! basis verifiers ask. Quantum integers use the balanced convention
//! `[n] = (q^n - q^-n)/(q - q^-1)` throughout.

mod poly;
mod quantum;
mod rational;
mod series;
mod text;

pub use poly::LaurentPoly;
pub use quantum::{qbinom, qfactorial, qint};
pub use rational::{Membership, RationalQ};
pub use series::PowerSeriesTrunc;
