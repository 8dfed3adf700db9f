//! Exact and numerical companions to the Basel problem.
//!
//! * [`sequences`]: Bernoulli and Genocchi numbers over exact rationals,
//!   exact `ζ(2n)` as rational multiples of `π^{2n}`.
//! * [`poly`], [`identities`]: Bernoulli/Genocchi polynomials and exact
//!   certificates for the identities between them.
//! * [`quadrature`]: double-exponential quadrature of the log-singular
//!   integrals equal to `±π²/6` and `±π²/12`, Riemann-sum and product limits,
//!   the power series `S(x)` and two functional equations.
//! * [`series`]: partial sums, the bisection identity for `1/sin²x`, and
//!   optimal truncation of two divergent series.
//! * [`verify`]: one-shot runner producing a deterministic JSON-lines report.

pub mod error;
pub mod identities;
pub mod poly;
pub mod quadrature;
pub mod rational;
pub mod sequences;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use poly::RationalPolynomial;
pub use quadrature::{IntegralKind, QuadResult};
pub use rational::{PiPower, Rational};

/// Default absolute tolerance for quadrature-backed operations.
pub const DEFAULT_TOL: f64 = 1e-12;
