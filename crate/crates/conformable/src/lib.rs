//! Conformable fractional calculus of order 0 < α ≤ 1.
//!
//! The conformable derivative `D^α f(x) = x^(1-α) f'(x)` reduces to the
//! classical derivative through the change of variable u = x^α/α. This crate
//! builds on that reduction: a self-adjoint second-order operator and its
//! Bessel-type eigenbasis, Sturm–Liouville generalizations, conformable
//! Laplace/Fourier transforms, and two quantum-mechanical applications
//! (perturbed box states and SUSY partner potentials).

pub mod cli;
pub mod conformable;
pub mod eigenbasis;
pub mod error;
pub mod numerics;
pub mod quantum;
pub mod specfun;
pub mod sturm;
pub mod susy;
pub mod transforms;

pub use conformable::Order;
pub use error::{Error, Result};
