//! Renormalized vacuum stress-energy of a massless scalar field between and
//! outside two Dirichlet plates, computed by local zeta regularization.
//!
//! The crate is layered bottom-up:
//!
//! - [`specfun`]: complex Gamma, the polylogarithm (power series, Hankel
//!   contour quadrature, and rational closed forms at non-positive integer
//!   order), Riemann and Hurwitz zeta, polygamma.
//! - [`modesum`]: the regularized mode sum as an analytic function of the
//!   complex regulator `u`, its brute-force and radial-quadrature oracles,
//!   and the continuation to `u = 0`.
//! - [`casimir`]: closed-form renormalized tensors inside and outside the
//!   plates, the Hurwitz-zeta form of the position-dependent coefficient, and
//!   the pressure on the plates.
//! - [`exec`]: order-preserving grid evaluation (rayon when the `parallel`
//!   feature is on) and the cooperative cancellation hook used by the
//!   long-running oracles.
//!
//! ```
//! use casimir_core::specfun::riemann_zeta;
//! use num_complex::Complex64;
//!
//! let z = riemann_zeta(Complex64::new(-3.0, 0.0)).unwrap();
//! assert!((z.value.re - 1.0 / 120.0).abs() < 1e-12);
//! ```

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod casimir;
pub mod error;
pub mod exec;
pub mod modesum;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Scalar of the special-function layer.
pub type ComplexValue = Complex64;
