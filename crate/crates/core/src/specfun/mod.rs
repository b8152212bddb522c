//! Complex special functions with analytic continuation in the order `s`.
//!
//! The polylogarithm has three independent routes:
//!
//! - [`polylog_series`]: the defining power series, with a certified tail
//!   (geometric bound inside the disk, Euler–Maclaurin at `z = 1`, and an
//!   expansion in `Li_{-k}(z)` coefficients elsewhere on the unit circle);
//! - [`polylog_hankel`]: Gauss–Legendre quadrature of the Hankel contour
//!   integral, valid for every `s` except the positive integers;
//! - [`polylog_neg_int`]: exact rational closed forms for `s = 0, -1, -2, ...`.
//!
//! [`polylog`] dispatches between them. Riemann zeta is `Li_s(1)`; Hurwitz
//! zeta and polygamma are built on the same Euler–Maclaurin kernel.

mod gamma;
mod hankel;
mod negint;
mod polylog;
pub(crate) mod quad;
mod series;
mod zeta;

use num_complex::Complex64;

pub use gamma::{gamma, sin_pi, GAMMA_REL_ACCURACY};
pub use hankel::{hankel_recip_gamma_check, polylog_hankel, HankelContour};
pub use negint::polylog_neg_int;
pub use polylog::{polylog, polylog_integer_limit, polylog_with, riemann_zeta, riemann_zeta_with};
pub use series::{neg_int_taylor_coefficients, polylog_series};
pub use zeta::{hurwitz_zeta, polygamma};

/// A computed value together with an estimate of its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T = Complex64> {
    pub value: T,
    pub error: f64,
}

impl<T> Estimate<T> {
    pub fn new(value: T, error: f64) -> Self {
        Self { value, error }
    }
}

/// Acceptance thresholds for the series and contour routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Certified remainder allowed for series routes, relative to `1 + |value|`.
    pub series: f64,
    /// Agreement required between successive quadrature refinements,
    /// relative to `1 + |value|`.
    pub quadrature: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::STRICT
    }
}

impl Tolerances {
    pub const STRICT: Tolerances = Tolerances { series: 1e-10, quadrature: 1e-8 };
    pub const FAST: Tolerances = Tolerances { series: 1e-7, quadrature: 1e-6 };
}

/// `|z|` within this distance of 1 counts as the unit circle.
pub(crate) const UNIT_CIRCLE_EPS: f64 = 1e-14;

pub(crate) fn is_one(z: Complex64) -> bool {
    z.re == 1.0 && z.im == 0.0
}

pub(crate) fn on_unit_circle(z: Complex64) -> bool {
    (z.norm() - 1.0).abs() <= UNIT_CIRCLE_EPS
}

/// Non-positive integer `s` as `Some(n)` with `s = -n`.
pub(crate) fn as_non_positive_int(s: Complex64) -> Option<u32> {
    (s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 && s.re > -1e6).then(|| (-s.re) as u32)
}

/// Positive integer `s`.
pub(crate) fn as_positive_int(s: Complex64) -> Option<u32> {
    (s.im == 0.0 && s.re >= 1.0 && s.re.fract() == 0.0 && s.re < 1e6).then_some(s.re as u32)
}

/// Whether the power series for `Li_s(z)` converges: `|z| < 1` for any `s`,
/// `|z| = 1, z != 1` for `Re s > 0`, and `z = 1` for `Re s > 1`.
pub fn series_domain(s: Complex64, z: Complex64) -> bool {
    let r = z.norm();
    if on_unit_circle(z) {
        if is_one(z) {
            s.re > 1.0
        } else {
            s.re > 0.0
        }
    } else {
        r < 1.0
    }
}
