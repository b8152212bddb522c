//! Renormalized Casimir stress-energy tensor of a massless scalar between and
//! outside two Dirichlet plates at `x3 = 0` and `x3 = a`.
//!
//! Between the plates
//!
//! ```text
//! <T_{mu nu}> = A diag(-1, 1, 1, -3) + (1 - 6 xi) B(x3) diag(-1, 1, 1, 0)
//! A = pi^2 / (1440 a^4)
//! B = pi^2 / (48 a^4) (3 - 2 sin^2(pi x3 / a)) / sin^4(pi x3 / a)
//! ```
//!
//! and outside, at distance `d` from the nearer plate, the single-plate
//! result `(1 - 6 xi) / (16 pi^2 d^4) diag(-1, 1, 1, 0)`.
//!
//! The plates attract: the pressure on the plate at `x3 = 0` is
//! `(0, 0, pi^2 / (480 a^4))` and on the plate at `x3 = a` it is the negative.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::modesum::{EvalPoint, PlateConfig, Region, TensorDiag};
use crate::specfun::hurwitz_zeta;

/// Smallest `x3 / a` (or `1 - x3 / a`) accepted by [`milton_b`].
pub const MILTON_MIN_FRACTION: f64 = 1e-6;

/// Agreement required between the sine and cosine forms of `B`, before the
/// conditioning of `1 - cos` is accounted for.
const FORM_AGREEMENT: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenormalizedCoefficients {
    pub a: f64,
    pub b: f64,
    /// `B` from `(pi^2 / 12 a^4) (2 + cos theta) / (1 - cos theta)^2`.
    pub b_cosine: f64,
}

fn between_fraction(cfg: &PlateConfig, p: &EvalPoint) -> Result<f64> {
    if cfg.region != Region::Between {
        return Err(Error::Domain(format!("{} is not the region between the plates", cfg.region.name())));
    }
    EvalPoint::new(cfg, p.x3)?;
    Ok(p.x3 / cfg.a)
}

/// `A = pi^2 / (1440 a^4)`.
pub fn coefficient_a(a: f64) -> f64 {
    PI * PI / (1440.0 * a.powi(4))
}

/// `B` in the sine form at `q = x3 / a`.
fn b_sine(a: f64, q: f64) -> f64 {
    let s2 = (PI * q).sin().powi(2);
    PI * PI / (48.0 * a.powi(4)) * (3.0 - 2.0 * s2) / (s2 * s2)
}

fn b_cosine(a: f64, q: f64) -> (f64, f64) {
    let c = (2.0 * PI * q).cos();
    let one_minus = 1.0 - c;
    (PI * PI / (12.0 * a.powi(4)) * (2.0 + c) / (one_minus * one_minus), one_minus)
}

pub fn renormalized_coefficients(cfg: &PlateConfig, p: &EvalPoint) -> Result<RenormalizedCoefficients> {
    let q = between_fraction(cfg, p)?;
    let b = b_sine(cfg.a, q);
    let (bc, one_minus) = b_cosine(cfg.a, q);
    // rounding in 1 - cos is amplified by 2 / (1 - cos) through the square
    let tol = FORM_AGREEMENT + 4.0 * f64::EPSILON / one_minus;
    if !b.is_finite() || ((b - bc) / b).abs() > tol {
        return Err(Error::Numerical(format!("sine form {b:e} and cosine form {bc:e} of B disagree at x3/a = {q}")));
    }
    Ok(RenormalizedCoefficients { a: coefficient_a(cfg.a), b, b_cosine: bc })
}

fn diag_with_b(a: f64, weighted_b: f64) -> TensorDiag {
    TensorDiag::real(-a - weighted_b, a + weighted_b, a + weighted_b, -3.0 * a)
}

pub fn tensor_between_plates(cfg: &PlateConfig, p: &EvalPoint) -> Result<TensorDiag> {
    let c = renormalized_coefficients(cfg, p)?;
    Ok(diag_with_b(c.a, (1.0 - 6.0 * cfg.xi) * c.b))
}

/// `(zeta(4, x3/a) + zeta(4, 1 - x3/a)) / (16 pi^2 a^4)`, equal to `B`.
pub fn milton_b(cfg: &PlateConfig, p: &EvalPoint) -> Result<f64> {
    let q = between_fraction(cfg, p)?;
    let q_bar = 1.0 - q;
    if q.min(q_bar) < MILTON_MIN_FRACTION {
        return Err(Error::Domain(format!("x3/a = {q} is within {MILTON_MIN_FRACTION:e} of a plate")));
    }
    let four = Complex64::new(4.0, 0.0);
    let sum = hurwitz_zeta(four, q)?.value.re + hurwitz_zeta(four, q_bar)?.value.re;
    Ok(sum / (16.0 * PI * PI * cfg.a.powi(4)))
}

/// Distance from `x3` to the nearer plate face outside the plates.
fn outside_distance(cfg: &PlateConfig, p: &EvalPoint) -> Result<f64> {
    EvalPoint::new(cfg, p.x3)?;
    match cfg.region {
        Region::LeftOutside => Ok(-p.x3),
        Region::RightOutside => Ok(p.x3 - cfg.a),
        Region::Between => Err(Error::Domain("point lies between the plates".into())),
    }
}

pub fn tensor_outside(cfg: &PlateConfig, p: &EvalPoint) -> Result<TensorDiag> {
    let d = outside_distance(cfg, p)?;
    let w = (1.0 - 6.0 * cfg.xi) / (16.0 * PI * PI * d.powi(4));
    Ok(TensorDiag::real(-w, w, w, 0.0))
}

/// The renormalized tensor in whichever region `cfg` selects.
pub fn renormalized_tensor(cfg: &PlateConfig, p: &EvalPoint) -> Result<TensorDiag> {
    match cfg.region {
        Region::Between => tensor_between_plates(cfg, p),
        Region::LeftOutside | Region::RightOutside => tensor_outside(cfg, p),
    }
}

/// `|16 pi^2 x3^4 B_a(x3) - 1|` for each separation in `a_sequence`.
///
/// As `a` grows the inner coefficient approaches the single-plate value
/// `1 / (16 pi^2 x3^4)`. With `y = pi x3 / a` the deviation is
/// `(y^4/3)(3 - 2 sin^2 y)/sin^4 y - 1 = y^4/45 + O(y^6)`.
pub fn single_plate_limit_check(cfg: &PlateConfig, p: &EvalPoint, a_sequence: &[f64]) -> Result<Vec<f64>> {
    if !(p.x3 > 0.0) {
        return Err(Error::Domain(format!("x3 must be positive, got {}", p.x3)));
    }
    if a_sequence.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Domain("separations must be strictly increasing".into()));
    }
    a_sequence
        .iter()
        .map(|&a| {
            if !(a > p.x3) {
                return Err(Error::Domain(format!("separation {a} does not exceed x3 = {}", p.x3)));
            }
            let inner = PlateConfig::between(a, cfg.xi)?;
            let b = renormalized_coefficients(&inner, &EvalPoint::new(&inner, p.x3)?)?.b;
            Ok((16.0 * PI * PI * p.x3.powi(4) * b - 1.0).abs())
        })
        .collect()
}

/// Force per unit area `(p1, p2, p3)` on a plate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PressureVector {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

/// Pressure on the plates at `x3 = 0` and `x3 = a`, from
/// `p^i = T^i_j(in) n^j_out + T^i_j(out) n^j_in`.
///
/// Only `T^3_3` enters. It is `-3A` everywhere between the plates and zero
/// outside, so the result is `(0, 0, +-3A)`.
pub fn pressure(cfg: &PlateConfig) -> Result<(PressureVector, PressureVector)> {
    let cfg = PlateConfig::between(cfg.a, cfg.xi)?;
    let mid = EvalPoint::new(&cfg, 0.5 * cfg.a)?;
    let inner = tensor_between_plates(&cfg, &mid)?.t33.re;
    let left = PlateConfig::new(cfg.a, cfg.xi, Region::LeftOutside)?;
    let right = PlateConfig::new(cfg.a, cfg.xi, Region::RightOutside)?;
    let outer_left = tensor_outside(&left, &EvalPoint::new(&left, -cfg.a)?)?.t33.re;
    let outer_right = tensor_outside(&right, &EvalPoint::new(&right, 2.0 * cfg.a)?)?.t33.re;
    // outward normals of the inner region: -e3 at x3 = 0, +e3 at x3 = a
    let at = |n_out: f64, outer: f64| PressureVector { p1: 0.0, p2: 0.0, p3: inner * n_out + outer * -n_out };
    Ok((at(-1.0, outer_left), at(1.0, outer_right)))
}
