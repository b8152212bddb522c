use num_complex::Complex64;

use super::hankel::polylog_hankel_with;
use super::negint::NEAR_ONE;
use super::{
    as_non_positive_int, as_positive_int, is_one, polylog_neg_int, polylog_series, series_domain, Estimate,
    HankelContour, Tolerances, UNIT_CIRCLE_EPS,
};
use crate::error::{Error, Result};

/// Offsets used to approach a positive integer order from both sides.
const LIMIT_STEPS: [f64; 2] = [1e-4, 5e-5];

/// `Li_s(z)` for `|z| <= 1` with the default tolerances.
pub fn polylog(s: Complex64, z: Complex64) -> Result<Estimate> {
    polylog_with(s, z, &Tolerances::default())
}

/// Dispatches to the cheapest route that applies:
///
/// 1. `s = 0, -1, -2, ...` and `z != 1`: the rational closed form (a pole
///    within 1e-12 of `z = 1`);
/// 2. inside the series domain: the power series, if it certifies the tolerance;
/// 3. `s = 1, 2, 3, ...` (where `Gamma(1 - s)` has a pole): the symmetric
///    limit of the contour integral, Richardson-extrapolated;
/// 4. otherwise the Hankel contour integral.
///
/// For real `s` and real `z` the value is real; any imaginary residue left by
/// quadrature is dropped and added to the error estimate.
pub fn polylog_with(s: Complex64, z: Complex64, tol: &Tolerances) -> Result<Estimate> {
    let est = dispatch(s, z, tol)?;
    if s.im == 0.0 && z.im == 0.0 && est.value.im != 0.0 {
        return Ok(Estimate::new(Complex64::new(est.value.re, 0.0), est.error + est.value.im.abs()));
    }
    Ok(est)
}

fn dispatch(s: Complex64, z: Complex64, tol: &Tolerances) -> Result<Estimate> {
    if z.norm() > 1.0 + UNIT_CIRCLE_EPS {
        return Err(Error::Domain(format!("polylog is only continued for |z| <= 1, got z = {z}")));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Estimate::new(z, 0.0));
    }
    if is_one(z) && s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("Li_1(1) = zeta(1) diverges".into()));
    }
    if let Some(n) = as_non_positive_int(s) {
        if !is_one(z) {
            if (Complex64::new(1.0, 0.0) - z).norm() < NEAR_ONE {
                return Err(Error::Pole(format!(
                    "Li_{{-{n}}}(z) is discontinuous at z = 1; got z within {NEAR_ONE:e} of it"
                )));
            }
            return Ok(Estimate::new(polylog_neg_int(n, z)?, 0.0));
        }
    }
    if series_domain(s, z) {
        match polylog_series(s, z, tol.series) {
            Ok(est) => return Ok(est),
            Err(Error::Convergence(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if let Some(n) = as_positive_int(s) {
        return polylog_integer_limit_with(n, z, tol);
    }
    let contour = HankelContour::for_polylog(s, z)?;
    polylog_hankel_with(s, z, &contour, tol.quadrature)
}

/// `Li_n(z)` at a positive integer order as the limit `s -> n` of the
/// contour representation: the symmetric averages at `n +- 1e-4` and
/// `n +- 5e-5` are Richardson-extrapolated (their error is even in the
/// offset, so one step removes the `delta^2` term).
pub fn polylog_integer_limit(n: u32, z: Complex64) -> Result<Estimate> {
    polylog_integer_limit_with(n, z, &Tolerances::default())
}

fn polylog_integer_limit_with(n: u32, z: Complex64, tol: &Tolerances) -> Result<Estimate> {
    if n == 0 {
        return Err(Error::Domain("the limit route is for positive integer orders".into()));
    }
    if n == 1 && is_one(z) {
        return Err(Error::Pole("Li_1(1) = zeta(1) diverges".into()));
    }
    let centre = Complex64::new(n as f64, 0.0);
    let mut sym = [Estimate::new(Complex64::new(0.0, 0.0), 0.0); 2];
    for (slot, delta) in sym.iter_mut().zip(LIMIT_STEPS) {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut err = 0.0;
        for s in [centre + delta, centre - delta] {
            let contour = HankelContour::for_polylog(s, z)?;
            let est = polylog_hankel_with(s, z, &contour, tol.quadrature)?;
            acc += est.value;
            err += est.error;
        }
        *slot = Estimate::new(0.5 * acc, 0.5 * err);
    }
    let ratio = (LIMIT_STEPS[0] / LIMIT_STEPS[1]).powi(2);
    let value = (ratio * sym[1].value - sym[0].value) / (ratio - 1.0);
    // the discarded delta^4 term is of the size of the last correction times (delta2/delta1)^2
    let correction = (sym[1].value - sym[0].value).norm() / (ratio - 1.0) / ratio;
    let error = (ratio * sym[1].error + sym[0].error) / (ratio - 1.0) + correction;
    Ok(Estimate::new(value, error))
}

/// Riemann zeta `zeta(s) = Li_s(1)` for `s != 1`.
pub fn riemann_zeta(s: Complex64) -> Result<Estimate> {
    riemann_zeta_with(s, &Tolerances::default())
}

pub fn riemann_zeta_with(s: Complex64, tol: &Tolerances) -> Result<Estimate> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("zeta has a pole at s = 1".into()));
    }
    polylog_with(s, Complex64::new(1.0, 0.0), tol)
}
