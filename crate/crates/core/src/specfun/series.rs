//! Power-series route for the polylogarithm.

use num_complex::Complex64;

use super::zeta::euler_maclaurin_zeta;
use super::{is_one, on_unit_circle, series_domain, Estimate};
use crate::error::{finite, Error, Result};

/// Below this modulus the plain partial sum converges fast enough.
const GEOMETRIC_RADIUS: f64 = 0.75;
const GEOMETRIC_CAP: usize = 100_000;
/// Number of `Li_{-k}` coefficients available to the tail expansion.
const TAIL_TERMS: usize = 64;
const PARTIAL_CAP: usize = 1 << 23;
const EPS: f64 = f64::EPSILON;

/// Taylor coefficients `c_k = Li_{-k}(z) / k!` of `z e^D / (1 - z e^D)` in `D`,
/// for `k = 0..len`.
///
/// Computed by power-series division, `(1 - z) c_k = z (1/k! + sum_{j=1}^k c_{k-j} / j!)`,
/// which stays well conditioned for `z` on the unit circle.
pub fn neg_int_taylor_coefficients(z: Complex64, len: usize) -> Result<Vec<Complex64>> {
    let one_minus = Complex64::new(1.0, 0.0) - z;
    if one_minus.norm() == 0.0 {
        return Err(Error::Pole("Li_{-k} coefficients are singular at z = 1".into()));
    }
    let inv_fact: Vec<f64> = std::iter::successors(Some(1.0), {
        let mut j = 0.0;
        move |f: &f64| {
            j += 1.0;
            Some(f / j)
        }
    })
    .take(len.max(1))
    .collect();
    let mut c: Vec<Complex64> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = Complex64::new(inv_fact[k], 0.0);
        for j in 1..=k {
            acc += c[k - j] * inv_fact[j];
        }
        c.push(z * acc / one_minus);
    }
    Ok(c)
}

/// `Li_s(z)` from its power series `sum_{l >= 1} z^l / l^s`.
///
/// - `|z| <= 0.75`: plain partial sum with the geometric tail bound.
/// - `z = 1`: Euler–Maclaurin with its rigorous remainder bound.
/// - otherwise: partial sum to `N` plus the tail
///   `z^N sum_k c_k (-1)^k (s)_k N^{-s-k}` with `c_k = Li_{-k}(z)/k!`
///   (an asymptotic expansion in `1/(N |log z|)`); the reported error is
///   the smallest omitted term.
///
/// Fails with [`Error::Domain`] outside the convergence domain and with
/// [`Error::Convergence`] if the remainder cannot be brought below
/// `tol * (1 + |value|)`.
pub fn polylog_series(s: Complex64, z: Complex64, tol: f64) -> Result<Estimate> {
    if !series_domain(s, z) {
        return Err(Error::Domain(format!("power series for Li_s(z) diverges at s = {s}, z = {z}")));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Estimate::new(z, 0.0));
    }
    if is_one(z) {
        let est = euler_maclaurin_zeta(s, 1.0, tol.min(1e-15))?;
        return Ok(est);
    }
    if z.norm() <= GEOMETRIC_RADIUS && !on_unit_circle(z) {
        geometric(s, z, tol)
    } else {
        accelerated(s, z, tol)
    }
}

fn term(s: Complex64, log_z: Complex64, l: usize) -> Complex64 {
    let lf = l as f64;
    (lf * log_z - s * lf.ln()).exp()
}

fn geometric(s: Complex64, z: Complex64, tol: f64) -> Result<Estimate> {
    let log_z = z.ln();
    let ln_r = z.norm().ln();
    let growth = (-s.re).max(0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut bound = f64::INFINITY;
    for l in 1..=GEOMETRIC_CAP {
        sum += term(s, log_z, l);
        let next = l as f64 + 1.0;
        let next_mod = (next * ln_r - s.re * next.ln()).exp();
        let ratio = z.norm() * (1.0 + 1.0 / next).powf(growth);
        if ratio < 1.0 {
            bound = next_mod / (1.0 - ratio);
            if bound <= EPS * 0.25 * sum.norm() || bound == 0.0 {
                break;
            }
        }
    }
    let sum = finite(sum, "polylog_series")?;
    if bound > tol * (1.0 + sum.norm()) {
        return Err(Error::Convergence(format!(
            "geometric tail bound {bound:e} exceeds tolerance at s = {s}, z = {z}"
        )));
    }
    Ok(Estimate::new(sum, bound + 4.0 * EPS * sum.norm()))
}

fn accelerated(s: Complex64, z: Complex64, tol: f64) -> Result<Estimate> {
    let log_z = z.ln();
    let dist = log_z.norm();
    let coef = neg_int_taylor_coefficients(z, TAIL_TERMS)?;
    // successive tail terms shrink roughly like |s + k| / (N |log z|)
    let start = ((s.norm() + 40.0) / (0.5 * dist)).ceil();
    if !(start <= PARTIAL_CAP as f64) {
        return Err(Error::Convergence(format!("z = {z} is too close to 1 for the series route (|log z| = {dist:e})")));
    }
    let mut n = (start as usize).max(8);
    let mut partial = Complex64::new(0.0, 0.0);
    let mut summed = 0usize;
    let mut best: Option<Estimate> = None;
    loop {
        for l in summed + 1..=n {
            partial += term(s, log_z, l);
        }
        summed = n;
        let (tail, tail_err) = tail_expansion(s, n as f64, &coef);
        let z_n = (n as f64 * log_z).exp();
        let value = partial + z_n * tail;
        let truncation = z_n.norm() * tail_err;
        let rounding = 8.0 * EPS * (n as f64 * dist).max(1.0) * value.norm();
        let est = Estimate::new(finite(value, "polylog_series")?, truncation + rounding);
        let done = truncation <= rounding.max(1e-16 * (1.0 + value.norm())) || 2 * n > PARTIAL_CAP;
        if best.is_none_or(|b| est.error < b.error) {
            best = Some(est);
        }
        if done {
            break;
        }
        n *= 2;
    }
    let est = best.expect("at least one pass");
    if est.error > tol * (1.0 + est.value.norm()) {
        return Err(Error::Convergence(format!(
            "series remainder {:e} exceeds tolerance at s = {s}, z = {z}",
            est.error
        )));
    }
    Ok(est)
}

/// `sum_k c_k (-1)^k (s)_k n^{-s-k}`, truncated where it stops decreasing.
///
/// Sizes are compared over a window of two terms because `c_k` can vanish
/// for every other `k` (at `z = -1`, `Li_{-k}(-1) = 0` for even `k >= 2`).
fn tail_expansion(s: Complex64, n: f64, coef: &[Complex64]) -> (Complex64, f64) {
    let mut factor = (-s * n.ln()).exp(); // (-1)^k (s)_k n^{-s-k}
    let mut acc = Complex64::new(0.0, 0.0);
    let (mut prev, mut prev2) = (f64::INFINITY, f64::INFINITY);
    for (k, c) in coef.iter().enumerate() {
        let t = c * factor;
        let size = t.norm();
        let window = prev.max(prev2);
        if k >= 3 && size > window {
            return (acc, window);
        }
        acc += t;
        if size.max(prev) <= EPS * 0.25 * acc.norm() {
            return (acc, size.max(prev));
        }
        prev2 = prev;
        prev = size;
        factor *= -(s + k as f64) / n;
    }
    (acc, prev.max(prev2))
}
