use std::f64::consts::PI;

use num_complex::Complex64;

use super::Estimate;
use crate::error::{finite, Error, Result};

/// `B_{2j} / (2j)!` for `j = 1..=15`.
const BERNOULLI_OVER_FACTORIAL: [f64; 15] = [
    8.333_333_333_333_333_333e-2,
    -1.388_888_888_888_888_889e-3,
    3.306_878_306_878_306_878e-5,
    -8.267_195_767_195_767_196e-7,
    2.087_675_698_786_809_898e-8,
    -5.284_190_138_687_493_185e-10,
    1.338_253_653_068_467_883e-11,
    -3.389_680_296_322_582_867e-13,
    8.586_062_056_277_844_564e-15,
    -2.174_868_698_558_061_873e-16,
    5.509_002_828_360_229_515e-18,
    -1.395_446_468_581_252_334e-19,
    3.534_707_039_629_467_472e-21,
    -8.953_517_427_037_546_850e-23,
    2.267_952_452_337_683_060e-24,
];

const EM_TERMS: usize = 15;
const MAX_DIRECT: usize = 1 << 20;

/// `sum_{k >= 0} (k + q)^{-s}` by direct summation of the first `N` terms and
/// an Euler–Maclaurin tail. The returned error is the standard bound
/// `4 |(s)_{2M}| / (2 pi)^{2M} * x^{1 - sigma - 2M} / (sigma + 2M - 1)`,
/// `x = N + q`, which holds for complex `s`.
pub(crate) fn euler_maclaurin_zeta(s: Complex64, q: f64, rel_target: f64) -> Result<Estimate> {
    debug_assert!(s.re > 1.0 && q > 0.0);
    let mut n = 16 + s.norm().ceil() as usize;
    let mut direct = Complex64::new(0.0, 0.0);
    let mut summed = 0usize;
    loop {
        for k in summed..n {
            direct += (-s * (k as f64 + q).ln()).exp();
        }
        summed = n;
        let x = n as f64 + q;
        let lnx = x.ln();
        let x_pow = (-s * lnx).exp();
        let mut tail = x_pow * x / (s - 1.0) + 0.5 * x_pow;
        // (s)_{2j-1} x^{-s-2j+1}, advanced by (s+2j-1)(s+2j)/x^2
        let mut rising = s;
        let mut power = x_pow / x;
        for (j, b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate().take(EM_TERMS) {
            tail += *b * rising * power;
            let m = 2.0 * j as f64 + 1.0;
            rising *= (s + m) * (s + m + 1.0);
            power /= x * x;
        }
        // `rising` is now (s)_{2M+1}; the bound wants (s)_{2M}
        let poch_2m = rising / (s + 2.0 * EM_TERMS as f64);
        let sigma_m = s.re + 2.0 * EM_TERMS as f64 - 1.0;
        let bound = 4.0 * poch_2m.norm() / (2.0 * PI).powi(2 * EM_TERMS as i32) * (-sigma_m * lnx).exp() / sigma_m;
        let value = direct + tail;
        if bound <= rel_target * value.norm() || n >= MAX_DIRECT {
            let value = finite(value, "euler_maclaurin_zeta")?;
            if bound > rel_target * value.norm() {
                return Err(Error::Convergence(format!(
                    "Euler-Maclaurin bound {bound:e} above target at s = {s}, q = {q}"
                )));
            }
            return Ok(Estimate::new(value, bound + 4.0 * f64::EPSILON * value.norm()));
        }
        n *= 2;
    }
}

/// Hurwitz zeta `zeta(s, q) = sum_{l >= 0} (l + q)^{-s}` for `Re s > 1`, `q > 0`.
///
/// Relative error is below 1e-12. Tiny `q` is allowed; the leading `q^{-s}`
/// term is summed exactly.
pub fn hurwitz_zeta(s: Complex64, q: f64) -> Result<Estimate> {
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!("hurwitz_zeta requires Re s > 1, got s = {s}")));
    }
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::Domain(format!("hurwitz_zeta requires q > 0, got q = {q}")));
    }
    euler_maclaurin_zeta(s, q, 1e-15)
}

/// Polygamma `psi^{(m)}(q) = (-1)^{m+1} m! zeta(m + 1, q)` for `m >= 1`, `q > 0`.
pub fn polygamma(m: u32, q: f64) -> Result<Estimate<f64>> {
    if m == 0 {
        return Err(Error::Domain("polygamma order must be at least 1".into()));
    }
    let z = hurwitz_zeta(Complex64::new(m as f64 + 1.0, 0.0), q)?;
    let factorial: f64 = (1..=m).map(f64::from).product();
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    Ok(Estimate::new(sign * factorial * z.value.re, factorial * z.error))
}
