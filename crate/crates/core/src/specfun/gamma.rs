use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{finite, Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `sin(pi s)` with exact argument reduction of the real part modulo 2.
pub fn sin_pi(s: Complex64) -> Complex64 {
    let x = s.re - 2.0 * (s.re / 2.0).round();
    let (sx, cx) = if x == 0.0 || x.abs() == 1.0 {
        (0.0, if x == 0.0 { 1.0 } else { -1.0 })
    } else if x.abs() == 0.5 {
        (x.signum(), 0.0)
    } else {
        (PI * x).sin_cos()
    };
    let y = PI * s.im;
    Complex64::new(sx * y.cosh(), cx * y.sinh())
}

/// Lanczos evaluation for `Re s >= 0.5`.
fn gamma_right(s: Complex64) -> Complex64 {
    let z = s - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let log_part = (z + 0.5) * t.ln() - t;
    (2.0 * PI).sqrt() * log_part.exp() * acc
}

/// Relative accuracy of [`gamma`] on `|s| <= 20` away from the poles.
pub const GAMMA_REL_ACCURACY: f64 = 1e-12;

/// Complex Gamma function.
///
/// Lanczos approximation (g = 7, nine terms) on `Re s >= 0.5`, reflection
/// `Gamma(s) Gamma(1 - s) = pi / sin(pi s)` elsewhere.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain(format!("gamma of non-finite argument {s}")));
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 {
        return Err(Error::Pole(format!("gamma has a pole at s = {}", s.re)));
    }
    let value = if s.re < 0.5 { PI / (sin_pi(s) * gamma_right(1.0 - s)) } else { gamma_right(s) };
    finite(value, "gamma")
}
