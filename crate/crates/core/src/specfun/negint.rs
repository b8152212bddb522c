use num_complex::Complex64;

use crate::error::{finite, Error, Result};

/// Distance from `z = 1` below which the rational forms report a pole.
pub(crate) const NEAR_ONE: f64 = 1e-12;

/// Eulerian numbers `A(n, k)`, `k = 0..n`, from `A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1)`.
fn eulerian_row(n: u32) -> Vec<f64> {
    let mut row = vec![1.0];
    for m in 1..=n as usize {
        let mut next = vec![0.0; m];
        for (k, slot) in next.iter_mut().enumerate() {
            let keep = if k < row.len() { (k + 1) as f64 * row[k] } else { 0.0 };
            let shift = if k >= 1 { (m - k) as f64 * row[k - 1] } else { 0.0 };
            *slot = keep + shift;
        }
        row = next;
    }
    row
}

/// `Li_{-n}(z)` as the rational function `z E_n(z) / (1 - z)^{n+1}`, where
/// `E_n` is the Eulerian polynomial. `n = 0` gives `z / (1 - z)` and `n = 3`
/// gives `z (z^2 + 4z + 1) / (z - 1)^4`.
///
/// These are the continuation's values for every `z != 1`; at `z = 1` the
/// continuation (which is `zeta(-n)`) is not the limit of this function, so
/// `z` within 1e-12 of 1 is a [`Error::Pole`].
pub fn polylog_neg_int(n: u32, z: Complex64) -> Result<Complex64> {
    let one_minus = Complex64::new(1.0, 0.0) - z;
    if one_minus.norm() < NEAR_ONE {
        return Err(Error::Pole(format!("Li_-{n}(z) is singular at z = 1 (got z = {z})")));
    }
    let value = if n == 0 {
        z / one_minus
    } else {
        // Horner on the Eulerian polynomial.
        let row = eulerian_row(n);
        let poly = row.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
        z * poly / one_minus.powu(n + 1)
    };
    finite(value, "polylog_neg_int")
}
