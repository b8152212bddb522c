//! Number formatting shared by every table the tool writes.

use std::fmt::Write;

use num_complex::Complex64;

/// Shortest decimal string that parses back to the same `f64` (at most 17
/// significant digits). Magnitudes outside `[1e-5, 1e16)` use exponent form.
pub fn real(x: f64) -> String {
    let m = x.abs();
    if m == 0.0 || (1e-5..1e16).contains(&m) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return real(z.re);
    }
    let mut out = String::new();
    if z.re != 0.0 {
        out.push_str(&real(z.re));
        if z.im > 0.0 {
            out.push('+');
        }
    }
    let _ = write!(out, "{}i", real(z.im));
    out
}

/// Parses `3`, `-0.5`, `2i`, `-i`, `1.5+2i`, `1e-3-4e2i`.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse `{text}` as a complex number");
    let num = |s: &str| -> Result<f64, String> {
        let v = match s {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => s.parse::<f64>().map_err(|_| bad())?,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse::<f64>().ok().filter(|v| v.is_finite()).map(|v| Complex64::new(v, 0.0)).ok_or_else(bad);
    };
    let bytes = body.as_bytes();
    let split =
        (1..bytes.len()).rev().find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(num(&body[..k])?, num(&body[k..])?)),
        None => Ok(Complex64::new(0.0, num(body)?)),
    }
}
