//! Hankel contour quadrature.
//!
//! The contour comes in from `+infinity` along the upper side of the positive
//! real axis (`arg t = 0`), goes once counterclockwise around `t = 0` on a
//! circle of radius `r`, and returns to `+infinity` along the lower side
//! (`arg t = 2 pi`). On it
//!
//! ```text
//! (-t)^{s-1} = e^{-i (s-1) pi} |t|^{s-1} e^{i (s-1) arg t}
//! ```
//!
//! with `arg t` continuous along the path. This leg assignment is the one
//! that reproduces `zeta(-3) = +1/120` and the defining power series.
//!
//! Each straight leg is integrated in `y = ln x` with Gauss–Legendre panels
//! (so the panels are log-spaced toward the loop) and truncated at
//! `x = leg_length` with an explicit remainder bound; the circle uses
//! Gauss–Legendre panels in the angle. Node counts are doubled until two
//! passes agree.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::quad::{GaussLegendre, PANEL_ORDER};
use super::{as_positive_int, gamma, is_one, Estimate, Tolerances};
use crate::error::{finite, Error, Result};

const TWO_PI: f64 = 2.0 * PI;
const MAX_DOUBLINGS: u32 = 5;
/// Target for the truncation remainder of default contours.
const DEFAULT_TRUNCATION: f64 = 1e-16;

/// Keyhole path around `t = 0` used for the contour integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HankelContour {
    /// Radius of the loop around the origin; below `2 pi`.
    pub radius: f64,
    /// Truncation point `T` of both legs along the positive real axis.
    pub leg_length: f64,
    /// Initial node count on each leg.
    pub leg_nodes: usize,
    /// Initial node count on the loop.
    pub arc_nodes: usize,
    /// Vertical separation of the two legs; zero means both legs lie on the
    /// real axis with the branch assigned explicitly.
    pub leg_offset: f64,
}

impl HankelContour {
    pub const DEFAULT_LEG_NODES: usize = 24 * PANEL_ORDER;
    pub const DEFAULT_ARC_NODES: usize = 8 * PANEL_ORDER;

    pub fn new(radius: f64, leg_length: f64) -> Result<Self> {
        let c = Self {
            radius,
            leg_length,
            leg_nodes: Self::DEFAULT_LEG_NODES,
            arc_nodes: Self::DEFAULT_ARC_NODES,
            leg_offset: 0.0,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn with_nodes(mut self, leg_nodes: usize, arc_nodes: usize) -> Result<Self> {
        self.leg_nodes = leg_nodes;
        self.arc_nodes = arc_nodes;
        self.validate()?;
        Ok(self)
    }

    pub fn with_leg_offset(mut self, leg_offset: f64) -> Result<Self> {
        self.leg_offset = leg_offset;
        self.validate()?;
        Ok(self)
    }

    /// Same contour with the loop radius halved.
    pub fn halved(&self) -> Result<Self> {
        let mut c = *self;
        c.radius *= 0.5;
        c.leg_offset *= 0.5;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0 && self.radius < TWO_PI) {
            return Err(Error::Domain(format!("contour radius {} must lie in (0, 2 pi)", self.radius)));
        }
        if !(self.leg_length > self.radius && self.leg_length.is_finite()) {
            return Err(Error::Domain(format!(
                "leg length {} must exceed the radius {}",
                self.leg_length, self.radius
            )));
        }
        if self.leg_nodes < 2 || self.arc_nodes < 2 {
            return Err(Error::Domain("contour needs at least two nodes per piece".into()));
        }
        if !(self.leg_offset >= 0.0) {
            return Err(Error::Domain(format!("leg offset {} must be non-negative", self.leg_offset)));
        }
        if 0.5 * self.leg_offset >= self.radius {
            return Err(Error::Branch(format!(
                "legs at Im t = +-{} never meet the loop of radius {}",
                0.5 * self.leg_offset,
                self.radius
            )));
        }
        Ok(())
    }

    /// Default contour for `Li_s(z)`: radius half the distance to the
    /// nearest root of `e^t = z` (at most 1), legs long enough that the
    /// truncation remainder is below 1e-16.
    pub fn for_polylog(s: Complex64, z: Complex64) -> Result<Self> {
        let radius = (0.5 * nearest_root(z)).min(1.0);
        let amp = 1.0 / (1.0 - z.norm().min(1.0) * (-1.0f64).exp());
        let pref = gamma(Complex64::new(1.0, 0.0) - s)?.norm() * z.norm() / TWO_PI;
        let leg_length = choose_leg_length(s, 1.0, amp * pref, radius);
        Self::new(radius, leg_length)
    }

    /// Default contour for the `e^{-l t}` check integral.
    pub fn for_exponential(s: Complex64, ell: u32) -> Result<Self> {
        let leg_length = choose_leg_length(s, ell as f64, 1.0 / TWO_PI, 1.0);
        Self::new(1.0, leg_length)
    }
}

/// Distance from `t = 0` to the nearest root of `e^t = z` other than the
/// root `t = 0` itself when `z = 1`.
fn nearest_root(z: Complex64) -> f64 {
    if is_one(z) {
        return TWO_PI;
    }
    z.ln().norm()
}

fn choose_leg_length(s: Complex64, decay: f64, scale: f64, radius: f64) -> f64 {
    let mut t = (20.0 / decay).max(4.0 * radius);
    while t < 5000.0 {
        if leg_remainder(s, t, decay, scale) <= DEFAULT_TRUNCATION {
            return t;
        }
        t += 5.0 / decay.min(1.0);
    }
    t
}

/// Bound on both truncated leg tails when the non-power factor of the
/// integrand is at most `scale * e^{-decay x}` for `x >= t`.
fn leg_remainder(s: Complex64, t: f64, decay: f64, scale: f64) -> f64 {
    let sigma = s.re - 1.0;
    let slack = decay - sigma.max(0.0) / t;
    if slack <= 0.0 {
        return f64::INFINITY;
    }
    // |(-t)^{s-1}| <= |t|^{sigma} e^{pi |Im s|}, |t| <= sqrt(2) x on the legs
    let power = (t.powf(sigma) * 2f64.powf(0.5 * sigma.abs())) * (PI * s.im.abs()).exp();
    2.0 * scale * power * (-decay * t).exp() / slack
}

#[derive(Clone, Copy)]
struct Pieces {
    leg_nodes: usize,
    arc_nodes: usize,
}

fn rule_for(nodes: usize) -> (std::borrow::Cow<'static, GaussLegendre>, usize) {
    if nodes >= PANEL_ORDER {
        (std::borrow::Cow::Borrowed(GaussLegendre::standard()), nodes.div_ceil(PANEL_ORDER))
    } else {
        (std::borrow::Cow::Owned(GaussLegendre::new(nodes)), 1)
    }
}

/// `integral over H of (-t)^{s-1} g(t) dt` at a fixed resolution.
fn integrate_once<G: Fn(Complex64) -> Complex64>(
    contour: &HankelContour,
    s_minus_1: Complex64,
    g: &G,
    pieces: Pieces,
) -> Complex64 {
    let r = contour.radius;
    let h = 0.5 * contour.leg_offset;
    let x0 = (r * r - h * h).sqrt();
    let phi0 = (h / r).asin();
    let power = |t: Complex64, arg: f64| -> Complex64 { (s_minus_1 * Complex64::new(t.norm().ln(), arg - PI)).exp() };

    let (leg_rule, leg_panels) = rule_for(pieces.leg_nodes);
    let legs = leg_rule.composite(x0.ln(), contour.leg_length.ln(), leg_panels, |y| {
        let x = y.exp();
        let upper = Complex64::new(x, h);
        let lower = upper.conj();
        let a = h.atan2(x);
        // upper leg runs inward, lower leg outward
        (power(lower, TWO_PI - a) * g(lower) - power(upper, a) * g(upper)) * x
    });

    let (arc_rule, arc_panels) = rule_for(pieces.arc_nodes);
    let arc = arc_rule.composite(phi0, TWO_PI - phi0, arc_panels, |phi| {
        let t = Complex64::from_polar(r, phi);
        power(t, phi) * g(t) * Complex64::new(0.0, 1.0) * t
    });
    legs + arc
}

/// Integrates with node doubling until the prefactor-scaled passes agree to
/// `tol * (1 + |value|)`. Returns `prefactor * integral`.
fn refine<G: Fn(Complex64) -> Complex64>(
    contour: &HankelContour,
    s: Complex64,
    prefactor: Complex64,
    g: G,
    truncation: f64,
    tol: f64,
) -> Result<Estimate> {
    let s_minus_1 = s - 1.0;
    let mut pieces = Pieces { leg_nodes: contour.leg_nodes, arc_nodes: contour.arc_nodes };
    let mut prev = prefactor * integrate_once(contour, s_minus_1, &g, pieces);
    for _ in 0..MAX_DOUBLINGS {
        pieces.leg_nodes *= 2;
        pieces.arc_nodes *= 2;
        let next = prefactor * integrate_once(contour, s_minus_1, &g, pieces);
        let diff = (next - prev).norm();
        if diff <= tol * (1.0 + next.norm()) {
            let value = finite(next, "Hankel quadrature")?;
            return Ok(Estimate::new(value, diff + truncation));
        }
        prev = next;
    }
    Err(Error::Quadrature(format!(
        "contour quadrature did not settle after {MAX_DOUBLINGS} doublings (last value {prev})"
    )))
}

fn check_order(s: Complex64) -> Result<()> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite order {s}")));
    }
    if let Some(n) = as_positive_int(s) {
        return Err(Error::Pole(format!(
            "Gamma(1 - s) has a pole at s = {n}; use the limit route for positive integer orders"
        )));
    }
    Ok(())
}

fn check_truncation(bound: f64, tol: f64) -> Result<f64> {
    if bound > tol {
        return Err(Error::Quadrature(format!(
            "leg truncation remainder {bound:e} exceeds tolerance {tol:e}; lengthen the legs"
        )));
    }
    Ok(bound)
}

/// `Li_s(z) = -Gamma(1-s) z / (2 pi i) * integral over H of (-t)^{s-1} / (e^t - z) dt`
/// with the default quadrature tolerance.
///
/// Valid for `|z| <= 1` and every `s` except the positive integers. The
/// contour must keep all roots of `e^t = z` outside the loop, except
/// `t = 0` when `z = 1`.
pub fn polylog_hankel(s: Complex64, z: Complex64, contour: &HankelContour) -> Result<Estimate> {
    polylog_hankel_with(s, z, contour, Tolerances::default().quadrature)
}

pub fn polylog_hankel_with(s: Complex64, z: Complex64, contour: &HankelContour, tol: f64) -> Result<Estimate> {
    check_order(s)?;
    contour.validate()?;
    if z.norm() > 1.0 + super::UNIT_CIRCLE_EPS {
        return Err(Error::Domain(format!("polylog continuation needs |z| <= 1, got {z}")));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Estimate::new(z, 0.0));
    }
    let log_z = z.ln();
    for k in -2i32..=2 {
        if k == 0 && is_one(z) {
            continue;
        }
        let root = log_z + Complex64::new(0.0, TWO_PI * k as f64);
        if root.norm() <= contour.radius * (1.0 + 1e-9) {
            return Err(Error::Domain(format!(
                "contour radius {} encloses the root {root} of e^t = z",
                contour.radius
            )));
        }
    }
    let prefactor = -gamma(Complex64::new(1.0, 0.0) - s)? * z / Complex64::new(0.0, TWO_PI);
    let amp = 1.0 / (1.0 - z.norm().min(1.0) * (-contour.leg_length).exp());
    let truncation = leg_remainder(s, contour.leg_length, 1.0, amp * prefactor.norm());
    let truncation = check_truncation(truncation, tol)?;
    refine(contour, s, prefactor, |t: Complex64| 1.0 / (t.exp() - z), truncation, tol)
}

/// `-(1 / 2 pi i) * integral over H of (-t)^{s-1} e^{-l t} dt`, which equals
/// `1 / (Gamma(1 - s) l^s)`. Exercises the contour machinery on an integrand
/// with known value.
pub fn hankel_recip_gamma_check(s: Complex64, ell: u32, contour: &HankelContour) -> Result<Estimate> {
    check_order(s)?;
    contour.validate()?;
    if ell == 0 {
        return Err(Error::Domain("l must be a positive integer".into()));
    }
    let tol = Tolerances::default().quadrature;
    let l = ell as f64;
    let prefactor = -1.0 / Complex64::new(0.0, TWO_PI);
    let truncation = check_truncation(leg_remainder(s, contour.leg_length, l, 1.0 / TWO_PI), tol)?;
    refine(contour, s, prefactor, |t: Complex64| (-l * t).exp(), truncation, tol)
}
