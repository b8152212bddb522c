//! Zeta-regularized vacuum stress-energy between two Dirichlet plates as an
//! analytic function of the complex regulator `u`.
//!
//! For `Re u > 4` the regularized tensor is the convergent mode sum; with
//! `P = 1 / (4 pi^{u-2} (u-3) a^{4-u})` and `theta = 2 pi x3 / a` it reads
//!
//! ```text
//! t00 = P sum_l l^{3-u} [1 - (2 + 4(u-3) xi)/(u-1) cos(l theta)]
//! t11 = t22 = P/(u-1) sum_l l^{3-u} [1 - (1 + (u-3)(1-4 xi)) cos(l theta)]
//! t33 = P (u-3)/(u-1) sum_l l^{3-u}
//! ```
//!
//! and in closed form it is `A^u diag(u-1, 1, 1, u-3) + B^u diag(...)` with
//! coefficients built from `zeta(u-3)` and `Li_{u-3}(e^{+-i theta})`. The
//! closed form continues to every `u` where those functions exist; its value
//! at `u = 0` is the renormalized tensor.
//!
//! Only diagonal components are represented: the off-diagonal vacuum
//! expectation values vanish identically for this geometry.
//!
//! ```
//! use casimir_core::modesum::TensorDiag;
//! use casimir_core::Complex64;
//!
//! let t = TensorDiag::real(-1.0, 1.0, 1.0, -3.0);
//! assert_eq!(t.component(0, 3), Complex64::new(0.0, 0.0));
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exec::{self, Monitor, Strategy, Unmonitored};
use crate::specfun::quad::GaussLegendre;
use crate::specfun::{polylog_with, riemann_zeta_with, Tolerances};

/// Minkowski metric signature, `diag(-1, 1, 1, 1)`.
pub const METRIC: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `Re u > 4`: the mode sum converges.
    Convergent,
    /// Everywhere else; only the analytic continuation is defined.
    Continuation,
}

/// Complex regulator `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegulatorU(pub Complex64);

impl RegulatorU {
    pub fn new(u: Complex64) -> Self {
        Self(u)
    }

    pub fn real(u: f64) -> Self {
        Self(Complex64::new(u, 0.0))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn regime(self) -> Regime {
        if self.0.re > 4.0 {
            Regime::Convergent
        } else {
            Regime::Continuation
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Between,
    LeftOutside,
    RightOutside,
}

impl Region {
    pub fn name(self) -> &'static str {
        match self {
            Region::Between => "between",
            Region::LeftOutside => "left",
            Region::RightOutside => "right",
        }
    }
}

/// Plate separation `a`, coupling `xi`, and the region being evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateConfig {
    pub a: f64,
    pub xi: f64,
    pub region: Region,
}

impl PlateConfig {
    pub fn new(a: f64, xi: f64, region: Region) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::Domain(format!("plate separation must be positive, got {a}")));
        }
        if !xi.is_finite() {
            return Err(Error::Domain(format!("coupling must be finite, got {xi}")));
        }
        Ok(Self { a, xi, region })
    }

    pub fn between(a: f64, xi: f64) -> Result<Self> {
        Self::new(a, xi, Region::Between)
    }

    /// Region containing `x3`, or a domain error when `x3` lies on a plate.
    pub fn region_of(a: f64, x3: f64) -> Result<Region> {
        if x3 == 0.0 || x3 == a {
            Err(Error::Domain(format!("x3 = {x3} lies on a plate")))
        } else if x3 < 0.0 {
            Ok(Region::LeftOutside)
        } else if x3 > a {
            Ok(Region::RightOutside)
        } else if x3.is_nan() {
            Err(Error::Domain("x3 is NaN".into()))
        } else {
            Ok(Region::Between)
        }
    }

    /// Configuration with the region inferred from `x3`.
    pub fn locate(a: f64, xi: f64, x3: f64) -> Result<(Self, EvalPoint)> {
        let cfg = Self::new(a, xi, Self::region_of(a, x3)?)?;
        let p = EvalPoint::new(&cfg, x3)?;
        Ok((cfg, p))
    }
}

/// Coordinate `x3` normal to the plates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub x3: f64,
}

impl EvalPoint {
    /// Checks that `x3` lies in the region selected by `cfg`.
    pub fn new(cfg: &PlateConfig, x3: f64) -> Result<Self> {
        let ok = match cfg.region {
            Region::Between => x3 > 0.0 && x3 < cfg.a,
            Region::LeftOutside => x3 < 0.0,
            Region::RightOutside => x3 > cfg.a && x3.is_finite(),
        };
        if !ok || !x3.is_finite() {
            return Err(Error::Domain(format!(
                "x3 = {x3} is not in the {} region of plates at 0 and {}",
                cfg.region.name(),
                cfg.a
            )));
        }
        Ok(Self { x3 })
    }
}

/// Diagonal of the stress-energy tensor `<0|T_{mu mu}|0>`, `mu = 0..3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TensorDiag {
    pub t00: Complex64,
    pub t11: Complex64,
    pub t22: Complex64,
    pub t33: Complex64,
}

impl TensorDiag {
    pub fn real(t00: f64, t11: f64, t22: f64, t33: f64) -> Self {
        let r = |x| Complex64::new(x, 0.0);
        Self { t00: r(t00), t11: r(t11), t22: r(t22), t33: r(t33) }
    }

    pub fn zero() -> Self {
        Self::real(0.0, 0.0, 0.0, 0.0)
    }

    pub fn as_array(&self) -> [Complex64; 4] {
        [self.t00, self.t11, self.t22, self.t33]
    }

    pub fn re(&self) -> [f64; 4] {
        self.as_array().map(|c| c.re)
    }

    /// Component `T_{mu nu}`; zero off the diagonal.
    pub fn component(&self, mu: usize, nu: usize) -> Complex64 {
        assert!(mu < 4 && nu < 4, "index out of range");
        if mu == nu {
            self.as_array()[mu]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    /// `eta^{mu nu} T_{mu nu}` with the metric [`METRIC`].
    pub fn trace(&self) -> Complex64 {
        self.as_array().iter().zip(METRIC).map(|(t, g)| t * g).sum()
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self { t00: self.t00 * k, t11: self.t11 * k, t22: self.t22 * k, t33: self.t33 * k }
    }

    pub fn max_abs(&self) -> f64 {
        self.as_array().iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// `(A^u, B^u(x3))` at complex `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizedCoefficients {
    pub a_u: Complex64,
    pub b_u: Complex64,
}

fn require_between(cfg: &PlateConfig, p: &EvalPoint) -> Result<()> {
    if cfg.region != Region::Between {
        return Err(Error::Domain("the regularized mode sum is only defined between the plates".into()));
    }
    EvalPoint::new(cfg, p.x3).map(|_| ())
}

/// `theta / 2 pi = x3 / a`, reduced to `[0, 1)`.
fn phase_fraction(ell: f64, cfg: &PlateConfig, p: &EvalPoint) -> f64 {
    (ell * p.x3 / cfg.a).rem_euclid(1.0)
}

/// `4 pi^{u-2} (u-3) a^{4-u}`.
fn mode_denominator(u: Complex64, a: f64) -> Complex64 {
    4.0 * (u - 2.0).scale(PI.ln()).exp() * (u - 3.0) * ((4.0 - u) * a.ln()).exp()
}

pub fn regularized_coefficients(u: RegulatorU, cfg: &PlateConfig, p: &EvalPoint) -> Result<RegularizedCoefficients> {
    regularized_coefficients_with(u, cfg, p, &Tolerances::default())
}

/// `A^u = zeta(u-3) / D`, `B^u = [Li_{u-3}(e^{i theta}) + Li_{u-3}(e^{-i theta})] / D`,
/// `D = 4 pi^{u-2} (u-3)(u-1) a^{4-u}`.
///
/// At real `u` the two polylogarithms are conjugate; an imaginary part of
/// their sum above 1e-12 relative is reported as [`Error::Numerical`] since
/// it can only come from a branch mistake.
pub fn regularized_coefficients_with(
    u: RegulatorU,
    cfg: &PlateConfig,
    p: &EvalPoint,
    tol: &Tolerances,
) -> Result<RegularizedCoefficients> {
    require_between(cfg, p)?;
    let u = u.0;
    for pole in [1.0, 3.0] {
        if u == Complex64::new(pole, 0.0) {
            return Err(Error::Pole(format!("the regularized tensor has a pole at u = {pole}")));
        }
    }
    let s = u - 3.0;
    let denom = mode_denominator(u, cfg.a) * (u - 1.0);
    let zeta = riemann_zeta_with(s, tol)?.value;
    let frac = phase_fraction(1.0, cfg, p);
    let z = Complex64::from_polar(1.0, 2.0 * PI * frac);
    let plus = polylog_with(s, z, tol)?.value;
    let minus = polylog_with(s, z.conj(), tol)?.value;
    let mut sum = plus + minus;
    if u.im == 0.0 {
        let scale = plus.norm() + minus.norm();
        if sum.im.abs() > 1e-12 * scale {
            return Err(Error::Numerical(format!(
                "Li_s(z) + Li_s(conj z) has imaginary part {:e} at real s = {s}",
                sum.im
            )));
        }
        sum.im = 0.0;
    }
    Ok(RegularizedCoefficients { a_u: zeta / denom, b_u: sum / denom })
}

/// Assembles `A^u diag(u-1, 1, 1, u-3) + B^u diag(-1-2(u-3)xi, c, c, 0)`
/// with `c = 1 - u/2 + 2(u-3)xi`.
pub fn assemble(u: Complex64, xi: f64, coef: &RegularizedCoefficients) -> TensorDiag {
    let RegularizedCoefficients { a_u, b_u } = *coef;
    let planar = a_u + (1.0 - 0.5 * u + 2.0 * (u - 3.0) * xi) * b_u;
    TensorDiag {
        t00: (u - 1.0) * a_u + (-1.0 - 2.0 * (u - 3.0) * xi) * b_u,
        t11: planar,
        t22: planar,
        t33: (u - 3.0) * a_u,
    }
}

pub fn regularized_vev(u: RegulatorU, cfg: &PlateConfig, p: &EvalPoint) -> Result<TensorDiag> {
    regularized_vev_with(u, cfg, p, &Tolerances::default())
}

pub fn regularized_vev_with(u: RegulatorU, cfg: &PlateConfig, p: &EvalPoint, tol: &Tolerances) -> Result<TensorDiag> {
    let coef = regularized_coefficients_with(u, cfg, p, tol)?;
    Ok(assemble(u.0, cfg.xi, &coef))
}

/// The renormalized tensor: the continued closed form evaluated at `u = 0`.
pub fn continuation_at_zero(cfg: &PlateConfig, p: &EvalPoint) -> Result<TensorDiag> {
    regularized_vev(RegulatorU::real(0.0), cfg, p)
}

/// Regulator steps used by [`continuation_richardson`].
pub const RICHARDSON_STEPS: [f64; 3] = [0.1, 0.05, 0.025];

/// Estimate of the `u = 0` value from evaluations at `u = +-h` only.
///
/// The symmetric means `(T(h) + T(-h))/2` are even in `h`; two Richardson
/// passes over the steps in [`RICHARDSON_STEPS`] remove the `h^2` and `h^4`
/// terms.
pub fn continuation_richardson(cfg: &PlateConfig, p: &EvalPoint) -> Result<TensorDiag> {
    let mut means = Vec::with_capacity(RICHARDSON_STEPS.len());
    for h in RICHARDSON_STEPS {
        let plus = regularized_vev(RegulatorU::real(h), cfg, p)?.as_array();
        let minus = regularized_vev(RegulatorU::real(-h), cfg, p)?.as_array();
        means.push([0, 1, 2, 3].map(|k| 0.5 * (plus[k] + minus[k])));
    }
    let mut factor = 4.0;
    while means.len() > 1 {
        means = means.windows(2).map(|w| [0, 1, 2, 3].map(|k| (factor * w[1][k] - w[0][k]) / (factor - 1.0))).collect();
        factor *= 4.0;
    }
    let [t00, t11, t22, t33] = means[0];
    Ok(TensorDiag { t00, t11, t22, t33 })
}

/// Truncated mode sum with per-component tail bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BruteForceSum {
    pub tensor: TensorDiag,
    /// Bounds on `|t_mu - truncated t_mu|`, in `[t00, t11, t22, t33]` order.
    pub tail_bound: [f64; 4],
    pub terms: usize,
}

/// Per-component `(plain, cosine)` weights of the `l`-summand, so that the
/// summand is `l^{3-u} (plain + cosine * cos(l theta))`.
fn summand_weights(u: Complex64, xi: f64, prefactor: Complex64) -> ([Complex64; 4], [Complex64; 4]) {
    let inv = 1.0 / (u - 1.0);
    let t00 = (prefactor, -prefactor * (2.0 + 4.0 * (u - 3.0) * xi) * inv);
    let planar = (prefactor * inv, -prefactor * inv * (1.0 + (u - 3.0) * (1.0 - 4.0 * xi)));
    let t33 = (prefactor * (u - 3.0) * inv, Complex64::new(0.0, 0.0));
    ([t00.0, planar.0, planar.0, t33.0], [t00.1, planar.1, planar.1, t33.1])
}

fn require_convergent(u: RegulatorU) -> Result<()> {
    if u.regime() != Regime::Convergent {
        return Err(Error::Domain(format!("the mode sum only converges for Re u > 4, got u = {}", u.0)));
    }
    Ok(())
}

/// The mode sum truncated at `l = L`, with the integral-comparison tail
/// bound `sum_{l > L} l^{3 - Re u} <= L^{4 - Re u} / (Re u - 4)` applied to
/// each component's weights.
pub fn mode_sum_bruteforce(u: RegulatorU, cfg: &PlateConfig, p: &EvalPoint, terms: usize) -> Result<BruteForceSum> {
    mode_sum_bruteforce_with(u, cfg, p, terms, Strategy::default(), &Unmonitored)
}

pub fn mode_sum_bruteforce_with(
    u: RegulatorU,
    cfg: &PlateConfig,
    p: &EvalPoint,
    terms: usize,
    strategy: Strategy,
    monitor: &dyn Monitor,
) -> Result<BruteForceSum> {
    require_between(cfg, p)?;
    require_convergent(u)?;
    if terms == 0 {
        return Err(Error::Domain("need at least one term".into()));
    }
    let uv = u.0;
    let exponent = 3.0 - uv;
    let [plain, cosine] = exec::sum_blocks::<2, _>(terms, strategy, monitor, |l| {
        let lf = l as f64;
        let power = (exponent * lf.ln()).exp();
        let cos = (2.0 * PI * phase_fraction(lf, cfg, p)).cos();
        [power, power * cos]
    })?;
    let prefactor = 1.0 / mode_denominator(uv, cfg.a);
    let (w_plain, w_cos) = summand_weights(uv, cfg.xi, prefactor);
    let comp = |k: usize| w_plain[k] * plain + w_cos[k] * cosine;
    let envelope = (terms as f64).powf(4.0 - uv.re) / (uv.re - 4.0);
    let bound = |k: usize| (w_plain[k].norm() + w_cos[k].norm()) * envelope;
    Ok(BruteForceSum {
        tensor: TensorDiag { t00: comp(0), t11: comp(1), t22: comp(2), t33: comp(3) },
        tail_bound: [bound(0), bound(1), bound(2), bound(3)],
        terms,
    })
}

/// Number of angular nodes in the polar-coordinate check.
const THETA_NODES: usize = 8;
/// Relative target for the radial integral of each mode.
const RADIAL_TOL: f64 = 1e-10;
const RADIAL_PANELS_PER_DECADE: usize = 4;

/// `t00` from the pre-integration form: for each `l <= L`, the integral over
/// the `(q1, q2)` plane in polar coordinates of
/// `rho [rho^2 + l^2 - (rho^2 + 4 xi l^2) cos(l theta)] / (rho^2 + l^2)^{(u+1)/2}`,
/// scaled by `1 / (8 pi^{u-1} a^{4-u})`.
///
/// The angular integral is a trapezoid rule on the integrand; the radial one
/// uses Gauss–Legendre panels in `ln rho`, truncated at `R` with the bound
/// `K R^{3 - Re u} / (Re u - 3)`.
pub fn radial_integral_oracle(u: RegulatorU, cfg: &PlateConfig, p: &EvalPoint, terms: usize) -> Result<Complex64> {
    radial_integral_oracle_with(u, cfg, p, terms, &Unmonitored)
}

pub fn radial_integral_oracle_with(
    u: RegulatorU,
    cfg: &PlateConfig,
    p: &EvalPoint,
    terms: usize,
    monitor: &dyn Monitor,
) -> Result<Complex64> {
    require_between(cfg, p)?;
    require_convergent(u)?;
    let uv = u.0;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 1..=terms {
        if monitor.is_cancelled() {
            return Err(Error::Cancelled);
        }
        let lf = l as f64;
        let cos = (2.0 * PI * phase_fraction(lf, cfg, p)).cos();
        let integrand = |q1: f64, q2: f64| {
            let rho2 = q1 * q1 + q2 * q2;
            let num = rho2 + lf * lf - (rho2 + 4.0 * cfg.xi * lf * lf) * cos;
            num * (-(0.5 * uv + 0.5) * (rho2 + lf * lf).ln()).exp()
        };
        let radial = radial_integral(uv, lf, cfg.xi, cos, |rho| angular_integral(integrand, rho))?;
        acc += radial;
        monitor.progress(l, terms);
    }
    let norm = 8.0 * ((uv - 1.0) * PI.ln()).exp() * ((4.0 - uv) * cfg.a.ln()).exp();
    Ok(acc / norm)
}

/// Trapezoid rule over `theta in [0, 2 pi)` of `f(rho cos theta, rho sin theta)`.
fn angular_integral<F: Fn(f64, f64) -> Complex64>(f: F, rho: f64) -> Complex64 {
    let h = 2.0 * PI / THETA_NODES as f64;
    (0..THETA_NODES)
        .map(|k| {
            let (s, c) = (h * k as f64).sin_cos();
            f(rho * c, rho * s)
        })
        .sum::<Complex64>()
        * h
}

/// `integral_0^inf rho g(rho) d rho`, where `g` already includes the angular factor.
fn radial_integral<G: Fn(f64) -> Complex64>(u: Complex64, ell: f64, xi: f64, cos: f64, g: G) -> Result<Complex64> {
    let rule = GaussLegendre::standard();
    let f = |rho: f64| g(rho) * rho;
    // [0, l] directly, [l, R] in ln rho
    let inner = rule.composite(0.0, ell, 4, &f);
    let sigma = u.re;
    // |integrand| <= K rho (rho^2 + l^2)^{(1 - sigma)/2} <= K rho^{2 - sigma} for rho >= l
    let k = 2.0 * PI * (1.0 + cos.abs()).max(1.0 + 4.0 * xi.abs() * cos.abs());
    let tail = |r: f64| k * r.powf(3.0 - sigma) / (sigma - 3.0);
    let mut decades = 2usize;
    loop {
        let r = ell * 10f64.powi(decades as i32);
        let outer = rule.composite(ell.ln(), r.ln(), RADIAL_PANELS_PER_DECADE * decades, |y| {
            let rho = y.exp();
            f(rho) * rho
        });
        let total = inner + outer;
        if tail(r) <= RADIAL_TOL * total.norm() {
            return Ok(total);
        }
        decades += 2;
        if decades > 40 {
            return Err(Error::Quadrature(format!(
                "radial tail bound {:e} still above tolerance at R = {r:e}",
                tail(r)
            )));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn between(a: f64, xi: f64, x3: f64) -> (PlateConfig, EvalPoint) {
        let cfg = PlateConfig::between(a, xi).unwrap();
        let p = EvalPoint::new(&cfg, x3).unwrap();
        (cfg, p)
    }

    const A1: f64 = PI * PI / 1440.0;

    #[test]
    fn regime_tag() {
        assert_eq!(RegulatorU::real(4.5).regime(), Regime::Convergent);
        assert_eq!(RegulatorU::real(4.0).regime(), Regime::Continuation);
        assert_eq!(RegulatorU::real(0.0).regime(), Regime::Continuation);
    }

    #[test]
    fn point_validation() {
        let cfg = PlateConfig::between(1.0, 0.0).unwrap();
        assert!(EvalPoint::new(&cfg, 0.0).is_err());
        assert!(EvalPoint::new(&cfg, 1.0).is_err());
        assert!(EvalPoint::new(&cfg, 1.5).is_err());
        assert!(PlateConfig::between(0.0, 0.0).is_err());
        assert!(PlateConfig::between(-1.0, 0.0).is_err());
        let left = PlateConfig::new(1.0, 0.0, Region::LeftOutside).unwrap();
        assert!(EvalPoint::new(&left, -0.1).is_ok());
        assert!(EvalPoint::new(&left, 0.1).is_err());
        assert_eq!(PlateConfig::region_of(2.0, 3.0).unwrap(), Region::RightOutside);
        assert!(PlateConfig::region_of(2.0, 2.0).is_err());
    }

    #[test]
    fn coefficients_at_zero() {
        let (cfg, p) = between(1.0, 0.0, 0.5);
        let c = regularized_coefficients(RegulatorU::real(0.0), &cfg, &p).unwrap();
        assert!((c.a_u.re - A1).abs() < 1e-15);
        assert!((c.b_u.re - PI * PI / 48.0).abs() < 1e-14);
        let (cfg, p) = between(1.0, 0.0, 0.25);
        let c = regularized_coefficients(RegulatorU::real(0.0), &cfg, &p).unwrap();
        assert!((c.b_u.re - PI * PI / 6.0).abs() < 1e-13);
        assert_eq!(c.b_u.im, 0.0);
    }

    #[test]
    fn poles_at_one_and_three() {
        let (cfg, p) = between(1.0, 0.0, 0.5);
        for u in [1.0, 3.0] {
            assert!(matches!(regularized_vev(RegulatorU::real(u), &cfg, &p), Err(Error::Pole(_))));
        }
    }

    #[test]
    fn outside_region_rejected() {
        let cfg = PlateConfig::new(1.0, 0.0, Region::LeftOutside).unwrap();
        let p = EvalPoint::new(&cfg, -1.0).unwrap();
        assert!(matches!(continuation_at_zero(&cfg, &p), Err(Error::Domain(_))));
    }

    #[test]
    fn conformal_u0_structure() {
        let (cfg, p) = between(1.0, 1.0 / 6.0, 0.3);
        let t = continuation_at_zero(&cfg, &p).unwrap().re();
        let want = [-A1, A1, A1, -3.0 * A1];
        for (g, w) in t.iter().zip(want) {
            assert!((g - w).abs() < 1e-14, "{t:?}");
        }
    }

    #[test]
    fn minimal_u0_midpoint() {
        let (cfg, p) = between(1.0, 0.0, 0.5);
        let t = continuation_at_zero(&cfg, &p).unwrap().re();
        let b = PI * PI / 48.0;
        let want = [-(A1 + b), A1 + b, A1 + b, -3.0 * A1];
        for (g, w) in t.iter().zip(want) {
            assert!((g - w).abs() < 1e-13, "{t:?}");
        }
    }

    #[test]
    fn t33_at_u5() {
        let (cfg, p) = between(1.0, 0.0, 0.5);
        let t = regularized_vev(RegulatorU::real(5.0), &cfg, &p).unwrap();
        let zeta2 = PI * PI / 6.0;
        let a5 = zeta2 / (4.0 * PI.powi(3) * 2.0 * 4.0);
        assert!((t.t33.re - 2.0 * a5).abs() < 1e-15);
    }

    #[test]
    fn richardson_recovers_zero() {
        let (cfg, p) = between(1.0, 0.0, 0.3);
        let r = continuation_richardson(&cfg, &p).unwrap();
        let z = continuation_at_zero(&cfg, &p).unwrap();
        for k in 0..4 {
            let (g, w) = (r.as_array()[k], z.as_array()[k]);
            assert!((g - w).norm() <= 1e-6 * w.norm(), "{k}: {g} vs {w}");
        }
    }

    #[test]
    fn bruteforce_domain() {
        let (cfg, p) = between(1.0, 0.0, 0.5);
        assert!(matches!(mode_sum_bruteforce(RegulatorU::real(4.0), &cfg, &p, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn bruteforce_planar_components_identical() {
        let (cfg, p) = between(2.0, 1.0 / 6.0, 1.0);
        let b = mode_sum_bruteforce(RegulatorU::real(6.0), &cfg, &p, 1000).unwrap();
        assert_eq!(b.tensor.t11, b.tensor.t22);
    }

    #[test]
    fn bruteforce_cauchy_consistency() {
        for xi in [0.0, 0.3, -2.0] {
            let (cfg, p) = between(1.0, xi, 0.5);
            let u = RegulatorU::real(5.0);
            let coarse = mode_sum_bruteforce(u, &cfg, &p, 100).unwrap();
            let fine = mode_sum_bruteforce(u, &cfg, &p, 10_000).unwrap();
            for k in 0..4 {
                let d = (coarse.tensor.as_array()[k] - fine.tensor.as_array()[k]).norm();
                assert!(d <= coarse.tail_bound[k], "xi={xi} k={k}");
            }
        }
    }

    #[test]
    fn theta_factor_is_two_pi() {
        let v = angular_integral(|_, _| Complex64::new(1.0, 0.0), 3.7);
        assert!((v.re - 2.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn single_mode_radial_integral() {
        // one mode at the midpoint, xi = 0: integral of rho [rho^2 + 1 + rho^2] / (rho^2+1)^3
        // = 1/(u-3) + 2/((u-1)(u-3)) at u = 5, times 2 pi
        let (cfg, p) = between(1.0, 0.0, 0.5);
        let u = RegulatorU::real(5.0);
        let got = radial_integral_oracle(u, &cfg, &p, 1).unwrap();
        let per_mode = 2.0 * PI * (1.0 / 2.0 + 2.0 / (4.0 * 2.0));
        let norm = 8.0 * PI.powi(4);
        assert!((got.re - per_mode / norm).abs() < 1e-10 * per_mode / norm);
    }

    #[test]
    fn cancellation_is_observed() {
        let (cfg, p) = between(1.0, 0.0, 0.5);
        let flag = crate::exec::CancelFlag::new();
        flag.cancel();
        let u = RegulatorU::real(5.0);
        let r = mode_sum_bruteforce_with(u, &cfg, &p, 100_000, Strategy::Parallel, &flag);
        assert_eq!(r, Err(Error::Cancelled));
        assert_eq!(radial_integral_oracle_with(u, &cfg, &p, 10, &flag), Err(Error::Cancelled));
    }
}
