//! Profile requests and the CSV / JSON reports they produce.

use casimir_core::casimir::{milton_b, renormalized_coefficients, renormalized_tensor};
use casimir_core::exec::{map_ordered, Strategy};
use casimir_core::modesum::{PlateConfig, Region};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::format;
use crate::ToleranceProfile;

pub const CSV_HEADER: &str = "x3,region,t00,t11,t22,t33,B,milton_B";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        <Self as ValueEnum>::from_str(s, true)
    }
}

/// A grid of `n_points` equally spaced `x3` values from `x3_min` to `x3_max`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileRequest {
    pub a: f64,
    pub xi: f64,
    pub n_points: usize,
    pub x3_min: f64,
    pub x3_max: f64,
    pub include_outside: bool,
    pub format: Format,
}

impl ProfileRequest {
    pub fn grid(&self) -> Vec<f64> {
        if self.n_points == 1 {
            return vec![self.x3_min];
        }
        let step = (self.x3_max - self.x3_min) / (self.n_points - 1) as f64;
        (0..self.n_points)
            .map(|i| if i + 1 == self.n_points { self.x3_max } else { self.x3_min + step * i as f64 })
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(CliError::Validation(m));
        if !(self.a > 0.0 && self.a.is_finite()) {
            return fail(format!("a must be positive, got {}", self.a));
        }
        if !self.xi.is_finite() {
            return fail(format!("xi must be finite, got {}", self.xi));
        }
        if self.n_points == 0 {
            return fail("n_points must be at least 1".into());
        }
        if !self.x3_min.is_finite() || !self.x3_max.is_finite() || self.x3_min >= self.x3_max {
            return fail(format!("need x3_min < x3_max, got {} and {}", self.x3_min, self.x3_max));
        }
        for x3 in self.grid() {
            if x3 == 0.0 || x3 == self.a {
                return fail(format!("grid point x3 = {x3} lies on a plate"));
            }
            if !self.include_outside && !(x3 > 0.0 && x3 < self.a) {
                return fail(format!("grid point x3 = {x3} is outside the plates; pass --include-outside"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub x3: f64,
    pub region: String,
    pub t00: f64,
    pub t11: f64,
    pub t22: f64,
    pub t33: f64,
    #[serde(rename = "B")]
    pub b: Option<f64>,
    #[serde(rename = "milton_B")]
    pub milton_b: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub series: f64,
    pub quadrature: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub tolerance_profile: String,
    pub tolerances: Tolerances,
    pub inputs: ProfileRequest,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub meta: Meta,
    pub rows: Vec<Row>,
}

fn row(req: &ProfileRequest, x3: f64) -> Result<Row> {
    let (cfg, p) = PlateConfig::locate(req.a, req.xi, x3)?;
    let t = renormalized_tensor(&cfg, &p)?;
    let (b, m) = if cfg.region == Region::Between {
        // too close to a plate for the Hurwitz form: left undefined
        (Some(renormalized_coefficients(&cfg, &p)?.b), milton_b(&cfg, &p).ok())
    } else {
        (None, None)
    };
    let [t00, t11, t22, t33] = t.re();
    Ok(Row { x3, region: cfg.region.name().to_string(), t00, t11, t22, t33, b, milton_b: m })
}

pub fn run_profile(req: &ProfileRequest, profile: ToleranceProfile, strategy: Strategy) -> Result<RunReport> {
    req.validate()?;
    let rows = map_ordered(&req.grid(), strategy, |&x3| row(req, x3)).into_iter().collect::<Result<Vec<_>>>()?;
    let tol = profile.tolerances();
    Ok(RunReport {
        meta: Meta {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            tolerance_profile: profile.name().to_string(),
            tolerances: Tolerances { series: tol.series, quadrature: tol.quadrature },
            inputs: req.clone(),
        },
        rows,
    })
}

impl RunReport {
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<f64>| v.map(format::real).unwrap_or_default();
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let cols = [
                format::real(r.x3),
                r.region.clone(),
                format::real(r.t00),
                format::real(r.t11),
                format::real(r.t22),
                format::real(r.t33),
                opt(r.b),
                opt(r.milton_b),
            ];
            out.push_str(&cols.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are finite");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let report: RunReport = serde_json::from_str(text).map_err(|e| CliError::Report(e.to_string()))?;
        if report.rows.windows(2).any(|w| w[0].x3 >= w[1].x3) {
            return Err(CliError::Report("rows are not sorted by x3".into()));
        }
        Ok(report)
    }
}
