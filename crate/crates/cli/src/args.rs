use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::format::parse_complex;
use crate::report::Format;

#[derive(Debug, Parser)]
#[command(name = "casimir", version, about = "Zeta-regularized Casimir stress-energy between Dirichlet plates")]
pub struct Cli {
    /// Evaluate serial loops on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a special function.
    #[command(subcommand)]
    Specfun(SpecfunCommand),
    /// Renormalized tensor at one point.
    Tensor(TensorArgs),
    /// Tensor profile over a grid of x3 values, as CSV or JSON.
    Profile(ProfileArgs),
    /// Compare the truncated mode sum with the closed form at Re u > 4.
    Convergence(ConvergenceArgs),
    /// Pressure on both plates.
    Pressure(PressureArgs),
    /// Re-read a JSON profile report and write it out again.
    Inspect(InspectArgs),
}

fn complex(s: &str) -> Result<Complex64, String> {
    parse_complex(s)
}

#[derive(Debug, Subcommand)]
pub enum SpecfunCommand {
    /// Polylogarithm Li_s(z), |z| <= 1.
    Polylog {
        #[arg(allow_hyphen_values = true, value_parser = complex)]
        s: Complex64,
        #[arg(allow_hyphen_values = true, value_parser = complex)]
        z: Complex64,
    },
    /// Riemann zeta.
    Zeta {
        #[arg(allow_hyphen_values = true, value_parser = complex)]
        s: Complex64,
    },
    /// Hurwitz zeta zeta(s, q), Re s > 1, q > 0.
    Hurwitz {
        #[arg(allow_hyphen_values = true, value_parser = complex)]
        s: Complex64,
        #[arg(allow_hyphen_values = true)]
        q: f64,
    },
    /// Polygamma psi^(m)(q), m >= 1, q > 0.
    Polygamma {
        m: u32,
        #[arg(allow_hyphen_values = true)]
        q: f64,
    },
    /// Gamma function.
    Gamma {
        #[arg(allow_hyphen_values = true, value_parser = complex)]
        s: Complex64,
    },
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub xi: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub x3: f64,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    /// `key = value` file with defaults for any of the flags below.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<f64>,
    #[arg(long)]
    pub n_points: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub x3_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x3_max: Option<f64>,
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub include_outside: Option<bool>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvergenceArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = complex)]
    pub u: Complex64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub xi: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub x3: f64,
    /// Comma-separated truncation orders, e.g. `100,1e3,1e4`.
    #[arg(long = "L-list", value_delimiter = ',', value_parser = truncation, required = true)]
    pub l_list: Vec<usize>,
}

fn truncation(s: &str) -> Result<usize, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v >= 1.0 && v.fract() == 0.0 && v <= 1e12 {
        Ok(v as usize)
    } else {
        Err(format!("`{s}` is not a positive integer"))
    }
}

#[derive(Debug, Args)]
pub struct PressureArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: f64,
}

#[derive(Debug, Args)]
pub struct InspectArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
