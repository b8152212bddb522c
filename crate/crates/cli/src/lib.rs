//! Library half of the `casimir` command-line tool.
//!
//! The binary is a thin wrapper around [`commands::run`], which writes
//! everything destined for stdout into a caller-supplied writer.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod report;

use casimir_core::specfun::Tolerances;

pub use error::{CliError, Result};

/// Environment variable selecting the default tolerance profile.
pub const TOLERANCE_ENV: &str = "CASIMIR_TOLERANCE_PROFILE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ToleranceProfile {
    Fast,
    #[default]
    Strict,
}

impl ToleranceProfile {
    pub fn parse(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "fast" => Ok(Self::Fast),
            "strict" => Ok(Self::Strict),
            other => Err(CliError::Validation(format!("{TOLERANCE_ENV} must be `fast` or `strict`, got `{other}`"))),
        }
    }

    /// Reads [`TOLERANCE_ENV`]; unset or empty means strict.
    pub fn from_env() -> Result<Self> {
        match std::env::var(TOLERANCE_ENV) {
            Ok(v) if !v.trim().is_empty() => Self::parse(&v),
            _ => Ok(Self::Strict),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Fast => "fast",
            Self::Strict => "strict",
        }
    }

    pub fn tolerances(self) -> Tolerances {
        match self {
            Self::Fast => Tolerances::FAST,
            Self::Strict => Tolerances::STRICT,
        }
    }
}
