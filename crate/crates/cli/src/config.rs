//! `key = value` configuration files mirroring the command-line flags.
//!
//! Blank lines and lines starting with `#` are ignored. Keys may be written
//! with `-` or `_` (`x3-min` and `x3_min` are the same key).

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{CliError, Result};

#[derive(Debug, Default, Clone, PartialEq)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
    source: String,
}

fn normalize(key: &str) -> String {
    key.trim().trim_start_matches("--").replace('-', "_")
}

impl ConfigFile {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(CliError::Validation(format!("{source}:{}: expected `key = value`", n + 1)));
            };
            let key = normalize(k);
            if entries.insert(key.clone(), v.trim().to_string()).is_some() {
                return Err(CliError::Validation(format!("{source}:{}: duplicate key `{key}`", n + 1)));
            }
        }
        Ok(Self { entries, source: source.to_string() })
    }

    /// Rejects keys outside `allowed`.
    pub fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.entries.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(CliError::Validation(format!("{}: unknown key `{k}`", self.source))),
            None => Ok(()),
        }
    }

    pub fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.entries
            .get(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|_| CliError::Validation(format!("{}: invalid value `{v}` for `{key}`", self.source)))
            })
            .transpose()
    }
}
