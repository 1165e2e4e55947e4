use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Signed;

use crate::analysis::{default_bisection_tolerance, SOLVER_TOLERANCE};
use crate::exact::parse_rational;
use crate::family::GridBounds;

/// Problem with configuration or flags; maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s.trim() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(ConfigError(format!("unknown format {other:?} (expected csv or json)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Decimal digits used when a real value is rendered.
    pub precision: usize,
    pub solver_tolerance: f64,
    pub bisection_tolerance: BigRational,
    pub bounds: GridBounds,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            precision: 30,
            solver_tolerance: SOLVER_TOLERANCE,
            bisection_tolerance: default_bisection_tolerance(),
            bounds: GridBounds::default(),
            format: OutputFormat::default(),
            output: None,
        }
    }
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
        let mut config = Self::default();
        config.apply_text(&text)?;
        Ok(config)
    }

    /// Applies flat `key = value` lines; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<(), ConfigError> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError(format!("line {}: expected key=value", lineno + 1)))?;
            self.set(key.trim(), value.trim())
                .map_err(|e| ConfigError(format!("line {}: {e}", lineno + 1)))?;
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key {
            "precision" => self.precision = parse_num(key, value)?,
            "solver_tolerance" => self.solver_tolerance = parse_num(key, value)?,
            "bisection_tolerance" => {
                self.bisection_tolerance = parse_rational(value)
                    .map_err(|_| ConfigError(format!("{key}: not a rational: {value:?}")))?
            }
            "k_max" => self.bounds.k_max = parse_num(key, value)?,
            "m_max" => self.bounds.m_max = parse_num(key, value)?,
            "u_max" => self.bounds.u_max = parse_num(key, value)?,
            "format" => self.format = value.parse()?,
            "output" => self.output = Some(PathBuf::from(value)),
            other => return Err(ConfigError(format!("unknown key {other:?}"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.precision == 0 {
            return Err(ConfigError("precision must be at least 1".into()));
        }
        if self.solver_tolerance.is_nan() || self.solver_tolerance <= 0.0 {
            return Err(ConfigError("solver_tolerance must be positive".into()));
        }
        if !self.bisection_tolerance.is_positive() {
            return Err(ConfigError("bisection_tolerance must be positive".into()));
        }
        let b = &self.bounds;
        if b.k_max == 0 || b.m_max == 0 || b.u_max < 1 {
            return Err(ConfigError("grid bounds must be at least 1".into()));
        }
        Ok(())
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.parse().map_err(|_| ConfigError(format!("{key}: invalid value {value:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_file() {
        let mut c = RunConfig::default();
        c.apply_text("# grid\nk_max = 2\nm_max=5 # inline\n\nformat = json\nbisection_tolerance = 1/1000\n")
            .unwrap();
        assert_eq!(c.bounds, GridBounds::new(2, 5, 10));
        assert_eq!(c.format, OutputFormat::Json);
        assert_eq!(c.bisection_tolerance, parse_rational("1/1000").unwrap());
        assert!(c.validate().is_ok());
    }

    #[test]
    fn rejects_bad_lines() {
        let mut c = RunConfig::default();
        assert!(c.apply_text("precision").is_err());
        assert!(c.apply_text("colour = red").is_err());
        assert!(c.apply_text("k_max = -1").is_err());
        c.apply_text("precision = 0").unwrap();
        assert!(c.validate().is_err());
    }
}
