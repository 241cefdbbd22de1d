use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spectra::{DEFAULT_KMAX, DEFAULT_T_MAX, DEFAULT_T_MIN, DEFAULT_T_POINTS};

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("invalid value `{value}` for `{key}`")]
    InvalidValue { key: String, value: String },
    #[error("line {0}: expected key=value")]
    Syntax(usize),
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    SasakianIdentities,
    Example1S3,
    ExactIdentities,
    Berger,
    HeatTrace,
    Errata,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::SasakianIdentities,
        Suite::Example1S3,
        Suite::ExactIdentities,
        Suite::Berger,
        Suite::HeatTrace,
        Suite::Errata,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SasakianIdentities => "sasakian-identities",
            Suite::Example1S3 => "example1-s3",
            Suite::ExactIdentities => "exact-identities",
            Suite::Berger => "berger",
            Suite::HeatTrace => "heat-trace",
            Suite::Errata => "errata",
        }
    }

    /// Leading component of the ids of this suite's checks.
    pub fn id_prefix(self) -> &'static str {
        match self {
            Suite::SasakianIdentities => "sasakian",
            Suite::Example1S3 => "example1",
            Suite::ExactIdentities => "exact",
            Suite::Berger => "berger",
            Suite::HeatTrace => "heat",
            Suite::Errata => "errata",
        }
    }

    pub fn of_id(id: &str) -> Option<Suite> {
        let head = id.split('.').next()?;
        Suite::ALL.into_iter().find(|s| s.id_prefix() == head)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(ConfigError::UnknownFormat(other.to_string())),
        }
    }
}

/// Run configuration. Parsed from flat `key=value` lines; `#` starts a comment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub suites: Vec<Suite>,
    pub n_max: usize,
    pub seed: u64,
    /// Tolerance of the structure-identity residuals.
    pub tol: f64,
    /// Tolerance of the embedded-backend example values.
    pub example_tol: f64,
    pub samples: usize,
    pub kmax: usize,
    pub t_min: f64,
    pub t_max: f64,
    pub t_points: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            suites: Suite::ALL.to_vec(),
            n_max: 8,
            seed: 42,
            tol: 1e-9,
            example_tol: 1e-8,
            samples: 100,
            kmax: DEFAULT_KMAX,
            t_min: DEFAULT_T_MIN,
            t_max: DEFAULT_T_MAX,
            t_points: DEFAULT_T_POINTS,
            format: Format::Json,
            out: None,
        }
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.parse().map_err(|_| ConfigError::InvalidValue {
        key: key.to_string(),
        value: value.to_string(),
    })
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::Syntax(lineno + 1))?;
            cfg.set(key.trim(), value.trim())?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Sets one option from its textual value.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key {
            "suites" | "suite" => {
                self.suites = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(Suite::from_str)
                    .collect::<Result<_, _>>()?;
            }
            "n_max" => self.n_max = parse_value(key, value)?,
            "seed" => self.seed = parse_value(key, value)?,
            "tol" => self.tol = parse_value(key, value)?,
            "example_tol" => self.example_tol = parse_value(key, value)?,
            "samples" => self.samples = parse_value(key, value)?,
            "kmax" => self.kmax = parse_value(key, value)?,
            "t_min" => self.t_min = parse_value(key, value)?,
            "t_max" => self.t_max = parse_value(key, value)?,
            "t_points" => self.t_points = parse_value(key, value)?,
            "format" => self.format = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value)),
            other => return Err(ConfigError::UnknownKey(other.to_string())),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |key: &str, value: String| ConfigError::InvalidValue { key: key.to_string(), value };
        let positive = |x: f64| x > 0.0 && x.is_finite();
        if !(1..=16).contains(&self.n_max) {
            return Err(bad("n_max", self.n_max.to_string()));
        }
        if !positive(self.tol) {
            return Err(bad("tol", self.tol.to_string()));
        }
        if !positive(self.example_tol) {
            return Err(bad("example_tol", self.example_tol.to_string()));
        }
        if self.samples == 0 {
            return Err(bad("samples", "0".into()));
        }
        if self.kmax == 0 {
            return Err(bad("kmax", "0".into()));
        }
        if !(positive(self.t_min) && positive(self.t_max) && self.t_min < self.t_max) {
            return Err(bad("t_min", format!("{}..{}", self.t_min, self.t_max)));
        }
        if self.t_points < 4 {
            return Err(bad("t_points", self.t_points.to_string()));
        }
        Ok(())
    }

    pub fn with_suites(mut self, suites: &[Suite]) -> Config {
        self.suites = suites.to_vec();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_flat_file() {
        let cfg = Config::parse("# run\nsuites = heat-trace, berger\nn_max=3\nseed=7 # inline\ntol=1e-10\n").unwrap();
        assert_eq!(cfg.suites, vec![Suite::HeatTrace, Suite::Berger]);
        assert_eq!((cfg.n_max, cfg.seed, cfg.tol), (3, 7, 1e-10));
        assert_eq!(cfg.kmax, DEFAULT_KMAX);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Config::parse("suites=foo"), Err(ConfigError::UnknownSuite("foo".into())));
        assert_eq!(Config::parse("bogus=1"), Err(ConfigError::UnknownKey("bogus".into())));
        assert_eq!(Config::parse("justtext"), Err(ConfigError::Syntax(1)));
        assert!(matches!(Config::parse("tol=-1"), Err(ConfigError::InvalidValue { .. })));
        assert!(matches!(Config::parse("seed=x"), Err(ConfigError::InvalidValue { .. })));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(Suite::of_id(&format!("{}.x", s.id_prefix())), Some(s));
        }
    }
}
