//! Settings read from a `key=value` file and overridden by flags.

use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use nilorbit::real_orbits::RealForm;

/// Environment variable naming the configuration file.
pub const CONFIG_ENV: &str = "NILORBIT_CONFIG";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("config line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Table,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            _ => Err(format!("unknown output format `{s}`; expected json, csv or table")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub max_dim: usize,
    pub seed: u64,
    pub output_format: Format,
    pub parity: u8,
    pub form: Option<RealForm>,
    pub trials: usize,
    pub bound: i64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_dim: 24,
            seed: nilorbit::oracle::OracleConfig::default().seed,
            output_format: Format::Table,
            parity: 0,
            form: None,
            trials: 32,
            bound: nilorbit::oracle::OracleConfig::default().bound,
        }
    }
}

impl Config {
    /// Parses `key=value` lines; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: String| ConfigError::Syntax { line, msg };
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got `{content}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e: &dyn std::fmt::Display| err(format!("{key}: {e}"));
            match key {
                "max_dim" => cfg.max_dim = value.parse().map_err(|e| bad(&e))?,
                "seed" => cfg.seed = value.parse().map_err(|e| bad(&e))?,
                "output_format" => cfg.output_format = value.parse().map_err(|e| bad(&e))?,
                "parity" => cfg.parity = parse_parity(value).map_err(|e| bad(&e))?,
                "form" => cfg.form = Some(value.parse().map_err(|e| bad(&e))?),
                "trials" => cfg.trials = value.parse().map_err(|e| bad(&e))?,
                "bound" => {
                    cfg.bound = value.parse().map_err(|e| bad(&e))?;
                    if cfg.bound <= 0 {
                        return Err(err("bound must be positive".into()));
                    }
                }
                _ => return Err(err(format!("unknown key `{key}`"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Config::parse(&text)
    }
}

pub fn parse_parity(s: &str) -> Result<u8, String> {
    match s.trim() {
        "0" => Ok(0),
        "1" => Ok(1),
        other => Err(format!("parity must be 0 or 1, got `{other}`")),
    }
}
