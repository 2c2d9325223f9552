use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inequalities::DEFAULT_TOLERANCE;

pub const MIN_QUBITS: usize = 2;
pub const MAX_QUBITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Measure,
    Fuzz,
    Hunt,
    Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(Error::Config(format!("unknown output format {other:?}"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Json => "json",
            Self::Csv => "csv",
        })
    }
}

/// Direction of the discriminant search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HuntMode {
    #[default]
    Min,
    Max,
}

impl FromStr for HuntMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "min" => Ok(Self::Min),
            "max" => Ok(Self::Max),
            other => Err(Error::Config(format!("unknown hunt mode {other:?}"))),
        }
    }
}

impl fmt::Display for HuntMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Min => "min",
            Self::Max => "max",
        })
    }
}

/// Where each restart begins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HuntStart {
    #[default]
    Haar,
    /// The W state, perturbed by the initial step for every restart but
    /// the first.
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HuntParams {
    pub restarts: usize,
    pub iters: usize,
    pub mode: HuntMode,
    pub start: HuntStart,
    pub initial_step: f64,
    /// Consecutive rejections before the step is halved.
    pub patience: usize,
}

impl Default for HuntParams {
    fn default() -> Self {
        Self {
            restarts: 20,
            iters: 2000,
            mode: HuntMode::Min,
            start: HuntStart::Haar,
            initial_step: 0.1,
            patience: 50,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub n_qubits: usize,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub output_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub hunt: HuntParams,
}

impl RunConfig {
    pub fn new(command: Command, n_qubits: usize) -> Self {
        Self {
            command,
            n_qubits,
            samples: 1000,
            seed: 0,
            tolerance: DEFAULT_TOLERANCE,
            output_path: None,
            output_format: OutputFormat::Json,
            hunt: HuntParams::default(),
        }
    }

    pub fn fuzz(n_qubits: usize, samples: usize, seed: u64) -> Self {
        Self {
            samples,
            seed,
            ..Self::new(Command::Fuzz, n_qubits)
        }
    }

    pub fn hunt(n_qubits: usize, params: HuntParams, seed: u64) -> Self {
        Self {
            hunt: params,
            seed,
            ..Self::new(Command::Hunt, n_qubits)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < 1 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if !(MIN_QUBITS..=MAX_QUBITS).contains(&self.n_qubits) {
            return Err(Error::Config(format!(
                "qubit count {} outside {MIN_QUBITS}..={MAX_QUBITS}",
                self.n_qubits
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::Config(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        let h = &self.hunt;
        if h.restarts < 1 || h.iters < 1 || h.patience < 1 {
            return Err(Error::Config(
                "hunt restarts, iterations and patience must be at least 1".into(),
            ));
        }
        if !(h.initial_step > 0.0 && h.initial_step.is_finite()) {
            return Err(Error::Config(format!(
                "initial step must be positive, got {}",
                h.initial_step
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RunConfig::fuzz(4, 10, 1).validate().is_ok());
        assert!(RunConfig::fuzz(4, 0, 1).validate().is_err());
        assert!(RunConfig::fuzz(1, 10, 1).validate().is_err());
        assert!(RunConfig::fuzz(11, 10, 1).validate().is_err());
        let mut c = RunConfig::fuzz(3, 10, 1);
        c.tolerance = 0.0;
        assert!(c.validate().is_err());
        c.tolerance = f64::NAN;
        assert!(c.validate().is_err());
        let mut c = RunConfig::hunt(5, HuntParams::default(), 0);
        c.hunt.initial_step = -1.0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("CSV".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert_eq!("max".parse::<HuntMode>().unwrap(), HuntMode::Max);
        assert!("xml".parse::<OutputFormat>().is_err());
        assert!("sideways".parse::<HuntMode>().is_err());
    }
}
