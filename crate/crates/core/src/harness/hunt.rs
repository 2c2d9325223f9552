//! Derivative-free search over pure states for extreme discriminants.
//!
//! The Schmidt basis can jump at spectral crossings, so the objective is
//! only piecewise smooth; a random-walk search sidesteps that entirely.

use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::config::{HuntMode, HuntParams, HuntStart, RunConfig};
use crate::error::{Error, Result};
use crate::inequalities::InequalityReport;
use crate::qlinalg::{
    complex_gaussian, haar_random_pure_with, state_family, stream_rng, PureState, StateFamily,
};
use crate::schmidt::discriminant;

pub const HUNT_SCHEMA: &str = "monogamy.hunt/v1";
pub const MIN_HUNT_QUBITS: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RestartResult {
    pub restart: usize,
    pub start_value: f64,
    pub best_value: f64,
    pub accepted: usize,
    pub final_step: f64,
    /// Smallest and largest discriminant over every state evaluated,
    /// accepted or not.
    pub min_seen: f64,
    pub max_seen: f64,
    #[serde(skip)]
    best_state: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HuntSummary {
    pub schema: &'static str,
    pub n_qubits: usize,
    pub mode: HuntMode,
    pub seed: u64,
    pub params: HuntParams,
    pub restarts: Vec<RestartResult>,
    pub best_value: f64,
    pub best_fingerprint: String,
    pub best_amplitudes: Vec<[f64; 2]>,
    /// `-1 ≤ min D` over everything evaluated.
    pub floor: InequalityReport,
    /// `max D ≤ M - 2` over everything evaluated.
    pub ceiling: InequalityReport,
    /// A state with `D < 0` at this size would break the sharper
    /// mutual-entropy bound; reported as data, not as a failure.
    pub negative_found: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl HuntSummary {
    pub fn reports(&self) -> [&InequalityReport; 2] {
        [&self.floor, &self.ceiling]
    }

    pub fn any_violation(&self) -> bool {
        self.floor.is_violated() || self.ceiling.is_violated()
    }
}

fn objective(psi: &PureState) -> Result<f64> {
    Ok(discriminant(psi)?.total)
}

fn perturb<R: Rng + ?Sized>(psi: &PureState, step: f64, rng: &mut R) -> Result<PureState> {
    let amps = psi
        .amplitudes()
        .iter()
        .map(|a| a + complex_gaussian(rng) * step)
        .collect();
    PureState::normalized(psi.n_qubits(), amps)
}

fn run_restart(config: &RunConfig, restart: usize) -> Result<RestartResult> {
    let h = &config.hunt;
    let n = config.n_qubits;
    let mut rng = stream_rng(config.seed, restart as u64);
    let mut psi = match h.start {
        HuntStart::Haar => haar_random_pure_with(n, &mut rng)?,
        HuntStart::W => {
            let w = state_family(StateFamily::W, n)?;
            if restart == 0 {
                w
            } else {
                perturb(&w, h.initial_step, &mut rng)?
            }
        }
    };
    // minimize sign * D
    let sign = match h.mode {
        HuntMode::Min => 1.0,
        HuntMode::Max => -1.0,
    };
    let start_value = objective(&psi)?;
    let mut best = start_value;
    let (mut min_seen, mut max_seen) = (start_value, start_value);
    let mut step = h.initial_step;
    let mut rejections = 0;
    let mut accepted = 0;
    for _ in 0..h.iters {
        let candidate = perturb(&psi, step, &mut rng)?;
        let value = objective(&candidate)?;
        min_seen = min_seen.min(value);
        max_seen = max_seen.max(value);
        if sign * value < sign * best {
            psi = candidate;
            best = value;
            accepted += 1;
            rejections = 0;
        } else {
            rejections += 1;
            if rejections >= h.patience {
                step *= 0.5;
                rejections = 0;
            }
        }
    }
    Ok(RestartResult {
        restart,
        start_value,
        best_value: best,
        accepted,
        final_step: step,
        min_seen,
        max_seen,
        best_state: psi.to_file().amplitudes,
    })
}

/// Random-restart search for the smallest (or largest) discriminant.
pub fn cmd_hunt(config: &RunConfig) -> Result<HuntSummary> {
    if config.n_qubits < MIN_HUNT_QUBITS {
        return Err(Error::QubitCount {
            got: config.n_qubits,
            reason: "hunt requires ≥ 5 qubits",
        });
    }
    config.validate()?;
    let start = Instant::now();
    let h = config.hunt;
    let restarts = (0..h.restarts)
        .into_par_iter()
        .map(|r| run_restart(config, r))
        .collect::<Result<Vec<_>>>()?;

    let better = |a: f64, b: f64| match h.mode {
        HuntMode::Min => a < b,
        HuntMode::Max => a > b,
    };
    let mut best = &restarts[0];
    for r in &restarts[1..] {
        if better(r.best_value, best.best_value) {
            best = r;
        }
    }
    let best_state = PureState::normalized(
        config.n_qubits,
        best.best_state
            .iter()
            .map(|&[re, im]| num_complex::Complex64::new(re, im))
            .collect(),
    )?;
    let fp = best_state.fingerprint();
    let min_seen = restarts
        .iter()
        .map(|r| r.min_seen)
        .fold(f64::INFINITY, f64::min);
    let max_seen = restarts
        .iter()
        .map(|r| r.max_seen)
        .fold(f64::NEG_INFINITY, f64::max);
    let m = (config.n_qubits - 1) as f64;
    Ok(HuntSummary {
        schema: HUNT_SCHEMA,
        n_qubits: config.n_qubits,
        mode: h.mode,
        seed: config.seed,
        params: h,
        best_value: best.best_value,
        best_fingerprint: fp.clone(),
        best_amplitudes: best.best_state.clone(),
        floor: InequalityReport::at_most(
            "discriminant_floor",
            -1.0,
            min_seen,
            config.tolerance,
            &fp,
        ),
        ceiling: InequalityReport::at_most(
            "discriminant_ceiling",
            max_seen,
            m - 2.0,
            config.tolerance,
            &fp,
        ),
        negative_found: min_seen < -config.tolerance,
        restarts,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(mode: HuntMode, start: HuntStart, n: usize) -> RunConfig {
        let params = HuntParams {
            restarts: 3,
            iters: 150,
            mode,
            start,
            ..HuntParams::default()
        };
        RunConfig::hunt(n, params, 11)
    }

    #[test]
    fn rejects_small_systems() {
        let err = cmd_hunt(&quick(HuntMode::Min, HuntStart::Haar, 4)).unwrap_err();
        assert!(err.to_string().contains("hunt requires ≥ 5 qubits"));
    }

    #[test]
    fn minimization_improves_and_respects_the_floor() {
        let s = cmd_hunt(&quick(HuntMode::Min, HuntStart::Haar, 5)).unwrap();
        for r in &s.restarts {
            assert!(r.best_value <= r.start_value);
            assert!(r.min_seen <= r.best_value);
        }
        assert!(!s.any_violation());
        assert_eq!(s.restarts.len(), 3);
    }

    #[test]
    fn maximization_from_w_stays_below_ceiling() {
        let s = cmd_hunt(&quick(HuntMode::Max, HuntStart::W, 5)).unwrap();
        assert!((s.restarts[0].start_value - 2.0).abs() < 1e-12);
        assert!(s.best_value >= 2.0 - 1e-12);
        assert!(s.best_value <= 2.0 + 1e-9);
        assert!(!s.ceiling.is_violated());
    }

    #[test]
    fn deterministic() {
        let cfg = quick(HuntMode::Min, HuntStart::Haar, 5);
        let a = serde_json::to_string(&cmd_hunt(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&cmd_hunt(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
