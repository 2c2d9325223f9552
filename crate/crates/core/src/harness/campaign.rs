use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::config::RunConfig;
use crate::error::Result;
use crate::inequalities::{Checker, InequalityReport, Verdict};
use crate::qlinalg::{haar_random_pure_with, random_mixed_two_qubit, stream_rng, PureState};

pub const CAMPAIGN_SCHEMA: &str = "monogamy.campaign/v1";

/// Per-checker tallies. Each sample contributes exactly one verdict: that
/// of its worst instance, so the counts sum to the sample count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckerStats {
    pub name: String,
    pub holds: u64,
    pub saturated: u64,
    pub violated: u64,
    pub min_slack: f64,
    pub max_slack: f64,
    pub worst_sample: u64,
    /// The instance with the smallest signed margin over the campaign.
    pub worst: InequalityReport,
}

impl CheckerStats {
    fn single(sample: u64, report: InequalityReport) -> Self {
        let mut s = Self {
            name: report.name.clone(),
            holds: 0,
            saturated: 0,
            violated: 0,
            min_slack: report.slack,
            max_slack: report.slack,
            worst_sample: sample,
            worst: report,
        };
        match s.worst.verdict {
            Verdict::Holds => s.holds = 1,
            Verdict::Saturated => s.saturated = 1,
            Verdict::Violated => s.violated = 1,
        }
        s
    }

    pub fn total(&self) -> u64 {
        self.holds + self.saturated + self.violated
    }

    fn merge(&mut self, other: Self) {
        self.holds += other.holds;
        self.saturated += other.saturated;
        self.violated += other.violated;
        self.min_slack = self.min_slack.min(other.min_slack);
        self.max_slack = self.max_slack.max(other.max_slack);
        let key = |s: &Self| (s.worst.signed_margin(), s.worst_sample);
        let (a, b) = (key(self), key(&other));
        if b.0.total_cmp(&a.0).then(b.1.cmp(&a.1)).is_lt() {
            self.worst = other.worst;
            self.worst_sample = other.worst_sample;
        }
    }
}

/// A violated instance together with the state that produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub sample: u64,
    pub report: InequalityReport,
    pub amplitudes: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub schema: &'static str,
    pub n_qubits: usize,
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub checkers: Vec<CheckerStats>,
    pub violations: Vec<Violation>,
    /// Not serialized, so that repeated runs give identical documents.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CampaignSummary {
    pub fn any_violation(&self) -> bool {
        self.checkers.iter().any(|c| c.violated > 0)
    }

    pub fn checker(&self, name: &str) -> Option<&CheckerStats> {
        self.checkers.iter().find(|c| c.name == name)
    }
}

#[derive(Default)]
struct Partial {
    stats: BTreeMap<String, CheckerStats>,
    violations: Vec<Violation>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        for (name, s) in other.stats {
            match self.stats.get_mut(&name) {
                Some(mine) => mine.merge(s),
                None => {
                    self.stats.insert(name, s);
                }
            }
        }
        self.violations.extend(other.violations);
        self
    }
}

fn collapse(sample: u64, psi: &PureState, reports: Vec<InequalityReport>) -> Partial {
    let mut p = Partial::default();
    for r in reports {
        if r.is_violated() {
            p.violations.push(Violation {
                sample,
                report: r.clone(),
                amplitudes: psi.to_file().amplitudes,
            });
        }
        let s = CheckerStats::single(sample, r);
        match p.stats.get_mut(&s.name) {
            // within one sample only the worst instance counts
            Some(mine) => {
                if s.worst.signed_margin() < mine.worst.signed_margin() {
                    let keep = (
                        mine.min_slack.min(s.min_slack),
                        mine.max_slack.max(s.max_slack),
                    );
                    *mine = s;
                    (mine.min_slack, mine.max_slack) = keep;
                } else {
                    mine.min_slack = mine.min_slack.min(s.min_slack);
                    mine.max_slack = mine.max_slack.max(s.max_slack);
                }
            }
            None => {
                p.stats.insert(s.name.clone(), s);
            }
        }
    }
    p
}

/// Reports for sample `index`: every pure-state relation on a Haar state,
/// plus the two-qubit relations on a Hilbert-Schmidt mixed state (named
/// with a `.mixed` suffix).
pub fn sample_reports(
    checker: &Checker,
    n_qubits: usize,
    seed: u64,
    index: u64,
) -> Result<(PureState, Vec<InequalityReport>)> {
    let mut rng = stream_rng(seed, index);
    let psi = haar_random_pure_with(n_qubits, &mut rng)?;
    let mut reports = checker.evaluate_all(&psi)?;
    let rho = random_mixed_two_qubit(&mut rng);
    for mut r in [checker.lemma1(&rho)?, checker.claim6(&rho)?] {
        r.name.push_str(".mixed");
        reports.push(r);
    }
    Ok((psi, reports))
}

/// Runs a seeded fuzzing campaign. The result does not depend on the
/// number of worker threads.
pub fn cmd_fuzz(config: &RunConfig) -> Result<CampaignSummary> {
    config.validate()?;
    let start = Instant::now();
    let checker = Checker::new(config.tolerance)?;
    let n = config.n_qubits;
    let partial = (0..config.samples as u64)
        .into_par_iter()
        .map(|i| {
            let (psi, reports) = sample_reports(&checker, n, config.seed, i)?;
            Ok::<_, crate::error::Error>(collapse(i, &psi, reports))
        })
        .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))?;
    let mut violations = partial.violations;
    violations.sort_by(|a, b| {
        a.sample
            .cmp(&b.sample)
            .then_with(|| a.report.name.cmp(&b.report.name))
            .then_with(|| a.report.qubits.cmp(&b.report.qubits))
    });
    Ok(CampaignSummary {
        schema: CAMPAIGN_SCHEMA,
        n_qubits: n,
        samples: config.samples as u64,
        seed: config.seed,
        tolerance: config.tolerance,
        checkers: partial.stats.into_values().collect(),
        violations,
        wall_time: start.elapsed(),
    })
}
