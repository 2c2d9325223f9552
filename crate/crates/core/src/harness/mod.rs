//! Campaign drivers behind the command-line tool: single-state
//! measurement, seeded fuzzing, discriminant hunting and family tables.

mod campaign;
mod config;
mod family;
mod hunt;
mod measure;
mod output;

pub use campaign::{
    cmd_fuzz, sample_reports, CampaignSummary, CheckerStats, Violation, CAMPAIGN_SCHEMA,
};
pub use config::{
    Command, HuntMode, HuntParams, HuntStart, OutputFormat, RunConfig, MAX_QUBITS, MIN_QUBITS,
};
pub use family::{cmd_family, family_row, FamilyRow, FamilyTable, FAMILY_SCHEMA};
pub use hunt::{cmd_hunt, HuntSummary, RestartResult, HUNT_SCHEMA, MIN_HUNT_QUBITS};
pub use measure::{cmd_measure, measure_state, MeasureReport, PairMeasures, MEASURE_SCHEMA};
pub use output::{emit, write_csv, write_json, CSV_COLUMNS, CSV_SCHEMA};

/// Name of the environment variable consulted when no seed is given.
pub const SEED_ENV: &str = "QML_SEED";
