use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{entry_info, run_entry, Context, EntryOutcome, Status, CATALOG};
use super::symbols::{build_symbols, Form, Mutation};
use crate::field::AUDIT_PRIME;
use crate::reduce::DEFAULT_AUDIT_TRIALS;

/// Which entries to run and how.
#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Entry names to run; empty means all.
    pub entries: Vec<String>,
    pub cd_only: bool,
    pub seed: u64,
    pub trials: usize,
    /// Record wall time per entry. Off by default so reports are reproducible.
    pub timings: bool,
    pub mutation: Option<Mutation>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            entries: Vec::new(),
            cd_only: false,
            seed: 0,
            trials: DEFAULT_AUDIT_TRIALS,
            timings: false,
            mutation: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub status: Status,
    pub audit_prime: u64,
    pub audit_trials: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
    pub entries: Vec<EntryOutcome>,
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    pub fn entry(&self, name: &str) -> Option<&EntryOutcome> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per entry.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let certs = e.certificates.iter().filter(|c| c.required).count();
            out.push_str(&format!(
                "{:>2} {:<24} {:<2} {}  ({} certificates, {} checks)",
                e.number,
                e.name,
                e.form.as_str(),
                e.status.as_str(),
                certs,
                e.checks.len()
            ));
            if let Some(ms) = e.wall_ms {
                out.push_str(&format!("  {ms:.1} ms"));
            }
            out.push('\n');
        }
        out.push_str(&format!("overall: {}\n", self.status.as_str()));
        out
    }

    /// Writes every certificate as `<number>-<name>/<k>.json`, plus the
    /// report itself as `report.json`.
    pub fn write_certificates(&self, dir: &Path) -> Result<usize, RunError> {
        std::fs::create_dir_all(dir)?;
        let mut written = 0;
        for e in &self.entries {
            let sub = dir.join(format!("{:02}-{}", e.number, e.name));
            std::fs::create_dir_all(&sub)?;
            for (k, c) in e.certificates.iter().enumerate() {
                std::fs::write(sub.join(format!("{k:03}.json")), c.certificate.to_json())?;
                written += 1;
            }
        }
        std::fs::write(dir.join("report.json"), self.to_json())?;
        Ok(written)
    }
}

pub fn context(opts: &RunOptions) -> Context {
    let mut cd = build_symbols(Form::Cd);
    let mut t = build_symbols(Form::T);
    if let Some(m) = opts.mutation {
        cd = cd.mutated(m);
        t = t.mutated(m);
    }
    Context {
        cd,
        t,
        seed: opts.seed,
        trials: opts.trials,
    }
}

/// Runs the selected entries in parallel. The report (without timings) is
/// independent of thread scheduling.
pub fn run_all(opts: &RunOptions) -> Result<VerificationReport, RunError> {
    for name in &opts.entries {
        if entry_info(name).is_none() {
            return Err(RunError::UnknownEntry(name.clone()));
        }
    }
    let selected: Vec<_> = CATALOG
        .iter()
        .filter(|e| opts.entries.is_empty() || opts.entries.iter().any(|n| n == e.name))
        .filter(|e| !opts.cd_only || e.form == Form::Cd)
        .collect();
    let ctx = context(opts);
    let entries: Vec<EntryOutcome> = selected
        .par_iter()
        .map(|info| {
            let start = Instant::now();
            let mut out = run_entry(info, &ctx);
            if opts.timings {
                out.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            out
        })
        .collect();
    let ok = !entries.is_empty() && entries.iter().all(|e| e.status.is_pass());
    Ok(VerificationReport {
        status: Status::from_bool(ok),
        audit_prime: AUDIT_PRIME,
        audit_trials: opts.trials,
        seed: opts.seed,
        mutation: opts.mutation,
        entries,
    })
}

/// Runs a single entry by name with default options.
pub fn check_entry(name: &str) -> Result<EntryOutcome, RunError> {
    let info = entry_info(name).ok_or_else(|| RunError::UnknownEntry(name.into()))?;
    Ok(run_entry(info, &context(&RunOptions::default())))
}
