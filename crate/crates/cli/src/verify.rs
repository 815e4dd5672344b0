use hilbjack::verify::{run_suite, Suite, SuiteReport};
use hilbjack::{goettsche_dim, jack_table};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::RunConfig;

/// A coefficient of the Göttsche series; counts past `u64` are kept as
/// decimal strings.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Count {
    Small(u64),
    Big(String),
}

/// Suite reports in the order requested, plus the Göttsche series when
/// that suite ran.
#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub n: usize,
    pub reports: Vec<SuiteReport>,
    pub series: Option<Vec<Count>>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(SuiteReport::passed)
    }

    pub fn failures(&self) -> usize {
        self.reports
            .iter()
            .flat_map(|r| &r.checks)
            .filter(|c| !c.passed())
            .count()
    }
}

pub fn cmd_verify(config: &RunConfig) -> VerifyOutcome {
    let suites: Vec<Suite> = match config.suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let n = config.max_degree;
    let reports = config.pool().install(|| {
        if suites.iter().any(|s| s.needs_jack_tables()) {
            (0..=n).into_par_iter().for_each(|d| {
                jack_table(d);
            });
        }
        suites.par_iter().map(|&s| run_suite(s, n)).collect()
    });
    let series = suites.contains(&Suite::Goettsche).then(|| {
        goettsche_dim(n)
            .iter()
            .map(|d| u64::try_from(d).map_or_else(|_| Count::Big(d.to_string()), Count::Small))
            .collect()
    });
    VerifyOutcome { n, reports, series }
}
