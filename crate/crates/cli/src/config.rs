use hilbjack::scalar::parse_rat;
use hilbjack::verify::Suite;
use hilbjack::BigRat;

use crate::args::{CommonArgs, OutputFormat};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaMode {
    Symbolic,
    Rational(BigRat),
}

impl AlphaMode {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("symbolic") {
            return Ok(AlphaMode::Symbolic);
        }
        parse_rat(t).map(AlphaMode::Rational).ok_or_else(|| {
            CliError::Input(format!(
                "--alpha expects `symbolic` or a rational, got {s:?}"
            ))
        })
    }

    pub fn label(&self) -> String {
        match self {
            AlphaMode::Symbolic => "symbolic".to_string(),
            AlphaMode::Rational(a) => a.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub max_degree: usize,
    pub alpha_mode: AlphaMode,
    pub output_format: OutputFormat,
    pub suite: Option<Suite>,
    pub threads: usize,
}

impl RunConfig {
    /// `default_degree` stands in when `--n` is absent; `None` makes `--n`
    /// mandatory.
    pub fn from_args(
        common: &CommonArgs,
        suite: Option<&str>,
        default_degree: Option<usize>,
    ) -> Result<Self, CliError> {
        let max_degree = match (common.n, default_degree) {
            (Some(n), _) => n as usize,
            (None, Some(d)) => d,
            (None, None) => return Err(CliError::Input("--n is required".to_string())),
        };
        let suite = suite
            .map(|s| s.parse::<Suite>().map_err(CliError::Input))
            .transpose()?;
        Ok(RunConfig {
            max_degree,
            alpha_mode: AlphaMode::parse(&common.alpha)?,
            output_format: common.format,
            suite,
            threads: common.threads as usize,
        })
    }

    pub fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("thread pool")
    }
}
