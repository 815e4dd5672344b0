use hilbjack::localization::EulerClass;
use hilbjack::{
    enumerate_partitions, euler_classes, jack_J, jack_P, jack_table, norm_closed_form, Basis,
    BigRat, FixedPointData, Partition, RatFun, SymFunc,
};
use rayon::prelude::*;

use crate::args::What;
use crate::config::{AlphaMode, RunConfig};
use crate::error::CliError;

/// A coefficient after the alpha mode has been applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Symbolic(RatFun),
    Rational(BigRat),
}

impl Value {
    pub fn specialize(f: &RatFun, mode: &AlphaMode) -> Result<Value, CliError> {
        Ok(match mode {
            AlphaMode::Symbolic => Value::Symbolic(f.clone()),
            AlphaMode::Rational(a) => Value::Rational(f.eval(a)?),
        })
    }
}

#[derive(Debug, Clone)]
pub struct Expansion {
    pub partition: Partition,
    pub basis: Basis,
    pub terms: Vec<(Partition, Value)>,
}

#[derive(Debug, Clone)]
pub struct Euler {
    pub coeff: Value,
    pub u_pow: i64,
}

#[derive(Debug, Clone)]
pub struct FixedPointRow {
    pub data: FixedPointData,
    pub euler_total: Euler,
    pub euler_pos: Euler,
    pub euler_nonpos: Euler,
}

#[derive(Debug, Clone)]
pub enum Table {
    Expansions { what: What, rows: Vec<Expansion> },
    Norms(Vec<(Partition, Value)>),
    FixedPoints(Vec<FixedPointRow>),
}

/// Partitions covered by a run: the filter alone if present, otherwise every
/// partition of size `1..=max_degree`.
pub fn selected_partitions(config: &RunConfig, filter: Option<&Partition>) -> Vec<Partition> {
    match filter {
        Some(la) => vec![la.clone()],
        None => (1..=config.max_degree)
            .flat_map(enumerate_partitions)
            .collect(),
    }
}

/// Computes every requested row before returning, so a pole anywhere
/// aborts the run without partial output.
pub fn cmd_compute(
    config: &RunConfig,
    what: What,
    filter: Option<&Partition>,
) -> Result<Table, CliError> {
    let partitions = selected_partitions(config, filter);
    let mode = &config.alpha_mode;
    config.pool().install(|| {
        if matches!(what, What::P | What::J) {
            let mut degrees: Vec<usize> = partitions.iter().map(Partition::size).collect();
            degrees.dedup();
            degrees.par_iter().for_each(|&d| {
                jack_table(d);
            });
        }
        Ok(match what {
            What::P | What::J => Table::Expansions {
                what,
                rows: partitions
                    .par_iter()
                    .map(|la| {
                        let f = if what == What::P {
                            jack_P(la)
                        } else {
                            jack_J(la)
                        };
                        expansion(la, &f, mode)
                    })
                    .collect::<Result<_, _>>()?,
            },
            What::Norms => Table::Norms(
                partitions
                    .par_iter()
                    .map(|la| Ok((la.clone(), Value::specialize(&norm_closed_form(la), mode)?)))
                    .collect::<Result<_, CliError>>()?,
            ),
            What::Fixedpoint => Table::FixedPoints(
                partitions
                    .par_iter()
                    .map(|la| fixed_point(la, mode))
                    .collect::<Result<_, _>>()?,
            ),
        })
    })
}

fn expansion(la: &Partition, f: &SymFunc, mode: &AlphaMode) -> Result<Expansion, CliError> {
    let terms = f
        .terms()
        .iter()
        .map(|(mu, c)| Ok((mu.clone(), Value::specialize(c, mode)?)))
        .collect::<Result<_, CliError>>()?;
    Ok(Expansion {
        partition: la.clone(),
        basis: f.basis(),
        terms,
    })
}

fn euler(e: &EulerClass, mode: &AlphaMode) -> Result<Euler, CliError> {
    Ok(Euler {
        coeff: Value::specialize(&e.coeff, mode)?,
        u_pow: e.u_pow,
    })
}

fn fixed_point(la: &Partition, mode: &AlphaMode) -> Result<FixedPointRow, CliError> {
    let data = euler_classes(la).expect("tangent weights at a fixed point are nonzero");
    Ok(FixedPointRow {
        euler_total: euler(&data.euler_total, mode)?,
        euler_pos: euler(&data.euler_pos, mode)?,
        euler_nonpos: euler(&data.euler_nonpos, mode)?,
        data,
    })
}
