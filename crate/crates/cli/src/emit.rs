//! Renders computed tables and verification outcomes. Every renderer walks
//! rows in canonical partition order and serializes structs with fixed
//! field order, so identical runs produce byte-identical output.

use hilbjack::json::RatFunJson;
use hilbjack::verify::SuiteReport;
use hilbjack::{AlphaPoly, Basis, BigRat, Partition, RatFun};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::args::OutputFormat;
use crate::compute::{Euler, FixedPointRow, Table, Value};
use crate::config::AlphaMode;
use crate::verify::{Count, VerifyOutcome};

pub fn render_table(table: &Table, alpha: &AlphaMode, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json_table(table, alpha),
        OutputFormat::Csv => csv_table(table),
        OutputFormat::Latex => latex_table(table),
    }
}

pub fn render_verify(outcome: &VerifyOutcome, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json_verify(outcome),
        OutputFormat::Csv => csv_verify(outcome),
        OutputFormat::Latex => latex_verify(outcome),
    }
}

/// Partition in the command-line syntax: `3,1`, or empty.
fn cli_partition(la: &Partition) -> String {
    la.parts()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Symbolic(f) => f.render("a"),
        Value::Rational(q) => q.to_string(),
    }
}

// ---------------------------------------------------------------- JSON

#[derive(Serialize)]
#[serde(untagged)]
enum ValueJson {
    Symbolic(RatFunJson),
    Rational(String),
}

impl From<&Value> for ValueJson {
    fn from(v: &Value) -> Self {
        match v {
            Value::Symbolic(f) => ValueJson::Symbolic(f.into()),
            Value::Rational(q) => ValueJson::Rational(q.to_string()),
        }
    }
}

#[derive(Serialize)]
struct TermJson {
    partition: Vec<usize>,
    coeff: ValueJson,
}

#[derive(Serialize)]
struct SymFuncJson {
    basis: &'static str,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct ExpansionJson {
    partition: Vec<usize>,
    value: SymFuncJson,
}

#[derive(Serialize)]
struct NormJson {
    partition: Vec<usize>,
    norm: ValueJson,
}

#[derive(Serialize)]
struct CharTermJson {
    p: i64,
    q: i64,
    mult: u32,
}

#[derive(Serialize)]
struct EulerJson {
    coeff: ValueJson,
    u_pow: i64,
}

impl From<&Euler> for EulerJson {
    fn from(e: &Euler) -> Self {
        EulerJson {
            coeff: (&e.coeff).into(),
            u_pow: e.u_pow,
        }
    }
}

#[derive(Serialize)]
struct FixedPointJson {
    partition: Vec<usize>,
    #[serde(rename = "char")]
    character: Vec<CharTermJson>,
    euler_total: EulerJson,
    euler_pos: EulerJson,
    euler_nonpos: EulerJson,
}

impl From<&FixedPointRow> for FixedPointJson {
    fn from(r: &FixedPointRow) -> Self {
        FixedPointJson {
            partition: r.data.partition.parts().to_vec(),
            character: r
                .data
                .character
                .terms()
                .iter()
                .map(|(&(p, q), &mult)| CharTermJson { p, q, mult })
                .collect(),
            euler_total: (&r.euler_total).into(),
            euler_pos: (&r.euler_pos).into(),
            euler_nonpos: (&r.euler_nonpos).into(),
        }
    }
}

#[derive(Serialize)]
struct TableJson<R> {
    what: &'static str,
    alpha: String,
    rows: Vec<R>,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn json_table(table: &Table, alpha: &AlphaMode) -> String {
    let alpha = alpha.label();
    match table {
        Table::Expansions { what, rows } => to_json(&TableJson {
            what: what.name(),
            alpha,
            rows: rows
                .iter()
                .map(|r| ExpansionJson {
                    partition: r.partition.parts().to_vec(),
                    value: SymFuncJson {
                        basis: r.basis.symbol(),
                        terms: r
                            .terms
                            .iter()
                            .map(|(mu, c)| TermJson {
                                partition: mu.parts().to_vec(),
                                coeff: c.into(),
                            })
                            .collect(),
                    },
                })
                .collect(),
        }),
        Table::Norms(rows) => to_json(&TableJson {
            what: "norms",
            alpha,
            rows: rows
                .iter()
                .map(|(la, v)| NormJson {
                    partition: la.parts().to_vec(),
                    norm: v.into(),
                })
                .collect(),
        }),
        Table::FixedPoints(rows) => to_json(&TableJson {
            what: "fixedpoint",
            alpha,
            rows: rows.iter().map(FixedPointJson::from).collect(),
        }),
    }
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    cases: usize,
    passed: bool,
    counterexample: Option<&'a str>,
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    suite: &'static str,
    passed: bool,
    checks: Vec<CheckJson<'a>>,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    n: usize,
    passed: bool,
    suites: Vec<SuiteJson<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    goettsche_series: Option<&'a [Count]>,
}

fn suite_json(r: &SuiteReport) -> SuiteJson<'_> {
    SuiteJson {
        suite: r.suite.name(),
        passed: r.passed(),
        checks: r
            .checks
            .iter()
            .map(|c| CheckJson {
                name: &c.name,
                cases: c.cases,
                passed: c.passed(),
                counterexample: c.counterexample.as_deref(),
            })
            .collect(),
    }
}

fn json_verify(o: &VerifyOutcome) -> String {
    to_json(&VerifyJson {
        n: o.n,
        passed: o.passed(),
        suites: o.reports.iter().map(suite_json).collect(),
        goettsche_series: o.series.as_deref(),
    })
}

// ---------------------------------------------------------------- CSV

fn write_csv<const N: usize>(
    header: [&str; N],
    rows: impl IntoIterator<Item = [String; N]>,
) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn text_character(r: &FixedPointRow) -> String {
    r.data
        .character
        .terms()
        .iter()
        .map(|(&(p, q), &m)| {
            let mono = format!("T1^{p}*T2^{q}");
            if m == 1 {
                mono
            } else {
                format!("{m}*{mono}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn csv_table(table: &Table) -> String {
    match table {
        Table::Expansions { rows, .. } => write_csv(
            ["partition", "basis", "term", "coeff"],
            rows.iter().flat_map(|r| {
                r.terms.iter().map(|(mu, c)| {
                    [
                        cli_partition(&r.partition),
                        r.basis.symbol().to_string(),
                        cli_partition(mu),
                        text_value(c),
                    ]
                })
            }),
        ),
        Table::Norms(rows) => write_csv(
            ["partition", "norm"],
            rows.iter()
                .map(|(la, v)| [cli_partition(la), text_value(v)]),
        ),
        Table::FixedPoints(rows) => write_csv(
            [
                "partition",
                "char",
                "euler_total",
                "euler_total_u",
                "euler_pos",
                "euler_pos_u",
                "euler_nonpos",
                "euler_nonpos_u",
            ],
            rows.iter().map(|r| {
                [
                    cli_partition(&r.data.partition),
                    text_character(r),
                    text_value(&r.euler_total.coeff),
                    r.euler_total.u_pow.to_string(),
                    text_value(&r.euler_pos.coeff),
                    r.euler_pos.u_pow.to_string(),
                    text_value(&r.euler_nonpos.coeff),
                    r.euler_nonpos.u_pow.to_string(),
                ]
            }),
        ),
    }
}

fn csv_verify(o: &VerifyOutcome) -> String {
    write_csv(
        ["suite", "check", "cases", "status", "counterexample"],
        o.reports.iter().flat_map(|r| {
            r.checks.iter().map(|c| {
                [
                    r.suite.name().to_string(),
                    c.name.clone(),
                    c.cases.to_string(),
                    if c.passed() { "PASS" } else { "FAIL" }.to_string(),
                    c.counterexample.clone().unwrap_or_default(),
                ]
            })
        }),
    )
}

// ---------------------------------------------------------------- LaTeX

fn latex_rat(q: &BigRat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", q.numer().magnitude(), q.denom())
    }
}

/// Highest degree first, e.g. `2\alpha^{2} + \frac{1}{2}\alpha - 3`.
pub fn latex_poly(p: &AlphaPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        let mono = match k {
            0 => String::new(),
            1 => "\\alpha".to_string(),
            _ => format!("\\alpha^{{{k}}}"),
        };
        if mono.is_empty() || !mag.is_one() {
            out.push_str(&latex_rat(&mag));
        }
        out.push_str(&mono);
    }
    out
}

/// `\frac{num}{den}` in α, or the bare numerator when the denominator is 1.
pub fn latex_ratfun(f: &RatFun) -> String {
    if f.denom().is_one() {
        latex_poly(f.numer())
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            latex_poly(f.numer()),
            latex_poly(f.denom())
        )
    }
}

fn latex_value(v: &Value) -> String {
    match v {
        Value::Symbolic(f) => latex_ratfun(f),
        Value::Rational(q) => latex_rat(q),
    }
}

fn latex_partition(la: &Partition) -> String {
    if la.is_empty() {
        "\\emptyset".to_string()
    } else {
        la.to_string()
    }
}

fn tabular(columns: &str, header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = format!("\\begin{{tabular}}{{{columns}}}\n");
    out.push_str(&header.join(" & "));
    out.push_str(" \\\\\n\\hline\n");
    for r in rows {
        out.push_str(&r.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn math(s: impl AsRef<str>) -> String {
    format!("${}$", s.as_ref())
}

fn latex_table(table: &Table) -> String {
    match table {
        Table::Expansions { rows, .. } => {
            // one tabular per degree, rows λ, columns μ
            let mut blocks = Vec::new();
            let mut start = 0;
            while start < rows.len() {
                let d = rows[start].partition.size();
                let end = start
                    + rows[start..]
                        .iter()
                        .take_while(|r| r.partition.size() == d)
                        .count();
                blocks.push(latex_expansion_block(&rows[start..end]));
                start = end;
            }
            blocks.join("\n")
        }
        Table::Norms(rows) => tabular(
            "l|l",
            &[
                math("\\lambda"),
                math("\\langle P_\\lambda, P_\\lambda \\rangle"),
            ],
            &rows
                .iter()
                .map(|(la, v)| vec![math(latex_partition(la)), math(latex_value(v))])
                .collect::<Vec<_>>(),
        ),
        Table::FixedPoints(rows) => {
            let euler = |e: &Euler| {
                math(format!(
                    "\\left({}\\right) u^{{{}}}",
                    latex_value(&e.coeff),
                    e.u_pow
                ))
            };
            tabular(
                "l|l|l|l|l",
                &[
                    math("\\lambda"),
                    math("T_\\lambda"),
                    math("e(T)"),
                    math("e(N^{>0})"),
                    math("e(N^{\\le 0})"),
                ],
                &rows
                    .iter()
                    .map(|r| {
                        let ch = r
                            .data
                            .character
                            .terms()
                            .iter()
                            .map(|(&(p, q), &m)| {
                                let mono = format!("T_1^{{{p}}} T_2^{{{q}}}");
                                if m == 1 {
                                    mono
                                } else {
                                    format!("{m} {mono}")
                                }
                            })
                            .collect::<Vec<_>>()
                            .join(" + ");
                        vec![
                            math(latex_partition(&r.data.partition)),
                            math(if ch.is_empty() { "0".to_string() } else { ch }),
                            euler(&r.euler_total),
                            euler(&r.euler_pos),
                            euler(&r.euler_nonpos),
                        ]
                    })
                    .collect::<Vec<_>>(),
            )
        }
    }
}

fn latex_expansion_block(rows: &[crate::compute::Expansion]) -> String {
    let basis = rows[0].basis;
    let letter = match basis {
        Basis::Monomial => "m",
        Basis::PowerSum => "p",
        Basis::AugmentedMonomial => "\\tilde m",
    };
    let mut columns: Vec<Partition> = hilbjack::enumerate_partitions(rows[0].partition.size());
    if rows.len() == 1 {
        columns.retain(|mu| rows[0].terms.iter().any(|(nu, _)| nu == mu));
    }
    let mut header = vec![math("\\lambda")];
    header.extend(
        columns
            .iter()
            .map(|mu| math(format!("{letter}_{{{}}}", latex_partition(mu)))),
    );
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut line = vec![math(latex_partition(&r.partition))];
            line.extend(columns.iter().map(|mu| {
                r.terms
                    .iter()
                    .find(|(nu, _)| nu == mu)
                    .map_or_else(|| math("0"), |(_, c)| math(latex_value(c)))
            }));
            line
        })
        .collect();
    tabular(&format!("l|{}", "l".repeat(columns.len())), &header, &body)
}

fn latex_verify(o: &VerifyOutcome) -> String {
    let body: Vec<Vec<String>> = o
        .reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(|c| {
                vec![
                    r.suite.name().to_string(),
                    c.name.clone(),
                    c.cases.to_string(),
                    if c.passed() { "PASS" } else { "FAIL" }.to_string(),
                ]
            })
        })
        .collect();
    tabular(
        "l|l|r|l",
        &[
            "suite".into(),
            "check".into(),
            "cases".into(),
            "status".into(),
        ],
        &body,
    )
}
