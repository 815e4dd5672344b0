//! JSON encodings for the exchanged types.
//!
//! * RatFun: `{"num": [[n,d],...], "den": [[n,d],...]}`, degree-ascending
//!   coefficient lists of decimal-string numerator/denominator pairs.
//! * Partition: array of parts, e.g. `[3,1]`.
//! * SymFunc: `{"basis":"m","terms":[{"partition":[2,1],"coeff":<RatFun>}]}`
//!   with terms in canonical partition order.
//! * FixedPointData: `{"partition":[2],"char":[{"p":1,"q":-1,"mult":1},...],
//!   "euler_total":{"coeff":<RatFun>,"u_pow":4},"euler_pos":...,"euler_nonpos":...}`.
//!
//! Decoding accepts integers as JSON numbers as well as strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::localization::{EulerClass, FixedPointData};
use crate::partition::Partition;
use crate::scalar::{AlphaPoly, BigRat, RatFun};
use crate::symfunc::{Basis, SymFunc};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid value: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum IntText {
    Text(String),
    Int(i64),
}

impl IntText {
    fn parse(&self) -> Result<BigInt, JsonError> {
        match self {
            IntText::Int(i) => Ok(BigInt::from(*i)),
            IntText::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| JsonError::Invalid(format!("not an integer: {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatFunJson {
    num: Vec<[IntText; 2]>,
    den: Vec<[IntText; 2]>,
}

fn poly_to_json(p: &AlphaPoly) -> Vec<[IntText; 2]> {
    p.coeffs()
        .iter()
        .map(|c| {
            [
                IntText::Text(c.numer().to_string()),
                IntText::Text(c.denom().to_string()),
            ]
        })
        .collect()
}

fn poly_from_json(v: &[[IntText; 2]]) -> Result<AlphaPoly, JsonError> {
    let coeffs = v
        .iter()
        .map(|[n, d]| {
            let (n, d) = (n.parse()?, d.parse()?);
            if num_traits::Zero::is_zero(&d) {
                return Err(JsonError::Invalid("zero denominator in coefficient".into()));
            }
            Ok(BigRat::new(n, d))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlphaPoly::from_coeffs(coeffs))
}

impl From<&RatFun> for RatFunJson {
    fn from(f: &RatFun) -> Self {
        RatFunJson {
            num: poly_to_json(f.numer()),
            den: poly_to_json(f.denom()),
        }
    }
}

impl TryFrom<&RatFunJson> for RatFun {
    type Error = JsonError;
    fn try_from(j: &RatFunJson) -> Result<Self, JsonError> {
        RatFun::new(poly_from_json(&j.num)?, poly_from_json(&j.den)?)
            .map_err(|e| JsonError::Invalid(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    partition: Vec<usize>,
    coeff: RatFunJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymFuncJson {
    basis: String,
    terms: Vec<TermJson>,
}

impl From<&SymFunc> for SymFuncJson {
    fn from(f: &SymFunc) -> Self {
        SymFuncJson {
            basis: f.basis().symbol().to_string(),
            terms: f
                .terms()
                .iter()
                .map(|(la, c)| TermJson {
                    partition: la.parts().to_vec(),
                    coeff: c.into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&SymFuncJson> for SymFunc {
    type Error = JsonError;
    fn try_from(j: &SymFuncJson) -> Result<Self, JsonError> {
        let basis = Basis::from_symbol(&j.basis)
            .ok_or_else(|| JsonError::Invalid(format!("unknown basis {:?}", j.basis)))?;
        let terms = j
            .terms
            .iter()
            .map(|t| {
                let la = Partition::new(t.partition.clone())
                    .map_err(|e| JsonError::Invalid(e.to_string()))?;
                Ok((la, RatFun::try_from(&t.coeff)?))
            })
            .collect::<Result<Vec<_>, JsonError>>()?;
        Ok(SymFunc::from_terms(basis, terms))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CharTermJson {
    p: i64,
    q: i64,
    mult: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EulerJson {
    coeff: RatFunJson,
    u_pow: i64,
}

impl From<&EulerClass> for EulerJson {
    fn from(e: &EulerClass) -> Self {
        EulerJson {
            coeff: (&e.coeff).into(),
            u_pow: e.u_pow,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixedPointJson {
    partition: Vec<usize>,
    #[serde(rename = "char")]
    character: Vec<CharTermJson>,
    euler_total: EulerJson,
    euler_pos: EulerJson,
    euler_nonpos: EulerJson,
}

impl From<&FixedPointData> for FixedPointJson {
    fn from(d: &FixedPointData) -> Self {
        FixedPointJson {
            partition: d.partition.parts().to_vec(),
            character: d
                .character
                .terms()
                .iter()
                .map(|(&(p, q), &mult)| CharTermJson { p, q, mult })
                .collect(),
            euler_total: (&d.euler_total).into(),
            euler_pos: (&d.euler_pos).into(),
            euler_nonpos: (&d.euler_nonpos).into(),
        }
    }
}

pub fn ratfun_to_value(f: &RatFun) -> serde_json::Value {
    serde_json::to_value(RatFunJson::from(f)).expect("serializable")
}

pub fn ratfun_from_str(s: &str) -> Result<RatFun, JsonError> {
    RatFun::try_from(&serde_json::from_str::<RatFunJson>(s)?)
}

pub fn symfunc_to_value(f: &SymFunc) -> serde_json::Value {
    serde_json::to_value(SymFuncJson::from(f)).expect("serializable")
}

pub fn symfunc_to_string(f: &SymFunc) -> String {
    serde_json::to_string(&SymFuncJson::from(f)).expect("serializable")
}

pub fn symfunc_from_str(s: &str) -> Result<SymFunc, JsonError> {
    SymFunc::try_from(&serde_json::from_str::<SymFuncJson>(s)?)
}

pub fn partition_to_value(la: &Partition) -> serde_json::Value {
    serde_json::to_value(la.parts()).expect("serializable")
}

pub fn fixed_point_to_value(d: &FixedPointData) -> serde_json::Value {
    serde_json::to_value(FixedPointJson::from(d)).expect("serializable")
}
