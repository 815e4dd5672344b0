//! Exact scalars: ℚ and the field ℚ(α) of rational functions in one
//! formal parameter. Nothing in this crate uses floating point.

mod poly;
mod ratfun;

use thiserror::Error;

pub use poly::AlphaPoly;
pub use ratfun::RatFun;

/// Arbitrary-precision rationals, always in lowest terms.
pub type BigRat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization at alpha = {at} hits a pole")]
    SpecializationPole { at: BigRat },
}

/// Parses `"3"`, `"-3/2"` and similar into a [`BigRat`].
pub fn parse_rat(s: &str) -> Option<BigRat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            Some(BigRat::new(n, d))
        }
        None => Some(BigRat::from_integer(s.parse().ok()?)),
    }
}
