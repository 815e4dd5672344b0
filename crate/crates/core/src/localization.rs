//! Torus fixed points of the Hilbert scheme of points: tangent characters,
//! S¹ weights, equivariant Euler classes and the localized pairing.
//!
//! Fixed points are indexed by partitions. The two-torus character is
//! computed first; the S¹ action is its restriction `T_1 ↦ t^{-1}`,
//! `T_2 ↦ t^{α}`, so the weight of `T_1^p T_2^q` is `−p + αq` (times `u`).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::Partition;
use crate::scalar::{AlphaPoly, RatFun};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("weight T1^{p} T2^{q} restricts to the zero S1 weight")]
    ZeroWeight { p: i64, q: i64 },
    #[error("fixed points {left} and {right} lie in different Hilbert schemes")]
    DegreeMismatch { left: Partition, right: Partition },
    #[error("u-power bookkeeping failed: quotient carries u^{0}")]
    UPowerMismatch(i64),
}

/// A finitely supported character `Σ mult · T_1^p T_2^q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentChar {
    terms: BTreeMap<(i64, i64), u32>,
}

impl LaurentChar {
    pub fn terms(&self) -> &BTreeMap<(i64, i64), u32> {
        &self.terms
    }

    pub fn add(&mut self, p: i64, q: i64) {
        *self.terms.entry((p, q)).or_insert(0) += 1;
    }

    /// Total dimension.
    pub fn dimension(&self) -> u32 {
        self.terms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `e = coeff · u^{u_pow}`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerClass {
    pub coeff: RatFun,
    pub u_pow: i64,
}

impl EulerClass {
    fn one() -> Self {
        EulerClass {
            coeff: RatFun::one(),
            u_pow: 0,
        }
    }

    fn times_weight(&self, w: &AlphaPoly) -> Self {
        EulerClass {
            coeff: self.coeff.mul_poly(w),
            u_pow: self.u_pow + 1,
        }
    }

    pub fn mul(&self, other: &EulerClass) -> EulerClass {
        EulerClass {
            coeff: &self.coeff * &other.coeff,
            u_pow: self.u_pow + other.u_pow,
        }
    }

    /// Fails only when dividing by a zero coefficient.
    pub fn div(&self, other: &EulerClass) -> Option<EulerClass> {
        Some(EulerClass {
            coeff: self.coeff.checked_div(&other.coeff).ok()?,
            u_pow: self.u_pow - other.u_pow,
        })
    }
}

/// Per-fixed-point record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointData {
    pub partition: Partition,
    pub character: LaurentChar,
    /// `e(T)`, degree `u^{2n}`.
    pub euler_total: EulerClass,
    /// `e(N^{>0})`, weights with `q > 0`, degree `u^n`.
    pub euler_pos: EulerClass,
    /// `e(N^{≤0})`, weights with `q ≤ 0`, degree `u^n`.
    pub euler_nonpos: EulerClass,
}

/// `Σ_{s∈λ} (T_1^{l(s)+1} T_2^{−a(s)} + T_1^{−l(s)} T_2^{a(s)+1})`
pub fn tangent_character(lambda: &Partition) -> LaurentChar {
    let mut ch = LaurentChar::default();
    for (a, l) in lambda.arms_legs() {
        let (a, l) = (a as i64, l as i64);
        ch.add(l + 1, -a);
        ch.add(-l, a + 1);
    }
    ch
}

/// S¹ weight `−p + αq` of `T_1^p T_2^q`.
pub fn s1_weight(p: i64, q: i64) -> AlphaPoly {
    AlphaPoly::linear(q, -p)
}

/// Euler classes of the tangent space at the fixed point `λ` and of its
/// `q > 0` / `q ≤ 0` halves, as products of S¹ weights.
pub fn euler_classes(lambda: &Partition) -> Result<FixedPointData, LocalizationError> {
    let character = tangent_character(lambda);
    let mut pos = EulerClass::one();
    let mut nonpos = EulerClass::one();
    for (&(p, q), &mult) in character.terms() {
        let w = s1_weight(p, q);
        if w.is_zero() {
            return Err(LocalizationError::ZeroWeight { p, q });
        }
        for _ in 0..mult {
            if q > 0 {
                pos = pos.times_weight(&w);
            } else {
                nonpos = nonpos.times_weight(&w);
            }
        }
    }
    let total = pos.mul(&nonpos);
    debug_assert_eq!(total, tangent_euler_closed_form(lambda));
    debug_assert_eq!(pos, positive_normal_euler_closed_form(lambda));
    Ok(FixedPointData {
        partition: lambda.clone(),
        character,
        euler_total: total,
        euler_pos: pos,
        euler_nonpos: nonpos,
    })
}

/// `u^{2n} ∏_s (−α a(s) − l(s) − 1) · ∏_s (α(a(s)+1) + l(s))`
pub fn tangent_euler_closed_form(lambda: &Partition) -> EulerClass {
    let mut coeff = AlphaPoly::one();
    for (a, l) in lambda.arms_legs() {
        let (a, l) = (a as i64, l as i64);
        coeff = &coeff * &AlphaPoly::linear(-a, -l - 1);
        coeff = &coeff * &AlphaPoly::linear(a + 1, l);
    }
    EulerClass {
        coeff: coeff.into(),
        u_pow: 2 * lambda.size() as i64,
    }
}

/// `e(N^{>0}) = u^n ∏_s (α(a(s)+1) + l(s))`
pub fn positive_normal_euler_closed_form(lambda: &Partition) -> EulerClass {
    let coeff = lambda
        .arms_legs()
        .into_iter()
        .fold(AlphaPoly::one(), |acc, (a, l)| {
            &acc * &AlphaPoly::linear(a as i64 + 1, l as i64)
        });
    EulerClass {
        coeff: coeff.into(),
        u_pow: lambda.size() as i64,
    }
}

/// `e(T) / e(N^{≤0})²`, the self-pairing of the class supported at `λ`
/// including its power of `u`.
pub fn localized_self_pairing(lambda: &Partition) -> Result<EulerClass, LocalizationError> {
    let d = euler_classes(lambda)?;
    let sq = d.euler_nonpos.mul(&d.euler_nonpos);
    Ok(d.euler_total
        .div(&sq)
        .expect("Euler classes of isolated fixed points are nonzero"))
}

/// Pairing of the fixed-point classes `F_λ`, `F_μ` by localization: zero
/// off the diagonal, `e(T)/e(N^{≤0})²` on it.
pub fn f_pairing(lambda: &Partition, mu: &Partition) -> Result<RatFun, LocalizationError> {
    if lambda.size() != mu.size() {
        return Err(LocalizationError::DegreeMismatch {
            left: lambda.clone(),
            right: mu.clone(),
        });
    }
    if lambda != mu {
        return Ok(RatFun::zero());
    }
    let e = localized_self_pairing(lambda)?;
    if e.u_pow != 0 {
        return Err(LocalizationError::UPowerMismatch(e.u_pow));
    }
    Ok(e.coeff)
}

/// Coefficients of `q^0 … q^{n_max}` in `∏_{m=1}^{n_max} (1 − q^m)^{-1}`.
pub fn goettsche_dim(n_max: usize) -> Vec<BigUint> {
    let mut series = vec![BigUint::zero(); n_max + 1];
    series[0] = BigUint::one();
    for m in 1..=n_max {
        // multiply by 1/(1 − q^m) = 1 + q^m + q^{2m} + …
        for k in m..=n_max {
            let add = series[k - m].clone();
            series[k] += add;
        }
    }
    series
}
