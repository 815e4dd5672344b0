//! The field ℚ(α).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{AlphaPoly, BigRat, ScalarError};

/// A rational function `num / den` in α.
///
/// Canonical form: `gcd(num, den) = 1` and `den` has coprime integer
/// coefficients with a positive leading coefficient. Zero is `0 / 1`.
/// Two equal rational functions therefore have identical fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: AlphaPoly::zero(),
            den: AlphaPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: AlphaPoly::one(),
            den: AlphaPoly::one(),
        }
    }

    pub fn alpha() -> Self {
        Self::from_poly(AlphaPoly::alpha())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(AlphaPoly::from_int(c))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(AlphaPoly::constant(c))
    }

    pub fn from_poly(num: AlphaPoly) -> Self {
        RatFun {
            num,
            den: AlphaPoly::one(),
        }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: AlphaPoly, den: AlphaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Self::normalize_content(num, den)
    }

    /// Assumes `gcd(num, den) = 1`; fixes the scalar normalization of `den`.
    fn normalize_content(num: AlphaPoly, den: AlphaPoly) -> Self {
        let (c, prim) = den.content_and_primitive();
        if c.is_one() {
            return RatFun { num, den };
        }
        let inv = c.recip();
        RatFun {
            num: num.scale(&inv),
            den: AlphaPoly::from_coeffs(prim.into_iter().map(BigRat::from_integer).collect()),
        }
    }

    pub fn numer(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn denom(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `Some(c)` when `self` is the constant `c`.
    pub fn as_constant(&self) -> Option<BigRat> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize_content(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<Self, ScalarError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &AlphaPoly) -> Self {
        if p.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let g = p.gcd(&self.den);
        if g.is_one() {
            return RatFun {
                num: &self.num * p,
                den: self.den.clone(),
            };
        }
        Self::normalize_content(&self.num * &p.div_exact(&g), self.den.div_exact(&g))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact specialization α ↦ `a`.
    pub fn eval(&self, a: &BigRat) -> Result<BigRat, ScalarError> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return Err(ScalarError::SpecializationPole { at: a.clone() });
        }
        Ok(self.num.eval(a) / d)
    }

    /// True iff `self ∈ ℤ_{≥0}[α]`.
    pub fn is_nonneg_int_poly(&self) -> bool {
        self.den.is_one()
            && self
                .num
                .coeffs()
                .iter()
                .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Plain-text rendering in the variable `var`.
    pub fn render(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.render(var);
        }
        let wrap = |p: &AlphaPoly| {
            let s = p.render(var);
            if p.term_count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<AlphaPoly> for RatFun {
    fn from(p: AlphaPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<BigRat> for RatFun {
    fn from(c: BigRat) -> Self {
        Self::from_rat(c)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("a"))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFun::from_poly(num);
            }
            return RatFun::reduce(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            // Coprime denominators: any common factor of the sum and the
            // product would have to divide one of them, and neither shares
            // a factor with its own numerator.
            return RatFun::normalize_content_checked(num, &self.den * &rhs.den);
        }
        let a_co = self.den.div_exact(&g);
        let b_co = rhs.den.div_exact(&g);
        let num = &(&self.num * &b_co) + &(&rhs.num * &a_co);
        RatFun::reduce(num, &self.den * &b_co)
    }
}

impl RatFun {
    fn normalize_content_checked(num: AlphaPoly, den: AlphaPoly) -> RatFun {
        if num.is_zero() {
            return RatFun::zero();
        }
        Self::normalize_content(num, den)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel; both inputs are already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1), rhs.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        RatFun::normalize_content(&a * &c, &b * &d)
    }
}

/// Panics on division by zero; use [`RatFun::checked_div`] to get an error.
impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, rhs: &RatFun) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFun> for RatFun {
    fn sub_assign(&mut self, rhs: &RatFun) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(iter: I) -> Self {
        iter.fold(RatFun::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> AlphaPoly {
        AlphaPoly::from_int_coeffs(c.iter().copied())
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(poly(n), poly(d)).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn addition_of_linear_terms() {
        assert_eq!(rf(&[1, 1], &[1]) + rf(&[-1, 1], &[1]), rf(&[0, 2], &[1]));
    }

    #[test]
    fn division_cancels_common_factor() {
        let f = rf(&[-1, 0, 1], &[1])
            .checked_div(&rf(&[-1, 1], &[1]))
            .unwrap();
        assert_eq!(f, rf(&[1, 1], &[1]));
        assert!(f.is_polynomial());
    }

    #[test]
    fn inverse_times_self_is_one() {
        let f = rf(&[1], &[1, 1]);
        assert!((f * rf(&[1, 1], &[1])).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            RatFun::one().checked_div(&RatFun::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert!(RatFun::new(poly(&[1]), AlphaPoly::zero()).is_err());
    }

    #[test]
    fn denominator_is_primitive_with_positive_lead() {
        // 1 / (−2α − 2) = (−1/2) / (α + 1)
        let f = rf(&[1], &[-2, -2]);
        assert_eq!(f.denom(), &poly(&[1, 1]));
        assert_eq!(f.numer(), &AlphaPoly::constant(q(-1, 2)));
        // rational denominators are cleared too
        let g = RatFun::new(poly(&[1]), AlphaPoly::from_coeffs(vec![q(1, 3), q(1, 2)])).unwrap();
        assert_eq!(g.denom(), &poly(&[2, 3]));
        assert_eq!(g.numer(), &poly(&[6]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(rf(&[0, 0, 2], &[1, 1]).eval(&q(1, 1)).unwrap(), q(1, 1));
        assert_eq!(
            rf(&[1], &[1, 1]).eval(&q(-1, 1)),
            Err(ScalarError::SpecializationPole { at: q(-1, 1) })
        );
        assert_eq!(RatFun::alpha().eval(&q(3, 2)).unwrap(), q(3, 2));
    }

    #[test]
    fn nonneg_int_poly_examples() {
        assert!(rf(&[2, 1], &[1]).is_nonneg_int_poly());
        assert!(!rf(&[1], &[1, 1]).is_nonneg_int_poly());
        assert!(!rf(&[-1, 1], &[1]).is_nonneg_int_poly());
        assert!(!RatFun::from_rat(q(1, 2)).is_nonneg_int_poly());
        assert!(RatFun::zero().is_nonneg_int_poly());
    }

    #[test]
    fn render_fraction() {
        assert_eq!(rf(&[2], &[1, 1]).to_string(), "2/(a + 1)");
        assert_eq!(rf(&[0, 0, 2], &[1, 1]).render("α"), "2*α^2/(α + 1)");
    }
}
