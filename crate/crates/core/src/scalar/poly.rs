//! Dense univariate polynomials in the formal parameter α over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigRat;

/// A polynomial in α with rational coefficients, stored degree-ascending.
///
/// The coefficient vector never carries a trailing zero, so the zero
/// polynomial is the empty vector and structural equality is equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<BigRat>,
}

impl AlphaPoly {
    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    /// The polynomial `α`.
    pub fn alpha() -> Self {
        AlphaPoly {
            coeffs: vec![BigRat::zero(), BigRat::one()],
        }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRat::from_integer(c.into()))
    }

    /// `a·α + b` with integer coefficients.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_coeffs(vec![
            BigRat::from_integer(b.into()),
            BigRat::from_integer(a.into()),
        ])
    }

    /// `α^k`.
    pub fn alpha_pow(k: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); k + 1];
        coeffs[k] = BigRat::one();
        AlphaPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn from_int_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRat::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, a: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * a + c)
    }

    /// Euclidean division over ℚ. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &AlphaPoly) -> (AlphaPoly, AlphaPoly) {
        let d_deg = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRat::zero(); rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d_deg] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(d_deg);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn div_exact(&self, divisor: &AlphaPoly) -> AlphaPoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Splits `self` as `content · primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_and_primitive(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), Vec::new());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (BigRat::new(g, lcm), prim)
    }

    fn from_bigints(ints: Vec<BigInt>) -> Self {
        Self::from_coeffs(ints.into_iter().map(BigRat::from_integer).collect())
    }

    /// Monic greatest common divisor, computed with a primitive
    /// pseudo-remainder sequence over ℤ. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() && other.is_zero() {
            return Self::zero();
        }
        if self.is_zero() || other.is_zero() {
            let p = if self.is_zero() { other } else { self };
            return p.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let (_, mut a) = self.content_and_primitive();
        let (_, mut b) = other.content_and_primitive();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive_part(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        Self::from_bigints(a).monic()
    }

    pub fn monic(&self) -> AlphaPoly {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Renders the polynomial in the variable `var`, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub(crate) fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

fn primitive_part(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        return p;
    }
    let mut g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// `lc(b)^(deg a - deg b + 1) · a mod b` over ℤ.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("a"))
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaPoly({self})")
    }
}

impl Add for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Sub for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        self + &(-rhs)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for AlphaPoly {
            type Output = AlphaPoly;
            fn $m(self, rhs: AlphaPoly) -> AlphaPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> AlphaPoly {
        AlphaPoly::from_int_coeffs(c.iter().copied())
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        // α² − 1 and α² + 2α + 1 share α + 1
        let g = p(&[-1, 0, 1]).gcd(&p(&[1, 2, 1]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert!(p(&[1, 1]).gcd(&p(&[2, 1])).is_one());
        assert!(p(&[3]).gcd(&p(&[2, 1])).is_one());
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
    }

    #[test]
    fn content_extraction() {
        let half = BigRat::new(1.into(), 2.into());
        let f = AlphaPoly::from_coeffs(vec![
            half.clone(),
            half.clone() * BigRat::from_integer((-3).into()),
        ]);
        let (c, prim) = f.content_and_primitive();
        assert_eq!(c, BigRat::new((-1).into(), 2.into()));
        assert_eq!(prim, vec![BigInt::from(-1), BigInt::from(3)]);
    }

    #[test]
    fn renders_readably() {
        assert_eq!(p(&[2, 0, -1]).to_string(), "-a^2 + 2");
        assert_eq!(p(&[0, 3]).render("α"), "3*α");
    }
}
