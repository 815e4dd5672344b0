//! The graded algebra Λ ⊗ ℚ(α) in the monomial, power-sum and augmented
//! monomial bases, with the α-deformed Hall inner product and the
//! Heisenberg operators acting on the power-sum (Fock space) model.

mod heisenberg;
mod transition;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::partition::Partition;
use crate::scalar::{AlphaPoly, BigRat, RatFun, ScalarError};

pub use heisenberg::{annihilation, apply_operator, commutator_check, creation};
pub use transition::{build_transition, p_mult_m, transition, TransitionMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("pairing requires homogeneous inputs of equal degree, got {left:?} and {right:?}")]
    DegreeMismatch {
        left: Option<usize>,
        right: Option<usize>,
    },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomial symmetric functions `m_λ`.
    Monomial,
    /// Power sums `p_λ`.
    PowerSum,
    /// Augmented monomials `m̃_λ = (∏ m_k!) m_λ`.
    AugmentedMonomial,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::AugmentedMonomial => "mtilde",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "m" => Some(Basis::Monomial),
            "p" => Some(Basis::PowerSum),
            "mtilde" | "m~" | "m̃" => Some(Basis::AugmentedMonomial),
            _ => None,
        }
    }
}

/// A finite linear combination of basis elements with coefficients in ℚ(α).
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, RatFun>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis element.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::from_terms(basis, [(lambda, RatFun::one())])
    }

    pub fn m(lambda: Partition) -> Self {
        Self::basis_element(Basis::Monomial, lambda)
    }

    pub fn p(lambda: Partition) -> Self {
        Self::basis_element(Basis::PowerSum, lambda)
    }

    pub fn vacuum() -> Self {
        Self::p(Partition::empty())
    }

    /// Collects terms, summing repeated partitions and dropping zeros.
    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, RatFun)>,
    {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, RatFun> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFun {
        self.terms.get(lambda).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or mixed degree.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn scale_poly(&self, c: &AlphaPoly) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.mul_poly(c)))
                .collect(),
        }
    }

    /// Sum; `other` is converted into `self`'s basis first.
    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&RatFun::from_int(-1)))
    }

    /// The same element expressed in `target`.
    pub fn convert(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        match (self.basis, target) {
            (Basis::AugmentedMonomial, _) => self.rescale_augmented(false).convert(target),
            (_, Basis::AugmentedMonomial) => self.convert(Basis::Monomial).rescale_augmented(true),
            (Basis::Monomial, Basis::PowerSum) => self.change_basis(Basis::PowerSum),
            (Basis::PowerSum, Basis::Monomial) => self.change_basis(Basis::Monomial),
            _ => unreachable!(),
        }
    }

    /// `m̃ → m` multiplies coefficients by `∏ m_k!`; `to_augmented` divides.
    fn rescale_augmented(&self, to_augmented: bool) -> SymFunc {
        let basis = if to_augmented {
            Basis::AugmentedMonomial
        } else {
            Basis::Monomial
        };
        let terms = self
            .terms
            .iter()
            .map(|(la, c)| {
                let u = BigRat::from_integer(la.aug_factor().into());
                let factor = if to_augmented { u.recip() } else { u };
                (la.clone(), c.scale(&factor))
            })
            .collect();
        SymFunc { basis, terms }
    }

    fn change_basis(&self, target: Basis) -> SymFunc {
        let mut out = SymFunc::zero(target);
        for (la, c) in &self.terms {
            let t = transition(la.size());
            let i = t.index_of(la).expect("partition of its own size");
            let row = match target {
                Basis::PowerSum => &t.m_in_p()[i],
                _ => &t.p_in_m()[i],
            };
            for (j, a) in row.iter().enumerate() {
                if !num_traits::Zero::is_zero(a) {
                    out.add_term(t.order()[j].clone(), &c.scale(a));
                }
            }
        }
        out
    }

    /// Specializes α; fails on the first coefficient with a pole there.
    pub fn eval_alpha(&self, a: &BigRat) -> Result<BTreeMap<Partition, BigRat>, ScalarError> {
        let mut out = BTreeMap::new();
        for (la, c) in &self.terms {
            let v = c.eval(a)?;
            if !num_traits::Zero::is_zero(&v) {
                out.insert(la.clone(), v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        for (i, (la, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{sym}{la}")?;
            } else {
                write!(f, "({c})*{sym}{la}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{}]", self)
    }
}

/// `⟨p_λ, p_λ⟩ = α^{l(λ)} z_λ`.
pub fn power_sum_norm(lambda: &Partition) -> AlphaPoly {
    AlphaPoly::alpha_pow(lambda.len()).scale(&BigRat::from_integer(lambda.z_factor().into()))
}

fn common_degree(f: &SymFunc, g: &SymFunc) -> Result<Option<usize>, SymError> {
    match (f.is_zero(), g.is_zero()) {
        (true, _) | (_, true) => Ok(None),
        _ => match (f.degree(), g.degree()) {
            (Some(a), Some(b)) if a == b => Ok(Some(a)),
            (left, right) => Err(SymError::DegreeMismatch { left, right }),
        },
    }
}

/// The α-deformed inner product `⟨p_λ, p_μ⟩ = α^{l(λ)} z_λ δ_{λμ}`,
/// extended bilinearly. Both arguments must be homogeneous of one degree;
/// zero pairs with anything.
pub fn inner_product(f: &SymFunc, g: &SymFunc) -> Result<RatFun, SymError> {
    if common_degree(f, g)?.is_none() {
        return Ok(RatFun::zero());
    }
    let fp = f.convert(Basis::PowerSum);
    let gp = g.convert(Basis::PowerSum);
    let mut acc = RatFun::zero();
    for (la, c) in &fp.terms {
        if let Some(d) = gp.terms.get(la) {
            acc += &(c * d).mul_poly(&power_sum_norm(la));
        }
    }
    Ok(acc)
}

/// The intersection pairing on middle homology, `(−1)^n ⟨f, g⟩` in degree
/// `n`, with α standing for minus the self-intersection of the curve.
pub fn geometric_pairing(f: &SymFunc, g: &SymFunc) -> Result<RatFun, SymError> {
    let n = common_degree(f, g)?;
    let ip = inner_product(f, g)?;
    Ok(match n {
        Some(n) if n % 2 == 1 => -ip,
        _ => ip,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::enumerate_partitions;

    fn rat(n: i64, d: i64) -> RatFun {
        RatFun::from_rat(BigRat::new(n.into(), d.into()))
    }

    #[test]
    fn convert_examples() {
        let m11 = SymFunc::m(partition![1, 1]);
        let expected = SymFunc::from_terms(
            Basis::PowerSum,
            [(partition![1, 1], rat(1, 2)), (partition![2], rat(-1, 2))],
        );
        assert_eq!(m11.convert(Basis::PowerSum), expected);
        assert_eq!(
            SymFunc::p(partition![2]).convert(Basis::Monomial),
            SymFunc::m(partition![2])
        );
        let m21 = SymFunc::m(partition![2, 1]);
        assert_eq!(m21.convert(Basis::PowerSum).convert(Basis::Monomial), m21);
    }

    #[test]
    fn augmented_basis_scaling() {
        let mt = SymFunc::basis_element(Basis::AugmentedMonomial, partition![1, 1, 1]);
        assert_eq!(
            mt.convert(Basis::Monomial),
            SymFunc::from_terms(
                Basis::Monomial,
                [(partition![1, 1, 1], RatFun::from_int(6))]
            )
        );
        let back = mt
            .convert(Basis::PowerSum)
            .convert(Basis::AugmentedMonomial);
        assert_eq!(back, mt);
    }

    #[test]
    fn round_trip_through_power_sums() {
        for n in 0..=8 {
            for la in enumerate_partitions(n) {
                let m = SymFunc::m(la.clone());
                assert_eq!(m.convert(Basis::PowerSum).convert(Basis::Monomial), m);
                let p = SymFunc::p(la);
                assert_eq!(p.convert(Basis::Monomial).convert(Basis::PowerSum), p);
            }
        }
    }

    #[test]
    fn mixed_degree_conversion() {
        let f = SymFunc::m(partition![1, 1]).add(&SymFunc::m(partition![1]));
        assert_eq!(f.degree(), None);
        assert_eq!(f.convert(Basis::PowerSum).convert(Basis::Monomial), f);
    }

    #[test]
    fn inner_product_examples() {
        let a = RatFun::alpha();
        assert_eq!(
            inner_product(&SymFunc::p(partition![2]), &SymFunc::p(partition![2])).unwrap(),
            &a * &RatFun::from_int(2)
        );
        assert!(
            inner_product(&SymFunc::p(partition![1, 1]), &SymFunc::p(partition![2]))
                .unwrap()
                .is_zero()
        );
        // m_11 = (p_11 − p_2)/2: (1/4)(2α²) + (1/4)(2α)
        let m11 = SymFunc::m(partition![1, 1]);
        let expected = (&(&a * &a) + &a).scale(&BigRat::new(1.into(), 2.into()));
        assert_eq!(inner_product(&m11, &m11).unwrap(), expected);
    }

    #[test]
    fn geometric_pairing_examples() {
        let a = RatFun::alpha();
        let p1 = SymFunc::p(partition![1]);
        let p2 = SymFunc::p(partition![2]);
        assert_eq!(geometric_pairing(&p1, &p1).unwrap(), -&a);
        assert_eq!(
            geometric_pairing(&p2, &p2).unwrap(),
            &a * &RatFun::from_int(2)
        );
        assert!(geometric_pairing(&SymFunc::p(partition![1, 1]), &p2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn pairings_reject_mixed_degrees() {
        let p1 = SymFunc::p(partition![1]);
        let p2 = SymFunc::p(partition![2]);
        assert!(matches!(
            geometric_pairing(&p1, &p2),
            Err(SymError::DegreeMismatch { .. })
        ));
        let mixed = p1.add(&p2);
        assert!(inner_product(&mixed, &mixed).is_err());
        assert!(inner_product(&SymFunc::zero(Basis::Monomial), &mixed)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn inner_product_is_symmetric_and_bilinear() {
        let ps = enumerate_partitions(4);
        let coeff = |k: usize| {
            RatFun::new(
                AlphaPoly::linear(1, k as i64),
                AlphaPoly::linear(k as i64, 1),
            )
            .unwrap()
        };
        let f = SymFunc::from_terms(
            Basis::Monomial,
            ps.iter().enumerate().map(|(k, p)| (p.clone(), coeff(k))),
        );
        let g = SymFunc::from_terms(
            Basis::PowerSum,
            ps.iter()
                .rev()
                .enumerate()
                .map(|(k, p)| (p.clone(), coeff(k + 2))),
        );
        let h = SymFunc::m(partition![2, 2]);
        assert_eq!(
            inner_product(&f, &g).unwrap(),
            inner_product(&g, &f).unwrap()
        );
        let lhs = inner_product(&f.add(&h).scale(&RatFun::alpha()), &g).unwrap();
        let rhs =
            (inner_product(&f, &g).unwrap() + inner_product(&h, &g).unwrap()) * RatFun::alpha();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn terms_never_store_zero() {
        let mut f = SymFunc::m(partition![2]);
        f.add_term(partition![2], &RatFun::from_int(-1));
        assert!(f.is_zero());
        assert_eq!(f, SymFunc::zero(Basis::Monomial));
    }
}
