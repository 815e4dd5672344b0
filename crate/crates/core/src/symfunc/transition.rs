//! Power-sum ↔ monomial change of basis, one matrix per degree.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{enumerate_partitions, Partition};
use crate::scalar::BigRat;

/// Coefficients `a_{λμ}` of `p_i · m_λ = Σ_μ a_{λμ} m_μ`.
///
/// Each distinct part value `v` of λ, together with `v = 0`, is bumped to
/// `v + i`; the resulting μ gets coefficient `#{l : μ_l = v + i}`.
pub fn p_mult_m(i: usize, lambda: &Partition) -> BTreeMap<Partition, u64> {
    assert!(i > 0, "power sum index must be positive");
    let mut values: Vec<usize> = lambda
        .multiplicities()
        .into_iter()
        .map(|(k, _)| k)
        .collect();
    values.push(0);
    let mut out = BTreeMap::new();
    for v in values {
        let mu = match v {
            0 => lambda.with_part(i),
            _ => lambda
                .remove_part(v)
                .expect("part present")
                .with_part(v + i),
        };
        let c = mu.multiplicity(v + i) as u64;
        *out.entry(mu).or_insert(0) += c;
    }
    out
}

/// Change of basis between `{p_λ}` and `{m_λ}` in one degree.
///
/// Rows and columns follow `order`, the canonical enumeration of the
/// partitions of `degree`. Entries are α-free rationals.
#[derive(Debug, Clone)]
pub struct TransitionMatrix {
    degree: usize,
    order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Row λ: `p_λ` expanded in the monomial basis.
    p_in_m: Vec<Vec<BigRat>>,
    /// Row λ: `m_λ` expanded in the power-sum basis.
    m_in_p: Vec<Vec<BigRat>>,
}

impl TransitionMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn p_in_m(&self) -> &[Vec<BigRat>] {
        &self.p_in_m
    }

    pub fn m_in_p(&self) -> &[Vec<BigRat>] {
        &self.m_in_p
    }

    /// Coefficient of `m_μ` in `p_λ`.
    pub fn p_to_m_entry(&self, lambda: &Partition, mu: &Partition) -> BigRat {
        match (self.index_of(lambda), self.index_of(mu)) {
            (Some(i), Some(j)) => self.p_in_m[i][j].clone(),
            _ => BigRat::zero(),
        }
    }
}

/// Builds the degree-`n` transition matrix from scratch. Prefer
/// [`transition`], which memoizes.
pub fn build_transition(n: usize) -> TransitionMatrix {
    let order = enumerate_partitions(n);
    let index: HashMap<Partition, usize> = order
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let dim = order.len();

    let p_in_m: Vec<Vec<BigRat>> = order
        .iter()
        .map(|lambda| {
            // p_λ = p_{λ_1} p_{λ_2} ⋯ · 1, expanded in m one factor at a time.
            let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
            acc.insert(Partition::empty(), BigInt::one());
            for &part in lambda.parts() {
                let mut next = BTreeMap::new();
                for (nu, c) in &acc {
                    for (mu, a) in p_mult_m(part, nu) {
                        *next.entry(mu).or_insert_with(BigInt::zero) += c * BigInt::from(a);
                    }
                }
                acc = next;
            }
            let mut row = vec![BigRat::zero(); dim];
            for (mu, c) in acc {
                row[index[&mu]] = BigRat::from_integer(c);
            }
            row
        })
        .collect();

    // p_λ only involves m_μ with μ ≥ λ, which come no later in `order`, so
    // p_in_m is lower triangular. Invert by forward substitution.
    let mut m_in_p = vec![vec![BigRat::zero(); dim]; dim];
    for i in 0..dim {
        let diag = &p_in_m[i][i];
        assert!(
            !diag.is_zero(),
            "transition matrix is not triangular at {}",
            order[i]
        );
        // Row i of the inverse: X[i] = (e_i − Σ_{j<i} A[i][j] X[j]) / A[i][i]
        let mut row = vec![BigRat::zero(); dim];
        row[i] = BigRat::one();
        for j in 0..i {
            let a = &p_in_m[i][j];
            if a.is_zero() {
                continue;
            }
            for k in 0..=j {
                if !m_in_p[j][k].is_zero() {
                    row[k] -= a * &m_in_p[j][k];
                }
            }
        }
        let inv = diag.recip();
        for x in row.iter_mut() {
            *x *= &inv;
        }
        m_in_p[i] = row;
    }

    TransitionMatrix {
        degree: n,
        order,
        index,
        p_in_m,
        m_in_p,
    }
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<TransitionMatrix>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<TransitionMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized [`build_transition`]. Concurrent first calls for the same
/// degree may both build; the results are identical.
pub fn transition(n: usize) -> Arc<TransitionMatrix> {
    if let Some(t) = cache().read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(build_transition(n));
    let mut w = cache().write().unwrap();
    Arc::clone(w.entry(n).or_insert(built))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn q(n: i64) -> BigRat {
        BigRat::from_integer(n.into())
    }

    #[test]
    fn p_mult_m_examples() {
        assert_eq!(
            p_mult_m(1, &partition![1]),
            BTreeMap::from([(partition![2], 1), (partition![1, 1], 2)])
        );
        assert_eq!(
            p_mult_m(2, &partition![1]),
            BTreeMap::from([(partition![3], 1), (partition![2, 1], 1)])
        );
        assert_eq!(
            p_mult_m(3, &Partition::empty()),
            BTreeMap::from([(partition![3], 1)])
        );
    }

    #[test]
    fn degree_one_and_two() {
        let t1 = build_transition(1);
        assert_eq!(t1.p_in_m(), &[vec![q(1)]]);
        assert_eq!(t1.m_in_p(), &[vec![q(1)]]);

        let t2 = build_transition(2);
        // order: (2), (1,1)
        assert_eq!(t2.p_in_m(), &[vec![q(1), q(0)], vec![q(1), q(2)]]);
        let half = BigRat::new(1.into(), 2.into());
        assert_eq!(t2.m_in_p()[1], vec![-half.clone(), half]);
    }

    #[test]
    fn degree_zero_is_the_vacuum() {
        let t0 = build_transition(0);
        assert_eq!(t0.order(), &[Partition::empty()]);
        assert_eq!(t0.p_in_m(), &[vec![q(1)]]);
    }

    #[test]
    fn inverse_is_exact() {
        for n in 0..=8 {
            let t = transition(n);
            let dim = t.order().len();
            for i in 0..dim {
                for j in 0..dim {
                    let s: BigRat = (0..dim)
                        .map(|k| &t.p_in_m()[i][k] * &t.m_in_p()[k][j])
                        .sum();
                    assert_eq!(s, if i == j { q(1) } else { q(0) });
                }
            }
        }
    }

    #[test]
    fn triangular_with_augmented_diagonal() {
        for n in 0..=8 {
            let t = transition(n);
            for (i, la) in t.order().iter().enumerate() {
                for (j, mu) in t.order().iter().enumerate() {
                    if !t.p_in_m()[i][j].is_zero() {
                        assert!(la.dominated_by(mu), "p_{la} has an m_{mu} term");
                    }
                }
                assert_eq!(
                    t.p_in_m()[i][i],
                    BigRat::from_integer(la.aug_factor().into())
                );
            }
        }
    }

    #[test]
    fn cache_returns_identical_values() {
        let a = transition(5);
        let b = build_transition(5);
        assert_eq!(a.p_in_m(), b.p_in_m());
        assert_eq!(a.m_in_p(), b.m_in_p());
    }

    #[test]
    fn concurrent_builds_agree() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| transition(7)))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for r in &results[1..] {
            assert_eq!(r.p_in_m(), results[0].p_in_m());
        }
    }
}
