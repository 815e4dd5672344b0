//! Independent reference computations used by the verification suites.
//!
//! Nothing here goes through the sparse symmetric-function machinery: the
//! multiplication rule is checked against honest polynomial expansion in
//! finitely many variables, and Schur functions come from a ratio of
//! alternants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{enumerate_partitions, Partition};
use crate::scalar::{BigRat, ScalarError};
use crate::symfunc::transition;

/// A polynomial in `vars` commuting variables with integer coefficients,
/// keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.vars);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exact quotient by `x_i − x_j`; `None` if the division leaves a remainder.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Option<MultiPoly> {
        // Group by the exponent vector with x_i removed, then run synthetic
        // division in x_i: q_{k−1} = f_k + x_j q_k.
        let mut groups: BTreeMap<Vec<u32>, BTreeMap<u32, MultiPoly>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[i];
            rest[i] = 0;
            let mut key = rest.clone();
            key[j] = 0;
            let mut mono = vec![0; self.vars];
            mono[j] = rest[j];
            groups
                .entry(key)
                .or_default()
                .entry(k)
                .or_insert_with(|| MultiPoly::zero(self.vars))
                .add_term(mono, c.clone());
        }
        let mut out = MultiPoly::zero(self.vars);
        let mut xj = vec![0; self.vars];
        xj[j] = 1;
        let xj = MultiPoly::monomial(xj, BigInt::one());
        for (key, by_power) in groups {
            let top = *by_power.keys().next_back().unwrap();
            let mut carry = MultiPoly::zero(self.vars);
            for k in (0..=top).rev() {
                let mut cur = carry.mul(&xj);
                if let Some(f) = by_power.get(&k) {
                    for (e, c) in &f.terms {
                        cur.add_term(e.clone(), c.clone());
                    }
                }
                if k == 0 {
                    if !cur.terms.is_empty() {
                        return None;
                    }
                    break;
                }
                for (e, c) in &cur.terms {
                    let mut full = key.clone();
                    full[j] = e[j];
                    full[i] = k - 1;
                    out.add_term(full, c.clone());
                }
                carry = cur;
            }
        }
        Some(out)
    }
}

/// Pads `lambda` with zeros to `vars` entries.
fn padded(lambda: &Partition, vars: usize) -> Vec<u32> {
    let mut e: Vec<u32> = lambda.parts().iter().map(|&p| p as u32).collect();
    e.resize(vars, 0);
    e
}

/// All distinct rearrangements of `e`.
fn distinct_permutations(e: &[u32]) -> Vec<Vec<u32>> {
    let mut v = e.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next lexicographic permutation
    while let Some(i) = (0..v.len().saturating_sub(1))
        .rev()
        .find(|&i| v[i] < v[i + 1])
    {
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// `m_λ(x_1, …, x_N)` as an explicit polynomial.
pub fn monomial_symmetric(lambda: &Partition, vars: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(vars);
    if lambda.len() > vars {
        return p;
    }
    for e in distinct_permutations(&padded(lambda, vars)) {
        p.add_term(e, BigInt::one());
    }
    p
}

/// `p_i(x_1, …, x_N)`.
pub fn power_sum(i: usize, vars: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(vars);
    for k in 0..vars {
        let mut e = vec![0; vars];
        e[k] = i as u32;
        p.add_term(e, BigInt::one());
    }
    p
}

/// Reads off the monomial-basis coefficients of a symmetric polynomial of
/// degree `n` in at least `n` variables: the coefficient of `m_μ` is that
/// of `x^μ`.
pub fn collect_monomials(f: &MultiPoly, n: usize) -> BTreeMap<Partition, BigInt> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|mu| mu.len() <= f.vars)
        .filter_map(|mu| {
            let c = f.coeff(&padded(&mu, f.vars));
            (!c.is_zero()).then_some((mu, c))
        })
        .collect()
}

/// `p_i · m_λ` expanded as a polynomial in `i + |λ|` variables and
/// re-collected into monomial symmetric functions.
pub fn brute_force_p_mult_m(i: usize, lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let vars = i + lambda.size();
    let prod = power_sum(i, vars).mul(&monomial_symmetric(lambda, vars));
    collect_monomials(&prod, vars)
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    // (permutation, is_odd), by recursive insertion
    let mut out = vec![(Vec::new(), false)];
    for k in 0..n {
        let mut next = Vec::new();
        for (perm, odd) in &out {
            for pos in 0..=perm.len() {
                let mut p = perm.clone();
                p.insert(pos, k);
                // inserting k at `pos` creates (len − pos) inversions
                let flips = (perm.len() - pos) % 2 == 1;
                next.push((p, *odd ^ flips));
            }
        }
        out = next;
    }
    out
}

/// `a_β = det(x_i^{β_j})`.
fn alternant(beta: &[u32]) -> MultiPoly {
    let n = beta.len();
    let mut out = MultiPoly::zero(n);
    for (perm, odd) in permutations(n) {
        let mut e = vec![0; n];
        for (row, &col) in perm.iter().enumerate() {
            e[row] = beta[col];
        }
        out.add_term(e, if odd { -BigInt::one() } else { BigInt::one() });
    }
    out
}

/// Schur function `s_λ = a_{λ+δ} / a_δ` in `|λ|` variables, in the
/// monomial basis.
pub fn schur_by_alternants(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let n = lambda.size();
    if n == 0 {
        return BTreeMap::from([(Partition::empty(), BigInt::one())]);
    }
    let beta: Vec<u32> = padded(lambda, n)
        .into_iter()
        .enumerate()
        .map(|(k, p)| p + (n - 1 - k) as u32)
        .collect();
    // a_δ = ∏_{i<j} (x_i − x_j)
    let mut q = alternant(&beta);
    for i in 0..n {
        for j in i + 1..n {
            q = q
                .div_by_difference(i, j)
                .expect("alternant divisible by the Vandermonde");
        }
    }
    collect_monomials(&q, n)
}

/// Gram-Schmidt on the monomial basis of degree `n` run entirely over ℚ
/// with α already set to `a`, in the canonical order. Returns `P_λ|_{α=a}`
/// in the monomial basis for each λ.
pub fn gram_schmidt_specialized(
    n: usize,
    a: &BigRat,
) -> Result<BTreeMap<Partition, BTreeMap<Partition, BigRat>>, ScalarError> {
    let t = transition(n);
    let order = t.order();
    let dim = order.len();
    let weights: Vec<BigRat> = order
        .iter()
        .map(|nu| {
            let mut w = BigRat::from_integer(nu.z_factor().into());
            for _ in 0..nu.len() {
                w *= a;
            }
            w
        })
        .collect();
    let mip = t.m_in_p();
    let pair = |x: &[BigRat], y: &[BigRat]| -> BigRat {
        // ⟨Σ x_λ m_λ, Σ y_μ m_μ⟩ via the power-sum expansion
        let mut px = vec![BigRat::zero(); dim];
        let mut py = vec![BigRat::zero(); dim];
        for k in 0..dim {
            for l in 0..dim {
                if !x[k].is_zero() {
                    px[l] += &x[k] * &mip[k][l];
                }
                if !y[k].is_zero() {
                    py[l] += &y[k] * &mip[k][l];
                }
            }
        }
        (0..dim).map(|l| &px[l] * &py[l] * &weights[l]).sum()
    };

    let mut done: Vec<(Vec<BigRat>, BigRat)> = Vec::new();
    let mut out = BTreeMap::new();
    for li in (0..dim).rev() {
        let mut v = vec![BigRat::zero(); dim];
        v[li] = BigRat::one();
        let e = v.clone();
        for (w, norm) in &done {
            if norm.is_zero() {
                return Err(ScalarError::SpecializationPole { at: a.clone() });
            }
            let c = pair(&e, w) / norm;
            for k in 0..dim {
                v[k] -= &c * &w[k];
            }
        }
        let norm = pair(&v, &v);
        let coeffs = order
            .iter()
            .zip(&v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        out.insert(order[li].clone(), coeffs);
        done.push((v, norm));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn ints(entries: &[(Partition, i64)]) -> BTreeMap<Partition, BigInt> {
        entries
            .iter()
            .map(|(p, c)| (p.clone(), BigInt::from(*c)))
            .collect()
    }

    #[test]
    fn brute_force_small_products() {
        assert_eq!(
            brute_force_p_mult_m(1, &partition![1]),
            ints(&[(partition![2], 1), (partition![1, 1], 2)])
        );
        assert_eq!(
            brute_force_p_mult_m(2, &partition![1]),
            ints(&[(partition![3], 1), (partition![2, 1], 1)])
        );
    }

    #[test]
    fn schur_small_cases() {
        assert_eq!(
            schur_by_alternants(&partition![1]),
            ints(&[(partition![1], 1)])
        );
        assert_eq!(
            schur_by_alternants(&partition![2, 1]),
            ints(&[(partition![2, 1], 1), (partition![1, 1, 1], 2)])
        );
        // s_(3) = h_3 is the sum of all monomials
        assert_eq!(
            schur_by_alternants(&partition![3]),
            ints(&[
                (partition![3], 1),
                (partition![2, 1], 1),
                (partition![1, 1, 1], 1)
            ])
        );
    }

    #[test]
    fn difference_division_detects_remainder() {
        let x0 = MultiPoly::monomial(vec![1, 0], BigInt::one());
        assert!(x0.div_by_difference(0, 1).is_none());
        let mut diff = MultiPoly::monomial(vec![2, 0], BigInt::one());
        diff.add_term(vec![0, 2], -BigInt::one());
        let q = diff.div_by_difference(0, 1).unwrap();
        let mut expected = MultiPoly::monomial(vec![1, 0], BigInt::one());
        expected.add_term(vec![0, 1], BigInt::one());
        assert_eq!(q, expected);
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().filter(|(_, odd)| *odd).count(), 3);
    }

    #[test]
    fn specialized_gram_schmidt_degree_two() {
        // α = 1: P_(2) = m_2 + m_11
        let gs = gram_schmidt_specialized(2, &BigRat::one()).unwrap();
        assert_eq!(gs[&partition![2]][&partition![1, 1]], BigRat::one());
    }
}
