//! Heisenberg operators on the Fock space ℚ(α)[p_1, p_2, …].
//!
//! `P[-i]` (i > 0) is multiplication by `p_i`; `P[i]` is
//! `(−1)^{i−1} i ⟨C,C⟩ ∂/∂p_i` with `⟨C,C⟩ = −α`.

use crate::partition::{enumerate_partitions, Partition};
use crate::report::CheckReport;
use crate::scalar::{AlphaPoly, BigRat};

use super::{geometric_pairing, Basis, SymFunc};

/// `(−1)^{i−1} i ⟨C,C⟩` as a polynomial in α.
fn annihilation_scalar(i: usize) -> AlphaPoly {
    let sign = if i % 2 == 1 { 1 } else { -1 };
    // (−1)^{i−1} · i · (−α)
    AlphaPoly::linear(-sign * i as i64, 0)
}

/// Multiplication by `p_i`.
pub fn creation(i: usize, f: &SymFunc) -> SymFunc {
    assert!(i > 0, "creation index must be positive");
    let f = f.convert(Basis::PowerSum);
    SymFunc::from_terms(
        Basis::PowerSum,
        f.terms().iter().map(|(la, c)| (la.with_part(i), c.clone())),
    )
}

/// `(−1)^{i−1} i (−α) ∂/∂p_i`, treating the `p_k` as free generators.
pub fn annihilation(i: usize, f: &SymFunc) -> SymFunc {
    assert!(i > 0, "annihilation index must be positive");
    let f = f.convert(Basis::PowerSum);
    let scalar = annihilation_scalar(i);
    let terms = f.terms().iter().filter_map(|(la, c)| {
        let m = la.multiplicity(i);
        let rest = la.remove_part(i)?;
        Some((
            rest,
            c.mul_poly(&scalar.scale(&BigRat::from_integer(m.into()))),
        ))
    });
    SymFunc::from_terms(Basis::PowerSum, terms)
}

/// `P[k]` for nonzero `k`: annihilation for `k > 0`, creation of `p_{−k}`
/// for `k < 0`.
pub fn apply_operator(k: i64, f: &SymFunc) -> SymFunc {
    assert!(k != 0, "P[0] is not part of the algebra");
    if k > 0 {
        annihilation(k as usize, f)
    } else {
        creation(k.unsigned_abs() as usize, f)
    }
}

fn apply_power(k: i64, times: usize, f: &SymFunc) -> SymFunc {
    (0..times).fold(f.clone(), |acc, _| apply_operator(k, &acc))
}

/// `[P[i], P[j]] = (−1)^{i−1} i δ_{i+j,0} ⟨C,C⟩ id` as a scalar, for nonzero i, j.
fn comrel_scalar(i: i64, j: i64) -> AlphaPoly {
    if i + j != 0 {
        return AlphaPoly::zero();
    }
    let sign = if (i - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    AlphaPoly::linear(-sign * i, 0)
}

fn power_sum_basis(n_max: usize) -> impl Iterator<Item = Partition> {
    (0..=n_max).flat_map(enumerate_partitions)
}

/// Verifies on the truncated Fock space of degree ≤ `n_max`:
///
/// * the commutator relation for all `0 < |i|, |j| ≤ n_max` on every `p_λ`;
/// * the power-commutator formula for `P[i]^m`, `P[−j]^n` with
///   `m·i, n·j ≤ n_max`, on every `p_λ` free of `p_i` (the vacuum included),
///   where the formula holds as stated;
/// * adjointness of `p_i·` and the annihilation operator under the
///   geometric pairing, in the `p` and `m` bases.
pub fn commutator_check(n_max: usize) -> Vec<CheckReport> {
    let n = n_max as i64;
    let indices: Vec<i64> = (-n..=n).filter(|&k| k != 0).collect();
    let basis: Vec<Partition> = power_sum_basis(n_max).collect();

    let mut comrel = CheckReport::new("heisenberg commutator relation");
    for la in &basis {
        let f = SymFunc::p(la.clone());
        let pj: Vec<SymFunc> = indices.iter().map(|&j| apply_operator(j, &f)).collect();
        for &i in &indices {
            let pi_f = apply_operator(i, &f);
            for (jdx, &j) in indices.iter().enumerate() {
                let lhs = apply_operator(i, &pj[jdx]).sub(&apply_operator(j, &pi_f));
                let rhs = f.scale_poly(&comrel_scalar(i, j));
                comrel.record(lhs == rhs, || {
                    format!("[P[{i}], P[{j}]] p{la}: got {lhs}, expected {rhs}")
                });
            }
        }
    }

    let mut ppcom = CheckReport::new("heisenberg power commutator");
    for i in 1..=n_max {
        for j in 1..=n_max {
            for m in 1..=n_max / i {
                for k in 1..=n_max / j {
                    for la in basis.iter().filter(|la| la.multiplicity(i) == 0) {
                        let f = SymFunc::p(la.clone());
                        let lhs = apply_power(i as i64, m, &apply_power(-(j as i64), k, &f))
                            .sub(&apply_power(-(j as i64), k, &apply_power(i as i64, m, &f)));
                        let rhs = if i == j && k >= m {
                            let falling: i64 = ((k - m + 1)..=k).map(|x| x as i64).product();
                            let scalar = (0..m)
                                .fold(AlphaPoly::one(), |acc, _| &acc * &annihilation_scalar(i))
                                .scale(&BigRat::from_integer(falling.into()));
                            apply_power(-(j as i64), k - m, &f).scale_poly(&scalar)
                        } else {
                            SymFunc::zero(Basis::PowerSum)
                        };
                        ppcom.record(lhs == rhs, || {
                            format!("[P[{i}]^{m}, P[-{j}]^{k}] p{la}: got {lhs}, expected {rhs}")
                        });
                    }
                }
            }
        }
    }

    let mut adjoint = CheckReport::new("heisenberg adjointness");
    for d in 1..=n_max {
        for i in 1..=d {
            for mu in enumerate_partitions(d - i) {
                for la in enumerate_partitions(d) {
                    for basis in [Basis::PowerSum, Basis::Monomial] {
                        if basis == Basis::Monomial && d > 6 {
                            continue;
                        }
                        let f = SymFunc::basis_element(basis, mu.clone());
                        let g = SymFunc::basis_element(basis, la.clone());
                        let lhs = geometric_pairing(&creation(i, &f), &g);
                        let rhs = geometric_pairing(&f, &annihilation(i, &g));
                        let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
                        adjoint.record(ok, || {
                            format!("<p_{i} {f}, {g}> = {lhs:?} but <{f}, P[{i}] {g}> = {rhs:?}")
                        });
                    }
                }
            }
        }
    }

    vec![comrel, ppcom, adjoint]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::scalar::RatFun;

    #[test]
    fn annihilation_examples() {
        let a = RatFun::alpha();
        let vac = SymFunc::vacuum();
        assert_eq!(annihilation(1, &SymFunc::p(partition![1])), vac.scale(&-&a));
        assert_eq!(
            annihilation(2, &SymFunc::p(partition![2])),
            vac.scale(&(&a * &RatFun::from_int(2)))
        );
        assert!(annihilation(3, &SymFunc::p(partition![2, 1])).is_zero());
    }

    #[test]
    fn annihilation_counts_multiplicity() {
        // ∂/∂p_1 p_1² = 2 p_1, times −α
        let got = annihilation(1, &SymFunc::p(partition![1, 1]));
        assert_eq!(
            got,
            SymFunc::p(partition![1]).scale_poly(&AlphaPoly::linear(-2, 0))
        );
    }

    #[test]
    fn single_commutators() {
        let vac = SymFunc::vacuum();
        let lhs = apply_operator(1, &apply_operator(-1, &vac))
            .sub(&apply_operator(-1, &apply_operator(1, &vac)));
        assert_eq!(lhs, vac.scale(&-RatFun::alpha()));
        let f = SymFunc::p(partition![2, 1, 1]);
        let lhs = apply_operator(1, &apply_operator(-2, &f))
            .sub(&apply_operator(-2, &apply_operator(1, &f)));
        assert!(lhs.is_zero());
    }

    #[test]
    fn comrel_scalar_is_antisymmetric() {
        for i in [-3i64, -2, -1, 1, 2, 3] {
            assert_eq!(comrel_scalar(i, -i), -comrel_scalar(-i, i));
        }
    }

    #[test]
    fn small_truncation_passes() {
        for r in commutator_check(3) {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn creation_accepts_monomial_input() {
        let f = creation(1, &SymFunc::m(partition![1]));
        assert_eq!(f, SymFunc::p(partition![1, 1]));
    }
}
