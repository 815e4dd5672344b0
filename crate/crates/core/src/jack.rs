//! Jack symmetric functions by Gram-Schmidt orthogonalization of the
//! monomial basis, their integral forms, and closed-form norms.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::partition::{enumerate_partitions, Partition};
use crate::report::CheckReport;
use crate::scalar::{AlphaPoly, BigRat, RatFun};
use crate::symfunc::{power_sum_norm, transition, Basis, SymFunc};

/// Everything computed for one partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JackEntry {
    /// `P_λ` in the monomial basis.
    pub p: SymFunc,
    /// `J_λ = c_λ P_λ` in the augmented monomial basis.
    pub j: SymFunc,
    /// `⟨P_λ, P_λ⟩` as produced by the orthogonalization.
    pub norm: RatFun,
    pub c: AlphaPoly,
}

/// All Jack functions of one degree.
#[derive(Debug, Clone)]
pub struct JackTable {
    degree: usize,
    entries: BTreeMap<Partition, JackEntry>,
}

impl JackTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &BTreeMap<Partition, JackEntry> {
        &self.entries
    }

    pub fn get(&self, lambda: &Partition) -> Option<&JackEntry> {
        self.entries.get(lambda)
    }
}

/// Gram matrix `⟨m_λ, m_μ⟩` of the monomial basis in degree `n`, in the
/// canonical order.
fn monomial_gram(n: usize) -> Vec<Vec<AlphaPoly>> {
    let t = transition(n);
    let norms: Vec<AlphaPoly> = t.order().iter().map(power_sum_norm).collect();
    let a = t.m_in_p();
    let dim = norms.len();
    let mut g = vec![vec![AlphaPoly::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..=i {
            let mut acc = AlphaPoly::zero();
            for k in 0..dim {
                let c = &a[i][k] * &a[j][k];
                if !num_traits::Zero::is_zero(&c) {
                    acc = &acc + &norms[k].scale(&c);
                }
            }
            g[j][i] = acc.clone();
            g[i][j] = acc;
        }
    }
    g
}

/// Gram-Schmidt on `{m_λ}` for the partitions in `order`, which must list
/// every partition of one size, dominance-larger first (any linear
/// extension of dominance). Partitions are processed from the end of the
/// list, and each `m_λ` is orthogonalized against *every* previously
/// processed `P_μ`, comparable or not.
///
/// Returns `(λ, P_λ, ⟨P_λ, P_λ⟩)` in processing order.
pub fn gram_schmidt(order: &[Partition]) -> Vec<(Partition, SymFunc, RatFun)> {
    let Some(first) = order.first() else {
        return Vec::new();
    };
    let n = first.size();
    let t = transition(n);
    assert_eq!(
        order.len(),
        t.order().len(),
        "order must list all partitions of {n}"
    );
    let gram = monomial_gram(n);
    let dim = order.len();
    let idx: Vec<usize> = order
        .iter()
        .map(|p| t.index_of(p).expect("partition of the common size"))
        .collect();

    // Coordinates live in the canonical index space of `t`.
    struct Done {
        coords: Vec<RatFun>,
        /// `⟨m_ν, P⟩` for every ν.
        gram_row: Vec<RatFun>,
        norm: RatFun,
    }
    let mut done: Vec<Done> = Vec::with_capacity(dim);
    let mut out = Vec::with_capacity(dim);

    for &li in idx.iter().rev() {
        let mut coords = vec![RatFun::zero(); dim];
        coords[li] = RatFun::one();
        for d in &done {
            let proj = d.gram_row[li].checked_div(&d.norm).expect("nonzero norm");
            if proj.is_zero() {
                continue;
            }
            for (c, dc) in coords.iter_mut().zip(&d.coords) {
                if !dc.is_zero() {
                    *c -= &(&proj * dc);
                }
            }
        }
        let gram_row: Vec<RatFun> = (0..dim)
            .map(|nu| {
                coords
                    .iter()
                    .zip(&gram[nu])
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, g)| c.mul_poly(g))
                    .sum()
            })
            .collect();
        let norm: RatFun = coords.iter().zip(&gram_row).map(|(c, r)| c * r).sum();
        let p = SymFunc::from_terms(
            Basis::Monomial,
            coords
                .iter()
                .enumerate()
                .map(|(k, c)| (t.order()[k].clone(), c.clone())),
        );
        out.push((t.order()[li].clone(), p, norm.clone()));
        done.push(Done {
            coords,
            gram_row,
            norm,
        });
    }
    out
}

/// `c_λ(α) = ∏_{s∈λ} (α a(s) + l(s) + 1)`
pub fn c_lambda(lambda: &Partition) -> AlphaPoly {
    lambda
        .arms_legs()
        .into_iter()
        .fold(AlphaPoly::one(), |acc, (a, l)| {
            &acc * &AlphaPoly::linear(a as i64, l as i64 + 1)
        })
}

/// `⟨P_λ, P_λ⟩ = ∏_{s∈λ} (α(a(s)+1) + l(s)) / (α a(s) + l(s) + 1)`
pub fn norm_closed_form(lambda: &Partition) -> RatFun {
    let (num, den) = lambda.arms_legs().into_iter().fold(
        (AlphaPoly::one(), AlphaPoly::one()),
        |(n, d), (a, l)| {
            let (a, l) = (a as i64, l as i64);
            (
                &n * &AlphaPoly::linear(a + 1, l),
                &d * &AlphaPoly::linear(a, l + 1),
            )
        },
    );
    RatFun::new(num, den).expect("hook factors are nonzero")
}

/// Builds the degree-`n` table. Prefer [`jack_table`], which memoizes.
pub fn build_jack_table(n: usize) -> JackTable {
    let order = enumerate_partitions(n);
    let entries = gram_schmidt(&order)
        .into_iter()
        .map(|(lambda, p, norm)| {
            let c = c_lambda(&lambda);
            let j = p.scale_poly(&c).convert(Basis::AugmentedMonomial);
            (lambda, JackEntry { p, j, norm, c })
        })
        .collect();
    JackTable { degree: n, entries }
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<JackTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<JackTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized per-degree Jack table. Distinct degrees may be built from
/// different threads at once.
pub fn jack_table(n: usize) -> Arc<JackTable> {
    if let Some(t) = cache().read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(build_jack_table(n));
    let mut w = cache().write().unwrap();
    Arc::clone(w.entry(n).or_insert(built))
}

fn entry(lambda: &Partition) -> JackEntry {
    jack_table(lambda.size())
        .get(lambda)
        .cloned()
        .expect("table covers every partition of its degree")
}

/// `P_λ^{(α)}` in the monomial basis.
#[allow(non_snake_case)]
pub fn jack_P(lambda: &Partition) -> SymFunc {
    entry(lambda).p
}

/// `J_λ^{(α)} = c_λ(α) P_λ^{(α)}` in the augmented monomial basis.
#[allow(non_snake_case)]
pub fn jack_J(lambda: &Partition) -> SymFunc {
    entry(lambda).j
}

/// Checks that every augmented-monomial coefficient of `J_λ`, `|λ| ≤ n_max`,
/// lies in `ℤ_{≥0}[α]`.
pub fn positivity_check(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("integral form positivity");
    for n in 0..=n_max {
        let table = jack_table(n);
        for (lambda, e) in table.entries() {
            for (mu, c) in e.j.terms() {
                report.record(c.is_nonneg_int_poly(), || {
                    format!("J{lambda} has coefficient {c} on mtilde{mu}")
                });
            }
        }
    }
    report
}

/// Specializes every coefficient of `P_λ` at `α = a`.
#[allow(non_snake_case)]
pub fn jack_P_at(
    lambda: &Partition,
    a: &BigRat,
) -> Result<BTreeMap<Partition, BigRat>, crate::scalar::ScalarError> {
    jack_P(lambda).eval_alpha(a)
}
