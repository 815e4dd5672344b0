//! Named verification suites. Each suite sweeps every partition up to a
//! degree bound through the public operations of the crate and returns one
//! [`CheckReport`] per property.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::jack::{gram_schmidt, jack_table, norm_closed_form, positivity_check};
use crate::localization::{
    euler_classes, f_pairing, goettsche_dim, positive_normal_euler_closed_form,
    tangent_euler_closed_form,
};
use crate::oracle::{brute_force_p_mult_m, gram_schmidt_specialized, schur_by_alternants};
use crate::partition::{conjugate_lex_order, enumerate_partitions, Partition};
use crate::report::CheckReport;
use crate::scalar::BigRat;
use crate::symfunc::{commutator_check, inner_product, p_mult_m, transition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Orthogonality,
    Triangularity,
    NormsBridge,
    Positivity,
    Heisenberg,
    Goettsche,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Orthogonality,
        Suite::Triangularity,
        Suite::NormsBridge,
        Suite::Positivity,
        Suite::Heisenberg,
        Suite::Goettsche,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Triangularity => "triangularity",
            Suite::NormsBridge => "norms-bridge",
            Suite::Positivity => "positivity",
            Suite::Heisenberg => "heisenberg",
            Suite::Goettsche => "goettsche",
            Suite::Oracle => "oracle",
        }
    }

    /// Whether the suite reads Jack tables (callers may prebuild them).
    pub fn needs_jack_tables(self) -> bool {
        matches!(
            self,
            Suite::Orthogonality
                | Suite::Triangularity
                | Suite::NormsBridge
                | Suite::Positivity
                | Suite::Oracle
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

pub fn run_suite(suite: Suite, n: usize) -> SuiteReport {
    let checks = match suite {
        Suite::Orthogonality => vec![orthogonality(n)],
        Suite::Triangularity => triangularity(n),
        Suite::NormsBridge => norms_bridge(n),
        Suite::Positivity => vec![positivity_check(n)],
        Suite::Heisenberg => commutator_check(n),
        Suite::Goettsche => vec![goettsche(n)],
        Suite::Oracle => oracle(n),
    };
    SuiteReport { suite, n, checks }
}

/// `⟨P_λ, P_μ⟩ = 0` for all `λ ≠ μ` of equal size `≤ n`.
pub fn orthogonality(n: usize) -> CheckReport {
    let mut r = CheckReport::new("jack orthogonality");
    for d in 0..=n {
        let table = jack_table(d);
        let entries: Vec<_> = table.entries().iter().collect();
        for (i, (la, a)) in entries.iter().enumerate() {
            for (mu, b) in &entries[i + 1..] {
                let ip = inner_product(&a.p, &b.p);
                let ok = matches!(&ip, Ok(v) if v.is_zero());
                r.record(ok, || format!("<P{la}, P{mu}> = {ip:?}"));
            }
        }
    }
    r
}

/// Unit leading coefficient and support strictly below in dominance.
pub fn jack_triangularity(n: usize) -> CheckReport {
    let mut r = CheckReport::new("jack strict dominance triangularity");
    for d in 0..=n {
        for (la, e) in jack_table(d).entries() {
            r.record(e.p.coeff(la).is_one(), || {
                format!("P{la} has coefficient {} on m{la}", e.p.coeff(la))
            });
            for mu in e.p.terms().keys().filter(|mu| *mu != la) {
                r.record(mu.dominated_by(la), || {
                    format!(
                        "P{la} has a nonzero coefficient on m{mu}, which is not dominated by {la}"
                    )
                });
            }
        }
    }
    r
}

fn triangularity(n: usize) -> Vec<CheckReport> {
    let mut order = CheckReport::new("canonical order extends dominance");
    let mut trans = CheckReport::new("power sums are triangular in monomials");
    for d in 0..=n {
        let ps = enumerate_partitions(d);
        for (i, a) in ps.iter().enumerate() {
            for b in &ps[i + 1..] {
                order.record(!a.dominated_by(b), || {
                    format!("{a} precedes {b} but is dominated by it")
                });
            }
        }
        let t = transition(d);
        for (i, la) in t.order().iter().enumerate() {
            for (j, mu) in t.order().iter().enumerate() {
                if !num_traits::Zero::is_zero(&t.p_in_m()[i][j]) {
                    trans.record(la.dominated_by(mu), || format!("p{la} involves m{mu}"));
                }
            }
            let diag = BigRat::from_integer(la.aug_factor().into());
            trans.record(t.p_in_m()[i][i] == diag, || {
                format!("diagonal of p{la} is not {diag}")
            });
        }
    }
    vec![
        order,
        trans,
        jack_triangularity(n),
        order_independence(n.min(7)),
    ]
}

/// Gram-Schmidt under a second linear extension of dominance gives the
/// same `P_λ`.
pub fn order_independence(n: usize) -> CheckReport {
    let mut r = CheckReport::new("gram-schmidt order independence");
    for d in 0..=n {
        let table = jack_table(d);
        for (la, p, _) in gram_schmidt(&conjugate_lex_order(d)) {
            let ok = table.get(&la).is_some_and(|e| e.p == p);
            r.record(ok, || format!("P{la} depends on the linear extension"));
        }
    }
    r
}

fn sign_for(la: &Partition) -> crate::scalar::RatFun {
    crate::scalar::RatFun::from_int(if la.size().is_multiple_of(2) { 1 } else { -1 })
}

/// Fixed-point pairing against `(−1)^{|λ|}⟨P_λ, P_λ⟩`, closed-form norms,
/// and the Euler-class closed forms.
pub fn norms_bridge(n: usize) -> Vec<CheckReport> {
    let mut bridge = CheckReport::new("fixed-point pairing equals signed Jack norm");
    let mut closed = CheckReport::new("closed-form norm equals Gram-Schmidt norm");
    for d in 0..=n {
        for (la, e) in jack_table(d).entries() {
            let ip = inner_product(&e.p, &e.p).expect("homogeneous");
            let f = f_pairing(la, la);
            let expected = &sign_for(la) * &ip;
            bridge.record(f.as_ref().is_ok_and(|v| *v == expected), || {
                format!("F{la}: localization gives {f:?}, algebra gives {expected}")
            });
            let c = norm_closed_form(la);
            closed.record(c == ip, || {
                format!("norm of P{la}: closed form {c}, inner product {ip}")
            });
        }
    }
    vec![bridge, closed, euler_closed_forms(n)]
}

/// Weight products against the closed product formulas.
pub fn euler_closed_forms(n: usize) -> CheckReport {
    let mut r = CheckReport::new("euler classes match closed forms");
    for d in 0..=n {
        for la in enumerate_partitions(d) {
            match euler_classes(&la) {
                Ok(data) => {
                    let t = tangent_euler_closed_form(&la);
                    let p = positive_normal_euler_closed_form(&la);
                    r.record(data.euler_total == t, || {
                        format!("e(T) at {la}: {:?} vs {t:?}", data.euler_total)
                    });
                    r.record(data.euler_pos == p, || {
                        format!("e(N>0) at {la}: {:?} vs {p:?}", data.euler_pos)
                    });
                    r.record(
                        data.euler_pos.mul(&data.euler_nonpos) == data.euler_total,
                        || format!("e(T) != e(N>0) e(N<=0) at {la}"),
                    );
                }
                Err(e) => r.record(false, || format!("{la}: {e}")),
            }
        }
    }
    r
}

pub fn goettsche(n: usize) -> CheckReport {
    let mut r = CheckReport::new("goettsche count equals partition count");
    for (k, d) in goettsche_dim(n).into_iter().enumerate() {
        let count = enumerate_partitions(k).len();
        r.record(d == count.into(), || {
            format!("q^{k}: series gives {d}, enumeration gives {count}")
        });
    }
    r
}

/// `p_mult_m` against brute-force expansion for `i + |λ| ≤ n`.
pub fn multiplication_rule(n: usize) -> CheckReport {
    let mut r = CheckReport::new("p_i m_lambda agrees with polynomial expansion");
    for total in 1..=n {
        for i in 1..=total {
            for la in enumerate_partitions(total - i) {
                let fast: std::collections::BTreeMap<Partition, BigInt> = p_mult_m(i, &la)
                    .into_iter()
                    .map(|(k, v)| (k, v.into()))
                    .collect();
                let slow = brute_force_p_mult_m(i, &la);
                r.record(fast == slow, || {
                    format!("p_{i} m{la}: rule {fast:?}, expansion {slow:?}")
                });
            }
        }
    }
    r
}

/// `P_λ` at α = 1 against the alternant formula for `s_λ`.
pub fn schur_specialization(n: usize) -> CheckReport {
    let mut r = CheckReport::new("jack at alpha = 1 equals schur");
    let one = BigRat::one();
    for d in 0..=n {
        for (la, e) in jack_table(d).entries() {
            let jack = e.p.eval_alpha(&one);
            let schur: std::collections::BTreeMap<Partition, BigRat> = schur_by_alternants(la)
                .into_iter()
                .map(|(k, v)| (k, BigRat::from_integer(v)))
                .collect();
            r.record(jack.as_ref().is_ok_and(|j| *j == schur), || {
                format!("P{la} at alpha = 1 is {jack:?}, s{la} is {schur:?}")
            });
        }
    }
    r
}

/// Symbolic `P_λ` specialized at `a` equals Gram-Schmidt run over ℚ at `a`.
pub fn specialization_commutes(n: usize, points: &[BigRat]) -> CheckReport {
    let mut r = CheckReport::new("specialization commutes with gram-schmidt");
    for a in points {
        for d in 0..=n {
            let numeric = gram_schmidt_specialized(d, a);
            for (la, e) in jack_table(d).entries() {
                let symbolic = e.p.eval_alpha(a);
                let ok = match (&symbolic, &numeric) {
                    (Ok(s), Ok(num)) => num.get(la) == Some(s),
                    _ => false,
                };
                r.record(ok, || {
                    format!("P{la} at alpha = {a} disagrees with the rational computation")
                });
            }
        }
    }
    r
}

fn oracle(n: usize) -> Vec<CheckReport> {
    let points = [
        BigRat::one(),
        BigRat::from_integer(2.into()),
        BigRat::new(1.into(), 2.into()),
    ];
    vec![
        multiplication_rule(n),
        schur_specialization(n),
        specialization_commutes(n, &points),
    ]
}
