//! Acceptance gate. Every criterion is an exact identity between canonical
//! forms; there is no numeric tolerance anywhere. Runs without the libtest
//! harness so each criterion prints one PASS/FAIL line.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hilbjack::localization::{euler_classes, f_pairing, goettsche_dim};
use hilbjack::oracle::{brute_force_p_mult_m, schur_by_alternants};
use hilbjack::symfunc::{commutator_check, p_mult_m};
use hilbjack::{
    enumerate_partitions, inner_product, jack_J, jack_P, AlphaPoly, BigRat, CheckReport, Partition,
    RatFun,
};
use num_bigint::BigInt;
use num_traits::One;

const JACK_DEGREE: usize = 8;
const ORACLE_DEGREE: usize = 6;
const GOETTSCHE_DEGREE: usize = 30;

fn partitions_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (0..=n).flat_map(enumerate_partitions)
}

/// 1. Strict dominance triangularity and pairwise orthogonality.
fn jack_table() -> CheckReport {
    let mut r = CheckReport::new("jack triangularity + orthogonality, |lambda| <= 8");
    for n in 0..=JACK_DEGREE {
        let ps: Vec<(Partition, _)> = enumerate_partitions(n)
            .into_iter()
            .map(|la| {
                let p = jack_P(&la);
                (la, p)
            })
            .collect();
        for (la, p) in &ps {
            r.record(p.coeff(la).is_one(), || {
                format!("P{la} is not monic in m{la}")
            });
            for mu in p.terms().keys().filter(|mu| *mu != la) {
                r.record(mu.dominated_by(la) && mu != la, || {
                    format!("P{la} has an m{mu} term")
                });
            }
        }
        for (i, (la, p)) in ps.iter().enumerate() {
            for (mu, q) in &ps[i + 1..] {
                let ip = inner_product(p, q).unwrap();
                r.record(ip.is_zero(), || format!("<P{la}, P{mu}> = {ip}"));
            }
        }
    }
    r
}

/// 2. Localization pairing against the algebraic norm.
fn norm_bridge() -> CheckReport {
    let mut r = CheckReport::new("f_pairing(la, la) = (-1)^|la| <P_la, P_la>, |lambda| <= 8");
    for la in partitions_up_to(JACK_DEGREE) {
        let p = jack_P(&la);
        let ip = inner_product(&p, &p).unwrap();
        let signed = if la.size() % 2 == 0 { ip } else { -ip };
        let loc = f_pairing(&la, &la).unwrap();
        r.record(loc == signed, || {
            format!("{la}: localization {loc}, algebra {signed}")
        });
    }
    r
}

/// 3. Weight products against the product formulas over cells.
fn euler_closed_forms() -> CheckReport {
    let mut r =
        CheckReport::new("euler classes e(T), e(N>0) match product formulas, |lambda| <= 8");
    for la in partitions_up_to(JACK_DEGREE) {
        let n = la.size() as i64;
        let conj = la.conjugate();
        let mut tangent = AlphaPoly::one();
        let mut positive = AlphaPoly::one();
        for c in la.cells() {
            let a = (la.part(c.row) - c.col) as i64;
            let l = (conj.part(c.col) - c.row) as i64;
            let up = AlphaPoly::linear(a + 1, l);
            tangent = &(&tangent * &AlphaPoly::linear(-a, -l - 1)) * &up;
            positive = &positive * &up;
        }
        let d = euler_classes(&la).unwrap();
        r.record(
            d.euler_total.coeff == RatFun::from(tangent.clone()) && d.euler_total.u_pow == 2 * n,
            || format!("e(T) at {la}: {:?}, formula {tangent}", d.euler_total),
        );
        r.record(
            d.euler_pos.coeff == RatFun::from(positive.clone()) && d.euler_pos.u_pow == n,
            || format!("e(N>0) at {la}: {:?}, formula {positive}", d.euler_pos),
        );
    }
    r
}

/// 4. Every augmented-monomial coefficient of J_λ lies in ℤ_{≥0}[α].
fn positivity() -> CheckReport {
    let mut r =
        CheckReport::new("J_lambda coefficients in Z>=0[alpha] (mtilde basis), |lambda| <= 8");
    for la in partitions_up_to(JACK_DEGREE) {
        for (mu, c) in jack_J(&la).terms() {
            r.record(c.is_nonneg_int_poly(), || {
                format!("J{la} on mtilde{mu}: {c}")
            });
        }
    }
    r
}

/// 5. Commutator relations, power commutators and adjointness.
fn heisenberg() -> CheckReport {
    let mut r = CheckReport::new("heisenberg relations on Fock space, degree <= 8");
    for c in commutator_check(JACK_DEGREE) {
        r.cases += c.cases;
        if r.counterexample.is_none() && (!c.passed() || c.cases == 0) {
            r.counterexample = Some(c.to_string());
        }
    }
    r
}

/// 6. Multiplication rule against brute-force expansion.
fn multiplication_rule() -> CheckReport {
    let mut r = CheckReport::new("p_mult_m equals brute-force expansion, i + |lambda| <= 6");
    for total in 1..=ORACLE_DEGREE {
        for i in 1..=total {
            for la in enumerate_partitions(total - i) {
                let rule: BTreeMap<Partition, BigInt> = p_mult_m(i, &la)
                    .into_iter()
                    .map(|(k, v)| (k, BigInt::from(v)))
                    .collect();
                let expanded = brute_force_p_mult_m(i, &la);
                r.record(rule == expanded, || {
                    format!("p_{i} m{la}: {rule:?} vs {expanded:?}")
                });
            }
        }
    }
    r
}

/// 7. Göttsche generating function against enumeration.
fn goettsche() -> CheckReport {
    let mut r = CheckReport::new("prod (1-q^m)^-1 coefficients equal partition counts, n <= 30");
    let dims = goettsche_dim(GOETTSCHE_DEGREE);
    r.record(dims.len() == GOETTSCHE_DEGREE + 1, || {
        format!("{} coefficients", dims.len())
    });
    for (n, d) in dims.iter().enumerate() {
        let count = enumerate_partitions(n).len();
        r.record(*d == count.into(), || format!("q^{n}: {d} vs {count}"));
    }
    r
}

/// 8. α = 1 against the ratio-of-alternants Schur function.
fn schur() -> CheckReport {
    let mut r = CheckReport::new("P_lambda at alpha = 1 equals alternant Schur, |lambda| <= 6");
    let one = BigRat::one();
    for la in partitions_up_to(ORACLE_DEGREE) {
        let jack = jack_P(&la).eval_alpha(&one).unwrap();
        let schur: BTreeMap<Partition, BigRat> = schur_by_alternants(&la)
            .into_iter()
            .map(|(k, v)| (k, BigRat::from_integer(v)))
            .collect();
        r.record(jack == schur, || format!("{la}: {jack:?} vs {schur:?}"));
    }
    r
}

type Criterion = (u32, fn() -> CheckReport, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, jack_table, Duration::from_secs(120)),
        (2, norm_bridge, Duration::from_secs(60)),
        (3, euler_closed_forms, Duration::from_secs(10)),
        (4, positivity, Duration::from_secs(120)),
        (5, heisenberg, Duration::from_secs(60)),
        (6, multiplication_rule, Duration::from_secs(60)),
        (7, goettsche, Duration::from_secs(1)),
        (8, schur, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (id, run, budget) in criteria {
        let start = Instant::now();
        let report = run();
        let elapsed = start.elapsed();
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {id}: {verdict} {} [{} cases, {:.2?}, budget {:?}]",
            report.name, report.cases, elapsed, budget
        );
        if let Some(c) = &report.counterexample {
            println!("    first counterexample: {c}");
        }
        if elapsed > budget {
            println!("    note: exceeded the runtime budget");
        }
        if !report.passed() {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
