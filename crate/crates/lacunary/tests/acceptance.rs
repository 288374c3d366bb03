//! The acceptance gate: one test per criterion. Each test prints exactly
//! one `acceptance criterion N: pass/FAIL` line and asserts it, with the
//! runtime budgets pinned as constants below.
//!
//! Row counts are recomputed here by independent counting (primes times
//! applicable sub-cases) so a silently skipped cell cannot masquerade as a
//! pass.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use lacunary::checks::{run_check, run_suite, CheckParams, Report, RunOptions, Status};
use lacunary::padic::{primes_in_range, PrimeRange};
use lacunary::sums::{
    binomial_lacunary_all, harmonic_exact, harmonic_lacunary, rational_mod, ClassSpec,
};

const LEHMER_SWEEP_BUDGET: Duration = Duration::from_secs(30);
const GRID_SWEEP_BUDGET: Duration = Duration::from_secs(120);
const IDENTITY_BUDGET: Duration = Duration::from_secs(60);

fn report_line(criterion: u32, ok: bool, detail: &str) {
    println!(
        "acceptance criterion {criterion}: {} — {detail}",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {criterion} failed: {detail}");
}

fn ids(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn pass_count(report: &Report, id: &str) -> u64 {
    report
        .results
        .iter()
        .filter(|r| r.check == id && r.status == Status::Pass)
        .count() as u64
}

fn clean(report: &Report) -> bool {
    report.summary.fail == 0 && report.summary.divfail == 0
}

#[test]
fn criterion_1_lehmer_family_sweep_to_2003() {
    let range = PrimeRange::new(5, 2003).unwrap();
    let n_primes = primes_in_range(&range).unwrap().len() as u64;
    let checks = ids(&[
        "lehmer_half",
        "lehmer2",
        "lehmer3",
        "lehmer4",
        "lehmer6",
        "t1_m2",
    ]);
    let opts = RunOptions {
        jobs: 1,
        ..Default::default()
    };
    let start = Instant::now();
    let report = run_suite(&range, &[], Some(&checks), &opts).unwrap();
    let elapsed = start.elapsed();
    let ok = clean(&report)
        && report.summary.skip == 0
        && report.summary.pass == 6 * n_primes
        && elapsed < LEHMER_SWEEP_BUDGET;
    report_line(
        1,
        ok,
        &format!(
            "six half/step congruences, {n_primes} primes in 5..=2003, single-threaded, \
             {} passing rows in {elapsed:.2?} (budget {LEHMER_SWEEP_BUDGET:?})",
            report.summary.pass
        ),
    );
}

#[test]
fn criterion_2_grid_sweep_to_499() {
    let range = PrimeRange::new(5, 499).unwrap();
    let primes = primes_in_range(&range).unwrap();
    let moduli: Vec<u64> = (2..=12).collect();
    let checks = ids(&[
        "t1",
        "t2",
        "firstorder",
        "c1e1",
        "c1e2",
        "c2e1",
        "c2e2",
        "s_hsq",
    ]);
    // Independent count of the rows every applicable cell must contribute.
    let mut expected_pass = 0u64;
    for &p in &primes {
        for &m in &moduli {
            if m % p == 0 {
                continue;
            }
            expected_pass += 1 + 1; // t1, t2
            expected_pass += m + m; // firstorder, c1e1: one row per class
            expected_pass += 1 + 1; // c1e2, c2e1
            if m % 2 == 0 {
                expected_pass += 1; // c2e2 applies to even m only
            }
            expected_pass += 2; // s_hsq: full and restricted variants
        }
    }
    let start = Instant::now();
    let report = run_suite(&range, &moduli, Some(&checks), &RunOptions::default()).unwrap();
    let elapsed = start.elapsed();
    let ok = clean(&report)
        && report.summary.pass == expected_pass
        && elapsed < GRID_SWEEP_BUDGET;
    report_line(
        2,
        ok,
        &format!(
            "theorem and corollary grid over {} primes x m in 2..=12, {} passing rows \
             (expected {expected_pass}) in {elapsed:.2?} (budget {GRID_SWEEP_BUDGET:?})",
            primes.len(),
            report.summary.pass
        ),
    );
}

#[test]
fn criterion_3_sequence_flavored_sweeps_to_1009() {
    let mut ok = true;
    let mut details = Vec::new();

    let t3_range = PrimeRange::new(7, 1009).unwrap();
    let t3_primes = primes_in_range(&t3_range).unwrap().len() as u64;
    let t3 = run_suite(&t3_range, &[], Some(&ids(&["t3"])), &RunOptions::default()).unwrap();
    ok &= clean(&t3) && t3.summary.skip == 0 && pass_count(&t3, "t3") == t3_primes;
    details.push(format!("t3 on {t3_primes} primes 7..=1009"));

    let t4_range = PrimeRange::new(5, 1009).unwrap();
    let t4_primes = primes_in_range(&t4_range).unwrap().len() as u64;
    let t4 = run_suite(&t4_range, &[], Some(&ids(&["t4"])), &RunOptions::default()).unwrap();
    ok &= clean(&t4) && t4.summary.skip == 0 && pass_count(&t4, "t4") == t4_primes;
    details.push(format!("t4 on {t4_primes} primes 5..=1009"));

    let group_range = PrimeRange::new(3, 1009).unwrap();
    let n3 = primes_in_range(&group_range).unwrap().len() as u64; // odd primes from 3
    let group = run_suite(
        &group_range,
        &[],
        Some(&ids(&[
            "sunsun_F",
            "williams",
            "sun93_pell",
            "hp26",
            "pell_half",
            "pelllucas_half",
            "fermat_split",
        ])),
        &RunOptions::default(),
    )
    .unwrap();
    // Applicability carve-outs: p = 5 for the Fibonacci-quotient pair,
    // p = 3 for everything stated only for p > 3.
    ok &= clean(&group)
        && pass_count(&group, "sunsun_F") == 3 * (n3 - 1)
        && pass_count(&group, "williams") == n3 - 1
        && pass_count(&group, "sun93_pell") == 3 * n3
        && pass_count(&group, "hp26") == n3 - 1
        && pass_count(&group, "pell_half") == 2 * (n3 - 1)
        && pass_count(&group, "pelllucas_half") == 2 * (n3 - 1)
        && pass_count(&group, "fermat_split") == n3 - 1;
    details.push(format!("seven mod-p companions on {n3} odd primes 3..=1009"));

    let r5_range = PrimeRange::new(7, 499).unwrap();
    let r5_primes = primes_in_range(&r5_range).unwrap().len() as u64;
    let r5 = run_suite(&r5_range, &[], Some(&ids(&["remark5_alt"])), &RunOptions::default())
        .unwrap();
    ok &= clean(&r5) && r5.summary.skip == 0 && pass_count(&r5, "remark5_alt") == r5_primes;
    details.push(format!("remark5_alt on {r5_primes} primes 7..=499"));

    report_line(3, ok, &details.join("; "));
}

#[test]
fn criterion_4_spot_anchors() {
    let anchors = [
        ("lehmer3", 5u64, "25", "13"),
        ("t3", 7, "49", "25"),
        ("t4", 11, "121", "81"),
    ];
    let mut ok = true;
    for (id, p, modulus, both_sides) in anchors {
        let rows = run_check(id, Some(p), &CheckParams::default()).unwrap();
        ok &= rows.len() == 1
            && rows[0].status == Status::Pass
            && rows[0].modulus == modulus
            && rows[0].lhs.as_deref() == Some(both_sides)
            && rows[0].rhs.as_deref() == Some(both_sides);
    }
    report_line(
        4,
        ok,
        "lehmer3@5 = 13 (mod 25), t3@7 = 25 (mod 49), t4@11 = 81 (mod 121)",
    );
}

#[test]
fn criterion_5_exact_identity_grids() {
    let start = Instant::now();
    let mut ok = true;
    let mut mismatches = 0u64;

    // Reflection, conversion and Pascal invariants for the signed and
    // unsigned class sums, exhaustively for n <= 60 and m <= 12.
    for m in 2..=12u64 {
        let mut prev_signed: Option<Vec<BigInt>> = None;
        for n in 0..=60u64 {
            let signed = binomial_lacunary_all(m, n, true).unwrap();
            let unsigned = binomial_lacunary_all(m, n, false).unwrap();
            let doubled = binomial_lacunary_all(2 * m, n, false).unwrap();
            for r in 0..m as usize {
                let mirror = (((n % m) + m) as usize - r) % m as usize;
                if unsigned[mirror] != unsigned[r] {
                    mismatches += 1;
                }
                let expect = if n % 2 == 0 {
                    signed[r].clone()
                } else {
                    -&signed[r]
                };
                if signed[mirror] != expect {
                    mismatches += 1;
                }
                let converted = if m % 2 == 0 {
                    unsigned[r].clone()
                } else {
                    &doubled[r] - &doubled[r + m as usize]
                };
                let converted = if r % 2 == 0 { converted } else { -converted };
                if signed[r] != converted {
                    mismatches += 1;
                }
                if let Some(prev) = &prev_signed {
                    let up_left = &prev[(r + m as usize - 1) % m as usize];
                    if signed[r] != &prev[r] - up_left {
                        mismatches += 1;
                    }
                }
            }
            prev_signed = Some(signed);
        }
    }
    ok &= mismatches == 0;

    // Exact identity checks from the registry (convolution grid, closed
    // forms, diagonals, sequence identities), plus per-prime diagonals on a
    // small range to exercise the mixed cell kind.
    let fixed = run_suite(
        &PrimeRange::new(5, 31).unwrap(),
        &[],
        Some(&ids(&[
            "lemma2_identity",
            "closed_m10",
            "closed_m8",
            "tstar_diag",
            "seq_identities",
        ])),
        &RunOptions::default(),
    )
    .unwrap();
    ok &= clean(&fixed) && fixed.summary.skip == 0 && fixed.summary.pass > 3000;

    let elapsed = start.elapsed();
    ok &= elapsed < IDENTITY_BUDGET;
    report_line(
        5,
        ok,
        &format!(
            "row invariants (n <= 60, m <= 12, {mismatches} mismatches), convolution grid, \
             closed forms and sequence identities: {} rows in {elapsed:.2?} \
             (budget {IDENTITY_BUDGET:?})",
            fixed.summary.pass
        ),
    );
}

#[test]
fn criterion_6_wolstenholme_family() {
    let wide = PrimeRange::new(5, 2003).unwrap();
    let wide_primes = primes_in_range(&wide).unwrap().len() as u64;
    let a = run_suite(
        &wide,
        &[],
        Some(&ids(&["wolstenholme_sum", "binom2pp"])),
        &RunOptions::default(),
    )
    .unwrap();
    let narrow = PrimeRange::new(5, 499).unwrap();
    let narrow_primes = primes_in_range(&narrow).unwrap().len() as u64;
    let b = run_suite(
        &narrow,
        &[],
        Some(&ids(&["wolstenholme_binom"])),
        &RunOptions::default(),
    )
    .unwrap();
    let ok = clean(&a)
        && a.summary.skip == 0
        && pass_count(&a, "wolstenholme_sum") == wide_primes
        && pass_count(&a, "binom2pp") == wide_primes
        && clean(&b)
        && b.summary.skip == 0
        && pass_count(&b, "wolstenholme_binom") == 10 * narrow_primes;
    report_line(
        6,
        ok,
        &format!(
            "harmonic and central-binomial sweeps over {wide_primes} primes to 2003; \
             ten C(mp,np) rows per prime over {narrow_primes} primes to 499"
        ),
    );
}

#[test]
fn criterion_7_modular_harmonic_sums_match_exact_rationals() {
    let primes = primes_in_range(&PrimeRange::new(3, 97).unwrap()).unwrap();
    let mut compared = 0u64;
    let mut mismatches = 0u64;
    for &p in &primes {
        for m in 2..=6u64 {
            for r in 0..m {
                for e in 1..=2u32 {
                    for signed in [false, true] {
                        let spec = ClassSpec::new(r as i64, m, p - 1).unwrap();
                        let modular = harmonic_lacunary(&spec, p, e, signed).unwrap();
                        let exact = harmonic_exact(&spec, signed).unwrap();
                        if modular != rational_mod(&exact, p, e).unwrap() {
                            mismatches += 1;
                        }
                        compared += 1;
                    }
                }
            }
        }
    }
    let ok = mismatches == 0 && compared > 0;
    report_line(
        7,
        ok,
        &format!(
            "{compared} modular class harmonic sums vs exact rationals \
             (p <= 97, m <= 6, all classes, e in {{1,2}}), {mismatches} mismatches"
        ),
    );
}

#[test]
fn criterion_8_report_only_statements_stay_exit_neutral() {
    let range = PrimeRange::new(5, 7).unwrap();
    let moduli = [2u64, 3];
    let mut ok = true;

    let without = run_suite(&range, &moduli, None, &RunOptions::default()).unwrap();
    ok &= without
        .results
        .iter()
        .all(|r| r.check != "closed_m10_c4" && r.check != "l1e2_general_a");

    let opts = RunOptions {
        report_only_exceptions: true,
        ..Default::default()
    };
    let with = run_suite(&range, &moduli, None, &opts).unwrap();
    let c4_fail_at_5 = with.results.iter().any(|r| {
        r.check == "closed_m10_c4" && r.sub.as_deref() == Some("n=5") && r.status == Status::Fail
    });
    ok &= c4_fail_at_5;
    ok &= with.results.iter().any(|r| r.check == "l1e2_general_a");
    // The visible mismatch must not flip the run.
    ok &= with.passed();

    let explicit = run_suite(
        &range,
        &moduli,
        Some(&ids(&["l1e2_general_a"])),
        &RunOptions::default(),
    )
    .unwrap();
    ok &= !explicit.results.is_empty()
        && explicit.results.iter().all(|r| r.check == "l1e2_general_a");

    report_line(
        8,
        ok,
        "fifth step-10 class reported (n=5 mismatch visible) without failing the run; \
         general-weight row-2p readings appear only under the exceptions flag or by name",
    );
}
