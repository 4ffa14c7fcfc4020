//! One line per acceptance criterion. Runs without the test harness so the lines always print.
//!
//! Criteria listed in `KNOWN_RED` are expected to fail for the reasons given there; the run
//! fails if any other criterion fails, or if a known-red one unexpectedly passes.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use farey_gaps::cli::verify::{run_suite, SuiteReport, VerifyOptions};
use farey_gaps::empirical::{scan, GapHistogram, ScanConfig};
use farey_gaps::farey_triangle::{region_of, single_area};
use farey_gaps::proportions::{
    match_printed, mean_gap, nu2_closed, nu3_closed, nu3_tail_bound, nu_closed_form,
    nu_from_enumeration, numeric_eval, NuResult, Route, SymbolicValue,
};
use farey_gaps::reference::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

const ENUM_LIMIT: Duration = Duration::from_secs(60);
const TABLE_LIMIT: Duration = Duration::from_secs(5 * 60);
const SMALL_SCAN_LIMIT: Duration = Duration::from_secs(30);
const LARGE_SCAN_LIMIT: Duration = Duration::from_secs(30 * 60);
/// Absolute tolerance between a printed decimal and the exact value.
const DIGIT_TOL: f64 = 1e-9;
const TAIL_R: usize = 200;
/// Digits used when comparing transcendental sums against rational tail bounds.
const SUM_DIGITS: usize = 40;

/// Criterion 10: the printed count for `r = 2` (25 653 970) disagrees with the scan
/// (25 653 172); the printed ratio agrees with the scanned count, so the literal table
/// cannot be matched bit-exactly.
const KNOWN_RED: &[usize] = &[10];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn sym(row: &SymbolicRow) -> SymbolicValue {
    let p = |(n, d): (i64, i64)| q(n, d);
    SymbolicValue::new(p(row.rational), p(row.pi_sqrt3), p(row.ln3), p(row.ln2))
}

fn decimal(s: &str) -> BigRational {
    let neg = s.starts_with('-');
    let (int, frac) = s.trim_start_matches('-').split_once('.').unwrap_or((s, ""));
    let mag: BigInt = format!("{int}{frac}").parse().expect("decimal");
    let v = BigRational::new(mag, BigInt::from(10u32).pow(frac.len() as u32));
    if neg {
        -v
    } else {
        v
    }
}

fn close_to_printed(v: &SymbolicValue, printed: &str) -> bool {
    let diff = (decimal(&numeric_eval(v, 20)) - decimal(printed)).abs();
    diff < BigRational::from_float(DIGIT_TOL).expect("finite")
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn suite(name: &str) -> SuiteReport {
    run_suite(name, &VerifyOptions::default()).expect("known suite")
}

fn suite_outcome(reports: &[SuiteReport]) -> Outcome {
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| !c.passed)
                .map(move |c| format!("{}: {} ({})", r.suite, c.name, c.detail))
        })
        .collect();
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    if failed.is_empty() {
        outcome(true, format!("{checks} checks"))
    } else {
        outcome(false, failed.join("; "))
    }
}

fn exact_of(res: &NuResult) -> SymbolicValue {
    res.exact().cloned().expect("exact route")
}

fn c1() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (r, num, den) in [(6usize, 3089i64, 85085i64), (7, 54097, 3879876)] {
        let (res, t) = timed(|| nu_from_enumeration(r, 3, 0).expect("enumeration"));
        let good = res.route == Route::Enum
            && exact_of(&res) == SymbolicValue::from_rational(q(num, den))
            && t < ENUM_LIMIT;
        ok &= good;
        parts.push(format!(
            "nu({r}) = {} in {:.2}s",
            exact_of(&res),
            t.as_secs_f64()
        ));
    }
    outcome(ok, parts.join(", "))
}

fn c2() -> Outcome {
    let mut bad = Vec::new();
    for row in TERNARY_SMALL.iter().filter(|r| r.r <= 5) {
        let got = exact_of(&nu_from_enumeration(row.r, 3, 0).expect("enumeration"));
        if got != sym(row)
            || !close_to_printed(&got, row.decimal)
            || !match_printed(&got, row.decimal).matches()
        {
            bad.push(format!("r={}: {got} vs {}", row.r, row.decimal));
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            "r = 1..5 coefficient-wise and to all printed digits".into()
        } else {
            bad.join("; ")
        },
    )
}

fn c3() -> Outcome {
    let (bad, t) = timed(|| {
        let mut bad = Vec::new();
        for (r, num, den, dec) in PROPORTION_TABLE {
            let want = SymbolicValue::from_rational(BigRational::new(num.into(), den.into()));
            let closed = exact_of(&nu_closed_form(r, 3, 0).expect("closed form"));
            let enumerated = exact_of(&nu_from_enumeration(r, 3, 0).expect("enumeration"));
            if closed != want || enumerated != want || !match_printed(&want, dec).matches() {
                bad.push(r);
            }
        }
        bad
    });
    outcome(
        bad.is_empty() && t < TABLE_LIMIT,
        format!(
            "{} rows, {} mismatched, {:.2}s",
            PROPORTION_TABLE.len(),
            bad.len(),
            t.as_secs_f64()
        ),
    )
}

fn c4() -> Outcome {
    let mut bad = Vec::new();
    for r in 1..=16usize {
        let got = exact_of(&nu_from_enumeration(r, 2, 0).expect("enumeration"));
        let good = match r {
            1..=3 => got == sym(&BINARY_SMALL[r - 1]),
            4 => got == SymbolicValue::from_rational(q(2, 45)),
            _ => {
                let r = r as i64;
                let (_, den, dec) = BINARY_LIST
                    .iter()
                    .find(|e| e.0 == r as usize)
                    .copied()
                    .expect("listed");
                got == SymbolicValue::from_rational(q(8, (2 * r - 3) * (2 * r - 1) * (2 * r + 1)))
                    && den as i64 == (2 * r - 3) * (2 * r - 1) * (2 * r + 1)
                    && match_printed(&got, dec).matches()
            }
        };
        if !good || got != nu2_closed(r) {
            bad.push(r);
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            "r = 1..16".to_string()
        } else {
            format!("failed r = {bad:?}")
        },
    )
}

fn c5() -> Outcome {
    let bad: Vec<u64> = (1..=50u64)
        .filter(|&k| {
            let want = if k == 1 {
                q(1, 6)
            } else {
                q(4, (k * (k + 1) * (k + 2)) as i64)
            };
            region_of(&[k]).area() != want || single_area(k) != want
        })
        .collect();
    let mut sum = BigRational::zero();
    let mut partition_bad = Vec::new();
    for k in 1..=100i64 {
        sum += region_of(&[k as u64]).area();
        if sum != q(1, 2) - q(2, (k + 1) * (k + 2)) {
            partition_bad.push(k);
        }
    }
    outcome(
        bad.is_empty() && partition_bad.is_empty(),
        format!("area mismatches {bad:?}, partition mismatches {partition_bad:?}"),
    )
}

fn c11() -> Outcome {
    let wanted = [
        ("identities", None),
        ("lemma7", Some("reversal preserves area")),
        ("trees", Some("children tile a random non-empty parent")),
        ("trees", Some("area conservation")),
        ("scan-table", Some("conservation on random small scans")),
    ];
    let mut failed = Vec::new();
    let mut cases = Vec::new();
    let mut cache: Vec<SuiteReport> = Vec::new();
    for (name, check) in wanted {
        if !cache.iter().any(|r| r.suite == name) {
            cache.push(suite(name));
        }
        let rep = cache.iter().find(|r| r.suite == name).unwrap();
        let selected: Vec<_> = rep
            .checks
            .iter()
            .filter(|c| check.map_or(true, |p| c.name.contains(p)))
            .collect();
        if selected.is_empty() {
            failed.push(format!("{name}: no check named {check:?}"));
        }
        for c in selected {
            if !c.passed {
                failed.push(format!("{name}: {} ({})", c.name, c.detail));
            }
            cases.push(format!("{}: {}", c.name, c.detail));
        }
    }
    let big_enough = [
        "mirror symmetry",
        "splitting at a cut",
        "determinant identity",
        "last-index increment",
        "reversal preserves area",
        "children tile",
        "random small scans",
    ]
    .iter()
    .all(|name| {
        cases.iter().any(|c| {
            c.contains(name)
                && c.rsplit(": ")
                    .next()
                    .and_then(|d| d.split(' ').next())
                    .and_then(|n| n.parse::<usize>().ok())
                    .is_some_and(|n| n >= 1000)
        })
    });
    if !big_enough {
        failed.push("a property family ran fewer than 1000 cases".into());
    }
    outcome(
        failed.is_empty(),
        if failed.is_empty() {
            format!(
                "{} checks, seed {}",
                cases.len(),
                VerifyOptions::default().seed
            )
        } else {
            failed.join("; ")
        },
    )
}

fn c12() -> Outcome {
    let mut s = SymbolicValue::zero();
    let mut w = SymbolicValue::zero();
    for r in 1..=TAIL_R {
        let v = nu3_closed(r);
        w += v.clone() * &BigRational::from_integer(BigInt::from(r + 1));
        s += v;
    }
    let gap = BigRational::one() - decimal(&numeric_eval(&s, SUM_DIGITS));
    let wgap = mean_gap(3, 0) - decimal(&numeric_eval(&w, SUM_DIGITS));
    let tail = nu3_tail_bound(TAIL_R, false);
    let wtail = nu3_tail_bound(TAIL_R, true);
    let ok = !gap.is_negative()
        && gap <= tail
        && !wgap.is_negative()
        && wgap <= wtail
        && mean_gap(3, 0) == q(4, 1);
    let f = |x: &BigRational| farey_gaps::proportions::to_f64(x);
    outcome(
        ok,
        format!(
            "1 - sum = {:.3e} <= {:.3e}; 4 - weighted = {:.3e} <= {:.3e}",
            f(&gap),
            f(&tail),
            f(&wgap),
            f(&wtail)
        ),
    )
}

struct ScanRun {
    q: u32,
    hist: GapHistogram,
    time: Duration,
}

fn scans() -> Vec<ScanRun> {
    SCAN_CANDIDATE_ORDERS
        .iter()
        .map(|&order| {
            let cfg = ScanConfig::new(order as u64, 3, 0, 40).expect("config");
            let (hist, time) = timed(|| scan(&cfg));
            ScanRun {
                q: order,
                hist,
                time,
            }
        })
        .collect()
}

/// Literal criterion 10. Its sub-facts are asserted separately in `scan_facts`.
fn c10(runs: &[ScanRun]) -> Outcome {
    let matching: Vec<&ScanRun> = runs
        .iter()
        .filter(|r| r.hist.coloured_total == SCAN_COLOURED_TOTAL)
        .collect();
    let totals: Vec<String> = runs
        .iter()
        .map(|r| {
            format!(
                "Q={} total {} in {:.1}s",
                r.q,
                r.hist.coloured_total,
                r.time.as_secs_f64()
            )
        })
        .collect();
    let timing = runs.iter().all(|r| {
        r.time
            <= if r.q <= 30_000 {
                SMALL_SCAN_LIMIT
            } else {
                LARGE_SCAN_LIMIT
            }
    });
    let [hit] = matching.as_slice() else {
        return outcome(false, format!("no unique order; {}", totals.join(", ")));
    };
    let wrong: Vec<String> = SCAN_TABLE
        .iter()
        .filter(|(r, n, _)| hit.hist.count(*r) != *n)
        .map(|(r, n, _)| format!("r={r}: scanned {} printed {n}", hit.hist.count(*r)))
        .collect();
    outcome(
        wrong.is_empty() && timing,
        format!(
            "identified Q = {} (label says 300000); {}; {}",
            hit.q,
            totals.join(", "),
            if wrong.is_empty() {
                "all 14 counts match".to_string()
            } else {
                wrong.join(", ")
            }
        ),
    )
}

/// What criterion 10 can still guarantee.
fn scan_facts(runs: &[ScanRun]) -> Vec<String> {
    let mut bad = Vec::new();
    let hit: Vec<&ScanRun> = runs
        .iter()
        .filter(|r| r.hist.coloured_total == SCAN_COLOURED_TOTAL)
        .collect();
    if hit.len() != 1 || hit[0].q != 30_000 {
        bad.push("Q = 30000 is not the unique order with the printed total".to_string());
        return bad;
    }
    let h = &hit[0].hist;
    for &(r, printed, ratio) in &SCAN_TABLE {
        let want = SCAN_TABLE_ERRATA
            .iter()
            .find(|e| e.0 == r)
            .map_or(printed, |e| e.1);
        let check = BigRational::new(h.count(r).into(), h.coloured_total.into());
        if h.count(r) != want || !farey_gaps::proportions::within_last_place(&check, ratio) {
            bad.push(format!("row r={r}"));
        }
    }
    for run in runs {
        if !run.hist.conservation_holds() {
            bad.push(format!("conservation at Q={}", run.q));
        }
        let limit = if run.q <= 30_000 {
            SMALL_SCAN_LIMIT
        } else {
            LARGE_SCAN_LIMIT
        };
        if run.time > limit {
            bad.push(format!("Q={} took {:.1}s", run.q, run.time.as_secs_f64()));
        }
    }
    bad
}

/// Reported, not asserted: the fitted constant in `|nu(Q;r) - nu(r)| <= C ln Q / Q`.
fn convergence_report() -> String {
    let exact: Vec<f64> = (1..=7).map(|r| nu3_closed(r).to_f64()).collect();
    let mut parts = Vec::new();
    for order in [1_000u64, 10_000, 100_000] {
        let h = scan(&ScanConfig::new(order, 3, 0, 10).expect("config"));
        let worst = (1..=7)
            .map(|r| (h.count(r) as f64 / h.coloured_total as f64 - exact[r - 1]).abs())
            .fold(0.0, f64::max);
        let c = worst * order as f64 / (order as f64).ln();
        parts.push(format!("Q={order}: max err {worst:.3e}, C = {c:.3}"));
    }
    parts.join("; ")
}

fn main() -> ExitCode {
    let names = [
        "exact nu(6), nu(7) by enumeration",
        "symbolic nu(1..5; 3, 0)",
        "proportion table 8 <= r <= 80",
        "binary case D = 2",
        "single-index areas and unit partition",
        "emptiness catalogues",
        "polygon families and tree leaves",
        "explicit polygon entries",
        "tuple catalogue",
        "empirical scan table",
        "property suites",
        "distributional sums",
    ];
    let runs = scans();
    let results: Vec<Outcome> = vec![
        c1(),
        c2(),
        c3(),
        c4(),
        c5(),
        suite_outcome(&[suite("lemma15")]),
        suite_outcome(&[suite("trees"), suite("appendix1")]),
        suite_outcome(&[suite("appendix1")]),
        suite_outcome(&[suite("appendix3")]),
        c10(&runs),
        c11(),
        c12(),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, res)) in names.iter().zip(&results).enumerate() {
        let id = i + 1;
        let red = KNOWN_RED.contains(&id);
        let tag = if res.passed { "PASS" } else { "FAIL" };
        let note = if red && !res.passed {
            " [known red]"
        } else {
            ""
        };
        println!("criterion {id:>2} {tag}{note}: {name}: {}", res.detail);
        if res.passed == red {
            unexpected.push(id);
        }
    }
    let facts = scan_facts(&runs);
    println!(
        "scan sub-facts: {}",
        if facts.is_empty() {
            "total, 13 printed counts, corrected r = 2 count, ratios, conservation, timing all hold"
                .to_string()
        } else {
            facts.join("; ")
        }
    );
    println!("convergence (reported only): {}", convergence_report());
    if unexpected.is_empty() && facts.is_empty() {
        println!(
            "acceptance: {} of 12 green, known red {KNOWN_RED:?}",
            12 - KNOWN_RED.len()
        );
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
