//! Named verification suites comparing computed sequences against the
//! bundled fixtures, with the index alignment of every comparison spelled
//! out where the check is built.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::binom::{binomial, stirling2};
use crate::builders::{chain, ferrers, v_poset};
use crate::error::{Error, Result};
use crate::extensions::ehr_series;
use crate::ferrers::{catalan_hankel, ferrers_det, narayana_hstar};
use crate::fixture::SequenceFixture;
use crate::grids::{grid_square_count, tower_series};
use crate::multiset::{multiset_descent_poly, sandwich_series, MultisetSpec};
use crate::ops::direct_product;
use crate::partitions::Partition;
use crate::poly::IntPoly;
use crate::products::{hexagon_tilings, macmahon_box, mk_formula};
use crate::series::EhrSeries;
use crate::stirling::second_order_eulerian_row;

pub const ALL_SUITES: &[&str] = &[
    "narayana-A001263",
    "boxes-table4",
    "A140934",
    "A008459",
    "A008517",
    "catalan-hankel",
    "A101093",
    "A103905",
    "A111910",
    "sandwich-tables",
    "grid-squares",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Mismatch { at: String, expected: String, got: String },
    Failed(String),
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub expected_source: String,
    pub got_source: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.outcome == Outcome::Pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => {
                    out.push_str(&format!(
                        "PASS {} expected={} got={}\n",
                        c.name, c.expected_source, c.got_source
                    ));
                }
                Outcome::Mismatch { at, expected, got } => {
                    out.push_str(&format!(
                        "FAIL {} expected={} got={} at={} ({} vs {})\n",
                        c.name, c.expected_source, c.got_source, at, expected, got
                    ));
                }
                Outcome::Failed(msg) => {
                    out.push_str(&format!(
                        "FAIL {} expected={} got={} error={}\n",
                        c.name, c.expected_source, c.got_source, msg
                    ));
                }
            }
        }
        let passed = self.checks.iter().filter(|c| c.outcome == Outcome::Pass).count();
        out.push_str(&format!("verify: {passed}/{} checks passed\n", self.checks.len()));
        out
    }
}

type CheckFn = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Check {
    name: String,
    expected_source: String,
    got_source: String,
    run: CheckFn,
}

impl Check {
    fn new(
        name: impl Into<String>,
        expected: impl Into<String>,
        got: impl Into<String>,
        run: CheckFn,
    ) -> Check {
        Check { name: name.into(), expected_source: expected.into(), got_source: got.into(), run }
    }
}

/// Compare a computed integer sequence against fixture entries
/// `fixture[base + i]` for i = 0..values.len().
fn against_fixture(fixture: &SequenceFixture, base: i64, values: &[BigInt]) -> Outcome {
    for (i, got) in values.iter().enumerate() {
        let index = base + i as i64;
        match fixture.get(index) {
            Some(expected) if expected == got => {}
            Some(expected) => {
                return Outcome::Mismatch {
                    at: format!("index {index}"),
                    expected: expected.to_string(),
                    got: got.to_string(),
                }
            }
            None => {
                return Outcome::Failed(format!("fixture {} has no index {index}", fixture.id))
            }
        }
    }
    Outcome::Pass
}

fn compare_values(pairs: &[(String, BigInt, BigInt)]) -> Outcome {
    for (at, expected, got) in pairs {
        if expected != got {
            return Outcome::Mismatch {
                at: at.clone(),
                expected: expected.to_string(),
                got: got.to_string(),
            };
        }
    }
    Outcome::Pass
}

fn load(dir: &Path, id: &str, suite: &str, checks: &mut Vec<Check>) -> Option<SequenceFixture> {
    match SequenceFixture::load(dir, id) {
        Ok(f) => Some(f),
        Err(e) => {
            checks.push(Check::new(
                format!("{suite}/fixture-{id}"),
                format!("fixture:{id}"),
                "load",
                Box::new(move || Outcome::Failed(format!("missing fixture: {e}"))),
            ));
            None
        }
    }
}

/// Start of row `row` in a triangle whose rows have lengths
/// `first_len, first_len+1, ...`, stored row-major from `base`.
fn triangle_row_start(base: i64, first_len: i64, row: i64) -> i64 {
    // rows are indexed from 1; row r has first_len + (r-1) entries
    let r = row - 1;
    base + r * first_len + r * (r - 1) / 2
}

fn suite_narayana(dir: &Path, checks: &mut Vec<Check>) {
    let Some(fx) = load(dir, "A001263", "narayana-A001263", checks) else { return };
    for k in 1..=8usize {
        let fx = fx.clone();
        checks.push(Check::new(
            format!("narayana-A001263/row-k={k}"),
            "fixture:A001263",
            "narayana_hstar",
            Box::new(move || {
                let row = match narayana_hstar(k) {
                    Ok(p) => p,
                    Err(e) => return Outcome::Failed(e.to_string()),
                };
                let start = triangle_row_start(1, 1, k as i64);
                against_fixture(&fx, start, row.coeffs())
            }),
        ));
    }
}

fn suite_boxes_table4(dir: &Path, checks: &mut Vec<Check>) {
    // (t, k, fixture id, fixture index of ehr(·, 0))
    let cases = [(2usize, 2usize, "A002415", 2i64), (2, 3, "A006542", 4), (3, 3, "A047819", 0)];
    for (t, k, id, base) in cases {
        let Some(fx) = load(dir, id, "boxes-table4", checks) else { continue };
        checks.push(Check::new(
            format!("boxes-table4/t={t}-k={k}-{id}"),
            format!("fixture:{id}"),
            "extension engine series",
            Box::new(move || {
                let shape = match Partition::rectangle(t, k) {
                    Ok(s) => s,
                    Err(e) => return Outcome::Failed(e.to_string()),
                };
                let series = match ehr_series(&ferrers(&shape)) {
                    Ok(s) => s,
                    Err(e) => return Outcome::Failed(e.to_string()),
                };
                let terms = (fx.last_index() - base + 1).min(16) as usize;
                against_fixture(&fx, base, &series.coefficients(terms))
            }),
        ));
    }
}

fn berselli_formula(n: usize) -> BigInt {
    let b = binomial(n as i64 + 11, 11);
    let v = BigRational::new(
        (BigInt::from(n as i64) + 12) * &b * &b,
        BigInt::from(12 * (n as i64 + 1)),
    );
    debug_assert!(v.is_integer());
    v.to_integer()
}

fn oblong_product(n: usize) -> BigInt {
    let mut acc = BigRational::one();
    for i in 1..=11i64 {
        let m = n as i64 + i;
        acc *= BigRational::new(BigInt::from(m * (m + 1)), BigInt::from(i * (i + 1)));
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
}

/// Narayana T(n, k) = C(n−1, k−1) C(n, k−1) / k.
fn narayana_entry(n: i64, k: i64) -> BigInt {
    binomial(n - 1, k - 1) * binomial(n, k - 1) / k
}

fn suite_a140934(dir: &Path, checks: &mut Vec<Check>) {
    let Some(fx) = load(dir, "A140934", "A140934", checks) else { return };
    let nmax = fx.last_index().min(20) as usize;
    let routes: Vec<(&str, Box<dyn Fn(usize) -> Result<BigInt> + Send + Sync>)> = vec![
        ("narayana series k=11", Box::new(|n| {
            Ok(EhrSeries::new(narayana_hstar(11)?, 23).coefficient(n))
        })),
        ("closed formula (n+12)/(12n+12)*C(n+11,11)^2", Box::new(|n| Ok(berselli_formula(n)))),
        ("box product 2x11", Box::new(|n| macmahon_box(2, 11, n))),
        ("oblong quotient product", Box::new(|n| Ok(oblong_product(n)))),
        ("Narayana column 12", Box::new(|n| Ok(narayana_entry(n as i64 + 12, 12)))),
    ];
    for (label, route) in routes {
        let fx = fx.clone();
        let slug = label.split_whitespace().next().unwrap_or("route").to_lowercase();
        checks.push(Check::new(
            format!("A140934/{slug}"),
            "fixture:A140934",
            label,
            Box::new(move || {
                let values: Result<Vec<BigInt>> = (0..=nmax).map(&route).collect();
                match values {
                    Ok(v) => against_fixture(&fx, 0, &v),
                    Err(e) => Outcome::Failed(e.to_string()),
                }
            }),
        ));
    }
}

fn suite_a008459(dir: &Path, checks: &mut Vec<Check>) {
    let Some(fx) = load(dir, "A008459", "A008459", checks) else { return };
    for k in 1..=8usize {
        let fx = fx.clone();
        checks.push(Check::new(
            format!("A008459/row-k={k}"),
            "fixture:A008459",
            "multiset descent polynomial of (k,k)",
            Box::new(move || {
                let spec = match MultisetSpec::uniform(2, k) {
                    Ok(s) => s,
                    Err(e) => return Outcome::Failed(e.to_string()),
                };
                let poly = match multiset_descent_poly(&spec) {
                    Ok(p) => p,
                    Err(e) => return Outcome::Failed(e.to_string()),
                };
                // rows 0..k stored row-major with lengths 1, 2, ...; the
                // polynomial has degree k so it covers all k+1 entries
                let start = triangle_row_start(0, 1, k as i64 + 1);
                let mut coeffs = poly.coeffs().to_vec();
                coeffs.resize(k + 1, BigInt::ZERO);
                against_fixture(&fx, start, &coeffs)
            }),
        ));
    }
}

fn suite_a008517(dir: &Path, checks: &mut Vec<Check>) {
    let Some(fx) = load(dir, "A008517", "A008517", checks) else { return };
    for k in 1..=8usize {
        let fx = fx.clone();
        checks.push(Check::new(
            format!("A008517/row-k={k}"),
            "fixture:A008517",
            "second-order Eulerian recurrence",
            Box::new(move || match second_order_eulerian_row(k) {
                Ok(row) => against_fixture(&fx, triangle_row_start(1, 1, k as i64), &row),
                Err(e) => Outcome::Failed(e.to_string()),
            }),
        ));
    }
    for k in 1..=6usize {
        checks.push(Check::new(
            format!("A008517/gessel-k={k}"),
            "Stirling numbers S(n+k, n)",
            "second-order Eulerian series",
            Box::new(move || {
                let row = match second_order_eulerian_row(k) {
                    Ok(r) => r,
                    Err(e) => return Outcome::Failed(e.to_string()),
                };
                let mut shifted = vec![BigInt::ZERO];
                shifted.extend(row);
                let series = EhrSeries::new(IntPoly::new(shifted), 2 * k + 1);
                let pairs: Vec<_> = (0..=12usize)
                    .map(|n| {
                        (
                            format!("n={n}"),
                            stirling2((n + k) as u64, n as u64),
                            series.coefficient(n),
                        )
                    })
                    .collect();
                compare_values(&pairs)
            }),
        ));
    }
}

fn suite_catalan_hankel(dir: &Path, checks: &mut Vec<Check>) {
    // (k, fixture id, fixture index of the n = 0 value)
    let cases = [(1usize, "A000027", 1i64), (2, "A000330", 1), (3, "A006858", 0)];
    for (k, id, base) in cases {
        let Some(fx) = load(dir, id, "catalan-hankel", checks) else { continue };
        checks.push(Check::new(
            format!("catalan-hankel/k={k}-{id}"),
            format!("fixture:{id}"),
            "Hankel determinant of shifted Catalan numbers",
            Box::new(move || {
                let values: Result<Vec<BigInt>> =
                    (0..=12usize).map(|n| catalan_hankel(k, n)).collect();
                match values {
                    Ok(v) => against_fixture(&fx, base, &v),
                    Err(e) => Outcome::Failed(e.to_string()),
                }
            }),
        ));
    }
    for k in 1..=4usize {
        checks.push(Check::new(
            format!("catalan-hankel/det-k={k}"),
            "staircase binomial determinant",
            "Hankel determinant",
            Box::new(move || {
                let run = || -> Result<Vec<(String, BigInt, BigInt)>> {
                    let shape = Partition::staircase(k)?;
                    (0..=8usize)
                        .map(|n| {
                            Ok((
                                format!("n={n}"),
                                ferrers_det(&shape, n)?,
                                catalan_hankel(k, n)?,
                            ))
                        })
                        .collect()
                };
                match run() {
                    Ok(pairs) => compare_values(&pairs),
                    Err(e) => Outcome::Failed(e.to_string()),
                }
            }),
        ));
    }
}

fn suite_a101093(dir: &Path, checks: &mut Vec<Check>) {
    let Some(fx) = load(dir, "A101093", "A101093", checks) else { return };
    checks.push(Check::new(
        "A101093/sixth-power-sandwich",
        "fixture:A101093",
        "descent series of one element under six singletons under one element",
        Box::new(move || {
            let run = || -> Result<Vec<BigInt>> {
                let spec = MultisetSpec::uniform(6, 1)?;
                let series = sandwich_series(&spec, true)?;
                // x·Ehr(x) generates the fixture, so ehr(n) = a(n+1)
                let terms = (fx.last_index()).min(18) as usize;
                Ok(series.coefficients(terms))
            };
            match run() {
                Ok(v) => against_fixture(&fx, 1, &v),
                Err(e) => Outcome::Failed(e.to_string()),
            }
        }),
    ));
}

fn suite_a103905(dir: &Path, checks: &mut Vec<Check>) {
    let Some(fx) = load(dir, "A103905", "A103905", checks) else { return };
    for k in 1..=6usize {
        let fx = fx.clone();
        checks.push(Check::new(
            format!("A103905/hexagon-k={k}"),
            "fixture:A103905",
            "hexagon tiling product",
            Box::new(move || {
                let values: Result<Vec<BigInt>> =
                    (0..=8usize).map(|n| hexagon_tilings(k, n)).collect();
                // rows k = 1..6 of width 9, row-major
                match values {
                    Ok(v) => against_fixture(&fx, (k as i64 - 1) * 9, &v),
                    Err(e) => Outcome::Failed(e.to_string()),
                }
            }),
        ));
        checks.push(Check::new(
            format!("A103905/box-k={k}"),
            "square box product",
            "hexagon tiling product",
            Box::new(move || {
                let run = || -> Result<Vec<(String, BigInt, BigInt)>> {
                    (0..=8usize)
                        .map(|n| {
                            Ok((
                                format!("n={n}"),
                                macmahon_box(k, k, n)?,
                                hexagon_tilings(k, n)?,
                            ))
                        })
                        .collect()
                };
                match run() {
                    Ok(pairs) => compare_values(&pairs),
                    Err(e) => Outcome::Failed(e.to_string()),
                }
            }),
        ));
    }
}

fn suite_a111910(dir: &Path, checks: &mut Vec<Check>) {
    let Some(fx) = load(dir, "A111910", "A111910", checks) else { return };
    for k in 0..=5usize {
        let fx = fx.clone();
        checks.push(Check::new(
            format!("A111910/formula-k={k}"),
            "fixture:A111910",
            "factorial-quotient count",
            Box::new(move || {
                let values: Result<Vec<BigInt>> = (0..=10usize).map(|n| mk_formula(k, n)).collect();
                match values {
                    Ok(v) => against_fixture(&fx, k as i64 * 11, &v),
                    Err(e) => Outcome::Failed(e.to_string()),
                }
            }),
        ));
    }
    for k in 0..=3usize {
        let fx = fx.clone();
        checks.push(Check::new(
            format!("A111910/engine-k={k}"),
            "fixture:A111910",
            "extension engine on chain(k) * v",
            Box::new(move || {
                let series = match ehr_series(&direct_product(&chain(k), &v_poset())) {
                    Ok(s) => s,
                    Err(e) => return Outcome::Failed(e.to_string()),
                };
                against_fixture(&fx, k as i64 * 11, &series.coefficients(11))
            }),
        ));
    }
}

fn suite_sandwich_tables(dir: &Path, checks: &mut Vec<Check>) {
    // (r, k, topped, fixture id, fixture index of ehr(·, 0))
    let cases = [
        (1usize, 1usize, true, "A000292", 1i64),
        (2, 1, true, "A002415", 2),
        (1, 1, false, "A000217", 1),
        (2, 1, false, "A000330", 1),
    ];
    for (r, k, topped, id, base) in cases {
        let Some(fx) = load(dir, id, "sandwich-tables", checks) else { continue };
        let kind = if topped { "topped" } else { "untopped" };
        checks.push(Check::new(
            format!("sandwich-tables/r={r}-k={k}-{kind}-{id}"),
            format!("fixture:{id}"),
            "multiset descent series",
            Box::new(move || {
                let run = || -> Result<Vec<BigInt>> {
                    let series = sandwich_series(&MultisetSpec::uniform(r, k)?, topped)?;
                    let terms = (fx.last_index() - base + 1).min(16) as usize;
                    Ok(series.coefficients(terms))
                };
                match run() {
                    Ok(v) => against_fixture(&fx, base, &v),
                    Err(e) => Outcome::Failed(e.to_string()),
                }
            }),
        ));
    }
}

fn suite_grid_squares(dir: &Path, checks: &mut Vec<Check>) {
    if let Some(fx) = load(dir, "A000330", "grid-squares", checks) {
        checks.push(Check::new(
            "grid-squares/m=1-A000330",
            "fixture:A000330",
            "square-count recursion",
            Box::new(move || {
                let values: Vec<BigInt> = (0..=12usize).map(|n| grid_square_count(1, n)).collect();
                against_fixture(&fx, 1, &values)
            }),
        ));
    }
    for m in 0..=5usize {
        checks.push(Check::new(
            format!("grid-squares/series-m={m}"),
            "tower series coefficients",
            "square-count recursion",
            Box::new(move || {
                let series = tower_series(m);
                let pairs: Vec<_> = (0..=10usize)
                    .map(|n| (format!("n={n}"), series.coefficient(n), grid_square_count(m, n)))
                    .collect();
                compare_values(&pairs)
            }),
        ));
    }
}

fn build_suite(suite: &str, dir: &Path, checks: &mut Vec<Check>) -> Result<()> {
    match suite {
        "narayana-A001263" => suite_narayana(dir, checks),
        "boxes-table4" => suite_boxes_table4(dir, checks),
        "A140934" => suite_a140934(dir, checks),
        "A008459" => suite_a008459(dir, checks),
        "A008517" => suite_a008517(dir, checks),
        "catalan-hankel" => suite_catalan_hankel(dir, checks),
        "A101093" => suite_a101093(dir, checks),
        "A103905" => suite_a103905(dir, checks),
        "A111910" => suite_a111910(dir, checks),
        "sandwich-tables" => suite_sandwich_tables(dir, checks),
        "grid-squares" => suite_grid_squares(dir, checks),
        "all" => {
            for s in ALL_SUITES {
                build_suite(s, dir, checks)?;
            }
        }
        other => {
            return Err(Error::Domain(format!(
                "unknown suite '{other}'; available: {}, all",
                ALL_SUITES.join(", ")
            )))
        }
    }
    Ok(())
}

/// Run a named suite (or "all"). Checks execute on `workers` threads; the
/// report is sorted by check name so output is schedule-independent.
pub fn run_suite(suite: &str, fixtures_dir: &Path, workers: usize) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    build_suite(suite, fixtures_dir, &mut checks)?;
    let n = checks.len();
    let results = Mutex::new(Vec::with_capacity(n));
    let cursor = AtomicUsize::new(0);
    let workers = workers.clamp(1, n.max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let check = &checks[i];
                let outcome = (check.run)();
                results.lock().unwrap().push(CheckResult {
                    name: check.name.clone(),
                    expected_source: check.expected_source.clone(),
                    got_source: check.got_source.clone(),
                    outcome,
                });
            });
        }
    });
    let mut checks = results.into_inner().unwrap();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(VerificationReport { checks })
}
