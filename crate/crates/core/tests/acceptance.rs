//! The eleven acceptance criteria, each checked at exact equality against
//! exhaustive enumeration. One PASS/FAIL line is written per criterion,
//! straight to stderr so it shows up without `--nocapture`.

use std::io::Write;

use crossings::cli;
use crossings::enumerate::crs_distribution;
use crossings::formulas::{
    crs_sigma_nkj_cases, f_123_231, f_123_231_collapsed, f_123_312, f_123_312_collapsed, r_table,
};
use crossings::poly::QPoly;
use crossings::stats::crs;
use crossings::verify::{run_suite, VerifyConfig};
use crossings::PatternSet;

fn caps(full: usize, class: usize, pair: usize, lemma: usize, sigma: usize, series: usize) -> VerifyConfig {
    VerifyConfig {
        full_nmax: full,
        class_nmax: class,
        pair_nmax: pair,
        lemma_nmax: lemma,
        sigma_nmax: sigma,
        series_order: series,
        timing: false,
    }
}

fn checks(names: &[&str], cfg: &VerifyConfig) -> Result<(), String> {
    for name in names {
        let r = run_suite(name, cfg, cfg.class_nmax).map_err(|e| e.to_string())?;
        if let Some(f) = r.failures().next() {
            return Err(format!(
                "{} at n = {}: {}",
                f.name,
                f.n,
                f.counterexample.as_deref().unwrap_or("")
            ));
        };
    }
    Ok(())
}

fn poly(c: &[i64]) -> QPoly {
    QPoly::from_i64s(c)
}

fn anchor(t: &[&str], n: usize, want: &[i64]) -> Result<(), String> {
    let got = crs_distribution(n, &PatternSet::of(t));
    if got == poly(want) {
        Ok(())
    } else {
        Err(format!("F_{n}({}) = {got}, expected {}", t.join(","), poly(want)))
    }
}

fn c1_crossing_preservation() -> Result<(), String> {
    checks(&["theta-preserves-crs"], &caps(8, 10, 10, 7, 10, 10))
}

fn c2_formulation_equivalence() -> Result<(), String> {
    checks(&["theta-recursive-equals-pipeline"], &caps(8, 9, 9, 7, 9, 9))
}

fn c3_equidistribution() -> Result<(), String> {
    anchor(&["321"], 3, &[4, 1])?;
    anchor(&["321"], 4, &[8, 4, 2])?;
    checks(
        &["equidistribution", "catalan-continued-fraction"],
        &caps(8, 10, 10, 7, 10, 10),
    )
}

fn c4_triple_statistic() -> Result<(), String> {
    checks(&["exc-crs-catalan", "fp-exc-crs-triple"], &caps(8, 8, 8, 7, 8, 8))
}

fn c5_gf_relations() -> Result<(), String> {
    checks(&["gf-312-231", "gf-312-123", "gf-312-tau"], &caps(8, 10, 10, 7, 10, 10))
}

fn c6_pair_closed_forms() -> Result<(), String> {
    anchor(&["321", "231"], 4, &[5, 2, 1])?;
    anchor(&["123", "132"], 4, &[4, 3, 1])?;
    anchor(&["321", "213"], 4, &[4, 1, 2])?;
    for n in 5..=12 {
        anchor(&["123", "321"], n, &[])?;
    }
    checks(&["pair-formulas"], &caps(8, 12, 12, 7, 12, 12))
}

fn c7_r_table() -> Result<(), String> {
    let r = r_table(5);
    if r[5][0] != poly(&[11, 4, 1]) || r[4][2] != poly(&[1, 1]) {
        return Err(format!("R_5^0 = {}, R_4^2 = {}", r[5][0], r[4][2]));
    }
    checks(
        &["r-table-classes", "r-table-powers-of-two", "reversed-suffix-table"],
        &caps(8, 10, 10, 7, 10, 10),
    )
}

fn c8_pascal() -> Result<(), String> {
    checks(&["pascal-corollary"], &caps(8, 10, 10, 7, 10, 10))
}

fn c9_lemmas() -> Result<(), String> {
    checks(&["lemmas"], &caps(7, 10, 10, 7, 14, 10))
}

fn c10_symmetry_and_decomposition() -> Result<(), String> {
    checks(
        &["crs-nes-symmetry", "crs-inv-exc-nes", "theta-sum-product"],
        &caps(8, 9, 9, 7, 9, 9),
    )?;
    checks(&["inv-catalan"], &caps(8, 9, 9, 7, 9, 9))
}

fn c11_determinism() -> Result<(), String> {
    let a = cli::run(["crossings", "check", "all", "--json"]);
    let b = cli::run(["crossings", "check", "all", "--json"]);
    if a.code != 0 {
        return Err(format!("check all exited with {}", a.code));
    }
    if a.stdout.as_bytes() == b.stdout.as_bytes() {
        Ok(())
    } else {
        Err("two runs of check all differ".into())
    }
}

/// Where the uncorrected closed forms disagree with enumeration. The
/// library ships corrected versions; these lines keep the gap visible in
/// the test log.
fn uncorrected_forms_report() -> Vec<String> {
    let mut lines = Vec::new();
    let mut off = Vec::new();
    for n in 1..=14usize {
        for k in 1..n {
            for j in 1..n - k {
                let s = crossings::formulas::sigma_nkj(n, k, j).unwrap();
                if crs_sigma_nkj_cases(n, k, j).unwrap() != crs(&s) {
                    off.push(format!("({n},{k},{j})"));
                }
            }
        }
    }
    lines.push(format!(
        "note: uncorrected three-regime count for σ_{{n,k,j}} differs from direct counting at {}",
        off.join(" ")
    ));
    let first_312 = (2..=12).find(|&n| f_123_312_collapsed(n) != f_123_312(n));
    let first_231 = (1..=12).find(|&n| f_123_231_collapsed(n) != f_123_231(n));
    lines.push(format!(
        "note: collapsed F_n(123,312) first differs at n = {first_312:?}, F_n(123,231) at n = {first_231:?}"
    ));
    lines
}

type Criterion = (&'static str, fn() -> Result<(), String>);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("1 crossing preservation under theta, n <= 10", c1_crossing_preservation),
        ("2 recursive theta equals pipeline, n <= 9", c2_formulation_equivalence),
        ("3 equidistribution and continued fraction, n <= 10", c3_equidistribution),
        ("4 triple statistic, n <= 8", c4_triple_statistic),
        ("5 generating function relations to z^10", c5_gf_relations),
        ("6 pair closed forms, n <= 12", c6_pair_closed_forms),
        ("7 R-table, n <= 10", c7_r_table),
        ("8 Pascal triangle, n <= 10", c8_pascal),
        ("9 insertion lemmas n <= 7 and sigma_nkj n <= 14", c9_lemmas),
        ("10 symmetry and decomposition", c10_symmetry_and_decomposition),
        ("11 determinism of check all", c11_determinism),
    ];
    let mut err = std::io::stderr().lock();
    let mut failed = Vec::new();
    for (name, f) in criteria {
        match f() {
            Ok(()) => writeln!(err, "criterion {name}: PASS").unwrap(),
            Err(e) => {
                writeln!(err, "criterion {name}: FAIL ({e})").unwrap();
                failed.push(name);
            }
        }
    }
    for line in uncorrected_forms_report() {
        writeln!(err, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
