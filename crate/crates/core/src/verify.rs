//! Exhaustive verification suites.
//!
//! A check is a predicate indexed by `n`. Each check runs `n` upward and
//! stops at its first failure, so a reported counterexample is minimal in
//! `n` and, within that `n`, first in lexicographic order.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use serde::Serialize;

use crate::dyck::{DyckPath, TunnelKind};
use crate::enumerate::{crs_distribution, generate, joint_distribution, refined_crs_distribution, Refinement};
use crate::error::{Error, Result};
use crate::formulas::{
    catalan_crs, catalan_qp, closed_form, crs_sigma_nkj, f_213_132, inv_dist_321, inv_dist_321_via_catalan,
    ladder_crs, ladder_qp, ladder_xy, r_table, rec_213_132, sigma_nkj,
};
use crate::perm::{
    contains_pattern, direct_product, direct_sum, insert, product_compose, product_decompose, shift_from, shift_up, sum_compose,
    sum_decompose, t_set, Involution, PatternSet, Permutation,
};
use crate::poly::{MultiPoly, QPoly};
use crate::rsk::{rsk_bumping, rsk_two_row};
use crate::series::{cf_series, QSeries};
use crate::stats::{
    alpha_k, crs, crs_of_arcs, exc, fp, insertion_counts, inv, lt_stat, nes, refined_stats, ut, Statistic,
};
use crate::theta::{f_k, g_k, gamma, phi, phi_inverse, psi, theta, theta_inverse, theta_pipeline};

/// Size caps for the different kinds of check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Checks that walk all of `S_n`.
    pub full_nmax: usize,
    /// Checks over a Catalan-size class.
    pub class_nmax: usize,
    /// Checks over pair classes, which are much smaller.
    pub pair_nmax: usize,
    /// Insertion lemmas, which also range over insertion sites.
    pub lemma_nmax: usize,
    /// The `σ_{n,k,j}` family.
    pub sigma_nmax: usize,
    /// Highest `z` power in series identities.
    pub series_order: usize,
    /// Record wall-clock time per entry. Off by default so that reports are
    /// byte-for-byte reproducible.
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            full_nmax: 8,
            class_nmax: 10,
            pair_nmax: 12,
            lemma_nmax: 7,
            sigma_nmax: 14,
            series_order: 10,
            timing: false,
        }
    }
}

impl VerifyConfig {
    /// Caps every check at `n_max`. Full-`S_n` and lemma checks keep their
    /// tighter defaults when `n_max` exceeds them.
    pub fn with_nmax(n_max: usize) -> Self {
        let d = VerifyConfig::default();
        VerifyConfig {
            full_nmax: d.full_nmax.min(n_max),
            class_nmax: n_max,
            pair_nmax: n_max,
            lemma_nmax: d.lemma_nmax.min(n_max),
            sigma_nmax: n_max,
            series_order: n_max,
            timing: false,
        }
    }

    fn cap(&self, c: Cap) -> usize {
        match c {
            Cap::Full => self.full_nmax,
            Cap::Class => self.class_nmax,
            Cap::Pair => self.pair_nmax,
            Cap::Lemma => self.lemma_nmax,
            Cap::Sigma => self.sigma_nmax,
            Cap::Series => self.series_order,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub n_max: usize,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check: its range on success, its counterexample otherwise.
    pub fn to_text(&self) -> String {
        let mut names: Vec<&str> = Vec::new();
        for c in &self.checks {
            if names.last() != Some(&c.name.as_str()) {
                names.push(&c.name);
            }
        }
        let mut out = String::new();
        for name in names {
            let rows: Vec<&CheckRecord> = self.checks.iter().filter(|c| c.name == name).collect();
            let last = rows.last().expect("at least one row");
            let lo = rows[0].n;
            match last.status {
                Status::Pass => out.push_str(&format!("PASS {name} (n = {lo}..{})\n", last.n)),
                Status::Fail => out.push_str(&format!(
                    "FAIL {name} at n = {}: {}\n",
                    last.n,
                    last.counterexample.as_deref().unwrap_or("")
                )),
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "suite {}: {}\n",
            self.suite,
            if failed == 0 { "all checks passed".to_string() } else { format!("{failed} check(s) failed") }
        ));
        out
    }
}

// ---------------------------------------------------------------------------
// Check plumbing

#[derive(Clone, Copy)]
enum Cap {
    Full,
    Class,
    Pair,
    Lemma,
    Sigma,
    Series,
}

type Outcome = std::result::Result<(), String>;
type CheckFn = Box<dyn Fn(&Ctx, usize) -> Outcome>;

struct Check {
    name: String,
    lo: usize,
    cap: Cap,
    run: CheckFn,
}

fn check(name: &str, lo: usize, cap: Cap, run: impl Fn(&Ctx, usize) -> Outcome + 'static) -> Check {
    Check {
        name: name.to_string(),
        lo,
        cap,
        run: Box::new(run),
    }
}

/// Memoized brute-force distributions shared by the checks of one run.
struct Ctx {
    cache: RefCell<HashMap<(usize, String), QPoly>>,
}

impl Ctx {
    fn new() -> Self {
        Ctx {
            cache: RefCell::new(HashMap::new()),
        }
    }

    fn f(&self, n: usize, t: &PatternSet) -> QPoly {
        let key = (n, t.to_string());
        if let Some(p) = self.cache.borrow().get(&key) {
            return p.clone();
        }
        let p = crs_distribution(n, t);
        self.cache.borrow_mut().insert(key, p.clone());
        p
    }

    fn series(&self, t: &PatternSet, order: usize) -> QSeries {
        let coeffs = (0..=order).map(|n| self.f(n, t)).collect();
        QSeries::new(coeffs, order, &QPoly::one())
    }
}

fn refined(n: usize, t: &PatternSet, r: Refinement) -> QPoly {
    refined_crs_distribution(n, t, r).expect("refinement in range")
}

fn all_of(n: usize) -> impl Iterator<Item = Permutation> {
    generate(n, &PatternSet::empty())
}

fn class(n: usize, w: &str) -> impl Iterator<Item = Permutation> {
    generate(n, &PatternSet::of(&[w]))
}

/// First element of `items` for which `bad` returns a description.
fn scan<I, F>(items: I, mut bad: F) -> Outcome
where
    I: IntoIterator,
    F: FnMut(&I::Item) -> Option<String>,
{
    for x in items {
        if let Some(msg) = bad(&x) {
            return Err(msg);
        }
    }
    Ok(())
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn pats(words: &[&str]) -> PatternSet {
    PatternSet::of(words)
}

// ---------------------------------------------------------------------------
// Permutation-level identities

fn perm_checks() -> Vec<Check> {
    vec![
        check("crs-inv-exc-nes", 0, Cap::Full, |_, n| {
            scan(all_of(n), |s| {
                let rhs = inv(s) as i64 - exc(s) as i64 - 2 * nes(s) as i64;
                (crs(s) as i64 != rhs).then(|| format!("{s}: crs {} vs inv-exc-2nes {rhs}", crs(s)))
            })
        }),
        check("crs-nes-symmetry", 0, Cap::Full, |_, n| {
            let m = joint_distribution(n, &PatternSet::empty(), &[Statistic::Crs, Statistic::Nes])
                .expect("two statistics");
            if m.is_symmetric() {
                Ok(())
            } else {
                Err(format!("n = {n}: {m} is not symmetric"))
            }
        }),
        check("involutions", 0, Cap::Full, |_, n| {
            scan(all_of(n), |s| {
                for kind in [Involution::R, Involution::C, Involution::I, Involution::Rc, Involution::Rci] {
                    if kind.apply(&kind.apply(s)) != *s {
                        return Some(format!("{s}: {} applied twice", kind.name()));
                    }
                }
                let t = Involution::Rci.apply(s);
                (crs(&t) != crs(s)).then(|| format!("{s}: rci gives {t} with crs {} vs {}", crs(&t), crs(s)))
            })
        }),
        check("crs-inverse-tunnels", 0, Cap::Full, |_, n| {
            scan(all_of(n), |s| {
                let want = crs(s) as i64 + ut(s) as i64 - lt_stat(s) as i64;
                let got = crs(&s.inverse()) as i64;
                (got != want).then(|| format!("{s}: crs of inverse {got}, formula {want}"))
            })
        }),
        check("reverse-complement-crs", 0, Cap::Full, |_, n| {
            scan(all_of(n), |s| {
                let want = crs(s) as i64 + ut(s) as i64 - lt_stat(s) as i64;
                let got = crs(&Involution::Rc.apply(s)) as i64;
                (got != want).then(|| format!("{s}: crs of rc {got}, formula {want}"))
            })
        }),
        check("direct-sum-crs", 0, Cap::Full, |_, n| {
            for a in 0..=n {
                for s1 in all_of(a) {
                    for s2 in all_of(n - a) {
                        let s = direct_sum(&s1, &s2);
                        if crs(&s) != crs(&s1) + crs(&s2) {
                            return Err(format!("{s1} ⊕ {s2} = {s}: crs {}", crs(&s)));
                        }
                    }
                }
            }
            Ok(())
        }),
        check("direct-product-crs", 0, Cap::Lemma, |_, n| {
            // every pair with max side length n
            for a in 0..=n {
                for b in 0..=n {
                    if a.max(b) != n {
                        continue;
                    }
                    for s1 in class(a, "132") {
                        for s2 in class(b, "132") {
                            let s = direct_product(&s1, &s2).map_err(|e| e.to_string())?;
                            if crs(&s) != crs(&s1) + crs(&s2) {
                                return Err(format!("{s1} ⊗ {s2} = {s}: crs {}", crs(&s)));
                            }
                        }
                    }
                }
            }
            Ok(())
        }),
        check("shift-invariance", 0, Cap::Full, |_, n| {
            scan(all_of(n), |s| {
                let c = crs(s);
                let arcs = |pos: &dyn Fn(u32) -> u32, vals: &[u32]| -> u32 {
                    let a: Vec<(u32, u32)> = vals.iter().enumerate().map(|(i, &v)| (pos(i as u32 + 1), v)).collect();
                    crs_of_arcs(&a)
                };
                for a in 0..3u32 {
                    if arcs(&|i| i + a, &shift_up(s, a)) != c {
                        return Some(format!("{s}: shift by {a}"));
                    }
                    for from in 1..=n as u32 + 1 {
                        let moved = move |i: u32| if i >= from { i + a } else { i };
                        if arcs(&moved, &shift_from(s, from, a)) != c {
                            return Some(format!("{s}: shift by {a} from {from}"));
                        }
                    }
                }
                None
            })
        }),
        check("sum-decompose-roundtrip", 0, Cap::Class, |_, n| {
            scan(class(n, "321"), |s| {
                let parts = sum_decompose(s);
                if sum_compose(&parts) != *s {
                    return Some(format!("{s}: recomposition differs"));
                }
                parts
                    .iter()
                    .find(|p| sum_decompose(p).len() != 1)
                    .map(|p| format!("{s}: part {p} is reducible"))
            })
        }),
        check("product-decompose-roundtrip", 0, Cap::Class, |_, n| {
            scan(class(n, "132"), |s| {
                let parts = match product_decompose(s) {
                    Ok(p) => p,
                    Err(e) => return Some(format!("{s}: {e}")),
                };
                if product_compose(&parts).ok().as_ref() != Some(s) {
                    return Some(format!("{s}: recomposition differs"));
                }
                parts
                    .iter()
                    .find(|p| product_decompose(p).map(|v| v.len()).unwrap_or(0) != 1)
                    .map(|p| format!("{s}: factor {p} is reducible"))
            })
        }),
    ]
}

// ---------------------------------------------------------------------------
// Insertion lemmas

fn lemma_checks() -> Vec<Check> {
    vec![
        check("insertion-lemma", 1, Cap::Lemma, |_, n| {
            scan(all_of(n - 1), |pi| {
                for a in 1..=n {
                    for b in 1..=a {
                        let [a1, a2, a3, a4] = insertion_counts(pi, a, b).expect("in range");
                        let want = (crs(pi) + a1 + a2 + a3) as i64 - a4 as i64;
                        let got = crs(&insert(pi, a, b as u32).expect("in range")) as i64;
                        if got != want {
                            return Some(format!("π = {pi}, a = {a}, b = {b}: crs {got}, formula {want}"));
                        }
                    }
                }
                None
            })
        }),
        check("insert-last-one", 1, Cap::Full, |_, n| {
            scan(all_of(n - 1), |s| {
                let want = crs(s) as i64 + ut(s) as i64 - lt_stat(s) as i64;
                let got = crs(&insert(s, n, 1).expect("in range")) as i64;
                (got != want).then(|| format!("σ = {s}: crs {got}, formula {want}"))
            })
        }),
        check("insert-one-at-k", 1, Cap::Full, |_, n| {
            scan(all_of(n - 1), |s| {
                for k in 1..=n {
                    let (utm, ltm) = if s.is_empty() {
                        (0, 0)
                    } else {
                        let r = refined_stats(s, k.min(n - 1), 1).expect("in range");
                        // k = n counts every tunnel index below n
                        if k == n {
                            (r.ut, r.lt)
                        } else {
                            (r.ut_k_minus, r.lt_k_minus)
                        }
                    };
                    let want = crs(s) as i64 + utm as i64 - ltm as i64 + alpha_k(s, k) as i64;
                    let got = crs(&insert(s, k, 1).expect("in range")) as i64;
                    if got != want {
                        return Some(format!("σ = {s}, k = {k}: crs {got}, formula {want}"));
                    }
                }
                None
            })
        }),
        check("insert-front", 0, Cap::Lemma, |_, n| {
            scan(all_of(n), |s| {
                for j in 1..=n + 1 {
                    let r = match refined_stats(s, 1, j) {
                        Ok(r) => r,
                        Err(_) if n == 0 => continue,
                        Err(e) => return Some(e.to_string()),
                    };
                    let want = crs(s) as i64 + r.x_j.len() as i64 + r.y_j.len() as i64 - r.z_j.len() as i64;
                    let got = crs(&insert(s, 1, j as u32).expect("in range")) as i64;
                    if got != want {
                        return Some(format!("σ = {s}, j = {j}: crs {got}, formula {want}"));
                    }
                }
                None
            })
        }),
        check("insert-front-reversed-suffix", 1, Cap::Lemma, |_, n| {
            scan(all_of(n), |s| {
                for k in 1..=n {
                    if !(Refinement::ReversedSuffix { k }).admits(s) {
                        continue;
                    }
                    let want = crs(s) as usize + (k - 1).min(n - k);
                    let got = crs(&insert(s, 1, k as u32 + 1).expect("in range")) as usize;
                    if got != want {
                        return Some(format!("σ = {s}, k = {k}: crs {got}, formula {want}"));
                    }
                }
                None
            })
        }),
        check("sigma-nkj-crossings", 1, Cap::Sigma, |_, n| {
            for k in 0..n {
                for j in 1..=(n - k).max(1) {
                    let Ok(s) = sigma_nkj(n, k, j) else { continue };
                    let want = crs_sigma_nkj(n, k, j).map_err(|e| e.to_string())?;
                    if crs(&s) != want {
                        return Err(format!("σ_{{{n},{k},{j}}} = {s}: crs {}, formula {want}", crs(&s)));
                    }
                }
            }
            Ok(())
        }),
    ]
}

// ---------------------------------------------------------------------------
// Bijections

fn bijection_checks() -> Vec<Check> {
    vec![
        check("theta-preserves-crs", 0, Cap::Class, |_, n| {
            scan(class(n, "321"), |s| {
                let t = theta(s).expect("321-avoiding");
                (crs(&t) != crs(s)).then(|| format!("{s} ↦ {t}: crs {} vs {}", crs(&t), crs(s)))
            })
        }),
        check("theta-recursive-equals-pipeline", 0, Cap::Class, |_, n| {
            scan(class(n, "321"), |s| {
                let a = theta(s).expect("321-avoiding");
                let b = theta_pipeline(s).expect("321-avoiding");
                (a != b).then(|| format!("{s}: recursion {a}, pipeline {b}"))
            })
        }),
        check("theta-inverse-roundtrip", 0, Cap::Class, |_, n| {
            scan(class(n, "321"), |s| {
                let t = theta(s).expect("321-avoiding");
                if contains_pattern(&t, &[1, 3, 2]) {
                    return Some(format!("{s} ↦ {t} contains 132"));
                }
                let back = match theta_inverse(&t) {
                    Ok(b) => b,
                    Err(e) => return Some(format!("{s} ↦ {t}: {e}")),
                };
                (back != *s).then(|| format!("{s} ↦ {t} ↦ {back}"))
            })
            .and_then(|_| {
                scan(class(n, "132"), |a| {
                    let s = match theta_inverse(a) {
                        Ok(s) => s,
                        Err(e) => return Some(format!("{a}: {e}")),
                    };
                    let back = match theta(&s) {
                        Ok(b) => b,
                        Err(e) => return Some(format!("{a} ↦ {s}: {e}")),
                    };
                    (back != *a).then(|| format!("{a} ↦ {s} ↦ {back}"))
                })
            })
        }),
        check("theta-fp-exc", 0, Cap::Class, |_, n| {
            scan(class(n, "321"), |s| {
                let t = theta(s).expect("321-avoiding");
                ((fp(&t), exc(&t)) != (fp(s), exc(s))).then(|| format!("{s} ↦ {t}: (fp, exc) changes"))
            })
        }),
        check("gamma-fp-exc-crs", 0, Cap::Class, |_, n| {
            scan(class(n, "321"), |s| {
                let t = gamma(s).expect("321-avoiding");
                let key = |p: &[u32]| (fp(p), exc(p), crs(p));
                (key(&t) != key(s) || contains_pattern(&t, &[1, 3, 2]))
                    .then(|| format!("{s} ↦ {t}: (fp, exc, crs) changes or image contains 132"))
            })
        }),
        check("rsk-fast-path", 0, Cap::Class, |_, n| {
            scan(class(n, "321"), |s| {
                let t = rsk_two_row(s).expect("321-avoiding");
                let (p, q) = rsk_bumping(s);
                let rows = |r1: &Vec<u32>, r2: &Vec<u32>| -> Vec<Vec<u32>> {
                    [r1.clone(), r2.clone()].into_iter().filter(|r| !r.is_empty()).collect()
                };
                if rows(&t.p_row1, &t.p_row2) != p || rows(&t.q_row1, &t.q_row2) != q || !t.is_valid() {
                    return Some(format!("{s}: matching-set tableaux differ from bumping"));
                }
                let ti = rsk_two_row(&s.inverse()).expect("inverse avoids 321");
                (ti != t.swapped()).then(|| format!("{s}: RSK of the inverse is not the swapped pair"))
            })
        }),
        check("psi-injective", 0, Cap::Class, |_, n| {
            let mut seen = BTreeSet::new();
            scan(class(n, "321"), |s| {
                let d = psi(s).expect("321-avoiding");
                if d.left_downs() != d.right_ups() {
                    return Some(format!("{s} ↦ {d}: halves unbalanced"));
                }
                (!seen.insert(d.to_string())).then(|| format!("{s} ↦ {d} repeats an image"))
            })
        }),
        check("phi-roundtrip", 0, Cap::Class, |_, n| {
            scan(DyckPath::all(n), |d| {
                let s = phi_inverse(d);
                if contains_pattern(&s, &[1, 3, 2]) {
                    return Some(format!("{d} ↦ {s} contains 132"));
                }
                let back = match phi(&s) {
                    Ok(b) => b,
                    Err(e) => return Some(format!("{d} ↦ {s}: {e}")),
                };
                (back != *d).then(|| format!("{d} ↦ {s} ↦ {back}"))
            })
        }),
        check("dyck-half-balance", 0, Cap::Lemma, |_, n| {
            scan(DyckPath::all(n), |d| {
                (d.left_downs() != d.right_ups()).then(|| format!("{d}: {} left downs, {} right ups", d.left_downs(), d.right_ups()))
            })
        }),
        check("tunnels-fp-exc", 0, Cap::Class, |_, n| {
            scan(DyckPath::all(n), |d| {
                let s = phi_inverse(d);
                let c = d.tunnel_counts();
                ((fp(&s), exc(&s)) != ({ c.tunnel_centered }, { c.tunnel_right }))
                    .then(|| format!("{d} ↦ {s}: (fp, exc) = ({}, {}), (ct, rt) = ({}, {})", fp(&s), exc(&s), c.tunnel_centered, c.tunnel_right))
            })
        }),
        check("t-set-bound", 0, Cap::Class, |_, n| {
            scan(class(n, "321"), |s| {
                let d = psi(s).expect("321-avoiding");
                let t = t_set(&phi_inverse(&d)).len();
                (t != d.right_ups() || 2 * t > n).then(|| format!("{s} ↦ {d}: |T| = {t}, right ups {}", d.right_ups()))
            })
        }),
        check("tunnel-left-rule", 0, Cap::Class, |_, n| {
            scan(DyckPath::all(n), |d| {
                let s = phi_inverse(d);
                let (mut asc, mut desc) = (vec![0u32; 2 * n], vec![0u32; 2 * n]);
                let (mut a, mut b) = (n as u32, 1u32);
                for (idx, &up) in d.steps().iter().enumerate() {
                    if up {
                        asc[idx] = a;
                        a -= 1;
                    } else {
                        desc[idx] = b;
                        b += 1;
                    }
                }
                for t in d.tunnels() {
                    let (a, b) = (asc[t.up_index], desc[t.down_index]);
                    let left_or_centered = t.kind != TunnelKind::Right;
                    if s.at(a as usize) != b || left_or_centered != (a >= b) {
                        return Some(format!("{d}: tunnel from ascent {a} to descent {b} is {:?}", t.kind));
                    }
                }
                None
            })
        }),
        check("theta-sum-product", 0, Cap::Full, |_, n| {
            for a in 0..=n {
                for s1 in class(a, "321") {
                    for s2 in class(n - a, "321") {
                        let lhs = theta(&direct_sum(&s1, &s2)).expect("321-avoiding");
                        let t1 = theta(&s1).expect("321-avoiding");
                        let t2 = theta(&s2).expect("321-avoiding");
                        let rhs = direct_product(&t2, &t1).map_err(|e| e.to_string())?;
                        if lhs != rhs {
                            return Err(format!("σ1 = {s1}, σ2 = {s2}: Θ(σ1 ⊕ σ2) = {lhs}, Θ(σ2) ⊗ Θ(σ1) = {rhs}"));
                        }
                    }
                }
            }
            Ok(())
        }),
        check("irreducible-correspondence", 1, Cap::Full, |_, n| {
            scan(class(n, "321"), |s| {
                let t = theta(s).expect("321-avoiding");
                let a = sum_decompose(s).len() == 1;
                let b = product_decompose(&t).map(|v| v.len() == 1).unwrap_or(false);
                (a != b).then(|| format!("{s} ↦ {t}: ⊕-irreducible {a}, ⊗-irreducible {b}"))
            })
        }),
        check("f-maps-crs", 2, Cap::Full, |_, n| {
            scan(all_of(n - 1), |s| {
                let c = crs(s) as i64;
                let top = crs(&f_k(s, n).expect("in range")) as i64;
                let delta = (s.at(n - 1) as usize == n - 1) as i64;
                let next = crs(&f_k(s, n - 1).expect("in range")) as i64;
                (top != c || next != c + 1 - delta).then(|| format!("σ = {s}: crs(f_n) = {top}, crs(f_(n-1)) = {next}, crs = {c}"))
            })
        }),
        check("g-k-bijection", 1, Cap::Full, |_, n| {
            for k in 1..=n {
                let mut images = BTreeSet::new();
                let mut count = 0usize;
                for t in all_of(n).filter(|t| t.at(k) == 1) {
                    count += 1;
                    let g = g_k(&t, k).expect("σ(k) = 1");
                    if g.at(n + 1 - k) != 1 || crs(&g) != crs(&t) {
                        return Err(format!("k = {k}: {t} ↦ {g}"));
                    }
                    if !images.insert(g.clone()) {
                        return Err(format!("k = {k}: {g} hit twice"));
                    }
                }
                let fact: usize = (1..n).product();
                if count != fact || images.len() != fact {
                    return Err(format!("k = {k}: {} images from {count} inputs", images.len()));
                }
            }
            Ok(())
        }),
    ]
}

// ---------------------------------------------------------------------------
// Series and distributions

fn series_checks() -> Vec<Check> {
    vec![
        check("catalan-continued-fraction", 0, Cap::Series, |ctx, n| {
            let s = cf_series(&ladder_crs(n), n, &QPoly::one()).map_err(|e| e.to_string())?;
            expect_eq("cf coefficient", s.coeff(n).clone(), catalan_crs(n))?;
            expect_eq("F_n(321)", ctx.f(n, &pats(&["321"])), catalan_crs(n))
        }),
        check("qp-continued-fraction", 0, Cap::Series, |_, n| {
            let vars = ["q", "p"];
            let s = cf_series(&ladder_qp(n), n, &MultiPoly::one(&vars)).map_err(|e| e.to_string())?;
            expect_eq("cf coefficient", s.coeff(n).clone(), catalan_qp(n))
        }),
        check("xy-continued-fraction", 0, Cap::Full, |_, n| {
            let vars = ["x", "y"];
            let s = cf_series(&ladder_xy(n), n, &MultiPoly::one(&vars)).map_err(|e| e.to_string())?;
            let brute = joint_distribution(n, &PatternSet::empty(), &[Statistic::Crs, Statistic::Nes])
                .expect("two statistics")
                .with_vars(&vars);
            expect_eq("x^crs y^nes", s.coeff(n).clone(), brute)
        }),
        check("inv-catalan", 0, Cap::Class, |_, n| {
            let brute = crate::enumerate::distribution(&crate::enumerate::DistributionQuery::new(
                n,
                pats(&["321"]),
                Statistic::Inv,
            ))
            .map_err(|e| e.to_string())?
            .polynomial;
            expect_eq("recurrence", inv_dist_321(n), brute.clone())?;
            expect_eq("C_n(q,q)", inv_dist_321_via_catalan(n), brute)
        }),
        check("r-table-powers-of-two", 0, Cap::Class, |_, n| {
            let r = r_table(n);
            let mut total = num_bigint::BigInt::from(0);
            for k in 0..=n {
                let v = r[n][k].at_one();
                let want = if k < n { num_bigint::BigInt::from(1) << (n - 1 - k) } else { 1.into() };
                if v != want {
                    return Err(format!("R_{n}^{k}(1) = {v}, expected {want}"));
                }
                total += v;
            }
            let want = if n == 0 { 1.into() } else { num_bigint::BigInt::from(1) << n };
            if total != want && n > 0 {
                return Err(format!("Σ_k R_{n}^k(1) = {total}"));
            }
            Ok(())
        }),
        check("gf-312-231", 0, Cap::Series, |ctx, n| {
            let one = QPoly::one();
            let f312 = ctx.series(&pats(&["312"]), n);
            let f231 = ctx.series(&pats(&["231"]), n);
            let lhs = f312.mul(&QSeries::one(n, &one).sub(&f231.shift(1)));
            expect_eq("[z^n] F(312)(1 - z F(231))", lhs.coeff(n).clone(), if n == 0 { one } else { QPoly::zero() })
        }),
        check("gf-312-123", 0, Cap::Series, |ctx, n| {
            let one = QPoly::one();
            let geo = QSeries::new(vec![one.clone(); n + 1], n, &one).shift(1); // z/(1-z)
            let rhs = QSeries::one(n, &one)
                .add(&geo.mul(&geo))
                .add(&ctx.series(&pats(&["123", "231"]), n).shift(1));
            let lhs = ctx.series(&pats(&["123", "312"]), n);
            expect_eq("[z^n]", lhs.coeff(n).clone(), rhs.coeff(n).clone())
        }),
        check("gf-312-tau", 0, Cap::Series, |ctx, n| {
            let one = QPoly::one();
            let geo = QSeries::new(vec![one.clone(); n + 1], n, &one).shift(1);
            for t in ["132", "213"] {
                for t2 in ["132", "213"] {
                    let lhs = ctx.series(&pats(&["312", t]), n);
                    let rhs = QSeries::one(n, &one).add(&geo.mul(&ctx.series(&pats(&["231", t2]), n)));
                    if lhs.coeff(n) != rhs.coeff(n) {
                        return Err(format!("τ = {t}, τ' = {t2}: {} vs {}", lhs.coeff(n), rhs.coeff(n)));
                    }
                }
            }
            Ok(())
        }),
    ]
}

fn enumeration_checks() -> Vec<Check> {
    vec![
        check("catalan-class-sizes", 0, Cap::Class, |_, n| {
            let want = catalan_crs(n).at_one();
            for w in ["123", "132", "213", "231", "312", "321"] {
                let members: Vec<Permutation> = class(n, w).collect();
                if let Some(p) = members.windows(2).find(|p| p[0] >= p[1]) {
                    return Err(format!("S_{n}({w}) lists {} before {}", p[0], p[1]));
                }
                let got = num_bigint::BigInt::from(members.len());
                if got != want {
                    return Err(format!("|S_{n}({w})| = {got}, expected {want}"));
                }
            }
            Ok(())
        }),
        check("equidistribution", 0, Cap::Class, |ctx, n| {
            let want = catalan_crs(n);
            for w in ["321", "132", "213"] {
                expect_eq(&format!("F_{n}({w})"), ctx.f(n, &pats(&[w])), want.clone())?;
            }
            Ok(())
        }),
        check("exc-crs-catalan", 0, Cap::Class, |_, n| {
            let m = joint_distribution(n, &pats(&["321"]), &[Statistic::Exc, Statistic::Crs]).expect("two statistics");
            expect_eq("q^exc p^crs", m, catalan_qp(n))
        }),
        check("fp-exc-crs-triple", 0, Cap::Class, |_, n| {
            let stats = [Statistic::Fp, Statistic::Exc, Statistic::Crs];
            let base = joint_distribution(n, &pats(&["321"]), &stats).expect("three statistics");
            for w in ["132", "213"] {
                let m = joint_distribution(n, &pats(&[w]), &stats).expect("three statistics");
                if m != base {
                    return Err(format!("{{{w}}}: {m} vs {{321}}: {base}"));
                }
            }
            Ok(())
        }),
        check("f-n-image", 1, Cap::Class, |ctx, n| {
            let got = refined(n, &pats(&["312"]), Refinement::OneAt { k: n });
            expect_eq("S_n^n(312)", got, ctx.f(n - 1, &pats(&["231"])))
        }),
        check("refinement-partition", 1, Cap::Class, |_, n| {
            for t in [pats(&["321"]), pats(&["132"]), pats(&["312"]), pats(&["123", "231"])] {
                let size = num_bigint::BigInt::from(generate(n, &t).count());
                let mut by_one = num_bigint::BigInt::from(0);
                let mut by_last = num_bigint::BigInt::from(0);
                for k in 1..=n {
                    by_one += refined(n, &t, Refinement::OneAt { k }).at_one();
                    by_last += refined(n, &t, Refinement::LastIs { k }).at_one();
                }
                if by_one != size || by_last != size {
                    return Err(format!("T = {t}: cells sum to {by_one} and {by_last}, class has {size}"));
                }
            }
            Ok(())
        }),
        check("fundamental-proposition", 1, Cap::Class, |ctx, n| {
            for t in small_pattern_sets() {
                if t.is_empty() && n > ctx_full_cap() {
                    continue;
                }
                fundamental(ctx, n, &t)?;
            }
            Ok(())
        }),
        check("unrestricted-symmetry", 1, Cap::Full, |_, n| {
            let e = PatternSet::empty();
            for k in 1..=n {
                let a = refined(n, &e, Refinement::OneAt { k });
                let b = refined(n, &e, Refinement::OneAt { k: n + 1 - k });
                if a != b {
                    return Err(format!("k = {k}: {a} vs {b}"));
                }
            }
            Ok(())
        }),
    ]
}

thread_local! {
    static FULL_CAP: std::cell::Cell<usize> = const { std::cell::Cell::new(8) };
}

fn ctx_full_cap() -> usize {
    FULL_CAP.with(|c| c.get())
}

/// Every subset of `S_3` with at most two elements.
fn small_pattern_sets() -> Vec<PatternSet> {
    let words = ["123", "132", "213", "231", "312", "321"];
    let mut out = vec![PatternSet::empty()];
    for (i, a) in words.iter().enumerate() {
        out.push(pats(&[a]));
        for b in &words[i + 1..] {
            out.push(pats(&[a, b]));
        }
    }
    out
}

/// The four refined identities, each where its precondition on the
/// positions of `1` in the patterns holds.
fn fundamental(ctx: &Ctx, n: usize, t: &PatternSet) -> Outcome {
    let pos = t.positions_of_one();
    let m = 3;
    let min = pos.iter().copied().min().unwrap_or(usize::MAX);
    let max = pos.iter().copied().max().unwrap_or(0);
    let ti = t.inverse();
    let q = QPoly::q();
    let one_minus_q = QPoly::from_i64s(&[1, -1]);
    let fail = |which: &str, got: QPoly, want: QPoly| Err(format!("T = {t}, identity {which}: {got} vs {want}"));
    if min > 1 {
        let got = refined(n, t, Refinement::OneAt { k: 1 });
        let want = ctx.f(n - 1, t);
        if got != want {
            return fail("F^1", got, want);
        }
    }
    if min > 2 && n >= 2 {
        let got = refined(n, t, Refinement::OneAt { k: 2 });
        let want = &(&q * &ctx.f(n - 1, t)) + &(&one_minus_q * &ctx.f(n - 2, t));
        if got != want {
            return fail("F^2", got, want);
        }
    }
    if max + 1 < m && n >= 2 {
        let got = refined(n, t, Refinement::OneAt { k: n - 1 });
        let last = if n == 2 { QPoly::one() } else { refined(n - 1, &ti, Refinement::LastIs { k: n - 1 }) };
        let want = &(&q * &ctx.f(n - 1, &ti)) + &(&one_minus_q * &last);
        if got != want {
            return fail("F^(n-1)", got, want);
        }
    }
    if max < m {
        let got = refined(n, t, Refinement::OneAt { k: n });
        let want = ctx.f(n - 1, &ti);
        if got != want {
            return fail("F^n", got, want);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Pair classes

fn pair_checks() -> Vec<Check> {
    let sets: [&[&str]; 17] = [
        &["231", "321"],
        &["123", "132"],
        &["123", "213"],
        &["132", "321"],
        &["213", "321"],
        &["123", "312"],
        &["123", "231"],
        &["123", "321"],
        &["312", "321"],
        &["231", "312"],
        &["132", "312"],
        &["213", "312"],
        &["132", "231"],
        &["213", "231"],
        &["321"],
        &["132"],
        &["213"],
    ];
    let mut out: Vec<Check> = sets
        .iter()
        .map(|words| {
            let t = pats(words);
            let cap = if words.len() == 1 { Cap::Class } else { Cap::Pair };
            check(&format!("closed-form[{t}]"), 0, cap, move |ctx, n| {
                let want = closed_form(&t, n).map_err(|e| e.to_string())?;
                expect_eq(&format!("F_{n}({t})"), ctx.f(n, &t), want)
            })
        })
        .collect();
    out.push(check("closed-form[none]", 0, Cap::Full, |ctx, n| {
        let want = closed_form(&PatternSet::empty(), n).map_err(|e| e.to_string())?;
        expect_eq("F_n", ctx.f(n, &PatternSet::empty()), want)
    }));
    out.extend([
        check("crossing-free-classes", 0, Cap::Pair, |_, n| {
            for t in [pats(&["312", "321"]), pats(&["231", "312"])] {
                if let Some(s) = generate(n, &t).find(|s| crs(s) != 0) {
                    return Err(format!("{s} in S_{n}({t}) has {} crossings", crs(&s)));
                }
            }
            Ok(())
        }),
        check("recurrence-132-213-refined", 1, Cap::Pair, |_, n| {
            // one pass, bucketed by the positions of 1 and n
            let mut cells = vec![vec![vec![0u64; 1]; n + 1]; n + 1];
            crate::enumerate::for_each_avoider(n, &pats(&["132", "213"]), |s| {
                let k = s.iter().position(|&v| v == 1).expect("non-empty") + 1;
                let j = s.iter().position(|&v| v as usize == n).expect("non-empty") + 1;
                let c = crs(s) as usize;
                let cell = &mut cells[k][j];
                if cell.len() <= c {
                    cell.resize(c + 1, 0);
                }
                cell[c] += 1;
            });
            for k in 1..=n {
                for j in 1..=n {
                    let want = QPoly::from_counts(&cells[k][j]);
                    let got = rec_213_132(n, k, j).map_err(|e| e.to_string())?;
                    if got != want {
                        return Err(format!("k = {k}, j = {j}: recurrence {got}, enumeration {want}"));
                    }
                }
            }
            Ok(())
        }),
        check("recurrence-132-213-total", 0, Cap::Pair, |ctx, n| {
            expect_eq("F_n(132,213)", f_213_132(n), ctx.f(n, &pats(&["132", "213"])))
        }),
        check("three-term-recurrence-231-321", 2, Cap::Pair, |ctx, n| {
            let t = pats(&["231", "321"]);
            let want = &(&QPoly::from_i64s(&[1, 1]) * &ctx.f(n - 1, &t)) + &(&QPoly::from_i64s(&[1, -1]) * &ctx.f(n - 2, &t));
            if n == 2 {
                return expect_eq("F_2", ctx.f(2, &t), QPoly::constant(2));
            }
            expect_eq("F_n", ctx.f(n, &t), want)
        }),
        check("pair-123-312-vs-231", 1, Cap::Pair, |ctx, n| {
            let want = &QPoly::constant(n as i64 - 1) + &ctx.f(n - 1, &pats(&["123", "231"]));
            if n < 3 {
                return Ok(());
            }
            expect_eq("F_n(123,312)", ctx.f(n, &pats(&["123", "312"])), want)
        }),
        check("r-table-classes", 0, Cap::Class, |ctx, n| {
            let r = r_table(n + 1);
            for t in ["132", "213"] {
                expect_eq(&format!("F_{n}(312,{t})"), ctx.f(n, &pats(&["312", t])), r[n][0].clone())?;
                expect_eq(&format!("F_{n}(231,{t})"), ctx.f(n, &pats(&["231", t])), r[n + 1][1].clone())?;
            }
            Ok(())
        }),
        check("reversed-suffix-table", 0, Cap::Class, |_, n| {
            let r = r_table(n);
            for t in ["132", "213"] {
                let set = pats(&["312", t]);
                for k in 0..=n {
                    let got = refined(n, &set, Refinement::ReversedSuffix { k });
                    if got != r[n][k] {
                        return Err(format!("T = {set}, k = {k}: {got} vs R = {}", r[n][k]));
                    }
                }
            }
            Ok(())
        }),
        check("reversed-suffix-recurrence", 2, Cap::Class, |_, n| {
            let set = pats(&["213", "312"]);
            for k in 1..n - 1 {
                let g = |m: usize, k: usize| refined(m, &set, Refinement::ReversedSuffix { k });
                let e = (k - 1).min(n - 1 - k) as u32;
                let want = &g(n - 1, k).shift(e) + &g(n, k + 1);
                let got = g(n, k);
                if got != want {
                    return Err(format!("k = {k}: {got} vs {want}"));
                }
            }
            Ok(())
        }),
        check("pascal-corollary", 2, Cap::Class, |_, n| {
            let want = QPoly::from_i64s(&[1, 1]).pow(n as u32 - 2);
            let a = refined(n, &pats(&["123", "132"]), Refinement::OneAt { k: n - 1 });
            let b = refined(n, &pats(&["123", "213"]), Refinement::LastIs { k: 2 });
            expect_eq("S_n^(n-1)(123,132)", a, want.clone())?;
            expect_eq("S_(n,2)(123,213)", b, want)
        }),
    ]);
    out
}

// ---------------------------------------------------------------------------
// Suites

fn all_checks() -> Vec<Check> {
    let mut v = perm_checks();
    v.extend(lemma_checks());
    v.extend(bijection_checks());
    v.extend(series_checks());
    v.extend(enumeration_checks());
    v.extend(pair_checks());
    v
}

/// Suite names with their member checks. `all` runs every check once.
pub const SUITES: &[(&str, &[&str])] = &[
    (
        "perm-core",
        &[
            "crs-inv-exc-nes",
            "crs-nes-symmetry",
            "involutions",
            "crs-inverse-tunnels",
            "reverse-complement-crs",
            "direct-sum-crs",
            "direct-product-crs",
            "shift-invariance",
            "sum-decompose-roundtrip",
            "product-decompose-roundtrip",
        ],
    ),
    (
        "lemmas",
        &[
            "insertion-lemma",
            "crs-inverse-tunnels",
            "insert-last-one",
            "insert-one-at-k",
            "reverse-complement-crs",
            "insert-front",
            "insert-front-reversed-suffix",
            "sigma-nkj-crossings",
        ],
    ),
    (
        "bijections",
        &[
            "theta-preserves-crs",
            "theta-recursive-equals-pipeline",
            "theta-inverse-roundtrip",
            "theta-fp-exc",
            "gamma-fp-exc-crs",
            "rsk-fast-path",
            "psi-injective",
            "phi-roundtrip",
            "dyck-half-balance",
            "tunnels-fp-exc",
            "t-set-bound",
            "tunnel-left-rule",
            "theta-sum-product",
            "irreducible-correspondence",
            "f-maps-crs",
            "g-k-bijection",
        ],
    ),
    ("theta-preserves-crs", &["theta-preserves-crs"]),
    ("theta-formulations", &["theta-recursive-equals-pipeline"]),
    (
        "equidistribution",
        &[
            "catalan-class-sizes",
            "equidistribution",
            "catalan-continued-fraction",
            "exc-crs-catalan",
            "fp-exc-crs-triple",
        ],
    ),
    (
        "qseries",
        &[
            "catalan-continued-fraction",
            "qp-continued-fraction",
            "xy-continued-fraction",
            "inv-catalan",
            "r-table-powers-of-two",
        ],
    ),
    ("gf-relations", &["gf-312-231", "gf-312-123", "gf-312-tau"]),
    (
        "refined",
        &["fundamental-proposition", "unrestricted-symmetry", "f-n-image", "refinement-partition"],
    ),
    (
        "r-table",
        &[
            "r-table-classes",
            "reversed-suffix-table",
            "reversed-suffix-recurrence",
            "r-table-powers-of-two",
        ],
    ),
    ("pascal", &["pascal-corollary"]),
];

/// Names of every suite, `all` first.
pub fn suite_names() -> Vec<&'static str> {
    let mut v = vec!["all", "pair-formulas"];
    v.extend(SUITES.iter().map(|(n, _)| *n));
    v
}

/// Every check name in report order.
pub fn check_names() -> Vec<String> {
    all_checks().into_iter().map(|c| c.name).collect()
}

fn select(suite: &str) -> Result<Vec<Check>> {
    let checks = all_checks();
    if suite == "all" {
        return Ok(checks);
    }
    if suite == "pair-formulas" {
        let pair: BTreeSet<String> = pair_checks().into_iter().map(|c| c.name).collect();
        return Ok(checks
            .into_iter()
            .filter(|c| pair.contains(&c.name) && !c.name.starts_with("r-table") && !c.name.starts_with("reversed") && c.name != "pascal-corollary")
            .collect());
    }
    if let Some((_, names)) = SUITES.iter().find(|(n, _)| *n == suite) {
        let mut by_name: HashMap<String, Check> = checks.into_iter().map(|c| (c.name.clone(), c)).collect();
        return Ok(names.iter().filter_map(|n| by_name.remove(*n)).collect());
    }
    // a single check may be run by name
    let mut matching: Vec<Check> = checks.into_iter().filter(|c| c.name == suite).collect();
    if matching.is_empty() {
        Err(Error::UnknownSuite(suite.to_string()))
    } else {
        Ok(vec![matching.remove(0)])
    }
}

/// Runs a suite (or a single check by name) and collects one record per
/// check and `n`.
pub fn verify(suite: &str, n_max: usize) -> Result<Report> {
    run_suite(suite, &VerifyConfig::with_nmax(n_max), n_max)
}

/// Like [`verify`] with explicit caps; `n_max` is only echoed in the report.
pub fn run_suite(suite: &str, cfg: &VerifyConfig, n_max: usize) -> Result<Report> {
    let checks = select(suite)?;
    FULL_CAP.with(|c| c.set(cfg.full_nmax));
    let ctx = Ctx::new();
    let mut records = Vec::new();
    for c in &checks {
        for n in c.lo..=cfg.cap(c.cap) {
            let start = Instant::now();
            let outcome = (c.run)(&ctx, n);
            let millis = cfg.timing.then(|| start.elapsed().as_millis() as u64);
            let failed = outcome.is_err();
            records.push(CheckRecord {
                name: c.name.clone(),
                n,
                status: if failed { Status::Fail } else { Status::Pass },
                counterexample: outcome.err(),
                millis,
            });
            if failed {
                break;
            }
        }
    }
    Ok(Report {
        suite: suite.to_string(),
        n_max,
        checks: records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            full_nmax: 5,
            class_nmax: 6,
            pair_nmax: 7,
            lemma_nmax: 5,
            sigma_nmax: 8,
            series_order: 6,
            timing: false,
        }
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(verify("", 5).unwrap_err(), Error::UnknownSuite(String::new()));
        assert!(matches!(verify("no-such-suite", 5), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn every_suite_member_exists() {
        let names: BTreeSet<String> = check_names().into_iter().collect();
        for (suite, members) in SUITES {
            for m in *members {
                assert!(names.contains(*m), "{suite}: {m}");
            }
        }
    }

    #[test]
    fn small_run_is_green() {
        let r = run_suite("all", &small(), 6).unwrap();
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }
}
