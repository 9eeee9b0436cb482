//! Brute-force generation of pattern classes and assembly of distribution
//! polynomials.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{check_range, Error, Result};
use crate::perm::{occurs_using_last, PatternSet, Permutation};
use crate::poly::{MultiPoly, QPoly};
use crate::stats::Statistic;

/// Calls `visit` on every `σ ∈ S_n(T)` in lexicographic order. A prefix is
/// extended only while it avoids every pattern, and the check looks only at
/// occurrences that use the newest letter.
pub fn for_each_avoider<F: FnMut(&[u32])>(n: usize, patterns: &PatternSet, mut visit: F) {
    let pats: Vec<&[u32]> = patterns.iter().map(|p| p.as_slice()).collect();
    if pats.iter().any(|p| p.len() == 1) {
        if n == 0 {
            visit(&[]);
        }
        return;
    }
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    extend(n, &pats, &mut prefix, &mut used, &mut visit);
}

/// Same as [`for_each_avoider`] restricted to `σ(1) = first`.
pub fn for_each_avoider_from<F: FnMut(&[u32])>(
    n: usize,
    patterns: &PatternSet,
    first: u32,
    mut visit: F,
) {
    let pats: Vec<&[u32]> = patterns.iter().map(|p| p.as_slice()).collect();
    if first == 0 || first as usize > n || pats.iter().any(|p| p.len() == 1) {
        return;
    }
    let mut prefix = vec![first];
    let mut used = vec![false; n + 1];
    used[first as usize] = true;
    extend(n, &pats, &mut prefix, &mut used, &mut visit);
}

fn extend<F: FnMut(&[u32])>(
    n: usize,
    pats: &[&[u32]],
    prefix: &mut Vec<u32>,
    used: &mut [bool],
    visit: &mut F,
) {
    if prefix.len() == n {
        visit(prefix);
        return;
    }
    for v in 1..=n as u32 {
        if used[v as usize] {
            continue;
        }
        prefix.push(v);
        if !pats.iter().any(|t| occurs_using_last(prefix, t)) {
            used[v as usize] = true;
            extend(n, pats, prefix, used, visit);
            used[v as usize] = false;
        }
        prefix.pop();
    }
}

/// Lexicographic stream over `S_n(T)`.
pub struct Avoiders {
    n: usize,
    pats: Vec<Permutation>,
    prefix: Vec<u32>,
    used: Vec<bool>,
    /// Next candidate value to try at each depth.
    next: Vec<u32>,
    done: bool,
}

impl Avoiders {
    fn admissible(&self) -> bool {
        !self.pats.iter().any(|t| occurs_using_last(&self.prefix, t))
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = Permutation::from_vec_unchecked(self.prefix.clone());
                // backtrack once so the following call resumes the search
                if let Some(v) = self.prefix.pop() {
                    self.used[v as usize] = false;
                } else {
                    self.done = true;
                }
                return Some(out);
            }
            let mut advanced = false;
            while self.next[depth] <= self.n as u32 {
                let v = self.next[depth];
                self.next[depth] += 1;
                if self.used[v as usize] {
                    continue;
                }
                self.prefix.push(v);
                if self.admissible() {
                    self.used[v as usize] = true;
                    if depth + 1 < self.n {
                        self.next[depth + 1] = 1;
                    }
                    advanced = true;
                    break;
                }
                self.prefix.pop();
            }
            if !advanced {
                match self.prefix.pop() {
                    Some(v) => self.used[v as usize] = false,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Every `σ ∈ S_n(T)`, each once, in lexicographic order.
pub fn generate(n: usize, patterns: &PatternSet) -> Avoiders {
    let trivial = patterns.iter().any(|p| p.len() == 1);
    Avoiders {
        n,
        pats: patterns.iter().cloned().collect(),
        prefix: Vec::with_capacity(n),
        used: vec![false; n + 1],
        next: vec![1; n.max(1)],
        done: trivial && n > 0,
    }
}

pub fn class_size(n: usize, patterns: &PatternSet) -> u64 {
    fold_parallel(n, patterns, || 0u64, |acc, _| *acc += 1, |a, b| a + b)
}

/// Folds over `S_n(T)` with one worker per first letter and merges the
/// partial results in first-letter order, so the outcome is deterministic.
pub fn fold_parallel<A, I, F, M>(n: usize, patterns: &PatternSet, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &[u32]) + Sync,
    M: Fn(A, A) -> A,
{
    if n < 7 {
        let mut acc = init();
        for_each_avoider(n, patterns, |s| fold(&mut acc, s));
        return acc;
    }
    let parts: Vec<A> = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            for_each_avoider_from(n, patterns, first, |s| fold(&mut acc, s));
            acc
        })
        .collect();
    parts.into_iter().fold(init(), merge)
}

/// Which subset of the class a distribution runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Refinement {
    None,
    /// `S_n^k`: `σ(k) = 1`
    OneAt { k: usize },
    /// `S_{n,k}`: `σ(n) = k`
    LastIs { k: usize },
    /// `S_{n,j}^k`: `σ(k) = 1` and `σ(n) = j`
    OneAtLastIs { k: usize, j: usize },
    /// `σ(k) = 1` and `σ(j) = n`
    OneAtMaxAt { k: usize, j: usize },
    /// `G_n^{[k]}`: `σ(n+1-i) = i` for every `i ≤ k`
    ReversedSuffix { k: usize },
}

impl Refinement {
    pub fn validate(&self, n: usize) -> Result<()> {
        let hi = n.max(1);
        match *self {
            Refinement::None => Ok(()),
            Refinement::OneAt { k } | Refinement::LastIs { k } => check_range("k", k, 1, hi),
            Refinement::OneAtLastIs { k, j } | Refinement::OneAtMaxAt { k, j } => {
                check_range("k", k, 1, hi)?;
                check_range("j", j, 1, hi)
            }
            Refinement::ReversedSuffix { k } => check_range("k", k, 0, n),
        }
    }

    pub fn admits(&self, s: &[u32]) -> bool {
        let n = s.len();
        match *self {
            Refinement::None => true,
            Refinement::OneAt { k } => s.get(k.wrapping_sub(1)) == Some(&1),
            Refinement::LastIs { k } => s.last() == Some(&(k as u32)),
            Refinement::OneAtLastIs { k, j } => {
                s.get(k.wrapping_sub(1)) == Some(&1) && s.last() == Some(&(j as u32))
            }
            Refinement::OneAtMaxAt { k, j } => {
                s.get(k.wrapping_sub(1)) == Some(&1) && s.get(j.wrapping_sub(1)) == Some(&(n as u32))
            }
            Refinement::ReversedSuffix { k } => {
                k <= n && (1..=k).all(|i| s[n - i] == i as u32)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionQuery {
    pub n: usize,
    pub patterns: PatternSet,
    pub statistic: Statistic,
    pub refinement: Refinement,
}

impl DistributionQuery {
    pub fn new(n: usize, patterns: PatternSet, statistic: Statistic) -> Self {
        DistributionQuery {
            n,
            patterns,
            statistic,
            refinement: Refinement::None,
        }
    }

    pub fn refined(mut self, r: Refinement) -> Self {
        self.refinement = r;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionResult {
    pub polynomial: QPoly,
    pub count: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub fn distribution(query: &DistributionQuery) -> Result<DistributionResult> {
    query.refinement.validate(query.n)?;
    let start = Instant::now();
    let stat = query.statistic;
    let refine = query.refinement;
    let hist = fold_parallel(
        query.n,
        &query.patterns,
        Vec::<u64>::new,
        |h, s| {
            if refine.admits(s) {
                let v = stat.eval(s) as usize;
                if h.len() <= v {
                    h.resize(v + 1, 0);
                }
                h[v] += 1;
            }
        },
        |mut a, b| {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    let count = hist.iter().sum();
    Ok(DistributionResult {
        polynomial: QPoly::from_counts(&hist),
        count,
        elapsed: start.elapsed(),
    })
}

/// `Σ q^{crs(σ)}` over `S_n(T)`.
pub fn crs_distribution(n: usize, patterns: &PatternSet) -> QPoly {
    distribution(&DistributionQuery::new(n, patterns.clone(), Statistic::Crs))
        .expect("unrefined query is always valid")
        .polynomial
}

pub fn refined_crs_distribution(n: usize, patterns: &PatternSet, r: Refinement) -> Result<QPoly> {
    Ok(distribution(&DistributionQuery::new(n, patterns.clone(), Statistic::Crs).refined(r))?.polynomial)
}

/// Variable names used for joint distributions of 1, 2 or 3 statistics.
pub fn joint_vars(r: usize) -> &'static [&'static str] {
    match r {
        1 => &["q"],
        2 => &["q", "p"],
        _ => &["x", "q", "p"],
    }
}

/// `Σ Π v_i^{stat_i(σ)}` over `S_n(T)`; variables are named by
/// [`joint_vars`].
pub fn joint_distribution(n: usize, patterns: &PatternSet, stats: &[Statistic]) -> Result<MultiPoly> {
    if stats.is_empty() || stats.len() > 3 {
        return Err(Error::InvalidInput(format!(
            "joint distributions take 1 to 3 statistics, got {}",
            stats.len()
        )));
    }
    let hist = fold_parallel(
        n,
        patterns,
        BTreeMap::<Vec<u32>, u64>::new,
        |h, s| {
            let key: Vec<u32> = stats.iter().map(|st| st.eval(s)).collect();
            *h.entry(key).or_default() += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    );
    Ok(MultiPoly::from_counts(joint_vars(stats.len()), hist))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::contains_pattern;
    use crate::stats::crs;

    fn all_lex(n: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for_each_avoider(n, &PatternSet::empty(), |s| out.push(s.to_vec()));
        out
    }

    #[test]
    fn small_classes() {
        assert_eq!(generate(3, &PatternSet::of(&["321"])).count(), 5);
        let e: Vec<_> = generate(0, &PatternSet::of(&["123"])).collect();
        assert_eq!(e, vec![Permutation::empty()]);
        assert_eq!(generate(0, &PatternSet::empty()).count(), 1);
        for s in generate(4, &PatternSet::of(&["312", "321"])) {
            assert_eq!(crs(&s), 0);
        }
        assert_eq!(generate(3, &PatternSet::of(&["1"])).count(), 0);
    }

    #[test]
    fn iterator_matches_visitor_and_is_lexicographic() {
        for n in 0..=6 {
            let all = all_lex(n);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            let expected = (1..=n as u64).product::<u64>();
            assert_eq!(all.len() as u64, expected);
            for pats in [&["321"][..], &["132", "4231"], &["2413", "3142"]] {
                let t = PatternSet::of(pats);
                let filt: Vec<Vec<u32>> = all
                    .iter()
                    .filter(|s| t.iter().all(|p| !contains_pattern(s, p)))
                    .cloned()
                    .collect();
                let it: Vec<Vec<u32>> = generate(n, &t).map(|p| p.into_vec()).collect();
                assert_eq!(it, filt, "{t} n={n}");
            }
        }
    }

    #[test]
    fn distribution_examples() {
        let d = crs_distribution(3, &PatternSet::of(&["321"]));
        assert_eq!(d, QPoly::from_i64s(&[4, 1]));
        let d = crs_distribution(4, &PatternSet::of(&["321", "231"]));
        assert_eq!(d, QPoly::from_i64s(&[5, 2, 1]));
        let d = crs_distribution(5, &PatternSet::of(&["312", "213"]));
        assert_eq!(d, QPoly::from_i64s(&[11, 4, 1]));
        let q = DistributionQuery::new(4, PatternSet::empty(), Statistic::Crs)
            .refined(Refinement::OneAt { k: 9 });
        assert!(distribution(&q).is_err());
    }

    #[test]
    fn parallel_fold_matches_serial() {
        let t = PatternSet::of(&["321"]);
        assert_eq!(class_size(9, &t), 4862);
        assert_eq!(class_size(8, &PatternSet::empty()), 40320);
    }

    #[test]
    fn joint_needs_one_to_three_stats() {
        assert!(joint_distribution(3, &PatternSet::empty(), &[]).is_err());
        let four = [Statistic::Crs; 4];
        assert!(joint_distribution(3, &PatternSet::empty(), &four).is_err());
    }
}
