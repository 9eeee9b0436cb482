//! Permutations in one-line notation and the structural operations on them.
//!
//! Positions and values are 1-indexed: `sigma[i - 1]` is the image of `i`.
//! The empty permutation is the unique element of `S_0`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};

/// A bijection of `{1..n}` written as `sigma(1) sigma(2) ... sigma(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `values` is a permutation of `{1..n}`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::InvalidInput(format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidInput(format!("value {v} appears twice")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// `n n-1 ... 1`
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Image of the 1-indexed position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        Permutation(inverse_of(&self.0))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }
}

impl Deref for Permutation {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.0
    }
}

/// Permutations of length at most 9 print as bare digits (`4735126`), longer
/// ones space separated. The empty permutation prints as `ε`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let sep = if self.0.len() <= 9 { "" } else { " " };
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(sep)?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Accepts `4735126`, `4 7 3 5 1 2 6` or `4,7,3,5,1,2,6`. A run of digits
/// without separators is split into single digits.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_word(s)?)
    }
}

/// Parses a word of positive integers in any of the accepted notations.
pub fn parse_word(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == "ε" || s == "e" {
        return Ok(Vec::new());
    }
    let has_sep = s.contains(|c: char| c == ',' || c.is_whitespace());
    let parse = |tok: &str| {
        tok.parse::<u32>()
            .map_err(|_| Error::InvalidInput(format!("`{tok}` is not a positive integer")))
    };
    if has_sep {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse)
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::InvalidInput(format!("`{c}` is not a digit")))
            })
            .collect()
    }
}

pub(crate) fn inverse_of(sigma: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; sigma.len()];
    for (i, &v) in sigma.iter().enumerate() {
        inv[v as usize - 1] = i as u32 + 1;
    }
    inv
}

/// Relabels a word of distinct integers to `{1..n}` preserving relative order.
pub fn reduce<T: Ord + Copy>(word: &[T]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    if order.windows(2).any(|w| word[w[0]] == word[w[1]]) {
        return Err(Error::InvalidInput("duplicate entries in word".into()));
    }
    let mut out = vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Ok(Permutation(out))
}

/// Reduction for words already known to be duplicate free.
pub(crate) fn reduce_distinct(word: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_unstable_by_key(|&i| word[i]);
    let mut out = vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation(out)
}

// ---------------------------------------------------------------------------
// Pattern containment

/// True iff some subsequence of `sigma` is order-isomorphic to `tau`.
pub fn contains_pattern(sigma: &[u32], tau: &[u32]) -> bool {
    match tau.len() {
        0 => true,
        _ if tau.len() > sigma.len() => false,
        1 => true,
        2 => {
            if tau[0] < tau[1] {
                has_ascent_pair(sigma)
            } else {
                has_ascent_pair_rev(sigma)
            }
        }
        3 => contains_len3(sigma, tau),
        _ => {
            let mut chosen = Vec::with_capacity(tau.len());
            dfs_contains(sigma, tau, 0, &mut chosen)
        }
    }
}

pub fn avoids_all(sigma: &[u32], patterns: &PatternSet) -> bool {
    patterns.iter().all(|t| !contains_pattern(sigma, t))
}

fn has_ascent_pair(sigma: &[u32]) -> bool {
    let mut min = u32::MAX;
    for &v in sigma {
        if v > min {
            return true;
        }
        min = min.min(v);
    }
    false
}

fn has_ascent_pair_rev(sigma: &[u32]) -> bool {
    let mut max = 0;
    for &v in sigma {
        if v < max {
            return true;
        }
        max = max.max(v);
    }
    false
}

/// O(n^2) scan over the middle letter of a length-3 occurrence.
fn contains_len3(sigma: &[u32], tau: &[u32]) -> bool {
    let left_above = tau[0] > tau[1];
    let right_above = tau[2] > tau[1];
    let first_below_last = tau[0] < tau[2];
    let n = sigma.len();
    for j in 1..n - 1 {
        let mid = sigma[j];
        let (mut lmin, mut lmax) = (u32::MAX, 0u32);
        for &v in &sigma[..j] {
            if (v > mid) == left_above {
                lmin = lmin.min(v);
                lmax = lmax.max(v);
            }
        }
        if lmax == 0 {
            continue;
        }
        let (mut rmin, mut rmax) = (u32::MAX, 0u32);
        for &v in &sigma[j + 1..] {
            if (v > mid) == right_above {
                rmin = rmin.min(v);
                rmax = rmax.max(v);
            }
        }
        if rmax == 0 {
            continue;
        }
        let found = if first_below_last {
            lmin < rmax
        } else {
            lmax > rmin
        };
        if found {
            return true;
        }
    }
    false
}

fn consistent(tau: &[u32], chosen: &[u32], v: u32) -> bool {
    let c = chosen.len();
    chosen
        .iter()
        .enumerate()
        .all(|(l, &w)| (w < v) == (tau[l] < tau[c]))
}

fn dfs_contains(sigma: &[u32], tau: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
    let c = chosen.len();
    if c == tau.len() {
        return true;
    }
    let need = tau.len() - c;
    for idx in start..=sigma.len() - need {
        let v = sigma[idx];
        if consistent(tau, chosen, v) {
            chosen.push(v);
            if dfs_contains(sigma, tau, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// True iff `word` has an occurrence of `tau` that uses its last letter.
/// This is the check applied when a prefix is extended during generation.
pub(crate) fn occurs_using_last(word: &[u32], tau: &[u32]) -> bool {
    let m = tau.len();
    if m == 0 || m > word.len() {
        return m == 0;
    }
    let last = *word.last().unwrap();
    if m == 1 {
        return true;
    }
    let head = &word[..word.len() - 1];
    if m == 3 {
        // need i < j with the pattern relations among (head[i], head[j], last)
        let first_above_last = tau[0] > tau[2];
        let second_above_last = tau[1] > tau[2];
        let first_above_second = tau[0] > tau[1];
        let mut best: Option<u32> = None; // extreme admissible first letter so far
        for &v in head {
            if (v > last) == second_above_last {
                if let Some(b) = best {
                    if (b > v) == first_above_second {
                        return true;
                    }
                }
            }
            if (v > last) == first_above_last {
                best = Some(match best {
                    None => v,
                    Some(b) if first_above_second => b.max(v),
                    Some(b) => b.min(v),
                });
            }
        }
        return false;
    }
    let mut chosen = Vec::with_capacity(m);
    dfs_with_last(head, tau, 0, &mut chosen, last)
}

fn dfs_with_last(head: &[u32], tau: &[u32], start: usize, chosen: &mut Vec<u32>, last: u32) -> bool {
    let m = tau.len();
    if chosen.len() == m - 1 {
        return consistent(tau, chosen, last);
    }
    let need = m - 1 - chosen.len();
    if head.len() < need {
        return false;
    }
    for idx in start..=head.len() - need {
        let v = head[idx];
        if consistent(tau, chosen, v) {
            chosen.push(v);
            if dfs_with_last(head, tau, idx + 1, chosen, last) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Pattern sets

/// A finite set of reduced patterns. The empty set means "no restriction".
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PatternSet(BTreeSet<Permutation>);

impl PatternSet {
    pub fn empty() -> Self {
        PatternSet(BTreeSet::new())
    }

    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Self {
        PatternSet(patterns.into_iter().filter(|p| !p.is_empty()).collect())
    }

    /// Builds a set from one-line words such as `[312, 213]`, for tests and
    /// tables. Panics on malformed input.
    pub fn of(words: &[&str]) -> Self {
        PatternSet::new(words.iter().map(|w| w.parse::<Permutation>().expect("pattern")))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.0.contains(p)
    }

    /// `T^{-1}`
    pub fn inverse(&self) -> PatternSet {
        PatternSet(self.0.iter().map(|p| p.inverse()).collect())
    }

    pub fn map(&self, kind: Involution) -> PatternSet {
        PatternSet(self.0.iter().map(|p| kind.apply(p)).collect())
    }

    /// `T^{-1}(1)`: the positions of the letter 1 in each pattern.
    pub fn positions_of_one(&self) -> Vec<usize> {
        self.0
            .iter()
            .map(|p| p.iter().position(|&v| v == 1).unwrap() + 1)
            .collect()
    }

    pub fn max_len(&self) -> usize {
        self.0.iter().map(|p| p.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("none");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Comma separated reduced words; `none`, `-` or an empty string is the
/// empty set.
impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "none" || s == "-" || s == "∅" {
            return Ok(PatternSet::empty());
        }
        let mut set = BTreeSet::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let word = parse_word(tok)?;
            let p = Permutation::new(word).map_err(|_| {
                Error::InvalidInput(format!("pattern `{tok}` is not a reduced permutation"))
            })?;
            set.insert(p);
        }
        Ok(PatternSet(set))
    }
}

// ---------------------------------------------------------------------------
// Trivial involutions

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Involution {
    /// mirror: `r(σ)(j) = σ(n+1-j)`
    R,
    /// complement: `c(σ)(j) = n+1-σ(j)`
    C,
    /// inverse
    I,
    Rc,
    Rci,
}

impl Involution {
    pub const ALL: [Involution; 5] = [
        Involution::R,
        Involution::C,
        Involution::I,
        Involution::Rc,
        Involution::Rci,
    ];

    pub fn apply(self, sigma: &[u32]) -> Permutation {
        let n = sigma.len() as u32;
        let out = match self {
            Involution::R => sigma.iter().rev().copied().collect(),
            Involution::C => sigma.iter().map(|&v| n + 1 - v).collect(),
            Involution::I => inverse_of(sigma),
            Involution::Rc => sigma.iter().rev().map(|&v| n + 1 - v).collect(),
            Involution::Rci => {
                let mut out = vec![0u32; sigma.len()];
                for (i, &v) in sigma.iter().enumerate() {
                    out[(n - v) as usize] = n - i as u32;
                }
                out
            }
        };
        Permutation(out)
    }

    pub fn name(self) -> &'static str {
        match self {
            Involution::R => "r",
            Involution::C => "c",
            Involution::I => "i",
            Involution::Rc => "rc",
            Involution::Rci => "rci",
        }
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "r" => Involution::R,
            "c" => Involution::C,
            "i" => Involution::I,
            "rc" => Involution::Rc,
            "rci" => Involution::Rci,
            other => return Err(Error::InvalidInput(format!("unknown involution `{other}`"))),
        })
    }
}

// ---------------------------------------------------------------------------
// Shifts and insertions

/// `σ^{+a}`: adds `a` to every letter.
pub fn shift_up(sigma: &[u32], a: u32) -> Vec<u32> {
    sigma.iter().map(|&v| v + a).collect()
}

/// `σ^{i⋊a}`: adds `a` to every letter `>= i`.
pub fn shift_from(sigma: &[u32], i: u32, a: u32) -> Vec<u32> {
    sigma
        .iter()
        .map(|&v| if v >= i { v + a } else { v })
        .collect()
}

/// `σ^{(i,x)}`: bumps every letter `>= x` by one, then places `x` at
/// position `i`.
pub fn insert(sigma: &[u32], i: usize, x: u32) -> Result<Permutation> {
    let n = sigma.len();
    check_range("position", i, 1, n + 1)?;
    check_range("value", x as usize, 1, n + 1)?;
    Ok(Permutation(insert_raw(sigma, i, x)))
}

pub(crate) fn insert_raw(sigma: &[u32], i: usize, x: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(sigma.len() + 1);
    out.extend(sigma[..i - 1].iter().map(|&v| if v >= x { v + 1 } else { v }));
    out.push(x);
    out.extend(sigma[i - 1..].iter().map(|&v| if v >= x { v + 1 } else { v }));
    out
}

/// `σ^{(a,π)}`: inserts `π(t)` at position `a+t-1` for `t = 1..|π|`, left to
/// right.
pub fn multi_insert(sigma: &[u32], a: usize, pi: &[u32]) -> Result<Permutation> {
    let mut cur = sigma.to_vec();
    for (t, &x) in pi.iter().enumerate() {
        cur = insert(&cur, a + t, x)?.0;
    }
    Ok(Permutation(cur))
}

/// `σ1 ⊕ σ2 = σ1 · σ2^{+|σ1|}`
pub fn direct_sum(s1: &[u32], s2: &[u32]) -> Permutation {
    let mut out = s1.to_vec();
    out.extend(s2.iter().map(|&v| v + s1.len() as u32));
    Permutation(out)
}

/// `T(σ) = {i : σ^{-1}(i) > i < σ(i)}`
pub fn t_set(sigma: &[u32]) -> Vec<usize> {
    let inv = inverse_of(sigma);
    (1..=sigma.len())
        .filter(|&i| inv[i - 1] as usize > i && sigma[i - 1] as usize > i)
        .collect()
}

/// `α ⊗ β`, defined on 132-avoiders: the block `α^{+(k-1)}` is placed at
/// position `k = 1 + |T(β)|` inside `β^{k⋊|α|}`.
pub fn direct_product(alpha: &[u32], beta: &[u32]) -> Result<Permutation> {
    let p132 = [1, 3, 2];
    if contains_pattern(alpha, &p132) || contains_pattern(beta, &p132) {
        return Err(Error::Domain(
            "direct product is only defined on 132-avoiding permutations".into(),
        ));
    }
    Ok(direct_product_raw(alpha, beta))
}

fn direct_product_raw(alpha: &[u32], beta: &[u32]) -> Permutation {
    let k = 1 + t_set(beta).len();
    let shifted = shift_from(beta, k as u32, alpha.len() as u32);
    let mut out = Vec::with_capacity(alpha.len() + beta.len());
    out.extend_from_slice(&shifted[..k - 1]);
    out.extend(alpha.iter().map(|&v| v + k as u32 - 1));
    out.extend_from_slice(&shifted[k - 1..]);
    Permutation(out)
}

/// Splits `σ` into its ⊕-irreducible components, left to right.
pub fn sum_decompose(sigma: &[u32]) -> Vec<Permutation> {
    let mut parts = Vec::new();
    let mut start = 0;
    let mut max = 0u32;
    for (p, &v) in sigma.iter().enumerate() {
        max = max.max(v);
        if max as usize == p + 1 {
            let block = &sigma[start..=p];
            parts.push(Permutation(block.iter().map(|&v| v - start as u32).collect()));
            start = p + 1;
        }
    }
    parts
}

/// Splits a 132-avoiding `σ` into ⊗-irreducible factors `[α1, ..., αm]`
/// with `σ = α1 ⊗ (α2 ⊗ (... ⊗ αm))`.
pub fn product_decompose(sigma: &[u32]) -> Result<Vec<Permutation>> {
    if contains_pattern(sigma, &[1, 3, 2]) {
        return Err(Error::Domain(
            "product decomposition requires a 132-avoiding permutation".into(),
        ));
    }
    let mut parts = Vec::new();
    let mut cur = sigma.to_vec();
    while !cur.is_empty() {
        match split_product(&cur) {
            Some((alpha, beta)) => {
                parts.push(alpha);
                cur = beta.0;
            }
            None => {
                parts.push(Permutation(cur));
                break;
            }
        }
    }
    Ok(parts)
}

/// Finds `σ = α ⊗ β` with `|α|` minimal, hence `α` ⊗-irreducible.
fn split_product(sigma: &[u32]) -> Option<(Permutation, Permutation)> {
    let n = sigma.len();
    for p in 1..n {
        for k in 1..=n - p + 1 {
            let block = &sigma[k - 1..k - 1 + p];
            let lo = k as u32;
            let hi = (k + p - 1) as u32;
            if !block.iter().all(|&v| v >= lo && v <= hi) {
                continue;
            }
            let alpha = Permutation(block.iter().map(|&v| v - lo + 1).collect());
            let rest: Vec<u32> = sigma[..k - 1]
                .iter()
                .chain(&sigma[k - 1 + p..])
                .copied()
                .collect();
            let beta = reduce_distinct(&rest);
            if 1 + t_set(&beta).len() == k && direct_product_raw(&alpha, &beta).as_slice() == sigma {
                return Some((alpha, beta));
            }
        }
    }
    None
}

/// Folds a ⊗ factor list back together, right to left.
pub fn product_compose(parts: &[Permutation]) -> Result<Permutation> {
    let mut iter = parts.iter().rev();
    let mut acc = match iter.next() {
        Some(p) => p.clone(),
        None => return Ok(Permutation::empty()),
    };
    for p in iter {
        acc = direct_product(p, &acc)?;
    }
    Ok(acc)
}

pub fn sum_compose(parts: &[Permutation]) -> Permutation {
    parts
        .iter()
        .fold(Permutation::empty(), |acc, p| direct_sum(&acc, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[3, 9, 1, 8, 6]).unwrap(), p("25143"));
        assert_eq!(reduce(&[1, 2, 3]).unwrap(), p("123"));
        assert_eq!(reduce(&[40, 10, 30]).unwrap(), p("312"));
        assert!(matches!(reduce(&[1, 5, 1]), Err(Error::InvalidInput(_))));
        assert_eq!(reduce::<u32>(&[]).unwrap(), Permutation::empty());
    }

    #[test]
    fn containment_examples() {
        assert!(contains_pattern(&p("25143"), &p("132")));
        assert!(!contains_pattern(&p("25143"), &p("123")));
        assert!(!contains_pattern(&[], &[1]));
    }

    fn brute_contains(sigma: &[u32], tau: &[u32]) -> bool {
        let n = sigma.len();
        let m = tau.len();
        (0u32..1 << n).filter(|mask| mask.count_ones() as usize == m).any(|mask| {
            let sub: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| sigma[i]).collect();
            reduce(&sub).unwrap().as_slice() == tau
        })
    }

    fn all_perms(n: usize) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for q in all_perms(n - 1) {
            for i in 1..=n {
                out.push(insert_raw(&q, i, n as u32));
            }
        }
        out
    }

    #[test]
    fn specialized_scans_agree_with_subset_enumeration() {
        let patterns: Vec<Vec<u32>> = (1..=4).flat_map(all_perms).collect();
        for n in 0..=6 {
            for sigma in all_perms(n) {
                for tau in &patterns {
                    assert_eq!(
                        contains_pattern(&sigma, tau),
                        brute_contains(&sigma, tau),
                        "{sigma:?} {tau:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn last_letter_occurrence_matches_prefix_difference() {
        let patterns: Vec<Vec<u32>> = (2..=4).flat_map(all_perms).collect();
        for sigma in all_perms(6) {
            for tau in &patterns {
                let with = contains_pattern(&sigma, tau);
                let without = contains_pattern(&sigma[..5], tau);
                if !without {
                    assert_eq!(occurs_using_last(&sigma, tau), with, "{sigma:?} {tau:?}");
                }
            }
        }
    }

    #[test]
    fn involution_examples() {
        let pi = p("41532");
        assert_eq!(Involution::R.apply(&pi), p("23514"));
        assert_eq!(Involution::C.apply(&pi), p("25134"));
        assert_eq!(Involution::I.apply(&pi), p("25413"));
        assert_eq!(Involution::Rc.apply(&pi), p("43152"));
        assert_eq!(Involution::Rci.apply(&pi), p("35214"));
        assert_eq!(Involution::Rci.apply(&p("132")), p("213"));
    }

    #[test]
    fn shift_and_insert_examples() {
        assert_eq!(shift_up(&p("312"), 2), vec![5, 3, 4]);
        assert_eq!(shift_from(&p("4132"), 3, 2), vec![6, 1, 5, 2]);
        assert_eq!(insert(&p("3142"), 2, 3).unwrap(), p("43152"));
        assert_eq!(multi_insert(&p("3142"), 3, &p("213")).unwrap(), p("6241375"));
        assert_eq!(multi_insert(&p("3142"), 3, &[]).unwrap(), p("3142"));
        assert_eq!(
            multi_insert(&p("3142"), 2, &[3]).unwrap(),
            insert(&p("3142"), 2, 3).unwrap()
        );
        assert!(insert(&p("312"), 5, 1).is_err());
        assert!(insert(&p("312"), 1, 5).is_err());
    }

    #[test]
    fn sum_and_product_examples() {
        assert_eq!(direct_product(&p("312"), &p("543612")).unwrap(), p("875346912"));
        assert_eq!(direct_sum(&p("21"), &p("1")), p("213"));
        assert!(t_set(&Permutation::identity(5)).is_empty());
        assert!(direct_product(&p("132"), &p("1")).is_err());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(sum_decompose(&p("123")), vec![p("1"), p("1"), p("1")]);
        assert_eq!(sum_decompose(&p("2413")), vec![p("2413")]);
        let parts = product_decompose(&p("875346912")).unwrap();
        assert_eq!(product_compose(&parts).unwrap(), p("875346912"));
        assert!(product_decompose(&p("132")).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(p("4 7 3 5 1 2 6"), p("4735126"));
        assert_eq!(p("4,7,3,5,1,2,6"), p("4735126"));
        assert!("1 1".parse::<Permutation>().is_err());
        let t: PatternSet = "312, 213".parse().unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.to_string(), "213,312");
        assert!("none".parse::<PatternSet>().unwrap().is_empty());
        let long = Permutation::identity(10);
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
    }
}
