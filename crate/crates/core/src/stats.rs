//! Crossings, nestings, the classic statistics and the refined counts used by
//! the insertion lemmas.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::perm::inverse_of;

/// A pair of positions `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcPair {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for ArcPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[inline]
fn is_crossing(si: usize, sj: usize, i: usize, j: usize) -> bool {
    (j < si && si < sj) || (si < sj && sj <= i)
}

#[inline]
fn is_nesting(si: usize, sj: usize, i: usize, j: usize) -> bool {
    (j < sj && sj < si) || (sj < si && si <= i)
}

/// Pairs `(i,j)` with `i<j<σ(i)<σ(j)` or `σ(i)<σ(j)≤i<j`, sorted.
pub fn crossings(sigma: &[u32]) -> Vec<ArcPair> {
    pairs_where(sigma, is_crossing)
}

/// Pairs `(i,j)` with `i<j<σ(j)<σ(i)` or `σ(j)<σ(i)≤i<j`, sorted.
pub fn nestings(sigma: &[u32]) -> Vec<ArcPair> {
    pairs_where(sigma, is_nesting)
}

fn pairs_where(sigma: &[u32], pred: fn(usize, usize, usize, usize) -> bool) -> Vec<ArcPair> {
    let n = sigma.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if pred(sigma[i - 1] as usize, sigma[j - 1] as usize, i, j) {
                out.push(ArcPair { i, j });
            }
        }
    }
    out
}

pub fn crs(sigma: &[u32]) -> u32 {
    count_where(sigma, is_crossing)
}

pub fn nes(sigma: &[u32]) -> u32 {
    count_where(sigma, is_nesting)
}

fn count_where(sigma: &[u32], pred: fn(usize, usize, usize, usize) -> bool) -> u32 {
    let n = sigma.len();
    let mut c = 0;
    for i in 1..=n {
        let si = sigma[i - 1] as usize;
        for j in i + 1..=n {
            if pred(si, sigma[j - 1] as usize, i, j) {
                c += 1;
            }
        }
    }
    c
}

/// Crossings of a partial map given as `(position, value)` arcs. Used for
/// shifted words, whose letters are not a permutation of their positions.
pub fn crs_of_arcs(arcs: &[(u32, u32)]) -> u32 {
    let mut sorted = arcs.to_vec();
    sorted.sort_unstable();
    let mut c = 0;
    for (a, &(i, si)) in sorted.iter().enumerate() {
        for &(j, sj) in &sorted[a + 1..] {
            if is_crossing(si as usize, sj as usize, i as usize, j as usize) {
                c += 1;
            }
        }
    }
    c
}

pub fn exc(sigma: &[u32]) -> u32 {
    sigma
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize > i + 1)
        .count() as u32
}

pub fn fp(sigma: &[u32]) -> u32 {
    sigma
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize == i + 1)
        .count() as u32
}

pub fn des(sigma: &[u32]) -> u32 {
    sigma.windows(2).filter(|w| w[0] > w[1]).count() as u32
}

pub fn maj(sigma: &[u32]) -> u32 {
    sigma
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u32 + 1)
        .sum()
}

pub fn inv(sigma: &[u32]) -> u32 {
    let n = sigma.len();
    let mut c = 0;
    for i in 0..n {
        for j in i + 1..n {
            if sigma[i] > sigma[j] {
                c += 1;
            }
        }
    }
    c
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicStats {
    pub exc: u32,
    pub fp: u32,
    pub des: u32,
    pub inv: u32,
    pub maj: u32,
}

pub fn classic_stats(sigma: &[u32]) -> ClassicStats {
    ClassicStats {
        exc: exc(sigma),
        fp: fp(sigma),
        des: des(sigma),
        inv: inv(sigma),
        maj: maj(sigma),
    }
}

/// A statistic that can be asked for by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Crs,
    Nes,
    Inv,
    Exc,
    Fp,
    Des,
    Maj,
}

impl Statistic {
    pub const ALL: [Statistic; 7] = [
        Statistic::Crs,
        Statistic::Nes,
        Statistic::Inv,
        Statistic::Exc,
        Statistic::Fp,
        Statistic::Des,
        Statistic::Maj,
    ];

    pub fn eval(self, sigma: &[u32]) -> u32 {
        match self {
            Statistic::Crs => crs(sigma),
            Statistic::Nes => nes(sigma),
            Statistic::Inv => inv(sigma),
            Statistic::Exc => exc(sigma),
            Statistic::Fp => fp(sigma),
            Statistic::Des => des(sigma),
            Statistic::Maj => maj(sigma),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Crs => "crs",
            Statistic::Nes => "nes",
            Statistic::Inv => "inv",
            Statistic::Exc => "exc",
            Statistic::Fp => "fp",
            Statistic::Des => "des",
            Statistic::Maj => "maj",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown statistic `{s}`")))
    }
}

// ---------------------------------------------------------------------------
// Tunnel statistics of a permutation

/// `Ut(σ) = {i : σ⁻¹(i) < i < σ(i)}`
pub fn ut_set(sigma: &[u32]) -> Vec<usize> {
    let inv = inverse_of(sigma);
    (1..=sigma.len())
        .filter(|&i| (inv[i - 1] as usize) < i && i < sigma[i - 1] as usize)
        .collect()
}

/// `Lt(σ) = {i : σ(i) < i < σ⁻¹(i)}`. Not to be confused with the count of
/// left tunnels of a Dyck path.
pub fn lt_set(sigma: &[u32]) -> Vec<usize> {
    let inv = inverse_of(sigma);
    (1..=sigma.len())
        .filter(|&i| (sigma[i - 1] as usize) < i && i < inv[i - 1] as usize)
        .collect()
}

pub fn ut(sigma: &[u32]) -> u32 {
    ut_set(sigma).len() as u32
}

pub fn lt_stat(sigma: &[u32]) -> u32 {
    lt_set(sigma).len() as u32
}

/// Crossings with a strict lower clause: `σ(j)<σ(i)<i<j`.
pub fn crs_star(sigma: &[u32]) -> u32 {
    count_where(sigma, |si, sj, i, j| (j < si && si < sj) || (sj < si && si < i))
}

/// `α_k(σ) = #{i ≥ k : σ(i) < k}`
pub fn alpha_k(sigma: &[u32], k: usize) -> u32 {
    (k..=sigma.len())
        .filter(|&i| (sigma[i - 1] as usize) < k)
        .count() as u32
}

/// `X_j(σ) = {i : i+1 < j, σ(i) ≥ j}`
///
/// The bound is `i+1 < j` rather than `i < j`: for `i = j-1` the arc from
/// position 1 lands exactly on `i+1` and does not cross.
pub fn x_set(sigma: &[u32], j: usize) -> Vec<usize> {
    (1..=sigma.len())
        .filter(|&i| i + 1 < j && sigma[i - 1] as usize >= j)
        .collect()
}

/// `Y_j(σ) = {i : i+1 < j, σ(i) ≤ i, i+1 ≤ σ⁻¹(i+1)}`
pub fn y_set(sigma: &[u32], j: usize) -> Vec<usize> {
    let n = sigma.len();
    let inv = inverse_of(sigma);
    (1..n)
        .filter(|&i| i + 1 < j && sigma[i - 1] as usize <= i && i < inv[i] as usize)
        .collect()
}

/// `Z_j(σ) = {(i,k) : i < k < σ(i) = k+1 < σ(k), k+1 < j}`
///
/// Strict in `j`: a value `k+1 = j` is bumped by the insertion, which keeps
/// the crossing.
pub fn z_set(sigma: &[u32], j: usize) -> Vec<(usize, usize)> {
    let n = sigma.len();
    let mut out = Vec::new();
    for i in 1..=n {
        let si = sigma[i - 1] as usize;
        if si < 2 {
            continue;
        }
        let k = si - 1;
        if i < k && k <= n && k + 1 < j && sigma[k - 1] as usize > k + 1 {
            out.push((i, k));
        }
    }
    out
}

/// Insertion-lemma counts `A1..A4(π, a, b)` over `b ≤ i < a`.
///
/// `A2` counts `a ≤ π⁻¹(i)`: positions from `a` on move right by one, so
/// the equality case also ends up beyond the inserted letter.
pub fn insertion_counts(pi: &[u32], a: usize, b: usize) -> Result<[u32; 4]> {
    let n = pi.len();
    check_range("b", b, 1, n + 1)?;
    check_range("a", a, b, n + 1)?;
    let inv = inverse_of(pi);
    let mut out = [0u32; 4];
    for i in b..a {
        let p = pi[i - 1] as usize;
        let q = inv[i - 1] as usize;
        out[0] += (p < b) as u32;
        out[1] += (a <= q) as u32;
        out[2] += (q < i && i < p) as u32;
        out[3] += (p < i && i < q) as u32;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedStats {
    pub ut: u32,
    pub lt: u32,
    pub crs_star: u32,
    pub ut_k_minus: u32,
    pub ut_k_plus: u32,
    pub lt_k_minus: u32,
    pub lt_k_plus: u32,
    pub alpha_k: u32,
    pub x_j: Vec<usize>,
    pub y_j: Vec<usize>,
    pub z_j: Vec<(usize, usize)>,
}

/// All refined counts at once. Requires `1 ≤ k ≤ n` and `1 ≤ j ≤ n+1`.
pub fn refined_stats(sigma: &[u32], k: usize, j: usize) -> Result<RefinedStats> {
    let n = sigma.len();
    check_range("k", k, 1, n.max(1))?;
    check_range("j", j, 1, n + 1)?;
    let uts = ut_set(sigma);
    let lts = lt_set(sigma);
    let ut_k_minus = uts.iter().filter(|&&i| i < k).count() as u32;
    let lt_k_minus = lts.iter().filter(|&&i| i < k).count() as u32;
    Ok(RefinedStats {
        ut: uts.len() as u32,
        lt: lts.len() as u32,
        crs_star: crs_star(sigma),
        ut_k_minus,
        ut_k_plus: uts.len() as u32 - ut_k_minus,
        lt_k_minus,
        lt_k_plus: lts.len() as u32 - lt_k_minus,
        alpha_k: alpha_k(sigma, k),
        x_j: x_set(sigma, j),
        y_j: y_set(sigma, j),
        z_j: z_set(sigma, j),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ap(v: &[(usize, usize)]) -> Vec<ArcPair> {
        v.iter().map(|&(i, j)| ArcPair { i, j }).collect()
    }

    #[test]
    fn crossing_and_nesting_examples() {
        let s = p("4735126");
        assert_eq!(crossings(&s), ap(&[(1, 2), (5, 6), (6, 7)]));
        assert_eq!(nestings(&s), ap(&[(2, 4), (3, 5), (3, 6)]));
        assert_eq!(crs(&s), 3);
        assert_eq!(nes(&s), 3);
        assert_eq!(crs(&p("312")), 1);
        assert_eq!(crs(&Permutation::identity(6)), 0);
        assert_eq!(nes(&p("321")), 1);
        assert_eq!(crs(&[]), 0);
    }

    #[test]
    fn classic_examples() {
        let id = Permutation::identity(5);
        assert_eq!(
            classic_stats(&id),
            ClassicStats { exc: 0, fp: 5, des: 0, inv: 0, maj: 0 }
        );
        assert_eq!(inv(&Permutation::decreasing(6)), 15);
        assert_eq!(maj(&p("3142")), 1 + 3);
    }

    #[test]
    fn tunnel_stat_examples() {
        assert_eq!((ut(&p("312")), lt_stat(&p("312"))), (0, 1));
        assert_eq!((ut(&p("231")), lt_stat(&p("231"))), (1, 0));
        let r = refined_stats(&Permutation::identity(4), 2, 3).unwrap();
        assert_eq!(r.ut + r.lt + r.alpha_k + r.crs_star, 0);
        assert!(r.x_j.is_empty() && r.z_j.is_empty());
        // fixed points followed by a fixed point land in Y
        assert_eq!(r.y_j, vec![1]);
        assert!(refined_stats(&p("312"), 4, 1).is_err());
        assert!(refined_stats(&p("312"), 1, 5).is_err());
    }
}
