//! The matching set of a permutation and Robinson–Schensted restricted to
//! 321-avoiders.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::contains_pattern;

/// Ordered `(excedance value, non-excedance position)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MatchingSet {
    pub pairs: Vec<(u32, usize)>,
}

impl MatchingSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for MatchingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Two-pointer pass over excedance positions `e` and non-excedance positions
/// `a`: skip `a_q` when it precedes `e_p`, skip `e_p` when its value is too
/// small, and otherwise match them.
pub fn matching_set(sigma: &[u32]) -> MatchingSet {
    let mut exc = Vec::new();
    let mut non = Vec::new();
    for (idx, &v) in sigma.iter().enumerate() {
        if v as usize > idx + 1 {
            exc.push(idx + 1);
        } else {
            non.push(idx + 1);
        }
    }
    let (mut p, mut q) = (0, 0);
    let mut pairs = Vec::new();
    while p < exc.len() && q < non.len() {
        let (e, a) = (exc[p], non[q]);
        if e > a {
            q += 1;
        } else if sigma[e - 1] < sigma[a - 1] {
            p += 1;
        } else {
            pairs.push((sigma[e - 1], a));
            p += 1;
            q += 1;
        }
    }
    MatchingSet { pairs }
}

/// A pair of standard Young tableaux with at most two rows and equal shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauPair {
    pub p_row1: Vec<u32>,
    pub p_row2: Vec<u32>,
    pub q_row1: Vec<u32>,
    pub q_row2: Vec<u32>,
}

impl TableauPair {
    pub fn swapped(&self) -> TableauPair {
        TableauPair {
            p_row1: self.q_row1.clone(),
            p_row2: self.q_row2.clone(),
            q_row1: self.p_row1.clone(),
            q_row2: self.p_row2.clone(),
        }
    }

    /// Checks shape, row increase and column strictness.
    pub fn is_valid(&self) -> bool {
        fn tableau_ok(r1: &[u32], r2: &[u32]) -> bool {
            r1.len() >= r2.len()
                && r1.windows(2).all(|w| w[0] < w[1])
                && r2.windows(2).all(|w| w[0] < w[1])
                && r2.iter().zip(r1).all(|(b, a)| b > a)
        }
        self.p_row1.len() == self.q_row1.len()
            && self.p_row2.len() == self.q_row2.len()
            && tableau_ok(&self.p_row1, &self.p_row2)
            && tableau_ok(&self.q_row1, &self.q_row2)
    }
}

/// Four lines: the rows of `P`, then the rows of `Q`.
impl fmt::Display for TableauPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        writeln!(f, "{}", line(&self.p_row1))?;
        writeln!(f, "{}", line(&self.p_row2))?;
        writeln!(f, "{}", line(&self.q_row1))?;
        write!(f, "{}", line(&self.q_row2))
    }
}

pub(crate) fn require_321_avoiding(sigma: &[u32], what: &str) -> Result<()> {
    if contains_pattern(sigma, &[3, 2, 1]) {
        Err(Error::Domain(format!("{what} requires a 321-avoiding permutation")))
    } else {
        Ok(())
    }
}

/// RSK of a 321-avoider. The second rows of `P` and `Q` are read off the
/// matching set; the first rows are the complements.
pub fn rsk_two_row(sigma: &[u32]) -> Result<TableauPair> {
    require_321_avoiding(sigma, "two-row RSK")?;
    let m = matching_set(sigma);
    let mut p_row2: Vec<u32> = m.pairs.iter().map(|&(v, _)| v).collect();
    let mut q_row2: Vec<u32> = m.pairs.iter().map(|&(_, a)| a as u32).collect();
    p_row2.sort_unstable();
    q_row2.sort_unstable();
    let n = sigma.len() as u32;
    let complement = |row2: &[u32]| (1..=n).filter(|x| row2.binary_search(x).is_err()).collect();
    Ok(TableauPair {
        p_row1: complement(&p_row2),
        q_row1: complement(&q_row2),
        p_row2,
        q_row2,
    })
}

/// Textbook row insertion, returning every row of `P` and `Q`.
pub fn rsk_bumping(sigma: &[u32]) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (idx, &v) in sigma.iter().enumerate() {
        let mut x = v;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![idx as u32 + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(c) => {
                    std::mem::swap(&mut p[row][c], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(idx as u32 + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn matching_examples() {
        assert_eq!(matching_set(&p("43152")).pairs, vec![(4, 3), (3, 5)]);
        assert_eq!(
            matching_set(&p("24135867")).pairs,
            vec![(2, 3), (4, 4), (8, 7)]
        );
        assert!(matching_set(&Permutation::identity(5)).is_empty());
    }

    #[test]
    fn rsk_example() {
        let t = rsk_two_row(&p("24135867")).unwrap();
        assert_eq!(t.p_row1, vec![1, 3, 5, 6, 7]);
        assert_eq!(t.p_row2, vec![2, 4, 8]);
        assert_eq!(t.q_row1, vec![1, 2, 5, 6, 8]);
        assert_eq!(t.q_row2, vec![3, 4, 7]);
        assert!(t.is_valid());
        let (bp, bq) = rsk_bumping(&p("24135867"));
        assert_eq!(bp, vec![t.p_row1.clone(), t.p_row2.clone()]);
        assert_eq!(bq, vec![t.q_row1.clone(), t.q_row2.clone()]);
        assert!(matches!(rsk_two_row(&p("321")), Err(Error::Domain(_))));
        let id = rsk_two_row(&Permutation::identity(4)).unwrap();
        assert_eq!(id.p_row1, vec![1, 2, 3, 4]);
        assert!(id.p_row2.is_empty() && id.q_row2.is_empty());
    }
}
