//! Dyck paths and their tunnels.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    U,
    D,
}

/// A balanced word over `{u, d}` whose prefixes never dip below zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DyckPath {
    /// `true` is an up step.
    steps: Vec<bool>,
}

impl DyckPath {
    pub fn new(steps: Vec<bool>) -> Result<Self> {
        let mut h: i64 = 0;
        for (idx, &up) in steps.iter().enumerate() {
            h += if up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidInput(format!(
                    "Dyck path goes below the axis at step {}",
                    idx + 1
                )));
            }
        }
        if h != 0 {
            return Err(Error::InvalidInput("Dyck path is not balanced".into()));
        }
        Ok(DyckPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<bool>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        DyckPath { steps }
    }

    /// `uⁿdⁿ`
    pub fn pyramid(n: usize) -> Self {
        let mut steps = vec![true; n];
        steps.extend(std::iter::repeat_n(false, n));
        DyckPath { steps }
    }

    /// Half-length `n`.
    pub fn half_len(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    pub fn step(&self, idx: usize) -> Step {
        if self.steps[idx] {
            Step::U
        } else {
            Step::D
        }
    }

    pub fn left_half(&self) -> &[bool] {
        &self.steps[..self.half_len()]
    }

    pub fn right_half(&self) -> &[bool] {
        &self.steps[self.half_len()..]
    }

    pub fn left_downs(&self) -> usize {
        self.left_half().iter().filter(|&&u| !u).count()
    }

    pub fn right_ups(&self) -> usize {
        self.right_half().iter().filter(|&&u| u).count()
    }

    /// Every matched up/down pair, ordered by the index of its up step.
    pub fn tunnels(&self) -> Vec<Tunnel> {
        let n = self.half_len();
        let mut stack = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        for (idx, &up) in self.steps.iter().enumerate() {
            if up {
                stack.push(idx);
            } else {
                let u = stack.pop().expect("validated path");
                let mid2 = u + idx + 1;
                let kind = match mid2.cmp(&(2 * n)) {
                    std::cmp::Ordering::Less => TunnelKind::Left,
                    std::cmp::Ordering::Equal => TunnelKind::Centered,
                    std::cmp::Ordering::Greater => TunnelKind::Right,
                };
                out.push(Tunnel {
                    up_index: u,
                    down_index: idx,
                    kind,
                });
            }
        }
        out.sort_by_key(|t| t.up_index);
        out
    }

    pub fn tunnel_counts(&self) -> TunnelCounts {
        let mut c = TunnelCounts::default();
        for t in self.tunnels() {
            match t.kind {
                TunnelKind::Left => c.tunnel_left += 1,
                TunnelKind::Centered => c.tunnel_centered += 1,
                TunnelKind::Right => c.tunnel_right += 1,
            }
        }
        c
    }

    /// All Dyck paths of half-length `n` in lexicographic order with `u < d`.
    pub fn all(n: usize) -> Vec<DyckPath> {
        fn rec(n: usize, ups: usize, downs: usize, cur: &mut Vec<bool>, out: &mut Vec<DyckPath>) {
            if ups == n && downs == n {
                out.push(DyckPath { steps: cur.clone() });
                return;
            }
            if ups < n {
                cur.push(true);
                rec(n, ups + 1, downs, cur, out);
                cur.pop();
            }
            if downs < ups {
                cur.push(false);
                rec(n, ups, downs + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &u in &self.steps {
            f.write_str(if u { "u" } else { "d" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'u' | 'U' => Ok(true),
                'd' | 'D' => Ok(false),
                other => Err(Error::InvalidInput(format!("`{other}` is not a Dyck step"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

impl TryFrom<String> for DyckPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DyckPath> for String {
    fn from(d: DyckPath) -> String {
        d.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TunnelKind {
    Left,
    Centered,
    Right,
}

/// The horizontal segment under a matched up step and down step, given by
/// 0-based step indices. Its midpoint abscissa is `(up + down + 1) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tunnel {
    pub up_index: usize,
    pub down_index: usize,
    pub kind: TunnelKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TunnelCounts {
    pub tunnel_left: u32,
    pub tunnel_centered: u32,
    pub tunnel_right: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tunnel_example() {
        let d: DyckPath = "ududuuuddudduudd".parse().unwrap();
        let c = d.tunnel_counts();
        assert_eq!((c.tunnel_left, c.tunnel_centered, c.tunnel_right), (4, 1, 3));
        assert_eq!(d.tunnels().len(), 8);
    }

    #[test]
    fn pyramid_and_zigzag() {
        let c = DyckPath::pyramid(5).tunnel_counts();
        assert_eq!((c.tunnel_left, c.tunnel_centered, c.tunnel_right), (0, 5, 0));
        let zig: DyckPath = "ududud".parse().unwrap();
        let kinds: Vec<_> = zig.tunnels().iter().map(|t| t.kind).collect();
        assert_eq!(kinds, vec![TunnelKind::Left, TunnelKind::Centered, TunnelKind::Right]);
        let zig4: DyckPath = "udududud".parse().unwrap();
        let c = zig4.tunnel_counts();
        assert_eq!((c.tunnel_left, c.tunnel_centered, c.tunnel_right), (2, 0, 2));
    }

    #[test]
    fn validation() {
        assert!("du".parse::<DyckPath>().is_err());
        assert!("uud".parse::<DyckPath>().is_err());
        assert!("uxd".parse::<DyckPath>().is_err());
        assert_eq!(DyckPath::all(4).len(), 14);
        for d in DyckPath::all(5) {
            for t in d.tunnels() {
                assert_eq!(d.step(t.up_index), Step::U);
                assert_eq!(d.step(t.down_index), Step::D);
            }
        }
    }
}
