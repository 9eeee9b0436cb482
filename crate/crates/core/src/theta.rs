//! The bijection Θ between 321-avoiders and 132-avoiders, both as the
//! composite `Φ⁻¹ ∘ Ψ` and as a direct insertion recursion, together with Γ
//! and the crossing-preserving maps `f_k`, `g_k`.

use crate::dyck::DyckPath;
use crate::error::{check_range, Error, Result};
use crate::perm::{contains_pattern, insert_raw, inverse_of, reduce_distinct, Involution, Permutation};
use crate::rsk::{matching_set, require_321_avoiding, rsk_two_row};

pub(crate) fn require_132_avoiding(sigma: &[u32], what: &str) -> Result<()> {
    if contains_pattern(sigma, &[1, 3, 2]) {
        Err(Error::Domain(format!("{what} requires a 132-avoiding permutation")))
    } else {
        Ok(())
    }
}

/// `Ψ`: the left half reads `P` (`u` for first-row entries), the right half
/// reads `Q` backwards (`u` for second-row entries).
pub fn psi(sigma: &[u32]) -> Result<DyckPath> {
    let t = rsk_two_row(sigma)?;
    let n = sigma.len() as u32;
    let mut steps = Vec::with_capacity(2 * sigma.len());
    steps.extend((1..=n).map(|i| t.p_row1.binary_search(&i).is_ok()));
    steps.extend((1..=n).rev().map(|j| t.q_row2.binary_search(&j).is_ok()));
    let d = DyckPath::from_steps_unchecked(steps);
    debug_assert_eq!(d.left_downs(), d.right_ups());
    Ok(d)
}

/// `Φ⁻¹`: ascents are numbered `n..1` and descents `1..n` from left to right;
/// each tunnel sends its ascent number to its descent number.
pub fn phi_inverse(d: &DyckPath) -> Permutation {
    let n = d.half_len();
    let mut asc_number = vec![0u32; 2 * n];
    let mut desc_number = vec![0u32; 2 * n];
    let (mut a, mut b) = (n as u32, 1u32);
    for (idx, &up) in d.steps().iter().enumerate() {
        if up {
            asc_number[idx] = a;
            a -= 1;
        } else {
            desc_number[idx] = b;
            b += 1;
        }
    }
    let mut out = vec![0u32; n];
    for t in d.tunnels() {
        out[asc_number[t.up_index] as usize - 1] = desc_number[t.down_index];
    }
    Permutation::from_vec_unchecked(out)
}

/// `Φ`: rebuilds the path by pushing ascents until the one matched with the
/// next descent is on top of the stack.
pub fn phi(sigma: &[u32]) -> Result<DyckPath> {
    require_132_avoiding(sigma, "Φ")?;
    let n = sigma.len() as u32;
    let inv = inverse_of(sigma);
    let mut steps = Vec::with_capacity(2 * sigma.len());
    let mut stack: Vec<u32> = Vec::new();
    let mut next_asc = n;
    for b in 1..=n {
        let a = inv[b as usize - 1];
        while !stack.contains(&a) {
            stack.push(next_asc);
            steps.push(true);
            next_asc -= 1;
        }
        if stack.pop() != Some(a) {
            return Err(Error::Domain("permutation is not in the image of Φ⁻¹".into()));
        }
        steps.push(false);
    }
    Ok(DyckPath::from_steps_unchecked(steps))
}

/// `Θ = Φ⁻¹ ∘ Ψ`. Kept as the reference for [`theta`].
pub fn theta_pipeline(sigma: &[u32]) -> Result<Permutation> {
    Ok(phi_inverse(&psi(sigma)?))
}

/// One step of the recursion: for the reduced prefix `σ_l` with last letter
/// `k`, the pair `(l - k + j, j)` to insert into `Θ(σ_{l-1})`.
pub fn theta_step(prefix: &[u32]) -> (usize, u32) {
    let l = prefix.len();
    let k = *prefix.last().expect("non-empty prefix");
    let j = matching_set(prefix)
        .pairs
        .iter()
        .filter(|&&(a, _)| a <= k)
        .count() as u32
        + 1;
    (l - k as usize + j as usize, j)
}

/// Every intermediate `Θ(σ_l)` for `l = 1..n`, with the insertion used.
pub fn theta_trace(sigma: &[u32]) -> Result<Vec<((usize, u32), Permutation)>> {
    require_321_avoiding(sigma, "Θ")?;
    let mut cur: Vec<u32> = Vec::with_capacity(sigma.len());
    let mut rows = Vec::with_capacity(sigma.len());
    for l in 1..=sigma.len() {
        let prefix = reduce_distinct(&sigma[..l]);
        let (pos, val) = theta_step(&prefix);
        cur = insert_raw(&cur, pos, val);
        rows.push(((pos, val), Permutation::from_vec_unchecked(cur.clone())));
    }
    Ok(rows)
}

/// `Θ` by the insertion recursion, evaluated over prefixes so the depth of
/// the call stack stays constant.
pub fn theta(sigma: &[u32]) -> Result<Permutation> {
    require_321_avoiding(sigma, "Θ")?;
    Ok(theta_unchecked(sigma))
}

pub(crate) fn theta_unchecked(sigma: &[u32]) -> Permutation {
    let mut cur: Vec<u32> = Vec::with_capacity(sigma.len());
    for l in 1..=sigma.len() {
        let prefix = reduce_distinct(&sigma[..l]);
        let (pos, val) = theta_step(&prefix);
        cur = insert_raw(&cur, pos, val);
    }
    Permutation::from_vec_unchecked(cur)
}

/// `Θ⁻¹`: strips the smallest non-excedance `l`, recording the insertion
/// `(n, n - l + α(l))`, then replays the insertions from the bottom up.
pub fn theta_inverse(alpha: &[u32]) -> Result<Permutation> {
    require_132_avoiding(alpha, "Θ⁻¹")?;
    let mut cur = alpha.to_vec();
    let mut ops = Vec::with_capacity(alpha.len());
    while !cur.is_empty() {
        let n = cur.len();
        let l = (1..=n)
            .find(|&i| cur[i - 1] as usize <= i)
            .expect("the last position is always a non-excedance");
        ops.push((n, (n - l) as u32 + cur[l - 1]));
        let mut rest = cur;
        rest.remove(l - 1);
        cur = reduce_distinct(&rest).into_vec();
    }
    let mut out: Vec<u32> = Vec::with_capacity(alpha.len());
    for &(pos, val) in ops.iter().rev() {
        out = insert_raw(&out, pos, val);
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// `Γ = Θ ∘ rci`
pub fn gamma(sigma: &[u32]) -> Result<Permutation> {
    require_321_avoiding(sigma, "Γ")?;
    Ok(theta_unchecked(&Involution::Rci.apply(sigma)))
}

/// `f_k(σ) = (σ⁻¹)^{(k,1)}` for `σ ∈ S_{n-1}` and `1 ≤ k ≤ n`.
pub fn f_k(sigma: &[u32], k: usize) -> Result<Permutation> {
    check_range("k", k, 1, sigma.len() + 1)?;
    Ok(Permutation::from_vec_unchecked(insert_raw(&inverse_of(sigma), k, 1)))
}

/// `g_k(σ^{(k,1)}) = rc(σ)^{(n+1-k,1)}`, defined on permutations with
/// `τ(k) = 1`.
pub fn g_k(tau: &[u32], k: usize) -> Result<Permutation> {
    let n = tau.len();
    check_range("k", k, 1, n.max(1))?;
    if tau[k - 1] != 1 {
        return Err(Error::Domain(format!("g_k needs the letter 1 at position {k}")));
    }
    let sigma: Vec<u32> = tau
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k - 1)
        .map(|(_, &v)| v - 1)
        .collect();
    let rc = Involution::Rc.apply(&sigma);
    Ok(Permutation::from_vec_unchecked(insert_raw(&rc, n + 1 - k, 1)))
}
