//! Seeded random families for property checks and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::family::{k_subsets, SetFamily, Subset, MAX_N};

/// A uniformly random subset of `[n]`.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Subset {
    Subset::from_bits(rng.gen::<u64>() & Subset::full(n).bits())
}

/// Each subset of `[n]` is a member independently with probability `p`.
/// Needs `n ≤ 20`.
pub fn random_family<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<SetFamily> {
    if n == 0 || n > 20 {
        return Err(Error::param(format!(
            "random_family needs 1 <= n <= 20, got {n}"
        )));
    }
    let members: Vec<Subset> = (0u64..1 << n)
        .filter(|_| rng.gen_bool(p.clamp(0.0, 1.0)))
        .map(Subset::from_bits)
        .collect();
    SetFamily::new(n, members)
}

/// `m` distinct uniformly random subsets of `[n]` (fewer if `m > 2^n`).
pub fn random_sparse_family<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Result<SetFamily> {
    if n == 0 || n > MAX_N {
        return Err(Error::GroundSize(n));
    }
    let cap = if n >= 63 { usize::MAX } else { 1usize << n };
    let target = m.min(cap);
    let mut members = std::collections::BTreeSet::new();
    while members.len() < target {
        members.insert(random_subset(rng, n));
    }
    SetFamily::new(n, members)
}

/// Each k-subset of `[n]` is a member independently with probability `p`.
pub fn random_uniform_family<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    k: usize,
    p: f64,
) -> Result<SetFamily> {
    if n == 0 || n > MAX_N || k > n {
        return Err(Error::param(format!(
            "random_uniform_family needs k <= n <= 64, got n={n} k={k}"
        )));
    }
    let members: Vec<Subset> = k_subsets(n, k)
        .into_iter()
        .filter(|_| rng.gen_bool(p.clamp(0.0, 1.0)))
        .collect();
    SetFamily::new(n, members)
}

/// A uniformly random permutation of `[n]`, as `perm[e−1]` = image of e.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    perm
}

/// A random t-intersecting k-family: k-sets are taken in random order and
/// kept when they meet every kept set in at least t points.
pub fn random_t_intersecting<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    k: usize,
    t: usize,
    max_members: usize,
) -> Result<SetFamily> {
    if n == 0 || n > MAX_N || k > n || t > k {
        return Err(Error::param(format!(
            "need t <= k <= n, got n={n} k={k} t={t}"
        )));
    }
    let mut pool = k_subsets(n, k);
    pool.shuffle(rng);
    let mut kept: Vec<Subset> = Vec::new();
    for s in pool {
        if kept.len() >= max_members {
            break;
        }
        if kept.iter().all(|m| (*m & s).len() >= t) {
            kept.push(s);
        }
    }
    SetFamily::new(n, kept)
}
