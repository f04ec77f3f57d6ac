//! Shared test support: slow, obviously-correct oracles that work on plain
//! element lists, and a seeded corpus of families.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sturdy_core::constructions::*;
use sturdy_core::sample::{random_family, random_t_intersecting, random_uniform_family};
use sturdy_core::transforms::shift_closure;
use sturdy_core::{SetFamily, Subset};

pub fn lists(f: &SetFamily) -> Vec<Vec<usize>> {
    f.iter().map(|s| s.to_vec()).collect()
}

/// `|{F : i ∈ F, j ∉ F}|` by scanning element lists.
pub fn b(f: &[Vec<usize>], i: usize, j: usize) -> u64 {
    f.iter()
        .filter(|m| m.contains(&i) && !m.contains(&j))
        .count() as u64
}

pub fn beta(f: &SetFamily) -> u64 {
    let l = lists(f);
    let n = f.n();
    let mut best = u64::MAX;
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                best = best.min(b(&l, i, j));
            }
        }
    }
    best
}

pub fn matrix(f: &SetFamily) -> Vec<Vec<u64>> {
    let l = lists(f);
    let n = f.n();
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| if i == j { 0 } else { b(&l, i, j) })
                .collect()
        })
        .collect()
}

pub fn gamma(f: &SetFamily) -> u64 {
    let l = lists(f);
    (1..=f.n())
        .map(|y| l.iter().filter(|m| !m.contains(&y)).count() as u64)
        .min()
        .unwrap_or(0)
}

pub fn common(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

pub fn t_intersecting(f: &SetFamily, t: usize) -> bool {
    let l = lists(f);
    l.iter().all(|a| l.iter().all(|b| common(a, b) >= t))
}

/// Shiftedness straight from the definition.
pub fn shifted(f: &SetFamily) -> bool {
    let l = lists(f);
    let n = f.n();
    l.iter().all(|m| {
        (1..=n).all(|i| {
            (i + 1..=n).all(|j| {
                if m.contains(&j) && !m.contains(&i) {
                    let mut moved: Vec<usize> = m.iter().copied().filter(|&e| e != j).collect();
                    moved.push(i);
                    moved.sort();
                    l.contains(&moved)
                } else {
                    true
                }
            })
        })
    })
}

/// All subsets of `[n]` as sorted element lists, by bitmask.
pub fn all_lists(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .map(|m| (1..=n).filter(|e| m >> (e - 1) & 1 == 1).collect())
        .collect()
}

/// Least size of a set meeting every member in at least t points.
pub fn tau_t(f: &SetFamily, t: usize) -> usize {
    let l = lists(f);
    let mut cands = all_lists(f.n());
    cands.sort_by_key(|c| c.len());
    cands
        .into_iter()
        .find(|c| l.iter().all(|m| common(c, m) >= t))
        .map(|c| c.len())
        .expect("the ground set is a transversal")
}

/// Minimal t-transversals of size ≤ k, by scanning every subset.
pub fn minimal_t_transversals(f: &SetFamily, t: usize, k: usize) -> Vec<Vec<usize>> {
    let l = lists(f);
    let hits = |c: &[usize]| l.iter().all(|m| common(c, m) >= t);
    let mut out: Vec<Vec<usize>> = all_lists(f.n())
        .into_iter()
        .filter(|c| c.len() <= k && hits(c))
        .filter(|c| {
            (0..c.len()).all(|drop| {
                let smaller: Vec<usize> = c
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| *p != drop)
                    .map(|(_, e)| *e)
                    .collect();
                !hits(&smaller)
            })
        })
        .collect();
    out.sort();
    out
}

pub fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = r * (n as u128 - i) / (i + 1);
    }
    r as u64
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Named constructions plus seeded random families and their shifts.
pub fn corpus() -> Vec<(String, SetFamily)> {
    let mut out: Vec<(String, SetFamily)> = Vec::new();
    let mut add = |name: String, f: sturdy_core::Result<SetFamily>| {
        out.push((name, f.expect("corpus builder")));
    };
    for n in 2..=8 {
        add(format!("powerset({n})"), power_set(n));
    }
    for n in 2..=9 {
        for k in 0..=n {
            add(format!("klevel({n},{k})"), k_level(n, k));
        }
    }
    for (n, k, c) in [(6, 3, 1), (7, 3, 4), (8, 4, 1), (8, 4, 8)] {
        add(format!("star({n},{k},{c})"), star(n, k, c));
    }
    for n in 6..=10 {
        for k in 2..=5.min(n) {
            add(format!("triangle({n},{k})"), triangle(n, k));
        }
    }
    add(
        "triangle_at(8,4,{2,5,7})".into(),
        triangle_at(8, 4, [2, 5, 7]),
    );
    for (n, k, t, i) in [
        (8, 4, 1, 1),
        (9, 4, 1, 2),
        (10, 5, 2, 1),
        (10, 5, 1, 2),
        (11, 5, 1, 1),
        (10, 6, 2, 2),
        (9, 5, 1, 3),
    ] {
        add(format!("frankl({n},{k},{t},{i})"), frankl(n, k, t, i));
    }
    for (n, k, t) in [(9, 4, 1), (8, 3, 2), (6, 2, 1)] {
        add(format!("frankl_tilde({n},{k},{t})"), frankl_tilde(n, k, t));
    }
    for (n, r, c) in [
        (6, 1, vec![]),
        (6, 2, vec![1, 4]),
        (7, 2, vec![]),
        (8, 3, vec![2]),
        (5, 0, vec![1, 2]),
    ] {
        let center = Subset::of(&c);
        add(
            format!("hamming_ball({n},{r},{center})"),
            hamming_ball(n, r, center),
        );
    }
    add("g0".into(), g0());
    for (n, k) in [(8, 4), (9, 4), (10, 5)] {
        add(format!("f0({n},{k})"), f0(n, k));
    }
    for (n, t) in [(4, 1), (5, 2), (6, 2), (7, 1), (7, 3), (8, 2)] {
        add(format!("katona({n},{t})"), katona_family(n, t));
    }
    add("diameter_example(8,2)".into(), diameter_example(8, 2));
    add("diameter_example(10,3)".into(), diameter_example(10, 3));
    add(
        "example_511(9,2,T(9,3))".into(),
        example_511(9, 2, &triangle(9, 3).unwrap()),
    );

    let mut r = rng(0x5eed);
    for idx in 0..40 {
        let n = r.gen_range(2..=8);
        let p = r.gen_range(0.05..0.9);
        add(format!("random#{idx}(n={n})"), random_family(&mut r, n, p));
    }
    for idx in 0..40 {
        let n = r.gen_range(3..=10);
        let k = r.gen_range(1..n);
        let p = r.gen_range(0.1..0.9);
        add(
            format!("random_uniform#{idx}(n={n},k={k})"),
            random_uniform_family(&mut r, n, k, p),
        );
    }
    for idx in 0..30 {
        let n = r.gen_range(5..=10);
        let k = r.gen_range(2..=n / 2 + 1);
        let t = r.gen_range(1..=k.min(3));
        add(
            format!("random_t_int#{idx}(n={n},k={k},t={t})"),
            random_t_intersecting(&mut r, n, k, t, 40),
        );
    }
    let shifted: Vec<(String, SetFamily)> = out
        .iter()
        .filter(|(name, _)| name.starts_with("random"))
        .map(|(name, f)| (format!("shift({name})"), shift_closure(f)))
        .collect();
    out.extend(shifted);
    out
}
