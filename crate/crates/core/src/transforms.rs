//! Shifting, the shifting partial order, saturation of t-intersecting
//! families, bases of saturated families and the quantities computed from
//! their levels.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::family::{k_subsets, SetFamily, Subset};
use crate::formulas::binom;
use crate::metrics::is_t_intersecting;
use crate::par;

/// One pass of `S_ij`: every member containing j but not i moves to
/// `(F \ {j}) ∪ {i}` unless that set is already a member.
pub fn shift_once(family: &SetFamily, i: usize, j: usize) -> Result<SetFamily> {
    if i == 0 || i >= j || j > family.n() {
        return Err(Error::param(format!(
            "shift needs 1 <= i < j <= n, got i={i} j={j}"
        )));
    }
    Ok(shift_pass(family, i, j).0)
}

fn shift_pass(family: &SetFamily, i: usize, j: usize) -> (SetFamily, bool) {
    let present: HashSet<Subset> = family.iter().copied().collect();
    let mut changed = false;
    let members = family
        .iter()
        .map(|f| {
            if f.contains(j) && !f.contains(i) {
                let moved = f.without(j).with(i);
                if !present.contains(&moved) {
                    changed = true;
                    return moved;
                }
            }
            *f
        })
        .collect();
    (
        SetFamily::from_unsorted_unchecked(family.n(), members),
        changed,
    )
}

/// Repeated sweeps of `S_ij` over `i < j` in lexicographic order until a
/// full sweep changes nothing. Every change lowers the total element sum,
/// so this terminates.
pub fn shift_closure(family: &SetFamily) -> SetFamily {
    let n = family.n();
    let mut current = family.clone();
    loop {
        let mut any = false;
        for i in 1..=n {
            for j in i + 1..=n {
                let (next, changed) = shift_pass(&current, i, j);
                if changed {
                    current = next;
                    any = true;
                }
            }
        }
        if !any {
            return current;
        }
    }
}

/// `A ≺ B`: coordinate-wise ≤ on the sorted element lists.
pub fn precedes(a: Subset, b: Subset) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::param(format!(
            "precedence compares equal sizes, got {a} and {b}"
        )));
    }
    Ok(a.iter().zip(b.iter()).all(|(x, y)| x <= y))
}

/// Whether each level of the family is closed downward under `≺`.
///
/// The covering steps of `≺` lower one element by one, so it suffices to
/// check those.
pub fn is_down_closed_under_precedence(family: &SetFamily) -> bool {
    family.iter().all(|b| {
        b.iter()
            .filter(|&e| e > 1 && !b.contains(e - 1))
            .all(|e| family.contains(b.without(e).with(e - 1)))
    })
}

fn uniform_t_intersecting(family: &SetFamily, t: usize) -> Result<usize> {
    let k = family
        .uniformity()
        .ok_or_else(|| Error::pre("family must be nonempty and k-uniform"))?;
    if !is_t_intersecting(family, t) {
        return Err(Error::pre(format!("family is not {t}-intersecting")));
    }
    Ok(k)
}

fn addable(members: &[Subset], candidate: Subset, t: usize) -> bool {
    members.iter().all(|f| (*f & candidate).len() >= t)
}

/// Greedy lexicographic closure to a saturated t-intersecting k-family.
pub fn saturate(family: &SetFamily, t: usize) -> Result<SetFamily> {
    let k = uniform_t_intersecting(family, t)?;
    let level = k_subsets(family.n(), k);
    let mut members: Vec<Subset> = family.members().to_vec();
    let mut present: HashSet<Subset> = members.iter().copied().collect();
    loop {
        let mut grew = false;
        for &candidate in &level {
            if !present.contains(&candidate) && addable(&members, candidate, t) {
                members.push(candidate);
                present.insert(candidate);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    Ok(SetFamily::from_unsorted_unchecked(family.n(), members))
}

/// k-uniform, t-intersecting, and no further k-set can be added.
pub fn is_saturated(family: &SetFamily, t: usize) -> bool {
    let Ok(k) = uniform_t_intersecting(family, t) else {
        return false;
    };
    k_subsets(family.n(), k)
        .into_iter()
        .all(|c| family.contains(c) || !addable(family.members(), c, t))
}

/// `⟨G⟩`: the k-sets containing some member of `generators`.
pub fn generated(generators: &[Subset], n: usize, k: usize) -> Result<SetFamily> {
    if let Some(g) = generators.iter().find(|g| g.len() > k) {
        return Err(Error::param(format!(
            "generator {g} has more than {k} elements"
        )));
    }
    if let Some(g) = generators.iter().find(|g| !g.is_subset_of(Subset::full(n))) {
        return Err(Error::param(format!("generator {g} is not inside [{n}]")));
    }
    let members: Vec<Subset> = k_subsets(n, k)
        .into_iter()
        .filter(|f| generators.iter().any(|g| g.is_subset_of(*f)))
        .collect();
    SetFamily::new(n, members)
}

/// Minimal t-transversals of size ≤ k of a saturated t-intersecting
/// k-family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    /// Sorted lexicographically.
    pub members: Vec<Subset>,
}

impl Basis {
    pub fn as_family(&self) -> SetFamily {
        SetFamily::from_sorted_unchecked(self.n, self.members.clone())
    }

    /// Smallest member size, which equals τ_t of the parent family.
    pub fn min_size(&self) -> usize {
        self.members.iter().map(|b| b.len()).min().unwrap_or(0)
    }

    pub fn is_antichain(&self) -> bool {
        self.members.iter().enumerate().all(|(x, a)| {
            self.members
                .iter()
                .enumerate()
                .all(|(y, b)| x == y || !a.is_subset_of(*b))
        })
    }
}

/// Computes the basis level by level, skipping supersets of members
/// already found.
pub fn basis(family: &SetFamily, t: usize) -> Result<Basis> {
    let k = uniform_t_intersecting(family, t)?;
    if !is_saturated(family, t) {
        return Err(Error::pre("basis needs a saturated family"));
    }
    let n = family.n();
    let members = family.members();
    let mut found: Vec<Subset> = Vec::new();
    for size in t..=k {
        let level = k_subsets(n, size);
        let hits = par::map(&level, |cand| {
            !found.iter().any(|b| b.is_subset_of(*cand))
                && members.iter().all(|f| (*f & *cand).len() >= t)
        });
        found.extend(
            level
                .iter()
                .zip(hits)
                .filter(|(_, hit)| *hit)
                .map(|(c, _)| *c),
        );
    }
    found.sort_unstable();
    Ok(Basis {
        n,
        t,
        k,
        members: found,
    })
}

/// The basis split by member size, and the least r for which the members
/// of size ≤ r have no common t-set (equivalently `τ_t(B^(≤r)) ≥ t+1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLevels {
    pub t: usize,
    pub k: usize,
    pub levels: BTreeMap<usize, Vec<Subset>>,
    pub r: usize,
}

impl BasisLevels {
    pub fn level(&self, size: usize) -> &[Subset] {
        self.levels.get(&size).map(Vec::as_slice).unwrap_or(&[])
    }
}

pub fn basis_levels(basis: &Basis) -> Result<BasisLevels> {
    let t = basis.t;
    let mut levels: BTreeMap<usize, Vec<Subset>> = BTreeMap::new();
    for b in &basis.members {
        levels.entry(b.len()).or_default().push(*b);
    }
    let tau = basis.min_size();
    if basis.members.is_empty() || tau < t + 1 {
        return Err(Error::pre(format!(
            "τ_t of the family is {tau}; need at least t+1 = {}",
            t + 1
        )));
    }
    let mut common = Subset::full(basis.n);
    for (&size, members) in &levels {
        common = members.iter().fold(common, |acc, b| acc & *b);
        if common.len() < t {
            return Ok(BasisLevels {
                t,
                k: basis.k,
                levels,
                r: size,
            });
        }
    }
    Err(Error::pre(
        "every prefix of the basis shares a common t-set",
    ))
}

/// `Σ_{r ≤ ℓ ≤ k} |B^(ℓ)| / (C(ℓ, t) · ℓ · k^{ℓ−t−1})`, exactly.
pub fn basis_weight_sum(levels: &BasisLevels) -> BigRational {
    let (t, k) = (levels.t as i64, levels.k as i64);
    let mut acc = BigRational::zero();
    for l in levels.r as i64..=k {
        let count = levels.level(l as usize).len();
        if count == 0 {
            continue;
        }
        let weight =
            binom(l, t) * BigInt::from(l) * num_traits::pow(BigInt::from(k), (l - t - 1) as usize);
        acc += BigRational::new(BigInt::from(count), weight);
    }
    acc
}

/// Counts of level-(t+2) basis members avoiding each y of their union,
/// against the bound `4(t+1)(k−t+2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidanceReport {
    /// Why the check does not apply, if it does not.
    pub not_applicable: Option<String>,
    pub bound: u64,
    pub counts: Vec<(usize, u64)>,
    pub holds: bool,
}

/// Requires a saturated t-intersecting family with `τ_t = t+2` whose
/// level-(t+2) basis members have no common t-set; otherwise reports
/// not-applicable.
pub fn basis_avoidance_check(family: &SetFamily, t: usize) -> AvoidanceReport {
    let k = family.uniformity().unwrap_or(0);
    let bound = (4 * (t + 1) * (k + 2).saturating_sub(t)) as u64;
    let skip = |why: String| AvoidanceReport {
        not_applicable: Some(why),
        bound,
        counts: Vec::new(),
        holds: true,
    };
    if !is_saturated(family, t) {
        return skip("family is not a saturated t-intersecting k-family".into());
    }
    let b = match basis(family, t) {
        Ok(b) => b,
        Err(e) => return skip(e.to_string()),
    };
    if b.min_size() != t + 2 {
        return skip(format!(
            "τ_t = {} differs from t+2 = {}",
            b.min_size(),
            t + 2
        ));
    }
    let level: Vec<Subset> = b
        .members
        .iter()
        .copied()
        .filter(|m| m.len() == t + 2)
        .collect();
    let common = level.iter().fold(Subset::full(b.n), |acc, m| acc & *m);
    if common.len() >= t {
        return skip("level t+2 of the basis has a common t-set".into());
    }
    let support = level.iter().fold(Subset::EMPTY, |acc, m| acc | *m);
    let counts: Vec<(usize, u64)> = support
        .iter()
        .map(|y| (y, level.iter().filter(|m| !m.contains(y)).count() as u64))
        .collect();
    let holds = counts.iter().all(|(_, c)| *c <= bound);
    AvoidanceReport {
        not_applicable: None,
        bound,
        counts,
        holds,
    }
}
