//! Family invariants and predicates: the link matrix `b_ij = |F(i, j̄)|`,
//! sturdiness β, diversity γ, degrees, transversal numbers and the
//! intersection / union / diameter style predicates.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::family::{restrict_family, sym_diff_distance, SetFamily, Subset};
use crate::par;

/// `b[i][j]` = number of members containing i and avoiding j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl LinkMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry for 1-based `i`, `j`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// Smallest off-diagonal entry with its (i, j); ties go to the first
    /// pair in row-major order. `None` when n < 2.
    pub fn min_off_diagonal(&self) -> Option<(u64, usize, usize)> {
        let mut best: Option<(u64, usize, usize)> = None;
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i == j {
                    continue;
                }
                let v = self.get(i, j);
                if best.is_none_or(|(b, _, _)| v < b) {
                    best = Some((v, i, j));
                }
            }
        }
        best
    }

    /// Whether every entry is ≤ the corresponding entry of `other`.
    pub fn dominated_by(&self, other: &LinkMatrix) -> bool {
        self.n == other.n && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }
}

/// Incidence columns: for each element, a bitvector over member indices.
fn incidence_columns(family: &SetFamily) -> (usize, Vec<u64>) {
    let words = family.len().div_ceil(64).max(1);
    let mut cols = vec![0u64; family.n() * words];
    for (idx, member) in family.iter().enumerate() {
        for e in member.iter() {
            cols[(e - 1) * words + idx / 64] |= 1u64 << (idx % 64);
        }
    }
    (words, cols)
}

/// Link matrix by word-parallel counting per pair.
pub fn link_matrix(family: &SetFamily) -> LinkMatrix {
    let n = family.n();
    let (words, cols) = incidence_columns(family);
    let row = |i: usize| -> Vec<u64> {
        let ci = &cols[i * words..(i + 1) * words];
        (0..n)
            .map(|j| {
                if i == j {
                    return 0;
                }
                let cj = &cols[j * words..(j + 1) * words];
                ci.iter()
                    .zip(cj)
                    .map(|(a, b)| (a & !b).count_ones() as u64)
                    .sum()
            })
            .collect()
    };
    let rows: Vec<Vec<u64>> = if n * n * words >= 1 << 14 {
        par::map_range(n, row)
    } else {
        (0..n).map(row).collect()
    };
    LinkMatrix {
        n,
        entries: rows.concat(),
    }
}

/// β(F) = min over i ≠ j of `b_ij`. Requires n ≥ 2.
pub fn sturdiness(family: &SetFamily) -> Result<u64> {
    sturdiness_argmin(family).map(|(v, _, _)| v)
}

/// β(F) together with the first (i, j) attaining it.
pub fn sturdiness_argmin(family: &SetFamily) -> Result<(u64, usize, usize)> {
    if family.n() < 2 {
        return Err(Error::pre("sturdiness needs n >= 2"));
    }
    Ok(link_matrix(family).min_off_diagonal().expect("n >= 2"))
}

/// `|F(i)|` for i = 1..=n.
pub fn degree_vector(family: &SetFamily) -> Vec<u64> {
    let mut deg = vec![0u64; family.n()];
    for m in family {
        for e in m.iter() {
            deg[e - 1] += 1;
        }
    }
    deg
}

/// δ(F).
pub fn min_degree(family: &SetFamily) -> u64 {
    degree_vector(family).into_iter().min().unwrap_or(0)
}

/// γ(F) = min over y of `|F(ȳ)|`.
pub fn diversity(family: &SetFamily) -> u64 {
    let m = family.len() as u64;
    degree_vector(family)
        .into_iter()
        .map(|d| m - d)
        .min()
        .unwrap_or(0)
}

/// First pair (possibly a member with itself) meeting in fewer than t points.
pub fn t_intersecting_violation(family: &SetFamily, t: usize) -> Option<(Subset, Subset)> {
    let members = family.members();
    if let Some(m) = members.iter().find(|m| m.len() < t) {
        return Some((*m, *m));
    }
    for (idx, a) in members.iter().enumerate() {
        for b in &members[idx + 1..] {
            if (*a & *b).len() < t {
                return Some((*a, *b));
            }
        }
    }
    None
}

pub fn is_t_intersecting(family: &SetFamily, t: usize) -> bool {
    t_intersecting_violation(family, t).is_none()
}

pub fn is_intersecting(family: &SetFamily) -> bool {
    is_t_intersecting(family, 1)
}

/// Up to r distinct members whose common intersection has fewer than t
/// elements, found by depth-first search that stops at the first witness.
pub fn r_wise_violation(family: &SetFamily, r: usize, t: usize) -> Option<Vec<Subset>> {
    fn dfs(
        members: &[Subset],
        start: usize,
        depth_left: usize,
        inter: Subset,
        t: usize,
        chosen: &mut Vec<Subset>,
    ) -> bool {
        for (idx, m) in members.iter().enumerate().skip(start) {
            let next = inter & *m;
            chosen.push(*m);
            if next.len() < t {
                return true;
            }
            if depth_left > 1 && dfs(members, idx + 1, depth_left - 1, next, t, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if r == 0 {
        return None;
    }
    let mut chosen = Vec::new();
    dfs(family.members(), 0, r, family.ground(), t, &mut chosen).then_some(chosen)
}

/// Every choice of r members (repetition allowed) shares at least t
/// elements.
pub fn is_r_wise_t_intersecting(family: &SetFamily, r: usize, t: usize) -> bool {
    r_wise_violation(family, r, t).is_none()
}

/// Max `|F ∪ F'|` over pairs, including F = F'.
pub fn union_width(family: &SetFamily) -> Result<usize> {
    let members = family.members();
    if members.is_empty() {
        return Err(Error::pre("union width of the empty family"));
    }
    let mut best = 0;
    for (idx, a) in members.iter().enumerate() {
        for b in &members[idx..] {
            best = best.max((*a | *b).len());
        }
    }
    Ok(best)
}

pub fn u_union_violation(family: &SetFamily, u: usize) -> Option<(Subset, Subset)> {
    let members = family.members();
    for (idx, a) in members.iter().enumerate() {
        for b in &members[idx..] {
            if (*a | *b).len() > u {
                return Some((*a, *b));
            }
        }
    }
    None
}

pub fn is_u_union(family: &SetFamily, u: usize) -> bool {
    u_union_violation(family, u).is_none()
}

/// Max symmetric-difference distance over pairs of members.
pub fn diameter(family: &SetFamily) -> Result<usize> {
    diameter_pair(family).map(|(d, _, _)| d)
}

/// Diameter with a pair attaining it.
pub fn diameter_pair(family: &SetFamily) -> Result<(usize, Subset, Subset)> {
    let members = family.members();
    let first = *members
        .first()
        .ok_or_else(|| Error::pre("diameter of the empty family"))?;
    let mut best = (0, first, first);
    for (idx, a) in members.iter().enumerate() {
        for b in &members[idx + 1..] {
            let d = sym_diff_distance(*a, *b);
            if d > best.0 {
                best = (d, *a, *b);
            }
        }
    }
    Ok(best)
}

/// F and its complement family are both intersecting: no two members are
/// disjoint and no two members cover `[n]`.
pub fn is_iu(family: &SetFamily) -> bool {
    let ground = family.ground();
    let members = family.members();
    for (idx, a) in members.iter().enumerate() {
        for b in &members[idx..] {
            if a.is_disjoint(*b) || (*a | *b) == ground {
                return false;
            }
        }
    }
    true
}

/// Smallest T with `|T ∩ F| ≥ t` for every member, by iterative deepening.
///
/// Each node branches on the uncovered member with the fewest usable
/// elements; the i-th branch adds that member's i-th element (degree order)
/// and forbids the earlier ones, so every transversal is reached once.
pub fn min_t_transversal(family: &SetFamily, t: usize) -> Result<Subset> {
    if let Some(m) = family.iter().find(|m| m.len() < t) {
        return Err(Error::pre(format!(
            "member {m} has fewer than {t} elements"
        )));
    }
    let degrees = degree_vector(family);
    let mut order: Vec<usize> = family.union_of_members().iter().collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(degrees[e - 1]), e));
    let members = family.members();
    for budget in 0..=family.n() {
        if let Some(found) = deepen(members, t, &order, Subset::EMPTY, Subset::EMPTY, budget) {
            return Ok(found);
        }
    }
    unreachable!("[n] itself is a t-transversal once every member has t elements")
}

fn deepen(
    members: &[Subset],
    t: usize,
    order: &[usize],
    chosen: Subset,
    forbidden: Subset,
    budget: usize,
) -> Option<Subset> {
    let mut branch: Option<Subset> = None;
    for f in members {
        let have = (chosen & *f).len();
        if have >= t {
            continue;
        }
        let need = t - have;
        let usable = *f - chosen - forbidden;
        if need > budget || usable.len() < need {
            return None;
        }
        if branch.is_none_or(|b| usable.len() < b.len()) {
            branch = Some(usable);
        }
    }
    let Some(usable) = branch else {
        return Some(chosen);
    };
    let mut excluded = forbidden;
    for &e in order.iter().filter(|&&e| usable.contains(e)) {
        if let Some(found) = deepen(members, t, order, chosen.with(e), excluded, budget - 1) {
            return Some(found);
        }
        excluded = excluded.with(e);
    }
    None
}

/// τ(F). The empty set may not be a member.
pub fn transversal_number(family: &SetFamily) -> Result<usize> {
    if family.contains(Subset::EMPTY) {
        return Err(Error::pre("the empty set has no transversal"));
    }
    min_t_transversal(family, 1).map(Subset::len)
}

/// τ_t(F). Every member needs at least t elements.
pub fn t_transversal_number(family: &SetFamily, t: usize) -> Result<usize> {
    min_t_transversal(family, t).map(Subset::len)
}

/// First (member, i, j) for which `S_ij` would move the member, if any.
pub fn shift_witness(family: &SetFamily) -> Option<(Subset, usize, usize)> {
    let set: HashSet<Subset> = family.iter().copied().collect();
    let n = family.n();
    for i in 1..=n {
        for j in i + 1..=n {
            for f in family {
                if f.contains(j) && !f.contains(i) && !set.contains(&f.without(j).with(i)) {
                    return Some((*f, i, j));
                }
            }
        }
    }
    None
}

/// `S_ij(F) = F` for all i < j, checked by definition.
pub fn is_shifted(family: &SetFamily) -> bool {
    shift_witness(family).is_none()
}

/// Largest ground size accepted by [`is_hamming_ball`].
pub const HAMMING_BALL_MAX_N: usize = 20;

/// Some `(C, r)` with `B_r(C) ⊆ F ⊆ B_{r+1}(C)`, preferring the
/// lexicographically least center and then the largest radius, so that a
/// ball `B_r(C)` is reported with its own radius.
///
/// Since `C ∈ B_r(C)`, only members of F can be centers.
pub fn is_hamming_ball(family: &SetFamily) -> Result<Option<(Subset, usize)>> {
    let n = family.n();
    if n > HAMMING_BALL_MAX_N {
        return Err(Error::LimitExceeded(format!(
            "hamming ball recognition supports n <= {HAMMING_BALL_MAX_N}"
        )));
    }
    let binoms = binomial_row(n);
    for center in family.iter() {
        let mut counts = vec![0u64; n + 1];
        for m in family {
            counts[sym_diff_distance(*center, *m)] += 1;
        }
        let max_d = counts
            .iter()
            .rposition(|&c| c > 0)
            .expect("center is a member");
        let full_upto = counts
            .iter()
            .zip(&binoms)
            .take_while(|(c, b)| c == b)
            .count();
        // B_r(C) ⊆ F needs full layers 0..=r; F ⊆ B_{r+1}(C) needs r+1 ≥ max_d.
        let r = (full_upto - 1).min(max_d);
        if r + 1 >= max_d {
            return Ok(Some((*center, r)));
        }
    }
    Ok(None)
}

fn binomial_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64; n + 1];
    for k in 1..=n {
        row[k] = row[k - 1] * (n - k + 1) as u64 / k as u64;
    }
    row
}

/// Traces on X form an intersecting family (no empty trace, no two disjoint
/// traces) and no two members together cover `Y = [n] \ X`. The second
/// condition is vacuous when Y is empty.
pub fn split_check(family: &SetFamily, x: Subset) -> bool {
    let x = x & family.ground();
    let y = family.ground() - x;
    if !is_intersecting(&restrict_family(family, x)) {
        return false;
    }
    if y.is_empty() {
        return true;
    }
    let members = family.members();
    for (idx, a) in members.iter().enumerate() {
        for b in &members[idx..] {
            if (*a | *b) & y == y {
                return false;
            }
        }
    }
    true
}

/// Summary invariants of one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricReport {
    /// `None` when n < 2.
    pub beta: Option<u64>,
    pub gamma: u64,
    pub delta: u64,
    pub degrees: Vec<u64>,
    pub uniformity: Option<usize>,
    pub members: usize,
}

pub fn metric_report(family: &SetFamily) -> MetricReport {
    let degrees = degree_vector(family);
    let m = family.len() as u64;
    MetricReport {
        beta: sturdiness(family).ok(),
        gamma: degrees.iter().map(|d| m - d).min().unwrap_or(0),
        delta: degrees.iter().copied().min().unwrap_or(0),
        degrees,
        uniformity: family.uniformity(),
        members: family.len(),
    }
}
