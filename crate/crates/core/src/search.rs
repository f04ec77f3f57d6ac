//! Exhaustive search over inclusion-maximal families under a pairwise
//! constraint.
//!
//! Members of a constrained family must be pairwise compatible, so the
//! families are the cliques of a compatibility graph on candidate sets and
//! the maximal ones are enumerated with Bron–Kerbosch (with pivoting) on
//! `u128` bitsets. Adding members never lowers any `b_ij`, so the maximum
//! of β is attained on a maximal family.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::family::{all_subsets, k_subsets, SetFamily, Subset};
use crate::formulas::{iu_beta_bound, odd_union_conjectured_beta_bound, Bound};
use crate::metrics::{degree_vector, diameter, is_iu, is_t_intersecting, is_u_union, sturdiness};
use crate::par;

/// Ground-set cap for constraints whose candidates are all of `2^[n]`.
pub const NONUNIFORM_MAX_N: usize = 6;
/// Default (and largest supported) number of candidate sets.
pub const DEFAULT_VERTEX_LIMIT: usize = 128;

/// A pairwise-checkable constraint on families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstraintSpec {
    TIntersectingUniform { n: usize, k: usize, t: usize },
    TIntersectingAny { n: usize, t: usize },
    UUnion { n: usize, u: usize },
    Diameter { n: usize, w: usize },
    Iu { n: usize },
}

impl ConstraintSpec {
    pub fn n(&self) -> usize {
        match *self {
            ConstraintSpec::TIntersectingUniform { n, .. }
            | ConstraintSpec::TIntersectingAny { n, .. }
            | ConstraintSpec::UUnion { n, .. }
            | ConstraintSpec::Diameter { n, .. }
            | ConstraintSpec::Iu { n } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if !(2..=64).contains(&n) {
            return Err(Error::param(format!("search needs 2 <= n <= 64, got {n}")));
        }
        let uniform = matches!(self, ConstraintSpec::TIntersectingUniform { .. });
        if !uniform && n > NONUNIFORM_MAX_N {
            return Err(Error::LimitExceeded(format!(
                "non-uniform search is limited to n <= {NONUNIFORM_MAX_N}, got {n}"
            )));
        }
        match *self {
            ConstraintSpec::TIntersectingUniform { k, t, .. } if t == 0 || t > k || k > n => Err(
                Error::param(format!("need 1 <= t <= k <= n, got n={n} k={k} t={t}")),
            ),
            ConstraintSpec::TIntersectingAny { t, .. } if t == 0 || t > n => {
                Err(Error::param(format!("need 1 <= t <= n, got n={n} t={t}")))
            }
            ConstraintSpec::UUnion { u, .. } if u > n => {
                Err(Error::param(format!("need u <= n, got n={n} u={u}")))
            }
            ConstraintSpec::Diameter { w, .. } if w > n => {
                Err(Error::param(format!("need w <= n, got n={n} w={w}")))
            }
            _ => Ok(()),
        }
    }

    /// Whether `a` may be a member at all.
    pub fn admits_member(&self, a: Subset) -> bool {
        match *self {
            ConstraintSpec::TIntersectingUniform { k, t, .. } => a.len() == k && a.len() >= t,
            ConstraintSpec::TIntersectingAny { t, .. } => a.len() >= t,
            ConstraintSpec::UUnion { u, .. } => a.len() <= u,
            ConstraintSpec::Diameter { .. } => true,
            ConstraintSpec::Iu { n } => !a.is_empty() && a != Subset::full(n),
        }
    }

    /// Whether two distinct admissible sets may both be members.
    pub fn compatible(&self, a: Subset, b: Subset) -> bool {
        match *self {
            ConstraintSpec::TIntersectingUniform { t, .. }
            | ConstraintSpec::TIntersectingAny { t, .. } => (a & b).len() >= t,
            ConstraintSpec::UUnion { u, .. } => (a | b).len() <= u,
            ConstraintSpec::Diameter { w, .. } => (a ^ b).len() <= w,
            ConstraintSpec::Iu { n } => !a.is_disjoint(b) && (a | b) != Subset::full(n),
        }
    }

    /// Admissible sets in lexicographic order.
    pub fn candidates(&self) -> Vec<Subset> {
        let pool = match *self {
            ConstraintSpec::TIntersectingUniform { n, k, .. } => k_subsets(n, k),
            _ => all_subsets(self.n()),
        };
        pool.into_iter()
            .filter(|a| self.admits_member(*a))
            .collect()
    }

    /// Checks a whole family with the metrics predicates.
    pub fn holds(&self, family: &SetFamily) -> bool {
        if family.n() != self.n() {
            return false;
        }
        match *self {
            ConstraintSpec::TIntersectingUniform { k, t, .. } => {
                family.iter().all(|m| m.len() == k) && is_t_intersecting(family, t)
            }
            ConstraintSpec::TIntersectingAny { t, .. } => is_t_intersecting(family, t),
            ConstraintSpec::UUnion { u, .. } => is_u_union(family, u),
            ConstraintSpec::Diameter { w, .. } => {
                family.is_empty() || diameter(family).is_ok_and(|d| d <= w)
            }
            ConstraintSpec::Iu { .. } => is_iu(family),
        }
    }
}

impl fmt::Display for ConstraintSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintSpec::TIntersectingUniform { n, k, t } => {
                write!(f, "t_intersecting_uniform(n={n},k={k},t={t})")
            }
            ConstraintSpec::TIntersectingAny { n, t } => {
                write!(f, "t_intersecting_any(n={n},t={t})")
            }
            ConstraintSpec::UUnion { n, u } => write!(f, "u_union(n={n},u={u})"),
            ConstraintSpec::Diameter { n, w } => write!(f, "diameter(n={n},w={w})"),
            ConstraintSpec::Iu { n } => write!(f, "iu(n={n})"),
        }
    }
}

/// Resource limits and parallelism for a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; 0 uses the default pool.
    pub workers: usize,
    pub max_nodes: Option<u64>,
    pub max_duration: Option<Duration>,
    pub vertex_limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 0,
            max_nodes: None,
            max_duration: None,
            vertex_limit: DEFAULT_VERTEX_LIMIT,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = Some(nodes);
        self
    }
}

struct Budget {
    nodes: AtomicU64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    stopped: AtomicBool,
    batch: u64,
}

impl Budget {
    fn new(opts: &SearchOptions) -> Self {
        let batch = match opts.max_nodes {
            Some(m) if m < 1 << 16 => 1,
            _ => 256,
        };
        Budget {
            nodes: AtomicU64::new(0),
            max_nodes: opts.max_nodes,
            deadline: opts.max_duration.map(|d| Instant::now() + d),
            stopped: AtomicBool::new(false),
            batch,
        }
    }

    fn charge(&self, pending: u64) -> bool {
        let total = self.nodes.fetch_add(pending, Ordering::Relaxed) + pending;
        if self.max_nodes.is_some_and(|m| total > m)
            || self.deadline.is_some_and(|d| Instant::now() >= d)
        {
            self.stopped.store(true, Ordering::Relaxed);
        }
        !self.stopped.load(Ordering::Relaxed)
    }
}

struct Meter<'a> {
    budget: &'a Budget,
    pending: u64,
}

impl Meter<'_> {
    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= self.budget.batch {
            let pending = std::mem::take(&mut self.pending);
            return self.budget.charge(pending);
        }
        !self.budget.stopped.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        let pending = std::mem::take(&mut self.pending);
        if pending > 0 {
            self.budget.charge(pending);
        }
    }
}

struct CompatGraph {
    n: usize,
    vertices: Vec<Subset>,
    adj: Vec<u128>,
}

type Branch = (u128, u128, u128);

impl CompatGraph {
    fn build(c: &ConstraintSpec, limit: usize) -> Result<Self> {
        c.validate()?;
        let vertices = c.candidates();
        let cap = limit.min(DEFAULT_VERTEX_LIMIT);
        if vertices.len() > cap {
            return Err(Error::LimitExceeded(format!(
                "{c} has {} candidate sets; the limit is {cap}",
                vertices.len()
            )));
        }
        let adj = vertices
            .iter()
            .enumerate()
            .map(|(i, a)| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(j, b)| i != j && c.compatible(*a, *b))
                    .fold(0u128, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(CompatGraph {
            n: c.n(),
            vertices,
            adj,
        })
    }

    fn family(&self, mut mask: u128) -> SetFamily {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            members.push(self.vertices[mask.trailing_zeros() as usize]);
            mask &= mask - 1;
        }
        SetFamily::from_sorted_unchecked(self.n, members)
    }

    fn pivot(&self, p: u128, x: u128) -> usize {
        let mut best = (0u32, usize::MAX);
        let mut pool = p | x;
        while pool != 0 {
            let u = pool.trailing_zeros() as usize;
            let score = (p & self.adj[u]).count_ones();
            if best.1 == usize::MAX || score > best.0 {
                best = (score, u);
            }
            pool &= pool - 1;
        }
        best.1
    }

    fn children(&self, r: u128, mut p: u128, mut x: u128) -> Vec<Branch> {
        let u = self.pivot(p, x);
        let mut cand = p & !self.adj[u];
        let mut out = Vec::new();
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let bit = 1u128 << v;
            out.push((r | bit, p & self.adj[v], x & self.adj[v]));
            p &= !bit;
            x |= bit;
            cand &= !bit;
        }
        out
    }

    fn roots(&self) -> Vec<Branch> {
        let all = if self.vertices.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.vertices.len()) - 1
        };
        if all == 0 {
            return vec![(0, 0, 0)];
        }
        self.children(0, all, 0)
    }

    fn expand(
        &self,
        (r, p, x): Branch,
        meter: &mut Meter<'_>,
        emit: &mut impl FnMut(u128),
    ) -> bool {
        if !meter.tick() {
            return false;
        }
        if p == 0 {
            if x == 0 {
                emit(r);
            }
            return true;
        }
        self.children(r, p, x)
            .into_iter()
            .all(|b| self.expand(b, meter, emit))
    }
}

/// The result of folding over every maximal family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Folded<A> {
    pub value: A,
    pub families: u64,
    pub nodes: u64,
    pub exhausted: bool,
}

/// Folds `fold` over every maximal family, in enumeration order within a
/// root branch, and combines branch results with `reduce` in branch order.
/// The result does not depend on the number of workers when the search is
/// exhausted.
pub fn fold_maximal<A, I, F, R>(
    c: &ConstraintSpec,
    opts: &SearchOptions,
    identity: I,
    fold: F,
    reduce: R,
) -> Result<Folded<A>>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, SetFamily) -> A + Sync + Send,
    R: Fn(A, A) -> A,
{
    let graph = CompatGraph::build(c, opts.vertex_limit)?;
    let budget = Budget::new(opts);
    let roots = graph.roots();
    let parts = par::with_workers(opts.workers, || {
        par::map(&roots, |&branch| {
            let mut meter = Meter {
                budget: &budget,
                pending: 0,
            };
            let mut acc = Some(identity());
            let mut count = 0u64;
            graph.expand(branch, &mut meter, &mut |mask| {
                count += 1;
                let family = graph.family(mask);
                acc = acc.take().map(|a| fold(a, family));
            });
            meter.flush();
            (acc.expect("accumulator is always restored"), count)
        })
    });
    let mut families = 0;
    let mut value = identity();
    for (part, count) in parts {
        families += count;
        value = reduce(value, part);
    }
    Ok(Folded {
        value,
        families,
        nodes: budget.nodes.load(Ordering::Relaxed),
        exhausted: !budget.stopped.load(Ordering::Relaxed),
    })
}

/// Every maximal family under `c`, in enumeration order.
pub fn maximal_families(
    c: &ConstraintSpec,
    opts: &SearchOptions,
) -> Result<Folded<Vec<SetFamily>>> {
    fold_maximal(
        c,
        opts,
        Vec::new,
        |mut acc, f| {
            acc.push(f);
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub max_beta: u64,
    /// Lexicographically least maximal family attaining `max_beta`.
    pub witness: SetFamily,
    pub families_enumerated: u64,
    pub exhausted: bool,
    pub nodes: u64,
}

type Best = Option<(u64, SetFamily)>;

fn better(a: Best, b: Best) -> Best {
    match (a, b) {
        (None, b) => b,
        (a, None) => a,
        (Some(a), Some(b)) => {
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                Some(b)
            } else {
                Some(a)
            }
        }
    }
}

/// Maximum of β over the maximal families under `c`.
pub fn max_beta(c: &ConstraintSpec, opts: &SearchOptions) -> Result<SearchResult> {
    let folded = fold_maximal(
        c,
        opts,
        || None,
        |best, family| {
            let beta = sturdiness(&family).unwrap_or(0);
            better(best, Some((beta, family)))
        },
        better,
    )?;
    let (max_beta, witness) = match folded.value {
        Some(best) => best,
        None => (0, SetFamily::empty(c.n())?),
    };
    Ok(SearchResult {
        max_beta,
        witness,
        families_enumerated: folded.families,
        exhausted: folded.exhausted,
        nodes: folded.nodes,
    })
}

/// Lazily yields every choice of one k-set from each complementary pair of
/// `([2k] choose k)` that passes a filter.
pub struct PairSelections<P> {
    n: usize,
    pairs: Vec<(Subset, Subset)>,
    next: u128,
    end: u128,
    keep: P,
}

impl<P: FnMut(&SetFamily) -> bool> Iterator for PairSelections<P> {
    type Item = SetFamily;

    fn next(&mut self) -> Option<SetFamily> {
        while self.next < self.end {
            let index = self.next;
            self.next += 1;
            let members = self
                .pairs
                .iter()
                .enumerate()
                .map(|(p, &(with_one, other))| if index >> p & 1 == 0 { with_one } else { other })
                .collect();
            let family = SetFamily::from_unsorted_unchecked(self.n, members);
            if (self.keep)(&family) {
                return Some(family);
            }
        }
        None
    }
}

/// Selection number `x` takes, from pair `p` (pairs ordered by their
/// member containing 1), the set containing 1 when bit `p` of `x` is 0.
pub fn one_per_pair_selections<P>(n: usize, k: usize, keep: P) -> Result<PairSelections<P>>
where
    P: FnMut(&SetFamily) -> bool,
{
    if k == 0 || n != 2 * k {
        return Err(Error::param(format!(
            "pair selections need n = 2k >= 2, got n={n} k={k}"
        )));
    }
    let pairs: Vec<(Subset, Subset)> = k_subsets(n, k)
        .into_iter()
        .filter(|s| s.contains(1))
        .map(|s| (s, s.complement(n)))
        .collect();
    if pairs.len() > DEFAULT_VERTEX_LIMIT - 1 {
        return Err(Error::LimitExceeded(format!(
            "{} complementary pairs is too many to index",
            pairs.len()
        )));
    }
    Ok(PairSelections {
        n,
        end: 1u128 << pairs.len(),
        pairs,
        next: 0,
        keep,
    })
}

/// All degree-regular one-per-pair selections on `([6] choose 3)`, sorted.
pub fn regular_selections() -> Result<Vec<SetFamily>> {
    let regular = |f: &SetFamily| degree_vector(f).windows(2).all(|w| w[0] == w[1]);
    let mut out: Vec<SetFamily> = one_per_pair_selections(6, 3, regular)?.collect();
    if out.is_empty() {
        return Err(Error::pre("no degree-regular selection on ([6] choose 3)"));
    }
    out.sort();
    Ok(out)
}

/// The conjectures that [`probe_conjecture`] can test exhaustively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// (2s+1)-union families.
    C61,
    /// Families of diameter at most 2s+1.
    C62,
    /// IU families.
    C63,
}

impl Conjecture {
    pub fn id(self) -> &'static str {
        match self {
            Conjecture::C61 => "c61",
            Conjecture::C62 => "c62",
            Conjecture::C63 => "c63",
        }
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c61" => Ok(Conjecture::C61),
            "c62" => Ok(Conjecture::C62),
            "c63" => Ok(Conjecture::C63),
            other => Err(Error::param(format!(
                "unknown conjecture `{other}`; expected c61, c62 or c63"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub conjecture: Conjecture,
    pub n: usize,
    pub s: Option<usize>,
    pub constraint: ConstraintSpec,
    /// Conjectured bound; `applicable` records whether n is in the
    /// conjecture's range.
    pub bound: Bound,
    pub result: SearchResult,
    /// `max_beta` is at most the conjectured bound.
    pub within_bound: bool,
}

/// Exhaustive maximum of β under a conjecture's hypothesis, compared to
/// its right-hand side. `s` is required for c61 and c62 and ignored for
/// c63.
pub fn probe_conjecture(
    conjecture: Conjecture,
    n: usize,
    s: Option<usize>,
    opts: &SearchOptions,
) -> Result<ProbeReport> {
    let (constraint, bound, s) = match conjecture {
        Conjecture::C61 | Conjecture::C62 => {
            let s = s.ok_or_else(|| Error::param(format!("{} needs s", conjecture.id())))?;
            let w = 2 * s + 1;
            let constraint = if conjecture == Conjecture::C61 {
                ConstraintSpec::UUnion { n, u: w }
            } else {
                ConstraintSpec::Diameter { n, w }
            };
            (
                constraint,
                odd_union_conjectured_beta_bound(n as i64, s as i64),
                Some(s),
            )
        }
        Conjecture::C63 => (ConstraintSpec::Iu { n }, iu_beta_bound(n as i64), None),
    };
    let result = max_beta(&constraint, opts)?;
    let within_bound = bound.admits(result.max_beta);
    Ok(ProbeReport {
        conjecture,
        n,
        s,
        constraint,
        bound,
        result,
        within_bound,
    })
}
