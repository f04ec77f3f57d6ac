//! Exact binomial arithmetic and closed-form evaluators for the link
//! counts and bounds used throughout the crate. Nothing here looks at a
//! family; brute-force counterparts live in [`crate::metrics`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::family::{SetFamily, Subset};

pub type ExactInt = BigInt;
pub type ExactRational = BigRational;

/// `C(a, b)`, zero whenever `b < 0`, `b > a` or `a < 0`.
pub fn binom(a: i64, b: i64) -> ExactInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// `Σ_{0 ≤ j ≤ s} C(a, j)`; zero for `s < 0`.
pub fn binom_prefix_sum(a: i64, s: i64) -> ExactInt {
    (0..=s).map(|j| binom(a, j)).sum()
}

fn int(v: impl Into<BigInt>) -> ExactRational {
    BigRational::from_integer(v.into())
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

fn pow2(e: i64) -> ExactRational {
    if e >= 0 {
        int(BigInt::one() << e as usize)
    } else {
        ratio(1, BigInt::one() << (-e) as usize)
    }
}

/// Renders an exact rational as `p` or `p/q`.
pub fn render_rational(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion for display and tolerance checks.
pub fn to_f64(r: &ExactRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

// ---------------------------------------------------------------------------
// Triangle family link counts
// ---------------------------------------------------------------------------

/// The four off-diagonal link-count classes of the triangle family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCases {
    /// `3 < i ≠ j`.
    pub both_outside: ExactInt,
    /// `i ≤ 3 < j`.
    pub inside_outside: ExactInt,
    /// `j ≤ 3 < i`.
    pub outside_inside: ExactInt,
    /// `i ≠ j ≤ 3`.
    pub both_inside: ExactInt,
    pub min: ExactInt,
}

/// Closed forms for `b_ij` of `T(n, k)`. Requires `n ≥ 2k`, `k ≥ 3`.
pub fn triangle_beta_cases(n: i64, k: i64) -> Result<TriangleCases> {
    if k < 3 || n < 2 * k {
        return Err(Error::param(format!(
            "triangle cases need k >= 3 and n >= 2k, got n={n} k={k}"
        )));
    }
    let both_outside = 3 * binom(n - 5, k - 3) + binom(n - 5, k - 4);
    let inside_outside = 2 * binom(n - 4, k - 2) + binom(n - 4, k - 3);
    let outside_inside = binom(n - 4, k - 3);
    let both_inside = binom(n - 3, k - 2);
    let min = [
        &both_outside,
        &inside_outside,
        &outside_inside,
        &both_inside,
    ]
    .into_iter()
    .min()
    .cloned()
    .expect("four values");
    Ok(TriangleCases {
        both_outside,
        inside_outside,
        outside_inside,
        both_inside,
        min,
    })
}

// ---------------------------------------------------------------------------
// Frankl families
// ---------------------------------------------------------------------------

/// β of `A_1(n, k, t)` (`i = 1`) or `A_2(n, k, t)` (`i = 2`).
pub fn frankl_beta(n: i64, k: i64, t: i64, i: i64) -> Result<ExactInt> {
    if t < 1 || !(1..=2).contains(&i) || k < t + i || n < k {
        return Err(Error::param(format!(
            "frankl_beta needs t >= 1, i in {{1,2}}, n >= k >= t+i; got n={n} k={k} t={t} i={i}"
        )));
    }
    Ok(match i {
        1 => binom(n - t - 3, k - t - 2),
        _ => (t + 3) * binom(n - t - 5, k - t - 3) + binom(n - t - 5, k - t - 4),
    })
}

/// `β(A_2)/β(A_1)` exactly, and the large-n approximation
/// `(t+3)/c − (t+2)/c²` with `c = (n−t−4)/(k−t−3)`.
///
/// The approximation replaces `(k−t−2)(k−t−3)` by `(k−t−3)²` and
/// `(n−t−3)(n−t−4)` by `(n−t−4)²`, so the two only agree in the limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FranklRatio {
    pub c: ExactRational,
    pub exact: ExactRational,
    pub asymptotic: ExactRational,
}

pub fn frankl_beta_ratio(n: i64, k: i64, t: i64) -> Result<FranklRatio> {
    if t < 1 || k < t + 4 || n < t + 5 || n < k {
        return Err(Error::param(format!(
            "frankl ratio needs k >= t+4, n >= max(k, t+5); got n={n} k={k} t={t}"
        )));
    }
    let a1 = frankl_beta(n, k, t, 1)?;
    if a1.is_zero() {
        return Err(Error::param("beta(A_1) is zero; ratio undefined"));
    }
    let a2 = frankl_beta(n, k, t, 2)?;
    let c = ratio(n - t - 4, k - t - 3);
    let asymptotic = ratio(t + 3, 1) / &c - ratio(t + 2, 1) / (&c * &c);
    Ok(FranklRatio {
        exact: BigRational::new(a2, a1),
        asymptotic,
        c,
    })
}

// ---------------------------------------------------------------------------
// G0 / F0
// ---------------------------------------------------------------------------

/// Structural counts of a 3-graph on `[6]` that determine the link counts
/// of its up-closure in any k-level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G0Stats {
    pub degrees: Vec<u64>,
    /// `codegrees[i][j]` for 0-based i ≠ j; zero on the diagonal.
    pub codegrees: Vec<Vec<u64>>,
    /// `up_counts[m]` = number of m-subsets of `[6]` containing a member.
    pub up_counts: [u64; 7],
    /// Bit `s` set iff the subset with bits `s` contains a member.
    closure: u64,
}

impl G0Stats {
    pub fn from_family(g: &SetFamily) -> Result<Self> {
        if g.n() != 6 {
            return Err(Error::param("G0 statistics need a family on [6]"));
        }
        let mut degrees = vec![0u64; 6];
        let mut codegrees = vec![vec![0u64; 6]; 6];
        for m in g {
            for a in m.iter() {
                degrees[a - 1] += 1;
                for b in m.iter().filter(|&b| b != a) {
                    codegrees[a - 1][b - 1] += 1;
                }
            }
        }
        let mut closure = 0u64;
        let mut up_counts = [0u64; 7];
        for s in 0u64..64 {
            let set = Subset::from_bits(s);
            if g.iter().any(|m| m.is_subset_of(set)) {
                closure |= 1 << s;
                up_counts[set.len()] += 1;
            }
        }
        Ok(G0Stats {
            degrees,
            codegrees,
            up_counts,
            closure,
        })
    }

    /// `N_m` for m = 3..=6, the values carried by the `10, 16, 6, 1` style
    /// coefficients.
    pub fn n_m(&self, m: usize) -> u64 {
        self.up_counts[m]
    }

    /// Every pair of points lies in the same number of members.
    pub fn is_pair_balanced(&self) -> bool {
        let first = self.codegrees[0][1];
        (0..6).all(|i| (0..6).all(|j| i == j || self.codegrees[i][j] == first))
    }

    /// Number of m-subsets S of `[6]` containing a member with
    /// `S ∩ mask_in = mask_in` and `S ∩ mask_out = ∅`.
    fn count(&self, m: usize, must: Subset, avoid: Subset) -> u64 {
        (0u64..64)
            .map(Subset::from_bits)
            .filter(|s| self.closure >> s.bits() & 1 == 1)
            .filter(|s| s.len() == m && must.is_subset_of(*s) && s.is_disjoint(avoid))
            .count() as u64
    }
}

/// Coefficient vectors (index 0 ↔ m = 3, …, index 3 ↔ m = 6) for the four
/// classes of `|F₀(ī, j)|`:
///
/// - both outside `[6]`: `Σ c_m C(n−8, k−m−1)`
/// - `i ≤ 6 < j`:        `Σ c_m C(n−7, k−m−1)`
/// - `j ≤ 6 < i`:        `Σ c_m C(n−7, k−m)`
/// - both inside `[6]`:  `Σ c_m C(n−6, k−m)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F0Coefficients {
    pub both_outside: [u64; 4],
    pub inside_outside: [u64; 4],
    pub outside_inside: [u64; 4],
    pub both_inside: [u64; 4],
}

/// The constants as they appear in print, including the `16` that the
/// trace-partition derivation cannot reach (at most `C(6,4) = 15`).
pub const F0_PRINTED: F0Coefficients = F0Coefficients {
    both_outside: [10, 16, 6, 1],
    inside_outside: [5, 5, 1, 0],
    outside_inside: [5, 10, 5, 1],
    both_inside: [3, 4, 1, 0],
};

impl F0Coefficients {
    /// Coefficients for the pair `(i, j)` (1-based), read off the closure.
    pub fn for_pair(stats: &G0Stats, i: usize, j: usize) -> [u64; 4] {
        let inner = |e: usize| (1..=6).contains(&e);
        let pick = |must: Subset, avoid: Subset| -> [u64; 4] {
            std::array::from_fn(|idx| stats.count(idx + 3, must, avoid))
        };
        match (inner(i), inner(j)) {
            (false, false) => pick(Subset::EMPTY, Subset::EMPTY),
            (true, false) => pick(Subset::EMPTY, Subset::singleton(i)),
            (false, true) => pick(Subset::singleton(j), Subset::EMPTY),
            (true, true) => pick(Subset::singleton(j), Subset::singleton(i)),
        }
    }

    /// Class representatives `(7,8)`, `(1,7)`, `(7,1)`, `(1,2)`.
    pub fn derived(stats: &G0Stats) -> Self {
        F0Coefficients {
            both_outside: Self::for_pair(stats, 7, 8),
            inside_outside: Self::for_pair(stats, 1, 7),
            outside_inside: Self::for_pair(stats, 7, 1),
            both_inside: Self::for_pair(stats, 1, 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F0LinkCounts {
    pub both_outside: ExactInt,
    pub inside_outside: ExactInt,
    pub outside_inside: ExactInt,
    pub both_inside: ExactInt,
}

fn weighted(coeffs: &[u64; 4], base: i64, k_shift: impl Fn(i64) -> i64) -> ExactInt {
    coeffs
        .iter()
        .enumerate()
        .map(|(idx, &c)| BigInt::from(c) * binom(base, k_shift(idx as i64 + 3)))
        .sum()
}

fn check_f0_params(n: i64, k: i64) -> Result<()> {
    if n < 8 || k < 3 || k > n {
        return Err(Error::param(format!(
            "F0 link formulas need n >= 8, 3 <= k <= n; got n={n} k={k}"
        )));
    }
    Ok(())
}

/// Evaluates the four class formulas for the given coefficient vectors.
pub fn f0_link_counts(n: i64, k: i64, coeffs: &F0Coefficients) -> Result<F0LinkCounts> {
    check_f0_params(n, k)?;
    Ok(F0LinkCounts {
        both_outside: weighted(&coeffs.both_outside, n - 8, |m| k - m - 1),
        inside_outside: weighted(&coeffs.inside_outside, n - 7, |m| k - m - 1),
        outside_inside: weighted(&coeffs.outside_inside, n - 7, |m| k - m),
        both_inside: weighted(&coeffs.both_inside, n - 6, |m| k - m),
    })
}

/// The four class values with coefficients derived from the concrete G₀.
pub fn f0_link_formulas(n: i64, k: i64, stats: &G0Stats) -> Result<F0LinkCounts> {
    f0_link_counts(n, k, &F0Coefficients::derived(stats))
}

/// `|F₀(ī, j)|` for one specific pair, from that pair's own coefficients.
pub fn f0_link_count(n: i64, k: i64, stats: &G0Stats, i: usize, j: usize) -> Result<ExactInt> {
    check_f0_params(n, k)?;
    if i == j || i == 0 || j == 0 || i as i64 > n || j as i64 > n {
        return Err(Error::param("need distinct i, j in [n]"));
    }
    let c = F0Coefficients::for_pair(stats, i, j);
    let inner = |e: usize| e <= 6;
    Ok(match (inner(i), inner(j)) {
        (false, false) => weighted(&c, n - 8, |m| k - m - 1),
        (true, false) => weighted(&c, n - 7, |m| k - m - 1),
        (false, true) => weighted(&c, n - 7, |m| k - m),
        (true, true) => weighted(&c, n - 6, |m| k - m),
    })
}

// ---------------------------------------------------------------------------
// Bound evaluators
// ---------------------------------------------------------------------------

/// Right-hand side of a bound plus whether the parameters satisfy the
/// bound's own hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: ExactRational,
    pub applicable: bool,
}

impl Bound {
    fn new(value: impl Into<BigInt>, applicable: bool) -> Self {
        Bound {
            value: int(value),
            applicable,
        }
    }

    fn rational(value: ExactRational, applicable: bool) -> Self {
        Bound { value, applicable }
    }

    /// Whether `x ≤ value`.
    pub fn admits(&self, x: u64) -> bool {
        int(x) <= self.value
    }
}

/// Maximum size of a t-intersecting k-family: `C(n−t, k−t)`, valid for
/// `n ≥ (k−t+1)(t+1)`.
pub fn ekr_bound(n: i64, k: i64, t: i64) -> Bound {
    Bound::new(binom(n - t, k - t), n >= (k - t + 1) * (t + 1))
}

/// Maximum size of a t-intersecting family in `2^[n]` (classical form).
pub fn katona_bound(n: i64, t: i64) -> Bound {
    let applicable = 0 < t && t < n;
    let value = if (n - t) % 2 == 0 {
        upper_tail(n, (n + t) / 2)
    } else {
        binom(n - 1, (n + t - 1) / 2) + upper_tail(n, (n + t + 1) / 2)
    };
    Bound::new(value, applicable)
}

/// The odd case with first binomial index `(n+t−1)/2 − 1`, as printed.
/// Equals [`katona_bound`] when `n − t` is even.
pub fn katona_bound_printed(n: i64, t: i64) -> Bound {
    let applicable = 0 < t && t < n;
    let value = if (n - t) % 2 == 0 {
        upper_tail(n, (n + t) / 2)
    } else {
        binom(n - 1, (n + t - 1) / 2 - 1) + upper_tail(n, (n + t + 1) / 2)
    };
    Bound::new(value, applicable)
}

fn upper_tail(n: i64, from: i64) -> ExactInt {
    (from.max(0)..=n).map(|i| binom(n, i)).sum()
}

/// `β ≤ C(n−4, k−3)` for intersecting k-families, `n ≥ 36(k+6)`.
pub fn intersecting_beta_bound(n: i64, k: i64) -> Bound {
    Bound::new(binom(n - 4, k - 3), n >= 36 * (k + 6))
}

/// `β ≤ 2^{n−3}` for intersecting families in `2^[n]`.
pub fn nonuniform_intersecting_beta_bound(n: i64) -> Bound {
    Bound::rational(pow2(n - 3), n >= 1)
}

/// `β ≤ C(n−t−3, k−t−2)` for t-intersecting k-families,
/// `n ≥ 2(t+3)²k²`.
pub fn t_intersecting_beta_bound(n: i64, k: i64, t: i64) -> Bound {
    Bound::new(
        binom(n - t - 3, k - t - 2),
        n >= 2 * (t + 3) * (t + 3) * k * k,
    )
}

/// β bound for t-intersecting families in `2^[n]`: `Σ_{j<s} C(n−2, j)` when
/// `n − t = 2s`, plus `C(n−4, s−2)` when `n − t = 2s + 1` (the odd case
/// needs `n ≥ max(4(s+2)², 36(s+7))`).
pub fn nonuniform_t_intersecting_beta_bound(n: i64, t: i64) -> Bound {
    union_beta_bound(n, n - t)
}

/// β bound for u-union families; dual of the t-intersecting bound. Needs
/// `u < n`, since every family is n-union.
pub fn union_beta_bound(n: i64, u: i64) -> Bound {
    let s = u.div_euclid(2);
    let base = binom_prefix_sum(n - 2, s - 1);
    if u % 2 == 0 {
        Bound::new(base, 0 <= u && u < n)
    } else {
        let applicable = n >= (4 * (s + 2) * (s + 2)).max(36 * (s + 7));
        Bound::new(base + binom(n - 4, s - 2), applicable)
    }
}

/// `β ≤ C(n−t−r−1, k−t−r)` for shifted r-wise t-intersecting k-families,
/// `n ≥ (t+r)(k−t−r+2)+2`.
pub fn shifted_r_wise_beta_bound(n: i64, k: i64, t: i64, r: i64) -> Bound {
    Bound::new(
        binom(n - t - r - 1, k - t - r),
        n >= (t + r) * (k - t - r + 2) + 2,
    )
}

/// Same value for arbitrary r-wise t-intersecting k-families,
/// `n ≥ 2(t+r+1)²k²`.
pub fn r_wise_beta_bound(n: i64, k: i64, t: i64, r: i64) -> Bound {
    Bound::new(
        binom(n - t - r - 1, k - t - r),
        n >= 2 * (t + r + 1) * (t + r + 1) * k * k,
    )
}

/// `β ≤ k/(n−1) · γ` for k-uniform families.
pub fn diversity_beta_bound(n: i64, k: i64, gamma: u64) -> Bound {
    if n < 2 {
        return Bound::new(0, false);
    }
    Bound::rational(ratio(k, n - 1) * int(gamma), true)
}

/// `δ(A)δ(B) ≤ C(n−2, k−2)²` for cross-intersecting k-families, `n > 2k`.
pub fn min_degree_product_bound(n: i64, k: i64) -> Bound {
    let c = binom(n - 2, k - 2);
    Bound::new(&c * &c, n > 2 * k)
}

/// `min(|A|, |B|)` for families with all cross distances ≤ w < n.
pub fn cross_diameter_size_bound(n: i64, w: i64) -> Bound {
    let s = w.div_euclid(2);
    let base = binom_prefix_sum(n, s);
    let value = if w % 2 == 0 {
        base
    } else {
        base + binom(n - 1, s)
    };
    Bound::new(value, 0 <= w && w < n)
}

/// β bound for families of diameter ≤ w: `Σ_{j<s} C(n−2, j)` for `w = 2s`,
/// plus `C(n−3, s−1)` for `w = 2s + 1`. Only meaningful for `w < n`: at
/// `w ≥ n` every family qualifies and `2^[n]` has `β = 2^{n−2}`.
pub fn diameter_beta_bound(n: i64, w: i64) -> Bound {
    let s = w.div_euclid(2);
    let base = binom_prefix_sum(n - 2, s - 1);
    let value = if w % 2 == 0 {
        base
    } else {
        base + binom(n - 3, s - 1)
    };
    Bound::new(value, 0 <= w && w < n)
}

/// `|F| + |G| ≤ 1 + C(n,k) − C(n−k−t, k)` for cross-intersecting
/// `F ⊂ ([n] choose k+t)` ((t+1)-intersecting, nonempty) and
/// `G ⊂ ([n] choose k)`; `n ≥ 2k + t`.
pub fn cross_intersecting_sum_bound(n: i64, k: i64, t: i64) -> Bound {
    Bound::new(
        BigInt::one() + binom(n, k) - binom(n - k - t, k),
        n >= 2 * k + t,
    )
}

/// `|F| ≤ C(n, k−t)` for t-intersecting k-families, `n > 2k − t`.
pub fn t_intersecting_size_bound(n: i64, k: i64, t: i64) -> Bound {
    Bound::new(binom(n, k - t), n > 2 * k - t)
}

/// Non-trivial intersecting k-families: `C(n−1,k−1) − C(n−k−1,k−1) + 1`,
/// `n > 2k`.
pub fn hilton_milner_bound(n: i64, k: i64) -> Bound {
    Bound::new(binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1, n > 2 * k)
}

/// `β ≤ n/(4(n−1)) · |F|` for any family.
pub fn average_beta_bound(n: i64, members: u64) -> Bound {
    if n < 2 {
        return Bound::new(0, false);
    }
    Bound::rational(ratio(n, 4 * (n - 1)) * int(members), true)
}

/// `β ≤ (ℓ+1)/(2(2ℓ+1)) · |F|` for `n = 2ℓ + 1`.
pub fn odd_average_beta_bound(n: i64, members: u64) -> Bound {
    if n < 3 || n % 2 == 0 {
        return Bound::new(0, false);
    }
    let l = (n - 1) / 2;
    Bound::rational(ratio(l + 1, 2 * (2 * l + 1)) * int(members), true)
}

/// `2^{n−4}`: conjectured for IU families, proven when a split exists.
pub fn iu_beta_bound(n: i64) -> Bound {
    Bound::rational(pow2(n - 4), n >= 2)
}

/// `Σ_{j<s} C(n−2, j) + C(n−4, s−2)`: conjectured for (2s+1)-union
/// families and for families of diameter ≤ 2s+1 once `n ≥ 4(s+1)`.
pub fn odd_union_conjectured_beta_bound(n: i64, s: i64) -> Bound {
    Bound::new(
        binom_prefix_sum(n - 2, s - 1) + binom(n - 4, s - 2),
        n >= 4 * (s + 1),
    )
}

// ---------------------------------------------------------------------------
// Densities
// ---------------------------------------------------------------------------

/// `α^ℓ (1−α)^{t−ℓ}` for `0 < α < 1`, `ℓ ≤ t`.
pub fn density_limit(alpha: &ExactRational, t: u32, l: u32) -> Result<ExactRational> {
    if !alpha.is_positive() || *alpha >= BigRational::one() {
        return Err(Error::param("alpha must lie strictly between 0 and 1"));
    }
    if l > t {
        return Err(Error::param("need l <= t"));
    }
    let one_minus = BigRational::one() - alpha;
    Ok(num_traits::pow(alpha.clone(), l as usize) * num_traits::pow(one_minus, (t - l) as usize))
}

/// `C(n−t, k−ℓ) / C(n, k)`.
pub fn binom_ratio(n: i64, k: i64, t: i64, l: i64) -> Result<ExactRational> {
    let den = binom(n, k);
    if den.is_zero() {
        return Err(Error::param("C(n, k) is zero"));
    }
    Ok(BigRational::new(binom(n - t, k - l), den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> ExactInt {
        BigInt::from(v)
    }

    #[test]
    fn binom_values_and_conventions() {
        assert_eq!(binom(5, 2), b(10));
        assert_eq!(binom(3, -1), b(0));
        assert_eq!(binom(3, 4), b(0));
        assert_eq!(binom(-2, 1), b(0));
        assert_eq!(binom(0, 0), b(1));
        assert_eq!(
            binom(64, 32),
            "1832624140942590534".parse::<BigInt>().unwrap()
        );
        for a in 1..40 {
            for k in 0..=a {
                assert_eq!(binom(a, k), binom(a - 1, k) + binom(a - 1, k - 1));
                assert_eq!(binom(a, k), binom(a, a - k));
            }
        }
    }

    #[test]
    fn triangle_cases_at_8_4() {
        let c = triangle_beta_cases(8, 4).unwrap();
        assert_eq!(
            (
                c.both_outside,
                c.inside_outside,
                c.outside_inside,
                c.both_inside,
                c.min
            ),
            (b(10), b(16), b(4), b(10), b(4))
        );
        assert!(triangle_beta_cases(7, 4).is_err());
        assert!(triangle_beta_cases(8, 2).is_err());
    }

    #[test]
    fn triangle_identity() {
        for n in 6..40 {
            for k in 3..=n / 2 {
                let lhs = 3 * binom(n - 5, k - 3) + binom(n - 5, k - 4);
                let rhs = binom(n - 4, k - 3) + 2 * binom(n - 5, k - 3);
                assert_eq!(lhs, rhs);
                assert_eq!(triangle_beta_cases(n, k).unwrap().min, binom(n - 4, k - 3));
            }
        }
    }

    #[test]
    fn frankl_values() {
        assert_eq!(frankl_beta(10, 5, 2, 1).unwrap(), b(5));
        assert_eq!(frankl_beta(12, 6, 1, 2).unwrap(), b(66));
        assert_eq!(frankl_beta(8, 4, 1, 1).unwrap(), b(4));
        assert!(frankl_beta(8, 4, 1, 3).is_err());
    }

    #[test]
    fn frankl_closed_form_variant() {
        // β(A_2) = ((t+3)(n−k−1)/(k−t−3) + 1) · C(n−t−5, k−t−4)
        for t in 1..4i64 {
            for k in t + 4..14 {
                for n in k + 1..30 {
                    let lhs = BigRational::from_integer(frankl_beta(n, k, t, 2).unwrap());
                    let rhs = (ratio((t + 3) * (n - k - 1), k - t - 3) + BigRational::one())
                        * int(binom(n - t - 5, k - t - 4));
                    assert_eq!(lhs, rhs, "n={n} k={k} t={t}");
                }
            }
        }
    }

    #[test]
    fn frankl_ratio_examples() {
        let r = frankl_beta_ratio(10, 5, 1).unwrap();
        assert_eq!(r.exact, ratio(17, 15));
        assert_eq!(r.asymptotic, ratio(17, 25));
        assert_eq!(r.c, ratio(5, 1));
        let r = frankl_beta_ratio(97, 50, 1).unwrap();
        assert_eq!(r.asymptotic, ratio(5, 4));
        assert!((to_f64(&r.exact) - 1.2634).abs() < 1e-3);
        let r = frankl_beta_ratio(397, 200, 1).unwrap();
        assert!((to_f64(&r.exact) - 1.2532).abs() < 1e-3);
        assert!(frankl_beta_ratio(10, 4, 1).is_err());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(nonuniform_t_intersecting_beta_bound(8, 2).value, int(22));
        assert_eq!(katona_bound(6, 2).value, int(22));
        assert_eq!(katona_bound(4, 1).value, int(8));
        assert_eq!(katona_bound(5, 2).value, int(10));
        assert_eq!(katona_bound_printed(5, 2).value, int(12));
        assert_eq!(katona_bound_printed(4, 1).value, int(8));
        let d = diameter_beta_bound(6, 2);
        assert_eq!(d.value, int(1));
        assert_eq!(nonuniform_intersecting_beta_bound(4).value, int(2));
        assert_eq!(nonuniform_intersecting_beta_bound(2).value, ratio(1, 2));
        assert_eq!(nonuniform_t_intersecting_beta_bound(6, 2).value, int(5));
        assert_eq!(odd_union_conjectured_beta_bound(6, 1).value, int(1));
        assert!(!odd_union_conjectured_beta_bound(6, 1).applicable);
        assert_eq!(iu_beta_bound(5).value, int(2));
        assert_eq!(hilton_milner_bound(7, 3).value, int(15 - 3 + 1));
        assert!(!intersecting_beta_bound(100, 4).applicable);
        assert!(intersecting_beta_bound(360, 4).applicable);
        assert_eq!(average_beta_bound(4, 8).value, ratio(8, 3));
        assert_eq!(odd_average_beta_bound(5, 10).value, ratio(30, 10));
        assert_eq!(cross_diameter_size_bound(4, 2).value, int(5));
        assert_eq!(cross_diameter_size_bound(4, 3).value, int(5 + 3));
        assert_eq!(diameter_beta_bound(8, 5).value, int(7 + 5));
        assert!(Bound::new(3, true).admits(3));
        assert!(!Bound::new(3, true).admits(4));
    }

    #[test]
    fn density_examples() {
        assert_eq!(density_limit(&ratio(1, 2), 1, 1).unwrap(), ratio(1, 2));
        assert_eq!(density_limit(&ratio(1, 3), 2, 1).unwrap(), ratio(2, 9));
        assert!(density_limit(&ratio(3, 2), 2, 1).is_err());
        assert!(density_limit(&ratio(0, 1), 2, 1).is_err());
        let r = binom_ratio(3000, 1000, 2, 1).unwrap();
        let target = 2.0 / 9.0;
        assert!((to_f64(&r) - target).abs() / target < 0.01);
    }

    #[test]
    fn render() {
        assert_eq!(render_rational(&ratio(6, 4)), "3/2");
        assert_eq!(render_rational(&int(7)), "7");
    }
}
