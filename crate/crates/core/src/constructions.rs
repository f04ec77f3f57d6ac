//! Builders for the named families.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::family::{all_subsets, k_subsets, SetFamily, Subset, MAX_N};
use crate::formulas::binom;
use crate::metrics::is_intersecting;
use crate::search::regular_selections;
use crate::transforms::generated;

/// Largest ground set for builders that enumerate all of `2^[n]`.
pub const ENUMERATION_MAX_N: usize = 24;

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::GroundSize(n));
    }
    Ok(())
}

fn check_enumerable(n: usize) -> Result<()> {
    check_n(n)?;
    if n > ENUMERATION_MAX_N {
        return Err(Error::LimitExceeded(format!(
            "2^[{n}] is too large to enumerate (limit n = {ENUMERATION_MAX_N})"
        )));
    }
    Ok(())
}

fn check_level(n: usize, k: usize) -> Result<()> {
    check_n(n)?;
    if k > n {
        return Err(Error::param(format!("need k <= n, got n={n} k={k}")));
    }
    Ok(())
}

pub fn power_set(n: usize) -> Result<SetFamily> {
    check_enumerable(n)?;
    Ok(SetFamily::from_sorted_unchecked(n, all_subsets(n)))
}

pub fn k_level(n: usize, k: usize) -> Result<SetFamily> {
    check_level(n, k)?;
    Ok(SetFamily::from_sorted_unchecked(n, k_subsets(n, k)))
}

/// k-sets containing `center`.
pub fn star(n: usize, k: usize, center: usize) -> Result<SetFamily> {
    check_level(n, k)?;
    if !(1..=n).contains(&center) {
        return Err(Error::ElementOutOfRange { element: center, n });
    }
    Ok(k_level(n, k)?.filter(|s| s.contains(center)))
}

/// `T(n, k)`: k-sets meeting `{1, 2, 3}` in at least two points.
pub fn triangle(n: usize, k: usize) -> Result<SetFamily> {
    triangle_at(n, k, [1, 2, 3])
}

/// k-sets meeting `{u, v, w}` in at least two points.
pub fn triangle_at(n: usize, k: usize, center: [usize; 3]) -> Result<SetFamily> {
    check_level(n, k)?;
    if k < 2 || n < 3 {
        return Err(Error::param(format!(
            "triangle needs n >= k >= 2 and n >= 3, got n={n} k={k}"
        )));
    }
    let core = Subset::from_elements(center.iter().copied()).map_err(|_| {
        Error::param(format!(
            "triangle center {center:?} must be distinct elements of [{n}]"
        ))
    })?;
    if core.len() != 3 || !core.is_subset_of(Subset::full(n)) {
        return Err(Error::param(format!(
            "triangle center {center:?} must be distinct elements of [{n}]"
        )));
    }
    Ok(k_level(n, k)?.filter(|s| (s & core).len() >= 2))
}

/// `A_i(n, k, t)`: k-sets meeting `[t+2i]` in at least `t+i` points.
pub fn frankl(n: usize, k: usize, t: usize, i: usize) -> Result<SetFamily> {
    check_level(n, k)?;
    if t == 0 || i == 0 || k < t + i {
        return Err(Error::param(format!(
            "frankl needs t >= 1 and 1 <= i <= k-t, got k={k} t={t} i={i}"
        )));
    }
    if t + 2 * i > n {
        return Err(Error::param(format!(
            "frankl needs t+2i <= n, got n={n} t={t} i={i}"
        )));
    }
    let core = Subset::interval(1, t + 2 * i);
    Ok(k_level(n, k)?.filter(|s| (s & core).len() >= t + i))
}

/// `Ã_1(n, k, t)`: k-sets meeting `[t+2]` in exactly `t+1` points.
pub fn frankl_tilde(n: usize, k: usize, t: usize) -> Result<SetFamily> {
    check_level(n, k)?;
    if t == 0 || k < t + 1 || t + 2 > n {
        return Err(Error::param(format!(
            "frankl_tilde needs t >= 1, k >= t+1, n >= t+2; got n={n} k={k} t={t}"
        )));
    }
    let core = Subset::interval(1, t + 2);
    Ok(k_level(n, k)?.filter(|s| (s & core).len() == t + 1))
}

/// `B_r(C)`: every subset of `[n]` within distance `r` of `center`.
pub fn hamming_ball(n: usize, r: usize, center: Subset) -> Result<SetFamily> {
    check_n(n)?;
    if r > n {
        return Err(Error::param(format!("radius {r} exceeds n = {n}")));
    }
    if !center.is_subset_of(Subset::full(n)) {
        return Err(Error::param(format!("center {center} is not inside [{n}]")));
    }
    let size: u128 = (0..=r)
        .map(|d| binom(n as i64, d as i64))
        .sum::<BigInt>()
        .try_into()
        .unwrap_or(u128::MAX);
    if size > 1 << ENUMERATION_MAX_N {
        return Err(Error::LimitExceeded(format!(
            "B_{r} over [{n}] has {size} members"
        )));
    }
    let members = (0..=r)
        .flat_map(|d| k_subsets(n, d))
        .map(|flip| center ^ flip)
        .collect();
    Ok(SetFamily::from_unsorted_unchecked(n, members))
}

/// The lexicographically least degree-regular intersecting 3-graph on
/// `[6]` that takes one set from each complementary pair.
pub fn g0() -> Result<SetFamily> {
    regular_selections()?
        .into_iter()
        .next()
        .ok_or_else(|| Error::pre("no degree-regular selection exists"))
}

/// Up-closure of [`g0`] in the k-level of `[n]`.
pub fn f0(n: usize, k: usize) -> Result<SetFamily> {
    check_level(n, k)?;
    if n < 6 || k < 3 {
        return Err(Error::param(format!(
            "f0 needs n >= 6 and k >= 3, got n={n} k={k}"
        )));
    }
    generated(g0()?.members(), n, k)
}

/// The extremal t-intersecting family on `[n]`: everything of size at
/// least `(n+t)/2`, plus for odd `n−t` the `(n+t−1)/2`-sets inside `[n−1]`.
pub fn katona_family(n: usize, t: usize) -> Result<SetFamily> {
    check_enumerable(n)?;
    if t == 0 || t >= n {
        return Err(Error::param(format!(
            "katona family needs 0 < t < n, got n={n} t={t}"
        )));
    }
    let inner = Subset::full(n - 1);
    let members = if (n - t).is_multiple_of(2) {
        let m = (n + t) / 2;
        all_subsets(n)
            .into_iter()
            .filter(|s| s.len() >= m)
            .collect()
    } else {
        let m = (n + t).div_ceil(2);
        all_subsets(n)
            .into_iter()
            .filter(|s| s.len() >= m || (s.len() == m - 1 && s.is_subset_of(inner)))
            .collect()
    };
    Ok(SetFamily::from_sorted_unchecked(n, members))
}

/// `B_s(∅) ∪ T(n, s+1)`.
pub fn diameter_example(n: usize, s: usize) -> Result<SetFamily> {
    if s == 0 || n < 2 * (s + 1) {
        return Err(Error::param(format!(
            "diameter example needs s >= 1 and n >= 2(s+1), got n={n} s={s}"
        )));
    }
    hamming_ball(n, s, Subset::EMPTY)?.union(&triangle(n, s + 1)?)
}

/// `G ∪ {F : |F| ≤ s}` for an intersecting (s+1)-uniform `G`.
pub fn example_511(n: usize, s: usize, g: &SetFamily) -> Result<SetFamily> {
    if n < 2 * (s + 1) {
        return Err(Error::param(format!(
            "example needs n >= 2(s+1), got n={n} s={s}"
        )));
    }
    if g.n() != n {
        return Err(Error::param(format!(
            "G lives on [{}], expected [{n}]",
            g.n()
        )));
    }
    if g.uniformity() != Some(s + 1) {
        return Err(Error::pre(format!(
            "G must be nonempty and {}-uniform",
            s + 1
        )));
    }
    if !is_intersecting(g) {
        return Err(Error::pre("G must be intersecting"));
    }
    hamming_ball(n, s, Subset::EMPTY)?.union(g)
}

/// A named builder with its parameters, as accepted by `construct`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    PowerSet {
        n: usize,
    },
    KLevel {
        n: usize,
        k: usize,
    },
    Star {
        n: usize,
        k: usize,
        c: usize,
    },
    Triangle {
        n: usize,
        k: usize,
    },
    TriangleAt {
        n: usize,
        k: usize,
        at: [usize; 3],
    },
    Frankl {
        n: usize,
        k: usize,
        t: usize,
        i: usize,
    },
    FranklTilde {
        n: usize,
        k: usize,
        t: usize,
    },
    HammingBall {
        n: usize,
        r: usize,
        center: Subset,
    },
    G0,
    F0 {
        n: usize,
        k: usize,
    },
    Katona {
        n: usize,
        t: usize,
    },
    DiameterExample {
        n: usize,
        s: usize,
    },
    Example511 {
        n: usize,
        s: usize,
        g: SetFamily,
    },
}

/// Builder names in the order they are documented.
pub const SPEC_NAMES: [&str; 13] = [
    "powerset",
    "klevel",
    "star",
    "triangle",
    "triangle_at",
    "frankl",
    "frankl_tilde",
    "hamming_ball",
    "g0",
    "f0",
    "katona",
    "diameter_example",
    "example_511",
];

struct Params<'a> {
    name: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    fn raw(&self, key: &str) -> Result<&'a str> {
        self.pairs
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::param(format!("{} needs parameter `{key}`", self.name)))
    }

    fn int(&self, key: &str) -> Result<usize> {
        let v = self.raw(key)?;
        v.parse().map_err(|_| {
            Error::param(format!(
                "parameter `{key}` must be a non-negative integer, got `{v}`"
            ))
        })
    }

    fn int_or(&self, key: &str, default: usize) -> Result<usize> {
        if self.pairs.iter().any(|(k, _)| *k == key) {
            self.int(key)
        } else {
            Ok(default)
        }
    }

    fn elements(&self, key: &str) -> Result<Vec<usize>> {
        let v = self.raw(key)?;
        if v.is_empty() || v == "-" {
            return Ok(Vec::new());
        }
        v.split('.')
            .map(|e| {
                e.parse().map_err(|_| {
                    Error::param(format!("parameter `{key}` must look like 1.2.3, got `{v}`"))
                })
            })
            .collect()
    }

    fn only(&self, allowed: &[&str]) -> Result<()> {
        match self.pairs.iter().find(|(k, _)| !allowed.contains(k)) {
            Some((k, _)) => Err(Error::param(format!(
                "{} does not take parameter `{k}`",
                self.name
            ))),
            None => Ok(()),
        }
    }
}

impl FamilySpec {
    /// Parses `name` or `name:key=value,key=value`. Set-valued parameters
    /// are written `1.2.3` (`-` for the empty set). Family-valued
    /// parameters (`g` for `example_511`) are passed to `load`.
    pub fn parse(text: &str, load: impl Fn(&str) -> Result<SetFamily>) -> Result<Self> {
        let text = text.trim();
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let mut pairs = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::param(format!("expected key=value, got `{item}`")))?;
            if pairs.iter().any(|(seen, _)| *seen == k.trim()) {
                return Err(Error::param(format!(
                    "parameter `{}` given twice",
                    k.trim()
                )));
            }
            pairs.push((k.trim(), v.trim()));
        }
        let p = Params { name, pairs };
        let spec = match name {
            "powerset" => {
                p.only(&["n"])?;
                FamilySpec::PowerSet { n: p.int("n")? }
            }
            "klevel" => {
                p.only(&["n", "k"])?;
                FamilySpec::KLevel {
                    n: p.int("n")?,
                    k: p.int("k")?,
                }
            }
            "star" => {
                p.only(&["n", "k", "c"])?;
                FamilySpec::Star {
                    n: p.int("n")?,
                    k: p.int("k")?,
                    c: p.int_or("c", 1)?,
                }
            }
            "triangle" => {
                p.only(&["n", "k"])?;
                FamilySpec::Triangle {
                    n: p.int("n")?,
                    k: p.int("k")?,
                }
            }
            "triangle_at" => {
                p.only(&["n", "k", "at"])?;
                let at: [usize; 3] = p.elements("at")?.try_into().map_err(|_| {
                    Error::param("triangle_at needs exactly three points, e.g. at=2.4.6")
                })?;
                FamilySpec::TriangleAt {
                    n: p.int("n")?,
                    k: p.int("k")?,
                    at,
                }
            }
            "frankl" => {
                p.only(&["n", "k", "t", "i"])?;
                FamilySpec::Frankl {
                    n: p.int("n")?,
                    k: p.int("k")?,
                    t: p.int("t")?,
                    i: p.int_or("i", 1)?,
                }
            }
            "frankl_tilde" => {
                p.only(&["n", "k", "t"])?;
                FamilySpec::FranklTilde {
                    n: p.int("n")?,
                    k: p.int("k")?,
                    t: p.int("t")?,
                }
            }
            "hamming_ball" => {
                p.only(&["n", "r", "center"])?;
                let center = if p.pairs.iter().any(|(k, _)| *k == "center") {
                    Subset::from_elements(p.elements("center")?)?
                } else {
                    Subset::EMPTY
                };
                FamilySpec::HammingBall {
                    n: p.int("n")?,
                    r: p.int("r")?,
                    center,
                }
            }
            "g0" => {
                p.only(&[])?;
                FamilySpec::G0
            }
            "f0" => {
                p.only(&["n", "k"])?;
                FamilySpec::F0 {
                    n: p.int("n")?,
                    k: p.int("k")?,
                }
            }
            "katona" => {
                p.only(&["n", "t"])?;
                FamilySpec::Katona {
                    n: p.int("n")?,
                    t: p.int("t")?,
                }
            }
            "diameter_example" => {
                p.only(&["n", "s"])?;
                FamilySpec::DiameterExample {
                    n: p.int("n")?,
                    s: p.int("s")?,
                }
            }
            "example_511" => {
                p.only(&["n", "s", "g"])?;
                FamilySpec::Example511 {
                    n: p.int("n")?,
                    s: p.int("s")?,
                    g: load(p.raw("g")?)?,
                }
            }
            other => {
                return Err(Error::param(format!(
                    "unknown family `{other}`; expected one of {}",
                    SPEC_NAMES.join(", ")
                )))
            }
        };
        Ok(spec)
    }

    pub fn build(&self) -> Result<SetFamily> {
        match self {
            FamilySpec::PowerSet { n } => power_set(*n),
            FamilySpec::KLevel { n, k } => k_level(*n, *k),
            FamilySpec::Star { n, k, c } => star(*n, *k, *c),
            FamilySpec::Triangle { n, k } => triangle(*n, *k),
            FamilySpec::TriangleAt { n, k, at } => triangle_at(*n, *k, *at),
            FamilySpec::Frankl { n, k, t, i } => frankl(*n, *k, *t, *i),
            FamilySpec::FranklTilde { n, k, t } => frankl_tilde(*n, *k, *t),
            FamilySpec::HammingBall { n, r, center } => hamming_ball(*n, *r, *center),
            FamilySpec::G0 => g0(),
            FamilySpec::F0 { n, k } => f0(*n, *k),
            FamilySpec::Katona { n, t } => katona_family(*n, *t),
            FamilySpec::DiameterExample { n, s } => diameter_example(*n, *s),
            FamilySpec::Example511 { n, s, g } => example_511(*n, *s, g),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dotted = |s: &Subset| {
            if s.is_empty() {
                "-".to_string()
            } else {
                s.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            }
        };
        match self {
            FamilySpec::PowerSet { n } => write!(f, "powerset:n={n}"),
            FamilySpec::KLevel { n, k } => write!(f, "klevel:n={n},k={k}"),
            FamilySpec::Star { n, k, c } => write!(f, "star:n={n},k={k},c={c}"),
            FamilySpec::Triangle { n, k } => write!(f, "triangle:n={n},k={k}"),
            FamilySpec::TriangleAt { n, k, at } => {
                write!(
                    f,
                    "triangle_at:n={n},k={k},at={}.{}.{}",
                    at[0], at[1], at[2]
                )
            }
            FamilySpec::Frankl { n, k, t, i } => write!(f, "frankl:n={n},k={k},t={t},i={i}"),
            FamilySpec::FranklTilde { n, k, t } => write!(f, "frankl_tilde:n={n},k={k},t={t}"),
            FamilySpec::HammingBall { n, r, center } => {
                write!(f, "hamming_ball:n={n},r={r},center={}", dotted(center))
            }
            FamilySpec::G0 => write!(f, "g0"),
            FamilySpec::F0 { n, k } => write!(f, "f0:n={n},k={k}"),
            FamilySpec::Katona { n, t } => write!(f, "katona:n={n},t={t}"),
            FamilySpec::DiameterExample { n, s } => write!(f, "diameter_example:n={n},s={s}"),
            FamilySpec::Example511 { n, s, .. } => write!(f, "example_511:n={n},s={s},g=<family>"),
        }
    }
}
