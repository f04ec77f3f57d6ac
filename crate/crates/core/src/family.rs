//! Subsets of `[n]` (n ≤ 64) packed into one machine word, families of
//! them, the `.fam` text format, and the elementary family operators.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground size.
pub const MAX_N: usize = 64;

/// A subset of `[n]`. Element `e` (1-based) is stored in bit `e - 1`.
///
/// Ordering is lexicographic on the sorted element lists, so `{} < {1} <
/// {1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `[n] = {1, ..., n}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    /// `{a, a+1, ..., b}`; empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> Self {
        if a > b || a == 0 {
            return Subset::EMPTY;
        }
        Subset(Subset::full(b).0 & !Subset::full(a - 1).0)
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!((1..=MAX_N).contains(&e));
        Subset(1u64 << (e - 1))
    }

    /// Builds a subset from 1-based elements. Elements must lie in `1..=64`;
    /// repeats are ignored.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > MAX_N {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    n: MAX_N,
                });
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(Subset(bits))
    }

    /// Panicking variant of [`Subset::from_elements`] for literals.
    pub fn of(elements: &[usize]) -> Self {
        Subset::from_elements(elements.iter().copied()).expect("element outside 1..=64")
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_N).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        self | Subset::singleton(e)
    }

    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !Subset::singleton(e).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterator over the elements of a [`Subset`], ascending.
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

impl std::ops::BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl std::ops::BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

impl std::ops::Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Element lists agree below the lowest differing element d. The side
        // holding d is smaller unless the other side has nothing above d (then
        // the other side is a proper prefix).
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        let self_holds = self.0 & low != 0;
        let non_holder = if self_holds { other.0 } else { self.0 };
        let holder_smaller = non_holder & above != 0;
        if self_holds == holder_smaller {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// `|A Δ B|`.
pub fn sym_diff_distance(a: Subset, b: Subset) -> usize {
    (a ^ b).len()
}

/// All k-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Subset::EMPTY);
        return out;
    }
    // Gosper's hack walks colex order; sort afterwards.
    let limit: u128 = 1u128 << n;
    let mut x: u128 = (1u128 << k) - 1;
    while x < limit {
        out.push(Subset(x as u64));
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out.sort_unstable();
    out
}

/// All subsets of `[n]` (n ≤ 24) in lexicographic order.
pub fn all_subsets(n: usize) -> Vec<Subset> {
    assert!(n <= 24, "all_subsets is meant for small ground sets");
    let mut out: Vec<Subset> = (0..1u64 << n).map(Subset).collect();
    out.sort_unstable();
    out
}

/// A duplicate-free collection of subsets of `[n]`, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetFamily {
    n: usize,
    members: Vec<Subset>,
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        Err(Error::GroundSize(n))
    } else {
        Ok(())
    }
}

impl SetFamily {
    /// Builds a family, silently collapsing repeated members.
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, members: I) -> Result<Self> {
        check_n(n)?;
        let ground = Subset::full(n);
        let mut members: Vec<Subset> = members.into_iter().collect();
        for m in &members {
            if !m.is_subset_of(ground) {
                let element = (*m - ground).min_element().unwrap_or(0);
                return Err(Error::ElementOutOfRange { element, n });
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { n, members })
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SetFamily {
            n,
            members: Vec::new(),
        })
    }

    /// For members already known to be sorted, unique and inside `[n]`.
    pub(crate) fn from_sorted_unchecked(n: usize, members: Vec<Subset>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|m| m.is_subset_of(Subset::full(n))));
        SetFamily { n, members }
    }

    pub(crate) fn from_unsorted_unchecked(n: usize, mut members: Vec<Subset>) -> Self {
        members.sort_unstable();
        members.dedup();
        SetFamily { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.members.iter()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// `Some(k)` when the family is nonempty and every member has size k.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.members.first()?.len();
        self.members.iter().all(|m| m.len() == k).then_some(k)
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.n == other.n && self.members.iter().all(|m| other.contains(*m))
    }

    pub fn union_of_members(&self) -> Subset {
        self.members.iter().fold(Subset::EMPTY, |acc, m| acc | *m)
    }

    pub fn union(&self, other: &SetFamily) -> Result<SetFamily> {
        if self.n != other.n {
            return Err(Error::param("families over different ground sets"));
        }
        Ok(SetFamily::from_unsorted_unchecked(
            self.n,
            self.members
                .iter()
                .chain(other.members.iter())
                .copied()
                .collect(),
        ))
    }

    pub fn filter(&self, mut keep: impl FnMut(Subset) -> bool) -> SetFamily {
        SetFamily {
            n: self.n,
            members: self.members.iter().copied().filter(|m| keep(*m)).collect(),
        }
    }

    /// Applies a relabeling `perm` of `[n]` (`perm[e-1]` is the image of e).
    pub fn relabel(&self, perm: &[usize]) -> Result<SetFamily> {
        if perm.len() != self.n {
            return Err(Error::param("permutation length differs from n"));
        }
        let mut seen = Subset::EMPTY;
        for &p in perm {
            if p == 0 || p > self.n || seen.contains(p) {
                return Err(Error::param("not a permutation of [n]"));
            }
            seen = seen.with(p);
        }
        let members = self
            .members
            .iter()
            .map(|m| m.iter().fold(Subset::EMPTY, |acc, e| acc.with(perm[e - 1])))
            .collect();
        Ok(SetFamily::from_unsorted_unchecked(self.n, members))
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(n={}, ", self.n)?;
        f.debug_list().entries(self.members.iter()).finish()?;
        f.write_str(")")
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// A parsed `.fam` file before canonicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDocument {
    pub n: usize,
    /// Members in file order, each with its 1-based line number.
    pub members: Vec<(usize, Subset)>,
}

impl FamilyDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut members = Vec::new();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some(n) = n else {
                let value = line.strip_prefix("n=").ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "expected header `n=<int>`".into(),
                })?;
                let parsed: usize = value.trim().parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("bad ground size `{value}`"),
                })?;
                if parsed == 0 || parsed > MAX_N {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("ground size {parsed} outside 1..=64"),
                    });
                }
                n = Some(parsed);
                continue;
            };
            let member = parse_member(line, n, line_no)?;
            if !seen.insert(member) {
                return Err(Error::DuplicateMember {
                    line: line_no,
                    member: member.to_string(),
                });
            }
            members.push((line_no, member));
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            message: "missing header `n=<int>`".into(),
        })?;
        Ok(FamilyDocument { n, members })
    }

    pub fn to_family(&self) -> SetFamily {
        SetFamily::from_unsorted_unchecked(self.n, self.members.iter().map(|(_, m)| *m).collect())
    }
}

fn parse_member(line: &str, n: usize, line_no: usize) -> Result<Subset> {
    if line == "-" {
        return Ok(Subset::EMPTY);
    }
    let mut bits = Subset::EMPTY;
    let mut last = 0usize;
    for tok in line.split_whitespace() {
        let e: usize = tok.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("bad element `{tok}`"),
        })?;
        if e == 0 || e > n {
            return Err(Error::Parse {
                line: line_no,
                message: format!("element {e} outside [1, {n}]"),
            });
        }
        if e <= last {
            return Err(Error::Parse {
                line: line_no,
                message: "elements must be strictly increasing".into(),
            });
        }
        last = e;
        bits = bits.with(e);
    }
    Ok(bits)
}

/// Parses `.fam` text into a family. Duplicate members are an error.
pub fn parse_family(text: &str) -> Result<SetFamily> {
    FamilyDocument::parse(text).map(|doc| doc.to_family())
}

/// Canonical `.fam` text: header then members in lexicographic order.
pub fn serialize_family(family: &SetFamily) -> String {
    let mut out = format!("n={}\n", family.n);
    for m in family.iter() {
        if m.is_empty() {
            out.push('-');
        } else {
            let mut first = true;
            for e in m.iter() {
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&e.to_string());
            }
        }
        out.push('\n');
    }
    out
}

/// `{[n] \ F : F ∈ family}`.
pub fn complement_family(family: &SetFamily) -> SetFamily {
    let n = family.n;
    SetFamily::from_unsorted_unchecked(n, family.iter().map(|m| m.complement(n)).collect())
}

/// `F(A, B) = {F \ B : F ∈ family, F ∩ B = A}` on the same ground set.
///
/// `F(i)` is `link_trace(F, {i}, {i})`, `F(ī)` is `link_trace(F, ∅, {i})` and
/// `F(i, j̄)` is `link_trace(F, {i}, {i, j})`.
pub fn link_trace(family: &SetFamily, a: Subset, b: Subset) -> Result<SetFamily> {
    if !a.is_subset_of(b) {
        return Err(Error::pre(format!("{a} is not a subset of {b}")));
    }
    let members = family
        .iter()
        .filter(|f| **f & b == a)
        .map(|f| *f - b)
        .collect();
    // F ↦ F \ B is injective on members with a fixed trace on B.
    Ok(SetFamily::from_sorted_or_sort(family.n, members))
}

impl SetFamily {
    fn from_sorted_or_sort(n: usize, members: Vec<Subset>) -> Self {
        if members.windows(2).all(|w| w[0] < w[1]) {
            SetFamily::from_sorted_unchecked(n, members)
        } else {
            SetFamily::from_unsorted_unchecked(n, members)
        }
    }
}

/// Distinct traces `{G ∩ X : G ∈ family}`.
pub fn restrict_family(family: &SetFamily, x: Subset) -> SetFamily {
    SetFamily::from_unsorted_unchecked(family.n, family.iter().map(|g| *g & x).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(n, sets.iter().map(|s| Subset::of(s))).unwrap()
    }

    #[test]
    fn subset_order_is_lexicographic_on_element_lists() {
        let mut v = [Subset::of(&[2]),
            Subset::of(&[1, 3]),
            Subset::of(&[1, 2, 3]),
            Subset::of(&[1, 2]),
            Subset::of(&[1]),
            Subset::EMPTY,
            Subset::of(&[1, 2, 4])];
        v.sort();
        let lists: Vec<Vec<usize>> = v.iter().map(|s| s.to_vec()).collect();
        let mut expected = lists.clone();
        expected.sort();
        assert_eq!(lists, expected);
        assert_eq!(v[0], Subset::EMPTY);
        assert_eq!(v.last(), Some(&Subset::of(&[2])));
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(6, 3).len(), 20);
        assert_eq!(k_subsets(5, 0), vec![Subset::EMPTY]);
        assert!(k_subsets(3, 4).is_empty());
        assert_eq!(k_subsets(64, 1).len(), 64);
        assert_eq!(all_subsets(4).len(), 16);
    }

    #[test]
    fn parse_examples() {
        let f = parse_family("n=3\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!(f, SetFamily::new(3, k_subsets(3, 2)).unwrap());
        let g = parse_family("n=4\n-\n1\n").unwrap();
        assert_eq!(g, fam(4, &[&[], &[1]]));
        let err = parse_family("n=3\n1 2\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::DuplicateMember { line: 3, .. }));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_family("1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_family("# only comments\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_family("n=3\n1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_family("n=3\n# c\n2 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_family("n=3\n1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_family("n=65\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(serialize_family(&fam(2, &[&[]])), "n=2\n-\n");
        let f = SetFamily::new(3, k_subsets(3, 2)).unwrap();
        assert_eq!(serialize_family(&f), "n=3\n1 2\n1 3\n2 3\n");
    }

    #[test]
    fn document_keeps_file_order() {
        let doc = FamilyDocument::parse("# x\nn=3\n2 3\n1\n").unwrap();
        assert_eq!(
            doc.members,
            vec![(3, Subset::of(&[2, 3])), (4, Subset::of(&[1]))]
        );
        assert_eq!(serialize_family(&doc.to_family()), "n=3\n1\n2 3\n");
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_family(&fam(4, &[&[]])), fam(4, &[&[1, 2, 3, 4]]));
        let f = fam(5, &[&[1], &[2, 3], &[1, 4, 5]]);
        assert_eq!(complement_family(&complement_family(&f)), f);
    }

    #[test]
    fn link_trace_cases() {
        let f = fam(4, &[&[1, 2], &[1, 3], &[2, 3], &[4]]);
        assert_eq!(link_trace(&f, Subset::EMPTY, Subset::EMPTY).unwrap(), f);
        let li = link_trace(&f, Subset::of(&[1]), Subset::of(&[1])).unwrap();
        assert_eq!(li, fam(4, &[&[2], &[3]]));
        let lij = link_trace(&f, Subset::of(&[1]), Subset::of(&[1, 2])).unwrap();
        assert_eq!(lij, fam(4, &[&[3]]));
        assert!(link_trace(&f, Subset::of(&[3]), Subset::of(&[1])).is_err());
    }

    #[test]
    fn restrict_examples() {
        let g = fam(4, &[&[1, 2], &[2, 3], &[1, 3], &[1, 2, 3]]);
        assert_eq!(restrict_family(&g, Subset::of(&[4])), fam(4, &[&[]]));
        assert_eq!(restrict_family(&g, Subset::of(&[1, 2, 3])), g);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(
            sym_diff_distance(Subset::of(&[1, 2]), Subset::of(&[2, 3])),
            2
        );
        assert_eq!(sym_diff_distance(Subset::of(&[5]), Subset::of(&[5])), 0);
    }

    #[test]
    fn constructor_validation() {
        assert!(matches!(SetFamily::new(0, []), Err(Error::GroundSize(0))));
        assert!(matches!(
            SetFamily::new(3, [Subset::of(&[4])]),
            Err(Error::ElementOutOfRange { element: 4, n: 3 })
        ));
        let f = SetFamily::new(3, [Subset::of(&[1]), Subset::of(&[1])]).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::interval(2, 4), Subset::of(&[2, 3, 4]));
    }

    #[test]
    fn relabel_applies_permutation() {
        let f = fam(3, &[&[1], &[1, 2]]);
        let g = f.relabel(&[3, 1, 2]).unwrap();
        assert_eq!(g, fam(3, &[&[3], &[1, 3]]));
        assert!(f.relabel(&[1, 1, 2]).is_err());
    }
}
