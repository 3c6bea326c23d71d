//! Integer partitions and Ferrers-diagram combinatorics.
//!
//! Partitions are stored in row convention: `parts[i]` is the length of the
//! i-th row of the Ferrers diagram. Hook lengths are computed as
//! `arm + leg + 1`, so the hook multiset is the same one obtained from the
//! column convention.

use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds a partition from `(size, multiplicity)` pairs.
    pub fn from_frequencies<I: IntoIterator<Item = (usize, usize)>>(freqs: I) -> Self {
        let mut parts = Vec::new();
        for (size, count) in freqs {
            parts.extend(std::iter::repeat_n(size, count));
        }
        Partition::from_unsorted(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Frequency view: part size -> number of parts of that size.
    pub fn frequencies(&self) -> BTreeMap<usize, usize> {
        let mut freq = BTreeMap::new();
        for &p in &self.parts {
            *freq.entry(p).or_insert(0) += 1;
        }
        freq
    }

    /// Number of parts equal to `size`.
    pub fn multiplicity(&self, size: usize) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    /// Number of distinct part sizes, written ℓ₀(λ) in the literature.
    pub fn distinct_size_count(&self) -> usize {
        distinct_sizes(&self.parts)
    }

    pub fn conjugate(&self) -> Partition {
        Partition { parts: conjugate_parts(&self.parts) }
    }

    pub fn is_self_conjugate(&self) -> bool {
        conjugate_parts(&self.parts) == self.parts
    }

    pub fn hook_census(&self) -> HookCensus {
        HookCensus::of(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn distinct_sizes(parts: &[usize]) -> usize {
    // parts are sorted, so distinct values are run starts
    parts.iter().enumerate().filter(|&(i, &p)| i == 0 || parts[i - 1] != p).count()
}

/// `λ'_i = #{j : λ_j ≥ i}`.
pub fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let Some(&largest) = parts.first() else {
        return Vec::new();
    };
    (1..=largest).map(|i| parts.iter().take_while(|&&p| p >= i).count()).collect()
}

/// Hook lengths of a Ferrers diagram together with the orientation split of
/// the size-2 hooks.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HookCensus {
    /// hook length -> number of cells with that hook length
    pub multiset: BTreeMap<usize, usize>,
    /// size-2 hooks whose arm is 1 (horizontal domino at a row end)
    pub a1: usize,
    /// size-2 hooks whose leg is 1 (vertical domino below a corner)
    pub a2: usize,
}

impl HookCensus {
    fn of(parts: &[usize]) -> Self {
        let conj = conjugate_parts(parts);
        let mut census = HookCensus::default();
        for (i, &row) in parts.iter().enumerate() {
            for (j, &col) in conj.iter().enumerate().take(row) {
                let arm = row - j - 1;
                let leg = col - i - 1;
                let hook = arm + leg + 1;
                *census.multiset.entry(hook).or_insert(0) += 1;
                if hook == 2 {
                    if arm == 1 {
                        census.a1 += 1;
                    } else {
                        census.a2 += 1;
                    }
                }
            }
        }
        census
    }

    pub fn cell_count(&self) -> usize {
        self.multiset.values().sum()
    }

    pub fn count(&self, hook: usize) -> usize {
        self.multiset.get(&hook).copied().unwrap_or(0)
    }

    /// Hook lengths in descending order, with repetition.
    pub fn sorted_hooks(&self) -> Vec<usize> {
        let mut hooks: Vec<usize> = self
            .multiset
            .iter()
            .flat_map(|(&h, &c)| std::iter::repeat_n(h, c))
            .collect();
        hooks.reverse();
        hooks
    }
}

/// Iterator over the partitions of `n` in reverse lexicographic order:
/// `(n), (n-1,1), (n-2,2), (n-2,1,1), ...`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let start = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { current: Some(start) }
    }
}

/// Advances `parts` to its successor in reverse lexicographic order.
/// Returns false when `parts` was the last partition, i.e. all ones.
fn advance(parts: &mut Vec<usize>) -> bool {
    let mut freed = 0;
    while parts.last() == Some(&1) {
        parts.pop();
        freed += 1;
    }
    let Some(last) = parts.pop() else {
        return false;
    };
    let v = last - 1;
    let mut rem = freed + 1;
    parts.push(v);
    while rem >= v {
        parts.push(v);
        rem -= v;
    }
    if rem > 0 {
        parts.push(rem);
    }
    true
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let mut parts = self.current.take()?;
        let out = Partition { parts: parts.clone() };
        if advance(&mut parts) {
            self.current = Some(parts);
        }
        Some(out)
    }
}

/// All partitions of `n`, reverse lexicographic. `n = 0` yields the empty
/// partition only.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

/// Calls `f` on every partition of `n` (reverse lexicographic) without
/// allocating a `Partition` per visit.
pub fn for_each_partition<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut parts = if n == 0 { Vec::new() } else { vec![n] };
    loop {
        f(&parts);
        if !advance(&mut parts) {
            break;
        }
    }
}

/// Largest `t` with `t(t+1)/2 <= n`: the maximum number of distinct part
/// sizes in a partition of `n`.
pub fn max_distinct_sizes(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "max_distinct_sizes" });
    }
    let mut t = 0;
    while (t + 1) * (t + 2) / 2 <= n {
        t += 1;
    }
    Ok(t)
}

/// Self-conjugate partitions of `m` with exactly two part sizes.
///
/// Such a diagram is an `a × a` square with a `b`-thick strip glued to its
/// top and to its right, i.e. the partition `(a+b)^a a^b` with `m = a(a+2b)`.
pub fn self_conjugate_two_size_shapes(m: usize) -> Vec<Partition> {
    let mut shapes = Vec::new();
    let mut a = 1;
    while a * a < m {
        if m.is_multiple_of(a) {
            let rest = m / a;
            if rest > a && (rest - a).is_multiple_of(2) {
                let b = (rest - a) / 2;
                shapes.push(Partition::from_frequencies([(a + b, a), (a, b)]));
            }
        }
        a += 1;
    }
    shapes
}

/// Count of self-conjugate partitions of `m` with exactly two part sizes,
/// from the `(a, b)` parametrisation.
pub fn self_conjugate_two_size_count(m: usize) -> usize {
    self_conjugate_two_size_shapes(m).len()
}

/// The same count by filtering every partition of `m`.
pub fn self_conjugate_two_size_count_brute(m: usize) -> usize {
    let mut count = 0;
    for_each_partition(m, |parts| {
        if distinct_sizes(parts) == 2 && conjugate_parts(parts) == parts {
            count += 1;
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let five: Vec<String> = enumerate_partitions(5).iter().map(|x| x.to_string()).collect();
        assert_eq!(
            five,
            ["(5)", "(4,1)", "(3,2)", "(3,1,1)", "(2,2,1)", "(2,1,1,1)", "(1,1,1,1,1)"]
        );
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 4, 2, 1, 1]).conjugate(), p(&[5, 3, 2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn hook_examples() {
        let c = p(&[4, 4, 2, 1, 1]).hook_census();
        assert_eq!(c.sorted_hooks(), vec![8, 7, 5, 4, 4, 3, 2, 2, 2, 1, 1, 1]);

        let c = p(&[2, 2]).hook_census();
        assert_eq!(c.sorted_hooks(), vec![3, 2, 2, 1]);
        assert_eq!((c.a1, c.a2), (1, 1));

        let c = p(&[3, 1]).hook_census();
        assert_eq!(c.sorted_hooks(), vec![4, 2, 1, 1]);
        assert_eq!((c.a1, c.a2), (1, 0));
        let c = p(&[2, 1, 1]).hook_census();
        assert_eq!((c.a1, c.a2), (0, 1));

        assert_eq!(Partition::empty().hook_census(), HookCensus::default());
    }

    #[test]
    fn distinct_sizes_examples() {
        assert_eq!(p(&[2, 1]).distinct_size_count(), 2);
        assert_eq!(p(&[1, 1, 1]).distinct_size_count(), 1);
        assert_eq!(Partition::empty().distinct_size_count(), 0);
        let two = enumerate_partitions(6).iter().filter(|x| x.distinct_size_count() == 2).count();
        assert_eq!(two, 6);
    }

    #[test]
    fn max_distinct_examples() {
        assert_eq!(max_distinct_sizes(3), Ok(2));
        assert_eq!(max_distinct_sizes(5), Ok(2));
        assert_eq!(max_distinct_sizes(6), Ok(3));
        assert_eq!(max_distinct_sizes(1), Ok(1));
        assert!(max_distinct_sizes(0).is_err());
    }

    #[test]
    fn self_conjugate_examples() {
        assert_eq!(self_conjugate_two_size_count(6), 0);
        assert_eq!(self_conjugate_two_size_shapes(8), vec![p(&[3, 3, 2])]);
        assert_eq!(self_conjugate_two_size_count_brute(8), 1);
        assert_eq!(self_conjugate_two_size_count(1), 0);
    }

    #[test]
    fn visitor_matches_iterator() {
        let mut seen = Vec::new();
        for_each_partition(9, |parts| seen.push(Partition::new(parts.to_vec()).unwrap()));
        assert_eq!(seen, enumerate_partitions(9));
    }

    #[test]
    fn frequency_view_round_trip() {
        for lambda in enumerate_partitions(10) {
            let back = Partition::from_frequencies(lambda.frequencies());
            assert_eq!(back, lambda);
        }
    }
}
