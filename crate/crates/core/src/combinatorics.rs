//! Tuple lengths, subset and permutation enumeration, and the split tuples
//! `I∖Λ | Λ` that index every signed sum.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("{sub:?} is not a subset of {set:?}")]
    NotASubset { sub: Vec<usize>, set: Vec<usize> },
    #[error("cannot choose {r} elements from a set of size {size}")]
    BadSize { r: usize, size: usize },
}

/// Ordered tuple of positive indices; repeats allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexTuple(pub Vec<usize>);

impl IndexTuple {
    pub fn new(entries: impl Into<Vec<usize>>) -> Self {
        IndexTuple(entries.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `self | other`.
    pub fn concat(&self, other: &IndexTuple) -> IndexTuple {
        IndexTuple(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn has_repeats(&self) -> bool {
        !self.0.iter().all_unique()
    }

    pub fn sorted(&self) -> IndexTuple {
        IndexTuple(self.0.iter().copied().sorted().collect())
    }

    /// Tuple with the given value removed (first occurrence).
    pub fn without(&self, value: usize) -> IndexTuple {
        let mut v = self.0.clone();
        if let Some(pos) = v.iter().position(|&x| x == value) {
            v.remove(pos);
        }
        IndexTuple(v)
    }

    /// Inversion count, see [`tuple_length`].
    pub fn length(&self) -> usize {
        tuple_length(&self.0)
    }
}

impl From<Vec<usize>> for IndexTuple {
    fn from(v: Vec<usize>) -> Self {
        IndexTuple(v)
    }
}

impl From<&[usize]> for IndexTuple {
    fn from(v: &[usize]) -> Self {
        IndexTuple(v.to_vec())
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Debug for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A permutation of `1..=m` in one-line notation together with its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    pub image: Vec<usize>,
    pub length: usize,
}

/// Number of pairs `a < b` (positions) with `t[a] > t[b]`.
///
/// Equal entries contribute nothing, which is how repeated indices are
/// handled; every term carrying a repeat is killed by the alternating
/// relations anyway.
pub fn tuple_length(t: &[usize]) -> usize {
    t.iter()
        .enumerate()
        .map(|(a, x)| t[a + 1..].iter().filter(|y| x > y).count())
        .sum()
}

/// Returns `I∖Λ | Λ` (both parts ascending) and its length.
pub fn split_tuple(set: &[usize], lambda: &[usize]) -> Result<(IndexTuple, usize), CombinatoricsError> {
    if !lambda.iter().all(|x| set.contains(x)) {
        return Err(CombinatoricsError::NotASubset { sub: lambda.to_vec(), set: set.to_vec() });
    }
    let rest = set.iter().copied().filter(|x| !lambda.contains(x)).sorted();
    let tuple: Vec<usize> = rest.chain(lambda.iter().copied().sorted()).collect();
    let len = tuple_length(&tuple);
    Ok((IndexTuple(tuple), len))
}

/// All `r`-subsets of `set`, each ascending, in lexicographic order.
pub fn subsets(set: &[usize], r: usize) -> Result<Vec<Vec<usize>>, CombinatoricsError> {
    if r > set.len() {
        return Err(CombinatoricsError::BadSize { r, size: set.len() });
    }
    let sorted: Vec<usize> = set.iter().copied().sorted().dedup().collect();
    Ok(sorted.into_iter().combinations(r).collect())
}

/// All permutations of `1..=m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Permutation> {
    (1..=m)
        .permutations(m)
        .map(|image| {
            let length = tuple_length(&image);
            Permutation { image, length }
        })
        .collect()
}

/// `{1, …, n}`.
pub fn range_set(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// Binomial coefficient, exact for the small arguments used here.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lengths() {
        assert_eq!(tuple_length(&[1, 2, 3]), 0);
        assert_eq!(tuple_length(&[2, 1]), 1);
        assert_eq!(tuple_length(&[3, 1, 2]), 2);
        assert_eq!(tuple_length(&[2, 2, 1]), 2);
    }

    #[test]
    fn split_tuples() {
        assert_eq!(split_tuple(&[1, 2, 3], &[3]).unwrap(), (IndexTuple::new(vec![1, 2, 3]), 0));
        assert_eq!(split_tuple(&[1, 2, 3], &[2]).unwrap(), (IndexTuple::new(vec![1, 3, 2]), 1));
        assert_eq!(split_tuple(&[1, 2, 3], &[1]).unwrap(), (IndexTuple::new(vec![2, 3, 1]), 2));
        assert!(matches!(split_tuple(&[1, 2, 3], &[4]), Err(CombinatoricsError::NotASubset { .. })));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(&[1, 2, 3], 2).unwrap(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(&[1, 2, 3, 4], 0).unwrap(), vec![Vec::<usize>::new()]);
        let s = subsets(&[1, 2, 3, 4], 2).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s.first().unwrap(), &vec![1, 2]);
        assert_eq!(s.last().unwrap(), &vec![3, 4]);
        assert_eq!(subsets(&[1, 2], 3), Err(CombinatoricsError::BadSize { r: 3, size: 2 }));
    }

    #[test]
    fn permutation_lengths() {
        assert_eq!(permutations(1), vec![Permutation { image: vec![1], length: 0 }]);
        let p2 = permutations(2);
        assert_eq!(p2[0], Permutation { image: vec![1, 2], length: 0 });
        assert_eq!(p2[1], Permutation { image: vec![2, 1], length: 1 });
        let mut lens: Vec<usize> = permutations(3).iter().map(|p| p.length).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3]);
    }

    fn bubble_sort_swaps(t: &[usize]) -> usize {
        let mut v = t.to_vec();
        let mut swaps = 0;
        for i in 0..v.len() {
            for j in 0..v.len().saturating_sub(i + 1) {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        swaps
    }

    /// ℓ(I∖Λ|Λ) = ℓ(I∖Λ|Λ_(s)) + ℓ(I_(s)|i_s) − ℓ(Λ_(s)|i_s) for every
    /// i_s ∈ Λ, exhaustively for |I| ≤ 6.
    #[test]
    fn split_length_decomposition() {
        for size in 1..=6 {
            let set = range_set(size);
            for r in 1..=size {
                for lambda in subsets(&set, r).unwrap() {
                    let (_, full) = split_tuple(&set, &lambda).unwrap();
                    for &x in &lambda {
                        let rest: Vec<usize> = set.iter().copied().filter(|y| !lambda.contains(y)).collect();
                        let lambda_s: Vec<usize> = lambda.iter().copied().filter(|&y| y != x).collect();
                        let a = tuple_length(&[rest.clone(), lambda_s.clone()].concat());
                        let set_s: Vec<usize> = set.iter().copied().filter(|&y| y != x).collect();
                        let b = tuple_length(&[set_s, vec![x]].concat());
                        let c = tuple_length(&[lambda_s, vec![x]].concat());
                        assert_eq!(full + c, a + b, "I={set:?} Λ={lambda:?} i_s={x}");
                    }
                }
            }
        }
    }

    #[test]
    fn subset_counts_match_binomials() {
        for n in 0..=7 {
            let set = range_set(n);
            for r in 0..=n {
                let s = subsets(&set, r).unwrap();
                assert_eq!(s.len(), binomial(n, r));
                assert!(s.iter().all_unique());
            }
        }
    }

    proptest! {
        #[test]
        fn length_matches_bubble_sort(v in proptest::sample::subsequence((1..=12usize).collect::<Vec<_>>(), 0..=12)
            .prop_shuffle()) {
            prop_assert_eq!(tuple_length(&v), bubble_sort_swaps(&v));
        }
    }
}
