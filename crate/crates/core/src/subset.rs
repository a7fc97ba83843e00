//! Strictly increasing index tuples `I = (i₁ < ⋯ < i_k)` labelling Plücker coordinates.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

/// A strictly increasing tuple of indices in `0..=n`.
///
/// Ordering is lexicographic on the tuple, which is the canonical label order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Subset(Vec<usize>);

impl Subset {
    /// Validates strict monotonicity; `None` otherwise.
    pub fn new(indices: Vec<usize>) -> Option<Self> {
        indices
            .windows(2)
            .all(|w| w[0] < w[1])
            .then_some(Self(indices))
    }

    /// Sorts the indices; `None` if an index repeats.
    pub fn from_unsorted(mut indices: Vec<usize>) -> Option<Self> {
        indices.sort_unstable();
        Self::new(indices)
    }

    /// `{0, …, k−1}`, the minimum of the componentwise order.
    pub fn initial(k: usize) -> Self {
        Self((0..k).collect())
    }

    /// All `k`-subsets of `{0, …, n}` in lexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<Subset> {
        (0..=n).combinations(k).map(Subset).collect()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// `{0, …, n} ∖ I`.
    pub fn complement(&self, n: usize) -> Subset {
        Subset((0..=n).filter(|&i| !self.contains(i)).collect())
    }

    /// Componentwise order of sorted tuples of equal length.
    pub fn le_componentwise(&self, other: &Subset) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Image under a permutation given in one-line notation (`perm[i] = σ(i)`).
    pub fn permuted(&self, perm: &[usize]) -> Subset {
        Subset::from_unsorted(self.0.iter().map(|&i| perm[i]).collect())
            .expect("a permutation maps distinct indices to distinct indices")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|&i| i < 10) { "" } else { "," };
        write!(f, "{}", self.0.iter().join(sep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let all = Subset::all(3, 2);
        let shown: Vec<String> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["01", "02", "03", "12", "13", "23"]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn validation_and_complement() {
        assert!(Subset::new(vec![0, 2, 2]).is_none());
        assert!(Subset::new(vec![2, 1]).is_none());
        let s = Subset::new(vec![1, 3]).unwrap();
        assert_eq!(s.complement(4), Subset::new(vec![0, 2, 4]).unwrap());
        assert_eq!(s.complement(4).complement(4), s);
        assert_eq!(Subset::new(vec![3, 11]).unwrap().to_string(), "3,11");
    }

    #[test]
    fn componentwise_order_is_a_partial_order() {
        let all = Subset::all(4, 2);
        let min = Subset::initial(2);
        for a in &all {
            assert!(min.le_componentwise(a));
            assert!(a.le_componentwise(a));
            for b in &all {
                if a.le_componentwise(b) && b.le_componentwise(a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if a.le_componentwise(b) && b.le_componentwise(c) {
                        assert!(a.le_componentwise(c));
                    }
                }
            }
        }
        // 03 and 12 are incomparable
        let x = Subset::new(vec![0, 3]).unwrap();
        let y = Subset::new(vec![1, 2]).unwrap();
        assert!(!x.le_componentwise(&y) && !y.le_componentwise(&x));
    }
}
