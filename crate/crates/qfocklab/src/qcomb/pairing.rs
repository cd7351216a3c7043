//! Permutation inversions, pair partitions and their crossing statistics.
//!
//! These are the brute-force counting primitives behind the exact moment and
//! norm formulas: inversion sums over the symmetric group and crossing sums
//! over pair partitions.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::QPoly;
use super::QCombError;

/// Largest word length accepted by the pair-partition enumerator.
///
/// (GUARD - 1)!! = 2_027_025 partitions at n = 16 keeps the brute force
/// comfortably inside desk-scale runtimes.
pub const PAIR_ENUMERATION_GUARD: usize = 16;

/// A bijection of `{0, .., n-1}` stored by its image array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, QCombError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(QCombError::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

/// Number of inverted pairs `i < j` with `p(i) > p(j)`.
pub fn inversions(p: &Permutation) -> usize {
    let imgs = p.images();
    let mut count = 0;
    for i in 0..imgs.len() {
        for j in i + 1..imgs.len() {
            if imgs[i] > imgs[j] {
                count += 1;
            }
        }
    }
    count
}

/// A perfect matching of `{0, .., n-1}` in canonical form: each pair is
/// ordered internally and pairs are sorted by their smaller element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPartition {
    pairs: Vec<(usize, usize)>,
}

impl PairPartition {
    /// Canonicalizes and validates an arbitrary listing of pairs.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self, QCombError> {
        let n = 2 * pairs.len();
        let mut seen = vec![false; n];
        let mut canonical = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            if lo == hi || hi >= n || seen[lo] || seen[hi] {
                return Err(QCombError::NotAPairPartition);
            }
            seen[lo] = true;
            seen[hi] = true;
            canonical.push((lo, hi));
        }
        canonical.sort_unstable();
        Ok(PairPartition { pairs: canonical })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of matched indices, i.e. the underlying set size `n`.
    pub fn ground_size(&self) -> usize {
        2 * self.pairs.len()
    }
}

/// Number of interleaving arc pairs: `#{(r, s) : a_r < a_s < b_r < b_s}`.
pub fn crossings(v: &PairPartition) -> usize {
    let pairs = v.pairs();
    let mut count = 0;
    for r in 0..pairs.len() {
        for s in 0..pairs.len() {
            if r == s {
                continue;
            }
            let (ar, br) = pairs[r];
            let (as_, bs) = pairs[s];
            if ar < as_ && as_ < br && br < bs {
                count += 1;
            }
        }
    }
    count
}

/// Streams all pair partitions of `{0, .., n-1}` in canonical form.
///
/// Yields exactly `(n-1)!! = 1*3*5*...*(n-1)` partitions without duplicates.
/// Rejects odd `n` and sizes beyond [`PAIR_ENUMERATION_GUARD`].
pub fn enumerate_pair_partitions(n: usize) -> Result<PairPartitionIter, QCombError> {
    if n % 2 != 0 {
        return Err(QCombError::OddGroundSet { n });
    }
    if n > PAIR_ENUMERATION_GUARD {
        return Err(QCombError::GroundSetTooLarge {
            n,
            guard: PAIR_ENUMERATION_GUARD,
        });
    }
    Ok(PairPartitionIter::new(n))
}

/// Backtracking iterator pairing the smallest free index with every larger
/// free index in turn; the choice stack replays in lexicographic order.
pub struct PairPartitionIter {
    n: usize,
    free: Vec<bool>,
    // Stack of chosen pairs (lo, hi); on backtrack, hi advances.
    stack: Vec<(usize, usize)>,
    done: bool,
    fresh: bool,
}

impl PairPartitionIter {
    fn new(n: usize) -> Self {
        PairPartitionIter {
            n,
            free: vec![true; n],
            stack: Vec::with_capacity(n / 2),
            done: n == 0,
            fresh: true,
        }
    }

    fn smallest_free(&self) -> Option<usize> {
        self.free.iter().position(|&f| f)
    }

    /// Extends the current partial matching to a full one, always taking the
    /// smallest available partner.
    fn descend(&mut self) -> bool {
        while self.stack.len() < self.n / 2 {
            let lo = match self.smallest_free() {
                Some(i) => i,
                None => return false,
            };
            let hi = match (lo + 1..self.n).find(|&j| self.free[j]) {
                Some(j) => j,
                None => return false,
            };
            self.free[lo] = false;
            self.free[hi] = false;
            self.stack.push((lo, hi));
        }
        true
    }

    /// Pops pairs until one of them can advance its `hi` choice, then takes
    /// the advanced choice. Returns false when the whole tree is exhausted.
    fn advance(&mut self) -> bool {
        while let Some((lo, hi)) = self.stack.pop() {
            self.free[lo] = true;
            self.free[hi] = true;
            if let Some(next_hi) = (hi + 1..self.n).find(|&j| j != lo && self.free[j]) {
                self.free[lo] = false;
                self.free[next_hi] = false;
                self.stack.push((lo, next_hi));
                return true;
            }
        }
        false
    }
}

impl Iterator for PairPartitionIter {
    type Item = PairPartition;

    fn next(&mut self) -> Option<PairPartition> {
        if self.done {
            // n == 0 yields the single empty partition once.
            if self.fresh && self.n == 0 {
                self.fresh = false;
                return Some(PairPartition { pairs: Vec::new() });
            }
            return None;
        }
        if self.fresh {
            self.fresh = false;
            if !self.descend() {
                self.done = true;
                return None;
            }
        } else if !(self.advance() && self.descend()) {
            self.done = true;
            return None;
        }
        // Pairs were pushed with increasing `lo`, so the stack is canonical.
        Some(PairPartition {
            pairs: self.stack.clone(),
        })
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn q_integer(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigRational::from_integer(BigInt::from(1)); n])
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: usize) -> QPoly {
    let mut acc = QPoly::one();
    for j in 1..=n {
        acc = &acc * &q_integer(j);
    }
    acc
}

/// Crossing generating polynomial of the even moment of a unit field
/// operator: the sum of `q^{crossings}` over all pair partitions of
/// `{0, .., n-1}`. Odd arguments are rejected; callers model odd moments as
/// zero.
pub fn moment_polynomial(n: usize) -> Result<QPoly, QCombError> {
    let mut counts: Vec<u64> = Vec::new();
    for v in enumerate_pair_partitions(n)? {
        let c = crossings(&v);
        if c >= counts.len() {
            counts.resize(c + 1, 0);
        }
        counts[c] += 1;
    }
    Ok(QPoly::from_coeffs(
        counts
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_factorial(n: usize) -> usize {
        if n <= 1 {
            1
        } else {
            n * double_factorial(n - 2)
        }
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversions(&Permutation::identity(3)), 0);
        assert_eq!(inversions(&Permutation::new(vec![2, 1, 0]).unwrap()), 3);
        assert_eq!(inversions(&Permutation::new(vec![1, 0, 2]).unwrap()), 1);
    }

    #[test]
    fn permutation_rejects_repeats() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
    }

    #[test]
    fn enumeration_counts_match_double_factorial() {
        for n in [0usize, 2, 4, 6, 8] {
            let count = enumerate_pair_partitions(n).unwrap().count();
            assert_eq!(count, double_factorial(n.saturating_sub(1)), "n = {n}");
        }
    }

    #[test]
    fn enumeration_n4_lists_all_three() {
        let got: Vec<_> = enumerate_pair_partitions(4).unwrap().collect();
        let expect = [
            vec![(0, 1), (2, 3)],
            vec![(0, 2), (1, 3)],
            vec![(0, 3), (1, 2)],
        ];
        assert_eq!(got.len(), 3);
        for pairs in expect {
            assert!(got.iter().any(|p| p.pairs() == pairs));
        }
    }

    #[test]
    fn enumeration_yields_no_duplicates() {
        let mut seen = std::collections::HashSet::new();
        for p in enumerate_pair_partitions(8).unwrap() {
            assert!(seen.insert(p.pairs().to_vec()));
        }
        assert_eq!(seen.len(), 105);
    }

    #[test]
    fn enumeration_rejects_bad_sizes() {
        assert!(matches!(
            enumerate_pair_partitions(3),
            Err(QCombError::OddGroundSet { n: 3 })
        ));
        assert!(matches!(
            enumerate_pair_partitions(18),
            Err(QCombError::GroundSetTooLarge { .. })
        ));
    }

    #[test]
    fn crossing_counts() {
        let disjoint = PairPartition::new(vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(crossings(&disjoint), 0);
        let interleaved = PairPartition::new(vec![(0, 2), (1, 3)]).unwrap();
        assert_eq!(crossings(&interleaved), 1);
        let all_crossing = PairPartition::new(vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(crossings(&all_crossing), 3);
    }

    #[test]
    fn crossings_survive_canonicalization() {
        // Same matching entered scrambled: endpoints swapped, pairs shuffled.
        let scrambled = PairPartition::new(vec![(4, 1), (3, 0), (5, 2)]).unwrap();
        let canonical = PairPartition::new(vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(scrambled, canonical);
        assert_eq!(crossings(&scrambled), crossings(&canonical));
    }

    #[test]
    fn q_factorial_small_cases() {
        assert_eq!(q_factorial(0), QPoly::one());
        assert_eq!(q_factorial(2), QPoly::from_integer_coeffs(&[1, 1]));
        // (1 + q)(1 + q + q^2) expanded by hand.
        assert_eq!(q_factorial(3), QPoly::from_integer_coeffs(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_factorial_at_one_is_factorial() {
        let mut fact = 1.0;
        for n in 1..=8usize {
            fact *= n as f64;
            assert_eq!(q_factorial(n).eval(1.0), fact);
        }
    }

    #[test]
    fn moment_polynomials_brute_forced() {
        assert_eq!(moment_polynomial(2).unwrap(), QPoly::one());
        assert_eq!(
            moment_polynomial(4).unwrap(),
            QPoly::from_integer_coeffs(&[2, 1])
        );
        assert_eq!(
            moment_polynomial(6).unwrap(),
            QPoly::from_integer_coeffs(&[5, 6, 3, 1])
        );
    }

    #[test]
    fn moment_polynomial_specializations() {
        // q = 1 counts all pairings, q = 0 counts the non-crossing ones.
        let catalan = [1.0, 1.0, 2.0, 5.0, 14.0];
        for half in 1..=4usize {
            let n = 2 * half;
            let p = moment_polynomial(n).unwrap();
            assert_eq!(p.eval(1.0), double_factorial(n - 1) as f64);
            assert_eq!(p.eval(0.0), catalan[half]);
        }
    }
}
