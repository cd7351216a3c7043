//! Level Gram forms of the deformed inner product.
//!
//! With an orthonormal letter basis the level-n Gram matrix is the matrix of
//! the q-symmetrizer `P_n = sum_{pi in S_n} q^{inversions(pi)} U_pi`, where
//! `U_pi` permutes tensor slots. Assembly and application both use the
//! product recursion
//!
//! ```text
//! P_n = (I (x) P_{n-1}) R_n,   R_n = sum_{k=0}^{n-1} q^k C_k,
//! ```
//!
//! where `C_k` moves the letter in slot k to the front. This costs
//! `O(n d^n)` per level for vector application instead of the factorial
//! blow-up of the defining sum; the defining sum is kept below as the
//! brute-force oracle the recursion is tested against.
//!
//! Words of length n over `d` letters are indexed in base `d` with the
//! first letter as the most significant digit.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::qcomb::{inversions, Permutation};

/// Scalars the symmetrizer recursion can act on.
pub trait SymmetrizerScalar:
    Copy + std::ops::AddAssign + std::ops::Mul<f64, Output = Self>
{
    fn zero() -> Self;
}

impl SymmetrizerScalar for f64 {
    fn zero() -> Self {
        0.0
    }
}

impl SymmetrizerScalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
}

/// In-place `v <- P_n v` over an alphabet of `d` letters, `v.len() == d^n`.
pub fn apply_symmetrizer<T: SymmetrizerScalar>(d: usize, level: usize, q: f64, v: &mut [T]) {
    if level <= 1 || d == 0 {
        return;
    }
    debug_assert_eq!(v.len(), d.pow(level as u32));
    // u = R_n v, accumulated cycle by cycle; k = 0 is the identity term.
    let mut u = v.to_vec();
    let mut qk = 1.0;
    let mut prefix_range = d; // d^k, starting at k = 1
    let mut suffix_len = v.len() / (d * d); // d^{n-k-1}, starting at k = 1
    for _k in 1..level {
        qk *= q;
        for p in 0..prefix_range * d {
            // Word = (prefix p, suffix s); move the last letter of the
            // prefix to the front: p -> (p mod d) * d^k + p div d.
            let tp = (p % d) * prefix_range + p / d;
            let src = p * suffix_len;
            let dst = tp * suffix_len;
            for s in 0..suffix_len {
                let add = v[src + s] * qk;
                u[dst + s] += add;
            }
        }
        prefix_range *= d;
        suffix_len /= d;
    }
    // (I (x) P_{n-1}) u: the first letter is untouched.
    let chunk = v.len() / d;
    for block in u.chunks_mut(chunk) {
        apply_symmetrizer(d, level - 1, q, block);
    }
    v.copy_from_slice(&u);
}

/// Dense level Gram matrix built by the same recursion, one column at a
/// time, from the previous level. `prev` must be the level `n-1` Gram when
/// `level >= 2`. The result is symmetrized in place to remove rounding skew.
pub fn gram_matrix(d: usize, level: usize, q: f64, prev: Option<&DMatrix<f64>>) -> DMatrix<f64> {
    match level {
        0 => return DMatrix::from_element(1, 1, 1.0),
        1 => return DMatrix::identity(d, d),
        _ => {}
    }
    let prev = prev.expect("level >= 2 needs the previous Gram");
    let dim_prev = prev.nrows();
    let dim = d * dim_prev;
    let mut g = DMatrix::zeros(dim, dim);
    for c in 0..dim {
        // R e_c = sum_k q^k e_{C_k(c)}; each target picks out a column of
        // the previous Gram embedded in the block of its leading letter.
        let mut qk = 1.0;
        let mut prefix_range = 1; // d^k
        let mut suffix_len = dim / d; // d^{n-1-k}
        for _k in 0..level {
            let target = {
                let p = c / suffix_len;
                let tp = (p % d) * prefix_range + p / d;
                tp * suffix_len + c % suffix_len
            };
            let block = target / dim_prev;
            let row_offset = block * dim_prev;
            let col = target % dim_prev;
            let mut out_col = g.column_mut(c);
            for r in 0..dim_prev {
                out_col[row_offset + r] += qk * prev[(r, col)];
            }
            qk *= q;
            prefix_range *= d;
            suffix_len /= d;
        }
    }
    for i in 0..dim {
        for j in 0..i {
            let avg = 0.5 * (g[(i, j)] + g[(j, i)]);
            g[(i, j)] = avg;
            g[(j, i)] = avg;
        }
    }
    g
}

/// Literal evaluation of the defining sum: over every permutation matching
/// the two words letterwise, add `q^inversions`. Exponential in the word
/// length; this is the oracle, not the production path.
pub fn gram_entry_bruteforce(w1: &[usize], w2: &[usize], q: f64) -> f64 {
    assert_eq!(w1.len(), w2.len());
    let n = w1.len();
    let mut images: Vec<usize> = (0..n).collect();
    let mut total = 0.0;
    permute(&mut images, 0, &mut |perm| {
        if (0..n).all(|k| w1[k] == w2[perm[k]]) {
            let p = Permutation::new(perm.to_vec()).expect("generated permutation");
            total += q.powi(inversions(&p) as i32);
        }
    });
    total
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Digits of a word index, most significant (first letter) first.
pub fn word_letters(d: usize, level: usize, index: usize) -> Vec<usize> {
    let mut letters = vec![0; level];
    let mut rest = index;
    for slot in (0..level).rev() {
        letters[slot] = rest % d;
        rest /= d;
    }
    letters
}

/// Index of a word given its letters.
pub fn word_index(d: usize, letters: &[usize]) -> usize {
    letters.iter().fold(0, |acc, &l| acc * d + l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcomb::q_factorial;
    use approx::assert_abs_diff_eq;

    fn gram_chain(d: usize, level: usize, q: f64) -> DMatrix<f64> {
        let mut g = gram_matrix(d, 0, q, None);
        for n in 1..=level {
            g = gram_matrix(d, n, q, Some(&g));
        }
        g
    }

    #[test]
    fn word_indexing_round_trip() {
        for idx in 0..27 {
            assert_eq!(word_index(3, &word_letters(3, 3, idx)), idx);
        }
        assert_eq!(word_letters(2, 3, 0b110), vec![1, 1, 0]);
    }

    #[test]
    fn recursion_matches_bruteforce() {
        for d in 1..=3usize {
            for level in 0..=4usize {
                if d.pow(level as u32) > 81 {
                    continue;
                }
                for q in [-0.9, -0.5, 0.0, 0.5, 0.9] {
                    let g = gram_chain(d, level, q);
                    let dim = d.pow(level as u32);
                    for i in 0..dim {
                        for j in 0..dim {
                            let w1 = word_letters(d, level, i);
                            let w2 = word_letters(d, level, j);
                            let expect = gram_entry_bruteforce(&w1, &w2, q);
                            assert_abs_diff_eq!(g[(i, j)], expect, epsilon = 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn application_matches_matrix_product() {
        let d = 2;
        let level = 4;
        let q = -0.7;
        let g = gram_chain(d, level, q);
        let dim = d.pow(level as u32);
        let v: Vec<f64> = (0..dim).map(|i| (i as f64 * 0.37).sin()).collect();
        let mut w = v.clone();
        apply_symmetrizer(d, level, q, &mut w);
        let expect = &g * DMatrix::from_column_slice(dim, 1, &v);
        for i in 0..dim {
            assert_abs_diff_eq!(w[i], expect[(i, 0)], epsilon = 1e-12);
        }
    }

    #[test]
    fn repeated_letter_diagonal_is_q_factorial() {
        for q in [-0.5, 0.3, 0.8] {
            for n in 0..=6usize {
                let g = gram_chain(1, n, q);
                assert_abs_diff_eq!(g[(0, 0)], q_factorial(n).eval(q), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn free_case_gram_is_identity() {
        let g = gram_chain(2, 3, 0.0);
        assert_abs_diff_eq!((g - DMatrix::identity(8, 8)).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn distinct_letter_pair_block() {
        // Words {ef, fe} carry the Gram block [[1, q], [q, 1]].
        let q = 0.37;
        let g = gram_chain(2, 2, q);
        let ef = word_index(2, &[0, 1]);
        let fe = word_index(2, &[1, 0]);
        assert_abs_diff_eq!(g[(ef, ef)], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(g[(ef, fe)], q, epsilon = 1e-14);
        assert_abs_diff_eq!(g[(fe, ef)], q, epsilon = 1e-14);
        // Words with different letter multisets are orthogonal.
        let ee = word_index(2, &[0, 0]);
        assert_abs_diff_eq!(g[(ee, ef)], 0.0, epsilon = 1e-14);
    }
}
