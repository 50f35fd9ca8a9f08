//! Division-free determinant and Pfaffian over any [`Ring`].
//!
//! Both use subset dynamic programming over column (or index) sets, so they
//! never divide — required when entries are truncated series, whose ring has
//! non-unit elements. Orders stay small (≤ 8 for determinants, ≤ 12 for
//! Pfaffians), so the `O(2^n·n)` cost is immaterial.

use std::collections::HashMap;

use thiserror::Error;

use super::Ring;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("pfaffian requires even order, got {0}")]
    OddOrder(usize),
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
}

/// Exact determinant of a square matrix (rows of equal length).
///
/// Expands by dynamic programming over column subsets: `d[S]` is the minor on
/// the first `|S|` rows and columns `S`, built up by Laplace expansion along
/// the last row of each minor.
pub fn det<T: Ring>(m: &[Vec<T>]) -> T {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    if n == 0 {
        panic!("determinant of empty matrix is undefined here");
    }
    assert!(n <= 20, "determinant order {n} too large");
    let zero = m[0][0].ring_zero();
    let one = m[0][0].ring_one();

    // d[S] for all subsets of a given popcount, iterated by size.
    let mut prev: HashMap<u32, T> = HashMap::new();
    prev.insert(0, one);
    for size in 1..=n {
        let mut cur: HashMap<u32, T> = HashMap::new();
        for (&s, dsub) in &prev {
            // Extend S by one column j ∉ S; the new row index is size-1.
            for j in 0..n {
                let bit = 1u32 << j;
                if s & bit != 0 {
                    continue;
                }
                let ns = s | bit;
                // Sign: parity of the number of columns in S above j.
                let higher = (s >> (j + 1)).count_ones();
                let term = m[size - 1][j].ring_mul(dsub);
                let entry = cur.entry(ns).or_insert_with(|| zero.clone());
                *entry = if higher % 2 == 0 {
                    entry.ring_add(&term)
                } else {
                    entry.ring_sub(&term)
                };
            }
        }
        prev = cur;
    }
    prev.remove(&((1u32 << n) - 1)).unwrap()
}

/// Exact Pfaffian of an antisymmetric matrix of even order, by memoized
/// expansion along the first remaining row.
pub fn pfaffian<T: Ring>(a: &[Vec<T>]) -> Result<T, LinalgError> {
    let n = a.len();
    if n % 2 != 0 {
        return Err(LinalgError::OddOrder(n));
    }
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        for (j, v) in row.iter().enumerate() {
            if *v != a[j][i].ring_neg() {
                return Err(LinalgError::NotAntisymmetric);
            }
        }
    }
    if n == 0 {
        // Pf of the empty matrix is 1; callers with n=0 supply no sample
        // element, so this case is handled before reaching here.
        panic!("pfaffian of empty matrix needs no computation");
    }
    assert!(n <= 16, "pfaffian order {n} too large");
    let mut memo: HashMap<u32, T> = HashMap::new();
    Ok(pf_rec(a, (1u32 << n) - 1, &mut memo))
}

fn pf_rec<T: Ring>(a: &[Vec<T>], s: u32, memo: &mut HashMap<u32, T>) -> T {
    if s == 0 {
        return a[0][0].ring_one();
    }
    if let Some(v) = memo.get(&s) {
        return v.clone();
    }
    let i = s.trailing_zeros() as usize;
    let rest = s & !(1u32 << i);
    let mut acc = a[0][0].ring_zero();
    let mut sign_pos = true;
    let mut t = rest;
    while t != 0 {
        let j = t.trailing_zeros() as usize;
        t &= t - 1;
        let sub = pf_rec(a, rest & !(1u32 << j), memo);
        let term = a[i][j].ring_mul(&sub);
        acc = if sign_pos {
            acc.ring_add(&term)
        } else {
            acc.ring_sub(&term)
        };
        sign_pos = !sign_pos;
    }
    memo.insert(s, acc.clone());
    acc
}
