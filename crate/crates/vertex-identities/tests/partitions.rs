//! Partition combinatorics and t-coefficient oracles.

use num::One;
use vertex_identities::exact::{pow, rat, Rational};
use vertex_identities::partitions::{
    b_coeff, enumerate_partitions, even_column_coeff, interlaces, psi_coeff, Partition,
};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

#[test]
fn conjugate_examples() {
    assert_eq!(p(&[]).conjugate(), p(&[]));
    assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    // Central slice of the symmetric plane-partition figure: the conjugate
    // is even.
    assert_eq!(p(&[5, 5, 3, 3, 1, 1]).conjugate(), p(&[6, 4, 4, 2, 2]));
    assert!(p(&[5, 5, 3, 3, 1, 1]).has_even_columns());
}

#[test]
fn interlacing_examples() {
    assert!(interlaces(&p(&[3, 1]), &p(&[2, 1])));
    assert!(!interlaces(&p(&[2]), &p(&[3])));
    assert!(interlaces(&p(&[]), &p(&[])));
}

#[test]
fn enumeration_order_and_counts() {
    let got = enumerate_partitions(3, 2);
    let expect = vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1])];
    assert_eq!(got, expect);

    assert_eq!(enumerate_partitions(0, 5), vec![p(&[])]);

    // Partitions of weight ≤ 6 (no effective length cap):
    // 1+1+2+3+5+7+11 = 30.
    assert_eq!(enumerate_partitions(6, 6).len(), 30);
}

#[test]
fn b_coefficient_examples() {
    let t = rat(2, 7);
    assert_eq!(b_coeff(&p(&[1]), &t, 0), Rational::one() - t.clone());
    // λ = (2,2,1): m₂ = 2, m₁ = 1 → (1−t)·(1−t)(1−t²).
    let expect = (Rational::one() - t.clone())
        * (Rational::one() - t.clone())
        * (Rational::one() - pow(&t, 2));
    assert_eq!(b_coeff(&p(&[2, 2, 1]), &t, 0), expect);
    // λ = (1) with two ambient variables at t = 1/2: m₀ = 1 adds (1−t).
    assert_eq!(b_coeff(&p(&[1]), &rat(1, 2), 2), rat(1, 4));
}

#[test]
fn b_coefficient_zero_part_split() {
    let t = rat(3, 5);
    for n in 0..=5usize {
        for lam in enumerate_partitions(5, n) {
            let mut extra = Rational::one();
            for j in 1..=(n - lam.len()) as u32 {
                extra *= Rational::one() - pow(&t, j);
            }
            assert_eq!(b_coeff(&lam, &t, n), b_coeff(&lam, &t, 0) * extra);
        }
    }
}

#[test]
fn psi_coefficient_examples() {
    let t = rat(3, 7);
    assert_eq!(psi_coeff(&p(&[1]), &p(&[]), &t).unwrap(), Rational::one());
    assert_eq!(
        psi_coeff(&p(&[2, 1]), &p(&[1, 1]), &t).unwrap(),
        Rational::one() - pow(&t, 2)
    );
    assert_eq!(
        psi_coeff(&p(&[2]), &p(&[1]), &t).unwrap(),
        Rational::one() - t.clone()
    );
    assert!(psi_coeff(&p(&[1]), &p(&[2]), &t).is_err());
    assert_eq!(psi_coeff(&p(&[2, 1]), &p(&[1, 1]), &rat(0, 1)).unwrap(), Rational::one());
}

#[test]
fn even_column_coefficient_examples() {
    let t = rat(2, 9);
    assert_eq!(
        even_column_coeff(&p(&[1, 1]), &t, None),
        Rational::one() - t.clone()
    );
    assert_eq!(
        even_column_coeff(&p(&[2, 2, 1, 1]), &t, None),
        pow(&(Rational::one() - t.clone()), 2)
    );
    // Empty partition with the zero-part block over 4 ambient variables at
    // t = 1/3: j ∈ {2,4} give (1−t)(1−t³) = (2/3)(26/27).
    assert_eq!(
        even_column_coeff(&p(&[]), &rat(1, 3), Some(4)),
        rat(52, 81)
    );
}

#[test]
fn conjugate_is_involutive_and_interlacing_bounds() {
    for lam in enumerate_partitions(10, 10) {
        assert_eq!(lam.conjugate().conjugate(), lam);
    }
    for lam in enumerate_partitions(5, 4) {
        for mu in enumerate_partitions(5, 4) {
            if interlaces(&lam, &mu) {
                assert!(lam.weight() >= mu.weight());
                assert!(lam.len() <= mu.len() + 1);
            }
        }
    }
}
