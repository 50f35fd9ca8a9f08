//! Lattice enumeration against closed forms and known configuration
//! counts.

use num::One;
use vertex_identities::exact::{rat, Rational};
use vertex_identities::latticepf::{
    enumerate_lattice, z_asm_closed, z_osasm_closed, z_uasm_closed, DomainKind,
};

#[test]
fn single_vertex_square_domain() {
    let x = [rat(1, 2)];
    let y = [rat(1, 5)];
    let t = rat(1, 11);
    let (count, z) = enumerate_lattice(DomainKind::Square, &x, &y, &t).unwrap();
    assert_eq!(count, 1);
    let expect = (Rational::one() - t.clone()) / (Rational::one() - x[0].clone() * y[0].clone());
    assert_eq!(z, expect);
    assert_eq!(z, z_asm_closed(&x, &y, &t).unwrap());
}

#[test]
fn square_domain_counts_match_asm_numbers() {
    // 1, 2, 7, 42, 429 configurations for n = 1..5.
    let expect = [1u64, 2, 7, 42, 429];
    let t = rat(1, 3);
    for (idx, want) in expect.iter().enumerate() {
        let n = idx + 1;
        let x: Vec<Rational> = (0..n).map(|i| rat(1, 2 + i as i64)).collect();
        let y: Vec<Rational> = (0..n).map(|j| rat(1, 11 + j as i64)).collect();
        let (count, z) = enumerate_lattice(DomainKind::Square, &x, &y, &t).unwrap();
        assert_eq!(count, *want, "n={n}");
        assert_eq!(z, z_asm_closed(&x, &y, &t).unwrap(), "n={n}");
    }
}

#[test]
fn uturn_single_pair() {
    let x = [rat(1, 2)];
    let y = [rat(1, 7)];
    let t = rat(2, 5);
    let (_, z) = enumerate_lattice(DomainKind::UTurn, &x, &y, &t).unwrap();
    let expect = (Rational::one() - t.clone())
        / ((Rational::one() - x[0].clone() * y[0].clone())
            * (Rational::one() - x[0].clone() / y[0].clone()));
    assert_eq!(z, expect);
    assert_eq!(z, z_uasm_closed(&x, &y, &t).unwrap());
}

#[test]
fn smallest_off_diagonal_domains() {
    let t = rat(1, 7);
    // Two lines: closed form (1−t)/(1−x₁x₂).
    let x = [rat(1, 2), rat(1, 3)];
    let (_, z) = enumerate_lattice(DomainKind::OffDiagonal, &x, &[], &t).unwrap();
    let expect = (Rational::one() - t.clone()) / (Rational::one() - x[0].clone() * x[1].clone());
    assert_eq!(z, expect);
    assert_eq!(z, z_osasm_closed(&x, &t).unwrap());

    // One line: a single free edge and an empty lattice.
    let (count, z) = enumerate_lattice(DomainKind::OffDiagonalOdd, &[rat(1, 2)], &[], &t).unwrap();
    assert_eq!(count, 1);
    assert_eq!(z, Rational::one());
}

#[test]
fn closed_forms_are_symmetric_in_rapidities() {
    let t = rat(3, 11);
    let x = [rat(1, 2), rat(1, 3)];
    let y = [rat(1, 5), rat(1, 7)];
    let xs = [x[1].clone(), x[0].clone()];
    let ys = [y[1].clone(), y[0].clone()];
    assert_eq!(
        z_asm_closed(&x, &y, &t).unwrap(),
        z_asm_closed(&xs, &ys, &t).unwrap()
    );
    assert_eq!(
        z_uasm_closed(&x, &y, &t).unwrap(),
        z_uasm_closed(&xs, &ys, &t).unwrap()
    );
    let x4 = [rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7)];
    let mut x4s = x4.clone();
    x4s.swap(0, 3);
    x4s.swap(1, 2);
    assert_eq!(
        z_osasm_closed(&x4, &t).unwrap(),
        z_osasm_closed(&x4s, &t).unwrap()
    );
}

#[test]
fn degenerate_samples_are_rejected() {
    let t = rat(1, 3);
    // Repeated x gives a Vandermonde zero.
    assert!(z_asm_closed(&[rat(1, 2), rat(1, 2)], &[rat(1, 5), rat(1, 7)], &t).is_err());
    // x·y = 1 is a pole.
    assert!(z_asm_closed(&[rat(1, 2), rat(1, 3)], &[rat(2, 1), rat(1, 7)], &t).is_err());
}

#[test]
fn zero_rapidity_row_produces_no_c_minus_weight() {
    // With x = 0 the c₋ weight vanishes, so the n = 1 partition function
    // collapses to 1−t regardless of y.
    let t = rat(4, 9);
    let (_, z) = enumerate_lattice(DomainKind::Square, &[rat(0, 1)], &[rat(1, 5)], &t).unwrap();
    assert_eq!(z, Rational::one() - t);
}

#[test]
fn domain_names_parse() {
    for name in ["square", "partial-square", "u-turn", "partial-u-turn", "off-diagonal", "off-diagonal-odd"] {
        assert!(DomainKind::parse(name).is_some(), "{name}");
    }
    assert!(DomainKind::parse("hexagonal").is_none());
}
