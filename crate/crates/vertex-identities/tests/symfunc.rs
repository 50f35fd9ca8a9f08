//! Symmetric-polynomial evaluators against independent oracles.

use num::{One, Zero};
use vertex_identities::exact::{rat, Rational, TruncSeries};
use vertex_identities::partitions::{enumerate_partitions, Partition};
use vertex_identities::symfunc::{
    bchl_eval, expand_in_hl_basis, h_complete_eval, hl_eval, hl_expand, ktilde_coeffs,
    schur_eval, sp_eval, sp_tableau_eval,
};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

#[test]
fn schur_examples() {
    let x = [rat(2, 3), rat(-1, 5)];
    assert_eq!(schur_eval(&p(&[]), &x), Rational::one());
    assert_eq!(schur_eval(&p(&[1]), &x), x[0].clone() + x[1].clone());
    // Repeated points fall back to branching: s_(2,1)(1,1,1) counts the 8
    // semistandard tableaux of shape (2,1) with entries ≤ 3.
    let ones = [rat(1, 1), rat(1, 1), rat(1, 1)];
    assert_eq!(schur_eval(&p(&[2, 1]), &ones), rat(8, 1));
}

#[test]
fn hall_littlewood_examples() {
    let x = [rat(1, 2), rat(1, 3)];
    let t = rat(1, 5);
    // P_(1) is the monomial symmetric polynomial for any t.
    assert_eq!(
        hl_eval(&p(&[1]), &x, &t).unwrap(),
        x[0].clone() + x[1].clone()
    );
    // P_(2) = x₁² + x₂² + (1−t)x₁x₂.
    let expect = x[0].clone() * x[0].clone()
        + x[1].clone() * x[1].clone()
        + (Rational::one() - t.clone()) * x[0].clone() * x[1].clone();
    assert_eq!(hl_eval(&p(&[2]), &x, &t).unwrap(), expect);
    // t = 0 recovers Schur.
    for lam in enumerate_partitions(4, 2) {
        assert_eq!(
            hl_eval(&lam, &x, &Rational::zero()).unwrap(),
            schur_eval(&lam, &x)
        );
    }
    assert!(hl_eval(&p(&[1]), &[rat(1, 2), rat(1, 2)], &t).is_err());
}

#[test]
fn hl_expansion_examples() {
    let t = rat(2, 7);
    let e = hl_expand(&p(&[1, 1]), 2, &t, 4);
    assert_eq!(e.coeff(&[1, 1]), Rational::one());
    assert_eq!(e.terms().count(), 1);

    let e = hl_expand(&p(&[2]), 2, &t, 4);
    assert_eq!(e.coeff(&[2, 0]), Rational::one());
    assert_eq!(e.coeff(&[0, 2]), Rational::one());
    assert_eq!(e.coeff(&[1, 1]), Rational::one() - t.clone());

    let e = hl_expand(&p(&[1]), 3, &Rational::zero(), 2);
    for i in 0..3 {
        let mut exps = vec![0u32; 3];
        exps[i] = 1;
        assert_eq!(e.coeff(&exps), Rational::one());
    }
}

#[test]
fn hl_expand_matches_hl_eval_at_points() {
    let points = [
        vec![rat(1, 2), rat(1, 3), rat(2, 5)],
        vec![rat(-1, 2), rat(3, 4), rat(1, 7)],
        vec![rat(2, 1), rat(-1, 3), rat(5, 6)],
    ];
    let t = rat(3, 8);
    for lam in enumerate_partitions(5, 3) {
        let e = hl_expand(&lam, 3, &t, 5);
        for x in &points {
            assert_eq!(e.eval(x), hl_eval(&lam, x, &t).unwrap(), "lambda={lam}");
        }
    }
}

#[test]
fn hl_expand_is_symmetric() {
    let t = rat(1, 4);
    for lam in enumerate_partitions(4, 3) {
        assert!(hl_expand(&lam, 3, &t, 4).is_symmetric(), "lambda={lam}");
    }
}

#[test]
fn symplectic_examples() {
    let y1 = [rat(5, 3)];
    assert_eq!(sp_eval(&p(&[]), &y1).unwrap(), Rational::one());
    assert_eq!(
        sp_eval(&p(&[1]), &y1).unwrap(),
        y1[0].clone() + y1[0].recip()
    );
    // sp_(1,1)(2,3) = 28/3 by symplectic tableau enumeration.
    let y = [rat(2, 1), rat(3, 1)];
    assert_eq!(sp_eval(&p(&[1, 1]), &y).unwrap(), rat(28, 3));
    assert!(sp_eval(&p(&[1]), &[rat(1, 1)]).is_err());
}

#[test]
fn symplectic_weyl_matches_tableaux() {
    let samples = [
        vec![rat(2, 1), rat(3, 1)],
        vec![rat(1, 2), rat(2, 3)],
        vec![rat(-3, 2), rat(5, 4)],
    ];
    for lam in enumerate_partitions(4, 2) {
        for y in &samples {
            assert_eq!(
                sp_eval(&lam, y).unwrap(),
                sp_tableau_eval(&lam, y),
                "lambda={lam}"
            );
        }
    }
}

#[test]
fn bc_hall_littlewood_degenerations_and_symmetry() {
    // n = 1 examples: K_∅ = 1 and K_(1) = y + 1/y for any t.
    for t in [rat(1, 3), rat(-2, 5), rat(0, 1)] {
        let y = [rat(3, 4)];
        assert_eq!(bchl_eval(&p(&[]), &y, &t).unwrap(), Rational::one());
        assert_eq!(
            bchl_eval(&p(&[1]), &y, &t).unwrap(),
            y[0].clone() + y[0].recip()
        );
    }
    // t = 0 gives symplectic characters.
    for n in 1..=2usize {
        let y: Vec<Rational> = [rat(2, 1), rat(5, 3)][..n].to_vec();
        for lam in enumerate_partitions(4, n) {
            assert_eq!(
                bchl_eval(&lam, &y, &Rational::zero()).unwrap(),
                sp_eval(&lam, &y).unwrap(),
                "lambda={lam}"
            );
        }
    }
    // Hyperoctahedral invariance: y_i → 1/y_i and coordinate swaps.
    let t = rat(2, 7);
    let y = [rat(2, 1), rat(5, 3)];
    let base = bchl_eval(&p(&[2, 1]), &y, &t).unwrap();
    for variant in [
        vec![y[0].recip(), y[1].clone()],
        vec![y[1].clone(), y[0].clone()],
        vec![y[1].recip(), y[0].recip()],
    ] {
        assert_eq!(bchl_eval(&p(&[2, 1]), &variant, &t).unwrap(), base);
    }
}

#[test]
fn complete_symmetric_functions() {
    let x = [rat(2, 3), rat(-1, 4)];
    assert_eq!(h_complete_eval(0, &x), Rational::one());
    assert_eq!(h_complete_eval(-2, &x), Rational::zero());
    let expect = x[0].clone() * x[0].clone()
        + x[0].clone() * x[1].clone()
        + x[1].clone() * x[1].clone();
    assert_eq!(h_complete_eval(2, &x), expect);
    // h_k(x,xm) − h_k(x,xn) = (xm−xn)·h_{k−1}(x,xm,xn).
    let (base, xm, xn) = (vec![rat(1, 2), rat(1, 5)], rat(3, 7), rat(-2, 9));
    let mut with_m = base.clone();
    with_m.push(xm.clone());
    let mut with_n = base.clone();
    with_n.push(xn.clone());
    let mut with_both = base.clone();
    with_both.push(xm.clone());
    with_both.push(xn.clone());
    assert_eq!(
        h_complete_eval(3, &with_m) - h_complete_eval(3, &with_n),
        (xm - xn) * h_complete_eval(2, &with_both)
    );
}

#[test]
fn hl_basis_expansion() {
    let t = rat(1, 3);
    // X₁ + X₂ expands as P_(1).
    let f = TruncSeries::var(0, 2, 3).add(&TruncSeries::var(1, 2, 3));
    let coeffs = expand_in_hl_basis(&f, 2, &t).unwrap();
    assert_eq!(coeffs, vec![(p(&[1]), Rational::one())]);

    // Constant 1 expands as P_∅.
    let coeffs = expand_in_hl_basis(&TruncSeries::one(2, 2), 2, &t).unwrap();
    assert_eq!(coeffs, vec![(p(&[]), Rational::one())]);

    // s_(2) = P_(2) + t·P_(1,1).
    let s2 = hl_expand(&p(&[2]), 2, &Rational::zero(), 3);
    let mut coeffs = expand_in_hl_basis(&s2, 2, &t).unwrap();
    coeffs.sort_by(|a, b| a.0.parts().cmp(b.0.parts()));
    assert_eq!(
        coeffs,
        vec![(p(&[1, 1]), t.clone()), (p(&[2]), Rational::one())]
    );

    // Round trip: P_λ expands as {λ: 1}.
    for lam in enumerate_partitions(4, 2) {
        let coeffs = expand_in_hl_basis(&hl_expand(&lam, 2, &t, 4), 2, &t).unwrap();
        assert_eq!(coeffs, vec![(lam, Rational::one())]);
    }

    // Non-symmetric input errors.
    assert!(expand_in_hl_basis(&TruncSeries::var(0, 2, 2), 2, &t).is_err());
}

#[test]
fn ktilde_constant_coefficient_is_one() {
    let z = [rat(2, 1), rat(1, 2)];
    let zeros = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
    let coeffs = ktilde_coeffs(&z, &rat(1, 3), &zeros, 2, 3).unwrap();
    let empty = coeffs.iter().find(|(l, _)| l.is_empty()).unwrap();
    assert_eq!(empty.1, Rational::one());
}
