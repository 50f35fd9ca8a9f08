//! Difference operators: expansion structure and eigenrelations.

use num::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vertex_identities::exact::{pow, rat, Rational};
use vertex_identities::macdiff::{apply_dn, eigen_check, eigenvalue};
use vertex_identities::partitions::{enumerate_partitions, Partition};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

#[test]
fn one_variable_operator_is_a_two_term_sum() {
    // In one variable D(z;q,t)f(x) = f(x) + z·f(qx).
    let f = |xs: &[Rational]| pow(&xs[0], 3) + rat(2, 1) * xs[0].clone();
    let (z, q, t) = (rat(1, 2), rat(1, 3), rat(1, 5));
    let x = [rat(2, 7)];
    let got = apply_dn(f, &z, &q, &t, &x).unwrap();
    let expect = f(&x) + z.clone() * f(&[q.clone() * x[0].clone()]);
    assert_eq!(got, expect);
}

#[test]
fn eigenvalue_readings() {
    let (z, t) = (rat(1, 2), rat(1, 3));
    // q = t: ∏(1 + z·t^{λ_i + n − i}).
    let lam = p(&[2, 1]);
    let expect = (Rational::one() + z.clone() * pow(&t, 2 + 2 - 1))
        * (Rational::one() + z.clone() * pow(&t, 1 + 2 - 2));
    assert_eq!(eigenvalue(&lam, 2, &z, &t, &t), expect);
    // q = 0: q^{λ_i} reads 1 for λ_i = 0 and 0 otherwise.
    let expect0 = (Rational::one() + Rational::zero())
        * (Rational::one() + z.clone() * pow(&t, 0));
    assert_eq!(eigenvalue(&p(&[1]), 2, &z, &Rational::zero(), &t), expect0);
}

#[test]
fn eigenrelations_hold_for_small_partitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (z, t) = (rat(2, 5), rat(1, 3));
    for n in 1..=2usize {
        for lam in enumerate_partitions(3, n) {
            for q in [t.clone(), Rational::zero()] {
                assert!(
                    eigen_check(&lam, n, &z, &q, &t, 2, &mut rng).unwrap(),
                    "lambda={lam} n={n}"
                );
            }
        }
    }
}

#[test]
fn unsupported_specializations_are_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    // Only q = t and q = 0 are implemented.
    assert!(eigen_check(&p(&[1]), 1, &rat(1, 2), &rat(1, 7), &rat(1, 3), 1, &mut rng).is_err());
}
