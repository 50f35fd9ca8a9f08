//! Randomized property suites for the ring kernels and combinatorial
//! invariants.

use num::Zero;
use proptest::prelude::*;
use vertex_identities::exact::{det, pfaffian, rat, Rational, TruncSeries};
use vertex_identities::partitions::Partition;
use vertex_identities::planepart::{enumerate_pp, PlanePartition};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn arb_antisym(order: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    proptest::collection::vec(arb_rational(), order * (order - 1) / 2).prop_map(move |vals| {
        let mut m = vec![vec![Rational::zero(); order]; order];
        let mut it = vals.into_iter();
        for i in 0..order {
            for j in i + 1..order {
                let v = it.next().unwrap();
                m[i][j] = v.clone();
                m[j][i] = -v;
            }
        }
        m
    })
}

fn arb_series(vars: usize, cutoff: u32) -> impl Strategy<Value = TruncSeries> {
    let monos = proptest::collection::vec(
        (proptest::collection::vec(0u32..=2, vars), arb_rational()),
        0..5,
    );
    monos.prop_map(move |terms| {
        let mut acc = TruncSeries::zero(vars, cutoff);
        for (exps, c) in terms {
            acc = acc.add(&TruncSeries::monomial(exps, c, vars, cutoff));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pfaffian_squared_is_determinant(m in (1usize..=3).prop_flat_map(|k| arb_antisym(2 * k))) {
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(pf.clone() * pf, det(&m));
    }

    #[test]
    fn odd_antisymmetric_determinant_vanishes(m in arb_antisym(3)) {
        prop_assert_eq!(det(&m), Rational::zero());
    }

    #[test]
    fn series_multiplication_is_commutative_and_associative(
        f in arb_series(2, 5),
        g in arb_series(2, 5),
        h in arb_series(2, 5),
    ) {
        prop_assert_eq!(f.mul(&g).first_difference(&g.mul(&f)), None);
        prop_assert_eq!(f.mul(&g).mul(&h).first_difference(&f.mul(&g.mul(&h))), None);
    }

    #[test]
    fn series_distributes_over_addition(
        f in arb_series(2, 5),
        g in arb_series(2, 5),
        h in arb_series(2, 5),
    ) {
        let lhs = f.mul(&g.add(&h));
        let rhs = f.mul(&g).add(&f.mul(&h));
        prop_assert_eq!(lhs.first_difference(&rhs), None);
    }

    #[test]
    fn unit_series_inversion_round_trips(f in arb_series(2, 5)) {
        // Force a unit constant term.
        let u = f.add(&TruncSeries::one(2, 5));
        prop_assume!(!u.constant_term().is_zero());
        let round = u.mul(&u.invert_unit());
        prop_assert_eq!(round.first_difference(&TruncSeries::one(2, 5)), None);
    }

    #[test]
    fn partition_conjugation_is_an_involution(
        parts in proptest::collection::vec(1u32..=6, 0..6)
    ) {
        let mut sorted = parts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(sorted);
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }
}

#[test]
fn slice_round_trip_over_random_boxes() {
    // Exhaustive over a small box stands in for random sampling: every
    // plane partition must survive the slice decomposition round trip.
    for q in enumerate_pp(2, 3, 7) {
        let (lam, mu) = q.slices(2, 3).unwrap();
        let rebuilt = PlanePartition::from_slices(2, 3, &lam, &mu).unwrap();
        assert_eq!(rebuilt, q);
    }
}
