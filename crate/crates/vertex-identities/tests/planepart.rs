//! Plane partitions: enumeration counts, path statistics, slice
//! round-trips, and the branching-weight oracle.

use std::collections::BTreeMap;

use num::One;
use vertex_identities::exact::{pow, rat, Rational};
use vertex_identities::planepart::{
    enumerate_pp, enumerate_symmetric_pp, enumerate_symplectic_pp, path_stats, psi_chain_weight,
    t_weight, CentralCondition, PlanePartition,
};

fn pp(rows: &[&[u32]]) -> PlanePartition {
    PlanePartition::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_pp(4, 4, 0).len(), 1);
    // Volume histogram 1,1,3,6 for volumes 0..3 in a large box.
    let mut hist = BTreeMap::new();
    for q in enumerate_pp(3, 3, 3) {
        *hist.entry(q.weight()).or_insert(0u32) += 1;
    }
    assert_eq!(hist.get(&0), Some(&1));
    assert_eq!(hist.get(&1), Some(&1));
    assert_eq!(hist.get(&2), Some(&3));
    assert_eq!(hist.get(&3), Some(&6));
    // Single column: heights 0..5.
    assert_eq!(enumerate_pp(1, 1, 5).len(), 6);
}

#[test]
fn monotonicity_is_enforced() {
    assert!(PlanePartition::new(vec![vec![1, 2]]).is_err());
    assert!(PlanePartition::new(vec![vec![2, 1], vec![2, 2]]).is_err());
    assert!(PlanePartition::new(vec![vec![2, 1], vec![1, 1]]).is_ok());
}

#[test]
fn path_statistic_oracles() {
    // Single box: one path at depth 1.
    let s = path_stats(&pp(&[&[1]]), None).unwrap();
    assert_eq!(s.by_depth, BTreeMap::from([(1, 1)]));

    // π = [[2,1],[1,1]]: the height-2 singleton and the three 1-entries
    // each form one depth-1 path.
    let s = path_stats(&pp(&[&[2, 1], &[1, 1]]), None).unwrap();
    assert_eq!(s.by_depth, BTreeMap::from([(1, 2)]));

    // π = [[1]] in a 2×2 framing: the height-1 box at depth 1 plus one
    // height-0 path at depth 1.
    let s = path_stats(&pp(&[&[1]]), Some(2)).unwrap();
    assert_eq!(s.by_depth_framed.unwrap(), BTreeMap::from([(1, 2)]));

    // Framing must cover the support.
    assert!(path_stats(&pp(&[&[2, 1], &[1, 1]]), Some(1)).is_err());
}

#[test]
fn slice_round_trip() {
    for q in enumerate_pp(3, 3, 6) {
        let (lam, mu) = q.slices(3, 3).unwrap();
        let rebuilt = PlanePartition::from_slices(3, 3, &lam, &mu).unwrap();
        assert_eq!(rebuilt, q);
    }
}

#[test]
fn text_round_trip() {
    let q = pp(&[&[3, 2, 1], &[2, 2], &[1]]);
    let rebuilt = PlanePartition::from_text(&q.to_text()).unwrap();
    assert_eq!(rebuilt, q);
}

/// The path weight ∏(1−t^d)^{p_d} must equal the branching-coefficient
/// weight the plane partition picks up inside the Hall–Littlewood Cauchy
/// sum: b_κ(t) times the interlacing-chain ψ products of both halves.
#[test]
fn path_weight_matches_branching_weight() {
    let t = rat(2, 7);
    for q in enumerate_pp(3, 3, 8) {
        let s = path_stats(&q, None).unwrap();
        let lhs = t_weight(&s.by_depth, &t);
        let rhs = psi_chain_weight(&q, 3, 3, &t).unwrap();
        assert_eq!(lhs, rhs, "pi=\n{}", q.to_text());
    }
}

#[test]
fn symmetric_enumeration_respects_predicates() {
    for cond in [
        CentralCondition::None,
        CentralCondition::EvenCentral,
        CentralCondition::EvenColumnsCentral,
    ] {
        for q in enumerate_symmetric_pp(3, 6, cond) {
            assert!(q.is_symmetric());
            match cond {
                CentralCondition::EvenCentral => assert!(q.central_slice().is_even()),
                CentralCondition::EvenColumnsCentral => {
                    assert!(q.central_slice().has_even_columns())
                }
                CentralCondition::None => {}
            }
        }
    }
    // The all-ones 2×2 square qualifies for even columns; the single box
    // does not.
    let found = enumerate_symmetric_pp(2, 4, CentralCondition::EvenColumnsCentral);
    assert!(found.contains(&pp(&[&[1, 1], &[1, 1]])));
    assert!(!found.contains(&pp(&[&[1]])));
}

#[test]
fn mirrored_paths_pair_up() {
    for q in enumerate_symmetric_pp(3, 7, CentralCondition::None) {
        let s = path_stats(&q, Some(3)).unwrap();
        // Splitting off-diagonal pairs from crossings preserves the total
        // path weight: (1−t^d)^{p_d} = (1−t^d)^{2p°_d + p•_d}.
        let pairs = s.off_diagonal_pairs.unwrap();
        let crossing = s.diagonal.unwrap();
        let mut recombined = BTreeMap::new();
        for (d, c) in &pairs {
            *recombined.entry(*d).or_insert(0) += 2 * c;
        }
        for (d, c) in &crossing {
            *recombined.entry(*d).or_insert(0) += c;
        }
        recombined.retain(|_, c| *c > 0);
        assert_eq!(recombined, s.by_depth, "pi=\n{}", q.to_text());
    }
}

#[test]
fn symplectic_chain_enumeration() {
    // Central weight 0 forces the all-empty chain.
    assert_eq!(enumerate_symplectic_pp(2, 2, 0).len(), 1);
    // m = n = 1: central ∅ gives (μ¹=∅); central (k) forces μ̄⁰ = ∅ and
    // μ¹ ∈ {∅,(1),..,(k)} interlacing both ways: μ¹ ≤ central with
    // ℓ(μ¹) ≤ 1. Count chains by brute force for max central weight 1:
    // central=∅ (1 chain) + central=(1) with μ¹ ∈ {∅,(1)} (2 chains).
    assert_eq!(enumerate_symplectic_pp(1, 1, 1).len(), 3);
    // The length constraint ℓ(μ̄^{(i)}) ≤ i holds on every chain.
    for c in enumerate_symplectic_pp(2, 2, 4) {
        for (i, mubar) in c.mubar.iter().enumerate() {
            assert!(mubar.len() <= i + 1);
        }
    }
}

#[test]
fn t_weight_basics() {
    let t = rat(1, 2);
    let counts = BTreeMap::from([(1u32, 2u32), (3, 1)]);
    let expect = pow(&(Rational::one() - t.clone()), 2) * (Rational::one() - pow(&t, 3));
    assert_eq!(t_weight(&counts, &t), expect);
}
