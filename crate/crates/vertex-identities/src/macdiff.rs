//! Macdonald-type difference operators at the specializations q = t and
//! q = 0, acting on black-box point evaluators.
//!
//! The generating-series operator with free parameter z is
//! `D_n(z; q, t) = Σ_{S ⊆ {1..n}} z^{|S|} t^{C(|S|,2)}
//!  ∏_{i∈S, j∉S} (t·x_i − x_j)/(x_i − x_j) · T_S`,
//! where `T_S` scales `x_i → q·x_i` for `i ∈ S`. Schur polynomials are
//! eigenfunctions at q = t, Hall–Littlewood polynomials at q = 0, with
//! eigenvalue `∏_i (1 + z·q^{λ_i}·t^{n−i})` (reading `q^0 = 1` and
//! `q^{λ_i} = 0` for `λ_i > 0` when q = 0).

use num::{One, Zero};

use crate::exact::{pow, Rational};
use crate::partitions::Partition;
use crate::symfunc::{hl_eval, schur_eval};

/// Applies the generating-series difference operator to `f` at `point`.
/// At q = 0 the substitution sets the selected coordinates to zero, so `f`
/// must be total there.
pub fn apply_dn<F: Fn(&[Rational]) -> Rational>(
    f: F,
    z: &Rational,
    q: &Rational,
    t: &Rational,
    point: &[Rational],
) -> Result<Rational, String> {
    let n = point.len();
    for i in 0..n {
        for j in i + 1..n {
            if point[i] == point[j] {
                return Err("coincident coordinates".into());
            }
        }
    }
    let mut sum = Rational::zero();
    for s in 0u32..(1 << n) {
        let r = s.count_ones();
        let mut term = pow(z, r) * pow(t, r * (r.saturating_sub(1)) / 2);
        for i in 0..n {
            if s & (1 << i) == 0 {
                continue;
            }
            for j in 0..n {
                if s & (1 << j) != 0 {
                    continue;
                }
                term *= (t.clone() * point[i].clone() - point[j].clone())
                    / (point[i].clone() - point[j].clone());
            }
        }
        if term.is_zero() {
            continue;
        }
        let shifted: Vec<Rational> = (0..n)
            .map(|i| {
                if s & (1 << i) != 0 {
                    q.clone() * point[i].clone()
                } else {
                    point[i].clone()
                }
            })
            .collect();
        sum += term * f(&shifted);
    }
    Ok(sum)
}

/// Eigenvalue `∏_{i=1}^n (1 + z·q^{λ_i}·t^{n−i})`, with the q = 0 reading
/// `q^0 = 1`, `q^{λ_i > 0} = 0`.
pub fn eigenvalue(lambda: &Partition, n: usize, z: &Rational, q: &Rational, t: &Rational) -> Rational {
    let mut acc = Rational::one();
    for i in 1..=n {
        let qc = if q.is_zero() {
            if lambda.part(i) == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        } else {
            pow(q, lambda.part(i))
        };
        acc *= Rational::one() + z.clone() * qc * pow(t, (n - i) as u32);
    }
    acc
}

/// Checks the eigenfunction relation at `samples` pseudo-random rational
/// points: the operator applied to `s_λ` (q = t) or `P_λ(·;t)` (q = 0)
/// equals eigenvalue × polynomial. Only q ∈ {t, 0} is supported.
pub fn eigen_check(
    lambda: &Partition,
    n: usize,
    z: &Rational,
    q: &Rational,
    t: &Rational,
    samples: usize,
    rng: &mut impl rand::Rng,
) -> Result<bool, String> {
    if !q.is_zero() && q != t {
        return Err("only q = t and q = 0 are supported".into());
    }
    if lambda.len() > n {
        return Err("partition longer than variable count".into());
    }
    let schur_mode = !q.is_zero() || t.is_zero();
    let ev = eigenvalue(lambda, n, z, q, t);
    let mut done = 0;
    let mut attempts = 0;
    while done < samples {
        attempts += 1;
        if attempts > 100 * samples + 100 {
            return Err("could not draw enough non-degenerate samples".into());
        }
        let point: Vec<Rational> = (0..n).map(|_| crate::verify::random_rational(rng)).collect();
        if (0..n).any(|i| (i + 1..n).any(|j| point[i] == point[j]))
            || point.iter().any(|v| v.is_zero())
        {
            continue;
        }
        let fx = if schur_mode {
            schur_eval(lambda, &point)
        } else {
            match hl_eval(lambda, &point, t) {
                Ok(v) => v,
                Err(_) => continue,
            }
        };
        let lhs = if schur_mode {
            apply_dn(|p| schur_eval(lambda, p), z, q, t, &point)?
        } else {
            // At q = 0 some coordinates are set to zero; Hall–Littlewood
            // evaluation handles that via fewer effective variables, but
            // the S_n-sum formula requires distinct points, which zeroing
            // preserves only if no coordinate is already zero (checked).
            apply_dn(
                |p| hl_eval(lambda, p, t).expect("distinct points"),
                z,
                q,
                t,
                &point,
            )?
        };
        if lhs != ev.clone() * fx {
            return Ok(false);
        }
        done += 1;
    }
    Ok(true)
}
