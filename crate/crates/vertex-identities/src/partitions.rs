//! Partition combinatorics.
//!
//! Partitions are weakly decreasing sequences of positive integers, stored
//! without trailing zeros; formulas that index zero parts (exponents like
//! `λ_i − i + n`) take the ambient variable count explicitly. Also houses the
//! `t`-coefficients attached to partitions: `b_λ(t)`, `v_λ(t)`, the branching
//! coefficient `ψ_{λ/μ}(t)`, and the even-column product.

use num::One;

use crate::exact::{pow, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        let mut p = parts;
        while p.last() == Some(&0) {
            p.pop();
        }
        assert!(
            p.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {p:?}"
        );
        Partition(p)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `λ_i` with 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of the part `i ≥ 1`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Conjugate partition: `λ′_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let max = self.part(1);
        let parts = (1..=max)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// All parts even.
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Conjugate has all parts even; equivalently every multiplicity is even.
    pub fn has_even_columns(&self) -> bool {
        self.conjugate().is_even()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `λ ≻ μ`: true iff `λ₁ ≥ μ₁ ≥ λ₂ ≥ μ₂ ≥ …`.
pub fn interlaces(lambda: &Partition, mu: &Partition) -> bool {
    let n = lambda.len().max(mu.len()) + 1;
    (1..=n).all(|i| lambda.part(i) >= mu.part(i) && mu.part(i) >= lambda.part(i + 1))
}

/// All partitions with `|λ| ≤ max_weight` and `ℓ(λ) ≤ max_length`, in graded
/// order (by weight), then lexicographically descending within each weight.
pub fn enumerate_partitions(max_weight: u32, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        let mut of_weight = Vec::new();
        gen_partitions(w, w, max_length, &mut Vec::new(), &mut of_weight);
        of_weight.sort_by(|a, b| b.parts().cmp(a.parts()));
        out.extend(of_weight);
    }
    out
}

fn gen_partitions(
    remaining: u32,
    max_part: u32,
    max_length: usize,
    acc: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(acc.clone()));
        return;
    }
    if acc.len() >= max_length {
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        acc.push(p);
        gen_partitions(remaining - p, p, max_length, acc, out);
        acc.pop();
    }
}

/// All `μ` with `λ ≻ μ` (the branching set for removing one variable).
pub fn interlacing_predecessors(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let k = lambda.len();
    let mut acc: Vec<u32> = Vec::new();
    fn rec(lambda: &Partition, i: usize, k: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > k {
            out.push(Partition::new(acc.clone()));
            return;
        }
        // μ_i ranges over [λ_{i+1}, λ_i].
        let lo = lambda.part(i + 1);
        let hi = lambda.part(i);
        for v in lo..=hi {
            acc.push(v);
            rec(lambda, i + 1, k, acc, out);
            acc.pop();
        }
    }
    rec(lambda, 1, k, &mut acc, &mut out);
    out
}

/// `∏_{i≥1} ∏_{j=1}^{m_i(λ)} (1−t^j)`, optionally including the `i = 0`
/// factor with `m₀(λ) = include_zero_parts − ℓ(λ)`.
///
/// With `include_zero_parts = 0` this is `b_λ(t)`; with
/// `include_zero_parts = n` it is the coefficient appearing in the refined
/// Cauchy sums over `n`-variable Hall–Littlewood polynomials.
pub fn b_coeff(lambda: &Partition, t: &Rational, include_zero_parts: usize) -> Rational {
    if include_zero_parts > 0 {
        assert!(
            lambda.len() <= include_zero_parts,
            "partition longer than ambient variable count"
        );
    }
    let mut acc = Rational::one();
    let max = lambda.part(1);
    for i in 1..=max {
        for j in 1..=lambda.multiplicity(i) {
            acc *= Rational::one() - pow(t, j as u32);
        }
    }
    if include_zero_parts > 0 {
        for j in 1..=(include_zero_parts - lambda.len()) {
            acc *= Rational::one() - pow(t, j as u32);
        }
    }
    acc
}

/// `v_λ(t)` for `n` variables: `∏_{i≥0} [m_i(λ)]_t!` with
/// `[m]_t! = ∏_{j=1}^{m} (1−t^j)/(1−t)` and `m₀ = n − ℓ(λ)`.
pub fn v_coeff(lambda: &Partition, t: &Rational, n: usize) -> Rational {
    assert!(lambda.len() <= n);
    let one_minus_t = Rational::one() - t.clone();
    let mut acc = Rational::one();
    let mut factor = |m: usize| {
        for j in 1..=m {
            acc *= (Rational::one() - pow(t, j as u32)) / one_minus_t.clone();
        }
    };
    factor(n - lambda.len());
    let max = lambda.part(1);
    for i in 1..=max {
        factor(lambda.multiplicity(i));
    }
    acc
}

/// Branching coefficient `ψ_{λ/μ}(t) = ∏ (1 − t^{m_i(μ)})` over all `i ≥ 1`
/// with `m_i(μ) = m_i(λ) + 1`. Requires `λ ≻ μ`.
pub fn psi_coeff(lambda: &Partition, mu: &Partition, t: &Rational) -> Result<Rational, String> {
    if !interlaces(lambda, mu) {
        return Err(format!("{lambda} does not interlace {mu}"));
    }
    let mut acc = Rational::one();
    let max = lambda.part(1);
    for i in 1..=max {
        if mu.multiplicity(i) == lambda.multiplicity(i) + 1 {
            acc *= Rational::one() - pow(t, mu.multiplicity(i) as u32);
        }
    }
    Ok(acc)
}

/// `∏_{i≥1} ∏_{j=2,4,…}^{m_i(λ)} (1−t^{j−1})`, optionally including the
/// `i = 0` factor with `m₀ = total_variables − ℓ(λ)` (used by the odd-size
/// off-diagonal identity, where `total_variables` is even).
pub fn even_column_coeff(
    lambda: &Partition,
    t: &Rational,
    include_zero_parts: Option<usize>,
) -> Rational {
    let mut acc = Rational::one();
    let mut factor = |m: usize| {
        let mut j = 2;
        while j <= m {
            acc *= Rational::one() - pow(t, (j - 1) as u32);
            j += 2;
        }
    };
    if let Some(total) = include_zero_parts {
        assert!(lambda.len() <= total);
        factor(total - lambda.len());
    }
    let max = lambda.part(1);
    for i in 1..=max {
        factor(lambda.multiplicity(i));
    }
    acc
}

/// `∏ over requested 1-based positions i of (1 − t^{λ_i − i + n + 1})`,
/// with `λ` padded by zeros to length `n`. The refined-Cauchy coefficients
/// use all positions; the refined-Littlewood ones use the even positions.
pub fn staircase_coeff<I: Iterator<Item = usize>>(
    lambda: &Partition,
    t: &Rational,
    n: usize,
    positions: I,
) -> Rational {
    let mut acc = Rational::one();
    for i in positions {
        let e = lambda.part(i) as i64 - i as i64 + n as i64 + 1;
        assert!(e >= 0, "negative staircase exponent");
        acc *= Rational::one() - pow(t, e as u32);
    }
    acc
}
