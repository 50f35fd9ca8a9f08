//! Symmetric-polynomial evaluators and formal expanders.
//!
//! Covers, at desk scale:
//! * Schur polynomials — Weyl determinant at distinct points, branching
//!   (tableau) fallback at repeated points;
//! * Hall–Littlewood `P_λ(x;t)` — symmetric-group sum for evaluation,
//!   interlacing branching for formal expansion;
//! * symplectic characters `sp_λ` — Weyl determinant and the restricted
//!   tableau sum;
//! * hyperoctahedrally symmetric Hall–Littlewood polynomials `K_λ` — the
//!   `2^n·n!` signed-permutation sum;
//! * complete symmetric functions `h_k`;
//! * expansion of a symmetric series in the Hall–Littlewood basis, and the
//!   kernel-defined `K̃_λ` coefficients extracted through it.

use std::collections::HashMap;

use itertools::Itertools;
use num::{One, Zero};

use crate::exact::{det, pow, pow_i, Rational, TruncSeries};
use crate::partitions::{
    b_coeff, enumerate_partitions, interlacing_predecessors, psi_coeff, v_coeff, Partition,
};

/// Schur polynomial `s_λ(x₁..x_n)`.
///
/// Uses `det[x_i^{λ_j−j+n}]/Δ(x)` when the points are distinct, and the
/// branching (tableau) sum otherwise, so repeated points like
/// `s_{(2,1)}(1,1,1)` are handled exactly.
pub fn schur_eval(lambda: &Partition, x: &[Rational]) -> Rational {
    let n = x.len();
    assert!(lambda.len() <= n, "partition longer than variable count");
    let distinct = (0..n).all(|i| (i + 1..n).all(|j| x[i] != x[j]));
    if distinct && n > 0 {
        let m: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = lambda.part(j + 1) as i64 - (j as i64 + 1) + n as i64;
                        pow(&x[i], e as u32)
                    })
                    .collect()
            })
            .collect();
        det(&m) / vandermonde(x)
    } else if n == 0 {
        if lambda.is_empty() {
            Rational::one()
        } else {
            Rational::zero()
        }
    } else {
        // Branching over interlacing predecessors, one variable at a time;
        // predecessors needing more than the remaining variables vanish.
        interlacing_predecessors(lambda)
            .into_iter()
            .filter(|mu| mu.len() < n)
            .map(|mu| {
                let d = lambda.weight() - mu.weight();
                pow(&x[n - 1], d) * schur_eval(&mu, &x[..n - 1])
            })
            .sum()
    }
}

/// `Δ(x) = ∏_{i<j} (x_i − x_j)`.
pub fn vandermonde(x: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            acc *= x[i].clone() - x[j].clone();
        }
    }
    acc
}

/// Hall–Littlewood polynomial `P_λ(x₁..x_n; t)` via the symmetric-group sum
/// `(1/v_λ(t)) Σ_σ σ(x^λ ∏_{i<j} (x_i − t·x_j)/(x_i − x_j))`.
///
/// Zero coordinates are stripped first (stability:
/// `P_λ(x₁..x_k, 0) = P_λ(x₁..x_k)`); the remaining points must be
/// distinct.
pub fn hl_eval(lambda: &Partition, x: &[Rational], t: &Rational) -> Result<Rational, String> {
    if x.iter().any(|v| v.is_zero()) {
        let stripped: Vec<Rational> = x.iter().filter(|v| !v.is_zero()).cloned().collect();
        if lambda.len() > stripped.len() {
            return Ok(Rational::zero());
        }
        return hl_eval(lambda, &stripped, t);
    }
    let n = x.len();
    if lambda.len() > n {
        return Err("partition longer than variable count".into());
    }
    for i in 0..n {
        for j in i + 1..n {
            if x[i] == x[j] {
                return Err("repeated point in Hall-Littlewood evaluation".into());
            }
        }
    }
    let mut sum = Rational::zero();
    for perm in (0..n).permutations(n) {
        let xs: Vec<&Rational> = perm.iter().map(|&i| &x[i]).collect();
        let mut term = Rational::one();
        for (i, xi) in xs.iter().enumerate() {
            term *= pow(xi, lambda.part(i + 1));
        }
        for i in 0..n {
            for j in i + 1..n {
                term *= (xs[i].clone() - t.clone() * xs[j].clone())
                    / (xs[i].clone() - xs[j].clone());
            }
        }
        sum += term;
    }
    Ok(sum / v_coeff(lambda, t, n))
}

/// Memo table for formal Hall–Littlewood expansions, keyed by
/// `(λ, variables used)`; the ambient series shape is fixed per instance.
pub struct HlExpander {
    vars: usize,
    cutoff: u32,
    t: Rational,
    memo: HashMap<(Partition, usize), TruncSeries>,
}

impl HlExpander {
    pub fn new(vars: usize, cutoff: u32, t: Rational) -> Self {
        HlExpander {
            vars,
            cutoff,
            t,
            memo: HashMap::new(),
        }
    }

    /// `P_λ(X₁..X_n; t)` as an exact homogeneous series of degree `|λ|`,
    /// via the branching rule
    /// `P_λ(x₁..x_n) = Σ_{μ≺λ} ψ_{λ/μ}(t)·x_n^{|λ|−|μ|}·P_μ(x₁..x_{n−1})`.
    pub fn expand(&mut self, lambda: &Partition, n: usize) -> TruncSeries {
        assert!(n <= self.vars);
        assert!(lambda.weight() <= self.cutoff, "partition weight exceeds cutoff");
        if lambda.len() > n {
            return TruncSeries::zero(self.vars, self.cutoff);
        }
        if let Some(s) = self.memo.get(&(lambda.clone(), n)) {
            return s.clone();
        }
        let result = if lambda.is_empty() && n == 0 {
            TruncSeries::one(self.vars, self.cutoff)
        } else if n == 0 {
            TruncSeries::zero(self.vars, self.cutoff)
        } else {
            let mut acc = TruncSeries::zero(self.vars, self.cutoff);
            for mu in interlacing_predecessors(lambda) {
                if mu.len() > n - 1 {
                    continue;
                }
                let psi = psi_coeff(lambda, &mu, &self.t).expect("predecessor interlaces");
                let d = lambda.weight() - mu.weight();
                let mut exps = vec![0u32; self.vars];
                exps[n - 1] = d;
                let sub = self.expand(&mu, n - 1);
                acc = acc.add(&sub.shift(&exps).scale(&psi));
            }
            acc
        };
        self.memo.insert((lambda.clone(), n), result.clone());
        result
    }
}

/// Convenience wrapper: `P_λ(X₁..X_n; t)` as a fresh series.
pub fn hl_expand(lambda: &Partition, n: usize, t: &Rational, cutoff: u32) -> TruncSeries {
    HlExpander::new(n, cutoff, t.clone()).expand(lambda, n)
}

/// Symplectic character `sp_λ(y₁,ȳ₁,..,y_n,ȳ_n)` via the Weyl determinant
/// `det[y_i^{λ_j−j+n+1} − y_i^{−(λ_j−j+n+1)}]` over
/// `∏(y_i−ȳ_i)·∏_{i<j}(y_i−y_j)(1−ȳ_iȳ_j)`.
pub fn sp_eval(lambda: &Partition, y: &[Rational]) -> Result<Rational, String> {
    let n = y.len();
    if lambda.len() > n {
        return Err("partition longer than variable count".into());
    }
    if n == 0 {
        return Ok(if lambda.is_empty() {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    for v in y {
        if v.is_zero() || *v == Rational::one() || *v == -Rational::one() {
            return Err("symplectic evaluation needs y ∉ {0, ±1}".into());
        }
    }
    let mut denom = Rational::one();
    for i in 0..n {
        denom *= y[i].clone() - y[i].recip();
        for j in i + 1..n {
            if y[i] == y[j] || (y[i].clone() * y[j].clone()) == Rational::one() {
                return Err("degenerate symplectic sample".into());
            }
            denom *= (y[i].clone() - y[j].clone())
                * (Rational::one() - y[i].recip() * y[j].recip());
        }
    }
    let m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = lambda.part(j + 1) as i64 - (j as i64 + 1) + n as i64 + 1;
                    pow_i(&y[i], e) - pow_i(&y[i], -e)
                })
                .collect()
        })
        .collect();
    Ok(det(&m) / denom)
}

/// Symplectic character by the restricted tableau sum: interlacing chains
/// `∅ = λ̄⁽⁰⁾ ≺ λ⁽¹⁾ ≺ λ̄⁽¹⁾ ≺ … ≺ λ⁽ⁿ⁾ ≺ λ̄⁽ⁿ⁾ = λ` with `ℓ(λ̄⁽ⁱ⁾) ≤ i`,
/// each weighted `∏ y_k^{2|λ⁽ᵏ⁾|−|λ̄⁽ᵏ⁾|−|λ̄⁽ᵏ⁻¹⁾|}`.
pub fn sp_tableau_eval(lambda: &Partition, y: &[Rational]) -> Rational {
    let n = y.len();
    assert!(lambda.len() <= n);
    let mut total = Rational::zero();
    // Walk the chain from the top: λ̄⁽ⁿ⁾ = λ down to λ̄⁽⁰⁾ = ∅.
    fn rec(
        bar_k: &Partition,
        k: usize,
        y: &[Rational],
        weight: Rational,
        total: &mut Rational,
    ) {
        if k == 0 {
            if bar_k.is_empty() {
                *total += weight;
            }
            return;
        }
        // λ⁽ᵏ⁾ ≺ λ̄⁽ᵏ⁾, then λ̄⁽ᵏ⁻¹⁾ ≺ λ⁽ᵏ⁾ with ℓ(λ̄⁽ᵏ⁻¹⁾) ≤ k−1.
        for lam_k in interlacing_predecessors(bar_k) {
            for bar_prev in interlacing_predecessors(&lam_k) {
                if bar_prev.len() > k - 1 {
                    continue;
                }
                let e = 2 * lam_k.weight() as i64 - bar_k.weight() as i64 - bar_prev.weight() as i64;
                let w = weight.clone() * pow_i(&y[k - 1], e);
                rec(&bar_prev, k - 1, y, w, total);
            }
        }
    }
    rec(lambda, n, y, Rational::one(), &mut total);
    total
}

/// Hyperoctahedrally symmetric Hall–Littlewood polynomial `K_λ(y;t)`:
/// `(1/v_λ(t)) Σ_{ω∈W(BC_n)} ω(∏ y_i^{λ_i}/(1−ȳ_i²)
///  ∏_{i<j} (y_i−t·y_j)(1−t·ȳ_iȳ_j)/((y_i−y_j)(1−ȳ_iȳ_j)))`,
/// summing over all `2ⁿ·n!` signed permutations.
pub fn bchl_eval(lambda: &Partition, y: &[Rational], t: &Rational) -> Result<Rational, String> {
    let n = y.len();
    if lambda.len() > n {
        return Err("partition longer than variable count".into());
    }
    for i in 0..n {
        if y[i].is_zero() || pow(&y[i], 2) == Rational::one() {
            return Err("degenerate sample: y_i ∈ {0, ±1}".into());
        }
        for j in i + 1..n {
            if y[i] == y[j] || y[i] == y[j].recip() {
                return Err("degenerate sample: y_i = y_j^{±1}".into());
            }
        }
    }
    let mut sum = Rational::zero();
    for perm in (0..n).permutations(n) {
        for signs in 0..(1u32 << n) {
            let w: Vec<Rational> = (0..n)
                .map(|i| {
                    let v = y[perm[i]].clone();
                    if signs & (1 << i) != 0 {
                        v.recip()
                    } else {
                        v
                    }
                })
                .collect();
            let mut term = Rational::one();
            for (i, wi) in w.iter().enumerate() {
                term *= pow(wi, lambda.part(i + 1))
                    / (Rational::one() - pow(&wi.recip(), 2));
            }
            for i in 0..n {
                for j in i + 1..n {
                    let (wi, wj) = (&w[i], &w[j]);
                    let (bi, bj) = (wi.recip(), wj.recip());
                    term *= (wi.clone() - t.clone() * wj.clone())
                        * (Rational::one() - t.clone() * bi.clone() * bj.clone())
                        / ((wi.clone() - wj.clone())
                            * (Rational::one() - bi * bj));
                }
            }
            sum += term;
        }
    }
    Ok(sum / v_coeff(lambda, t, n))
}

/// Complete symmetric function `h_k(x)`; zero for `k < 0`, one for `k = 0`.
pub fn h_complete_eval(k: i64, x: &[Rational]) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    // DP over variables: h with the first i variables.
    let k = k as usize;
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for xi in x {
        // h_new[d] = h_old[d] + x_i·h_new[d−1].
        for d in 1..=k {
            let add = xi.clone() * h[d - 1].clone();
            h[d] += add;
        }
    }
    h[k].clone()
}

/// Expands a symmetric truncated series in the Hall–Littlewood basis:
/// returns `c_λ` with `f = Σ_{|λ| ≤ D} c_λ·P_λ(X;t)`.
///
/// `P_λ` is unitriangular against monomials in dominance order, so within
/// each degree the coefficients are read off in a dominance-compatible
/// (descending graded-lexicographic) order, subtracting as we go.
pub fn expand_in_hl_basis(
    f: &TruncSeries,
    n: usize,
    t: &Rational,
) -> Result<Vec<(Partition, Rational)>, String> {
    if f.vars() != n {
        return Err("series variable count does not match n".into());
    }
    if !f.is_symmetric() {
        return Err("series is not symmetric in its variables".into());
    }
    let cutoff = f.cutoff();
    let mut expander = HlExpander::new(n, cutoff, t.clone());
    let mut rem = f.clone();
    let mut out = Vec::new();
    // enumerate_partitions is graded then lex-descending, which refines
    // dominance within each degree.
    for lambda in enumerate_partitions(cutoff, n) {
        let mut exps = vec![0u32; n];
        for (i, &p) in lambda.parts().iter().enumerate() {
            exps[i] = p;
        }
        let c = rem.coeff(&exps);
        if !c.is_zero() {
            let p = expander.expand(&lambda, n);
            rem = rem.sub(&p.scale(&c));
            out.push((lambda, c));
        }
    }
    if !rem.is_zero() {
        return Err("residual after Hall-Littlewood expansion; series not symmetric?".into());
    }
    Ok(out)
}

/// The Cauchy-type kernel whose Hall–Littlewood expansion defines `K̃_λ`:
/// `∏_{i≤m,j≤ℓ} (1−t·X_i z_j)/(1−X_i z_j) ·
///  ∏_{i<j≤m} (1−X_iX_j)/(1−t·X_iX_j) ·
///  ∏_{i≤m} (1−t₀X_i)(1−t₁X_i)(1−t₂X_i)(1−t₃X_i)/(1−t·X_i²)`
/// as a truncated series in `X₁..X_m`.
pub fn ktilde_kernel(
    z: &[Rational],
    t: &Rational,
    t0123: &[Rational; 4],
    m: usize,
    cutoff: u32,
) -> TruncSeries {
    let mut acc = TruncSeries::one(m, cutoff);
    for i in 0..m {
        for zj in z {
            acc = acc.mul(&TruncSeries::one_minus(&(t.clone() * zj.clone()), i, m, cutoff));
            acc = acc.mul(&TruncSeries::geom(zj, i, m, cutoff));
        }
        for tk in t0123 {
            acc = acc.mul(&TruncSeries::one_minus(tk, i, m, cutoff));
        }
        acc = acc.mul(&TruncSeries::one_minus_pair(t, i, i, m, cutoff).invert_unit());
    }
    for i in 0..m {
        for j in i + 1..m {
            acc = acc.mul(&TruncSeries::one_minus_pair(&Rational::one(), i, j, m, cutoff));
            acc = acc.mul(&TruncSeries::one_minus_pair(t, i, j, m, cutoff).invert_unit());
        }
    }
    acc
}

/// `K̃_λ` values extracted from the kernel: expands the kernel in the
/// Hall–Littlewood basis and divides each coefficient by `b_λ(t)` (the
/// kernel pairs `K̃_λ` with the `Q`-normalization `b_λ·P_λ`).
///
/// Self-validates by recomputing at cutoff `D+1` and requiring agreement on
/// every reported partition.
pub fn ktilde_coeffs(
    z: &[Rational],
    t: &Rational,
    t0123: &[Rational; 4],
    m: usize,
    cutoff: u32,
) -> Result<Vec<(Partition, Rational)>, String> {
    let at = |d: u32| -> Result<Vec<(Partition, Rational)>, String> {
        let kernel = ktilde_kernel(z, t, t0123, m, d);
        let coeffs = expand_in_hl_basis(&kernel, m, t)?;
        Ok(coeffs
            .into_iter()
            .filter(|(lam, _)| lam.weight() <= cutoff)
            .map(|(lam, c)| {
                let b = b_coeff(&lam, t, 0);
                (lam, c / b)
            })
            .collect())
    };
    let base = at(cutoff)?;
    let check = at(cutoff + 1)?;
    let lookup: HashMap<&Partition, &Rational> = check.iter().map(|(l, c)| (l, c)).collect();
    for (lam, c) in &base {
        match lookup.get(lam) {
            Some(&c2) if c2 == c => {}
            _ => {
                return Err(format!(
                    "kernel expansion unstable under cutoff increase at {lam}"
                ))
            }
        }
    }
    Ok(base)
}
