//! Truncated multivariate power series over `Rational`.
//!
//! A [`TruncSeries`] is a polynomial in formal variables `X_1..X_k` with all
//! terms of total degree above the cutoff `D` discarded. Arithmetic between
//! two series requires equal `(k, D)`. Exponent vectors are stored densely
//! (length-`k` arrays); zero coefficients are never stored.

use std::collections::BTreeMap;

use num::{One, Zero};

use super::{pow, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    vars: usize,
    cutoff: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TruncSeries {
    pub fn zero(vars: usize, cutoff: u32) -> Self {
        TruncSeries {
            vars,
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(c: Rational, vars: usize, cutoff: u32) -> Self {
        let mut s = Self::zero(vars, cutoff);
        if !c.is_zero() {
            s.terms.insert(vec![0; vars], c);
        }
        s
    }

    pub fn one(vars: usize, cutoff: u32) -> Self {
        Self::scalar(Rational::one(), vars, cutoff)
    }

    /// The variable `X_{index+1}` (zero-based `index`).
    pub fn var(index: usize, vars: usize, cutoff: u32) -> Self {
        Self::monomial(
            {
                let mut e = vec![0; vars];
                e[index] = 1;
                e
            },
            Rational::one(),
            vars,
            cutoff,
        )
    }

    /// A single term `c · X^exps` (dropped if beyond the cutoff).
    pub fn monomial(exps: Vec<u32>, c: Rational, vars: usize, cutoff: u32) -> Self {
        assert_eq!(exps.len(), vars);
        let mut s = Self::zero(vars, cutoff);
        if !c.is_zero() && exps.iter().sum::<u32>() <= cutoff {
            s.terms.insert(exps, c);
        }
        s
    }

    /// Truncated geometric series `Σ_{j=0}^{D} c^j X_varIndex^j`,
    /// i.e. the expansion of `1/(1 − c·X_varIndex)`.
    pub fn geom(c: &Rational, var_index: usize, vars: usize, cutoff: u32) -> Self {
        let mut s = Self::zero(vars, cutoff);
        let mut coeff = Rational::one();
        for j in 0..=cutoff {
            if coeff.is_zero() {
                break;
            }
            let mut e = vec![0; vars];
            e[var_index] = j;
            s.terms.insert(e, coeff.clone());
            coeff *= c;
        }
        s
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `X^exps` (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.vars])
    }

    fn assert_compatible(&self, rhs: &Self) {
        assert_eq!(
            (self.vars, self.cutoff),
            (rhs.vars, rhs.cutoff),
            "series shape mismatch"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars, self.cutoff);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut out = Self::zero(self.vars, self.cutoff);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &rhs.terms {
                let db: u32 = eb.iter().sum();
                if da + db > self.cutoff {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca * cb;
                let entry = out.terms.entry(e.clone()).or_insert_with(Rational::zero);
                *entry += c;
                if entry.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }

    /// Multiplies by the monomial `X^exps`, discarding overflowing terms.
    pub fn shift(&self, exps: &[u32]) -> Self {
        assert_eq!(exps.len(), self.vars);
        let d: u32 = exps.iter().sum();
        let mut out = Self::zero(self.vars, self.cutoff);
        for (e, c) in &self.terms {
            let de: u32 = e.iter().sum();
            if de + d > self.cutoff {
                continue;
            }
            let ne: Vec<u32> = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Inverse of a unit series (nonzero constant term), up to the cutoff.
    ///
    /// With `u = 1 − f/f₀` (no constant term), `1/f = (Σ_{j≤D} u^j)/f₀`;
    /// the sum terminates because `u` raises the minimal degree each power.
    pub fn invert_unit(&self) -> Self {
        let c0 = self.constant_term();
        assert!(!c0.is_zero(), "series has no constant term; not a unit");
        let f0_inv = c0.recip();
        let u = Self::one(self.vars, self.cutoff).sub(&self.scale(&f0_inv));
        let mut acc = Self::one(self.vars, self.cutoff);
        let mut upow = Self::one(self.vars, self.cutoff);
        for _ in 0..self.cutoff {
            upow = upow.mul(&u);
            if upow.is_zero() {
                break;
            }
            acc = acc.add(&upow);
        }
        acc.scale(&f0_inv)
    }

    /// Nonnegative power.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars, self.cutoff);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The polynomial `1 − c·X_i`.
    pub fn one_minus(c: &Rational, var_index: usize, vars: usize, cutoff: u32) -> Self {
        Self::one(vars, cutoff).sub(&Self::monomial(
            {
                let mut e = vec![0; vars];
                e[var_index] = 1;
                e
            },
            c.clone(),
            vars,
            cutoff,
        ))
    }

    /// The polynomial `1 − c·X_i·X_j` (with `i == j` giving `1 − c·X_i²`).
    pub fn one_minus_pair(c: &Rational, i: usize, j: usize, vars: usize, cutoff: u32) -> Self {
        let mut e = vec![0; vars];
        e[i] += 1;
        e[j] += 1;
        Self::one(vars, cutoff).sub(&Self::monomial(e, c.clone(), vars, cutoff))
    }

    /// Substitutes rational values for all variables (full evaluation).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                term *= pow(x, k);
            }
            acc += term;
        }
        acc
    }

    /// Applies a permutation of the variables: `X_i → X_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vars);
        let mut out = Self::zero(self.vars, self.cutoff);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.vars];
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] = k;
            }
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// True iff the series is fixed by every transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.vars.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..self.vars).collect();
            perm.swap(i, i + 1);
            if self.permute_vars(&perm) != *self {
                return false;
            }
        }
        true
    }

    /// Restricts to the terms of exact total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut out = Self::zero(self.vars, self.cutoff);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Re-truncates to a lower cutoff.
    pub fn truncate(&self, cutoff: u32) -> Self {
        let mut out = Self::zero(self.vars, cutoff);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() <= cutoff {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// First exponent vector (in key order) where two series differ, with
    /// both coefficients; `None` if equal.
    pub fn first_difference(&self, rhs: &Self) -> Option<(Vec<u32>, Rational, Rational)> {
        self.assert_compatible(rhs);
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().chain(rhs.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for e in keys {
            let a = self.coeff(e);
            let b = rhs.coeff(e);
            if a != b {
                return Some((e.clone(), a, b));
            }
        }
        None
    }
}

impl Ring for TruncSeries {
    fn ring_zero(&self) -> Self {
        Self::zero(self.vars, self.cutoff)
    }
    fn ring_one(&self) -> Self {
        Self::one(self.vars, self.cutoff)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
}
