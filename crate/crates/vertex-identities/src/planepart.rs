//! Plane partitions as interlacing slice sequences, path-depth statistics,
//! and the left-hand sides of the combinatorial generating series.
//!
//! Contents:
//! * [`PlanePartition`] — a weakly decreasing matrix with diagonal-slice
//!   decomposition and text/JSON serialization;
//! * [`path_stats`] — connected components per height, depth of every
//!   positive entry, maximal equal-depth paths, height-0 refinements for a
//!   square framing, and diagonal-crossing splits for symmetric matrices;
//! * enumerators for plain, symmetric, and symplectic (two-sided
//!   interlacing chain) plane partitions;
//! * [`gs_lhs`] — exact truncated assembly of each generating-series LHS,
//!   as a series in the row variables (or in `q`).

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{pow, pow_i, Rational, TruncSeries};
use crate::partitions::{interlacing_predecessors, Partition};

/// A plane partition: nonnegative integers weakly decreasing along rows
/// and columns. Stored as support rows with trailing zeros trimmed (the
/// support of a valid matrix is a Young-diagram shape).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlanePartition {
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    /// Validates weak decrease along rows and columns; trailing zeros and
    /// empty rows are trimmed.
    pub fn new(entries: Vec<Vec<u32>>) -> Result<Self, String> {
        let mut rows: Vec<Vec<u32>> = entries
            .into_iter()
            .map(|mut r| {
                while r.last() == Some(&0) {
                    r.pop();
                }
                r
            })
            .collect();
        while rows.last().map(|r| r.is_empty()) == Some(true) {
            rows.pop();
        }
        let pp = PlanePartition { rows };
        for i in 1..=pp.num_rows() {
            for j in 1..=pp.row_len(i) {
                if pp.entry(i, j) == 0 {
                    return Err("interior zero entry in support".into());
                }
                if j > 1 && pp.entry(i, j) > pp.entry(i, j - 1) {
                    return Err("row not weakly decreasing".into());
                }
                if i > 1 && pp.entry(i, j) > pp.entry(i - 1, j) {
                    return Err("column not weakly decreasing".into());
                }
            }
        }
        Ok(pp)
    }

    pub fn empty() -> Self {
        PlanePartition { rows: Vec::new() }
    }

    /// Entry at 1-based `(i, j)`; zero outside the support.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 {
            return 0;
        }
        self.rows
            .get(i - 1)
            .and_then(|r| r.get(j - 1))
            .copied()
            .unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map(|r| r.len()).unwrap_or(0)
    }

    fn row_len(&self, i: usize) -> usize {
        self.rows.get(i - 1).map(|r| r.len()).unwrap_or(0)
    }

    /// `|π| = Σ π(i,j)`.
    pub fn weight(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.num_rows().max(self.num_cols());
        (1..=n).all(|i| (i + 1..=n).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// The main-diagonal slice `(π(1,1), π(2,2), …)`.
    pub fn central_slice(&self) -> Partition {
        let n = self.num_rows().min(self.num_cols());
        Partition::new((1..=n).map(|k| self.entry(k, k)).collect())
    }

    /// Diagonal slices for an `m×n` framing: the lower chain
    /// `λ⁽¹⁾ ≺ … ≺ λ⁽ᵐ⁾` (λ⁽ⁱ⁾ starts at row `m−i+1`, column 1) and the
    /// upper chain `μ⁽¹⁾ ≺ … ≺ μ⁽ⁿ⁾`, with `λ⁽ᵐ⁾ = μ⁽ⁿ⁾` the central slice.
    pub fn slices(&self, m: usize, n: usize) -> Result<(Vec<Partition>, Vec<Partition>), String> {
        if self.num_rows() > m || self.num_cols() > n {
            return Err("framing smaller than support".into());
        }
        let lam = (1..=m)
            .map(|i| {
                Partition::new(
                    (1..=n.min(i))
                        .map(|k| self.entry(m - i + k, k))
                        .collect(),
                )
            })
            .collect();
        let mu = (1..=n)
            .map(|j| {
                Partition::new(
                    (1..=m.min(j))
                        .map(|k| self.entry(k, n - j + k))
                        .collect(),
                )
            })
            .collect();
        Ok((lam, mu))
    }

    /// Rebuilds the matrix from its two slice chains (inverse of
    /// [`PlanePartition::slices`]).
    pub fn from_slices(m: usize, n: usize, lam: &[Partition], mu: &[Partition]) -> Result<Self, String> {
        if lam.len() != m || mu.len() != n {
            return Err("slice chain lengths must equal the framing".into());
        }
        if m > 0 && n > 0 && lam[m - 1] != mu[n - 1] {
            return Err("central slices disagree".into());
        }
        let mut rows = vec![vec![0u32; n]; m];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let (i, j) = (i + 1, j + 1);
                *cell = if i >= j {
                    lam[m - i + j - 1].part(j)
                } else {
                    mu[n - j + i - 1].part(i)
                };
            }
        }
        PlanePartition::new(rows)
    }

    /// Plain text form: one row per line, entries space-separated; the
    /// empty plane partition is a single blank line.
    pub fn to_text(&self) -> String {
        if self.rows.is_empty() {
            return "\n".into();
        }
        let mut s = String::new();
        let n = self.num_cols();
        for i in 1..=self.num_rows() {
            let row: Vec<String> = (1..=n).map(|j| self.entry(i, j).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(s: &str) -> Result<Self, String> {
        let mut rows = Vec::new();
        for line in s.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let row: Result<Vec<u32>, _> = line.split_whitespace().map(|w| w.parse()).collect();
            rows.push(row.map_err(|e| format!("bad entry: {e}"))?);
        }
        PlanePartition::new(rows)
    }
}

/// Path counts by depth. `by_depth` is `p_d` (height > 0 paths);
/// `by_depth_framed` is `p̃_d` (adds height-0 paths, square framing only).
/// For symmetric matrices, `off_diagonal_pairs` is `p°_d` (mirror pairs of
/// non-crossing paths), `diagonal` is `p•_d` (diagonal-crossing paths) and
/// `diagonal_framed` is `p̃•_d` (crossing paths including height 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStats {
    pub by_depth: BTreeMap<u32, u32>,
    pub by_depth_framed: Option<BTreeMap<u32, u32>>,
    pub off_diagonal_pairs: Option<BTreeMap<u32, u32>>,
    pub diagonal: Option<BTreeMap<u32, u32>>,
    pub diagonal_framed: Option<BTreeMap<u32, u32>>,
}

/// Computes path statistics: connected components per height level with
/// 4-adjacency on equal entries; the depth of a positive entry is the
/// least `d ≥ 1` with `π(i,j)` and `π(i+d,j+d)` in different components;
/// paths are maximal connected equal-depth subsets of a component.
///
/// With a square `framing` n×n (which must cover the support), height-0
/// paths are added: there is one at depth `d` exactly when
/// `π(n−d+1, n−d+1) = 0`, since a zero appears on the hook
/// `max(i,j) = n−d+1` iff its corner vanishes. Diagonal-crossing splits
/// are computed when the matrix is symmetric.
pub fn path_stats(pp: &PlanePartition, framing: Option<usize>) -> Result<PathStats, String> {
    let rows = pp.num_rows();
    let cols = pp.num_cols();
    if let Some(n) = framing {
        if rows > n || cols > n {
            return Err("framing smaller than support".into());
        }
    }
    // Component labels for positive cells.
    let mut comp = vec![vec![usize::MAX; cols]; rows];
    let mut ncomp = 0usize;
    for i in 0..rows {
        for j in 0..cols {
            if pp.entry(i + 1, j + 1) == 0 || comp[i][j] != usize::MAX {
                continue;
            }
            let h = pp.entry(i + 1, j + 1);
            let mut stack = vec![(i, j)];
            comp[i][j] = ncomp;
            while let Some((a, b)) = stack.pop() {
                let push = |x: usize, y: usize, comp: &mut Vec<Vec<usize>>, stack: &mut Vec<(usize, usize)>| {
                    if x < rows && y < cols && pp.entry(x + 1, y + 1) == h && comp[x][y] == usize::MAX {
                        comp[x][y] = ncomp;
                        stack.push((x, y));
                    }
                };
                if a > 0 {
                    push(a - 1, b, &mut comp, &mut stack);
                }
                if b > 0 {
                    push(a, b - 1, &mut comp, &mut stack);
                }
                push(a + 1, b, &mut comp, &mut stack);
                push(a, b + 1, &mut comp, &mut stack);
            }
            ncomp += 1;
        }
    }
    let comp_at = |i: usize, j: usize| -> Option<usize> {
        if i < rows && j < cols && pp.entry(i + 1, j + 1) > 0 {
            Some(comp[i][j])
        } else {
            None
        }
    };
    // Depth of each positive cell.
    let mut depth = vec![vec![0u32; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            if pp.entry(i + 1, j + 1) == 0 {
                continue;
            }
            let mut d = 1;
            while comp_at(i + d, j + d) == Some(comp[i][j]) {
                d += 1;
            }
            depth[i][j] = d as u32;
        }
    }
    // Paths: maximal connected equal-depth subsets of each component.
    let mut seen = vec![vec![false; cols]; rows];
    let mut by_depth: BTreeMap<u32, u32> = BTreeMap::new();
    let mut crossing: BTreeMap<u32, u32> = BTreeMap::new();
    let mut noncrossing: BTreeMap<u32, u32> = BTreeMap::new();
    for i in 0..rows {
        for j in 0..cols {
            if pp.entry(i + 1, j + 1) == 0 || seen[i][j] {
                continue;
            }
            let (c, d) = (comp[i][j], depth[i][j]);
            let mut stack = vec![(i, j)];
            seen[i][j] = true;
            let mut touches_diag = i == j;
            while let Some((a, b)) = stack.pop() {
                if a == b {
                    touches_diag = true;
                }
                let mut neigh = Vec::new();
                if a > 0 {
                    neigh.push((a - 1, b));
                }
                if b > 0 {
                    neigh.push((a, b - 1));
                }
                neigh.push((a + 1, b));
                neigh.push((a, b + 1));
                for (x, y) in neigh {
                    if x < rows
                        && y < cols
                        && !seen[x][y]
                        && comp_at(x, y) == Some(c)
                        && depth[x][y] == d
                    {
                        seen[x][y] = true;
                        stack.push((x, y));
                    }
                }
            }
            *by_depth.entry(d).or_insert(0) += 1;
            if touches_diag {
                *crossing.entry(d).or_insert(0) += 1;
            } else {
                *noncrossing.entry(d).or_insert(0) += 1;
            }
        }
    }
    let by_depth_framed = framing.map(|n| {
        let mut m = by_depth.clone();
        for d in 1..=n {
            let k = n - d + 1;
            if pp.entry(k, k) == 0 {
                *m.entry(d as u32).or_insert(0) += 1;
            }
        }
        m
    });
    let (off_diagonal_pairs, diagonal, diagonal_framed) = if pp.is_symmetric() {
        let pairs = noncrossing
            .iter()
            .map(|(&d, &c)| {
                debug_assert!(c % 2 == 0, "non-crossing paths pair up for symmetric input");
                (d, c / 2)
            })
            .collect();
        let framed = framing.map(|n| {
            let mut m = crossing.clone();
            for d in 1..=n {
                let k = n - d + 1;
                if pp.entry(k, k) == 0 {
                    *m.entry(d as u32).or_insert(0) += 1;
                }
            }
            m
        });
        (Some(pairs), Some(crossing), framed)
    } else {
        (None, None, None)
    };
    Ok(PathStats {
        by_depth,
        by_depth_framed,
        off_diagonal_pairs,
        diagonal,
        diagonal_framed,
    })
}

/// `∏_d (1−t^d)^{count(d)}`.
pub fn t_weight(counts: &BTreeMap<u32, u32>, t: &Rational) -> Rational {
    let mut w = Rational::one();
    for (&d, &c) in counts {
        w *= pow(&(Rational::one() - pow(t, d)), c);
    }
    w
}

/// The weight a plane partition picks up term-by-term inside the
/// Hall–Littlewood Cauchy sum: `b_κ(t)` for the central slice κ times the
/// ψ branching coefficients along both interlacing halves. Equals the
/// path weight `∏(1−t^d)^{p_d}`.
pub fn psi_chain_weight(
    pp: &PlanePartition,
    m: usize,
    n: usize,
    t: &Rational,
) -> Result<Rational, String> {
    let (lam, mu) = pp.slices(m, n)?;
    let central = lam.last().cloned().unwrap_or_else(Partition::empty);
    let mut w = crate::partitions::b_coeff(&central, t, 0);
    for chain in [&lam, &mu] {
        let mut prev = Partition::empty();
        for p in chain.iter() {
            w *= crate::partitions::psi_coeff(p, &prev, t)?;
            prev = p.clone();
        }
    }
    Ok(w)
}

/// All plane partitions with support inside an `m×n` box and `|π| ≤
/// maxVolume`, each exactly once.
pub fn enumerate_pp(m: usize, n: usize, max_volume: u32) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    fn rec(
        m: usize,
        n: usize,
        budget: u32,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<PlanePartition>,
    ) {
        out.push(PlanePartition::new(rows.clone()).expect("constructed valid"));
        if rows.len() == m {
            return;
        }
        // Next row: weakly decreasing, dominated entrywise by the previous
        // row, nonempty (empty rows end the enumeration to avoid dups).
        let prev: Vec<u32> = match rows.last() {
            Some(r) => {
                let mut p = r.clone();
                p.resize(n, 0);
                p
            }
            None => vec![budget; n],
        };
        let mut row: Vec<u32> = Vec::new();
        fn build(
            m: usize,
            n: usize,
            budget: u32,
            prev: &[u32],
            row: &mut Vec<u32>,
            rows: &mut Vec<Vec<u32>>,
            out: &mut Vec<PlanePartition>,
        ) {
            if !row.is_empty() {
                rows.push(row.clone());
                rec(m, n, budget - row.iter().sum::<u32>(), rows, out);
                rows.pop();
            }
            let j = row.len();
            if j == n {
                return;
            }
            let cap = prev[j]
                .min(row.last().copied().unwrap_or(u32::MAX))
                .min(budget - row.iter().sum::<u32>());
            for v in 1..=cap {
                row.push(v);
                build(m, n, budget, prev, row, rows, out);
                row.pop();
            }
        }
        build(m, n, budget, &prev, &mut row, rows, out);
    }
    rec(m, n, max_volume, &mut rows, &mut out);
    out
}

/// Central-slice condition for symmetric plane partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralCondition {
    /// No condition.
    None,
    /// Every central-slice part is even.
    EvenCentral,
    /// The central slice has even column multiplicities:
    /// `π(2k−1,2k−1) = π(2k,2k)` for all k.
    EvenColumnsCentral,
}

fn central_ok(kappa: &Partition, cond: CentralCondition) -> bool {
    match cond {
        CentralCondition::None => true,
        CentralCondition::EvenCentral => kappa.is_even(),
        CentralCondition::EvenColumnsCentral => kappa.has_even_columns(),
    }
}

/// All ascending interlacing chains `∅ ≺ λ⁽¹⁾ ≺ … ≺ λ⁽ᵏ⁾ = top`.
pub fn chains_to(top: &Partition, k: usize) -> Vec<Vec<Partition>> {
    if k == 0 {
        return if top.is_empty() {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for prev in interlacing_predecessors(top) {
        for mut chain in chains_to(&prev, k - 1) {
            chain.push(top.clone());
            out.push(chain);
        }
    }
    out
}

/// All symmetric plane partitions in a `size×size` box with `|π| ≤
/// maxVolume` satisfying the central condition.
pub fn enumerate_symmetric_pp(
    size: usize,
    max_volume: u32,
    cond: CentralCondition,
) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    for kappa in crate::partitions::enumerate_partitions(max_volume, size) {
        if !central_ok(&kappa, cond) {
            continue;
        }
        for chain in chains_to(&kappa, size) {
            let volume =
                2 * chain[..size.saturating_sub(1)].iter().map(|p| p.weight()).sum::<u32>()
                    + kappa.weight();
            if volume > max_volume {
                continue;
            }
            let pp = PlanePartition::from_slices(size, size, &chain, &chain)
                .expect("mirrored chains are consistent");
            out.push(pp);
        }
    }
    out
}

/// A symplectic plane partition: the two-sided chain
/// `∅ ≺ λ⁽¹⁾ ≺ … ≺ λ⁽ᵐ⁾ = μ̄⁽ⁿ⁾ ≻ μ⁽ⁿ⁾ ≻ μ̄⁽ⁿ⁻¹⁾ ≻ … ≻ μ⁽¹⁾ ≻ μ̄⁽⁰⁾ = ∅`
/// with `ℓ(μ̄⁽ⁱ⁾) ≤ i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticChain {
    /// `λ⁽¹⁾..λ⁽ᵐ⁾` (ascending; last entry is the central slice).
    pub lam: Vec<Partition>,
    /// `μ⁽¹⁾..μ⁽ⁿ⁾` (indexed from the outside in).
    pub mu: Vec<Partition>,
    /// `μ̄⁽⁰⁾..μ̄⁽ⁿ⁾` (so `mubar[n]` is the central slice).
    pub mubar: Vec<Partition>,
}

impl SymplecticChain {
    pub fn central(&self) -> &Partition {
        &self.mubar[self.mubar.len() - 1]
    }

    /// Exponent of `x_i` (1-based): `|λ⁽ⁱ⁾| − |λ⁽ⁱ⁻¹⁾|`.
    pub fn x_exponent(&self, i: usize) -> u32 {
        let cur = self.lam[i - 1].weight();
        let prev = if i >= 2 { self.lam[i - 2].weight() } else { 0 };
        cur - prev
    }

    /// Exponent of `y_j` (1-based): `2|μ⁽ʲ⁾| − |μ̄⁽ʲ⁾| − |μ̄⁽ʲ⁻¹⁾|`.
    pub fn y_exponent(&self, j: usize) -> i64 {
        2 * self.mu[j - 1].weight() as i64
            - self.mubar[j].weight() as i64
            - self.mubar[j - 1].weight() as i64
    }
}

/// All symplectic chains with `m` left slices, `n` right pairs, and
/// central weight at most `maxCentralWeight`.
pub fn enumerate_symplectic_pp(m: usize, n: usize, max_central_weight: u32) -> Vec<SymplecticChain> {
    let mut out = Vec::new();
    for kappa in crate::partitions::enumerate_partitions(max_central_weight, m.min(n)) {
        let left = chains_to(&kappa, m);
        if left.is_empty() {
            continue;
        }
        // Right side: μ̄⁽ⁿ⁾ = κ ≻ μ⁽ⁿ⁾ ≻ μ̄⁽ⁿ⁻¹⁾ ≻ …, with ℓ(μ̄⁽ⁱ⁾) ≤ i.
        let mut rights: Vec<(Vec<Partition>, Vec<Partition>)> = Vec::new();
        fn rec(
            bar_k: &Partition,
            k: usize,
            mu_acc: &mut Vec<Partition>,
            bar_acc: &mut Vec<Partition>,
            rights: &mut Vec<(Vec<Partition>, Vec<Partition>)>,
        ) {
            if k == 0 {
                if bar_k.is_empty() {
                    let mut mu = mu_acc.clone();
                    let mut bar = bar_acc.clone();
                    mu.reverse();
                    bar.reverse();
                    rights.push((mu, bar));
                }
                return;
            }
            for mu_k in interlacing_predecessors(bar_k) {
                for bar_prev in interlacing_predecessors(&mu_k) {
                    if bar_prev.len() > k - 1 {
                        continue;
                    }
                    mu_acc.push(mu_k.clone());
                    bar_acc.push(bar_prev.clone());
                    rec(&bar_prev, k - 1, mu_acc, bar_acc, rights);
                    bar_acc.pop();
                    mu_acc.pop();
                }
            }
        }
        let mut bar_acc = vec![kappa.clone()];
        rec(&kappa, n, &mut Vec::new(), &mut bar_acc, &mut rights);
        for chain in &left {
            for (mu, bar) in &rights {
                out.push(SymplecticChain {
                    lam: chain.clone(),
                    mu: mu.clone(),
                    mubar: bar.clone(),
                });
            }
        }
    }
    out
}

/// Parameters for [`gs_lhs`]. Series ignore the fields they do not use.
pub struct GsParams {
    pub m: usize,
    pub n: usize,
    /// Truncation degree in the formal variables (or in `q`).
    pub degree: u32,
    pub t: Rational,
    /// Sampled column rapidities for the two-sided series.
    pub y: Vec<Rational>,
}

/// Assembles the left-hand side of a generating series exactly, truncated:
/// a series in the row variables `x_1..` (or in `q` for the volume
/// series). Supported ids: `vol-pp`, `macmahon`, `vuletic-gs`, `hl-pp-gs`,
/// `pp-asm-gs`, `s-little3-pp-gs`, `hl-little3-pp-gs`, `sym-pp-osasm`,
/// `symp-cauch-pp`, `symp-pp-uasm`, `symp-pp-vol`.
pub fn gs_lhs(series: &str, p: &GsParams) -> Result<TruncSeries, String> {
    match series {
        "vol-pp" => {
            let mut acc = TruncSeries::zero(1, p.degree);
            for pp in enumerate_pp(p.m, p.n, p.degree) {
                acc = acc.add(&TruncSeries::monomial(
                    vec![pp.weight()],
                    Rational::one(),
                    1,
                    p.degree,
                ));
            }
            Ok(acc)
        }
        "macmahon" | "vuletic-gs" => {
            let d = p.degree as usize;
            let mut acc = TruncSeries::zero(1, p.degree);
            for pp in enumerate_pp(d, d, p.degree) {
                let c = if series == "vuletic-gs" {
                    let st = path_stats(&pp, None)?;
                    t_weight(&st.by_depth, &p.t)
                } else {
                    Rational::one()
                };
                acc = acc.add(&TruncSeries::monomial(vec![pp.weight()], c, 1, p.degree));
            }
            Ok(acc)
        }
        "hl-pp-gs" | "pp-asm-gs" => {
            let (m, n) = if series == "pp-asm-gs" {
                (p.n, p.n)
            } else {
                (p.m, p.n)
            };
            if p.y.len() != n {
                return Err("need n sampled y values".into());
            }
            let mut acc = TruncSeries::zero(m, p.degree);
            for kappa in crate::partitions::enumerate_partitions(p.degree, m.min(n)) {
                for lchain in chains_to(&kappa, m) {
                    for mchain in chains_to(&kappa, n) {
                        let pp = PlanePartition::from_slices(m, n, &lchain, &mchain)?;
                        let c = if series == "pp-asm-gs" {
                            let st = path_stats(&pp, Some(n))?;
                            t_weight(st.by_depth_framed.as_ref().expect("framed"), &p.t)
                        } else {
                            let st = path_stats(&pp, None)?;
                            t_weight(&st.by_depth, &p.t)
                        };
                        let mut coeff = c;
                        let mut prev = 0;
                        for (j, mu) in mchain.iter().enumerate() {
                            coeff *= pow(&p.y[j], mu.weight() - prev);
                            prev = mu.weight();
                        }
                        let mut exps = vec![0u32; m];
                        let mut prev = 0;
                        for (i, lam) in lchain.iter().enumerate() {
                            exps[i] = lam.weight() - prev;
                            prev = lam.weight();
                        }
                        acc = acc.add(&TruncSeries::monomial(exps, coeff, m, p.degree));
                    }
                }
            }
            Ok(acc)
        }
        "s-little3-pp-gs" | "hl-little3-pp-gs" | "sym-pp-osasm" => {
            let n = p.n;
            let mut acc = TruncSeries::zero(n, p.degree);
            for kappa in crate::partitions::enumerate_partitions(p.degree, n) {
                if !kappa.has_even_columns() {
                    continue;
                }
                for chain in chains_to(&kappa, n) {
                    let pp = PlanePartition::from_slices(n, n, &chain, &chain)?;
                    let c = match series {
                        "s-little3-pp-gs" => Rational::one(),
                        "hl-little3-pp-gs" | "sym-pp-osasm" => {
                            let framing = if series == "sym-pp-osasm" { Some(n) } else { None };
                            let st = path_stats(&pp, framing)?;
                            let pairs = st.off_diagonal_pairs.as_ref().expect("symmetric");
                            let cross = if series == "sym-pp-osasm" {
                                st.diagonal_framed.as_ref().expect("framed symmetric")
                            } else {
                                st.diagonal.as_ref().expect("symmetric")
                            };
                            let odd_cross: BTreeMap<u32, u32> = cross
                                .iter()
                                .filter(|(&d, _)| d % 2 == 1)
                                .map(|(&d, &c)| (d, c))
                                .collect();
                            t_weight(pairs, &p.t) * t_weight(&odd_cross, &p.t)
                        }
                        _ => unreachable!(),
                    };
                    let mut exps = vec![0u32; n];
                    let mut prev = 0;
                    for (i, lam) in chain.iter().enumerate() {
                        exps[i] = lam.weight() - prev;
                        prev = lam.weight();
                    }
                    acc = acc.add(&TruncSeries::monomial(exps, c, n, p.degree));
                }
            }
            Ok(acc)
        }
        "symp-cauch-pp" | "symp-pp-uasm" => {
            let (m, n) = if series == "symp-pp-uasm" {
                (p.n, p.n)
            } else {
                (p.m, p.n)
            };
            if p.y.len() != n {
                return Err("need n sampled y values".into());
            }
            if p.y.iter().any(|v| v.is_zero()) {
                return Err("y values must be nonzero".into());
            }
            let mut acc = TruncSeries::zero(m, p.degree);
            for chain in enumerate_symplectic_pp(m, n, p.degree) {
                let mut coeff = Rational::one();
                if series == "symp-pp-uasm" {
                    let kappa = chain.central();
                    for i in 1..=n {
                        let e = kappa.part(i) as i64 - i as i64 + n as i64 + 1;
                        coeff *= Rational::one() - pow_i(&p.t, e);
                    }
                }
                for j in 1..=n {
                    coeff *= pow_i(&p.y[j - 1], chain.y_exponent(j));
                }
                let exps: Vec<u32> = (1..=m).map(|i| chain.x_exponent(i)).collect();
                acc = acc.add(&TruncSeries::monomial(exps, coeff, m, p.degree));
            }
            Ok(acc)
        }
        "symp-pp-vol" => Ok(symp_pp_vol_series(p.m, p.n, p.degree, p.degree / 2 + 1)),
        _ => Err(format!("unknown series id: {series}")),
    }
}

/// The volume specialization of the symplectic series as an integer-power
/// series in `p = q^{1/2}`, truncated at `p^degree`: substitutes
/// `x_i = p^{2(m−i)+3}`, `y_j = p` into the chain weights. Chains are cut
/// off by central weight (`max_central`); every chain of central weight c
/// contributes exponent ≥ 2c, so `max_central ≥ degree/2` is complete (the
/// caller may also confirm stability empirically by raising it).
pub fn symp_pp_vol_series(m: usize, n: usize, degree: u32, max_central: u32) -> TruncSeries {
    let mut acc = TruncSeries::zero(1, degree);
    for chain in enumerate_symplectic_pp(m, n, max_central) {
        let mut e: i64 = 0;
        for i in 1..=m {
            e += (2 * (m - i) as i64 + 3) * chain.x_exponent(i) as i64;
        }
        for j in 1..=n {
            e += chain.y_exponent(j);
        }
        assert!(e >= 0, "specialized weight exponents are nonnegative");
        if e as u32 <= degree {
            acc = acc.add(&TruncSeries::monomial(
                vec![e as u32],
                Rational::one(),
                1,
                degree,
            ));
        }
    }
    acc
}
