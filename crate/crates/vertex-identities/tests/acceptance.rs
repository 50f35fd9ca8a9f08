//! Acceptance gate: one check per headline criterion, each reporting a
//! single pass/fail line. Run with `--nocapture` to see the lines.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vertex_identities::exact::{det, pfaffian, rat, Rational};
use vertex_identities::latticepf::{enumerate_lattice, DomainKind};
use vertex_identities::partitions::enumerate_partitions;
use vertex_identities::planepart::{enumerate_pp, path_stats, psi_chain_weight, t_weight};
use vertex_identities::symfunc::{hl_eval, hl_expand, sp_eval, sp_tableau_eval};
use vertex_identities::verify::{
    verify_identity, verify_pfaffian_cauchy_binet, Status, VerifyOptions,
};

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn new() -> Self {
        Gate { failures: Vec::new() }
    }

    fn criterion(&mut self, number: u32, label: &str, ok: bool, start: Instant, budget: Duration) {
        let elapsed = start.elapsed();
        let within = elapsed <= budget;
        let verdict = if ok && within { "pass" } else { "FAIL" };
        println!(
            "criterion {number:>2}: {verdict}  ({:>7} ms / budget {:>6} ms)  {label}",
            elapsed.as_millis(),
            budget.as_millis()
        );
        if !ok {
            self.failures.push(format!("criterion {number}: {label}"));
        } else if !within {
            self.failures
                .push(format!("criterion {number} over time budget: {label}"));
        }
    }
}

fn opts(n: usize, m: usize, d: u32, samples: usize, seed: u64) -> VerifyOptions {
    VerifyOptions {
        n: Some(n),
        m: Some(m),
        degree: Some(d),
        samples,
        seed,
        t: None,
    }
}

fn passes(id: &str, o: &VerifyOptions) -> bool {
    let r = verify_identity(id, o);
    if r.status != Status::Pass {
        eprintln!(
            "  {id} [{}]: {:?} {}",
            r.params,
            r.status,
            r.first_mismatch.unwrap_or_default()
        );
        false
    } else {
        true
    }
}

#[test]
fn acceptance() {
    let mut gate = Gate::new();

    // 1. Closed-form factorizations at rational points.
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=4 {
        ok &= passes("cauch-det", &opts(n, n, 0, 5, 17));
        ok &= passes("further-cauch-det", &opts(n, n, 0, 5, 17));
    }
    for n2 in [2, 4, 6] {
        ok &= passes("stem-pf", &opts(n2, n2, 0, 5, 17));
    }
    gate.criterion(1, "Cauchy determinant / double Cauchy / Pfaffian factorizations", ok, start, Duration::from_secs(1));

    // 2. The four refined identities in series mode.
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=3 {
        ok &= passes("thm1", &opts(n, n, 6, 3, 23));
        ok &= passes("thm2", &opts(n, n, 6, 3, 23));
    }
    for n in 1..=2 {
        ok &= passes("thm3", &opts(n, n, 6, 3, 23));
    }
    for n2 in [2, 4] {
        ok &= passes("thm4", &opts(n2, n2, 6, 3, 23));
    }
    gate.criterion(2, "refined Cauchy and Littlewood identities (series mode)", ok, start, Duration::from_secs(300));

    // 3. The four conjectured identities at the stated scales.
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=2 {
        ok &= passes("conj1", &opts(n, n, 6, 3, 29));
    }
    ok &= passes("conj1prime", &opts(2, 1, 5, 3, 29));
    for n2 in [2, 4] {
        ok &= passes("conj2", &opts(n2, n2, 6, 3, 29));
    }
    for nv in [1, 3] {
        ok &= passes("conj2prime", &opts(nv, nv, 5, 3, 29));
    }
    gate.criterion(3, "conjectured dressed determinant/Pfaffian identities", ok, start, Duration::from_secs(300));

    // 4. Lattice enumeration against every closed form, plus the
    //    configuration counts 1, 2, 7, 42, 429.
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=4 {
        ok &= passes("asm-lattice", &opts(n, n, 0, 3, 31));
    }
    for (m, n) in [(1, 2), (2, 3), (1, 3)] {
        ok &= passes("asm-partial-lattice", &opts(n, m, 0, 3, 31));
    }
    for n in 1..=3 {
        ok &= passes("uasm-lattice", &opts(n, n, 0, 3, 31));
    }
    ok &= passes("uasm-partial-lattice", &opts(2, 1, 0, 3, 31));
    for n2 in [2, 4, 6] {
        ok &= passes("osasm-lattice", &opts(n2, n2, 0, 3, 31));
    }
    for nv in [1, 3, 5] {
        ok &= passes("osasm-odd-lattice", &opts(nv, nv, 0, 3, 31));
    }
    let t = rat(1, 3);
    for (idx, want) in [1u64, 2, 7, 42, 429].iter().enumerate() {
        let n = idx + 1;
        let x: Vec<Rational> = (0..n).map(|i| rat(1, 2 + i as i64)).collect();
        let y: Vec<Rational> = (0..n).map(|j| rat(1, 11 + j as i64)).collect();
        let (count, _) = enumerate_lattice(DomainKind::Square, &x, &y, &t).unwrap();
        ok &= count == *want;
    }
    gate.criterion(4, "lattice enumeration vs closed forms; ASM counts 1,2,7,42,429", ok, start, Duration::from_secs(120));

    // 5. Plane-partition generating series.
    let start = Instant::now();
    let mut ok = true;
    ok &= passes("pp-asm-gs", &opts(2, 2, 6, 3, 37));
    ok &= passes("hl-pp-gs", &opts(2, 2, 6, 3, 37));
    ok &= passes("sym-pp-osasm", &opts(4, 4, 6, 3, 37));
    ok &= passes("symp-pp-uasm", &opts(2, 2, 6, 3, 37));
    ok &= passes("symp-cauch-pp", &opts(2, 2, 6, 3, 37));
    gate.criterion(5, "plane-partition generating series vs products/determinants/Pfaffians", ok, start, Duration::from_secs(300));

    // 6. MacMahon coefficients against the enumeration oracle, and the
    //    t-refined series at t = 1/3.
    let start = Instant::now();
    let mut ok = true;
    let mut hist = BTreeMap::new();
    for q in enumerate_pp(6, 6, 6) {
        *hist.entry(q.weight()).or_insert(0u64) += 1;
    }
    let oracle: Vec<u64> = (0..=6).map(|v| *hist.get(&v).unwrap_or(&0)).collect();
    ok &= oracle == [1, 1, 3, 6, 13, 24, 48];
    ok &= passes("macmahon", &opts(2, 2, 6, 1, 41));
    let third = VerifyOptions {
        degree: Some(6),
        t: Some(rat(1, 3)),
        ..VerifyOptions::default()
    };
    ok &= passes("vuletic-gs", &third);
    gate.criterion(6, "MacMahon tail 1,1,3,6,13,24,48 and the t=1/3 refinement", ok, start, Duration::from_secs(60));

    // 7. Difference operators: eigenrelations and the operator-applied
    //    Cauchy kernel.
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=3 {
        let mut o = opts(n, n, 4, 2, 43);
        o.degree = Some(4);
        ok &= passes("mac-eig", &o);
        ok &= passes("thm2-operator", &opts(n, n, 0, 3, 43));
    }
    gate.criterion(7, "difference-operator eigenrelations and kernel action", ok, start, Duration::from_secs(120));

    // 8. Kernel-defined coefficients degenerate to symplectic characters.
    let start = Instant::now();
    let mut o = opts(2, 2, 4, 3, 47);
    o.degree = Some(4);
    let ok = passes("ktilde-sp", &o);
    gate.criterion(8, "K-tilde degeneration to symplectic characters, |lambda| <= 4", ok, start, Duration::from_secs(120));

    // 9. Pfaffian analogue of the Cauchy-Binet expansion.
    let start = Instant::now();
    let mut ok = true;
    for m in [2usize, 4] {
        for big in [4usize, 5, 6] {
            for seed in 1..=5u64 {
                let r = verify_pfaffian_cauchy_binet(m, big, seed);
                ok &= r.status == Status::Pass;
            }
        }
    }
    gate.criterion(9, "Pfaffian expansion identity, m in {2,4}, M <= 6, 5 seeds", ok, start, Duration::from_secs(60));

    // 10. Oracle-equivalence property suites.
    let start = Instant::now();
    let mut ok = true;
    // hl_expand vs hl_eval.
    let t = rat(3, 8);
    let points = [
        vec![rat(1, 2), rat(1, 3), rat(2, 5)],
        vec![rat(-1, 2), rat(3, 4), rat(1, 7)],
        vec![rat(2, 1), rat(-1, 3), rat(5, 6)],
    ];
    for lam in enumerate_partitions(5, 3) {
        let e = hl_expand(&lam, 3, &t, 5);
        for x in &points {
            ok &= e.eval(x) == hl_eval(&lam, x, &t).unwrap();
        }
    }
    // sp Weyl determinant vs symplectic tableaux.
    for lam in enumerate_partitions(4, 2) {
        for y in [&[rat(2, 1), rat(3, 1)], &[rat(1, 2), rat(2, 3)]] {
            ok &= sp_eval(&lam, y).unwrap() == sp_tableau_eval(&lam, y);
        }
    }
    // Path weight vs branching weight.
    for q in enumerate_pp(3, 3, 7) {
        let s = path_stats(&q, None).unwrap();
        ok &= t_weight(&s.by_depth, &t) == psi_chain_weight(&q, 3, 3, &t).unwrap();
    }
    // Pf² = det on random antisymmetric matrices.
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for order in [2usize, 4, 6] {
        for _ in 0..5 {
            let mut m = vec![vec![Rational::zero(); order]; order];
            for i in 0..order {
                for j in i + 1..order {
                    let v = vertex_identities::verify::random_rational(&mut rng);
                    m[i][j] = v.clone();
                    m[j][i] = -v;
                }
            }
            let pf = pfaffian(&m).unwrap();
            ok &= pf.clone() * pf == det(&m);
        }
    }
    gate.criterion(10, "oracle-equivalence suites (branching, tableaux, path weights, Pf^2=det)", ok, start, Duration::from_secs(600));

    assert!(
        gate.failures.is_empty(),
        "acceptance failures:\n{}",
        gate.failures.join("\n")
    );
}
