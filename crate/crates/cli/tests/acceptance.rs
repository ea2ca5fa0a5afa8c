//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use sbdft::algorithms::{goertzel_bin, jco_bin, jco_goertzel_bin, naive_bin, BinSpec};
use sbdft::complexity::{measure, nominal_costs, CostPolicy};
use sbdft::cyclotomic::cyclotomic;
use sbdft::dtmf::{self, DtmfConfig};
use sbdft::numtheory::{divisors, factorize, totient};
use sbdft::polynomial::{int_mul, IntPoly};
use sbdft::streaming::stream_bin;
use sbdft::{design_filter, Algorithm, ComplexPoly};

const BIN: &str = env!("CARGO_BIN_EXE_sbdft");

/// Reference rows: (N, k, Goertzel, JCO, JCO-Goertzel, L).
const TABLE: [(usize, usize, u64, u64, u64, u64); 20] = [
    (12, 1, 12, 6, 4, 12),
    (12, 2, 2, 2, 2, 6),
    (12, 3, 2, 2, 2, 4),
    (12, 4, 2, 2, 2, 3),
    (32, 1, 32, 30, 16, 32),
    (32, 2, 32, 14, 8, 16),
    (32, 3, 32, 30, 16, 32),
    (32, 4, 32, 6, 4, 8),
    (48, 1, 48, 30, 16, 48),
    (48, 2, 48, 14, 8, 24),
    (48, 3, 48, 14, 8, 16),
    (48, 4, 48, 6, 4, 12),
    (83, 1, 83, 162, 82, 83),
    (83, 2, 83, 162, 82, 83),
    (83, 3, 83, 162, 82, 83),
    (83, 4, 83, 162, 82, 83),
    (120, 1, 120, 62, 32, 120),
    (120, 2, 120, 30, 16, 60),
    (120, 3, 120, 30, 16, 40),
    (120, 4, 120, 14, 8, 30),
];

const LENGTHS: [usize; 13] = [3, 4, 5, 8, 12, 16, 32, 48, 83, 105, 120, 128, 256];
const SIGNALS: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_table() -> Outcome {
    let out = Command::new(BIN).args(["table", "--paper", "--csv"]).output().map_err(|e| e.to_string())?;
    check(out.status.success(), || format!("exit status {}", out.status))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    check(lines.next() == Some("N,k,goertzel,jco,jco_goertzel,L"), || "bad CSV header".into())?;
    let rows: Vec<Vec<u64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    check(rows.len() == TABLE.len(), || format!("{} rows, expected {}", rows.len(), TABLE.len()))?;
    for (row, &(n, k, g, j, jg, l)) in rows.iter().zip(&TABLE) {
        let want = vec![n as u64, k as u64, g, j, jg, l];
        check(*row == want, || format!("row {row:?} != {want:?}"))?;
    }
    Ok(format!("{} rows exact", rows.len()))
}

fn criterion_worked_example() -> Outcome {
    let spec = design_filter(1024, 128).map_err(|e| e.to_string())?;
    let h = std::f64::consts::SQRT_2 / 2.0;
    let want = [Complex64::new(1.0, 0.0), Complex64::new(h, h), Complex64::new(0.0, 1.0), Complex64::new(-h, h)];
    check(spec.a.len() == 4, || format!("{} numerator taps", spec.a.len()))?;
    let coeff_err = spec.a.iter().zip(want).map(|(a, w)| (a - w).norm()).fold(0.0, f64::max);
    check(coeff_err <= 1e-12, || format!("tap error {coeff_err:e}"))?;
    check(spec.b == [1, 0, 0, 0, 1], || format!("b = {:?}", spec.b))?;

    let mut rng = ChaCha8Rng::seed_from_u64(1024);
    let v = ComplexPoly::from_real(&(0..1024).map(|_| rng.random_range(-1.0..1.0)).collect::<Vec<_>>()).unwrap();
    let r = stream_bin(&v, 128).map_err(|e| e.to_string())?;
    let reference = naive_bin(&v, 128).unwrap().value;
    check((r.value - reference).norm() <= 1e-8, || "streaming value disagrees with naive".into())?;
    check(r.counts.real_mults == 2, || format!("mults = {}", r.counts.real_mults))?;
    check((1019..=1035).contains(&r.counts.real_adds), || format!("adds = {}", r.counts.real_adds))?;
    let g = nominal_costs(1024, 128).unwrap().goertzel;
    check(g == 1024, || format!("Goertzel nominal = {g}"))?;
    Ok(format!(
        "tap err {coeff_err:.1e}, mults={}, adds={} (reference 1027), Goertzel nominal {g}",
        r.counts.real_mults, r.counts.real_adds
    ))
}

/// Deterministic signal set shared by the equivalence criteria.
fn signal(index: usize, n: usize) -> ComplexPoly {
    let mut rng = ChaCha8Rng::seed_from_u64((index as u64) << 16 | n as u64);
    let complex = index % 2 == 1;
    let samples = (0..n)
        .map(|_| {
            let re = rng.random_range(-1.0..1.0);
            let im = if complex { rng.random_range(-1.0..1.0) } else { 0.0 };
            Complex64::new(re, im)
        })
        .collect();
    ComplexPoly::new(samples).unwrap()
}

fn criterion_oracle_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    let mut cases = 0usize;
    for &n in &LENGTHS {
        for i in 0..SIGNALS {
            let v = signal(i, n);
            let tol_scale = n as f64 * v.max_abs();
            for k in 0..n as i64 {
                let reference = naive_bin(&v, k).unwrap().value;
                let goertzel = goertzel_bin(&v, k).unwrap().value;
                let jco = jco_bin(&v, k).unwrap().value;
                let jg = jco_goertzel_bin(&v, k).unwrap().value;
                let st = stream_bin(&v, k).unwrap().value;
                for (name, got) in [("goertzel", goertzel), ("jco", jco), ("jco-goertzel", jg), ("stream", st)] {
                    let rel = (got - reference).norm() / tol_scale;
                    worst = worst.max(rel);
                    check(rel <= 1e-9, || format!("{name} N={n} k={k} signal {i}: rel err {rel:e}"))?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} bins x 4 algorithms, worst err/(N max|v|) = {worst:.2e}"))
}

fn criterion_cyclotomic() -> Outcome {
    for n in 1..=300u64 {
        let mut prod = IntPoly::one();
        for d in divisors(n).unwrap() {
            prod = int_mul(&prod, &cyclotomic(d).unwrap()).unwrap();
        }
        check(prod == IntPoly::x_pow_minus_one(n as usize), || format!("product of Φ_d for d | {n} is not x^{n} - 1"))?;
        let phi = cyclotomic(n).unwrap();
        check(phi.degree() == Some(totient(n).unwrap() as usize), || format!("deg Φ_{n} != φ({n})"))?;
        if n <= 104 {
            check(phi.coeffs().iter().all(|c| c.abs() <= 1), || format!("Φ_{n} not ternary"))?;
        }
        if n >= 2 {
            let rev: Vec<i64> = phi.coeffs().iter().rev().copied().collect();
            check(phi.coeffs() == rev.as_slice(), || format!("Φ_{n} not palindromic"))?;
        }
    }
    let phi105 = cyclotomic(105).unwrap();
    check(phi105.coeffs().contains(&-2), || "Φ_105 has no coefficient -2".into())?;
    let where_ = phi105.coeffs().iter().position(|&c| c == -2).unwrap();
    Ok(format!("N <= 300 exact; Φ_105 has -2 at x^{where_}"))
}

fn criterion_dominance() -> Outcome {
    let policy = CostPolicy::STANDARD;
    let mut strict = 0;
    for n in 1..=128usize {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let v = ComplexPoly::from_real(&(0..n).map(|_| rng.random_range(-1.0..1.0)).collect::<Vec<_>>()).unwrap();
        let prime = factorize(n as u64).unwrap().factors() == [(n as u64, 1)];
        for k in 0..n as i64 {
            let g = measure(Algorithm::Goertzel, &v, k).unwrap().counts.real_mults;
            let jg = measure(Algorithm::JcoGoertzel, &v, k).unwrap().counts.real_mults;
            check(jg <= g, || format!("measured N={n} k={k}: {jg} > {g}"))?;
            let nom = nominal_costs(n, k).unwrap();
            check(nom.jco_goertzel <= nom.goertzel, || format!("nominal N={n} k={k}"))?;
            let spec = BinSpec::new(n, k).unwrap();
            let nontrivial = policy.real_cost(spec.a) == 1;
            if nontrivial && ((spec.order as usize) < n || (prime && n > 3)) {
                check(nom.jco_goertzel < nom.goertzel, || format!("not strict at N={n} k={k}"))?;
                strict += 1;
            }
        }
    }
    Ok(format!("all N <= 128, every k; {strict} strictly dominated bins"))
}

fn criterion_dtmf() -> Outcome {
    let cfg = DtmfConfig::default();
    let algs = [Algorithm::Goertzel, Algorithm::Jco, Algorithm::JcoGoertzel];
    let amplitude = 1.0;
    for (i, d) in dtmf::all_digits().enumerate() {
        let block = dtmf::synthesize(d, &cfg, amplitude, 0.05 * amplitude, 100 + i as u64).unwrap();
        for alg in algs {
            let got = dtmf::detect(&block, &cfg, alg).unwrap();
            check(got == Some(d), || format!("digit {d} with {alg}: got {got:?}"))?;
        }
    }
    let zero = vec![0.0; cfg.block_size];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let noise: Vec<f64> = (0..cfg.block_size).map(|_| StandardNormal.sample(&mut rng)).collect();
    for alg in algs {
        check(dtmf::detect(&zero, &cfg, alg).unwrap().is_none(), || format!("zero block detected with {alg}"))?;
        check(dtmf::detect(&noise, &cfg, alg).unwrap().is_none(), || format!("noise block detected with {alg}"))?;
    }
    Ok("16/16 digits x 3 algorithms; zero and noise blocks rejected".into())
}

fn criterion_stream_vs_block() -> Outcome {
    let mut worst = 0.0f64;
    for &n in &LENGTHS {
        for i in 0..SIGNALS {
            let v = signal(i, n);
            let scale = n as f64 * v.max_abs();
            for k in 0..n as i64 {
                let s = stream_bin(&v, k).unwrap().value;
                let b = jco_bin(&v, k).unwrap().value;
                let rel = (s - b).norm() / scale;
                worst = worst.max(rel);
                check(rel <= 1e-10, || format!("N={n} k={k} signal {i}: rel err {rel:e}"))?;
            }
        }
    }
    Ok(format!("worst err/(N max|v|) = {worst:.2e}"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 table reproduction", Some(Duration::from_secs(1)), criterion_table),
        ("2 worked example", Some(Duration::from_secs(1)), criterion_worked_example),
        ("3 oracle equivalence", Some(Duration::from_secs(60)), criterion_oracle_equivalence),
        ("4 cyclotomic suite", Some(Duration::from_secs(10)), criterion_cyclotomic),
        ("5 complexity dominance", None, criterion_dominance),
        ("6 dtmf round trip", Some(Duration::from_secs(5)), criterion_dtmf),
        ("7 streaming/block equivalence", None, criterion_stream_vs_block),
    ];
    let mut failed = 0;
    for (name, budget, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if budget.is_some_and(|b| elapsed > b) => {
                Err(format!("{msg}; took {elapsed:?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS  criterion {name}: {msg} [{:.2}s]", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}: {msg} [{:.2}s]", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
