//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use phipq::cyclotomic::{lam_leung_exponents, lenstra_exponents, Method};
use phipq::{
    factor_x_ab_minus_1, gcd, lemma_expand, phi_oracle, prime_pairs, reduction_params, sweep,
    CoprimePair, PrimePair, SparsePoly,
};
use phipq_cli::commands::{verify_output, EXIT_VERIFY};
use phipq_cli::render::{reemit_json, FactorRecord, PhiRecord};

const SWEEP_MAX_PQ: u64 = 3000;
const FACTOR_MAX_AB: u64 = 400;
const RING_INSTANCES: usize = 1000;
const RING_SEED: u64 = 0x5eed_c1c1;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn coprime_family() -> Vec<CoprimePair> {
    let mut out = Vec::new();
    for a in 2..=FACTOR_MAX_AB {
        for b in 1..a {
            if a * b <= FACTOR_MAX_AB && gcd(a, b) == 1 {
                out.push(CoprimePair::new(a, b).unwrap());
            }
        }
    }
    out
}

fn four_way_agreement() -> Outcome {
    let start = Instant::now();
    let pairs = prime_pairs(SWEEP_MAX_PQ);
    for pair in &pairs {
        let polys = Method::ALL
            .iter()
            .map(|m| m.compute(pair).map_err(|e| format!("{m} at {pair}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        ensure(polys.windows(2).all(|w| w[0] == w[1]), || {
            format!("methods disagree at {pair}")
        })?;
    }
    let reports = sweep(SWEEP_MAX_PQ).map_err(|e| e.to_string())?;
    ensure(
        reports.iter().all(|r| r.methods_agree && r.passed()),
        || "sweep report flagged a failure".into(),
    )?;
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 30.0, || format!("took {elapsed:?}"))?;
    Ok(format!("{} pairs, {:.2?}", pairs.len(), elapsed))
}

fn structure_suite() -> Outcome {
    let pairs = prime_pairs(SWEEP_MAX_PQ);
    for pair in &pairs {
        let phi = Method::Closed.compute(pair).map_err(|e| e.to_string())?;
        let dense = phi.to_dense(u64::MAX).map_err(|e| e.to_string())?;
        ensure(dense.iter().all(|c| (-1..=1).contains(c)), || {
            format!("coefficient outside {{-1,0,1}} at {pair}")
        })?;
        ensure(
            dense.len() as u64 - 1 == (pair.p() - 1) * (pair.q() - 1),
            || format!("degree {} at {pair}", dense.len() - 1),
        )?;
        ensure(dense.iter().eq(dense.iter().rev()), || {
            format!("not palindromic at {pair}")
        })?;
        ensure(dense.iter().sum::<i64>() == 1, || {
            format!("Phi(1) != 1 at {pair}")
        })?;
        let pos = dense.iter().filter(|&&c| c == 1).count();
        let neg = dense.iter().filter(|&&c| c == -1).count();
        ensure(pos == neg + 1, || {
            format!("{pos} positive vs {neg} negative at {pair}")
        })?;
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn corollary_parameters() -> Outcome {
    let pairs = prime_pairs(SWEEP_MAX_PQ);
    for pair in &pairs {
        let (p, q) = (pair.p(), pair.q());
        let prm = reduction_params(pair);
        ensure(prm.lambda * p % q == 1, || {
            format!("lambda*p mod q at {pair}")
        })?;
        ensure(prm.mu * q % p == 1, || format!("mu*q mod p at {pair}"))?;
        ensure(prm.r + 1 == prm.lambda && prm.s + 1 == prm.mu, || {
            format!("r, s offsets at {pair}")
        })?;
        ensure(prm.r * p + prm.s * q == (p - 1) * (q - 1), || {
            format!("rp + sq at {pair}")
        })?;

        let mut lenstra = lenstra_exponents(pair).map_err(|e| e.to_string())?;
        let mut lam_leung = lam_leung_exponents(pair).map_err(|e| e.to_string())?;
        for v in [
            &mut lenstra.positive,
            &mut lenstra.negative,
            &mut lam_leung.positive,
            &mut lam_leung.negative,
        ] {
            v.sort_unstable();
            ensure(v.windows(2).all(|w| w[0] != w[1]), || {
                format!("duplicate exponent at {pair}")
            })?;
        }
        ensure(lenstra == lam_leung, || {
            format!("exponent multisets differ at {pair}")
        })?;
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn theorem_one_suite() -> Outcome {
    let start = Instant::now();
    let family = coprime_family();
    let with_b_one = family.iter().filter(|c| c.b() == 1).count();
    for pair in &family {
        let f = factor_x_ab_minus_1(pair).map_err(|e| e.to_string())?;
        let product = f.product().map_err(|e| e.to_string())?;
        ensure(
            product == SparsePoly::x_pow_minus_one(pair.product()),
            || format!("product mismatch at ({}, {})", pair.a(), pair.b()),
        )?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 10.0, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} pairs ({with_b_one} with b=1), {elapsed:.2?}",
        family.len()
    ))
}

fn lemma_suite() -> Outcome {
    let mut checked = 0;
    for pair in coprime_family() {
        for i in 0..pair.b() {
            let lhs = lemma_expand(&pair, i).map_err(|e| e.to_string())?;
            ensure(lhs == SparsePoly::monomial(pair.a() * i, 1), || {
                format!("a={} b={} i={i}", pair.a(), pair.b())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (a, b, i) triples"))
}

fn known_values() -> Outcome {
    let phi6 = SparsePoly::from_dense(&[1, -1, 1]);
    let phi15 = SparsePoly::from_dense(&[1, -1, 0, 1, -1, 1, 0, -1, 1]);
    for (pair, expected) in [((3, 2), &phi6), ((5, 3), &phi15)] {
        let pair = PrimePair::new(pair.0, pair.1).unwrap();
        let oracle = phi_oracle(&pair).map_err(|e| e.to_string())?;
        ensure(&oracle == expected, || format!("oracle mismatch at {pair}"))?;
        for m in Method::ALL {
            let got = m.compute(&pair).map_err(|e| e.to_string())?;
            ensure(&got == expected, || format!("{m} mismatch at {pair}"))?;
        }
    }
    Ok("Phi_6 and Phi_15".into())
}

fn random_poly(rng: &mut ChaCha8Rng) -> SparsePoly {
    let n = rng.gen_range(0..=12);
    let terms: Vec<(u64, i64)> = (0..n)
        .map(|_| (rng.gen_range(0..=30), rng.gen_range(-9..=9)))
        .collect();
    SparsePoly::from_terms(terms).unwrap()
}

fn ring_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RING_SEED);
    let mut divisions = 0;
    for n in 0..RING_INSTANCES {
        let (f, g, h) = (
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        let run = || -> phipq::Result<bool> {
            let mut ok = f.add(&g)? == g.add(&f)?
                && f.mul(&g)? == g.mul(&f)?
                && f.add(&g)?.add(&h)? == f.add(&g.add(&h)?)?
                && f.mul(&g)?.mul(&h)? == f.mul(&g.mul(&h)?)?
                && f.mul(&g.add(&h)?)? == f.mul(&g)?.add(&f.mul(&h)?)?
                && f.mul(&SparsePoly::one())? == f;
            if !g.is_zero() {
                ok &= f.mul(&g)?.exact_div(&g)? == f;
            }
            Ok(ok)
        };
        ensure(run() == Ok(true), || format!("instance {n} failed"))?;
        divisions += usize::from(!g.is_zero());
    }
    Ok(format!(
        "{RING_INSTANCES} instances, {divisions} division round trips, seed {RING_SEED:#x}"
    ))
}

fn cli(args: &[&str]) -> Result<(Option<i32>, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_phipq"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((
        out.status.code(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    ))
}

fn cli_contract() -> Outcome {
    let expect_code = |args: &[&str], code: i32| -> Result<String, String> {
        let (got, text) = cli(args)?;
        ensure(got == Some(code), || {
            format!("{args:?} exited {got:?}, wanted {code}")
        })?;
        Ok(text)
    };
    expect_code(&["phi", "3", "2"], 0)?;
    expect_code(&["phi", "4", "2"], 1)?;
    expect_code(&["factor", "6", "4"], 1)?;
    expect_code(&["verify", "--max-pq", "5"], 1)?;
    expect_code(&["verify", "--max-pq", "100"], 0)?;

    // no input makes the real formulas disagree, so feed the renderer a failing report
    let mut report = phipq::verify_pair(&PrimePair::new(3, 2).unwrap());
    report.palindrome_ok = false;
    report.failures.push("forced".into());
    ensure(verify_output(&[report]).code == EXIT_VERIFY, || {
        "failed report did not map to exit 2".into()
    })?;

    for args in [
        &["phi", "13", "11", "--format", "json"][..],
        &["phi", "7", "3", "--method", "all", "--format", "json"][..],
    ] {
        let text = expect_code(args, 0)?;
        for line in text.lines().filter(|l| l.starts_with('{')) {
            let again = reemit_json::<PhiRecord>(line).map_err(|e| e.to_string())?;
            ensure(again == line, || format!("json round trip changed {line}"))?;
        }
    }
    let text = expect_code(&["factor", "5", "4", "--format", "json"], 0)?;
    let line = text.trim_end();
    let again = reemit_json::<FactorRecord>(line).map_err(|e| e.to_string())?;
    ensure(again == line, || format!("json round trip changed {line}"))?;

    let csv = expect_code(&["bench", "--max-pq", "100", "--reps", "1"], 0)?;
    let mut lines = csv.lines();
    ensure(lines.next() == Some("p,q,method,ns,terms"), || {
        "csv header".into()
    })?;
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    let pairs = prime_pairs(100);
    ensure(rows.len() == 4 * pairs.len(), || {
        format!("{} rows", rows.len())
    })?;
    for (pair, chunk) in pairs.iter().zip(rows.chunks(4)) {
        let methods: Vec<&str> = chunk.iter().map(|r| r[2]).collect();
        ensure(
            methods == ["closed", "lenstra", "lamleung", "oracle"],
            || format!("methods {methods:?} for {pair}"),
        )?;
        for r in chunk {
            ensure(r.len() == 5, || format!("row {r:?}"))?;
            ensure(
                r[0] == pair.p().to_string() && r[1] == pair.q().to_string(),
                || format!("row {r:?} out of order"),
            )?;
            ensure(r[3].parse::<u64>().is_ok_and(|ns| ns > 0), || {
                format!("ns in {r:?}")
            })?;
            if (pair.p(), pair.q()) == (5, 3) {
                ensure(r[4] == "7", || format!("terms in {r:?}"))?;
            }
        }
    }
    Ok(format!(
        "exit codes, json, bench csv with {} rows",
        rows.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("four-way agreement, pq <= 3000", four_way_agreement),
        (
            "coefficient, degree, palindrome and unit checks",
            structure_suite,
        ),
        (
            "inverse parameters and exponent multisets",
            corollary_parameters,
        ),
        ("X^ab - 1 factorization, ab <= 400", theorem_one_suite),
        ("monomial expansion identity, i < b", lemma_suite),
        ("known values of Phi_6 and Phi_15", known_values),
        ("polynomial ring properties", ring_properties),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
