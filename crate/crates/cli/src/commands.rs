//! Subcommand bodies. Each returns the full stdout text plus an exit code so
//! the binary stays a thin shell around them.

use std::fmt::Write as _;

use clap::ValueEnum;

use phipq::cyclotomic::{sweep, Method, VerificationReport};
use phipq::{factor_x_ab_minus_1, parallel, reduction_params, CoprimePair, PrimePair, SparsePoly};

use crate::bench;
use crate::error::CliError;
use crate::render::{self, FactorEntry, FactorRecord, OutputFormat, PhiRecord};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VERIFY: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[default]
    Closed,
    Lenstra,
    Lamleung,
    Oracle,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Closed => vec![Method::Closed],
            MethodArg::Lenstra => vec![Method::Lenstra],
            MethodArg::Lamleung => vec![Method::LamLeung],
            MethodArg::Oracle => vec![Method::Oracle],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

fn render_phi(
    pair: &PrimePair,
    method: Method,
    poly: &SparsePoly,
    format: OutputFormat,
    max_degree: u64,
) -> Result<String, CliError> {
    Ok(match format {
        OutputFormat::Dense => render::dense(&poly.to_dense(max_degree)?),
        OutputFormat::Sparse => render::sparse(poly),
        OutputFormat::Latex => render::latex(poly),
        OutputFormat::Json => render::to_json(&PhiRecord {
            p: pair.p(),
            q: pair.q(),
            method: method.name().into(),
            degree: poly.degree().unwrap_or(0),
            coeffs: poly.to_dense(max_degree)?,
        }),
    })
}

/// `phi <p> <q>`; with `--method all` every construction is printed followed
/// by an AGREE or DISAGREE line, and disagreement exits with 2.
pub fn cmd_phi(
    p: u64,
    q: u64,
    method: MethodArg,
    format: OutputFormat,
    max_degree: u64,
) -> Result<Output, CliError> {
    let pair = PrimePair::new(p, q)?;
    let methods = method.methods();
    let mut polys = Vec::with_capacity(methods.len());
    for &m in &methods {
        polys.push(m.compute(&pair)?);
    }

    let mut out = String::new();
    let labeled = methods.len() > 1 && format != OutputFormat::Json;
    for (&m, poly) in methods.iter().zip(&polys) {
        let text = render_phi(&pair, m, poly, format, max_degree)?;
        if labeled {
            let _ = writeln!(out, "{m}: {text}");
        } else {
            let _ = writeln!(out, "{text}");
        }
    }
    if method != MethodArg::All {
        return Ok(Output::ok(out));
    }
    let agree = polys.windows(2).all(|w| w[0] == w[1]);
    out.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
    Ok(Output {
        stdout: out,
        code: if agree { EXIT_OK } else { EXIT_VERIFY },
    })
}

pub fn cmd_factor(
    a: u64,
    b: u64,
    format: OutputFormat,
    max_degree: u64,
) -> Result<Output, CliError> {
    let pair = CoprimePair::new(a, b)?;
    // factor_x_ab_minus_1 refuses to return factors whose product is wrong
    let result = factor_x_ab_minus_1(&pair)?;

    if format == OutputFormat::Json {
        let factors = result
            .factors()
            .iter()
            .map(|(label, poly)| {
                Ok(FactorEntry {
                    label: (*label).into(),
                    coeffs: poly.to_dense(max_degree)?,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let record = FactorRecord {
            a: pair.a(),
            b: pair.b(),
            swapped: result.swapped,
            factors,
        };
        return Ok(Output::ok(render::to_json(&record) + "\n"));
    }

    let mut out = format!(
        "X^{} - 1 with a={} b={}\n",
        pair.product(),
        pair.a(),
        pair.b()
    );
    if result.swapped {
        let _ = writeln!(out, "swapped: input was ({a}, {b})");
    }
    for (label, poly) in result.factors() {
        let text = match format {
            OutputFormat::Sparse => render::sparse(poly),
            OutputFormat::Latex => render::latex(poly),
            _ => render::dense(&poly.to_dense(max_degree)?),
        };
        let _ = writeln!(out, "{label}: {text}");
    }
    out.push_str("verified: true\n");
    Ok(Output::ok(out))
}

pub fn cmd_params(p: u64, q: u64) -> Result<Output, CliError> {
    let pair = PrimePair::new(p, q)?;
    let params = reduction_params(&pair);
    let lhs = params.r as u128 * pair.p() as u128 + params.s as u128 * pair.q() as u128;
    let out = format!(
        "p={} q={}\nlambda={} mu={} r={} s={}\nr*p + s*q = (p-1)*(q-1): {} = {}\n",
        pair.p(),
        pair.q(),
        params.lambda,
        params.mu,
        params.r,
        params.s,
        lhs,
        pair.totient()
    );
    Ok(Output::ok(out))
}

pub fn cmd_verify(max_product: u64, jobs: Option<usize>) -> Result<Output, CliError> {
    let reports = match jobs {
        Some(n) => parallel::with_jobs(n, || sweep(max_product))??,
        None => sweep(max_product)?,
    };
    Ok(verify_output(&reports))
}

/// One PASS/FAIL line per report and a summary; exit 2 if anything failed.
pub fn verify_output(reports: &[VerificationReport]) -> Output {
    let mut out = String::new();
    let mut failed = 0;
    for r in reports {
        let (p, q) = (r.pair.p(), r.pair.q());
        if r.passed() {
            let _ = writeln!(
                out,
                "PASS p={p} q={q} degree={} terms={} lambda={} mu={}",
                r.pair.totient(),
                r.term_count.unwrap_or(0),
                r.params.lambda,
                r.params.mu
            );
        } else {
            failed += 1;
            let _ = writeln!(out, "FAIL p={p} q={q} {}", r.failures.join("; "));
        }
    }
    let _ = writeln!(
        out,
        "pairs={} passed={} failed={failed}",
        reports.len(),
        reports.len() - failed
    );
    Output {
        stdout: out,
        code: if failed == 0 { EXIT_OK } else { EXIT_VERIFY },
    }
}

pub fn cmd_bench(max_product: u64, reps: u32) -> Result<Output, CliError> {
    if max_product < 6 {
        return Err(phipq::Error::Validation(format!(
            "--max-pq must be at least 6, got {max_product}"
        ))
        .into());
    }
    if reps == 0 {
        return Err(phipq::Error::Validation("--reps must be at least 1".into()).into());
    }
    let records = bench::run(max_product, reps)?;
    Ok(Output::ok(bench::to_csv(&records)))
}
