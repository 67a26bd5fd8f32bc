//! Wall-clock comparison of the four constructions over a sweep of pairs.

use std::time::{Duration, Instant};

use phipq::cyclotomic::Method;
use phipq::{prime_pairs, PrimePair};

use crate::error::CliError;

pub const CSV_HEADER: &str = "p,q,method,ns,terms";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub pair: PrimePair,
    pub method: Method,
    /// Fastest of the repetitions, never zero.
    pub wall_time: Duration,
    pub term_count: usize,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.pair.p(),
            self.pair.q(),
            self.method,
            self.wall_time.as_nanos(),
            self.term_count
        )
    }
}

pub fn time_method(pair: &PrimePair, method: Method, reps: u32) -> Result<BenchRecord, CliError> {
    let mut best = Duration::MAX;
    let mut term_count = 0;
    for _ in 0..reps {
        let start = Instant::now();
        let poly = method.compute(pair)?;
        best = best.min(start.elapsed());
        term_count = poly.len();
    }
    Ok(BenchRecord {
        pair: *pair,
        method,
        wall_time: best.max(Duration::from_nanos(1)),
        term_count,
    })
}

/// Times every method on every pair with `pq <= max_product`. Pairs run one
/// after another so the timings do not compete for cores.
pub fn run(max_product: u64, reps: u32) -> Result<Vec<BenchRecord>, CliError> {
    let mut records = Vec::new();
    for pair in prime_pairs(max_product) {
        for method in Method::ALL {
            records.push(time_method(&pair, method, reps)?);
        }
    }
    Ok(records)
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}
