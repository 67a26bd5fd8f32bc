//! Binary cyclotomic polynomials and the factorization of `X^ab - 1`.
//!
//! Four independent routes to `Φ_pq` live here:
//!
//! * [`phi_closed_form`]: `1 + (X - 1) Σ_{i<q} Σ_{1<=j<=⌊pi/q⌋} X^{pi-qj}`.
//! * [`phi_lenstra`]: a positive block `X^{ip+jq}` for `i < λ, j < μ` minus a
//!   negative block `X^{ip+jq-pq}` for `λ <= i < q, μ <= j < p`, where `λ`, `μ`
//!   are the inverses of `p` mod `q` and `q` mod `p`.
//! * [`phi_lam_leung`]: the coefficient table `a_k ∈ {-1, 0, 1}` indexed by the
//!   representations of `k` (or `k + pq`) as `ip + jq` with `i, j` split at
//!   `r = λ - 1`, `s = μ - 1`.
//! * [`phi_oracle`]: exact long division of `(X^pq - 1)(X - 1)` by
//!   `(X^p - 1)(X^q - 1)`.
//!
//! Each formula first emits its raw exponent lists ([`SignedExponents`]) and
//! only then canonicalizes, so the exponent multisets of the two
//! parameterized forms can be compared before any cancellation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::modular::{reduction_params, CoprimePair, PrimePair, ReductionParams};
use crate::parallel;
use crate::polynomial::SparsePoly;

/// Largest `pq` accepted by [`phi_oracle`].
pub const ORACLE_MAX_PRODUCT: u64 = 20_000_000;

/// Largest bound accepted by [`sweep`]; the prime sieve is sized by it.
pub const SWEEP_MAX_PRODUCT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Closed,
    Lenstra,
    LamLeung,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Closed,
        Method::Lenstra,
        Method::LamLeung,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Lenstra => "lenstra",
            Method::LamLeung => "lamleung",
            Method::Oracle => "oracle",
        }
    }

    pub fn compute(self, pair: &PrimePair) -> Result<SparsePoly> {
        match self {
            Method::Closed => phi_closed_form(pair),
            Method::Lenstra => phi_lenstra(pair),
            Method::LamLeung => phi_lam_leung(pair),
            Method::Oracle => phi_oracle(pair),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown method `{s}`")))
    }
}

/// Raw exponents of the `+X^k` and `-X^k` terms a formula generates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedExponents {
    pub positive: Vec<u64>,
    pub negative: Vec<u64>,
}

impl SignedExponents {
    pub fn sorted(mut self) -> Self {
        self.positive.sort_unstable();
        self.negative.sort_unstable();
        self
    }

    /// True if some exponent occurs twice within one sign class.
    pub fn has_duplicates(&self) -> bool {
        fn dup(v: &[u64]) -> bool {
            let mut v = v.to_vec();
            v.sort_unstable();
            v.windows(2).any(|w| w[0] == w[1])
        }
        dup(&self.positive) || dup(&self.negative)
    }

    /// True if some exponent is both positive and negative.
    pub fn overlaps(&self) -> bool {
        let mut pos = self.positive.clone();
        pos.sort_unstable();
        self.negative.iter().any(|e| pos.binary_search(e).is_ok())
    }

    pub fn to_poly(&self) -> Result<SparsePoly> {
        let pos = self.positive.iter().map(|&e| (e, 1));
        let neg = self.negative.iter().map(|&e| (e, -1));
        SparsePoly::from_terms(pos.chain(neg))
    }
}

/// Exponents `ai - bj` for `0 <= i < b`, `1 <= j <= ⌊ai/b⌋`.
fn floor_double_sum_exponents(a: u64, b: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for i in 0..b {
        let ai = a * i;
        for j in 1..=ai / b {
            out.push(ai - b * j);
        }
    }
    out
}

/// `1 + (X - 1) S` for a sum `S` of distinct monomials, expanded to raw terms.
fn one_plus_x_minus_one_times(sum_exponents: &[u64]) -> SignedExponents {
    let mut positive = Vec::with_capacity(sum_exponents.len() + 1);
    positive.push(0);
    positive.extend(sum_exponents.iter().map(|&e| e + 1));
    SignedExponents {
        positive,
        negative: sum_exponents.to_vec(),
    }
}

pub fn closed_form_exponents(pair: &PrimePair) -> SignedExponents {
    one_plus_x_minus_one_times(&floor_double_sum_exponents(pair.p(), pair.q()))
}

/// `Φ_pq = 1 + (X - 1) Σ_{i=0}^{q-1} Σ_{j=1}^{⌊pi/q⌋} X^{pi-qj}`.
pub fn phi_closed_form(pair: &PrimePair) -> Result<SparsePoly> {
    closed_form_exponents(pair).to_poly()
}

fn check_lenstra_ranges(pair: &PrimePair, params: &ReductionParams) -> Result<()> {
    let ok = 0 < params.lambda && params.lambda < pair.q() && 0 < params.mu && params.mu < pair.p();
    if ok {
        Ok(())
    } else {
        Err(Error::InvariantViolation(format!(
            "inverse parameters (lambda={}, mu={}) out of range for {pair}",
            params.lambda, params.mu
        )))
    }
}

/// `ip + jq - pq` with the subtraction checked.
fn shifted_exponent(pair: &PrimePair, i: u64, j: u64) -> Result<u64> {
    (i * pair.p() + j * pair.q())
        .checked_sub(pair.product())
        .ok_or_else(|| {
            Error::InvariantViolation(format!("negative exponent {i}*p + {j}*q - pq for {pair}"))
        })
}

/// Both blocks of the inverse-parameter form, driven by `(λ, μ)`.
pub fn lenstra_exponents(pair: &PrimePair) -> Result<SignedExponents> {
    let params = reduction_params(pair);
    check_lenstra_ranges(pair, &params)?;
    let (p, q) = (pair.p(), pair.q());
    let (lambda, mu) = (params.lambda, params.mu);

    let mut positive = Vec::with_capacity((lambda * mu) as usize);
    for i in 0..lambda {
        for j in 0..mu {
            positive.push(i * p + j * q);
        }
    }
    let mut negative = Vec::with_capacity(((q - lambda) * (p - mu)) as usize);
    for i in lambda..q {
        for j in mu..p {
            negative.push(shifted_exponent(pair, i, j)?);
        }
    }
    Ok(SignedExponents { positive, negative })
}

/// `Φ_pq` from the inverse parameters `λ = [p^{q-2}]_q`, `μ = [q^{p-2}]_p`.
pub fn phi_lenstra(pair: &PrimePair) -> Result<SparsePoly> {
    lenstra_exponents(pair)?.to_poly()
}

/// The index sets of the coefficient-table form, driven by `(r, s)`:
/// `{ip + jq : i ∈ [0, r], j ∈ [0, s]}` and
/// `{ip + jq - pq : i ∈ [r+1, q-1], j ∈ [s+1, p-1]}`.
pub fn lam_leung_exponents(pair: &PrimePair) -> Result<SignedExponents> {
    let ReductionParams { r, s, .. } = reduction_params(pair);
    let (p, q) = (pair.p(), pair.q());

    let mut positive = Vec::new();
    for i in 0..=r {
        for j in 0..=s {
            positive.push(i * p + j * q);
        }
    }
    let mut negative = Vec::new();
    for i in r + 1..q {
        for j in s + 1..p {
            negative.push(shifted_exponent(pair, i, j)?);
        }
    }
    Ok(SignedExponents { positive, negative })
}

/// `Φ_pq = Σ_{k=0}^{(p-1)(q-1)} a_k X^k` with `a_k` read off the index sets.
///
/// Each `k` must be hit at most once across both sets and must lie in
/// `[0, (p-1)(q-1)]`; anything else is an invariant violation.
pub fn phi_lam_leung(pair: &PrimePair) -> Result<SparsePoly> {
    let exps = lam_leung_exponents(pair)?;
    let degree = pair.totient();
    let len = usize::try_from(degree + 1).map_err(|_| Error::Capacity {
        degree,
        cap: usize::MAX as u64,
    })?;
    let mut table = vec![0i8; len];
    let mut mark = |k: u64, sign: i8| -> Result<()> {
        let slot = table
            .get_mut(k as usize)
            .filter(|_| k <= degree)
            .ok_or_else(|| {
                Error::InvariantViolation(format!("a_{k} lies beyond degree {degree} for {pair}"))
            })?;
        if *slot != 0 {
            return Err(Error::InvariantViolation(format!(
                "a_{k} assigned twice for {pair}"
            )));
        }
        *slot = sign;
        Ok(())
    };
    for &k in &exps.positive {
        mark(k, 1)?;
    }
    for &k in &exps.negative {
        mark(k, -1)?;
    }
    SparsePoly::from_terms(
        table
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(k, &a)| (k as u64, a as i64)),
    )
}

/// `Φ_pq = (X^pq - 1)(X - 1) / ((X^p - 1)(X^q - 1))` by exact long division.
pub fn phi_oracle(pair: &PrimePair) -> Result<SparsePoly> {
    if pair.product() > ORACLE_MAX_PRODUCT {
        return Err(Error::Capacity {
            degree: pair.product(),
            cap: ORACLE_MAX_PRODUCT,
        });
    }
    let dividend =
        SparsePoly::x_pow_minus_one(pair.product()).mul(&SparsePoly::x_pow_minus_one(1))?;
    let divisor =
        SparsePoly::x_pow_minus_one(pair.p()).mul(&SparsePoly::x_pow_minus_one(pair.q()))?;
    dividend.exact_div(&divisor).map_err(|e| match e {
        Error::InexactDivision { degree } => Error::InvariantViolation(format!(
            "oracle division for {pair} left a remainder of degree {degree}"
        )),
        other => other,
    })
}

/// Left-hand side of `X^{[ai]_b} + (X^b - 1) Σ_{j=1}^{⌊ai/b⌋} X^{ai-bj} = X^{ai}`,
/// built literally. Any `i` is accepted; the factorization only uses `i < b`.
pub fn lemma_expand(pair: &CoprimePair, i: u64) -> Result<SparsePoly> {
    let (a, b) = (pair.a(), pair.b());
    let ai = a.checked_mul(i).ok_or(Error::Overflow("lemma_expand"))?;
    let residue = SparsePoly::monomial(ai % b, 1);
    let inner = SparsePoly::from_terms((1..=ai / b).map(|j| (ai - b * j, 1)))?;
    SparsePoly::x_pow_minus_one(b).mul(&inner)?.add(&residue)
}

/// `X^ab - 1 = (X - 1) · Σ_{i<a} X^i · Σ_{i<b} X^i · core`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    pub pair: CoprimePair,
    pub factor_linear: SparsePoly,
    pub factor_a: SparsePoly,
    pub factor_b: SparsePoly,
    /// `1 + (X - 1) Σ_{i<b} Σ_{1<=j<=⌊ai/b⌋} X^{ai-bj}`.
    pub factor_core: SparsePoly,
    /// Whether the caller passed `(b, a)`.
    pub swapped: bool,
}

impl FactorizationResult {
    pub fn factors(&self) -> [(&'static str, &SparsePoly); 4] {
        [
            ("linear", &self.factor_linear),
            ("geometric_a", &self.factor_a),
            ("geometric_b", &self.factor_b),
            ("core", &self.factor_core),
        ]
    }

    pub fn product(&self) -> Result<SparsePoly> {
        self.factor_linear
            .mul(&self.factor_a)?
            .mul(&self.factor_b)?
            .mul(&self.factor_core)
    }
}

pub fn factor_x_ab_minus_1(pair: &CoprimePair) -> Result<FactorizationResult> {
    let (a, b) = (pair.a(), pair.b());
    let core = one_plus_x_minus_one_times(&floor_double_sum_exponents(a, b)).to_poly()?;
    let result = FactorizationResult {
        pair: *pair,
        factor_linear: SparsePoly::x_pow_minus_one(1),
        factor_a: SparsePoly::geometric_sum(a)?,
        factor_b: SparsePoly::geometric_sum(b)?,
        factor_core: core,
        swapped: pair.swapped(),
    };
    if result.product()? != SparsePoly::x_pow_minus_one(pair.product()) {
        return Err(Error::InvariantViolation(format!(
            "factors of X^{} - 1 do not multiply back",
            pair.product()
        )));
    }
    Ok(result)
}

/// Outcome of every check on one prime pair. Failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub pair: PrimePair,
    pub params: ReductionParams,
    /// All four constructions succeeded and are equal.
    pub methods_agree: bool,
    pub coeffs_in_unit_set: bool,
    /// `degree = (p-1)(q-1)`.
    pub degree_ok: bool,
    pub palindrome_ok: bool,
    /// `Φ(1) = 1` and `#(+1 terms) - #(-1 terms) = 1`.
    pub eval_one_ok: bool,
    /// Inverse-parameter relations hold.
    pub params_ok: bool,
    /// Exponent multisets of the two parameterized forms match per sign
    /// class, and neither has duplicates.
    pub corollary_ok: bool,
    /// Term count of the closed-form polynomial, when it could be built.
    pub term_count: Option<usize>,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares the two parameterized exponent multisets; returns the labeled
/// discrepancies.
pub fn corollary_discrepancies(pair: &PrimePair) -> Vec<String> {
    let (lenstra, lam_leung) = match (lenstra_exponents(pair), lam_leung_exponents(pair)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return vec![format!("exponent generation: {e}")],
    };
    let mut out = Vec::new();
    for (label, exps) in [("lenstra", &lenstra), ("lamleung", &lam_leung)] {
        if exps.has_duplicates() {
            out.push(format!("{label} exponents repeat within a sign class"));
        }
        if exps.overlaps() {
            out.push(format!("{label} exponents appear with both signs"));
        }
    }
    let (lenstra, lam_leung) = (lenstra.sorted(), lam_leung.sorted());
    if lenstra.positive != lam_leung.positive {
        out.push("positive exponent multisets differ".into());
    }
    if lenstra.negative != lam_leung.negative {
        out.push("negative exponent multisets differ".into());
    }
    out
}

pub fn verify_pair(pair: &PrimePair) -> VerificationReport {
    let mut failures = Vec::new();

    let params = reduction_params(pair);
    let param_issues = params.violations(pair);
    let params_ok = param_issues.is_empty();
    failures.extend(param_issues.into_iter().map(|m| format!("params: {m}")));

    let corollary_issues = corollary_discrepancies(pair);
    let corollary_ok = corollary_issues.is_empty();
    failures.extend(
        corollary_issues
            .into_iter()
            .map(|m| format!("corollary: {m}")),
    );

    let results: Vec<(Method, Result<SparsePoly>)> =
        Method::ALL.iter().map(|&m| (m, m.compute(pair))).collect();
    for (m, r) in &results {
        if let Err(e) = r {
            failures.push(format!("{m}: {e}"));
        }
    }
    let polys: Vec<&SparsePoly> = results
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok())
        .collect();
    let methods_agree = polys.len() == Method::ALL.len() && polys.windows(2).all(|w| w[0] == w[1]);
    if !methods_agree && polys.len() == Method::ALL.len() {
        let reference = polys[0];
        for ((m, _), poly) in results.iter().zip(&polys).skip(1) {
            if *poly != reference {
                failures.push(format!("{m} disagrees with closed"));
            }
        }
    } else if !methods_agree {
        failures.push("methods: not every construction produced a polynomial".into());
    }

    let term_count = results[0].1.as_ref().ok().map(SparsePoly::len);
    let (coeffs_in_unit_set, degree_ok, palindrome_ok, eval_one_ok) = match polys.first() {
        Some(phi) => structure_checks(pair, phi, &mut failures),
        None => {
            failures.push("structure: no polynomial to inspect".into());
            (false, false, false, false)
        }
    };

    VerificationReport {
        pair: *pair,
        params,
        methods_agree,
        coeffs_in_unit_set,
        degree_ok,
        palindrome_ok,
        eval_one_ok,
        params_ok,
        corollary_ok,
        term_count,
        failures,
    }
}

fn structure_checks(
    pair: &PrimePair,
    phi: &SparsePoly,
    failures: &mut Vec<String>,
) -> (bool, bool, bool, bool) {
    let coeffs_ok = phi.terms().iter().all(|&(_, c)| c == 1 || c == -1);
    if !coeffs_ok {
        failures.push("coefficients outside {-1, 0, 1}".into());
    }

    let expected = pair.totient();
    let degree_ok = phi.degree() == Some(expected);
    if !degree_ok {
        failures.push(format!("degree {:?}, expected {expected}", phi.degree()));
    }

    let degree = phi.degree().unwrap_or(0);
    let palindrome_ok = phi
        .terms()
        .iter()
        .all(|&(e, c)| phi.coefficient(degree - e) == c);
    if !palindrome_ok {
        failures.push("coefficient vector is not palindromic".into());
    }

    let positives = phi.terms().iter().filter(|t| t.1 > 0).count() as i64;
    let negatives = phi.terms().iter().filter(|t| t.1 < 0).count() as i64;
    let at_one = phi.eval_at_one();
    let eval_ok = at_one == Ok(1) && positives - negatives == 1;
    if !eval_ok {
        failures.push(format!(
            "Phi(1) = {at_one:?}, {positives} positive vs {negatives} negative terms"
        ));
    }
    (coeffs_ok, degree_ok, palindrome_ok, eval_ok)
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// All prime pairs `p > q` with `pq <= max_product`, ordered by `pq` then `q`.
pub fn prime_pairs(max_product: u64) -> Vec<PrimePair> {
    let primes = primes_up_to(max_product / 2);
    let mut pairs = Vec::new();
    for (idx, &q) in primes.iter().enumerate() {
        if q * q > max_product {
            break;
        }
        for &p in &primes[idx + 1..] {
            if p * q > max_product {
                break;
            }
            pairs.push(PrimePair::new(p, q).expect("sieve yields distinct primes"));
        }
    }
    pairs.sort_by_key(|pair| (pair.product(), pair.q()));
    pairs
}

fn check_sweep_bound(max_product: u64) -> Result<()> {
    if max_product < 6 {
        return Err(Error::Validation(format!(
            "sweep bound must be at least 6, got {max_product}"
        )));
    }
    if max_product > SWEEP_MAX_PRODUCT {
        return Err(Error::Validation(format!(
            "sweep bound {max_product} exceeds {SWEEP_MAX_PRODUCT}"
        )));
    }
    Ok(())
}

/// Verifies every prime pair with `pq <= max_product`, in enumeration order.
/// Runs on rayon when the `parallel` feature is enabled.
pub fn sweep(max_product: u64) -> Result<Vec<VerificationReport>> {
    check_sweep_bound(max_product)?;
    Ok(parallel::map_ordered(
        &prime_pairs(max_product),
        verify_pair,
    ))
}

pub fn sweep_sequential(max_product: u64) -> Result<Vec<VerificationReport>> {
    check_sweep_bound(max_product)?;
    Ok(parallel::map_sequential(
        &prime_pairs(max_product),
        verify_pair,
    ))
}
