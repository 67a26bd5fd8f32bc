//! Exact computation of binary cyclotomic polynomials `Φ_pq(X)`.
//!
//! Three closed constructions of `Φ_pq` (a single double-sum form, the
//! inverse-parameter form and the coefficient-indicator form) are built on a
//! canonical sparse integer polynomial type, and cross-checked against exact
//! long division of `X^pq - 1` by the cyclotomic factors of its proper
//! divisors. The crate also produces the four-factor decomposition of
//! `X^ab - 1` for coprime `a > b`.
//!
//! With the default `parallel` feature, [`cyclotomic::sweep`] fans the
//! per-pair verification out over rayon; without it the same code runs
//! sequentially.

pub mod cyclotomic;
pub mod error;
pub mod modular;
pub mod parallel;
pub mod polynomial;

pub use cyclotomic::{
    factor_x_ab_minus_1, lemma_expand, phi_closed_form, phi_lam_leung, phi_lenstra, phi_oracle,
    prime_pairs, sweep, verify_pair, FactorizationResult, Method, VerificationReport,
};
pub use error::{Error, Result};
pub use modular::{
    gcd, is_prime, mod_pow, reduction_params, CoprimePair, PrimePair, ReductionParams,
};
pub use polynomial::SparsePoly;
