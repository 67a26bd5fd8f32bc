//! Word-sized number theory: gcd, deterministic primality, modular
//! exponentiation, and the inverse parameters `(λ, μ, r, s)` of a prime pair.

use std::fmt;

use crate::error::{Error, Result};

/// Witnesses that make Miller–Rabin deterministic for every `n < 2^64`.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Greatest common divisor by Euclid's algorithm. `gcd(0, 0)` is `0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_unchecked(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    let mut base = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    acc
}

/// `base^exp mod modulus`, reduced into `[0, modulus)`.
pub fn mod_pow(base: u64, exp: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return Err(Error::Validation(format!(
            "modulus must be at least 2, got {modulus}"
        )));
    }
    Ok(pow_mod_unchecked(base, exp, modulus))
}

/// Deterministic primality for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &MR_WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod_unchecked(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Two distinct primes with `p > q`.
///
/// The constructor accepts the primes in either order; `Φ_pq = Φ_qp`, so the
/// order given by the caller carries no information.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePair {
    p: u64,
    q: u64,
}

impl PrimePair {
    pub fn new(x: u64, y: u64) -> Result<Self> {
        for n in [x, y] {
            if !is_prime(n) {
                return Err(Error::Validation(format!("{n} is not prime")));
            }
        }
        if x == y {
            return Err(Error::Validation(format!(
                "primes must be distinct, got {x} twice"
            )));
        }
        if x.checked_mul(y).is_none() {
            return Err(Error::Validation(format!(
                "product {x}*{y} does not fit in 64 bits"
            )));
        }
        let (p, q) = if x > y { (x, y) } else { (y, x) };
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `p * q`; cannot overflow, the constructor checked it.
    pub fn product(&self) -> u64 {
        self.p * self.q
    }

    /// `(p - 1)(q - 1)`, the degree of `Φ_pq`.
    pub fn totient(&self) -> u64 {
        (self.p - 1) * (self.q - 1)
    }
}

impl fmt::Display for PrimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Coprime naturals with `a > b >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoprimePair {
    a: u64,
    b: u64,
    swapped: bool,
}

impl CoprimePair {
    /// Validates and orders the pair; `swapped()` reports whether the
    /// arguments arrived as `(b, a)`.
    pub fn new(x: u64, y: u64) -> Result<Self> {
        if x == 0 || y == 0 {
            return Err(Error::Validation(format!(
                "arguments must be positive, got ({x}, {y})"
            )));
        }
        let g = gcd(x, y);
        if g != 1 {
            return Err(Error::Validation(format!(
                "arguments are not coprime: gcd({x},{y})={g}"
            )));
        }
        if x == y {
            // only (1, 1) reaches here
            return Err(Error::Validation(format!(
                "arguments must differ, got ({x}, {y})"
            )));
        }
        if x.checked_mul(y).is_none() {
            return Err(Error::Validation(format!(
                "product {x}*{y} does not fit in 64 bits"
            )));
        }
        Ok(if x > y {
            Self {
                a: x,
                b: y,
                swapped: false,
            }
        } else {
            Self {
                a: y,
                b: x,
                swapped: true,
            }
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn product(&self) -> u64 {
        self.a * self.b
    }
}

/// `λ = p^{-1} mod q`, `μ = q^{-1} mod p`, and `r = λ - 1`, `s = μ - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReductionParams {
    pub lambda: u64,
    pub mu: u64,
    pub r: u64,
    pub s: u64,
}

impl ReductionParams {
    /// Lists every violated relation between the parameters and `pair`.
    /// Empty means all of them hold.
    pub fn violations(&self, pair: &PrimePair) -> Vec<String> {
        let (p, q) = (pair.p(), pair.q());
        let mut out = Vec::new();
        if !(0 < self.lambda && self.lambda < q) {
            out.push(format!("lambda={} outside (0,{q})", self.lambda));
        }
        if !(0 < self.mu && self.mu < p) {
            out.push(format!("mu={} outside (0,{p})", self.mu));
        }
        if mul_mod(self.lambda, p, q) != 1 {
            out.push(format!("lambda*p mod q = {}", mul_mod(self.lambda, p, q)));
        }
        if mul_mod(self.mu, q, p) != 1 {
            out.push(format!("mu*q mod p = {}", mul_mod(self.mu, q, p)));
        }
        if self.lambda.checked_sub(1) != Some(self.r) {
            out.push(format!("r={} but lambda={}", self.r, self.lambda));
        }
        if self.mu.checked_sub(1) != Some(self.s) {
            out.push(format!("s={} but mu={}", self.s, self.mu));
        }
        let lhs = self.r as u128 * p as u128 + self.s as u128 * q as u128;
        let rhs = pair.totient() as u128;
        if lhs != rhs {
            out.push(format!("r*p + s*q = {lhs} but (p-1)(q-1) = {rhs}"));
        }
        out
    }
}

/// Inverse parameters from the Fermat exponents: `λ = [p^{q-2}]_q`,
/// `μ = [q^{p-2}]_p`.
pub fn reduction_params(pair: &PrimePair) -> ReductionParams {
    let (p, q) = (pair.p(), pair.q());
    // q >= 2 and p >= 3, so both exponents are non-negative and both moduli valid
    let lambda = pow_mod_unchecked(p, q - 2, q);
    let mu = pow_mod_unchecked(q, p - 2, p);
    ReductionParams {
        lambda,
        mu,
        r: lambda - 1,
        s: mu - 1,
    }
}
