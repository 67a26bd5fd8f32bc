//! Canonical sparse polynomials in `Z[X]`.
//!
//! A [`SparsePoly`] is a list of `(exponent, coefficient)` terms, strictly
//! ascending by exponent with no zero coefficients, so two polynomials are
//! equal exactly when their term lists are. All arithmetic is checked and
//! reports overflow instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    terms: Vec<(u64, i64)>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * X^exp`; a zero coefficient gives the zero polynomial.
    pub fn monomial(exp: u64, coeff: i64) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            Self {
                terms: vec![(exp, coeff)],
            }
        }
    }

    /// `X^n - 1` (zero when `n == 0`).
    pub fn x_pow_minus_one(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Self {
                terms: vec![(0, -1), (n, 1)],
            }
        }
    }

    /// Builds a canonical polynomial from arbitrary terms: duplicate exponents
    /// are summed, zero coefficients dropped.
    pub fn from_terms<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        let mut raw: Vec<(u64, i64)> = pairs.into_iter().collect();
        raw.sort_unstable_by_key(|&(e, _)| e);

        let mut terms = Vec::with_capacity(raw.len());
        let mut iter = raw.into_iter().peekable();
        while let Some((exp, first)) = iter.next() {
            // a run may overflow i64 part-way and still land in range
            let mut acc = first as i128;
            while let Some(&(next, c)) = iter.peek() {
                if next != exp {
                    break;
                }
                acc += c as i128;
                iter.next();
            }
            if acc != 0 {
                let c = i64::try_from(acc).map_err(|_| Error::Overflow("from_terms"))?;
                terms.push((exp, c));
            }
        }
        Ok(Self { terms })
    }

    /// Sparse view of an ascending dense coefficient vector.
    pub fn from_dense(coeffs: &[i64]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| (e as u64, c))
            .collect();
        Self { terms }
    }

    pub fn terms(&self) -> &[(u64, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.last().map(|&(e, _)| e)
    }

    pub fn leading(&self) -> Option<(u64, i64)> {
        self.terms.last().copied()
    }

    pub fn coefficient(&self, exp: u64) -> i64 {
        match self.terms.binary_search_by_key(&exp, |&(e, _)| e) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    fn merge<F>(&self, other: &Self, rhs_sign: F, op: &'static str) -> Result<Self>
    where
        F: Fn(i64, i64) -> Option<i64>,
    {
        let (a, b) = (&self.terms, &other.terms);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (exp, c) = match (a.get(i), b.get(j)) {
                (Some(&(ea, ca)), Some(&(eb, _))) if ea < eb => {
                    i += 1;
                    (ea, Some(ca))
                }
                (Some(&(ea, ca)), Some(&(eb, cb))) if ea == eb => {
                    i += 1;
                    j += 1;
                    (ea, rhs_sign(ca, cb))
                }
                (_, Some(&(eb, cb))) => {
                    j += 1;
                    (eb, rhs_sign(0, cb))
                }
                (Some(&(ea, ca)), None) => {
                    i += 1;
                    (ea, Some(ca))
                }
                (None, None) => unreachable!(),
            };
            let c = c.ok_or(Error::Overflow(op))?;
            if c != 0 {
                terms.push((exp, c));
            }
        }
        Ok(Self { terms })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.merge(other, i64::checked_add, "add")
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.merge(other, i64::checked_sub, "sub")
    }

    pub fn neg(&self) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|&(e, c)| c.checked_neg().map(|c| (e, c)))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow("neg"))?;
        Ok(Self { terms })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut products = Vec::with_capacity(self.len() * other.len());
        for &(ea, ca) in &self.terms {
            for &(eb, cb) in &other.terms {
                let e = ea.checked_add(eb).ok_or(Error::Overflow("mul exponent"))?;
                let c = ca
                    .checked_mul(cb)
                    .ok_or(Error::Overflow("mul coefficient"))?;
                products.push((e, c));
            }
        }
        Self::from_terms(products)
    }

    /// Exact quotient `self / divisor` by descending long division.
    ///
    /// Fails with [`Error::InexactDivision`] unless the remainder is zero and
    /// every quotient coefficient is an integer.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (lead_exp, lead_coeff) = divisor
            .leading()
            .ok_or_else(|| Error::Validation("division by the zero polynomial".into()))?;

        let mut rem: BTreeMap<u64, i64> = self.terms.iter().copied().collect();
        let mut quotient = Vec::new();
        while let Some((&exp, &coeff)) = rem.last_key_value() {
            if exp < lead_exp || coeff % lead_coeff != 0 {
                return Err(Error::InexactDivision { degree: exp });
            }
            let q_exp = exp - lead_exp;
            let q_coeff = coeff
                .checked_div(lead_coeff)
                .ok_or(Error::Overflow("exact_div"))?;
            quotient.push((q_exp, q_coeff));
            for &(e, c) in &divisor.terms {
                let delta = q_coeff.checked_mul(c).ok_or(Error::Overflow("exact_div"))?;
                let slot = rem.entry(e + q_exp).or_insert(0);
                *slot = slot
                    .checked_sub(delta)
                    .ok_or(Error::Overflow("exact_div"))?;
                if *slot == 0 {
                    rem.remove(&(e + q_exp));
                }
            }
        }
        quotient.reverse();
        Ok(Self { terms: quotient })
    }

    /// `f(1)`, the coefficient sum.
    pub fn eval_at_one(&self) -> Result<i64> {
        self.terms
            .iter()
            .try_fold(0i64, |acc, &(_, c)| acc.checked_add(c))
            .ok_or(Error::Overflow("eval_at_one"))
    }

    /// `1 + X + ... + X^{n-1}`.
    pub fn geometric_sum(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("geometric_sum needs n >= 1".into()));
        }
        Ok(Self {
            terms: (0..n).map(|e| (e, 1)).collect(),
        })
    }

    /// Ascending coefficient vector of length `degree + 1`; the zero
    /// polynomial densifies to `[0]`.
    pub fn to_dense(&self, max_degree_cap: u64) -> Result<Vec<i64>> {
        let degree = self.degree().unwrap_or(0);
        if degree > max_degree_cap {
            return Err(Error::Capacity {
                degree,
                cap: max_degree_cap,
            });
        }
        let len = usize::try_from(degree)
            .ok()
            .and_then(|d| d.checked_add(1))
            .ok_or(Error::Capacity {
                degree,
                cap: max_degree_cap,
            })?;
        let mut dense = vec![0i64; len];
        for &(e, c) in &self.terms {
            dense[e as usize] = c;
        }
        Ok(dense)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, &(e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.unsigned_abs();
            match (e, abs) {
                (0, _) => write!(f, "{abs}")?,
                (_, 1) => {}
                _ => write!(f, "{abs}*")?,
            }
            match e {
                0 => {}
                1 => f.write_str("X")?,
                _ => write!(f, "X^{e}")?,
            }
        }
        Ok(())
    }
}
