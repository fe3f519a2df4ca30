//! Monomials in `k[x_1, ..., x_n]` stored as exponent vectors.
//!
//! Variables are indexed from 0 in the API (`exponents()[0]` is the
//! exponent of `x1`); the text form uses the usual 1-based names.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::dseq::{check_range, MAX_VALUE};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if let Some(&e) = exponents.iter().find(|&&e| e > MAX_VALUE) {
            return Err(Error::OutOfRange(e as u64));
        }
        Ok(Self(exponents))
    }

    /// Unchecked constructor for internal arithmetic whose results are known
    /// to stay in range.
    pub(crate) fn from_vec(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `x_{var+1}^e` (0-based `var`).
    pub fn pure_power(var: usize, e: u32, n: usize) -> Self {
        let mut v = vec![0; n];
        v[var] = e;
        Self(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// 0-based index of the last variable that occurs; `None` for `1`.
    pub fn max_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let v = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| check_range(a as u64 + b as u64))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self(v))
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    /// Multiplies by `x_var^e` (0-based).
    pub fn times_var(&self, var: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[var] += e;
        Self(v)
    }

    /// Divides by `x_var^e`, `None` if the exponent is too small.
    pub fn over_var(&self, var: usize, e: u32) -> Option<Monomial> {
        let mut v = self.0.clone();
        v[var] = v[var].checked_sub(e)?;
        Some(Self(v))
    }

    /// `self * x_to^t / x_from^t`.
    pub fn exchange(&self, from: usize, to: usize, t: u32) -> Option<Monomial> {
        let mut v = self.0.clone();
        v[from] = v[from].checked_sub(t)?;
        v[to] += t;
        Some(Self(v))
    }

    /// Parses `x1^2*x3` style text in `n` variables. `1` is the unit.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let factors = parse_factors(s)?;
        let mut v = vec![0u64; n];
        for (var, e) in factors {
            if var == 0 || var > n {
                return Err(Error::VariableRange { index: var, n });
            }
            v[var - 1] += e;
        }
        let v = v.into_iter().map(check_range).collect::<Result<Vec<_>>>()?;
        Ok(Self(v))
    }

    /// Largest 1-based variable index mentioned in the text (0 for `1`).
    pub fn max_index_in(s: &str) -> Result<usize> {
        Ok(parse_factors(s)?.into_iter().map(|(v, _)| v).max().unwrap_or(0))
    }
}

fn parse_factors(s: &str) -> Result<Vec<(usize, u64)>> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    let bad = |tok: &str| Error::Parse(format!("cannot read monomial factor `{tok}` in `{s}`"));
    s.split('*')
        .map(|tok| {
            let tok = tok.trim();
            let body = tok.strip_prefix('x').ok_or_else(|| bad(tok))?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (v, e),
                None => (body, "1"),
            };
            let var: usize = var.parse().map_err(|_| bad(tok))?;
            let exp: u64 = exp.parse().map_err(|_| bad(tok))?;
            Ok((var, exp))
        })
        .collect()
}

/// Degree first, then larger exponent vectors first, so within a degree
/// `x1^2 < x1*x2 < x2^2`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All monomials of total degree `deg` in `n` variables, in canonical order.
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<Monomial> {
    fn go(k: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == cur.len() {
            cur[k] = rest;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=rest).rev() {
            cur[k] = e;
            go(k + 1, rest - e, cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if deg == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    go(0, deg, &mut vec![0; n], &mut out);
    out
}

/// `C(a, b)` in u128; `0` when `b > a`.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u128, |acc, k| acc * (a - k) as u128 / (k + 1) as u128)
}
