//! d-sequences `1 = d_0 | d_1 | ... | d_s`, the d-adic digit expansion of
//! integers, and the digitwise partial order `<=_d`.
//!
//! Every value handled here is a nonnegative integer no larger than
//! `2^31 - 1`; larger inputs are rejected at construction and parse time.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest integer accepted anywhere in the toolkit.
pub const MAX_VALUE: u32 = i32::MAX as u32;

pub(crate) fn check_range(v: u64) -> Result<u32> {
    if v > MAX_VALUE as u64 {
        Err(Error::OutOfRange(v))
    } else {
        Ok(v as u32)
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let v: u64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a nonnegative integer")))?;
            check_range(v)
        })
        .collect()
}

fn join(entries: &[u32]) -> String {
    entries.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// A strictly increasing sequence starting at 1 that need not satisfy the
/// divisibility condition. Only used to exercise uniqueness of digit
/// expansions on sequences that are not d-sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LooseSequence(Vec<u32>);

impl LooseSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        check_prefix(&entries, false)?;
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl FromStr for LooseSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

impl fmt::Display for LooseSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

/// Scans entries left to right and reports the first violated invariant.
fn check_prefix(entries: &[u32], divisibility: bool) -> Result<()> {
    let first = *entries.first().ok_or(Error::EmptySequence)?;
    if first != 1 {
        return Err(Error::FirstNotOne(first));
    }
    for (index, w) in entries.windows(2).enumerate() {
        let (prev, value) = (w[0], w[1]);
        if value > MAX_VALUE {
            return Err(Error::OutOfRange(value as u64));
        }
        if value <= prev {
            return Err(Error::NotIncreasing { index: index + 1 });
        }
        if divisibility && value % prev != 0 {
            return Err(Error::NotDivisible { index: index + 1, prev, value });
        }
    }
    Ok(())
}

/// A d-sequence `1 = d_0 | d_1 | ... | d_s`, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DSequence(Vec<u32>);

impl DSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        check_prefix(&entries, true)?;
        Ok(Self(entries))
    }

    /// Accepts a loose sequence exactly when every `d_t` divides `d_{t+1}`.
    pub fn validate(candidate: &LooseSequence) -> Result<Self> {
        Self::new(candidate.entries().to_vec())
    }

    /// The single-entry chain `(1)`; every exponent is its own top digit.
    pub fn trivial() -> Self {
        Self(vec![1])
    }

    /// The truncated p-adic chain `1, p, p^2, ..., p^k`.
    pub fn p_adic(p: u32, k: u32) -> Result<Self> {
        let mut entries = vec![1u32];
        let mut cur = 1u64;
        for _ in 0..k {
            cur *= p as u64;
            entries.push(check_range(cur)?);
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Index of the last entry, `s`.
    pub fn top(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, t: usize) -> u32 {
        self.0[t]
    }

    /// `d_{t+1} / d_t` for `t < s`; `None` for the unbounded top digit.
    pub fn ratio(&self, t: usize) -> Option<u32> {
        (t < self.top()).then(|| self.0[t + 1] / self.0[t])
    }

    /// Greedy expansion: the top digit is the quotient by `d_s`, then each
    /// lower digit is the quotient of the remainder by `d_t`.
    pub fn decompose(&self, a: u32) -> DDigits<'_> {
        let mut digits = vec![0u32; self.len()];
        let mut rest = a;
        for t in (0..self.len()).rev() {
            digits[t] = rest / self.0[t];
            rest %= self.0[t];
        }
        DDigits { seq: self, digits }
    }

    /// `a <=_d b`: every digit of `a` is at most the matching digit of `b`.
    pub fn leq(&self, a: u32, b: u32) -> bool {
        let (da, db) = (self.decompose(a), self.decompose(b));
        da.digits.iter().zip(&db.digits).all(|(x, y)| x <= y)
    }

    /// All `t` with `t <=_d b`, ascending.
    pub fn sub_values(&self, b: u32) -> Vec<u32> {
        let digits = self.decompose(b).digits;
        let mut values = vec![0u32];
        for (t, &bt) in digits.iter().enumerate() {
            let dt = self.0[t];
            values = values
                .iter()
                .flat_map(|&v| (0..=bt).map(move |k| v + k * dt))
                .collect();
        }
        values.sort_unstable();
        values
    }

    /// Splits `a <=_d b' + b''` as `a = a' + a''` with `a' <=_d b'` and
    /// `a'' <=_d b''`. Searches `a'` upward, so the returned pair has the
    /// smallest possible `a'`.
    pub fn split(&self, a: u32, b_prime: u32, b_second: u32) -> Result<(u32, u32)> {
        let b = b_prime
            .checked_add(b_second)
            .ok_or(Error::Overflow("b' + b''"))?;
        if !self.leq(a, b) {
            return Err(Error::NotBelow { a, b });
        }
        self.sub_values(b_prime)
            .into_iter()
            .take_while(|&x| x <= a)
            .find(|&x| self.leq(a - x, b_second))
            .map(|x| (x, a - x))
            .ok_or_else(|| Error::Precondition(format!("no split of {a} over {b_prime}+{b_second}")))
    }
}

impl FromStr for DSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

impl TryFrom<String> for DSequence {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DSequence> for String {
    fn from(d: DSequence) -> String {
        d.to_string()
    }
}

impl fmt::Display for DSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

/// Digits `(a_0, ..., a_s)` of an integer with respect to a d-sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DDigits<'a> {
    seq: &'a DSequence,
    digits: Vec<u32>,
}

impl<'a> DDigits<'a> {
    /// Checks `a_t < d_{t+1}/d_t` for `t < s` and that the composed value
    /// stays in range.
    pub fn new(seq: &'a DSequence, digits: Vec<u32>) -> Result<Self> {
        if digits.len() != seq.len() {
            return Err(Error::Precondition(format!(
                "expected {} digits, got {}",
                seq.len(),
                digits.len()
            )));
        }
        for (index, &digit) in digits.iter().enumerate() {
            if seq.ratio(index).is_some_and(|r| digit >= r) {
                return Err(Error::DigitBound { index, digit });
            }
        }
        let total: u64 = digits
            .iter()
            .zip(seq.entries())
            .map(|(&a, &d)| a as u64 * d as u64)
            .sum();
        check_range(total)?;
        Ok(Self { seq, digits })
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn sequence(&self) -> &DSequence {
        self.seq
    }

    /// `sum a_t d_t`.
    pub fn compose(&self) -> u32 {
        self.digits
            .iter()
            .zip(self.seq.entries())
            .map(|(&a, &d)| a * d)
            .sum()
    }

    /// Largest `t` with a nonzero digit, `None` for zero.
    pub fn top_nonzero(&self) -> Option<usize> {
        self.digits.iter().rposition(|&a| a != 0)
    }
}

/// Every digit vector `(a_0, ..., a_s)` with `a_t * d_t < d_{t+1}` for
/// `t < s` and `sum a_t d_t = a`, in lexicographic order. For a genuine
/// d-sequence there is exactly one.
pub fn all_representations(a: u32, candidate: &LooseSequence) -> Vec<Vec<u32>> {
    fn go(
        t: usize,
        rest: u64,
        d: &[u32],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let dt = d[t] as u64;
        let cap = if t + 1 < d.len() {
            (d[t + 1] as u64 - 1) / dt
        } else {
            u64::MAX
        };
        let hi = cap.min(rest / dt);
        if t == 0 {
            // d_0 = 1, so the last digit is forced.
            if rest <= hi {
                cur[0] = rest as u32;
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=hi {
            cur[t] = k as u32;
            go(t - 1, rest - k * dt, d, cur, out);
        }
    }
    let d = candidate.entries();
    let mut cur = vec![0u32; d.len()];
    let mut out = Vec::new();
    go(d.len() - 1, a as u64, d, &mut cur, &mut out);
    out.sort();
    out
}
