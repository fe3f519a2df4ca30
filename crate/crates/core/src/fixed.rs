//! Principal d-fixed ideals and the d-fixed / stable / Borel-type predicates.
//!
//! A principal input `u = x_{i_1}^{α_1} ⋯ x_{i_r}^{α_r}` expands to
//! `∏_q ∏_t (m_q^{[d_t]})^{α_qt}` where `m_q = (x_1, …, x_{i_q})` and
//! `α_qt` is the `t`-th d-adic digit of `α_q`. [`closure`] computes the same
//! ideal by saturating `u` under the exchange moves, with no use of the
//! product form, so the two can be compared.

use serde::{Deserialize, Serialize};

use crate::dseq::DSequence;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// One factor `x_var^exponent` of a principal generator; `var` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub var: usize,
    pub exponent: u32,
}

/// A target monomial with the digit data the closed formulas consume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalInput {
    d: DSequence,
    n: usize,
    blocks: Vec<Block>,
    digits: Vec<Vec<u32>>,
}

impl PrincipalInput {
    pub fn new(d: DSequence, n: usize, blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Precondition("a principal input needs at least one block".into()));
        }
        for (k, b) in blocks.iter().enumerate() {
            if b.var == 0 || b.var > n {
                return Err(Error::VariableRange { index: b.var, n });
            }
            if b.exponent == 0 {
                return Err(Error::Precondition(format!("block x{} has exponent 0", b.var)));
            }
            if k > 0 && blocks[k - 1].var >= b.var {
                return Err(Error::Precondition("block variables must strictly increase".into()));
            }
        }
        let digits = blocks
            .iter()
            .map(|b| d.decompose(b.exponent).digits().to_vec())
            .collect();
        Ok(Self { d, n, blocks, digits })
    }

    /// Reads the blocks off the nonzero exponents of `u`.
    pub fn from_monomial(d: DSequence, u: &Monomial) -> Result<Self> {
        let blocks = u
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| Block { var: i + 1, exponent: e })
            .collect();
        Self::new(d, u.n(), blocks)
    }

    /// `x_n^α`.
    pub fn pure_power(d: DSequence, n: usize, alpha: u32) -> Result<Self> {
        Self::new(d, n, vec![Block { var: n, exponent: alpha }])
    }

    pub fn d(&self) -> &DSequence {
        &self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of blocks `r`.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn monomial(&self) -> Monomial {
        let mut v = vec![0; self.n];
        for b in &self.blocks {
            v[b.var - 1] = b.exponent;
        }
        Monomial::from_vec(v)
    }

    /// `α_qt` for 0-based block `q`.
    pub fn digit(&self, q: usize, t: usize) -> u32 {
        self.digits[q][t]
    }

    pub fn digits(&self, q: usize) -> &[u32] {
        &self.digits[q]
    }

    /// `s_q`: position of the top nonzero digit of `α_q`.
    pub fn top_digit(&self, q: usize) -> usize {
        self.digits[q]
            .iter()
            .rposition(|&a| a != 0)
            .expect("block exponents are positive")
    }

    /// `d_qt = Σ_{e<=q} Σ_{j>=t} α_ej d_j` (0-based `q`).
    pub fn tail_sum(&self, q: usize, t: usize) -> u64 {
        (0..=q)
            .map(|e| {
                (t..self.d.len())
                    .map(|j| self.digits[e][j] as u64 * self.d.get(j) as u64)
                    .sum::<u64>()
            })
            .sum()
    }

    /// `D_q = d_{q,s_q} + (i_q - 1)(d_{s_q} - 1)`.
    pub fn d_value(&self, q: usize) -> u64 {
        let s = self.top_digit(q);
        self.tail_sum(q, s) + (self.blocks[q].var as u64 - 1) * (self.d.get(s) as u64 - 1)
    }

    pub fn d_values(&self) -> Vec<u64> {
        (0..self.r()).map(|q| self.d_value(q)).collect()
    }

    pub fn degree(&self) -> u64 {
        self.blocks.iter().map(|b| b.exponent as u64).sum()
    }

    /// `i_r = n`, required by the socle and regularity formulas.
    pub fn ends_at_last_variable(&self) -> bool {
        self.blocks.last().map(|b| b.var) == Some(self.n)
    }

    /// For `i_1 = 1`, returns `α_1` together with the input for `u / x_1^{α_1}`
    /// (`None` when nothing is left).
    pub fn split_first_variable(&self) -> Option<(u32, Option<PrincipalInput>)> {
        let first = self.blocks[0];
        if first.var != 1 {
            return None;
        }
        let rest = (self.r() > 1).then(|| {
            Self::new(self.d.clone(), self.n, self.blocks[1..].to_vec())
                .expect("a suffix of valid blocks is valid")
        });
        Some((first.exponent, rest))
    }

    /// `(m_q^{[d_t]})` for block `q` (0-based).
    pub fn bracket(&self, q: usize, t: usize) -> MonomialIdeal {
        MonomialIdeal::prefix_frobenius(self.blocks[q].var, self.d.get(t), self.n)
            .expect("block variables are within range")
    }

    /// `⟨x_{i_q}^{α_q}⟩_d = ∏_t (m_q^{[d_t]})^{α_qt}`.
    pub fn block_ideal(&self, q: usize) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for t in 0..self.d.len() {
            let bracket = self.bracket(q, t);
            for _ in 0..self.digits[q][t] {
                acc = acc.multiply(&bracket)?;
            }
        }
        Ok(acc)
    }

    /// Product of the first `e` block ideals.
    pub fn prefix_product(&self, e: usize) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for q in 0..e {
            acc = acc.multiply(&self.block_ideal(q)?)?;
        }
        Ok(acc)
    }
}

#[derive(Serialize, Deserialize)]
struct InputRecord {
    d: DSequence,
    n: usize,
    u: String,
}

impl Serialize for PrincipalInput {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        InputRecord { d: self.d.clone(), n: self.n, u: self.monomial().to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PrincipalInput {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = InputRecord::deserialize(d)?;
        let u = Monomial::parse(&rec.u, rec.n).map_err(serde::de::Error::custom)?;
        PrincipalInput::from_monomial(rec.d, &u).map_err(serde::de::Error::custom)
    }
}

/// `⟨u⟩_d` by the product formula, minimalizing after every factor.
pub fn principal_ideal(input: &PrincipalInput) -> Result<MonomialIdeal> {
    input.prefix_product(input.r())
}

/// Every monomial reachable from `u` by a single move
/// `u ↦ u·x_j^t / x_i^t` with `j < i` and `0 < t <=_d ν_i(u)`.
pub fn exchanges<'a>(u: &'a Monomial, d: &'a DSequence) -> impl Iterator<Item = Monomial> + 'a {
    (1..u.n()).flat_map(move |i| {
        let subs = d.sub_values(u.exponents()[i]);
        (0..i).flat_map(move |j| {
            subs.clone()
                .into_iter()
                .filter(|&t| t > 0)
                .map(move |t| u.exchange(i, j, t).expect("t <= exponent"))
        })
    })
}

/// The smallest d-fixed ideal containing `gens`, by fixpoint iteration.
///
/// Only generators need their moves checked: if `w = g·y` and
/// `t <=_d ν_i(w)`, splitting `t = t' + t''` with `t' <=_d ν_i(g)` and
/// `t'' <=_d ν_i(y)` shows that the move on `w` lands in a multiple of
/// a move on `g`.
pub fn closure(gens: &[Monomial], d: &DSequence) -> Result<MonomialIdeal> {
    let n = gens
        .first()
        .map(Monomial::n)
        .ok_or_else(|| Error::Precondition("closure needs at least one generator".into()))?;
    let mut ideal = MonomialIdeal::minimalize(n, gens.iter().cloned())?;
    let mut frontier: Vec<Monomial> = ideal.gens().to_vec();
    while !frontier.is_empty() {
        let mut fresh: Vec<Monomial> = Vec::new();
        for g in &frontier {
            for w in exchanges(g, d) {
                if !ideal.member(&w) && !fresh.contains(&w) {
                    fresh.push(w);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        let mut all = ideal.gens().to_vec();
        all.extend(fresh.iter().cloned());
        ideal = MonomialIdeal::minimalize(n, all)?;
        frontier = fresh.into_iter().filter(|w| ideal.gens().contains(w)).collect();
    }
    Ok(ideal)
}

/// Checks the exchange property on the minimal generators (sufficient by
/// the splitting argument in [`closure`]).
pub fn is_dfixed(ideal: &MonomialIdeal, d: &DSequence) -> bool {
    ideal
        .gens()
        .iter()
        .all(|g| exchanges(g, d).all(|w| ideal.member(&w)))
}

/// `x_i·g / x_{m(g)} ∈ I` for every generator `g` and every `i < m(g)`.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|g| match g.max_var() {
        None => true,
        Some(m) => (0..m).all(|i| ideal.member(&g.exchange(m, i, 1).expect("x_m divides g"))),
    })
}

/// `I : x_j^∞ = I : (x_1, …, x_j)^∞` for every `j`.
///
/// The right side is `⋂_{i<=j} I : x_i^∞` and is always contained in the
/// left, so it suffices that every generator of `I : x_j^∞` lies in each
/// `I : x_i^∞` with `i < j`.
pub fn is_borel_type(ideal: &MonomialIdeal) -> Result<bool> {
    let sats = (0..ideal.n())
        .map(|v| ideal.saturate_var(v))
        .collect::<Result<Vec<_>>>()?;
    Ok((1..sats.len()).all(|j| (0..j).all(|i| sats[i].contains(&sats[j]))))
}

/// [`is_borel_type`] by literal comparison of the two saturations, each
/// computed by iterated colon.
pub fn is_borel_type_by_colon(ideal: &MonomialIdeal) -> Result<bool> {
    let n = ideal.n();
    for j in 0..n {
        let prefix = MonomialIdeal::prefix_frobenius(j + 1, 1, n)?;
        if ideal.saturate_var(j)? != ideal.saturate(&prefix)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least `e >= deg(I)` with `I_{>=e}` stable, searching up to `n·deg(I)`.
pub fn min_stable_truncation(ideal: &MonomialIdeal) -> Result<u32> {
    let deg = ideal.ideal_degree()?;
    min_stable_truncation_within(ideal, deg.saturating_mul(ideal.n().max(1) as u32))
}

/// As [`min_stable_truncation`] with an explicit upper limit on `e`.
pub fn min_stable_truncation_within(ideal: &MonomialIdeal, limit: u32) -> Result<u32> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("min_stable_truncation"));
    }
    let deg = ideal.ideal_degree()?;
    (deg..=limit)
        .find(|&e| is_stable(&ideal.truncate(e)))
        .ok_or(Error::NoStableTruncation { from: deg, to: limit })
}
