//! Socles of `S/I` for principal d-fixed ideals: closed-form component
//! ideals and degrees, plus a brute-force degreewise enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixed::{principal_ideal, PrincipalInput};
use crate::ideal::{MembershipGrid, MonomialIdeal};
use crate::monomial::{binomial, monomials_of_degree, Monomial};

/// `(λ, t)` with `λ_1 < … < λ_a = r` (1-based blocks) and
/// `t_1 < … < t_a`, `α_{λ_ν t_ν} ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IndexPair {
    pub lambda: Vec<usize>,
    pub t: Vec<usize>,
}

impl IndexPair {
    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }
}

impl std::fmt::Display for IndexPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "(({}),({}))", join(&self.lambda), join(&self.t))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKey {
    /// Single-block component `J_t`.
    Digit(usize),
    Pair(IndexPair),
}

impl std::fmt::Display for ComponentKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComponentKey::Digit(t) => write!(f, "J_{t}"),
            ComponentKey::Pair(p) => write!(f, "J_{p}"),
        }
    }
}

/// A component ideal; it is generated in the single degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleComponent {
    pub key: ComponentKey,
    pub degree: u64,
    pub ideal: MonomialIdeal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SocleDegree {
    pub degree: u64,
    pub dimension: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    pub components: Vec<SocleComponent>,
    /// Nonzero socle degrees, ascending.
    pub degrees: Vec<SocleDegree>,
    pub max_degree: u64,
}

/// One nonzero degree of `Soc(S/I)` with its monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleBasis {
    pub degree: u32,
    pub dimension: usize,
    pub basis: Vec<Monomial>,
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

/// `e_t = q_t + (n-1)(d_t - 1) - 1` with `q_t = Σ_{j>=t} α_j d_j`.
pub fn single_degree(input: &PrincipalInput, t: usize) -> u64 {
    let d_t = input.d().get(t) as u64;
    input.tail_sum(0, t) + (input.n() as u64 - 1) * (d_t - 1) - 1
}

/// `h_t = C(n+α_t-2, n-1) · ∏_{j>t} C(n+α_j-1, n-1)`.
pub fn single_dimension(input: &PrincipalInput, t: usize) -> u128 {
    let n = input.n() as u64;
    let digits = input.digits(0);
    let mut h = binomial(n + digits[t] as u64 - 2, n - 1);
    for &a in &digits[t + 1..] {
        h *= binomial(n + a as u64 - 1, n - 1);
    }
    h
}

/// For `n = 2` and nonzero digits at `t < t2`: `e_t = e_{t2}` exactly when
/// every digit in `[t, t2)` is maximal, `α_k = d_{k+1}/d_k - 1`.
pub fn degrees_collide(input: &PrincipalInput, t: usize, t2: usize) -> bool {
    input.n() == 2
        && t < t2
        && (t..t2).all(|k| Some(input.digit(0, k) + 1) == input.d().ratio(k))
}

fn check_single(input: &PrincipalInput) -> Result<()> {
    require(input.n() >= 2, "the socle formulas need n >= 2")?;
    require(input.r() == 1, "single-block socle needs r = 1")?;
    require(input.blocks()[0].var == input.n(), "single-block socle needs i_1 = n")
}

fn check_general(input: &PrincipalInput) -> Result<()> {
    require(input.n() >= 2, "the socle formulas need n >= 2")?;
    require(
        input.blocks()[0].var >= 2,
        "the socle formulas need i_1 >= 2; factor out the x1 power first",
    )?;
    require(input.ends_at_last_variable(), "the socle formulas need i_r = n")
}

fn times(acc: MonomialIdeal, factor: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    (0..k).try_fold(acc, |acc, _| acc.multiply(factor))
}

/// `J_t = (x_1⋯x_n)^{d_t-1} (m^{[d_t]})^{α_t-1} ∏_{j>t} (m^{[d_j]})^{α_j}`.
pub fn single_component(input: &PrincipalInput, t: usize) -> Result<MonomialIdeal> {
    let n = input.n();
    let d_t = input.d().get(t);
    let mut acc = MonomialIdeal::principal(Monomial::from_vec(vec![d_t - 1; n]));
    acc = times(acc, &input.bracket(0, t), input.digit(0, t) - 1)?;
    for j in t + 1..input.d().len() {
        acc = times(acc, &input.bracket(0, j), input.digit(0, j))?;
    }
    Ok(acc)
}

pub fn socle_ideal_single(input: &PrincipalInput) -> Result<SocleReport> {
    check_single(input)?;
    let mut components = Vec::new();
    let mut by_degree: BTreeMap<u64, u128> = BTreeMap::new();
    for t in (0..input.d().len()).filter(|&t| input.digit(0, t) > 0) {
        let degree = single_degree(input, t);
        components.push(SocleComponent {
            key: ComponentKey::Digit(t),
            degree,
            ideal: single_component(input, t)?,
        });
        *by_degree.entry(degree).or_default() += single_dimension(input, t);
    }
    let s = input.top_digit(0);
    let max_degree = input.digit(0, s) as u64 * input.d().get(s) as u64
        + (input.n() as u64 - 1) * (input.d().get(s) as u64 - 1)
        - 1;
    Ok(SocleReport {
        components,
        degrees: by_degree
            .into_iter()
            .map(|(degree, dimension)| SocleDegree { degree, dimension })
            .collect(),
        max_degree,
    })
}

/// All of `P_a(I)` for `1 <= a <= r`, ordered by `a`, then `λ`, then `t`.
pub fn enumerate_pairs(input: &PrincipalInput) -> Vec<IndexPair> {
    let r = input.r();
    let s = input.d().len();
    let mut out = Vec::new();
    for a in 1..=r {
        // λ: a-subsets of {1..r} containing r, in lex order.
        let mut lambdas = Vec::new();
        subsets(1, r - 1, a - 1, &mut Vec::new(), &mut lambdas);
        for mut lambda in lambdas {
            lambda.push(r);
            let mut ts = Vec::new();
            digit_chains(input, &lambda, 0, 0, s, &mut Vec::new(), &mut ts);
            out.extend(ts.into_iter().map(|t| IndexPair { lambda: lambda.clone(), t }));
        }
    }
    out
}

fn subsets(from: usize, to: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for v in from..=to {
        cur.push(v);
        subsets(v + 1, to, k, cur, out);
        cur.pop();
    }
}

fn digit_chains(
    input: &PrincipalInput,
    lambda: &[usize],
    nu: usize,
    from: usize,
    s: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if nu == lambda.len() {
        out.push(cur.clone());
        return;
    }
    for t in from..s {
        if input.digit(lambda[nu] - 1, t) != 0 {
            cur.push(t);
            digit_chains(input, lambda, nu + 1, t + 1, s, cur, out);
            cur.pop();
        }
    }
}

/// Variable index `i_{λ_ν}` with `i_{λ_0} = 0`.
fn block_var(input: &PrincipalInput, lambda_nu: usize) -> usize {
    if lambda_nu == 0 {
        0
    } else {
        input.blocks()[lambda_nu - 1].var
    }
}

/// `J_(λ,t)` transcribed factor by factor; the bracket in the `ν`-th
/// factor uses `d_{t_{ν+1}}`, the unit ideal when `ν = a`.
pub fn pair_component(input: &PrincipalInput, pair: &IndexPair) -> Result<MonomialIdeal> {
    let n = input.n();
    let d = input.d();
    let a = pair.len();
    let lam = |nu: usize| if nu == 0 { 0 } else { pair.lambda[nu - 1] };
    let mut shift = vec![0u32; n];
    for e in 1..=a {
        let exp = d.get(pair.t[e - 1]) - 1;
        for v in block_var(input, lam(e - 1))..block_var(input, lam(e)) {
            shift[v] = exp;
        }
    }
    let mut acc = MonomialIdeal::principal(Monomial::from_vec(shift));
    for nu in 1..=a {
        let q = lam(nu) - 1;
        let t_nu = pair.t[nu - 1];
        if nu < a {
            acc = acc.multiply(&input.bracket(q, pair.t[nu]))?;
        }
        for j in t_nu + 1..d.len() {
            acc = times(acc, &input.bracket(q, j), input.digit(q, j))?;
        }
        acc = times(acc, &input.bracket(q, t_nu), input.digit(q, t_nu) - 1)?;
        for mid in lam(nu - 1) + 1..lam(nu) {
            for j in t_nu..d.len() {
                acc = times(acc, &input.bracket(mid - 1, j), input.digit(mid - 1, j))?;
            }
        }
    }
    Ok(acc)
}

/// `e = d_(λ,t) + Σ_ν (i_{λ_ν} - i_{λ_{ν-1}})(d_{t_ν} - 1) - d_{t_1}`.
pub fn pair_degree(input: &PrincipalInput, pair: &IndexPair) -> u64 {
    let d = input.d();
    let mut total = 0u64;
    let mut prev = 0usize;
    for (nu, (&l, &t)) in pair.lambda.iter().zip(&pair.t).enumerate() {
        for q in prev..l {
            total += (t..d.len())
                .map(|j| input.digit(q, j) as u64 * d.get(j) as u64)
                .sum::<u64>();
        }
        let width = block_var(input, l) - block_var(input, if nu == 0 { 0 } else { prev });
        total += width as u64 * (d.get(t) as u64 - 1);
        prev = l;
    }
    total - d.get(pair.t[0]) as u64
}

/// `D_r - 1`, the top socle degree.
pub fn general_max_degree(input: &PrincipalInput) -> u64 {
    input.d_value(input.r() - 1) - 1
}

pub fn socle_ideal_general(input: &PrincipalInput) -> Result<SocleReport> {
    check_general(input)?;
    let ideal = principal_ideal(input)?;
    let components = enumerate_pairs(input)
        .into_iter()
        .map(|pair| {
            Ok(SocleComponent {
                degree: pair_degree(input, &pair),
                ideal: pair_component(input, &pair)?,
                key: ComponentKey::Pair(pair),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let degrees = count_dimensions(&ideal, &components);
    Ok(SocleReport { components, degrees, max_degree: general_max_degree(input) })
}

/// `dim ((J + I)/I)_e` at each component degree, by enumerating monomials.
/// Components are equigenerated and `m·J ⊆ I`, so only component degrees
/// can carry socle.
pub fn count_dimensions(ideal: &MonomialIdeal, components: &[SocleComponent]) -> Vec<SocleDegree> {
    let mut groups: BTreeMap<u64, Vec<&MonomialIdeal>> = BTreeMap::new();
    for c in components {
        groups.entry(c.degree).or_default().push(&c.ideal);
    }
    groups
        .into_par_iter()
        .filter_map(|(degree, parts)| {
            let dimension = monomials_of_degree(ideal.n(), degree as u32)
                .iter()
                .filter(|w| !ideal.member(w) && parts.iter().any(|p| p.member(w)))
                .count() as u128;
            (dimension > 0).then_some(SocleDegree { degree, dimension })
        })
        .collect()
}

/// Dispatches to the single-block or general formula.
pub fn socle_formula(input: &PrincipalInput) -> Result<SocleReport> {
    if input.r() == 1 {
        socle_ideal_single(input)
    } else {
        socle_ideal_general(input)
    }
}

/// Monomials `w ∉ I` with `x_i·w ∈ I` for all `i`, degree by degree.
pub fn socle_direct(ideal: &MonomialIdeal, degree_lo: u32, degree_hi: u32) -> Result<Vec<SocleBasis>> {
    if degree_lo > degree_hi {
        return Err(Error::Precondition(format!(
            "empty degree range {degree_lo}..{degree_hi}"
        )));
    }
    let n = ideal.n();
    let grid = MembershipGrid::new(ideal, degree_hi + 1);
    let per_degree: Vec<SocleBasis> = (degree_lo..=degree_hi)
        .into_par_iter()
        .filter_map(|degree| {
            let basis: Vec<Monomial> = monomials_of_degree(n, degree)
                .into_iter()
                .filter(|w| !grid.member(w) && (0..n).all(|v| grid.member(&w.times_var(v, 1))))
                .collect();
            (!basis.is_empty()).then(|| SocleBasis { degree, dimension: basis.len(), basis })
        })
        .collect();
    Ok(per_degree)
}

/// Every generator of `I : m` lies in `I : x_n^∞`, the first chain step.
pub fn socle_containment_check(input: &PrincipalInput) -> Result<bool> {
    require(input.ends_at_last_variable(), "socle containment needs i_r = n")?;
    if input.r() == 1 {
        return Ok(true);
    }
    let ideal = principal_ideal(input)?;
    let colon = ideal.colon(&MonomialIdeal::maximal(input.n()))?;
    let step = ideal.saturate_var(input.n() - 1)?;
    Ok(step.contains(&colon))
}

/// Formula degrees and dimensions paired against [`socle_direct`] over
/// `[0, max_degree + n]`.
pub fn agrees_with_direct(input: &PrincipalInput, report: &SocleReport) -> Result<bool> {
    let ideal = principal_ideal(input)?;
    let hi = report.max_degree as u32 + input.n() as u32;
    let direct: Vec<SocleDegree> = socle_direct(&ideal, 0, hi)?
        .into_iter()
        .map(|b| SocleDegree { degree: b.degree as u64, dimension: b.dimension as u128 })
        .collect();
    Ok(direct == report.degrees
        && direct.last().map(|d| d.degree) == Some(report.max_degree))
}
