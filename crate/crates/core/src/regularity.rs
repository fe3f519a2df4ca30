//! Castelnuovo–Mumford regularity of principal d-fixed ideals: the closed
//! formula `reg = max_q D_q`, and three independent computations (chain
//! quotients, minimal stable truncation, Betti numbers).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, reg_from_betti};
use crate::chain::{quotient_dimensions, sequential_chain};
use crate::error::{Error, Result};
use crate::fixed::{is_borel_type, min_stable_truncation, principal_ideal, PrincipalInput};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Formula,
    Sequential,
    Stability,
    Betti,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Formula, Method::Sequential, Method::Stability, Method::Betti];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Sequential => "sequential",
            Method::Stability => "stability",
            Method::Betti => "betti",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method `{s}`")))
    }
}

/// A corner candidate `(i, j - i)` of the Betti table of `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Corner {
    /// Homological position, the chain pivot `n_ℓ`.
    pub position: usize,
    /// `s(J_ℓ^sat / J_ℓ)`.
    pub row: u64,
    /// `dim (J_ℓ^sat / J_ℓ)` in degree `row`.
    pub beta: u128,
    /// Row predicted by the closed formula.
    pub predicted_row: Option<u64>,
    /// Not weakly dominated by another candidate.
    pub survives: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub method: Method,
    pub value: u64,
    /// Set when `value` is only known to bound the regularity from above.
    pub upper_bound_only: bool,
    /// `α_1` when an `x_1` block was factored out before applying the formula.
    pub x1_factor: Option<u32>,
    /// `D_q` of the (factored) input, formula method only.
    pub d_values: Vec<u64>,
    /// `s(J_ℓ^sat/J_ℓ) + 1` per chain step, sequential method only.
    pub step_values: Vec<u64>,
    pub corners: Vec<Corner>,
}

impl RegularityReport {
    fn plain(method: Method, value: u64) -> Self {
        Self {
            method,
            value,
            upper_bound_only: false,
            x1_factor: None,
            d_values: Vec::new(),
            step_values: Vec::new(),
            corners: Vec::new(),
        }
    }
}

/// Splits `u = x_1^{α_1}·u'`; the shift is 0 when `i_1 > 1`.
fn factor_x1(input: &PrincipalInput) -> (u32, Option<PrincipalInput>) {
    match input.split_first_variable() {
        Some((a, rest)) => (a, rest),
        None => (0, Some(input.clone())),
    }
}

pub fn reg_formula(input: &PrincipalInput) -> Result<RegularityReport> {
    if !input.ends_at_last_variable() {
        return Err(Error::Precondition(
            "the regularity formula needs the last block at x_n".into(),
        ));
    }
    let (shift, rest) = factor_x1(input);
    let d_values = rest.as_ref().map(PrincipalInput::d_values).unwrap_or_default();
    let value = shift as u64 + d_values.iter().copied().max().unwrap_or(0);
    Ok(RegularityReport {
        x1_factor: (shift > 0).then_some(shift),
        d_values,
        ..RegularityReport::plain(Method::Formula, value)
    })
}

/// `n·deg(u)`.
pub fn reg_bound(input: &PrincipalInput) -> u64 {
    input.n() as u64 * input.degree()
}

fn dominated(p: (usize, u64), others: &[(usize, u64)]) -> bool {
    others.iter().any(|&q| q.0 >= p.0 && q.1 >= p.1 && q != p)
}

/// One candidate per chain step, with `β` from the top degree of
/// `J_ℓ^sat / J_ℓ`; domination is decided among the candidates.
pub fn corners(input: &PrincipalInput) -> Result<Vec<Corner>> {
    if !input.ends_at_last_variable() {
        return Err(Error::Precondition("corners need the last block at x_n".into()));
    }
    let ideal = principal_ideal(input)?;
    let chain = sequential_chain(&ideal)?;
    let limit = reg_bound(input) as u32;
    let (shift, rest) = factor_x1(input);
    let mut out = Vec::new();
    for step in &chain.steps {
        let dims = quotient_dimensions(step, limit)?;
        let Some(&top) = dims.last() else { continue };
        let predicted_row = match &rest {
            _ if step.pivot == 1 && shift > 0 => Some(shift as u64),
            Some(r) => r
                .blocks()
                .iter()
                .position(|b| b.var == step.pivot)
                .map(|q| r.d_value(q) - 1 + shift as u64),
            None => None,
        };
        out.push(Corner {
            position: step.pivot,
            row: dims.len() as u64 - 1,
            beta: top as u128,
            predicted_row,
            survives: false,
        });
    }
    let points: Vec<(usize, u64)> = out.iter().map(|c| (c.position, c.row)).collect();
    for c in &mut out {
        c.survives = !dominated((c.position, c.row), &points);
    }
    Ok(out)
}

/// `max_ℓ s(J_ℓ^sat / J_ℓ) + 1` over the sequential chain.
pub fn reg_sequential(ideal: &MonomialIdeal) -> Result<RegularityReport> {
    if !is_borel_type(ideal)? {
        return Err(Error::NotBorelType);
    }
    let chain = sequential_chain(ideal)?;
    let limit = (ideal.n() as u32 * ideal.ideal_degree()?).max(ideal.lcm_of_generators().degree());
    let mut step_values = Vec::new();
    for step in &chain.steps {
        let dims = quotient_dimensions(step, limit)?;
        if !dims.is_empty() {
            step_values.push(dims.len() as u64);
        }
    }
    let value = step_values.iter().copied().max().ok_or_else(|| {
        Error::Precondition("every chain quotient vanished".into())
    })?;
    Ok(RegularityReport { step_values, ..RegularityReport::plain(Method::Sequential, value) })
}

/// Least `e` with `I_{>=e}` stable; an upper bound on `reg(I)` in general.
pub fn reg_stability(ideal: &MonomialIdeal) -> Result<RegularityReport> {
    let value = min_stable_truncation(ideal)? as u64;
    Ok(RegularityReport {
        upper_bound_only: true,
        ..RegularityReport::plain(Method::Stability, value)
    })
}

/// [`reg_stability`] on a principal input; exact for pure powers `x_n^α`.
pub fn reg_stability_for(input: &PrincipalInput) -> Result<RegularityReport> {
    let mut report = reg_stability(&principal_ideal(input)?)?;
    report.upper_bound_only = !(input.r() == 1 && input.ends_at_last_variable());
    Ok(report)
}

/// Regularity from a certified Betti table computed up to `max_degree`.
pub fn reg_betti(ideal: &MonomialIdeal, max_degree: u32, characteristic: u64) -> Result<RegularityReport> {
    let table = betti_table(ideal, max_degree, characteristic)?;
    let reg = reg_from_betti(&table)?;
    Ok(RegularityReport::plain(Method::Betti, reg.ideal))
}

/// A factorization `v = w·y` with `w ∈ G(I)` and `m(y) = m(v)`.
pub fn stable_factorization(ideal: &MonomialIdeal, v: &Monomial) -> Option<(Monomial, Monomial)> {
    let top = v.max_var();
    ideal.gens().iter().find_map(|w| {
        let y = v.div(w)?;
        (y.max_var() == top).then(|| (w.clone(), y))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dseq::DSequence;
    use crate::monomial::monomials_of_degree;

    fn d() -> DSequence {
        "1,2,4,12".parse().unwrap()
    }

    fn input(u: &str, n: usize) -> PrincipalInput {
        PrincipalInput::from_monomial(d(), &Monomial::parse(u, n).unwrap()).unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(reg_formula(&input("x3^21", 3)).unwrap().value, 34);
        let r = reg_formula(&input("x1^2*x2^16*x3^9", 3)).unwrap();
        assert_eq!((r.value, r.x1_factor), (32, Some(2)));
        assert_eq!(r.d_values, vec![23, 30]);
        let triv = PrincipalInput::pure_power(DSequence::trivial(), 4, 7).unwrap();
        assert_eq!(reg_formula(&triv).unwrap().value, 7);
        assert_eq!(reg_formula(&input("x1^5", 1)).unwrap().value, 5);
        assert!(reg_formula(&input("x2^5", 3)).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(reg_bound(&input("x3^21", 3)), 63);
        assert_eq!(reg_bound(&input("x1^2*x2^16*x3^9", 3)), 81);
        assert_eq!(reg_bound(&input("x3", 3)), 3);
    }

    #[test]
    fn independent_routes_on_pure_power() {
        let inp = input("x3^21", 3);
        let ideal = principal_ideal(&inp).unwrap();
        assert_eq!(reg_sequential(&ideal).unwrap().value, 34);
        let st = reg_stability_for(&inp).unwrap();
        assert_eq!((st.value, st.upper_bound_only), (34, false));
        assert_eq!(reg_betti(&ideal, 38, crate::betti::DEFAULT_PRIME).unwrap().value, 34);
    }

    #[test]
    fn sequential_examples() {
        let inp = input("x2^9*x3^16", 3);
        let ideal = principal_ideal(&inp).unwrap();
        assert_eq!(reg_sequential(&ideal).unwrap().value, reg_formula(&inp).unwrap().value);
        let lone = MonomialIdeal::principal(Monomial::parse("x1^4", 1).unwrap());
        assert_eq!(reg_sequential(&lone).unwrap().value, 4);
        let not_borel = MonomialIdeal::principal(Monomial::parse("x2", 2).unwrap());
        assert_eq!(reg_sequential(&not_borel), Err(Error::NotBorelType));
    }

    #[test]
    fn stability_examples() {
        let sq = MonomialIdeal::maximal(2).power(2).unwrap();
        assert_eq!(reg_stability(&sq).unwrap().value, 2);
        let triv = PrincipalInput::pure_power(DSequence::trivial(), 3, 6).unwrap();
        assert_eq!(reg_stability_for(&triv).unwrap().value, 6);
    }

    #[test]
    fn corner_examples() {
        let c = corners(&input("x3^21", 3)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].position, c[0].row, c[0].beta, c[0].survives), (3, 33, 1, true));

        let c = corners(&input("x2^16*x3^9", 3)).unwrap();
        let pts: Vec<_> = c.iter().map(|c| (c.position, c.row, c.predicted_row, c.survives)).collect();
        assert_eq!(pts, vec![(3, 29, Some(29), true), (2, 22, Some(22), false)]);

        let triv = PrincipalInput::pure_power(DSequence::trivial(), 3, 4).unwrap();
        let c = corners(&triv).unwrap();
        assert_eq!((c[0].position, c[0].row, c[0].beta), (3, 3, 10));
    }

    #[test]
    fn x1_block_corner() {
        let c = corners(&input("x1^2*x2^16*x3^9", 3)).unwrap();
        let last = c.last().unwrap();
        assert_eq!((last.position, last.row, last.predicted_row), (1, 1, Some(2)));
        assert!(!last.survives);
        assert!(c.iter().any(|c| c.survives && c.row == 31));
    }

    #[test]
    fn factorization_witness() {
        let inp = input("x3^9", 3);
        let ideal = principal_ideal(&inp).unwrap();
        let reg = reg_formula(&inp).unwrap().value as u32;
        for v in monomials_of_degree(3, reg + 1) {
            if ideal.member(&v) {
                let (w, y) = stable_factorization(&ideal, &v).expect("witness");
                assert_eq!(w.mul(&y), v);
            }
        }
    }

    #[test]
    fn method_names() {
        for m in Method::ALL {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("all".parse::<Method>().is_err());
    }
}
