//! The sequential chain `I = I_0 ⊂ I_1 ⊂ … ⊂ I_r = S`, where each step
//! saturates by the last variable occurring in the current generators.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::monomials_of_degree;

/// One step `I_ℓ → I_{ℓ+1}` together with the restricted pair
/// `J_ℓ = I_ℓ ∩ k[x_1..x_{n_ℓ}]`, `J_ℓ^sat = J_ℓ : (x_1..x_{n_ℓ})^∞`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    /// 1-based pivot `n_ℓ`.
    pub pivot: usize,
    pub restricted: MonomialIdeal,
    pub restricted_sat: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequentialChain {
    /// `I_0, …, I_r`; the last entry is the unit ideal.
    pub ideals: Vec<MonomialIdeal>,
    pub steps: Vec<ChainStep>,
}

impl SequentialChain {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.pivot).collect()
    }
}

/// `I : (x_1, …, x_k)^∞` for a monomial ideal, as the intersection of the
/// single-variable saturations.
pub fn saturate_prefix(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    let mut acc = ideal.saturate_var(0)?;
    for v in 1..k {
        acc = acc.intersect(&ideal.saturate_var(v)?)?;
    }
    Ok(acc)
}

pub fn sequential_chain(ideal: &MonomialIdeal) -> Result<SequentialChain> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("sequential_chain"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("sequential_chain"));
    }
    let mut ideals = vec![ideal.clone()];
    let mut steps = Vec::new();
    let mut cur = ideal.clone();
    while !cur.is_unit() {
        let pivot = cur
            .gens()
            .iter()
            .filter_map(|g| g.max_var())
            .max()
            .expect("a proper nonzero ideal has a nonconstant generator")
            + 1;
        let restricted = cur.restrict(pivot);
        let restricted_sat = saturate_prefix(&restricted, pivot)?;
        let next = cur.saturate_var(pivot - 1)?;
        steps.push(ChainStep { pivot, restricted, restricted_sat });
        ideals.push(next.clone());
        cur = next;
    }
    Ok(SequentialChain { ideals, steps })
}

/// Dimensions of `(J^sat / J)_k`, degree by degree, for a chain step.
///
/// Stops once `k` is at least every generator degree of `J^sat` and the
/// whole degree-`k` piece of `J^sat` lies in `J`; from then on
/// `(J^sat)_{k+1} = m·(J^sat)_k ⊆ J`. `limit` is a hard cap.
pub fn quotient_dimensions(step: &ChainStep, limit: u32) -> Result<Vec<usize>> {
    let (j, sat) = (&step.restricted, &step.restricted_sat);
    let gen_top = sat.ideal_degree()?.max(j.ideal_degree().unwrap_or(0));
    let mut dims = Vec::new();
    for k in 0..=limit {
        let count = monomials_of_degree(step.pivot, k)
            .iter()
            .filter(|w| sat.member(w) && !j.member(w))
            .count();
        dims.push(count);
        if k >= gen_top && count == 0 {
            while dims.last() == Some(&0) {
                dims.pop();
            }
            return Ok(dims);
        }
    }
    Err(Error::Precondition(format!(
        "quotient of chain step at x{} did not vanish by degree {limit}",
        step.pivot
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dseq::DSequence;
    use crate::fixed::{principal_ideal, PrincipalInput};
    use crate::monomial::Monomial;

    fn d() -> DSequence {
        "1,2,4,12".parse().unwrap()
    }

    #[test]
    fn two_block_chain() {
        let u = Monomial::parse("x2^9*x3^16", 3).unwrap();
        let input = PrincipalInput::from_monomial(d(), &u).unwrap();
        let i = principal_ideal(&input).unwrap();
        let chain = sequential_chain(&i).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain.pivots(), vec![3, 2]);
        let x2_part = PrincipalInput::from_monomial(d(), &Monomial::parse("x2^9", 3).unwrap()).unwrap();
        assert_eq!(chain.ideals[1], principal_ideal(&x2_part).unwrap());
        assert!(chain.ideals[2].is_unit());
    }

    #[test]
    fn single_block_chain() {
        let input = PrincipalInput::pure_power(d(), 3, 21).unwrap();
        let chain = sequential_chain(&principal_ideal(&input).unwrap()).unwrap();
        assert_eq!(chain.pivots(), vec![3]);
        let lone = MonomialIdeal::principal(Monomial::parse("x1^4", 1).unwrap());
        assert_eq!(sequential_chain(&lone).unwrap().len(), 1);
        assert!(sequential_chain(&MonomialIdeal::unit(2)).is_err());
        assert!(sequential_chain(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn prefix_saturation_matches_colon_iteration() {
        let input = PrincipalInput::from_monomial(d(), &Monomial::parse("x2^5*x3^6", 3).unwrap()).unwrap();
        let i = principal_ideal(&input).unwrap();
        for k in 1..=3 {
            let prefix = MonomialIdeal::prefix_frobenius(k, 1, 3).unwrap();
            assert_eq!(saturate_prefix(&i, k).unwrap(), i.saturate(&prefix).unwrap());
        }
    }

    #[test]
    fn quotient_of_power_of_variable() {
        let lone = MonomialIdeal::principal(Monomial::parse("x1^4", 1).unwrap());
        let chain = sequential_chain(&lone).unwrap();
        assert_eq!(quotient_dimensions(&chain.steps[0], 100).unwrap(), vec![1, 1, 1, 1]);
    }
}
