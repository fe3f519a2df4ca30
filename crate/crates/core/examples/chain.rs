//! The sequential chain of saturations and its quotient pieces.

use dfixed::chain::{quotient_dimensions, sequential_chain};
use dfixed::dseq::DSequence;
use dfixed::fixed::{principal_ideal, PrincipalInput};
use dfixed::monomial::Monomial;

fn main() -> dfixed::Result<()> {
    let d: DSequence = "1,2,4,12".parse()?;
    let input = PrincipalInput::from_monomial(d, &Monomial::parse("x1^2*x2^9*x3^16", 3)?)?;
    let chain = sequential_chain(&principal_ideal(&input)?)?;
    for (k, step) in chain.steps.iter().enumerate() {
        let dims = quotient_dimensions(step, 100)?;
        println!(
            "step {k}: saturate by x{}; J has {} generators, J^sat has {}; quotient top degree {}, dim {}",
            step.pivot,
            step.restricted.gens().len(),
            step.restricted_sat.gens().len(),
            dims.len() - 1,
            dims.last().unwrap()
        );
    }
    Ok(())
}
