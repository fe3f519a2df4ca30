//! The fixpoint closure and the d-fixed, stable and Borel-type predicates.

use dfixed::dseq::DSequence;
use dfixed::fixed::{closure, is_borel_type, is_dfixed, is_stable, min_stable_truncation};
use dfixed::monomial::Monomial;

fn main() -> dfixed::Result<()> {
    let d = DSequence::p_adic(2, 3)?;
    let gens = [Monomial::parse("x2^3*x3^2", 3)?, Monomial::parse("x3^5", 3)?];
    let ideal = closure(&gens, &d)?;
    println!("closure over d = ({d}): {ideal}");
    println!("d-fixed: {}", is_dfixed(&ideal, &d));
    println!("Borel type: {}", is_borel_type(&ideal)?);
    println!("stable: {}", is_stable(&ideal));
    let e = min_stable_truncation(&ideal)?;
    println!("least stable truncation degree: {e}");
    Ok(())
}
