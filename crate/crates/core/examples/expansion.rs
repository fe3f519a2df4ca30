//! Expanding ⟨u⟩_d as a product of bracket powers of prefix ideals.

use dfixed::dseq::DSequence;
use dfixed::fixed::{principal_ideal, PrincipalInput};
use dfixed::monomial::Monomial;

fn main() -> dfixed::Result<()> {
    let d: DSequence = "1,2,4,12".parse()?;
    let u = Monomial::parse("x1^2*x2^9*x3^16", 3)?;
    let input = PrincipalInput::from_monomial(d, &u)?;
    for (q, b) in input.blocks().iter().enumerate() {
        println!("block x{}^{}: digits {:?}", b.var, b.exponent, input.digits(q));
    }
    let ideal = principal_ideal(&input)?;
    println!("<{u}>_d has {} minimal generators of degree {}", ideal.gens().len(), input.degree());
    for g in ideal.gens().iter().take(8) {
        println!("  {g}");
    }
    println!("  ...");
    Ok(())
}
