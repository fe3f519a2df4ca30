//! Regularity by the closed formula and by the three independent routes.

use dfixed::betti::DEFAULT_PRIME;
use dfixed::dseq::DSequence;
use dfixed::fixed::{principal_ideal, PrincipalInput};
use dfixed::monomial::Monomial;
use dfixed::regularity::{corners, reg_betti, reg_bound, reg_formula, reg_sequential, reg_stability_for};

fn main() -> dfixed::Result<()> {
    let d: DSequence = "1,2,4,12".parse()?;
    for u in ["x3^21", "x1^2*x2^16*x3^9"] {
        let input = PrincipalInput::from_monomial(d.clone(), &Monomial::parse(u, 3)?)?;
        let ideal = principal_ideal(&input)?;
        let formula = reg_formula(&input)?;
        println!("{u}: D_q = {:?}, x1 factor {:?}", formula.d_values, formula.x1_factor);
        println!("  formula    {}", formula.value);
        println!("  sequential {}", reg_sequential(&ideal)?.value);
        println!("  stability  {}", reg_stability_for(&input)?.value);
        println!("  betti      {}", reg_betti(&ideal, formula.value as u32 + 4, DEFAULT_PRIME)?.value);
        println!("  bound n*deg(u) = {}", reg_bound(&input));
        for c in corners(&input)? {
            println!("  corner ({}, {}) beta {} survives {}", c.position, c.row, c.beta, c.survives);
        }
    }
    Ok(())
}
