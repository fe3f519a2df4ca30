//! Socle of S/⟨u⟩_d from the closed formulas, checked against enumeration.

use dfixed::dseq::DSequence;
use dfixed::fixed::{principal_ideal, PrincipalInput};
use dfixed::monomial::Monomial;
use dfixed::socle::{socle_direct, socle_formula};

fn main() -> dfixed::Result<()> {
    let d: DSequence = "1,2,4,12".parse()?;
    let input = PrincipalInput::from_monomial(d, &Monomial::parse("x2^9*x3^16", 3)?)?;
    let report = socle_formula(&input)?;
    for c in &report.components {
        println!("{:<18} degree {:>2}: {}", c.key.to_string(), c.degree, c.ideal);
    }
    println!("formula:     {:?}", report.degrees.iter().map(|s| (s.degree, s.dimension)).collect::<Vec<_>>());

    let ideal = principal_ideal(&input)?;
    let direct = socle_direct(&ideal, 0, report.max_degree as u32 + 3)?;
    println!("enumeration: {:?}", direct.iter().map(|b| (b.degree, b.dimension)).collect::<Vec<_>>());
    Ok(())
}
