//! Every formula-versus-oracle comparison for a few principal inputs.

use dfixed::betti::DEFAULT_PRIME;
use dfixed::dseq::DSequence;
use dfixed::fixed::PrincipalInput;
use dfixed::monomial::Monomial;
use dfixed::verify::verify;

fn main() -> dfixed::Result<()> {
    let cases = [("1,2,4,12", "x3^21"), ("1,2,4,12", "x2^9*x3^16"), ("1", "x3^6"), ("1,3,9", "x2^4*x3^11")];
    for (d, u) in cases {
        let d: DSequence = d.parse()?;
        let input = PrincipalInput::from_monomial(d.clone(), &Monomial::parse(u, 3)?)?;
        let report = verify(&input, DEFAULT_PRIME)?;
        println!("{u} over ({d}): {}", if report.all_passed() { "all checks pass" } else { "MISMATCH" });
        for c in &report.checks {
            println!("  {:?}  {} {}", c.status, c.name, c.detail);
        }
    }
    Ok(())
}
