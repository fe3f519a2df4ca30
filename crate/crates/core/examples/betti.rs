//! Graded Betti numbers from Koszul homology, with certification.

use dfixed::betti::{betti_table, extremal_from_betti, koszul_boundary, reg_from_betti, CHECK_PRIME, DEFAULT_PRIME};
use dfixed::dseq::DSequence;
use dfixed::fixed::{principal_ideal, PrincipalInput};
use dfixed::ideal::MonomialIdeal;
use dfixed::monomial::Monomial;

fn main() -> dfixed::Result<()> {
    let ci = MonomialIdeal::minimalize(2, [Monomial::parse("x1^2", 2)?, Monomial::parse("x2^2", 2)?])?;
    let b = koszul_boundary(&ci, 2, 4)?;
    println!("boundary at i=2, j=4 for {ci}: {}x{} matrix, domain {:?}", b.matrix.rows(), b.matrix.cols(), b.domain);

    let d: DSequence = "1,2,4,12".parse()?;
    let input = PrincipalInput::from_monomial(d, &Monomial::parse("x2^16*x3^9", 3)?)?;
    let ideal = principal_ideal(&input)?;
    let table = betti_table(&ideal, 34, DEFAULT_PRIME)?;
    print!("{}", table.to_text());
    let reg = reg_from_betti(&table)?;
    println!("reg(I) = {}, reg(S/I) = {}", reg.ideal, reg.quotient);
    println!("extremal: {:?}", extremal_from_betti(&table)?);
    let other = betti_table(&ideal, 34, CHECK_PRIME)?;
    println!("agrees over {CHECK_PRIME}: {}", other.entries == table.entries);
    Ok(())
}
