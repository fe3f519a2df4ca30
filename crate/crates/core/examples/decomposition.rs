//! d-adic digits, the digitwise order, and the splitting lemma.

use dfixed::dseq::{all_representations, DSequence, LooseSequence};

fn main() -> dfixed::Result<()> {
    let d: DSequence = "1,2,4,12".parse()?;
    for a in [21, 16, 9] {
        let digits = d.decompose(a);
        println!("{a:>3} -> {:?} (top nonzero digit at t = {:?})", digits.digits(), digits.top_nonzero());
    }

    println!("values below 9 in the digit order: {:?}", d.sub_values(9));
    let (x, y) = d.split(13, 9, 16)?;
    println!("13 = {x} + {y} with {x} <=_d 9 and {y} <=_d 16");

    // Without divisibility, representations stop being unique.
    let loose = LooseSequence::new(vec![1, 2, 5])?;
    println!("5 over (1,2,5): {:?}", all_representations(5, &loose));
    if let Err(e) = DSequence::validate(&loose) {
        println!("(1,2,5) rejected: {e}");
    }
    Ok(())
}
