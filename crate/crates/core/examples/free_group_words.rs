//! Parsing words, commutator calculus and Fox derivatives.

use cutnum::group::{abelianized_fox_derivative, fox_derivative, parse_word, verify_commutator_expansion, Alphabet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let al = Alphabet::new(["x", "y", "z"])?;
    let w = parse_word("[x,[y,z]]^2", &al)?;
    println!("[x,[y,z]]^2 = {w}");
    println!("exponent sums: {:?}", w.exponent_sums());

    let (a, b, c) = (
        parse_word("x y", &al)?,
        parse_word("z^-1", &al)?,
        parse_word("y x", &al)?,
    );
    println!(
        "[a, bc] = [a, b] [a, c]^b: {}",
        verify_commutator_expansion(&a, &b, &c)?
    );

    let r = parse_word("[x,y]", &al)?;
    for i in 0..2 {
        let d = fox_derivative(&r, i)?;
        println!(
            "d[x,y]/d{} has {} terms, abelianized {}",
            al.names()[i],
            d.terms().count(),
            abelianized_fox_derivative(&r, i)?
        );
    }
    Ok(())
}
