//! Equality modulo the second derived subgroup via the Magnus embedding.

use cutnum::group::{parse_word, Alphabet, Word};
use cutnum::quotients::{equal_mod_second_derived, magnus_image, verify_jacobi};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let al = Alphabet::new(["x", "y", "z"])?;
    let one = Word::identity(&al);
    for text in ["[x,y]", "[[x,y],z]", "[[x,y],[x,z]]"] {
        let w = parse_word(text, &al)?;
        println!("{text:>15} trivial in F/F'': {}", equal_mod_second_derived(&w, &one)?);
    }
    let image = magnus_image(&parse_word("[[x,y],z]", &al)?);
    println!("image of [[x,y],z]: abelianization {:?}", image.abelianization());
    for (i, d) in image.derivatives().iter().enumerate() {
        println!("  component {}: {d}", i + 1);
    }
    println!("Jacobi relation (1,2,3) holds: {}", verify_jacobi(1, 2, 3, 3)?);
    Ok(())
}
