//! Lower central series weights and the Alexander module of F/F_k.

use cutnum::group::{parse_word, Alphabet};
use cutnum::quotients::{free_nilpotent_alexander, lcs_weight};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let al = Alphabet::new(["x", "y"])?;
    for text in ["x", "[x,y]", "[x,[x,y]]", "[x,[x,[x,y]]]", "[[x,y],[x,[x,y]]]"] {
        println!("{text:>20}: weight {}", lcs_weight(&parse_word(text, &al)?, 6)?);
    }
    for class in 1..=4 {
        let m = free_nilpotent_alexander(2, class, &[1, 0])?;
        println!(
            "class {class}: additive rank {}, annihilated by J^{}, cyclic {}",
            m.additive_rank, m.annihilator_exponent, m.cyclic
        );
    }
    Ok(())
}
