//! Fox-calculus ranks of the trivial-conjugator model presentation, checked
//! against the matrix route for every primitive character.

use cutnum::harvey::{family_rank_certificate, model_group_presentation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in 2..=4 {
        println!("{}", model_group_presentation(m)?);
        let cert = family_rank_certificate(m, 4, 0)?;
        for r in &cert.ranks {
            println!("  phi = {}: rank {}", r.phi, r.alexander_rank);
        }
        for c in &cert.conclusions {
            println!("  {}", c.statement);
        }
    }
    Ok(())
}
