//! The relation matrix modulo (t-1)^2, its linear part A(1), and the
//! nonsingularity certificate.

use cutnum::harvey::{
    a_at_one, nonsingularity_certificate, relation_matrix_mod_j2, symbolic_relation_matrix, HarveyParams,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("symbolic, m = 4, N = 1:\n{}", symbolic_relation_matrix(4, 1)?);

    let params = HarveyParams::new(4, vec![2, -1, 3, 1], None)?;
    let jets = relation_matrix_mod_j2(&params)?;
    println!("{params}\n(value, slope) at t = 1:\n{jets}");
    println!("A(1) =\n{}", a_at_one(&jets, &params)?);

    let cert = nonsingularity_certificate(&params)?;
    println!("det A(1) = {}", cert.det_a1);
    for c in &cert.checks {
        println!("  {}: {}", c.name, c.passed);
    }
    Ok(())
}
