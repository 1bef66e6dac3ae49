//! Laurent polynomial arithmetic, jets at t = 1 and fraction-free determinants.

use cutnum::ring::{LaurentPoly, PolyMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = LaurentPoly::t_pow_minus_one(3);
    let b = LaurentPoly::t_pow_minus_one(-2);
    let prod = &a * &b;
    println!("({a}) * ({b}) = {prod}");
    println!("jet of t^3 - 1 at 1: {}", a.jet_at_one()?);
    println!("order of vanishing of the product at 1: {:?}", prod.j_valuation()?);

    let m = PolyMatrix::from_rows(1, 2, vec![vec![a.clone(), -&b], vec![b.clone(), a.clone()]])?;
    let det = m.det()?;
    println!("det =\n{m}= {det}");
    println!("rank over Q(t): {}", m.rank_over_fraction_field());
    Ok(())
}
