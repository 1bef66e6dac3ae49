//! Certificate that a family member admits no epimorphism onto F/F_4,
//! printed as JSON.

use cutnum::harvey::{f4_obstruction_certificate, HarveyParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = HarveyParams::new(3, vec![1, 1, 1], None)?;
    let cert = f4_obstruction_certificate(&params)?;
    println!("{}", serde_json::to_string_pretty(&cert)?);
    Ok(())
}
