//! Alexander-module ranks of a presentation read from a file.
//!
//! `cargo run --example alexander_rank -- examples/data/torus.txt`

use cutnum::alexander::{corank_obstruction, sample_phis, Presentation, SampleKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/torus.txt").to_string());
    let p = Presentation::parse(&std::fs::read_to_string(&path)?)?;
    println!("{p}");
    let seed = 1;
    let phis = sample_phis(&p, 6, seed)?;
    let cert = corank_obstruction(&p, &phis, SampleKind::Sampled { seed })?;
    for r in &cert.ranks {
        println!("phi = {}: rank {}", r.phi, r.alexander_rank);
    }
    for c in &cert.caveats {
        println!("caveat: {c}");
    }
    Ok(())
}
