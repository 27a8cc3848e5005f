//! Isoclinism tests with explicit witnesses.

use simconj::families::{dihedral, quaternion, semidihedral, cyclic};
use simconj::isoclinism::{are_isoclinic, stem_order, verify_witness};

fn main() -> simconj::Result<()> {
    let pairs = [
        (dihedral(8)?, quaternion(8)?),
        (dihedral(16)?, semidihedral(16)?),
        (dihedral(16)?, dihedral(8)?),
        (cyclic(4)?, cyclic(6)?),
    ];
    for (g, h) in &pairs {
        match are_isoclinic(g, h)? {
            Some(w) => {
                println!("{} ~ {}: theta {:?}", g.label(), h.label(), w.theta);
                println!("  witness verified: {}", verify_witness(g, h, &w));
            }
            None => println!("{} and {} are not isoclinic", g.label(), h.label()),
        }
    }
    println!("stem order of D16: {}", stem_order(&dihedral(16)?));
    Ok(())
}
