//! Partial fraction decompositions and JSON round trips.

use simconj::families::dihedral;
use simconj::genfun::{a_of_t, b_of_t, PartialFractions, RationalGF};

fn main() -> simconj::Result<()> {
    let g = dihedral(16)?;
    for (name, f) in [("A", a_of_t(&g)), ("B", b_of_t(&g)?)] {
        let pf = f.partial_fractions();
        println!("{name}(t) = {f}");
        println!("        = {pf}");
        assert_eq!(pf.recombine(), f);
        let json = pf.to_json();
        assert_eq!(PartialFractions::from_json(&json)?, pf);
        println!("  json  {json}");
        assert_eq!(RationalGF::from_json(&f.to_json())?, f);
    }
    Ok(())
}
