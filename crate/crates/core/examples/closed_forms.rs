//! Evaluate closed-form families and compare them with direct computation.

use simconj::closed_forms::{stem_formula, FormulaId};
use simconj::families::{dihedral, stem_group, Family};
use simconj::genfun::{a_of_t, b_of_t};

fn main() -> simconj::Result<()> {
    let d32 = dihedral(32)?;
    let cf = FormulaId::DihedralEven { n: 16 }.evaluate()?;
    println!("D32 closed A = {}", cf.a);
    println!("D32 closed B = {}", cf.b);
    println!("agrees: A {} B {}", cf.a == a_of_t(&d32), cf.b == b_of_t(&d32)?);

    for family in [Family::Phi2, Family::Phi5, Family::Phi9] {
        let id = stem_formula(family, 3);
        let g = stem_group(family, 3)?;
        let cf = id.evaluate()?;
        println!(
            "{family} p=3 via {}: A {} B {}",
            id.name(),
            cf.a == a_of_t(&g),
            cf.b == b_of_t(&g)?
        );
    }
    Ok(())
}
