//! Conjugacy classes, centralizer histogram and series of a few groups.

use simconj::analysis::{center, conjugacy_data, derived_subgroup, is_ac_group, lower_central_series, maximal_class_profile};
use simconj::families::{dihedral, stem_group, symmetric, Family};

fn main() -> simconj::Result<()> {
    for g in [symmetric(3)?, dihedral(16)?, stem_group(Family::Phi5, 3)?] {
        let cd = conjugacy_data(&g);
        let series: Vec<usize> = lower_central_series(&g).iter().map(|s| s.len()).collect();
        println!("{} (order {})", g.label(), g.order());
        println!("  class equation {:?}", cd.class_equation);
        println!("  z histogram    {:?}", cd.z_histogram);
        println!("  |Z| = {}, |G'| = {}", center(&g).len(), derived_subgroup(&g).len());
        println!("  lower central  {series:?}");
        println!("  AC group       {}", is_ac_group(&g));
    }
    let profile = maximal_class_profile(&dihedral(32)?, 2)?;
    println!(
        "D32: maximal class {}, abelian maximal subgroup {}",
        profile.is_maximal_class, profile.has_abelian_maximal_subgroup
    );
    Ok(())
}
