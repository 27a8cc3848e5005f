//! Certify the group axioms of catalog and family groups.

use simconj::families::{stem_group, Family};
use simconj::group::certify;

fn main() -> simconj::Result<()> {
    let groups = [simconj::catalog::lookup("A5")?, stem_group(Family::Phi5, 3)?, stem_group(Family::Phi5, 5)?];
    for g in &groups {
        let report = certify(g);
        println!("{} (order {}): all passed {}", report.label, report.order, report.all_passed());
        for (name, outcome) in &report.checks {
            println!("  {name:<28} {outcome:?}");
        }
    }
    Ok(())
}
