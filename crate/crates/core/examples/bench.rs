//! Compare counting strategies on D32 and print CSV.

use simconj::bench::{run, to_csv, Strategy};
use simconj::families::dihedral;

fn main() -> simconj::Result<()> {
    let groups = vec![dihedral(32)?];
    let strategies = [Strategy::Summation, Strategy::Recursion, Strategy::BruteAlpha, Strategy::BruteBeta];
    print!("{}", to_csv(&run(&groups, 2, &strategies)));
    Ok(())
}
