//! Check every family row against the normalized functions of its stem group.

use simconj::cli::verify_row;
use simconj::families::Family;

fn main() {
    let p: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    for family in Family::ALL.into_iter().filter(|f| f.admits(p)) {
        let row = verify_row(family, p);
        let order = row.order.map_or("-".to_string(), |o| o.to_string());
        println!("{:>8} p={p} order {order:>4}  A {}  B {}", family.to_string(), row.a_matches, row.b_matches);
    }
}
