//! A(t) and B(t) for a group, raw and normalized, with their first coefficients.

use simconj::families::{stem_group, Family};
use simconj::genfun::{a_of_t, b_of_t};

fn main() -> simconj::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "Q8".into());
    let g = simconj::catalog::lookup(&label).or_else(|_| stem_group(Family::Phi2, 3))?;
    let n = g.order() as u64;
    let a = a_of_t(&g);
    let b = b_of_t(&g)?;
    println!("{} (order {n})", g.label());
    println!("A(t)      = {a}");
    println!("B(t)      = {b}");
    println!("A(t/|G|)  = {}", a.normalize(n));
    println!("B(t/|G|)  = {}", b.normalize(n));
    let show = |v: Vec<simconj::genfun::Rational>| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
    println!("alpha_0..5 = {}", show(a.series(6)));
    println!("beta_0..5  = {}", show(b.series(6)));
    Ok(())
}
