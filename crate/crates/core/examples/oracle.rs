//! Brute-force orbit counts against the generating-function coefficients.

use simconj::families::{quaternion, symmetric};
use simconj::genfun::{alpha_coefficient, beta_coefficient};
use simconj::oracle::{alpha_brute, beta_brute};

fn main() -> simconj::Result<()> {
    for g in [symmetric(3)?, quaternion(8)?] {
        for n in 1..=3u32 {
            let a = alpha_brute(&g, n)?;
            let b = beta_brute(&g, n)?;
            println!("{a}");
            println!("{b}");
            assert_eq!(alpha_coefficient(&g, n), a.count.into());
            assert_eq!(beta_coefficient(&g, n as usize)?, b.count.into());
        }
    }
    Ok(())
}
