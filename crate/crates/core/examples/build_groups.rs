//! Build groups from permutations, a Cayley table, a pc presentation and the catalog.

use simconj::catalog;
use simconj::group::{build_from_cayley, build_from_pcp, build_from_permutations, PcPresentation};

fn main() -> simconj::Result<()> {
    let s3 = build_from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]])?;
    println!("S3 from permutations: order {}", s3.order());

    let klein = build_from_cayley(&[vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]])?;
    println!("Klein four from a table: order {}, abelian {}", klein.order(), klein.is_abelian());

    // Q8 with g0 = i, g1 = j, g2 = -1.
    let mut pc = PcPresentation::new(2, vec![2, 2, 2]);
    pc.powers[0] = vec![0, 0, 1];
    pc.powers[1] = vec![0, 0, 1];
    pc.commutators.push((1, 0, vec![0, 0, 1]));
    let q8 = build_from_pcp(&pc)?;
    println!("Q8 from a presentation: order {}, exponent {}", q8.order(), q8.exponent());

    let bad = build_from_cayley(&[vec![0, 1], vec![1, 1]]);
    println!("non-group table: {}", bad.unwrap_err());

    for g in catalog::catalog_up_to(8)? {
        println!("{:>6}  order {}", g.label(), g.order());
    }
    Ok(())
}
