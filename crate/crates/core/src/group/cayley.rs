use super::{certify::first_violation, GroupTable, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// Validate an explicit multiplication table.
///
/// If the identity is not at index 0 the two labels are swapped so the result
/// keeps the identity-at-zero convention.
pub fn build_from_cayley(table: &[Vec<usize>]) -> Result<GroupTable> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup {
            axiom: "nonempty".into(),
            witness: vec![],
        });
    }
    if n > DEFAULT_ORDER_CAP {
        return Err(Error::ClosureExceedsCap { cap: DEFAULT_ORDER_CAP });
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Parse(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::NotAGroup {
                axiom: "closure".into(),
                witness: vec![i, v],
            });
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotAGroup {
            axiom: "identity".into(),
            witness: vec![],
        })?;
    let relabel = |x: usize| -> usize {
        if x == e {
            0
        } else if x == 0 {
            e
        } else {
            x
        }
    };
    let mut mul = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[relabel(x) * n + relabel(y)] = relabel(table[x][y]) as u16;
        }
    }
    let mut g = GroupTable::from_raw(n, mul, Vec::new(), format!("cayley{n}"))?;
    if let Some((axiom, witness)) = first_violation(&g) {
        return Err(Error::NotAGroup { axiom, witness });
    }
    let gens = g.generating_set(&g.whole());
    g.generators = gens;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::certify;

    #[test]
    fn trivial_table() {
        let g = build_from_cayley(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn klein_four() {
        let t: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
        let g = build_from_cayley(&t).unwrap();
        assert_eq!(g.order(), 4);
        assert!((0..4).all(|x| g.inv(x) == x));
        assert!(certify(&g).all_passed());
    }

    #[test]
    fn identity_not_at_zero_is_relabelled() {
        // Z/3 with identity at index 2.
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = build_from_cayley(&t).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert!(certify(&g).all_passed());
    }

    #[test]
    fn corrupted_table_reports_associativity_triple() {
        let g = crate::group::build_from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        let mut t = g.cayley_rows();
        // Swap two entries of row 1 that are not the identity, so inverses survive.
        let cols: Vec<usize> = (1..6).filter(|&c| t[1][c] != 0 && t[1][c] != 1).take(2).collect();
        t[1].swap(cols[0], cols[1]);
        let err = build_from_cayley(&t).unwrap_err();
        match err {
            Error::NotAGroup { axiom, witness } => {
                assert_eq!(axiom, "associativity");
                let (x, y, z) = (witness[0], witness[1], witness[2]);
                assert_ne!(t[t[x][y]][z], t[x][t[y][z]]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip_through_rows() {
        let g = crate::group::build_from_permutations(&[vec![1, 2, 3, 0], vec![3, 2, 1, 0]]).unwrap();
        let h = build_from_cayley(&g.cayley_rows()).unwrap();
        assert_eq!(g.cayley_rows(), h.cayley_rows());
    }
}
