use std::collections::{HashMap, VecDeque};

use super::{check_cap, table_from_right_action, GroupTable, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// A permutation of `0..k` given by its image array.
pub type Permutation = Vec<usize>;

fn validate(index: usize, perm: &[usize], degree: usize) -> Result<()> {
    if perm.len() != degree {
        return Err(Error::InvalidPermutation {
            index,
            reason: format!("degree {} differs from {}", perm.len(), degree),
        });
    }
    let mut seen = vec![false; degree];
    for &v in perm {
        if v >= degree {
            return Err(Error::InvalidPermutation {
                index,
                reason: format!("image {v} out of range"),
            });
        }
        if seen[v] {
            return Err(Error::InvalidPermutation {
                index,
                reason: format!("image {v} repeated"),
            });
        }
        seen[v] = true;
    }
    Ok(())
}

/// Closure of `gens` under composition with the default order cap.
pub fn build_from_permutations(gens: &[Permutation]) -> Result<GroupTable> {
    build_from_permutations_with_cap(gens, DEFAULT_ORDER_CAP)
}

/// Closure of `gens` under composition. Elements are numbered in BFS order
/// from the identity; the product `x · y` applies `x` first.
pub fn build_from_permutations_with_cap(gens: &[Permutation], cap: usize) -> Result<GroupTable> {
    check_cap(cap)?;
    let Some(first) = gens.first() else {
        return Err(Error::InvalidParameters("no generators given".into()));
    };
    let degree = first.len();
    for (i, g) in gens.iter().enumerate() {
        validate(i, g, degree)?;
    }
    let d = gens.len();
    let identity: Vec<usize> = (0..degree).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    let mut steps = vec![(0usize, 0usize)];
    index.insert(identity, 0);
    let mut right: Vec<u16> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (k, g) in gens.iter().enumerate() {
            let prod: Vec<usize> = elements[x].iter().map(|&i| g[i]).collect();
            let y = match index.get(&prod) {
                Some(&y) => y,
                None => {
                    let y = elements.len();
                    if y >= cap {
                        return Err(Error::ClosureExceedsCap { cap });
                    }
                    index.insert(prod.clone(), y);
                    elements.push(prod);
                    steps.push((x, k));
                    queue.push_back(y);
                    y
                }
            };
            // BFS visits x in index order, so row x lands at offset x * d.
            right.push(y as u16);
        }
    }
    let n = elements.len();
    let mul = table_from_right_action(n, d, &right, &steps);
    let generators = gens
        .iter()
        .map(|g| index[g])
        .filter(|&i| i != 0)
        .fold(Vec::new(), |mut acc, i| {
            if !acc.contains(&i) {
                acc.push(i);
            }
            acc
        });
    GroupTable::from_raw(n, mul, generators, format!("perm{n}"))
}
