//! Brute-force orbit counts of simultaneous conjugation on `G^n` and on
//! commuting `n`-tuples. Independent of the class-equation machinery: the
//! only inputs are the multiplication table and the generators.

use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupTable;

pub const DEFAULT_TUPLE_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitMode {
    AllTuples,
    CommutingTuples,
}

impl OrbitMode {
    pub fn name(self) -> &'static str {
        match self {
            OrbitMode::AllTuples => "all_tuples",
            OrbitMode::CommutingTuples => "commuting_tuples",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCount {
    pub label: String,
    pub n: u32,
    pub mode: OrbitMode,
    pub count: u64,
    /// Tuples placed in the union-find structure.
    pub tuples_visited: u64,
    /// Multiplication-table lookups, counting the precomputed conjugation
    /// tables (two per entry) and one per conjugated coordinate.
    pub group_ops: u64,
}

impl fmt::Display for OrbitCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "group={} mode={} n={} count={} tuples_visited={} group_ops={}",
            self.label,
            self.mode.name(),
            self.n,
            self.count,
            self.tuples_visited,
            self.group_ops
        )
    }
}

fn tuple_space(g: &GroupTable, n: u32, cap: u128) -> Result<u64> {
    let size = (g.order() as u128).checked_pow(n).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::TupleCapExceeded { size, cap });
    }
    Ok(size as u64)
}

/// `conj[k][x] = s_k⁻¹ x s_k` for each generator `s_k`.
fn conjugation_tables(g: &GroupTable, ops: &mut u64) -> Vec<Vec<usize>> {
    let gens: Vec<usize> = g.generators().iter().copied().filter(|&s| s != g.identity()).collect();
    *ops += 2 * (gens.len() * g.order()) as u64;
    gens.iter()
        .map(|&s| (0..g.order()).map(|x| g.conjugate(x, s)).collect())
        .collect()
}

fn conjugate_code(code: u64, table: &[usize], n: u32, base: u64) -> u64 {
    let (mut rest, mut out, mut place) = (code, 0u64, 1u64);
    for _ in 0..n {
        out += table[(rest % base) as usize] as u64 * place;
        rest /= base;
        place *= base;
    }
    out
}

/// Number of orbits of `G` on `G^n`.
pub fn alpha_brute(g: &GroupTable, n: u32) -> Result<OrbitCount> {
    alpha_brute_with_cap(g, n, DEFAULT_TUPLE_CAP)
}

pub fn alpha_brute_with_cap(g: &GroupTable, n: u32, cap: u128) -> Result<OrbitCount> {
    let total = tuple_space(g, n, cap)?;
    let base = g.order() as u64;
    let mut ops = 0;
    let conj = conjugation_tables(g, &mut ops);
    let mut uf = UnionFind::<u32>::new(total as usize);
    let mut merges = 0u64;
    for code in 0..total {
        for table in &conj {
            let image = conjugate_code(code, table, n, base);
            if uf.union(code as u32, image as u32) {
                merges += 1;
            }
        }
    }
    ops += total * conj.len() as u64 * n as u64;
    Ok(OrbitCount {
        label: g.label().to_string(),
        n,
        mode: OrbitMode::AllTuples,
        count: total - merges,
        tuples_visited: total,
        group_ops: ops,
    })
}

/// Codes of all commuting `n`-tuples in increasing order. The first coordinate
/// is the most significant digit; each coordinate is drawn from the centralizer
/// of the prefix.
pub fn commuting_tuple_codes(g: &GroupTable, n: u32, cap: u128) -> Result<Vec<u64>> {
    tuple_space(g, n, cap)?;
    let mut ops = 0;
    Ok(commuting_codes(g, n, &mut ops))
}

fn commuting_codes(g: &GroupTable, n: u32, ops: &mut u64) -> Vec<u64> {
    let order = g.order();
    let commute: Vec<Vec<bool>> = (0..order)
        .map(|x| (0..order).map(|y| g.commutes(x, y)).collect())
        .collect();
    *ops += 2 * (order * order) as u64;
    let mut out = Vec::new();
    let all: Vec<usize> = (0..order).collect();
    let mut stack: Vec<(u64, u32, Vec<usize>)> = vec![(0, 0, all)];
    // Depth-first, children pushed in reverse so codes come out sorted.
    while let Some((code, depth, allowed)) = stack.pop() {
        if depth == n {
            out.push(code);
            continue;
        }
        for &x in allowed.iter().rev() {
            let next: Vec<usize> = allowed.iter().copied().filter(|&y| commute[x][y]).collect();
            stack.push((code * order as u64 + x as u64, depth + 1, next));
        }
    }
    out
}

/// Number of orbits of `G` on commuting `n`-tuples.
pub fn beta_brute(g: &GroupTable, n: u32) -> Result<OrbitCount> {
    beta_brute_with_cap(g, n, DEFAULT_TUPLE_CAP)
}

pub fn beta_brute_with_cap(g: &GroupTable, n: u32, cap: u128) -> Result<OrbitCount> {
    tuple_space(g, n, cap)?;
    let base = g.order() as u64;
    let mut ops = 0;
    let codes = commuting_codes(g, n, &mut ops);
    let conj = conjugation_tables(g, &mut ops);
    let mut uf = UnionFind::<u32>::new(codes.len());
    let mut merges = 0u64;
    for (i, &code) in codes.iter().enumerate() {
        for table in &conj {
            let image = conjugate_code(code, table, n, base);
            let j = codes
                .binary_search(&image)
                .expect("conjugate of a commuting tuple commutes");
            if uf.union(i as u32, j as u32) {
                merges += 1;
            }
        }
    }
    let visited = codes.len() as u64;
    ops += visited * conj.len() as u64 * n as u64;
    Ok(OrbitCount {
        label: g.label().to_string(),
        n,
        mode: OrbitMode::CommutingTuples,
        count: visited - merges,
        tuples_visited: visited,
        group_ops: ops,
    })
}
