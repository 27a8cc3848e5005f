//! Timing and work comparison of the counting strategies.
//!
//! `work` is measured in multiplication-table lookups for the summation and
//! brute-force strategies (the same unit, so their ratio is meaningful) and in
//! expanded recursion nodes for the centralizer recursion.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::genfun::BEngine;
use crate::group::GroupTable;
use crate::oracle::{alpha_brute, beta_brute};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// `α_n = (1/|G|) Σ_g |Z(g)|^n`, with `|Z(g)|` read off conjugacy orbits.
    Summation,
    /// Coefficient of `B_G(t)` from the centralizer recursion.
    Recursion,
    BruteAlpha,
    BruteBeta,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Summation,
        Strategy::Recursion,
        Strategy::BruteAlpha,
        Strategy::BruteBeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Summation => "summation",
            Strategy::Recursion => "recursion",
            Strategy::BruteAlpha => "brute_alpha",
            Strategy::BruteBeta => "brute_beta",
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s.trim())
            .ok_or_else(|| crate::Error::Parse(format!("unknown strategy {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub strategy: &'static str,
    pub group: String,
    pub order: usize,
    pub n: u32,
    /// Decimal count, or `skipped: <reason>` when the cell was refused.
    pub count: String,
    pub nanos: Option<u128>,
    pub work: Option<u64>,
}

impl BenchRow {
    pub fn skipped(&self) -> bool {
        self.nanos.is_none()
    }
}

/// `α_n` by summing `|Z(g)|^n` over all elements, with the table-lookup count.
pub fn alpha_by_summation(g: &GroupTable, n: u32) -> (BigInt, u64) {
    let order = g.order();
    let gens: Vec<usize> = g.generators().iter().copied().filter(|&s| s != g.identity()).collect();
    let conj: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..order).map(|x| g.conjugate(x, s)).collect())
        .collect();
    let mut ops = 2 * (gens.len() * order) as u64;
    let mut class_size = vec![0usize; order];
    let mut seen = vec![false; order];
    for start in 0..order {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            for table in &conj {
                ops += 1;
                let y = table[orbit[i]];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        for &x in &orbit {
            class_size[x] = orbit.len();
        }
    }
    let total: BigInt = class_size.iter().map(|&c| BigInt::from(order / c).pow(n)).sum();
    (total / BigInt::from(order), ops)
}

pub fn run_cell(strategy: Strategy, g: &GroupTable, n: u32) -> BenchRow {
    let start = Instant::now();
    let outcome: Result<(String, u64)> = match strategy {
        Strategy::Summation => {
            let (c, ops) = alpha_by_summation(g, n);
            Ok((c.to_string(), ops))
        }
        Strategy::Recursion => {
            let engine = BEngine::default();
            engine.compute(g).map(|b| {
                let c = b.series(n as usize + 1).pop().expect("nonempty series");
                (c.to_string(), engine.nodes_expanded())
            })
        }
        Strategy::BruteAlpha => alpha_brute(g, n).map(|r| (r.count.to_string(), r.group_ops)),
        Strategy::BruteBeta => beta_brute(g, n).map(|r| (r.count.to_string(), r.group_ops)),
    };
    let nanos = start.elapsed().as_nanos();
    let (count, nanos, work) = match outcome {
        Ok((c, w)) => (c, Some(nanos), Some(w)),
        Err(e) => (format!("skipped: {e}"), None, None),
    };
    BenchRow {
        strategy: strategy.name(),
        group: g.label().to_string(),
        order: g.order(),
        n,
        count,
        nanos,
        work,
    }
}

/// Every `(strategy, group, n)` cell with `n <= n_max`, run in parallel and
/// returned in a fixed order.
pub fn run(groups: &[GroupTable], n_max: u32, strategies: &[Strategy]) -> Vec<BenchRow> {
    let cells: Vec<(Strategy, &GroupTable, u32)> = groups
        .iter()
        .flat_map(|g| (0..=n_max).flat_map(move |n| strategies.iter().map(move |&s| (s, g, n))))
        .collect();
    cells.into_par_iter().map(|(s, g, n)| run_cell(s, g, n)).collect()
}

/// CSV with columns `strategy, group, order, n, count, nanos, work`.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}
