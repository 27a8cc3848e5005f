//! Power-commutator presentations and collection.
//!
//! Generators `g_0 .. g_{d-1}` with relative orders `r_i`. Relations:
//!
//! * `g_i^{r_i} = w_i`, a normal-form word in generators `> i`;
//! * `[g_j, g_i] = c_{ji}` for `j > i`, a normal-form word in generators `> j`.
//!
//! The conjugation rule `g_j g_i = g_i g_j c_{ji}` moves letters into order.
//! Elements are exponent vectors `(e_0, .., e_{d-1})` with `0 <= e_i < r_i`,
//! numbered in mixed radix with `g_0` most significant.

use serde::{Deserialize, Serialize};

use super::{certify::certify, check_cap, table_from_right_action, GroupTable, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// Collection steps allowed for one product before giving up.
pub const DEFAULT_REWRITE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcPresentation {
    pub prime: u64,
    pub relative_orders: Vec<u32>,
    /// `powers[i]` is the exponent vector of `g_i^{r_i}`.
    pub powers: Vec<Vec<u32>>,
    /// Sparse list of `(j, i, word)` meaning `[g_j, g_i] = word`, `j > i`.
    /// Missing pairs commute.
    pub commutators: Vec<(usize, usize, Vec<u32>)>,
}

impl PcPresentation {
    /// Presentation with all power and commutator words trivial.
    pub fn new(prime: u64, relative_orders: Vec<u32>) -> Self {
        let d = relative_orders.len();
        PcPresentation {
            prime,
            relative_orders,
            powers: vec![vec![0; d]; d],
            commutators: Vec::new(),
        }
    }

    pub fn num_generators(&self) -> usize {
        self.relative_orders.len()
    }

    pub fn order(&self) -> u128 {
        self.relative_orders.iter().map(|&r| r as u128).product()
    }

    /// Convert `[(generator, exponent), ..]` into an exponent vector.
    pub fn word(&self, letters: &[(usize, u32)]) -> Vec<u32> {
        let mut v = vec![0; self.num_generators()];
        for &(g, e) in letters {
            v[g] = e;
        }
        v
    }

    pub fn set_power(&mut self, i: usize, letters: &[(usize, u32)]) -> &mut Self {
        self.powers[i] = self.word(letters);
        self
    }

    pub fn set_commutator(&mut self, j: usize, i: usize, letters: &[(usize, u32)]) -> &mut Self {
        let w = self.word(letters);
        self.commutators.retain(|(a, b, _)| !(*a == j && *b == i));
        self.commutators.push((j, i, w));
        self
    }

    fn validate(&self) -> Result<()> {
        let d = self.num_generators();
        let bad = |msg: String| Err(Error::InconsistentPresentation(msg));
        if self.powers.len() != d {
            return bad(format!("{} power words for {d} generators", self.powers.len()));
        }
        for (i, &r) in self.relative_orders.iter().enumerate() {
            if r < 2 {
                return bad(format!("relative order of g{i} is {r}"));
            }
        }
        let in_range = |w: &[u32]| w.iter().zip(&self.relative_orders).all(|(&e, &r)| e < r);
        for (i, w) in self.powers.iter().enumerate() {
            if w.len() != d || !in_range(w) {
                return bad(format!("power word of g{i} is not a normal form"));
            }
            if w[..=i].iter().any(|&e| e != 0) {
                return bad(format!("power word of g{i} uses a generator <= {i}"));
            }
        }
        for (j, i, w) in &self.commutators {
            if *j >= d || i >= j {
                return bad(format!("commutator pair ({j}, {i}) must satisfy {i} < {j} < {d}"));
            }
            if w.len() != d || !in_range(w) {
                return bad(format!("commutator word [g{j}, g{i}] is not a normal form"));
            }
            if w[..=*j].iter().any(|&e| e != 0) {
                return bad(format!("commutator word [g{j}, g{i}] uses a generator <= {j}"));
            }
        }
        Ok(())
    }
}

struct Collector<'a> {
    orders: &'a [u32],
    powers: Vec<Vec<usize>>,
    /// `conj[j][i]`: letters of `g_j^{g_i} = g_j [g_j, g_i]`.
    conj: Vec<Vec<Vec<usize>>>,
    budget: u64,
}

fn letters_of(word: &[u32]) -> Vec<usize> {
    word.iter()
        .enumerate()
        .flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize))
        .collect()
}

impl<'a> Collector<'a> {
    fn new(pcp: &'a PcPresentation, budget: u64) -> Self {
        let d = pcp.num_generators();
        let powers = pcp.powers.iter().map(|w| letters_of(w)).collect();
        let mut conj = vec![vec![Vec::new(); d]; d];
        for (j, row) in conj.iter_mut().enumerate() {
            for slot in row.iter_mut().take(j) {
                *slot = vec![j];
            }
        }
        for (j, i, w) in &pcp.commutators {
            conj[*j][*i].extend(letters_of(w));
        }
        Collector {
            orders: &pcp.relative_orders,
            powers,
            conj,
            budget,
        }
    }

    /// Multiply the normal form `exps` on the right by `g`, collecting from the left.
    fn mul_gen(&self, exps: &mut [u32], g: usize) -> Result<()> {
        let d = exps.len();
        let mut stack = vec![g];
        let mut steps = 0u64;
        while let Some(h) = stack.pop() {
            steps += 1;
            if steps > self.budget {
                return Err(Error::InconsistentPresentation(format!(
                    "collection exceeded {} rewrite steps",
                    self.budget
                )));
            }
            if exps[h + 1..].iter().all(|&e| e == 0) {
                exps[h] += 1;
                if exps[h] == self.orders[h] {
                    exps[h] = 0;
                    stack.extend(self.powers[h].iter().rev());
                }
                continue;
            }
            // x = x_{<=h} · tail, so x · h = x_{<=h} · h · tail^h.
            let mut pending = Vec::new();
            for j in h + 1..d {
                for _ in 0..exps[j] {
                    pending.extend(&self.conj[j][h]);
                }
                exps[j] = 0;
            }
            stack.extend(pending.iter().rev());
            stack.push(h);
        }
        Ok(())
    }
}

fn index_of(exps: &[u32], orders: &[u32]) -> usize {
    exps.iter()
        .zip(orders)
        .fold(0usize, |acc, (&e, &r)| acc * r as usize + e as usize)
}

fn exps_of(mut index: usize, orders: &[u32]) -> Vec<u32> {
    let mut v = vec![0; orders.len()];
    for k in (0..orders.len()).rev() {
        let r = orders[k] as usize;
        v[k] = (index % r) as u32;
        index /= r;
    }
    v
}

fn build_with(pcp: &PcPresentation, cap: usize, budget: u64) -> Result<GroupTable> {
    check_cap(cap)?;
    pcp.validate()?;
    let order = pcp.order();
    if order > cap as u128 {
        return Err(Error::ClosureExceedsCap { cap });
    }
    let n = order as usize;
    let d = pcp.num_generators();
    let orders = &pcp.relative_orders;
    let collector = Collector::new(pcp, budget);

    let mut right = vec![0u16; n * d];
    let mut steps = vec![(0usize, 0usize); n];
    for x in 0..n {
        let ex = exps_of(x, orders);
        for k in 0..d {
            let mut v = ex.clone();
            collector.mul_gen(&mut v, k)?;
            right[x * d + k] = index_of(&v, orders) as u16;
        }
        if x > 0 {
            let k = (0..d).rev().find(|&k| ex[k] != 0).expect("nonzero element");
            let mut prev = ex.clone();
            prev[k] -= 1;
            steps[x] = (index_of(&prev, orders), k);
        }
    }
    let mul = table_from_right_action(n, d, &right, &steps);
    let generators: Vec<usize> = (0..d)
        .map(|k| {
            let mut v = vec![0; d];
            v[k] = 1;
            index_of(&v, orders)
        })
        .collect();
    let g = GroupTable::from_raw(n, mul, generators, format!("pcp{n}"))
        .map_err(|e| Error::InconsistentPresentation(e.to_string()))?;

    let report = certify(&g);
    if let Some((name, witness)) = report.first_failure() {
        return Err(Error::InconsistentPresentation(format!(
            "{name} certificate fails at {witness:?}"
        )));
    }
    check_relations(pcp, &g)?;
    Ok(g)
}

/// Every defining relation must hold in the compiled table.
fn check_relations(pcp: &PcPresentation, g: &GroupTable) -> Result<()> {
    let orders = &pcp.relative_orders;
    let gens = g.generators();
    let elem = |w: &[u32]| index_of(w, orders);
    for (i, w) in pcp.powers.iter().enumerate() {
        if g.pow(gens[i], orders[i] as u64) != elem(w) {
            return Err(Error::InconsistentPresentation(format!("power relation of g{i} fails")));
        }
    }
    let d = pcp.num_generators();
    for j in 0..d {
        for i in 0..j {
            let expected = pcp
                .commutators
                .iter()
                .find(|(a, b, _)| *a == j && *b == i)
                .map(|(_, _, w)| elem(w))
                .unwrap_or(0);
            if g.commutator(gens[j], gens[i]) != expected {
                return Err(Error::InconsistentPresentation(format!(
                    "commutator relation [g{j}, g{i}] fails"
                )));
            }
        }
    }
    Ok(())
}

/// Compile a presentation into a certified table.
pub fn build_from_pcp(pcp: &PcPresentation) -> Result<GroupTable> {
    build_with(pcp, DEFAULT_ORDER_CAP, DEFAULT_REWRITE_BUDGET)
}

impl PcPresentation {
    pub fn compile_with(&self, cap: usize, budget: u64) -> Result<GroupTable> {
        build_with(self, cap, budget)
    }

    /// Exponent vector of element `index` of the compiled group.
    pub fn exponents_of(&self, index: usize) -> Vec<u32> {
        exps_of(index, &self.relative_orders)
    }

    pub fn index_of(&self, exps: &[u32]) -> usize {
        index_of(exps, &self.relative_orders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_eight_from_one_generator() {
        let pcp = PcPresentation::new(2, vec![8]);
        let g = build_from_pcp(&pcp).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(g.element_order(1), 8);
    }

    #[test]
    fn cyclic_eight_as_refined_chain() {
        let mut pcp = PcPresentation::new(2, vec![2, 2, 2]);
        pcp.set_power(0, &[(1, 1)]).set_power(1, &[(2, 1)]);
        let g = build_from_pcp(&pcp).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.element_order(g.generators()[0]), 8);
    }

    #[test]
    fn heisenberg_mod_three() {
        let mut pcp = PcPresentation::new(3, vec![3, 3, 3]);
        pcp.set_commutator(1, 0, &[(2, 1)]);
        let g = build_from_pcp(&pcp).unwrap();
        assert_eq!(g.order(), 27);
        assert!(!g.is_abelian());
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn lexicographic_indexing() {
        let pcp = PcPresentation::new(3, vec![3, 3]);
        assert_eq!(pcp.index_of(&[1, 2]), 5);
        assert_eq!(pcp.exponents_of(5), vec![1, 2]);
        let g = build_from_pcp(&pcp).unwrap();
        assert_eq!(g.generators(), &[3, 1]);
    }

    #[test]
    fn rejects_words_that_are_not_weight_ordered() {
        let mut pcp = PcPresentation::new(2, vec![2, 2]);
        pcp.powers[1] = vec![1, 0];
        assert!(matches!(build_from_pcp(&pcp), Err(Error::InconsistentPresentation(_))));
    }

    #[test]
    fn inconsistent_relations_are_detected() {
        // g0^2 = g1 with g1 of relative order 2 but [g1, g0] = g2 would force
        // g1 to commute with g0 (it is a power of g0), so the relation cannot hold.
        let mut pcp = PcPresentation::new(2, vec![2, 2, 2]);
        pcp.set_power(0, &[(1, 1)]).set_commutator(1, 0, &[(2, 1)]);
        assert!(matches!(build_from_pcp(&pcp), Err(Error::InconsistentPresentation(_))));
    }
}
