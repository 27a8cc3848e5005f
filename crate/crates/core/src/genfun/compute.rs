use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{Rational, RationalGF};
use crate::analysis::{centralizer, conjugacy_data};
use crate::error::{Error, Result};
use crate::group::GroupTable;

fn q(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(1/|G|) Σ_m z_m / (1 - m t)` from the centralizer-size histogram.
pub fn a_of_t(g: &GroupTable) -> RationalGF {
    let cd = conjugacy_data(g);
    let terms: Vec<RationalGF> = cd
        .z_histogram
        .iter()
        .map(|(&m, &z)| RationalGF::geometric(q(m)).scale(&q(z)))
        .collect();
    RationalGF::sum(terms.iter()).scale(&q(g.order()).recip())
}

/// `(1/|G|) Σ_g |Z(g)|^n`, exact.
pub fn alpha_coefficient(g: &GroupTable, n: u32) -> BigInt {
    let cd = conjugacy_data(g);
    let total: BigInt = cd
        .z_histogram
        .iter()
        .map(|(&m, &z)| BigInt::from(z) * BigInt::from(m).pow(n))
        .sum();
    let order = BigInt::from(g.order());
    debug_assert!((&total % &order).is_zero());
    total / order
}

/// Isomorphism invariant used as the cross-group cache key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub class_equation: Vec<usize>,
    pub abelian: bool,
    pub exponent: usize,
}

impl Fingerprint {
    pub fn of(g: &GroupTable) -> Self {
        Fingerprint {
            order: g.order(),
            class_equation: conjugacy_data(g).class_equation.clone(),
            abelian: g.is_abelian(),
            exponent: g.exponent(),
        }
    }
}

/// When a cached result for an equal fingerprint may be reused.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum MemoPolicy {
    /// Reuse only for abelian groups, where the fingerprint determines `B`.
    #[default]
    TrustAbelianOnly,
    /// Reuse whenever fingerprints match. Faster, not always sound.
    TrustFingerprint,
}

/// Centralizer recursion for `B_G(t)` with a shared cross-group cache.
/// The engine is `Sync`; distinct groups may be evaluated concurrently.
#[derive(Debug)]
pub struct BEngine {
    policy: MemoPolicy,
    max_depth: usize,
    cache: RwLock<HashMap<Fingerprint, RationalGF>>,
    nodes: AtomicU64,
    cache_hits: AtomicU64,
}

impl Default for BEngine {
    fn default() -> Self {
        BEngine::new(MemoPolicy::default())
    }
}

impl BEngine {
    pub fn new(policy: MemoPolicy) -> Self {
        BEngine {
            policy,
            max_depth: 64,
            cache: RwLock::new(HashMap::new()),
            nodes: AtomicU64::new(0),
            cache_hits: AtomicU64::new(0),
        }
    }

    pub fn with_max_depth(mut self, depth: usize) -> Self {
        self.max_depth = depth;
        self
    }

    pub fn policy(&self) -> MemoPolicy {
        self.policy
    }

    /// Non-abelian groups expanded so far.
    pub fn nodes_expanded(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn cache_hits(&self) -> u64 {
        self.cache_hits.load(Ordering::Relaxed)
    }

    pub fn compute(&self, g: &GroupTable) -> Result<RationalGF> {
        self.rec(g, 0)
    }

    fn rec(&self, g: &GroupTable, depth: usize) -> Result<RationalGF> {
        if depth > self.max_depth {
            return Err(Error::RecursionDepthExceeded(self.max_depth));
        }
        if g.is_abelian() {
            return Ok(RationalGF::geometric(q(g.order())));
        }
        let key = (self.policy == MemoPolicy::TrustFingerprint).then(|| Fingerprint::of(g));
        if let Some(key) = &key {
            if let Some(hit) = self.cache.read().unwrap().get(key) {
                self.cache_hits.fetch_add(1, Ordering::Relaxed);
                return Ok(hit.clone());
            }
        }
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let cd = conjugacy_data(g);
        // Classes sharing a centralizer subgroup contribute the same B.
        let mut by_centralizer: HashMap<Vec<usize>, (RationalGF, u64)> = HashMap::new();
        let mut order_seen: Vec<Vec<usize>> = Vec::new();
        for class in cd.classes.iter().filter(|c| c.len() > 1) {
            let c = centralizer(g, class[0]);
            if c.len() >= g.order() {
                return Err(Error::RecursionDepthExceeded(depth));
            }
            let key = c.elements().to_vec();
            if let Some(slot) = by_centralizer.get_mut(&key) {
                slot.1 += 1;
                continue;
            }
            let sub = g.induced(&c)?;
            let b = self.rec(&sub, depth + 1)?;
            order_seen.push(key.clone());
            by_centralizer.insert(key, (b, 1));
        }
        let mut sum = RationalGF::zero();
        for key in &order_seen {
            let (b, count) = &by_centralizer[key];
            sum = sum.add(&b.scale(&Rational::from_integer(BigInt::from(*count))));
        }
        let result = RationalGF::one()
            .add(&sum.times_t())
            .mul(&RationalGF::geometric(q(cd.center_size())));
        if let Some(key) = key {
            self.cache.write().unwrap().entry(key).or_insert_with(|| result.clone());
        }
        Ok(result)
    }
}

/// `B_G(t)` with the default policy and a private cache.
pub fn b_of_t(g: &GroupTable) -> Result<RationalGF> {
    BEngine::default().compute(g)
}

/// Coefficient of `t^n` in `B_G(t)`.
pub fn beta_coefficient(g: &GroupTable, n: usize) -> Result<BigInt> {
    let b = b_of_t(g)?;
    let c = b.series(n + 1).pop().unwrap_or_else(Rational::zero);
    debug_assert!(c.is_integer());
    Ok(c.to_integer())
}

pub fn gf_equal(f: &RationalGF, g: &RationalGF) -> bool {
    f == g
}

pub fn a_equivalent(g: &GroupTable, h: &GroupTable) -> bool {
    a_of_t(g) == a_of_t(h)
}

pub fn b_equivalent(g: &GroupTable, h: &GroupTable) -> Result<bool> {
    Ok(b_of_t(g)? == b_of_t(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::int;
    use crate::group::build_from_permutations;

    fn s3() -> GroupTable {
        build_from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
    }

    fn d16() -> GroupTable {
        let rot: Vec<usize> = (0..8).map(|i| (i + 1) % 8).collect();
        let refl: Vec<usize> = (0..8).map(|i| (8 - i) % 8).collect();
        build_from_permutations(&[rot, refl]).unwrap()
    }

    #[test]
    fn s3_series() {
        let g = s3();
        assert_eq!(a_of_t(&g).series(3), vec![int(1), int(3), int(11)]);
        assert_eq!(b_of_t(&g).unwrap().series(3), vec![int(1), int(3), int(8)]);
        assert_eq!(alpha_coefficient(&g, 2), BigInt::from(11));
        assert_eq!(beta_coefficient(&g, 2).unwrap(), BigInt::from(8));
    }

    #[test]
    fn d16_b_matches_lemma_shape() {
        let g = d16();
        let t = RationalGF::t();
        let expected = RationalGF::one()
            .add(&t.mul(&RationalGF::geometric(int(8))).scale(&int(3)))
            .add(&t.mul(&RationalGF::geometric(int(4))).scale(&int(2)))
            .mul(&RationalGF::geometric(int(2)));
        assert_eq!(b_of_t(&g).unwrap(), expected);
        assert_eq!(alpha_coefficient(&g, 2), BigInt::from(64));
    }

    #[test]
    fn fingerprint_policy_gives_same_answer_here() {
        let g = d16();
        let e = BEngine::new(MemoPolicy::TrustFingerprint);
        assert_eq!(e.compute(&g).unwrap(), b_of_t(&g).unwrap());
    }
}
