//! Finite groups materialized as full multiplication tables.
//!
//! Every construction route (permutation closure, Cayley table, power-commutator
//! presentation) ends in a [`GroupTable`]: elements are `0..order`, the identity
//! is always index 0, and products are table lookups.

mod cayley;
mod certify;
mod pcp;
mod perm;

use std::collections::VecDeque;
use std::sync::OnceLock;

pub use cayley::build_from_cayley;
pub use certify::{certify, CertificateReport, CheckOutcome, FULL_ASSOCIATIVITY_LIMIT};
pub use pcp::{build_from_pcp, PcPresentation, DEFAULT_REWRITE_BUDGET};
pub use perm::{build_from_permutations, build_from_permutations_with_cap, Permutation};

use crate::analysis::ClassData;
use crate::error::{Error, Result};

/// Largest group order any constructor will materialize.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Element indices are stored as `u16`, so no cap may exceed this.
const INDEX_LIMIT: usize = u16::MAX as usize + 1;

/// A finite group with elements `0..order` and identity at index 0.
#[derive(Debug)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    generators: Vec<usize>,
    label: String,
    classes: OnceLock<ClassData>,
}

impl Clone for GroupTable {
    fn clone(&self) -> Self {
        GroupTable {
            order: self.order,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            generators: self.generators.clone(),
            label: self.label.clone(),
            classes: OnceLock::new(),
        }
    }
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul && self.generators == other.generators
    }
}

impl Eq for GroupTable {}

impl GroupTable {
    /// Assemble a table without validation beyond shape. Inverses are read off
    /// the rows; a row without the identity is reported as `NotAGroup`.
    pub(crate) fn from_raw(
        order: usize,
        mul: Vec<u16>,
        generators: Vec<usize>,
        label: impl Into<String>,
    ) -> Result<Self> {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![u16::MAX; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            match row.iter().position(|&v| v == 0) {
                Some(y) => inv[x] = y as u16,
                None => {
                    return Err(Error::NotAGroup {
                        axiom: "inverse".into(),
                        witness: vec![x],
                    })
                }
            }
        }
        Ok(GroupTable {
            order,
            mul,
            inv,
            generators,
            label: label.into(),
            classes: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// Row-major copy of the multiplication table.
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    /// `[x, y] = x⁻¹y⁻¹xy`.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        let yx_inv = self.inv(self.mul(y, x));
        self.mul(yx_inv, xy)
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let mut base = x;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, x| num_integer::lcm(acc, self.element_order(x)))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, (0..self.order).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, vec![0])
    }

    /// Subgroup generated by `seeds`.
    pub fn closure(&self, seeds: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elements = vec![0];
        let gens: Vec<usize> = seeds.iter().copied().filter(|&s| s != 0).collect();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                    queue.push_back(y);
                }
            }
        }
        elements.sort_unstable();
        Subgroup {
            parent_order: self.order,
            elements,
            member,
        }
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = seeds.to_vec();
        loop {
            let h = self.closure(&gens);
            let mut grew = false;
            for &x in &gens.clone() {
                for &g in &self.generators {
                    let c = self.conjugate(x, g);
                    if !h.contains(c) && !gens.contains(&c) {
                        gens.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return h;
            }
        }
    }

    /// A small generating set picked greedily in index order.
    pub fn generating_set(&self, sub: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for &x in sub.elements() {
            if !current.contains(x) {
                gens.push(x);
                current = self.closure(&gens);
                if current.len() == sub.len() {
                    break;
                }
            }
        }
        gens
    }

    /// The subgroup as an abstract group, re-indexed `0..|H|` in parent order.
    pub fn induced(&self, sub: &Subgroup) -> Result<GroupTable> {
        let n = sub.len();
        let mut local = vec![u16::MAX; self.order];
        for (i, &x) in sub.elements().iter().enumerate() {
            local[x] = i as u16;
        }
        let mut mul = Vec::with_capacity(n * n);
        for &x in sub.elements() {
            for &y in sub.elements() {
                let z = local[self.mul(x, y)];
                if z == u16::MAX {
                    return Err(Error::NotAGroup {
                        axiom: "subgroup closure".into(),
                        witness: vec![x, y],
                    });
                }
                mul.push(z);
            }
        }
        let gens = self
            .generating_set(sub)
            .into_iter()
            .map(|x| local[x] as usize)
            .collect();
        GroupTable::from_raw(n, mul, gens, format!("{}|sub{}", self.label, n))
    }

    /// Quotient by a normal subgroup. Cosets are numbered by their smallest
    /// element; the second value maps each element to its coset.
    pub fn quotient(&self, normal: &Subgroup) -> Result<(GroupTable, Vec<usize>)> {
        let mut coset = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if coset[x] == usize::MAX {
                let id = reps.len();
                reps.push(x);
                for &n in normal.elements() {
                    coset[self.mul(x, n)] = id;
                }
            }
        }
        let k = reps.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                mul.push(coset[self.mul(a, b)] as u16);
            }
        }
        let gens: Vec<usize> = self.generators.iter().map(|&g| coset[g]).filter(|&c| c != 0).collect();
        let q = GroupTable::from_raw(k, mul, dedup_keep_order(gens), format!("{}/N{}", self.label, normal.len()))?;
        Ok((q, coset))
    }

    /// External direct product; element `(a, b)` has index `a * |H| + b`.
    pub fn direct_product(&self, other: &GroupTable) -> Result<GroupTable> {
        let n = self.order * other.order;
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::ClosureExceedsCap { cap: DEFAULT_ORDER_CAP });
        }
        let mut mul = Vec::with_capacity(n * n);
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        mul.push((self.mul(a1, a2) * other.order + other.mul(b1, b2)) as u16);
                    }
                }
            }
        }
        let mut gens: Vec<usize> = self.generators.iter().map(|&g| g * other.order).collect();
        gens.extend(other.generators.iter().copied());
        gens.retain(|&g| g != 0);
        GroupTable::from_raw(n, mul, gens, format!("{}x{}", self.label, other.label))
    }

    pub(crate) fn class_cache(&self) -> &OnceLock<ClassData> {
        &self.classes
    }
}

fn dedup_keep_order(v: Vec<usize>) -> Vec<usize> {
    let mut out = Vec::with_capacity(v.len());
    for x in v {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub(crate) fn check_cap(cap: usize) -> Result<()> {
    if cap > INDEX_LIMIT {
        return Err(Error::InvalidParameters(format!(
            "order cap {cap} exceeds the index limit {INDEX_LIMIT}"
        )));
    }
    Ok(())
}

/// A subset of a parent group closed under products and inverses.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
    #[serde(skip)]
    member: Vec<bool>,
}

impl Subgroup {
    pub(crate) fn from_sorted(parent_order: usize, elements: Vec<usize>) -> Self {
        let mut member = vec![false; parent_order];
        for &x in &elements {
            member[x] = true;
        }
        Subgroup {
            parent_order,
            elements,
            member,
        }
    }

    /// Validating constructor: checks closure, identity and Lagrange.
    pub fn new(parent: &GroupTable, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let sub = Subgroup::from_sorted(parent.order(), elements);
        if !sub.contains(0) {
            return Err(Error::NotAGroup {
                axiom: "subgroup identity".into(),
                witness: vec![],
            });
        }
        for &x in &sub.elements {
            if !sub.contains(parent.inv(x)) {
                return Err(Error::NotAGroup {
                    axiom: "subgroup inverse".into(),
                    witness: vec![x],
                });
            }
            for &y in &sub.elements {
                if !sub.contains(parent.mul(x, y)) {
                    return Err(Error::NotAGroup {
                        axiom: "subgroup closure".into(),
                        witness: vec![x, y],
                    });
                }
            }
        }
        Ok(sub)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.member.get(x).copied().unwrap_or(false)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::from_sorted(self.parent_order, elements)
    }

    pub fn is_abelian_in(&self, g: &GroupTable) -> bool {
        let gens = g.generating_set(self);
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commutes(a, b)))
    }

    pub fn is_normal_in(&self, g: &GroupTable) -> bool {
        self.elements
            .iter()
            .all(|&x| g.generators().iter().all(|&s| self.contains(g.conjugate(x, s))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupTable {
        build_from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
    }

    #[test]
    fn closure_and_induced() {
        let g = s3();
        let t = (0..6).find(|&x| x != 0 && g.element_order(x) == 2).unwrap();
        let h = g.closure(&[t]);
        assert_eq!(h.len(), 2);
        let ht = g.induced(&h).unwrap();
        assert_eq!(ht.order(), 2);
        assert_eq!(ht.mul(1, 1), 0);
    }

    #[test]
    fn quotient_by_rotations() {
        let g = s3();
        let r = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let a3 = g.closure(&[r]);
        assert!(a3.is_normal_in(&g));
        let (q, coset) = g.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(coset[0], 0);
        assert!(certify(&q).all_passed());
    }

    #[test]
    fn direct_product_of_cyclics() {
        let c2 = build_from_permutations(&[vec![1, 0]]).unwrap();
        let c3 = build_from_permutations(&[vec![1, 2, 0]]).unwrap();
        let c6 = c2.direct_product(&c3).unwrap();
        assert_eq!(c6.order(), 6);
        assert!(c6.is_abelian());
        assert_eq!(c6.exponent(), 6);
        assert!(certify(&c6).all_passed());
    }

    #[test]
    fn subgroup_validation_rejects_non_closed_sets() {
        let g = s3();
        let r = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        assert!(Subgroup::new(&g, vec![0, r]).is_err());
        assert!(Subgroup::new(&g, vec![0, r, g.inv(r)]).is_ok());
    }
}

/// Fill a full table from right multiplication by generators.
///
/// `right[x * d + k]` is `x · g_k`; `steps[z] = (z', k)` says `z = z' · g_k`
/// with `z' < z`. Then `y · z = (y · z') · g_k` for every `y`.
pub(crate) fn table_from_right_action(n: usize, d: usize, right: &[u16], steps: &[(usize, usize)]) -> Vec<u16> {
    let mut mul = vec![0u16; n * n];
    for y in 0..n {
        mul[y * n] = y as u16;
    }
    for z in 1..n {
        let (zp, k) = steps[z];
        debug_assert!(zp < z);
        for y in 0..n {
            let a = mul[y * n + zp] as usize;
            mul[y * n + z] = right[a * d + k];
        }
    }
    mul
}
