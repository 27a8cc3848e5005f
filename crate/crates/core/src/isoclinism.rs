//! Isoclinism: a pair of isomorphisms `θ: G/Z(G) -> H/Z(H)` and
//! `φ: G' -> H'` compatible with the commutator maps.
//!
//! `θ` is found by backtracking over images of a generating set of the central
//! quotient, extending each partial assignment to the subgroup it generates.
//! `φ` is never searched: the commutator diagram forces it on commutators, and
//! it is then extended over `G'` and validated.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::analysis::{center, conjugacy_data, derived_subgroup};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};

/// Largest central quotient the search will attempt.
pub const DEFAULT_QUOTIENT_CAP: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoclinismWitness {
    /// `(g, h)`: the coset of `g` in `G/Z(G)` maps to the coset of `h`.
    /// Both are the smallest elements of their cosets.
    pub theta: Vec<(usize, usize)>,
    /// `(x, y)` with `φ(x) = y` for every `x` in `G'`.
    pub phi: Vec<(usize, usize)>,
}

/// `|G/Z(G)| · |Z(G) ∩ G'|`, the order of the stem groups isoclinic to `G`.
pub fn stem_order(g: &GroupTable) -> usize {
    let z = center(g);
    let d = derived_subgroup(g);
    (g.order() / z.len()) * z.intersection(&d).len()
}

struct Side<'a> {
    g: &'a GroupTable,
    q: GroupTable,

    /// Smallest element of each coset.
    reps: Vec<usize>,
    derived: Subgroup,
    /// Per quotient element: (order in quotient, centralizer size in quotient,
    /// class size of a lift in the group).
    invariants: Vec<(usize, usize, usize)>,
}

impl<'a> Side<'a> {
    fn new(g: &'a GroupTable, cap: usize) -> Result<Self> {
        let z = center(g);
        let qorder = g.order() / z.len();
        if qorder > cap {
            return Err(Error::QuotientTooLarge { order: qorder, cap });
        }
        let (q, coset) = g.quotient(&z)?;
        let mut reps = vec![usize::MAX; q.order()];
        for x in (0..g.order()).rev() {
            reps[coset[x]] = x;
        }
        let cd_g = conjugacy_data(g);
        let cd_q = conjugacy_data(&q);
        let invariants = (0..q.order())
            .map(|c| {
                let lift_class = cd_g.classes[cd_g.class_of[reps[c]]].len();
                (q.element_order(c), cd_q.centralizer_sizes[cd_q.class_of[c]], lift_class)
            })
            .collect();
        Ok(Side {
            g,
            q,

            reps,
            derived: derived_subgroup(g),
            invariants,
        })
    }

    /// Commutator of lifts of two quotient elements; independent of the lifts.
    fn comm(&self, a: usize, b: usize) -> usize {
        self.g.commutator(self.reps[a], self.reps[b])
    }
}

/// Search for an isoclinism with the default quotient cap.
pub fn are_isoclinic(g: &GroupTable, h: &GroupTable) -> Result<Option<IsoclinismWitness>> {
    are_isoclinic_with_cap(g, h, DEFAULT_QUOTIENT_CAP)
}

pub fn are_isoclinic_with_cap(g: &GroupTable, h: &GroupTable, cap: usize) -> Result<Option<IsoclinismWitness>> {
    let sg = Side::new(g, cap)?;
    let sh = Side::new(h, cap)?;
    if sg.q.order() != sh.q.order() || sg.derived.len() != sh.derived.len() {
        return Ok(None);
    }
    let mut hist_g: Vec<_> = sg.invariants.clone();
    let mut hist_h: Vec<_> = sh.invariants.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return Ok(None);
    }
    let gens = sg.q.generating_set(&sg.q.whole());
    let mut search = Search {
        sg: &sg,
        sh: &sh,
        gens: &gens,
        images: Vec::new(),
    };
    Ok(search.run())
}

struct Search<'s, 'a> {
    sg: &'s Side<'a>,
    sh: &'s Side<'a>,
    gens: &'s [usize],
    images: Vec<usize>,
}

impl Search<'_, '_> {
    fn run(&mut self) -> Option<IsoclinismWitness> {
        let k = self.images.len();
        if k == self.gens.len() {
            let theta = self.extend()?;
            return self.finish(&theta);
        }
        let want = self.sg.invariants[self.gens[k]];
        for cand in 0..self.sh.q.order() {
            if self.sh.invariants[cand] != want {
                continue;
            }
            self.images.push(cand);
            if self.extend().is_some() {
                if let Some(w) = self.run() {
                    return Some(w);
                }
            }
            self.images.pop();
        }
        None
    }

    /// Extend the current generator images to a homomorphism on the subgroup
    /// they generate, checking injectivity and commutator compatibility.
    fn extend(&self) -> Option<Vec<usize>> {
        let (qg, qh) = (&self.sg.q, &self.sh.q);
        let mut map = vec![usize::MAX; qg.order()];
        let mut used = vec![false; qh.order()];
        map[0] = 0;
        used[0] = true;
        let mut domain = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (i, &s) in self.gens[..self.images.len()].iter().enumerate() {
                let y = qg.mul(x, s);
                let fy = qh.mul(map[x], self.images[i]);
                if map[y] == usize::MAX {
                    if used[fy] {
                        return None;
                    }
                    map[y] = fy;
                    used[fy] = true;
                    domain.push(y);
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let mut forced: HashMap<usize, usize> = HashMap::new();
        for &x in &domain {
            for &y in &domain {
                let c = self.sg.comm(x, y);
                let d = self.sh.comm(map[x], map[y]);
                if *forced.entry(c).or_insert(d) != d {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn finish(&self, theta: &[usize]) -> Option<IsoclinismWitness> {
        let (g, h) = (self.sg.g, self.sh.g);
        if theta.iter().any(|&v| v == usize::MAX) {
            return None;
        }
        let n = self.sg.q.order();
        let mut phi = vec![usize::MAX; g.order()];
        let mut comm_gens = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let c = self.sg.comm(x, y);
                let d = self.sh.comm(theta[x], theta[y]);
                if phi[c] == usize::MAX {
                    phi[c] = d;
                    comm_gens.push(c);
                } else if phi[c] != d {
                    return None;
                }
            }
        }
        // Extend over G' = ⟨commutators⟩ and check the homomorphism property
        // on every (element, generator) pair.
        let mut queue = VecDeque::from([0usize]);
        let mut seen = vec![false; g.order()];
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &c in &comm_gens {
                let y = g.mul(x, c);
                let fy = h.mul(phi[x], phi[c]);
                if phi[y] == usize::MAX {
                    phi[y] = fy;
                } else if phi[y] != fy {
                    return None;
                }
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let domain: Vec<usize> = self.sg.derived.elements().to_vec();
        let mut hit = vec![false; h.order()];
        for &x in &domain {
            let y = phi[x];
            if y == usize::MAX || !self.sh.derived.contains(y) || hit[y] {
                return None;
            }
            hit[y] = true;
        }
        let witness = IsoclinismWitness {
            theta: (0..n).map(|c| (self.sg.reps[c], self.sh.reps[theta[c]])).collect(),
            phi: domain.iter().map(|&x| (x, phi[x])).collect(),
        };
        verify_witness(g, h, &witness).then_some(witness)
    }
}

/// Exhaustive check of a witness: `θ` a bijective homomorphism of central
/// quotients, `φ` a bijection `G' -> H'` preserving products, and the
/// commutator diagram commuting on every pair of cosets.
pub fn verify_witness(g: &GroupTable, h: &GroupTable, w: &IsoclinismWitness) -> bool {
    let (zg, zh) = (center(g), center(h));
    let (dg, dh) = (derived_subgroup(g), derived_subgroup(h));
    if w.theta.len() * zg.len() != g.order() || w.theta.len() * zh.len() != h.order() {
        return false;
    }
    if w.phi.len() != dg.len() || dg.len() != dh.len() {
        return false;
    }
    let Ok((_, cg)) = g.quotient(&zg) else { return false };
    let Ok((_, ch)) = h.quotient(&zh) else { return false };
    let mut theta = HashMap::new();
    let mut targets = std::collections::HashSet::new();
    for &(a, b) in &w.theta {
        if theta.insert(cg[a], b).is_some() || !targets.insert(ch[b]) {
            return false;
        }
    }
    if theta.len() != w.theta.len() {
        return false;
    }
    let phi: HashMap<usize, usize> = w.phi.iter().copied().collect();
    let phi_targets: std::collections::HashSet<usize> = phi.values().copied().collect();
    if phi.len() != dg.len() || phi_targets.len() != dh.len() || !phi_targets.iter().all(|&y| dh.contains(y)) {
        return false;
    }
    for &(a1, b1) in &w.theta {
        for &(a2, b2) in &w.theta {
            // θ is a homomorphism on cosets.
            let prod = cg[g.mul(a1, a2)];
            if ch[h.mul(b1, b2)] != ch[theta[&prod]] {
                return false;
            }
            // The commutator diagram commutes.
            if phi.get(&g.commutator(a1, a2)) != Some(&h.commutator(b1, b2)) {
                return false;
            }
        }
    }
    dg.elements()
        .iter()
        .all(|&x| dg.elements().iter().all(|&y| phi[&g.mul(x, y)] == h.mul(phi[&x], phi[&y])))
}
