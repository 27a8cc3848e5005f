//! Structural invariants: conjugacy classes, centralizers, central and derived
//! series, the AC-group test and the maximal-class profile of a p-group.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};

/// Conjugacy classes and the centralizer-size histogram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassData {
    /// Classes ordered by their smallest element; each class sorted.
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub centralizer_sizes: Vec<usize>,
    /// `m -> z_m`, the number of elements whose centralizer has order `m`.
    pub z_histogram: BTreeMap<usize, usize>,
    /// Class sizes in ascending order.
    pub class_equation: Vec<usize>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
}

impl ClassData {
    pub fn class_number(&self) -> usize {
        self.classes.len()
    }

    pub fn center_size(&self) -> usize {
        self.classes.iter().filter(|c| c.len() == 1).count()
    }
}

fn compute_classes(g: &GroupTable) -> ClassData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[x] = id;
        let mut members = vec![x];
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for &s in g.generators() {
                let c = g.conjugate(y, s);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    members.push(c);
                    queue.push_back(c);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let centralizer_sizes: Vec<usize> = classes.iter().map(|c| n / c.len()).collect();
    let mut z_histogram = BTreeMap::new();
    for (c, &m) in classes.iter().zip(&centralizer_sizes) {
        *z_histogram.entry(m).or_insert(0) += c.len();
    }
    let mut class_equation: Vec<usize> = classes.iter().map(Vec::len).collect();
    class_equation.sort_unstable();
    ClassData {
        classes,
        representatives,
        centralizer_sizes,
        z_histogram,
        class_equation,
        class_of,
    }
}

/// Conjugacy classes of `g`, computed once per table and cached.
pub fn conjugacy_data(g: &GroupTable) -> &ClassData {
    g.class_cache().get_or_init(|| compute_classes(g))
}

pub fn centralizer(g: &GroupTable, x: usize) -> Subgroup {
    let elements = (0..g.order()).filter(|&y| g.commutes(x, y)).collect();
    Subgroup::new_unchecked(g.order(), elements)
}

/// Elements commuting with every element of `set`.
pub fn centralizer_of_set(g: &GroupTable, set: &[usize]) -> Subgroup {
    let elements = (0..g.order())
        .filter(|&y| set.iter().all(|&x| g.commutes(x, y)))
        .collect();
    Subgroup::new_unchecked(g.order(), elements)
}

pub fn center(g: &GroupTable) -> Subgroup {
    centralizer_of_set(g, g.generators())
}

/// Normal closure of the commutators of generator pairs.
pub fn derived_subgroup(g: &GroupTable) -> Subgroup {
    let gens = g.generators();
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let c = g.commutator(a, b);
            if c != 0 && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    g.normal_closure(&seeds)
}

/// `[N, G]` for a normal subgroup `N`.
pub fn commutator_with_group(g: &GroupTable, normal: &Subgroup) -> Subgroup {
    let mut seeds = Vec::new();
    for &a in &g.generating_set(normal) {
        for &s in g.generators() {
            let c = g.commutator(a, s);
            if c != 0 && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    g.normal_closure(&seeds)
}

/// `γ_1 = G, γ_{i+1} = [γ_i, G]`, stopping once a term repeats.
/// For nilpotent groups the last entry is the trivial subgroup.
pub fn lower_central_series(g: &GroupTable) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let next = commutator_with_group(g, series.last().unwrap());
        if next.len() == series.last().unwrap().len() {
            return series;
        }
        let done = next.len() == 1;
        series.push(next);
        if done {
            return series;
        }
    }
}

/// Nilpotency class, or `None` if the lower central series stalls above 1.
pub fn nilpotency_class(g: &GroupTable) -> Option<usize> {
    let series = lower_central_series(g);
    (series.last().unwrap().len() == 1).then(|| series.len() - 1)
}

/// Every non-central element has an abelian centralizer.
pub fn is_ac_group(g: &GroupTable) -> bool {
    let cd = conjugacy_data(g);
    cd.classes
        .iter()
        .filter(|c| c.len() > 1)
        .all(|c| centralizer(g, c[0]).is_abelian_in(g))
}

/// `m` with `order = p^m`.
pub fn prime_power_exponent(order: usize, p: u64) -> Option<u32> {
    if p < 2 {
        return None;
    }
    let mut n = order as u64;
    let mut m = 0;
    while n > 1 {
        if n % p != 0 {
            return None;
        }
        n /= p;
        m += 1;
    }
    Some(m)
}

/// `G' G^p` for a p-group.
pub fn frattini_subgroup(g: &GroupTable, p: u64) -> Subgroup {
    let mut seeds: Vec<usize> = derived_subgroup(g).elements().to_vec();
    seeds.extend((0..g.order()).map(|x| g.pow(x, p)));
    seeds.sort_unstable();
    seeds.dedup();
    let seeds = g.generating_set(&g.closure(&seeds));
    g.closure(&seeds)
}

/// All maximal subgroups of a p-group, as kernels of the nonzero functionals
/// on the Frattini quotient (one per projective point).
pub fn maximal_subgroups(g: &GroupTable, p: u64) -> Result<Vec<Subgroup>> {
    if prime_power_exponent(g.order(), p).is_none() {
        return Err(Error::NotPrimePower { order: g.order(), p });
    }
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    let frattini = frattini_subgroup(g, p);
    // Minimal generators modulo the Frattini subgroup.
    let mut basis: Vec<usize> = Vec::new();
    let mut span = frattini.clone();
    for x in 0..g.order() {
        if !span.contains(x) {
            basis.push(x);
            let mut seeds = g.generating_set(&frattini);
            seeds.extend(&basis);
            span = g.closure(&seeds);
        }
    }
    let d = basis.len();
    let pu = p as usize;
    // Coordinates of every element in G/Φ ≅ F_p^d.
    let mut coords: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    let total = pu.pow(d as u32);
    for code in 0..total {
        let mut a = vec![0usize; d];
        let mut c = code;
        for slot in a.iter_mut().rev() {
            *slot = c % pu;
            c /= pu;
        }
        let mut rep = 0;
        for (k, &e) in a.iter().enumerate() {
            rep = g.mul(rep, g.pow(basis[k], e as u64));
        }
        for &f in frattini.elements() {
            coords[g.mul(rep, f)] = a.clone();
        }
    }
    let mut result = Vec::new();
    for code in 1..total {
        let mut lambda = vec![0usize; d];
        let mut c = code;
        for slot in lambda.iter_mut().rev() {
            *slot = c % pu;
            c /= pu;
        }
        // One functional per line: leading nonzero coefficient equal to 1.
        if lambda.iter().find(|&&v| v != 0) != Some(&1) {
            continue;
        }
        let elements: Vec<usize> = (0..g.order())
            .filter(|&x| {
                coords[x]
                    .iter()
                    .zip(&lambda)
                    .map(|(a, l)| a * l)
                    .sum::<usize>()
                    % pu
                    == 0
            })
            .collect();
        result.push(Subgroup::new_unchecked(g.order(), elements));
    }
    Ok(result)
}

pub fn has_abelian_maximal_subgroup(g: &GroupTable, p: u64) -> Result<bool> {
    Ok(maximal_subgroups(g, p)?.iter().any(|m| m.is_abelian_in(g)))
}

#[derive(Debug, Clone, Serialize)]
pub struct MaximalClassProfile {
    pub is_maximal_class: bool,
    pub p: u64,
    pub m: u32,
    pub nilpotency_class: usize,
    /// `P_0 = G, P_1 = K_2, P_i = γ_i` for `2 <= i <= m`. Empty unless maximal class.
    pub p_series: Vec<Subgroup>,
    pub degree_of_commutativity_positive: bool,
    pub has_abelian_maximal_subgroup: bool,
    pub p1_p3_commute: bool,
}

fn all_commutators_in(g: &GroupTable, a: &Subgroup, b: &Subgroup, target: &Subgroup) -> bool {
    let ga = g.generating_set(a);
    let gb = g.generating_set(b);
    // [A, B] is normal in G when A and B are; testing generators and then the
    // normal closure keeps this cheap.
    let mut seeds = Vec::new();
    for &x in &ga {
        for &y in &gb {
            let c = g.commutator(x, y);
            if c != 0 {
                seeds.push(c);
            }
        }
    }
    g.normal_closure(&seeds).is_subset_of(target)
}

pub fn maximal_class_profile(g: &GroupTable, p: u64) -> Result<MaximalClassProfile> {
    let m = prime_power_exponent(g.order(), p).ok_or(Error::NotPrimePower { order: g.order(), p })?;
    let series = lower_central_series(g);
    let class = if series.last().map(Subgroup::len) == Some(1) {
        series.len() - 1
    } else {
        usize::MAX
    };
    let has_abelian_max = has_abelian_maximal_subgroup(g, p)?;
    let mut profile = MaximalClassProfile {
        is_maximal_class: m >= 4 && class == m as usize - 1,
        p,
        m,
        nilpotency_class: class,
        p_series: Vec::new(),
        degree_of_commutativity_positive: false,
        has_abelian_maximal_subgroup: has_abelian_max,
        p1_p3_commute: false,
    };
    if !profile.is_maximal_class {
        return Ok(profile);
    }
    let m = m as usize;
    let gamma = |i: usize| -> Subgroup {
        if i <= class {
            series[i - 1].clone()
        } else {
            g.trivial_subgroup()
        }
    };
    // K_2: elements acting trivially on γ_2/γ_4.
    let g2 = gamma(2);
    let g4 = gamma(4);
    let g2_gens = g.generating_set(&g2);
    let k2: Vec<usize> = (0..g.order())
        .filter(|&x| g2_gens.iter().all(|&y| g4.contains(g.commutator(x, y))))
        .collect();
    let k2 = Subgroup::new_unchecked(g.order(), k2);
    let mut p_series = vec![g.whole(), k2];
    for i in 2..=m {
        p_series.push(gamma(i));
    }
    let p_at = |i: usize| -> Subgroup {
        if i <= m {
            p_series[i].clone()
        } else {
            g.trivial_subgroup()
        }
    };
    let p1 = p_at(1);
    let p3 = p_at(3);
    let p1_gens = g.generating_set(&p1);
    let p3_gens = g.generating_set(&p3);
    profile.p1_p3_commute = p1_gens
        .iter()
        .all(|&x| p3_gens.iter().all(|&y| g.commutes(x, y)));
    profile.degree_of_commutativity_positive = if p1.is_abelian_in(g) {
        true
    } else {
        (1..m).all(|i| (1..m).all(|j| all_commutators_in(g, &p_at(i), &p_at(j), &p_at(i + j + 1))))
    };
    profile.p_series = p_series;
    Ok(profile)
}

impl Subgroup {
    pub(crate) fn new_unchecked(parent_order: usize, elements: Vec<usize>) -> Self {
        Subgroup::from_sorted(parent_order, elements)
    }
}
