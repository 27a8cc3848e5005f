//! A fixed catalog of small groups: every group of order at most 16 up to
//! isomorphism, plus a selection up to order 64.

use crate::error::{Error, Result};
use crate::families::{
    alternating, cyclic, dihedral, elementary_abelian, product, quaternion, semidihedral, symmetric,
};
use crate::group::{build_from_pcp, build_from_permutations, GroupTable, PcPresentation};

fn pcp(label: &str, p: u64, orders: Vec<u32>, build: impl FnOnce(&mut PcPresentation)) -> Result<GroupTable> {
    let mut pc = PcPresentation::new(p, orders);
    build(&mut pc);
    let mut g = build_from_pcp(&pc)?;
    g.set_label(label.to_string());
    Ok(g)
}

fn times(g: Result<GroupTable>, h: Result<GroupTable>) -> Result<GroupTable> {
    product(&g?, &h?)
}

/// `C3 ⋊ C4` with the generator of order 4 inverting: `(0 1 2)` and
/// `(1 2)(3 4 5 6)`.
fn dicyclic12() -> Result<GroupTable> {
    let mut g = build_from_permutations(&[vec![1, 2, 0, 3, 4, 5, 6], vec![0, 2, 1, 4, 5, 6, 3]])?;
    g.set_label(String::from("Dic12"));
    Ok(g)
}

/// `⟨a, b | a^8 = b^2 = 1, bab = a^5⟩`.
fn modular16() -> Result<GroupTable> {
    pcp("M16", 2, vec![2; 4], |pc| {
        pc.set_power(1, &[(2, 1)]).set_power(2, &[(3, 1)]).set_commutator(1, 0, &[(3, 1)]);
    })
}

/// `⟨a, b | a^4 = b^4 = 1, b⁻¹ab = a⁻¹⟩`.
fn c4_semidirect_c4() -> Result<GroupTable> {
    pcp("C4:C4", 2, vec![2; 4], |pc| {
        pc.set_power(0, &[(1, 1)]).set_power(2, &[(3, 1)]).set_commutator(2, 0, &[(3, 1)]);
    })
}

/// `(C4 × C2) ⋊ C2` with `c a c = ab`.
fn c2sq_semidirect_c4() -> Result<GroupTable> {
    pcp("C2^2:C4", 2, vec![2; 4], |pc| {
        pc.set_power(1, &[(2, 1)]).set_commutator(1, 0, &[(3, 1)]);
    })
}

/// Central product of `C4` and `D8`.
fn pauli() -> Result<GroupTable> {
    pcp("C4oD8", 2, vec![2; 4], |pc| {
        pc.set_power(1, &[(3, 1)]).set_power(2, &[(3, 1)]).set_commutator(1, 0, &[(3, 1)]);
    })
}

fn heisenberg27() -> Result<GroupTable> {
    pcp("Heis27", 3, vec![3; 3], |pc| {
        pc.set_commutator(1, 0, &[(2, 1)]);
    })
}

/// Extraspecial of order 27 and exponent 9.
fn extraspecial27_exp9() -> Result<GroupTable> {
    pcp("Ext27e9", 3, vec![3; 3], |pc| {
        pc.set_power(0, &[(2, 1)]).set_commutator(1, 0, &[(2, 1)]);
    })
}

fn cyclic_product(a: usize, b: usize) -> Result<GroupTable> {
    times(cyclic(a), cyclic(b))
}

/// Every group of order at most 16, one per isomorphism class.
pub fn groups_up_to_16() -> Result<Vec<GroupTable>> {
    let mut out = Vec::new();
    for n in 1..=16 {
        out.push(cyclic(n)?);
    }
    out.extend([
        elementary_abelian(2, 2)?,
        symmetric(3)?,
        cyclic_product(2, 4)?,
        elementary_abelian(2, 3)?,
        dihedral(8)?,
        quaternion(8)?,
        elementary_abelian(3, 2)?,
        dihedral(10)?,
        cyclic_product(2, 6)?,
        dihedral(12)?,
        alternating(4)?,
        dicyclic12()?,
        dihedral(14)?,
        cyclic_product(4, 4)?,
        cyclic_product(2, 8)?,
        times(elementary_abelian(2, 2), cyclic(4))?,
        elementary_abelian(2, 4)?,
        dihedral(16)?,
        semidihedral(16)?,
        quaternion(16)?,
        modular16()?,
        c4_semidirect_c4()?,
        c2sq_semidirect_c4()?,
        times(dihedral(8), cyclic(2))?,
        times(quaternion(8), cyclic(2))?,
        pauli()?,
    ]);
    Ok(out)
}

/// The full catalog, sorted by order (stable within an order).
pub fn catalog() -> Result<Vec<GroupTable>> {
    let mut out = groups_up_to_16()?;
    out.extend([
        dihedral(18)?,
        times(cyclic(3), symmetric(3))?,
        dihedral(20)?,
        alternating(4).and_then(|a| product(&a, &cyclic(2)?))?,
        dihedral(24)?,
        symmetric(4)?,
        heisenberg27()?,
        extraspecial27_exp9()?,
        dihedral(32)?,
        semidihedral(32)?,
        quaternion(32)?,
        times(dihedral(16), cyclic(2))?,
        times(times(dihedral(8), cyclic(2)), cyclic(2))?,
        times(symmetric(3), symmetric(3))?,
        alternating(5)?,
        dihedral(64)?,
        semidihedral(64)?,
        quaternion(64)?,
        times(quaternion(8), quaternion(8))?,
    ]);
    out.sort_by_key(GroupTable::order);
    Ok(out)
}

pub fn catalog_up_to(max_order: usize) -> Result<Vec<GroupTable>> {
    Ok(catalog()?.into_iter().filter(|g| g.order() <= max_order).collect())
}

/// Resolve a catalog label, or a parametric name such as `D20`, `Q32`,
/// `SD64`, `C7`, `S5` or `A6`.
pub fn lookup(label: &str) -> Result<GroupTable> {
    let parametric = [
        ("SD", semidihedral as fn(usize) -> Result<GroupTable>),
        ("D", dihedral),
        ("Q", quaternion),
        ("C", cyclic),
        ("S", symmetric),
        ("A", alternating),
    ];
    for (prefix, build) in parametric {
        if let Some(n) = label.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok()) {
            return build(n);
        }
    }
    catalog()?
        .into_iter()
        .find(|g| g.label() == label)
        .ok_or_else(|| Error::InvalidParameters(format!("unknown group {label:?}")))
}
