//! Catalog of constructible groups: the stem groups of the isoclinism families
//! of rank at most 5 and a handful of named families.
//!
//! Each stem group is built from a power-commutator presentation (or from
//! permutations for the dihedral ones) and then checked against an expected
//! structural fingerprint before it is handed out.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{center, derived_subgroup, has_abelian_maximal_subgroup, nilpotency_class};
use crate::error::{Error, Result};
use crate::group::{build_from_pcp, build_from_permutations, GroupTable, PcPresentation, DEFAULT_ORDER_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Abelian,
    Phi2,
    Phi3,
    Phi4,
    Phi5,
    Phi6,
    Phi7,
    Phi8,
    Phi9,
    Phi10,
    Gamma2,
    Gamma3,
    Gamma4,
    Gamma5,
    Gamma6,
    Gamma7,
    Gamma8,
}

impl Family {
    pub const ALL: [Family; 17] = [
        Family::Abelian,
        Family::Phi2,
        Family::Phi3,
        Family::Phi4,
        Family::Phi5,
        Family::Phi6,
        Family::Phi7,
        Family::Phi8,
        Family::Phi9,
        Family::Phi10,
        Family::Gamma2,
        Family::Gamma3,
        Family::Gamma4,
        Family::Gamma5,
        Family::Gamma6,
        Family::Gamma7,
        Family::Gamma8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Abelian => "abelian",
            Family::Phi2 => "phi2",
            Family::Phi3 => "phi3",
            Family::Phi4 => "phi4",
            Family::Phi5 => "phi5",
            Family::Phi6 => "phi6",
            Family::Phi7 => "phi7",
            Family::Phi8 => "phi8",
            Family::Phi9 => "phi9",
            Family::Phi10 => "phi10",
            Family::Gamma2 => "gamma2",
            Family::Gamma3 => "gamma3",
            Family::Gamma4 => "gamma4",
            Family::Gamma5 => "gamma5",
            Family::Gamma6 => "gamma6",
            Family::Gamma7 => "gamma7",
            Family::Gamma8 => "gamma8",
        }
    }

    pub fn is_phi(self) -> bool {
        matches!(
            self,
            Family::Phi2
                | Family::Phi3
                | Family::Phi4
                | Family::Phi5
                | Family::Phi6
                | Family::Phi7
                | Family::Phi8
                | Family::Phi9
                | Family::Phi10
        )
    }

    pub fn is_gamma(self) -> bool {
        !self.is_phi() && self != Family::Abelian
    }

    /// Families whose table row applies at `p` (abelian at every prime).
    pub fn admits(self, p: u64) -> bool {
        match self {
            Family::Abelian => true,
            f if f.is_gamma() => p == 2,
            _ => p != 2,
        }
    }

    /// Rank `r` of the family: its stem groups have order `p^r`.
    pub fn rank(self) -> u32 {
        match self {
            Family::Abelian => 0,
            Family::Phi2 | Family::Gamma2 => 3,
            Family::Phi3 | Family::Gamma3 => 4,
            _ => 5,
        }
    }

    /// Order of the catalog representative at `p`. The abelian family's stem
    /// group is trivial; the catalog uses `C_p` instead.
    pub fn order(self, p: u64) -> u64 {
        match self {
            Family::Abelian => p,
            f => p.pow(f.rank()),
        }
    }

    /// Expected `(|Z|, |G'|, nilpotency class, has abelian maximal subgroup)`
    /// with sizes as powers of `p`.
    fn fingerprint_exponents(self) -> (u32, u32, usize, bool) {
        match self {
            Family::Abelian => (1, 0, 1, true),
            Family::Phi2 | Family::Gamma2 => (1, 1, 2, true),
            Family::Phi3 | Family::Gamma3 => (1, 2, 3, true),
            Family::Phi4 | Family::Gamma4 => (2, 2, 2, true),
            Family::Phi5 | Family::Gamma5 => (1, 1, 2, false),
            Family::Phi6 => (2, 3, 3, false),
            Family::Phi7 | Family::Phi8 | Family::Gamma6 | Family::Gamma7 => (1, 2, 3, false),
            Family::Phi9 | Family::Gamma8 => (1, 3, 4, true),
            Family::Phi10 => (1, 3, 4, false),
        }
    }

    pub fn expected_fingerprint(self, p: u64) -> StructuralFingerprint {
        let (z, d, class, abelian_max) = self.fingerprint_exponents();
        StructuralFingerprint {
            center: p.pow(z) as usize,
            derived: p.pow(d) as usize,
            class,
            abelian_maximal: abelian_max,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['_', '-'], "");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// `(|Z(G)|, |G'|, nilpotency class, has an abelian maximal subgroup)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralFingerprint {
    pub center: usize,
    pub derived: usize,
    pub class: usize,
    pub abelian_maximal: bool,
}

impl fmt::Display for StructuralFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "|Z|={} |G'|={} class={} abelian_max={}",
            self.center, self.derived, self.class, self.abelian_maximal
        )
    }
}

pub fn structural_fingerprint(g: &GroupTable, p: u64) -> Result<StructuralFingerprint> {
    Ok(StructuralFingerprint {
        center: center(g).len(),
        derived: derived_subgroup(g).len(),
        class: nilpotency_class(g).unwrap_or(usize::MAX),
        abelian_maximal: has_abelian_maximal_subgroup(g, p)?,
    })
}

fn check_order_cap(order: u64) -> Result<()> {
    if order as usize > DEFAULT_ORDER_CAP {
        return Err(Error::InvalidParameters(format!(
            "order {order} exceeds the order cap {DEFAULT_ORDER_CAP}"
        )));
    }
    Ok(())
}

/// The catalog stem group of `family` at the prime `p`, fingerprint-checked.
pub fn stem_group(family: Family, p: u64) -> Result<GroupTable> {
    if !crate::closed_forms::is_prime(p) {
        return Err(Error::InvalidParameters(format!("{p} is not prime")));
    }
    if !family.admits(p) {
        return Err(Error::InvalidParameters(format!(
            "{family} is defined for {}",
            if family.is_gamma() { "p = 2 only" } else { "odd primes only" }
        )));
    }
    check_order_cap(family.order(p))?;
    let mut g = match family {
        Family::Abelian => cyclic(p as usize)?,
        Family::Gamma2 => dihedral(8)?,
        Family::Gamma3 => dihedral(16)?,
        Family::Gamma8 => dihedral(32)?,
        _ => build_from_pcp(&stem_presentation(family, p)?)?,
    };
    let label = format!("{family}(p={p})");
    let expected = family.expected_fingerprint(p);
    let actual = structural_fingerprint(&g, p)?;
    if expected != actual || g.order() as u64 != family.order(p) {
        return Err(Error::FingerprintMismatch {
            label,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
    if family == Family::Phi3 {
        let profile = crate::analysis::maximal_class_profile(&g, p)?;
        if !profile.is_maximal_class {
            return Err(Error::FingerprintMismatch {
                label,
                expected: "maximal class".into(),
                actual: format!("class {}", profile.nilpotency_class),
            });
        }
    }
    g.set_label(label);
    Ok(g)
}

/// Power-commutator presentation of a stem group. Commutators are
/// `[x, y] = x^-1 y^-1 x y` and generator `i` is stored at index `i`.
pub fn stem_presentation(family: Family, p: u64) -> Result<PcPresentation> {
    let q = p as u32;
    let inv = q - 1;
    let mut pc = PcPresentation::new(p, vec![q; family.rank() as usize]);
    match family {
        Family::Phi2 => {
            pc.set_commutator(1, 0, &[(2, 1)]);
        }
        Family::Phi3 => {
            // α, α1, α2, α3 with [α_i, α] = α_{i+1}; all p-th powers trivial.
            pc.set_commutator(1, 0, &[(2, 1)]).set_commutator(2, 0, &[(3, 1)]);
        }
        Family::Phi4 => {
            // α, α1, α2, β1, β2 with [α_i, α] = β_i.
            pc.set_commutator(1, 0, &[(3, 1)]).set_commutator(2, 0, &[(4, 1)]);
        }
        Family::Phi5 => {
            // α1..α4, β with [α1, α2] = [α3, α4] = β.
            pc.set_commutator(1, 0, &[(4, inv)]).set_commutator(3, 2, &[(4, inv)]);
        }
        Family::Phi6 => {
            // α1, α2, β, β1, β2 with [α1, α2] = β, [β, α_i] = β_i.
            pc.set_commutator(1, 0, &[(2, inv)])
                .set_commutator(2, 0, &[(3, 1)])
                .set_commutator(2, 1, &[(4, 1)]);
        }
        Family::Phi7 => {
            // α, α1, β, α2, α3 with [α_i, α] = α_{i+1}, [α1, β] = α3.
            pc.set_commutator(1, 0, &[(3, 1)])
                .set_commutator(3, 0, &[(4, 1)])
                .set_commutator(2, 1, &[(4, inv)]);
            if p == 3 {
                // α1^3 α3 = 1.
                pc.set_power(1, &[(4, 2)]);
            }
        }
        Family::Phi8 => {
            // α1, α2, β = α1^p, α2^p, β^p with [α1, α2] = β.
            pc.set_power(0, &[(2, 1)])
                .set_power(1, &[(3, 1)])
                .set_power(2, &[(4, 1)])
                .set_commutator(1, 0, &[(2, inv), (4, inv)])
                .set_commutator(2, 1, &[(4, 1)])
                .set_commutator(3, 0, &[(4, inv)]);
        }
        Family::Phi9 | Family::Phi10 => {
            // α, α1..α4 with [α_i, α] = α_{i+1}.
            pc.set_commutator(1, 0, &[(2, 1)])
                .set_commutator(2, 0, &[(3, 1)])
                .set_commutator(3, 0, &[(4, 1)]);
            if family == Family::Phi10 {
                // [α1, α2] = α4.
                pc.set_commutator(2, 1, &[(4, inv)]);
            }
            if p == 3 {
                // α2^3 α4 = 1 and α1^3 α2^3 α3 = 1.
                pc.set_power(2, &[(4, 2)]).set_power(1, &[(3, 2), (4, 1)]);
            }
        }
        Family::Gamma4 => {
            // β, α1, α2, α1^2, α2^2 with β inverting both α_i.
            pc.set_power(1, &[(3, 1)])
                .set_power(2, &[(4, 1)])
                .set_commutator(1, 0, &[(3, 1)])
                .set_commutator(2, 0, &[(4, 1)]);
        }
        Family::Gamma5 => {
            // α1..α4, β with [α1, α2] = [α2, α3] = [α1, α4] = β.
            pc.set_commutator(1, 0, &[(4, 1)])
                .set_commutator(2, 1, &[(4, 1)])
                .set_commutator(3, 0, &[(4, 1)]);
        }
        Family::Gamma6 => {
            // β1, β2, α, α^2, α^4 with β1 inverting α and β2 α β2^-1 = α^5.
            pc.set_power(2, &[(3, 1)])
                .set_power(3, &[(4, 1)])
                .set_commutator(2, 0, &[(3, 1), (4, 1)])
                .set_commutator(3, 0, &[(4, 1)])
                .set_commutator(2, 1, &[(4, 1)]);
        }
        Family::Gamma7 => {
            // α, α^2, β3, β2, β1 with α β2 α^-1 = β1 β2, α β3 α^-1 = β2 β3.
            pc.set_power(0, &[(1, 1)])
                .set_commutator(2, 0, &[(3, 1), (4, 1)])
                .set_commutator(3, 0, &[(4, 1)])
                .set_commutator(2, 1, &[(4, 1)]);
        }
        Family::Abelian | Family::Gamma2 | Family::Gamma3 | Family::Gamma8 => {
            return Err(Error::InvalidParameters(format!(
                "{family} is built from permutations, not a presentation"
            )))
        }
    }
    Ok(pc)
}

/// Generic named groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "name")]
pub enum Named {
    Cyclic { order: usize },
    /// Dihedral group of the given order (`2n` for the `n`-gon).
    Dihedral { order: usize },
    Semidihedral { order: usize },
    Quaternion { order: usize },
    ElementaryAbelian { p: u64, rank: u32 },
    Symmetric { degree: usize },
    Alternating { degree: usize },
}

pub fn named_group(name: Named) -> Result<GroupTable> {
    match name {
        Named::Cyclic { order } => cyclic(order),
        Named::Dihedral { order } => dihedral(order),
        Named::Semidihedral { order } => semidihedral(order),
        Named::Quaternion { order } => quaternion(order),
        Named::ElementaryAbelian { p, rank } => elementary_abelian(p, rank),
        Named::Symmetric { degree } => symmetric(degree),
        Named::Alternating { degree } => alternating(degree),
    }
}

fn labelled(mut g: GroupTable, label: String) -> GroupTable {
    g.set_label(label);
    g
}

pub fn cyclic(order: usize) -> Result<GroupTable> {
    if order == 0 {
        return Err(Error::InvalidParameters("cyclic order must be positive".into()));
    }
    check_order_cap(order as u64)?;
    let gen: Vec<usize> = (0..order).map(|i| (i + 1) % order).collect();
    Ok(labelled(build_from_permutations(&[gen])?, format!("C{order}")))
}

pub fn dihedral(order: usize) -> Result<GroupTable> {
    if order < 6 || order % 2 != 0 {
        return Err(Error::InvalidParameters(format!(
            "dihedral order must be even and at least 6, got {order}"
        )));
    }
    check_order_cap(order as u64)?;
    let n = order / 2;
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    Ok(labelled(build_from_permutations(&[rot, refl])?, format!("D{order}")))
}

/// `⟨β, α | α^(2^(n-1)) = 1, β α β^-1 = α^e⟩` of order `2^n`, refined to a
/// presentation on `β, α, α^2, ..., α^(2^(n-2))`.
fn maximal_class_2group(order: usize, e: i64, beta_square_central: bool) -> Result<GroupTable> {
    let n = order.trailing_zeros() as usize;
    let m = 1i64 << (n - 1);
    let mut pc = PcPresentation::new(2, vec![2; n]);
    for k in 1..n - 1 {
        pc.set_power(k, &[(k + 1, 1)]);
    }
    if beta_square_central {
        pc.set_power(0, &[(n - 1, 1)]);
    }
    for k in 1..n {
        // [α^N, β] = α^((e-1)N), N = 2^(k-1).
        let big_n = 1i64 << (k - 1);
        let exp = ((e - 1) * big_n).rem_euclid(m);
        let letters: Vec<(usize, u32)> = (0..n - 1)
            .filter(|j| exp >> j & 1 == 1)
            .map(|j| (j + 1, 1))
            .collect();
        if !letters.is_empty() {
            pc.set_commutator(k, 0, &letters);
        }
    }
    build_from_pcp(&pc)
}

fn need_two_power(order: usize, min: usize, what: &str) -> Result<()> {
    if order < min || !order.is_power_of_two() {
        return Err(Error::InvalidParameters(format!(
            "{what} order must be a power of 2 and at least {min}, got {order}"
        )));
    }
    check_order_cap(order as u64)
}

pub fn semidihedral(order: usize) -> Result<GroupTable> {
    need_two_power(order, 16, "semidihedral")?;
    let e = (order as i64 >> 2) - 1;
    Ok(labelled(maximal_class_2group(order, e, false)?, format!("SD{order}")))
}

pub fn quaternion(order: usize) -> Result<GroupTable> {
    need_two_power(order, 8, "quaternion")?;
    Ok(labelled(maximal_class_2group(order, -1, true)?, format!("Q{order}")))
}

pub fn elementary_abelian(p: u64, rank: u32) -> Result<GroupTable> {
    if !crate::closed_forms::is_prime(p) {
        return Err(Error::InvalidParameters(format!("{p} is not prime")));
    }
    check_order_cap(p.checked_pow(rank).unwrap_or(u64::MAX))?;
    let pc = PcPresentation::new(p, vec![p as u32; rank as usize]);
    Ok(labelled(build_from_pcp(&pc)?, format!("C{p}^{rank}")))
}

pub fn symmetric(degree: usize) -> Result<GroupTable> {
    if degree == 0 {
        return Err(Error::InvalidParameters("degree must be positive".into()));
    }
    if degree > 7 {
        return Err(Error::InvalidParameters(format!("S{degree} exceeds the order cap")));
    }
    let mut gens = Vec::new();
    if degree >= 2 {
        gens.push((0..degree).map(|i| (i + 1) % degree).collect());
        gens.push((0..degree).map(|i| [1, 0].get(i).copied().unwrap_or(i)).collect());
    } else {
        gens.push(vec![0]);
    }
    Ok(labelled(build_from_permutations(&gens)?, format!("S{degree}")))
}

pub fn alternating(degree: usize) -> Result<GroupTable> {
    if !(3..=7).contains(&degree) {
        return Err(Error::InvalidParameters(format!("alternating degree must be in 3..=7, got {degree}")));
    }
    // 3-cycles (0 1 i) generate A_n.
    let gens: Vec<Vec<usize>> = (2..degree)
        .map(|i| {
            let mut p: Vec<usize> = (0..degree).collect();
            p[0] = 1;
            p[1] = i;
            p[i] = 0;
            p
        })
        .collect();
    Ok(labelled(build_from_permutations(&gens)?, format!("A{degree}")))
}

/// Direct product with a combined label.
pub fn product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    let label = format!("{}x{}", g.label(), h.label());
    Ok(labelled(g.direct_product(h)?, label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::conjugacy_data;
    use crate::group::certify;

    #[test]
    fn quaternion_eight() {
        let g = quaternion(8).unwrap();
        assert_eq!(conjugacy_data(&g).class_equation, vec![1, 1, 2, 2, 2]);
        assert_eq!((0..8).filter(|&x| g.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn maximal_class_trio_orders() {
        for order in [16, 32] {
            for g in [dihedral(order).unwrap(), semidihedral(order).unwrap(), quaternion(order).unwrap()] {
                assert_eq!(g.order(), order);
                assert!(certify(&g).all_passed());
                assert_eq!(nilpotency_class(&g), Some(order.trailing_zeros() as usize - 1));
            }
        }
        let involutions = |g: &GroupTable| (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions(&dihedral(16).unwrap()), 9);
        assert_eq!(involutions(&semidihedral(16).unwrap()), 5);
        assert_eq!(involutions(&quaternion(16).unwrap()), 1);
    }

    #[test]
    fn trivial_and_small_named() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(elementary_abelian(3, 2).unwrap().order(), 9);
        assert!(dihedral(7).is_err());
        assert!(semidihedral(8).is_err());
    }

    #[test]
    fn stem_groups_at_two_and_three() {
        for family in Family::ALL {
            for p in [2u64, 3] {
                if !family.admits(p) {
                    assert!(stem_group(family, p).is_err());
                    continue;
                }
                let g = stem_group(family, p).unwrap_or_else(|e| panic!("{family} p={p}: {e}"));
                assert_eq!(g.order() as u64, family.order(p));
            }
        }
    }

    #[test]
    fn order_cap_rejects_seven() {
        assert!(matches!(stem_group(Family::Phi5, 7), Err(Error::InvalidParameters(_))));
        assert!(stem_group(Family::Phi2, 7).is_ok());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("Phi_10".parse::<Family>().unwrap(), Family::Phi10);
    }
}
