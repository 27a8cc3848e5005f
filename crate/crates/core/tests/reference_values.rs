//! Published values and independently derived values for named groups.
//! Derived values are recomputed here by direct enumeration over the
//! multiplication table rather than through the library's class machinery.

use std::collections::BTreeMap;

use simconj::analysis::{
    center, conjugacy_data, derived_subgroup, is_ac_group, lower_central_series, maximal_class_profile,
};
use simconj::closed_forms::{self as cf, table_row};
use simconj::families::{
    cyclic, dihedral, elementary_abelian, quaternion, semidihedral, stem_group, symmetric, Family,
};
use simconj::genfun::{
    a_equivalent, a_of_t, alpha_coefficient, b_equivalent, b_of_t, beta_coefficient, rat, Rational, RationalGF,
};
use simconj::group::{build_from_cayley, build_from_pcp, build_from_permutations, certify, CheckOutcome, GroupTable, PcPresentation};
use simconj::isoclinism::{are_isoclinic, stem_order};
use simconj::Error;

fn geo(q: Rational) -> RationalGF {
    RationalGF::geometric(q)
}

fn geo_i(q: i64) -> RationalGF {
    geo(rat(q, 1))
}

fn t_times(c: i64, f: RationalGF) -> RationalGF {
    RationalGF::t().scale(&rat(c, 1)).mul(&f)
}

/// `(1/n) Σ c_i/(1 - m_i t)`.
fn weighted(n: i64, terms: &[(i64, i64)]) -> RationalGF {
    let parts: Vec<RationalGF> = terms.iter().map(|&(c, m)| geo_i(m).scale(&rat(c, 1))).collect();
    RationalGF::sum(parts.iter()).scale(&rat(1, n))
}

/// `Σ c_i/(1 - q_i t)` with rational `c_i`, `q_i`.
fn terms(ts: &[(Rational, Rational)]) -> RationalGF {
    let parts: Vec<RationalGF> = ts.iter().map(|(c, q)| geo(q.clone()).scale(c)).collect();
    RationalGF::sum(parts.iter())
}

/// `p^k` as a rational, `k` possibly negative.
fn pw(p: i64, k: i32) -> Rational {
    rat(p, 1).pow(k)
}

fn brute_histogram(g: &GroupTable) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for x in 0..g.order() {
        let z = (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
        *h.entry(z).or_insert(0) += 1;
    }
    h
}

fn brute_is_ac(g: &GroupTable) -> bool {
    (0..g.order()).all(|x| {
        let c: Vec<usize> = (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)).collect();
        c.len() == g.order() || c.iter().all(|&a| c.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    })
}

#[test]
fn permutation_builds() {
    let s3 = build_from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
    assert_eq!(s3.order(), 6);
    assert_eq!(build_from_permutations(&[vec![0, 1, 2]]).unwrap().order(), 1);
    let rot: Vec<usize> = (0..8).map(|i| (i + 1) % 8).collect();
    let refl: Vec<usize> = (0..8).map(|i| (8 - i) % 8).collect();
    let d16 = build_from_permutations(&[rot, refl]).unwrap();
    assert_eq!(d16.order(), 16);
    assert_eq!(brute_histogram(&d16), BTreeMap::from([(16, 2), (8, 6), (4, 8)]));
    assert!(matches!(
        build_from_permutations(&[vec![0, 0, 1]]),
        Err(Error::InvalidPermutation { .. })
    ));
}

#[test]
fn presentation_builds() {
    let c8 = build_from_pcp(&PcPresentation::new(2, vec![8])).unwrap();
    assert_eq!(c8.order(), 8);
    assert_eq!(c8.element_order(1), 8);

    let phi5 = stem_group(Family::Phi5, 3).unwrap();
    assert_eq!(phi5.order(), 243);
    let z = center(&phi5);
    assert_eq!(z.len(), 3);
    let (quotient, _) = phi5.quotient(&z).unwrap();
    assert_eq!(quotient.order(), 81);
    assert!(quotient.is_abelian() && quotient.exponent() == 3);
    assert_eq!(derived_subgroup(&phi5).elements(), z.elements());

    let phi8 = stem_group(Family::Phi8, 3).unwrap();
    assert_eq!(phi8.order(), 243);
    assert_eq!(center(&phi8).len(), 3);
}

#[test]
fn cayley_builds() {
    assert_eq!(build_from_cayley(&[vec![0]]).unwrap().order(), 1);
    let klein = build_from_cayley(&[vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]]).unwrap();
    assert!((0..4).all(|x| klein.inv(x) == x));
    // A Latin square with identity and inverses that is not associative.
    let bad = vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 0, 3, 2, 5, 4],
        vec![2, 4, 0, 5, 1, 3],
        vec![3, 5, 1, 0, 2, 4],
        vec![4, 2, 5, 1, 3, 0],
        vec![5, 3, 4, 2, 0, 1],
    ];
    match build_from_cayley(&bad) {
        Err(Error::NotAGroup { axiom, witness }) => {
            assert_eq!(axiom, "associativity");
            let (x, y, z) = (witness[0], witness[1], witness[2]);
            assert_ne!(bad[bad[x][y]][z], bad[x][bad[y][z]]);
        }
        other => panic!("expected an associativity failure, got {other:?}"),
    }
}

#[test]
fn certificates() {
    assert!(certify(&symmetric(3).unwrap()).all_passed());
    // 243 is within the exhaustive limit of 256, so the full check runs.
    let report = certify(&stem_group(Family::Phi5, 3).unwrap());
    assert_eq!(report.outcome("associativity_generators"), Some(&CheckOutcome::Passed));
    assert_eq!(report.outcome("associativity_full"), Some(&CheckOutcome::Passed));
    let big = certify(&stem_group(Family::Phi5, 5).unwrap());
    assert!(matches!(big.outcome("associativity_full"), Some(CheckOutcome::Skipped { .. })));
    assert!(big.all_passed());
}

#[test]
fn class_data_of_small_groups() {
    let s3 = symmetric(3).unwrap();
    let cd = conjugacy_data(&s3);
    assert_eq!(cd.classes.len(), 3);
    assert_eq!(cd.class_equation, vec![1, 2, 3]);
    assert_eq!(cd.z_histogram, brute_histogram(&s3));
    assert_eq!(cd.z_histogram, BTreeMap::from([(6, 1), (3, 2), (2, 3)]));
    let c6 = cyclic(6).unwrap();
    assert_eq!(conjugacy_data(&c6).z_histogram, BTreeMap::from([(6, 6)]));
    let d16 = dihedral(16).unwrap();
    assert_eq!(conjugacy_data(&d16).z_histogram, BTreeMap::from([(16, 2), (8, 6), (4, 8)]));
}

#[test]
fn series_of_stem_groups() {
    let abelian = elementary_abelian(3, 2).unwrap();
    let series = lower_central_series(&abelian);
    assert_eq!(series.iter().map(|s| s.len()).collect::<Vec<_>>(), vec![9, 1]);

    let phi10 = stem_group(Family::Phi10, 5).unwrap();
    let sizes: Vec<usize> = lower_central_series(&phi10).iter().map(|s| s.len()).collect();
    assert_eq!(sizes, vec![3125, 125, 25, 5, 1]);
}

#[test]
fn ac_groups() {
    for g in [cyclic(12).unwrap(), dihedral(16).unwrap(), stem_group(Family::Phi9, 3).unwrap()] {
        assert_eq!(is_ac_group(&g), brute_is_ac(&g), "{}", g.label());
    }
    assert!(is_ac_group(&cyclic(5).unwrap()));
    assert!(is_ac_group(&dihedral(16).unwrap()));
}

#[test]
fn maximal_class_profiles() {
    let d32 = maximal_class_profile(&dihedral(32).unwrap(), 2).unwrap();
    assert!(d32.is_maximal_class && d32.has_abelian_maximal_subgroup);
    let phi5 = maximal_class_profile(&stem_group(Family::Phi5, 3).unwrap(), 3).unwrap();
    assert!(!phi5.is_maximal_class);
    assert_eq!(phi5.nilpotency_class, 2);
    let phi10 = maximal_class_profile(&stem_group(Family::Phi10, 5).unwrap(), 5).unwrap();
    assert!(phi10.is_maximal_class);
    assert!(phi10.p1_p3_commute);
    assert!(!phi10.has_abelian_maximal_subgroup);
}

#[test]
fn a_functions() {
    assert_eq!(a_of_t(&cyclic(1).unwrap()), geo_i(1));
    let d16 = dihedral(16).unwrap();
    assert_eq!(a_of_t(&d16), weighted(16, &[(2, 16), (8, 4), (6, 8)]));
    let s3 = symmetric(3).unwrap();
    assert_eq!(a_of_t(&s3), weighted(6, &[(1, 6), (2, 3), (3, 2)]));
    assert_eq!(a_of_t(&s3).series(3), vec![rat(1, 1), rat(3, 1), rat(11, 1)]);
    assert_eq!(alpha_coefficient(&s3, 1), 3.into());
    assert_eq!(alpha_coefficient(&s3, 2), 11.into());
    // (2·16² + 6·8² + 8·4²) / 16.
    assert_eq!(alpha_coefficient(&d16, 2), ((2 * 256 + 6 * 64 + 8 * 16) / 16).into());
}

#[test]
fn b_functions() {
    assert_eq!(b_of_t(&cyclic(9).unwrap()).unwrap(), geo_i(9));
    let d16 = dihedral(16).unwrap();
    let expected = geo_i(2).mul(&RationalGF::one().add(&t_times(3, geo_i(8))).add(&t_times(2, geo_i(4))));
    assert_eq!(b_of_t(&d16).unwrap(), expected);
    let s3 = symmetric(3).unwrap();
    let expected = geo_i(1).mul(&RationalGF::one().add(&t_times(1, geo_i(2))).add(&t_times(1, geo_i(3))));
    assert_eq!(b_of_t(&s3).unwrap(), expected);
    assert_eq!(beta_coefficient(&s3, 0).unwrap(), 1.into());
    assert_eq!(beta_coefficient(&s3, 2).unwrap(), 8.into());
    // Coefficient 2 of (1 - t)/((1 - 2t)(1 - 4t)) is 4 + 8 + 16 - (2 + 4) = 22.
    assert_eq!(beta_coefficient(&quaternion(8).unwrap(), 2).unwrap(), 22.into());
}

#[test]
fn normalization_and_partial_fractions() {
    assert_eq!(geo_i(7).normalize(7), geo_i(1));
    let p = 2;
    let row = terms(&[
        (rat(1, 1) - pw(p, -1), pw(p, -2)),
        (pw(p, -1) - pw(p, -3), pw(p, -1)),
        (pw(p, -3), rat(1, 1)),
    ]);
    assert_eq!(a_of_t(&dihedral(16).unwrap()).normalize(16), row);

    let f = RationalGF::linear(rat(1, 1)).mul(&geo_i(2)).mul(&geo_i(4));
    let pf = f.partial_fractions();
    assert_eq!(pf.terms.len(), 2);
    assert_eq!((pf.terms[0].coefficient.clone(), pf.terms[0].pole.clone()), (rat(-1, 2), rat(2, 1)));
    assert_eq!((pf.terms[1].coefficient.clone(), pf.terms[1].pole.clone()), (rat(3, 2), rat(4, 1)));
    assert_eq!(pf.recombine(), f);
    let single = geo_i(1).partial_fractions();
    assert_eq!(single.terms.len(), 1);
    let t = &single.terms[0];
    assert_eq!((t.coefficient.clone(), t.pole.clone(), t.exponent), (rat(1, 1), rat(1, 1), 1));

    let three = a_of_t(&dihedral(16).unwrap()).partial_fractions();
    assert_eq!(three.terms.len(), 3);
    assert_eq!(three.recombine(), weighted(16, &[(2, 16), (8, 4), (6, 8)]));
}

#[test]
fn equivalences() {
    let (d8, q8) = (dihedral(8).unwrap(), quaternion(8).unwrap());
    assert!(a_equivalent(&d8, &q8));
    assert!(b_equivalent(&d8, &q8).unwrap());
    assert!(!a_equivalent(&cyclic(6).unwrap(), &symmetric(3).unwrap()));
    assert!(!b_equivalent(&cyclic(6).unwrap(), &symmetric(3).unwrap()).unwrap());
}

#[test]
fn central_quotient_of_order_p_squared() {
    let a = cf::a_central_quotient_p2(2, 3).unwrap();
    assert_eq!(a, weighted(8, &[(2, 8), (6, 4)]));
    assert_eq!(a, a_of_t(&quaternion(8).unwrap()));
    assert_eq!(a, a_of_t(&dihedral(8).unwrap()));
    let b = cf::b_central_quotient_p2(2, 3).unwrap();
    assert_eq!(b, RationalGF::linear(rat(1, 1)).mul(&geo_i(2)).mul(&geo_i(4)));
    assert_eq!(b, b_of_t(&quaternion(8).unwrap()).unwrap());
    let heis = simconj::catalog::lookup("Heis27").unwrap();
    let b3 = cf::b_central_quotient_p2(3, 3).unwrap();
    assert_eq!(b3.series(2)[1], rat(11, 1));
    assert_eq!(conjugacy_data(&heis).classes.len(), 11);
    assert_eq!(b3, b_of_t(&heis).unwrap());
}

#[test]
fn dihedral_lemma_displays() {
    assert_eq!(cf::a_dihedral(8).unwrap(), weighted(16, &[(2, 16), (8, 4), (6, 8)]));
    let d32_b = RationalGF::polynomial(vec![rat(2, 1), rat(-22, 1), rat(8, 1)])
        .scale(&rat(1, 2))
        .mul(&geo_i(2))
        .mul(&geo_i(16))
        .mul(&geo_i(4));
    assert_eq!(cf::b_dihedral(16).unwrap(), d32_b);
    assert_eq!(b_of_t(&dihedral(32).unwrap()).unwrap(), d32_b);
    assert_eq!(
        a_of_t(&dihedral(32).unwrap()),
        weighted(32, &[(2, 32), (16, 4), (14, 16)])
    );
    assert_eq!(cf::a_dihedral(4).unwrap(), cf::a_central_quotient_p2(2, 3).unwrap());
}

#[test]
fn rank_five_two_group_displays() {
    let g4 = stem_group(Family::Gamma4, 2).unwrap();
    assert_eq!(a_of_t(&g4), weighted(32, &[(4, 32), (12, 16), (16, 8)]));
    let b = geo_i(4).mul(&RationalGF::one().add(&t_times(6, geo_i(16))).add(&t_times(4, geo_i(8))));
    assert_eq!(b_of_t(&g4).unwrap(), b);

    for family in [Family::Gamma6, Family::Gamma7] {
        let g = stem_group(family, 2).unwrap();
        assert_eq!(a_of_t(&g), weighted(32, &[(2, 32), (6, 16), (24, 8)]), "{family}");
    }
}

#[test]
fn extraspecial_displays() {
    let g5 = stem_group(Family::Gamma5, 2).unwrap();
    let a = weighted(32, &[(2, 32), (30, 16)]);
    assert_eq!(cf::a_extraspecial_p5(2).unwrap(), a);
    assert_eq!(a_of_t(&g5), a);
    assert_eq!(cf::a_extraspecial_p5(3).unwrap(), a_of_t(&stem_group(Family::Phi5, 3).unwrap()));

    // The printed B display is transcribed faithfully but does not match the
    // group: its t^2 coefficient is 274 while the group has 184 commuting-pair
    // orbits. The corrected form agrees with the computation and the table row.
    let printed = RationalGF::linear(rat(1, 1)).mul(&geo_i(2)).mul(&geo_i(16));
    assert_eq!(cf::b_extraspecial_p5_as_printed(2).unwrap(), printed);
    let b = b_of_t(&g5).unwrap();
    assert_ne!(b, printed);
    assert_eq!(printed.series(3)[2], rat(274, 1));
    assert_eq!(b.series(3)[2], rat(184, 1));
    assert_eq!(simconj::oracle::beta_brute(&g5, 2).unwrap().count, 184);
    assert_eq!(cf::b_extraspecial_p5(2).unwrap(), b);
}

#[test]
fn table_rows_as_printed() {
    for p in [3i64, 5] {
        let (a2, _) = table_row(Family::Phi2, p as u64).unwrap();
        assert_eq!(a2, terms(&[(rat(1, 1) - pw(p, -2), pw(p, -1)), (pw(p, -2), rat(1, 1))]));
        let (_, b5) = table_row(Family::Phi5, p as u64).unwrap();
        let c = pw(p, 1) + rat(1, 1) + pw(p, -1) + pw(p, -2);
        assert_eq!(b5, terms(&[(rat(1, 1), pw(p, -4)), (-c.clone(), pw(p, -3)), (c, pw(p, -2))]));
    }
    for p in [2u64, 3, 5, 7] {
        let (a, b) = table_row(Family::Abelian, p).unwrap();
        assert_eq!(a, geo_i(1));
        assert_eq!(b, geo_i(1));
    }
}

#[test]
fn family_constructions() {
    let g5 = stem_group(Family::Gamma5, 2).unwrap();
    let z = center(&g5);
    assert_eq!((g5.order(), z.len()), (32, 2));
    let (q, _) = g5.quotient(&z).unwrap();
    assert!(q.is_abelian() && q.exponent() == 2 && q.order() == 16);

    let phi2 = stem_group(Family::Phi2, 3).unwrap();
    assert!(!phi2.is_abelian());
    assert_eq!(phi2.order() / center(&phi2).len(), 9);

    assert_eq!(conjugacy_data(&quaternion(8).unwrap()).class_equation, vec![1, 1, 2, 2, 2]);
    assert!(are_isoclinic(&semidihedral(16).unwrap(), &dihedral(16).unwrap()).unwrap().is_some());
    assert_eq!(cyclic(1).unwrap().order(), 1);
    assert_eq!(stem_order(&stem_group(Family::Phi5, 3).unwrap()), 243);
    assert!(stem_group(Family::Phi5, 7).is_err());
}
