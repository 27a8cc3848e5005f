use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use simconj::analysis::{center, centralizer, conjugacy_data, lower_central_series, maximal_class_profile};
use simconj::catalog::{catalog, groups_up_to_16};
use simconj::closed_forms::{self as cf, MaximalClassCase};
use simconj::families::{dihedral, quaternion, semidihedral, stem_group, Family};
use simconj::genfun::{a_of_t, alpha_coefficient, b_of_t, rat, Rational, RationalGF};
use simconj::group::{build_from_cayley, build_from_pcp, build_from_permutations, certify, GroupTable, PcPresentation};
use simconj::isoclinism::{are_isoclinic, stem_order};
use simconj::oracle::{alpha_brute, beta_brute, commuting_tuple_codes, DEFAULT_TUPLE_CAP};

fn permutation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<usize>>()).prop_shuffle()
}

fn permutation_group() -> impl Strategy<Value = GroupTable> {
    (1usize..=5)
        .prop_flat_map(|d| prop::collection::vec(permutation(d), 1..=3))
        .prop_map(|gens| build_from_permutations(&gens).unwrap())
}

fn check_group_laws(g: &GroupTable) {
    assert!(certify(g).all_passed());
    let n = g.order();
    for x in 0..n {
        assert_eq!(g.inv(g.inv(x)), x);
        let mut row: Vec<usize> = (0..n).map(|y| g.mul(x, y)).collect();
        let mut col: Vec<usize> = (0..n).map(|y| g.mul(y, x)).collect();
        row.sort_unstable();
        col.sort_unstable();
        assert!(row.iter().copied().eq(0..n) && col.iter().copied().eq(0..n));
    }
}

fn check_class_data(g: &GroupTable) {
    let cd = conjugacy_data(g);
    let z = center(g);
    assert_eq!(cd.class_equation.iter().sum::<usize>(), g.order());
    assert_eq!(cd.class_equation.iter().filter(|&&c| c == 1).count(), z.len());
    for (class, &rep) in cd.classes.iter().zip(&cd.representatives) {
        let c = centralizer(g, rep);
        assert_eq!(class.len() * c.len(), g.order());
        assert!(z.is_subset_of(&c));
        assert_eq!(c.len() == g.order(), z.contains(rep));
    }
    let series = lower_central_series(g);
    for pair in series.windows(2) {
        assert!(pair[1].is_subset_of(&pair[0]));
        assert!(pair[1].is_normal_in(g));
    }
}

fn check_series(g: &GroupTable, horizon: usize) {
    let a = a_of_t(g);
    let b = b_of_t(g).unwrap();
    let (sa, sb) = (a.series(horizon), b.series(horizon));
    let k = Rational::from_integer(BigInt::from(conjugacy_data(g).classes.len()));
    assert_eq!(sa[0], rat(1, 1));
    assert_eq!(sb[0], rat(1, 1));
    assert_eq!(sa[1], k);
    assert_eq!(sb[1], k);
    for (n, (x, y)) in sa.iter().zip(&sb).enumerate() {
        assert!(x >= y, "alpha_{n} < beta_{n}");
        assert!(x.is_integer() && y.is_integer());
        assert_eq!(x.to_integer(), alpha_coefficient(g, n as u32));
    }
    assert_eq!(a.partial_fractions().recombine(), a);
    assert_eq!(b.partial_fractions().recombine(), b);
}

fn rational_gf() -> impl Strategy<Value = RationalGF> {
    let numerator = prop::collection::vec(-20i64..=20, 0..4);
    let poles = prop::collection::vec((1i64..=6, 1u32..=2), 0..4);
    (numerator, poles).prop_map(|(num, poles)| {
        let mut f = RationalGF::polynomial(num.iter().map(|&c| rat(c, 1)).collect());
        for (q, e) in poles {
            f = f.mul(&RationalGF::pole_power(rat(q, 1), e));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn permutation_groups_are_groups(g in permutation_group()) {
        check_group_laws(&g);
        let again = build_from_cayley(&g.cayley_rows()).unwrap();
        prop_assert_eq!(again.cayley_rows(), g.cayley_rows());
    }

    #[test]
    fn permutation_groups_class_data(g in permutation_group()) {
        check_class_data(&g);
        check_series(&g, 6);
    }

    #[test]
    fn small_permutation_groups_match_oracle(g in permutation_group()) {
        prop_assume!(g.order() <= 24);
        let a = a_of_t(&g).series(3);
        let b = b_of_t(&g).unwrap().series(3);
        for n in 0..3u32 {
            let (ab, bb) = (alpha_brute(&g, n).unwrap().count, beta_brute(&g, n).unwrap().count);
            prop_assert_eq!(a[n as usize].clone(), rat(ab as i64, 1));
            prop_assert_eq!(b[n as usize].clone(), rat(bb as i64, 1));
            prop_assert!(bb <= ab);
            if n <= 1 {
                prop_assert_eq!(ab, bb);
            }
        }
    }

    #[test]
    fn abelian_presentations_have_product_order(
        p in prop::sample::select(vec![2u64, 3, 5]),
        words in prop::collection::vec(prop::collection::vec(0u32..5, 4), 1..=4),
    ) {
        let d = words.len();
        let mut pc = PcPresentation::new(p, vec![p as u32; d]);
        for (i, w) in words.iter().enumerate() {
            pc.powers[i] = (0..d).map(|j| if j > i { w[j] % p as u32 } else { 0 }).collect();
        }
        let g = build_from_pcp(&pc).unwrap();
        prop_assert_eq!(g.order() as u128, pc.order());
        prop_assert!(g.is_abelian());
        let expected = RationalGF::geometric(rat(g.order() as i64, 1));
        prop_assert_eq!(a_of_t(&g), expected.clone());
        prop_assert_eq!(b_of_t(&g).unwrap(), expected);
    }

    #[test]
    fn partial_fractions_recombine(f in rational_gf()) {
        prop_assert_eq!(f.partial_fractions().recombine(), f);
    }

    #[test]
    fn series_is_linear(f in rational_gf(), g in rational_gf()) {
        let sum: Vec<Rational> = f.series(8).iter().zip(g.series(8)).map(|(x, y)| x + y).collect();
        prop_assert_eq!(f.add(&g).series(8), sum);
    }

    #[test]
    fn normalization_scales_coefficients(f in rational_gf(), n in 1i64..=30) {
        let scaled: Vec<Rational> = f
            .series(6)
            .iter()
            .enumerate()
            .map(|(k, c)| c / rat(n, 1).pow(k as i32))
            .collect();
        prop_assert_eq!(f.normalize(n as u64).series(6), scaled);
    }

    #[test]
    fn json_round_trip(f in rational_gf()) {
        prop_assert_eq!(RationalGF::from_json(&f.to_json()).unwrap(), f.clone());
        let pf = f.partial_fractions();
        prop_assert_eq!(simconj::genfun::PartialFractions::from_json(&pf.to_json()).unwrap(), pf);
    }
}

#[test]
fn catalog_groups_satisfy_laws_and_identities() {
    for g in catalog().unwrap() {
        check_group_laws(&g);
        check_class_data(&g);
        check_series(&g, 9);
    }
}

#[test]
fn prefix_centralizer_enumeration_matches_filter() {
    for g in catalog().unwrap().iter().filter(|g| g.order() <= 12) {
        let n_el = g.order() as u64;
        for n in 0..=3u32 {
            let filtered: Vec<u64> = (0..n_el.pow(n))
                .filter(|&code| {
                    let digits: Vec<usize> = (0..n).map(|i| (code / n_el.pow(i) % n_el) as usize).collect();
                    digits.iter().all(|&x| digits.iter().all(|&y| g.commutes(x, y)))
                })
                .collect();
            assert_eq!(commuting_tuple_codes(g, n, DEFAULT_TUPLE_CAP).unwrap(), filtered, "{} n={n}", g.label());
        }
    }
}

#[test]
fn isoclinism_is_reflexive_and_symmetric() {
    let gs = groups_up_to_16().unwrap();
    for g in &gs {
        assert!(are_isoclinic(g, g).unwrap().is_some(), "{}", g.label());
    }
    for (i, g) in gs.iter().enumerate() {
        for h in &gs[i + 1..] {
            let gh = are_isoclinic(g, h).unwrap().is_some();
            let hg = are_isoclinic(h, g).unwrap().is_some();
            assert_eq!(gh, hg, "{} {}", g.label(), h.label());
        }
    }
}

#[test]
fn isoclinic_same_order_pairs_share_functions() {
    let gs = catalog().unwrap();
    for (i, g) in gs.iter().enumerate() {
        for h in gs[i + 1..].iter().filter(|h| h.order() == g.order()) {
            if are_isoclinic(g, h).unwrap().is_some() {
                assert_eq!(a_of_t(g), a_of_t(h), "{} {}", g.label(), h.label());
                assert_eq!(b_of_t(g).unwrap(), b_of_t(h).unwrap(), "{} {}", g.label(), h.label());
            }
        }
    }
}

#[test]
fn stem_groups_are_their_own_stem_order() {
    for p in [2u64, 3] {
        for family in Family::ALL.into_iter().filter(|f| f.admits(p) && *f != Family::Abelian) {
            let g = stem_group(family, p).unwrap();
            assert_eq!(stem_order(&g), g.order(), "{family} p={p}");
            assert_eq!(g.order() as u64, p.pow(family.rank()));
        }
        assert_eq!(stem_order(&stem_group(Family::Abelian, p).unwrap()), 1);
    }
}

#[test]
fn maximal_class_profiles_have_expected_series() {
    let cases: Vec<(GroupTable, u64)> = vec![
        (dihedral(16).unwrap(), 2),
        (dihedral(32).unwrap(), 2),
        (semidihedral(32).unwrap(), 2),
        (quaternion(32).unwrap(), 2),
        (stem_group(Family::Phi3, 3).unwrap(), 3),
        (stem_group(Family::Phi9, 3).unwrap(), 3),
        (stem_group(Family::Phi10, 3).unwrap(), 3),
    ];
    for (g, p) in cases {
        let prof = maximal_class_profile(&g, p).unwrap();
        assert!(prof.is_maximal_class, "{}", g.label());
        assert_eq!(center(&g).len() as u64, p);
        for (i, sub) in prof.p_series.iter().enumerate() {
            assert_eq!(sub.len() as u64, p.pow(prof.m - i as u32), "{} P_{i}", g.label());
        }
    }
}

#[test]
fn maximal_class_trios_share_functions() {
    for n in 4..=6u32 {
        let order = 1usize << n;
        let trio = [dihedral(order).unwrap(), semidihedral(order).unwrap(), quaternion(order).unwrap()];
        for g in &trio[1..] {
            assert_eq!(a_of_t(g), a_of_t(&trio[0]));
            assert_eq!(b_of_t(g).unwrap(), b_of_t(&trio[0]).unwrap());
        }
    }
}

#[test]
fn closed_forms_have_integer_series() {
    let mut forms: Vec<RationalGF> = Vec::new();
    for p in [2u64, 3, 5, 7] {
        for m in 3..=6 {
            forms.push(cf::a_central_quotient_p2(p, m).unwrap());
            forms.push(cf::b_central_quotient_p2(p, m).unwrap());
        }
        for m in 5..=6 {
            for abelian_max in [true, false] {
                forms.push(cf::a_central_quotient_p3(p, m, abelian_max).unwrap());
                forms.push(cf::b_central_quotient_p3(p, m, abelian_max).unwrap());
            }
            for case in [MaximalClassCase::AbelianMax, MaximalClassCase::P1P3NoAbelianMax] {
                forms.push(cf::a_maximal_class(p, m, case).unwrap());
                forms.push(cf::b_maximal_class(p, m, case).unwrap());
            }
        }
        forms.push(cf::a_extraspecial_p5(p).unwrap());
        forms.push(cf::b_extraspecial_p5(p).unwrap());
        forms.push(cf::a_phi7_family(p).unwrap());
        forms.push(cf::b_phi7_family(p).unwrap());
    }
    for n in [4u64, 6, 8, 10, 16] {
        forms.push(cf::a_dihedral(n).unwrap());
        forms.push(cf::b_dihedral(n).unwrap());
    }
    for f in &forms {
        let s = f.series(9);
        assert_eq!(s[0], rat(1, 1), "{f}");
        assert!(s.iter().all(|c| c.is_integer() && !(c < &Rational::zero())), "{f}");
    }
}
