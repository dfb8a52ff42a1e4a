mod common;

use common::{cone_span_dimension, positive_roots_by_strings, t};
use hyperbolic_rank::cones::{a_hyperbolic_rank, rank_profile, ReductiveAlgebra};
use hyperbolic_rank::notation::{parse, render};
use hyperbolic_rank::rootsys::{
    iota, longest_element_negation, positive_roots, weyl_enumerable_types, LieType, MAX_WEYL_RANK,
};
use hyperbolic_rank::satake::{database, real_rank, scan_types, RealFormSpec};
use proptest::prelude::*;

#[test]
fn root_counts_match_string_construction() {
    let expected = [
        ("A1", 1),
        ("A5", 15),
        ("B2", 4),
        ("B4", 16),
        ("C3", 9),
        ("C5", 25),
        ("D4", 12),
        ("D6", 30),
        ("G2", 6),
        ("F4", 24),
        ("E6", 36),
        ("E7", 63),
        ("E8", 120),
    ];
    for (name, count) in expected {
        let ty = t(name);
        let by_strings = positive_roots_by_strings(ty);
        let by_reflection: std::collections::BTreeSet<Vec<i32>> =
            positive_roots(ty).unwrap().into_iter().map(|r| r.0).collect();
        assert_eq!(by_strings.len(), count, "{name}");
        assert_eq!(by_strings, by_reflection, "{name}");
    }
}

#[test]
fn g2_has_twelve_roots() {
    assert_eq!(2 * positive_roots_by_strings(t("G2")).len(), 12);
}

#[test]
fn opposition_matches_brute_force_on_every_small_type() {
    for ty in weyl_enumerable_types() {
        assert!(ty.rank() <= MAX_WEYL_RANK);
        assert_eq!(iota(ty), longest_element_negation(ty).unwrap(), "{ty}");
    }
}

fn iota_images(d: &hyperbolic_rank::satake::SatakeDiagram) -> Vec<usize> {
    d.shape().iota().images().to_vec()
}

#[test]
fn class_counts_equal_linear_dimensions() {
    for (spec, d) in database(9, true).unwrap() {
        assert_eq!(real_rank(&d), cone_span_dimension(&d, None), "{spec}");
        assert_eq!(
            a_hyperbolic_rank(&d),
            cone_span_dimension(&d, Some(&iota_images(&d))),
            "{spec}"
        );
    }
}

#[test]
fn scan_covers_each_type_once() {
    let types = scan_types(9);
    let mut seen = std::collections::BTreeSet::new();
    for ty in &types {
        assert!(ty.is_canonical(), "{ty}");
        assert!(seen.insert(ty.to_string()));
    }
}

fn database_specs() -> Vec<RealFormSpec> {
    database(8, true).unwrap().into_iter().map(|(s, _)| s).collect()
}

fn algebra() -> impl Strategy<Value = ReductiveAlgebra> {
    let specs = database_specs();
    (
        prop::collection::vec(prop::sample::select(specs), 0..4),
        0usize..3,
        0usize..3,
    )
        .prop_filter("nonzero", |(f, a, b)| !f.is_empty() || a + b > 0)
        .prop_map(|(mut f, a, b)| {
            f.sort();
            ReductiveAlgebra::new(f, a, b).unwrap()
        })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(alg in algebra()) {
        let text = render(&alg);
        prop_assert_eq!(parse(&text).unwrap(), alg);
    }

    #[test]
    fn profiles_add_over_factors(alg in algebra()) {
        let whole = rank_profile(&alg).unwrap();
        let mut real = alg.split_center_dim;
        let mut ahyp = 0;
        for f in &alg.simple_factors {
            let p = rank_profile(&ReductiveAlgebra::simple(*f)).unwrap();
            real += p.real_rank;
            ahyp += p.a_hyperbolic_rank;
        }
        prop_assert_eq!((whole.real_rank, whole.a_hyperbolic_rank), (real, ahyp));
    }

    #[test]
    fn quotient_decorations_do_not_change_ranks(alg in algebra(), n in 2u32..7) {
        let text = render(&alg);
        let decorated = format!("{{{text}}}/Z_{n}");
        prop_assert_eq!(rank_profile(&parse(&decorated).unwrap()).unwrap(), rank_profile(&alg).unwrap());
    }

    #[test]
    fn iota_is_an_involutive_automorphism(i in 0usize..1000) {
        let types: Vec<LieType> = scan_types(8);
        let ty = types[i % types.len()];
        let p = iota(ty);
        prop_assert!(p.is_involution());
        prop_assert!(p.preserves(&hyperbolic_rank::rootsys::cartan_matrix(ty)));
    }
}
