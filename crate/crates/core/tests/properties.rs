mod common;

use basefano::blowup::{blowup_degree, cone_case_normal_bundle, BlowupStep};
use basefano::classify::{enumerate_cases, CaseLabel};
use basefano::cover::{analyze_um, branch_for_taut_anticanonical};
use basefano::k3::{fano_degree, PencilClass};
use basefano::scroll::{DivisorClass, Scroll, ScrollError};
use basefano::surface::{from_scroll, SurfaceClass};
use basefano::wps::{infer_ring, WeightedCI};
use proptest::prelude::*;

fn class() -> impl Strategy<Value = DivisorClass> {
    (-4i64..=4, -12i64..=12).prop_map(|(h, f)| DivisorClass::new(h, f))
}

fn twists(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=10, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn h0_matches_box_count(d in twists(2..=3), h in 0i64..=4, f in -20i64..=20) {
        let s = Scroll::new(d.clone()).unwrap();
        prop_assert_eq!(s.h0(DivisorClass::new(h, f)) as i64, common::h0_box(&d, h, f));
    }

    #[test]
    fn intersect_matches_chow_ring(d in twists(2..=4), seed in prop::collection::vec(class(), 4)) {
        let s = Scroll::new(d).unwrap();
        let cls = &seed[..s.rank()];
        let pairs: Vec<(i64, i64)> = cls.iter().map(|c| (c.h, c.f)).collect();
        prop_assert_eq!(s.intersect(cls).unwrap(), common::intersect_chow(s.twists(), &pairs));
    }

    #[test]
    fn intersect_is_multilinear(d in twists(3..=3), a in class(), b in class(), c in class(), x in class()) {
        let s = Scroll::new(d).unwrap();
        let lhs = s.intersect(&[a + x, b, c]).unwrap();
        prop_assert_eq!(lhs, s.intersect(&[a, b, c]).unwrap() + s.intersect(&[x, b, c]).unwrap());
    }

    #[test]
    fn tautological_power_is_degree(d in twists(2..=4)) {
        let s = Scroll::new(d).unwrap();
        prop_assert_eq!(s.intersect(&vec![DivisorClass::TAUTOLOGICAL; s.rank()]).unwrap(), s.delta());
    }

    #[test]
    fn support_bounds_h0(d in twists(2..=3), h in 0i64..=4, f in -20i64..=20) {
        let s = Scroll::new(d).unwrap();
        let c = DivisorClass::new(h, f);
        let support = s.monomial_support(c).unwrap();
        prop_assert!(s.h0(c) >= support.len() as u64);
        let tight = support.iter().all(|e| e.weight(s.twists()) + f == 0);
        prop_assert_eq!(s.h0(c) == support.len() as u64, tight);
    }

    #[test]
    fn fixed_multiplicity_is_where_h0_drops(
        d in twists(2..=3),
        h in 1i64..=4,
        f in -12i64..=12,
        pick in 0usize..3,
    ) {
        let s = Scroll::new(d).unwrap();
        let sys = DivisorClass::new(h, f);
        // O(1) - d_i F is rigid exactly when d_i is the unique largest twist
        let di = s.twists()[pick % s.rank()];
        let comp = DivisorClass::new(1, -di);
        match s.fixed_component_multiplicity(comp, sys) {
            Ok(mu) => {
                let base = s.h0(sys);
                let mu = i64::from(mu);
                prop_assert_eq!(s.h0(sys - mu * comp), base);
                prop_assert!(s.h0(sys - (mu + 1) * comp) < base);
            }
            Err(ScrollError::NotRigid { .. }) => prop_assert_ne!(s.h0(comp), 1),
            Err(ScrollError::EmptySystem(_)) => prop_assert_eq!(s.h0(sys), 0),
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }

    #[test]
    fn from_scroll_is_additive_and_invertible(d1 in -8i64..=8, gap in 0i64..=8, a in class(), b in class()) {
        let s = Scroll::new(vec![d1, d1 - gap]).unwrap();
        let (sa, sb) = (from_scroll(&s, a).unwrap(), from_scroll(&s, b).unwrap());
        let sum = from_scroll(&s, a + b).unwrap();
        prop_assert_eq!((sum.xi, sum.fib), (sa.xi + sb.xi, sa.fib + sb.fib));
        prop_assert_eq!(sa.in_scroll(&s).unwrap(), a);
    }

    #[test]
    fn surface_dot_matches_scroll_with_fiber(d1 in -8i64..=8, gap in 0i64..=8, a in class(), b in class()) {
        let s = Scroll::new(vec![d1, d1 - gap]).unwrap();
        let (sa, sb) = (from_scroll(&s, a).unwrap(), from_scroll(&s, b).unwrap());
        prop_assert_eq!(sa.dot(&sb).unwrap(), s.intersect(&[a, b]).unwrap());
        let e = gap;
        prop_assert_eq!(sa.dot(&sb).unwrap(), -e * sa.xi * sb.xi + sa.xi * sb.fib + sb.xi * sa.fib);
    }

    #[test]
    fn decomposition_is_idempotent(e in 0u32..=6, xi in 0i64..=6, fib in 0i64..=30) {
        let c = SurfaceClass::new(e, xi, fib);
        if let Ok((_, rest)) = c.forced_minimal_decomposition() {
            prop_assert!(rest.dot(&SurfaceClass::minimal_section(e)).unwrap() >= 0);
            let (mu, again) = rest.forced_minimal_decomposition().unwrap();
            prop_assert_eq!((mu, again), (0, rest));
        }
    }

    #[test]
    fn sections_are_rational(e in 0u32..=8, t in 0i64..=40) {
        prop_assert_eq!(SurfaceClass::new(e, 1, t).genus().unwrap(), 0);
    }

    #[test]
    fn k3_lattice_is_even(g in -50i64..=50, l in -50i64..=50) {
        prop_assert_eq!(PencilClass::new(g, l).square().rem_euclid(2), 0);
    }

    #[test]
    fn adjunction_closes(d in twists(3..=3)) {
        let s = Scroll::new(d).unwrap();
        let spec = branch_for_taut_anticanonical(&s).unwrap();
        prop_assert_eq!(s.canonical_class() + spec.half + DivisorClass::TAUTOLOGICAL, DivisorClass::ZERO);
        if s.delta() >= 1 {
            prop_assert_eq!(spec.cover_degree(), 2 * s.delta());
        }
    }

    #[test]
    fn infer_recovers_distinct_degrees(
        gens in prop::collection::btree_set(1u32..=7, 2..=5),
        with_relation in any::<bool>(),
        pick in 0usize..5,
        power in 2u32..=3,
    ) {
        let gens: Vec<u32> = gens.into_iter().collect();
        // a power of a generator is always a possible relation degree
        let r = gens[pick % gens.len()] * power;
        let rels: Vec<u32> = if with_relation && !gens.contains(&r) { vec![r] } else { vec![] };
        let ci = WeightedCI::new(gens.clone(), rels.clone()).unwrap();
        let model = infer_ring(&ci.hilbert_coeffs(30)).unwrap();
        prop_assert_eq!(model.generators, gens);
        prop_assert_eq!(model.relations, rels);
    }

    #[test]
    fn series_matches_division_oracle(
        w in prop::collection::vec(1u32..=6, 1..=6),
        e in prop::collection::vec(2u32..=9, 0..=2),
    ) {
        prop_assume!(e.len() < w.len());
        let ci = WeightedCI::new(w.clone(), e.clone()).unwrap();
        prop_assert_eq!(ci.hilbert_coeffs(30).0, common::series_by_division(&w, &e, 31));
    }

    #[test]
    fn blowup_is_monotone(amb in -40i64..=40, d in -20i64..=20, g in 0u32..=10) {
        let at = |d, g| blowup_degree(BlowupStep { ambient_degree: amb, curve_degree: d, genus: g });
        prop_assert!(at(d + 1, g) < at(d, g));
        prop_assert!(at(d, g + 1) > at(d, g));
    }
}

#[test]
fn elephant_identities() {
    for m in 2..=100 {
        assert_eq!(fano_degree(m), Ok(PencilClass::elephant(m).square()));
        assert_eq!(PencilClass::elephant(m).dot(&PencilClass::SECTION), m - 2);
    }
}

#[test]
fn fibre_multiplicity_threshold() {
    for m in 3..=30 {
        let s = Scroll::new(vec![m, m - 4, 0]).unwrap();
        let zero = s.twists().iter().position(|&t| t == 0).unwrap() + 1;
        let mult = s
            .fiber_multiplicity_at(DivisorClass::new(4, -(4 * m - 12)), zero)
            .unwrap();
        assert_eq!(
            mult <= basefano::scroll::Multiplicity::Finite(3),
            m <= 12,
            "m = {m}"
        );
    }
}

#[test]
fn b_is_reduced_once_forced() {
    for m in 4..=30 {
        assert_eq!(analyze_um(m).unwrap().b_mult, 1, "m = {m}");
    }
    assert_eq!(analyze_um(3).unwrap().b_mult, 0);
}

#[test]
fn restriction_chain() {
    for m in 4..=30 {
        let r = analyze_um(m).unwrap();
        let (sub, c) = r.base.restrict_to_subscroll(&[1, 2], r.branch).unwrap();
        let d = from_scroll(&sub, c).unwrap();
        assert_eq!((d.e, d.xi, d.fib), (4, 4, 12), "m = {m}");
    }
}

#[test]
fn cases_are_consistent() {
    for case in enumerate_cases() {
        assert_eq!(Ok(case.degree), fano_degree(case.m));
        if let CaseLabel::IIc(m) = case.label {
            let nb = cone_case_normal_bundle(m).unwrap();
            assert_eq!(case.nb, Some(nb));
            assert_eq!(nb.exceptional_surface_index(), m);
        }
    }
}
