mod common;

use common::*;
use composita::bfile::{read_bfile, write_bfile, SequenceFile};
use composita::rational::{self, int};
use composita::spec::Source;
use composita::{
    central_forward, central_inverse_with, composita_of, inverse_composita, inverse_composita_with,
    reciprocal_composita, reciprocal_composita_lemma, reciprocal_composita_series,
    solve_functional_equation, verify_functional_equation, InverseOptions, ReciprocalRoute, Series,
    SeriesSpec,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn mul_commutes(a in series(12), b in series(12)) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn reciprocal_inverts(a in unit_series(12)) {
        prop_assert_eq!(&a * &a.reciprocal().unwrap(), Series::one(12));
    }

    #[test]
    fn derivative_undoes_integral(a in series(10)) {
        prop_assert_eq!(a.integrate0().derivative(), a);
    }

    #[test]
    fn reversion_both_sides(a in revertible_series(10)) {
        let w = a.revert().unwrap();
        prop_assert_eq!(a.compose(&w).unwrap(), Series::x(10));
        prop_assert_eq!(w.compose(&a).unwrap(), Series::x(10));
    }

    #[test]
    fn pow_matches_repeated_product(a in series(12), k in 0usize..=8) {
        prop_assert_eq!(a.pow(k), repeated_product(&a, k));
    }

    #[test]
    fn composita_laws(g in composita_source(10)) {
        let c = composita_of(&g).unwrap();
        let g1 = g.coeff(1);
        for n in 1..=10usize {
            prop_assert_eq!(c.entry(n, 1), g.coeff(n));
            prop_assert_eq!(c.entry(n, n), rational::pow(&g1, n as i64));
            // row recurrence checked against the convolution of g^(k-1) with g
            for k in 2..=n {
                prop_assert_eq!(c.entry(n, k), (&g.pow(k - 1) * &g).coeff(n));
            }
        }
        prop_assert_eq!(c.first_column().shift_up().with_order(10), g);
    }

    #[test]
    fn scaling_law(g in composita_source(9), c in nonzero_rational()) {
        let lhs = composita_of(&g).unwrap().scale(&c).unwrap();
        prop_assert_eq!(lhs, composita_of(&g.scale(&c)).unwrap());
    }

    #[test]
    fn composition_of_compositae(f in composita_source(9), g in composita_source(9)) {
        let lhs = composita_of(&f).unwrap().compose(&composita_of(&g).unwrap()).unwrap();
        let fg = f.compose(&g).unwrap();
        if fg.is_zero() {
            prop_assert!(lhs.rows().iter().flatten().all(|e| *e == int(0)));
        } else {
            prop_assert_eq!(lhs, composita_of(&fg).unwrap());
        }
    }

    #[test]
    fn reciprocal_routes_agree(h in monic_series(9)) {
        let via_series = reciprocal_composita_series(&h).unwrap();
        let via_lemma = reciprocal_composita_lemma(&composita_of(&h.shift_up()).unwrap()).unwrap();
        prop_assert_eq!(via_lemma, via_series);
    }

    #[test]
    fn reciprocal_routes_agree_after_normalizing(h in unit_series(8)) {
        let via_series = reciprocal_composita_series(&h).unwrap();
        let via_lemma = reciprocal_composita(&composita_of(&h.shift_up()).unwrap()).unwrap();
        prop_assert_eq!(via_lemma, via_series);
    }

    #[test]
    fn inverse_composita_is_composita_of_reversion(h in unit_series(10)) {
        let a = h.shift_up(); // order 11
        let expected = composita_of(&a.revert().unwrap().with_order(6)).unwrap();
        let c = composita_of(&a).unwrap();
        prop_assert_eq!(&inverse_composita(&c, 6).unwrap(), &expected);
        prop_assert_eq!(
            &inverse_composita_with(&c, 6, ReciprocalRoute::Lemma).unwrap(),
            &expected
        );
    }

    #[test]
    fn functional_equation_fixed_point(h in unit_series(9)) {
        let a = solve_functional_equation(&h, 10).unwrap();
        let (ok, residual) = verify_functional_equation(&a, &h).unwrap();
        prop_assert!(ok, "residual {}", residual);
    }

    #[test]
    fn central_extraction_consistent(h in unit_series(7)) {
        let r = central_forward(&h, 8).unwrap();
        prop_assert_eq!(r.central_gf.clone(), r.a_series.derivative());
        for m in 0..8 {
            prop_assert_eq!(r.central_gf.coeff(m), r.triangle.entry(2 * m + 1, m + 1));
        }
    }

    #[test]
    fn round_trip_with_any_unit(h in unit_series(6)) {
        let f = central_forward(&h, 7).unwrap().central_gf;
        for route in [ReciprocalRoute::Series, ReciprocalRoute::Lemma] {
            let back = central_inverse_with(&f, 7, InverseOptions { route, check: true }).unwrap();
            prop_assert_eq!(&back.h_series, &h);
            prop_assert_eq!(back.triangle.central_diagonal().len(), 4);
            prop_assert_eq!(back.triangle.first_column(), h.clone());
        }
    }

    #[test]
    fn spec_round_trip(c in prop::collection::vec(small_rational(), 0..8), order in proptest::option::of(0usize..20)) {
        let spec = SeriesSpec { source: Source::Coeffs(c), order };
        prop_assert_eq!(SeriesSpec::parse(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn bfile_round_trip(offset in -3i64..5, values in prop::collection::vec(-10_000i64..10_000, 0..30)) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("seq.b");
        let seq = SequenceFile::new(offset, values.into_iter().map(int).collect());
        write_bfile(&seq, &path).unwrap();
        let back = read_bfile(&path).unwrap();
        if seq.values.is_empty() {
            prop_assert!(back.values.is_empty());
        } else {
            prop_assert_eq!(back, seq);
        }
    }
}

#[test]
fn builtin_specs_round_trip() {
    for text in [
        "builtin:pascal_h",
        "builtin:geometric_h(-2,1/3)",
        "builtin:linquad(1,1) order:4",
        "builtin:xcotx",
    ] {
        let spec = SeriesSpec::parse(text).unwrap();
        assert_eq!(spec.to_string(), text);
    }
}
