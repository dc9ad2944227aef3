use hilbfix_commalg::cases::case_for_multipartition;
use hilbfix_commalg::expected::{expected_freeness, separated_cases, separated_expected, table_cases};
use hilbfix_commalg::graded::{graded_piece, initial_form_ideal, torsion_free_quotient};
use hilbfix_commalg::{build_theta_ideal, equivariant_mult_hilb2, equivariant_mult_with, CaseSpec, Chart, Hilb2Options, LocalPoint};
use hilbfix_core::exactalg::{quantum_int, rat, LaurentPoly};
use hilbfix_core::hilb::noneq_mult;
use hilbfix_core::partitions::enumerate_multipartitions;
use hilbfix_core::surfaces::{catalog, surface, SurfaceId};

fn light(spec: &CaseSpec) -> bool {
    // The two heaviest inputs are left to the acceptance suite.
    !matches!(spec, CaseSpec::Punctual { chart: Chart::U2, point, .. } if point.a >= 3)
}

#[test]
fn punctual_table_rows() {
    for case in table_cases().iter().filter(|c| light(&c.spec)) {
        let got = equivariant_mult_hilb2(&case.spec).unwrap();
        assert_eq!(got, case.expected, "{}", case.spec);
    }
}

#[test]
fn separated_pairs_match_closed_forms() {
    for (label, spec, expected) in separated_cases() {
        assert_eq!(equivariant_mult_hilb2(&spec).unwrap(), expected, "{label}");
    }
}

#[test]
fn two_wobbly_points_give_a_negative_coefficient() {
    let p = LocalPoint::new(1, 2, 1, 2);
    let m = equivariant_mult_hilb2(&CaseSpec::Separated { p, q: p, e: 3 }).unwrap();
    let lead = LaurentPoly::from_terms([(0, 1), (3, -1), (4, 2)]);
    assert_eq!(m, &lead * &quantum_int(2, 2).unwrap().pow(2));
    assert_eq!(m, separated_expected(&p, &p, 3));
    assert_eq!(m.at_one(), rat(8));
    assert!(!m.has_nonnegative_coeffs());
}

#[test]
fn rank_matches_non_equivariant_multiplicity() {
    for s in catalog().iter().filter(|s| s.is_parabolic()) {
        for n in 1..=2 {
            for mp in enumerate_multipartitions(s, n).unwrap() {
                let Some(spec) = case_for_multipartition(s, &mp) else { continue };
                if !light(&spec) {
                    continue;
                }
                let r = equivariant_mult_with(&spec, Hilb2Options::default()).unwrap();
                let noneq = noneq_mult(s, &mp).unwrap();
                assert_eq!(r.rank_at_one, noneq.into(), "{} {}", s.id.key(), mp.describe(s));
                assert!(r.specializes_correctly());
            }
        }
    }
}

#[test]
fn single_points_reproduce_surface_multiplicities() {
    for s in catalog() {
        // Painlevé bottom points carry no local equation.
        for p in s.isolated_points().filter(|p| p.local_eq.is_some()) {
            let spec = CaseSpec::single(s, p.id).unwrap();
            assert_eq!(equivariant_mult_hilb2(&spec).unwrap(), s.mult_poly(p.id).unwrap(), "{}", p.label);
        }
    }
}

#[test]
fn stated_freeness() {
    for case in table_cases().iter().filter(|c| light(&c.spec)) {
        let CaseSpec::Punctual { chart, point, .. } = &case.spec else { unreachable!() };
        if let Some(free) = expected_freeness(point, *chart) {
            let r = equivariant_mult_with(&case.spec, Hilb2Options::default()).unwrap();
            assert_eq!(r.all_free, free, "{}", case.spec);
            assert_eq!(r.palindromic, free, "{}", case.spec);
        }
    }
}

#[test]
fn oracle_on_small_cases() {
    for spec in [
        "u1:1,2,1,2:3",
        "u2:1,2,1,2:3",
        "u2:0,2,1,2:4",
        "separated:1,2,1,2:1,2,1,2:3",
        "separated:0,1,2,3:1,2,1,2:3",
    ] {
        let spec: CaseSpec = spec.parse().unwrap();
        let r = equivariant_mult_with(&spec, Hilb2Options { oracle_truncation: Some(8) }).unwrap();
        assert!(r.oracle_checked, "{spec}: {:?}", r.oracle);
    }
}

#[test]
fn initial_forms_of_the_xy2_chart() {
    let spec = CaseSpec::Punctual { chart: Chart::U1, point: LocalPoint::new(1, 2, 1, 2), e: 3 };
    let th = build_theta_ideal(&spec).unwrap();
    let forms = initial_form_ideal(&th);
    let ys = th.y_vars();
    // The lowest form of f is s*w0; a further generator appears in y-degree 4.
    assert_eq!(forms[0].format_with(&th.names), "w0*s");
    assert!(forms.iter().any(|p| p.degree_in(&ys) == Some(4)));
    // Torsion-free pieces: 1, t, t^2, t^3 and nothing from degree 4 on.
    for d in 0..4 {
        let tf = torsion_free_quotient(&graded_piece(&th, &forms, d)).unwrap();
        assert_eq!(tf.rank(), 1, "degree {d}");
    }
    assert_eq!(torsion_free_quotient(&graded_piece(&th, &forms, 4)).unwrap().rank(), 0);
}

#[test]
fn homogeneous_generators_are_their_own_initial_forms() {
    let spec = CaseSpec::Separated { p: LocalPoint::new(0, 1, 1, 2), q: LocalPoint::new(0, 1, 1, 2), e: 2 };
    let th = build_theta_ideal(&spec).unwrap();
    let forms = initial_form_ideal(&th);
    assert_eq!(forms.len(), 2);
    assert!(forms.iter().all(|p| p.degree_in(&th.y_vars()) == p.min_degree_in(&th.y_vars())));
}

#[test]
fn y_row_with_s_z2_weights() {
    let s = surface(SurfaceId::SZ2);
    let spec = CaseSpec::punctual(s, s.isolated_points().next().unwrap().id, Chart::U2).unwrap();
    assert_eq!(equivariant_mult_hilb2(&spec).unwrap(), quantum_int(2, 3).unwrap());
}

#[test]
fn invalid_weights_are_rejected() {
    let spec = CaseSpec::Punctual { chart: Chart::U2, point: LocalPoint::new(1, 2, 1, 2), e: 4 };
    assert!(equivariant_mult_hilb2(&spec).is_err());
}
