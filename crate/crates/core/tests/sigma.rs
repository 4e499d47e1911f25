use g2cover::arith::{q, qi, QuadElem, Rational, RootSet, UniPoly};
use g2cover::cover::{build_cover, elliptic_quotient, elliptic_quotient_raw, infinity_fiber, CoverError};
use g2cover::elliptic::{sigma_torsion, SigmaOptions, TorsionVerdict, Verdict};
use g2cover::genus2::{verify_decomposition, Decomposition};

fn decomp(p: &[i64], q: &[i64]) -> Decomposition {
    verify_decomposition(&UniPoly::from_ints(p), &UniPoly::from_ints(q)).unwrap()
}

fn worked_example() -> Decomposition {
    decomp(&[0, 27, 54, 19], &[-9, 0, 1])
}

fn rational_fiber(d: &Decomposition) -> Vec<Rational> {
    match infinity_fiber(d, &qi(0)).unwrap().values {
        RootSet::Rational { roots } => roots,
        other => panic!("expected rational fiber, got {other:?}"),
    }
}

#[test]
fn cover_relation_and_involution() {
    let c = build_cover(&worked_example());
    assert!(c.involution_identity);
    assert_eq!(c.genus, 4);
}

#[test]
fn quotient_of_worked_example_is_smooth() {
    let e = elliptic_quotient(&worked_example()).unwrap();
    assert!(e.probe.smooth);
    assert!(!e.ternary.discriminant().is_zero());
}

#[test]
fn reducible_quotient_rejected() {
    let r = elliptic_quotient_raw(&UniPoly::zero(), &UniPoly::from_ints(&[1, 0, 1]));
    assert!(matches!(r, Err(CoverError::SingularQuotient(_))));
}

#[test]
fn fiber_of_linear_plus_cubic_family() {
    // P = x³ + 10, Q = −x² + 7
    let d = decomp(&[10, 0, 0, 1], &[7, 0, -1]);
    assert_eq!(rational_fiber(&d), vec![qi(-4), qi(-1), qi(5)]);
}

#[test]
fn fiber_of_pure_cubic_family() {
    let d = decomp(&[0, 0, 0, 1], &[3, 0, 2]);
    assert_eq!(rational_fiber(&d), vec![qi(-3), qi(0), qi(3)]);
}

#[test]
fn fiber_of_worked_example_is_quadratic() {
    let fib = infinity_fiber(&worked_example(), &qi(0)).unwrap();
    let RootSet::Quadratic { d, roots } = fib.values else { panic!("expected quadratic fiber") };
    assert_eq!(d, -3);
    let expect = [
        QuadElem::from_rational(qi(0), -3),
        QuadElem::new(qi(0), qi(3), -3).unwrap(),
        QuadElem::new(qi(0), qi(-3), -3).unwrap(),
    ];
    for e in &expect {
        assert!(roots.contains(e), "{e:?} missing from {roots:?}");
    }
}

#[test]
fn worked_example_has_three_torsion_differences() {
    let r = sigma_torsion(&worked_example(), &qi(0), &SigmaOptions::default()).unwrap();
    assert_eq!(r.sigma_orders, [Some(3), Some(3)]);
    assert_eq!(r.verdict, Verdict::BiluApplicable);
    assert_eq!(r.sum_check, Some(true));
}

#[test]
fn generic_member_is_not_applicable() {
    let d = decomp(&[10, 0, 0, 1], &[7, 0, -1]);
    let r = sigma_torsion(&d, &qi(0), &SigmaOptions::default()).unwrap();
    assert_eq!(r.torsion, Some([TorsionVerdict::Infinite, TorsionVerdict::Infinite]));
    assert_eq!(r.verdict, Verdict::NotApplicable);
    assert!(r.audits.iter().all(|a| a.first_non_integral.is_some()));
}

#[test]
fn order_three_specialization() {
    // P = 2x³ − 9x + 10, Q = −11/4·x² + 7
    let p = UniPoly::new(vec![qi(10), qi(-9), qi(0), qi(2)]);
    let qq = UniPoly::new(vec![qi(7), qi(0), q(-11, 4)]);
    let d = verify_decomposition(&p, &qq).unwrap();
    let r = sigma_torsion(&d, &qi(0), &SigmaOptions::default()).unwrap();
    assert_eq!(r.torsion, Some([TorsionVerdict::Order { n: 3 }, TorsionVerdict::Infinite]));
}

#[test]
fn two_torsion_surface_point() {
    // b1 = c2 = 1 on b3 = 7/27·b1c2 − 4/3⁷·b1³
    let b3 = q(7, 27) - q(4, 2187);
    let p = UniPoly::new(vec![qi(10), qi(1), qi(0), b3]);
    let d = verify_decomposition(&p, &UniPoly::from_ints(&[7, 0, 1])).unwrap();
    let r = sigma_torsion(&d, &qi(0), &SigmaOptions::default()).unwrap();
    assert_eq!(r.torsion, Some([TorsionVerdict::Order { n: 2 }, TorsionVerdict::Infinite]));
}
