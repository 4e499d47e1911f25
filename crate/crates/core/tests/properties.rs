use g2cover::arith::{discriminant, q, qi, Field, Rational, RootSet, UniPoly};
use g2cover::cover::infinity_fiber;
use g2cover::elliptic::{canonical_height, sigma_torsion, EPoint, SigmaOptions, WeierstrassCurve};
use g2cover::genus2::{verify_decomposition, Decomposition};
use proptest::prelude::*;

/// Rank-2 curve with independent points P₁, P₂ (the quotient at (1, 0, −1)
/// of the independent-sections family).
fn rank_two() -> (WeierstrassCurve, EPoint<Rational>, EPoint<Rational>) {
    let e = WeierstrassCurve::new([qi(-2), q(-109, 9), q(64, 9), q(1216, 27), q(-1280, 27)]).unwrap();
    let p1 = EPoint::Affine { x: q(16, 3), y: q(32, 9) };
    let p2 = EPoint::Affine { x: qi(4), y: q(20, 9) };
    (e, p1, p2)
}

fn combo(e: &WeierstrassCurve, p1: &EPoint<Rational>, p2: &EPoint<Rational>, a: i64, b: i64) -> EPoint<Rational> {
    e.add(&e.mul(a, p1).unwrap(), &e.mul(b, p2).unwrap()).unwrap()
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

/// Decompositions whose fiber over x = 0 is {w₁, w₂, −w₁ − w₂}: then
/// Q(0) = −e₂/3 and P(0) = e₃/2.
fn rational_fiber_decomposition() -> impl Strategy<Value = Decomposition> {
    (-6i64..=6, -6i64..=6, prop::array::uniform5(-5i64..=5)).prop_filter_map("degenerate", |(w1, w2, c)| {
        let w3 = -w1 - w2;
        let e2 = qi(w1 * w2 + w1 * w3 + w2 * w3);
        let e3 = qi(w1 * w2 * w3);
        let p = UniPoly::new(vec![e3 / qi(2), qi(c[0]), qi(c[1]), qi(c[2])]);
        let qq = UniPoly::new(vec![-(e2 / qi(3)), qi(c[3]), qi(c[4])]);
        verify_decomposition(&p, &qq).ok().filter(|d| !d.f.eval(&qi(0)).is_zero())
    })
}

fn any_decomposition() -> impl Strategy<Value = Decomposition> {
    (prop::array::uniform4(-6i64..=6), prop::array::uniform3(-6i64..=6))
        .prop_filter_map("degenerate", |(p, qq)| verify_decomposition(&UniPoly::from_ints(&p), &UniPoly::from_ints(&qq)).ok())
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn group_law_is_associative(a in prop::array::uniform6(-3i64..=3)) {
        let (e, p1, p2) = rank_two();
        let x = combo(&e, &p1, &p2, a[0], a[1]);
        let y = combo(&e, &p1, &p2, a[2], a[3]);
        let z = combo(&e, &p1, &p2, a[4], a[5]);
        let left = e.add(&e.add(&x, &y).unwrap(), &z).unwrap();
        let right = e.add(&x, &e.add(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(config(50))]

    #[test]
    fn height_is_quadratic(a in -3i64..=3, b in -3i64..=3) {
        prop_assume!(a != 0 || b != 0);
        let (e, p1, p2) = rank_two();
        let p = combo(&e, &p1, &p2, a, b);
        let h = canonical_height(&e, &p).unwrap();
        let h2 = canonical_height(&e, &e.mul(2, &p).unwrap()).unwrap();
        prop_assert!((h2 - 4.0 * h).abs() < 1e-6, "{} vs {}", h2, 4.0 * h);
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn discriminant_is_translation_invariant(d in any_decomposition(), c in small_rational()) {
        let shifted = d.f.shift(&c);
        prop_assert_eq!(discriminant(&shifted).unwrap(), discriminant(&d.f).unwrap());
    }

    #[test]
    fn fiber_values_sum_to_zero(d in any_decomposition(), x0 in small_rational()) {
        let Ok(fiber) = infinity_fiber(&d, &x0) else { return Ok(()) };
        match &fiber.values {
            RootSet::Rational { roots } => {
                prop_assert_eq!(roots.len(), 3);
                prop_assert!(roots.iter().fold(qi(0), |s, r| s + r.clone()).is_zero());
            }
            RootSet::Quadratic { roots, .. } => {
                prop_assert_eq!(roots.len(), 3);
                let s = roots.iter().skip(1).fold(roots[0].clone(), |s, r| s.fadd(r));
                prop_assert!(Field::is_zero(&s));
            }
        }
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn differences_sum_to_zero_and_torsion_is_audited(d in rational_fiber_decomposition()) {
        let opts = SigmaOptions { search_height: 50, ..SigmaOptions::default() };
        let r = sigma_torsion(&d, &qi(0), &opts).unwrap();
        if r.sigma.is_some() {
            prop_assert_eq!(r.sum_check, Some(true));
        }
        // one audit per component when the σ's are rational
        for (k, audit) in r.audits.iter().enumerate() {
            if r.sigma_orders[k].is_some() {
                prop_assert!(audit.first_non_integral.is_none() && audit.torsion_conditions_hold, "{:?}", audit);
            }
        }
    }
}
