use g2cover::arith::{q, qi};
use g2cover::trinomial::*;

/// Structure of {(p, q) mod Δ : pn ≡ qm, pr ≡ q(m − s)} by enumeration:
/// (order, exponent).
fn brute_force(n: i64, r: i64, s: i64, m: i64, delta: i64) -> (u64, u64) {
    let mut order = 0;
    let mut exponent = 1u64;
    for p in 0..delta {
        for q in 0..delta {
            if (p * n - q * m).rem_euclid(delta) == 0 && (p * r - q * (m - s)).rem_euclid(delta) == 0 {
                order += 1;
                let k = (1..=delta).find(|k| (k * p) % delta == 0 && (k * q) % delta == 0).unwrap() as u64;
                exponent = num_integer::lcm(exponent, k);
            }
        }
    }
    (order, exponent)
}

#[test]
fn group_structure_matches_enumeration() {
    let mut checked = 0;
    for n in 0..=9u32 {
        for m in 0..=9u32 {
            for r in 0..=n {
                for s in 0..=m {
                    let e = TrinomialEq::new(n, r, s, m, qi(1), qi(1)).unwrap();
                    let c = classify(&e);
                    if c.delta == 0 || c.delta > 50 {
                        continue;
                    }
                    let (order, exponent) = brute_force(n as i64, r as i64, s as i64, m as i64, c.delta as i64);
                    assert_eq!(order, c.delta, "{n} {r} {s} {m}");
                    let d2 = *c.elementary_divisors.last().unwrap_or(&1);
                    let d1 = if c.elementary_divisors.len() == 2 { c.elementary_divisors[0] } else { 1 };
                    assert_eq!((d1 * d2, d2), (order, exponent), "{n} {r} {s} {m}");
                    assert_eq!(c.cyclic, order == exponent, "{n} {r} {s} {m}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn determinant_is_delta() {
    for (n, r, s, m) in [(4, 1, 1, 3), (6, 2, 2, 4), (5, 0, 3, 7), (3, 2, 0, 2)] {
        let e = TrinomialEq::new(n, r, s, m, qi(2), q(-1, 3)).unwrap();
        let [[a, b], [c, d]] = e.exponent_matrix();
        assert_eq!((a * d - b * c).unsigned_abs(), e.delta());
        let (d1, d2) = smith_normal_form_2x2(e.exponent_matrix());
        assert_eq!(d1 * d2, e.delta().into());
    }
}

#[test]
fn substitution_is_sound() {
    for (n, r, s, m) in [(4, 1, 1, 3), (2, 1, 1, 2), (6, 2, 2, 4), (1, 0, 5, 2), (0, 3, 1, 1)] {
        let e = TrinomialEq::new(n, r, s, m, q(3, 2), qi(-7)).unwrap();
        assert!(substitution_check(&e), "{n} {r} {s} {m}");
    }
}

#[test]
fn masser_zannier_example() {
    // y⁴ − a·xy − x³ with x and y swapped: x⁴ − a·xy − y³
    let e = TrinomialEq::new(4, 1, 1, 3, qi(-5), qi(-1)).unwrap();
    let c = classify(&e);
    assert_eq!((c.delta, c.elementary_divisors.clone(), c.cyclic), (5, vec![5], true));
    assert_eq!(c.u, [4, -3]);
    assert_eq!(c.v, [1, -2]);
}
