//! Named families and curves with the results stated for them.

use serde::{Deserialize, Serialize};

use super::{specialize, FamilyError, ParamFamily, UniversalFamily};
use crate::arith::{q, qi, MultiPoly, Rational, UniPoly};
use crate::elliptic::{SigmaInput, SigmaReport, TorsionVerdict};
use crate::genus2::verify_decomposition;

pub const PRESET_NAMES: [&str; 11] = [
    "ex8_1",
    "ex8_2",
    "ex8_3",
    "ex8_4",
    "ex8_5",
    "ex8_6",
    "ex8_7",
    "ex8_8",
    "intro_family",
    "body_family",
    "bft_universal",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SexticVariant {
    /// y⁴ + ay² + xy + x³ + bx² = 0, μ² = aλ⁶ + λ⁵ + bλ⁴ − 1.
    Intro,
    /// y⁴ + ay² − xy − x³ + bx² = 0, μ² = aλ⁶ − λ⁵ + bλ⁴ − 1.
    Body,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PresetSource {
    /// A family with a distinguished parameter point.
    Family { family: ParamFamily, point: Vec<Rational> },
    /// A single curve; see the preset's `instance`.
    Curve,
    /// Two-parameter quartic family, given by its sextic model only.
    SexticFamily { variant: SexticVariant, quartic: String, sextic: String },
    Universal { family: UniversalFamily },
}

/// The stated result for a preset's instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    /// Orders of σ₁, σ₂; `None` stands for infinite order.
    pub sigma_orders: Option<[Option<u32>; 2]>,
    /// The two orders may appear in either position.
    pub unordered: bool,
    pub claim: String,
}

impl Expected {
    /// Whether a report reproduces the stated orders.
    pub fn matches(&self, r: &SigmaReport) -> bool {
        let Some(want) = self.sigma_orders else { return true };
        let Some(got) = r.torsion else { return false };
        let got = got.map(|t| match t {
            TorsionVerdict::Order { n } => Some(n),
            _ => None,
        });
        got == want || (self.unordered && got == [want[1], want[0]])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preset {
    pub name: String,
    pub description: String,
    pub source: PresetSource,
    /// Input for the σ-torsion pipeline, when the preset names a curve.
    pub instance: Option<SigmaInput>,
    pub expected: Option<Expected>,
}

/// Polynomial in `arity` variables from (numerator, denominator, exponents).
fn mp(arity: usize, terms: &[(i64, i64, &[u32])]) -> MultiPoly {
    let mut p = MultiPoly::zero(arity);
    for (n, d, e) in terms {
        assert_eq!(e.len(), arity);
        p.add_term(e.to_vec(), q(*n, *d));
    }
    p
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// P = b₃x³, Q = c₂x² + 3; the two sections coincide.
pub fn dependent_sections() -> ParamFamily {
    ParamFamily {
        name: "dependent_sections".into(),
        params: names(&["b3", "c2"]),
        p: mp(3, &[(1, 1, &[1, 0, 3])]),
        q: mp(3, &[(1, 1, &[0, 1, 2]), (3, 1, &[0, 0, 0])]),
        x0: MultiPoly::zero(2),
        constraints: vec![],
        solved: vec![],
    }
}

/// P = b₃x³ + b₁x + 10, Q = c₂x² + 7, infinity fiber {−4, −1, 5} at x = 0.
pub fn independent_sections() -> ParamFamily {
    ParamFamily {
        name: "independent_sections".into(),
        params: names(&["b3", "b1", "c2"]),
        p: mp(4, &[(1, 1, &[1, 0, 0, 3]), (1, 1, &[0, 1, 0, 1]), (10, 1, &[0, 0, 0, 0])]),
        q: mp(4, &[(1, 1, &[0, 0, 1, 2]), (7, 1, &[0, 0, 0, 0])]),
        x0: MultiPoly::zero(3),
        constraints: vec![],
        solved: vec![],
    }
}

/// b₃ − (7/27)b₁c₂ + (4/3⁷)b₁³: the locus where σ₁ is 2-torsion
/// (the tangents at (0, −4) and (0, −1) meet the cubic in the same point).
pub fn two_torsion_constraint() -> MultiPoly {
    mp(3, &[(1, 1, &[1, 0, 0]), (-7, 27, &[0, 1, 1]), (4, 2187, &[0, 3, 0])])
}

/// The same surface with the constant 4/3⁹ in place of 4/3⁷; σ₁ is not
/// 2-torsion on it (kept to document the discrepancy).
pub fn two_torsion_constraint_variant() -> MultiPoly {
    mp(3, &[(1, 1, &[1, 0, 0]), (-7, 27, &[0, 1, 1]), (4, 19683, &[0, 3, 0])])
}

fn on_surface(name: &str, c: MultiPoly) -> ParamFamily {
    let mut fam = independent_sections();
    fam.name = name.into();
    let b3 = MultiPoly::var(3, 0).sub(&c);
    fam.constraints = vec![c];
    fam.solved = vec![(0, b3)];
    fam
}

/// The independent-sections family restricted to the 2-torsion surface.
pub fn surface_two_torsion() -> ParamFamily {
    on_surface("surface_two_torsion", two_torsion_constraint())
}

/// The same surface with 4/3⁹ in place of 4/3⁷; σ₁ is not 2-torsion on it.
pub fn surface_two_torsion_variant() -> ParamFamily {
    on_surface("surface_two_torsion_variant", two_torsion_constraint_variant())
}

/// The octic surface on which σ₁ has order 3, in (b₃, b₁, c₂).
pub fn three_torsion_constraint() -> MultiPoly {
    mp(
        3,
        &[
            (1, 1, &[0, 8, 0]),
            (-837, 2, &[0, 6, 1]),
            (3645, 2, &[1, 5, 0]),
            (951345, 16, &[0, 4, 2]),
            (-4113747, 8, &[1, 3, 1]),
            (10451673, 16, &[2, 2, 0]),
            (-42338133, 16, &[0, 2, 3]),
            (301327047, 8, &[1, 1, 2]),
            (-1420541793, 16, &[2, 0, 1]),
            (-129140163, 4, &[0, 0, 4]),
        ],
    )
}

pub fn surface_three_torsion() -> ParamFamily {
    let mut fam = independent_sections();
    fam.name = "surface_three_torsion".into();
    fam.constraints = vec![three_torsion_constraint()];
    fam
}

/// P = b₂x² + 10, Q = x² + 7: both sections identically 2-torsion.
pub fn two_torsion_pencil() -> ParamFamily {
    ParamFamily {
        name: "two_torsion_pencil".into(),
        params: names(&["b2"]),
        p: mp(2, &[(1, 1, &[1, 2]), (10, 1, &[0, 0])]),
        q: mp(2, &[(1, 1, &[0, 2]), (7, 1, &[0, 0])]),
        x0: MultiPoly::zero(1),
        constraints: vec![],
        solved: vec![],
    }
}

/// P = u³ − 1, Q = −αu²: every quotient is isomorphic to u³ + v³ = 1.
pub fn fermat_pencil() -> ParamFamily {
    ParamFamily {
        name: "fermat_pencil".into(),
        params: names(&["alpha"]),
        p: mp(2, &[(1, 1, &[0, 3]), (-1, 1, &[0, 0])]),
        q: mp(2, &[(-1, 1, &[1, 2])]),
        x0: MultiPoly::zero(1),
        constraints: vec![],
        solved: vec![],
    }
}

fn curve_instance(p: &[i64], qq: &[i64]) -> SigmaInput {
    let curve = verify_decomposition(&UniPoly::from_ints(p), &UniPoly::from_ints(qq)).expect("valid decomposition");
    SigmaInput { curve, marked_x: qi(0) }
}

fn family_preset(
    name: &str,
    description: &str,
    family: ParamFamily,
    point: Vec<Rational>,
    expected: Option<Expected>,
) -> Result<Preset, FamilyError> {
    let instance = Some(specialize(&family, &point)?.sigma_input());
    Ok(Preset { name: name.into(), description: description.into(), source: PresetSource::Family { family, point }, instance, expected })
}

fn orders(a: Option<u32>, b: Option<u32>, unordered: bool, claim: &str) -> Option<Expected> {
    Some(Expected { sigma_orders: Some([a, b]), unordered, claim: claim.into() })
}

/// Looks up a preset by name.
pub fn preset(name: &str) -> Result<Preset, FamilyError> {
    let p = match name {
        "ex8_1" => family_preset(
            "ex8_1",
            "P = b3 x^3, Q = c2 x^2 + 3 at (b3, c2) = (1, 2); sigma1 = sigma2 identically since (0, 0) is a flex",
            dependent_sections(),
            vec![qi(1), qi(2)],
            Some(Expected { sigma_orders: None, unordered: false, claim: "sigma1 = sigma2 as points".into() }),
        )?,
        "ex8_2" => family_preset(
            "ex8_2",
            "P = b3 x^3 + b1 x + 10, Q = c2 x^2 + 7 at (b3, b1, c2) = (1, 0, -1); independent sections",
            independent_sections(),
            vec![qi(1), qi(0), qi(-1)],
            orders(None, None, false, "sigma1, sigma2 of infinite order with nondegenerate height pairing"),
        )?,
        "ex8_3" => {
            let fam = surface_two_torsion();
            let point = fam.complete(&[qi(1), qi(1)])?;
            family_preset(
                "ex8_3",
                "independent-sections family on b3 = 7/27 b1 c2 - 4/3^7 b1^3, at b1 = c2 = 1; sigma1 identically 2-torsion",
                fam,
                point,
                orders(Some(2), None, false, "sigma1 of order 2, sigma2 of infinite order"),
            )?
        }
        "ex8_4" => family_preset(
            "ex8_4",
            "independent-sections family on the octic surface where sigma1 has order 3, at (b3, b1, c2) = (2, -9, -11/4)",
            surface_three_torsion(),
            vec![qi(2), qi(-9), q(-11, 4)],
            orders(Some(3), None, false, "sigma1 of order 3, sigma2 of infinite order"),
        )?,
        "ex8_5" => family_preset(
            "ex8_5",
            "P = b2 x^2 + 10, Q = x^2 + 7 at b2 = 1; both sections identically 2-torsion",
            two_torsion_pencil(),
            vec![qi(1)],
            orders(Some(2), Some(2), false, "both sections of order 2"),
        )?,
        "ex8_6" => Preset {
            name: "ex8_6".into(),
            description: "P = 19x^3 + 54x^2 + 27x, Q = x^2 - 9, marked x = 0".into(),
            source: PresetSource::Curve,
            instance: Some(curve_instance(&[0, 27, 54, 19], &[-9, 0, 1])),
            expected: orders(Some(3), Some(3), false, "both differences of order 3"),
        },
        "ex8_7" => Preset {
            name: "ex8_7".into(),
            description: "81z^4 - 162z^3 + 9z^2w + 107z^2 - 62zw - 9w^3 + 36w^2 = 0; sextic model \
                          16(-104x^6 + 212x^5 - 143x^4 + 36x^3 - 2x^2 + 1) = P^2 - Q^3 with \
                          P = 8x^3 - 4x^2 + 4, Q = 12x^2 - 8x, marked x = 0"
                .into(),
            source: PresetSource::Curve,
            instance: Some(curve_instance(&[4, 0, -4, 8], &[0, -8, 12])),
            expected: orders(Some(2), Some(3), true, "differences of orders 2 and 3"),
        },
        "ex8_8" => family_preset(
            "ex8_8",
            "P = u^3 - 1, Q = -alpha u^2 at alpha = 2; every quotient has j = 0",
            fermat_pencil(),
            vec![qi(2)],
            Some(Expected { sigma_orders: None, unordered: false, claim: "quotient cubic has j = 0".into() }),
        )?,
        "intro_family" => Preset {
            name: "intro_family".into(),
            description: "two-parameter quartic family; decompositions only by point-wise search".into(),
            source: PresetSource::SexticFamily {
                variant: SexticVariant::Intro,
                quartic: "y^4 + a y^2 + x y + x^3 + b x^2 = 0".into(),
                sextic: "mu^2 = a lambda^6 + lambda^5 + b lambda^4 - 1".into(),
            },
            instance: None,
            expected: None,
        },
        "body_family" => Preset {
            name: "body_family".into(),
            description: "sign variant of the two-parameter quartic family".into(),
            source: PresetSource::SexticFamily {
                variant: SexticVariant::Body,
                quartic: "y^4 + a y^2 - x y - x^3 + b x^2 = 0".into(),
                sextic: "mu^2 = a lambda^6 - lambda^5 + b lambda^4 - 1".into(),
            },
            instance: None,
            expected: None,
        },
        "bft_universal" => Preset {
            name: "bft_universal".into(),
            description: "universal curve with two independent 3-torsion points: f = G_i^2 + lambda_i H_i^3, i = 1, 2, 3"
                .into(),
            source: PresetSource::Universal { family: UniversalFamily::default() },
            instance: None,
            expected: None,
        },
        other => return Err(FamilyError::UnknownPreset(other.into())),
    };
    Ok(p)
}

pub fn all_presets() -> Vec<Preset> {
    PRESET_NAMES.iter().map(|n| preset(n).expect("registered preset")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete() {
        let all = all_presets();
        assert_eq!(all.len(), 11);
        for (p, n) in all.iter().zip(PRESET_NAMES) {
            assert_eq!(p.name, n);
        }
    }

    #[test]
    fn three_torsion_point_is_on_octic() {
        assert!(three_torsion_constraint().eval(&[qi(2), qi(-9), q(-11, 4)]).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        for p in all_presets() {
            let s = serde_json::to_string(&p).unwrap();
            assert_eq!(serde_json::from_str::<Preset>(&s).unwrap(), p);
        }
    }
}
