use serde::{Deserialize, Serialize};

use super::{Genus2Error, SexticModel};
use crate::arith::{discriminant, Rational, UniPoly};

// Classical Igusa–Clebsch coefficient formulas for f = Σ a_i x^i; each
// term is coef · ∏ a_idx. They agree with the root-difference sums
// I2 = a6² Σ(12)²(34)²(56)², I4 = a6⁴ Σ(12)²(23)²(31)²(45)²(56)²(64)²,
// I6 = a6⁶ Σ(12)²(23)²(31)²(45)²(56)²(64)²(14)²(25)²(36)².
const I2_TERMS: &[(i64, &[usize])] = &[
    (6, &[3, 3]),
    (-16, &[2, 4]),
    (40, &[1, 5]),
    (-240, &[0, 6]),
];
const I4_TERMS: &[(i64, &[usize])] = &[
    (4, &[2, 2, 4, 4]),
    (-12, &[2, 2, 3, 5]),
    (48, &[2, 2, 2, 6]),
    (-12, &[1, 3, 4, 4]),
    (36, &[1, 3, 3, 5]),
    (4, &[1, 2, 4, 5]),
    (-180, &[1, 2, 3, 6]),
    (-80, &[1, 1, 5, 5]),
    (300, &[1, 1, 4, 6]),
    (48, &[0, 4, 4, 4]),
    (-180, &[0, 3, 4, 5]),
    (324, &[0, 3, 3, 6]),
    (300, &[0, 2, 5, 5]),
    (-504, &[0, 2, 4, 6]),
    (-540, &[0, 1, 5, 6]),
    (1620, &[0, 0, 6, 6]),
];
const I6_TERMS: &[(i64, &[usize])] = &[
    (8, &[2, 2, 3, 3, 4, 4]),
    (-24, &[2, 2, 3, 3, 3, 5]),
    (-24, &[2, 2, 2, 4, 4, 4]),
    (76, &[2, 2, 2, 3, 4, 5]),
    (60, &[2, 2, 2, 3, 3, 6]),
    (-36, &[2, 2, 2, 2, 5, 5]),
    (-160, &[2, 2, 2, 2, 4, 6]),
    (-24, &[1, 3, 3, 3, 4, 4]),
    (72, &[1, 3, 3, 3, 3, 5]),
    (76, &[1, 2, 3, 4, 4, 4]),
    (-238, &[1, 2, 3, 3, 4, 5]),
    (-198, &[1, 2, 3, 3, 3, 6]),
    (28, &[1, 2, 2, 4, 4, 5]),
    (26, &[1, 2, 2, 3, 5, 5]),
    (492, &[1, 2, 2, 3, 4, 6]),
    (616, &[1, 2, 2, 2, 5, 6]),
    (-36, &[1, 1, 4, 4, 4, 4]),
    (26, &[1, 1, 3, 4, 4, 5]),
    (176, &[1, 1, 3, 3, 5, 5]),
    (330, &[1, 1, 3, 3, 4, 6]),
    (64, &[1, 1, 2, 4, 5, 5]),
    (-640, &[1, 1, 2, 4, 4, 6]),
    (-1860, &[1, 1, 2, 3, 5, 6]),
    (-900, &[1, 1, 2, 2, 6, 6]),
    (-320, &[1, 1, 1, 5, 5, 5]),
    (1600, &[1, 1, 1, 4, 5, 6]),
    (2250, &[1, 1, 1, 3, 6, 6]),
    (60, &[0, 3, 3, 4, 4, 4]),
    (-198, &[0, 3, 3, 3, 4, 5]),
    (162, &[0, 3, 3, 3, 3, 6]),
    (-160, &[0, 2, 4, 4, 4, 4]),
    (492, &[0, 2, 3, 4, 4, 5]),
    (330, &[0, 2, 3, 3, 5, 5]),
    (-468, &[0, 2, 3, 3, 4, 6]),
    (-640, &[0, 2, 2, 4, 5, 5]),
    (424, &[0, 2, 2, 4, 4, 6]),
    (-876, &[0, 2, 2, 3, 5, 6]),
    (-96, &[0, 2, 2, 2, 6, 6]),
    (616, &[0, 1, 4, 4, 4, 5]),
    (-1860, &[0, 1, 3, 4, 5, 5]),
    (-876, &[0, 1, 3, 4, 4, 6]),
    (1818, &[0, 1, 3, 3, 5, 6]),
    (1600, &[0, 1, 2, 5, 5, 5]),
    (3472, &[0, 1, 2, 4, 5, 6]),
    (3060, &[0, 1, 2, 3, 6, 6]),
    (-2240, &[0, 1, 1, 5, 5, 6]),
    (-18600, &[0, 1, 1, 4, 6, 6]),
    (-900, &[0, 0, 4, 4, 5, 5]),
    (-96, &[0, 0, 4, 4, 4, 6]),
    (2250, &[0, 0, 3, 5, 5, 5]),
    (3060, &[0, 0, 3, 4, 5, 6]),
    (-10044, &[0, 0, 3, 3, 6, 6]),
    (-18600, &[0, 0, 2, 5, 5, 6]),
    (20664, &[0, 0, 2, 4, 6, 6]),
    (59940, &[0, 0, 1, 5, 6, 6]),
    (-119880, &[0, 0, 0, 6, 6, 6]),
];

fn eval_terms(terms: &[(i64, &[usize])], a: &[Rational; 7]) -> Rational {
    terms
        .iter()
        .map(|(c, idx)| idx.iter().fold(Rational::from(*c), |acc, &i| acc * &a[i]))
        .sum()
}

/// (I2, I4, I6, I10) and the weight-0 ratios I2⁵/I10, I2³I4/I10, I2²I6/I10.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IgusaClebsch {
    pub i2: Rational,
    pub i4: Rational,
    pub i6: Rational,
    pub i10: Rational,
    pub absolute: [Rational; 3],
}

/// Igusa–Clebsch invariants of a separable sextic (quintics are read as
/// sextics with a root at infinity). I10 = disc(f) for degree 6 and
/// a5²·disc(f) for degree 5, i.e. the binary-form discriminant in both cases.
pub fn igusa_clebsch(model: &SexticModel) -> Result<IgusaClebsch, Genus2Error> {
    let f = &model.f;
    let a: [Rational; 7] = std::array::from_fn(|i| f.coeffs().get(i).cloned().unwrap_or_else(Rational::zero));
    let disc = discriminant(f)?;
    let i10 = match f.degree() {
        Some(6) => disc,
        Some(5) => &a[5] * &a[5] * disc,
        d => return Err(Genus2Error::ModelDegree(d.map_or(-1, |d| d as i64))),
    };
    if i10.is_zero() {
        return Err(Genus2Error::NotSeparable);
    }
    let i2 = eval_terms(I2_TERMS, &a);
    let i4 = eval_terms(I4_TERMS, &a);
    let i6 = eval_terms(I6_TERMS, &a);
    let absolute = [
        i2.pow(5) / &i10,
        i2.pow(3) * &i4 / &i10,
        i2.pow(2) * &i6 / &i10,
    ];
    Ok(IgusaClebsch { i2, i4, i6, i10, absolute })
}

/// Applies x ↦ (αx + β)/(γx + δ) to a sextic: (γx + δ)⁶ f((αx + β)/(γx + δ)).
pub fn mobius_transform(f: &UniPoly<Rational>, m: [&Rational; 4]) -> UniPoly<Rational> {
    let [al, be, ga, de] = m;
    let num = UniPoly::new(vec![be.clone(), al.clone()]);
    let den = UniPoly::new(vec![de.clone(), ga.clone()]);
    let mut acc = UniPoly::zero();
    for i in 0..=6usize {
        let c = f.coeffs().get(i).cloned().unwrap_or_else(Rational::zero);
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&num.pow(i as u32).mul(&den.pow(6 - i as u32)).scale(&c));
    }
    acc
}
