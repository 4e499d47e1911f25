use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::arith::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRange {
    pub min: Rational,
    pub max: Rational,
}

/// Rational grid over the free parameters of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    /// One range per free parameter.
    pub ranges: Vec<ParamRange>,
    /// Bound on |numerator|.
    pub max_num: u64,
    /// Bound on the denominator.
    pub max_den: u64,
    /// Random subset of this size; `None` enumerates everything.
    #[serde(default)]
    pub samples: Option<usize>,
    #[serde(default)]
    pub seed: u64,
}

impl GridSpec {
    /// Integers in [lo, hi] for every free parameter.
    pub fn integers(lo: i64, hi: i64, params: usize) -> Self {
        let range = ParamRange { min: Rational::from(lo), max: Rational::from(hi) };
        GridSpec {
            ranges: vec![range; params],
            max_num: lo.unsigned_abs().max(hi.unsigned_abs()),
            max_den: 1,
            samples: None,
            seed: 0,
        }
    }
}

fn height(r: &Rational) -> BigInt {
    r.numer().abs().max(r.denom().clone())
}

/// Reduced fractions a/b in the range with |a| ≤ max_num, b ≤ max_den, in
/// height order (then denominator, |numerator|, value).
pub fn range_values(range: &ParamRange, max_num: u64, max_den: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    for b in 1..=max_den {
        for a in -(max_num as i64)..=(max_num as i64) {
            if a.gcd(&(b as i64)) != 1 {
                continue;
            }
            let r = Rational::new(a, b as i64);
            if r >= range.min && r <= range.max {
                out.push(r);
            }
        }
    }
    out.sort_by_cached_key(|x| (height(x), x.denom().clone(), x.numer().abs(), x.clone()));
    out
}

/// Grid points (free-parameter vectors), small heights first. Deterministic
/// given the spec, including the random subset.
pub fn grid_points(grid: &GridSpec, free: usize) -> Result<Vec<Vec<Rational>>, FamilyError> {
    if grid.ranges.len() != free {
        return Err(FamilyError::Arity { expected: free, got: grid.ranges.len() });
    }
    if grid.max_den == 0 {
        return Err(FamilyError::Grid("max_den must be at least 1".into()));
    }
    let axes: Vec<Vec<Rational>> = grid.ranges.iter().map(|r| range_values(r, grid.max_num, grid.max_den)).collect();
    let mut points: Vec<Vec<Rational>> = vec![vec![]];
    for axis in &axes {
        points = points.into_iter().flat_map(|p| axis.iter().map(move |v| [p.clone(), vec![v.clone()]].concat())).collect();
    }
    let key = |p: &Vec<Rational>| {
        let hs: Vec<BigInt> = p.iter().map(height).collect();
        let nums: BigInt = p.iter().map(|v| v.numer().abs()).sum();
        (hs.iter().max().cloned().unwrap_or_default(), hs.iter().sum::<BigInt>(), nums, p.clone())
    };
    points.sort_by_cached_key(key);
    if let Some(k) = grid.samples {
        let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
        let mut idx = rand::seq::index::sample(&mut rng, points.len(), k.min(points.len())).into_vec();
        idx.sort_unstable();
        points = idx.into_iter().map(|i| points[i].clone()).collect();
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    #[test]
    fn farey_order_in_unit_interval() {
        let r = ParamRange { min: qi(0), max: qi(1) };
        assert_eq!(range_values(&r, 2, 3), vec![qi(0), qi(1), q(1, 2), q(1, 3), q(2, 3)]);
    }

    #[test]
    fn sampling_is_deterministic_subset() {
        let mut g = GridSpec::integers(-5, 5, 2);
        let all = grid_points(&g, 2).unwrap();
        assert_eq!(all.len(), 121);
        assert_eq!(all[0], vec![qi(0), qi(0)]);
        g.samples = Some(10);
        g.seed = 7;
        let a = grid_points(&g, 2).unwrap();
        assert_eq!(a, grid_points(&g, 2).unwrap());
        assert_eq!(a.len(), 10);
        assert!(a.iter().all(|p| all.contains(p)));
    }
}
