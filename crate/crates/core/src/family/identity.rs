use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{specialize, FamilyError, ParamFamily};
use crate::arith::Rational;
use crate::elliptic::{sigma_torsion, SigmaOptions};

/// "n·σ_component = O identically on the family".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionClaim {
    /// 1 or 2.
    pub component: usize,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOptions {
    pub trials: usize,
    pub seed: u64,
    /// Free parameters are drawn as a/b with |a|, b ≤ height.
    pub height: u64,
    /// Give up after trials × this many draws.
    pub attempts_per_trial: usize,
    pub sigma: SigmaOptions,
}

impl Default for IdentityOptions {
    fn default() -> Self {
        IdentityOptions {
            trials: 25,
            seed: 0,
            height: 10,
            attempts_per_trial: 20,
            sigma: SigmaOptions { search_height: 50, ..SigmaOptions::default() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum IdentityVerdict {
    /// Every sample satisfied the claim.
    Pass { trials: usize },
    /// A specialization where n·σ ≠ O.
    Fail { witness: Vec<Rational>, passed_before: usize },
    /// Too few valid specializations were reachable.
    Inconclusive { valid: usize, attempts: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub family: String,
    pub claim: TorsionClaim,
    pub seed: u64,
    pub verdict: IdentityVerdict,
    /// Parameter vectors that were checked, in order.
    pub samples: Vec<Vec<Rational>>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, IdentityVerdict::Pass { .. })
    }
}

fn random_rational(rng: &mut ChaCha8Rng, h: u64) -> Rational {
    let h = h.max(1) as i64;
    Rational::new(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

/// Checks the claim exactly at seeded random specializations. Samples
/// where the family degenerates or no elliptic model is found are skipped.
pub fn identity_check(fam: &ParamFamily, claim: TorsionClaim, opts: &IdentityOptions) -> Result<IdentityReport, FamilyError> {
    if claim.order == 0 || !(1..=2).contains(&claim.component) {
        return Err(FamilyError::Grid(format!("claim needs component 1|2 and order ≥ 1, got {claim:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let free = fam.free_params().len();
    let max_attempts = opts.trials.saturating_mul(opts.attempts_per_trial.max(1));
    let mut samples = Vec::new();
    let mut attempts = 0;
    while samples.len() < opts.trials && attempts < max_attempts {
        attempts += 1;
        let draw: Vec<Rational> = (0..free).map(|_| random_rational(&mut rng, opts.height)).collect();
        let Ok(t) = fam.complete(&draw) else { continue };
        let Ok(spec) = specialize(fam, &t) else { continue };
        let Ok(report) = sigma_torsion(&spec.curve, &spec.marked.x0, &opts.sigma) else { continue };
        let (Some(e), Some(sigma)) = (&report.elliptic, &report.sigma) else { continue };
        let holds = sigma[claim.component - 1]
            .mul(&e.weierstrass, claim.order as i64)
            .map(|p| p.is_infinity())
            .unwrap_or(false);
        samples.push(t.clone());
        if !holds {
            let passed_before = samples.len() - 1;
            return Ok(IdentityReport {
                family: fam.name.clone(),
                claim,
                seed: opts.seed,
                verdict: IdentityVerdict::Fail { witness: t, passed_before },
                samples,
            });
        }
    }
    let verdict = if samples.len() < opts.trials {
        IdentityVerdict::Inconclusive { valid: samples.len(), attempts }
    } else {
        IdentityVerdict::Pass { trials: samples.len() }
    };
    Ok(IdentityReport { family: fam.name.clone(), claim, seed: opts.seed, verdict, samples })
}
