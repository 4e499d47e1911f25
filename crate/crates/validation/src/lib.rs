//! End-to-end checks of the toolkit against the worked examples: each
//! criterion returns a verdict, a one-line detail and optional notes, and is
//! timed against its budget.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use g2cover::arith::{discriminant, q, qi, Field, MultiPoly, QuadElem, Rational, RootSet, UniPoly};
use g2cover::cover::infinity_fiber;
use g2cover::elliptic::{
    canonical_height, regulator, sigma_torsion, EPoint, FieldPoint, SigmaOptions, SigmaReport, TorsionVerdict, Verdict,
    WeierstrassCurve,
};
use g2cover::family::{
    identity_check, jacobian_rank_probe, presets, preset, quotient_j, specialize, universal_family_check,
    IdentityOptions, IdentityVerdict, ParamFamily, TorsionClaim, UniversalFamily,
};
use g2cover::genus2::{
    igusa_clebsch, intro_family_sextic, quartic_to_sextic, verify_decomposition, Decomposition, QuarticNormalForm,
    SexticModel,
};
use g2cover::trinomial::{classify, TrinomialEq, TrinomialVerdict};

/// Regulator of (σ₁, σ₂) at (b₃, b₁, c₂) = (1, 0, −1), cross-checked by a
/// doubling-limit height computation.
pub const REGULATOR_AT_T0: f64 = 0.523003515584;
/// Jacobian determinant of (r, s, t) ↦ (j₁, j₂, j₃) at (2, 1, 3), step 1e−6,
/// cross-checked against a binary-quartic j computation.
pub const JACOBIAN_DET_AT_213: f64 = 108974891230815.56;

pub struct Check {
    pub pass: bool,
    pub detail: String,
    pub notes: Vec<String>,
}

impl Check {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Check { pass, detail: detail.into(), notes: vec![] }
    }
}

pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub check: Check,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    pub fn pass(&self) -> bool {
        self.check.pass && self.elapsed <= self.budget
    }
}

fn err(e: impl std::fmt::Display) -> Check {
    Check::new(false, format!("error: {e}"))
}

fn sigma(d: &Decomposition, x0: &Rational) -> Result<SigmaReport, String> {
    sigma_torsion(d, x0, &SigmaOptions::default()).map_err(|e| e.to_string())
}

fn instance_report(name: &str) -> Result<SigmaReport, String> {
    let p = preset(name).map_err(|e| e.to_string())?;
    let i = p.instance.ok_or("preset has no instance")?;
    sigma(&i.curve, &i.marked_x)
}

fn orders(r: &SigmaReport) -> String {
    let f = |o: Option<u32>| o.map_or("inf".to_string(), |n| n.to_string());
    format!("({}, {})", f(r.sigma_orders[0]), f(r.sigma_orders[1]))
}

fn decomposition_identity() -> Check {
    let (p, qq) = (UniPoly::from_ints(&[0, 27, 54, 19]), UniPoly::from_ints(&[-9, 0, 1]));
    let start = Instant::now();
    let d = match verify_decomposition(&p, &qq) {
        Ok(d) => d,
        Err(e) => return err(e),
    };
    let elapsed = start.elapsed();
    let want = UniPoly::from_ints(&[729, 0, 486, 2916, 3969, 2052, 360]);
    let separable = discriminant(&d.f).map(|v| !v.is_zero()).unwrap_or(false);
    Check::new(
        d.f == want && separable && elapsed < Duration::from_millis(1),
        format!("f = {}, verified in {elapsed:.1?}", d.f),
    )
}

fn sigma_golden() -> Check {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, want, unordered) in [("ex8_6", [Some(3), Some(3)], false), ("ex8_7", [Some(2), Some(3)], true)] {
        let start = Instant::now();
        match instance_report(name) {
            Ok(r) => {
                let got = r.sigma_orders;
                let hit = got == want || (unordered && got == [want[1], want[0]]);
                let fast = start.elapsed() < Duration::from_secs(1);
                ok &= hit && r.verdict == Verdict::BiluApplicable && fast;
                detail.push(format!("{name}: orders {} {:?}", orders(&r), r.verdict));
            }
            Err(e) => {
                ok = false;
                detail.push(format!("{name}: {e}"));
            }
        }
    }
    Check::new(ok, detail.join("; "))
}

fn fiber_golden() -> Check {
    let rational = |d: &Decomposition| match infinity_fiber(d, &qi(0)).map(|f| f.values) {
        Ok(RootSet::Rational { mut roots }) => {
            roots.sort();
            Some(roots)
        }
        _ => None,
    };
    let d2 = verify_decomposition(&UniPoly::from_ints(&[10, 1, 0, 1]), &UniPoly::from_ints(&[7, 0, -1]));
    let d1 = specialize(&presets::dependent_sections(), &[qi(1), qi(2)]).map(|s| s.curve);
    let d6 = verify_decomposition(&UniPoly::from_ints(&[0, 27, 54, 19]), &UniPoly::from_ints(&[-9, 0, 1]));
    let (Ok(d2), Ok(d1), Ok(d6)) = (d2, d1, d6) else { return Check::new(false, "a decomposition was rejected") };
    let f2 = rational(&d2);
    let f1 = rational(&d1);
    let s = QuadElem::new(qi(0), qi(3), -3).expect("valid element");
    let want6 = [QuadElem::from_rational(qi(0), -3), s.clone(), s.neg()];
    let f6 = match infinity_fiber(&d6, &qi(0)).map(|f| f.values) {
        Ok(RootSet::Quadratic { d: -3, roots }) => roots.len() == 3 && want6.iter().all(|w| roots.contains(w)),
        _ => false,
    };
    let ok2 = f2 == Some(vec![qi(-4), qi(-1), qi(5)]);
    let ok1 = f1 == Some(vec![qi(-3), qi(0), qi(3)]);
    Check::new(ok2 && ok1 && f6, format!("linear+cubic family {ok2}, pure cubic {ok1}, worked example {f6}"))
}

fn rational_points(r: &SigmaReport) -> Option<Vec<EPoint<Rational>>> {
    r.sigma.as_ref()?.iter().map(|p| match p {
        FieldPoint::Rational(p) => Some(p.clone()),
        FieldPoint::Quadratic(_) => None,
    }).collect()
}

fn independence() -> Check {
    let fam = presets::independent_sections();
    let r = match specialize(&fam, &[qi(1), qi(0), qi(-1)]).map_err(|e| e.to_string()).and_then(|s| sigma(&s.curve, &s.marked.x0)) {
        Ok(r) => r,
        Err(e) => return err(e),
    };
    let infinite = r.torsion == Some([TorsionVerdict::Infinite, TorsionVerdict::Infinite]);
    let audited = r.audits.len() == 2 && r.audits.iter().all(|a| a.first_non_integral.is_some());
    let (Some(e), Some(pts)) = (&r.elliptic, rational_points(&r)) else { return Check::new(false, "no elliptic model") };
    let reg = match regulator(&e.weierstrass, &pts) {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    let frozen = (reg - REGULATOR_AT_T0).abs() < 1e-6;
    Check::new(
        infinite && audited && reg > 1e-6 && frozen,
        format!("orders {}, audited {audited}, regulator {reg:.9} (frozen {REGULATOR_AT_T0})", orders(&r)),
    )
}

fn two_torsion_identity(fam: &ParamFamily) -> Result<(bool, String), String> {
    let claim = TorsionClaim { component: 1, order: 2 };
    let r = identity_check(fam, claim, &IdentityOptions::default()).map_err(|e| e.to_string())?;
    let at = fam.complete(&[qi(1), qi(1)]).map_err(|e| e.to_string())?;
    let s = specialize(fam, &at).map_err(|e| e.to_string())?;
    let rep = sigma(&s.curve, &s.marked.x0)?;
    let second_infinite = rep.torsion.map(|t| t[1]) == Some(TorsionVerdict::Infinite);
    let verdict = match &r.verdict {
        IdentityVerdict::Pass { trials } => format!("2σ₁ = O at {trials} samples"),
        IdentityVerdict::Fail { witness, passed_before } => {
            let w: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
            format!("2σ₁ ≠ O at ({}) after {passed_before} passes", w.join(", "))
        }
        IdentityVerdict::Inconclusive { valid, attempts } => format!("only {valid} valid samples in {attempts} draws"),
    };
    Ok((r.passed() && second_infinite, format!("{verdict}; at (1, 1) orders {}", orders(&rep))))
}

fn surface_identity() -> Check {
    let mut c = match two_torsion_identity(&presets::surface_two_torsion_variant()) {
        Ok((pass, detail)) => Check::new(pass, format!("surface with 4/3⁹: {detail}")),
        Err(e) => return err(e),
    };
    match two_torsion_identity(&presets::surface_two_torsion()) {
        Ok((pass, detail)) => c.notes.push(format!("surface with 4/3⁷: {} — {detail}", if pass { "holds" } else { "fails" })),
        Err(e) => c.notes.push(format!("surface with 4/3⁷: error {e}")),
    }
    c
}

fn three_torsion_point() -> Check {
    match instance_report("ex8_4") {
        Ok(r) => Check::new(r.sigma_orders == [Some(3), None], format!("orders {}", orders(&r))),
        Err(e) => err(e),
    }
}

fn two_two_pencil() -> Check {
    let fam = presets::two_torsion_pencil();
    let mut valid = 0;
    let mut all = true;
    let mut invariants = Vec::new();
    for b in -5..=5 {
        let Ok(s) = specialize(&fam, &[qi(b)]) else { continue };
        valid += 1;
        match sigma(&s.curve, &s.marked.x0) {
            Ok(r) => all &= r.sigma_orders == [Some(2), Some(2)],
            Err(_) => all = false,
        }
        if let Ok(ic) = SexticModel::new(s.curve.f.clone()).and_then(|m| igusa_clebsch(&m)) {
            if !invariants.contains(&ic.absolute) {
                invariants.push(ic.absolute);
            }
        }
    }
    Check::new(
        all && valid > 0 && invariants.len() >= 2,
        format!("{valid} valid members all (2, 2): {all}; {} distinct absolute invariants", invariants.len()),
    )
}

fn fermat_pencil() -> Check {
    let fam = presets::fermat_pencil();
    let alphas = [qi(1), qi(2), qi(3), qi(4), qi(5), qi(-2), q(1, 2), q(-3, 2), q(2, 3), q(5, 4)];
    let mut worst: f64 = 0.0;
    for a in &alphas {
        let j = specialize(&fam, std::slice::from_ref(a)).map_err(|e| e.to_string()).and_then(|s| quotient_j(&s.curve).map_err(|e| e.to_string()));
        match j {
            Ok(j) => worst = worst.max(j.abs()),
            Err(e) => return err(format!("α = {a}: {e}")),
        }
    }
    Check::new(worst < 1e-6, format!("max |j| over {} values of α: {worst:.2e}", alphas.len()))
}

fn universal_identity() -> Check {
    let u = UniversalFamily::default();
    let c = universal_family_check(&u);
    let mut bad = u.clone();
    bad.g[0].add_term(vec![0, 1, 0, 2], Rational::one());
    let m = universal_family_check(&bad);
    Check::new(c.pass && !m.pass, format!("identity holds: {}; mutation mismatches {:?}", c.pass, m.mismatches))
}

fn jacobian_probe() -> Check {
    match jacobian_rank_probe(&UniversalFamily::default(), &[qi(2), qi(1), qi(3)], 1e-6) {
        Ok(p) => {
            let rel = ((p.determinant - JACOBIAN_DET_AT_213) / JACOBIAN_DET_AT_213).abs();
            Check::new(
                p.significant && rel < 1e-3,
                format!("det {:.6e}, step-halving error {:.2e}, relative drift {rel:.1e}", p.determinant, p.error_estimate),
            )
        }
        Err(e) => err(e),
    }
}

/// (order, exponent) of {(p, q) mod Δ : pn ≡ qm, pr ≡ q(m − s)}.
fn enumerate_group(n: i64, r: i64, s: i64, m: i64, delta: i64) -> (u64, u64) {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let (mut order, mut exponent) = (0u64, 1u64);
    for p in 0..delta {
        for q in 0..delta {
            if (p * n - q * m).rem_euclid(delta) == 0 && (p * r - q * (m - s)).rem_euclid(delta) == 0 {
                order += 1;
                let k = (1..=delta).find(|k| (k * p) % delta == 0 && (k * q) % delta == 0).unwrap_or(delta) as u64;
                exponent = exponent / gcd(exponent, k) * k;
            }
        }
    }
    (order, exponent)
}

fn trinomials() -> Check {
    let eq = |n, r, s, m| TrinomialEq::new(n, r, s, m, qi(1), qi(1)).expect("nonzero coefficients");
    let c5 = classify(&eq(4, 1, 1, 3));
    let c0 = classify(&eq(2, 1, 1, 2));
    let ok5 = c5.delta == 5 && c5.cyclic && c5.elementary_divisors == vec![5];
    let ok0 = c0.delta == 0 && c0.verdict == TrinomialVerdict::TorusTranslates;
    let (mut checked, mut agree) = (0, true);
    for n in 0..=9u32 {
        for m in 0..=9u32 {
            for r in 0..=n {
                for s in 0..=m {
                    let c = classify(&eq(n, r, s, m));
                    if c.delta == 0 || c.delta > 50 {
                        continue;
                    }
                    let (order, exponent) = enumerate_group(n as i64, r as i64, s as i64, m as i64, c.delta as i64);
                    let d2 = c.elementary_divisors.last().copied().unwrap_or(1);
                    agree &= order == c.delta && exponent == d2 && c.cyclic == (order == exponent);
                    checked += 1;
                }
            }
        }
    }
    Check::new(ok5 && ok0 && agree, format!("Δ = 5 cyclic: {ok5}; Δ = 0 torus: {ok0}; {checked} groups agree with enumeration: {agree}"))
}

/// Discriminant in w of the quartic on the line z = m·w, after removing w².
fn pencil_sextic(qf: &QuarticNormalForm) -> Option<UniPoly<Rational>> {
    let t = |c: Rational, e: [u32; 2]| (c, e);
    let terms = [
        t(qf.a9.clone(), [2, 0]),
        t(qf.a6.clone(), [3, 0]),
        t(qi(1), [4, 0]),
        t(qf.a8.clone(), [1, 1]),
        t(qi(1), [2, 1]),
        t(qf.a7.clone(), [0, 2]),
        t(qi(1), [0, 3]),
    ];
    let mut quartic = MultiPoly::zero(2);
    for (c, e) in terms {
        quartic.add_term(e.to_vec(), c);
    }
    // (z, w) ↦ (m·w, w) in variables (m, w)
    let mw = MultiPoly::var(2, 0).mul(&MultiPoly::var(2, 1));
    let on_line = quartic.compose(&[mw, MultiPoly::var(2, 1)]).ok()?;
    let c = on_line.coeffs_in(1);
    if c.len() != 5 || !c[0].is_zero() || !c[1].is_zero() {
        return None;
    }
    let disc = c[3].pow(2).sub(&c[4].mul(&c[2]).scale(&qi(4)));
    disc.to_uni(0)
}

fn model_conversion() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut r = |h: i64| Rational::new(rng.gen_range(-h..=h), rng.gen_range(1..=h));
    let mut agree = 0;
    for _ in 0..20 {
        let qf = QuarticNormalForm { a9: r(9), a6: r(9), a8: r(9), a7: r(9) };
        let Some(expected) = pencil_sextic(&qf) else { continue };
        match quartic_to_sextic(&qf) {
            Ok(m) if m.f == expected => agree += 1,
            // a singular model is only acceptable if the derivation is singular too
            Err(_) if discriminant(&expected).map(|d| d.is_zero()).unwrap_or(true) || expected.degree() < Some(5) => agree += 1,
            _ => {}
        }
    }
    let mut separable = 0;
    let mut invariants = Vec::new();
    for _ in 0..20 {
        let (a, b) = (r(20), r(20));
        let Ok(m) = intro_family_sextic(&a, &b) else { continue };
        if discriminant(&m.f).map(|d| !d.is_zero()).unwrap_or(false) {
            separable += 1;
        }
        if let Ok(ic) = igusa_clebsch(&m) {
            if !invariants.contains(&ic.absolute) {
                invariants.push(ic.absolute);
            }
        }
    }
    Check::new(
        agree == 20 && separable == 20 && invariants.len() >= 2,
        format!("pencil derivation agrees {agree}/20; separable sextics {separable}/20; {} distinct invariants", invariants.len()),
    )
}

fn rank_two() -> (WeierstrassCurve, EPoint<Rational>, EPoint<Rational>) {
    let e = WeierstrassCurve::new([qi(-2), q(-109, 9), q(64, 9), q(1216, 27), q(-1280, 27)]).expect("nonsingular");
    (e, EPoint::Affine { x: q(16, 3), y: q(32, 9) }, EPoint::Affine { x: qi(4), y: q(20, 9) })
}

fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let (e, p1, p2) = rank_two();
    let combo = |a: i64, b: i64| e.add(&e.mul(a, &p1).ok()?, &e.mul(b, &p2).ok()?).ok();
    let mut failures = Vec::new();

    let mut assoc = 0;
    for _ in 0..200 {
        let mut pt = || combo(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let (Some(x), Some(y), Some(z)) = (pt(), pt(), pt()) else { continue };
        let l = e.add(&x, &y).and_then(|xy| e.add(&xy, &z));
        let r = e.add(&y, &z).and_then(|yz| e.add(&x, &yz));
        if matches!((l, r), (Ok(l), Ok(r)) if l == r) {
            assoc += 1;
        }
    }
    if assoc != 200 {
        failures.push(format!("associativity {assoc}/200"));
    }

    let mut heights = 0;
    let mut n = 0;
    while n < 50 {
        let (a, b) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        if a == 0 && b == 0 {
            continue;
        }
        n += 1;
        let Some(p) = combo(a, b) else { continue };
        let h = canonical_height(&e, &p);
        let h2 = e.mul(2, &p).and_then(|p2| canonical_height(&e, &p2));
        if matches!((h, h2), (Ok(h), Ok(h2)) if (h2 - 4.0 * h).abs() < 1e-6) {
            heights += 1;
        }
    }
    if heights != 50 {
        failures.push(format!("ĥ(2P) = 4ĥ(P) {heights}/50"));
    }

    let (mut disc_ok, mut decomps) = (0, Vec::new());
    while decomps.len() < 100 {
        let p: Vec<i64> = (0..4).map(|_| rng.gen_range(-6..=6)).collect();
        let qq: Vec<i64> = (0..3).map(|_| rng.gen_range(-6..=6)).collect();
        let Ok(d) = verify_decomposition(&UniPoly::from_ints(&p), &UniPoly::from_ints(&qq)) else { continue };
        let c = Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        if discriminant(&d.f.shift(&c)).ok() == discriminant(&d.f).ok() {
            disc_ok += 1;
        }
        decomps.push(d);
    }
    if disc_ok != 100 {
        failures.push(format!("discriminant translation {disc_ok}/100"));
    }

    // decompositions with a prescribed split fiber {w₁, w₂, −w₁ − w₂} over x = 0
    let mut split = Vec::new();
    while split.len() < 100 {
        let (w1, w2) = (rng.gen_range(-6i64..=6), rng.gen_range(-6i64..=6));
        let w3 = -w1 - w2;
        let c: Vec<i64> = (0..5).map(|_| rng.gen_range(-5..=5)).collect();
        let e2 = qi(w1 * w2 + w1 * w3 + w2 * w3);
        let e3 = qi(w1 * w2 * w3);
        let p = UniPoly::new(vec![e3 / qi(2), qi(c[0]), qi(c[1]), qi(c[2])]);
        let qq = UniPoly::new(vec![-(e2 / qi(3)), qi(c[3]), qi(c[4])]);
        match verify_decomposition(&p, &qq) {
            Ok(d) if !d.f.eval(&qi(0)).is_zero() => split.push(d),
            _ => {}
        }
    }
    let mut fiber_inputs: Vec<(Decomposition, Rational)> = split.iter().map(|d| (d.clone(), qi(0))).collect();
    fiber_inputs.extend(decomps.iter().map(|d| (d.clone(), Rational::new(rng.gen_range(-3..=3), 1))));
    let (mut fibers, mut fiber_ok) = (0, 0);
    for (d, x0) in &fiber_inputs {
        let Ok(f) = infinity_fiber(d, x0) else { continue };
        fibers += 1;
        let zero = match &f.values {
            RootSet::Rational { roots } => roots.len() == 3 && roots.iter().fold(qi(0), |s, r| s + r.clone()).is_zero(),
            RootSet::Quadratic { roots, .. } => {
                roots.len() == 3 && Field::is_zero(&roots.iter().skip(1).fold(roots[0].clone(), |s, r| s.fadd(r)))
            }
        };
        fiber_ok += zero as usize;
    }

    // σ-sums on the split fibers; torsion audits on members known to carry torsion
    let opts = SigmaOptions { search_height: 50, ..SigmaOptions::default() };
    let mut sigma_inputs: Vec<(Decomposition, Rational)> = split.iter().take(40).map(|d| (d.clone(), qi(0))).collect();
    for name in ["ex8_4", "ex8_6"] {
        if let Some(i) = preset(name).ok().and_then(|p| p.instance) {
            sigma_inputs.push((i.curve, i.marked_x));
        }
    }
    for b in -3..=3 {
        if let Ok(s) = specialize(&presets::two_torsion_pencil(), &[qi(b)]) {
            sigma_inputs.push((s.curve, s.marked.x0));
        }
    }
    let (mut reports, mut sums_ok, mut audits, mut audits_ok) = (0, 0, 0, 0);
    for (d, x0) in &sigma_inputs {
        let Ok(r) = sigma_torsion(d, x0, &opts) else { continue };
        if r.sigma.is_some() {
            reports += 1;
            sums_ok += (r.sum_check == Some(true)) as usize;
        }
        for (k, a) in r.audits.iter().enumerate() {
            if r.sigma_orders[k].is_some() {
                audits += 1;
                audits_ok += (a.first_non_integral.is_none() && a.torsion_conditions_hold) as usize;
            }
        }
    }
    if fiber_ok != fibers {
        failures.push(format!("fiber sums {fiber_ok}/{fibers}"));
    }
    if sums_ok != reports {
        failures.push(format!("σ-sum check {sums_ok}/{reports}"));
    }
    if audits_ok != audits {
        failures.push(format!("torsion audits {audits_ok}/{audits}"));
    }
    let detail = format!(
        "associativity 200, heights 50, discriminants 100, fibers {fibers}, σ-sums {reports}, torsion audits {audits}{}",
        if failures.is_empty() { String::new() } else { format!("; failed: {}", failures.join(", ")) }
    );
    Check::new(failures.is_empty() && fibers >= 100 && reports >= 40 && audits > 0, detail)
}

type CriterionFn = fn() -> Check;

const CRITERIA: [(&str, u64, CriterionFn); 13] = [
    ("decomposition identity of the worked example", 100, decomposition_identity),
    ("σ-torsion golden values", 2_000, sigma_golden),
    ("fiber golden values", 1_000, fiber_golden),
    ("independence and regulator at (1, 0, -1)", 10_000, independence),
    ("2σ₁ = O on the surface with 4/3⁹", 30_000, surface_identity),
    ("order-3 specialization", 5_000, three_torsion_point),
    ("(2, 2) pencil, not isotrivial", 30_000, two_two_pencil),
    ("Fermat pencil is isotrivial", 10_000, fermat_pencil),
    ("universal family identity", 5_000, universal_identity),
    ("Jacobian probe at (2, 1, 3)", 30_000, jacobian_probe),
    ("trinomial classification", 5_000, trinomials),
    ("model conversion", 10_000, model_conversion),
    ("property suites", 60_000, properties),
];

/// Runs every criterion in order, timing each against its budget (ms).
pub fn run_all() -> Vec<Outcome> {
    CRITERIA
        .iter()
        .enumerate()
        .map(|(i, (name, budget_ms, f))| {
            let start = Instant::now();
            let check = f();
            Outcome { id: i as u32 + 1, name, check, elapsed: start.elapsed(), budget: Duration::from_millis(*budget_ms) }
        })
        .collect()
}
