use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use g2cover::arith::{MultiPoly, Rational, UniPoly};
use g2cover::cover::{build_cover, elliptic_quotient, infinity_fiber};
use g2cover::elliptic::{sigma_torsion, SigmaInput, SigmaOptions};
use g2cover::family::{
    identity_check, jacobian_rank_probe, preset, scan, universal_family_check, GridSpec, IdentityOptions, ParamFamily,
    PresetSource, ScanOptions, TorsionClaim, UniversalFamily, PRESET_NAMES,
};
use g2cover::genus2::{
    body_family_sextic, igusa_clebsch, intro_family_sextic, quartic_singularity_audit, quartic_to_sextic,
    search_decomposition, verify_decomposition, QuarticNormalForm, SexticModel,
};
use g2cover::trinomial::{classify, substitution_check, TrinomialEq};

/// Genus-2 curves y² = P² − Q³: étale triple covers, elliptic quotients and
/// torsion certificates.
///
/// Commands read JSON from --input, an inline argument, or stdin, and write
/// JSON to stdout or --output. Exit status: 0 on success (including negative
/// verdicts), 2 on invalid input, 1 on internal errors.
#[derive(Parser)]
#[command(name = "g2cover", version)]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Flags {
    /// Read the input JSON from this file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Largest torsion order tested for points over quadratic fields.
    #[arg(long, global = true, default_value_t = 24)]
    torsion_bound: u32,
    /// Height bound when searching for a rational point on the quotient cubic.
    #[arg(long, global = true)]
    search_height: Option<u64>,
    /// Number of random specializations for identity-check.
    #[arg(long, global = true, default_value_t = 25)]
    trials: usize,
    /// Seed for every random choice; recorded in the reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for scan (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check P² − Q³ is a separable sextic; input {"P": [...], "Q": [...]}.
    VerifyDecomposition { json: Option<String> },
    /// Cover equations t³ = y + P and the lifted involution.
    BuildCover { json: Option<String> },
    /// The quotient cubic w³ − 3Qw − 2P and, with "marked_x", its fiber.
    EllipticQuotient { json: Option<String> },
    /// Torsion of the two infinity differences; input {"curve", "marked_x"} or a preset.
    SigmaTorsion { json: Option<String> },
    /// Run sigma-torsion over a grid; input {"family" | "preset", "grid"}. Emits JSON lines.
    Scan { json: Option<String> },
    /// Sampled check that order·σ_component = O on a family; input {"family" | "preset", "claim"}.
    IdentityCheck { json: Option<String> },
    /// Check the three decompositions of the universal family agree.
    UniversalCheck {
        /// Also probe the Jacobian of (r, s, t) ↦ (j₁, j₂, j₃) at "r,s,t".
        #[arg(long)]
        probe: Option<String>,
        /// Finite-difference step for --probe.
        #[arg(long, default_value_t = 1e-6)]
        step: f64,
    },
    /// Classify x^n + a x^r y^s + b y^m = 0.
    Trinomial {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Sextic models: {"quartic": {a9, a6, a8, a7}}, {"intro"|"body": {a, b}} or {"audit": MultiPoly}.
    ConvertModel { json: Option<String> },
    /// Igusa–Clebsch invariants of {"f": [...]} or of a decomposition.
    Invariants { json: Option<String> },
    /// Print a named example; without a name, list them.
    Preset { name: Option<String> },
}

/// Invalid input (exit 2) versus internal failure (exit 1).
enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

type Res<T> = Result<T, Failure>;

fn internal(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Internal(e.into())
}

fn read_input(flags: &Flags, inline: Option<String>) -> Res<Value> {
    let text = match (inline, &flags.input) {
        (Some(s), _) => s,
        (None, Some(p)) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        (None, None) => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(anyhow!("malformed JSON: {e}")))
}

fn field<T: serde::de::DeserializeOwned>(v: &Value, key: &str) -> Res<T> {
    let x = v.get(key).ok_or_else(|| anyhow!("missing field \"{key}\""))?;
    serde_json::from_value(x.clone()).map_err(|e| Failure::Input(anyhow!("field \"{key}\": {e}")))
}

/// The object holding P and Q: the input itself, its "curve" or
/// "decomposition", or a preset's instance.
fn curve_object(v: &Value) -> &Value {
    if let Some(i) = v.get("instance").filter(|i| i.is_object()) {
        return curve_object(i);
    }
    ["curve", "decomposition"].iter().find_map(|k| v.get(*k).filter(|c| c.is_object())).unwrap_or(v)
}

fn marked_x(v: &Value) -> Res<Option<Rational>> {
    let v = v.get("instance").filter(|i| i.is_object()).unwrap_or(v);
    match v.get("marked_x") {
        Some(x) => Ok(Some(serde_json::from_value(x.clone()).map_err(|e| anyhow!("field \"marked_x\": {e}"))?)),
        None => Ok(None),
    }
}

fn decomposition(v: &Value) -> Res<g2cover::genus2::Decomposition> {
    let c = curve_object(v);
    let p: UniPoly<Rational> = field(c, "P")?;
    let q: UniPoly<Rational> = field(c, "Q")?;
    Ok(verify_decomposition(&p, &q)?)
}

fn sigma_options(flags: &Flags, default_height: u64) -> SigmaOptions {
    SigmaOptions {
        torsion_bound: flags.torsion_bound,
        search_height: flags.search_height.unwrap_or(default_height),
        ..SigmaOptions::default()
    }
}

fn family(v: &Value) -> Res<ParamFamily> {
    if let Some(name) = v.get("preset").and_then(Value::as_str) {
        return match preset(name)?.source {
            PresetSource::Family { family, .. } => Ok(family),
            _ => Err(Failure::Input(anyhow!("preset {name} is not a parametric family"))),
        };
    }
    field(v, "family")
}

fn sextic(v: &Value) -> Res<SexticModel> {
    let c = curve_object(v);
    if c.get("f").is_some() && c.get("P").is_none() {
        return Ok(SexticModel::new(field(c, "f")?)?);
    }
    Ok(SexticModel::new(decomposition(v)?.f)?)
}

fn pair(v: &Value, key: &str) -> Res<(Rational, Rational)> {
    let o: Value = field(v, key)?;
    Ok((field(&o, "a")?, field(&o, "b")?))
}

enum Output {
    Json(Value),
    Lines(String),
}

fn run(cli: Cli) -> Res<Output> {
    let flags = &cli.flags;
    let out = match cli.command {
        Command::VerifyDecomposition { json } => {
            let d = decomposition(&read_input(flags, json)?)?;
            json!({ "decomposition": d, "separable": true, "genus": 2 })
        }
        Command::BuildCover { json } => serde_json::to_value(build_cover(&decomposition(&read_input(flags, json)?)?))?,
        Command::EllipticQuotient { json } => {
            let v = read_input(flags, json)?;
            let d = decomposition(&v)?;
            let cubic = elliptic_quotient(&d)?;
            match marked_x(&v)? {
                Some(x) => json!({ "quotient": cubic, "fiber": infinity_fiber(&d, &x)? }),
                None => json!({ "quotient": cubic }),
            }
        }
        Command::SigmaTorsion { json } => {
            let v = read_input(flags, json)?;
            let input = SigmaInput { curve: decomposition(&v)?, marked_x: marked_x(&v)?.unwrap_or_default() };
            let opts = sigma_options(flags, SigmaOptions::default().search_height);
            serde_json::to_value(sigma_torsion(&input.curve, &input.marked_x, &opts)?)?
        }
        Command::Scan { json } => {
            let v = read_input(flags, json)?;
            let fam = family(&v)?;
            let mut grid: GridSpec = field(&v, "grid")?;
            if flags.seed != 0 {
                grid.seed = flags.seed;
            }
            let opts = ScanOptions { sigma: sigma_options(flags, ScanOptions::default().sigma.search_height), jobs: flags.jobs };
            let report = scan(&fam, &grid, &opts)?;
            return Ok(Output::Lines(report.to_json_lines().map_err(internal)?));
        }
        Command::IdentityCheck { json } => {
            let v = read_input(flags, json)?;
            let fam = family(&v)?;
            let claim: TorsionClaim = field(&v, "claim")?;
            let defaults = IdentityOptions::default();
            let opts = IdentityOptions {
                trials: flags.trials,
                seed: flags.seed,
                height: v.get("height").and_then(Value::as_u64).unwrap_or(defaults.height),
                sigma: sigma_options(flags, defaults.sigma.search_height),
                ..defaults
            };
            serde_json::to_value(identity_check(&fam, claim, &opts)?)?
        }
        Command::UniversalCheck { probe, step } => {
            let u: UniversalFamily = match &flags.input {
                Some(_) => serde_json::from_value(read_input(flags, None)?)?,
                None => UniversalFamily::default(),
            };
            let check = universal_family_check(&u);
            match probe {
                Some(p) => {
                    let parts: Vec<Rational> =
                        p.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>().map_err(|e| anyhow!("--probe: {e}"))?;
                    let sample: [Rational; 3] = parts.try_into().map_err(|_| anyhow!("--probe needs three values r,s,t"))?;
                    json!({ "check": check, "probe": jacobian_rank_probe(&u, &sample, step)? })
                }
                None => serde_json::to_value(check)?,
            }
        }
        Command::Trinomial { n, r, s, m, a, b } => {
            let a: Rational = a.parse().map_err(|e| anyhow!("--a: {e}"))?;
            let b: Rational = b.parse().map_err(|e| anyhow!("--b: {e}"))?;
            let eq = TrinomialEq::new(n, r, s, m, a, b)?;
            json!({ "equation": eq, "class": classify(&eq), "substitution_check": substitution_check(&eq) })
        }
        Command::ConvertModel { json } => {
            let v = read_input(flags, json)?;
            let model = if v.get("quartic").is_some() {
                let q: QuarticNormalForm = field(&v, "quartic")?;
                quartic_to_sextic(&q)?
            } else if v.get("intro").is_some() {
                let (a, b) = pair(&v, "intro")?;
                intro_family_sextic(&a, &b)?
            } else if v.get("body").is_some() {
                let (a, b) = pair(&v, "body")?;
                body_family_sextic(&a, &b)?
            } else if v.get("audit").is_some() {
                let f: MultiPoly = field(&v, "audit")?;
                return Ok(Output::Json(serde_json::to_value(quartic_singularity_audit(&f))?));
            } else {
                return Err(Failure::Input(anyhow!("expected one of \"quartic\", \"intro\", \"body\", \"audit\"")));
            };
            let found = flags
                .search_height
                .and_then(|h| search_decomposition(&model.f, h as i64, Duration::from_secs(10)));
            json!({ "sextic": model, "decomposition": found })
        }
        Command::Invariants { json } => serde_json::to_value(igusa_clebsch(&sextic(&read_input(flags, json)?)?)?)?,
        Command::Preset { name } => match name {
            Some(n) => serde_json::to_value(preset(&n)?)?,
            None => json!(PRESET_NAMES),
        },
    };
    Ok(Output::Json(out))
}

fn emit(flags_output: Option<PathBuf>, out: Output) -> Res<()> {
    let text = match out {
        Output::Json(v) => serde_json::to_string_pretty(&v).map_err(internal)? + "\n",
        Output::Lines(s) => s,
    };
    match flags_output {
        Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display())).map_err(internal),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(internal),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.flags.output.clone();
    match run(cli).and_then(|o| emit(output, o)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(1)
        }
    }
}
