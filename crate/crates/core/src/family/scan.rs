use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{grid_points, specialize, FamilyError, GridSpec, ParamFamily};
use crate::arith::Rational;
use crate::elliptic::{sigma_torsion, InconclusiveReason, SigmaOptions, SigmaReport, Verdict};
use crate::genus2::Genus2Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub sigma: SigmaOptions,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        // Grid members are small; a short search keeps failures cheap.
        ScanOptions { sigma: SigmaOptions { search_height: 50, ..SigmaOptions::default() }, jobs: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    ConstraintViolated,
    DegenerateCurve,
    WeierstrassMarkedPoint,
    IrreducibleFiber,
    SingularQuotient,
    NoRationalPoint,
    MapFailure,
}

impl From<&FamilyError> for SkipReason {
    fn from(e: &FamilyError) -> Self {
        match e {
            FamilyError::Constraint(_) => SkipReason::ConstraintViolated,
            FamilyError::Curve(Genus2Error::SpecialPoint(_)) => SkipReason::WeierstrassMarkedPoint,
            FamilyError::Cover(_) => SkipReason::MapFailure,
            _ => SkipReason::DegenerateCurve,
        }
    }
}

impl From<InconclusiveReason> for SkipReason {
    fn from(r: InconclusiveReason) -> Self {
        match r {
            InconclusiveReason::IrreducibleFiber => SkipReason::IrreducibleFiber,
            InconclusiveReason::SingularQuotient => SkipReason::SingularQuotient,
            InconclusiveReason::NoRationalPoint => SkipReason::NoRationalPoint,
            InconclusiveReason::MapFailure => SkipReason::MapFailure,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ScanOutcome {
    Report { report: Box<SigmaReport> },
    Skipped { reason: SkipReason, detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub index: usize,
    /// Full parameter vector (free values if it could not be completed).
    pub params: Vec<Rational>,
    pub outcome: ScanOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub family: String,
    pub seed: u64,
    pub grid_size: usize,
    pub valid: usize,
    pub skipped: BTreeMap<SkipReason, usize>,
    pub verdicts: BTreeMap<String, usize>,
    /// Counts of (order of σ₁, order of σ₂), "inf" for non-torsion.
    pub order_pairs: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

impl ScanReport {
    /// One JSON object per grid point, then a summary record.
    pub fn to_json_lines(&self) -> Result<String, serde_json::Error> {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&serde_json::to_string(row)?);
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&serde_json::json!({ "summary": self.summary }))?);
        out.push('\n');
        Ok(out)
    }

    /// Parses the output of `to_json_lines`.
    pub fn from_json_lines(s: &str) -> Result<Self, serde_json::Error> {
        #[derive(Deserialize)]
        struct Footer {
            summary: ScanSummary,
        }
        let lines: Vec<&str> = s.lines().filter(|l| !l.trim().is_empty()).collect();
        let (last, body) = lines.split_last().ok_or_else(|| serde::de::Error::custom("empty scan output"))?;
        let rows = body.iter().map(|l| serde_json::from_str(l)).collect::<Result<_, _>>()?;
        Ok(ScanReport { rows, summary: serde_json::from_str::<Footer>(last)?.summary })
    }
}

fn evaluate(fam: &ParamFamily, index: usize, free: &[Rational], opts: &SigmaOptions) -> ScanRow {
    let skip = |params: Vec<Rational>, reason, detail: String| ScanRow {
        index,
        params,
        outcome: ScanOutcome::Skipped { reason, detail },
    };
    let t = match fam.complete(free) {
        Ok(t) => t,
        Err(e) => return skip(free.to_vec(), SkipReason::from(&e), e.to_string()),
    };
    let spec = match specialize(fam, &t) {
        Ok(s) => s,
        Err(e) => return skip(t, SkipReason::from(&e), e.to_string()),
    };
    match sigma_torsion(&spec.curve, &spec.marked.x0, opts) {
        Ok(r) => match r.reason {
            Some(reason) => skip(t, reason.into(), r.basis),
            None => ScanRow { index, params: t, outcome: ScanOutcome::Report { report: Box::new(r) } },
        },
        Err(e) => skip(t, SkipReason::MapFailure, e.to_string()),
    }
}

fn order_label(o: Option<u32>) -> String {
    o.map_or("inf".into(), |n| n.to_string())
}

fn summarize(fam: &ParamFamily, grid: &GridSpec, rows: Vec<ScanRow>) -> ScanReport {
    let mut s = ScanSummary {
        family: fam.name.clone(),
        seed: grid.seed,
        grid_size: rows.len(),
        valid: 0,
        skipped: BTreeMap::new(),
        verdicts: BTreeMap::new(),
        order_pairs: BTreeMap::new(),
    };
    for row in &rows {
        match &row.outcome {
            ScanOutcome::Report { report } => {
                s.valid += 1;
                *s.verdicts.entry(format!("{:?}", report.verdict)).or_default() += 1;
                let [a, b] = report.sigma_orders;
                *s.order_pairs.entry(format!("({}, {})", order_label(a), order_label(b))).or_default() += 1;
            }
            ScanOutcome::Skipped { reason, .. } => *s.skipped.entry(*reason).or_default() += 1,
        }
    }
    ScanReport { rows, summary: s }
}

/// Runs the σ-torsion pipeline at every grid point, one after another.
pub fn scan_sequential(fam: &ParamFamily, grid: &GridSpec, opts: &ScanOptions) -> Result<ScanReport, FamilyError> {
    let points = grid_points(grid, fam.free_params().len())?;
    let rows = points.iter().enumerate().map(|(i, t)| evaluate(fam, i, t, &opts.sigma)).collect();
    Ok(summarize(fam, grid, rows))
}

/// Same result as `scan_sequential`, with grid points evaluated in parallel.
#[cfg(feature = "parallel")]
pub fn scan_parallel(fam: &ParamFamily, grid: &GridSpec, opts: &ScanOptions) -> Result<ScanReport, FamilyError> {
    use rayon::prelude::*;
    let points = grid_points(grid, fam.free_params().len())?;
    let run = || points.par_iter().enumerate().map(|(i, t)| evaluate(fam, i, t, &opts.sigma)).collect::<Vec<_>>();
    let rows = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| FamilyError::Grid(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    Ok(summarize(fam, grid, rows))
}

/// Scans a grid: parallel when the `parallel` feature is on.
pub fn scan(fam: &ParamFamily, grid: &GridSpec, opts: &ScanOptions) -> Result<ScanReport, FamilyError> {
    #[cfg(feature = "parallel")]
    {
        scan_parallel(fam, grid, opts)
    }
    #[cfg(not(feature = "parallel"))]
    {
        scan_sequential(fam, grid, opts)
    }
}

/// Whether every BiluApplicable row still certifies when re-run on its own.
pub fn recheck_certificates(report: &ScanReport, opts: &SigmaOptions) -> bool {
    report.rows.iter().all(|row| match &row.outcome {
        ScanOutcome::Report { report } if report.verdict == Verdict::BiluApplicable => {
            sigma_torsion(&report.curve, &report.marked_x, opts).is_ok_and(|r| r == **report)
        }
        _ => true,
    })
}
