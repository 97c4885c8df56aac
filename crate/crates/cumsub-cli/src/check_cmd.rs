//! The `check` subcommand: named checkers over one set or a sampled family.
//!
//! Checkers with preconditions skip inapplicable sampled sets (counted in the
//! report) but reject an explicit `--set` that does not qualify.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::json;

use cumsub::analysis::{
    check_dominant_equality, check_first_player_advantage, check_main_theorem,
    check_tiebreak_monotonicity, detect_periodicity, discrepancy_table, first_discrepancy,
    has_consecutive_ratio, predicted_first_discrepancy_2action,
    predicted_first_discrepancy_additive, sample_random_sets, Criterion, PeriodicityMode,
    SAMPLE_ALGORITHM,
};
use cumsub::Convention::{AvA, FvF};
use cumsub::{solve, zero_sum_solve, Convention, SubtractionSet};

use crate::render::{emit, Meta};
use crate::{CliError, Outcome};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckerName {
    /// The mover's final pocket is never smaller than the opponent's
    FirstPlayer,
    /// The eight relations tying one-player deviations together
    Monotonicity,
    /// Neither player does better under AvA than under FvF
    MainTheorem,
    /// Dominant pairs give identical outcomes under all four conventions
    DominantEquality,
    /// Pairs with ratio (k+1)/k never diverge between FvF and AvA
    Ratio,
    /// Closed-form first-discrepancy heap for non-dominant pairs
    FirstFormula,
    /// Closed-form first-discrepancy heap for additive triples
    AdditiveFormula,
    /// Zero-sum score coincides with the AvA spread
    ZsAva,
    /// Zero-sum scores repeat with period dividing twice the largest action
    Periodicity,
}

impl CheckerName {
    fn as_str(self) -> &'static str {
        match self {
            CheckerName::FirstPlayer => "first-player",
            CheckerName::Monotonicity => "monotonicity",
            CheckerName::MainTheorem => "main-theorem",
            CheckerName::DominantEquality => "dominant-equality",
            CheckerName::Ratio => "ratio",
            CheckerName::FirstFormula => "first-formula",
            CheckerName::AdditiveFormula => "additive-formula",
            CheckerName::ZsAva => "zs-ava",
            CheckerName::Periodicity => "periodicity",
        }
    }
}

struct Violation {
    set: String,
    heap: Option<u64>,
    detail: String,
}

enum SetOutcome {
    Ran {
        violations: Vec<(Option<u64>, String)>,
        warnings: Vec<String>,
    },
    Skipped(String),
}

fn ran(violations: Vec<(Option<u64>, String)>) -> SetOutcome {
    SetOutcome::Ran {
        violations,
        warnings: Vec::new(),
    }
}

pub fn run(
    name: CheckerName,
    set: Option<SubtractionSet>,
    sample: Option<String>,
    hmax: u64,
    seed: Option<u64>,
    json_output: bool,
    out: Option<PathBuf>,
) -> Result<Outcome, CliError> {
    let explicit = set.is_some();
    let sets = gather_sets(set, sample.as_deref(), seed)?;

    let outcomes: Vec<(SubtractionSet, SetOutcome)> = sets
        .into_par_iter()
        .map(|s| {
            let outcome = check_one(name, &s, hmax);
            (s, outcome)
        })
        .collect();

    let mut violations: Vec<Violation> = Vec::new();
    let mut warnings: Vec<String> = Vec::new();
    let mut skipped = 0usize;
    let mut checked = 0usize;
    for (s, outcome) in &outcomes {
        match outcome {
            SetOutcome::Skipped(reason) => {
                if explicit {
                    return Err(CliError::Usage(format!(
                        "checker {} does not apply to {s}: {reason}",
                        name.as_str()
                    )));
                }
                skipped += 1;
            }
            SetOutcome::Ran {
                violations: v,
                warnings: w,
            } => {
                checked += 1;
                violations.extend(v.iter().map(|(heap, detail)| Violation {
                    set: s.to_string(),
                    heap: *heap,
                    detail: detail.clone(),
                }));
                warnings.extend(w.iter().map(|w| format!("{s}: {w}")));
            }
        }
    }

    let mut meta = Meta::new()
        .with("checker", name.as_str())
        .with("hmax", hmax);
    if let Some(seed) = seed {
        meta = meta.with("seed", seed).with("algorithm", SAMPLE_ALGORITHM);
    }
    if let Some(spec) = &sample {
        meta = meta.with("sample", spec);
    }

    let rendered = if json_output {
        let doc = json!({
            "meta": meta.json(),
            "checker": name.as_str(),
            "sets_checked": checked,
            "skipped": skipped,
            "violations": violations.iter().map(|v| json!({
                "set": v.set, "heap": v.heap, "detail": v.detail,
            })).collect::<Vec<_>>(),
            "warnings": warnings,
            "clean": violations.is_empty(),
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
    } else {
        let mut text = meta.comment_line();
        text.push_str(&format!(
            "checker {}: {} violations across {checked} set(s), {skipped} skipped\n",
            name.as_str(),
            violations.len()
        ));
        for v in &violations {
            match v.heap {
                Some(h) => text.push_str(&format!("{} h={h}: {}\n", v.set, v.detail)),
                None => text.push_str(&format!("{}: {}\n", v.set, v.detail)),
            }
        }
        for w in &warnings {
            text.push_str(&format!("warning: {w}\n"));
        }
        text
    };
    emit(&out, &rendered)?;

    if violations.is_empty() {
        Ok(Outcome::Clean)
    } else {
        Ok(Outcome::Violations)
    }
}

fn gather_sets(
    set: Option<SubtractionSet>,
    sample: Option<&str>,
    seed: Option<u64>,
) -> Result<Vec<SubtractionSet>, CliError> {
    match (set, sample) {
        (Some(s), None) => Ok(vec![s]),
        (None, Some(spec)) => {
            let spec = parse_sample_spec(spec).map_err(CliError::Usage)?;
            let seed = seed.ok_or_else(|| {
                CliError::Usage("--sample needs --seed for reproducibility".into())
            })?;
            let mut sets = Vec::new();
            for size in spec.sizes {
                sets.extend(
                    sample_random_sets(size, spec.max, spec.count, seed)
                        .map_err(|e| CliError::Usage(e.to_string()))?,
                );
            }
            Ok(sets)
        }
        (None, None) => Err(CliError::Usage("pass --set or --sample".into())),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}

struct SampleSpec {
    sizes: RangeInclusive<usize>,
    count: usize,
    max: u64,
}

/// Parses `sizes=3..10,count=200,max=25` (sizes may be a single integer).
fn parse_sample_spec(spec: &str) -> Result<SampleSpec, String> {
    let mut sizes = None;
    let mut count = None;
    let mut max = None;
    for item in spec.split(',') {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{item}`"))?;
        match key.trim() {
            "sizes" => {
                let value = value.trim();
                sizes = Some(match value.split_once("..") {
                    Some((lo, hi)) => {
                        let lo: usize = lo.parse().map_err(|_| format!("bad size `{lo}`"))?;
                        let hi: usize = hi.parse().map_err(|_| format!("bad size `{hi}`"))?;
                        if lo > hi {
                            return Err(format!("empty size range {lo}..{hi}"));
                        }
                        lo..=hi
                    }
                    None => {
                        let n: usize = value.parse().map_err(|_| format!("bad size `{value}`"))?;
                        n..=n
                    }
                });
            }
            "count" => {
                count = Some(value.trim().parse().map_err(|_| format!("bad count `{value}`"))?)
            }
            "max" => max = Some(value.trim().parse().map_err(|_| format!("bad max `{value}`"))?),
            other => return Err(format!("unknown sample key `{other}`")),
        }
    }
    Ok(SampleSpec {
        sizes: sizes.ok_or("sample spec needs sizes=")?,
        count: count.ok_or("sample spec needs count=")?,
        max: max.ok_or("sample spec needs max=")?,
    })
}

fn check_one(name: CheckerName, s: &SubtractionSet, hmax: u64) -> SetOutcome {
    match name {
        CheckerName::FirstPlayer => {
            let mut violations = Vec::new();
            for x in Convention::ALL {
                for h in check_first_player_advantage(s, x, hmax) {
                    violations.push((Some(h), format!("{x}: second player ahead")));
                }
            }
            ran(violations)
        }
        CheckerName::Monotonicity => ran(
            check_tiebreak_monotonicity(s, hmax)
                .into_iter()
                .map(|(h, relation)| (Some(h), format!("{relation} violated")))
                .collect(),
        ),
        CheckerName::MainTheorem => ran(
            check_main_theorem(s, hmax)
                .into_iter()
                .map(|(h, player)| (Some(h), format!("player {player} better under AvA")))
                .collect(),
        ),
        CheckerName::DominantEquality => match check_dominant_equality(s, hmax) {
            Err(e) => SetOutcome::Skipped(e.to_string()),
            Ok(violations) => ran(violations
                .into_iter()
                .map(|(h, x, y)| (Some(h), format!("{x} and {y} disagree")))
                .collect()),
        },
        CheckerName::Ratio => match has_consecutive_ratio(s) {
            Err(e) => SetOutcome::Skipped(e.to_string()),
            Ok(false) => SetOutcome::Skipped("ratio s1/s2 is not (k+1)/k".into()),
            Ok(true) => {
                let records = discrepancy_table(s, FvF, AvA, hmax);
                ran(records
                    .iter()
                    .filter(|r| r.diff_of_diff != 0)
                    .map(|r| {
                        (
                            Some(r.heap),
                            format!("FvF/AvA spread discrepancy {}", r.diff_of_diff),
                        )
                    })
                    .collect())
            }
        },
        CheckerName::FirstFormula => match predicted_first_discrepancy_2action(s) {
            Err(e) => SetOutcome::Skipped(e.to_string()),
            Ok(predicted) => {
                let observed = first_discrepancy(s, FvF, AvA, hmax, Criterion::DiffOfDiff);
                formula_outcome(predicted, observed, hmax)
            }
        },
        CheckerName::AdditiveFormula => match predicted_first_discrepancy_additive(s) {
            Err(e) => SetOutcome::Skipped(e.to_string()),
            Ok(predicted) => {
                let observed = first_discrepancy(s, FvF, AvA, hmax, Criterion::DiffOfDiff);
                formula_outcome(Some(predicted), observed, hmax)
            }
        },
        CheckerName::ZsAva => {
            let table = solve(s, hmax);
            let zs = zero_sum_solve(s, hmax);
            let mut violations = Vec::new();
            for h in 0..=hmax {
                let spread = table.outcome(AvA, h).spread();
                if zs[h as usize] != spread {
                    violations.push((
                        Some(h),
                        format!("zero-sum {} vs AvA spread {spread}", zs[h as usize]),
                    ));
                }
            }
            ran(violations)
        }
        CheckerName::Periodicity => {
            let pmax = 2 * s.max_action() as usize;
            if (hmax as usize) < 2 * pmax {
                return SetOutcome::Skipped(format!(
                    "needs hmax > {} to probe periods up to {pmax}",
                    2 * pmax - 1
                ));
            }
            let zs = zero_sum_solve(s, hmax);
            let mut violations = Vec::new();
            match detect_periodicity(&zs, pmax, PeriodicityMode::Additive) {
                Some(r) if pmax.is_multiple_of(r.period) && r.additive_constant == 0 => {}
                other => violations.push((
                    None,
                    format!("zero-sum scores: expected period dividing {pmax}, got {other:?}"),
                )),
            }
            let mut warnings = Vec::new();
            let records = discrepancy_table(s, FvF, AvA, hmax);
            for (label, trace) in [
                ("d1", records.iter().map(|r| r.d1).collect::<Vec<_>>()),
                ("d2", records.iter().map(|r| r.d2).collect::<Vec<_>>()),
            ] {
                match detect_periodicity(&trace, pmax, PeriodicityMode::Additive) {
                    Some(r) if pmax.is_multiple_of(r.period) && r.additive_constant == 0 => {}
                    other => warnings.push(format!(
                        "{label} trace: no period dividing {pmax} within hmax ({other:?})"
                    )),
                }
            }
            SetOutcome::Ran {
                violations,
                warnings,
            }
        }
    }
}

fn formula_outcome(predicted: Option<u64>, observed: Option<u64>, hmax: u64) -> SetOutcome {
    match (predicted, observed) {
        (Some(x), Some(h)) if x == h => ran(Vec::new()),
        // a prediction past the horizon is consistent with observing nothing
        (Some(x), None) if x > hmax => ran(Vec::new()),
        _ => ran(vec![(
            observed,
            format!("predicted first discrepancy {predicted:?}, observed {observed:?}"),
        )]),
    }
}
