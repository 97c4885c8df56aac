//! Eventual (additive) periodicity detection for integer sequences such as
//! zero-sum score tables and discrepancy traces.

/// Whether the repeating tail must match exactly or may shift by a constant
/// each period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodicityMode {
    /// `f(h + p) = f(h)` beyond the preperiod.
    Pure,
    /// `f(h + p) = f(h) + c` beyond the preperiod.
    Additive,
}

/// A verified eventual periodicity: `f(h + period) = f(h) + additive_constant`
/// for all `preperiod <= h <= verified_up_to - period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodicityReport {
    pub preperiod: usize,
    pub period: usize,
    pub additive_constant: i64,
    /// Last sequence index covered by the verification.
    pub verified_up_to: usize,
}

/// Finds the smallest period `p <= pmax` (smallest preperiod for that `p`)
/// under which the sequence is eventually periodic, or `None`.
///
/// A candidate only counts when its periodic tail covers at least the last
/// `2 * pmax` entries; accidental agreement on a shorter suffix is not
/// evidence. Every report is re-validated over the full claimed range before
/// being returned.
///
/// # Panics
/// The sequence must be longer than `2 * pmax` and `pmax` at least 1.
pub fn detect_periodicity(
    f: &[i64],
    pmax: usize,
    mode: PeriodicityMode,
) -> Option<PeriodicityReport> {
    assert!(pmax >= 1, "pmax must be positive");
    assert!(
        f.len() > 2 * pmax,
        "sequence of length {} is too short to probe periods up to {pmax}",
        f.len()
    );
    let len = f.len();
    for period in 1..=pmax {
        let constant = match mode {
            PeriodicityMode::Pure => 0,
            PeriodicityMode::Additive => f[len - 1] - f[len - 1 - period],
        };
        // scan down from the end: the last mismatch pins the preperiod
        let mut preperiod = 0;
        for h in (0..len - period).rev() {
            if f[h + period] - f[h] != constant {
                preperiod = h + 1;
                break;
            }
        }
        if preperiod + 2 * pmax > len {
            continue; // verified window too short to trust
        }
        let report = PeriodicityReport {
            preperiod,
            period,
            additive_constant: constant,
            verified_up_to: len - 1,
        };
        if revalidate(f, &report) {
            return Some(report);
        }
    }
    None
}

fn revalidate(f: &[i64], report: &PeriodicityReport) -> bool {
    (report.preperiod..f.len() - report.period)
        .all(|h| f[h + report.period] - f[h] == report.additive_constant)
}
