//! Operation-count scaling measurements for the commutator solver.
//!
//! The solver's cost model is checked empirically: [`scaling_in_degree`]
//! re-solves a fixed input word in `S_n` for growing `n`, and
//! [`scaling_in_length`] solves random words of growing length at fixed
//! degree. Both report the abstract operation count kept by [`crate::ops`]
//! alongside wall time, and [`fit_loglog_slope`] turns the counts into a
//! fitted power-law exponent — the quantity the scaling claims (quadratic in
//! `n`, linear in word length) are stated in terms of. Wall time is reported
//! for context only; it is too noisy to fit.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::commutator::scpp_solve;
use crate::error::{Error, Result};
use crate::ops;
use crate::perm::{word_to_permutation, GenWord};

/// One measured configuration of a scaling run.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingRow {
    /// The varied parameter: the degree `n`, or the word length `k`.
    pub param: u64,
    /// Length of the input word actually solved.
    pub input_len: usize,
    /// Abstract operations per repetition (averaged when `reps > 1`).
    pub ops: u64,
    /// Wall time per repetition in milliseconds (averaged).
    pub millis: f64,
}

/// A scaling table plus the fitted log–log slope of `ops` against `param`.
///
/// `slope` is `None` when fewer than two distinct parameter values were
/// measured, in which case only the table is meaningful.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingReport {
    /// Name of the varied parameter (`"n"` or `"k"`).
    pub parameter: &'static str,
    /// One row per measured parameter value.
    pub rows: Vec<ScalingRow>,
    /// Least-squares slope of `ln ops` against `ln param`, if defined.
    pub slope: Option<f64>,
}

impl ScalingReport {
    /// Renders the table followed by the slope line, ready for a terminal.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:>8} {:>10} {:>14} {:>12}\n",
            self.parameter, "input_len", "ops", "millis"
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "{:>8} {:>10} {:>14} {:>12.3}\n",
                row.param, row.input_len, row.ops, row.millis
            ));
        }
        match self.slope {
            Some(s) => out.push_str(&format!("fitted log-log slope: {s:.3}\n")),
            None => out.push_str("fitted log-log slope: undefined (need two distinct values)\n"),
        }
        out
    }
}

/// Least-squares slope of `ln y` against `ln x`.
///
/// Returns `None` unless there are at least two points with distinct `x`.
/// All coordinates must be positive, since both axes are logarithmic.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = logs.iter().map(|(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    Some(sxy / sxx)
}

fn fit_rows(rows: &[ScalingRow]) -> Option<f64> {
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.param as f64, r.ops as f64))
        .collect();
    fit_loglog_slope(&points)
}

/// Measures `body` once: returns its abstract operation count and duration.
fn measured<T>(body: impl FnOnce() -> Result<T>) -> Result<(u64, f64)> {
    ops::reset();
    let start = Instant::now();
    body()?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    Ok((ops::total(), millis))
}

fn averaged(reps: u32, mut body: impl FnMut() -> Result<(u64, f64)>) -> Result<(u64, f64)> {
    let reps = reps.max(1);
    let mut ops_sum = 0u64;
    let mut millis_sum = 0.0;
    for _ in 0..reps {
        let (o, m) = body()?;
        ops_sum += o;
        millis_sum += m;
    }
    Ok((ops_sum / u64::from(reps), millis_sum / f64::from(reps)))
}

/// Solves the same input word in `S_n` for each degree in `degrees`.
///
/// The word is evaluated once per degree outside the measured region, so the
/// counts isolate [`scpp_solve`] itself; this is the regime in which the
/// solver is expected to scale quadratically with `n`. Every degree must
/// exceed the largest letter of `word_letters`, and the word must have even
/// length so the evaluated permutation is even at every degree.
pub fn scaling_in_degree(
    degrees: &[usize],
    word_letters: &[usize],
    reps: u32,
) -> Result<ScalingReport> {
    if !word_letters.len().is_multiple_of(2) {
        return Err(Error::InvalidInput(
            "the fixed word must have even length so it evaluates to an even permutation".into(),
        ));
    }
    let mut rows = Vec::new();
    for &n in degrees {
        let word = GenWord::new(n, word_letters.to_vec())?;
        let sigma = word_to_permutation(&word);
        let (ops, millis) = averaged(reps, || measured(|| scpp_solve(&sigma)))?;
        rows.push(ScalingRow {
            param: n as u64,
            input_len: word.len(),
            ops,
            millis,
        });
    }
    let slope = fit_rows(&rows);
    Ok(ScalingReport {
        parameter: "n",
        rows,
        slope,
    })
}

/// Solves random words of each length in `lengths` at fixed degree `n`.
///
/// Letters are drawn uniformly and the measured region covers evaluating the
/// word plus solving, since in this regime the input word itself is the
/// growing quantity; the expected scaling is linear in the length. Lengths
/// must be even (a word's permutation parity is its length parity) and the
/// generator is seeded, so runs are reproducible.
pub fn scaling_in_length(
    n: usize,
    lengths: &[usize],
    reps: u32,
    seed: u64,
) -> Result<ScalingReport> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "length scaling needs degree at least 2".into(),
        ));
    }
    if let Some(&odd) = lengths.iter().find(|&&k| k % 2 != 0) {
        return Err(Error::InvalidInput(format!(
            "length {odd} is odd; odd words evaluate to odd permutations"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for &k in lengths {
        let letters: Vec<usize> = (0..k).map(|_| rng.gen_range(1..n)).collect();
        let word = GenWord::new(n, letters)?;
        let (ops, millis) = averaged(reps, || {
            measured(|| scpp_solve(&word_to_permutation(&word)))
        })?;
        rows.push(ScalingRow {
            param: k as u64,
            input_len: word.len(),
            ops,
            millis,
        });
    }
    let slope = fit_rows(&rows);
    Ok(ScalingReport {
        parameter: "k",
        rows,
        slope,
    })
}
