//! Timing harness and log-log scaling fit.

use std::fmt::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::baselines::cubic_solve;
use crate::generators::{GenMode, GenSpec};
use crate::solver::solve;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Solve,
    Cubic,
}

impl std::str::FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "solve" => Ok(Algo::Solve),
            "cubic" => Ok(Algo::Cubic),
            other => Err(format!("unknown algorithm {other:?} (solve|cubic)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub rep: usize,
    pub seed: u64,
    pub elapsed_ns: u128,
    pub value: f64,
}

#[derive(Debug, Clone)]
pub struct BenchResult {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of log(median time) against log(n); needs two sizes.
    pub slope: Option<f64>,
}

impl BenchResult {
    /// CSV with a header line and, when available, a trailing `# slope=` comment.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,rep,seed,elapsed_ns,value\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{}", r.n, r.rep, r.seed, r.elapsed_ns, r.value);
        }
        if let Some(s) = self.slope {
            let _ = writeln!(out, "# slope={s:.4}");
        }
        out
    }

    pub fn medians(&self) -> Vec<(usize, f64)> {
        let mut sizes: Vec<usize> = self.rows.iter().map(|r| r.n).collect();
        sizes.dedup();
        sizes
            .into_iter()
            .map(|n| {
                let times: Vec<f64> = self
                    .rows
                    .iter()
                    .filter(|r| r.n == n)
                    .map(|r| r.elapsed_ns as f64)
                    .collect();
                (n, median(times))
            })
            .collect()
    }
}

/// Times `algo` on `reps` instances per size; repetition `r` uses seed `seed + r`.
/// Only the solve call is timed, single-threaded.
pub fn run_bench(sizes: &[usize], mode: GenMode, seed: u64, reps: usize, algo: Algo) -> BenchResult {
    let mut rows = Vec::with_capacity(sizes.len() * reps);
    for &n in sizes {
        for rep in 0..reps {
            let s = seed.wrapping_add(rep as u64);
            let points = GenSpec::new(n, mode, s).generate();
            let t = Instant::now();
            let value = match algo {
                Algo::Solve => solve(&points).value,
                Algo::Cubic => cubic_solve(&points).value,
            };
            let elapsed_ns = t.elapsed().as_nanos();
            rows.push(BenchRow {
                n,
                rep,
                seed: s,
                elapsed_ns,
                value,
            });
        }
    }
    let mut result = BenchResult { rows, slope: None };
    let medians = result.medians();
    if medians.len() >= 2 {
        let xs: Vec<f64> = medians.iter().map(|&(n, _)| (n as f64).ln()).collect();
        let ys: Vec<f64> = medians.iter().map(|&(_, t)| t.max(1.0).ln()).collect();
        result.slope = Some(ls_slope(&xs, &ys));
    }
    result
}

pub fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        0.5 * (v[m - 1] + v[m])
    }
}

/// Ordinary least-squares slope of `ys` on `xs`.
pub fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
