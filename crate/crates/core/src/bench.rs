//! Cost benchmarks over random instance families.
//!
//! `matching-hk` runs on bipartite `G(n, n, 1/2)` with left side `0..n`;
//! every other protocol on `G(n, p)` with `p = 2 ln n / n`. Each trial gets
//! its own derived seed, used for the graph, the edge split and the run.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use crate::comm::{ceil_log2, split_edges, SplitMode};
use crate::error::{Error, Result};
use crate::graph::EdgePartition;
use crate::protocols::{run_protocol, ProtocolId};
use crate::random::{bipartite_gnp, derive_seed, gnp, rng_from_seed};

pub const CSV_HEADER: &str = "protocol,n,trial,seed,output,bits,rounds,ms";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub protocol: ProtocolId,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub output: String,
    pub bits: usize,
    pub rounds: usize,
    pub ms: f64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{:.3}",
            self.protocol,
            self.n,
            self.trial,
            self.seed,
            self.output,
            self.bits,
            self.rounds,
            self.ms
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchSummary {
    pub records: Vec<BenchRecord>,
    /// Least-squares slope of `ln(mean bits)` against `ln n`.
    pub slope: f64,
    /// `max bits / (n^1.5 ⌈log₂ 2n⌉)`; matching only.
    pub hk_constant: Option<f64>,
}

impl BenchSummary {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        writeln!(out, "# slope={:.4}", self.slope).unwrap();
        if let Some(c) = self.hk_constant {
            writeln!(out, "# C={c:.4}").unwrap();
        }
        out
    }

    pub fn mean_bits(&self, n: usize) -> Option<f64> {
        let bits: Vec<usize> = self
            .records
            .iter()
            .filter(|r| r.n == n)
            .map(|r| r.bits)
            .collect();
        (!bits.is_empty()).then(|| bits.iter().sum::<usize>() as f64 / bits.len() as f64)
    }
}

/// The benchmark instance for one trial, with the declared left side for
/// matching.
pub fn bench_instance(
    protocol: ProtocolId,
    n: usize,
    seed: u64,
) -> Result<(EdgePartition, Option<Vec<usize>>)> {
    let mut rng = rng_from_seed(seed);
    if protocol == ProtocolId::MatchingHk {
        let g = bipartite_gnp(n, n, 0.5, &mut rng);
        let inst = split_edges(&g, &SplitMode::Random, derive_seed(seed, 1))?;
        return Ok((inst, Some((0..n).collect())));
    }
    let p = (2.0 * (n as f64).ln() / n as f64).min(1.0);
    let g = gnp(n, p, &mut rng);
    Ok((
        split_edges(&g, &SplitMode::Random, derive_seed(seed, 1))?,
        None,
    ))
}

/// `C` for one matching run: `bits / (n^1.5 ⌈log₂ 2n⌉)` with `n` per side.
pub fn hk_cost_ratio(bits: usize, n: usize) -> f64 {
    bits as f64 / ((n as f64).powf(1.5) * ceil_log2(2 * n).max(1) as f64)
}

pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    if points.len() < 2 {
        return f64::NAN;
    }
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

/// Runs `trials` instances per size. With `timed = false` the `ms` column is
/// 0 so the CSV is byte-reproducible.
pub fn run_bench(
    protocol: ProtocolId,
    sizes: &[usize],
    trials: usize,
    seed: u64,
    timed: bool,
) -> Result<BenchSummary> {
    if let Some(&n) = sizes.iter().find(|&&n| n < 4) {
        return Err(Error::InvalidParameter(format!(
            "bench sizes must be >= 4, got {n}"
        )));
    }
    let jobs: Vec<(usize, usize)> = sizes
        .iter()
        .enumerate()
        .flat_map(|(si, _)| (0..trials).map(move |t| (si, t)))
        .collect();
    let records = jobs
        .par_iter()
        .map(|&(si, trial)| {
            let n = sizes[si];
            let trial_seed = derive_seed(derive_seed(seed, si as u64), trial as u64);
            let (inst, left) = bench_instance(protocol, n, trial_seed)?;
            let start = Instant::now();
            let out = run_protocol(protocol, &inst, trial_seed, left.as_deref())?;
            let ms = if timed {
                start.elapsed().as_secs_f64() * 1e3
            } else {
                0.0
            };
            Ok(BenchRecord {
                protocol,
                n,
                trial,
                seed: trial_seed,
                output: out.output.to_string(),
                bits: out.bits(),
                rounds: out.rounds(),
                ms,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut summary = BenchSummary {
        records,
        slope: f64::NAN,
        hk_constant: None,
    };
    let points: Vec<(f64, f64)> = sizes
        .iter()
        .filter_map(|&n| summary.mean_bits(n).map(|m| (n as f64, m)))
        .collect();
    summary.slope = loglog_slope(&points);
    if protocol == ProtocolId::MatchingHk {
        summary.hk_constant = summary
            .records
            .iter()
            .map(|r| hk_cost_ratio(r.bits, r.n))
            .fold(None, |acc: Option<f64>, c| {
                Some(acc.map_or(c, |a| a.max(c)))
            });
    }
    Ok(summary)
}
