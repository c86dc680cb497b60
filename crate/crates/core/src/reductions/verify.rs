use rayon::prelude::*;

use super::{GadgetGraph, GadgetInstance, MatchVariant, ReductionKind};
use crate::algo::linalg::det_integer;
use crate::algo::matching::has_perfect_matching_exact;
use crate::algo::{connected_components, is_connected, is_eulerian};
use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::random::{derive_seed, rng_from_seed};

/// Exhaustive verification is refused above `2^20` inputs.
pub const EXHAUSTIVE_LIMIT_BITS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    Sample(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub kind: ReductionKind,
    pub variant: Option<MatchVariant>,
    pub n: usize,
    pub cases: usize,
    pub mismatches: usize,
    pub seed: u64,
    /// Inputs and reason for the lowest-indexed failing case.
    pub first_failure: Option<String>,
}

impl VerifyReport {
    pub const CSV_HEADER: &'static str = "kind,n,cases,mismatches,seed";

    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    pub fn label(&self) -> String {
        match self.variant {
            Some(v) => format!("{}:{}", self.kind, v.name()),
            None => self.kind.to_string(),
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.label(),
            self.n,
            self.cases,
            self.mismatches,
            self.seed
        )
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} n={}: {} cases, {} mismatches",
            self.label(),
            self.n,
            self.cases,
            self.mismatches
        )?;
        if let Some(w) = &self.first_failure {
            write!(f, " (first: {w})")?;
        }
        Ok(())
    }
}

/// Builds every (or `samples` random) input at size `n` and checks the
/// property computed by the oracle against the value the construction claims,
/// plus its structural invariants. `ip-match` yields one report per variant.
pub fn verify_reduction(
    kind: ReductionKind,
    n: usize,
    mode: VerifyMode,
    seed: u64,
) -> Result<Vec<VerifyReport>> {
    let bits = kind.input_bits(n);
    let cases = match mode {
        VerifyMode::Exhaustive => {
            if bits > EXHAUSTIVE_LIMIT_BITS {
                return Err(Error::Infeasible { bits: bits as u32 });
            }
            1usize << bits
        }
        VerifyMode::Sample(k) => k,
    };
    let variants: Vec<Option<MatchVariant>> = match kind {
        ReductionKind::IpMatch => vec![Some(MatchVariant::Overlap), Some(MatchVariant::Disjoint)],
        _ => vec![None],
    };
    // surface parameter errors once rather than per case
    kind.build(
        n,
        &inputs_for(kind, n, mode, seed, 0),
        variants[0].unwrap_or_default(),
    )?;

    variants
        .into_iter()
        .map(|variant| {
            let failures: Vec<(usize, String)> = (0..cases)
                .into_par_iter()
                .filter_map(|c| {
                    let inputs = inputs_for(kind, n, mode, seed, c);
                    let verdict = kind
                        .build(n, &inputs, variant.unwrap_or_default())
                        .and_then(|inst| check_instance(&inst));
                    let reason = match verdict {
                        Ok(None) => return None,
                        Ok(Some(reason)) => reason,
                        Err(e) => e.to_string(),
                    };
                    let shown: Vec<String> = inputs.iter().map(|v| v.to_hex()).collect();
                    Some((c, format!("inputs [{}]: {reason}", shown.join(", "))))
                })
                .collect();
            Ok(VerifyReport {
                kind,
                variant,
                n,
                cases,
                mismatches: failures.len(),
                seed,
                first_failure: failures.into_iter().min_by_key(|f| f.0).map(|f| f.1),
            })
        })
        .collect()
}

fn inputs_for(
    kind: ReductionKind,
    n: usize,
    mode: VerifyMode,
    seed: u64,
    case: usize,
) -> Vec<BitVector> {
    let len = kind.input_len(n);
    let count = kind.input_names().len();
    match mode {
        VerifyMode::Exhaustive => (0..count)
            .map(|k| BitVector::from_u64((case as u64) >> (k * len), len))
            .collect(),
        VerifyMode::Sample(_) => {
            let mut rng = rng_from_seed(derive_seed(seed, case as u64));
            (0..count)
                .map(|_| BitVector::random(len, &mut rng))
                .collect()
        }
    }
}

/// `None` if the instance satisfies its claimed property and invariants.
pub(crate) fn check_instance(inst: &GadgetInstance) -> Result<Option<String>> {
    use super::Expected::*;
    let n = inst.n;
    let v = inst.graph.n_vertices();
    let want_vertices = match inst.kind {
        ReductionKind::ParityConn => 2 * n,
        ReductionKind::IpConn => 10 * n,
        ReductionKind::IpMatch => match &inst.graph {
            GadgetGraph::Split(p) if p.is_declared_disjoint() => 10 * n,
            _ => 6 * n,
        },
        ReductionKind::ParityDet | ReductionKind::DetIp => 2 * n + 2,
        ReductionKind::OrIpEuler | ReductionKind::OrIpEulerComm => 3 * n + 4,
    };
    if v != want_vertices || inst.roles.len() != v {
        return Ok(Some(format!(
            "{v} vertices, {} roles, expected {want_vertices}",
            inst.roles.len()
        )));
    }
    if let GadgetGraph::Split(p) = &inst.graph {
        if p.is_declared_disjoint() && p.overlap_count() > 0 {
            return Ok(Some("declared disjoint but E_A and E_B overlap".into()));
        }
    }
    let got = match inst.expected {
        Connected(_) => {
            let g = inst.graph.undirected_union().expect("undirected gadget");
            if inst.kind == ReductionKind::ParityConn {
                if g.degrees().iter().any(|&d| d != 2) {
                    return Ok(Some("not 2-regular".into()));
                }
                let c = connected_components(&g).count();
                if c > 2 {
                    return Ok(Some(format!("{c} components")));
                }
            }
            if inst.kind == ReductionKind::IpConn && g.edge_count() > 16 * n {
                return Ok(Some(format!("{} edges exceeds 16n", g.edge_count())));
            }
            Connected(is_connected(&g))
        }
        PerfectMatching(_) => {
            let g = inst.graph.undirected_union().expect("undirected gadget");
            PerfectMatching(has_perfect_matching_exact(&g)?)
        }
        Determinant(_) => {
            let d = inst.graph.directed_union().expect("directed gadget");
            Determinant(det_integer(&d)?)
        }
        Eulerian(_) => {
            let g = inst.graph.undirected_union().expect("undirected gadget");
            Eulerian(is_eulerian(&g))
        }
    };
    Ok((got != inst.expected)
        .then(|| format!("oracle says {got}, construction claims {}", inst.expected)))
}
