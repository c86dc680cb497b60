use std::path::PathBuf;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgePartition, Graph, Owner};
use crate::io::parse_partition;
use crate::random::rng_from_seed;

/// How to distribute a graph's edges between the parties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// Independent fair coin per edge; disjoint.
    Random,
    /// Alternate A, B, A, ... in canonical edge order; disjoint.
    Interleave,
    AllAlice,
    /// Owners read from a partition file; its edges must equal the graph's.
    File(PathBuf),
}

impl std::str::FromStr for SplitMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(SplitMode::Random),
            "interleave" => Ok(SplitMode::Interleave),
            "all-alice" | "all_alice" => Ok(SplitMode::AllAlice),
            other => match other.strip_prefix("file:") {
                Some(path) => Ok(SplitMode::File(path.into())),
                None => Err(Error::InvalidParameter(format!(
                    "unknown split mode {other:?}"
                ))),
            },
        }
    }
}

pub fn split_edges(g: &Graph, mode: &SplitMode, seed: u64) -> Result<EdgePartition> {
    let n = g.n_vertices();
    match mode {
        SplitMode::Random => {
            let mut rng = rng_from_seed(seed);
            let owned: Vec<_> = g
                .edges()
                .map(|e| {
                    (
                        e,
                        if rng.gen::<bool>() {
                            Owner::Alice
                        } else {
                            Owner::Bob
                        },
                    )
                })
                .collect();
            EdgePartition::from_owned_edges(n, owned, true)
        }
        SplitMode::Interleave => {
            let owned: Vec<_> = g
                .edges()
                .enumerate()
                .map(|(i, e)| (e, if i % 2 == 0 { Owner::Alice } else { Owner::Bob }))
                .collect();
            EdgePartition::from_owned_edges(n, owned, true)
        }
        SplitMode::AllAlice => EdgePartition::new(g.clone(), Graph::new(n), true),
        SplitMode::File(path) => {
            let text = std::fs::read_to_string(path)?;
            let p = parse_partition(&text)?;
            if p.union() != *g {
                return Err(Error::InvalidParameter(format!(
                    "partition file {} does not cover exactly the graph's edges",
                    path.display()
                )));
            }
            Ok(p)
        }
    }
}
