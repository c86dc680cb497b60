//! Randomized perfect-matching test for bipartite graphs: substitute random
//! field elements for the nonzero entries of the biadjacency matrix and check
//! whether the determinant vanishes. The test never reports a matching that
//! does not exist; a false negative needs every trial to hit a root of the
//! (nonzero) determinant polynomial.

use rand::Rng;

use super::linalg::{field_determinant, Matrix, ModP};
use super::matching::{check_bipartition, side_map};
use crate::error::Result;
use crate::graph::Graph;
use crate::random::rng_from_seed;

pub fn lovasz_pm_test(g: &Graph, left: &[usize], trials: usize, seed: u64) -> Result<bool> {
    let n = g.n_vertices();
    let side = side_map(n, left)?;
    check_bipartition(g, &side)?;
    let xs: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    let ys: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
    if xs.len() != ys.len() {
        return Ok(false);
    }
    let mut rng = rng_from_seed(seed);
    for _ in 0..trials {
        let m = Matrix::from_fn(xs.len(), |i, j| {
            if g.has_edge(xs[i], ys[j]) {
                ModP::new(rng.gen_range(1..ModP::MODULUS))
            } else {
                ModP::new(0)
            }
        });
        if field_determinant(&m) != ModP::new(0) {
            return Ok(true);
        }
    }
    Ok(false)
}
