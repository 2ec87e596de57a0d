use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph_core::Graph;

/// Quotient of the adjacency matrix over a vertex partition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientMatrix {
    pub partition: Vec<Vec<usize>>,
    /// `q[i][j]`: average number of neighbors in part `j` over vertices of part `i`.
    pub q: Vec<Vec<f64>>,
    /// Every vertex of part `i` has the same number of neighbors in part `j`.
    pub equitable: bool,
}

impl QuotientMatrix {
    /// Eigenvalues of `q`, ascending.
    ///
    /// `|V_i| q_ij` counts the edges between parts `i` and `j`, so
    /// `D^{1/2} Q D^{-1/2}` with `D = diag(|V_i|)` is symmetric and the
    /// spectrum is real.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let k = self.partition.len();
        let sizes: Vec<f64> = self.partition.iter().map(|p| p.len() as f64).collect();
        let s = DMatrix::from_fn(k, k, |i, j| self.q[i][j] * (sizes[i] / sizes[j]).sqrt());
        let s = (&s + s.transpose()) * 0.5;
        let mut ev: Vec<f64> = SymmetricEigen::new(s).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues()
            .into_iter()
            .map(f64::abs)
            .fold(0.0, f64::max)
    }
}

pub fn quotient_matrix(g: &Graph, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    for (i, part) in partition.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidPartition(format!("part {i} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
            }
            if part_of[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
            part_of[v] = i;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
    }

    let k = partition.len();
    let mut q = vec![vec![0.0; k]; k];
    let mut equitable = true;
    for (i, part) in partition.iter().enumerate() {
        let counts: Vec<Vec<usize>> = part
            .iter()
            .map(|&u| {
                let mut c = vec![0; k];
                for &w in g.neighbors(u) {
                    c[part_of[w]] += 1;
                }
                c
            })
            .collect();
        equitable &= counts.iter().all(|c| c == &counts[0]);
        for j in 0..k {
            let total: usize = counts.iter().map(|c| c[j]).sum();
            q[i][j] = total as f64 / part.len() as f64;
        }
    }
    let mut partition = partition.to_vec();
    partition.iter_mut().for_each(|p| p.sort_unstable());
    Ok(QuotientMatrix {
        partition,
        q,
        equitable,
    })
}
