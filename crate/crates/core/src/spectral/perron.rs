use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph_core::{CliqueTreeStructure, Graph};

use super::{spectral_radius, DEFAULT_TOL, STRICT_MARGIN};

/// Perron entries closer than this are treated as tied and ordered by label.
pub const TIE_EPS: f64 = 1e-9;

/// Sorts `vertices` by ascending Perron entry, treating entries within
/// [`TIE_EPS`] of a cluster as equal and breaking ties by lowest label.
///
/// Clusters are formed on the sorted values, so the order is a total order
/// even though "within epsilon" is not transitive.
pub fn order_by_perron(vertices: &[usize], x: &[f64]) -> Vec<usize> {
    let mut by_value = vertices.to_vec();
    by_value.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
    let mut cluster = vec![0usize; by_value.len()];
    for i in 1..by_value.len() {
        let gap = x[by_value[i]] - x[by_value[i - 1]];
        cluster[i] = cluster[i - 1] + usize::from(gap > TIE_EPS);
    }
    let mut keyed: Vec<(usize, usize)> = cluster.into_iter().zip(by_value).collect();
    keyed.sort_unstable();
    keyed.into_iter().map(|(_, v)| v).collect()
}

/// Vertex with the largest Perron entry; ties go to the lowest label.
pub fn perron_argmax(vertices: &[usize], x: &[f64]) -> usize {
    let ordered = order_by_perron(vertices, x);
    let top = *ordered.last().expect("non-empty vertex set");
    vertices
        .iter()
        .copied()
        .filter(|&v| (x[top] - x[v]).abs() <= TIE_EPS)
        .min()
        .expect("top is in the set")
}

/// `x_a ≥ x_b` up to [`TIE_EPS`].
pub fn perron_ge(x: &[f64], a: usize, b: usize) -> bool {
    x[a] >= x[b] - TIE_EPS
}

pub(crate) fn cmp_entries(x: &[f64], a: usize, b: usize) -> Ordering {
    if (x[a] - x[b]).abs() <= TIE_EPS {
        Ordering::Equal
    } else {
        x[a].total_cmp(&x[b])
    }
}

/// For every pendant block with cut vertex `c` and other vertices `L`:
/// `x_c > x_l` by at least [`STRICT_MARGIN`] for all `l ∈ L`, and all entries
/// over `L` agree within [`STRICT_MARGIN`].
pub fn perron_pendant_check(g: &Graph, ct: &CliqueTreeStructure) -> Result<bool> {
    let pendant = ct.pendant_blocks();
    if pendant.is_empty() {
        return Err(Error::NoPendantBlock);
    }
    let x = spectral_radius(g, DEFAULT_TOL)?.perron;
    Ok(pendant.into_iter().all(|b| {
        let cut = ct.cut_vertices_of(b)[0];
        let leaves: Vec<f64> = ct.block(b).iter().filter(|&&v| v != cut).map(|&v| x[v]).collect();
        let lo = leaves.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = leaves.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        hi - lo <= STRICT_MARGIN && x[cut] - hi >= STRICT_MARGIN
    }))
}
