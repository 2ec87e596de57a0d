//! Color-change rule, exact zero forcing numbers, and the block formula for
//! clique trees.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph_core::{CliqueTreeStructure, Graph};

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 16;

/// Blue set after closure, with one witnessing sequence of forces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcingState {
    pub blue: Vec<usize>,
    /// Forces `(u, v)` meaning `u -> v`, in the order applied.
    pub trace: Vec<(usize, usize)>,
}

impl ForcingState {
    pub fn is_complete(&self, n: usize) -> bool {
        self.blue.len() == n
    }
}

/// Repeated rounds over vertices in ascending label order until no force
/// applies.
pub fn forcing_closure(g: &Graph, seed: &[usize]) -> Result<ForcingState> {
    let order: Vec<usize> = (0..g.n()).collect();
    forcing_closure_in_order(g, seed, &order)
}

/// Same as [`forcing_closure`] but scanning vertices in `order` each round.
/// The final blue set does not depend on the order.
pub fn forcing_closure_in_order(g: &Graph, seed: &[usize], order: &[usize]) -> Result<ForcingState> {
    let n = g.n();
    let mut blue = vec![false; n];
    for &v in seed {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        blue[v] = true;
    }
    let mut trace = Vec::new();
    loop {
        let mut forced = false;
        for &u in order {
            if !blue[u] {
                continue;
            }
            let mut white = g.neighbors(u).iter().filter(|&&w| !blue[w]);
            if let (Some(&w), None) = (white.next(), white.next()) {
                blue[w] = true;
                trace.push((u, w));
                forced = true;
            }
        }
        if !forced {
            break;
        }
    }
    Ok(ForcingState {
        blue: (0..n).filter(|&v| blue[v]).collect(),
        trace,
    })
}

pub fn is_zero_forcing_set(g: &Graph, s: &[usize]) -> Result<bool> {
    Ok(forcing_closure(g, s)?.is_complete(g.n()))
}

fn closes_mask(nbrs: &[u64], seed: u64, full: u64) -> bool {
    let mut blue = seed;
    loop {
        let mut next = blue;
        let mut rest = blue;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let white = nbrs[u] & !next;
            if white != 0 && white & (white - 1) == 0 {
                next |= white;
            }
        }
        if next == full {
            return true;
        }
        if next == blue {
            return false;
        }
        blue = next;
    }
}

/// Minimum zero forcing set by subset search.
///
/// Sizes are tried in ascending order and, within a size, subsets in
/// lexicographic order of their sorted vertex lists, so the witness is the
/// lexicographically least minimum zero forcing set.
pub fn zero_forcing_number_exhaustive(g: &Graph, cap: usize) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n > cap.min(64) {
        return Err(Error::ExhaustiveCapExceeded { n, cap });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let nbrs = g.neighbor_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = idx.iter().fold(0u64, |m, &i| m | (1 << i));
            if mask == full || closes_mask(&nbrs, mask, full) {
                return Ok((k, idx));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set is always zero forcing")
}

/// Advances `idx` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// `Σ Z(B_i) − Σ_v (bi(v) − 1)` with `Z(K_m) = m − 1`; equals `n − b`.
pub fn zero_forcing_number_formula(ct: &CliqueTreeStructure) -> Result<usize> {
    if let Some(b) = ct.blocks().iter().find(|b| b.len() < 3) {
        return Err(Error::BlockTooSmall { size: b.len(), min: 3 });
    }
    let block_sum: usize = ct.blocks().iter().map(|b| b.len() - 1).sum();
    let overlap: usize = (0..ct.n()).map(|v| ct.block_index(v) - 1).sum();
    Ok(block_sum - overlap)
}

/// Checks `Z(G1 ⊕_v K_m) = Z(G1) + Z(K_m) − 1` with both sides from the
/// exhaustive search.
pub fn pendant_reduction_check(g1: &Graph, v: usize, m: usize, cap: usize) -> Result<bool> {
    if m < 3 {
        return Err(Error::BlockTooSmall { size: m, min: 3 });
    }
    let ct = CliqueTreeStructure::of(g1)?;
    if !crate::graph_core::structure_is_clique_tree(g1, &ct, 3) {
        return Err(Error::NotCliqueTree { min_block: 3 });
    }
    let g = g1.vertex_sum(v, &Graph::complete(m), 0)?;
    let (z, _) = zero_forcing_number_exhaustive(&g, cap)?;
    let (z1, _) = zero_forcing_number_exhaustive(g1, cap)?;
    Ok(z == z1 + (m - 1) - 1)
}

/// Range of zero forcing numbers of clique trees on `n` vertices whose
/// blocks all have at least 3 vertices.
pub fn valid_k_range(n: usize) -> Result<(usize, usize)> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    Ok((n / 2 + 1, n - 1))
}

pub(crate) fn check_nk(n: usize, k: usize) -> Result<()> {
    let (lo, hi) = valid_k_range(n).map_err(|_| Error::InvalidParameters { n, k })?;
    if k < lo || k > hi {
        return Err(Error::InvalidParameters { n, k });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{blocks_and_cut_vertices, build_clique_tree, figure_one};

    #[test]
    fn triangle_closures() {
        let k3 = Graph::complete(3);
        let st = forcing_closure(&k3, &[0, 1]).unwrap();
        assert_eq!(st.blue, vec![0, 1, 2]);
        assert_eq!(st.trace, vec![(0, 2)]);
        let st = forcing_closure(&k3, &[1]).unwrap();
        assert_eq!(st.blue, vec![1]);
        assert!(st.trace.is_empty());
    }

    #[test]
    fn full_set_and_small_sets() {
        let g = figure_one();
        let all: Vec<usize> = (0..g.n()).collect();
        assert!(is_zero_forcing_set(&g, &all).unwrap());
        for m in 3..7 {
            let k = Graph::complete(m);
            let s: Vec<usize> = (0..m - 2).collect();
            assert!(!is_zero_forcing_set(&k, &s).unwrap());
        }
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(zero_forcing_number_exhaustive(&Graph::complete(1), 16).unwrap().0, 1);
        for m in 2..9 {
            let (z, w) = zero_forcing_number_exhaustive(&Graph::complete(m), 16).unwrap();
            assert_eq!(z, m - 1);
            assert_eq!(w, (0..m - 1).collect::<Vec<_>>());
        }
    }

    #[test]
    fn path_has_z_one() {
        let (z, w) = zero_forcing_number_exhaustive(&Graph::path(6), 16).unwrap();
        assert_eq!((z, w), (1, vec![0]));
    }

    #[test]
    fn figure_one_exhaustive_and_formula() {
        let g = figure_one();
        let (z, w) = zero_forcing_number_exhaustive(&g, 16).unwrap();
        assert_eq!(z, 8);
        assert!(is_zero_forcing_set(&g, &w).unwrap());
        let ct = blocks_and_cut_vertices(&g).unwrap();
        assert_eq!(zero_forcing_number_formula(&ct).unwrap(), 8);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::complete(17);
        let err = zero_forcing_number_exhaustive(&g, 16).unwrap_err();
        assert_eq!(err, Error::ExhaustiveCapExceeded { n: 17, cap: 16 });
        assert!(err.to_string().contains("formula"));
    }

    #[test]
    fn formula_rejects_small_blocks() {
        let ct = blocks_and_cut_vertices(&Graph::path(3)).unwrap();
        assert_eq!(
            zero_forcing_number_formula(&ct),
            Err(Error::BlockTooSmall { size: 2, min: 3 })
        );
        let ct = blocks_and_cut_vertices(&Graph::complete(6)).unwrap();
        assert_eq!(zero_forcing_number_formula(&ct).unwrap(), 5);
    }

    #[test]
    fn pendant_reduction() {
        assert!(pendant_reduction_check(&Graph::complete(3), 1, 3, 16).unwrap());
        assert!(pendant_reduction_check(&Graph::complete(4), 0, 4, 16).unwrap());
        let (g74, _) = build_clique_tree(&[3, 3, 3], &[(0, 0), (0, 0)]).unwrap();
        for v in 0..g74.n() {
            assert!(pendant_reduction_check(&g74, v, 3, 16).unwrap());
        }
        assert!(pendant_reduction_check(&Graph::path(3), 0, 3, 16).is_err());
    }

    #[test]
    fn k_ranges() {
        assert_eq!(valid_k_range(10).unwrap(), (6, 9));
        assert_eq!(valid_k_range(7).unwrap(), (4, 6));
        assert_eq!(valid_k_range(3).unwrap(), (2, 2));
        assert_eq!(valid_k_range(2), Err(Error::TooFewVertices(2)));
    }

    #[test]
    fn lexicographic_combinations() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }
}
