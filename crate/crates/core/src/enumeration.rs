//! Clique trees up to isomorphism, the classes `G(n, k)`, and the
//! exhaustive check that the extremal graph is the unique spectral-radius
//! maximizer of its class.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph_core::{
    build_clique_tree, canonical_form, CanonicalKey, CliqueTreeStructure, Graph,
};
use crate::spectral::{spectral_radius, STRICT_MARGIN};
use crate::zero_forcing::{check_nk, valid_k_range, zero_forcing_number_formula};

pub const DEFAULT_ENUM_CAP: usize = 14;

/// One isomorphism class representative.
#[derive(Debug, Clone, PartialEq)]
pub struct CliqueTree {
    pub graph: Graph,
    pub structure: CliqueTreeStructure,
    pub key: CanonicalKey,
}

impl CliqueTree {
    pub fn new(graph: Graph) -> Result<Self> {
        let structure = CliqueTreeStructure::of(&graph)?;
        let key = canonical_form(&structure);
        Ok(CliqueTree {
            graph,
            structure,
            key,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn block_count(&self) -> usize {
        self.structure.block_count()
    }
}

/// Every clique tree on `n` vertices with all blocks of size at least
/// `min_block`, one representative per isomorphism class, ordered by key.
///
/// Grows trees by vertex count: each tree with two or more blocks arises
/// from a smaller one by gluing a pendant clique at some vertex, and
/// duplicates are dropped by canonical key.
pub fn enumerate_clique_trees(n: usize, min_block: usize, cap: usize) -> Result<Vec<CliqueTree>> {
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let min_block = min_block.max(2);
    let mut levels: Vec<BTreeMap<CanonicalKey, CliqueTree>> = vec![BTreeMap::new(); n + 1];
    for s in min_block..=n {
        let t = CliqueTree::new(Graph::complete(s))?;
        levels[s].insert(t.key.clone(), t);
    }
    if n == 1 {
        let t = CliqueTree::new(Graph::empty(1))?;
        return Ok(vec![t]);
    }
    for m in min_block..n {
        let current: Vec<CliqueTree> = levels[m].values().cloned().collect();
        for tree in &current {
            let sites = attachment_sites(&tree.structure);
            for s in min_block..=n + 1 - m {
                let clique = Graph::complete(s);
                for &v in &sites {
                    let t = CliqueTree::new(tree.graph.vertex_sum(v, &clique, 0)?)?;
                    levels[m + s - 1].entry(t.key.clone()).or_insert(t);
                }
            }
        }
    }
    Ok(std::mem::take(&mut levels[n]).into_values().collect())
}

/// Cut vertices plus one non-cut vertex per block; the non-cut vertices of a
/// block are interchangeable.
fn attachment_sites(ct: &CliqueTreeStructure) -> Vec<usize> {
    let mut sites: Vec<usize> = ct.cut_vertices().to_vec();
    for b in ct.blocks() {
        if let Some(&v) = b.iter().find(|&&v| !ct.is_cut_vertex(v)) {
            sites.push(v);
        }
    }
    sites.sort_unstable();
    sites
}

/// Members of `G(n, k)`: clique trees with blocks of size ≥ 3 and zero
/// forcing number `k`, i.e. exactly `n − k` blocks.
pub fn class_g(n: usize, k: usize, cap: usize) -> Result<Vec<CliqueTree>> {
    check_nk(n, k)?;
    let mut out = Vec::new();
    for t in enumerate_clique_trees(n, 3, cap)? {
        if t.block_count() != n - k {
            continue;
        }
        let z = zero_forcing_number_formula(&t.structure)?;
        if z != k {
            return Err(Error::Invariant(format!(
                "clique tree {} has {} blocks but Z = {z}",
                t.key,
                t.block_count()
            )));
        }
        out.push(t);
    }
    if out.is_empty() {
        return Err(Error::InvalidParameters { n, k });
    }
    Ok(out)
}

/// `K_{2k−n+2}` and `n−k−1` triangles glued at vertex 0. The clique's other
/// vertices are `1..=2k−n+1`; triangle `i` uses `2k−n+2+2i` and the next label.
pub fn build_extremal(n: usize, k: usize) -> Result<Graph> {
    check_nk(n, k)?;
    let mut sizes = vec![2 * k + 2 - n];
    sizes.extend(std::iter::repeat_n(3, n - k - 1));
    let attach = vec![(0, 0); sizes.len() - 1];
    Ok(build_clique_tree(&sizes, &attach)?.0)
}

/// Equitable partition of [`build_extremal`]: clique leaves, center, and
/// triangle leaves (the last part is absent when `k = n − 1`).
pub fn extremal_partition(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    check_nk(n, k)?;
    let leaves = 2 * k + 1 - n;
    let mut parts = vec![(1..=leaves).collect(), vec![0]];
    if leaves + 1 < n {
        parts.push((leaves + 1..n).collect());
    }
    Ok(parts)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub class_size: usize,
    pub max_rho: f64,
    pub argmax_canonical: CanonicalKey,
    /// Exactly one class is within `STRICT_MARGIN` of `max_rho`.
    pub unique: bool,
    /// The maximizer has the extremal graph's canonical key.
    pub matches_extremal: bool,
    pub runner_up_rho: Option<f64>,
    pub gap: Option<f64>,
}

impl ExtremalReport {
    pub fn passed(&self) -> bool {
        self.unique && self.matches_extremal
    }
}

/// Spectral radius of every member of `G(n, k)`, compared against the
/// extremal graph.
pub fn verify_main_theorem(n: usize, k: usize, enum_cap: usize, tol: f64) -> Result<ExtremalReport> {
    let class = class_g(n, k, enum_cap)?;
    let mut rhos = class
        .iter()
        .map(|t| Ok((spectral_radius(&t.graph, tol)?.rho, &t.key)))
        .collect::<Result<Vec<_>>>()?;
    rhos.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(b.1)));
    let (max_rho, argmax) = rhos[0];
    let runner_up_rho = rhos.get(1).map(|r| r.0);
    let ties = rhos.iter().filter(|r| r.0 >= max_rho - STRICT_MARGIN).count();
    let extremal = CliqueTree::new(build_extremal(n, k)?)?;
    Ok(ExtremalReport {
        n,
        k,
        class_size: class.len(),
        max_rho,
        argmax_canonical: argmax.clone(),
        unique: ties == 1,
        matches_extremal: *argmax == extremal.key,
        runner_up_rho,
        gap: runner_up_rho.map(|r| max_rho - r),
    })
}

/// Range of zero forcing numbers over all clique trees on `n` vertices with
/// blocks of size ≥ 3, and the block sizes of the minimizers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RemarkReport {
    pub n: usize,
    pub min_z: usize,
    pub max_z: usize,
    pub expected_range: (usize, usize),
    /// Distinct block-size multisets (descending) attaining `min_z`.
    pub minimizer_block_sizes: Vec<Vec<usize>>,
    /// Even `n`: one `K_4` and `n/2 − 2` triangles. Odd `n`: `(n−1)/2` triangles.
    pub expected_block_sizes: Vec<usize>,
    pub minimizer_triangles: usize,
    pub holds: bool,
}

pub fn verify_remark_range(n: usize, cap: usize) -> Result<RemarkReport> {
    let expected_range = valid_k_range(n)?;
    let trees = enumerate_clique_trees(n, 3, cap)?;
    let zs = trees
        .iter()
        .map(|t| zero_forcing_number_formula(&t.structure))
        .collect::<Result<Vec<_>>>()?;
    let min_z = *zs.iter().min().expect("K_n is always present");
    let max_z = *zs.iter().max().expect("K_n is always present");
    let mut minimizer_block_sizes: Vec<Vec<usize>> = trees
        .iter()
        .zip(&zs)
        .filter(|(_, &z)| z == min_z)
        .map(|(t, _)| t.structure.block_sizes())
        .collect();
    minimizer_block_sizes.sort();
    minimizer_block_sizes.dedup();
    let expected_block_sizes = if n.is_multiple_of(2) {
        let mut v = vec![4];
        v.extend(std::iter::repeat_n(3, n / 2 - 2));
        v
    } else {
        vec![3; n / 2]
    };
    let minimizer_triangles = minimizer_block_sizes
        .first()
        .map_or(0, |s| s.iter().filter(|&&b| b == 3).count());
    let holds = (min_z, max_z) == expected_range && minimizer_block_sizes == [expected_block_sizes.clone()];
    Ok(RemarkReport {
        n,
        min_z,
        max_z,
        expected_range,
        minimizer_block_sizes,
        expected_block_sizes,
        minimizer_triangles,
        holds,
    })
}
