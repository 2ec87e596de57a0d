//! Canonical keys for clique trees.
//!
//! Every block of a clique tree is complete, so the graph is determined up to
//! isomorphism by its block-cut tree with each block node labeled by its size.
//! The key is the AHU encoding of that labeled tree rooted at its center,
//! minimized over the (one or two) centers.

use std::fmt;

use serde::{Serialize, Serializer};

use super::blocks::CliqueTreeStructure;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// Isomorphism key. Only meaningful for clique trees: two graphs whose blocks
/// are not all cliques may share a key without being isomorphic.
pub fn canonical_form(ct: &CliqueTreeStructure) -> CanonicalKey {
    let tree = ct.block_cut_tree();
    let b = ct.block_count();
    let label = |node: usize| -> Option<usize> { (node < b).then(|| ct.block(node).len()) };
    let key = tree_centers(&tree)
        .into_iter()
        .map(|c| encode(&tree, &label, c, usize::MAX))
        .min()
        .expect("a tree has at least one center");
    CanonicalKey(key)
}

fn encode(
    tree: &[Vec<usize>],
    label: &impl Fn(usize) -> Option<usize>,
    node: usize,
    parent: usize,
) -> String {
    let mut children: Vec<String> = tree[node]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| encode(tree, label, c, node))
        .collect();
    children.sort_unstable();
    let head = match label(node) {
        Some(size) => format!("B{size}"),
        None => "C".to_string(),
    };
    if children.is_empty() {
        head
    } else {
        format!("{head}({})", children.join(","))
    }
}

fn tree_centers(tree: &[Vec<usize>]) -> Vec<usize> {
    let n = tree.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = tree.iter().map(Vec::len).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &leaf in &leaves {
            for &w in &tree[leaf] {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[leaf] = 0;
        }
        leaves = next;
    }
    leaves.sort_unstable();
    leaves
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{blocks_and_cut_vertices, build_clique_tree};

    fn key(sizes: &[usize], attach: &[(usize, usize)]) -> CanonicalKey {
        canonical_form(&build_clique_tree(sizes, attach).unwrap().1)
    }

    #[test]
    fn single_block() {
        assert_eq!(key(&[5], &[]).as_str(), "B5");
    }

    #[test]
    fn relabeled_bowtie() {
        let (g, ct) = build_clique_tree(&[3, 3], &[(0, 0)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]).unwrap();
        let ct2 = blocks_and_cut_vertices(&h).unwrap();
        assert_eq!(canonical_form(&ct), canonical_form(&ct2));
        assert_eq!(canonical_form(&ct).as_str(), "C(B3,B3)");
    }

    #[test]
    fn different_block_multisets() {
        assert_ne!(key(&[3, 4], &[(0, 0)]), key(&[3, 3], &[(0, 0)]));
    }

    #[test]
    fn chain_vs_star_of_triangles() {
        let chain = key(&[3, 3, 3], &[(0, 1), (1, 2)]);
        let star = key(&[3, 3, 3], &[(0, 0), (0, 0)]);
        assert_ne!(chain, star);
    }

    #[test]
    fn attachment_position_matters_only_up_to_symmetry() {
        // Triangle on a non-cut vertex of K4 vs. on the shared vertex.
        let a = key(&[4, 4, 3], &[(0, 0), (0, 1)]);
        let b = key(&[4, 4, 3], &[(0, 0), (0, 2)]);
        let c = key(&[4, 4, 3], &[(0, 0), (0, 0)]);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
