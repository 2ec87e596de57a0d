//! Graphs, block decomposition, clique-tree construction and canonical keys.

mod blocks;
mod canon;
mod graph;
pub mod io;

pub use blocks::{
    blocks_and_cut_vertices, build_clique_tree, figure_one, is_clique_tree, CliqueTreeRecipe,
    CliqueTreeStructure,
};
pub(crate) use blocks::structure_is_clique_tree;
pub use canon::{canonical_form, CanonicalKey};
pub use graph::Graph;
