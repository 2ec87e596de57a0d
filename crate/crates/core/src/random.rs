//! Seeded generators for randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph_core::{CliqueTreeRecipe, Graph};

/// A recipe for a clique tree on exactly `n` vertices with every block of
/// size at least `min_block` (`min_block ≥ 2`, `n ≥ min_block`). Each new
/// block is glued at a uniformly chosen vertex of a uniformly chosen earlier
/// block.
pub fn random_clique_tree_recipe<R: Rng + ?Sized>(rng: &mut R, n: usize, min_block: usize) -> CliqueTreeRecipe {
    assert!(min_block >= 2 && n >= min_block, "need n >= min_block >= 2");
    let step = min_block - 1;
    // remaining vertices must be 0 or fillable by blocks adding >= step each
    let pick = |rng: &mut R, remaining: usize, base: usize| {
        let sizes: Vec<usize> = (min_block..=remaining + base)
            .filter(|&s| {
                let left = remaining + base - s;
                left == 0 || left >= step
            })
            .collect();
        *sizes.choose(rng).expect("the largest size always fits")
    };
    let first = pick(rng, n, 0);
    let mut blocks = vec![first];
    let mut attach = Vec::new();
    let mut remaining = n - first;
    while remaining > 0 {
        let s = pick(rng, remaining, 1);
        let host = rng.gen_range(0..blocks.len());
        attach.push((host, rng.gen_range(0..blocks[host])));
        blocks.push(s);
        remaining -= s - 1;
    }
    CliqueTreeRecipe { blocks, attach }
}

/// A connected graph on `n ≥ 1` vertices: a random labeled spanning tree plus
/// each remaining pair independently with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.insert_edge(order[i], parent).expect("in range");
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.insert_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// A uniformly random permutation of `0..n`, as a map old → new label.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
