use serde::{Deserialize, Serialize};

use super::graph::Graph;
use crate::error::{Error, Result};

/// Block decomposition of a connected graph.
///
/// Blocks are maximal 2-connected pieces (a bridge is a block of size 2).
/// Each block is a sorted vertex list and the block list itself is sorted,
/// so two decompositions of the same labeled graph compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueTreeStructure {
    n: usize,
    blocks: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    /// Blocks containing each vertex, ascending.
    vertex_blocks: Vec<Vec<usize>>,
}

impl CliqueTreeStructure {
    pub fn of(g: &Graph) -> Result<Self> {
        blocks_and_cut_vertices(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    /// Number of blocks containing `v`.
    pub fn block_index(&self, v: usize) -> usize {
        self.vertex_blocks[v].len()
    }

    pub fn blocks_containing(&self, v: usize) -> &[usize] {
        &self.vertex_blocks[v]
    }

    /// Index of the block containing both `u` and `v`, if any.
    pub fn block_of_pair(&self, u: usize, v: usize) -> Option<usize> {
        self.vertex_blocks[u]
            .iter()
            .copied()
            .find(|b| self.vertex_blocks[v].contains(b))
    }

    pub fn cut_vertices_of(&self, b: usize) -> Vec<usize> {
        self.blocks[b]
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Blocks holding exactly one cut vertex. Empty for a single block.
    pub fn pendant_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.cut_vertices_of(b).len() == 1)
            .collect()
    }

    /// Block sizes in descending order.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Bipartite block-cut tree. Nodes `0..b` are blocks, nodes `b..` are the
    /// cut vertices in `cut_vertices()` order.
    pub fn block_cut_tree(&self) -> Vec<Vec<usize>> {
        let b = self.blocks.len();
        let mut tree = vec![Vec::new(); b + self.cut_vertices.len()];
        for (i, &c) in self.cut_vertices.iter().enumerate() {
            for &blk in &self.vertex_blocks[c] {
                tree[blk].push(b + i);
                tree[b + i].push(blk);
            }
        }
        tree
    }
}

/// Biconnected components and cut vertices (Hopcroft-Tarjan low-link).
pub fn blocks_and_cut_vertices(g: &Graph) -> Result<CliqueTreeStructure> {
    g.ensure_connected()?;
    let n = g.n();
    let mut blocks = Vec::new();
    if n == 1 {
        blocks.push(vec![0]);
    } else {
        let mut st = LowLink {
            g,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            blocks: &mut blocks,
        };
        st.visit(0, usize::MAX);
    }
    for blk in &mut blocks {
        blk.sort_unstable();
    }
    blocks.sort();
    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, blk) in blocks.iter().enumerate() {
        for &v in blk {
            vertex_blocks[v].push(i);
        }
    }
    let cut_vertices = (0..n).filter(|&v| vertex_blocks[v].len() >= 2).collect();
    Ok(CliqueTreeStructure {
        n,
        blocks,
        cut_vertices,
        vertex_blocks,
    })
}

struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<usize>,
    blocks: &'a mut Vec<Vec<usize>>,
}

impl LowLink<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        self.stack.push(u);
        for &v in self.g.neighbors(u) {
            if self.disc[v] == usize::MAX {
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut blk = vec![u];
                    loop {
                        let w = self.stack.pop().expect("vertex stack underflow");
                        blk.push(w);
                        if w == v {
                            break;
                        }
                    }
                    self.blocks.push(blk);
                }
            } else if v != parent {
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// True iff `g` is connected, every block is a clique, and every block has
/// at least `min_block` vertices.
pub fn is_clique_tree(g: &Graph, min_block: usize) -> Result<bool> {
    let ct = blocks_and_cut_vertices(g)?;
    Ok(structure_is_clique_tree(g, &ct, min_block))
}

pub(crate) fn structure_is_clique_tree(g: &Graph, ct: &CliqueTreeStructure, min_block: usize) -> bool {
    ct.blocks()
        .iter()
        .all(|b| b.len() >= min_block && g.is_clique(b))
}

/// Build recipe for a clique tree.
///
/// `blocks[0]` is laid out on vertices `0..blocks[0]`. Block `i >= 1` shares
/// the local vertex `attach[i-1].1` of block `attach[i-1].0` and brings
/// `blocks[i] - 1` fresh vertices, labeled consecutively. The shared vertex
/// is local vertex 0 of the new block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTreeRecipe {
    pub blocks: Vec<usize>,
    pub attach: Vec<(usize, usize)>,
}

impl CliqueTreeRecipe {
    pub fn build(&self) -> Result<(Graph, CliqueTreeStructure)> {
        build_clique_tree(&self.blocks, &self.attach)
    }
}

pub fn build_clique_tree(
    sizes: &[usize],
    attach: &[(usize, usize)],
) -> Result<(Graph, CliqueTreeStructure)> {
    let (g, _) = layout_clique_tree(sizes, attach)?;
    let ct = blocks_and_cut_vertices(&g)?;
    Ok((g, ct))
}

/// Graph plus the global labels of every recipe block, in recipe order.
pub(crate) fn layout_clique_tree(
    sizes: &[usize],
    attach: &[(usize, usize)],
) -> Result<(Graph, Vec<Vec<usize>>)> {
    if sizes.is_empty() {
        return Err(Error::InvalidRecipe("no blocks".into()));
    }
    if let Some(&s) = sizes.iter().find(|&&s| s < 2) {
        return Err(Error::InvalidRecipe(format!("block size {s} is below 2")));
    }
    if attach.len() + 1 != sizes.len() {
        return Err(Error::InvalidRecipe(format!(
            "{} blocks need {} attachments, got {}",
            sizes.len(),
            sizes.len() - 1,
            attach.len()
        )));
    }
    let n = 1 + sizes.iter().map(|s| s - 1).sum::<usize>();
    let mut layout: Vec<Vec<usize>> = Vec::with_capacity(sizes.len());
    layout.push((0..sizes[0]).collect());
    let mut next = sizes[0];
    for (i, &(host, local)) in attach.iter().enumerate() {
        let blk = i + 1;
        if host >= blk {
            return Err(Error::InvalidRecipe(format!(
                "block {blk} attaches to block {host}, which is not built before it (cyclic attachment)"
            )));
        }
        let Some(&shared) = layout[host].get(local) else {
            return Err(Error::InvalidRecipe(format!(
                "block {blk} attaches to nonexistent vertex {local} of block {host}"
            )));
        };
        let mut verts = vec![shared];
        verts.extend(next..next + sizes[blk] - 1);
        next += sizes[blk] - 1;
        layout.push(verts);
    }
    let mut g = Graph::empty(n);
    for verts in &layout {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                g.insert_edge(u, v)?;
            }
        }
    }
    Ok((g, layout))
}

/// Labeled figure graph with blocks `K4, K4, K3, K3, K3`: vertex 0 and vertex 2
/// are the two cut vertices, each in three blocks.
pub fn figure_one() -> Graph {
    build_clique_tree(&[4, 4, 3, 3, 3], &[(0, 2), (0, 2), (0, 0), (0, 0)])
        .expect("fixed recipe")
        .0
}
