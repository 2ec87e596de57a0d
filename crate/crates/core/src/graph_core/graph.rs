use std::collections::VecDeque;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, so iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if !g.insert_edge(u, v)? {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v).expect("valid edge");
            }
        }
        g
    }

    /// `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(0, v).expect("valid edge");
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v).expect("valid edge");
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    /// Inserts `uv`; returns false if it was already present.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(true)
            }
        }
    }

    /// Removes `uv`; returns false if it was absent.
    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        match self.adj[u].binary_search(&v) {
            Err(_) => Ok(false),
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                self.m -= 1;
                Ok(true)
            }
        }
    }

    /// `G + uv` for a non-edge `uv`.
    pub fn plus_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        if !g.insert_edge(u, v)? {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        Ok(g)
    }

    /// `G - v`, with the remaining vertices relabeled in order.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let map = |w: usize| if w > v { w - 1 } else { w };
        Graph::from_edges(
            self.n() - 1,
            self.edges()
                .filter(|&(a, b)| a != v && b != v)
                .map(|(a, b)| (map(a), map(b))),
        )
    }

    /// Applies `perm` as `old -> new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: perm.len(),
            });
        }
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Vertex-sum `self ⊕ other`, identifying `at` in `self` with vertex
    /// `other_at` of `other`. Vertices of `other` other than `other_at` are
    /// appended after those of `self`, preserving their relative order.
    pub fn vertex_sum(&self, at: usize, other: &Graph, other_at: usize) -> Result<Graph> {
        self.check_vertex(at)?;
        other.check_vertex(other_at)?;
        let offset = self.n();
        let map = |w: usize| match w.cmp(&other_at) {
            std::cmp::Ordering::Equal => at,
            std::cmp::Ordering::Less => offset + w,
            std::cmp::Ordering::Greater => offset + w - 1,
        };
        let mut g = self.clone();
        g.adj.resize(self.n() + other.n() - 1, Vec::new());
        for (u, v) in other.edges() {
            g.insert_edge(map(u), map(v))?;
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(())
    }

    /// True iff the vertices in `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        let n = self.n();
        let mut a = DMatrix::zeros(n, n);
        for (u, v) in self.edges() {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    /// `y = A x`.
    pub fn mul_adjacency(&self, x: &[f64]) -> Vec<f64> {
        self.adj
            .iter()
            .map(|ns| ns.iter().map(|&v| x[v]).sum())
            .collect()
    }

    /// Neighbor sets as bitmasks; only meaningful for `n <= 64`.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect()
    }
}
