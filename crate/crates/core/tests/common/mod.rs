//! Slow, independent reference implementations used as test oracles.

#![allow(dead_code)]

use cliquetree::graph_core::build_clique_tree;
use cliquetree::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Zero forcing number by trying every subset, smallest first, with a plain
/// boolean-vector closure.
pub fn naive_zero_forcing_number(g: &Graph) -> usize {
    let n = g.n();
    let a = adjacency(g);
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut blue: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for u in 0..n {
                if !blue[u] {
                    continue;
                }
                let white: Vec<usize> = (0..n).filter(|&w| a[u][w] && !blue[w]).collect();
                if white.len() == 1 {
                    blue[white[0]] = true;
                    changed = true;
                }
            }
        }
        if blue.iter().all(|&b| b) {
            best = size;
        }
    }
    best
}

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut m: Vec<Vec<f64>> = adjacency(g)
        .into_iter()
        .map(|r| r.into_iter().map(|b| if b { 1.0 } else { 0.0 }).collect())
        .collect();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Block graph with all blocks of size ≥ 3, tested without any block
/// decomposition: connected, chordal, diamond-free, and every edge in a
/// triangle.
pub fn is_clique_tree_naive(a: &[Vec<bool>]) -> bool {
    let n = a.len();
    if n == 0 {
        return false;
    }
    // connected
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if a[u][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return n == 1;
    }
    // every edge lies in a triangle; no diamond (two triangles sharing an edge
    // whose apexes are non-adjacent)
    for u in 0..n {
        for v in u + 1..n {
            if !a[u][v] {
                continue;
            }
            let common: Vec<usize> = (0..n).filter(|&w| a[u][w] && a[v][w]).collect();
            if common.is_empty() {
                return false;
            }
            for (i, &x) in common.iter().enumerate() {
                for &y in &common[i + 1..] {
                    if !a[x][y] {
                        return false;
                    }
                }
            }
        }
    }
    // chordal: repeatedly remove a simplicial vertex
    let mut alive = vec![true; n];
    for _ in 0..n {
        let Some(v) = (0..n).find(|&v| {
            alive[v] && {
                let nb: Vec<usize> = (0..n).filter(|&w| alive[w] && a[v][w]).collect();
                nb.iter().enumerate().all(|(i, &x)| nb[i + 1..].iter().all(|&y| a[x][y]))
            }
        }) else {
            return false;
        };
        alive[v] = false;
    }
    true
}

/// Backtracking isomorphism test with degree pruning.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let (ag, ah) = (adjacency(g), adjacency(h));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(v: usize, g: &Graph, h: &Graph, ag: &[Vec<bool>], ah: &[Vec<bool>], map: &mut [usize], used: &mut [bool]) -> bool {
        let n = ag.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).any(|u| ag[u][v] != ah[map[u]][w]) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(v + 1, g, h, ag, ah, map, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    extend(0, g, h, &ag, &ah, &mut map, &mut used)
}

/// Adds `g` to `classes` unless an isomorphic graph is already there.
pub fn push_class(classes: &mut Vec<Graph>, g: Graph) {
    if !classes.iter().any(|h| isomorphic(h, &g)) {
        classes.push(g);
    }
}

/// Isomorphism classes of clique trees on `n ≤ 7` vertices (blocks ≥ 3),
/// found by scanning every labeled graph.
pub fn clique_trees_by_labeled_scan(n: usize) -> Vec<Graph> {
    assert!(n <= 7);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut classes = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges = mask.count_ones() as usize;
        // a clique tree has at least n − 1 edges, and at least 3(n−1)/2
        if 2 * edges < 3 * (n - 1) {
            continue;
        }
        let mut a = vec![vec![false; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a[u][v] = true;
                a[v][u] = true;
            }
        }
        if is_clique_tree_naive(&a) {
            let sel: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            push_class(&mut classes, Graph::from_edges(n, sel).unwrap());
        }
    }
    classes
}

/// Isomorphism classes of clique trees on `n` vertices (blocks ≥ 3), found
/// by building every attachment sequence: block sizes in every order, each
/// new block glued at any vertex built so far.
pub fn clique_trees_by_recipes(n: usize) -> Vec<Graph> {
    fn size_lists(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for s in 3..=rest + 1 {
            cur.push(s);
            size_lists(rest - (s - 1), cur, out);
            cur.pop();
        }
    }
    let mut lists = Vec::new();
    size_lists(n - 1, &mut Vec::new(), &mut lists);
    let mut classes = Vec::new();
    for sizes in lists {
        // built[i]: vertices present before block i is added
        let mut built = vec![sizes[0]];
        for &s in &sizes[1..] {
            built.push(built.last().unwrap() + s - 1);
        }
        let mut choice = vec![0usize; sizes.len() - 1];
        loop {
            let attach: Vec<(usize, usize)> = choice.iter().map(|&c| locate(c, &sizes, &built)).collect();
            push_class(&mut classes, build_clique_tree(&sizes, &attach).unwrap().0);
            let Some(i) = (0..choice.len()).find(|&i| choice[i] + 1 < built[i]) else {
                break;
            };
            choice[i] += 1;
            choice[..i].fill(0);
        }
    }
    classes
}

/// Maps a global label to `(block, local vertex)` in the recipe layout:
/// block 0 owns `0..sizes[0]`, and block `i > 0` puts its local vertices
/// `1..sizes[i]` at global labels `built[i-1]..`.
fn locate(v: usize, sizes: &[usize], built: &[usize]) -> (usize, usize) {
    if v < sizes[0] {
        return (0, v);
    }
    let i = (1..sizes.len()).find(|&i| v < built[i]).expect("label already built");
    (i, v + 1 - built[i - 1])
}
