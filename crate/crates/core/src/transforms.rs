//! Graph surgeries on clique trees that keep the zero forcing number and
//! raise the spectral radius, plus a driver that applies them until the
//! extremal shape is reached.
//!
//! Block ids are indices into `CliqueTreeStructure::of(g).blocks()`. Every
//! transform returns a new graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph_core::{structure_is_clique_tree, CliqueTreeStructure, Graph};
use crate::spectral::{
    cmp_entries, order_by_perron, perron_argmax, perron_ge, spectral_radius, DEFAULT_TOL,
    STRICT_MARGIN,
};
use crate::zero_forcing::zero_forcing_number_formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    Merge1,
    Merge2,
    Relocate,
    Move,
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Rule::Merge1 => "merge1",
            Rule::Merge2 => "merge2",
            Rule::Relocate => "relocate",
            Rule::Move => "move",
        })
    }
}

fn perron(g: &Graph) -> Result<Vec<f64>> {
    Ok(spectral_radius(g, DEFAULT_TOL)?.perron)
}

fn structure(g: &Graph) -> Result<CliqueTreeStructure> {
    let ct = CliqueTreeStructure::of(g)?;
    if !structure_is_clique_tree(g, &ct, 3) {
        return Err(Error::NotCliqueTree { min_block: 3 });
    }
    Ok(ct)
}

fn block_checked(ct: &CliqueTreeStructure, b: usize) -> Result<&[usize]> {
    if b >= ct.block_count() {
        return Err(Error::Precondition(format!(
            "block {b} does not exist ({} blocks)",
            ct.block_count()
        )));
    }
    Ok(ct.block(b))
}

fn without(set: &[usize], drop: &[usize]) -> Vec<usize> {
    set.iter().copied().filter(|v| !drop.contains(v)).collect()
}

fn precondition(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

/// Moves every branch hanging off a vertex of block `km_block` onto the
/// vertex of that block with the largest Perron entry.
///
/// The input must consist of the block `K_m` (`m ≥ 3`) and triangles, each
/// triangle sharing one vertex with `K_m`, with triangles at two or more
/// distinct vertices of `K_m`.
pub fn relocate_pendant_triangles(g: &Graph, km_block: usize) -> Result<Graph> {
    let ct = structure(g)?;
    let km = block_checked(&ct, km_block)?.to_vec();
    check_relocation(&ct, km_block).map_err(Error::Precondition)?;
    let x = perron(g)?;
    let hub = perron_argmax(&km, &x);
    let mut out = g.clone();
    for (b, blk) in ct.blocks().iter().enumerate() {
        if b == km_block {
            continue;
        }
        let shared = *blk.iter().find(|v| km.contains(v)).expect("checked");
        if shared == hub {
            continue;
        }
        for &w in blk.iter().filter(|&&w| w != shared) {
            out.delete_edge(shared, w)?;
            out.insert_edge(hub, w)?;
        }
    }
    Ok(out)
}

fn check_relocation(ct: &CliqueTreeStructure, km_block: usize) -> std::result::Result<(), String> {
    let km = ct.block(km_block);
    let mut hosts = Vec::new();
    for (b, blk) in ct.blocks().iter().enumerate() {
        if b == km_block {
            continue;
        }
        if blk.len() != 3 {
            return Err(format!("block {b} has size {}, expected a triangle", blk.len()));
        }
        let shared: Vec<usize> = blk.iter().copied().filter(|v| km.contains(v)).collect();
        if shared.len() != 1 {
            return Err(format!("triangle {b} is not attached directly to block {km_block}"));
        }
        hosts.push(shared[0]);
    }
    hosts.sort_unstable();
    hosts.dedup();
    if hosts.len() < 2 {
        return Err(format!(
            "triangles are attached at {} vertex of block {km_block}; need at least 2",
            hosts.len()
        ));
    }
    Ok(())
}

/// Vertices that pass the "two least Perron entries" test for `L = K_l ∖ {v}`.
fn check_least_pair(x: &[f64], l_rest: &[usize], p: usize, q: usize) -> Result<()> {
    precondition(p != q && l_rest.contains(&p) && l_rest.contains(&q), || {
        format!("p = {p} and q = {q} must be distinct vertices of K_l other than v")
    })?;
    precondition(perron_ge(x, q, p), || format!("need x_p <= x_q for p = {p}, q = {q}"))?;
    let others = without(l_rest, &[p, q]);
    precondition(
        others.iter().all(|&u| perron_ge(x, u, q)),
        || format!("p = {p}, q = {q} are not the two least Perron entries of K_l"),
    )
}

struct MergeBlocks {
    l: Vec<usize>,
    m: Vec<usize>,
}

fn merge_blocks(ct: &CliqueTreeStructure, v: usize, l_block: usize, m_block: usize) -> Result<MergeBlocks> {
    let l = block_checked(ct, l_block)?.to_vec();
    let m = block_checked(ct, m_block)?.to_vec();
    precondition(l_block != m_block, || "K_l and K_m must be different blocks".into())?;
    precondition(l.contains(&v) && m.contains(&v), || {
        format!("vertex {v} is not shared by blocks {l_block} and {m_block}")
    })?;
    precondition(l.len() >= 4 && m.len() >= 4, || {
        format!("merge needs blocks of size >= 4, got {} and {}", l.len(), m.len())
    })?;
    Ok(MergeBlocks { l, m })
}

/// `K_l ⊕_v K_m → K_3 ⊕_v K_{l+m−3}` when two vertices of `K_m` dominate
/// the two least entries `p, q` of `K_l ∖ {v}`: cut `p, q` off the rest of
/// `K_l` and join the rest of `K_l` to all of `K_m ∖ {v}`.
#[allow(clippy::too_many_arguments)]
pub fn merge_blocks_case1(
    g: &Graph,
    v: usize,
    l_block: usize,
    m_block: usize,
    p: usize,
    q: usize,
    r: usize,
    s: usize,
) -> Result<Graph> {
    let ct = structure(g)?;
    let MergeBlocks { l, m } = merge_blocks(&ct, v, l_block, m_block)?;
    let x = perron(g)?;
    let l_rest = without(&l, &[v]);
    let m_rest = without(&m, &[v]);
    check_least_pair(&x, &l_rest, p, q)?;
    precondition(r != s && m_rest.contains(&r) && m_rest.contains(&s), || {
        format!("r = {r} and s = {s} must be distinct vertices of K_m other than v")
    })?;
    precondition(perron_ge(&x, r, q) && perron_ge(&x, s, q), || {
        "Perron ordering fails case 1 (x_r, x_s >= x_p, x_q); use case 2".to_string()
    })?;

    let mut out = g.clone();
    for &u in &without(&l, &[p, q, v]) {
        out.delete_edge(u, p)?;
        out.delete_edge(u, q)?;
        for &w in &m_rest {
            out.insert_edge(u, w)?;
        }
    }
    Ok(out)
}

/// The single-dominant-vertex variant: exactly one `r ∈ K_m ∖ {v}` has
/// `x_r ≥ x_q`. Cuts `p` from `K_l` and `s` from `K_m`, joins `p ~ s`, and
/// joins the remainders of the two blocks.
pub fn merge_blocks_case2(g: &Graph, v: usize, p: usize, q: usize, r: usize, s: usize) -> Result<Graph> {
    let ct = structure(g)?;
    let l_block = ct
        .block_of_pair(v, p)
        .ok_or_else(|| Error::Precondition(format!("{v} and {p} share no block")))?;
    let m_block = ct
        .block_of_pair(v, r)
        .ok_or_else(|| Error::Precondition(format!("{v} and {r} share no block")))?;
    let MergeBlocks { l, m } = merge_blocks(&ct, v, l_block, m_block)?;
    let x = perron(g)?;
    let l_rest = without(&l, &[v]);
    let m_rest = without(&m, &[v]);
    check_least_pair(&x, &l_rest, p, q)?;
    precondition(m_rest.contains(&r) && perron_ge(&x, r, q), || {
        format!("need r = {r} in K_m with x_r >= x_q")
    })?;
    precondition(s != r && m_rest.contains(&s), || {
        format!("s = {s} must be a vertex of K_m other than v and r")
    })?;
    precondition(
        without(&m_rest, &[r]).iter().all(|&u| !perron_ge(&x, u, q)),
        || "Perron ordering fails case 2: another vertex of K_m reaches x_q".into(),
    )?;

    let mut out = g.clone();
    let l_keep = without(&l, &[p, v]);
    let m_keep = without(&m, &[s, v]);
    for &u in &l_keep {
        out.delete_edge(u, p)?;
    }
    for &u in &m_keep {
        out.delete_edge(u, s)?;
    }
    out.insert_edge(p, s)?;
    for &u in &l_keep {
        for &w in &m_keep {
            out.insert_edge(u, w)?;
        }
    }
    Ok(out)
}

/// Moves pendant block `block` from its cut vertex `from` to `to`, which must
/// lie outside the block and carry at least the Perron entry of `from`.
pub fn move_pendant_block(g: &Graph, block: usize, from: usize, to: usize) -> Result<Graph> {
    let ct = CliqueTreeStructure::of(g)?;
    let blk = block_checked(&ct, block)?.to_vec();
    let cuts = ct.cut_vertices_of(block);
    precondition(cuts.len() == 1, || format!("block {block} is not pendant"))?;
    precondition(cuts[0] == from, || {
        format!("block {block} hangs at {}, not {from}", cuts[0])
    })?;
    precondition(to < g.n() && !blk.contains(&to), || {
        format!("target {to} must be a vertex outside block {block}")
    })?;
    let x = perron(g)?;
    precondition(perron_ge(&x, to, from), || {
        format!("need x_to >= x_from for to = {to}, from = {from}")
    })?;
    let mut out = g.clone();
    for &w in blk.iter().filter(|&&w| w != from) {
        out.delete_edge(from, w)?;
        out.insert_edge(to, w)?;
    }
    Ok(out)
}

/// Arguments for one of the two merge rules on `K_l ⊕_v K_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MergePlan {
    pub rule: Rule,
    pub v: usize,
    pub l_block: usize,
    pub m_block: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
}

/// Chooses the merge rule and its vertices from the Perron vector. One of
/// the two orientations always admits case 1 or case 2.
pub fn plan_merge(g: &Graph, v: usize, block_a: usize, block_b: usize) -> Result<MergePlan> {
    let ct = structure(g)?;
    merge_blocks(&ct, v, block_a, block_b)?;
    let x = perron(g)?;
    for (l_block, m_block) in [(block_a, block_b), (block_b, block_a)] {
        let l_rest = without(ct.block(l_block), &[v]);
        let m_rest = without(ct.block(m_block), &[v]);
        let l_ord = order_by_perron(&l_rest, &x);
        let (p, q) = (l_ord[0], l_ord[1]);
        let m_ord = order_by_perron(&m_rest, &x);
        let high: Vec<usize> = m_ord.iter().copied().filter(|&u| perron_ge(&x, u, q)).collect();
        let plan = |rule, r, s| MergePlan { rule, v, l_block, m_block, p, q, r, s };
        match high.len() {
            0 => continue,
            1 => {
                let r = high[0];
                let s = *m_ord.iter().find(|&&u| u != r).expect("m >= 4");
                return Ok(plan(Rule::Merge2, r, s));
            }
            h => return Ok(plan(Rule::Merge1, high[h - 1], high[h - 2])),
        }
    }
    Err(Error::Invariant(format!(
        "no merge orientation applies to blocks {block_a}, {block_b} at {v}"
    )))
}

pub fn apply_merge(g: &Graph, plan: &MergePlan) -> Result<Graph> {
    match plan.rule {
        Rule::Merge1 => {
            merge_blocks_case1(g, plan.v, plan.l_block, plan.m_block, plan.p, plan.q, plan.r, plan.s)
        }
        Rule::Merge2 => merge_blocks_case2(g, plan.v, plan.p, plan.q, plan.r, plan.s),
        other => Err(Error::Precondition(format!("{other} is not a merge rule"))),
    }
}

/// Pairs of blocks of size ≥ 4 sharing a cut vertex, as `(v, a, b)`, largest
/// blocks first.
pub fn merge_candidates(ct: &CliqueTreeStructure) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &v in ct.cut_vertices() {
        let big: Vec<usize> = ct
            .blocks_containing(v)
            .iter()
            .copied()
            .filter(|&b| ct.block(b).len() >= 4)
            .collect();
        for (i, &a) in big.iter().enumerate() {
            for &b in &big[i + 1..] {
                out.push((v, a, b));
            }
        }
    }
    out.sort_by_key(|&(v, a, b)| {
        let (sa, sb) = (ct.block(a).len(), ct.block(b).len());
        (std::cmp::Reverse(sa.max(sb)), std::cmp::Reverse(sa.min(sb)), v, a, b)
    });
    out
}

/// Blocks for which [`relocate_pendant_triangles`] applies, largest first.
pub fn relocation_candidates(ct: &CliqueTreeStructure) -> Vec<usize> {
    let mut out: Vec<usize> = (0..ct.block_count())
        .filter(|&b| check_relocation(ct, b).is_ok())
        .collect();
    out.sort_by_key(|&b| (std::cmp::Reverse(ct.block(b).len()), b));
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionStep {
    pub rule: Rule,
    pub rho_before: f64,
    pub rho_after: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reduction {
    pub steps: Vec<ReductionStep>,
    #[serde(skip)]
    pub graph: Graph,
}

const MAX_REDUCTION_STEPS: usize = 10_000;

/// Applies merges (largest blocks first), then triangle relocation, then
/// pendant-block moves toward the largest Perron entry, until none applies.
///
/// Each step is checked: the spectral radius must rise (by at least
/// [`STRICT_MARGIN`] for merges and relocation) and the zero forcing number
/// must stay the same.
pub fn reduce_to_extremal(g: &Graph) -> Result<Reduction> {
    let ct = structure(g)?;
    let z = zero_forcing_number_formula(&ct)?;
    let mut cur = g.clone();
    let mut rho = spectral_radius(&cur, DEFAULT_TOL)?.rho;
    let mut steps = Vec::new();
    while let Some((rule, next)) = reduction_step(&cur)? {
        if steps.len() >= MAX_REDUCTION_STEPS {
            return Err(Error::Invariant("reduction did not terminate".into()));
        }
        let ct = structure(&next)?;
        let z_next = zero_forcing_number_formula(&ct)?;
        if z_next != z {
            return Err(Error::Invariant(format!("{rule} changed Z from {z} to {z_next}")));
        }
        let rho_next = spectral_radius(&next, DEFAULT_TOL)?.rho;
        let margin = if rule == Rule::Move { 0.0 } else { STRICT_MARGIN };
        if rho_next <= rho + margin {
            return Err(Error::Invariant(format!(
                "{rule} did not raise the spectral radius: {rho} -> {rho_next}"
            )));
        }
        steps.push(ReductionStep {
            rule,
            rho_before: rho,
            rho_after: rho_next,
        });
        cur = next;
        rho = rho_next;
    }
    Ok(Reduction { steps, graph: cur })
}

fn reduction_step(g: &Graph) -> Result<Option<(Rule, Graph)>> {
    let ct = structure(g)?;
    if let Some(&(v, a, b)) = merge_candidates(&ct).first() {
        let plan = plan_merge(g, v, a, b)?;
        return Ok(Some((plan.rule, apply_merge(g, &plan)?)));
    }
    if ct.cut_vertices().len() < 2 {
        return Ok(None);
    }
    if let Some(&b) = relocation_candidates(&ct).first() {
        return Ok(Some((Rule::Relocate, relocate_pendant_triangles(g, b)?)));
    }
    let x = perron(g)?;
    let all: Vec<usize> = (0..g.n()).collect();
    let hub = perron_argmax(&all, &x);
    for b in ct.pendant_blocks() {
        let from = ct.cut_vertices_of(b)[0];
        if from != hub && !ct.block(b).contains(&hub) {
            debug_assert!(cmp_entries(&x, hub, from).is_ge());
            return Ok(Some((Rule::Move, move_pendant_block(g, b, from, hub)?)));
        }
    }
    Err(Error::Invariant(
        "several cut vertices but no pendant block can move to the Perron hub".into(),
    ))
}
