//! Randomized and exhaustive checks of the individual lemmas: edge
//! monotonicity, Perron structure on pendant blocks, and the four
//! transforms. Every suite is deterministic given its seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::enumeration::enumerate_clique_trees;
use crate::error::Result;
use crate::graph_core::{build_clique_tree, CliqueTreeStructure, Graph};
use crate::random::{random_clique_tree_recipe, random_connected_graph};
use crate::spectral::{perron_ge, perron_pendant_check, spectral_radius, DEFAULT_TOL, STRICT_MARGIN};
use crate::transforms::{
    apply_merge, merge_blocks_case1, merge_blocks_case2, move_pendant_block, plan_merge,
    relocate_pendant_triangles, Rule,
};
use crate::zero_forcing::zero_forcing_number_formula;

/// Largest graph the randomized transform suites generate.
pub const SUITE_MAX_N: usize = 14;
/// Largest graph the edge-monotonicity suite generates.
pub const EDGE_SUITE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub instances: usize,
    /// Covers every instance in range rather than a random sample.
    pub exhaustive: bool,
    /// Smallest observed spectral-radius increase, when the suite measures one.
    pub min_gain: Option<f64>,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            instances: 0,
            exhaustive: false,
            min_gain: None,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record_gain(&mut self, gain: f64) {
        self.min_gain = Some(self.min_gain.map_or(gain, |m| m.min(gain)));
    }
}

fn rho(g: &Graph) -> Result<f64> {
    Ok(spectral_radius(g, DEFAULT_TOL)?.rho)
}

fn z(g: &Graph) -> Result<usize> {
    zero_forcing_number_formula(&CliqueTreeStructure::of(g)?)
}

/// Checks one transform instance: same vertex count, same Z, and a spectral
/// radius gain of at least `margin`.
fn check_transform(report: &mut SuiteReport, before: &Graph, after: &Graph, margin: f64, label: &str) -> Result<()> {
    report.instances += 1;
    let (r0, r1) = (rho(before)?, rho(after)?);
    let (z0, z1) = (z(before)?, z(after)?);
    report.record_gain(r1 - r0);
    if after.n() != before.n() {
        report.failures.push(format!("{label}: vertex count changed"));
    }
    if z0 != z1 {
        report.failures.push(format!("{label}: Z changed from {z0} to {z1}"));
    }
    if r1 - r0 < margin {
        report.failures.push(format!("{label}: rho {r0} -> {r1}"));
    }
    Ok(())
}

/// `ρ(G + uv) > ρ(G)` by at least [`STRICT_MARGIN`] for random connected
/// graphs on at most `max_n` vertices and a random non-edge `uv`.
pub fn edge_monotonicity_suite(seed: u64, count: usize, max_n: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("edge addition");
    while report.instances < count {
        let n = rng.gen_range(3..=max_n.max(3));
        let p = rng.gen_range(0.0..0.6);
        let g = random_connected_graph(&mut rng, n, p);
        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        let Some(&(u, v)) = non_edges.choose(&mut rng) else {
            continue;
        };
        report.instances += 1;
        let (r0, r1) = (rho(&g)?, rho(&g.plus_edge(u, v)?)?);
        report.record_gain(r1 - r0);
        if r1 - r0 < STRICT_MARGIN {
            report.failures.push(format!("n = {n}, edge {u}-{v}: rho {r0} -> {r1}"));
        }
    }
    Ok(report)
}

/// The pendant-block Perron check on every clique tree (blocks ≥ 3) with at
/// least two blocks and at most `max_n` vertices.
pub fn perron_pendant_suite(max_n: usize, enum_cap: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("pendant Perron structure");
    report.exhaustive = true;
    for n in 3..=max_n {
        for t in enumerate_clique_trees(n, 3, enum_cap)? {
            if t.block_count() < 2 {
                continue;
            }
            report.instances += 1;
            if !perron_pendant_check(&t.graph, &t.structure)? {
                report.failures.push(format!("n = {n}: {}", t.key));
            }
        }
    }
    Ok(report)
}

/// `K_m` with `t ≥ 2` triangles spread over at least two of its vertices.
pub fn relocation_suite(seed: u64, count: usize, max_n: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("triangle relocation");
    while report.instances < count {
        let m = rng.gen_range(3..=max_n - 4);
        let t = rng.gen_range(2..=(max_n - m) / 2);
        let hosts: Vec<usize> = (0..t).map(|_| rng.gen_range(0..m)).collect();
        if hosts.iter().all(|&h| h == hosts[0]) {
            continue;
        }
        let mut sizes = vec![m];
        sizes.extend(std::iter::repeat_n(3, t));
        let attach: Vec<(usize, usize)> = hosts.iter().map(|&h| (0, h)).collect();
        let (g, ct) = build_clique_tree(&sizes, &attach)?;
        let km = ct.block_of_pair(0, 1).expect("K_m contains 0 and 1");
        let after = relocate_pendant_triangles(&g, km)?;
        check_transform(&mut report, &g, &after, STRICT_MARGIN, &format!("m = {m}, hosts {hosts:?}"))?;
    }
    Ok(report)
}

/// Random `K_l ⊕_v K_m` (`l, m ≥ 4`) with extra pendant blocks. Extra blocks
/// land on one vertex `r` of `K_m` with high probability, which is what makes
/// the single-dominant-vertex case occur.
fn random_merge_instance(rng: &mut ChaCha8Rng, max_n: usize) -> Result<(Graph, usize, usize, usize)> {
    let l = rng.gen_range(4..=6);
    let m = rng.gen_range(4..=6);
    let mut sizes = vec![l, m];
    let mut attach = vec![(0, 0)];
    let mut n = l + m - 1;
    let heavy = rng.gen_bool(0.6);
    while n + 2 <= max_n && rng.gen_bool(0.7) {
        let s = rng.gen_range(3..=(max_n - n + 1).min(5));
        let host = if heavy && rng.gen_bool(0.8) {
            (1, 1)
        } else {
            let h = rng.gen_range(0..sizes.len());
            (h, rng.gen_range(0..sizes[h]))
        };
        sizes.push(s);
        attach.push(host);
        n += s - 1;
    }
    let (g, ct) = build_clique_tree(&sizes, &attach)?;
    let a = ct.block_of_pair(0, 1).expect("K_l contains 0 and 1");
    let b = ct.block_of_pair(0, l).expect("K_m contains 0 and l");
    Ok((g, 0, a, b))
}

/// Both merge rules. Instances are drawn until each rule has at least
/// `count` applications; every instance is also planned through
/// [`plan_merge`] so the dispatcher is exercised.
pub fn merge_suites(seed: u64, count: usize, max_n: usize) -> Result<(SuiteReport, SuiteReport)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut case1 = SuiteReport::new("block merge, case 1");
    let mut case2 = SuiteReport::new("block merge, case 2");
    let mut draws = 0usize;
    while case1.instances < count || case2.instances < count {
        draws += 1;
        if draws > 200 * count.max(1) {
            let short = if case1.instances < count { &mut case1 } else { &mut case2 };
            short.failures.push(format!("only {} instances generated", short.instances));
            break;
        }
        let (g, v, a, b) = random_merge_instance(&mut rng, max_n)?;
        let plan = plan_merge(&g, v, a, b)?;
        let after = apply_merge(&g, &plan)?;
        let label = format!("{} on {:?}", plan.rule, CliqueTreeStructure::of(&g)?.block_sizes());
        let report = match plan.rule {
            Rule::Merge1 if case1.instances < count => &mut case1,
            Rule::Merge2 if case2.instances < count => &mut case2,
            _ => continue,
        };
        check_transform(report, &g, &after, STRICT_MARGIN, &label)?;
        let before = CliqueTreeStructure::of(&g)?;
        let (sl, sm) = (before.block(a).len(), before.block(b).len());
        let mut want = before.block_sizes();
        for s in [sl, sm] {
            let i = want.iter().position(|&x| x == s).expect("block is present");
            want.remove(i);
        }
        want.extend([3, sl + sm - 3]);
        want.sort_unstable_by(|x, y| y.cmp(x));
        let ct = CliqueTreeStructure::of(&after)?;
        if ct.block_sizes() != want {
            report.failures.push(format!("{label}: blocks became {:?}", ct.block_sizes()));
        }
        // the explicit entry points agree with the dispatcher
        let direct = match plan.rule {
            Rule::Merge1 => {
                merge_blocks_case1(&g, plan.v, plan.l_block, plan.m_block, plan.p, plan.q, plan.r, plan.s)?
            }
            _ => merge_blocks_case2(&g, plan.v, plan.p, plan.q, plan.r, plan.s)?,
        };
        if direct != after {
            report.failures.push(format!("{label}: direct call differs from plan"));
        }
    }
    Ok((case1, case2))
}

/// Moves a random pendant block to a random vertex outside it whose Perron
/// entry is at least that of the block's cut vertex. The spectral radius may
/// not drop.
pub fn move_suite(seed: u64, count: usize, max_n: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("pendant block move");
    while report.instances < count {
        let n = rng.gen_range(5..=max_n);
        let (g, ct) = random_clique_tree_recipe(&mut rng, n, 3).build()?;
        let pendant = ct.pendant_blocks();
        let Some(&b) = pendant.choose(&mut rng) else {
            continue;
        };
        let from = ct.cut_vertices_of(b)[0];
        let x = spectral_radius(&g, DEFAULT_TOL)?.perron;
        let targets: Vec<usize> = (0..n)
            .filter(|&u| u != from && !ct.block(b).contains(&u) && perron_ge(&x, u, from))
            .collect();
        let Some(&to) = targets.choose(&mut rng) else {
            continue;
        };
        let after = move_pendant_block(&g, b, from, to)?;
        check_transform(&mut report, &g, &after, -DEFAULT_TOL, &format!("n = {n}, {from} -> {to}"))?;
    }
    Ok(report)
}

/// Every lemma suite at the given size: `count` instances for each
/// randomized suite and all clique trees up to `perron_max_n` for the
/// Perron check.
pub fn run_lemma_suites(seed: u64, count: usize, perron_max_n: usize, enum_cap: usize) -> Result<Vec<SuiteReport>> {
    let (case1, case2) = merge_suites(seed.wrapping_add(2), count, SUITE_MAX_N)?;
    Ok(vec![
        edge_monotonicity_suite(seed, count, EDGE_SUITE_MAX_N)?,
        perron_pendant_suite(perron_max_n, enum_cap)?,
        relocation_suite(seed.wrapping_add(1), count, SUITE_MAX_N)?,
        case1,
        case2,
        move_suite(seed.wrapping_add(3), count, SUITE_MAX_N)?,
    ])
}
