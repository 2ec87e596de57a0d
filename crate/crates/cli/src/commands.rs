use std::path::Path;

use cliquetree::enumeration::{class_g, enumerate_clique_trees, verify_remark_range, CliqueTree, ExtremalReport};
use cliquetree::graph_core::CliqueTreeStructure;
use cliquetree::spectral::{
    char_poly_extremal, f_poly, lower_bound, quotient_matrix, spectral_radius, upper_bound, BoundParameters,
    UpperBound,
};
use cliquetree::suites::run_lemma_suites;
use cliquetree::transforms::{
    apply_merge, merge_blocks_case1, merge_blocks_case2, merge_candidates, move_pendant_block, plan_merge,
    relocate_pendant_triangles, relocation_candidates, Rule,
};
use cliquetree::zero_forcing::{forcing_closure, zero_forcing_number_exhaustive, zero_forcing_number_formula};
use cliquetree::{Error, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};
use crate::output::{emit, load_graph, save_graph, save_report};
use crate::{ApplyArgs, EnumerateArgs, RuleArg};

#[derive(Serialize)]
struct ExactZ {
    #[serde(rename = "Z")]
    z: usize,
    witness: Vec<usize>,
    n: usize,
}

pub fn zf_exact(cfg: &RunConfig, path: &Path) -> CliResult<()> {
    let g = load_graph(path)?;
    let (z, witness) = zero_forcing_number_exhaustive(&g, cfg.exhaustive_cap)?;
    emit(&ExactZ { z, witness, n: g.n() }, cfg.format)
}

#[derive(Serialize)]
struct FormulaZ {
    #[serde(rename = "Z")]
    z: usize,
    b: usize,
    n: usize,
}

pub fn zf_formula(cfg: &RunConfig, path: &Path) -> CliResult<()> {
    let g = load_graph(path)?;
    let ct = CliqueTreeStructure::of(&g)?;
    let z = zero_forcing_number_formula(&ct)?;
    emit(
        &FormulaZ {
            z,
            b: ct.block_count(),
            n: g.n(),
        },
        cfg.format,
    )
}

#[derive(Serialize)]
struct Closure {
    blue: Vec<usize>,
    trace: Vec<(usize, usize)>,
    complete: bool,
}

pub fn zf_closure(cfg: &RunConfig, path: &Path, seed: &[usize]) -> CliResult<()> {
    let g = load_graph(path)?;
    let state = forcing_closure(&g, seed)?;
    let complete = state.is_complete(g.n());
    emit(
        &Closure {
            blue: state.blue,
            trace: state.trace,
            complete,
        },
        cfg.format,
    )
}

pub fn spec_rho(cfg: &RunConfig, path: &Path) -> CliResult<()> {
    let g = load_graph(path)?;
    emit(&spectral_radius(&g, cfg.tolerance)?, cfg.format)
}

#[derive(Serialize)]
struct QuotientOut {
    q: Vec<Vec<f64>>,
    equitable: bool,
    eigenvalues: Vec<f64>,
    rho_q: f64,
    rho_a: f64,
}

fn parse_part(text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad vertex {t:?} in --partition {text:?}")))
        })
        .collect()
}

pub fn spec_quotient(cfg: &RunConfig, path: &Path, parts: &[String]) -> CliResult<()> {
    let g = load_graph(path)?;
    let partition = parts.iter().map(|p| parse_part(p)).collect::<CliResult<Vec<_>>>()?;
    let q = quotient_matrix(&g, &partition)?;
    let rho_a = spectral_radius(&g, cfg.tolerance)?.rho;
    emit(
        &QuotientOut {
            eigenvalues: q.eigenvalues(),
            rho_q: q.spectral_radius(),
            equitable: q.equitable,
            q: q.q,
            rho_a,
        },
        cfg.format,
    )
}

pub fn spec_fpoly(cfg: &RunConfig, n: usize, k: usize) -> CliResult<()> {
    emit(&f_poly(n, k)?, cfg.format)
}

#[derive(Serialize)]
struct Gpoly {
    n: usize,
    k: usize,
    ones: usize,
    minus_ones: usize,
    f: [i64; 4],
    spectrum: Vec<f64>,
}

pub fn spec_gpoly(cfg: &RunConfig, n: usize, k: usize) -> CliResult<()> {
    let g = char_poly_extremal(n, k)?;
    emit(
        &Gpoly {
            n,
            k,
            ones: g.ones,
            minus_ones: g.minus_ones,
            f: g.f.coeffs,
            spectrum: g.spectrum(),
        },
        cfg.format,
    )
}

#[derive(Serialize)]
struct Bounds {
    n: usize,
    k: usize,
    lower: f64,
    rho: f64,
    upper: Option<UpperBound>,
    /// Why `upper` is missing.
    note: Option<String>,
}

pub fn spec_bounds(cfg: &RunConfig, n: usize, k: usize) -> CliResult<()> {
    BoundParameters::new(n, k)?;
    let (upper, note) = match upper_bound(n, k) {
        Ok(u) => (Some(u), None),
        Err(e @ Error::Case2NotApplicable { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    let rho = if k == n - 1 {
        (n - 1) as f64
    } else {
        f_poly(n, k)?.largest_root()
    };
    emit(
        &Bounds {
            n,
            k,
            lower: lower_bound(n, k)?,
            rho,
            upper,
            note,
        },
        cfg.format,
    )
}

#[derive(Serialize)]
struct Snapshot {
    n: usize,
    #[serde(rename = "Z")]
    z: usize,
    rho: f64,
    blocks: Vec<usize>,
}

impl Snapshot {
    fn of(g: &Graph, cfg: &RunConfig) -> CliResult<Self> {
        let ct = CliqueTreeStructure::of(g)?;
        Ok(Snapshot {
            n: g.n(),
            z: zero_forcing_number_formula(&ct)?,
            rho: spectral_radius(g, cfg.tolerance)?.rho,
            blocks: ct.block_sizes(),
        })
    }
}

#[derive(Serialize)]
struct Applied {
    rule: Rule,
    before: Snapshot,
    after: Snapshot,
    edges: Vec<(usize, usize)>,
}

fn need(v: Option<usize>, name: &str) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required when other merge vertices are given")))
}

fn apply_rule(g: &Graph, a: &ApplyArgs) -> CliResult<(Rule, Graph)> {
    let ct = CliqueTreeStructure::of(g)?;
    let explicit_merge = [a.v, a.p, a.q, a.r, a.s].iter().any(Option::is_some);
    let out = match a.rule {
        RuleArg::Relocate => {
            let block = match a.block {
                Some(b) => b,
                None => *relocation_candidates(&ct)
                    .first()
                    .ok_or_else(|| Error::Precondition("no block admits triangle relocation".into()))?,
            };
            (Rule::Relocate, relocate_pendant_triangles(g, block)?)
        }
        RuleArg::Merge1 if explicit_merge => {
            let v = need(a.v, "v")?;
            let h = merge_blocks_case1(
                g,
                v,
                need(a.l_block, "l-block")?,
                need(a.m_block, "m-block")?,
                need(a.p, "p")?,
                need(a.q, "q")?,
                need(a.r, "r")?,
                need(a.s, "s")?,
            )?;
            (Rule::Merge1, h)
        }
        RuleArg::Merge2 if explicit_merge => {
            let h = merge_blocks_case2(g, need(a.v, "v")?, need(a.p, "p")?, need(a.q, "q")?, need(a.r, "r")?, need(a.s, "s")?)?;
            (Rule::Merge2, h)
        }
        RuleArg::Merge1 | RuleArg::Merge2 => {
            let want = if a.rule == RuleArg::Merge1 { Rule::Merge1 } else { Rule::Merge2 };
            let mut found = None;
            for (v, x, y) in merge_candidates(&ct) {
                let plan = plan_merge(g, v, x, y)?;
                if plan.rule == want {
                    found = Some(plan);
                    break;
                }
            }
            let plan = found.ok_or_else(|| {
                Error::Precondition(format!("no pair of blocks satisfies the Perron ordering for {want}"))
            })?;
            (want, apply_merge(g, &plan)?)
        }
        RuleArg::Move => {
            let x = spectral_radius(g, cliquetree::spectral::DEFAULT_TOL)?.perron;
            let all: Vec<usize> = (0..g.n()).collect();
            let to = a.to.unwrap_or_else(|| cliquetree::spectral::perron_argmax(&all, &x));
            let block = match a.block {
                Some(b) => b,
                None => *ct
                    .pendant_blocks()
                    .iter()
                    .find(|&&b| !ct.block(b).contains(&to))
                    .ok_or_else(|| Error::Precondition(format!("no pendant block can move to {to}")))?,
            };
            let from = match a.from {
                Some(f) => f,
                None => *ct
                    .cut_vertices_of(block)
                    .first()
                    .ok_or_else(|| Error::Precondition(format!("block {block} has no cut vertex")))?,
            };
            (Rule::Move, move_pendant_block(g, block, from, to)?)
        }
    };
    Ok(out)
}

pub fn transform_apply(cfg: &RunConfig, a: &ApplyArgs) -> CliResult<()> {
    let g = load_graph(&a.input)?;
    let (rule, h) = apply_rule(&g, a)?;
    if let Some(path) = &a.emit {
        save_graph(&h, path)?;
    }
    emit(
        &Applied {
            rule,
            before: Snapshot::of(&g, cfg)?,
            after: Snapshot::of(&h, cfg)?,
            edges: h.edges().collect(),
        },
        cfg.format,
    )
}

#[derive(Serialize)]
struct TreeRow {
    key: String,
    blocks: Vec<usize>,
    #[serde(rename = "Z")]
    z: Option<usize>,
    rho: f64,
}

#[derive(Serialize)]
struct Enumeration {
    n: usize,
    count: usize,
    trees: Vec<TreeRow>,
}

pub fn enumerate(cfg: &RunConfig, a: &EnumerateArgs) -> CliResult<()> {
    let trees: Vec<CliqueTree> = match a.k {
        Some(k) => class_g(a.n, k, cfg.enum_cap)?,
        None => enumerate_clique_trees(a.n, a.min_block, cfg.enum_cap)?,
    };
    let rows = trees
        .iter()
        .map(|t| {
            let z = match zero_forcing_number_formula(&t.structure) {
                Ok(z) => Some(z),
                Err(_) if t.n() <= cfg.exhaustive_cap => Some(zero_forcing_number_exhaustive(&t.graph, cfg.exhaustive_cap)?.0),
                Err(_) => None,
            };
            Ok(TreeRow {
                key: t.key.to_string(),
                blocks: t.structure.block_sizes(),
                z,
                rho: spectral_radius(&t.graph, cfg.tolerance)?.rho,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    match cfg.format {
        Format::Csv => emit(&rows, cfg.format),
        Format::Json => emit(
            &Enumeration {
                n: a.n,
                count: rows.len(),
                trees: rows,
            },
            cfg.format,
        ),
    }
}

fn report_path(cfg: &RunConfig, n: usize, k: usize) -> std::path::PathBuf {
    cfg.output_dir.join(format!("{n}_{k}.json"))
}

pub fn verify_main_theorem(cfg: &RunConfig, n: usize, k: usize) -> CliResult<()> {
    let r = cliquetree::enumeration::verify_main_theorem(n, k, cfg.enum_cap, cfg.tolerance)?;
    save_report(&r, &report_path(cfg, n, k))?;
    emit(&r, cfg.format)?;
    if !r.passed() {
        return Err(CliError::Verification(format!(
            "({n},{k}): unique = {}, matches_extremal = {}",
            r.unique, r.matches_extremal
        )));
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct SummaryRow {
    n: usize,
    k: usize,
    class_size: usize,
    max_rho: f64,
    unique: bool,
    matches: bool,
}

impl From<&ExtremalReport> for SummaryRow {
    fn from(r: &ExtremalReport) -> Self {
        SummaryRow {
            n: r.n,
            k: r.k,
            class_size: r.class_size,
            max_rho: r.max_rho,
            unique: r.unique,
            matches: r.matches_extremal,
        }
    }
}

#[derive(Serialize)]
struct Sweep {
    all_passed: bool,
    results: Vec<SummaryRow>,
}

pub fn verify_sweep(cfg: &RunConfig, nmin: usize, nmax: usize) -> CliResult<()> {
    let nmin = nmin.max(3);
    if nmax > cfg.enum_cap {
        return Err(Error::EnumerationCapExceeded { n: nmax, cap: cfg.enum_cap }.into());
    }
    let pairs: Vec<(usize, usize)> = (nmin..=nmax)
        .flat_map(|n| (n / 2 + 1..n).map(move |k| (n, k)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", cfg.jobs)))?;
    let reports = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(n, k)| {
                let r = cliquetree::enumeration::verify_main_theorem(n, k, cfg.enum_cap, cfg.tolerance)?;
                save_report(&r, &report_path(cfg, n, k))?;
                Ok(r)
            })
            .collect::<CliResult<Vec<_>>>()
    })?;
    let rows: Vec<SummaryRow> = reports.iter().map(SummaryRow::from).collect();
    std::fs::create_dir_all(&cfg.output_dir).map_err(|e| CliError::io(&cfg.output_dir, e))?;
    let summary = cfg.output_dir.join("summary.csv");
    let mut w = csv::Writer::from_path(&summary).map_err(|e| CliError::Load {
        path: summary.clone(),
        msg: e.to_string(),
    })?;
    for row in &rows {
        w.serialize(row)?;
    }
    w.flush().map_err(|e| CliError::io(&summary, e))?;
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("({},{})", r.n, r.k))
        .collect();
    match cfg.format {
        Format::Csv => emit(&rows, cfg.format)?,
        Format::Json => emit(
            &Sweep {
                all_passed: failed.is_empty(),
                results: rows,
            },
            cfg.format,
        )?,
    }
    if !failed.is_empty() {
        return Err(CliError::Verification(format!("failed pairs: {}", failed.join(", "))));
    }
    Ok(())
}

pub fn verify_remark(cfg: &RunConfig, nmin: usize, nmax: usize) -> CliResult<()> {
    let reports = (nmin..=nmax)
        .map(|n| verify_remark_range(n, cfg.enum_cap))
        .collect::<Result<Vec<_>, Error>>()?;
    emit(&reports, cfg.format)?;
    let failed: Vec<usize> = reports.iter().filter(|r| !r.holds).map(|r| r.n).collect();
    if !failed.is_empty() {
        return Err(CliError::Verification(format!("range of Z differs for n = {failed:?}")));
    }
    Ok(())
}

pub fn verify_lemmas(cfg: &RunConfig, count: usize, perron_nmax: usize) -> CliResult<()> {
    let reports = run_lemma_suites(cfg.seed, count, perron_nmax, cfg.enum_cap)?;
    emit(&reports, cfg.format)?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.name.as_str())
        .collect();
    if !failed.is_empty() {
        return Err(CliError::Verification(format!("suites failed: {}", failed.join(", "))));
    }
    Ok(())
}
