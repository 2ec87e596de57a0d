use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph_core::Graph;

pub const DEFAULT_TOL: f64 = 1e-12;
const POWER_MAX_ITER: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Solver {
    Power,
    Dense,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Unit 2-norm, entrywise positive for connected graphs.
    pub perron: Vec<f64>,
    /// `‖A·perron − rho·perron‖∞`
    pub residual: f64,
    pub iterations: usize,
    pub solver: Solver,
}

/// Spectral radius and Perron vector of a connected graph.
///
/// Power iteration on `A + I` from the all-ones vector, with the Rayleigh
/// quotient as the eigenvalue estimate. The shift makes `rho + 1` strictly
/// dominant even for bipartite graphs. If the residual does not reach `tol`
/// within the iteration cap the dense symmetric solver takes over.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    g.ensure_connected()?;
    check_tol(tol)?;
    if g.n() == 1 {
        return Ok(trivial());
    }
    match power_iteration(g, tol) {
        Some(res) => Ok(res),
        None => dense_spectral_radius(g, tol),
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

fn trivial() -> SpectralResult {
    SpectralResult {
        rho: 0.0,
        perron: vec![1.0],
        residual: 0.0,
        iterations: 0,
        solver: Solver::Dense,
    }
}

fn residual(g: &Graph, x: &[f64], rho: f64) -> f64 {
    g.mul_adjacency(x)
        .iter()
        .zip(x)
        .map(|(ax, xi)| (ax - rho * xi).abs())
        .fold(0.0, f64::max)
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= norm);
}

fn power_iteration(g: &Graph, tol: f64) -> Option<SpectralResult> {
    let n = g.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    for it in 0..POWER_MAX_ITER {
        let ax = g.mul_adjacency(&x);
        let rho: f64 = ax.iter().zip(&x).map(|(a, b)| a * b).sum();
        let res = ax
            .iter()
            .zip(&x)
            .map(|(a, xi)| (a - rho * xi).abs())
            .fold(0.0, f64::max);
        if res <= tol {
            return Some(SpectralResult {
                rho,
                perron: x,
                residual: res,
                iterations: it,
                solver: Solver::Power,
            });
        }
        x = ax.iter().zip(&x).map(|(a, b)| a + b).collect();
        normalize(&mut x);
    }
    None
}

/// Largest eigenpair from the full symmetric eigendecomposition, polished by
/// shifted inverse iteration if needed.
pub fn dense_spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    g.ensure_connected()?;
    check_tol(tol)?;
    if g.n() == 1 {
        return Ok(trivial());
    }
    let a = g.adjacency_matrix();
    let eig = SymmetricEigen::new(a.clone());
    let (idx, &rho) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.total_cmp(y.1))
        .expect("non-empty spectrum");
    let mut x: Vec<f64> = eig.eigenvectors.column(idx).iter().copied().collect();
    orient(&mut x);
    let mut rho = rho;
    let mut res = residual(g, &x, rho);
    let mut iterations = 0;
    while res > tol && iterations < 3 {
        iterations += 1;
        let shift = rho + 1e-10 * rho.abs().max(1.0);
        let m = &a - DMatrix::identity(g.n(), g.n()) * shift;
        let Some(y) = m.lu().solve(&DVector::from_column_slice(&x)) else {
            break;
        };
        x = y.iter().copied().collect();
        orient(&mut x);
        rho = rayleigh_quotient(g, &x)?;
        res = residual(g, &x, rho);
    }
    if res > tol {
        return Err(Error::NonConvergence { tol, residual: res });
    }
    Ok(SpectralResult {
        rho,
        perron: x,
        residual: res,
        iterations,
        solver: Solver::Dense,
    })
}

fn orient(x: &mut [f64]) {
    if x.iter().sum::<f64>() < 0.0 {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    normalize(x);
}

/// All adjacency eigenvalues, ascending.
pub fn adjacency_eigenvalues(g: &Graph) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(g.adjacency_matrix())
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// `2 Σ_{u~w} x_u x_w / Σ x_u²`.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: x.len(),
        });
    }
    let denom: f64 = x.iter().map(|v| v * v).sum();
    if denom == 0.0 {
        return Err(Error::ZeroVector);
    }
    let num: f64 = g.edges().map(|(u, w)| x[u] * x[w]).sum();
    Ok(2.0 * num / denom)
}
