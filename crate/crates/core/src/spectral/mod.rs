//! Adjacency spectra: spectral radius and Perron vectors, quotient matrices,
//! and the closed-form spectral data of the extremal clique tree.

mod eigen;
mod extremal;
mod perron;
mod quotient;

pub use eigen::{
    adjacency_eigenvalues, dense_spectral_radius, rayleigh_quotient, spectral_radius, Solver,
    SpectralResult, DEFAULT_TOL,
};
pub use extremal::{
    char_poly_extremal, eigenvector_families, extremal_quotient, f_poly, large_k_bound,
    lower_bound, small_k_bound, upper_bound, BoundCase, BoundParameters, Cubic, ExtremalCharPoly,
    UpperBound,
};
pub(crate) use perron::cmp_entries;
pub use perron::{order_by_perron, perron_argmax, perron_ge, perron_pendant_check, TIE_EPS};
pub use quotient::{quotient_matrix, QuotientMatrix};

/// "Strictly greater" in spectral comparisons means greater by at least this.
pub const STRICT_MARGIN: f64 = 1e-9;

/// Tolerance for grouping eigenvalues into multiplicity clusters.
pub const CLUSTER_TOL: f64 = 1e-7;

/// Groups an ascending spectrum into `(value, multiplicity)` clusters.
pub fn eigenvalue_multiplicities(sorted: &[f64]) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &v in sorted {
        match out.last_mut() {
            Some((c, m)) if (v - *c).abs() <= CLUSTER_TOL => *m += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}
