//! Spectral algebra of the extremal clique tree `K_{2k−n+2}` with `n−k−1`
//! triangles sharing one cut vertex: its quotient cubic, the factored
//! characteristic polynomial, explicit `±1` eigenvectors, and bounds on its
//! spectral radius.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::zero_forcing::check_nk;

/// Monic cubic `x³ + c2 x² + c1 x + c0` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cubic {
    /// `[1, c2, c1, c0]`
    pub coeffs: [i64; 4],
}

impl Cubic {
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    fn derivative(&self, x: f64) -> f64 {
        let [a, b, c, _] = self.coeffs.map(|c| c as f64);
        3.0 * a * x * x + 2.0 * b * x + c
    }

    /// Real roots, ascending: three when the discriminant allows, else one.
    ///
    /// Trigonometric or Cardano closed form on the depressed cubic, then a
    /// few Newton steps on the original polynomial.
    pub fn real_roots(&self) -> Vec<f64> {
        let [_, c2, c1, c0] = self.coeffs.map(|c| c as f64);
        let shift = c2 / 3.0;
        let p = c1 - c2 * c2 / 3.0;
        let q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
        let disc = q * q / 4.0 + p * p * p / 27.0;
        let mut roots = if p < 0.0 && disc <= 0.0 {
            let r = 2.0 * (-p / 3.0).sqrt();
            let arg = ((3.0 * q) / (p * r)).clamp(-1.0, 1.0);
            let theta = arg.acos() / 3.0;
            (0..3)
                .map(|j| r * (theta - 2.0 * std::f64::consts::PI * j as f64 / 3.0).cos() - shift)
                .collect::<Vec<_>>()
        } else {
            let s = disc.max(0.0).sqrt();
            vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt() - shift]
        };
        for r in &mut roots {
            *r = self.polish(*r);
        }
        roots.sort_by(f64::total_cmp);
        roots
    }

    fn polish(&self, mut x: f64) -> f64 {
        for _ in 0..8 {
            let d = self.derivative(x);
            if d.abs() < 1e-12 {
                break;
            }
            let step = self.eval(x) / d;
            x -= step;
            if step.abs() <= 1e-15 * x.abs().max(1.0) {
                break;
            }
        }
        x
    }

    pub fn largest_root(&self) -> f64 {
        *self.real_roots().last().expect("a cubic has a real root")
    }
}

/// `det(xI − Q)` for the 3×3 equitable quotient
/// `[[2k−n, 1, 0], [2k−n+1, 0, 2(n−k−1)], [0, 1, 1]]`.
///
/// Expanding the determinant gives
/// `x³ + (n−2k−1)x² − (2n−2k−1)x + 2(2k−n)(n−k−1) + (2k−n+1)`.
pub fn f_poly(n: usize, k: usize) -> Result<Cubic> {
    check_nk(n, k)?;
    let (n, k) = (n as i64, k as i64);
    let t = n - k - 1;
    Ok(Cubic {
        coeffs: [1, n - 2 * k - 1, -(2 * n - 2 * k - 1), 2 * (2 * k - n) * t + (2 * k - n + 1)],
    })
}

/// The 3×3 quotient above, rows ordered (clique leaves, center, triangle leaves).
pub fn extremal_quotient(n: usize, k: usize) -> Result<[[i64; 3]; 3]> {
    check_nk(n, k)?;
    let (n, k) = (n as i64, k as i64);
    Ok([[2 * k - n, 1, 0], [2 * k - n + 1, 0, 2 * (n - k - 1)], [0, 1, 1]])
}

/// `g(x) = (x−1)^ones (x+1)^minus_ones f(x)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalCharPoly {
    pub n: usize,
    pub k: usize,
    pub ones: usize,
    pub minus_ones: usize,
    pub f: Cubic,
}

impl ExtremalCharPoly {
    /// Predicted adjacency spectrum with multiplicity, ascending.
    pub fn spectrum(&self) -> Vec<f64> {
        let mut ev = vec![-1.0; self.minus_ones];
        ev.extend(std::iter::repeat_n(1.0, self.ones));
        ev.extend(self.f.real_roots());
        ev.sort_by(f64::total_cmp);
        ev
    }
}

pub fn char_poly_extremal(n: usize, k: usize) -> Result<ExtremalCharPoly> {
    check_nk(n, k)?;
    if k == n - 1 {
        return Err(Error::BoundaryCase { n, k });
    }
    Ok(ExtremalCharPoly {
        n,
        k,
        ones: n - k - 2,
        minus_ones: k - 1,
        f: f_poly(n, k)?,
    })
}

/// Integer eigenvectors of the extremal graph as laid out by
/// [`crate::enumeration::build_extremal`]: the first family has eigenvalue
/// −1, the second eigenvalue 1.
pub fn eigenvector_families(n: usize, k: usize) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    check_nk(n, k)?;
    let leaves = 2 * k + 1 - n;
    let triangles = n - k - 1;
    let tri = |i: usize| (leaves + 1 + 2 * i, leaves + 2 + 2 * i);
    let unit_diff = |plus: &[usize], minus: &[usize]| {
        let mut x = vec![0i64; n];
        plus.iter().for_each(|&v| x[v] += 1);
        minus.iter().for_each(|&v| x[v] -= 1);
        x
    };

    let mut minus_one = Vec::new();
    for j in 2..=leaves {
        minus_one.push(unit_diff(&[1], &[j]));
    }
    for i in 0..triangles {
        let (a, b) = tri(i);
        minus_one.push(unit_diff(&[a], &[b]));
    }
    let mut plus_one = Vec::new();
    let (a0, b0) = tri(0);
    for i in 1..triangles {
        let (a, b) = tri(i);
        plus_one.push(unit_diff(&[a0, b0], &[a, b]));
    }
    Ok((minus_one, plus_one))
}

/// Proper subgraphs `K_{2k−n+2}` and `K_{1,n−1}` give
/// `max{2k−n+1, √(n−1)}` as a lower bound on the spectral radius.
pub fn lower_bound(n: usize, k: usize) -> Result<f64> {
    check_nk(n, k)?;
    Ok(((2 * k + 1 - n) as f64).max(((n - 1) as f64).sqrt()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundParameters {
    pub n: usize,
    pub k: usize,
    /// `2k − n + 1`
    pub a: i64,
    /// `√(n − 1)`
    pub b: f64,
    /// `2n − 2ab + a − 3`
    pub alpha: f64,
    /// `(1 − a)(a − b) + k − k(n − a)`
    pub beta: f64,
}

impl BoundParameters {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_nk(n, k)?;
        let a = 2 * k as i64 - n as i64 + 1;
        let (af, nf, kf) = (a as f64, n as f64, k as f64);
        let b = (nf - 1.0).sqrt();
        Ok(BoundParameters {
            n,
            k,
            a,
            b,
            alpha: 2.0 * nf - 2.0 * af * b + af - 3.0,
            beta: (1.0 - af) * (af - b) + kf - kf * (nf - af),
        })
    }

    /// `k ≤ (n − 1 + √(n − 1))/2`, i.e. `a ≤ √(n − 1)`, decided in integers.
    pub fn is_small_k(&self) -> bool {
        self.a * self.a < self.n as i64
    }

    /// Sign of `3b − a`, decided in integers as `a² < 9(n − 1)`.
    pub fn large_k_applicable(&self) -> bool {
        self.a * self.a < 9 * (self.n as i64 - 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundCase {
    /// `⌊n/2⌋ + 1 ≤ k ≤ (n − 1 + √(n − 1))/2`
    SmallK,
    /// `(n − 1 + √(n − 1))/2 < k ≤ n − 1`
    LargeK,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UpperBound {
    pub value: f64,
    pub case: BoundCase,
}

/// `a + [n − a(a+1) + √((a² + a − n)² + 8ak(n−1−a))] / (4a)`
pub fn small_k_bound(p: &BoundParameters) -> f64 {
    let (a, n, k) = (p.a as f64, p.n as f64, p.k as f64);
    let disc = (a * a + a - n).powi(2) + 8.0 * a * k * (n - 1.0 - a);
    a + (n - a * (a + 1.0) + disc.sqrt()) / (4.0 * a)
}

/// `b + [√(α² − 4β(3b − a)) − α] / (2(3b − a))`; `None` unless `3b − a > 0`.
pub fn large_k_bound(p: &BoundParameters) -> Option<f64> {
    if !p.large_k_applicable() {
        return None;
    }
    let c = 3.0 * p.b - p.a as f64;
    let disc = p.alpha * p.alpha - 4.0 * p.beta * c;
    Some(p.b + (disc.sqrt() - p.alpha) / (2.0 * c))
}

/// Two-case upper bound on the extremal spectral radius. Fails with
/// [`Error::Case2NotApplicable`] when the large-k formula needs `3b − a > 0`
/// and that does not hold.
pub fn upper_bound(n: usize, k: usize) -> Result<UpperBound> {
    let p = BoundParameters::new(n, k)?;
    if p.is_small_k() {
        return Ok(UpperBound {
            value: small_k_bound(&p),
            case: BoundCase::SmallK,
        });
    }
    match large_k_bound(&p) {
        Some(value) => Ok(UpperBound {
            value,
            case: BoundCase::LargeK,
        }),
        None => Err(Error::Case2NotApplicable {
            n,
            k,
            value: 3.0 * p.b - p.a as f64,
        }),
    }
}
