//! Real symmetric eigensolver and grouped spectra.
//!
//! Eigenpairs come from the cyclic Jacobi method. A symmetric matrix whose
//! sparsity graph is disconnected is block diagonal up to a permutation, so
//! each irreducible block is diagonalized on its own and the results merged.

use crate::error::{Error, Result};
use crate::matrix::{components_of, IntMatrix};

/// Default relative numerical tolerance.
pub const TAU_NUM: f64 = 1e-10;
/// Default relative tolerance for grouping equal eigenvalues.
pub const TAU_GROUP: f64 = 1e-8;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues and orthonormal eigenvectors of a symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    /// Sorted descending.
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi on a dense row-major symmetric matrix of order `n`.
pub fn jacobi(a: &[f64], n: usize) -> SymmetricEigen {
    let mut a = a.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= f64::EPSILON * scale.max(f64::MIN_POSITIVE) * 1e-2 || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    SymmetricEigen {
        values: order.iter().map(|&i| a[i * n + i]).collect(),
        vectors: order
            .iter()
            .map(|&i| (0..n).map(|k| v[k * n + i]).collect())
            .collect(),
    }
}

/// Full eigendecomposition of a symmetric integer matrix.
pub fn eigen_decomposition(m: &IntMatrix) -> Result<SymmetricEigen> {
    check_symmetric(m)?;
    let n = m.rows();
    let mut pairs: Vec<(f64, Vec<f64>)> = Vec::with_capacity(n);
    for block in blocks(m) {
        let sub = m.select(&block, &block);
        let e = jacobi(&sub.to_f64(), block.len());
        for (val, vec) in e.values.into_iter().zip(e.vectors) {
            let mut full = vec![0.0; n];
            for (x, &i) in vec.iter().zip(&block) {
                full[i] = *x;
            }
            pairs.push((val, full));
        }
    }
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    let (values, vectors) = pairs.into_iter().unzip();
    Ok(SymmetricEigen { values, vectors })
}

fn check_symmetric(m: &IntMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    match m.asymmetry() {
        Some((row, col)) => Err(Error::NotSymmetric { row, col }),
        None => Ok(()),
    }
}

fn blocks(m: &IntMatrix) -> Vec<Vec<usize>> {
    let n = m.rows();
    components_of(n, |i| (0..n).filter(move |&j| j != i && m.get(i, j) != 0))
}

/// Eigenvalues sorted descending, with groups of numerically equal values.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    groups: Vec<(f64, usize)>,
    tolerance: f64,
}

impl Spectrum {
    /// Groups sorted values: a value joins the current group when it lies
    /// within `tolerance` of the previous value.
    pub fn from_values(mut values: Vec<f64>, tolerance: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut sums: Vec<f64> = Vec::new();
        let mut last = f64::INFINITY;
        for &x in &values {
            match groups.last_mut() {
                Some(g) if last - x <= tolerance => {
                    g.1 += 1;
                    *sums.last_mut().unwrap() += x;
                }
                _ => {
                    groups.push((x, 1));
                    sums.push(x);
                }
            }
            last = x;
        }
        for (g, s) in groups.iter_mut().zip(sums) {
            g.0 = s / g.1 as f64;
        }
        Spectrum {
            eigenvalues: values,
            groups,
            tolerance,
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// `(representative, multiplicity)`, descending.
    pub fn groups(&self) -> &[(f64, usize)] {
        &self.groups
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// Number of distinct eigenvalues.
    pub fn distinct_count(&self) -> usize {
        self.groups.len()
    }

    /// Whether the multiset is invariant under negation.
    pub fn is_symmetric_about_zero(&self) -> bool {
        let v = &self.eigenvalues;
        (0..v.len()).all(|i| (v[i] + v[v.len() - 1 - i]).abs() <= self.tolerance)
    }

    pub fn power_sum(&self, p: i32) -> f64 {
        self.eigenvalues.iter().map(|x| x.powi(p)).sum()
    }
}

/// Spectrum of a symmetric integer matrix with the default tolerances.
///
/// ```
/// use unispec::{eigen::eigen_spectrum, IntMatrix};
///
/// let c3 = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
/// let s = eigen_spectrum(&c3).unwrap();
/// assert_eq!(s.groups().len(), 2);
/// assert!((s.groups()[0].0 - 2.0).abs() < 1e-12);
/// assert_eq!(s.groups()[1].1, 2);
/// ```
pub fn eigen_spectrum(m: &IntMatrix) -> Result<Spectrum> {
    eigen_spectrum_with(m, TAU_NUM, TAU_GROUP)
}

/// Spectrum with explicit tolerances. Values are grouped at
/// `max(tau_num, tau_group * max(1, ||M||_inf))`.
pub fn eigen_spectrum_with(m: &IntMatrix, tau_num: f64, tau_group: f64) -> Result<Spectrum> {
    check_symmetric(m)?;
    let mut values = Vec::with_capacity(m.rows());
    for block in blocks(m) {
        let sub = m.select(&block, &block);
        values.extend(jacobi(&sub.to_f64(), block.len()).values);
    }
    Ok(Spectrum::from_values(
        values,
        group_tolerance(m, tau_num, tau_group),
    ))
}

pub fn group_tolerance(m: &IntMatrix, tau_num: f64, tau_group: f64) -> f64 {
    tau_num.max(tau_group * m.inf_norm().max(1.0))
}
