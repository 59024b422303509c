//! The circulant quadratic form A_z on ℝ^{Mℓ}: −cos(2πz/Mℓ) on the diagonal
//! and 1/2 on the two cyclic off-diagonals.

use std::f64::consts::PI;

use num::Integer;
use serde::{Deserialize, Serialize};

use super::jacobi::{jacobi_eigenvalues, SymmetricMatrix};
use super::StructureError;
use crate::rational::Rational;

/// Comparison tolerance for floating-point eigenvalues.
pub const EIGEN_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculantForm {
    m: u64,
    ell: u64,
    z: Rational,
}

impl CirculantForm {
    /// Requires Mℓ odd and 0 ≤ −z < Mℓ/4.
    pub fn new(m: u64, ell: u64, z: Rational) -> Result<Self, StructureError> {
        if m == 0 || ell == 0 || (m * ell).is_even() {
            return Err(StructureError::EvenProduct { m, ell });
        }
        let window = Rational::new((m * ell) as i64, 4);
        if z.is_positive() || -&z >= window {
            return Err(StructureError::OutsideWindow { z, m, ell });
        }
        Ok(CirculantForm { m, ell, z })
    }

    /// Picks the smallest odd M with −z < Mℓ/4.
    pub fn with_auto_m(ell: u64, z: Rational) -> Result<Self, StructureError> {
        if ell.is_even() || ell == 0 {
            return Err(StructureError::EvenProduct { m: 1, ell });
        }
        if z.is_positive() {
            return Err(StructureError::OutsideWindow { z, m: 1, ell });
        }
        // −z < Mℓ/4  ⇔  M > −4z/ℓ
        let bound = (-&z) * Rational::from_integer(4) / Rational::from(ell);
        let mut m = (bound.floor_i64() + 1).max(1) as u64;
        if m.is_even() {
            m += 1;
        }
        Self::new(m, ell, z)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn z(&self) -> &Rational {
        &self.z
    }

    pub fn matrix_dim(&self) -> usize {
        (self.m * self.ell) as usize
    }

    fn diagonal(&self) -> f64 {
        -(2.0 * PI * self.z.to_f64() / self.matrix_dim() as f64).cos()
    }

    pub fn matrix(&self) -> SymmetricMatrix {
        let n = self.matrix_dim();
        let mut a = SymmetricMatrix::zeros(n);
        let diag = self.diagonal();
        for i in 0..n {
            a.add(i, i, diag);
        }
        // n is odd; for n = 1 both cyclic neighbours are the entry itself.
        for i in 0..n {
            let j = (i + 1) % n;
            if j == i {
                a.add(i, i, 1.0);
            } else {
                a.set(i, j, 0.5);
            }
        }
        a
    }

    /// λ_k = cos(2πk/Mℓ) − cos(2πz/Mℓ) for k = 0..Mℓ−1.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.matrix_dim() as f64;
        let shift = self.diagonal();
        (0..self.matrix_dim())
            .map(|k| (2.0 * PI * k as f64 / n).cos() + shift)
            .collect()
    }

    /// Exact sign test: λ_k ≥ 0 iff the cyclic distance of k from 0 is at
    /// most −z (both angles lie in [0, π] there, where cos is decreasing).
    pub fn is_nonnegative_mode(&self, k: u64) -> bool {
        let n = self.m * self.ell;
        let k = k % n;
        let dist = k.min(n - k);
        Rational::from(dist) <= -&self.z
    }

    /// 1 + 2⌊−z⌋.
    pub fn index_count(&self) -> u64 {
        let idx = 1 + 2 * (-&self.z).floor_i64() as u64;
        debug_assert_eq!(idx, self.count_nonnegative_modes(|_| true));
        idx
    }

    /// 1 + 2⌊−z/ℓ⌋, the index on the subspace fixed by the ℤ/ℓ action
    /// (Fourier modes with k ≡ 0 mod ℓ).
    pub fn fixed_index_count(&self) -> u64 {
        let idx = 1 + 2 * ((-&self.z) / Rational::from(self.ell)).floor_i64() as u64;
        debug_assert_eq!(idx, self.count_nonnegative_modes(|k| k % self.ell == 0));
        idx
    }

    fn count_nonnegative_modes(&self, keep: impl Fn(u64) -> bool) -> u64 {
        (0..self.m * self.ell)
            .filter(|&k| keep(k) && self.is_nonnegative_mode(k))
            .count() as u64
    }

    /// Nonnegative count from the floating-point closed formula with exact
    /// zeros detected symbolically.
    pub fn closed_formula_count(&self, keep: impl Fn(u64) -> bool) -> u64 {
        let n = self.m * self.ell;
        let integral_shift = self.z.is_integer().then(|| (-&self.z).floor_i64() as u64 % n);
        self.eigenvalues()
            .into_iter()
            .enumerate()
            .filter(|&(k, lambda)| {
                let k = k as u64;
                let exact_zero = integral_shift.is_some_and(|s| k == s || k == (n - s) % n);
                keep(k) && (exact_zero || lambda >= 0.0)
            })
            .count() as u64
    }

    /// Eigenvalues of the dense matrix by cyclic Jacobi, ascending.
    pub fn dense_eigenvalues(&self) -> Vec<f64> {
        jacobi_eigenvalues(self.matrix())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub form: CirculantForm,
    pub matrix_dim: usize,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
    pub index_count: u64,
    pub fixed_index_count: u64,
    /// Closed-form eigenvalues agree with the Jacobi eigensolver within
    /// tolerance and both counts match.
    pub oracle_agrees: bool,
}

pub fn spectrum_report(form: &CirculantForm) -> SpectrumReport {
    let mut closed = form.eigenvalues();
    closed.sort_by(f64::total_cmp);
    let dense = form.dense_eigenvalues();
    let values_agree = closed
        .iter()
        .zip(&dense)
        .all(|(a, b)| (a - b).abs() <= EIGEN_TOLERANCE);
    let dense_count = dense.iter().filter(|&&x| x >= -EIGEN_TOLERANCE).count() as u64;
    let index_count = form.index_count();
    SpectrumReport {
        form: form.clone(),
        matrix_dim: form.matrix_dim(),
        min_eigenvalue: closed[0],
        max_eigenvalue: closed[closed.len() - 1],
        index_count,
        fixed_index_count: form.fixed_index_count(),
        oracle_agrees: values_agree
            && dense_count == index_count
            && form.closed_formula_count(|_| true) == index_count
            && form.closed_formula_count(|k| k % form.ell() == 0) == form.fixed_index_count(),
    }
}
