//! Banded matrix storage and pivoted LU factorization.
//!
//! Storage is diagonal-major: diagonal `d = i - j + ku` is contiguous,
//! indexed by column. Factorization uses partial (row) pivoting with the
//! usual `kl` extra superdiagonals of fill, so high-order derivative
//! matrices with ill-scaled boundary rows are handled without drama.
//! [`dense_solve_oracle`] is a textbook dense elimination kept as an
//! independent cross-check.

use crate::{Error, Result};

/// Relative pivot threshold: a pivot column whose largest entry falls below
/// `SINGULARITY_THRESHOLD * ||A||_inf` is treated as exactly singular.
pub const SINGULARITY_THRESHOLD: f64 = 1e-14;

/// Square banded matrix of dimension `n` with `kl` subdiagonals and `ku`
/// superdiagonals. Entries outside the band are identically zero.
#[derive(Clone, Debug, PartialEq)]
pub struct BandedMatrix {
    n: usize,
    kl: usize,
    ku: usize,
    /// `data[d * n + j]` holds `A[i][j]` with `d = i - j + ku`.
    data: Vec<f64>,
}

impl BandedMatrix {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        assert!(n >= 1, "banded matrix dimension must be at least 1");
        assert!(kl < n && ku < n, "bandwidths must be smaller than n");
        BandedMatrix {
            n,
            kl,
            ku,
            data: vec![0.0; (kl + ku + 1) * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn lower_bandwidth(&self) -> usize {
        self.kl
    }

    pub fn upper_bandwidth(&self) -> usize {
        self.ku
    }

    #[inline]
    fn in_band(&self, i: usize, j: usize) -> bool {
        let diff = i as isize - j as isize;
        -(self.ku as isize) <= diff && diff <= self.kl as isize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.n && j < self.n);
        if self.in_band(i, j) {
            let d = (i + self.ku - j) as usize;
            self.data[d * self.n + j]
        } else {
            0.0
        }
    }

    /// Sets an in-band entry. Writing outside the band is a programming
    /// error and panics.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        assert!(
            self.in_band(i, j),
            "entry ({i}, {j}) outside band kl = {}, ku = {}",
            self.kl,
            self.ku
        );
        let d = i + self.ku - j;
        self.data[d * self.n + j] = v;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: f64) {
        let old = self.get(i, j);
        self.set(i, j, old + v);
    }

    /// Column range with possibly nonzero entries in row `i`.
    pub fn col_range(&self, i: usize) -> std::ops::Range<usize> {
        let lo = i.saturating_sub(self.kl);
        let hi = (i + self.ku + 1).min(self.n);
        lo..hi
    }

    /// Clears row `i` to zero (within the band).
    pub fn clear_row(&mut self, i: usize) {
        for j in self.col_range(i) {
            self.set(i, j, 0.0);
        }
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n, "matvec length mismatch");
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let mut acc = 0.0;
            for j in self.col_range(i) {
                acc += self.get(i, j) * x[j];
            }
            y[i] = acc;
        }
        y
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row_abs_sum(i))
            .fold(0.0f64, f64::max)
    }

    pub fn row_abs_sum(&self, i: usize) -> f64 {
        self.col_range(i).map(|j| self.get(i, j).abs()).sum()
    }

    /// Dense expansion, for tests and the dense oracle.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for (i, row) in a.iter_mut().enumerate() {
            for j in self.col_range(i) {
                row[j] = self.get(i, j);
            }
        }
        a
    }
}

/// Pivoted LU factorization of a [`BandedMatrix`].
///
/// The factored band carries `kl + ku` superdiagonals (fill from row
/// pivoting); `pivots[j]` records the row swapped into position `j`.
#[derive(Clone, Debug)]
pub struct BandedLu {
    n: usize,
    kl: usize,
    /// Upper bandwidth of U after pivoting: `ku + kl`.
    ku_eff: usize,
    /// `data[d * n + j]` holds the factor entry at `(i, j)` with
    /// `d = i - j + ku_eff`; subdiagonal part stores the L multipliers.
    data: Vec<f64>,
    pivots: Vec<usize>,
}

/// Factors `a` with partial pivoting.
///
/// Errors with [`Error::Singular`] when a pivot column has no entry larger
/// than [`SINGULARITY_THRESHOLD`] relative to `||a||_inf`.
pub fn lu_factor(a: &BandedMatrix) -> Result<BandedLu> {
    let n = a.n;
    let kl = a.kl;
    let ku_eff = a.ku + a.kl;
    let ldiag = kl + ku_eff + 1;
    let mut data = vec![0.0; ldiag * n];
    // copy A into the widened band
    for i in 0..n {
        for j in a.col_range(i) {
            data[(i + ku_eff - j) * n + j] = a.get(i, j);
        }
    }
    let anorm = a.inf_norm();
    let tol = SINGULARITY_THRESHOLD * anorm;

    let get = |data: &[f64], i: usize, j: usize| -> f64 {
        let diff = i as isize - j as isize;
        if -(ku_eff as isize) <= diff && diff <= kl as isize {
            data[(i + ku_eff - j) * n + j]
        } else {
            0.0
        }
    };
    let idx = move |i: usize, j: usize| -> usize { (i + ku_eff - j) * n + j };

    let mut pivots = vec![0usize; n];
    for j in 0..n {
        let imax = (j + kl).min(n - 1);
        let mut piv = j;
        let mut pmag = get(&data, j, j).abs();
        for i in (j + 1)..=imax {
            let m = get(&data, i, j).abs();
            if m > pmag {
                pmag = m;
                piv = i;
            }
        }
        if pmag <= tol {
            return Err(Error::Singular(format!(
                "pivot {pmag:.3e} in column {j} below threshold {tol:.3e} (|A| = {anorm:.3e})"
            )));
        }
        pivots[j] = piv;
        let jmax = (j + ku_eff).min(n - 1);
        if piv != j {
            for c in j..=jmax {
                data.swap(idx(j, c), idx(piv, c));
            }
        }
        let diag = data[idx(j, j)];
        for i in (j + 1)..=imax {
            let mult = data[idx(i, j)] / diag;
            data[idx(i, j)] = mult;
            if mult != 0.0 {
                for c in (j + 1)..=jmax {
                    data[idx(i, c)] -= mult * data[idx(j, c)];
                }
            }
        }
    }

    Ok(BandedLu {
        n,
        kl,
        ku_eff,
        data,
        pivots,
    })
}

impl BandedLu {
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    fn entry(&self, i: usize, j: usize) -> f64 {
        self.data[(i + self.ku_eff - j) * self.n + j]
    }

    /// Solves `A x = rhs` using the stored factors.
    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        if rhs.len() != self.n {
            return Err(Error::validation(format!(
                "rhs length {} does not match system dimension {}",
                rhs.len(),
                self.n
            )));
        }
        let n = self.n;
        let mut b = rhs.to_vec();
        // forward: apply pivots and L
        for j in 0..n {
            let p = self.pivots[j];
            if p != j {
                b.swap(j, p);
            }
            let bj = b[j];
            if bj != 0.0 {
                let imax = (j + self.kl).min(n - 1);
                for i in (j + 1)..=imax {
                    b[i] -= self.entry(i, j) * bj;
                }
            }
        }
        // back substitution with U
        for i in (0..n).rev() {
            let jmax = (i + self.ku_eff).min(n - 1);
            let mut acc = b[i];
            for j in (i + 1)..=jmax {
                acc -= self.entry(i, j) * b[j];
            }
            b[i] = acc / self.entry(i, i);
        }
        Ok(b)
    }
}

/// Textbook dense Gaussian elimination with partial pivoting.
///
/// Cross-check oracle only: `a` is a dense row-major square matrix.
pub fn dense_solve_oracle(a: &[Vec<f64>], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = a.len();
    if n == 0 || a.iter().any(|r| r.len() != n) || rhs.len() != n {
        return Err(Error::validation(
            "dense oracle requires a square matrix and matching rhs".to_string(),
        ));
    }
    let anorm = a
        .iter()
        .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0f64, f64::max);
    let tol = SINGULARITY_THRESHOLD * anorm;
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut b = rhs.to_vec();
    for j in 0..n {
        let (piv, pmag) = (j..n)
            .map(|i| (i, m[i][j].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if pmag <= tol {
            return Err(Error::Singular(format!(
                "dense oracle: pivot {pmag:.3e} in column {j} below threshold {tol:.3e}"
            )));
        }
        m.swap(j, piv);
        b.swap(j, piv);
        for i in (j + 1)..n {
            let mult = m[i][j] / m[j][j];
            if mult != 0.0 {
                m[i][j] = 0.0;
                for c in (j + 1)..n {
                    let mjc = m[j][c];
                    m[i][c] -= mult * mjc;
                }
                b[i] -= mult * b[j];
            }
        }
    }
    for i in (0..n).rev() {
        let mut acc = b[i];
        for c in (i + 1)..n {
            acc -= m[i][c] * b[c];
        }
        b[i] = acc / m[i][i];
    }
    Ok(b)
}
