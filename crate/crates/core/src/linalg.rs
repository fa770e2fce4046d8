//! Dense complex linear algebra for 2x2 and 4x4 operators.
//!
//! Everything here is sized for two-qubit work: matrices are immutable
//! values, every operation returns a fresh matrix, and the eigensolver is
//! a cyclic Jacobi iteration for complex Hermitian input. The global basis
//! convention is |00>, |01>, |10>, |11> with the first qubit as the slow
//! (left) tensor index.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_JACOBI_SWEEPS: usize = 100;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

/// Eigenvalues (descending) and the unitary of column eigenvectors of a
/// Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Eigensystem<T> {
    pub values: Vec<T>,
    pub vectors: ComplexMatrix<T>,
}

impl<T: Real> ComplexMatrix<T> {
    /// Builds a matrix from row-major entries, rejecting size mismatches
    /// and non-finite values.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::Shape {
                context: "entry count must equal rows * cols",
            });
        }
        for (k, z) in data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite {
                    row: k / cols,
                    col: k % cols,
                });
            }
        }
        Ok(Self { rows, cols, data })
    }

    fn raw(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::raw(rows, cols, vec![Complex::new(T::zero(), T::zero()); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex::new(T::one(), T::zero()));
        }
        m
    }

    /// Diagonal matrix with the given real entries.
    pub fn diag_re(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in entries.iter().enumerate() {
            m.set(i, i, Complex::new(v, T::zero()));
        }
        m
    }

    /// Builds from nested rows; all rows must share one length.
    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape {
                context: "ragged rows",
            });
        }
        Self::new(r, c, rows.iter().flatten().copied().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex<T>) {
        self.data[i * self.cols + j] = value;
    }

    /// Standard matrix product.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape {
                context: "inner dimensions must agree for multiplication",
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conjugate(&self) -> Self {
        Self::raw(self.rows, self.cols, self.data.iter().map(|z| z.conj()).collect())
    }

    /// Kronecker product with `self` as the slow (first-qubit) index.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, a * rhs.get(i2, j2));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape {
                context: "addition needs equal dimensions",
            });
        }
        Ok(Self::raw(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape {
                context: "subtraction needs equal dimensions",
            });
        }
        Ok(Self::raw(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        ))
    }

    /// Scales every entry by a real factor.
    pub fn scale_re(&self, factor: T) -> Self {
        Self::raw(self.rows, self.cols, self.data.iter().map(|z| z.scale(factor)).collect())
    }

    pub fn trace(&self) -> Complex<T> {
        let mut t = Complex::new(T::zero(), T::zero());
        for i in 0..self.rows.min(self.cols) {
            t = t + self.get(i, i);
        }
        t
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), T::max)
    }

    /// Largest entrywise magnitude of the difference.
    pub fn max_abs_diff(&self, rhs: &Self) -> T {
        debug_assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Largest entrywise deviation from the conjugate transpose.
    pub fn hermiticity_deviation(&self) -> T {
        if !self.is_square() {
            return T::infinity();
        }
        let mut dev = T::zero();
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    /// Hermitian average `(m + m^dag) / 2`.
    pub fn hermitian_part(&self) -> Self {
        let adj = self.adjoint();
        self.add(&adj).expect("square").scale_re(T::one() / T::two())
    }

    fn off_diagonal_norm(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    s += self.get(i, j).norm_sqr();
                }
            }
        }
        s.sqrt()
    }

    fn diagonal_norm(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.rows {
            s += self.get(i, i).norm_sqr();
        }
        s.sqrt()
    }

    /// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
    ///
    /// `tol` bounds the admitted deviation from exact Hermiticity. The
    /// returned eigenvalues are sorted descending and the eigenvector
    /// columns follow the same order.
    pub fn hermitian_eigensystem(&self, tol: T) -> Result<Eigensystem<T>> {
        if !self.is_square() {
            return Err(Error::Shape {
                context: "eigendecomposition needs a square matrix",
            });
        }
        let dev = self.hermiticity_deviation();
        if dev > tol {
            return Err(Error::NotHermitian {
                deviation: dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        let n = self.rows;
        // Working on the Hermitian average keeps sub-tolerance asymmetry
        // from biasing the rotations.
        let mut a = self.hermitian_part();
        let mut v = Self::identity(n);

        for _ in 0..MAX_JACOBI_SWEEPS {
            if a.off_diagonal_norm() <= T::JACOBI_TOL * a.diagonal_norm() {
                return Ok(Self::sorted_eigensystem(a, v));
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    jacobi_rotation(&mut a, &mut v, p, q);
                }
            }
        }
        Err(Error::NoConvergence {
            sweeps: MAX_JACOBI_SWEEPS,
        })
    }

    fn sorted_eigensystem(a: Self, v: Self) -> Eigensystem<T> {
        let n = a.rows;
        let mut order: Vec<usize> = (0..n).collect();
        let diag: Vec<T> = (0..n).map(|i| a.get(i, i).re).collect();
        order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).expect("finite eigenvalue"));

        let values = order.iter().map(|&i| diag[i]).collect();
        let mut vectors = Self::zeros(n, n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..n {
                vectors.set(row, new_col, v.get(row, old_col));
            }
        }
        Eigensystem { values, vectors }
    }

    /// Hermitian square root via the eigendecomposition.
    ///
    /// Eigenvalues in `(-PSD_FLOOR, 0)` are clamped to zero; anything more
    /// negative is rejected.
    pub fn hermitian_sqrt(&self) -> Result<Self> {
        let eig = self.hermitian_eigensystem(T::CHECK_TOL)?;
        let mut roots = Vec::with_capacity(eig.values.len());
        for &lambda in &eig.values {
            if lambda < -T::PSD_FLOOR {
                return Err(Error::NotPsd {
                    eigenvalue: lambda.to_f64().unwrap_or(f64::NAN),
                });
            }
            roots.push(lambda.max(T::zero()).sqrt());
        }
        let d = Self::diag_re(&roots);
        let s = eig
            .vectors
            .multiply(&d)?
            .multiply(&eig.vectors.adjoint())?;
        Ok(s.hermitian_part())
    }
}

/// One Jacobi rotation zeroing the (p, q) entry of the Hermitian matrix
/// `a`, accumulating the unitary into `v`.
fn jacobi_rotation<T: Real>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let z = a.get(p, q);
    let zn = z.norm();
    if zn == T::zero() {
        return;
    }
    let phase = z.unscale(zn);
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    let tau = (app - aqq) / (T::two() * zn);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    let n = a.rows();
    let mut rot = ComplexMatrix::identity(n);
    rot.set(p, p, Complex::new(c, T::zero()));
    rot.set(p, q, -phase.scale(s));
    rot.set(q, p, phase.conj().scale(s));
    rot.set(q, q, Complex::new(c, T::zero()));

    let rotated = rot
        .adjoint()
        .multiply(a)
        .and_then(|m| m.multiply(&rot))
        .expect("rotation dims match");
    *a = rotated;
    let zero = Complex::new(T::zero(), T::zero());
    a.set(p, q, zero);
    a.set(q, p, zero);
    // The diagonal of a Hermitian matrix is real; drop rounding residue.
    for i in 0..n {
        let d = a.get(i, i);
        a.set(i, i, Complex::new(d.re, T::zero()));
    }
    *v = v.multiply(&rot).expect("rotation dims match");
}

/// The two-qubit spin-flip operator `sigma_y (x) sigma_y`, an anti-diagonal
/// of (-1, 1, 1, -1) in the fixed basis.
pub fn sigma_y_tensor_sigma_y<T: Real>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(4, 4);
    let one = Complex::new(T::one(), T::zero());
    m.set(0, 3, -one);
    m.set(1, 2, one);
    m.set(2, 1, one);
    m.set(3, 0, -one);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = ComplexMatrix<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn ad_e0(gamma: f64) -> M {
        M::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c((1.0 - gamma).sqrt(), 0.0)],
        ])
        .unwrap()
    }

    fn ad_e1(gamma: f64) -> M {
        M::from_rows(&[
            vec![c(0.0, 0.0), c(gamma.sqrt(), 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap()
    }

    #[test]
    fn identity_multiplication_is_neutral() {
        let m = M::from_rows(&[
            vec![c(0.3, 0.1), c(-0.2, 0.7)],
            vec![c(1.5, 0.0), c(0.0, -0.4)],
        ])
        .unwrap();
        let id = M::identity(2);
        assert_eq!(id.multiply(&m).unwrap(), m);
        assert_eq!(m.multiply(&id).unwrap(), m);
    }

    #[test]
    fn multiplication_rejects_mismatched_shapes() {
        let a = M::zeros(2, 3);
        let b = M::zeros(2, 3);
        assert!(matches!(a.multiply(&b), Err(Error::Shape { .. })));
    }

    #[test]
    fn damping_jump_operator_is_nilpotent() {
        let e1 = ad_e1(1.0);
        let sq = e1.multiply(&e1).unwrap();
        assert_eq!(sq.max_abs(), 0.0);
    }

    #[test]
    fn correlated_jump_times_its_adjoint_is_corner_projector() {
        // A1 has a single sqrt(gamma) entry in the upper-right corner, so
        // A1 A1^dag = diag(gamma, 0, 0, 0).
        let gamma: f64 = 0.7;
        let mut a1 = M::zeros(4, 4);
        a1.set(0, 3, c(gamma.sqrt(), 0.0));
        let prod = a1.multiply(&a1.adjoint()).unwrap();
        let expected = M::diag_re(&[gamma, 0.0, 0.0, 0.0]);
        assert!(prod.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn adjoint_of_real_diagonal_is_identity_operation() {
        let m = M::diag_re(&[2.0, -1.0, 0.5]);
        assert_eq!(m.adjoint(), m);
    }

    #[test]
    fn adjoint_conjugates_and_transposes() {
        let m = M::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let adj = m.adjoint();
        assert_eq!(adj.get(1, 0), c(0.0, -1.0));
        assert_eq!(adj.get(0, 1), c(0.0, 0.0));
    }

    #[test]
    fn adjoint_is_an_involution() {
        let m = M::from_rows(&[
            vec![c(0.3, 0.4), c(-1.0, 2.0)],
            vec![c(0.9, -0.2), c(0.0, 1.3)],
        ])
        .unwrap();
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let id2 = M::identity(2);
        assert_eq!(id2.tensor(&id2), M::identity(4));
    }

    #[test]
    fn tensor_of_no_jump_operators_matches_hand_kronecker() {
        let gamma = 0.5;
        let e0 = ad_e0(gamma);
        let k = e0.tensor(&e0);
        let root = (1.0 - gamma).sqrt();
        let expected = M::diag_re(&[1.0, root, root, 1.0 - gamma]);
        assert!(k.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn spin_flip_tensor_is_antidiagonal() {
        let y: M = sigma_y_tensor_sigma_y();
        let sy = M::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(sy.tensor(&sy).max_abs_diff(&y) < 1e-15);
    }

    #[test]
    fn eigensystem_of_diagonal_sorts_descending() {
        let m = M::diag_re(&[3.0, 1.0, 2.0]);
        let eig = m.hermitian_eigensystem(1e-10).unwrap();
        assert_eq!(eig.values, vec![3.0, 2.0, 1.0]);
    }

    #[test]
    fn eigensystem_of_pauli_x() {
        let m = M::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let eig = m.hermitian_eigensystem(1e-10).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-14);
        assert!((eig.values[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigensystem_of_pauli_y() {
        let m = M::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let eig = m.hermitian_eigensystem(1e-10).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-14);
        assert!((eig.values[1] + 1.0).abs() < 1e-14);
        // Reconstruction check for the complex rotation path.
        let d = M::diag_re(&eig.values);
        let rec = eig
            .vectors
            .multiply(&d)
            .unwrap()
            .multiply(&eig.vectors.adjoint())
            .unwrap();
        assert!(rec.max_abs_diff(&m) < 1e-14);
    }

    #[test]
    fn eigensystem_rejects_non_hermitian_input() {
        let m = M::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.5, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(
            m.hermitian_eigensystem(1e-10),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn eigensystem_of_zero_matrix_converges() {
        let eig = M::zeros(3, 3).hermitian_eigensystem(1e-10).unwrap();
        assert_eq!(eig.values, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn sqrt_of_identity_is_identity() {
        let s = M::identity(4).hermitian_sqrt().unwrap();
        assert!(s.max_abs_diff(&M::identity(4)) < 1e-12);
    }

    #[test]
    fn sqrt_of_diagonal_takes_elementwise_roots() {
        let m = M::diag_re(&[4.0, 1.0, 0.0, 0.0]);
        let s = m.hermitian_sqrt().unwrap();
        assert!(s.max_abs_diff(&M::diag_re(&[2.0, 1.0, 0.0, 0.0])) < 1e-12);
    }

    #[test]
    fn sqrt_clamps_rounding_scale_negatives() {
        let m = M::diag_re(&[1.0, -1e-12, 0.0, 0.5]);
        let s = m.hermitian_sqrt().unwrap();
        assert_eq!(s.get(1, 1).re, 0.0);
    }

    #[test]
    fn sqrt_rejects_indefinite_input() {
        let m = M::diag_re(&[1.0, -0.2]);
        assert!(matches!(m.hermitian_sqrt(), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn generic_scalar_path_works_in_single_precision() {
        let m: ComplexMatrix<f32> = ComplexMatrix::diag_re(&[3.0, 1.0, 2.0]);
        let eig = m.hermitian_eigensystem(1e-4).unwrap();
        assert_eq!(eig.values, vec![3.0f32, 2.0, 1.0]);
    }
}
