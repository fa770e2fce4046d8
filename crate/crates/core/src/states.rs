//! Two-qubit states: the |00>/|11> superposition family used as channel
//! input, validated density matrices, and the X-shaped element view that
//! every evolution in this crate preserves.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;

/// Pure state `alpha |00> + beta |11>` with exactly unit norm.
///
/// Amplitudes are complex; the closed forms below depend on |alpha beta|
/// and on `alpha beta*`, so phases flow through the whole pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialState<T> {
    alpha: Complex<T>,
    beta: Complex<T>,
}

impl<T: Real> InitialState<T> {
    /// Validates and builds the state. Inputs within `NORM_SLACK` of unit
    /// norm are silently renormalized; anything further off is rejected.
    pub fn new(alpha: Complex<T>, beta: Complex<T>) -> Result<Self> {
        let norm_sqr = alpha.norm_sqr() + beta.norm_sqr();
        if norm_sqr == T::zero() {
            return Err(Error::NullState);
        }
        if (norm_sqr - T::one()).abs() > T::NORM_SLACK {
            return Err(Error::BadNorm {
                norm: norm_sqr.to_f64().unwrap_or(f64::NAN),
            });
        }
        let scale = T::one() / norm_sqr.sqrt();
        Ok(Self {
            alpha: alpha.scale(scale),
            beta: beta.scale(scale),
        })
    }

    /// Real-amplitude constructor: `beta = sqrt(1 - alpha^2) >= 0`.
    pub fn from_alpha(alpha: T) -> Result<Self> {
        if !(T::zero()..=T::one()).contains(&alpha) {
            return Err(Error::ParamRange {
                name: "alpha",
                value: alpha.to_f64().unwrap_or(f64::NAN),
                range: "[0, 1]",
            });
        }
        let beta = (T::one() - alpha * alpha).max(T::zero()).sqrt();
        Self::new(
            Complex::new(alpha, T::zero()),
            Complex::new(beta, T::zero()),
        )
    }

    pub fn alpha(&self) -> Complex<T> {
        self.alpha
    }

    pub fn beta(&self) -> Complex<T> {
        self.beta
    }

    pub fn alpha_abs(&self) -> T {
        self.alpha.norm()
    }

    pub fn beta_abs(&self) -> T {
        self.beta.norm()
    }

    /// `|alpha / beta|`, the ratio driving every ESD condition.
    pub fn ratio(&self) -> Result<T> {
        let b = self.beta_abs();
        if b == T::zero() {
            return Err(Error::DegenerateState("beta = 0 has no amplitude ratio"));
        }
        Ok(self.alpha_abs() / b)
    }

    /// Rank-1 projector |psi><psi|; nonzero only on the four corners.
    pub fn density(&self) -> DensityMatrix<T> {
        let mut m = ComplexMatrix::zeros(4, 4);
        let aa = Complex::new(self.alpha.norm_sqr(), T::zero());
        let bb = Complex::new(self.beta.norm_sqr(), T::zero());
        let ab = self.alpha * self.beta.conj();
        m.set(0, 0, aa);
        m.set(0, 3, ab);
        m.set(3, 0, ab.conj());
        m.set(3, 3, bb);
        DensityMatrix::from_matrix(m).expect("unit-norm projector is a valid density matrix")
    }
}

/// Validated 4x4 two-qubit density matrix: Hermitian, unit trace,
/// positive semidefinite up to the rounding floor.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    m: ComplexMatrix<T>,
}

impl<T: Real> DensityMatrix<T> {
    pub fn from_matrix(m: ComplexMatrix<T>) -> Result<Self> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Error::Shape {
                context: "density matrix must be 4x4",
            });
        }
        let herm = m.hermiticity_deviation();
        if herm > T::CHECK_TOL {
            return Err(Error::NotHermitian {
                deviation: herm.to_f64().unwrap_or(f64::NAN),
            });
        }
        let trace = m.trace();
        if (trace.re - T::one()).abs() > T::CHECK_TOL || trace.im.abs() > T::CHECK_TOL {
            return Err(Error::BadTrace {
                trace: trace.re.to_f64().unwrap_or(f64::NAN),
            });
        }
        let eig = m.hermitian_eigensystem(T::CHECK_TOL)?;
        for &lambda in &eig.values {
            if lambda < -T::PSD_FLOOR {
                return Err(Error::NotPsd {
                    eigenvalue: lambda.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.m
    }

    pub fn trace(&self) -> T {
        self.m.trace().re
    }

    /// Reads the five X-state elements, rejecting the matrix if anything
    /// outside the X pattern (diagonal plus the |00><11| corner) exceeds
    /// `tol` in magnitude.
    pub fn x_elements(&self, tol: T) -> Result<XStateElements<T>> {
        for i in 0..4 {
            for j in 0..4 {
                if i == j || (i == 0 && j == 3) || (i == 3 && j == 0) {
                    continue;
                }
                let mag = self.m.get(i, j).norm();
                if mag > tol {
                    return Err(Error::NotXState {
                        row: i,
                        col: j,
                        magnitude: mag.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        let elements = XStateElements {
            p00: self.m.get(0, 0).re,
            p01: self.m.get(1, 1).re,
            p10: self.m.get(2, 2).re,
            p11: self.m.get(3, 3).re,
            coherence: self.m.get(0, 3),
        };
        elements.validate()?;
        Ok(elements)
    }
}

/// The five non-zero entries every channel and measurement in this crate
/// can produce from the |00>/|11> family: four populations and the
/// |00><11| coherence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateElements<T> {
    pub p00: T,
    pub p01: T,
    pub p10: T,
    pub p11: T,
    pub coherence: Complex<T>,
}

impl<T: Real> XStateElements<T> {
    /// Checks normalization, population positivity, and positivity of the
    /// corner block.
    pub fn validate(&self) -> Result<()> {
        let sum = self.p00 + self.p01 + self.p10 + self.p11;
        if (sum - T::one()).abs() > T::CHECK_TOL {
            return Err(Error::BadTrace {
                trace: sum.to_f64().unwrap_or(f64::NAN),
            });
        }
        for &p in &[self.p00, self.p01, self.p10, self.p11] {
            if p < -T::TIGHT_TOL {
                return Err(Error::NotPsd {
                    eigenvalue: p.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        if self.coherence.norm_sqr() > self.p00 * self.p11 + T::CHECK_TOL {
            return Err(Error::NotPsd {
                eigenvalue: (self.p00 * self.p11 - self.coherence.norm_sqr())
                    .to_f64()
                    .unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }

    /// Rebuilds the full 4x4 density matrix.
    pub fn to_density(&self) -> Result<DensityMatrix<T>> {
        let mut m = ComplexMatrix::zeros(4, 4);
        m.set(0, 0, Complex::new(self.p00, T::zero()));
        m.set(1, 1, Complex::new(self.p01, T::zero()));
        m.set(2, 2, Complex::new(self.p10, T::zero()));
        m.set(3, 3, Complex::new(self.p11, T::zero()));
        m.set(0, 3, self.coherence);
        m.set(3, 0, self.coherence.conj());
        DensityMatrix::from_matrix(m)
    }

    /// Largest difference across the five elements (coherence compared by
    /// complex magnitude).
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut d = (self.p00 - other.p00).abs();
        d = d.max((self.p01 - other.p01).abs());
        d = d.max((self.p10 - other.p10).abs());
        d = d.max((self.p11 - other.p11).abs());
        d.max((self.coherence - other.coherence).norm())
    }
}
