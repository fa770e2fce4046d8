//! Kraus-operator channels: single-qubit amplitude damping, its memoryless
//! two-qubit tensor square, the fully correlated channel, and the
//! memory-parameter mixture of the two, plus the closed-form evolution of
//! the |00>/|11> input family.
//!
//! The mixture is carried as one six-operator Kraus family with the
//! convex weights folded in as sqrt-weight scalings; the map-level
//! convexity identity is enforced by tests rather than by a runtime
//! branch.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;
use crate::states::{DensityMatrix, InitialState, XStateElements};

/// Decoherence strength `gamma` and memory parameter `eta`, both in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams<T> {
    gamma: T,
    eta: T,
}

impl<T: Real> ChannelParams<T> {
    pub fn new(gamma: T, eta: T) -> Result<Self> {
        check_unit_interval("gamma", gamma)?;
        check_unit_interval("eta", eta)?;
        Ok(Self { gamma, eta })
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn eta(&self) -> T {
        self.eta
    }
}

pub(crate) fn check_unit_interval<T: Real>(name: &'static str, value: T) -> Result<()> {
    if !(T::zero()..=T::one()).contains(&value) || !value.is_finite() {
        return Err(Error::ParamRange {
            name,
            value: value.to_f64().unwrap_or(f64::NAN),
            range: "[0, 1]",
        });
    }
    Ok(())
}

/// A channel in operator-sum form. `weights` records the convex-mixture
/// weight already folded into each operator as a sqrt-weight scaling.
#[derive(Debug, Clone)]
pub struct KrausChannel<T> {
    dim: usize,
    operators: Vec<ComplexMatrix<T>>,
    weights: Vec<T>,
}

impl<T: Real> KrausChannel<T> {
    /// Raw constructor: checks shapes only. Use [`Self::cptp_deviation`]
    /// to measure completeness; the named constructors enforce it.
    pub fn from_parts(dim: usize, operators: Vec<ComplexMatrix<T>>, weights: Vec<T>) -> Result<Self> {
        if operators.is_empty() || weights.len() != operators.len() {
            return Err(Error::Shape {
                context: "one weight per Kraus operator",
            });
        }
        if operators.iter().any(|op| op.rows() != dim || op.cols() != dim) {
            return Err(Error::Shape {
                context: "every Kraus operator must be dim x dim",
            });
        }
        Ok(Self {
            dim,
            operators,
            weights,
        })
    }

    fn checked(self) -> Result<Self> {
        let dev = self.cptp_deviation();
        if dev > T::TIGHT_TOL {
            return Err(Error::NotCptp {
                deviation: dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(self)
    }

    /// Single-qubit amplitude damping: the no-jump operator
    /// diag(1, sqrt(1-gamma)) and the jump operator mapping |1> to |0>
    /// with amplitude sqrt(gamma).
    pub fn ad_single(gamma: T) -> Result<Self> {
        check_unit_interval("gamma", gamma)?;
        let zero = Complex::new(T::zero(), T::zero());
        let e0 = ComplexMatrix::diag_re(&[T::one(), (T::one() - gamma).sqrt()]);
        let mut e1 = ComplexMatrix::zeros(2, 2);
        e1.set(0, 1, Complex::new(gamma.sqrt(), T::zero()));
        let _ = zero;
        Self::from_parts(2, vec![e0, e1], vec![T::one(), T::one()])?.checked()
    }

    /// Memoryless two-qubit channel: all four tensor products of the
    /// single-qubit operators.
    pub fn ad_two_qubit(gamma: T) -> Result<Self> {
        let single = Self::ad_single(gamma)?;
        let mut operators = Vec::with_capacity(4);
        for a in &single.operators {
            for b in &single.operators {
                operators.push(a.tensor(b));
            }
        }
        Self::from_parts(4, operators, vec![T::one(); 4])?.checked()
    }

    /// Fully correlated two-qubit damping: only the synchronous
    /// |11> -> |00> relaxation, leaving single-excitation states fixed.
    pub fn fcad(gamma: T) -> Result<Self> {
        check_unit_interval("gamma", gamma)?;
        let a0 = ComplexMatrix::diag_re(&[T::one(), T::one(), T::one(), (T::one() - gamma).sqrt()]);
        let mut a1 = ComplexMatrix::zeros(4, 4);
        a1.set(0, 3, Complex::new(gamma.sqrt(), T::zero()));
        Self::from_parts(4, vec![a0, a1], vec![T::one(), T::one()])?.checked()
    }

    /// Correlated channel: convex mixture of the memoryless tensor-square
    /// channel (weight 1-eta) and the fully correlated channel (weight
    /// eta), realized as a single six-operator family.
    pub fn cad(params: ChannelParams<T>) -> Result<Self> {
        let memoryless = Self::ad_two_qubit(params.gamma)?;
        let correlated = Self::fcad(params.gamma)?;
        let w_mem = T::one() - params.eta;
        let w_cor = params.eta;
        let mut operators = Vec::with_capacity(6);
        let mut weights = Vec::with_capacity(6);
        for op in &memoryless.operators {
            operators.push(op.scale_re(w_mem.sqrt()));
            weights.push(w_mem);
        }
        for op in &correlated.operators {
            operators.push(op.scale_re(w_cor.sqrt()));
            weights.push(w_cor);
        }
        Self::from_parts(4, operators, weights)?.checked()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[ComplexMatrix<T>] {
        &self.operators
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// Max entrywise deviation of `sum K^dag K` from the identity.
    pub fn cptp_deviation(&self) -> T {
        let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
        for op in &self.operators {
            let term = op.adjoint().multiply(op).expect("square operators");
            sum = sum.add(&term).expect("same dims");
        }
        sum.max_abs_diff(&ComplexMatrix::identity(self.dim))
    }

    pub fn is_trace_preserving(&self) -> bool {
        self.cptp_deviation() <= T::TIGHT_TOL
    }

    /// Operator-sum action on a raw matrix: `sum_i K_i m K_i^dag`.
    pub fn apply_matrix(&self, m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::Shape {
                context: "state dimension must match the channel",
            });
        }
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for op in &self.operators {
            let term = op.multiply(m)?.multiply(&op.adjoint())?;
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Channel action on a density matrix, revalidating the output.
    pub fn apply(&self, rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
        let out = self.apply_matrix(rho.matrix())?;
        DensityMatrix::from_matrix(out)
    }
}

/// Closed-form X elements of the correlated channel acting on
/// `alpha |00> + beta |11>`, with the bar notation meaning `1 - x`:
///
/// ```text
/// p00 = |a|^2 + (eta_bar g^2 + eta g) |b|^2
/// p01 = p10 = eta_bar g g_bar |b|^2
/// p11 = (eta_bar g_bar^2 + eta g_bar) |b|^2
/// coh = (eta_bar g_bar + eta sqrt(g_bar)) a b*
/// ```
pub fn analytic_cad_elements<T: Real>(
    state: &InitialState<T>,
    params: ChannelParams<T>,
) -> XStateElements<T> {
    let g = params.gamma();
    let gb = T::one() - g;
    let eta = params.eta();
    let etab = T::one() - eta;
    let aa = state.alpha().norm_sqr();
    let bb = state.beta().norm_sqr();

    XStateElements {
        p00: aa + (etab * g * g + eta * g) * bb,
        p01: etab * g * gb * bb,
        p10: etab * g * gb * bb,
        p11: (etab * gb * gb + eta * gb) * bb,
        coherence: (state.alpha() * state.beta().conj()).scale(etab * gb + eta * gb.sqrt()),
    }
}
