//! Weak measurement and measurement reversal: the two non-unitary
//! diagonal operations, their post-selected application, and the full
//! WM -> correlated channel -> reversal protocol in two independent
//! forms — a numeric operator chain and the closed-form element
//! expressions. The two implementations deliberately share no code; their
//! agreement is the crate's main cross-check.

use num_complex::Complex;

use crate::channels::{check_unit_interval, ChannelParams, KrausChannel};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::scalar::Real;
use crate::states::{DensityMatrix, InitialState, XStateElements};

/// Weak-measurement strength `p` and reversal strength `q`, both in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementStrengths<T> {
    p: T,
    q: T,
}

impl<T: Real> MeasurementStrengths<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        check_unit_interval("p", p)?;
        check_unit_interval("q", q)?;
        Ok(Self { p, q })
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn q(&self) -> T {
        self.q
    }
}

/// Weak-measurement operator on both qubits:
/// diag(1, sqrt(1-p), sqrt(1-p), 1-p).
pub fn wm_operator<T: Real>(p: T) -> Result<ComplexMatrix<T>> {
    check_unit_interval("p", p)?;
    let root = (T::one() - p).sqrt();
    Ok(ComplexMatrix::diag_re(&[T::one(), root, root, T::one() - p]))
}

/// Reversal operator on both qubits: diag(1-q, sqrt(1-q), sqrt(1-q), 1).
pub fn qmr_operator<T: Real>(q: T) -> Result<ComplexMatrix<T>> {
    check_unit_interval("q", q)?;
    let root = (T::one() - q).sqrt();
    Ok(ComplexMatrix::diag_re(&[T::one() - q, root, root, T::one()]))
}

/// Applies a non-unitary operator as `op rho op^dag` and returns the
/// unnormalized result together with its trace, the probability of the
/// kept branch.
pub fn apply_nonunitary<T: Real>(
    op: &ComplexMatrix<T>,
    rho: &DensityMatrix<T>,
) -> Result<(ComplexMatrix<T>, T)> {
    let unnormalized = op.multiply(rho.matrix())?.multiply(&op.adjoint())?;
    let trace = unnormalized.trace();
    debug_assert!(trace.im.abs() <= T::TIGHT_TOL);
    Ok((unnormalized, trace.re))
}

/// Result of the full protocol: normalized post-selected state and the
/// joint probability that both post-selections succeed. `unnormalized_trace`
/// is the raw trace before the final normalization; the channel between the
/// measurements preserves trace, so the two values coincide.
#[derive(Debug, Clone)]
pub struct ProtocolOutcome<T> {
    pub state: DensityMatrix<T>,
    pub success_probability: T,
    pub unnormalized_trace: T,
}

/// Numeric pipeline: chains WM, the correlated channel, and the reversal
/// on explicit 4x4 matrices, then normalizes.
pub fn run_protocol<T: Real>(
    state: &InitialState<T>,
    params: ChannelParams<T>,
    strengths: MeasurementStrengths<T>,
) -> Result<ProtocolOutcome<T>> {
    let wm = wm_operator(strengths.p)?;
    let qmr = qmr_operator(strengths.q)?;
    let channel = KrausChannel::cad(params)?;

    let rho0 = state.density();
    let measured = wm.multiply(rho0.matrix())?.multiply(&wm.adjoint())?;
    let damped = channel.apply_matrix(&measured)?;
    let reversed = qmr.multiply(&damped)?.multiply(&qmr.adjoint())?;

    let trace = reversed.trace();
    debug_assert!(trace.im.abs() <= T::TIGHT_TOL);
    let t = trace.re;
    if t <= T::NULL_TRACE {
        return Err(Error::NullPostselection);
    }
    let state = DensityMatrix::from_matrix(reversed.scale_re(T::one() / t))?;
    Ok(ProtocolOutcome {
        state,
        success_probability: t,
        unnormalized_trace: t,
    })
}

/// The four scalar building blocks of the closed-form protocol state,
/// with the bar notation meaning `1 - x`:
///
/// ```text
/// U = |a|^2 + p_bar^2 (eta_bar g^2 + eta g) |b|^2
/// V = p_bar^2 eta_bar g g_bar |b|^2
/// W = p_bar^2 (eta_bar g_bar^2 + eta g_bar) |b|^2
/// X = p_bar (eta_bar g_bar + eta sqrt(g_bar)) a b*
/// ```
///
/// `normalization` is `(q_bar^2 U + 2 q_bar V + W) / (|a|^2 + p_bar^2 |b|^2)`.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticQmrTerms<T> {
    pub u: T,
    pub v: T,
    pub w: T,
    pub x: Complex<T>,
    pub normalization: T,
}

impl<T: Real> AnalyticQmrTerms<T> {
    /// Computes the reversal-independent terms.
    pub(crate) fn compute(state: &InitialState<T>, params: ChannelParams<T>, p: T) -> Self {
        let pb = T::one() - p;
        let aa = state.alpha().norm_sqr();
        let bb = state.beta().norm_sqr();
        let g = params.gamma();
        let gb = T::one() - g;
        let eta = params.eta();
        let etab = T::one() - eta;
        Self {
            u: aa + pb * pb * (etab * g * g + eta * g) * bb,
            v: pb * pb * etab * g * gb * bb,
            w: pb * pb * (etab * gb * gb + eta * gb) * bb,
            x: (state.alpha() * state.beta().conj()).scale(pb * (etab * gb + eta * gb.sqrt())),
            normalization: T::zero(),
        }
    }

    /// `q_bar^2 U + 2 q_bar V + W`: the trace of the final unnormalized
    /// state, i.e. the joint success probability.
    pub fn success_probability(&self, q: T) -> T {
        let qb = T::one() - q;
        qb * qb * self.u + T::two() * qb * self.v + self.w
    }
}

/// Closed-form pipeline: the normalized X elements of the protocol output
/// plus the scalar terms behind them.
pub fn analytic_qmr_elements<T: Real>(
    state: &InitialState<T>,
    params: ChannelParams<T>,
    strengths: MeasurementStrengths<T>,
) -> Result<(XStateElements<T>, AnalyticQmrTerms<T>)> {
    let mut terms = AnalyticQmrTerms::compute(state, params, strengths.p);
    let qb = T::one() - strengths.q;
    let denom = terms.success_probability(strengths.q);
    if denom <= T::NULL_TRACE {
        return Err(Error::NullPostselection);
    }
    let pb = T::one() - strengths.p;
    let wm_trace = state.alpha().norm_sqr() + pb * pb * state.beta().norm_sqr();
    terms.normalization = denom / wm_trace;

    let elements = XStateElements {
        p00: qb * qb * terms.u / denom,
        p01: qb * terms.v / denom,
        p10: qb * terms.v / denom,
        p11: terms.w / denom,
        coherence: terms.x.scale(qb / denom),
    };
    elements.validate()?;
    Ok((elements, terms))
}
