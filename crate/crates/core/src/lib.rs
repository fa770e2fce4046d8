//! Two-qubit correlated amplitude damping and weak-measurement
//! entanglement protection.
//!
//! The crate models the damping channel family interpolating between
//! independent per-qubit relaxation and fully synchronized relaxation,
//! the weak-measurement / measurement-reversal protection protocol around
//! it, and the concurrence analysis of both — each quantity in two
//! independent forms (closed-form expressions and an explicit
//! Kraus-operator pipeline) so they can be cross-validated.
//!
//! Everything numeric is generic over the scalar through [`Real`]
//! (`f64` and `f32` are provided); the `*64` aliases below are the
//! default working types. The basis is fixed globally as
//! |00>, |01>, |10>, |11> with the first qubit as the slow tensor index.

pub mod channels;
pub mod entanglement;
mod error;
pub mod linalg;
pub mod measurements;
pub mod optim;
mod rng;
pub mod scalar;
pub mod states;
pub mod sweep;
pub mod verification;

pub use channels::{analytic_cad_elements, ChannelParams, KrausChannel};
pub use entanglement::{
    concurrence_cad_closed, concurrence_qmr_closed, critical_eta, critical_p, esd_condition_cad,
    esd_condition_qmr, esd_gamma_interval, optimal_concurrence,
    optimal_concurrence_strong_wm_limit, optimal_q, wootters_concurrence, ConcurrenceMethod,
    ConcurrenceReport, CriticalParams, EsdInterval,
};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, Eigensystem};
pub use measurements::{
    analytic_qmr_elements, apply_nonunitary, qmr_operator, run_protocol, wm_operator,
    AnalyticQmrTerms, MeasurementStrengths, ProtocolOutcome,
};
pub use scalar::Real;
pub use states::{DensityMatrix, InitialState, XStateElements};
pub use sweep::{
    classify_esd_region, run_sweep, trace_boundary, verify_q_optimum, Output, Param, QMode,
    SweepSpec, SweepTable, VarySpec, MAX_WM_STRENGTH,
};

/// Complex scalar over `f64`.
pub type Complex64 = num_complex::Complex<f64>;
/// Complex scalar over `f32`.
pub type Complex32 = num_complex::Complex<f32>;

pub type ComplexMatrix64 = ComplexMatrix<f64>;
pub type ComplexMatrix32 = ComplexMatrix<f32>;
pub type DensityMatrix64 = DensityMatrix<f64>;
pub type InitialState64 = InitialState<f64>;
pub type XStateElements64 = XStateElements<f64>;
pub type ChannelParams64 = ChannelParams<f64>;
pub type KrausChannel64 = KrausChannel<f64>;
pub type MeasurementStrengths64 = MeasurementStrengths<f64>;
pub type ConcurrenceReport64 = ConcurrenceReport<f64>;
pub type SweepSpec64 = SweepSpec<f64>;
