//! Scalar abstraction shared by every module.
//!
//! All core math is generic over an IEEE float through [`Real`]; the
//! per-type constants pin the tolerance ladder to what that precision can
//! actually deliver. `f64` is the precision the validation suites assume;
//! `f32` is supported with proportionally looser tolerances.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar usable as the real carrier for matrix, channel
/// and concurrence arithmetic.
pub trait Real:
    Float + FloatConst + NumAssign + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Tolerance for identities exact up to rounding (CPTP completeness,
    /// convex-mixture identity, closed-form vs pipeline cross-checks).
    const TIGHT_TOL: Self;
    /// Tolerance for validation of quantities built from a few chained
    /// products (Hermiticity, unit trace, X-structure extraction).
    const CHECK_TOL: Self;
    /// Magnitude of the most negative eigenvalue still treated as a
    /// rounding artifact; anything in `(-PSD_FLOOR, 0)` is clamped to 0.
    const PSD_FLOOR: Self;
    /// Jacobi convergence: off-diagonal Frobenius norm relative to the
    /// diagonal norm.
    const JACOBI_TOL: Self;
    /// Post-selection traces at or below this count as a null outcome.
    const NULL_TRACE: Self;
    /// Amplitude-norm deviation that is silently renormalized; larger
    /// deviations are rejected as invalid input.
    const NORM_SLACK: Self;

    fn two() -> Self {
        Self::one() + Self::one()
    }

    /// Shorthand for converting an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal must be representable")
    }
}

impl Real for f64 {
    const TIGHT_TOL: Self = 1e-12;
    const CHECK_TOL: Self = 1e-10;
    const PSD_FLOOR: Self = 1e-10;
    const JACOBI_TOL: Self = 1e-14;
    const NULL_TRACE: Self = 1e-14;
    const NORM_SLACK: Self = 1e-9;
}

impl Real for f32 {
    const TIGHT_TOL: Self = 1e-5;
    const CHECK_TOL: Self = 1e-4;
    const PSD_FLOOR: Self = 1e-4;
    const JACOBI_TOL: Self = 1e-6;
    const NULL_TRACE: Self = 1e-7;
    const NORM_SLACK: Self = 1e-4;
}
