//! Concurrence and sudden-death analysis.
//!
//! Three concurrence routes live here: the general numeric spin-flip
//! computation, the closed form for the bare correlated channel, and the
//! closed form for the measurement-protected protocol together with the
//! optimal reversal strength, the strength-one limit, and every critical
//! parameter (sudden-death predicates, critical memory, critical
//! measurement strength, and the zero-concurrence window in the damping
//! strength).

use crate::channels::{analytic_cad_elements, check_unit_interval, ChannelParams};
use crate::error::{Error, Result};
use crate::linalg::sigma_y_tensor_sigma_y;
use crate::measurements::{AnalyticQmrTerms, MeasurementStrengths};
use crate::optim::bisect_root;
use crate::scalar::Real;
use crate::states::{DensityMatrix, InitialState, XStateElements};

/// How a concurrence value was obtained. The two closed forms follow
/// different printed conventions: the channel form reports half the
/// concurrence as its delta (`C = 2 max(0, delta)`), the protocol form
/// carries the factor of two inside (`C = max(0, delta)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConcurrenceMethod {
    NumericWootters,
    ClosedFormCad,
    ClosedFormQmr,
}

/// Concurrence plus the signed pre-clamp quantity and, when available,
/// the descending square roots of the spin-flip spectrum.
#[derive(Debug, Clone)]
pub struct ConcurrenceReport<T> {
    pub concurrence: T,
    pub delta: T,
    pub sqrt_eigenvalues: Option<[T; 4]>,
    pub method: ConcurrenceMethod,
}

/// Critical parameters of the sudden-death analysis. Operations fill in
/// the fields they compute and leave the rest empty.
#[derive(Debug, Clone, Copy, Default)]
pub struct CriticalParams<T> {
    pub eta_c: Option<T>,
    pub p_c: Option<T>,
    pub esd_interval: Option<EsdInterval<T>>,
}

/// Window of damping strengths with zero concurrence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EsdInterval<T> {
    pub start: T,
    pub end: T,
}

/// Numeric concurrence of an arbitrary two-qubit state.
///
/// Builds the spin-flipped matrix `rho_tilde = Y rho* Y` with
/// `Y = sigma_y (x) sigma_y`, then takes the eigenvalues of the Hermitian
/// matrix `sqrt(rho) rho_tilde sqrt(rho)` — the same spectrum as
/// `rho rho_tilde` — and returns
/// `max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4))`.
pub fn wootters_concurrence<T: Real>(rho: &DensityMatrix<T>) -> Result<ConcurrenceReport<T>> {
    let y = sigma_y_tensor_sigma_y::<T>();
    let flipped = y
        .multiply(&rho.matrix().conjugate())?
        .multiply(&y)?;
    let root = rho.matrix().hermitian_sqrt()?;
    let hermitian_form = root.multiply(&flipped)?.multiply(&root)?;

    let eig = hermitian_form
        .hermitian_part()
        .hermitian_eigensystem(T::CHECK_TOL)?;
    let floor = -T::PSD_FLOOR * T::lit(100.0);
    let mut roots = [T::zero(); 4];
    for (slot, &lambda) in roots.iter_mut().zip(&eig.values) {
        if lambda < floor {
            return Err(Error::NumericBreakdown(
                "spin-flip spectrum has a significantly negative eigenvalue",
            ));
        }
        *slot = lambda.max(T::zero()).sqrt();
    }
    let delta = roots[0] - roots[1] - roots[2] - roots[3];
    Ok(ConcurrenceReport {
        concurrence: delta.max(T::zero()),
        delta,
        sqrt_eigenvalues: Some(roots),
        method: ConcurrenceMethod::NumericWootters,
    })
}

/// Descending spin-flip square roots of an X state with equal middle
/// populations or not: `{|z| + s, |s - |z||, sqrt(p01 p10) (twice)}`
/// where `s = sqrt(p00 p11)` and `z` is the corner coherence.
fn x_state_sqrt_spectrum<T: Real>(e: &XStateElements<T>) -> [T; 4] {
    let corner = (e.p00.max(T::zero()) * e.p11.max(T::zero())).sqrt();
    let z = e.coherence.norm();
    let mid = (e.p01.max(T::zero()) * e.p10.max(T::zero())).sqrt();
    let mut roots = [z + corner, (corner - z).abs(), mid, mid];
    roots.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    roots
}

/// Closed-form concurrence after the bare correlated channel:
/// `C = 2 max(0, delta)` with
/// `delta = (eta_bar g_bar + eta sqrt(g_bar)) |a b| - eta_bar g g_bar |b|^2`.
pub fn concurrence_cad_closed<T: Real>(
    state: &InitialState<T>,
    params: ChannelParams<T>,
) -> ConcurrenceReport<T> {
    let g = params.gamma();
    let gb = T::one() - g;
    let eta = params.eta();
    let etab = T::one() - eta;
    let ab = state.alpha_abs() * state.beta_abs();
    let bb = state.beta().norm_sqr();

    let delta = (etab * gb + eta * gb.sqrt()) * ab - etab * g * gb * bb;
    let elements = analytic_cad_elements(state, params);
    ConcurrenceReport {
        concurrence: (T::two() * delta).max(T::zero()),
        delta,
        sqrt_eigenvalues: Some(x_state_sqrt_spectrum(&elements)),
        method: ConcurrenceMethod::ClosedFormCad,
    }
}

/// Closed-form concurrence of the protected protocol at explicit
/// strengths: `C = max(0, delta)` with
/// `delta = 2 q_bar (|X| - V) / (q_bar^2 U + 2 q_bar V + W)`.
pub fn concurrence_qmr_closed<T: Real>(
    state: &InitialState<T>,
    params: ChannelParams<T>,
    strengths: MeasurementStrengths<T>,
) -> Result<ConcurrenceReport<T>> {
    let terms = AnalyticQmrTerms::compute(state, params, strengths.p());
    let qb = T::one() - strengths.q();
    let denom = terms.success_probability(strengths.q());
    if denom <= T::NULL_TRACE {
        return Err(Error::NullPostselection);
    }
    let delta = T::two() * qb * (terms.x.norm() - terms.v) / denom;

    let elements = XStateElements {
        p00: qb * qb * terms.u / denom,
        p01: qb * terms.v / denom,
        p10: qb * terms.v / denom,
        p11: terms.w / denom,
        coherence: terms.x.scale(qb / denom),
    };
    Ok(ConcurrenceReport {
        concurrence: delta.max(T::zero()),
        delta,
        sqrt_eigenvalues: Some(x_state_sqrt_spectrum(&elements)),
        method: ConcurrenceMethod::ClosedFormQmr,
    })
}

/// Optimal reversal strength `q = 1 - sqrt(W/U)`, clamped to [0, 1].
///
/// `W = 0` (full weak measurement, full damping, or a bare |00> input)
/// gives the boundary value `q = 1`, where the kept branch has zero
/// probability; callers doing actual post-selection must treat that point
/// as a limit.
pub fn optimal_q<T: Real>(state: &InitialState<T>, params: ChannelParams<T>, p: T) -> Result<T> {
    check_unit_interval("p", p)?;
    if state.alpha_abs() == T::zero() {
        return Err(Error::DegenerateState("alpha = 0 leaves nothing to reverse toward"));
    }
    let terms = AnalyticQmrTerms::compute(state, params, p);
    let qb = (terms.w / terms.u).sqrt();
    Ok((T::one() - qb).max(T::zero()).min(T::one()))
}

/// Concurrence at the optimal reversal strength, evaluated from the
/// explicit strength-ratio form
///
/// ```text
///             (eta_bar g_bar + eta sqrt(g_bar)) |a|  -  p_bar eta_bar g g_bar |b|
/// delta =  ------------------------------------------------------------------------
///          p_bar eta_bar g g_bar |b| + sqrt([|a|^2 + p_bar^2 (eta_bar g^2 + eta g) |b|^2] (eta_bar g_bar^2 + eta g_bar))
/// ```
///
/// with `C = max(0, delta)`. At `g = 1` both numerator and denominator
/// vanish; the protocol output there is exactly |00><00| for every
/// reversal strength, so the value is defined as zero.
pub fn optimal_concurrence<T: Real>(
    state: &InitialState<T>,
    params: ChannelParams<T>,
    p: T,
) -> Result<ConcurrenceReport<T>> {
    check_unit_interval("p", p)?;
    let g = params.gamma();
    let gb = T::one() - g;
    let eta = params.eta();
    let etab = T::one() - eta;
    let pb = T::one() - p;
    let a = state.alpha_abs();
    let b = state.beta_abs();

    let numerator = (etab * gb + eta * gb.sqrt()) * a - pb * etab * g * gb * b;
    let u = a * a + pb * pb * (etab * g * g + eta * g) * b * b;
    let denominator = pb * etab * g * gb * b + (u * (etab * gb * gb + eta * gb)).sqrt();

    let delta = if denominator == T::zero() {
        T::zero()
    } else {
        numerator / denominator
    };

    // The spin-flip spectrum at the optimum, when the optimum is an
    // attainable interior point (it is not at exactly p = 1, where the
    // post-selection probability vanishes).
    let spectrum = optimal_q(state, params, p).ok().and_then(|q| {
        let strengths = MeasurementStrengths::new(p, q).ok()?;
        concurrence_qmr_closed(state, params, strengths)
            .ok()
            .and_then(|r| r.sqrt_eigenvalues)
    });

    Ok(ConcurrenceReport {
        concurrence: delta.max(T::zero()),
        delta,
        sqrt_eigenvalues: spectrum,
        method: ConcurrenceMethod::ClosedFormQmr,
    })
}

/// Limit of the optimal-reversal concurrence as the weak-measurement
/// strength approaches one:
/// `(eta_bar sqrt(g_bar) + eta) / sqrt(eta_bar g_bar + eta)`,
/// independent of the input amplitudes.
pub fn optimal_concurrence_strong_wm_limit<T: Real>(params: ChannelParams<T>) -> T {
    let gb = T::one() - params.gamma();
    let eta = params.eta();
    let etab = T::one() - eta;
    let denom = (etab * gb + eta).sqrt();
    if denom == T::zero() {
        return T::zero();
    }
    (etab * gb.sqrt() + eta) / denom
}

/// The ratio bound of the sudden-death condition,
/// `p_bar eta_bar g sqrt(g_bar) / (eta_bar sqrt(g_bar) + eta)`, with the
/// removable `0/0` at `(g, eta) = (1, 0)` resolved to zero (the state
/// there is exactly |00><00|, a boundary case with zero concurrence).
fn esd_ratio_bound<T: Real>(params: ChannelParams<T>, p: T) -> T {
    let g = params.gamma();
    let gb = T::one() - g;
    let eta = params.eta();
    let etab = T::one() - eta;
    let denom = etab * gb.sqrt() + eta;
    if denom == T::zero() {
        return T::zero();
    }
    (T::one() - p) * etab * g * gb.sqrt() / denom
}

/// Sudden-death predicate for the bare channel: strict inequality
/// `|a/b| < eta_bar g sqrt(g_bar) / (eta_bar sqrt(g_bar) + eta)`.
pub fn esd_condition_cad<T: Real>(state: &InitialState<T>, params: ChannelParams<T>) -> Result<bool> {
    let ratio = state.ratio()?;
    Ok(ratio < esd_ratio_bound(params, T::zero()))
}

/// Sudden-death predicate under the optimally reversed protocol: the bare
/// bound shrinks by the factor `1 - p`.
pub fn esd_condition_qmr<T: Real>(
    state: &InitialState<T>,
    params: ChannelParams<T>,
    p: T,
) -> Result<bool> {
    check_unit_interval("p", p)?;
    let ratio = state.ratio()?;
    Ok(ratio < esd_ratio_bound(params, p))
}

/// Critical memory parameter: sudden death is impossible for
/// `eta >= eta_c`, with
/// `eta_c = (g sqrt(g_bar) - |a/b| sqrt(g_bar)) / (|a/b| (1 - sqrt(g_bar)) + g sqrt(g_bar))`
/// clamped to [0, 1]. Ratios at or above `g` give zero.
pub fn critical_eta<T: Real>(state: &InitialState<T>, gamma: T) -> Result<T> {
    check_unit_interval("gamma", gamma)?;
    let ratio = state.ratio()?;
    if ratio >= gamma {
        return Ok(T::zero());
    }
    let gbr = (T::one() - gamma).sqrt();
    let numerator = (gamma - ratio) * gbr;
    let denominator = ratio * (T::one() - gbr) + gamma * gbr;
    Ok((numerator / denominator).max(T::zero()).min(T::one()))
}

/// Critical weak-measurement strength: the optimally reversed protocol
/// escapes sudden death for `p > p_c`, with
/// `p_c = 1 - |a/b| (eta_bar sqrt(g_bar) + eta) / (eta_bar g sqrt(g_bar))`
/// clamped to [0, 1]. States outside the bare sudden-death region give 0.
pub fn critical_p<T: Real>(state: &InitialState<T>, params: ChannelParams<T>) -> Result<T> {
    let ratio = state.ratio()?;
    if !esd_condition_cad(state, params)? {
        return Ok(T::zero());
    }
    // Reaching here requires eta < 1 and 0 < gamma < 1, otherwise the
    // bare bound would have been zero.
    let g = params.gamma();
    let gbr = (T::one() - g).sqrt();
    let eta = params.eta();
    let etab = T::one() - eta;
    let p_c = T::one() - ratio * (etab * gbr + eta) / (etab * g * gbr);
    Ok(p_c.max(T::zero()).min(T::one()))
}

const ESD_SCAN_POINTS: usize = 2048;

/// Locates the zero-concurrence window of the bare channel in the damping
/// strength by a dense sign scan refined with bisection.
///
/// Returns no interval when the concurrence never vanishes, a window
/// closed at 1 when it vanishes without reviving, and a proper window
/// when memory effects revive the entanglement before full damping.
pub fn esd_gamma_interval<T: Real>(state: &InitialState<T>, eta: T) -> Result<CriticalParams<T>> {
    check_unit_interval("eta", eta)?;
    if state.beta_abs() == T::zero() {
        return Err(Error::DegenerateState("beta = 0 carries no entanglement to lose"));
    }
    let delta = |gamma: T| -> T {
        let params = ChannelParams::new(gamma, eta).expect("scanned gamma in range");
        concurrence_cad_closed(state, params).delta
    };

    let n = ESD_SCAN_POINTS;
    let step = T::one() / T::from_usize(n - 1).expect("small integer");
    let mut roots = Vec::new();
    let mut prev_x = T::zero();
    let mut prev_f = delta(prev_x);
    for k in 1..n {
        let x = T::from_usize(k).expect("small integer") * step;
        let f = delta(x);
        if prev_f * f < T::zero() {
            roots.push(bisect_root(delta, prev_x, x, T::lit(1e-10), 200));
        }
        prev_x = x;
        prev_f = f;
    }

    let esd_interval = match roots.len() {
        0 => None,
        1 => Some(EsdInterval {
            start: roots[0],
            end: T::one(),
        }),
        _ => Some(EsdInterval {
            start: roots[0],
            end: roots[1],
        }),
    };
    Ok(CriticalParams {
        eta_c: None,
        p_c: None,
        esd_interval,
    })
}
