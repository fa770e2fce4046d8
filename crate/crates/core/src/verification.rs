//! Self-validation suites: every closed form in the crate checked against
//! the independent operator pipeline, plus completeness, convexity,
//! optimality, and boundary-consistency sweeps.
//!
//! The suites are pinned to `f64`, the precision their tolerances assume.
//! Each returns the measured worst deviation so callers can print it or
//! re-assert it at their own threshold.

use num_complex::Complex;

use crate::channels::{analytic_cad_elements, ChannelParams, KrausChannel};
use crate::entanglement::{
    concurrence_cad_closed, concurrence_qmr_closed, esd_condition_cad, esd_condition_qmr,
    optimal_concurrence, wootters_concurrence,
};
use crate::error::Result;
use crate::linalg::ComplexMatrix;
use crate::measurements::{analytic_qmr_elements, run_protocol, MeasurementStrengths};
use crate::rng::SplitMix64;
use crate::states::{DensityMatrix, InitialState};
use crate::sweep::{verify_q_optimum, MAX_WM_STRENGTH};

/// Default seed for the randomized suites.
pub const DEFAULT_SEED: u64 = 20150417;

/// Outcome of one validation suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub detail: String,
}

impl SuiteReport {
    fn new(name: &'static str, max_deviation: f64, tolerance: f64, detail: String) -> Self {
        Self {
            name,
            max_deviation,
            tolerance,
            passed: max_deviation <= tolerance,
            detail,
        }
    }
}

struct ParamDraw {
    state: InitialState<f64>,
    params: ChannelParams<f64>,
    strengths: MeasurementStrengths<f64>,
}

fn draw_tuple(rng: &mut SplitMix64) -> ParamDraw {
    let mag: f64 = rng.uniform_in(0.01, 0.99);
    let phase_a = rng.uniform::<f64>() * std::f64::consts::TAU;
    let phase_b = rng.uniform::<f64>() * std::f64::consts::TAU;
    let beta_mag = (1.0 - mag * mag).sqrt();
    let state = InitialState::new(
        Complex::from_polar(mag, phase_a),
        Complex::from_polar(beta_mag, phase_b),
    )
    .expect("unit norm by construction");
    let params = ChannelParams::new(rng.uniform(), rng.uniform()).expect("in range");
    let strengths = MeasurementStrengths::new(
        rng.uniform_in(0.0, MAX_WM_STRENGTH),
        rng.uniform(),
    )
    .expect("in range");
    ParamDraw {
        state,
        params,
        strengths,
    }
}

fn random_density(rng: &mut SplitMix64) -> DensityMatrix<f64> {
    let entries: Vec<Complex<f64>> = (0..16)
        .map(|_| Complex::new(rng.uniform_in(-1.0, 1.0), rng.uniform_in(-1.0, 1.0)))
        .collect();
    let b = ComplexMatrix::new(4, 4, entries).expect("finite entries");
    let bb = b.multiply(&b.adjoint()).expect("square");
    let trace = bb.trace().re;
    DensityMatrix::from_matrix(bb.scale_re(1.0 / trace)).expect("Gram matrix is a state")
}

/// Completeness of every channel constructor over a (gamma, eta) grid.
pub fn check_cptp_grid(points_per_axis: usize) -> Result<SuiteReport> {
    let n = points_per_axis.max(2);
    let mut worst = 0.0f64;
    for i in 0..n {
        let gamma = i as f64 / (n - 1) as f64;
        worst = worst.max(KrausChannel::<f64>::ad_single(gamma)?.cptp_deviation());
        worst = worst.max(KrausChannel::<f64>::ad_two_qubit(gamma)?.cptp_deviation());
        worst = worst.max(KrausChannel::<f64>::fcad(gamma)?.cptp_deviation());
        for j in 0..n {
            let eta = j as f64 / (n - 1) as f64;
            let channel = KrausChannel::cad(ChannelParams::new(gamma, eta)?)?;
            worst = worst.max(channel.cptp_deviation());
        }
    }
    Ok(SuiteReport::new(
        "cptp_completeness",
        worst,
        1e-12,
        format!("{n}x{n} parameter grid, all four constructors"),
    ))
}

/// Map-level convexity: the mixed channel must equal the weighted sum of
/// its two ingredient channels on arbitrary density matrices.
pub fn check_convexity(samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = SplitMix64::new(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let rho = random_density(&mut rng);
        let gamma = rng.uniform::<f64>();
        let eta = rng.uniform::<f64>();

        let mixed = KrausChannel::cad(ChannelParams::new(gamma, eta)?)?.apply_matrix(rho.matrix())?;
        let memoryless = KrausChannel::ad_two_qubit(gamma)?
            .apply_matrix(rho.matrix())?
            .scale_re(1.0 - eta);
        let correlated = KrausChannel::fcad(gamma)?
            .apply_matrix(rho.matrix())?
            .scale_re(eta);
        let combined = memoryless.add(&correlated)?;
        worst = worst.max(mixed.max_abs_diff(&combined));
    }
    Ok(SuiteReport::new(
        "convex_mixture_identity",
        worst,
        1e-12,
        format!("{samples} random density matrices"),
    ))
}

/// The closed-form X elements (channel-only and full protocol) against the
/// numeric operator pipeline, entrywise.
pub fn check_closed_form_elements(samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = SplitMix64::new(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let draw = draw_tuple(&mut rng);

        let channel_closed = analytic_cad_elements(&draw.state, draw.params);
        let channel_numeric = KrausChannel::cad(draw.params)?
            .apply(&draw.state.density())?
            .x_elements(1e-10)?;
        worst = worst.max(channel_closed.max_abs_diff(&channel_numeric));

        let (protocol_closed, _) = analytic_qmr_elements(&draw.state, draw.params, draw.strengths)?;
        let outcome = run_protocol(&draw.state, draw.params, draw.strengths)?;
        let protocol_numeric = outcome.state.x_elements(1e-10)?;
        worst = worst.max(protocol_closed.max_abs_diff(&protocol_numeric));
    }
    Ok(SuiteReport::new(
        "closed_form_elements",
        worst,
        1e-11,
        format!("{samples} random draws with complex phases"),
    ))
}

/// The closed-form success probability against the trace of the numeric
/// unnormalized state.
pub fn check_success_probability(samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = SplitMix64::new(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let draw = draw_tuple(&mut rng);
        let (_, terms) = analytic_qmr_elements(&draw.state, draw.params, draw.strengths)?;
        let outcome = run_protocol(&draw.state, draw.params, draw.strengths)?;
        let closed = terms.success_probability(draw.strengths.q());
        worst = worst.max((closed - outcome.success_probability).abs());
    }
    Ok(SuiteReport::new(
        "success_probability",
        worst,
        1e-12,
        format!("{samples} random draws"),
    ))
}

/// Numeric spin-flip concurrence against both closed forms.
pub fn check_concurrence_oracle(samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = SplitMix64::new(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let draw = draw_tuple(&mut rng);

        let channel_state = KrausChannel::cad(draw.params)?.apply(&draw.state.density())?;
        let numeric_cad = wootters_concurrence(&channel_state)?.concurrence;
        let closed_cad = concurrence_cad_closed(&draw.state, draw.params).concurrence;
        worst = worst.max((numeric_cad - closed_cad).abs());

        let outcome = run_protocol(&draw.state, draw.params, draw.strengths)?;
        let numeric_qmr = wootters_concurrence(&outcome.state)?.concurrence;
        let closed_qmr =
            concurrence_qmr_closed(&draw.state, draw.params, draw.strengths)?.concurrence;
        worst = worst.max((numeric_qmr - closed_qmr).abs());
    }
    Ok(SuiteReport::new(
        "concurrence_oracle",
        worst,
        1e-9,
        format!("{samples} random draws, both closed forms"),
    ))
}

/// Golden-section search of the reversal strength against the closed-form
/// optimum: location error and bound violation.
pub fn check_q_optimality(samples: usize, seed: u64) -> Result<Vec<SuiteReport>> {
    let location_error = verify_q_optimum::<f64>(samples, seed)?;
    let location = SuiteReport::new(
        "optimal_q_location",
        location_error,
        1e-4,
        format!("{samples} searched draws"),
    );

    // Bound check: no searched concurrence may exceed the closed-form
    // optimum.
    let mut rng = SplitMix64::new(seed ^ 0x5151_5151);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let draw = draw_tuple(&mut rng);
        let bound = optimal_concurrence(&draw.state, draw.params, draw.strengths.p())?.concurrence;
        let mut achieved = 0.0f64;
        for k in 0..=64 {
            let q = k as f64 / 64.0;
            let c = concurrence_qmr_closed(
                &draw.state,
                draw.params,
                MeasurementStrengths::new(draw.strengths.p(), q)?,
            )
            .map(|r| r.concurrence)
            .unwrap_or(0.0);
            achieved = achieved.max(c);
        }
        worst = worst.max(achieved - bound);
    }
    let bound_report = SuiteReport::new(
        "optimal_q_bound",
        worst.max(0.0),
        1e-9,
        format!("{samples} draws, 65-point strength scan each"),
    );
    Ok(vec![location, bound_report])
}

/// Agreement between the strict ratio inequalities and the sign of the
/// corresponding closed-form delta on a dense grid. Grid points with
/// |delta| inside the rounding band are exempt.
pub fn check_esd_boundary_consistency(grid: usize, p_points: usize) -> Result<SuiteReport> {
    let state = InitialState::from_alpha(1.0 / 3.0)?;
    let band = 1e-12;
    let mut disagreements = 0usize;
    let mut total = 0usize;
    for i in 0..grid {
        let gamma = i as f64 / (grid - 1) as f64;
        for j in 0..grid {
            let eta = j as f64 / (grid - 1) as f64;
            let params = ChannelParams::new(gamma, eta)?;

            let delta_cad = concurrence_cad_closed(&state, params).delta;
            if delta_cad.abs() > band {
                total += 1;
                if esd_condition_cad(&state, params)? != (delta_cad < 0.0) {
                    disagreements += 1;
                }
            }
            for k in 0..p_points {
                let p = k as f64 / (p_points - 1) as f64 * MAX_WM_STRENGTH;
                let delta_opt = optimal_concurrence(&state, params, p)?.delta;
                if delta_opt.abs() > band {
                    total += 1;
                    if esd_condition_qmr(&state, params, p)? != (delta_opt < 0.0) {
                        disagreements += 1;
                    }
                }
            }
        }
    }
    Ok(SuiteReport::new(
        "esd_boundary_consistency",
        disagreements as f64,
        0.0,
        format!("{total} grid comparisons outside the rounding band"),
    ))
}

/// Negative control: a channel with a deliberately rescaled operator must
/// be caught by the completeness check, so this report always fails.
pub fn corrupted_channel_control() -> Result<SuiteReport> {
    let intact = KrausChannel::cad(ChannelParams::new(0.5, 0.3)?)?;
    let mut operators: Vec<ComplexMatrix<f64>> = intact.operators().to_vec();
    let first = operators[0].scale_re(0.9);
    operators[0] = first;
    let corrupted = KrausChannel::from_parts(4, operators, intact.weights().to_vec())?;
    Ok(SuiteReport::new(
        "cptp_negative_control",
        corrupted.cptp_deviation(),
        1e-12,
        "one Kraus operator rescaled by 0.9".into(),
    ))
}

/// Runs the full suite set at the given sample count and seed.
pub fn run_all(samples: usize, seed: u64) -> Result<Vec<SuiteReport>> {
    let mut reports = vec![
        check_cptp_grid(21)?,
        check_convexity(100, seed)?,
        check_closed_form_elements(samples, seed)?,
        check_success_probability(samples, seed)?,
        check_concurrence_oracle(samples, seed)?,
    ];
    reports.extend(check_q_optimality(200, seed)?);
    reports.push(check_esd_boundary_consistency(50, 5)?);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_suites_pass_at_reduced_sample_counts() {
        for report in run_all(50, DEFAULT_SEED).unwrap() {
            assert!(
                report.passed,
                "{}: {} > {}",
                report.name, report.max_deviation, report.tolerance
            );
        }
    }

    #[test]
    fn corrupted_channel_is_detected() {
        let report = corrupted_channel_control().unwrap();
        assert!(!report.passed);
        assert!(report.max_deviation > 0.1);
    }
}
