//! Parameter-grid evaluation behind the CSV surface: sweeps over any one
//! or two of {amplitude ratio, damping strength, memory, measurement
//! strengths}, sudden-death region maps, boundary tracing, and the
//! search-based check of the optimal reversal strength.
//!
//! Grids are evaluated row-major with the first varying parameter
//! outermost; evaluation is sequential and purely functional, so the row
//! stream is deterministic byte for byte.

use crate::channels::ChannelParams;
use crate::entanglement::{
    concurrence_cad_closed, concurrence_qmr_closed, esd_condition_qmr, optimal_concurrence,
    optimal_q,
};
use crate::error::{Error, Result};
use crate::measurements::{AnalyticQmrTerms, MeasurementStrengths};
use crate::optim::golden_section_max;
use crate::rng::SplitMix64;
use crate::scalar::Real;
use crate::states::InitialState;

/// Weak-measurement strengths are kept strictly below one in sweeps and
/// random draws; the strength-one point is a supremum with zero success
/// probability.
pub const MAX_WM_STRENGTH: f64 = 1.0 - 1e-6;

/// Sweepable parameters. `AlphaRatio` is |alpha/beta|; the conversion
/// `alpha = r / sqrt(1 + r^2)` keeps normalization exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    AlphaRatio,
    Gamma,
    Eta,
    P,
    Q,
}

impl Param {
    pub const ALL: [Param; 5] = [Param::AlphaRatio, Param::Gamma, Param::Eta, Param::P, Param::Q];

    pub fn name(&self) -> &'static str {
        match self {
            Param::AlphaRatio => "alpha_ratio",
            Param::Gamma => "gamma",
            Param::Eta => "eta",
            Param::P => "p",
            Param::Q => "q",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "alpha_ratio" => Ok(Param::AlphaRatio),
            "gamma" => Ok(Param::Gamma),
            "eta" => Ok(Param::Eta),
            "p" => Ok(Param::P),
            "q" => Ok(Param::Q),
            other => Err(Error::BadSpec(format!("unknown parameter `{other}`"))),
        }
    }

    fn check_value<T: Real>(&self, value: T) -> Result<()> {
        let ok = match self {
            Param::AlphaRatio => value > T::zero() && value.is_finite(),
            Param::P => (T::zero()..=T::lit(MAX_WM_STRENGTH)).contains(&value),
            _ => (T::zero()..=T::one()).contains(&value),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadSpec(format!(
                "value {} out of range for {}",
                value.to_f64().unwrap_or(f64::NAN),
                self.name()
            )))
        }
    }
}

/// Requested output columns, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    ConcurrenceCad,
    ConcurrenceQmr,
    SuccessProb,
    EsdFlag,
    Delta,
}

impl Output {
    pub const ALL: [Output; 5] = [
        Output::ConcurrenceCad,
        Output::ConcurrenceQmr,
        Output::SuccessProb,
        Output::EsdFlag,
        Output::Delta,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Output::ConcurrenceCad => "concurrence_cad",
            Output::ConcurrenceQmr => "concurrence_qmr",
            Output::SuccessProb => "success_prob",
            Output::EsdFlag => "esd",
            Output::Delta => "delta",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "concurrence_cad" => Ok(Output::ConcurrenceCad),
            "concurrence_qmr" => Ok(Output::ConcurrenceQmr),
            "success_prob" => Ok(Output::SuccessProb),
            "esd" | "esd_flag" => Ok(Output::EsdFlag),
            "delta" => Ok(Output::Delta),
            other => Err(Error::BadSpec(format!("unknown output `{other}`"))),
        }
    }
}

/// One axis of a grid: `count >= 2` evenly spaced points over a
/// non-degenerate range.
#[derive(Debug, Clone, Copy)]
pub struct VarySpec<T> {
    pub param: Param,
    pub start: T,
    pub stop: T,
    pub count: usize,
}

/// How the reversal strength is chosen per grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QMode {
    /// Use the explicitly bound `q`.
    Explicit,
    /// Substitute the optimal `q = 1 - sqrt(W/U)` at every point.
    Optimal,
}

#[derive(Debug, Clone)]
pub struct SweepSpec<T> {
    pub varying: Vec<VarySpec<T>>,
    pub fixed: Vec<(Param, T)>,
    pub q_mode: QMode,
    pub outputs: Vec<Output>,
}

/// Evaluated grid: column names, then rows of plain numbers (the
/// sudden-death flag is encoded 0/1).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable<T> {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<T>>,
}

impl<T: Real> SweepSpec<T> {
    fn validate(&self, require_q: bool) -> Result<()> {
        if self.varying.is_empty() || self.varying.len() > 2 {
            return Err(Error::BadSpec("one or two varying parameters required".into()));
        }
        if self.outputs.is_empty() {
            return Err(Error::BadSpec("at least one output column required".into()));
        }
        let mut bound: Vec<Param> = Vec::new();
        for v in &self.varying {
            if v.count < 2 {
                return Err(Error::BadSpec(format!(
                    "{}: count must be at least 2",
                    v.param.name()
                )));
            }
            if !(v.start < v.stop) {
                return Err(Error::BadSpec(format!(
                    "{}: range must satisfy start < stop",
                    v.param.name()
                )));
            }
            v.param.check_value(v.start)?;
            v.param.check_value(v.stop)?;
            bound.push(v.param);
        }
        for (p, value) in &self.fixed {
            p.check_value(*value)?;
            bound.push(*p);
        }
        for p in Param::ALL {
            let required = match p {
                Param::Q => require_q && self.q_mode == QMode::Explicit,
                _ => true,
            };
            let n = bound.iter().filter(|&&b| b == p).count();
            if required && n != 1 {
                return Err(Error::BadSpec(format!(
                    "{} must be bound exactly once (found {n})",
                    p.name()
                )));
            }
            if !required && n > 0 && p == Param::Q && self.q_mode == QMode::Optimal {
                return Err(Error::BadSpec(
                    "q must not be bound when the optimal reversal is requested".into(),
                ));
            }
            if !require_q && p == Param::Q && n > 0 {
                return Err(Error::BadSpec(
                    "q plays no role in a sudden-death map".into(),
                ));
            }
        }
        Ok(())
    }
}

fn linspace<T: Real>(v: &VarySpec<T>) -> Vec<T> {
    let step = (v.stop - v.start) / T::from_usize(v.count - 1).expect("count fits");
    (0..v.count)
        .map(|k| {
            if k == v.count - 1 {
                v.stop
            } else {
                v.start + T::from_usize(k).expect("count fits") * step
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
struct Point<T> {
    ratio: T,
    gamma: T,
    eta: T,
    p: T,
    q: Option<T>,
}

impl<T: Real> Point<T> {
    fn state(&self) -> Result<InitialState<T>> {
        let alpha = self.ratio / (T::one() + self.ratio * self.ratio).sqrt();
        InitialState::from_alpha(alpha)
    }

    fn params(&self) -> Result<ChannelParams<T>> {
        ChannelParams::new(self.gamma, self.eta)
    }
}

fn eval_outputs<T: Real>(point: &Point<T>, q_mode: QMode, outputs: &[Output]) -> Result<Vec<T>> {
    let state = point.state()?;
    let params = point.params()?;

    // The sudden-death map leaves q unbound; only strength-dependent
    // outputs may reach for it.
    let q_eff = match q_mode {
        QMode::Explicit => point.q,
        QMode::Optimal => Some(optimal_q(&state, params, point.p)?),
    };
    let terms = AnalyticQmrTerms::compute(&state, params, point.p);

    let mut row = Vec::with_capacity(outputs.len());
    for out in outputs {
        let value = match out {
            Output::ConcurrenceCad => concurrence_cad_closed(&state, params).concurrence,
            Output::ConcurrenceQmr | Output::Delta => {
                let report = match q_mode {
                    QMode::Optimal => optimal_concurrence(&state, params, point.p)?,
                    QMode::Explicit => {
                        let strengths =
                            MeasurementStrengths::new(point.p, q_eff.expect("validated q binding"))?;
                        match concurrence_qmr_closed(&state, params, strengths) {
                            Ok(r) => r,
                            // A fully annihilated branch (q = 1 with W = 0)
                            // delivers no state and no entanglement.
                            Err(Error::NullPostselection) => crate::entanglement::ConcurrenceReport {
                                concurrence: T::zero(),
                                delta: T::zero(),
                                sqrt_eigenvalues: None,
                                method: crate::entanglement::ConcurrenceMethod::ClosedFormQmr,
                            },
                            Err(e) => return Err(e),
                        }
                    }
                };
                match out {
                    Output::ConcurrenceQmr => report.concurrence,
                    _ => report.delta,
                }
            }
            Output::SuccessProb => terms.success_probability(q_eff.expect("validated q binding")),
            Output::EsdFlag => {
                if esd_condition_qmr(&state, params, point.p)? {
                    T::one()
                } else {
                    T::zero()
                }
            }
        };
        row.push(value);
    }
    Ok(row)
}

fn run_grid<T: Real>(spec: &SweepSpec<T>, require_q: bool) -> Result<SweepTable<T>> {
    spec.validate(require_q)?;

    let mut columns: Vec<String> = spec.varying.iter().map(|v| v.param.name().into()).collect();
    for (p, _) in &spec.fixed {
        columns.push(p.name().into());
    }
    for out in &spec.outputs {
        columns.push(out.name().into());
    }

    let grids: Vec<Vec<T>> = spec.varying.iter().map(linspace).collect();
    let outer = &grids[0];
    let inner: &[T] = grids.get(1).map(Vec::as_slice).unwrap_or(&[]);

    let mut rows = Vec::new();
    let mut emit = |assignments: &[(Param, T)]| -> Result<()> {
        let mut point = Point {
            ratio: T::zero(),
            gamma: T::zero(),
            eta: T::zero(),
            p: T::zero(),
            q: None,
        };
        for &(p, value) in assignments {
            match p {
                Param::AlphaRatio => point.ratio = value,
                Param::Gamma => point.gamma = value,
                Param::Eta => point.eta = value,
                Param::P => point.p = value,
                Param::Q => point.q = Some(value),
            }
        }
        let mut row: Vec<T> = assignments[..spec.varying.len() + spec.fixed.len()]
            .iter()
            .map(|&(_, v)| v)
            .collect();
        row.extend(eval_outputs(&point, spec.q_mode, &spec.outputs)?);
        rows.push(row);
        Ok(())
    };

    match spec.varying.len() {
        1 => {
            for &x in outer {
                let mut assignments = vec![(spec.varying[0].param, x)];
                assignments.extend(spec.fixed.iter().copied());
                emit(&assignments)?;
            }
        }
        _ => {
            for &x in outer {
                for &y in inner {
                    let mut assignments =
                        vec![(spec.varying[0].param, x), (spec.varying[1].param, y)];
                    assignments.extend(spec.fixed.iter().copied());
                    emit(&assignments)?;
                }
            }
        }
    }

    Ok(SweepTable { columns, rows })
}

/// Evaluates the cartesian grid row-major, first varying parameter
/// outermost. With [`QMode::Optimal`] the reversal strength is replaced
/// by `1 - sqrt(W/U)` at every point.
pub fn run_sweep<T: Real>(spec: &SweepSpec<T>) -> Result<SweepTable<T>> {
    run_grid(spec, true)
}

/// Sudden-death region map over (amplitude ratio, damping strength) at a
/// fixed memory parameter and optional weak-measurement strength: the
/// flag column is 1 exactly where the strict ratio inequality holds.
pub fn classify_esd_region<T: Real>(spec: &SweepSpec<T>) -> Result<SweepTable<T>> {
    {
        let varied: Vec<Param> = spec.varying.iter().map(|v| v.param).collect();
        if !(varied.contains(&Param::AlphaRatio) && varied.contains(&Param::Gamma))
            || varied.len() != 2
        {
            return Err(Error::BadSpec(
                "the map varies exactly alpha_ratio and gamma".into(),
            ));
        }
        if spec.outputs != vec![Output::EsdFlag] {
            return Err(Error::BadSpec(
                "the map emits exactly the sudden-death flag".into(),
            ));
        }
    }
    run_grid(spec, false)
}

/// Traces the sudden-death boundary ratio
/// `(1 - p) eta_bar g sqrt(g_bar) / (eta_bar sqrt(g_bar) + eta)` over a
/// uniform grid in the damping strength.
pub fn trace_boundary<T: Real>(eta: T, p: T, points: usize) -> Result<Vec<(T, T)>> {
    crate::channels::check_unit_interval("eta", eta)?;
    crate::channels::check_unit_interval("p", p)?;
    if points < 2 {
        return Err(Error::BadSpec("boundary trace needs at least 2 points".into()));
    }
    let etab = T::one() - eta;
    let pb = T::one() - p;
    let step = T::one() / T::from_usize(points - 1).expect("count fits");
    Ok((0..points)
        .map(|k| {
            let g = if k == points - 1 {
                T::one()
            } else {
                T::from_usize(k).expect("count fits") * step
            };
            let gbr = (T::one() - g).sqrt();
            let denom = etab * gbr + eta;
            let ratio = if denom == T::zero() {
                T::zero()
            } else {
                pb * etab * g * gbr / denom
            };
            (g, ratio)
        })
        .collect())
}

/// Draws random parameter tuples, golden-section searches the explicit
/// reversal-strength concurrence, and returns the largest distance between
/// the searched optimum and the closed-form `q = 1 - sqrt(W/U)`.
///
/// Draws whose achievable concurrence is below 1e-3 are redrawn: inside
/// the sudden-death region the concurrence is identically zero and every
/// reversal strength is trivially optimal.
pub fn verify_q_optimum<T: Real>(samples: usize, seed: u64) -> Result<T> {
    if samples == 0 {
        return Err(Error::BadSpec("at least one sample required".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut max_err = T::zero();
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < samples {
        attempts += 1;
        if attempts > samples.saturating_mul(200) {
            return Err(Error::NumericBreakdown(
                "drawing non-degenerate optimization samples failed",
            ));
        }
        let alpha = rng.uniform_in(T::lit(0.01), T::lit(0.99));
        let gamma = rng.uniform::<T>();
        let eta = rng.uniform::<T>();
        let p = rng.uniform_in(T::zero(), T::lit(MAX_WM_STRENGTH));

        let state = InitialState::from_alpha(alpha)?;
        let params = ChannelParams::new(gamma, eta)?;
        let q_formula = optimal_q(&state, params, p)?;
        let achieved = concurrence_qmr_closed(
            &state,
            params,
            MeasurementStrengths::new(p, q_formula.min(T::lit(MAX_WM_STRENGTH)))?,
        )?
        .concurrence;
        if achieved < T::lit(1e-3) {
            continue;
        }
        accepted += 1;

        let objective = |q: T| {
            MeasurementStrengths::new(p, q)
                .and_then(|s| concurrence_qmr_closed(&state, params, s))
                .map(|r| r.concurrence)
                .unwrap_or(T::zero())
        };
        let (q_found, _) = golden_section_max(objective, T::zero(), T::one(), T::lit(1e-8), 200);
        max_err = max_err.max((q_found - q_formula).abs());
    }
    Ok(max_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixed(pairs: &[(Param, f64)]) -> Vec<(Param, f64)> {
        pairs.to_vec()
    }

    fn one_third_ratio() -> f64 {
        (1.0f64 / 3.0) / (8f64.sqrt() / 3.0)
    }

    #[test]
    fn single_axis_sweep_has_requested_rows_and_columns() {
        let spec = SweepSpec {
            varying: vec![VarySpec {
                param: Param::Gamma,
                start: 0.0,
                stop: 1.0,
                count: 3,
            }],
            fixed: fixed(&[
                (Param::AlphaRatio, one_third_ratio()),
                (Param::Eta, 0.0),
                (Param::P, 0.0),
                (Param::Q, 0.0),
            ]),
            q_mode: QMode::Explicit,
            outputs: vec![Output::ConcurrenceCad],
        };
        let table = run_sweep(&spec).unwrap();
        assert_eq!(table.rows.len(), 3);
        assert_eq!(
            table.columns,
            vec!["gamma", "alpha_ratio", "eta", "p", "q", "concurrence_cad"]
        );
        // gamma = 0 row carries the undamped concurrence.
        assert!((table.rows[0][5] - 4.0 * 2f64.sqrt() / 9.0).abs() < 1e-12);
    }

    #[test]
    fn two_axis_sweep_is_row_major_with_first_axis_outermost() {
        let spec = SweepSpec {
            varying: vec![
                VarySpec {
                    param: Param::Gamma,
                    start: 0.0,
                    stop: 1.0,
                    count: 2,
                },
                VarySpec {
                    param: Param::Eta,
                    start: 0.0,
                    stop: 1.0,
                    count: 3,
                },
            ],
            fixed: fixed(&[
                (Param::AlphaRatio, 1.0),
                (Param::P, 0.0),
                (Param::Q, 0.0),
            ]),
            q_mode: QMode::Explicit,
            outputs: vec![Output::ConcurrenceCad],
        };
        let table = run_sweep(&spec).unwrap();
        assert_eq!(table.rows.len(), 6);
        let gammas: Vec<f64> = table.rows.iter().map(|r| r[0]).collect();
        assert_eq!(gammas, vec![0.0, 0.0, 0.0, 1.0, 1.0, 1.0]);
        let etas: Vec<f64> = table.rows.iter().map(|r| r[1]).collect();
        assert_eq!(etas, vec![0.0, 0.5, 1.0, 0.0, 0.5, 1.0]);
    }

    #[test]
    fn zero_width_range_is_rejected() {
        let spec = SweepSpec {
            varying: vec![VarySpec {
                param: Param::Gamma,
                start: 0.5,
                stop: 0.5,
                count: 2,
            }],
            fixed: fixed(&[
                (Param::AlphaRatio, 1.0),
                (Param::Eta, 0.0),
                (Param::P, 0.0),
                (Param::Q, 0.0),
            ]),
            q_mode: QMode::Explicit,
            outputs: vec![Output::ConcurrenceCad],
        };
        assert!(matches!(run_sweep(&spec), Err(Error::BadSpec(_))));
    }

    #[test]
    fn duplicate_and_missing_bindings_are_rejected() {
        let duplicate = SweepSpec {
            varying: vec![VarySpec {
                param: Param::Gamma,
                start: 0.0,
                stop: 1.0,
                count: 2,
            }],
            fixed: fixed(&[
                (Param::Gamma, 0.5),
                (Param::AlphaRatio, 1.0),
                (Param::Eta, 0.0),
                (Param::P, 0.0),
                (Param::Q, 0.0),
            ]),
            q_mode: QMode::Explicit,
            outputs: vec![Output::ConcurrenceCad],
        };
        assert!(matches!(run_sweep(&duplicate), Err(Error::BadSpec(_))));

        let missing = SweepSpec {
            varying: vec![VarySpec {
                param: Param::Gamma,
                start: 0.0,
                stop: 1.0,
                count: 2,
            }],
            fixed: fixed(&[(Param::AlphaRatio, 1.0), (Param::P, 0.0), (Param::Q, 0.0)]),
            q_mode: QMode::Explicit,
            outputs: vec![Output::ConcurrenceCad],
        };
        assert!(matches!(run_sweep(&missing), Err(Error::BadSpec(_))));
    }

    #[test]
    fn optimal_mode_refuses_an_explicit_q_binding() {
        let spec = SweepSpec {
            varying: vec![VarySpec {
                param: Param::Gamma,
                start: 0.0,
                stop: 1.0,
                count: 2,
            }],
            fixed: fixed(&[
                (Param::AlphaRatio, 1.0),
                (Param::Eta, 0.0),
                (Param::P, 0.0),
                (Param::Q, 0.3),
            ]),
            q_mode: QMode::Optimal,
            outputs: vec![Output::ConcurrenceQmr],
        };
        assert!(matches!(run_sweep(&spec), Err(Error::BadSpec(_))));
    }

    #[test]
    fn protected_sweep_approaches_unit_concurrence_at_strong_wm() {
        let spec = SweepSpec {
            varying: vec![VarySpec {
                param: Param::P,
                start: 0.0,
                stop: 0.999,
                count: 100,
            }],
            fixed: fixed(&[
                (Param::AlphaRatio, one_third_ratio()),
                (Param::Gamma, 0.6),
                (Param::Eta, 0.0),
            ]),
            q_mode: QMode::Optimal,
            outputs: vec![Output::ConcurrenceQmr],
        };
        let table = run_sweep(&spec).unwrap();
        assert_eq!(table.rows.len(), 100);
        let last = table.rows.last().unwrap();
        assert!(last[4] > 0.99, "final concurrence {}", last[4]);
    }

    #[test]
    fn flagged_rows_carry_zero_optimal_concurrence() {
        let spec = SweepSpec {
            varying: vec![VarySpec {
                param: Param::Gamma,
                start: 0.0,
                stop: 1.0,
                count: 64,
            }],
            fixed: fixed(&[
                (Param::AlphaRatio, one_third_ratio()),
                (Param::Eta, 0.2),
                (Param::P, 0.05),
            ]),
            q_mode: QMode::Optimal,
            outputs: vec![Output::ConcurrenceQmr, Output::EsdFlag],
        };
        let table = run_sweep(&spec).unwrap();
        for row in &table.rows {
            if row[5] == 1.0 {
                assert_eq!(row[4], 0.0, "flagged row at gamma {}", row[0]);
            }
        }
    }

    #[test]
    fn repeated_runs_are_bit_identical() {
        let spec = SweepSpec {
            varying: vec![VarySpec {
                param: Param::Gamma,
                start: 0.0,
                stop: 1.0,
                count: 257,
            }],
            fixed: fixed(&[
                (Param::AlphaRatio, 0.7),
                (Param::Eta, 0.35),
                (Param::P, 0.4),
            ]),
            q_mode: QMode::Optimal,
            outputs: Output::ALL.to_vec(),
        };
        let a = run_sweep(&spec).unwrap();
        let b = run_sweep(&spec).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn esd_map_with_full_memory_has_no_flagged_cells() {
        let spec = SweepSpec {
            varying: vec![
                VarySpec {
                    param: Param::AlphaRatio,
                    start: 1.0 / 32.0,
                    stop: 1.0,
                    count: 32,
                },
                VarySpec {
                    param: Param::Gamma,
                    start: 0.0,
                    stop: 1.0,
                    count: 32,
                },
            ],
            fixed: fixed(&[(Param::Eta, 1.0), (Param::P, 0.0)]),
            q_mode: QMode::Explicit,
            outputs: vec![Output::EsdFlag],
        };
        let table = classify_esd_region(&spec).unwrap();
        assert_eq!(table.rows.len(), 32 * 32);
        assert!(table.rows.iter().all(|r| r[4] == 0.0));
    }

    #[test]
    fn esd_map_flags_follow_the_strict_inequality() {
        let spec = SweepSpec {
            varying: vec![
                VarySpec {
                    param: Param::AlphaRatio,
                    start: 0.05,
                    stop: 1.0,
                    count: 20,
                },
                VarySpec {
                    param: Param::Gamma,
                    start: 0.0,
                    stop: 1.0,
                    count: 20,
                },
            ],
            fixed: fixed(&[(Param::Eta, 0.2), (Param::P, 0.0)]),
            q_mode: QMode::Explicit,
            outputs: vec![Output::EsdFlag],
        };
        let table = classify_esd_region(&spec).unwrap();
        // Spot value: ratio near the running example, gamma = 0.6.
        for row in &table.rows {
            let (ratio, gamma, flag) = (row[0], row[1], row[4]);
            if (ratio - 0.35).abs() < 0.03 && (gamma - 0.6).abs() < 0.03 {
                assert_eq!(flag, 1.0);
            }
        }
    }

    #[test]
    fn boundary_trace_limits_and_memoryless_interior() {
        let trace: Vec<(f64, f64)> = trace_boundary(0.0, 0.0, 513).unwrap();
        assert_eq!(trace.first().unwrap().1, 0.0);
        assert_eq!(trace.last().unwrap().1, 0.0);
        // Without memory the bound reduces to gamma itself.
        let mid = trace[256];
        assert!((mid.0 - 0.5).abs() < 1e-12);
        assert!((mid.1 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn q_search_agrees_with_the_closed_form() {
        let err = verify_q_optimum::<f64>(50, 0xC0FFEE).unwrap();
        assert!(err < 1e-4, "max |q_search - q_formula| = {err}");
    }

    #[test]
    fn q_search_rejects_zero_samples() {
        assert!(matches!(verify_q_optimum::<f64>(0, 1), Err(Error::BadSpec(_))));
    }
}
