//! Frozen-value checks backed by oracles implemented from scratch in this
//! file: plain-array complex matrix arithmetic, an explicit Kraus sum for
//! the damping channels, and a quadratic-formula eigenvalue solver for
//! X-shaped states. None of it touches the library's linear algebra, so
//! agreement is meaningful.

use num_complex::Complex;

use cadwm::{
    concurrence_cad_closed, optimal_concurrence, optimal_q, run_protocol, wootters_concurrence,
    ChannelParams, InitialState, KrausChannel, MeasurementStrengths,
};

type C = Complex<f64>;
type Mat4 = [[C; 4]; 4];

fn zero4() -> Mat4 {
    [[C::new(0.0, 0.0); 4]; 4]
}

fn matmul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            let mut s = C::new(0.0, 0.0);
            for k in 0..4 {
                s += a[i][k] * b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

fn dagger(a: &Mat4) -> Mat4 {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

fn madd(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    out
}

fn mscale(a: &Mat4, s: f64) -> Mat4 {
    let mut out = *a;
    for row in &mut out {
        for z in row {
            *z = z.scale(s);
        }
    }
    out
}

fn kron2(a: &[[C; 2]; 2], b: &[[C; 2]; 2]) -> Mat4 {
    let mut out = zero4();
    for i1 in 0..2 {
        for j1 in 0..2 {
            for i2 in 0..2 {
                for j2 in 0..2 {
                    out[2 * i1 + i2][2 * j1 + j2] = a[i1][j1] * b[i2][j2];
                }
            }
        }
    }
    out
}

/// All six Kraus operators of the mixed channel, written out by hand.
fn cad_kraus(gamma: f64, eta: f64) -> Vec<Mat4> {
    let r = C::new(0.0, 0.0);
    let one = C::new(1.0, 0.0);
    let e0 = [[one, r], [r, C::new((1.0 - gamma).sqrt(), 0.0)]];
    let e1 = [[r, C::new(gamma.sqrt(), 0.0)], [r, r]];

    let mut a0 = zero4();
    for (i, row) in a0.iter_mut().enumerate() {
        row[i] = one;
    }
    a0[3][3] = C::new((1.0 - gamma).sqrt(), 0.0);
    let mut a1 = zero4();
    a1[0][3] = C::new(gamma.sqrt(), 0.0);

    let mut ops = Vec::new();
    for a in [&e0, &e1] {
        for b in [&e0, &e1] {
            ops.push(mscale(&kron2(a, b), (1.0 - eta).sqrt()));
        }
    }
    ops.push(mscale(&a0, eta.sqrt()));
    ops.push(mscale(&a1, eta.sqrt()));
    ops
}

fn apply_kraus(ops: &[Mat4], rho: &Mat4) -> Mat4 {
    let mut out = zero4();
    for k in ops {
        out = madd(&out, &matmul(&matmul(k, rho), &dagger(k)));
    }
    out
}

fn corner_projector(alpha: f64, beta: f64) -> Mat4 {
    let mut rho = zero4();
    rho[0][0] = C::new(alpha * alpha, 0.0);
    rho[0][3] = C::new(alpha * beta, 0.0);
    rho[3][0] = C::new(alpha * beta, 0.0);
    rho[3][3] = C::new(beta * beta, 0.0);
    rho
}

/// Eigenvalues of an X-shaped Hermitian matrix by the quadratic formula on
/// the corner block, descending.
fn x_state_eigenvalues(rho: &Mat4) -> [f64; 4] {
    let a = rho[0][0].re;
    let d = rho[3][3].re;
    let z = rho[0][3].norm();
    let mean = 0.5 * (a + d);
    let disc = (0.25 * (a - d) * (a - d) + z * z).sqrt();
    let mut vals = [mean + disc, mean - disc, rho[1][1].re, rho[2][2].re];
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    vals
}

const HALF_SQRT: f64 = std::f64::consts::FRAC_1_SQRT_2;

#[test]
fn library_channel_matches_the_hand_rolled_kraus_sum() {
    for (alpha, gamma, eta) in [
        (HALF_SQRT, 0.5, 0.5),
        (1.0 / 3.0, 0.6, 0.2),
        (0.9, 0.15, 0.85),
        (0.2, 1.0, 0.3),
    ] {
        let beta = (1.0 - alpha * alpha).sqrt();
        let reference = apply_kraus(&cad_kraus(gamma, eta), &corner_projector(alpha, beta));

        let state = InitialState::from_alpha(alpha).unwrap();
        let out = KrausChannel::cad(ChannelParams::new(gamma, eta).unwrap())
            .unwrap()
            .apply(&state.density())
            .unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!(
                    (out.matrix().get(i, j) - reference[i][j]).norm() < 1e-13,
                    "entry ({i},{j}) at alpha={alpha} gamma={gamma} eta={eta}"
                );
            }
        }
    }
}

#[test]
fn evolved_bell_state_elements_frozen() {
    // Hand evaluation at alpha = 1/sqrt(2), gamma = eta = 1/2:
    // memoryless branch gives populations (0.625, 0.125, 0.125, 0.125)
    // and coherence 0.25; the synchronous branch gives (0.75, 0, 0, 0.25)
    // and coherence sqrt(0.5)/2; the equal mixture is below.
    let reference = apply_kraus(
        &cad_kraus(0.5, 0.5),
        &corner_projector(HALF_SQRT, HALF_SQRT),
    );
    assert!((reference[0][0].re - 0.6875).abs() < 1e-15);
    assert!((reference[1][1].re - 0.0625).abs() < 1e-15);
    assert!((reference[2][2].re - 0.0625).abs() < 1e-15);
    assert!((reference[3][3].re - 0.1875).abs() < 1e-15);
    let coherence = 0.5 * (0.25 + 0.5 * 0.5f64.sqrt());
    assert!((reference[0][3].re - coherence).abs() < 1e-15);
    assert!((coherence - 0.3017766952966369).abs() < 1e-15);
}

#[test]
fn eigensolver_agrees_with_the_corner_block_quadratic() {
    let rho = apply_kraus(
        &cad_kraus(0.5, 0.5),
        &corner_projector(HALF_SQRT, HALF_SQRT),
    );
    let oracle = x_state_eigenvalues(&rho);
    assert!((oracle.iter().sum::<f64>() - 1.0).abs() < 1e-14);

    let state = InitialState::from_alpha(HALF_SQRT).unwrap();
    let evolved = KrausChannel::cad(ChannelParams::new(0.5, 0.5).unwrap())
        .unwrap()
        .apply(&state.density())
        .unwrap();
    let eig = evolved.matrix().hermitian_eigensystem(1e-10).unwrap();
    for (computed, expected) in eig.values.iter().zip(oracle.iter()) {
        assert!((computed - expected).abs() < 1e-12);
    }
}

#[test]
fn concurrence_of_the_evolved_bell_state_frozen() {
    // 2 * (coherence - middle population) with the values above:
    // 2 * (0.30177669... - 0.0625) = 0.47855339...
    let expected = 2.0 * (0.3017766952966369 - 0.0625);

    let state = InitialState::from_alpha(HALF_SQRT).unwrap();
    let params = ChannelParams::new(0.5, 0.5).unwrap();
    let closed = concurrence_cad_closed(&state, params);
    assert!((closed.concurrence - expected).abs() < 1e-15);

    let evolved = KrausChannel::cad(params).unwrap().apply(&state.density()).unwrap();
    let numeric = wootters_concurrence(&evolved).unwrap();
    assert!((numeric.concurrence - expected).abs() < 1e-10);
    assert!((numeric.concurrence - 0.47855).abs() < 1e-5);
}

#[test]
fn protocol_output_matches_a_fully_explicit_operator_chain() {
    let (alpha, gamma, eta, p): (f64, f64, f64, f64) = (1.0 / 3.0, 0.6, 0.2, 0.9);
    let beta = (1.0 - alpha * alpha).sqrt();
    let state = InitialState::from_alpha(alpha).unwrap();
    let params = ChannelParams::new(gamma, eta).unwrap();
    let q = optimal_q(&state, params, p).unwrap();

    // Reference: explicit diagonal operators around the hand-rolled sum.
    let pb = (1.0 - p).sqrt();
    let qb = (1.0 - q).sqrt();
    let mut wm = zero4();
    for (i, s) in [1.0, pb, pb, pb * pb].iter().enumerate() {
        wm[i][i] = C::new(*s, 0.0);
    }
    let mut qmr = zero4();
    for (i, s) in [qb * qb, qb, qb, 1.0].iter().enumerate() {
        qmr[i][i] = C::new(*s, 0.0);
    }
    let measured = matmul(&matmul(&wm, &corner_projector(alpha, beta)), &dagger(&wm));
    let damped = apply_kraus(&cad_kraus(gamma, eta), &measured);
    let reversed = matmul(&matmul(&qmr, &damped), &dagger(&qmr));
    let trace: f64 = (0..4).map(|i| reversed[i][i].re).sum();

    let outcome = run_protocol(&state, params, MeasurementStrengths::new(p, q).unwrap()).unwrap();
    assert!((outcome.success_probability - trace).abs() < 1e-14);
    for i in 0..4 {
        for j in 0..4 {
            let expected = reversed[i][j].unscale(trace);
            assert!((outcome.state.matrix().get(i, j) - expected).norm() < 1e-13);
        }
    }
}

#[test]
fn optimal_strength_beats_a_brute_force_strength_scan() {
    let state = InitialState::from_alpha(0.45).unwrap();
    let params = ChannelParams::new(0.55, 0.3).unwrap();
    let p = 0.25;
    let bound = optimal_concurrence(&state, params, p).unwrap().concurrence;

    let mut best = 0.0f64;
    for k in 0..=10_000 {
        let q = k as f64 / 10_000.0;
        let outcome = run_protocol(&state, params, MeasurementStrengths::new(p, q).unwrap());
        if let Ok(outcome) = outcome {
            let c = wootters_concurrence(&outcome.state).unwrap().concurrence;
            best = best.max(c);
        }
    }
    assert!(best <= bound + 1e-9, "scan found {best}, bound {bound}");
    assert!(bound - best < 1e-4, "scan should approach the bound");
}
