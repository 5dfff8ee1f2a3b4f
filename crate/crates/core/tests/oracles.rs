//! Cross-checks of the solvers against independent routes: long-time
//! integration, closed-form single-cavity states and the amplitude equations.

mod common;

use blockade::model::DEFAULT_DT_MAX;
use blockade::observables::marginal_distribution;
use blockade::{
    build_liouvillian, build_non_hermitian, build_space, evolve, g2_zero, mean_occupation,
    steady_amplitudes, steady_state, weak_drive_g2, DensityMatrix, FockTruncation, Mode,
    SystemParams,
};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

#[test]
fn steady_state_matches_long_time_evolution() {
    let space = build_space(FockTruncation::default()).unwrap();
    let l = build_liouvillian(&detuning_figure(), &space);
    let rho_s = steady_state(&l).unwrap();
    let evolved = evolve(&l, &DensityMatrix::vacuum(&space), 50.0, DEFAULT_DT_MAX).unwrap();
    let d = rho_s.trace_distance(&evolved).unwrap();
    assert!(d < 1e-6, "trace distance {d:e}");
}

#[test]
fn random_initial_states_converge_together() {
    let space = build_space(FockTruncation::default()).unwrap();
    let l = build_liouvillian(&detuning_figure(), &space);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let finals: Vec<DensityMatrix> = (0..5)
        .map(|_| {
            let rho0 = random_density_matrix(&space, &mut rng);
            evolve(&l, &rho0, 100.0, DEFAULT_DT_MAX).unwrap()
        })
        .collect();
    for i in 0..finals.len() {
        for j in i + 1..finals.len() {
            let d = finals[i].trace_distance(&finals[j]).unwrap();
            assert!(d < 1e-6, "states {i} and {j}: {d:e}");
        }
    }
}

// Linearly driven damped cavity: coherent state with α = −F/(Δ − iκ/2).
fn coherent_amplitudes(alpha: Complex64, n_max: usize) -> Vec<Complex64> {
    let mut c = Vec::with_capacity(n_max + 1);
    let norm = (-alpha.norm_sqr() / 2.0).exp();
    let mut term = Complex64::new(norm, 0.0);
    for n in 0..=n_max {
        if n > 0 {
            term = term * alpha / (n as f64).sqrt();
        }
        c.push(term);
    }
    c
}

#[test]
fn decoupled_modes_reach_product_of_single_cavity_states() {
    let space = build_space(FockTruncation::default()).unwrap();
    for (delta_a, f_a, kappa_a) in [(0.0, 0.01, 1.0), (0.7, 0.05, 1.0), (-1.3, 0.1, 0.6)] {
        let p = SystemParams {
            delta_a,
            delta_b: 0.4,
            delta_c: -2.0,
            f_a,
            kappa_a,
            g: 0.0,
            ..SystemParams::default()
        };
        let rho = steady_state(&build_liouvillian(&p, &space)).unwrap();

        let alpha = -f_a / Complex64::new(delta_a, -kappa_a / 2.0);
        let amps = coherent_amplitudes(alpha, 5);
        let mut psi = vec![Complex64::new(0.0, 0.0); space.dim()];
        for (m, c) in amps.iter().enumerate() {
            psi[space.index(m, 0, 0).unwrap()] = *c;
        }
        let nrm = psi.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        psi.iter_mut().for_each(|x| *x /= nrm);
        let expected = DensityMatrix::from_pure(&psi).unwrap();

        let d = rho.trace_distance(&expected).unwrap();
        assert!(d < 1e-9, "Δa={delta_a}: trace distance {d:e}");

        let n = mean_occupation(&rho, &space, Mode::A);
        let closed = f_a * f_a / (delta_a * delta_a + kappa_a * kappa_a / 4.0);
        assert!(
            (n - closed).abs() < 1e-9 * closed.max(1e-6),
            "{n} vs {closed}"
        );
    }
}

#[test]
fn amplitudes_match_non_hermitian_evolution() {
    let space = build_space(FockTruncation::default()).unwrap();
    for p in [
        detuning_figure(),
        SystemParams {
            delta_a: 0.4,
            g: 1.0,
            ..detuning_figure()
        },
        SystemParams {
            g: 0.5,
            ..coupling_figure()
        },
    ] {
        let h = build_non_hermitian(&p, &space);
        let psi = schrodinger(&h, &space.basis_vector(0, 0, 0).unwrap(), 50.0, 0.01);
        let c000 = psi[space.index(0, 0, 0).unwrap()];
        let ratio = |m, n, q| psi[space.index(m, n, q).unwrap()] / c000;

        let amp = steady_amplitudes(&p).unwrap();
        for (num, analytic) in [
            (ratio(1, 0, 0), amp.c100),
            (ratio(2, 0, 0), amp.c200),
            (ratio(0, 1, 1), amp.c011),
        ] {
            let rel = (num - analytic).norm() / analytic.norm();
            assert!(rel < 0.01, "{p:?}: {num} vs {analytic}");
        }
    }
}

#[test]
fn weak_drive_estimate_tracks_master_equation() {
    let space = build_space(FockTruncation::default()).unwrap();
    for g in [0.5, 1.0, 2.0, 3.0, 5.0, 10.0] {
        for (f_a, tol) in [(0.01, 2.0), (0.001, 1.1)] {
            let p = SystemParams {
                g,
                f_a,
                ..detuning_figure()
            };
            let rho = steady_state(&build_liouvillian(&p, &space)).unwrap();
            let numeric = g2_zero(&rho, &space, Mode::A).unwrap();
            let weak = weak_drive_g2(&p).unwrap();
            let ratio = numeric / weak;
            assert!(
                ratio < tol && ratio > 1.0 / tol,
                "g={g} F={f_a}: {numeric} vs {weak}"
            );
        }
    }
}

#[test]
fn g2_on_weak_drive_plateau() {
    let space = build_space(FockTruncation::default()).unwrap();
    let g2_at = |f_a: f64| {
        let p = SystemParams {
            f_a,
            ..detuning_figure()
        };
        let rho = steady_state(&build_liouvillian(&p, &space)).unwrap();
        g2_zero(&rho, &space, Mode::A).unwrap()
    };
    let full = g2_at(0.01);
    let half = g2_at(0.005);
    assert!((full - half).abs() / full < 0.05, "{full} vs {half}");
}

#[test]
fn marginal_is_a_distribution() {
    let space = build_space(FockTruncation::new(6, 2, 3).unwrap()).unwrap();
    let rho = steady_state(&build_liouvillian(&detuning_figure(), &space)).unwrap();
    for mode in Mode::ALL {
        let p = marginal_distribution(&rho, &space, mode);
        assert_eq!(p.len(), space.truncation().max(mode) + 1);
        assert!(p.iter().all(|&x| x > -1e-15));
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}
