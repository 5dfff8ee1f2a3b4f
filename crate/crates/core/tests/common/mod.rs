#![allow(dead_code)]

use blockade::{DensityMatrix, FockSpace, Operator, SystemParams};
use num_complex::Complex64;
use rand::Rng;

/// Δa = 0, Δb = −Δc = κ, g = 3κ, F = 0.01κ.
pub fn detuning_figure() -> SystemParams {
    SystemParams {
        f_a: 0.01,
        g: 3.0,
        delta_b: 1.0,
        delta_c: -1.0,
        ..SystemParams::default()
    }
}

/// Δa = 0, Δb = −Δc = 2κ, F = 0.01κ; g is swept.
pub fn coupling_figure() -> SystemParams {
    SystemParams {
        f_a: 0.01,
        delta_b: 2.0,
        delta_c: -2.0,
        ..SystemParams::default()
    }
}

/// ρ = AA†/Tr(AA†) with Gaussian-ish complex entries.
pub fn random_density_matrix(space: &FockSpace, rng: &mut impl Rng) -> DensityMatrix {
    let d = space.dim();
    let a = Operator::from_fn(d, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let rho = &a * &a.adjoint();
    let tr = rho.trace().re;
    let rho = Operator::from_fn(d, |i, j| {
        // exact Hermitian symmetry before validation
        let v = if i <= j {
            rho.get(i, j)
        } else {
            rho.get(j, i).conj()
        };
        v / tr
    });
    DensityMatrix::new(rho).expect("random state is valid")
}

pub fn random_params(rng: &mut impl Rng) -> SystemParams {
    SystemParams {
        delta_a: rng.gen_range(-2.0..2.0),
        delta_b: rng.gen_range(-3.0..3.0),
        delta_c: rng.gen_range(-3.0..3.0),
        g: rng.gen_range(0.1..5.0),
        f_a: rng.gen_range(0.001..=0.02),
        ..SystemParams::default()
    }
}

/// Worst violation of the density-matrix invariants, as
/// (hermiticity error, |trace − 1|, minimum eigenvalue).
pub fn invariants(rho: &DensityMatrix) -> (f64, f64, f64) {
    let m = rho.matrix();
    (
        m.hermiticity_error(),
        (m.trace() - Complex64::new(1.0, 0.0)).norm(),
        rho.min_eigenvalue().unwrap(),
    )
}

/// RK4 for i dψ/dt = H ψ with a general (non-Hermitian) H.
pub fn schrodinger(h: &Operator, psi0: &[Complex64], t: f64, dt: f64) -> Vec<Complex64> {
    let steps = (t / dt).ceil() as usize;
    let dt = t / steps as f64;
    let minus_i = Complex64::new(0.0, -1.0);
    let rhs = |v: &[Complex64]| -> Vec<Complex64> {
        h.apply(v).into_iter().map(|x| minus_i * x).collect()
    };
    let mut psi = psi0.to_vec();
    for _ in 0..steps {
        let k1 = rhs(&psi);
        let y: Vec<_> = psi.iter().zip(&k1).map(|(p, k)| p + 0.5 * dt * k).collect();
        let k2 = rhs(&y);
        let y: Vec<_> = psi.iter().zip(&k2).map(|(p, k)| p + 0.5 * dt * k).collect();
        let k3 = rhs(&y);
        let y: Vec<_> = psi.iter().zip(&k3).map(|(p, k)| p + dt * k).collect();
        let k4 = rhs(&y);
        for i in 0..psi.len() {
            psi[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    psi
}
