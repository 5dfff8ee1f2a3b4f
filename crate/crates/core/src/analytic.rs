//! Weak-drive analytics: the two-photon manifold, the truncated amplitude
//! equations and the optimal-detuning search.
//!
//! In the weak-drive limit the state is well described by
//! `|ψ⟩ = C000|000⟩ + C100|100⟩ + C200|200⟩ + C011|011⟩`. Projecting the
//! steady-state Schrödinger equation with the non-Hermitian Hamiltonian onto
//! `⟨100|`, `⟨200|` and `⟨011|` with `C000 = 1` gives
//!
//! ```text
//! F + (Δa − iκa/2)·C100 + √2F·C200                   = 0
//! √2F·C100 + (2Δa − iκa)·C200 + √2g·C011             = 0
//! √2g·C200 + (Δb + Δc − i(κb + κc)/2)·C011           = 0
//! ```

use num_complex::Complex64;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::SystemParams;

/// Largest drive for which the amplitude truncation is trusted.
pub const WEAK_DRIVE_LIMIT: f64 = 0.05;
/// Relative spread within which grid values count as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Drive-free Hamiltonian block on `{|200⟩, |011⟩}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ManifoldMatrix {
    pub entries: [[f64; 2]; 2],
}

impl ManifoldMatrix {
    /// Eigenvalues `(ω₊, ω₋)` with `ω₊ ≥ ω₋`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let [[p, q], [_, r]] = self.entries;
        let mean = 0.5 * (p + r);
        // hypot keeps ±√2g exact when the diagonal vanishes
        let radius = (0.5 * (p - r)).hypot(q);
        (mean + radius, mean - radius)
    }
}

pub fn manifold_matrix(params: &SystemParams) -> ManifoldMatrix {
    let off = std::f64::consts::SQRT_2 * params.g;
    ManifoldMatrix {
        entries: [
            [2.0 * params.delta_a, off],
            [off, params.delta_b + params.delta_c],
        ],
    }
}

/// Dressed two-photon frequencies; `±√2g` at `Δa = 0`, `Δb + Δc = 0`.
pub fn manifold_eigenfrequencies(params: &SystemParams) -> (f64, f64) {
    manifold_matrix(params).eigenvalues()
}

/// Weak-drive probability amplitudes, normalized to `C000 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeVector {
    pub c000: Complex64,
    pub c100: Complex64,
    pub c200: Complex64,
    pub c011: Complex64,
}

/// Solves the three projected amplitude equations by Cramer's rule.
pub fn steady_amplitudes(params: &SystemParams) -> Result<AmplitudeVector> {
    params.validate()?;
    if !(params.f_a > 0.0) {
        return Err(Error::InvalidParams(
            "amplitude equations need a nonzero drive".into(),
        ));
    }
    let f = Complex64::new(params.f_a, 0.0);
    let s = f * std::f64::consts::SQRT_2;
    let w = Complex64::new(std::f64::consts::SQRT_2 * params.g, 0.0);
    let d1 = Complex64::new(params.delta_a, -0.5 * params.kappa_a);
    let d2 = Complex64::new(2.0 * params.delta_a, -params.kappa_a);
    let d3 = Complex64::new(
        params.delta_b + params.delta_c,
        -0.5 * (params.kappa_b + params.kappa_c),
    );

    let minor = d2 * d3 - w * w;
    let det = d1 * minor - s * s * d3;
    let scale = (d1.norm() + s.norm()) * (d2.norm() + s.norm() + w.norm()) * (d3.norm() + w.norm());
    if !det.norm().is_finite() || det.norm() <= f64::EPSILON * scale {
        return Err(Error::DegenerateParameters);
    }

    Ok(AmplitudeVector {
        c000: Complex64::new(1.0, 0.0),
        c100: -f * minor / det,
        c200: f * s * d3 / det,
        c011: -f * s * w / det,
    })
}

/// `g²(0) ≈ 2|C200|² / |C100|⁴`.
///
/// With `Δa = 0`, `Δb = −Δc` and equal decay rates this tends to
/// `κ⁴/(κ² + 2g²)²` as the drive vanishes.
pub fn weak_drive_g2(params: &SystemParams) -> Result<f64> {
    if params.f_a > WEAK_DRIVE_LIMIT {
        return Err(Error::InvalidParams(format!(
            "f_a = {} exceeds the weak-drive limit {WEAK_DRIVE_LIMIT}",
            params.f_a
        )));
    }
    let amp = steady_amplitudes(params)?;
    Ok(2.0 * amp.c200.norm_sqr() / amp.c100.norm_sqr().powi(2))
}

/// Points `start, start + step, …` not exceeding `stop`.
pub fn detuning_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(Error::InvalidRange(format!("[{start}, {stop}] is empty")));
    }
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::InvalidRange(format!("step {step} must be positive")));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| start + k as f64 * step).collect())
}

/// Index of the smallest value. Values within [`TIE_TOLERANCE`] of the
/// minimum are tied; ties go to the smallest `|x|`, then to grid order.
/// Non-finite values are ignored.
pub fn select_minimum(xs: &[f64], values: &[f64]) -> Option<usize> {
    assert_eq!(xs.len(), values.len());
    let min = values
        .iter()
        .copied()
        .filter(|v| v.is_finite())
        .fold(f64::INFINITY, f64::min);
    if !min.is_finite() {
        return None;
    }
    let bound = min + TIE_TOLERANCE * min.abs();
    let mut best: Option<usize> = None;
    for (i, v) in values.iter().enumerate() {
        if !(v.is_finite() && *v <= bound) {
            continue;
        }
        match best {
            Some(b) if xs[b].abs() <= xs[i].abs() => {}
            _ => best = Some(i),
        }
    }
    best
}

/// Grid search for the `Δa` minimizing [`weak_drive_g2`] with the other
/// parameters held fixed. Requires `Δb = −Δc`.
pub fn optimal_detuning_scan(params: &SystemParams, range: (f64, f64), step: f64) -> Result<f64> {
    if (params.delta_b + params.delta_c).abs() > 1e-12 * (1.0 + params.delta_b.abs()) {
        return Err(Error::InvalidParams(format!(
            "scan requires Δb = −Δc, got Δb = {}, Δc = {}",
            params.delta_b, params.delta_c
        )));
    }
    let grid = detuning_grid(range.0, range.1, step)?;
    let eval = |&x: &f64| {
        weak_drive_g2(&SystemParams {
            delta_a: x,
            ..*params
        })
    };
    #[cfg(feature = "parallel")]
    let values: Result<Vec<f64>> = grid.par_iter().map(eval).collect();
    #[cfg(not(feature = "parallel"))]
    let values: Result<Vec<f64>> = grid.iter().map(eval).collect();
    let values = values?;

    let best = select_minimum(&grid, &values)
        .ok_or_else(|| Error::InvalidRange("no finite objective on the grid".into()))?;
    Ok(grid[best])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{build_space, FockTruncation};
    use crate::model::build_h_eff;
    use std::f64::consts::SQRT_2;

    fn fig2() -> SystemParams {
        SystemParams {
            f_a: 0.01,
            g: 3.0,
            delta_b: 1.0,
            delta_c: -1.0,
            ..SystemParams::default()
        }
    }

    #[test]
    fn manifold_entries() {
        let p = SystemParams {
            g: 3.0,
            ..SystemParams::default()
        };
        let m = manifold_matrix(&p).entries;
        assert_eq!(m[0][0], 0.0);
        assert_eq!(m[1][1], 0.0);
        assert_eq!(m[0][1], 3.0 * SQRT_2);
        assert_eq!(m[1][0], 3.0 * SQRT_2);

        let diag = manifold_matrix(&SystemParams {
            delta_a: 0.4,
            delta_b: 1.0,
            ..SystemParams::default()
        });
        assert_eq!(diag.entries[0][1], 0.0);
        assert_eq!(diag.eigenvalues(), (1.0, 0.8));
    }

    #[test]
    fn manifold_is_hamiltonian_block() {
        let s = build_space(FockTruncation::default()).unwrap();
        let p = SystemParams {
            delta_a: 0.3,
            delta_b: -1.7,
            delta_c: 2.9,
            g: 1.3,
            f_a: 0.0,
            ..SystemParams::default()
        };
        let h = build_h_eff(&p, &s);
        let idx = [s.index(2, 0, 0).unwrap(), s.index(0, 1, 1).unwrap()];
        let m = manifold_matrix(&p).entries;
        for r in 0..2 {
            for c in 0..2 {
                let v = h.get(idx[r], idx[c]);
                assert!((v.re - m[r][c]).abs() < 1e-14 && v.im == 0.0);
            }
        }
    }

    #[test]
    fn eigenfrequencies() {
        let (hi, lo) = manifold_eigenfrequencies(&SystemParams {
            g: 3.0,
            ..SystemParams::default()
        });
        assert_eq!(hi, 3.0 * SQRT_2);
        assert_eq!(lo, -3.0 * SQRT_2);
        assert!((hi - 4.2426).abs() < 1e-4);

        // [[1, √2], [√2, 1]] → 1 ± √2
        let p = SystemParams {
            delta_a: 0.5,
            delta_b: 0.25,
            delta_c: 0.75,
            g: 1.0,
            ..SystemParams::default()
        };
        let (hi, lo) = manifold_eigenfrequencies(&p);
        assert!((hi - (1.0 + SQRT_2)).abs() < 1e-15);
        assert!((lo - (1.0 - SQRT_2)).abs() < 1e-15);
    }

    #[test]
    fn amplitudes_at_figure_point() {
        let amp = steady_amplitudes(&fig2()).unwrap();
        assert_eq!(amp.c000, Complex64::new(1.0, 0.0));
        // leading order: |C100| = 2F/κ, |C200| = 2√2F²/(κ²+2g²)
        assert!((amp.c100.norm() - 0.02).abs() < 0.02 * 1e-3);
        let c200 = 2.0 * SQRT_2 * 1e-4 / 19.0;
        assert!((amp.c200.norm() - c200).abs() < c200 * 1e-3);
        assert!((amp.c200.norm() - 1.49e-5).abs() < 0.01e-5);
    }

    #[test]
    fn amplitudes_satisfy_projected_equations() {
        let p = SystemParams {
            delta_a: 0.37,
            delta_b: 1.3,
            delta_c: -0.4,
            g: 2.2,
            f_a: 0.03,
            kappa_a: 0.9,
            kappa_b: 1.1,
            kappa_c: 0.8,
        };
        let a = steady_amplitudes(&p).unwrap();
        let f = p.f_a;
        let w = SQRT_2 * p.g;
        let d1 = Complex64::new(p.delta_a, -p.kappa_a / 2.0);
        let d2 = Complex64::new(2.0 * p.delta_a, -p.kappa_a);
        let d3 = Complex64::new(p.delta_b + p.delta_c, -(p.kappa_b + p.kappa_c) / 2.0);
        let r1 = f + d1 * a.c100 + SQRT_2 * f * a.c200;
        let r2 = SQRT_2 * f * a.c100 + d2 * a.c200 + w * a.c011;
        let r3 = w * a.c200 + d3 * a.c011;
        for r in [r1, r2, r3] {
            assert!(r.norm() < 1e-16, "{r}");
        }
    }

    #[test]
    fn large_coupling_suppresses_double_occupation() {
        let mut last = f64::INFINITY;
        for g in [1.0, 10.0, 100.0, 1e4] {
            let c200 = steady_amplitudes(&SystemParams { g, ..fig2() })
                .unwrap()
                .c200
                .norm();
            assert!(c200 < last);
            last = c200;
        }
        assert!(last < 1e-11);
    }

    #[test]
    fn drive_required() {
        let p = SystemParams { f_a: 0.0, ..fig2() };
        assert!(matches!(
            steady_amplitudes(&p),
            Err(Error::InvalidParams(_))
        ));
        let strong = SystemParams { f_a: 0.2, ..fig2() };
        assert!(weak_drive_g2(&strong).is_err());
    }

    #[test]
    fn closed_form_g2() {
        for (g, expect) in [
            (3.0, 1.0 / 361.0),
            (0.5, (1.0f64 / 1.5).powi(2)),
            (0.0, 1.0),
        ] {
            let v = weak_drive_g2(&SystemParams { g, ..fig2() }).unwrap();
            assert!((v - expect).abs() < expect * 1e-3, "g={g}: {v} vs {expect}");
        }
        assert!((weak_drive_g2(&fig2()).unwrap() - 2.77e-3).abs() < 0.01e-3);
    }

    #[test]
    fn closed_form_is_independent_of_idler_split() {
        for db in [0.5, 1.0, 2.0, 7.0] {
            let p = SystemParams {
                delta_b: db,
                delta_c: -db,
                f_a: 1e-4,
                ..fig2()
            };
            let v = weak_drive_g2(&p).unwrap();
            assert!((v - 1.0 / 361.0).abs() < 1e-8);
        }
    }

    #[test]
    fn amplitude_ordering_in_weak_drive() {
        for f in [0.001, 0.01, 0.05] {
            let mut g = 0.1;
            while g <= 10.0 {
                let a = steady_amplitudes(&SystemParams {
                    f_a: f,
                    g,
                    ..fig2()
                })
                .unwrap();
                assert!(a.c000.norm() > a.c100.norm());
                assert!(a.c100.norm() > a.c200.norm(), "f={f} g={g}");
                g += 0.1;
            }
        }
    }

    #[test]
    fn g2_decreases_with_coupling() {
        let mut last = f64::INFINITY;
        for k in 1..=1000 {
            let g = 0.01 * k as f64;
            let v = weak_drive_g2(&SystemParams { g, ..fig2() }).unwrap();
            assert!(v < last, "not decreasing at g={g}");
            last = v;
        }
    }

    #[test]
    fn grid_construction() {
        let grid = detuning_grid(-1.0, 1.0, 0.5).unwrap();
        assert_eq!(grid, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(detuning_grid(-10.0, 10.0, 0.01).unwrap().len(), 2001);
        assert_eq!(detuning_grid(2.0, 2.0, 0.1).unwrap(), vec![2.0]);
        assert!(matches!(
            detuning_grid(1.0, 0.0, 0.1),
            Err(Error::InvalidRange(_))
        ));
        assert!(detuning_grid(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn tie_breaking() {
        let xs = [-2.0, -1.0, 0.0, 1.0, 2.0];
        assert_eq!(select_minimum(&xs, &[1.0; 5]), Some(2));
        assert_eq!(select_minimum(&xs, &[1.0, 0.5, 0.7, 0.5, 1.0]), Some(1));
        assert_eq!(
            select_minimum(&xs, &[f64::NAN, 3.0, f64::NAN, 2.0, 4.0]),
            Some(3)
        );
        assert_eq!(select_minimum(&xs, &[f64::NAN; 5]), None);
    }

    #[test]
    fn optimal_detuning_at_resonance() {
        let x = optimal_detuning_scan(&fig2(), (-10.0, 10.0), 0.01).unwrap();
        assert!(x.abs() <= 0.01, "{x}");
    }

    #[test]
    fn optimal_detuning_without_coupling() {
        // flat objective: every grid value ties and the scan settles on zero
        let p = SystemParams {
            g: 0.0,
            f_a: 1e-6,
            ..fig2()
        };
        assert_eq!(
            optimal_detuning_scan(&p, (-5.0, 5.0), 0.1).unwrap().abs(),
            0.0
        );
    }

    #[test]
    fn scan_preconditions() {
        let p = SystemParams {
            delta_c: 0.5,
            ..fig2()
        };
        assert!(optimal_detuning_scan(&p, (-1.0, 1.0), 0.1).is_err());
        assert!(matches!(
            optimal_detuning_scan(&fig2(), (1.0, -1.0), 0.1),
            Err(Error::InvalidRange(_))
        ));
    }

    #[test]
    fn manifold_frequencies_exact_for_random_couplings() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let g: f64 = rng.gen_range(-20.0..20.0);
            let (hi, lo) = manifold_eigenfrequencies(&SystemParams {
                g,
                ..SystemParams::default()
            });
            assert_eq!(hi, (SQRT_2 * g).abs());
            assert_eq!(lo, -(SQRT_2 * g).abs());
        }
    }
}
