//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Three interactive operations: a detuning sweep (g² and ⟨n_a⟩ against
//! Δa), a coupling sweep (g² against g) and the weak-drive analytics of the
//! two-photon manifold. Each sweep solves the full master equation at every
//! sample and carries the weak-drive estimate alongside for comparison.

use wasm_bindgen::prelude::*;

use blockade::sweep::{Axis, Scale, SweepSpec};
use blockade::{analytic, sweep, FockTruncation, SystemParams};

/// Largest sample count accepted from the page.
pub const MAX_POINTS: usize = 801;

/// One sampled curve. Gap samples hold NaN.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    x: Vec<f64>,
    g2: Vec<f64>,
    n_a: Vec<f64>,
    g2_weak: Vec<f64>,
}

#[wasm_bindgen]
impl Curve {
    #[wasm_bindgen(getter)]
    pub fn x(&self) -> Vec<f64> {
        self.x.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn g2(&self) -> Vec<f64> {
        self.g2.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn n_a(&self) -> Vec<f64> {
        self.n_a.clone()
    }

    /// Amplitude-equation estimate at the same samples.
    #[wasm_bindgen(getter)]
    pub fn g2_weak(&self) -> Vec<f64> {
        self.g2_weak.clone()
    }

    /// Index of the smallest g², NaN samples excluded.
    pub fn argmin_g2(&self) -> Option<usize> {
        analytic::select_minimum(&self.x, &self.g2)
    }
}

/// Weak-drive analytics at one parameter point.
#[wasm_bindgen]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Manifold {
    pub omega_plus: f64,
    pub omega_minus: f64,
    pub splitting: f64,
    pub c100_abs: f64,
    pub c200_abs: f64,
    pub c011_abs: f64,
    pub g2_weak: f64,
}

fn truncation(n_a_max: usize) -> Result<FockTruncation, blockade::Error> {
    FockTruncation::new(n_a_max, 2, 2)
}

fn check_points(points: usize) -> Result<(), blockade::Error> {
    if !(2..=MAX_POINTS).contains(&points) {
        return Err(blockade::Error::InvalidRange(format!(
            "points must lie in 2..={MAX_POINTS}, got {points}"
        )));
    }
    Ok(())
}

fn curve(spec: &SweepSpec) -> Result<Curve, blockade::Error> {
    let result = sweep::run_sweep(spec)?;
    let nan = f64::NAN;
    let mut out = Curve {
        x: Vec::with_capacity(spec.points),
        g2: Vec::with_capacity(spec.points),
        n_a: Vec::with_capacity(spec.points),
        g2_weak: Vec::with_capacity(spec.points),
    };
    for r in &result.records {
        let params = spec.axis.apply(&spec.base, r.x);
        out.x.push(r.x);
        out.g2.push(r.g2_a.unwrap_or(nan));
        out.n_a.push(r.n_a.unwrap_or(nan));
        out.g2_weak
            .push(analytic::weak_drive_g2(&params).unwrap_or(nan));
    }
    Ok(out)
}

pub fn run_detuning_curve(
    g: f64,
    f_a: f64,
    delta_b: f64,
    delta_c: f64,
    span: f64,
    points: usize,
    n_a_max: usize,
) -> Result<Curve, blockade::Error> {
    check_points(points)?;
    curve(&SweepSpec {
        axis: Axis::DeltaA,
        start: -span,
        stop: span,
        points,
        scale: Scale::Linear,
        base: SystemParams {
            g,
            f_a,
            delta_b,
            delta_c,
            ..SystemParams::default()
        },
        trunc: truncation(n_a_max)?,
    })
}

pub fn run_coupling_curve(
    f_a: f64,
    delta_a: f64,
    delta_b: f64,
    g_min: f64,
    g_max: f64,
    points: usize,
    n_a_max: usize,
) -> Result<Curve, blockade::Error> {
    check_points(points)?;
    curve(&SweepSpec {
        axis: Axis::G,
        start: g_min,
        stop: g_max,
        points,
        scale: Scale::Log,
        base: SystemParams {
            f_a,
            delta_a,
            delta_b,
            delta_c: -delta_b,
            ..SystemParams::default()
        },
        trunc: truncation(n_a_max)?,
    })
}

pub fn run_manifold(
    delta_a: f64,
    delta_b: f64,
    delta_c: f64,
    g: f64,
    f_a: f64,
) -> Result<Manifold, blockade::Error> {
    let params = SystemParams {
        delta_a,
        delta_b,
        delta_c,
        g,
        f_a,
        ..SystemParams::default()
    };
    let (omega_plus, omega_minus) = analytic::manifold_eigenfrequencies(&params);
    let amp = analytic::steady_amplitudes(&params)?;
    Ok(Manifold {
        omega_plus,
        omega_minus,
        splitting: omega_plus - omega_minus,
        c100_abs: amp.c100.norm(),
        c200_abs: amp.c200.norm(),
        c011_abs: amp.c011.norm(),
        g2_weak: analytic::weak_drive_g2(&params).unwrap_or(f64::NAN),
    })
}

fn js_err(e: blockade::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// g²(0) and ⟨n_a⟩ over Δa ∈ [−span, span].
#[wasm_bindgen]
pub fn detuning_curve(
    g: f64,
    f_a: f64,
    delta_b: f64,
    delta_c: f64,
    span: f64,
    points: usize,
    n_a_max: usize,
) -> Result<Curve, JsError> {
    run_detuning_curve(g, f_a, delta_b, delta_c, span, points, n_a_max).map_err(js_err)
}

/// g²(0) over log-spaced g ∈ [g_min, g_max] with Δc = −Δb.
#[wasm_bindgen]
pub fn coupling_curve(
    f_a: f64,
    delta_a: f64,
    delta_b: f64,
    g_min: f64,
    g_max: f64,
    points: usize,
    n_a_max: usize,
) -> Result<Curve, JsError> {
    run_coupling_curve(f_a, delta_a, delta_b, g_min, g_max, points, n_a_max).map_err(js_err)
}

#[wasm_bindgen]
pub fn two_photon_manifold(
    delta_a: f64,
    delta_b: f64,
    delta_c: f64,
    g: f64,
    f_a: f64,
) -> Result<Manifold, JsError> {
    run_manifold(delta_a, delta_b, delta_c, g, f_a).map_err(js_err)
}
