//! Mean occupations and the equal-time second-order correlation g²(0).

use log::warn;

use crate::error::{Error, Result};
use crate::fock::{lowering_op, number_op, FockSpace, Mode};
use crate::model::DensityMatrix;

/// Below this mean occupation g²(0) is reported as undefined.
pub const OCCUPATION_CUTOFF: f64 = 1e-14;
/// Top-Fock-level population above which the truncation is suspected of
/// suppressing g²(0).
pub const TRUNCATION_LEAK_THRESHOLD: f64 = 1e-6;

/// Observables evaluated at one sample of a sweep. `None` marks a point
/// whose solve failed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableRecord {
    pub x: f64,
    pub g2_a: Option<f64>,
    pub n_a: Option<f64>,
    pub n_b: Option<f64>,
    pub n_c: Option<f64>,
}

impl ObservableRecord {
    pub fn gap(x: f64) -> Self {
        Self {
            x,
            g2_a: None,
            n_a: None,
            n_b: None,
            n_c: None,
        }
    }

    pub fn is_gap(&self) -> bool {
        self.g2_a.is_none() && self.n_a.is_none()
    }
}

/// `Tr(ρ n̂_mode)`.
pub fn mean_occupation(rho: &DensityMatrix, space: &FockSpace, mode: Mode) -> f64 {
    let value = rho.expect(&number_op(space, mode));
    debug_assert!(
        value.im.abs() < 1e-10,
        "⟨n⟩ has imaginary part {}",
        value.im
    );
    value.re
}

/// Photon-number distribution of one mode, traced over the other two.
pub fn marginal_distribution(rho: &DensityMatrix, space: &FockSpace, mode: Mode) -> Vec<f64> {
    let mut p = vec![0.0; space.truncation().max(mode) + 1];
    for i in 0..space.dim() {
        p[space.occupation(i, mode)] += rho.get(i, i).re;
    }
    p
}

/// Population of the highest retained Fock level of `mode`.
pub fn top_level_population(rho: &DensityMatrix, space: &FockSpace, mode: Mode) -> f64 {
    *marginal_distribution(rho, space, mode)
        .last()
        .expect("at least two levels per mode")
}

/// `g²(0) = ⟨â†â†ââ⟩ / ⟨â†â⟩²` from normally ordered moments.
///
/// Logs a warning when the top Fock level of `mode` holds more than
/// [`TRUNCATION_LEAK_THRESHOLD`] of the population.
pub fn g2_zero(rho: &DensityMatrix, space: &FockSpace, mode: Mode) -> Result<f64> {
    let n = mean_occupation(rho, space, mode);
    if !(n > OCCUPATION_CUTOFF) {
        return Err(Error::UndefinedCorrelation(n));
    }
    let low = lowering_op(space, mode);
    let pair = &low * &low;
    let moment = rho.expect(&(&pair.adjoint() * &pair));
    debug_assert!(moment.im.abs() < 1e-10);

    let leak = top_level_population(rho, space, mode);
    if leak > TRUNCATION_LEAK_THRESHOLD {
        warn!(
            "mode {mode}: top Fock level holds {leak:.3e} of the population; \
             g2 may be suppressed by the truncation"
        );
    }
    Ok(moment.re / (n * n))
}

/// Evaluates every sweep observable for one state.
pub fn record(x: f64, rho: &DensityMatrix, space: &FockSpace) -> Result<ObservableRecord> {
    Ok(ObservableRecord {
        x,
        g2_a: Some(g2_zero(rho, space, Mode::A)?),
        n_a: Some(mean_occupation(rho, space, Mode::A)),
        n_b: Some(mean_occupation(rho, space, Mode::B)),
        n_c: Some(mean_occupation(rho, space, Mode::C)),
    })
}
