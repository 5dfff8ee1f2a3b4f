//! Steady-state photon blockade in a three-mode cavity system coupled by
//! four-wave mixing.
//!
//! Mode a is coherently driven and converts photon pairs into one b and one
//! c photon through `g(â²b̂†ĉ† + h.c.)`. The crate builds the truncated
//! Lindblad model, solves for its steady state, evaluates g²(0) and mean
//! occupations, and cross-checks the numerics against weak-drive analytics.
//!
//! ```
//! use blockade::{build_space, solve_point, g2_zero, FockTruncation, Mode, SystemParams};
//!
//! let space = build_space(FockTruncation::default()).unwrap();
//! let params = SystemParams { g: 3.0, f_a: 0.01, delta_b: 1.0, delta_c: -1.0, ..Default::default() };
//! let rho = solve_point(&params, &space).unwrap();
//! assert!(g2_zero(&rho, &space, Mode::A).unwrap() < 0.01);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod error;
pub mod fock;
pub mod model;
pub mod observables;
pub mod sweep;

pub use analytic::{
    manifold_eigenfrequencies, manifold_matrix, optimal_detuning_scan, steady_amplitudes,
    weak_drive_g2, AmplitudeVector, ManifoldMatrix,
};
pub use error::{Error, Result};
pub use fock::{
    build_space, lowering_op, number_op, raising_op, FockSpace, FockTruncation, Mode, Operator,
};
pub use model::{
    build_h_eff, build_liouvillian, build_non_hermitian, evolve, solve_point, steady_state,
    DensityMatrix, Superoperator, SystemParams,
};
pub use observables::{g2_zero, mean_occupation, ObservableRecord};
pub use sweep::{
    emit_csv, parse_config, parse_csv, run_sweep, Axis, Scale, SweepResult, SweepSpec,
};
