//! Driven-dissipative three-mode model: Hamiltonians, Liouvillian, steady
//! state and a time-evolution oracle.
//!
//! All rates are in units of the cavity decay rate κ. Density matrices are
//! vectorized column-major, `vec(ρ)[i + d·j] = ρ[i][j]`, so that
//! `vec(AρB) = (Bᵀ ⊗ A) vec(ρ)`.

use std::fmt;

use faer::linalg::solvers::Solve;
use faer::sparse::{SparseColMat, Triplet};
use faer::{Mat, Side};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{lowering_op, number_op, FockSpace, Mode, Operator, ONE, ZERO};

/// Maximum entrywise deviation from Hermiticity accepted for a state.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Maximum deviation of the trace from one.
pub const TRACE_TOL: f64 = 1e-10;
/// Most negative eigenvalue tolerated before a state is rejected.
pub const MIN_EIGENVALUE_TOL: f64 = -1e-8;
/// Residual bound `‖L(ρ_s)‖_F` for an accepted steady state.
pub const STEADY_RESIDUAL_TOL: f64 = 1e-10;
/// Default fixed integrator step, in units of 1/κ.
pub const DEFAULT_DT_MAX: f64 = 0.01;

/// Rotating-frame model coefficients, all in units of κ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub delta_a: f64,
    pub delta_b: f64,
    pub delta_c: f64,
    /// Four-wave-mixing coupling.
    pub g: f64,
    /// Coherent drive on mode a.
    pub f_a: f64,
    pub kappa_a: f64,
    pub kappa_b: f64,
    pub kappa_c: f64,
}

impl Default for SystemParams {
    fn default() -> Self {
        Self {
            delta_a: 0.0,
            delta_b: 0.0,
            delta_c: 0.0,
            g: 0.0,
            f_a: 0.0,
            kappa_a: 1.0,
            kappa_b: 1.0,
            kappa_c: 1.0,
        }
    }
}

impl SystemParams {
    /// Parameters obeying the frequency-matching condition
    /// `Δb + Δc = 2Δa`; `Δc` is derived from the other two detunings.
    pub fn constrained(delta_a: f64, delta_b: f64, g: f64, f_a: f64) -> Result<Self> {
        let p = Self {
            delta_a,
            delta_b,
            delta_c: 2.0 * delta_a - delta_b,
            g,
            f_a,
            ..Self::default()
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [
            self.delta_a,
            self.delta_b,
            self.delta_c,
            self.g,
            self.f_a,
            self.kappa_a,
            self.kappa_b,
            self.kappa_c,
        ];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("all parameters must be finite".into()));
        }
        if self.kappa_a <= 0.0 || self.kappa_b <= 0.0 || self.kappa_c <= 0.0 {
            return Err(Error::InvalidParams("decay rates must be positive".into()));
        }
        if self.f_a < 0.0 {
            return Err(Error::InvalidParams(
                "drive amplitude must be non-negative".into(),
            ));
        }
        Ok(())
    }

    /// Whether `Δb + Δc = 2Δa` holds to `tol`.
    pub fn satisfies_matching(&self, tol: f64) -> bool {
        (self.delta_b + self.delta_c - 2.0 * self.delta_a).abs() <= tol
    }

    pub fn detuning(&self, mode: Mode) -> f64 {
        match mode {
            Mode::A => self.delta_a,
            Mode::B => self.delta_b,
            Mode::C => self.delta_c,
        }
    }

    pub fn kappa(&self, mode: Mode) -> f64 {
        match mode {
            Mode::A => self.kappa_a,
            Mode::B => self.kappa_b,
            Mode::C => self.kappa_c,
        }
    }
}

/// `H = Σ Δ_o n̂_o + g(â²b̂†ĉ† + â†²b̂ĉ) + F_a(â† + â)`.
pub fn build_h_eff(params: &SystemParams, space: &FockSpace) -> Operator {
    let d = space.dim();
    let a = lowering_op(space, Mode::A);
    let b = lowering_op(space, Mode::B);
    let c = lowering_op(space, Mode::C);

    let mut h = Operator::zeros(d);
    for mode in Mode::ALL {
        h = &h + &number_op(space, mode).scale(re(params.detuning(mode)));
    }

    // a² b† c†
    let down = &(&(&a * &a) * &b.adjoint()) * &c.adjoint();
    let mixing = &down + &down.adjoint();
    h = &h + &mixing.scale(re(params.g));

    let drive = &a + &a.adjoint();
    h = &h + &drive.scale(re(params.f_a));
    h
}

/// `H̃ = H_eff − i Σ (κ_o/2) n̂_o`.
pub fn build_non_hermitian(params: &SystemParams, space: &FockSpace) -> Operator {
    let mut h = build_h_eff(params, space);
    for mode in Mode::ALL {
        let damping = Complex64::new(0.0, -0.5 * params.kappa(mode));
        h = &h + &number_op(space, mode).scale(damping);
    }
    h
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Sparse matrix acting on column-major vectorized density matrices.
///
/// Stored in compressed-row form with sorted, duplicate-free columns.
#[derive(Clone, PartialEq)]
pub struct Superoperator {
    hilbert_dim: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<Complex64>,
}

impl fmt::Debug for Superoperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Superoperator")
            .field("dim2", &self.dim2())
            .field("nnz", &self.nnz())
            .finish()
    }
}

impl Superoperator {
    /// Assembles from `(row, col, value)` entries; duplicates are summed.
    pub fn from_triplets(
        hilbert_dim: usize,
        mut entries: Vec<(usize, usize, Complex64)>,
    ) -> Result<Self> {
        let n = hilbert_dim * hilbert_dim;
        if let Some(&(r, c, _)) = entries.iter().find(|(r, c, _)| *r >= n || *c >= n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: r.max(c) + 1,
            });
        }
        entries.sort_by_key(|&(r, c, _)| (r, c));

        let mut row_ptr = vec![0usize; n + 1];
        let mut col_idx = Vec::with_capacity(entries.len());
        let mut values: Vec<Complex64> = Vec::with_capacity(entries.len());
        let mut last: Option<(usize, usize)> = None;
        for (r, c, v) in entries {
            if last == Some((r, c)) {
                *values.last_mut().expect("previous entry") += v;
                continue;
            }
            last = Some((r, c));
            row_ptr[r + 1] += 1;
            col_idx.push(c);
            values.push(v);
        }
        for r in 0..n {
            row_ptr[r + 1] += row_ptr[r];
        }
        Ok(Self {
            hilbert_dim,
            row_ptr,
            col_idx,
            values,
        })
    }

    pub fn hilbert_dim(&self) -> usize {
        self.hilbert_dim
    }

    pub fn dim2(&self) -> usize {
        self.hilbert_dim * self.hilbert_dim
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Entries as `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..self.dim2()).flat_map(move |r| {
            (self.row_ptr[r]..self.row_ptr[r + 1])
                .map(move |k| (r, self.col_idx[k], self.values[k]))
        })
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        let span = &self.col_idx[self.row_ptr[row]..self.row_ptr[row + 1]];
        match span.binary_search(&col) {
            Ok(k) => self.values[self.row_ptr[row] + k],
            Err(_) => ZERO,
        }
    }

    pub fn apply_into(&self, x: &[Complex64], y: &mut [Complex64]) {
        assert_eq!(x.len(), self.dim2());
        assert_eq!(y.len(), self.dim2());
        for (r, out) in y.iter_mut().enumerate() {
            let mut acc = ZERO;
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                acc += self.values[k] * x[self.col_idx[k]];
            }
            *out = acc;
        }
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut y = vec![ZERO; self.dim2()];
        self.apply_into(x, &mut y);
        y
    }

    /// `L(ρ)` for a matrix argument.
    pub fn apply_to(&self, rho: &Operator) -> Result<Operator> {
        if rho.dim() != self.hilbert_dim {
            return Err(Error::DimensionMismatch {
                expected: self.hilbert_dim,
                got: rho.dim(),
            });
        }
        Ok(matricize(self.hilbert_dim, &self.apply(&vectorize(rho))))
    }

    pub fn to_dense(&self) -> Mat<Complex64> {
        let n = self.dim2();
        let mut m = Mat::zeros(n, n);
        for (r, c, v) in self.entries() {
            m[(r, c)] = v;
        }
        m
    }
}

/// Column-major vectorization.
pub fn vectorize(op: &Operator) -> Vec<Complex64> {
    let d = op.dim();
    let mut v = Vec::with_capacity(d * d);
    for j in 0..d {
        for i in 0..d {
            v.push(op.get(i, j));
        }
    }
    v
}

/// Inverse of [`vectorize`].
pub fn matricize(dim: usize, v: &[Complex64]) -> Operator {
    assert_eq!(v.len(), dim * dim, "vector length must be dim²");
    Operator::from_fn(dim, |i, j| v[i + dim * j])
}

/// Lindblad generator with one damped collapse channel per mode:
/// `dρ/dt = −i[H,ρ] + Σ_o κ_o (ôρô† − ½ô†ôρ − ½ρô†ô)`.
pub fn build_liouvillian(params: &SystemParams, space: &FockSpace) -> Superoperator {
    let d = space.dim();
    // −iH̃ρ + iρH̃† carries both the commutator and the anticommutator terms.
    let h_nh = build_non_hermitian(params, space);
    let h_nz = h_nh.nonzeros();

    let mut entries = Vec::with_capacity(2 * d * h_nz.len() + 3 * d * d);
    let minus_i = Complex64::new(0.0, -1.0);
    let plus_i = Complex64::new(0.0, 1.0);
    for &(i, k, v) in &h_nz {
        // I ⊗ H̃
        for j in 0..d {
            entries.push((i + d * j, k + d * j, minus_i * v));
        }
        // conj(H̃) ⊗ I, with row index j and column index l of H̃
        let (j, l) = (i, k);
        for r in 0..d {
            entries.push((r + d * j, r + d * l, plus_i * v.conj()));
        }
    }

    for mode in Mode::ALL {
        let kappa = params.kappa(mode);
        let low = lowering_op(space, mode).nonzeros();
        // conj(c) ⊗ c
        for &(j, l, cjl) in &low {
            for &(i, k, cik) in &low {
                entries.push((i + d * j, k + d * l, cjl.conj() * cik * kappa));
            }
        }
    }

    entries.retain(|e| e.2 != ZERO);
    Superoperator::from_triplets(d, entries).expect("indices bounded by construction")
}

/// Hermitian, positive, unit-trace state of the composite system.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    rho: Operator,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(rho: Operator) -> Result<Self> {
        let herm = rho.hermiticity_error();
        if !(herm <= HERMITICITY_TOL) {
            return Err(Error::InvalidDensityMatrix(format!(
                "hermiticity error {herm:e}"
            )));
        }
        let tr = rho.trace();
        if !((tr - ONE).norm() <= TRACE_TOL) {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr}")));
        }
        let dm = Self { rho };
        let min = dm.min_eigenvalue()?;
        if min < MIN_EIGENVALUE_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "minimum eigenvalue {min:e}"
            )));
        }
        Ok(dm)
    }

    /// `|ψ⟩⟨ψ|` for a normalized state vector.
    pub fn from_pure(psi: &[Complex64]) -> Result<Self> {
        let d = psi.len();
        Self::new(Operator::from_fn(d, |i, j| psi[i] * psi[j].conj()))
    }

    /// `|m n p⟩⟨m n p|`.
    pub fn basis_state(space: &FockSpace, m: usize, n: usize, p: usize) -> Result<Self> {
        let psi = space
            .basis_vector(m, n, p)
            .ok_or_else(|| Error::InvalidParams(format!("|{m}{n}{p}⟩ lies outside truncation")))?;
        Self::from_pure(&psi)
    }

    pub fn vacuum(space: &FockSpace) -> Self {
        Self::basis_state(space, 0, 0, 0).expect("vacuum is always representable")
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn matrix(&self) -> &Operator {
        &self.rho
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.rho.get(row, col)
    }

    /// `Tr(ρ O)`.
    pub fn expect(&self, op: &Operator) -> Complex64 {
        let d = self.dim();
        let mut acc = ZERO;
        for i in 0..d {
            for k in 0..d {
                acc += self.rho.get(i, k) * op.get(k, i);
            }
        }
        acc
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.rho)
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(self.eigenvalues()?.first().copied().unwrap_or(0.0))
    }

    /// `½ Tr|ρ − σ|`.
    pub fn trace_distance(&self, other: &DensityMatrix) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let diff = &self.rho - &other.rho;
        Ok(0.5
            * hermitian_eigenvalues(&diff)?
                .iter()
                .map(|x| x.abs())
                .sum::<f64>())
    }
}

fn hermitian_eigenvalues(op: &Operator) -> Result<Vec<f64>> {
    op.as_mat()
        .as_ref()
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|_| Error::Eigen)
}

fn hermitize(op: &Operator) -> Operator {
    let d = op.dim();
    Operator::from_fn(d, |i, j| 0.5 * (op.get(i, j) + op.get(j, i).conj()))
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Solves `L(ρ) = 0`, `Tr ρ = 1` by sparse LU, with the first equation
/// of the vectorized system replaced by the trace constraint.
pub fn steady_state(l: &Superoperator) -> Result<DensityMatrix> {
    let d = l.hilbert_dim();
    let n = l.dim2();
    if n == 0 {
        return Err(Error::DegenerateSteadyState("empty space".into()));
    }

    let mut triplets: Vec<Triplet<usize, usize, Complex64>> = l
        .entries()
        .filter(|&(r, _, _)| r != 0)
        .map(|(r, c, v)| Triplet::new(r, c, v))
        .collect();
    triplets.extend((0..d).map(|k| Triplet::new(0, k + d * k, ONE)));

    let a = SparseColMat::<usize, Complex64>::try_new_from_triplets(n, n, &triplets)
        .map_err(|e| Error::DegenerateSteadyState(format!("assembly failed: {e:?}")))?;
    let lu = a
        .sp_lu()
        .map_err(|e| Error::DegenerateSteadyState(format!("factorization failed: {e:?}")))?;

    let mut rhs = Mat::<Complex64>::zeros(n, 1);
    rhs[(0, 0)] = ONE;
    lu.solve_in_place(rhs.as_mut());
    let x: Vec<Complex64> = (0..n).map(|i| rhs[(i, 0)]).collect();

    if x.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::DegenerateSteadyState("non-finite solution".into()));
    }
    let residual = norm(&l.apply(&x));
    if !(residual < STEADY_RESIDUAL_TOL) {
        return Err(Error::DegenerateSteadyState(format!(
            "residual ‖L(ρ)‖ = {residual:e}"
        )));
    }

    let rho = hermitize(&matricize(d, &x));
    let tr = rho.trace().re;
    DensityMatrix::new(rho.scale(Complex64::new(1.0 / tr, 0.0)))
}

/// Fixed-step classical RK4 integration of `dρ/dt = L(ρ)` up to `t_final`,
/// with every step no longer than `dt_max`.
pub fn evolve(
    l: &Superoperator,
    rho0: &DensityMatrix,
    t_final: f64,
    dt_max: f64,
) -> Result<DensityMatrix> {
    if rho0.dim() != l.hilbert_dim() {
        return Err(Error::DimensionMismatch {
            expected: l.hilbert_dim(),
            got: rho0.dim(),
        });
    }
    if !(t_final >= 0.0) || !t_final.is_finite() {
        return Err(Error::InvalidParams(format!("t_final = {t_final}")));
    }
    if !(dt_max > 0.0) {
        return Err(Error::InvalidParams(format!("dt_max = {dt_max}")));
    }
    if t_final == 0.0 {
        return Ok(rho0.clone());
    }

    let d = l.hilbert_dim();
    let n = l.dim2();
    let steps = (t_final / dt_max).ceil().max(1.0) as usize;
    let h = t_final / steps as f64;

    let mut y = vectorize(rho0.matrix());
    let mut k1 = vec![ZERO; n];
    let mut k2 = vec![ZERO; n];
    let mut k3 = vec![ZERO; n];
    let mut k4 = vec![ZERO; n];
    let mut tmp = vec![ZERO; n];

    for step in 1..=steps {
        l.apply_into(&y, &mut k1);
        axpy(&y, 0.5 * h, &k1, &mut tmp);
        l.apply_into(&tmp, &mut k2);
        axpy(&y, 0.5 * h, &k2, &mut tmp);
        l.apply_into(&tmp, &mut k3);
        axpy(&y, h, &k3, &mut tmp);
        l.apply_into(&tmp, &mut k4);
        for i in 0..n {
            y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }

        if step % 256 == 0 || step == steps {
            let t = step as f64 * h;
            let trace: Complex64 = (0..d).map(|i| y[i + d * i]).sum();
            if !trace.re.is_finite() || (trace - ONE).norm() > 1e-8 {
                return Err(Error::StepSize {
                    t,
                    reason: format!("trace drifted to {trace}"),
                });
            }
        }
    }

    let rho = matricize(d, &y);
    let herm = rho.hermiticity_error();
    if herm > 1e-8 {
        return Err(Error::StepSize {
            t: t_final,
            reason: format!("hermiticity error {herm:e}"),
        });
    }
    DensityMatrix::new(hermitize(&rho)).map_err(|e| Error::StepSize {
        t: t_final,
        reason: e.to_string(),
    })
}

fn axpy(y: &[Complex64], a: f64, x: &[Complex64], out: &mut [Complex64]) {
    for ((o, yi), xi) in out.iter_mut().zip(y).zip(x) {
        *o = yi + a * xi;
    }
}

/// Builds the space, Liouvillian and steady state in one call.
pub fn solve_point(params: &SystemParams, space: &FockSpace) -> Result<DensityMatrix> {
    params.validate()?;
    steady_state(&build_liouvillian(params, space))
}
