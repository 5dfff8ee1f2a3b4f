//! Truncated three-mode Fock space and the elementary bosonic operators on it.
//!
//! Basis states `|m n p⟩` carry `m` photons in mode a, `n` in mode b and `p`
//! in mode c. The composite index orders mode a slowest and mode c fastest:
//!
//! ```text
//! index(m, n, p) = m·(n_b_max+1)(n_c_max+1) + n·(n_c_max+1) + p
//! ```

use std::fmt;
use std::ops::{Add, Mul, Sub};

use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// One of the three bosonic modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    A,
    B,
    C,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::A, Mode::B, Mode::C];
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::A => "a",
            Mode::B => "b",
            Mode::C => "c",
        })
    }
}

/// Per-mode photon-number ceilings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockTruncation {
    pub n_a_max: usize,
    pub n_b_max: usize,
    pub n_c_max: usize,
}

impl FockTruncation {
    pub fn new(n_a_max: usize, n_b_max: usize, n_c_max: usize) -> Result<Self> {
        let trunc = Self {
            n_a_max,
            n_b_max,
            n_c_max,
        };
        trunc.validate()?;
        Ok(trunc)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_a_max < 1 || self.n_b_max < 1 || self.n_c_max < 1 {
            return Err(Error::InvalidTruncation {
                a: self.n_a_max,
                b: self.n_b_max,
                c: self.n_c_max,
            });
        }
        Ok(())
    }

    pub fn max(&self, mode: Mode) -> usize {
        match mode {
            Mode::A => self.n_a_max,
            Mode::B => self.n_b_max,
            Mode::C => self.n_c_max,
        }
    }

    pub fn dim(&self) -> usize {
        (self.n_a_max + 1) * (self.n_b_max + 1) * (self.n_c_max + 1)
    }
}

impl Default for FockTruncation {
    /// Five photons in the driven mode, two in each idler.
    fn default() -> Self {
        Self {
            n_a_max: 5,
            n_b_max: 2,
            n_c_max: 2,
        }
    }
}

impl fmt::Display for FockTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.n_a_max, self.n_b_max, self.n_c_max)
    }
}

/// A truncated three-mode Fock basis with a fixed index ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockSpace {
    trunc: FockTruncation,
    dim: usize,
}

/// Builds the composite space for a truncation.
pub fn build_space(trunc: FockTruncation) -> Result<FockSpace> {
    trunc.validate()?;
    Ok(FockSpace {
        trunc,
        dim: trunc.dim(),
    })
}

impl FockSpace {
    pub fn new(trunc: FockTruncation) -> Result<Self> {
        build_space(trunc)
    }

    pub fn truncation(&self) -> FockTruncation {
        self.trunc
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Composite index of `|m n p⟩`, or `None` outside the truncation.
    pub fn index(&self, m: usize, n: usize, p: usize) -> Option<usize> {
        let t = &self.trunc;
        if m > t.n_a_max || n > t.n_b_max || p > t.n_c_max {
            return None;
        }
        Some(m * (t.n_b_max + 1) * (t.n_c_max + 1) + n * (t.n_c_max + 1) + p)
    }

    /// Inverse of [`FockSpace::index`].
    pub fn state(&self, index: usize) -> Option<(usize, usize, usize)> {
        if index >= self.dim {
            return None;
        }
        let t = &self.trunc;
        let p = index % (t.n_c_max + 1);
        let rest = index / (t.n_c_max + 1);
        let n = rest % (t.n_b_max + 1);
        let m = rest / (t.n_b_max + 1);
        Some((m, n, p))
    }

    /// Occupation of `mode` in basis state `index`.
    pub fn occupation(&self, index: usize, mode: Mode) -> usize {
        let (m, n, p) = self.state(index).expect("index within space");
        match mode {
            Mode::A => m,
            Mode::B => n,
            Mode::C => p,
        }
    }

    /// Iterates `(index, (m, n, p))` in index order.
    pub fn basis(&self) -> impl Iterator<Item = (usize, (usize, usize, usize))> + '_ {
        (0..self.dim).map(move |i| (i, self.state(i).expect("in range")))
    }

    pub fn basis_vector(&self, m: usize, n: usize, p: usize) -> Option<Vec<Complex64>> {
        let i = self.index(m, n, p)?;
        let mut v = vec![ZERO; self.dim];
        v[i] = ONE;
        Some(v)
    }
}

/// Dense complex square matrix acting on a [`FockSpace`].
#[derive(Clone, PartialEq)]
pub struct Operator {
    mat: Mat<Complex64>,
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Operator")
            .field("dim", &self.dim())
            .finish()
    }
}

impl Operator {
    pub fn zeros(dim: usize) -> Self {
        Self {
            mat: Mat::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            mat: Mat::identity(dim, dim),
        }
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self {
            mat: Mat::from_fn(dim, dim, f),
        }
    }

    pub fn from_mat(mat: Mat<Complex64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::DimensionMismatch {
                expected: mat.nrows(),
                got: mat.ncols(),
            });
        }
        Ok(Self { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.mat[(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.mat[(row, col)] = value;
    }

    pub fn as_mat(&self) -> &Mat<Complex64> {
        &self.mat
    }

    pub fn adjoint(&self) -> Self {
        Self {
            mat: self.mat.adjoint().to_owned(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let n = self.dim();
        Self::from_fn(n, |i, j| self.mat[(i, j)] * factor)
    }

    pub fn commutator(&self, other: &Operator) -> Self {
        &(self * other) - &(other * self)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        let n = self.dim();
        let mut max = 0.0f64;
        for j in 0..n {
            for i in 0..n {
                max = max.max(self.mat[(i, j)].norm());
            }
        }
        max
    }

    /// Largest entrywise deviation from Hermiticity.
    pub fn hermiticity_error(&self) -> f64 {
        let n = self.dim();
        let mut max = 0.0f64;
        for j in 0..n {
            for i in 0..=j {
                max = max.max((self.mat[(i, j)] - self.mat[(j, i)].conj()).norm());
            }
        }
        max
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.mat[(i, i)]).sum()
    }

    /// Nonzero entries as `(row, col, value)` in column-major order.
    pub fn nonzeros(&self) -> Vec<(usize, usize, Complex64)> {
        let n = self.dim();
        let mut out = Vec::new();
        for j in 0..n {
            for i in 0..n {
                let v = self.mat[(i, j)];
                if v != ZERO {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(
            v.len(),
            self.dim(),
            "vector length must equal operator dimension"
        );
        let n = self.dim();
        let mut out = vec![ZERO; n];
        for (j, &x) in v.iter().enumerate() {
            if x == ZERO {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                *o += self.mat[(i, j)] * x;
            }
        }
        out
    }
}

impl<'a> Add<&'a Operator> for &'a Operator {
    type Output = Operator;
    fn add(self, rhs: &'a Operator) -> Operator {
        Operator {
            mat: &self.mat + &rhs.mat,
        }
    }
}

impl<'a> Sub<&'a Operator> for &'a Operator {
    type Output = Operator;
    fn sub(self, rhs: &'a Operator) -> Operator {
        Operator {
            mat: &self.mat - &rhs.mat,
        }
    }
}

impl<'a> Mul<&'a Operator> for &'a Operator {
    type Output = Operator;
    fn mul(self, rhs: &'a Operator) -> Operator {
        Operator {
            mat: &self.mat * &rhs.mat,
        }
    }
}

/// Annihilation operator of `mode`: `⟨…,k−1,…| â |…,k,…⟩ = √k`.
pub fn lowering_op(space: &FockSpace, mode: Mode) -> Operator {
    let mut op = Operator::zeros(space.dim());
    for (col, (m, n, p)) in space.basis() {
        let (k, target) = match mode {
            Mode::A if m > 0 => (m, space.index(m - 1, n, p)),
            Mode::B if n > 0 => (n, space.index(m, n - 1, p)),
            Mode::C if p > 0 => (p, space.index(m, n, p - 1)),
            _ => continue,
        };
        let row = target.expect("lowered state stays inside the truncation");
        op.set(row, col, Complex64::new((k as f64).sqrt(), 0.0));
    }
    op
}

/// Creation operator of `mode`, the adjoint of [`lowering_op`].
pub fn raising_op(space: &FockSpace, mode: Mode) -> Operator {
    lowering_op(space, mode).adjoint()
}

/// Diagonal photon-number operator of `mode`.
pub fn number_op(space: &FockSpace, mode: Mode) -> Operator {
    let mut op = Operator::zeros(space.dim());
    for i in 0..space.dim() {
        op.set(i, i, Complex64::new(space.occupation(i, mode) as f64, 0.0));
    }
    op
}
