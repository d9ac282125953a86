//! Reference states: basis states, GHZ, W, pseudopure mixtures and thermal
//! product states.

use alloc::vec;
use alloc::vec::Vec;

use crate::tensor::{self, Matrix, C64, ONE, ZERO};
use crate::tolerance;
use crate::{Error, Result};

/// Normalized pure state of `n` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    n: usize,
    amps: Vec<C64>,
}

impl PureState {
    pub fn new(n: usize, amps: Vec<C64>) -> Result<Self> {
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: amps.len(),
            });
        }
        let norm = libm::sqrt(amps.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if (norm - 1.0).abs() > tolerance::algebraic() {
            return Err(Error::NotNormalized { norm });
        }
        Ok(PureState { n, amps })
    }

    pub(crate) fn from_amplitudes_unchecked(n: usize, amps: Vec<C64>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n);
        PureState { n, amps }
    }

    /// Computational basis state `|label⟩`, qubit 1 the most significant bit.
    pub fn basis(n: usize, label: usize) -> Result<Self> {
        if label >= 1 << n {
            return Err(Error::OutOfRange {
                name: "basis label",
                value: label as f64,
            });
        }
        let mut amps = vec![ZERO; 1 << n];
        amps[label] = ONE;
        Ok(PureState { n, amps })
    }

    pub fn zeros(n: usize) -> Self {
        Self::basis(n, 0).expect("label 0 is always valid")
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn inner(&self, other: &PureState) -> C64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn projector(&self) -> Matrix {
        Matrix::outer(&self.amps, &self.amps)
    }

    /// `u|ψ⟩`; `u` must be unitary of matching dimension.
    pub fn evolve(&self, u: &Matrix) -> Result<Self> {
        if u.dim() != self.amps.len() {
            return Err(Error::DimensionMismatch {
                expected: self.amps.len(),
                found: u.dim(),
            });
        }
        PureState::new(self.n, u.apply(&self.amps))
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix {
            n: self.n,
            m: self.projector(),
        }
    }
}

/// `(|0…0⟩ + |1…1⟩)/√2` on `n ≥ 2` qubits.
pub fn make_ghz(n: usize) -> Result<PureState> {
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    let s = core::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![ZERO; 1 << n];
    amps[0] = C64::new(s, 0.0);
    amps[(1 << n) - 1] = C64::new(s, 0.0);
    Ok(PureState { n, amps })
}

/// Equal superposition of the `n` single-excitation basis states.
pub fn make_w(n: usize) -> Result<PureState> {
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    let a = 1.0 / libm::sqrt(n as f64);
    let mut amps = vec![ZERO; 1 << n];
    for k in 0..n {
        amps[1 << k] = C64::new(a, 0.0);
    }
    Ok(PureState { n, amps })
}

/// Unit-trace Hermitian positive semidefinite matrix on `n` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    n: usize,
    m: Matrix,
}

impl DensityMatrix {
    /// Validates power-of-two dimension, Hermiticity and unit trace.
    /// Positivity is not checked here; see [`DensityMatrix::min_eigenvalue`].
    pub fn new(m: Matrix) -> Result<Self> {
        let n = m.num_qubits()?;
        let dev = m.hermitian_deviation();
        if dev > tolerance::algebraic() {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > tolerance::algebraic() {
            return Err(Error::OutOfRange {
                name: "trace",
                value: tr.re,
            });
        }
        Ok(DensityMatrix { n, m })
    }

    pub(crate) fn from_matrix_unchecked(n: usize, m: Matrix) -> Self {
        debug_assert_eq!(m.dim(), 1 << n);
        DensityMatrix { n, m }
    }

    pub fn maximally_mixed(n: usize) -> Self {
        DensityMatrix {
            n,
            m: Matrix::identity(1 << n).scale_real(1.0 / (1u64 << n) as f64),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix {
        self.m
    }

    pub(crate) fn matrix_mut(&mut self) -> &mut Matrix {
        &mut self.m
    }

    /// `Tr(ρ O)` for a Hermitian observable; the imaginary residue is dropped.
    pub fn expectation(&self, observable: &Matrix) -> Result<f64> {
        if observable.dim() != self.m.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.m.dim(),
                found: observable.dim(),
            });
        }
        Ok(observable.trace_product(&self.m).re)
    }

    /// Polarization `Tr(ρ Z_q)` of qubit `q`.
    pub fn polarization(&self, q: usize) -> Result<f64> {
        tensor::check_qubits(&[q], self.n)?;
        let shift = self.n - q;
        Ok((0..self.m.dim())
            .map(|i| {
                let sign = if (i >> shift) & 1 == 0 { 1.0 } else { -1.0 };
                sign * self.m[(i, i)].re
            })
            .sum())
    }

    /// `⟨ψ|ρ|ψ⟩`.
    pub fn fidelity_with(&self, psi: &PureState) -> Result<f64> {
        self.expectation(&psi.projector())
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        tensor::min_eigenvalue_hermitian(&self.m)
    }

    /// `u ρ u†` for a full-register unitary.
    pub fn evolve(&self, u: &Matrix) -> Result<Self> {
        if u.dim() != self.m.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.m.dim(),
                found: u.dim(),
            });
        }
        Ok(DensityMatrix {
            n: self.n,
            m: &(u * &self.m) * &u.adjoint(),
        })
    }

    /// Convex combination `w·self + (1−w)·other`.
    pub fn mix(&self, other: &DensityMatrix, w: f64) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        if !(0.0..=1.0).contains(&w) {
            return Err(Error::OutOfRange { name: "weight", value: w });
        }
        Ok(DensityMatrix {
            n: self.n,
            m: &self.m.scale_real(w) + &other.m.scale_real(1.0 - w),
        })
    }

    pub fn tensor(&self, other: &DensityMatrix) -> Self {
        DensityMatrix {
            n: self.n + other.n,
            m: tensor::kron(&self.m, &other.m),
        }
    }
}

/// `(1−ε)·1/2ⁿ + ε|ψ⟩⟨ψ|`.
#[derive(Clone, Debug, PartialEq)]
pub struct PseudopureState {
    epsilon: f64,
    core: PureState,
}

impl PseudopureState {
    pub fn new(core: PureState, epsilon: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&epsilon) {
            return Err(Error::OutOfRange {
                name: "epsilon",
                value: epsilon,
            });
        }
        Ok(PseudopureState { epsilon, core })
    }

    pub fn num_qubits(&self) -> usize {
        self.core.n
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn core(&self) -> &PureState {
        &self.core
    }

    pub fn matrix(&self) -> DensityMatrix {
        pseudopure_matrix(self)
    }
}

pub fn pseudopure_matrix(s: &PseudopureState) -> DensityMatrix {
    let n = s.core.n;
    let d = 1usize << n;
    let mixed = (1.0 - s.epsilon) / d as f64;
    let mut m = s.core.projector().scale_real(s.epsilon);
    for i in 0..d {
        m[(i, i)] += C64::new(mixed, 0.0);
    }
    DensityMatrix { n, m }
}

/// `[p|0⟩⟨0| + (1−p)|1⟩⟨1|]^{⊗n}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThermalProductState {
    n: usize,
    p: f64,
}

impl ThermalProductState {
    pub fn new(n: usize, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange { name: "p", value: p });
        }
        Ok(ThermalProductState { n, p })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn matrix(&self) -> DensityMatrix {
        thermal_matrix(self)
    }
}

pub fn thermal_matrix(t: &ThermalProductState) -> DensityMatrix {
    let d = 1usize << t.n;
    let diag: Vec<f64> = (0..d)
        .map(|label| {
            let w = label.count_ones() as i32;
            libm::pow(t.p, (t.n as i32 - w) as f64) * libm::pow(1.0 - t.p, w as f64)
        })
        .collect();
    DensityMatrix {
        n: t.n,
        m: Matrix::diagonal_from(&diag),
    }
}
