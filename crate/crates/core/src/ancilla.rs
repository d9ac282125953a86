//! Witness readout through one uninitialized ancilla qubit.
//!
//! The ancilla starts in `p|0⟩⟨0| + (1−p)|1⟩⟨1|` and is placed as qubit 1 of
//! the joint register, the `n` register qubits following it. After the
//! disentangler `V†` on the register, a C^nNOT that fires when the register
//! is `|0…0⟩` flips the ancilla. Its output polarization satisfies
//!
//! ```text
//! Tr(ρ_a Z) = (1 − 2p)(2P̃ − 1),   P̃ = ⟨0…0|V†ρV|0…0⟩,
//! ```
//!
//! so `Tr(ρ W) = c − 1/2 + Tr(ρ_a Z) / (2(2p − 1))` with no assumption on the
//! form of `V†ρV`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::states::DensityMatrix;
use crate::tensor::{self, gates, Matrix};
use crate::{tolerance, Error, Result};

/// Readout is refused when `|2p − 1|` is at or below this bound.
pub const POLARIZATION_GUARD: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AncillaConfig {
    p: f64,
    n: usize,
}

impl AncillaConfig {
    pub fn new(p: f64, n: usize) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange { name: "p", value: p });
        }
        if (2.0 * p - 1.0).abs() <= POLARIZATION_GUARD {
            return Err(Error::IllConditioned { p });
        }
        if n < 1 {
            return Err(Error::TooFewQubits { n, min: 1 });
        }
        Ok(AncillaConfig { p, n })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Ancilla input state.
    pub fn ancilla_state(&self) -> DensityMatrix {
        DensityMatrix::from_matrix_unchecked(1, Matrix::diagonal_from(&[self.p, 1.0 - self.p]))
    }

    fn register_qubits(&self) -> Vec<usize> {
        (2..=self.n + 1).collect()
    }

    fn zero_controls(&self) -> Vec<(usize, bool)> {
        self.register_qubits().into_iter().map(|q| (q, false)).collect()
    }

    fn check(&self, rho_in: &DensityMatrix, v: &Matrix) -> Result<()> {
        if rho_in.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                expected: 1 << self.n,
                found: rho_in.dim(),
            });
        }
        if v.dim() != rho_in.dim() {
            return Err(Error::DimensionMismatch {
                expected: rho_in.dim(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Applies `V†` on the register then the zero-controlled C^nNOT.
    fn forward(&self, joint: &mut Matrix, v: &Matrix) -> Result<()> {
        tensor::conjugate(joint, &v.adjoint(), &self.register_qubits(), &[])?;
        tensor::conjugate(joint, &gates::pauli_x(), &[1], &self.zero_controls())
    }

    /// Inverse of [`Self::forward`].
    fn backward(&self, joint: &mut Matrix, v: &Matrix) -> Result<()> {
        tensor::conjugate(joint, &gates::pauli_x(), &[1], &self.zero_controls())?;
        tensor::conjugate(joint, v, &self.register_qubits(), &[])
    }

    /// Witness value from the ancilla output polarization.
    pub fn recover(&self, c: f64, ancilla_z: f64) -> f64 {
        c - 0.5 + ancilla_z / (2.0 * (2.0 * self.p - 1.0))
    }
}

fn ancilla_polarization(joint: &Matrix) -> Result<f64> {
    let reduced = tensor::partial_trace(joint, &[1])?;
    Ok(reduced[(0, 0)].re - reduced[(1, 1)].re)
}

/// `Tr(ρ_in (c·1 − V|0…0⟩⟨0…0|V†))` recovered from the ancilla polarization.
pub fn ancilla_readout(rho_in: &DensityMatrix, v: &Matrix, c: f64, cfg: &AncillaConfig) -> Result<f64> {
    cfg.check(rho_in, v)?;
    let mut joint = cfg.ancilla_state().tensor(rho_in).into_matrix();
    cfg.forward(&mut joint, v)?;
    Ok(cfg.recover(c, ancilla_polarization(&joint)?))
}

#[derive(Clone, Debug, PartialEq)]
pub struct AncillaIdentities {
    /// `⟨0…0|V†ρV|0…0⟩` computed directly.
    pub p_zero: f64,
    /// Simulated `Tr(ρ_a Z)` after the C^nNOT.
    pub ancilla_z: f64,
    /// `(1 − 2p)(2P̃ − 1)`.
    pub predicted_z: f64,
    /// `1/2 − Tr(ρ_a Z) / (2(2p − 1))`.
    pub inverted_p_zero: f64,
    /// `Σ_k P̃(k)`.
    pub population_sum: f64,
}

/// Computes both sides of the polarization identities and fails if either
/// breaks by more than the algebraic tolerance.
pub fn intermediate_identities(rho_in: &DensityMatrix, v: &Matrix, cfg: &AncillaConfig) -> Result<AncillaIdentities> {
    cfg.check(rho_in, v)?;
    let rotated = rho_in.evolve(&v.adjoint())?;
    let p_zero = rotated.matrix()[(0, 0)].re;
    let population_sum = rotated.matrix().trace().re;
    let mut joint = cfg.ancilla_state().tensor(rho_in).into_matrix();
    cfg.forward(&mut joint, v)?;
    let ancilla_z = ancilla_polarization(&joint)?;
    let p = cfg.p;
    let ids = AncillaIdentities {
        p_zero,
        ancilla_z,
        predicted_z: (1.0 - 2.0 * p) * (2.0 * p_zero - 1.0),
        inverted_p_zero: 0.5 - ancilla_z / (2.0 * (2.0 * p - 1.0)),
        population_sum,
    };
    let tol = tolerance::algebraic();
    let dz = (ids.predicted_z - ids.ancilla_z).abs();
    if dz > tol {
        return Err(Error::IdentityViolation {
            what: "Tr(rho_a Z) = (1-2p)(2P-1)",
            deviation: dz,
        });
    }
    let dp = (ids.inverted_p_zero - ids.p_zero).abs();
    if dp > tol {
        return Err(Error::IdentityViolation {
            what: "P = 1/2 - Tr(rho_a Z)/(2(2p-1))",
            deviation: dp,
        });
    }
    Ok(ids)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConcatStage {
    pub entangler: Matrix,
    pub c: f64,
    pub label: String,
}

/// Ordered witnesses tested on one ancilla.
#[derive(Clone, Debug, PartialEq)]
pub struct ConcatSpec {
    stages: Vec<ConcatStage>,
}

impl ConcatSpec {
    pub fn new(stages: Vec<ConcatStage>) -> Result<Self> {
        if let Some(first) = stages.first() {
            let d = first.entangler.dim();
            for s in &stages {
                if s.entangler.dim() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: s.entangler.dim(),
                    });
                }
                let dev = s.entangler.unitarity_deviation();
                if dev > tolerance::algebraic() {
                    return Err(Error::NotUnitary { deviation: dev });
                }
            }
        }
        Ok(ConcatSpec { stages })
    }

    pub fn stages(&self) -> &[ConcatStage] {
        &self.stages
    }
}

/// Runs every stage on the same joint state: disentangle, C^nNOT, read the
/// ancilla without disturbing it, then undo C^nNOT and the disentangler.
pub fn run_concatenated(rho_in: &DensityMatrix, spec: &ConcatSpec, cfg: &AncillaConfig) -> Result<Vec<f64>> {
    let mut joint = cfg.ancilla_state().tensor(rho_in).into_matrix();
    let mut values = Vec::with_capacity(spec.stages.len());
    for stage in &spec.stages {
        cfg.check(rho_in, &stage.entangler)?;
        cfg.forward(&mut joint, &stage.entangler)?;
        values.push(cfg.recover(stage.c, ancilla_polarization(&joint)?));
        cfg.backward(&mut joint, &stage.entangler)?;
    }
    Ok(values)
}

/// Joint state after a full concatenated run; equals the input when
/// un-computation is exact.
pub fn concatenated_final_state(rho_in: &DensityMatrix, spec: &ConcatSpec, cfg: &AncillaConfig) -> Result<Matrix> {
    let mut joint = cfg.ancilla_state().tensor(rho_in).into_matrix();
    for stage in &spec.stages {
        cfg.check(rho_in, &stage.entangler)?;
        cfg.forward(&mut joint, &stage.entangler)?;
        cfg.backward(&mut joint, &stage.entangler)?;
    }
    Ok(joint)
}
