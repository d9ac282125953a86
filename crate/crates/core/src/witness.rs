//! Projector witnesses `W = c·1 − |Ψ⟩⟨Ψ|`.
//!
//! A negative expectation `Tr(Wρ) < 0` certifies that `ρ` lies outside the
//! class the constant `c` was chosen for. For the biseparable class, `c` is
//! the largest overlap of `|Ψ⟩` with a biseparable pure state, which equals
//! the largest squared Schmidt coefficient over all bipartitions.

use alloc::vec::Vec;

use crate::states::{make_ghz, make_w, DensityMatrix, PureState};
use crate::tensor::{self, Matrix, C64};
use crate::{Error, Result};

/// Class of states a witness is calibrated against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessClass {
    /// Three-qubit GHZ-class witness, `c = 3/4`.
    Ghz,
    /// Three-qubit W-class witness, `c = 1/4`.
    W,
    /// `c` is the biseparable bound of the target.
    Biseparable,
    /// User-supplied `c`.
    Generic,
}

/// Representative of a three-qubit entanglement class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Ghz,
    W,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    c: f64,
    target: PureState,
    matrix: Matrix,
    class: WitnessClass,
}

impl Witness {
    fn build(target: PureState, c: f64, class: WitnessClass) -> Self {
        let d = target.amplitudes().len();
        let mut matrix = target.projector().scale_real(-1.0);
        for i in 0..d {
            matrix[(i, i)] += C64::new(c, 0.0);
        }
        Witness {
            c,
            target,
            matrix,
            class,
        }
    }

    /// `c·1 − |Ψ⟩⟨Ψ|` with an explicit constant.
    pub fn generic(target: PureState, c: f64) -> Self {
        Self::build(target, c, WitnessClass::Generic)
    }

    /// Witness whose constant is the biseparable bound of `target`.
    pub fn biseparable(target: PureState) -> Self {
        let c = biseparable_c(&target);
        Self::build(target, c, WitnessClass::Biseparable)
    }

    /// `c·1 − V|0…0⟩⟨0…0|V†` for an entangling unitary `V`.
    pub fn from_entangler(v: &Matrix, c: f64) -> Result<Self> {
        let n = v.num_qubits()?;
        let target = PureState::zeros(n).evolve(v)?;
        Ok(Self::generic(target, c))
    }

    pub fn num_qubits(&self) -> usize {
        self.target.num_qubits()
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn target(&self) -> &PureState {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn class(&self) -> WitnessClass {
        self.class
    }

    /// `Tr(W) = c·2ⁿ − 1`.
    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// `Tr(Wρ)`.
    pub fn expectation(&self, rho: &DensityMatrix) -> Result<f64> {
        rho.expectation(&self.matrix)
    }

    /// `⟨Ψ|W|Ψ⟩ = c − 1`.
    pub fn target_expectation(&self) -> f64 {
        let v = self.matrix.apply(self.target.amplitudes());
        self.target
            .amplitudes()
            .iter()
            .zip(&v)
            .map(|(a, b)| a.conj() * b)
            .sum::<C64>()
            .re
    }

    /// Pseudopure fraction above which `(1−ε)1/2ⁿ + ε|Ψ⟩⟨Ψ|` is detected:
    /// `Tr W / (Tr W − 2ⁿ⟨Ψ|W|Ψ⟩)`.
    pub fn epsilon_limit(&self) -> Result<f64> {
        let e = self.target_expectation();
        if e >= -crate::tolerance::algebraic() {
            return Err(Error::Undetectable {
                target_expectation: e,
            });
        }
        let tr = self.trace();
        let d = (1u64 << self.num_qubits()) as f64;
        Ok(tr / (tr - d * e))
    }
}

/// The three-qubit class witnesses with their fixed constants.
pub fn class_witness(kind: ClassKind) -> Witness {
    match kind {
        ClassKind::Ghz => Witness::build(make_ghz(3).expect("n = 3"), 0.75, WitnessClass::Ghz),
        ClassKind::W => Witness::build(make_w(3).expect("n = 3"), 0.25, WitnessClass::W),
    }
}

/// Bipartitions searched by [`biseparable_c`], each given by the side that
/// contains qubit 1.
///
/// Exhaustive up to six qubits; beyond that only single-qubit cuts and
/// contiguous prefixes are searched.
pub fn bipartitions(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return Vec::new();
    }
    if n <= 6 {
        // Subsets containing qubit 1, excluding the full register.
        (0..1usize << (n - 1))
            .filter(|&mask| mask != (1 << (n - 1)) - 1)
            .map(|mask| {
                let mut side = alloc::vec![1];
                side.extend((2..=n).filter(|q| mask & (1 << (q - 2)) != 0));
                side
            })
            .collect()
    } else {
        let mut cuts: Vec<Vec<usize>> = Vec::new();
        for k in 1..n {
            cuts.push((1..=k).collect());
        }
        for q in 2..=n {
            let side: Vec<usize> = (1..=n).filter(|&x| x != q).collect();
            if !cuts.contains(&side) {
                cuts.push(side);
            }
        }
        cuts
    }
}

/// Largest squared Schmidt coefficient of `psi` over [`bipartitions`].
pub fn biseparable_c(psi: &PureState) -> f64 {
    let n = psi.num_qubits();
    if n < 2 {
        return 1.0;
    }
    bipartitions(n)
        .iter()
        .map(|side| {
            tensor::max_schmidt_sq(psi.amplitudes(), side)
                .expect("PureState is normalized and the cut is valid")
        })
        .fold(0.0, f64::max)
}

/// Smallest eigenvalue of the partial transpose of `rho` on `cut`;
/// negative means entangled across the cut.
pub fn ppt_min_eig(rho: &DensityMatrix, cut: &[usize]) -> Result<f64> {
    let pt = tensor::partial_transpose(rho.matrix(), cut)?;
    tensor::min_eigenvalue_hermitian(&pt)
}
