//! Multipartite entanglement witnesses for ensemble quantum computing.
//!
//! The crate builds conventional projector witnesses `c·1 − |Ψ⟩⟨Ψ|`, rewrites
//! them as a constant plus a unitary conjugation of single-qubit `Z`
//! observables so that every readout is a simultaneous polarization
//! measurement, and simulates both that scheme and the single-ancilla scheme
//! at the density-matrix level. Gate-level circuits, multi-controlled gate
//! expansion, gate counting and a probabilistic gate-noise model are included
//! for scaling and robustness studies.
//!
//! Qubits are numbered from 1, with qubit 1 the leftmost tensor factor (the
//! most significant bit of a computational-basis label).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod ancilla;
pub mod circuit;
mod error;
pub mod noise;
pub mod random;
pub mod sed;
pub mod states;
pub mod tensor;
pub mod tolerance;
pub mod witness;

pub use error::{Error, Result};
pub use states::{DensityMatrix, PseudopureState, PureState, ThermalProductState};
pub use tensor::{Matrix, C64};
pub use witness::Witness;
