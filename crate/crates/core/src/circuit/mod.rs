//! Gate-level circuits over 1-based qubit indices.
//!
//! Gate order is temporal order: the unitary of a circuit is the product of
//! its gate matrices with later gates on the left.

mod builders;
mod decompose;

use alloc::vec::Vec;

use crate::states::DensityMatrix;
use crate::tensor::{self, gates, Matrix};
use crate::{tolerance, Error, Result};

pub use builders::{ghz_entangler, vprime_dagger_circuit, w_entangler};
pub use decompose::{expand_multicontrolled, gate_count_g, loglog_exponent, sqrt_unitary_2x2, toffoli_network};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GateKind {
    H,
    X,
    Cnot,
    Swap,
    /// Multi-controlled NOT.
    MultiNot,
    /// Multi-controlled Hadamard.
    MultiH,
    /// Arbitrary unitary given by its matrix.
    Opaque,
}

impl GateKind {
    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Cnot => "CNOT",
            GateKind::Swap => "SWAP",
            GateKind::MultiNot => "CNNOT",
            GateKind::MultiH => "CNH",
            GateKind::Opaque => "OPAQUE",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "H" => GateKind::H,
            "X" => GateKind::X,
            "CNOT" => GateKind::Cnot,
            "SWAP" => GateKind::Swap,
            "CNNOT" => GateKind::MultiNot,
            "CNH" => GateKind::MultiH,
            "OPAQUE" => GateKind::Opaque,
            _ => return None,
        })
    }
}

/// A control qubit; `polarity = true` fires on `|1⟩`, `false` on `|0⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Control {
    pub qubit: usize,
    pub polarity: bool,
}

impl Control {
    pub fn one(qubit: usize) -> Self {
        Control { qubit, polarity: true }
    }

    pub fn zero(qubit: usize) -> Self {
        Control { qubit, polarity: false }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Gate {
    kind: GateKind,
    targets: Vec<usize>,
    controls: Vec<Control>,
    payload: Option<Matrix>,
}

impl Gate {
    pub fn new(kind: GateKind, targets: Vec<usize>, controls: Vec<Control>, payload: Option<Matrix>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidGate(alloc::format!("{}: {msg}", kind.name())));
        let (nt, nc) = (targets.len(), controls.len());
        match kind {
            GateKind::H | GateKind::X if nt != 1 || nc != 0 => return bad("expects one target, no controls"),
            GateKind::Cnot if nt != 1 || nc != 1 => return bad("expects one target and one control"),
            GateKind::Swap if nt != 2 || nc != 0 => return bad("expects two targets, no controls"),
            GateKind::MultiNot | GateKind::MultiH if nt != 1 || nc == 0 => {
                return bad("expects one target and at least one control")
            }
            GateKind::Opaque => {
                if nc != 0 || nt == 0 {
                    return bad("expects at least one target, no controls");
                }
                let Some(m) = &payload else {
                    return bad("missing payload");
                };
                if m.dim() != 1 << nt {
                    return bad("payload dimension does not match target count");
                }
                let dev = m.unitarity_deviation();
                if dev > tolerance::algebraic() {
                    return Err(Error::NotUnitary { deviation: dev });
                }
            }
            _ => {}
        }
        if kind != GateKind::Opaque && payload.is_some() {
            return bad("payload only allowed on OPAQUE");
        }
        let mut all: Vec<usize> = targets.clone();
        all.extend(controls.iter().map(|c| c.qubit));
        for (i, q) in all.iter().enumerate() {
            if *q == 0 {
                return bad("qubit indices start at 1");
            }
            if all[..i].contains(q) {
                return Err(Error::DuplicateQubit(*q));
            }
        }
        Ok(Gate {
            kind,
            targets,
            controls,
            payload,
        })
    }

    pub fn h(q: usize) -> Self {
        Gate::new(GateKind::H, alloc::vec![q], Vec::new(), None).expect("valid H")
    }

    pub fn x(q: usize) -> Self {
        Gate::new(GateKind::X, alloc::vec![q], Vec::new(), None).expect("valid X")
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::new(GateKind::Cnot, alloc::vec![target], alloc::vec![Control::one(control)], None)
            .expect("distinct control and target")
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate::new(GateKind::Swap, alloc::vec![a, b], Vec::new(), None).expect("distinct qubits")
    }

    pub fn multi_not(controls: Vec<Control>, target: usize) -> Result<Self> {
        Gate::new(GateKind::MultiNot, alloc::vec![target], controls, None)
    }

    pub fn multi_h(controls: Vec<Control>, target: usize) -> Result<Self> {
        Gate::new(GateKind::MultiH, alloc::vec![target], controls, None)
    }

    pub fn opaque(payload: Matrix, targets: Vec<usize>) -> Result<Self> {
        Gate::new(GateKind::Opaque, targets, Vec::new(), Some(payload))
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn controls(&self) -> &[Control] {
        &self.controls
    }

    pub fn payload(&self) -> Option<&Matrix> {
        self.payload.as_ref()
    }

    /// Controls first, then targets.
    pub fn qubits(&self) -> Vec<usize> {
        self.controls.iter().map(|c| c.qubit).chain(self.targets.iter().copied()).collect()
    }

    /// Number of qubits the gate touches.
    pub fn arity(&self) -> usize {
        self.targets.len() + self.controls.len()
    }

    /// The operator applied to the targets when the controls fire.
    pub fn base_matrix(&self) -> Matrix {
        match self.kind {
            GateKind::H | GateKind::MultiH => gates::hadamard(),
            GateKind::X | GateKind::Cnot | GateKind::MultiNot => gates::pauli_x(),
            GateKind::Swap => gates::swap(),
            GateKind::Opaque => self.payload.clone().expect("validated"),
        }
    }

    pub fn control_pairs(&self) -> Vec<(usize, bool)> {
        self.controls.iter().map(|c| (c.qubit, c.polarity)).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut g = self.clone();
        if let Some(p) = &self.payload {
            g.payload = Some(p.adjoint());
        }
        g
    }

    /// Full-register matrix on `n` qubits.
    pub fn matrix(&self, n: usize) -> Result<Matrix> {
        tensor::embed_controlled(&self.base_matrix(), &self.targets, &self.control_pairs(), n)
    }

    /// `m ← G m G†`.
    pub fn conjugate(&self, m: &mut Matrix) -> Result<()> {
        tensor::conjugate(m, &self.base_matrix(), &self.targets, &self.control_pairs())
    }

    pub fn apply_left(&self, m: &mut Matrix) -> Result<()> {
        tensor::apply_left(m, &self.base_matrix(), &self.targets, &self.control_pairs())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Circuit { n, gates: Vec::new() }
    }

    pub fn from_gates(n: usize, gates: Vec<Gate>) -> Result<Self> {
        let mut c = Circuit::new(n);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, g: Gate) -> Result<()> {
        tensor::check_qubits(&g.qubits(), self.n)?;
        self.gates.push(g);
        Ok(())
    }

    /// Appends `other` after `self`.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        self.gates.extend(other.gates.iter().cloned());
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }

    /// Largest gate arity in the circuit.
    pub fn max_arity(&self) -> usize {
        self.gates.iter().map(Gate::arity).max().unwrap_or(0)
    }

    /// Reversed and daggered.
    pub fn adjoint(&self) -> Self {
        Circuit {
            n: self.n,
            gates: self.gates.iter().rev().map(Gate::adjoint).collect(),
        }
    }

    /// Conjugates a density matrix by every gate in order.
    pub fn evolve(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                expected: 1 << self.n,
                found: rho.dim(),
            });
        }
        let mut out = rho.clone();
        for g in &self.gates {
            g.conjugate(out.matrix_mut())?;
        }
        Ok(out)
    }
}

/// Product of embedded gate matrices, later gates on the left.
pub fn circuit_unitary(c: &Circuit) -> Result<Matrix> {
    let mut u = Matrix::identity(1 << c.n);
    for g in &c.gates {
        g.apply_left(&mut u)?;
    }
    Ok(u)
}

impl core::fmt::Display for Gate {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.kind.name())?;
        for t in &self.targets {
            write!(f, " {t}")?;
        }
        if !self.controls.is_empty() {
            write!(f, " |")?;
            for c in &self.controls {
                write!(f, " {}({})", c.qubit, u8::from(c.polarity))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::Sampler;
    use crate::states::make_ghz;
    use crate::tensor::C64;
    use alloc::vec;

    #[test]
    fn empty_circuit_is_identity() {
        assert_eq!(circuit_unitary(&Circuit::new(3)).unwrap(), Matrix::identity(8));
    }

    #[test]
    fn bell_circuit() {
        let c = Circuit::from_gates(2, vec![Gate::h(1), Gate::cnot(1, 2)]).unwrap();
        let u = circuit_unitary(&c).unwrap();
        let out = u.apply(&[C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)]);
        let want = make_ghz(2).unwrap();
        for (a, b) in out.iter().zip(want.amplitudes()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn composition_order() {
        let mut s = Sampler::new(4);
        let a = Circuit::from_gates(3, vec![Gate::opaque(s.unitary(4), vec![1, 3]).unwrap(), Gate::h(2)]).unwrap();
        let b = Circuit::from_gates(3, vec![Gate::cnot(2, 1), Gate::opaque(s.unitary(2), vec![3]).unwrap()]).unwrap();
        let mut ab = a.clone();
        ab.append(&b).unwrap();
        let lhs = circuit_unitary(&ab).unwrap();
        let rhs = &circuit_unitary(&b).unwrap() * &circuit_unitary(&a).unwrap();
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        let inv = circuit_unitary(&ab.adjoint()).unwrap();
        assert!((&inv * &lhs).max_abs_diff(&Matrix::identity(8)) < 1e-12);
    }

    #[test]
    fn gate_validation() {
        assert!(Gate::multi_not(vec![], 1).is_err());
        assert!(Gate::multi_h(vec![Control::zero(1)], 1).is_err());
        assert!(Gate::opaque(Matrix::identity(2), vec![1, 2]).is_err());
        assert!(Gate::opaque(Matrix::identity(2).scale_real(2.0), vec![1]).is_err());
        assert!(Gate::new(GateKind::H, vec![1], vec![], Some(Matrix::identity(2))).is_err());
        let mut c = Circuit::new(2);
        assert!(c.push(Gate::h(3)).is_err());
        assert!(c.push(Gate::swap(1, 2)).is_ok());
    }

    #[test]
    fn zero_controlled_gate_matrix() {
        let g = Gate::multi_not(vec![Control::zero(1), Control::zero(2)], 3).unwrap();
        let m = g.matrix(3).unwrap();
        // Flips the target only on |00x⟩.
        assert_eq!(m[(1, 0)], C64::new(1.0, 0.0));
        assert_eq!(m[(2, 2)], C64::new(1.0, 0.0));
        assert_eq!(m[(7, 7)], C64::new(1.0, 0.0));
        assert_eq!(alloc::format!("{g}"), "CNNOT 3 | 1(0) 2(0)");
        for k in [GateKind::H, GateKind::X, GateKind::Cnot, GateKind::Swap, GateKind::MultiNot, GateKind::MultiH, GateKind::Opaque] {
            assert_eq!(GateKind::from_name(k.name()), Some(k));
        }
    }
}
