use alloc::vec;
use alloc::vec::Vec;

use super::{Circuit, Control, Gate};
use crate::sed::vprime2;
use crate::tensor::gates;
use crate::{Error, Result};

fn require_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    Ok(())
}

/// One Hadamard on qubit 1 followed by CNOTs fanning out from qubit 1.
pub fn ghz_entangler(n: usize) -> Result<Circuit> {
    require_two(n)?;
    let mut gates = vec![Gate::h(1)];
    gates.extend((2..=n).map(|k| Gate::cnot(1, k)));
    Circuit::from_gates(n, gates)
}

/// Cascade preparing the W state from `|0…0⟩`.
///
/// `X` on qubit 1, then for each `k` a controlled `R_y` moves all but
/// `1/(n−k+1)` of the excitation weight from qubit `k` to qubit `k + 1`
/// and a CNOT clears qubit `k` on that branch.
pub fn w_entangler(n: usize) -> Result<Circuit> {
    require_two(n)?;
    let mut gates = vec![Gate::x(1)];
    for k in 1..n {
        let keep = 1.0 / libm::sqrt((n - k + 1) as f64);
        let theta = 2.0 * libm::acos(keep);
        gates.push(Gate::opaque(gates::controlled(&gates::ry(theta)), vec![k, k + 1])?);
        gates.push(Gate::cnot(k + 1, k));
    }
    Circuit::from_gates(n, gates)
}

/// Circuit for `V′ₙ†`.
///
/// Level `m` acts on qubits `n−m+1..=n`: the block-diagonal step is a
/// zero-controlled C^{m−1}H plus one H on qubit `n`, then a SWAP of the
/// level's first qubit with qubit `n`, then level `m − 1`. Level 2 is the
/// fixed two-qubit seed, daggered.
pub fn vprime_dagger_circuit(n: usize) -> Result<Circuit> {
    require_two(n)?;
    let mut c = Circuit::new(n);
    for m in (3..=n).rev() {
        let first = n - m + 1;
        let controls: Vec<Control> = (first..n).map(Control::zero).collect();
        c.push(Gate::multi_h(controls, n)?)?;
        c.push(Gate::h(n))?;
        c.push(Gate::swap(first, n))?;
    }
    c.push(Gate::opaque(vprime2().vprime.adjoint(), vec![n - 1, n])?)?;
    Ok(c)
}
