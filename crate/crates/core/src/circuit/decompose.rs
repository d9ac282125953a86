//! Expansion of multi-controlled gates into one- and two-qubit gates.
//!
//! Multi-controlled `U` follows the ancilla-free quadratic construction:
//! `C^k U` becomes two controlled-`V` halves (`V² = U`) around a pair of
//! `C^{k−1}NOT`s onto the last control, plus a recursive `C^{k−1}V`. Each
//! `C^{k−1}NOT` borrows idle qubits (left in their original state): with
//! `k − 3` or more it is a linear Toffoli ladder, with at least one it is
//! split into two half-size ladders through the borrowed qubit. Toffolis use
//! the exact 15-gate Clifford+T network.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_4;

use super::{vprime_dagger_circuit, Circuit, Gate, GateKind};
use crate::tensor::{gates, Matrix};
use crate::Result;

/// Principal square root of a 2×2 unitary.
pub fn sqrt_unitary_2x2(u: &Matrix) -> Matrix {
    assert_eq!(u.dim(), 2);
    let (a, b, c, d) = (u[(0, 0)], u[(0, 1)], u[(1, 0)], u[(1, 1)]);
    let half_tr = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (half_tr * half_tr - det).sqrt();
    let (l1, l2) = (half_tr + disc, half_tr - disc);
    if (l1 - l2).norm() < 1e-14 {
        return Matrix::identity(2).scale(l1.sqrt());
    }
    let v = if b.norm() > c.norm() {
        [b, l1 - a]
    } else {
        [l1 - d, c]
    };
    let nrm = libm::sqrt(v[0].norm_sqr() + v[1].norm_sqr());
    let v = [v[0] / nrm, v[1] / nrm];
    let p1 = Matrix::outer(&v, &v);
    let p2 = &Matrix::identity(2) - &p1;
    &p1.scale(l1.sqrt()) + &p2.scale(l2.sqrt())
}

fn t_gate(q: usize) -> Gate {
    Gate::opaque(gates::phase(FRAC_PI_4), vec![q]).expect("unitary")
}

fn tdg_gate(q: usize) -> Gate {
    Gate::opaque(gates::phase(-FRAC_PI_4), vec![q]).expect("unitary")
}

/// Exact Toffoli with controls `a`, `b` and target `t`: 6 CNOTs, 2 H, 7 T/T†.
pub fn toffoli_network(a: usize, b: usize, t: usize) -> Vec<Gate> {
    vec![
        Gate::h(t),
        Gate::cnot(b, t),
        tdg_gate(t),
        Gate::cnot(a, t),
        t_gate(t),
        Gate::cnot(b, t),
        tdg_gate(t),
        Gate::cnot(a, t),
        t_gate(b),
        t_gate(t),
        Gate::h(t),
        Gate::cnot(a, b),
        t_gate(a),
        tdg_gate(b),
        Gate::cnot(a, b),
    ]
}

struct Expander {
    n: usize,
    out: Vec<Gate>,
}

impl Expander {
    fn idle(&self, busy: &[usize]) -> Vec<usize> {
        (1..=self.n).filter(|q| !busy.contains(q)).collect()
    }

    fn controlled(&mut self, u: &Matrix, c: usize, t: usize) {
        self.out
            .push(Gate::opaque(gates::controlled(u), vec![c, t]).expect("controlled unitary"));
    }

    fn gate(&mut self, g: Gate) {
        let busy = g.qubits();
        let zero: Vec<usize> = g.controls().iter().filter(|c| !c.polarity).map(|c| c.qubit).collect();
        let needs_expansion = !zero.is_empty()
            || matches!(g.kind(), GateKind::MultiNot | GateKind::MultiH);
        if !needs_expansion {
            self.out.push(g);
            return;
        }
        for &q in &zero {
            self.out.push(Gate::x(q));
        }
        let ctrls: Vec<usize> = g.controls().iter().map(|c| c.qubit).collect();
        let t = g.targets()[0];
        let idle = self.idle(&busy);
        match g.kind() {
            GateKind::Cnot | GateKind::MultiNot => self.mcx(&ctrls, t, &idle),
            GateKind::MultiH => self.mcu(&ctrls, t, &gates::hadamard(), &idle),
            _ => unreachable!("only controlled kinds carry controls"),
        }
        for &q in &zero {
            self.out.push(Gate::x(q));
        }
    }

    /// `C^k NOT` with borrowed qubits `dirty`.
    fn mcx(&mut self, ctrls: &[usize], t: usize, dirty: &[usize]) {
        let k = ctrls.len();
        match k {
            1 => self.out.push(Gate::cnot(ctrls[0], t)),
            2 => self.out.extend(toffoli_network(ctrls[0], ctrls[1], t)),
            _ if dirty.len() >= k - 2 => self.ladder(ctrls, t, &dirty[..k - 2]),
            _ if !dirty.is_empty() => {
                let b = dirty[0];
                let m = k.div_ceil(2);
                let (left, right) = ctrls.split_at(m);
                let mut first_dirty: Vec<usize> = right.to_vec();
                first_dirty.push(t);
                first_dirty.extend_from_slice(&dirty[1..]);
                let mut second_ctrls: Vec<usize> = right.to_vec();
                second_ctrls.push(b);
                let mut second_dirty: Vec<usize> = left.to_vec();
                second_dirty.extend_from_slice(&dirty[1..]);
                for _ in 0..2 {
                    self.mcx(left, b, &first_dirty);
                    self.mcx(&second_ctrls, t, &second_dirty);
                }
            }
            _ => self.mcu(ctrls, t, &gates::pauli_x(), &[]),
        }
    }

    /// Toffoli ladder over `k − 2` borrowed qubits (`4(k − 2)` Toffolis).
    fn ladder(&mut self, c: &[usize], t: usize, a: &[usize]) {
        let m = c.len();
        // Step i (2 ≤ i ≤ m) toggles the i-th link of the chain.
        let step = |i: usize| -> (usize, usize, usize) {
            match i {
                2 => (c[0], c[1], a[0]),
                _ if i == m => (c[m - 1], a[m - 3], t),
                _ => (c[i - 1], a[i - 3], a[i - 2]),
            }
        };
        let mut order: Vec<usize> = Vec::with_capacity(4 * (m - 2));
        order.extend((2..=m).rev());
        order.extend(3..=m);
        order.extend((2..m).rev());
        order.extend(3..m);
        for i in order {
            let (x, y, z) = step(i);
            self.out.extend(toffoli_network(x, y, z));
        }
    }

    /// `C^k U` for a 2×2 unitary `u`.
    fn mcu(&mut self, ctrls: &[usize], t: usize, u: &Matrix, idle: &[usize]) {
        let k = ctrls.len();
        if k == 1 {
            self.controlled(u, ctrls[0], t);
            return;
        }
        let v = sqrt_unitary_2x2(u);
        let last = ctrls[k - 1];
        let rest = &ctrls[..k - 1];
        let mut borrow: Vec<usize> = idle.to_vec();
        borrow.push(t);
        self.controlled(&v, last, t);
        self.mcx(rest, last, &borrow);
        self.controlled(&v.adjoint(), last, t);
        self.mcx(rest, last, &borrow);
        let mut idle_next: Vec<usize> = idle.to_vec();
        idle_next.push(last);
        self.mcu(rest, t, &v, &idle_next);
    }
}

/// Replaces every multi-controlled or zero-controlled gate by one- and
/// two-qubit gates. The unitary is preserved up to global phase.
pub fn expand_multicontrolled(c: &Circuit) -> Circuit {
    let mut ex = Expander {
        n: c.num_qubits(),
        out: Vec::new(),
    };
    for g in c.gates() {
        ex.gate(g.clone());
    }
    Circuit::from_gates(c.num_qubits(), ex.out).expect("expansion stays on the register")
}

/// Number of one- and two-qubit gates composing `V′ₙ†`.
pub fn gate_count_g(n: usize) -> Result<usize> {
    Ok(expand_multicontrolled(&vprime_dagger_circuit(n)?).len())
}

/// Least-squares slope of `ln G` against `ln n`.
pub fn loglog_exponent(points: &[(usize, usize)]) -> f64 {
    let m = points.len() as f64;
    let xy: Vec<(f64, f64)> = points
        .iter()
        .map(|&(n, g)| (libm::log(n as f64), libm::log(g as f64)))
        .collect();
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / m;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / m;
    let num: f64 = xy.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xy.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    num / den
}
