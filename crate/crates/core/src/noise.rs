//! Probabilistic gate noise and `(p, h)` sweeps.
//!
//! Each gate succeeds with probability `p_s = h^k`, `k` being the number of
//! qubits it touches. On failure the touched qubits are replaced by the
//! maximally mixed state.

use alloc::vec::Vec;

use crate::circuit::{circuit_unitary, expand_multicontrolled, ghz_entangler, vprime_dagger_circuit, w_entangler, Circuit, Gate};
use crate::sed::{build_vprime, z_slot, SedDecomposition};
use crate::states::{DensityMatrix, ThermalProductState};
use crate::tensor::{self, Matrix, C64};
use crate::witness::{biseparable_c, class_witness, ClassKind, Witness};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseModel {
    h: f64,
}

impl NoiseModel {
    pub fn new(h: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&h) {
            return Err(Error::OutOfRange { name: "h", value: h });
        }
        Ok(NoiseModel { h })
    }

    pub fn noiseless() -> Self {
        NoiseModel { h: 1.0 }
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// `h` for one-qubit gates, `h²` for two-qubit gates, `h^k` in general.
    pub fn success_probability(&self, g: &Gate) -> f64 {
        libm::pow(self.h, g.arity() as f64)
    }
}

/// Replaces the qubits in `touched` by `𝟙/2^k`, leaving the rest of the
/// register in its reduced state.
fn depolarize(m: &Matrix, touched: &[usize], n: usize) -> Matrix {
    let mask = touched.iter().fold(0usize, |acc, &q| acc | (1 << (n - q)));
    let k = touched.len();
    let subs: Vec<usize> = (0..1usize << k)
        .map(|x| {
            touched
                .iter()
                .enumerate()
                .filter(|(j, _)| (x >> j) & 1 == 1)
                .fold(0, |acc, (_, &q)| acc | (1 << (n - q)))
        })
        .collect();
    let norm = 1.0 / (1u64 << k) as f64;
    Matrix::from_fn(m.dim(), |i, j| {
        if (i & mask) != (j & mask) {
            return C64::new(0.0, 0.0);
        }
        let (bi, bj) = (i & !mask, j & !mask);
        subs.iter().map(|&s| m[(bi | s, bj | s)]).sum::<C64>() * norm
    })
}

/// `p_s·UρU† + (1 − p_s)·(Tr_t ρ) ⊗ 𝟙/2^|t|` with `t` the qubits `g` touches.
pub fn apply_noisy_gate(rho: &DensityMatrix, g: &Gate, model: &NoiseModel) -> Result<DensityMatrix> {
    let n = rho.num_qubits();
    tensor::check_qubits(&g.qubits(), n)?;
    let ps = model.success_probability(g);
    let mut ideal = rho.clone();
    g.conjugate(ideal.matrix_mut())?;
    if ps >= 1.0 {
        return Ok(ideal);
    }
    let failed = depolarize(rho.matrix(), &g.qubits(), n);
    let m = &ideal.matrix().scale_real(ps) + &failed.scale_real(1.0 - ps);
    Ok(DensityMatrix::from_matrix_unchecked(n, m))
}

pub fn simulate_noisy(c: &Circuit, rho0: &DensityMatrix, model: &NoiseModel) -> Result<DensityMatrix> {
    if rho0.num_qubits() != c.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: 1 << c.num_qubits(),
            found: rho0.dim(),
        });
    }
    let mut rho = rho0.clone();
    for g in c.gates() {
        rho = apply_noisy_gate(&rho, g, model)?;
    }
    Ok(rho)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRecord {
    pub p: f64,
    pub h: f64,
    pub value_conv: f64,
    pub value_sed: f64,
    pub value_ancilla: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub n: usize,
    pub grid_p: Vec<f64>,
    pub grid_h: Vec<f64>,
    pub kind: ClassKind,
    /// Skip the entangler so the register stays in the thermal product state.
    pub separable: bool,
    pub seed: u64,
}

/// `min, min + step, …` up to `max` inclusive.
pub fn grid(min: f64, max: f64, step: f64) -> Result<Vec<f64>> {
    if step.is_nan() || step <= 0.0 {
        return Err(Error::OutOfRange { name: "step", value: step });
    }
    for (name, v) in [("min", min), ("max", max)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::OutOfRange { name, value: v });
        }
    }
    if max < min {
        return Err(Error::OutOfRange { name: "max", value: max });
    }
    let count = libm::round((max - min) / step) as usize + 1;
    // Snapped to 12 decimals so that 0.5 + 9·0.05 prints as 0.95.
    Ok((0..count)
        .map(|i| (libm::round((min + i as f64 * step) * 1e12) / 1e12).min(max))
        .collect())
}

/// Entangling circuit and conventional witness used by [`sweep`].
///
/// At three qubits the class constants apply; otherwise `c` is the
/// biseparable bound of the prepared state.
pub fn sweep_witness(kind: ClassKind, n: usize) -> Result<(Circuit, Witness)> {
    let circ = match kind {
        ClassKind::Ghz => ghz_entangler(n)?,
        ClassKind::W => w_entangler(n)?,
    };
    let v = circuit_unitary(&circ)?;
    let target = crate::states::PureState::zeros(n).evolve(&v)?;
    let c = if n == 3 {
        class_witness(kind).c()
    } else {
        biseparable_c(&target)
    };
    Ok((circ, Witness::generic(target, c)))
}

/// Evaluates both witnesses at every `(p, h)`, p-major.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    for &x in cfg.grid_p.iter().chain(&cfg.grid_h) {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::OutOfRange { name: "grid", value: x });
        }
    }
    let n = cfg.n;
    let (entangler, witness) = sweep_witness(cfg.kind, n)?;
    let dec = SedDecomposition::new(build_vprime(n)?, witness.c());
    let mut measure = entangler.adjoint();
    measure.append(&vprime_dagger_circuit(n)?)?;
    let measure = expand_multicontrolled(&measure);
    let prep = if cfg.separable { Circuit::new(n) } else { entangler };

    let mut out = Vec::with_capacity(cfg.grid_p.len() * cfg.grid_h.len());
    for &p in &cfg.grid_p {
        let rho0 = ThermalProductState::new(n, p)?.matrix();
        for &h in &cfg.grid_h {
            let model = NoiseModel::new(h)?;
            let rho = simulate_noisy(&prep, &rho0, &model)?;
            let value_conv = witness.expectation(&rho)?;
            let measured = simulate_noisy(&measure, &rho, &model)?;
            let z = (1..=n)
                .map(|k| measured.polarization(z_slot(n, k)))
                .collect::<Result<Vec<f64>>>()?;
            out.push(SweepRecord {
                p,
                h,
                value_conv,
                value_sed: dec.value_from_polarizations(&z),
                value_ancilla: None,
            });
        }
    }
    Ok(out)
}

/// Smallest grid `h` from which `value` stays negative up to the largest
/// `h` on the row `p`. `None` if the row ends non-negative.
pub fn zero_crossing(records: &[SweepRecord], p: f64, value: impl Fn(&SweepRecord) -> f64) -> Option<f64> {
    let mut row: Vec<&SweepRecord> = records.iter().filter(|r| (r.p - p).abs() < 1e-12).collect();
    row.sort_by(|a, b| a.h.total_cmp(&b.h));
    let mut crossing = None;
    for r in row.iter().rev() {
        if value(r) < 0.0 {
            crossing = Some(r.h);
        } else {
            break;
        }
    }
    crossing
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Control;
    use crate::random::Sampler;
    use crate::states::make_ghz;

    #[test]
    fn success_probability_by_arity() {
        let m = NoiseModel::new(0.9).unwrap();
        assert!((m.success_probability(&Gate::h(1)) - 0.9).abs() < 1e-15);
        assert!((m.success_probability(&Gate::cnot(1, 2)) - 0.81).abs() < 1e-15);
        let g = Gate::multi_not(alloc::vec![Control::one(1), Control::one(2)], 3).unwrap();
        assert!((m.success_probability(&g) - 0.729).abs() < 1e-15);
        assert!(NoiseModel::new(1.5).is_err());
    }

    #[test]
    fn full_failure_mixes_touched_qubit() {
        let mut s = Sampler::new(4);
        let a = s.density_matrix(1);
        let b = s.density_matrix(2);
        let rho = a.tensor(&b);
        let out = apply_noisy_gate(&rho, &Gate::h(1), &NoiseModel::new(0.0).unwrap()).unwrap();
        let want = DensityMatrix::maximally_mixed(1).tensor(&b);
        assert!(out.matrix().max_abs_diff(want.matrix()) < 1e-12);
        // Failure on the last qubit of a three-qubit register.
        let c = s.density_matrix(1);
        let rho = b.tensor(&c);
        let out = apply_noisy_gate(&rho, &Gate::x(3), &NoiseModel::new(0.0).unwrap()).unwrap();
        let want = b.tensor(&DensityMatrix::maximally_mixed(1));
        assert!(out.matrix().max_abs_diff(want.matrix()) < 1e-12);
    }

    #[test]
    fn noisy_gate_preserves_trace() {
        let mut s = Sampler::new(5);
        let rho = s.density_matrix(3);
        let m = NoiseModel::new(libm::sqrt(0.7)).unwrap();
        let out = apply_noisy_gate(&rho, &Gate::cnot(3, 1), &m).unwrap();
        assert!((out.matrix().trace().re - 1.0).abs() < 1e-12);
        assert!(out.matrix().is_hermitian(1e-12));
    }

    #[test]
    fn noiseless_matches_unitary() {
        let c = ghz_entangler(3).unwrap();
        let mut s = Sampler::new(6);
        let rho = s.density_matrix(3);
        let a = simulate_noisy(&c, &rho, &NoiseModel::noiseless()).unwrap();
        let b = rho.evolve(&circuit_unitary(&c).unwrap()).unwrap();
        assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-12);
        let e = simulate_noisy(&Circuit::new(3), &rho, &NoiseModel::new(0.3).unwrap()).unwrap();
        assert_eq!(&e, &rho);
    }

    #[test]
    fn noisy_ghz_fidelity_is_partial() {
        let c = ghz_entangler(3).unwrap();
        let rho = crate::states::PureState::zeros(3).density();
        let out = simulate_noisy(&c, &rho, &NoiseModel::new(0.9).unwrap()).unwrap();
        let f = out.fidelity_with(&make_ghz(3).unwrap()).unwrap();
        assert!(f > 0.0 && f < 1.0, "{f}");
        assert!(out.min_eigenvalue().unwrap() > -1e-10);
    }

    #[test]
    fn grid_arithmetic() {
        assert_eq!(grid(0.5, 1.0, 0.05).unwrap().len(), 11);
        assert_eq!(grid(0.0, 1.0, 0.01).unwrap().len(), 101);
        assert_eq!(grid(0.3, 0.3, 0.1).unwrap(), alloc::vec![0.3]);
        assert_eq!(grid(0.5, 1.0, 0.05).unwrap()[9], 0.95);
        assert!(grid(0.0, 1.0, 0.0).is_err());
        assert!(grid(0.0, 1.5, 0.1).is_err());
    }

    fn small_sweep(separable: bool) -> Vec<SweepRecord> {
        sweep(&SweepConfig {
            n: 3,
            grid_p: grid(0.5, 1.0, 0.25).unwrap(),
            grid_h: grid(0.5, 1.0, 0.25).unwrap(),
            kind: ClassKind::Ghz,
            separable,
            seed: 0,
        })
        .unwrap()
    }

    #[test]
    fn sweep_corner_values() {
        let recs = small_sweep(false);
        assert_eq!(recs.len(), 9);
        assert_eq!((recs[0].p, recs[0].h), (0.5, 0.5));
        assert_eq!((recs[1].p, recs[1].h), (0.5, 0.75));
        for r in &recs {
            if r.h == 1.0 {
                assert!((r.value_sed - r.value_conv).abs() < 1e-10, "{r:?}");
            }
            if r.p == 0.5 {
                assert!((r.value_conv - (0.75 - 0.125)).abs() < 1e-12);
            }
        }
        let last = recs.last().unwrap();
        assert!((last.value_conv + 0.25).abs() < 1e-10);
    }

    #[test]
    fn zero_crossing_picks_tail() {
        let r = |h: f64, v: f64| SweepRecord {
            p: 1.0,
            h,
            value_conv: v,
            value_sed: v,
            value_ancilla: None,
        };
        let recs = [r(0.5, -0.1), r(0.6, 0.1), r(0.7, -0.1), r(0.8, -0.2)];
        assert_eq!(zero_crossing(&recs, 1.0, |r| r.value_conv), Some(0.7));
        assert_eq!(zero_crossing(&recs[..2], 1.0, |r| r.value_conv), None);
    }
}
