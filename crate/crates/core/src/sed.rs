//! Single-experiment-detectable (SED) form of a projector witness.
//!
//! A witness `c·1 − V|0…0⟩⟨0…0|V†` is rewritten as
//!
//! ```text
//! W = a₀ + U† (Σ_k a_k Z_k) U,   U = V′† V†,   a₀ = c + b,
//! ```
//!
//! where `Z_k` is `I^{⊗(n−k)} ⊗ Z ⊗ I^{⊗(k−1)}` (a `Z` on qubit `n − k + 1`)
//! and `V′ₙ` maps `b + Σ a_k Z_k` to a matrix whose diagonal is
//! `(−1, 0, …, 0)`. When `V†ρV` is diagonal the off-diagonal part does not
//! contribute and `Tr(ρW)` equals the conventional expectation, while every
//! term of `W` is read out as a simultaneous single-qubit polarization.
//!
//! `V′ₙ` is built inductively from a fixed 4×4 seed:
//! `V′_{n+1} = U_bd · U_p · (I ⊗ V′ₙ)`, with `U_p` the SWAP of the first and
//! last qubit and `U_bd = diag(I, H, …, H)`; the coefficients of the lower
//! level are halved and the new qubit gets `a_{n+1} = −1/2`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::random::Sampler;
use crate::states::{DensityMatrix, PureState};
use crate::tensor::{self, gates, Matrix, C64, ONE, ZERO};
use crate::witness::{biseparable_c, Witness};
use crate::{tolerance, Error, Result};

/// `V′ₙ` with its coefficients `b` and `a₁…aₙ` (`a[k − 1]` is `a_k`).
#[derive(Clone, Debug, PartialEq)]
pub struct VPrime {
    pub vprime: Matrix,
    pub b: f64,
    pub a: Vec<f64>,
}

impl VPrime {
    pub fn num_qubits(&self) -> usize {
        self.a.len()
    }

    /// `b·1 + Σ_k a_k Z_k`, diagonal.
    pub fn weighted_z_sum(&self) -> Matrix {
        z_sum(self.b, &self.a)
    }

    /// `V′ (b + Σ a_k Z_k) V′†`.
    pub fn conjugated(&self) -> Matrix {
        &(&self.vprime * &self.weighted_z_sum()) * &self.vprime.adjoint()
    }
}

/// Qubit carrying `Z_k` in an `n`-qubit register.
pub fn z_slot(n: usize, k: usize) -> usize {
    n - k + 1
}

/// `b·1 + Σ_k a_k Z_k` as a diagonal matrix.
pub fn z_sum(b: f64, a: &[f64]) -> Matrix {
    let n = a.len();
    let diag: Vec<f64> = (0..1usize << n)
        .map(|label| {
            b + a
                .iter()
                .enumerate()
                .map(|(i, &ak)| {
                    let shift = n - z_slot(n, i + 1);
                    if (label >> shift) & 1 == 0 {
                        ak
                    } else {
                        -ak
                    }
                })
                .sum::<f64>()
        })
        .collect();
    Matrix::diagonal_from(&diag)
}

/// The two-qubit seed: `b = −1/4`, `a₁ = a₂ = 3/8`.
pub fn vprime2() -> VPrime {
    let s = 1.0 / libm::sqrt(3.0);
    let w = C64::from_polar(s, 2.0 * PI / 3.0);
    let wc = w.conj();
    let r = C64::new(s, 0.0);
    let vprime = Matrix::from_row_major(vec![
        ZERO, ZERO, ZERO, ONE, //
        r, r, r, ZERO, //
        w, wc, r, ZERO, //
        wc, w, r, ZERO,
    ])
    .expect("4×4");
    VPrime {
        vprime,
        b: -0.25,
        a: vec![0.375, 0.375],
    }
}

/// SWAP of qubit 1 and qubit `n_total` on an `n_total`-qubit register.
pub fn permutation_up(n_total: usize) -> Matrix {
    assert!(n_total >= 2);
    tensor::embed_gate(&gates::swap(), &[1, n_total], n_total).expect("distinct in-range qubits")
}

/// `diag(I, H, …, H)` in 2×2 blocks over the last qubit.
pub fn blockdiag_ubd(n_total: usize) -> Matrix {
    assert!(n_total >= 2);
    let d = 1usize << n_total;
    let h = gates::hadamard();
    let mut m = Matrix::zeros(d);
    m[(0, 0)] = ONE;
    m[(1, 1)] = ONE;
    for blk in 1..d / 2 {
        for i in 0..2 {
            for j in 0..2 {
                m[(2 * blk + i, 2 * blk + j)] = h[(i, j)];
            }
        }
    }
    m
}

/// One induction step `V′ₙ → V′_{n+1}`.
pub fn extend(prev: &VPrime) -> VPrime {
    let n1 = prev.num_qubits() + 1;
    let lifted = tensor::kron(&Matrix::identity(2), &prev.vprime);
    let vprime = &(&blockdiag_ubd(n1) * &permutation_up(n1)) * &lifted;
    let mut a: Vec<f64> = prev.a.iter().map(|x| x / 2.0).collect();
    a.push(-0.5);
    VPrime {
        vprime,
        b: prev.b / 2.0,
        a,
    }
}

/// `V′ₙ` for `n ≥ 2`.
pub fn build_vprime(n: usize) -> Result<VPrime> {
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    let mut v = vprime2();
    for _ in 2..n {
        v = extend(&v);
    }
    Ok(v)
}

/// Closed-form coefficients `(b, a)` of level `n`:
/// `b = −2^{−n}`, `a₁ = a₂ = 3·2^{−(n+1)}`, `a_k = −2^{k−n−1}` for `k ≥ 3`.
pub fn closed_form_coefficients(n: usize) -> (f64, Vec<f64>) {
    let b = -libm::ldexp(1.0, -(n as i32));
    let a = (1..=n)
        .map(|k| {
            if k <= 2 {
                3.0 * libm::ldexp(1.0, -(n as i32 + 1))
            } else {
                -libm::ldexp(1.0, k as i32 - n as i32 - 1)
            }
        })
        .collect();
    (b, a)
}

/// A witness in SED form.
#[derive(Clone, Debug, PartialEq)]
pub struct SedDecomposition {
    core: VPrime,
    c: f64,
}

impl SedDecomposition {
    pub fn new(core: VPrime, c: f64) -> Self {
        SedDecomposition { core, c }
    }

    pub fn for_witness(w: &Witness) -> Result<Self> {
        Ok(Self::new(build_vprime(w.num_qubits())?, w.c()))
    }

    pub fn num_qubits(&self) -> usize {
        self.core.num_qubits()
    }

    pub fn vprime(&self) -> &Matrix {
        &self.core.vprime
    }

    pub fn core(&self) -> &VPrime {
        &self.core
    }

    pub fn b(&self) -> f64 {
        self.core.b
    }

    pub fn a(&self) -> &[f64] {
        &self.core.a
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn a0(&self) -> f64 {
        self.c + self.core.b
    }

    /// `a₀ + Σ_k a_k z_k` from polarizations `z[k − 1] = Tr(UρU† Z_k)`.
    pub fn value_from_polarizations(&self, z: &[f64]) -> f64 {
        self.a0() + self.core.a.iter().zip(z).map(|(a, z)| a * z).sum::<f64>()
    }

    /// The full observable `a₀ + U†(Σ a_k Z_k)U` for entangler `v`.
    pub fn observable(&self, v: &Matrix) -> Matrix {
        let u = &self.core.vprime.adjoint() * &v.adjoint();
        let zs = z_sum(0.0, &self.core.a);
        let mut w = &(&u.adjoint() * &zs) * &u;
        for i in 0..w.dim() {
            w[(i, i)] += C64::new(self.a0(), 0.0);
        }
        w
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SedMeasurement {
    /// `z[k − 1] = Tr(UρU† Z_k)`.
    pub z: Vec<f64>,
    pub value: f64,
    /// Whether `V†ρV` was diagonal within the physics tolerance.
    pub diagonal_ok: bool,
    pub max_off_diagonal: f64,
}

/// Simulates the SED readout of `rho_in` with entangler `v`.
pub fn sed_measure(rho_in: &DensityMatrix, v: &Matrix, dec: &SedDecomposition) -> Result<SedMeasurement> {
    let n = dec.num_qubits();
    if rho_in.num_qubits() != n {
        return Err(Error::DimensionMismatch {
            expected: 1 << n,
            found: rho_in.dim(),
        });
    }
    if v.dim() != rho_in.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho_in.dim(),
            found: v.dim(),
        });
    }
    let rho_out = rho_in.evolve(&v.adjoint())?;
    let max_off = rho_out.matrix().max_off_diagonal();
    let measured = rho_out.evolve(&dec.vprime().adjoint())?;
    let z = (1..=n)
        .map(|k| measured.polarization(z_slot(n, k)))
        .collect::<Result<Vec<f64>>>()?;
    Ok(SedMeasurement {
        value: dec.value_from_polarizations(&z),
        z,
        diagonal_ok: max_off <= tolerance::physics(),
        max_off_diagonal: max_off,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct EqualityReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub max_deviation: f64,
    pub passed: bool,
}

/// Checks `Tr(ρ W_sed) = Tr(ρ W_conv)` on `trials` random inputs
/// `ρ = V ρ_out V†` with `ρ_out` diagonal (flat Dirichlet) and `V` Haar.
pub fn verify_equality(n: usize, trials: usize, seed: u64) -> Result<EqualityReport> {
    let vp = build_vprime(n)?;
    let mut max_dev: f64 = 0.0;
    for t in 0..trials {
        let mut s = Sampler::with_stream(seed, t as u64);
        let v = s.unitary(1 << n);
        let rho_out = s.diagonal_density(n);
        let rho_in = rho_out.evolve(&v)?;
        let target = PureState::zeros(n).evolve(&v)?;
        let c = biseparable_c(&target);
        let conv = Witness::generic(target, c).expectation(&rho_in)?;
        let dec = SedDecomposition::new(vp.clone(), c);
        let sed = sed_measure(&rho_in, &v, &dec)?;
        max_dev = max_dev.max((sed.value - conv).abs());
    }
    Ok(EqualityReport {
        n,
        trials,
        seed,
        max_deviation: max_dev,
        passed: max_dev <= tolerance::physics(),
    })
}

/// Largest deviation of the conjugated diagonal from `(−1, 0, …, 0)`.
pub fn diagonal_deviation(v: &VPrime) -> f64 {
    v.conjugated()
        .diagonal()
        .iter()
        .enumerate()
        .map(|(i, z)| {
            let want = if i == 0 { -1.0 } else { 0.0 };
            (z - C64::new(want, 0.0)).norm()
        })
        .fold(0.0, f64::max)
}
