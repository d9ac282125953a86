//! Seeded sampling of states, unitaries and probability vectors.

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::states::{DensityMatrix, PureState};
use crate::tensor::{kron_vec, Matrix, C64};

/// Deterministic sampler. Independent streams for parallel work are derived
/// from `(seed, stream)`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `(0, 1]`.
    fn uniform_open(&mut self) -> f64 {
        1.0 - self.uniform()
    }

    /// Standard normal via Box–Muller.
    pub fn normal(&mut self) -> f64 {
        let r = libm::sqrt(-2.0 * libm::log(self.uniform_open()));
        r * libm::cos(2.0 * PI * self.uniform())
    }

    /// Complex normal with unit variance split evenly between parts.
    pub fn complex_normal(&mut self) -> C64 {
        C64::new(self.normal(), self.normal()) * core::f64::consts::FRAC_1_SQRT_2
    }

    /// Flat Dirichlet sample (uniform on the probability simplex).
    pub fn dirichlet(&mut self, len: usize) -> Vec<f64> {
        let mut w: Vec<f64> = (0..len).map(|_| -libm::log(self.uniform_open())).collect();
        let s: f64 = w.iter().sum();
        w.iter_mut().for_each(|x| *x /= s);
        w
    }

    /// Haar-random pure state of dimension `dim`.
    pub fn haar_vector(&mut self, dim: usize) -> Vec<C64> {
        let mut v: Vec<C64> = (0..dim).map(|_| self.complex_normal()).collect();
        let s = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
        v.iter_mut().for_each(|z| *z /= s);
        v
    }

    pub fn haar_state(&mut self, n: usize) -> PureState {
        PureState::from_amplitudes_unchecked(n, self.haar_vector(1 << n))
    }

    /// Tensor product of independent Haar-random single-qubit states.
    pub fn product_state(&mut self, n: usize) -> PureState {
        let mut amps = alloc::vec![C64::new(1.0, 0.0)];
        for _ in 0..n {
            let q = self.haar_vector(2);
            amps = kron_vec(&amps, &q);
        }
        PureState::from_amplitudes_unchecked(n, amps)
    }

    /// Convex mixture of up to `max_terms` random product states with
    /// Dirichlet weights; separable by construction.
    pub fn separable_mixture(&mut self, n: usize, max_terms: usize) -> DensityMatrix {
        let terms = 1 + (self.rng.next_u32() as usize) % max_terms.max(1);
        let weights = self.dirichlet(terms);
        let mut m = Matrix::zeros(1 << n);
        for w in weights {
            let p = self.product_state(n).projector();
            m = &m + &p.scale_real(w);
        }
        DensityMatrix::from_matrix_unchecked(n, m)
    }

    /// Haar-random unitary: Gram–Schmidt on a complex Ginibre matrix.
    pub fn unitary(&mut self, dim: usize) -> Matrix {
        let mut cols: Vec<Vec<C64>> = Vec::with_capacity(dim);
        while cols.len() < dim {
            let mut v: Vec<C64> = (0..dim).map(|_| self.complex_normal()).collect();
            for u in &cols {
                let proj: C64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                v.iter_mut().zip(u).for_each(|(x, y)| *x -= proj * y);
            }
            let s = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
            if s < 1e-8 {
                continue;
            }
            v.iter_mut().for_each(|z| *z /= s);
            cols.push(v);
        }
        Matrix::from_fn(dim, |i, j| cols[j][i])
    }

    /// Random full-rank density matrix `G G† / Tr(G G†)`.
    pub fn density_matrix(&mut self, n: usize) -> DensityMatrix {
        let d = 1 << n;
        let g = Matrix::from_fn(d, |_, _| self.complex_normal());
        let m = &g * &g.adjoint();
        let t = m.trace().re;
        DensityMatrix::from_matrix_unchecked(n, m.scale_real(1.0 / t))
    }

    /// Diagonal density matrix with flat-Dirichlet populations.
    pub fn diagonal_density(&mut self, n: usize) -> DensityMatrix {
        let p = self.dirichlet(1 << n);
        DensityMatrix::from_matrix_unchecked(n, Matrix::diagonal_from(&p))
    }
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler::new(0)
    }
}
