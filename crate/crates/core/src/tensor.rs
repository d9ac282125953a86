//! Dense complex linear algebra over multi-qubit Hilbert spaces.
//!
//! Qubit positions are 1-based and counted from the left of the tensor
//! product: qubit `q` of an `n`-qubit register is bit `n - q` of a basis
//! label, so qubit 1 is the most significant bit.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::tolerance;
use crate::{Error, Result};

pub type C64 = Complex<f64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// Square complex matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<C64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    /// Builds a matrix from row-major entries; `entries.len()` must be a
    /// perfect square.
    pub fn from_row_major(entries: Vec<C64>) -> Result<Self> {
        let dim = isqrt(entries.len());
        if dim * dim != entries.len() {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(Matrix { dim, data: entries })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let dim = rows.len();
        Self::from_fn(dim, |i, j| C64::new(rows[i][j], 0.0))
    }

    pub fn diagonal_from(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        m
    }

    /// `|v⟩⟨w|`.
    pub fn outer(v: &[C64], w: &[C64]) -> Self {
        assert_eq!(v.len(), w.len());
        Self::from_fn(v.len(), |i, j| v[i] * w[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of qubits when the dimension is a power of two.
    pub fn num_qubits(&self) -> Result<usize> {
        qubits_for_dim(self.dim)
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Self {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &Matrix) -> C64 {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut acc = ZERO;
        for i in 0..d {
            for j in 0..d {
                acc += self.data[i * d + j] * other.data[j * d + i];
            }
        }
        acc
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest off-diagonal magnitude.
    pub fn max_off_diagonal(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    worst = worst.max(self[(i, j)].norm());
                }
            }
        }
        worst
    }

    /// Largest entrywise `|M[i][j] − conj(M[j][i])|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// `‖M M† − I‖_max`.
    pub fn unitarity_deviation(&self) -> f64 {
        let prod = self * &self.adjoint();
        prod.max_abs_diff(&Matrix::identity(self.dim))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Distance to `other` ignoring a global phase: `‖A B† − e^{iφ} I‖_max`
    /// where `e^{iφ}` is the phase of the `(0, 0)` entry of `A B†`.
    pub fn phase_insensitive_distance(&self, other: &Matrix) -> f64 {
        let prod = self * &other.adjoint();
        let z = prod[(0, 0)];
        let phase = if z.norm() > 0.0 { z / z.norm() } else { ONE };
        prod.max_abs_diff(&Matrix::identity(self.dim).scale(phase))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix product dimension mismatch");
        let d = self.dim;
        let mut out = Matrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == ZERO {
                    continue;
                }
                let rrow = &rhs.data[k * d..(k + 1) * d];
                let orow = &mut out.data[i * d..(i + 1) * d];
                for (o, b) in orow.iter_mut().zip(rrow) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

fn isqrt(x: usize) -> usize {
    let mut r = libm::sqrt(x as f64) as usize;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

pub fn qubits_for_dim(dim: usize) -> Result<usize> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(dim));
    }
    Ok(dim.trailing_zeros() as usize)
}

/// Standard single- and two-qubit gates.
pub mod gates {
    use super::{Matrix, C64};
    use core::f64::consts::FRAC_1_SQRT_2;

    pub fn pauli_x() -> Matrix {
        Matrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
    }

    pub fn pauli_z() -> Matrix {
        Matrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]])
    }

    pub fn hadamard() -> Matrix {
        let s = FRAC_1_SQRT_2;
        Matrix::from_real_rows(&[&[s, s], &[s, -s]])
    }

    pub fn swap() -> Matrix {
        Matrix::from_real_rows(&[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
        ])
    }

    pub fn cnot() -> Matrix {
        Matrix::from_real_rows(&[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
            &[0.0, 0.0, 1.0, 0.0],
        ])
    }

    /// `diag(1, e^{iθ})`.
    pub fn phase(theta: f64) -> Matrix {
        let mut m = Matrix::identity(2);
        m[(1, 1)] = C64::from_polar(1.0, theta);
        m
    }

    /// `exp(−iθY/2)`.
    pub fn ry(theta: f64) -> Matrix {
        let (s, c) = (libm::sin(theta / 2.0), libm::cos(theta / 2.0));
        Matrix::from_real_rows(&[&[c, -s], &[s, c]])
    }

    /// Two-qubit `|0⟩⟨0| ⊗ I + |1⟩⟨1| ⊗ u`, control on the left.
    pub fn controlled(u: &Matrix) -> Matrix {
        assert_eq!(u.dim(), 2);
        let mut m = Matrix::identity(4);
        for i in 0..2 {
            for j in 0..2 {
                m[(2 + i, 2 + j)] = u[(i, j)];
            }
        }
        m
    }
}

/// Kronecker product with `a` as the left (more significant) factor.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (da, db) = (a.dim(), b.dim());
    Matrix::from_fn(da * db, |i, j| a[(i / db, j / db)] * b[(i % db, j % db)])
}

/// Kronecker product of vectors, `a` leftmost.
pub fn kron_vec(a: &[C64], b: &[C64]) -> Vec<C64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Validates 1-based qubit positions: in range and pairwise distinct.
pub fn check_qubits(qubits: &[usize], n: usize) -> Result<()> {
    for (i, &q) in qubits.iter().enumerate() {
        if q == 0 || q > n {
            return Err(Error::QubitOutOfRange { qubit: q, n });
        }
        if qubits[..i].contains(&q) {
            return Err(Error::DuplicateQubit(q));
        }
    }
    Ok(())
}

#[inline]
fn bit_of(n: usize, q: usize) -> usize {
    1 << (n - q)
}

/// Precomputed index layout for a (possibly controlled) local operator.
struct Layout {
    /// Offset of each local basis state, local index `a` ↦ global bits.
    offsets: Vec<usize>,
    target_mask: usize,
    control_mask: usize,
    control_value: usize,
}

impl Layout {
    fn new(n: usize, targets: &[usize], controls: &[(usize, bool)]) -> Self {
        let k = targets.len();
        let offsets = (0..1usize << k)
            .map(|a| {
                targets.iter().enumerate().fold(0, |acc, (t, &q)| {
                    if a & (1 << (k - 1 - t)) != 0 {
                        acc | bit_of(n, q)
                    } else {
                        acc
                    }
                })
            })
            .collect();
        let target_mask = targets.iter().fold(0, |acc, &q| acc | bit_of(n, q));
        let (control_mask, control_value) =
            controls.iter().fold((0, 0), |(m, v), &(q, pol)| {
                let b = bit_of(n, q);
                (m | b, if pol { v | b } else { v })
            });
        Layout {
            offsets,
            target_mask,
            control_mask,
            control_value,
        }
    }

    fn bases(&self, dim: usize) -> impl Iterator<Item = usize> + '_ {
        (0..dim).filter(move |&i| {
            i & self.target_mask == 0 && i & self.control_mask == self.control_value
        })
    }
}

fn check_local(m: &Matrix, op: &Matrix, targets: &[usize], controls: &[(usize, bool)]) -> Result<usize> {
    let n = m.num_qubits()?;
    if op.dim() != 1 << targets.len() {
        return Err(Error::DimensionMismatch {
            expected: 1 << targets.len(),
            found: op.dim(),
        });
    }
    let mut all: Vec<usize> = targets.to_vec();
    all.extend(controls.iter().map(|c| c.0));
    check_qubits(&all, n)?;
    Ok(n)
}

/// `m ← G m` where `G` acts as `op` on `targets` when every control qubit
/// matches its polarity (`true` fires on `|1⟩`), identity otherwise.
pub fn apply_left(m: &mut Matrix, op: &Matrix, targets: &[usize], controls: &[(usize, bool)]) -> Result<()> {
    let n = check_local(m, op, targets, controls)?;
    let layout = Layout::new(n, targets, controls);
    let d = m.dim();
    let k = op.dim();
    let mut buf = vec![ZERO; k];
    let bases: Vec<usize> = layout.bases(d).collect();
    for col in 0..d {
        for &base in &bases {
            for (a, off) in layout.offsets.iter().enumerate() {
                buf[a] = m.data[(base | off) * d + col];
            }
            for (r, off) in layout.offsets.iter().enumerate() {
                let row = op.row(r);
                m.data[(base | off) * d + col] = row.iter().zip(&buf).map(|(x, y)| x * y).sum();
            }
        }
    }
    Ok(())
}

/// `m ← m G†` with `G` as in [`apply_left`].
pub fn apply_right_adjoint(m: &mut Matrix, op: &Matrix, targets: &[usize], controls: &[(usize, bool)]) -> Result<()> {
    let n = check_local(m, op, targets, controls)?;
    let layout = Layout::new(n, targets, controls);
    let d = m.dim();
    let k = op.dim();
    let mut buf = vec![ZERO; k];
    let bases: Vec<usize> = layout.bases(d).collect();
    for row in 0..d {
        let r = &mut m.data[row * d..(row + 1) * d];
        for &base in &bases {
            for (a, off) in layout.offsets.iter().enumerate() {
                buf[a] = r[base | off];
            }
            for (b, off) in layout.offsets.iter().enumerate() {
                let grow = op.row(b);
                r[base | off] = grow.iter().zip(&buf).map(|(g, x)| g.conj() * x).sum();
            }
        }
    }
    Ok(())
}

/// `m ← G m G†`.
pub fn conjugate(m: &mut Matrix, op: &Matrix, targets: &[usize], controls: &[(usize, bool)]) -> Result<()> {
    apply_left(m, op, targets, controls)?;
    apply_right_adjoint(m, op, targets, controls)
}

/// Embeds `g` on `targets` of an `n`-qubit register; `targets[0]` is the
/// most significant index of `g`.
pub fn embed_gate(g: &Matrix, targets: &[usize], n: usize) -> Result<Matrix> {
    check_qubits(targets, n)?;
    let mut m = Matrix::identity(1 << n);
    apply_left(&mut m, g, targets, &[])?;
    Ok(m)
}

/// Embeds a controlled operator; see [`apply_left`].
pub fn embed_controlled(g: &Matrix, targets: &[usize], controls: &[(usize, bool)], n: usize) -> Result<Matrix> {
    let mut m = Matrix::identity(1 << n);
    apply_left(&mut m, g, targets, controls)?;
    Ok(m)
}

fn sorted_subset(qubits: &[usize], n: usize) -> Result<Vec<usize>> {
    check_qubits(qubits, n)?;
    let mut s = qubits.to_vec();
    s.sort_unstable();
    Ok(s)
}

/// Reduced operator on `keep`; kept qubits retain their relative order.
pub fn partial_trace(m: &Matrix, keep: &[usize]) -> Result<Matrix> {
    let n = m.num_qubits()?;
    let keep = sorted_subset(keep, n)?;
    let traced: Vec<usize> = (1..=n).filter(|q| !keep.contains(q)).collect();
    let kk = keep.len();
    let spread = |local: usize, qs: &[usize]| -> usize {
        let k = qs.len();
        qs.iter().enumerate().fold(0, |acc, (t, &q)| {
            if local & (1 << (k - 1 - t)) != 0 {
                acc | bit_of(n, q)
            } else {
                acc
            }
        })
    };
    let keep_offsets: Vec<usize> = (0..1usize << kk).map(|a| spread(a, &keep)).collect();
    let trace_offsets: Vec<usize> = (0..1usize << traced.len()).map(|a| spread(a, &traced)).collect();
    Ok(Matrix::from_fn(1 << kk, |i, j| {
        trace_offsets
            .iter()
            .map(|&t| m[(keep_offsets[i] | t, keep_offsets[j] | t)])
            .sum()
    }))
}

/// Partial transpose on `subsystem`. Involutive.
pub fn partial_transpose(m: &Matrix, subsystem: &[usize]) -> Result<Matrix> {
    let n = m.num_qubits()?;
    check_qubits(subsystem, n)?;
    let mask = subsystem.iter().fold(0, |acc, &q| acc | bit_of(n, q));
    let d = m.dim();
    let mut out = Matrix::zeros(d);
    for i in 0..d {
        for j in 0..d {
            let ii = (i & !mask) | (j & mask);
            let jj = (j & !mask) | (i & mask);
            out[(ii, jj)] = m[(i, j)];
        }
    }
    Ok(out)
}

const POWER_TOL: f64 = 1e-13;
const POWER_MAX_ITER: usize = 10_000;

/// Squared largest Schmidt coefficient of `psi` across `side | rest`.
///
/// Power iteration on the smaller Gram matrix of the reshaped amplitudes.
pub fn max_schmidt_sq(psi: &[C64], side: &[usize]) -> Result<f64> {
    let n = qubits_for_dim(psi.len())?;
    let side = sorted_subset(side, n)?;
    let norm = libm::sqrt(psi.iter().map(|z| z.norm_sqr()).sum::<f64>());
    if (norm - 1.0).abs() > tolerance::algebraic() {
        return Err(Error::NotNormalized { norm });
    }
    if side.is_empty() || side.len() == n {
        return Ok(1.0);
    }
    let rest: Vec<usize> = (1..=n).filter(|q| !side.contains(q)).collect();
    let (rows_q, cols_q) = if side.len() <= rest.len() {
        (&side, &rest)
    } else {
        (&rest, &side)
    };
    let spread = |local: usize, qs: &[usize]| -> usize {
        let k = qs.len();
        qs.iter().enumerate().fold(0, |acc, (t, &q)| {
            if local & (1 << (k - 1 - t)) != 0 {
                acc | bit_of(n, q)
            } else {
                acc
            }
        })
    };
    let r = 1usize << rows_q.len();
    let c = 1usize << cols_q.len();
    let row_off: Vec<usize> = (0..r).map(|a| spread(a, rows_q)).collect();
    let col_off: Vec<usize> = (0..c).map(|b| spread(b, cols_q)).collect();
    // Gram matrix M M† of the r × c reshaping.
    let gram = Matrix::from_fn(r, |i, j| {
        col_off
            .iter()
            .map(|&cb| psi[row_off[i] | cb] * psi[row_off[j] | cb].conj())
            .sum()
    });
    Ok(power_iteration(&gram))
}

/// Largest eigenvalue of a Hermitian positive semidefinite matrix.
fn power_iteration(g: &Matrix) -> f64 {
    let d = g.dim();
    // Deterministic start with irrational phases so it is not orthogonal to
    // the dominant eigenspace for structured inputs.
    let mut x: Vec<C64> = (0..d)
        .map(|i| {
            let t = (i as f64 + 1.0) * 0.618_033_988_749_895;
            C64::from_polar(1.0 + 0.5 * libm::sin(3.0 * t), 2.0 * core::f64::consts::PI * t)
        })
        .collect();
    let normalize = |v: &mut Vec<C64>| {
        let s = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if s > 0.0 {
            v.iter_mut().for_each(|z| *z /= s);
        }
        s
    };
    normalize(&mut x);
    let mut lambda = 0.0;
    for _ in 0..POWER_MAX_ITER {
        let mut y = g.apply(&x);
        let rq: f64 = x.iter().zip(&y).map(|(a, b)| (a.conj() * b).re).sum();
        if normalize(&mut y) == 0.0 {
            return 0.0;
        }
        x = y;
        if (rq - lambda).abs() < POWER_TOL {
            lambda = rq;
            break;
        }
        lambda = rq;
    }
    lambda
}

const JACOBI_OFF_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix in ascending order (cyclic Jacobi).
pub fn hermitian_eigenvalues(m: &Matrix) -> Result<Vec<f64>> {
    let dev = m.hermitian_deviation();
    if dev > tolerance::algebraic() * m.max_abs().max(1.0) {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let d = m.dim();
    let mut a = m.clone();
    for i in 0..d {
        a[(i, i)] = C64::new(a[(i, i)].re, 0.0);
    }
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = libm::sqrt(
            (0..d)
                .flat_map(|i| (0..d).map(move |j| (i, j)))
                .filter(|(i, j)| i != j)
                .map(|(i, j)| a[(i, j)].norm_sqr())
                .sum::<f64>(),
        );
        if off < JACOBI_OFF_TOL {
            break;
        }
        for p in 0..d {
            for q in p + 1..d {
                jacobi_rotate(&mut a, p, q);
            }
        }
    }
    let mut ev: Vec<f64> = (0..d).map(|i| a[(i, i)].re).collect();
    ev.sort_by(|x, y| x.total_cmp(y));
    Ok(ev)
}

/// Zeroes `a[p][q]` with a complex Givens rotation `a ← J† a J`.
fn jacobi_rotate(a: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag < 1e-300 {
        return;
    }
    let phase = apq / mag;
    let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + libm::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;
    // J = diag(1, conj(phase)) · [[c, s], [−s, c]] on the (p, q) plane.
    let jpp = C64::new(c, 0.0);
    let jpq = C64::new(s, 0.0);
    let jqp = phase.conj() * -s;
    let jqq = phase.conj() * c;
    let d = a.dim();
    for k in 0..d {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..d {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(app - t * mag, 0.0);
    a[(q, q)] = C64::new(aqq + t * mag, 0.0);
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue_hermitian(m: &Matrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?[0])
}

#[cfg(test)]
mod tests {
    use super::gates::*;
    use super::*;
    use core::f64::consts::FRAC_1_SQRT_2;

    fn diag_c(m: &Matrix) -> Vec<f64> {
        m.diagonal().iter().map(|z| z.re).collect()
    }

    #[test]
    fn kron_of_identities_and_z() {
        let i2 = Matrix::identity(2);
        assert_eq!(kron(&i2, &i2), Matrix::identity(4));
        assert_eq!(kron(&pauli_z(), &i2), Matrix::diagonal_from(&[1.0, 1.0, -1.0, -1.0]));
        let hh = kron(&hadamard(), &hadamard());
        assert!((&hh * &hh).max_abs_diff(&Matrix::identity(4)) < 1e-14);
    }

    #[test]
    fn embed_gate_places_rightmost_and_single() {
        for n in 1..5 {
            let mut expect = Matrix::identity(1);
            for _ in 1..n {
                expect = kron(&expect, &Matrix::identity(2));
            }
            expect = kron(&expect, &pauli_z());
            assert_eq!(embed_gate(&pauli_z(), &[n], n).unwrap(), expect);
        }
        assert_eq!(embed_gate(&pauli_x(), &[1], 1).unwrap(), pauli_x());
    }

    #[test]
    fn embed_swap_matches_transposition_list() {
        // The permutation exchanging the first and last qubit of n+1 qubits
        // is the product of the transpositions (2, 2^n+1), (4, 2^n+3), …,
        // (2^n, 2^{n+1}−1) on 1-based labels.
        for n in 1..6 {
            let d = 1usize << (n + 1);
            let mut perm: Vec<usize> = (0..d).collect();
            let mut l = 2;
            while l <= (1 << n) {
                let (x, y) = (l - 1, (1 << n) + l - 2);
                perm.swap(x, y);
                l += 2;
            }
            let direct = Matrix::from_fn(d, |i, j| if perm[j] == i { ONE } else { ZERO });
            let embedded = embed_gate(&swap(), &[1, n + 1], n + 1).unwrap();
            assert_eq!(embedded, direct, "n = {n}");
        }
    }

    #[test]
    fn embed_rejects_bad_targets() {
        assert_eq!(
            embed_gate(&swap(), &[1, 1], 2),
            Err(Error::DuplicateQubit(1))
        );
        assert_eq!(
            embed_gate(&pauli_x(), &[3], 2),
            Err(Error::QubitOutOfRange { qubit: 3, n: 2 })
        );
        assert!(embed_gate(&pauli_x(), &[0], 2).is_err());
        assert!(embed_gate(&swap(), &[1], 2).is_err());
    }

    #[test]
    fn embed_two_qubit_gate_respects_target_order() {
        // CNOT with control on qubit 3 and target on qubit 1.
        let g = embed_gate(&cnot(), &[3, 1], 3).unwrap();
        // |001⟩ (index 1) → |101⟩ (index 5).
        assert_eq!(g[(5, 1)], ONE);
        assert_eq!(g[(0, 0)], ONE);
        let c = embed_controlled(&pauli_x(), &[1], &[(3, true)], 3).unwrap();
        assert_eq!(g, c);
    }

    #[test]
    fn partial_trace_examples() {
        let ra = Matrix::from_fn(2, |i, j| C64::new([[0.7, 0.1], [0.1, 0.3]][i][j], 0.0));
        let rb = Matrix::diagonal_from(&[0.25, 0.75]);
        let prod = kron(&ra, &rb);
        assert!(partial_trace(&prod, &[1]).unwrap().max_abs_diff(&ra) < 1e-14);
        assert!(partial_trace(&prod, &[2]).unwrap().max_abs_diff(&rb) < 1e-14);

        let s = FRAC_1_SQRT_2;
        let mut ghz = vec![ZERO; 8];
        ghz[0] = C64::new(s, 0.0);
        ghz[7] = C64::new(s, 0.0);
        let rho = Matrix::outer(&ghz, &ghz);
        let red = partial_trace(&rho, &[1]).unwrap();
        assert!(red.max_abs_diff(&Matrix::diagonal_from(&[0.5, 0.5])) < 1e-15);

        let mixed = Matrix::identity(4).scale_real(0.25);
        let red = partial_trace(&mixed, &[2]).unwrap();
        assert!(red.max_abs_diff(&Matrix::identity(2).scale_real(0.5)) < 1e-15);
        assert!(partial_trace(&mixed, &[3]).is_err());
    }

    #[test]
    fn partial_trace_keeps_relative_order() {
        let a = Matrix::diagonal_from(&[0.9, 0.1]);
        let b = Matrix::diagonal_from(&[0.6, 0.4]);
        let c = Matrix::diagonal_from(&[0.2, 0.8]);
        let abc = kron(&kron(&a, &b), &c);
        let ac = partial_trace(&abc, &[3, 1]).unwrap();
        assert!(ac.max_abs_diff(&kron(&a, &c)) < 1e-15);
    }

    #[test]
    fn partial_transpose_examples() {
        let s = FRAC_1_SQRT_2;
        let bell = [C64::new(s, 0.0), ZERO, ZERO, C64::new(s, 0.0)];
        let rho = Matrix::outer(&bell, &bell);
        let pt = partial_transpose(&rho, &[1]).unwrap();
        assert_eq!(partial_transpose(&pt, &[1]).unwrap(), rho);
        // ρ^{T_A} = SWAP / 2 with spectrum {1/2, 1/2, 1/2, −1/2}.
        assert!(pt.max_abs_diff(&swap().scale_real(0.5)) < 1e-15);
        assert!((min_eigenvalue_hermitian(&pt).unwrap() + 0.5).abs() < 1e-12);
        let mixed = Matrix::identity(4).scale_real(0.25);
        assert_eq!(partial_transpose(&mixed, &[1]).unwrap(), mixed);
    }

    #[test]
    fn schmidt_examples() {
        let s = FRAC_1_SQRT_2;
        let prod = [ONE, ZERO, ZERO, ZERO];
        assert!((max_schmidt_sq(&prod, &[1]).unwrap() - 1.0).abs() < 1e-12);

        let mut ghz = vec![ZERO; 8];
        ghz[0] = C64::new(s, 0.0);
        ghz[7] = C64::new(s, 0.0);
        for side in [&[1][..], &[2], &[3], &[1, 2], &[2, 3]] {
            assert!((max_schmidt_sq(&ghz, side).unwrap() - 0.5).abs() < 1e-12);
        }

        let t = 1.0 / libm::sqrt(3.0);
        let mut w = vec![ZERO; 8];
        for i in [1, 2, 4] {
            w[i] = C64::new(t, 0.0);
        }
        assert!((max_schmidt_sq(&w, &[1]).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!((max_schmidt_sq(&w, &[2, 3]).unwrap() - 2.0 / 3.0).abs() < 1e-12);

        let bad = [ONE, ONE, ZERO, ZERO];
        assert!(matches!(
            max_schmidt_sq(&bad, &[1]),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn eigenvalue_examples() {
        assert!((min_eigenvalue_hermitian(&Matrix::diagonal_from(&[3.0, -1.0, 0.0, 2.0])).unwrap() + 1.0).abs() < 1e-12);
        assert!((min_eigenvalue_hermitian(&pauli_z()).unwrap() + 1.0).abs() < 1e-12);
        let mut m = Matrix::identity(2);
        m[(0, 1)] = ONE;
        assert!(matches!(
            min_eigenvalue_hermitian(&m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn eigenvalues_of_complex_hermitian() {
        // Pauli Y has spectrum {−1, 1}; σ·n̂ for a complex direction too.
        let y = Matrix::from_fn(2, |i, j| match (i, j) {
            (0, 1) => C64::new(0.0, -1.0),
            (1, 0) => C64::new(0.0, 1.0),
            _ => ZERO,
        });
        let ev = hermitian_eigenvalues(&y).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
        // 3×3 with known spectrum {0, 1, 3}: [[2, i, 0], [−i, 2, 0], [0, 0, 0]].
        let m = Matrix::from_fn(3, |i, j| match (i, j) {
            (0, 0) | (1, 1) => C64::new(2.0, 0.0),
            (0, 1) => C64::new(0.0, 1.0),
            (1, 0) => C64::new(0.0, -1.0),
            _ => ZERO,
        });
        let ev = hermitian_eigenvalues(&m).unwrap();
        for (got, want) in ev.iter().zip([0.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-12, "{ev:?}");
        }
        assert_eq!(diag_c(&Matrix::identity(2)), [1.0, 1.0]);
    }

    #[test]
    fn phase_insensitive_distance_ignores_global_phase() {
        let h = hadamard();
        let ph = h.scale(C64::from_polar(1.0, 0.7));
        assert!(h.phase_insensitive_distance(&ph) < 1e-15);
        assert!(h.phase_insensitive_distance(&pauli_x()) > 0.1);
    }
}
