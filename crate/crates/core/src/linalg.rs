//! Fixed-size complex matrices and vectors (3×3 and 6×6 in practice).

use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

#[allow(unused_imports)] // std's inherent methods win when std is linked
use num_traits::Float;

use crate::C64;

pub type Vector<const N: usize> = [C64; N];

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Exact `i^p` for integer `p`.
pub fn i_pow(p: i32) -> C64 {
    match p.rem_euclid(4) {
        0 => ONE,
        1 => I,
        2 => -ONE,
        _ => -I,
    }
}

/// Row-major dense `N×N` complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix<const N: usize>(pub [[C64; N]; N]);

impl<const N: usize> Matrix<N> {
    pub const fn zero() -> Self {
        Matrix([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_real(rows: [[f64; N]; N]) -> Self {
        let mut m = Self::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.0[i][j] = C64::new(v, 0.0);
            }
        }
        m
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|z| *z = f(*z));
        m
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| z * s)
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.0[j][i] = self.0[i][j];
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn apply(&self, v: &Vector<N>) -> Vector<N> {
        let mut out = [ZERO; N];
        for (o, row) in out.iter_mut().zip(&self.0) {
            *o = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// Largest entry-wise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_diff(&Self::zero())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn column(&self, j: usize) -> Vector<N> {
        let mut c = [ZERO; N];
        for (i, z) in c.iter_mut().enumerate() {
            *z = self.0[i][j];
        }
        c
    }
}

impl<const N: usize> Default for Matrix<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> Index<(usize, usize)> for Matrix<N> {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Matrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Add for Matrix<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] += rhs.0[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Sub for Matrix<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const N: usize> Neg for Matrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl<const N: usize> Mul for Matrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                for j in 0..N {
                    m.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        m
    }
}

impl<const N: usize> Mul<C64> for Matrix<N> {
    type Output = Self;
    fn mul(self, rhs: C64) -> Self {
        self.scale(rhs)
    }
}

/// Block matrix `[[a, b], [c, d]]` of 3×3 blocks.
pub fn block6(a: &Matrix<3>, b: &Matrix<3>, c: &Matrix<3>, d: &Matrix<3>) -> Matrix<6> {
    let mut m = Matrix::<6>::zero();
    for i in 0..3 {
        for j in 0..3 {
            m.0[i][j] = a.0[i][j];
            m.0[i][j + 3] = b.0[i][j];
            m.0[i + 3][j] = c.0[i][j];
            m.0[i + 3][j + 3] = d.0[i][j];
        }
    }
    m
}

/// Bilinear `Σ aᵢbᵢ` (no conjugation).
pub fn dot<const N: usize>(a: &Vector<N>, b: &Vector<N>) -> C64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Hermitian `⟨a, b⟩ = Σ conj(aᵢ) bᵢ`.
pub fn inner<const N: usize>(a: &Vector<N>, b: &Vector<N>) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn norm<const N: usize>(v: &Vector<N>) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn scale_vec<const N: usize>(v: &Vector<N>, s: C64) -> Vector<N> {
    let mut out = *v;
    out.iter_mut().for_each(|z| *z *= s);
    out
}

pub fn add_vec<const N: usize>(a: &Vector<N>, b: &Vector<N>) -> Vector<N> {
    let mut out = *a;
    out.iter_mut().zip(b).for_each(|(x, y)| *x += y);
    out
}

pub fn sub_vec<const N: usize>(a: &Vector<N>, b: &Vector<N>) -> Vector<N> {
    let mut out = *a;
    out.iter_mut().zip(b).for_each(|(x, y)| *x -= y);
    out
}

pub fn conj_vec<const N: usize>(v: &Vector<N>) -> Vector<N> {
    let mut out = *v;
    out.iter_mut().for_each(|z| *z = z.conj());
    out
}

pub fn real_vec(v: [f64; 3]) -> Vector<3> {
    v.map(|x| C64::new(x, 0.0))
}

/// Complex cross product `a × b`.
pub fn cross(a: &Vector<3>, b: &Vector<3>) -> Vector<3> {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.
///
/// Returns eigenvalues in descending order and the unitary matrix whose
/// columns are the matching eigenvectors. Only the Hermitian part of `m` is
/// seen by the iteration.
pub fn hermitian_eigen<const N: usize>(m: &Matrix<N>) -> ([f64; N], Matrix<N>) {
    let mut a = (*m + m.adjoint()).scale(C64::new(0.5, 0.0));
    let mut v = Matrix::<N>::identity();
    let scale = a.max_abs().max(f64::MIN_POSITIVE);

    for _sweep in 0..64 {
        let mut off = 0.0_f64;
        for p in 0..N {
            for q in p + 1..N {
                off = off.max(a.0[p][q].norm());
            }
        }
        if off <= 1e-17 * scale {
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                let apq = a.0[p][q];
                let mag = apq.norm();
                if mag <= 1e-300 {
                    continue;
                }
                // Phase-align a_pq to a real positive number, then do a real
                // symmetric Jacobi rotation in the (p, q) plane.
                let phase = apq / mag;
                let app = a.0[p][p].re;
                let aqq = a.0[q][q].re;
                let theta = 0.5 * (2.0 * mag).atan2(aqq - app);
                let (s, c) = theta.sin_cos();
                // U = diag(1, conj(phase)) on (p, q) followed by the real
                // rotation [[c, s], [-s, c]].
                let mut u = Matrix::<N>::identity();
                u.0[p][p] = C64::new(c, 0.0);
                u.0[p][q] = C64::new(s, 0.0);
                u.0[q][p] = C64::new(-s, 0.0) * phase.conj();
                u.0[q][q] = C64::new(c, 0.0) * phase.conj();
                a = u.adjoint() * a * u;
                v = v * u;
            }
        }
    }

    let mut order: [usize; N] = core::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a.0[j][j].re.total_cmp(&a.0[i][i].re));
    let values = order.map(|i| a.0[i][i].re);
    let mut vectors = Matrix::<N>::zero();
    for (new_j, &old_j) in order.iter().enumerate() {
        for i in 0..N {
            vectors.0[i][new_j] = v.0[i][old_j];
        }
    }
    (values, vectors)
}
