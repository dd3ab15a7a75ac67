//! Dense 3-vectors and 3×3 matrices.
//!
//! Storage is row-major `f64`. Indices in code are 0-based; entry `(i, j)` is
//! row `i`, column `j`.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Real 3-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub const fn zeros() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    pub const fn e1() -> Self {
        Self::new(1.0, 0.0, 0.0)
    }

    pub const fn e2() -> Self {
        Self::new(0.0, 1.0, 0.0)
    }

    pub const fn e3() -> Self {
        Self::new(0.0, 0.0, 1.0)
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        cross(self, other)
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, s: f64) -> Vec3 {
        Vec3::new(s * self.x, s * self.y, s * self.z)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Index<usize> for Vec3 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("Vec3 index {i} out of range"),
        }
    }
}

/// Dense real 3×3 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3 {
    rows: [[f64; 3]; 3],
}

impl Mat3 {
    pub const fn from_rows(rows: [[f64; 3]; 3]) -> Self {
        Self { rows }
    }

    pub const fn zeros() -> Self {
        Self::from_rows([[0.0; 3]; 3])
    }

    pub const fn identity() -> Self {
        Self::from_rows([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn from_diagonal(d: [f64; 3]) -> Self {
        Self::from_rows([[d[0], 0.0, 0.0], [0.0, d[1], 0.0], [0.0, 0.0, d[2]]])
    }

    pub fn from_row_major(e: [f64; 9]) -> Self {
        Self::from_rows([[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]])
    }

    /// Outer product `a bᵀ`.
    pub fn outer(a: Vec3, b: Vec3) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m.rows[i][j] = a[i] * b[j];
            }
        }
        m
    }

    pub fn rows(&self) -> &[[f64; 3]; 3] {
        &self.rows
    }

    pub fn to_row_major(&self) -> [f64; 9] {
        let r = &self.rows;
        [r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2]]
    }

    pub fn transpose(&self) -> Mat3 {
        let mut t = Mat3::zeros();
        for i in 0..3 {
            for j in 0..3 {
                t.rows[i][j] = self.rows[j][i];
            }
        }
        t
    }

    pub fn trace(&self) -> f64 {
        self.rows[0][0] + self.rows[1][1] + self.rows[2][2]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.rows.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.rows.iter().flatten().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Frobenius norm of `self - other`.
    pub fn distance(&self, other: &Mat3) -> f64 {
        (*self - *other).frobenius_norm()
    }

    pub fn scale(&self, s: f64) -> Mat3 {
        let mut out = *self;
        out.rows.iter_mut().flatten().for_each(|v| *v *= s);
        out
    }

    pub fn is_finite(&self) -> bool {
        self.rows.iter().flatten().all(|v| v.is_finite())
    }

    pub fn mul_vec(&self, v: Vec3) -> Vec3 {
        let r = &self.rows;
        Vec3::new(
            r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
            r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
            r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z,
        )
    }

    pub fn det(&self) -> f64 {
        det3(self)
    }

    pub fn inverse(&self) -> Result<Mat3> {
        inverse3(self)
    }

    pub fn exp(&self) -> Mat3 {
        mat_exp(self)
    }
}

impl Index<(usize, usize)> for Mat3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.rows[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.rows[i][j]
    }
}

impl Add for Mat3 {
    type Output = Mat3;
    fn add(mut self, rhs: Mat3) -> Mat3 {
        self += rhs;
        self
    }
}

impl AddAssign for Mat3 {
    fn add_assign(&mut self, rhs: Mat3) {
        for i in 0..3 {
            for j in 0..3 {
                self.rows[i][j] += rhs.rows[i][j];
            }
        }
    }
}

impl Sub for Mat3 {
    type Output = Mat3;
    fn sub(self, rhs: Mat3) -> Mat3 {
        let mut out = self;
        for i in 0..3 {
            for j in 0..3 {
                out.rows[i][j] -= rhs.rows[i][j];
            }
        }
        out
    }
}

impl Neg for Mat3 {
    type Output = Mat3;
    fn neg(self) -> Mat3 {
        self.scale(-1.0)
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        mat_mul(&self, &rhs)
    }
}

impl Mul<Vec3> for Mat3 {
    type Output = Vec3;
    fn mul(self, rhs: Vec3) -> Vec3 {
        self.mul_vec(rhs)
    }
}

impl Mul<Mat3> for f64 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        rhs.scale(self)
    }
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = Mat3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            out.rows[i][j] = a.rows[i][0] * b.rows[0][j] + a.rows[i][1] * b.rows[1][j] + a.rows[i][2] * b.rows[2][j];
        }
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn det3(m: &Mat3) -> f64 {
    let r = &m.rows;
    r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
        + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
}

/// Inverse via adjugate over determinant.
///
/// Fails with [`Error::SingularMatrix`] when `|det| < 1e-12 · max(1, ‖m‖_F³)`.
pub fn inverse3(m: &Mat3) -> Result<Mat3> {
    let det = det3(m);
    let scale = m.frobenius_norm().powi(3).max(1.0);
    if !(det.abs() >= 1e-12 * scale) {
        return Err(Error::SingularMatrix { det });
    }
    let r = &m.rows;
    let cof = |i0: usize, i1: usize, j0: usize, j1: usize| r[i0][j0] * r[i1][j1] - r[i0][j1] * r[i1][j0];
    // adj(m)_{ij} = cofactor_{ji}
    let adj = Mat3::from_rows([
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ]);
    Ok(adj.scale(1.0 / det))
}

const EXP_TAYLOR_ORDER: u32 = 12;
const EXP_SCALED_NORM: f64 = 0.5;

/// Matrix exponential by scaling and squaring with a degree-12 Taylor polynomial.
pub fn mat_exp(m: &Mat3) -> Mat3 {
    let norm = m.frobenius_norm();
    let squarings = if norm > EXP_SCALED_NORM { (norm / EXP_SCALED_NORM).log2().ceil() as i32 } else { 0 };
    let x = m.scale(0.5f64.powi(squarings));

    // Horner: I + x(I + x/2(I + x/3(...)))
    let mut acc = Mat3::identity();
    for k in (1..=EXP_TAYLOR_ORDER).rev() {
        acc = Mat3::identity() + mat_mul(&x, &acc).scale(1.0 / f64::from(k));
    }
    for _ in 0..squarings {
        acc = mat_mul(&acc, &acc);
    }
    acc
}

/// Right-handed cross product.
pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    Vec3::new(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x)
}
