//! Closed-form rotations about a fixed axis.
//!
//! Every rotation here is built from the quarter-turn matrix `A(n̂, π/2)` and its
//! real powers: `A(n̂, θ) = A(n̂, π/2)^(2θ/π)`. The closed forms are
//! cross-checked against the Euler–Rodrigues entry formula, the matrix
//! exponential of the generator, and the numerical fractional-power engine in
//! [`crate::fracpow`].

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::linalg3::{mat_mul, Mat3, Vec3};

/// Axis vectors shorter than this are rejected rather than normalized.
pub const MIN_AXIS_NORM: f64 = 1e-9;

/// `log_rotation` refuses angles with `|θ| ≥ π - LOG_DOMAIN_MARGIN`.
pub const LOG_DOMAIN_MARGIN: f64 = 1e-9;

/// Tolerance used when validating an arbitrary matrix as a rotation.
pub const ROTATION_CHECK_TOL: f64 = 1e-8;

/// Unit rotation axis `n̂ = (n1, n2, n3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitAxis {
    n: Vec3,
}

impl UnitAxis {
    /// Normalizes `(x, y, z)`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_vec(Vec3::new(x, y, z))
    }

    pub fn from_vec(v: Vec3) -> Result<Self> {
        let norm = v.norm();
        if !v.is_finite() || !(norm >= MIN_AXIS_NORM) {
            return Err(Error::DegenerateAxis(norm));
        }
        Ok(Self { n: v.scale(1.0 / norm) })
    }

    pub const fn x() -> Self {
        Self { n: Vec3::e1() }
    }

    pub const fn y() -> Self {
        Self { n: Vec3::e2() }
    }

    pub const fn z() -> Self {
        Self { n: Vec3::e3() }
    }

    pub fn vec(self) -> Vec3 {
        self.n
    }

    pub fn components(self) -> [f64; 3] {
        self.n.to_array()
    }

    pub fn flipped(self) -> Self {
        Self { n: -self.n }
    }
}

/// Angle in radians. Any finite value is allowed.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle(f64);

impl Angle {
    pub const fn from_radians(radians: f64) -> Self {
        Self(radians)
    }

    pub fn from_degrees(degrees: f64) -> Self {
        Self(degrees.to_radians())
    }

    pub const fn radians(self) -> f64 {
        self.0
    }

    /// The exponent `α = 2θ/π` with `A(n̂, θ) = A(n̂, π/2)^α`.
    pub fn quarter_turn_exponent(self) -> f64 {
        2.0 * self.0 / PI
    }
}

impl From<f64> for Angle {
    fn from(radians: f64) -> Self {
        Self(radians)
    }
}

/// An orthogonal 3×3 matrix with unit determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation(Mat3);

impl Rotation {
    pub const fn identity() -> Self {
        Self(Mat3::identity())
    }

    /// Validates `m` against `ROTATION_CHECK_TOL`.
    pub fn try_from_matrix(m: Mat3) -> Result<Self> {
        let orthogonality = mat_mul(&m.transpose(), &m).distance(&Mat3::identity());
        let det = m.det();
        if !m.is_finite() || !(orthogonality <= ROTATION_CHECK_TOL) || !((det - 1.0).abs() <= ROTATION_CHECK_TOL) {
            return Err(Error::NotARotation { orthogonality, det });
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn into_matrix(self) -> Mat3 {
        self.0
    }

    /// The inverse rotation (transpose).
    pub fn inverse(&self) -> Rotation {
        Rotation(self.0.transpose())
    }

    pub fn apply(&self, u: Vec3) -> Vec3 {
        self.0.mul_vec(u)
    }

    pub fn axis_angle(&self) -> Result<(UnitAxis, Angle)> {
        axis_angle_from_matrix(&self.0)
    }
}

impl Mul for Rotation {
    type Output = Rotation;
    fn mul(self, rhs: Rotation) -> Rotation {
        Rotation(mat_mul(&self.0, &rhs.0))
    }
}

impl From<Rotation> for Mat3 {
    fn from(r: Rotation) -> Mat3 {
        r.0
    }
}

fn kronecker(i: usize, j: usize) -> f64 {
    if i == j {
        1.0
    } else {
        0.0
    }
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (2, 1, 0) | (0, 2, 1) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// The rotation by π/2 about `axis`.
#[rustfmt::skip]
pub fn quarter_turn(axis: UnitAxis) -> Rotation {
    let [n1, n2, n3] = axis.components();
    Rotation(Mat3::from_rows([
        [n1 * n1,      n1 * n2 - n3, n1 * n3 + n2],
        [n1 * n2 + n3, n2 * n2,      n2 * n3 - n1],
        [n1 * n3 - n2, n2 * n3 + n1, n3 * n3],
    ]))
}

/// Euler–Rodrigues: `R_ij = cos θ δ_ij + (1 - cos θ) n_i n_j - sin θ ε_ijk n_k`.
pub fn rodrigues(axis: UnitAxis, theta: impl Into<Angle>) -> Rotation {
    let theta = theta.into().radians();
    let (s, c) = theta.sin_cos();
    let n = axis.vec();
    let mut r = Mat3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            let eps_n: f64 = (0..3).map(|k| levi_civita(i, j, k) * n[k]).sum();
            r[(i, j)] = c * kronecker(i, j) + (1.0 - c) * n[i] * n[j] - s * eps_n;
        }
    }
    Rotation(r)
}

/// Rotates `u` by `theta` about `axis`.
pub fn rotate_vector(axis: UnitAxis, theta: impl Into<Angle>, u: Vec3) -> Vec3 {
    rodrigues(axis, theta).apply(u)
}

/// `n̂ × u + ⟨u, n̂⟩ n̂`, the quarter turn applied without forming a matrix.
pub fn quarter_turn_vector(axis: UnitAxis, u: Vec3) -> Vec3 {
    let n = axis.vec();
    n.cross(u) + n.scale(u.dot(n))
}

/// Closed-form `A(n̂, π/2)^α` for `α ∈ [-1, 1]`.
///
/// Non-negative exponents use the rotation by `απ/2`. Negative exponents use the
/// separately written display with the sine terms sign-flipped; that it equals
/// the transpose of the positive power is checked in tests, not assumed here.
#[rustfmt::skip]
pub fn frac_power_closed(axis: UnitAxis, alpha: f64) -> Result<Rotation> {
    if !(alpha.abs() <= 1.0) {
        return Err(Error::DomainAlpha(alpha));
    }
    let [n1, n2, n3] = axis.components();
    let half = alpha.abs() * FRAC_PI_2;
    let (s, c) = half.sin_cos();
    let v = 1.0 - c;
    let m = if alpha >= 0.0 {
        Mat3::from_rows([
            [n1 * n1 * v + c,      n1 * n2 * v - n3 * s, n1 * n3 * v + n2 * s],
            [n1 * n2 * v + n3 * s, n2 * n2 * v + c,      n2 * n3 * v - n1 * s],
            [n1 * n3 * v - n2 * s, n2 * n3 * v + n1 * s, n3 * n3 * v + c],
        ])
    } else {
        Mat3::from_rows([
            [n1 * n1 * v + c,      n1 * n2 * v + n3 * s, n1 * n3 * v - n2 * s],
            [n1 * n2 * v - n3 * s, n2 * n2 * v + c,      n2 * n3 * v + n1 * s],
            [n1 * n3 * v + n2 * s, n2 * n3 * v - n1 * s, n3 * n3 * v + c],
        ])
    };
    Ok(Rotation(m))
}

/// Splits `alpha` into `(whole, frac)` with `whole = floor(alpha)` and
/// `frac = alpha - whole ∈ [0, 1]`.
///
/// `frac` can round up to exactly 1 for tiny negative inputs.
pub fn split_exponent(alpha: f64) -> (f64, f64) {
    let whole = alpha.floor();
    (whole, alpha - whole)
}

/// `quarter^whole · fractional`, with negative powers taken through the transpose.
///
/// `whole` is reduced modulo 4 first (the quarter turn has order 4), keeping its sign.
pub fn compose_quarter_powers(quarter: &Mat3, whole: f64, fractional: &Mat3) -> Mat3 {
    let reduced = whole % 4.0;
    let base = if reduced < 0.0 { quarter.transpose() } else { *quarter };
    let count = reduced.abs() as u32;
    let mut acc = Mat3::identity();
    for _ in 0..count {
        acc = mat_mul(&acc, &base);
    }
    mat_mul(&acc, fractional)
}

/// `A(n̂, θ) = A(n̂, π/2)^(2θ/π)` for any finite θ.
pub fn rotation_of(axis: UnitAxis, theta: impl Into<Angle>) -> Rotation {
    let alpha = theta.into().quarter_turn_exponent();
    let (whole, frac) = split_exponent(alpha);
    // frac ∈ [0, 1], always inside the closed-form domain
    let fractional = frac_power_closed(axis, frac).expect("fractional part lies in [0, 1]");
    Rotation(compose_quarter_powers(quarter_turn(axis).matrix(), whole, fractional.matrix()))
}

/// Infinitesimal generator `G` with `G u = n̂ × u`.
#[rustfmt::skip]
pub fn generator(axis: UnitAxis) -> Mat3 {
    let [n1, n2, n3] = axis.components();
    Mat3::from_rows([
        [0.0, -n3,  n2],
        [n3,  0.0, -n1],
        [-n2, n1,  0.0],
    ])
}

/// Principal logarithm `θ G` of the rotation by `theta`, defined for `|θ| < π`.
pub fn log_rotation(axis: UnitAxis, theta: impl Into<Angle>) -> Result<Mat3> {
    let theta = theta.into().radians();
    if !(theta.abs() < PI - LOG_DOMAIN_MARGIN) {
        return Err(Error::OutOfPrincipalDomain(theta));
    }
    Ok(generator(axis).scale(theta))
}

/// `T(t) = exp(t A(n̂, π/2))` in closed form.
///
/// Stated for `t ≥ 0`; the formula is entire in `t` and negative values are accepted.
pub fn semigroup(axis: UnitAxis, t: f64) -> Mat3 {
    let n = axis.vec();
    let (s, c) = t.sin_cos();
    let et = t.exp();
    let g = generator(axis);
    let mut out = Mat3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            out[(i, j)] = n[i] * n[j] * (et - c) + c * kronecker(i, j) + s * g[(i, j)];
        }
    }
    out
}

/// Recovers `(n̂, θ)` with `θ ∈ [0, π]` from a rotation matrix.
///
/// The identity maps to axis `(0, 0, 1)` and angle 0 by convention. Near `θ = π`
/// the axis comes from the diagonal and its overall sign is arbitrary when the
/// skew part vanishes.
pub fn axis_angle_from_matrix(m: &Mat3) -> Result<(UnitAxis, Angle)> {
    let r = Rotation::try_from_matrix(*m)?;
    let m = r.matrix();
    let w = Vec3::new(m[(2, 1)] - m[(1, 2)], m[(0, 2)] - m[(2, 0)], m[(1, 0)] - m[(0, 1)]);
    let sin_theta = 0.5 * w.norm();
    let cos_theta = 0.5 * (m.trace() - 1.0);
    let theta = sin_theta.atan2(cos_theta);

    if theta < 1e-9 {
        return Ok((UnitAxis::z(), Angle(0.0)));
    }
    if sin_theta > 1e-6 || cos_theta > 0.0 {
        return Ok((UnitAxis::from_vec(w)?, Angle(theta)));
    }

    let one_minus_cos = 1.0 - cos_theta;
    let sq: Vec<f64> = (0..3).map(|i| ((m[(i, i)] - cos_theta) / one_minus_cos).max(0.0)).collect();
    let pivot = (0..3).max_by(|&a, &b| sq[a].total_cmp(&sq[b])).unwrap_or(0);
    let np = sq[pivot].sqrt();
    let mut n = [0.0; 3];
    for (j, nj) in n.iter_mut().enumerate() {
        *nj = if j == pivot { np } else { (m[(pivot, j)] + m[(j, pivot)]) / (2.0 * one_minus_cos * np) };
    }
    let mut axis = UnitAxis::from_vec(Vec3::from_array(n))?;
    if axis.vec().dot(w) < 0.0 {
        axis = axis.flipped();
    }
    Ok((axis, Angle(theta)))
}

/// Samples `rotation_of(axis, θ0 + k (θ1 - θ0) / steps)` for `k = 0..=steps`.
pub fn interpolate(
    axis: UnitAxis,
    theta0: impl Into<Angle>,
    theta1: impl Into<Angle>,
    steps: usize,
) -> Result<Vec<Rotation>> {
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    let (t0, t1) = (theta0.into().radians(), theta1.into().radians());
    let delta = (t1 - t0) / steps as f64;
    Ok((0..=steps).map(|k| rotation_of(axis, t0 + k as f64 * delta)).collect())
}

/// Maps `θ` to the `(axis, angle)` pair `axis_angle_from_matrix` reports,
/// with the angle folded into `[0, π]`.
pub fn canonical_axis_angle(axis: UnitAxis, theta: f64) -> (UnitAxis, f64) {
    let wrapped = theta.rem_euclid(TAU);
    if wrapped > PI {
        (axis.flipped(), TAU - wrapped)
    } else {
        (axis, wrapped)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    const AZ: Mat3 = Mat3::from_rows([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);

    fn diag_axis() -> UnitAxis {
        UnitAxis::new(1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn axis_normalizes_and_rejects_tiny() {
        let a = UnitAxis::new(0.0, 3.0, 4.0).unwrap();
        let [x, y, z] = a.components();
        assert!(x == 0.0 && (y - 0.6).abs() < 1e-15 && (z - 0.8).abs() < 1e-15);
        assert!(matches!(UnitAxis::new(1e-10, 0.0, 0.0), Err(Error::DegenerateAxis(_))));
        assert!(UnitAxis::new(f64::NAN, 0.0, 1.0).is_err());
    }

    #[test]
    fn quarter_turn_coordinate_axes() {
        assert_eq!(*quarter_turn(UnitAxis::z()).matrix(), AZ);
        let ax = Mat3::from_rows([[1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]]);
        assert_eq!(*quarter_turn(UnitAxis::x()).matrix(), ax);
    }

    #[test]
    fn quarter_turn_body_diagonal() {
        let q = quarter_turn(diag_axis()).into_matrix();
        let (third, r3) = (1.0 / 3.0, 1.0 / 3f64.sqrt());
        let expected = Mat3::from_rows([
            [third, third - r3, third + r3],
            [third + r3, third, third - r3],
            [third - r3, third + r3, third],
        ]);
        assert!(q.distance(&expected) < 1e-15);
        assert!(mat_mul(&q.transpose(), &q).distance(&Mat3::identity()) < 1e-15);
        assert!((q.det() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rodrigues_examples() {
        assert_eq!(*rodrigues(diag_axis(), 0.0).matrix(), Mat3::identity());
        assert!(rodrigues(UnitAxis::z(), FRAC_PI_2).matrix().distance(&AZ) < 1e-16);
        let half = rodrigues(UnitAxis::z(), PI).into_matrix();
        assert!(half.distance(&Mat3::from_diagonal([-1.0, -1.0, 1.0])) < 1e-15);
    }

    #[test]
    fn rotate_vector_examples() {
        let v = rotate_vector(UnitAxis::z(), FRAC_PI_2, Vec3::e1());
        assert!((v - Vec3::e2()).norm() < 1e-16);

        let n = UnitAxis::new(0.2, -0.7, 0.4).unwrap();
        for theta in [-3.0, 0.1, 1.0, 5.5] {
            assert!((rotate_vector(n, theta, n.vec()) - n.vec()).norm() < 1e-15);
        }

        // brute force: apply the matrix entry by entry
        let r = rodrigues(diag_axis(), 2.0 * PI / 3.0).into_matrix();
        let brute: Vec<f64> = (0..3).map(|i| r[(i, 0)]).collect();
        assert!((brute[0]).abs() < 1e-15 && (brute[1] - 1.0).abs() < 1e-15 && brute[2].abs() < 1e-15);
        let v = rotate_vector(diag_axis(), 2.0 * PI / 3.0, Vec3::e1());
        assert!((v - Vec3::e2()).norm() < 1e-15);
    }

    #[test]
    fn quarter_turn_vector_matches_matrix() {
        let n = UnitAxis::new(-0.3, 0.5, 0.9).unwrap();
        let u = Vec3::new(1.5, -2.0, 0.25);
        let direct = quarter_turn_vector(n, u);
        assert!((rotate_vector(n, FRAC_PI_2, u) - direct).norm() < 1e-13);
        assert!((quarter_turn(n).apply(u) - direct).norm() < 1e-15);
    }

    #[test]
    fn frac_power_examples() {
        let z = UnitAxis::z();
        assert_eq!(*frac_power_closed(diag_axis(), 0.0).unwrap().matrix(), Mat3::identity());
        assert!(frac_power_closed(z, 1.0).unwrap().matrix().distance(&AZ) < 1e-16);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let sqrt_az = Mat3::from_rows([[h, -h, 0.0], [h, h, 0.0], [0.0, 0.0, 1.0]]);
        assert!(frac_power_closed(z, 0.5).unwrap().matrix().distance(&sqrt_az) < 1e-15);
        assert!(frac_power_closed(z, -1.0).unwrap().matrix().distance(&AZ.transpose()) < 1e-16);
    }

    #[test]
    fn frac_power_negative_display_is_transpose() {
        let n = UnitAxis::new(0.3, -0.1, 0.8).unwrap();
        for k in 0..=16 {
            let alpha = k as f64 / 16.0;
            let pos = frac_power_closed(n, alpha).unwrap().into_matrix();
            let neg = frac_power_closed(n, -alpha).unwrap().into_matrix();
            assert!(neg.distance(&pos.transpose()) < 1e-15);
        }
    }

    #[test]
    fn frac_power_rejects_out_of_range() {
        assert_eq!(frac_power_closed(UnitAxis::z(), 1.5), Err(Error::DomainAlpha(1.5)));
        assert!(frac_power_closed(UnitAxis::z(), -1.0001).is_err());
        assert!(frac_power_closed(UnitAxis::z(), f64::NAN).is_err());
    }

    #[test]
    fn rotation_of_examples() {
        let z = UnitAxis::z();
        let eighth = rotation_of(z, FRAC_PI_4).into_matrix();
        assert!(eighth.distance(frac_power_closed(z, 0.5).unwrap().matrix()) < 1e-15);
        assert!(rotation_of(diag_axis(), TAU).matrix().distance(&Mat3::identity()) < 1e-14);
        assert!(rotation_of(z, -FRAC_PI_2).matrix().distance(&AZ.transpose()) < 1e-15);
    }

    #[test]
    fn rotation_of_handles_huge_angles() {
        let r = rotation_of(UnitAxis::z(), 1e6 * TAU);
        assert!(r.matrix().is_finite());
        assert!(Rotation::try_from_matrix(r.into_matrix()).is_ok());
    }

    #[test]
    fn split_exponent_floors() {
        assert_eq!(split_exponent(2.5), (2.0, 0.5));
        assert_eq!(split_exponent(-0.5), (-1.0, 0.5));
        assert_eq!(split_exponent(3.0), (3.0, 0.0));
    }

    #[test]
    fn generator_examples() {
        let gz = Mat3::from_rows([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]);
        assert_eq!(generator(UnitAxis::z()), gz);
        let n = UnitAxis::new(0.6, -0.2, 0.3).unwrap();
        let g = generator(n);
        assert_eq!(g.transpose(), -g);
        assert!(g.mul_vec(n.vec()).norm() < 1e-16);
        let u = Vec3::new(0.3, 2.0, -1.0);
        assert!((g.mul_vec(u) - n.vec().cross(u)).norm() < 1e-15);
    }

    #[test]
    fn log_examples() {
        assert_eq!(log_rotation(diag_axis(), 0.0).unwrap(), Mat3::zeros());
        let gz = generator(UnitAxis::z());
        assert_eq!(log_rotation(UnitAxis::z(), FRAC_PI_2).unwrap(), gz.scale(FRAC_PI_2));
        assert!(matches!(log_rotation(UnitAxis::z(), PI), Err(Error::OutOfPrincipalDomain(_))));
        assert!(log_rotation(UnitAxis::z(), -PI).is_err());
        assert!(log_rotation(UnitAxis::z(), PI - 1e-6).is_ok());
    }

    #[test]
    fn semigroup_examples() {
        let n = UnitAxis::new(0.5, 0.5, -0.2).unwrap();
        assert!(semigroup(n, 0.0).distance(&Mat3::identity()) < 1e-16);
        let t: f64 = 1.3;
        let expected = Mat3::from_rows([[t.cos(), -t.sin(), 0.0], [t.sin(), t.cos(), 0.0], [0.0, 0.0, t.exp()]]);
        assert!(semigroup(UnitAxis::z(), t).distance(&expected) < 1e-15);
    }

    #[test]
    fn semigroup_decomposition_and_axis_scaling() {
        // T(t) = e^t n nᵀ + cos t (I - n nᵀ) + sin t G
        let n = UnitAxis::new(-0.4, 0.1, 0.7).unwrap();
        let nn = Mat3::outer(n.vec(), n.vec());
        for t in [0.0f64, 0.5, 2.0, 4.75] {
            let expected = nn.scale(t.exp()) + (Mat3::identity() - nn).scale(t.cos()) + generator(n).scale(t.sin());
            let got = semigroup(n, t);
            assert!(got.distance(&expected) < 1e-13 * t.exp());
            let tn = got.mul_vec(n.vec());
            assert!((tn - n.vec().scale(t.exp())).norm() <= 1e-14 * t.exp());
        }
    }

    #[test]
    fn axis_angle_examples() {
        let (axis, angle) = axis_angle_from_matrix(&Mat3::identity()).unwrap();
        assert_eq!((axis, angle.radians()), (UnitAxis::z(), 0.0));

        let (axis, angle) = axis_angle_from_matrix(&AZ).unwrap();
        assert!((axis.vec() - Vec3::e3()).norm() < 1e-15);
        assert!((angle.radians() - FRAC_PI_2).abs() < 1e-15);

        let (axis, angle) = axis_angle_from_matrix(&Mat3::from_diagonal([-1.0, -1.0, 1.0])).unwrap();
        assert!((axis.vec() - Vec3::e3()).norm() < 1e-15);
        assert!((angle.radians() - PI).abs() < 1e-15);
    }

    #[test]
    fn axis_angle_near_half_turn() {
        let n = UnitAxis::new(0.3, -0.5, 0.6).unwrap();
        for theta in [PI - 1e-7, PI - 1e-12, PI] {
            let (axis, angle) = axis_angle_from_matrix(rodrigues(n, theta).matrix()).unwrap();
            assert!((angle.radians() - theta).abs() < 1e-8, "{} vs {theta}", angle.radians());
            let d = (axis.vec() - n.vec()).norm().min((axis.vec() + n.vec()).norm());
            assert!(d < 1e-8);
        }
        // with a measurable skew part the sign follows it
        let (axis, _) = axis_angle_from_matrix(rodrigues(n, PI - 1e-7).matrix()).unwrap();
        assert!((axis.vec() - n.vec()).norm() < 1e-8);
    }

    #[test]
    fn axis_angle_rejects_non_rotations() {
        let err = axis_angle_from_matrix(&Mat3::from_diagonal([1.0, 1.0, -1.0])).unwrap_err();
        assert!(matches!(err, Error::NotARotation { .. }));
        assert!(axis_angle_from_matrix(&Mat3::identity().scale(1.01)).is_err());
    }

    #[test]
    fn interpolate_examples() {
        let z = UnitAxis::z();
        let path = interpolate(z, 0.0, FRAC_PI_2, 2).unwrap();
        assert_eq!(path.len(), 3);
        assert!(path[0].matrix().distance(&Mat3::identity()) < 1e-16);
        assert!(path[1].matrix().distance(rodrigues(z, FRAC_PI_4).matrix()) < 1e-15);
        assert!(path[2].matrix().distance(&AZ) < 1e-15);

        let path = interpolate(z, 0.3, 1.1, 1).unwrap();
        assert_eq!(path, vec![rotation_of(z, 0.3), rotation_of(z, 1.1)]);

        let path = interpolate(z, 0.7, 0.7, 4).unwrap();
        assert!(path.iter().all(|r| *r == path[0]));

        assert!(interpolate(z, 0.0, 1.0, 0).is_err());
    }

    #[test]
    fn canonical_axis_angle_folds() {
        let n = UnitAxis::z();
        let (a, t) = canonical_axis_angle(n, 1.5 * PI);
        assert_eq!(a, n.flipped());
        assert!((t - 0.5 * PI).abs() < 1e-15);
        let (a, t) = canonical_axis_angle(n, -0.25);
        assert_eq!(a, n.flipped());
        assert!((t - 0.25).abs() < 1e-15);
    }
}
