//! Principal fractional powers by complex eigendecomposition.
//!
//! `m^α = V diag(λᵢ^α) V⁻¹` with `λ^α = exp(α (ln|λ| + i Arg λ))`. This route
//! shares nothing with the quadrature engine beyond the spectrum precheck and
//! serves as its reference.

use num_complex::Complex64;

use super::spectrum::check_spectrum;
use crate::error::{Error, Result};
use crate::linalg3::Mat3;

/// Eigenvector matrices with a Frobenius condition estimate above this are rejected.
pub const MAX_EIGENBASIS_CONDITION: f64 = 1e8;
/// Largest imaginary entry tolerated in the recombined power before it is discarded.
pub const MAX_IMAGINARY_RESIDUE: f64 = 1e-10;

type CMat3 = [[Complex64; 3]; 3];

/// The oracle's result together with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleOutcome {
    pub matrix: Mat3,
    /// Largest `|Im|` entry of the recombined matrix before it was dropped.
    pub imag_residue: f64,
    /// `‖V‖_F ‖V⁻¹‖_F` of the normalized eigenvector matrix (3 for a scalar matrix).
    pub condition: f64,
}

pub fn eig_power_oracle(m: &Mat3, alpha: f64) -> Result<Mat3> {
    eig_power_oracle_detailed(m, alpha).map(|o| o.matrix)
}

pub fn eig_power_oracle_detailed(m: &Mat3, alpha: f64) -> Result<OracleOutcome> {
    if !alpha.is_finite() {
        return Err(Error::DomainAlpha(alpha));
    }
    let spectrum = check_spectrum(m);
    if !spectrum.admissible {
        return Err(Error::InadmissibleSpectrum);
    }

    // scalar matrices have every vector as eigenvector
    let mean = m.trace() / 3.0;
    if m.distance(&Mat3::identity().scale(mean)) <= 1e-14 * m.frobenius_norm() {
        return Ok(OracleOutcome {
            matrix: Mat3::identity().scale(mean.powf(alpha)),
            imag_residue: 0.0,
            condition: 3.0,
        });
    }

    let ev = spectrum.eigenvalues;
    let scale = ev.iter().map(|z| z.norm()).fold(1.0, f64::max);
    for i in 0..3 {
        for j in (i + 1)..3 {
            if (ev[i] - ev[j]).norm() <= 1e-8 * scale {
                return Err(Error::DegenerateEigenbasis { condition: f64::INFINITY });
            }
        }
    }

    let mut v: CMat3 = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (col, &lambda) in ev.iter().enumerate() {
        let x = null_vector(m, lambda);
        for row in 0..3 {
            v[row][col] = x[row];
        }
    }
    let (v_inv, det) = inverse(&v);
    let condition = frobenius(&v) * frobenius(&v_inv);
    if det.norm() == 0.0 || !(condition <= MAX_EIGENBASIS_CONDITION) {
        return Err(Error::DegenerateEigenbasis { condition });
    }

    let powers: Vec<Complex64> =
        ev.iter().map(|&z| Complex64::from_polar(z.norm().powf(alpha), alpha * z.arg())).collect();

    let mut out = Mat3::zeros();
    let mut imag_residue: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let entry: Complex64 = (0..3).map(|k| v[i][k] * powers[k] * v_inv[k][j]).sum();
            out[(i, j)] = entry.re;
            imag_residue = imag_residue.max(entry.im.abs());
        }
    }
    if imag_residue > MAX_IMAGINARY_RESIDUE {
        return Err(Error::ImaginaryResidue(imag_residue));
    }
    Ok(OracleOutcome { matrix: out, imag_residue, condition })
}

/// Unit null vector of `m - λI` for a simple eigenvalue: the largest cross
/// product of two rows.
fn null_vector(m: &Mat3, lambda: Complex64) -> [Complex64; 3] {
    let mut b: CMat3 = [[Complex64::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            b[i][j] = Complex64::new(m[(i, j)], 0.0) - if i == j { lambda } else { Complex64::new(0.0, 0.0) };
        }
    }
    let candidates = [cross(&b[0], &b[1]), cross(&b[0], &b[2]), cross(&b[1], &b[2])];
    let best =
        candidates.iter().max_by(|x, y| norm(x).total_cmp(&norm(y))).copied().unwrap_or([Complex64::new(0.0, 0.0); 3]);
    let n = norm(&best);
    best.map(|c| c / n)
}

fn cross(a: &[Complex64; 3], b: &[Complex64; 3]) -> [Complex64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn norm(v: &[Complex64; 3]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

fn frobenius(m: &CMat3) -> f64 {
    m.iter().flatten().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Adjugate inverse and determinant of a complex 3×3 matrix.
fn inverse(m: &CMat3) -> (CMat3, Complex64) {
    let cof = |i0: usize, i1: usize, j0: usize, j1: usize| m[i0][j0] * m[i1][j1] - m[i0][j1] * m[i1][j0];
    let adj = [
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ];
    let det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
    (adj.map(|row| row.map(|c| c / det)), det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::{quarter_turn, rodrigues, UnitAxis};
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn diagonal_square_root() {
        let r = eig_power_oracle(&Mat3::from_diagonal([1.0, 4.0, 9.0]), 0.5).unwrap();
        assert!(r.distance(&Mat3::from_diagonal([1.0, 2.0, 3.0])) < 1e-14);
    }

    #[test]
    fn quarter_turn_powers_match_rodrigues() {
        let z = UnitAxis::z();
        let a = quarter_turn(z).into_matrix();
        for alpha in [0.25, 0.5, 0.75] {
            let out = eig_power_oracle_detailed(&a, alpha).unwrap();
            let expected = rodrigues(z, alpha * FRAC_PI_2).into_matrix();
            assert!(out.matrix.distance(&expected) < 1e-10);
            assert!(out.imag_residue < 1e-10);
        }
    }

    #[test]
    fn negative_identity_is_rejected() {
        assert_eq!(eig_power_oracle(&Mat3::identity().scale(-1.0), 0.5), Err(Error::InadmissibleSpectrum));
    }

    #[test]
    fn scalar_matrix_fast_path() {
        let out = eig_power_oracle_detailed(&Mat3::identity(), 0.5).unwrap();
        assert_eq!(out.matrix, Mat3::identity());
        let out = eig_power_oracle(&Mat3::identity().scale(4.0), 1.5).unwrap();
        assert!(out.distance(&Mat3::identity().scale(8.0)) < 1e-14);
    }

    #[test]
    fn repeated_non_scalar_eigenvalue_is_degenerate() {
        let err = eig_power_oracle(&Mat3::from_diagonal([2.0, 2.0, 3.0]), 0.5).unwrap_err();
        assert!(matches!(err, Error::DegenerateEigenbasis { .. }));
    }

    #[test]
    fn general_matrix_square_root_squares_back() {
        let m = Mat3::from_row_major([4.0, 1.0, 0.5, -1.0, 3.0, 0.2, 0.3, -0.4, 2.0]);
        let r = eig_power_oracle(&m, 0.5).unwrap();
        assert!((r * r).distance(&m) < 1e-12);
    }
}
