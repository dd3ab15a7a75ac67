use num_complex::Complex64;

use crate::linalg3::Mat3;

/// Eigenvalues closer than this to the closed ray `(-∞, 0]` make a matrix inadmissible.
pub const SPECTRUM_MARGIN: f64 = 1e-12;

/// Eigenvalues of a matrix and whether its principal fractional powers exist.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumCheck {
    pub eigenvalues: [Complex64; 3],
    pub admissible: bool,
}

/// Distance from `z` to the closed ray `(-∞, 0]`.
pub fn distance_to_cut(z: Complex64) -> f64 {
    if z.re <= 0.0 {
        z.im.abs()
    } else {
        z.norm()
    }
}

pub fn check_spectrum(m: &Mat3) -> SpectrumCheck {
    let eigenvalues = eigenvalues(m);
    let admissible = eigenvalues.iter().all(|&z| z.is_finite() && distance_to_cut(z) > SPECTRUM_MARGIN);
    SpectrumCheck { eigenvalues, admissible }
}

/// Roots of the characteristic polynomial `z³ + a z² + b z + c`, by Cardano's
/// formula in complex arithmetic followed by two Newton polishing steps.
pub fn eigenvalues(m: &Mat3) -> [Complex64; 3] {
    let a = -m.trace();
    let minor = |i: usize, j: usize| m[(i, i)] * m[(j, j)] - m[(i, j)] * m[(j, i)];
    let b = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let c = -m.det();
    let mut roots = cubic_roots(a, b, c);
    for z in roots.iter_mut() {
        *z = polish(*z, a, b, c);
    }
    roots
}

fn cubic_roots(a: f64, b: f64, c: f64) -> [Complex64; 3] {
    // z = x - a/3 gives x³ + p x + q = 0
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

    let disc = Complex64::new(q * q / 4.0 + p * p * p / 27.0, 0.0).sqrt();
    let half_q = Complex64::new(-q / 2.0, 0.0);
    // pick the sign that avoids cancellation
    let inner = if (half_q + disc).norm() >= (half_q - disc).norm() { half_q + disc } else { half_q - disc };
    let big_c = inner.powf(1.0 / 3.0);

    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let mut roots = [Complex64::new(0.0, 0.0); 3];
    let mut rot = Complex64::new(1.0, 0.0);
    for root in roots.iter_mut() {
        let ck = big_c * rot;
        let x = if ck.norm() == 0.0 { Complex64::new(0.0, 0.0) } else { ck - p / (3.0 * ck) };
        *root = x - shift;
        rot *= omega;
    }
    roots
}

fn polish(mut z: Complex64, a: f64, b: f64, c: f64) -> Complex64 {
    for _ in 0..2 {
        let f = ((z + a) * z + b) * z + c;
        let df = (3.0 * z + 2.0 * a) * z + b;
        if df.norm() == 0.0 || !df.is_finite() {
            break;
        }
        let next = z - f / df;
        // only accept steps that reduce the residual
        let f_next = ((next + a) * next + b) * next + c;
        if f_next.norm() < f.norm() {
            z = next;
        } else {
            break;
        }
    }
    z
}
