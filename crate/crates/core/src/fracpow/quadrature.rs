//! Matrix-valued quadrature rules used by the Balakrishnan engine.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg3::Mat3;

/// Raw output of a rule: the finer estimate, a coarser embedded estimate and
/// the number of integrand evaluations.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RuleSums {
    pub fine: Mat3,
    pub coarse: Mat3,
    pub evaluations: usize,
}

/// Farthest abscissa the double-exponential walk may reach.
const DE_MAX_T: f64 = 24.0;
/// A tail term smaller than this fraction of the running sum ends the walk.
const DE_TAIL_RATIO: f64 = 1e-18;

/// Step of the double-exponential rule at `level`.
pub(crate) fn de_step(level: u32) -> f64 {
    2f64.powi(1 - level as i32)
}

/// Double-exponential rule for `∫₀^∞ f(λ) dλ`.
///
/// `weighted(log λ)` must return `λ · f(λ)`. The substitution
/// `λ = exp(π sinh t)` is the composition of `λ = s / (1 - s)` with the
/// tanh-sinh map of `s ∈ (0, 1)`, so `dλ = λ π cosh t dt`. Working from
/// `log λ` keeps both tails free of overflow and cancellation.
///
/// The coarse estimate uses the even-indexed nodes (step `2h`).
pub(crate) fn double_exponential<F>(level: u32, mut weighted: F) -> Result<RuleSums>
where
    F: FnMut(f64) -> Result<Mat3>,
{
    let h = de_step(level);
    let mut term = |k: i64| -> Result<Mat3> {
        let t = k as f64 * h;
        Ok(weighted(PI * t.sinh())?.scale(PI * t.cosh()))
    };

    let center = term(0)?;
    let mut even = center;
    let mut odd = Mat3::zeros();
    let mut evaluations = 1;

    for direction in [1i64, -1] {
        let mut k = 1i64;
        loop {
            let t = (k * direction) as f64 * h;
            if t.abs() > DE_MAX_T {
                return Err(Error::QuadratureNotConverged { estimate: f64::INFINITY, tolerance: 0.0 });
            }
            let value = term(k * direction)?;
            evaluations += 1;
            if k % 2 == 0 {
                even += value;
            } else {
                odd += value;
            }
            let running = (even + odd).frobenius_norm();
            if value.frobenius_norm() <= DE_TAIL_RATIO * running && k > 1 {
                break;
            }
            k += 1;
        }
    }

    Ok(RuleSums { fine: (even + odd).scale(h), coarse: even.scale(2.0 * h), evaluations })
}

/// Gauss–Legendre nodes and weights on `[0, 1]`.
pub(crate) fn gauss_legendre_unit(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d.is_finite() {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((0.5 * (1.0 - x), 0.5 * w));
    }
    out.reverse();
    out
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

/// Gauss–Legendre rule with `nodes` points on `[0, 1]` for each integrand in
/// `pieces`, summed. The coarse estimate uses `ceil(nodes / 2)` points.
pub(crate) fn gauss_legendre_pieces<F>(nodes: usize, pieces: &mut [F]) -> Result<RuleSums>
where
    F: FnMut(f64) -> Result<Mat3>,
{
    let run = |n: usize, pieces: &mut [F]| -> Result<Mat3> {
        let rule = gauss_legendre_unit(n);
        let mut acc = Mat3::zeros();
        for piece in pieces.iter_mut() {
            for &(x, w) in &rule {
                acc += piece(x)?.scale(w);
            }
        }
        Ok(acc)
    };
    let coarse_nodes = nodes.div_ceil(2);
    let fine = run(nodes, pieces)?;
    let coarse = run(coarse_nodes, pieces)?;
    Ok(RuleSums { fine, coarse, evaluations: nodes * pieces.len() })
}
