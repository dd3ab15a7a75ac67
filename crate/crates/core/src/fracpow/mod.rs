//! Fractional matrix powers through the Balakrishnan integral
//!
//! ```text
//! m^α = (sin απ / π) ∫₀^∞ λ^(α-1) m (λI + m)⁻¹ dλ,   0 < α < 1
//! ```
//!
//! evaluated by quadrature for any 3×3 matrix whose spectrum avoids the closed
//! negative real axis, extended to all real exponents by peeling off integer
//! powers. A closed-form resolvent of the quarter-turn matrix and an
//! eigendecomposition oracle provide independent checks.

mod oracle;
mod quadrature;
mod spectrum;

use std::f64::consts::PI;

pub use oracle::{
    eig_power_oracle, eig_power_oracle_detailed, OracleOutcome, MAX_EIGENBASIS_CONDITION, MAX_IMAGINARY_RESIDUE,
};
pub use spectrum::{check_spectrum, distance_to_cut, eigenvalues, SpectrumCheck, SPECTRUM_MARGIN};

use crate::error::{Error, Result};
use crate::linalg3::{inverse3, mat_mul, Mat3};
use crate::rotation::{split_exponent, UnitAxis};

/// How the Balakrishnan integral is discretized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadratureMethod {
    /// `λ = s / (1 - s)` followed by tanh-sinh on `s ∈ (0, 1)`; `level` sets
    /// the step `h = 2^(1 - level)`.
    DoubleExponential,
    /// Split at `λ = 1`, fold the tail with `λ → 1/λ`, and remove both
    /// endpoint singularities by power substitutions; `level` is the number of
    /// Gauss–Legendre nodes per piece.
    GaussLegendreSplit,
}

impl QuadratureMethod {
    pub fn name(self) -> &'static str {
        match self {
            QuadratureMethod::DoubleExponential => "double-exponential",
            QuadratureMethod::GaussLegendreSplit => "gauss-legendre-split",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    method: QuadratureMethod,
    level: u32,
    abs_tolerance: f64,
}

impl QuadratureConfig {
    pub const DEFAULT_LEVEL: u32 = 7;
    pub const DEFAULT_TOLERANCE: f64 = 1e-10;

    pub fn new(method: QuadratureMethod, level: u32, abs_tolerance: f64) -> Result<Self> {
        if level < 1 {
            return Err(Error::InvalidArgument("quadrature level must be at least 1".into()));
        }
        if method == QuadratureMethod::DoubleExponential && level > 20 {
            return Err(Error::InvalidArgument("double-exponential level must be at most 20".into()));
        }
        if !(abs_tolerance > 0.0) {
            return Err(Error::InvalidArgument("abs-tolerance must be positive".into()));
        }
        Ok(Self { method, level, abs_tolerance })
    }

    pub fn double_exponential(level: u32) -> Result<Self> {
        Self::new(QuadratureMethod::DoubleExponential, level, Self::DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(mut self, abs_tolerance: f64) -> Result<Self> {
        self = Self::new(self.method, self.level, abs_tolerance)?;
        Ok(self)
    }

    pub fn method(&self) -> QuadratureMethod {
        self.method
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn abs_tolerance(&self) -> f64 {
        self.abs_tolerance
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            method: QuadratureMethod::DoubleExponential,
            level: Self::DEFAULT_LEVEL,
            abs_tolerance: Self::DEFAULT_TOLERANCE,
        }
    }
}

/// A quadrature result with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOutcome {
    pub matrix: Mat3,
    /// Frobenius distance between the configured rule and its embedded coarser rule.
    pub error_estimate: f64,
    /// Integrand evaluations spent by the configured rule.
    pub nodes: usize,
}

/// `m^α` for `0 < α < 1` by quadrature of the Balakrishnan integral.
pub fn balakrishnan_power(m: &Mat3, alpha: f64, cfg: &QuadratureConfig) -> Result<Mat3> {
    balakrishnan_power_detailed(m, alpha, cfg).map(|o| o.matrix)
}

/// Like [`balakrishnan_power`], also returning the error estimate and node count.
pub fn balakrishnan_power_detailed(m: &Mat3, alpha: f64, cfg: &QuadratureConfig) -> Result<QuadratureOutcome> {
    let outcome = integrate(m, alpha, cfg.method, cfg.level)?;
    if !(outcome.error_estimate <= cfg.abs_tolerance) {
        return Err(Error::QuadratureNotConverged { estimate: outcome.error_estimate, tolerance: cfg.abs_tolerance });
    }
    Ok(outcome)
}

/// Runs the rule without the convergence gate.
fn integrate(m: &Mat3, alpha: f64, method: QuadratureMethod, level: u32) -> Result<QuadratureOutcome> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::DomainAlpha(alpha));
    }
    if !check_spectrum(m).admissible {
        return Err(Error::InadmissibleSpectrum);
    }
    let prefactor = (alpha * PI).sin() / PI;

    let sums = match method {
        QuadratureMethod::DoubleExponential => {
            // λ · λ^(α-1) m (λI + m)⁻¹, written so that neither tail overflows
            quadrature::double_exponential(level, |log_lambda| {
                if log_lambda <= 0.0 {
                    let lambda = log_lambda.exp();
                    let resolvent = inverse3(&(Mat3::identity().scale(lambda) + *m))?;
                    Ok(mat_mul(m, &resolvent).scale((alpha * log_lambda).exp()))
                } else {
                    let mu = (-log_lambda).exp();
                    let resolvent = inverse3(&(Mat3::identity() + m.scale(mu)))?;
                    Ok(mat_mul(m, &resolvent).scale(((alpha - 1.0) * log_lambda).exp()))
                }
            })?
        }
        QuadratureMethod::GaussLegendreSplit => {
            // ∫₀¹ λ^(α-1) m (λI + m)⁻¹ dλ with λ = x^(1/α) becomes (1/α) ∫₀¹ m (x^(1/α) I + m)⁻¹ dx;
            // the tail with λ = 1/μ, μ = y^(1/(1-α)) becomes (1/(1-α)) ∫₀¹ m (I + y^(1/(1-α)) m)⁻¹ dy.
            let head = |x: f64| -> Result<Mat3> {
                let lambda = x.powf(1.0 / alpha);
                let resolvent = inverse3(&(Mat3::identity().scale(lambda) + *m))?;
                Ok(mat_mul(m, &resolvent).scale(1.0 / alpha))
            };
            let tail = |y: f64| -> Result<Mat3> {
                let mu = y.powf(1.0 / (1.0 - alpha));
                let resolvent = inverse3(&(Mat3::identity() + m.scale(mu)))?;
                Ok(mat_mul(m, &resolvent).scale(1.0 / (1.0 - alpha)))
            };
            let mut pieces: [Box<dyn FnMut(f64) -> Result<Mat3>>; 2] = [Box::new(head), Box::new(tail)];
            quadrature::gauss_legendre_pieces(level as usize, &mut pieces)?
        }
    };

    Ok(QuadratureOutcome {
        matrix: sums.fine.scale(prefactor),
        error_estimate: (sums.fine - sums.coarse).frobenius_norm() * prefactor.abs(),
        nodes: sums.evaluations,
    })
}

/// `m^k` by repeated multiplication; negative `k` powers the inverse.
pub fn integer_power(m: &Mat3, k: f64) -> Result<Mat3> {
    let base = if k < 0.0 { inverse3(m)? } else { *m };
    let mut count = k.abs();
    if count <= 64.0 {
        let mut acc = Mat3::identity();
        for _ in 0..count as u32 {
            acc = mat_mul(&acc, &base);
        }
        return Ok(acc);
    }
    // binary powering for large exponents
    let mut acc = Mat3::identity();
    let mut square = base;
    while count >= 1.0 {
        if count % 2.0 == 1.0 {
            acc = mat_mul(&acc, &square);
        }
        square = mat_mul(&square, &square);
        count = (count / 2.0).floor();
    }
    Ok(acc)
}

/// `m^α` for any finite real `α`: `m^k · m^f` with `k = floor(α)` and the
/// fractional factor from the Balakrishnan integral (skipped when `f = 0`).
pub fn real_power(m: &Mat3, alpha: f64, cfg: &QuadratureConfig) -> Result<Mat3> {
    real_power_detailed(m, alpha, cfg).map(|o| o.matrix)
}

pub fn real_power_detailed(m: &Mat3, alpha: f64, cfg: &QuadratureConfig) -> Result<QuadratureOutcome> {
    if !alpha.is_finite() {
        return Err(Error::DomainAlpha(alpha));
    }
    if !check_spectrum(m).admissible {
        return Err(Error::InadmissibleSpectrum);
    }
    let (mut whole, mut frac) = split_exponent(alpha);
    if frac >= 1.0 {
        whole += 1.0;
        frac = 0.0;
    }
    let whole_power = integer_power(m, whole)?;
    if frac == 0.0 {
        return Ok(QuadratureOutcome { matrix: whole_power, error_estimate: 0.0, nodes: 0 });
    }
    let fractional = balakrishnan_power_detailed(m, frac, cfg)?;
    Ok(QuadratureOutcome { matrix: mat_mul(&whole_power, &fractional.matrix), ..fractional })
}

/// `(λI + A(n̂, π/2))⁻¹` in closed form, for `λ ≥ 0`.
#[rustfmt::skip]
pub fn resolvent_quarter_turn(axis: UnitAxis, lambda: f64) -> Mat3 {
    let [a, b, c] = axis.components();
    let l = lambda;
    let (p, q, d) = (1.0 - l, 1.0 + l, l * (1.0 + l));
    Mat3::from_rows([
        [a * a * p + d,     a * b * p + c * q, a * c * p - b * q],
        [a * b * p - c * q, b * b * p + d,     b * c * p + a * q],
        [a * c * p + b * q, b * c * p - a * q, c * c * p + d],
    ])
    .scale(1.0 / ((l + 1.0) * (l * l + 1.0)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub level: u32,
    pub nodes: usize,
    pub error: f64,
}

/// Error of the quadrature at each level against the eigendecomposition oracle.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConvergenceReport {
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    pub fn final_error(&self) -> Option<f64> {
        self.rows.last().map(|r| r.error)
    }
}

pub fn convergence_study(m: &Mat3, alpha: f64, levels: &[u32]) -> Result<ConvergenceReport> {
    convergence_study_with(m, alpha, levels, QuadratureMethod::DoubleExponential)
}

pub fn convergence_study_with(
    m: &Mat3,
    alpha: f64,
    levels: &[u32],
    method: QuadratureMethod,
) -> Result<ConvergenceReport> {
    if levels.is_empty() {
        return Err(Error::InvalidArgument("levels must be nonempty".into()));
    }
    if levels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("levels must be strictly increasing".into()));
    }
    let reference = eig_power_oracle(m, alpha)?;
    let mut rows = Vec::with_capacity(levels.len());
    for &level in levels {
        // validates the level for this method
        QuadratureConfig::new(method, level, QuadratureConfig::DEFAULT_TOLERANCE)?;
        let outcome = integrate(m, alpha, method, level)?;
        rows.push(ConvergenceRow { level, nodes: outcome.nodes, error: outcome.matrix.distance(&reference) });
    }
    Ok(ConvergenceReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::{frac_power_closed, quarter_turn, rodrigues};
    use std::f64::consts::{FRAC_PI_2, SQRT_2};

    fn az() -> Mat3 {
        quarter_turn(UnitAxis::z()).into_matrix()
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::new(QuadratureMethod::DoubleExponential, 0, 1e-10).is_err());
        assert!(QuadratureConfig::new(QuadratureMethod::DoubleExponential, 5, 0.0).is_err());
        assert!(QuadratureConfig::new(QuadratureMethod::GaussLegendreSplit, 64, 1e-6).is_ok());
        let d = QuadratureConfig::default();
        assert_eq!((d.method(), d.level(), d.abs_tolerance()), (QuadratureMethod::DoubleExponential, 7, 1e-10));
    }

    #[test]
    fn engine_matches_closed_form_square_root() {
        let got = balakrishnan_power(&az(), 0.5, &QuadratureConfig::default()).unwrap();
        let closed = frac_power_closed(UnitAxis::z(), 0.5).unwrap().into_matrix();
        assert!(got.distance(&closed) < 1e-10, "{}", got.distance(&closed));
    }

    #[test]
    fn engine_scalar_square_root() {
        let got = balakrishnan_power(&Mat3::identity().scale(2.0), 0.5, &QuadratureConfig::default()).unwrap();
        assert!(got.distance(&Mat3::identity().scale(SQRT_2)) < 1e-13);
    }

    #[test]
    fn engine_rejects_bad_inputs() {
        let cfg = QuadratureConfig::default();
        assert_eq!(balakrishnan_power(&az(), 1.5, &cfg), Err(Error::DomainAlpha(1.5)));
        assert_eq!(balakrishnan_power(&az(), 0.0, &cfg), Err(Error::DomainAlpha(0.0)));
        assert_eq!(balakrishnan_power(&az(), 1.0, &cfg), Err(Error::DomainAlpha(1.0)));
        assert_eq!(balakrishnan_power(&Mat3::identity().scale(-1.0), 0.5, &cfg), Err(Error::InadmissibleSpectrum));
    }

    #[test]
    fn engine_reports_non_convergence() {
        let cfg = QuadratureConfig::new(QuadratureMethod::DoubleExponential, 2, 1e-12).unwrap();
        let err = balakrishnan_power(&az(), 0.5, &cfg).unwrap_err();
        assert!(matches!(err, Error::QuadratureNotConverged { .. }), "{err:?}");
    }

    #[test]
    fn gauss_legendre_split_converges() {
        let cfg = QuadratureConfig::new(QuadratureMethod::GaussLegendreSplit, 200, 1e-6).unwrap();
        let closed = frac_power_closed(UnitAxis::z(), 0.5).unwrap().into_matrix();
        let out = balakrishnan_power_detailed(&az(), 0.5, &cfg).unwrap();
        assert!(out.matrix.distance(&closed) < 1e-8, "{}", out.matrix.distance(&closed));
        assert_eq!(out.nodes, 400);
    }

    #[test]
    fn real_power_examples() {
        let cfg = QuadratureConfig::default();
        let z = UnitAxis::z();
        let got = real_power(&az(), 2.5, &cfg).unwrap();
        assert!(got.distance(rodrigues(z, 2.5 * FRAC_PI_2).matrix()) < 1e-9);

        let m = Mat3::from_row_major([2.0, 0.5, 0.0, -0.3, 1.5, 0.2, 0.1, 0.0, 3.0]);
        let cube = real_power(&m, 3.0, &cfg).unwrap();
        assert_eq!(cube, mat_mul(&mat_mul(&m, &m), &m));

        let plus = real_power(&az(), 0.5, &cfg).unwrap();
        let minus = real_power(&az(), -0.5, &cfg).unwrap();
        assert!(mat_mul(&plus, &minus).distance(&Mat3::identity()) < 1e-9);
    }

    #[test]
    fn real_power_endpoints_bypass_quadrature() {
        let cfg = QuadratureConfig::default();
        let out = real_power_detailed(&az(), 0.0, &cfg).unwrap();
        assert_eq!((out.matrix, out.nodes), (Mat3::identity(), 0));
        let out = real_power_detailed(&az(), 1.0, &cfg).unwrap();
        assert_eq!((out.matrix, out.nodes), (az(), 0));
        // frac rounds to 1 for tiny negative exponents
        let out = real_power_detailed(&az(), -1e-20, &cfg).unwrap();
        assert_eq!(out.matrix, Mat3::identity());
    }

    #[test]
    fn integer_power_large_exponent() {
        let a = az();
        let p = integer_power(&a, 401.0).unwrap();
        assert!(p.distance(&a) < 1e-12);
        let p = integer_power(&a, -401.0).unwrap();
        assert!(p.distance(&a.transpose()) < 1e-12);
        assert!(matches!(integer_power(&Mat3::from_rows([[1.0; 3]; 3]), -1.0), Err(Error::SingularMatrix { .. })));
    }

    #[test]
    fn resolvent_examples() {
        let z = UnitAxis::z();
        let expected = Mat3::from_rows([[0.5, 0.5, 0.0], [-0.5, 0.5, 0.0], [0.0, 0.0, 0.5]]);
        assert!(resolvent_quarter_turn(z, 1.0).distance(&expected) < 1e-16);
        assert!(resolvent_quarter_turn(z, 1.0).distance(&inverse3(&(Mat3::identity() + az())).unwrap()) < 1e-15);

        let n = UnitAxis::new(0.4, -0.8, 0.2).unwrap();
        let a = quarter_turn(n).into_matrix();
        for lambda in [0.0, 0.1, 1.0, 10.0, 1000.0] {
            let r = resolvent_quarter_turn(n, lambda);
            let p = mat_mul(&(Mat3::identity().scale(lambda) + a), &r);
            assert!(p.distance(&Mat3::identity()) < 1e-12, "lambda={lambda}");
        }
        assert!(resolvent_quarter_turn(n, 0.0).distance(&a.transpose()) < 1e-15);
    }

    #[test]
    fn convergence_study_examples() {
        let levels: Vec<u32> = (3..=8).collect();
        let report = convergence_study(&az(), 0.5, &levels).unwrap();
        assert_eq!(report.rows.len(), 6);
        assert!(report.rows.windows(2).all(|w| w[0].nodes < w[1].nodes));
        assert!(report.final_error().unwrap() < 1e-10);
        assert!(report.rows[0].error > report.final_error().unwrap());

        let single = convergence_study(&az(), 0.5, &[QuadratureConfig::DEFAULT_LEVEL]).unwrap();
        let headline = balakrishnan_power(&az(), 0.5, &QuadratureConfig::default()).unwrap();
        let oracle = eig_power_oracle(&az(), 0.5).unwrap();
        assert_eq!(single.rows.len(), 1);
        assert_eq!(single.rows[0].error, headline.distance(&oracle));

        let report = convergence_study(&Mat3::identity(), 0.5, &levels).unwrap();
        assert!(report.rows.iter().all(|r| r.error < 1e-14), "{report:?}");
    }

    #[test]
    fn convergence_study_rejects_bad_levels() {
        assert!(convergence_study(&az(), 0.5, &[]).is_err());
        assert!(convergence_study(&az(), 0.5, &[4, 4]).is_err());
        assert!(convergence_study(&az(), 0.5, &[5, 3]).is_err());
    }
}
