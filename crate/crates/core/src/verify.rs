//! Property suites relating the closed forms, the quadrature engine, the
//! eigendecomposition oracle and the matrix exponential.
//!
//! Each property compares a closed form against a route that does not share its
//! code path, so flipping a single sign in any closed form makes at least one
//! property fail. The closed forms are reached through [`ClosedForms`] so that
//! alternative (for example deliberately corrupted) implementations can be run
//! through the same suites.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::fracpow::{
    self, balakrishnan_power, convergence_study, eig_power_oracle_detailed, real_power, QuadratureConfig,
};
use crate::linalg3::{mat_exp, mat_mul, Mat3, Vec3};
use crate::rotation::{self, canonical_axis_angle, compose_quarter_powers, split_exponent, UnitAxis};

/// Seed for every pseudo-random sample drawn by the suites.
pub const SEED: u64 = 0x5eed_2024;

/// Which group of properties to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Rotation,
    Fracpow,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "rotation" => Ok(Suite::Rotation),
            "fracpow" => Ok(Suite::Fracpow),
            other => Err(format!("unknown suite `{other}` (expected all, rotation or fracpow)")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Rotation => "rotation",
            Suite::Fracpow => "fracpow",
        })
    }
}

/// The closed-form constructions under test.
pub trait ClosedForms {
    fn quarter_turn(&self, axis: UnitAxis) -> Mat3 {
        rotation::quarter_turn(axis).into_matrix()
    }

    fn rodrigues(&self, axis: UnitAxis, theta: f64) -> Mat3 {
        rotation::rodrigues(axis, theta).into_matrix()
    }

    fn frac_power_closed(&self, axis: UnitAxis, alpha: f64) -> Result<Mat3> {
        rotation::frac_power_closed(axis, alpha).map(|r| r.into_matrix())
    }

    fn generator(&self, axis: UnitAxis) -> Mat3 {
        rotation::generator(axis)
    }

    fn semigroup(&self, axis: UnitAxis, t: f64) -> Mat3 {
        rotation::semigroup(axis, t)
    }

    fn resolvent_quarter_turn(&self, axis: UnitAxis, lambda: f64) -> Mat3 {
        fracpow::resolvent_quarter_turn(axis, lambda)
    }

    /// Composed from this implementation's quarter turn and fractional power.
    fn rotation_of(&self, axis: UnitAxis, theta: f64) -> Result<Mat3> {
        let (whole, frac) = split_exponent(2.0 * theta / PI);
        let fractional = self.frac_power_closed(axis, frac)?;
        Ok(compose_quarter_powers(&self.quarter_turn(axis), whole, &fractional))
    }

    fn log_rotation(&self, axis: UnitAxis, theta: f64) -> Result<Mat3> {
        rotation::log_rotation(axis, theta)?;
        Ok(self.generator(axis).scale(theta))
    }
}

/// The crate's own closed forms.
#[derive(Debug, Clone, Copy, Default)]
pub struct Reference;

impl ClosedForms for Reference {}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub suite: Suite,
    pub name: &'static str,
    pub max_error: f64,
    pub bound: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub results: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

/// The 17 axes used by every grid: the three coordinate axes, three face
/// diagonals, three body diagonals and eight seeded pseudo-random directions.
pub fn test_axes() -> Vec<UnitAxis> {
    let fixed = [
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, 0.0, 1.0],
        [1.0, 1.0, 0.0],
        [0.0, 1.0, 1.0],
        [1.0, 0.0, 1.0],
        [1.0, 1.0, 1.0],
        [1.0, -1.0, 1.0],
        [-1.0, 1.0, 1.0],
    ];
    let mut axes: Vec<UnitAxis> = fixed.iter().map(|v| UnitAxis::new(v[0], v[1], v[2]).expect("nonzero")).collect();
    axes.extend(seeded_unit_vectors(SEED, 8).into_iter().map(|v| UnitAxis::from_vec(v).expect("unit")));
    axes
}

/// `count` pseudo-random unit vectors, uniform on the sphere, from `seed`.
pub fn seeded_unit_vectors(seed: u64, count: usize) -> Vec<Vec3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            out.push(v.scale(1.0 / n));
        }
    }
    out
}

/// `θ = k π/32` for `k = -128..=128`.
pub fn full_range_angles() -> Vec<f64> {
    (-128..=128).map(|k| k as f64 * PI / 32.0).collect()
}

/// Runs the crate's own closed forms through `suite`.
pub fn verify(suite: Suite, tol: f64) -> VerifyReport {
    verify_with(&Reference, suite, tol)
}

pub fn verify_with(forms: &dyn ClosedForms, suite: Suite, tol: f64) -> VerifyReport {
    let mut report = VerifyReport::default();
    if matches!(suite, Suite::All | Suite::Rotation) {
        rotation_suite(forms, tol, &mut report);
    }
    if matches!(suite, Suite::All | Suite::Fracpow) {
        fracpow_suite(forms, tol, &mut report);
    }
    report
}

/// Running maximum that treats NaN as +∞.
#[derive(Default)]
struct MaxErr(f64);

impl MaxErr {
    fn add(&mut self, e: f64) {
        self.0 = if e.is_nan() { f64::INFINITY } else { self.0.max(e) };
    }

    fn add_result(&mut self, r: Result<f64>) {
        self.add(r.unwrap_or(f64::INFINITY));
    }
}

fn push(report: &mut VerifyReport, suite: Suite, name: &'static str, max: MaxErr, bound: f64) {
    report.results.push(PropertyResult { suite, name, max_error: max.0, bound, passed: max.0 <= bound });
}

fn rotation_defect(m: &Mat3) -> f64 {
    mat_mul(&m.transpose(), m).distance(&Mat3::identity()).max((m.det() - 1.0).abs())
}

fn rotation_suite(forms: &dyn ClosedForms, tol: f64, report: &mut VerifyReport) {
    let s = Suite::Rotation;
    let axes = test_axes();
    let angles = full_range_angles();
    let fractions: Vec<f64> = (0..=64).map(|k| k as f64 / 64.0).collect();

    let mut e = MaxErr::default();
    for &n in &axes {
        e.add(forms.quarter_turn(n).distance(&forms.rodrigues(n, FRAC_PI_2)));
        e.add(rotation_defect(&forms.quarter_turn(n)));
    }
    push(report, s, "quarter-turn-vs-rodrigues", e, tol);

    let mut e = MaxErr::default();
    for &n in &axes {
        for &a in &fractions {
            e.add_result(forms.frac_power_closed(n, a).map(|m| m.distance(&forms.rodrigues(n, a * FRAC_PI_2))));
        }
    }
    push(report, s, "fractional-power-vs-rodrigues", e, tol);

    let mut e = MaxErr::default();
    for &n in &axes {
        for &a in &fractions {
            let neg = forms.frac_power_closed(n, -a);
            let pos = forms.frac_power_closed(n, a);
            e.add_result(neg.as_ref().map(|m| m.distance(&forms.rodrigues(n, -a * FRAC_PI_2))).map_err(Clone::clone));
            e.add_result(neg.and_then(|m| pos.map(|p| m.distance(&p.transpose()))));
        }
    }
    push(report, s, "negative-power-display", e, tol);

    let mut e = MaxErr::default();
    let mut defect = MaxErr::default();
    let mut fixed = MaxErr::default();
    let mut trace = MaxErr::default();
    for &n in &axes {
        for &theta in &angles {
            match forms.rotation_of(n, theta) {
                Ok(r) => {
                    e.add(r.distance(&forms.rodrigues(n, theta)));
                    defect.add(rotation_defect(&r));
                    defect.add(rotation_defect(&forms.rodrigues(n, theta)));
                    fixed.add((r.mul_vec(n.vec()) - n.vec()).norm());
                    trace.add((r.trace() - (1.0 + 2.0 * theta.cos())).abs());
                }
                Err(_) => [&mut e, &mut defect, &mut fixed, &mut trace].into_iter().for_each(|m| m.add(f64::INFINITY)),
            }
        }
    }
    push(report, s, "full-range-vs-rodrigues", e, tol);
    push(report, s, "orthogonality-and-determinant", defect, tol);
    push(report, s, "axis-is-fixed", fixed, tol);
    push(report, s, "trace-identity", trace, tol);

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut e = MaxErr::default();
    for i in 0..100 {
        let n = axes[i % axes.len()];
        let t1: f64 = rng.gen_range(-4.0 * PI..4.0 * PI);
        let t2: f64 = rng.gen_range(-4.0 * PI..4.0 * PI);
        let composed = forms.rotation_of(n, t1).and_then(|a| forms.rotation_of(n, t2).map(|b| mat_mul(&a, &b)));
        e.add_result(composed.and_then(|c| forms.rotation_of(n, t1 + t2).map(|d| c.distance(&d))));
    }
    push(report, s, "group-law", e, tol);

    // ‖(A(h)u - u)/h - Gu‖ / h, bounded by 1 independently of --tol
    let units = seeded_unit_vectors(SEED ^ 1, 10);
    let mut e = MaxErr::default();
    let mut skew = MaxErr::default();
    for &n in &axes {
        let g = forms.generator(n);
        skew.add((g + g.transpose()).max_abs());
        for &u in &units {
            skew.add((g.mul_vec(u) - n.vec().cross(u)).norm());
            for h in [1e-2, 1e-3, 1e-4, 1e-5] {
                let r = forms.rotation_of(n, h).map(|a| {
                    let quotient = (a.mul_vec(u) - u).scale(1.0 / h);
                    (quotient - g.mul_vec(u)).norm() / h
                });
                e.add_result(r);
            }
        }
    }
    push(report, s, "generator-difference-quotient", e, 1.0);
    push(report, s, "generator-is-cross-product", skew, tol);

    let mut e = MaxErr::default();
    for &n in &axes {
        for k in -20..=20 {
            let theta = k as f64 * 0.25;
            let g = forms.generator(n);
            e.add_result(forms.rotation_of(n, theta).map(|r| mat_exp(&g.scale(theta)).distance(&r)));
        }
    }
    push(report, s, "exp-of-generator", e, tol);

    let mut e = MaxErr::default();
    let mut axis_scale = MaxErr::default();
    for &n in &axes {
        let q = forms.quarter_turn(n);
        for k in -20..=20 {
            let t = k as f64 * 0.25;
            let closed = forms.semigroup(n, t);
            e.add(closed.distance(&mat_exp(&q.scale(t))));
            let tn = closed.mul_vec(n.vec());
            axis_scale.add((tn - n.vec().scale(t.exp())).norm() / t.exp());
        }
    }
    push(report, s, "semigroup-vs-series", e, tol);
    push(report, s, "semigroup-axis-scaling", axis_scale, tol);

    let mut e = MaxErr::default();
    let mut accepted = MaxErr::default();
    for &n in &axes {
        for k in -12..=12 {
            let theta = k as f64 * 0.25;
            let log = forms.log_rotation(n, theta);
            e.add_result(log.and_then(|l| forms.rotation_of(n, theta).map(|r| mat_exp(&l).distance(&r))));
        }
        for theta in [PI, -PI, PI + 0.5, -4.0, 10.0] {
            accepted.add(if forms.log_rotation(n, theta).is_ok() { 1.0 } else { 0.0 });
        }
    }
    push(report, s, "log-roundtrip", e, tol);
    push(report, s, "log-rejects-cut", accepted, 0.0);

    let mut e = MaxErr::default();
    for &n in &axes {
        let r = forms.rodrigues(n, FRAC_PI_2);
        for &u in &units {
            let u = u.scale(3.0);
            e.add((r.mul_vec(u) - rotation::quarter_turn_vector(n, u)).norm());
        }
    }
    push(report, s, "quarter-turn-vector", e, tol);

    let mut e = MaxErr::default();
    for &n in &axes {
        for &theta in &angles {
            let wrapped = theta.rem_euclid(2.0 * PI);
            if wrapped < 1e-3 || 2.0 * PI - wrapped < 1e-3 {
                continue;
            }
            let (want_axis, want_angle) = canonical_axis_angle(n, theta);
            let got =
                forms.rotation_of(n, theta).and_then(|r| rotation::axis_angle_from_matrix(&r)).map(|(axis, angle)| {
                    let mut d = (axis.vec() - want_axis.vec()).norm();
                    if (want_angle - PI).abs() < 1e-6 {
                        d = d.min((axis.vec() + want_axis.vec()).norm());
                    }
                    d.max((angle.radians() - want_angle).abs())
                });
            e.add_result(got);
        }
    }
    push(report, s, "axis-angle-roundtrip", e, tol);
}

fn fracpow_suite(forms: &dyn ClosedForms, tol: f64, report: &mut VerifyReport) {
    let s = Suite::Fracpow;
    let axes = test_axes();
    let cfg = QuadratureConfig::default();
    let alphas: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();

    let mut engine = MaxErr::default();
    let mut oracle = MaxErr::default();
    let mut pairwise = MaxErr::default();
    let mut residue = MaxErr::default();
    for &n in &axes {
        let q = forms.quarter_turn(n);
        for &a in &alphas {
            let closed = forms.frac_power_closed(n, a);
            let quad = balakrishnan_power(&q, a, &cfg);
            let eig = eig_power_oracle_detailed(&q, a);
            match (&closed, &quad, &eig) {
                (Ok(c), Ok(b), Ok(o)) => {
                    engine.add(b.distance(c));
                    oracle.add(o.matrix.distance(c));
                    pairwise.add(b.distance(&o.matrix));
                    residue.add(o.imag_residue);
                }
                _ => [&mut engine, &mut oracle, &mut pairwise, &mut residue]
                    .into_iter()
                    .for_each(|m| m.add(f64::INFINITY)),
            }
        }
    }
    push(report, s, "engine-vs-closed-form", engine, tol);
    push(report, s, "oracle-vs-closed-form", oracle, tol);
    push(report, s, "engine-vs-oracle", pairwise, tol);
    push(report, s, "oracle-imaginary-residue", residue, tol);

    let mut e = MaxErr::default();
    let z = forms.quarter_turn(UnitAxis::z());
    let levels: Vec<u32> = (3..=8).collect();
    e.add_result(convergence_study(&z, 0.5, &levels).map(|r| r.final_error().unwrap_or(f64::INFINITY)));
    push(report, s, "convergence-final-level", e, tol);

    let probe_axes = [UnitAxis::z(), axes[6], axes[12]];
    let exponents = [-2.0, -1.25, -0.5, 0.0, 0.3, 1.0, 1.75, 2.0];
    let mut e = MaxErr::default();
    for &n in &probe_axes {
        let q = forms.quarter_turn(n);
        for &a in &exponents {
            for &b in &exponents {
                let lhs = real_power(&q, a, &cfg).and_then(|x| real_power(&q, b, &cfg).map(|y| mat_mul(&x, &y)));
                e.add_result(lhs.and_then(|l| real_power(&q, a + b, &cfg).map(|r| l.distance(&r))));
            }
        }
    }
    push(report, s, "exponent-addition", e, tol);

    let mut e = MaxErr::default();
    for &n in &probe_axes {
        let q = forms.quarter_turn(n);
        for a in [0.25, 0.5, 0.75] {
            for b in [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 1.0 / 3.0] {
                let nested = real_power(&q, a, &cfg).and_then(|x| real_power(&x, b, &cfg));
                e.add_result(nested.and_then(|l| real_power(&q, a * b, &cfg).map(|r| l.distance(&r))));
            }
        }
    }
    push(report, s, "exponent-composition", e, tol);

    let mut e = MaxErr::default();
    for &n in &probe_axes {
        let q = forms.quarter_turn(n);
        for a in [1e-3, 1.0 - 1e-3] {
            let c = forms.frac_power_closed(n, a);
            e.add_result(balakrishnan_power(&q, a, &cfg).and_then(|b| c.map(|c| b.distance(&c))));
        }
    }
    push(report, s, "endpoint-continuity", e, 1e-2);

    let mut e = MaxErr::default();
    for &n in &probe_axes {
        let q = forms.quarter_turn(n);
        e.add_result(real_power(&q, 0.0, &cfg).map(|m| m.distance(&Mat3::identity())));
        e.add_result(real_power(&q, 1.0, &cfg).map(|m| m.distance(&q)));
        e.add_result(forms.frac_power_closed(n, 0.0).map(|m| m.distance(&Mat3::identity())));
        e.add_result(forms.frac_power_closed(n, 1.0).map(|m| m.distance(&q)));
    }
    push(report, s, "endpoint-exact", e, tol);

    let mut e = MaxErr::default();
    let lambdas: Vec<f64> = std::iter::once(0.0).chain((-12..=12).map(|k| 10f64.powf(k as f64 * 0.5))).collect();
    for &n in &axes {
        let q = forms.quarter_turn(n);
        for &l in &lambdas {
            let r = forms.resolvent_quarter_turn(n, l);
            e.add(mat_mul(&(Mat3::identity().scale(l) + q), &r).distance(&Mat3::identity()));
        }
    }
    push(report, s, "resolvent-identity", e, tol);

    let mut e = MaxErr::default();
    for &n in &probe_axes {
        let q = forms.quarter_turn(n);
        for k in -9..=9 {
            let theta = k as f64 * 0.7;
            let quad = real_power(&q, 2.0 * theta / PI, &cfg);
            e.add_result(quad.and_then(|m| forms.rotation_of(n, theta).map(|r| m.distance(&r))));
        }
    }
    push(report, s, "engine-vs-rotation-of", e, tol);
}
