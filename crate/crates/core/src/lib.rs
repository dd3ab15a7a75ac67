//! Three-dimensional rotations as fractional powers of the quarter-turn matrix.
//!
//! The rotation by `θ` about a unit axis `n̂` is `A(n̂, π/2)^(2θ/π)`. This crate
//! builds it three ways and checks that they agree:
//!
//! - closed forms in [`rotation`] (Euler–Rodrigues, the explicit fractional
//!   power, the generator and its exponential),
//! - the Balakrishnan integral evaluated by quadrature in [`fracpow`],
//! - a complex eigendecomposition oracle, also in [`fracpow`].
//!
//! [`verify`] bundles the identities relating them into runnable suites.

// `!(x <= bound)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fracpow;
pub mod linalg3;
pub mod rotation;
pub mod verify;

pub use error::{Error, Result};
pub use fracpow::{
    balakrishnan_power, check_spectrum, convergence_study, eig_power_oracle, real_power, resolvent_quarter_turn,
    ConvergenceReport, QuadratureConfig, QuadratureMethod, SpectrumCheck,
};
pub use linalg3::{cross, det3, inverse3, mat_exp, mat_mul, Mat3, Vec3};
pub use num_complex::Complex64;
pub use rotation::{
    axis_angle_from_matrix, frac_power_closed, generator, interpolate, log_rotation, quarter_turn, rodrigues,
    rotate_vector, rotation_of, semigroup, Angle, Rotation, UnitAxis,
};
