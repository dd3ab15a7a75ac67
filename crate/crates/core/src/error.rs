use thiserror::Error;

/// Errors produced by the rotation and fractional-power routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is singular (|det| = {det:e})")]
    SingularMatrix { det: f64 },

    #[error("exponent {0} is outside the supported domain")]
    DomainAlpha(f64),

    #[error("spectrum touches the closed negative real axis")]
    InadmissibleSpectrum,

    #[error("quadrature did not converge: estimate {estimate:e} exceeds tolerance {tolerance:e}")]
    QuadratureNotConverged { estimate: f64, tolerance: f64 },

    #[error("angle {0} is outside the principal logarithm domain |theta| < pi")]
    OutOfPrincipalDomain(f64),

    #[error("matrix is not a rotation (orthogonality defect {orthogonality:e}, det {det})")]
    NotARotation { orthogonality: f64, det: f64 },

    #[error("eigenvector basis is degenerate (condition estimate {condition:e})")]
    DegenerateEigenbasis { condition: f64 },

    #[error("imaginary residue {0:e} after recombination exceeds 1e-10")]
    ImaginaryResidue(f64),

    #[error("axis norm {0:e} is too small to normalize")]
    DegenerateAxis(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::DomainAlpha(_) => "DomainAlpha",
            Error::InadmissibleSpectrum => "InadmissibleSpectrum",
            Error::QuadratureNotConverged { .. } => "QuadratureNotConverged",
            Error::OutOfPrincipalDomain(_) => "OutOfPrincipalDomain",
            Error::NotARotation { .. } => "NotARotation",
            Error::DegenerateEigenbasis { .. } => "DegenerateEigenbasis",
            Error::ImaginaryResidue(_) => "ImaginaryResidue",
            Error::DegenerateAxis(_) => "DegenerateAxis",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
