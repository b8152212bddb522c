use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The requested point is a pole (or the excluded discontinuity) of the function.
    #[error("pole: {0}")]
    Pole(String),
    /// Argument outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A series could not certify the requested tolerance within its term cap.
    #[error("convergence error: {0}")]
    Convergence(String),
    /// The contour geometry does not admit a continuous branch of `arg t`.
    #[error("branch error: {0}")]
    Branch(String),
    /// Quadrature refinement or leg truncation could not meet the tolerance.
    #[error("quadrature error: {0}")]
    Quadrature(String),
    /// A numeric invariant failed at runtime (non-finite value, spurious imaginary part).
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("cancelled")]
    Cancelled,
}

impl Error {
    /// True for errors caused by the caller's input rather than by numerics.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Pole(_) | Error::Domain(_) | Error::Branch(_))
    }
}

pub(crate) fn finite(value: num_complex::Complex64, what: &str) -> Result<num_complex::Complex64> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Numerical(format!("{what} produced a non-finite value {value}")))
    }
}
