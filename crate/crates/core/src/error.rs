use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("|p|^2 + m^2 = {radicand} is not the square of a rational; use approx mode or a Pythagorean sample")]
    NotExactlyOnShell { radicand: String },
    #[error("momentum is off shell: p^2 = {p_squared}, m^2 = {m_squared}")]
    OffShellMomentum { p_squared: String, m_squared: String },
    #[error("mass must be non-negative, got {0}")]
    NegativeMass(String),
    #[error("mass must be positive for this operation")]
    MasslessSingular,
    #[error("gamma representation invalid: {0}")]
    RepresentationInvalid(String),
    #[error("invalid expansion: {0}")]
    InvalidExpansion(String),
    #[error("invalid field configuration: {0}")]
    InvalidField(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
