//! Exact engine for the Bargmann-Wigner construction of massive spin-1 and
//! spin-2 field equations built on a reflection-operator symmetric multispinor.

pub mod bw;
pub mod clifford;
pub mod error;
pub mod fields;
pub mod lorentz;
pub mod numeric;
pub mod polarization;
pub mod proca;
pub mod residual;
pub mod scalar;
pub mod spin2;

pub use num_complex::Complex;
pub use num_rational::BigRational;

pub use error::{Error, Result};
pub use scalar::{Real, ScalarExt, Tolerance};

pub type ExactReal = BigRational;
pub type ExactScalar = Complex<BigRational>;
pub type ApproxScalar = Complex<f64>;
pub type ExactMatrix = clifford::Matrix4<BigRational>;
pub type ExactBasis = clifford::GammaBasis<BigRational>;
pub type ExactMomentum = numeric::OnShellMomentum<BigRational>;
pub type ApproxMomentum = numeric::OnShellMomentum<f64>;
