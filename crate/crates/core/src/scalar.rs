//! Scalar fields the engine is generic over.
//!
//! Every computation is written against [`Real`], the real field underlying
//! the complex scalars `Complex<R>`. Two families are provided: the exact
//! field `BigRational` (Gaussian rationals once complexified) and IEEE
//! floats, which compare through a [`Tolerance`].

use std::fmt::{self, Debug};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// Relative tolerance used when comparing floating-point scalars.
///
/// Two values agree when `|x - y| <= eps * max(1, |x|, |y|)`. Exact fields
/// ignore it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(pub f64);

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(1e-12)
    }
}

impl Tolerance {
    pub const EXACT: Tolerance = Tolerance(0.0);
}

/// A real field usable as the component type of the engine's complex scalars.
pub trait Real: Clone + Debug + PartialOrd + Num + Signed + Send + Sync + 'static {
    /// `true` when arithmetic never rounds.
    const EXACT: bool;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_big_ratio(value: &BigRational) -> Self;

    fn to_f64(&self) -> f64;

    /// Square root when it exists in the field: perfect rational squares for
    /// exact fields, any non-negative value for floats.
    fn sqrt_checked(&self) -> Option<Self>;

    /// Compares two complex values under `tol` (exact fields use equality).
    fn close(a: &Complex<Self>, b: &Complex<Self>, tol: Tolerance) -> bool;

    fn render(&self) -> String;

    fn from_int(value: i64) -> Self {
        Self::from_ratio(value, 1)
    }
}

impl Real for BigRational {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_big_ratio(value: &BigRational) -> Self {
        value.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sqrt_checked(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let num = exact_isqrt(self.numer())?;
        let den = exact_isqrt(self.denom())?;
        Some(BigRational::new(num, den))
    }

    fn close(a: &Complex<Self>, b: &Complex<Self>, _tol: Tolerance) -> bool {
        a == b
    }

    fn render(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

fn exact_isqrt(value: &BigInt) -> Option<BigInt> {
    let root = value.sqrt();
    (&root * &root == *value).then_some(root)
}

macro_rules! impl_float_real {
    ($f:ty) => {
        impl Real for $f {
            const EXACT: bool = false;

            fn from_ratio(num: i64, den: i64) -> Self {
                num as $f / den as $f
            }

            fn from_big_ratio(value: &BigRational) -> Self {
                ToPrimitive::to_f64(value).unwrap_or(f64::NAN) as $f
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn sqrt_checked(&self) -> Option<Self> {
                (*self >= 0.0).then(|| self.sqrt())
            }

            fn close(a: &Complex<Self>, b: &Complex<Self>, tol: Tolerance) -> bool {
                let scale = 1.0_f64.max(a.norm() as f64).max(b.norm() as f64);
                ((a - b).norm() as f64) <= tol.0 * scale
            }

            fn render(&self) -> String {
                format!("{:e}", self)
            }
        }
    };
}

impl_float_real!(f32);
impl_float_real!(f64);

/// Convenience constructors and queries on `Complex<R>`.
pub trait ScalarExt<R: Real>: Sized {
    fn real(value: R) -> Self;
    fn int(value: i64) -> Self;
    fn ratio(num: i64, den: i64) -> Self;
    fn imag_unit() -> Self;
    fn modulus_f64(&self) -> f64;
    fn is_negligible(&self, tol: Tolerance) -> bool;
    fn render(&self) -> String;
}

impl<R: Real> ScalarExt<R> for Complex<R> {
    fn real(value: R) -> Self {
        Complex::new(value, R::zero())
    }

    fn int(value: i64) -> Self {
        Complex::new(R::from_int(value), R::zero())
    }

    fn ratio(num: i64, den: i64) -> Self {
        Complex::new(R::from_ratio(num, den), R::zero())
    }

    fn imag_unit() -> Self {
        Complex::new(R::zero(), R::one())
    }

    fn modulus_f64(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    fn is_negligible(&self, tol: Tolerance) -> bool {
        R::close(self, &Complex::zero(), tol)
    }

    /// Renders as `a/b+c/d i`, dropping zero parts.
    fn render(&self) -> String {
        let re_zero = self.re.is_zero();
        let im_zero = self.im.is_zero();
        match (re_zero, im_zero) {
            (_, true) => self.re.render(),
            (true, false) => format!("{} i", self.im.render()),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                format!("{}{}{} i", self.re.render(), sign, self.im.abs().render())
            }
        }
    }
}

/// Display adapter for complex scalars in the engine's `a/b+c/d i` format.
pub struct Rendered<'a, R: Real>(pub &'a Complex<R>);

impl<R: Real> fmt::Display for Rendered<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render())
    }
}

/// Converts an exact scalar into any other field.
pub fn convert_scalar<R: Real>(value: &Complex<BigRational>) -> Complex<R> {
    Complex::new(R::from_big_ratio(&value.re), R::from_big_ratio(&value.im))
}

/// Exact rational from a machine integer pair; panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> BigRational {
    <BigRational as Real>::from_ratio(num, den)
}

/// `true` when `value` is exactly one in the exact field.
pub fn is_exact_one(value: &Complex<BigRational>) -> bool {
    value.re.is_one() && value.im.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_detects_perfect_squares() {
        assert_eq!(rational(25, 4).sqrt_checked(), Some(rational(5, 2)));
        assert_eq!(rational(3, 1).sqrt_checked(), None);
        assert_eq!(rational(-4, 1).sqrt_checked(), None);
    }

    #[test]
    fn render_formats() {
        let c = Complex::new(rational(1, 2), rational(-3, 4));
        assert_eq!(c.render(), "1/2-3/4 i");
        let c = Complex::new(rational(0, 1), rational(41, 36));
        assert_eq!(c.render(), "41/36 i");
        let c = Complex::new(rational(5, 1), rational(0, 1));
        assert_eq!(c.render(), "5");
    }

    #[test]
    fn float_closeness_is_relative() {
        let a = Complex::new(1.0e6_f64, 0.0);
        let b = Complex::new(1.0e6_f64 + 1.0e-7, 0.0);
        assert!(f64::close(&a, &b, Tolerance::default()));
        let c = Complex::new(1.0e6_f64 + 1.0, 0.0);
        assert!(!f64::close(&a, &c, Tolerance::default()));
    }
}
