//! Scalar arithmetic entry point and on-shell four-momenta.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Real, ScalarExt, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Unary; the second operand is ignored.
    Conj,
}

pub fn scalar_arith<R: Real>(a: &Complex<R>, b: &Complex<R>, op: ArithOp) -> Result<Complex<R>> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
        ArithOp::Conj => a.conj(),
    })
}

/// A four-momentum `p^mu = (p0, p1, p2, p3)` carried together with its mass.
///
/// Values built through [`mass_shell_energy`] or [`OnShellMomentum::try_new`]
/// satisfy `p0^2 = |p|^2 + m^2`; [`OnShellMomentum::unchecked`] exists so
/// callers can probe off-shell behaviour.
#[derive(Debug, Clone, PartialEq)]
pub struct OnShellMomentum<R: Real> {
    components: [R; 4],
    mass: R,
}

impl<R: Real> OnShellMomentum<R> {
    pub fn try_new(p0: R, spatial: [R; 3], mass: R, tol: Tolerance) -> Result<Self> {
        if mass.is_negative() {
            return Err(Error::NegativeMass(mass.render()));
        }
        let [p1, p2, p3] = spatial;
        let p = OnShellMomentum { components: [p0, p1, p2, p3], mass };
        if !p.is_on_shell(tol) {
            return Err(Error::OffShellMomentum {
                p_squared: p.square().render(),
                m_squared: (p.mass.clone() * p.mass.clone()).render(),
            });
        }
        Ok(p)
    }

    pub fn unchecked(p0: R, spatial: [R; 3], mass: R) -> Self {
        let [p1, p2, p3] = spatial;
        OnShellMomentum { components: [p0, p1, p2, p3], mass }
    }

    pub fn p0(&self) -> &R {
        &self.components[0]
    }

    /// Contravariant component `p^mu` (real).
    pub fn component(&self, mu: usize) -> &R {
        &self.components[mu]
    }

    pub fn spatial(&self) -> [R; 3] {
        [self.components[1].clone(), self.components[2].clone(), self.components[3].clone()]
    }

    pub fn mass(&self) -> &R {
        &self.mass
    }

    pub fn is_exact(&self) -> bool {
        R::EXACT
    }

    /// `p^mu` as complex scalars.
    pub fn upper(&self) -> [Complex<R>; 4] {
        std::array::from_fn(|mu| Complex::real(self.components[mu].clone()))
    }

    /// `p_mu = g_{mu nu} p^nu` with g = diag(+,-,-,-).
    pub fn lower(&self) -> [Complex<R>; 4] {
        std::array::from_fn(|mu| {
            let c = Complex::real(self.components[mu].clone());
            if mu == 0 {
                c
            } else {
                -c
            }
        })
    }

    /// Minkowski square `p0^2 - |p|^2`.
    pub fn square(&self) -> R {
        let [p0, p1, p2, p3] = &self.components;
        p0.clone() * p0.clone() - p1.clone() * p1.clone() - p2.clone() * p2.clone() - p3.clone() * p3.clone()
    }

    pub fn is_on_shell(&self, tol: Tolerance) -> bool {
        let lhs = Complex::real(self.square());
        let rhs = Complex::real(self.mass.clone() * self.mass.clone());
        R::close(&lhs, &rhs, tol)
    }

    /// `p_r = p1 + i p2`.
    pub fn p_r(&self) -> Complex<R> {
        Complex::new(self.components[1].clone(), self.components[2].clone())
    }

    /// `p_l = p1 - i p2`.
    pub fn p_l(&self) -> Complex<R> {
        Complex::new(self.components[1].clone(), -self.components[2].clone())
    }

    /// `p0 + m`.
    pub fn energy_plus_mass(&self) -> R {
        self.components[0].clone() + self.mass.clone()
    }

    /// Stable textual key used to order per-momentum results.
    pub fn key(&self) -> String {
        format!(
            "({},{},{};m={})",
            self.components[1].render(),
            self.components[2].render(),
            self.components[3].render(),
            self.mass.render()
        )
    }
}

impl OnShellMomentum<BigRational> {
    pub fn to_field<S: Real>(&self) -> OnShellMomentum<S> {
        OnShellMomentum {
            components: std::array::from_fn(|mu| S::from_big_ratio(&self.components[mu])),
            mass: S::from_big_ratio(&self.mass),
        }
    }
}

/// Builds the positive-energy on-shell momentum `p0 = +sqrt(|p|^2 + m^2)`.
///
/// In an exact field this only succeeds when the radicand is a rational square.
pub fn mass_shell_energy<R: Real>(spatial: [R; 3], mass: R) -> Result<OnShellMomentum<R>> {
    if mass.is_negative() {
        return Err(Error::NegativeMass(mass.render()));
    }
    let radicand = spatial.iter().fold(mass.clone() * mass.clone(), |acc, p| acc + p.clone() * p.clone());
    let p0 = radicand.sqrt_checked().ok_or_else(|| Error::NotExactlyOnShell { radicand: radicand.render() })?;
    let [p1, p2, p3] = spatial;
    Ok(OnShellMomentum { components: [p0, p1, p2, p3], mass })
}

/// Every integer `(p1, p2, p3, m)` with `p_i` in `[-bound, bound]` and `m` in
/// `[0, bound]` whose energy is an integer, in lexicographic order. The null
/// momentum (zero spatial part with `m = 0`) is excluded.
pub fn pythagorean_momenta(bound: u32) -> Vec<OnShellMomentum<BigRational>> {
    let b = i64::from(bound);
    let mut out = Vec::new();
    for p1 in -b..=b {
        for p2 in -b..=b {
            for p3 in -b..=b {
                for m in 0..=b {
                    let radicand = p1 * p1 + p2 * p2 + p3 * p3 + m * m;
                    if radicand == 0 {
                        continue;
                    }
                    let root = radicand.sqrt();
                    if root * root != radicand {
                        continue;
                    }
                    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
                    out.push(OnShellMomentum { components: [q(root), q(p1), q(p2), q(p3)], mass: q(m) });
                }
            }
        }
    }
    out
}

/// A deterministic spread of massive, moving Pythagorean momenta used as the
/// default sample set for linear-map comparisons.
pub fn sample_momenta(count: usize) -> Vec<OnShellMomentum<BigRational>> {
    let pool: Vec<_> = pythagorean_momenta(4)
        .into_iter()
        .filter(|p| !p.mass().is_zero() && p.spatial().iter().filter(|c| !c.is_zero()).count() >= 2)
        .collect();
    if count == 0 || pool.is_empty() {
        return Vec::new();
    }
    let count = count.min(pool.len());
    (0..count).map(|k| pool[k * pool.len() / count].clone()).collect()
}
