//! Spin-1 field configurations and expansion coefficients.

use std::fmt;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lorentz::{is_antisymmetric, zero_grid, zero_vec, Grid, Vec4, PAIRS};
use crate::scalar::Real;

/// Coefficients of the single-mass expansion and the generalized Proca system.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcaCoefficients<R: Real> {
    pub c_a: Complex<R>,
    pub c_f: Complex<R>,
    pub c_big_a: Complex<R>,
    pub c_big_f: Complex<R>,
    pub m: R,
}

impl<R: Real> ProcaCoefficients<R> {
    pub fn new(c_a: Complex<R>, c_f: Complex<R>, c_big_a: Complex<R>, c_big_f: Complex<R>, m: R) -> Self {
        ProcaCoefficients { c_a, c_f, c_big_a, c_big_f, m }
    }

    /// `c_a = 1`, `c_F = 1/2`, the rest zero.
    pub fn classical(m: R) -> Self {
        ProcaCoefficients {
            c_a: Complex::new(R::one(), R::zero()),
            c_f: Complex::zero(),
            c_big_a: Complex::zero(),
            c_big_f: Complex::new(R::from_ratio(1, 2), R::zero()),
            m,
        }
    }
}

/// Coefficients of the two-mass system.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoMassCoefficients<R: Real> {
    pub c1: Complex<R>,
    pub c2: Complex<R>,
    pub m1: R,
    pub m2: R,
}

impl<R: Real> TwoMassCoefficients<R> {
    pub fn new(c1: Complex<R>, c2: Complex<R>, m1: R, m2: R) -> Self {
        TwoMassCoefficients { c1, c2, m1, m2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    SingleMass,
    TwoMass,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExpansionSpec<R: Real> {
    SingleMass(ProcaCoefficients<R>),
    TwoMass(TwoMassCoefficients<R>),
}

impl<R: Real> ExpansionSpec<R> {
    pub fn variant(&self) -> Variant {
        match self {
            ExpansionSpec::SingleMass(_) => Variant::SingleMass,
            ExpansionSpec::TwoMass(_) => Variant::TwoMass,
        }
    }

    /// Rejects negative masses. All-zero coefficient sets are accepted and
    /// yield an empty derived system.
    pub fn validate(&self) -> Result<()> {
        let masses: Vec<&R> = match self {
            ExpansionSpec::SingleMass(c) => vec![&c.m],
            ExpansionSpec::TwoMass(c) => vec![&c.m1, &c.m2],
        };
        match masses.into_iter().find(|m| m.is_negative()) {
            Some(m) => Err(Error::NegativeMass(m.render())),
            None => Ok(()),
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            ExpansionSpec::SingleMass(c) => {
                c.c_a.is_zero() && c.c_f.is_zero() && c.c_big_a.is_zero() && c.c_big_f.is_zero()
            }
            ExpansionSpec::TwoMass(c) => c.c1.is_zero() && c.c2.is_zero(),
        }
    }
}

/// Momentum-space spin-1 fields, all stored with lower (covariant) indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Spin1FieldConfig<R: Real> {
    pub a: Vec4<R>,
    pub f: Vec4<R>,
    pub a2: Grid<R>,
    pub f2: Grid<R>,
    pub psi: Vec4<R>,
}

impl<R: Real> Default for Spin1FieldConfig<R> {
    fn default() -> Self {
        Spin1FieldConfig { a: zero_vec(), f: zero_vec(), a2: zero_grid(), f2: zero_grid(), psi: zero_vec() }
    }
}

impl<R: Real> Spin1FieldConfig<R> {
    pub fn validate(&self) -> Result<()> {
        if !is_antisymmetric(&self.a2) {
            return Err(Error::InvalidField("A2 is not antisymmetric".into()));
        }
        if !is_antisymmetric(&self.f2) {
            return Err(Error::InvalidField("F2 is not antisymmetric".into()));
        }
        Ok(())
    }

    /// The configuration with a single unit component (antisymmetric partner
    /// filled in for rank-2 fields).
    pub fn unit(component: FieldComponent) -> Self {
        let mut out = Self::default();
        *out.slot_mut(component) = Complex::new(R::one(), R::zero());
        if let Some((a, b)) = component.pair() {
            let grid = match component {
                FieldComponent::A2(..) => &mut out.a2,
                _ => &mut out.f2,
            };
            grid[b][a] = Complex::new(-R::one(), R::zero());
        }
        out
    }

    /// The value of one independent component.
    pub fn get(&self, component: FieldComponent) -> &Complex<R> {
        match component {
            FieldComponent::A(mu) => &self.a[mu],
            FieldComponent::F(mu) => &self.f[mu],
            FieldComponent::A2(a, b) => &self.a2[a][b],
            FieldComponent::F2(a, b) => &self.f2[a][b],
            FieldComponent::Psi(mu) => &self.psi[mu],
        }
    }

    fn slot_mut(&mut self, component: FieldComponent) -> &mut Complex<R> {
        match component {
            FieldComponent::A(mu) => &mut self.a[mu],
            FieldComponent::F(mu) => &mut self.f[mu],
            FieldComponent::A2(a, b) => &mut self.a2[a][b],
            FieldComponent::F2(a, b) => &mut self.f2[a][b],
            FieldComponent::Psi(mu) => &mut self.psi[mu],
        }
    }

    pub fn scale(&self, k: &Complex<R>) -> Self {
        Self::linear(k, self, &Complex::zero(), &Self::default())
    }

    /// `alpha X + beta Y`.
    pub fn linear(alpha: &Complex<R>, x: &Self, beta: &Complex<R>, y: &Self) -> Self {
        let v = |u: &Vec4<R>, w: &Vec4<R>| -> Vec4<R> { std::array::from_fn(|i| alpha * &u[i] + beta * &w[i]) };
        let g = |u: &Grid<R>, w: &Grid<R>| -> Grid<R> {
            std::array::from_fn(|i| std::array::from_fn(|j| alpha * &u[i][j] + beta * &w[i][j]))
        };
        Spin1FieldConfig {
            a: v(&x.a, &y.a),
            f: v(&x.f, &y.f),
            a2: g(&x.a2, &y.a2),
            f2: g(&x.f2, &y.f2),
            psi: v(&x.psi, &y.psi),
        }
    }
}

/// One independent component of a [`Spin1FieldConfig`]; rank-2 components
/// are labelled by their `mu < nu` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldComponent {
    A(usize),
    F(usize),
    A2(usize, usize),
    F2(usize, usize),
    Psi(usize),
}

impl FieldComponent {
    fn pair(self) -> Option<(usize, usize)> {
        match self {
            FieldComponent::A2(a, b) | FieldComponent::F2(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// The 20 (single-mass) or 16 (two-mass) independent components.
    pub fn all(variant: Variant) -> Vec<FieldComponent> {
        let pairs = |f: fn(usize, usize) -> FieldComponent| PAIRS.iter().map(move |&(a, b)| f(a, b));
        match variant {
            Variant::SingleMass => (0..4)
                .map(FieldComponent::A)
                .chain((0..4).map(FieldComponent::F))
                .chain(pairs(FieldComponent::A2))
                .chain(pairs(FieldComponent::F2))
                .collect(),
            Variant::TwoMass => (0..4)
                .map(FieldComponent::Psi)
                .chain(pairs(FieldComponent::F2))
                .chain(pairs(FieldComponent::A2))
                .collect(),
        }
    }
}

impl fmt::Display for FieldComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldComponent::A(mu) => write!(f, "A_{mu}"),
            FieldComponent::F(mu) => write!(f, "F_{mu}"),
            FieldComponent::A2(a, b) => write!(f, "A_{a}{b}"),
            FieldComponent::F2(a, b) => write!(f, "F_{a}{b}"),
            FieldComponent::Psi(mu) => write!(f, "Psi_{mu}"),
        }
    }
}
