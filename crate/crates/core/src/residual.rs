//! Named residual tensors.

use num_complex::Complex;

use crate::lorentz::{Grid, Vec4};
use crate::scalar::{Real, ScalarExt, Tolerance};

/// A residual tensor of any rank, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual<R: Real> {
    pub name: String,
    pub shape: Vec<usize>,
    pub values: Vec<Complex<R>>,
}

impl<R: Real> Residual<R> {
    pub fn scalar(name: impl Into<String>, value: Complex<R>) -> Self {
        Residual { name: name.into(), shape: Vec::new(), values: vec![value] }
    }

    pub fn vector(name: impl Into<String>, v: Vec4<R>) -> Self {
        Residual { name: name.into(), shape: vec![4], values: v.into_iter().collect() }
    }

    pub fn grid(name: impl Into<String>, g: Grid<R>) -> Self {
        Residual { name: name.into(), shape: vec![4, 4], values: g.into_iter().flatten().collect() }
    }

    pub fn from_fn(name: impl Into<String>, shape: Vec<usize>, mut f: impl FnMut(&[usize]) -> Complex<R>) -> Self {
        let total: usize = shape.iter().product();
        let mut index = vec![0; shape.len()];
        let mut values = Vec::with_capacity(total);
        for _ in 0..total {
            values.push(f(&index));
            for axis in (0..shape.len()).rev() {
                index[axis] += 1;
                if index[axis] < shape[axis] {
                    break;
                }
                index[axis] = 0;
            }
        }
        Residual { name: name.into(), shape, values }
    }

    pub fn at(&self, index: &[usize]) -> &Complex<R> {
        let flat = index.iter().zip(&self.shape).fold(0, |acc, (i, n)| acc * n + i);
        &self.values[flat]
    }

    pub fn max_magnitude(&self) -> f64 {
        self.values.iter().map(|v| v.modulus_f64()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: Tolerance) -> bool {
        self.values.iter().all(|v| v.is_negligible(tol))
    }
}

/// The residuals of one equation system at one momentum.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualBundle<R: Real> {
    pub residuals: Vec<Residual<R>>,
}

impl<R: Real> ResidualBundle<R> {
    pub fn new(residuals: Vec<Residual<R>>) -> Self {
        ResidualBundle { residuals }
    }

    pub fn get(&self, name: &str) -> Option<&Residual<R>> {
        self.residuals.iter().find(|r| r.name == name)
    }

    pub fn max_magnitude(&self) -> f64 {
        self.residuals.iter().map(Residual::max_magnitude).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: Tolerance) -> bool {
        self.residuals.iter().all(|r| r.is_zero(tol))
    }

    /// All entries of all residuals in order.
    pub fn flatten(&self) -> Vec<Complex<R>> {
        self.residuals.iter().flat_map(|r| r.values.iter().cloned()).collect()
    }
}
