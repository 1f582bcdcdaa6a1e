//! Dirac algebra in the Weyl (chiral) representation.
//!
//! Holds the 4x4 matrix type, the gamma basis with the reflection operator
//! `R = diag(i Theta, -i Theta)`, the identity suites for `R`, and the
//! trace-projection decomposition onto the sixteen Clifford elements.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lorentz::{EpsilonSign, Grid, Lorentz, Vec4, PAIRS};
use crate::scalar::{Real, ScalarExt, Tolerance};

#[derive(Clone, PartialEq)]
pub struct Matrix4<R: Real> {
    pub entries: [[Complex<R>; 4]; 4],
}

impl<R: Real> fmt::Debug for Matrix4<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|c| c.render()).collect()).collect();
        f.debug_struct("Matrix4").field("rows", &rows).finish()
    }
}

impl<R: Real> Matrix4<R> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex<R>) -> Self {
        Matrix4 { entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| Complex::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { Complex::one() } else { Complex::zero() })
    }

    pub fn from_ints(rows: [[(i64, i64); 4]; 4]) -> Self {
        Self::from_fn(|i, j| Complex::new(R::from_int(rows[i][j].0), R::from_int(rows[i][j].1)))
    }

    pub fn get(&self, i: usize, j: usize) -> &Complex<R> {
        &self.entries[i][j]
    }

    pub fn scale(&self, factor: &Complex<R>) -> Self {
        Self::from_fn(|i, j| &self.entries[i][j] * factor)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i].clone())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.entries[i][j].conj())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i].conj())
    }

    pub fn trace(&self) -> Complex<R> {
        (0..4).fold(Complex::zero(), |acc, i| acc + &self.entries[i][i])
    }

    /// `Tr(self * other)` without forming the full product.
    pub fn trace_product(&self, other: &Self) -> Complex<R> {
        let mut acc = Complex::zero();
        for i in 0..4 {
            for k in 0..4 {
                acc = acc + &self.entries[i][k] * &other.entries[k][i];
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|c| c.is_zero())
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.entries.iter().flatten().zip(other.entries.iter().flatten()).all(|(a, b)| R::close(a, b, tol))
    }

    pub fn is_diagonal(&self, tol: Tolerance) -> bool {
        (0..4).all(|i| (0..4).all(|j| i == j || self.entries[i][j].is_negligible(tol)))
    }

    pub fn is_symmetric(&self, tol: Tolerance) -> bool {
        self.approx_eq(&self.transpose(), tol)
    }

    pub fn is_antisymmetric(&self, tol: Tolerance) -> bool {
        self.approx_eq(&-self.transpose(), tol)
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.entries.clone();
        let mut inv = Self::identity().entries;
        for col in 0..4 {
            // Largest modulus pivot keeps the float path stable; any nonzero works exactly.
            let pivot = (col..4)
                .filter(|&r| !a[r][col].is_zero())
                .max_by(|&x, &y| a[x][col].modulus_f64().total_cmp(&a[y][col].modulus_f64()))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..4 {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
            for r in 0..4 {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..4 {
                    a[r][j] = &a[r][j] - &f * &a[col][j];
                    inv[r][j] = &inv[r][j] - &f * &inv[col][j];
                }
            }
        }
        Some(Matrix4 { entries: inv })
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }
}

impl<R: Real> Add for &Matrix4<R> {
    type Output = Matrix4<R>;
    fn add(self, rhs: Self) -> Matrix4<R> {
        Matrix4::from_fn(|i, j| &self.entries[i][j] + &rhs.entries[i][j])
    }
}

impl<R: Real> Sub for &Matrix4<R> {
    type Output = Matrix4<R>;
    fn sub(self, rhs: Self) -> Matrix4<R> {
        Matrix4::from_fn(|i, j| &self.entries[i][j] - &rhs.entries[i][j])
    }
}

impl<R: Real> Mul for &Matrix4<R> {
    type Output = Matrix4<R>;
    fn mul(self, rhs: Self) -> Matrix4<R> {
        Matrix4::from_fn(|i, j| (0..4).fold(Complex::zero(), |acc, k| acc + &self.entries[i][k] * &rhs.entries[k][j]))
    }
}

impl<R: Real> Neg for Matrix4<R> {
    type Output = Matrix4<R>;
    fn neg(self) -> Matrix4<R> {
        Matrix4::from_fn(|i, j| -self.entries[i][j].clone())
    }
}

impl<R: Real> Neg for &Matrix4<R> {
    type Output = Matrix4<R>;
    fn neg(self) -> Matrix4<R> {
        Matrix4::from_fn(|i, j| -self.entries[i][j].clone())
    }
}

/// Overall sign of `sigma^{mu nu} = +-(i/2)[gamma^mu, gamma^nu]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SigmaSign {
    #[default]
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BasisConventions {
    pub epsilon: EpsilonSign,
    pub sigma: SigmaSign,
}

#[derive(Debug, Clone)]
pub struct GammaBasis<R: Real> {
    pub gamma: [Matrix4<R>; 4],
    pub gamma5: Matrix4<R>,
    pub sigma: [[Matrix4<R>; 4]; 4],
    pub reflection: Matrix4<R>,
    pub identity: Matrix4<R>,
    pub lorentz: Lorentz,
    pub conventions: BasisConventions,
}

/// Weyl-representation gamma matrices: `gamma^0` has identity off-diagonal
/// blocks, `gamma^i` carries `+sigma^i` upper right and `-sigma^i` lower left.
pub fn weyl_gammas<R: Real>() -> [Matrix4<R>; 4] {
    let z = (0, 0);
    let one = (1, 0);
    let m_one = (-1, 0);
    let i = (0, 1);
    let m_i = (0, -1);
    [
        Matrix4::from_ints([[z, z, one, z], [z, z, z, one], [one, z, z, z], [z, one, z, z]]),
        Matrix4::from_ints([[z, z, z, one], [z, z, one, z], [z, m_one, z, z], [m_one, z, z, z]]),
        Matrix4::from_ints([[z, z, z, m_i], [z, z, i, z], [z, i, z, z], [m_i, z, z, z]]),
        Matrix4::from_ints([[z, z, one, z], [z, z, z, m_one], [m_one, z, z, z], [z, one, z, z]]),
    ]
}

/// `R = [[i Theta, 0], [0, -i Theta]]` with `Theta = -i sigma_2 = [[0, -1], [1, 0]]`.
pub fn reflection_operator<R: Real>() -> Matrix4<R> {
    let theta = [[(0i64, 0i64), (-1, 0)], [(1, 0), (0, 0)]];
    let imag = Complex::<R>::imag_unit();
    Matrix4::from_fn(|r, c| {
        if r / 2 != c / 2 {
            return Complex::zero();
        }
        let (re, im) = theta[r % 2][c % 2];
        let t = Complex::new(R::from_int(re), R::from_int(im));
        let block_sign = if r < 2 { imag.clone() } else { -imag.clone() };
        t * block_sign
    })
}

/// Weyl basis with default conventions, validated against the full identity suite.
pub fn build_gamma_basis<R: Real>() -> Result<GammaBasis<R>> {
    build_gamma_basis_with(BasisConventions::default())
}

pub fn build_gamma_basis_with<R: Real>(conventions: BasisConventions) -> Result<GammaBasis<R>> {
    let basis = GammaBasis::from_parts(weyl_gammas(), reflection_operator(), conventions, Tolerance::EXACT)?;
    basis.validate(Tolerance::default())?;
    Ok(basis)
}

impl<R: Real> GammaBasis<R> {
    /// Builds the derived matrices from four gammas and a reflection operator.
    /// Only the Clifford relation is checked here; see [`GammaBasis::validate`].
    pub fn from_parts(
        gamma: [Matrix4<R>; 4],
        reflection: Matrix4<R>,
        conventions: BasisConventions,
        tol: Tolerance,
    ) -> Result<Self> {
        for mu in 0..4 {
            for nu in mu..4 {
                let anti = gamma[mu].anticommutator(&gamma[nu]);
                let expected = if mu == nu {
                    Matrix4::identity().scale(&Complex::int(2 * Lorentz::metric(mu)))
                } else {
                    Matrix4::zero()
                };
                if !anti.approx_eq(&expected, tol) {
                    return Err(Error::RepresentationInvalid(format!(
                        "{{gamma^{mu}, gamma^{nu}}} != 2 g^{{{mu}{nu}}}"
                    )));
                }
            }
        }
        let imag = Complex::<R>::imag_unit();
        let gamma5 = (&(&(&gamma[0] * &gamma[1]) * &gamma[2]) * &gamma[3]).scale(&imag);
        let half_i = match conventions.sigma {
            SigmaSign::Plus => imag * Complex::ratio(1, 2),
            SigmaSign::Minus => -imag * Complex::ratio(1, 2),
        };
        let sigma = std::array::from_fn(|mu| std::array::from_fn(|nu| gamma[mu].commutator(&gamma[nu]).scale(&half_i)));
        Ok(GammaBasis {
            gamma,
            gamma5,
            sigma,
            reflection,
            identity: Matrix4::identity(),
            lorentz: Lorentz::new(conventions.epsilon),
            conventions,
        })
    }

    /// Replaces the reflection operator without re-validating; used to probe
    /// the identity suites with deliberately wrong operators.
    pub fn with_reflection(mut self, reflection: Matrix4<R>) -> Self {
        self.reflection = reflection;
        self
    }

    /// Checks the diagonal chirality matrix, the sigma antisymmetry and both
    /// reflection identity suites.
    pub fn validate(&self, tol: Tolerance) -> Result<()> {
        if !self.gamma5.is_diagonal(tol) {
            return Err(Error::RepresentationInvalid("gamma^5 is not diagonal".into()));
        }
        for mu in 0..4 {
            for nu in 0..4 {
                if !self.sigma[mu][nu].approx_eq(&-&self.sigma[nu][mu], tol) {
                    return Err(Error::RepresentationInvalid(format!("sigma^{{{mu}{nu}}} not antisymmetric")));
                }
            }
        }
        let failures: Vec<String> = check_r_properties(self, tol)
            .into_iter()
            .chain(check_symmetric_basis(self, tol))
            .filter(|c| !c.holds)
            .map(|c| c.name)
            .collect();
        if failures.is_empty() {
            Ok(())
        } else {
            Err(Error::RepresentationInvalid(format!("identities failed: {}", failures.join(", "))))
        }
    }

    /// `gamma^mu p_mu` for lower-index momentum components.
    pub fn slash(&self, p_lower: &Vec4<R>) -> Matrix4<R> {
        (0..4).fold(Matrix4::zero(), |acc, mu| &acc + &self.gamma[mu].scale(&p_lower[mu]))
    }

    /// `gamma_mu = g_{mu mu} gamma^mu`.
    pub fn gamma_lower(&self, mu: usize) -> Matrix4<R> {
        self.gamma[mu].scale(&Complex::int(Lorentz::metric(mu)))
    }

    /// `sigma_{mu nu}` with both indices lowered.
    pub fn sigma_lower(&self, mu: usize, nu: usize) -> Matrix4<R> {
        self.sigma[mu][nu].scale(&Complex::int(Lorentz::metric(mu) * Lorentz::metric(nu)))
    }

    /// The sixteen Clifford elements in slot order.
    pub fn elements(&self) -> Vec<(CliffordSlot, Matrix4<R>)> {
        let mut out = Vec::with_capacity(16);
        out.push((CliffordSlot::Scalar, self.identity.clone()));
        out.push((CliffordSlot::Pseudoscalar, self.gamma5.clone()));
        for mu in 0..4 {
            out.push((CliffordSlot::Vector(mu), self.gamma[mu].clone()));
        }
        for mu in 0..4 {
            out.push((CliffordSlot::Axial(mu), &self.gamma5 * &self.gamma[mu]));
        }
        for (mu, nu) in PAIRS {
            out.push((CliffordSlot::Tensor(mu, nu), self.sigma[mu][nu].clone()));
        }
        out
    }
}

/// Verdict for one named algebraic identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub formula: &'static str,
    pub holds: bool,
    /// Number of matrix comparisons behind the verdict.
    pub cases: usize,
    pub failed_cases: Vec<String>,
}

impl IdentityCheck {
    fn from_cases(name: impl Into<String>, formula: &'static str, cases: Vec<(String, bool)>) -> Self {
        let failed_cases: Vec<String> = cases.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.clone()).collect();
        IdentityCheck { name: name.into(), formula, holds: failed_cases.is_empty(), cases: cases.len(), failed_cases }
    }
}

/// The five reflection-operator identities.
pub fn check_r_properties<R: Real>(basis: &GammaBasis<R>, tol: Tolerance) -> Vec<IdentityCheck> {
    let r = &basis.reflection;
    let r_inv = r.inverse();
    let conj = |m: &Matrix4<R>| r_inv.as_ref().map(|ri| &(ri * m) * r);

    let mut out = vec![IdentityCheck::from_cases(
        "R transpose is minus R",
        "R^T = -R",
        vec![("R".into(), r.transpose().approx_eq(&-r, tol))],
    )];
    let unitary = r.adjoint().approx_eq(r, tol) && r_inv.as_ref().is_some_and(|ri| ri.approx_eq(r, tol));
    out.push(IdentityCheck::from_cases(
        "R hermitian and involutive",
        "R^dagger = R = R^-1",
        vec![("R".into(), unitary)],
    ));
    let g5 = conj(&basis.gamma5).is_some_and(|m| m.approx_eq(&basis.gamma5.transpose(), tol));
    out.push(IdentityCheck::from_cases(
        "R conjugates gamma5 to its transpose",
        "R^-1 gamma^5 R = (gamma^5)^T",
        vec![("gamma5".into(), g5)],
    ));
    let gammas = (0..4)
        .map(|mu| {
            let g = &basis.gamma[mu];
            let ok = conj(g).is_some_and(|m| m.approx_eq(&-g.transpose(), tol));
            (format!("gamma^{mu}"), ok)
        })
        .collect();
    out.push(IdentityCheck::from_cases(
        "R conjugates gamma to minus transpose",
        "R^-1 gamma^mu R = -(gamma^mu)^T",
        gammas,
    ));
    let sigmas = PAIRS
        .iter()
        .map(|&(mu, nu)| {
            let s = &basis.sigma[mu][nu];
            let ok = conj(s).is_some_and(|m| m.approx_eq(&-s.transpose(), tol));
            (format!("sigma^{mu}{nu}"), ok)
        })
        .collect();
    out.push(IdentityCheck::from_cases(
        "R conjugates sigma to minus transpose",
        "R^-1 sigma^{mu nu} R = -(sigma^{mu nu})^T",
        sigmas,
    ));
    out
}

/// One verdict per Clifford element times `R`: `gamma^mu R` and `sigma^{mu nu} R`
/// symmetric (the latter together with `gamma^5 sigma^{mu nu} R`), and
/// `R`, `gamma^5 R`, `gamma^5 gamma^mu R` antisymmetric.
pub fn check_symmetric_basis<R: Real>(basis: &GammaBasis<R>, tol: Tolerance) -> Vec<IdentityCheck> {
    let r = &basis.reflection;
    let mut out = Vec::with_capacity(16);
    for (slot, element) in basis.elements() {
        let product = &element * r;
        let check = match slot {
            CliffordSlot::Vector(mu) => IdentityCheck::from_cases(
                format!("gamma^{mu} R symmetric"),
                "(gamma^mu R)^T = gamma^mu R",
                vec![(format!("gamma^{mu} R"), product.is_symmetric(tol))],
            ),
            CliffordSlot::Tensor(mu, nu) => {
                let chiral = &(&basis.gamma5 * &element) * r;
                IdentityCheck::from_cases(
                    format!("sigma^{mu}{nu} R and gamma5 sigma^{mu}{nu} R symmetric"),
                    "(sigma^{mu nu} R)^T = sigma^{mu nu} R",
                    vec![
                        (format!("sigma^{mu}{nu} R"), product.is_symmetric(tol)),
                        (format!("gamma5 sigma^{mu}{nu} R"), chiral.is_symmetric(tol)),
                    ],
                )
            }
            CliffordSlot::Scalar => IdentityCheck::from_cases(
                "R antisymmetric",
                "R^T = -R",
                vec![("R".into(), product.is_antisymmetric(tol))],
            ),
            CliffordSlot::Pseudoscalar => IdentityCheck::from_cases(
                "gamma5 R antisymmetric",
                "(gamma^5 R)^T = -gamma^5 R",
                vec![("gamma5 R".into(), product.is_antisymmetric(tol))],
            ),
            CliffordSlot::Axial(mu) => IdentityCheck::from_cases(
                format!("gamma5 gamma^{mu} R antisymmetric"),
                "(gamma^5 gamma^mu R)^T = -gamma^5 gamma^mu R",
                vec![(format!("gamma5 gamma^{mu} R"), product.is_antisymmetric(tol))],
            ),
        };
        out.push(check);
    }
    out
}

/// `gamma^5 sigma^{mu nu} = (i/2) eps^{mu nu rho sigma} sigma_{rho sigma}` for every pair.
pub fn check_duality<R: Real>(basis: &GammaBasis<R>, tol: Tolerance) -> IdentityCheck {
    let half_i = Complex::<R>::imag_unit() * Complex::ratio(1, 2);
    let mut cases = Vec::new();
    for mu in 0..4 {
        for nu in mu + 1..4 {
            let lhs = &basis.gamma5 * &basis.sigma[mu][nu];
            let mut rhs = Matrix4::zero();
            for rho in 0..4 {
                for sig in 0..4 {
                    let e = basis.lorentz.eps_upper([mu, nu, rho, sig]);
                    if e != 0 {
                        rhs = &rhs + &basis.sigma_lower(rho, sig).scale(&Complex::int(e));
                    }
                }
            }
            cases.push((format!("{mu}{nu}"), lhs.approx_eq(&rhs.scale(&half_i), tol)));
        }
    }
    IdentityCheck::from_cases(
        "chiral sigma duality",
        "gamma^5 sigma^{mu nu} = (i/2) eps^{mu nu rho sigma} sigma_{rho sigma}",
        cases,
    )
}

/// Labels the sixteen Clifford elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CliffordSlot {
    Scalar,
    Pseudoscalar,
    Vector(usize),
    Axial(usize),
    /// `mu < nu`.
    Tensor(usize, usize),
}

impl fmt::Display for CliffordSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordSlot::Scalar => write!(f, "scalar"),
            CliffordSlot::Pseudoscalar => write!(f, "pseudoscalar"),
            CliffordSlot::Vector(mu) => write!(f, "vector[{mu}]"),
            CliffordSlot::Axial(mu) => write!(f, "axial[{mu}]"),
            CliffordSlot::Tensor(mu, nu) => write!(f, "tensor[{mu}{nu}]"),
        }
    }
}

/// `M = s 1 + p gamma^5 + v_mu gamma^mu + a_mu gamma^5 gamma^mu + 1/2 t_{mu nu} sigma^{mu nu}`
/// with covariant `v`, `a` and antisymmetric covariant `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordCoefficients<R: Real> {
    pub s: Complex<R>,
    pub p: Complex<R>,
    pub v: Vec4<R>,
    pub a: Vec4<R>,
    pub t: Grid<R>,
}

impl<R: Real> CliffordCoefficients<R> {
    pub fn get(&self, slot: CliffordSlot) -> &Complex<R> {
        match slot {
            CliffordSlot::Scalar => &self.s,
            CliffordSlot::Pseudoscalar => &self.p,
            CliffordSlot::Vector(mu) => &self.v[mu],
            CliffordSlot::Axial(mu) => &self.a[mu],
            CliffordSlot::Tensor(mu, nu) => &self.t[mu][nu],
        }
    }

    pub fn slots() -> impl Iterator<Item = CliffordSlot> {
        [CliffordSlot::Scalar, CliffordSlot::Pseudoscalar]
            .into_iter()
            .chain((0..4).map(CliffordSlot::Vector))
            .chain((0..4).map(CliffordSlot::Axial))
            .chain(PAIRS.iter().map(|&(a, b)| CliffordSlot::Tensor(a, b)))
    }

    pub fn reconstruct(&self, basis: &GammaBasis<R>) -> Matrix4<R> {
        let mut m = &basis.identity.scale(&self.s) + &basis.gamma5.scale(&self.p);
        for mu in 0..4 {
            m = &m + &basis.gamma[mu].scale(&self.v[mu]);
            m = &m + &(&basis.gamma5 * &basis.gamma[mu]).scale(&self.a[mu]);
        }
        let half = Complex::ratio(1, 2);
        for mu in 0..4 {
            for nu in 0..4 {
                if mu != nu {
                    m = &m + &basis.sigma[mu][nu].scale(&(&self.t[mu][nu] * &half));
                }
            }
        }
        m
    }
}

/// Projects `M` onto the Clifford basis: the coefficient of an element `E`
/// (which squares to a multiple of the identity) is `Tr(E^-1 M) / 4`.
pub fn clifford_decompose<R: Real>(m: &Matrix4<R>, basis: &GammaBasis<R>) -> CliffordCoefficients<R> {
    let quarter = Complex::<R>::ratio(1, 4);
    let mut out = CliffordCoefficients {
        s: Complex::zero(),
        p: Complex::zero(),
        v: crate::lorentz::zero_vec(),
        a: crate::lorentz::zero_vec(),
        t: crate::lorentz::zero_grid(),
    };
    for (slot, element) in basis.elements() {
        let square = (&element * &element).entries[0][0].clone();
        let coeff = element.trace_product(m) / square * &quarter;
        match slot {
            CliffordSlot::Scalar => out.s = coeff,
            CliffordSlot::Pseudoscalar => out.p = coeff,
            CliffordSlot::Vector(mu) => out.v[mu] = coeff,
            CliffordSlot::Axial(mu) => out.a[mu] = coeff,
            CliffordSlot::Tensor(mu, nu) => {
                out.t[nu][mu] = -coeff.clone();
                out.t[mu][nu] = coeff;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn basis() -> GammaBasis<Q> {
        build_gamma_basis().unwrap()
    }

    #[test]
    fn gamma5_is_diagonal_with_expected_entries() {
        let b = basis();
        // Brute force: i g0 g1 g2 g3 from the raw matrices.
        let g = weyl_gammas::<Q>();
        let brute = (&(&(&g[0] * &g[1]) * &g[2]) * &g[3]).scale(&Complex::imag_unit());
        assert_eq!(brute, b.gamma5);
        let diag: Vec<_> = (0..4).map(|i| b.gamma5.entries[i][i].clone()).collect();
        assert_eq!(diag, vec![Complex::int(-1), Complex::int(-1), Complex::int(1), Complex::int(1)]);
        assert!(b.gamma5.is_diagonal(Tolerance::EXACT));
    }

    #[test]
    fn reflection_entries() {
        let r = reflection_operator::<Q>();
        let expected = Matrix4::<Q>::from_ints([
            [(0, 0), (0, -1), (0, 0), (0, 0)],
            [(0, 1), (0, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 0), (0, 1)],
            [(0, 0), (0, 0), (0, -1), (0, 0)],
        ]);
        assert_eq!(r, expected);
    }

    #[test]
    fn gamma_traces_give_metric() {
        let b = basis();
        for mu in 0..4 {
            for nu in 0..4 {
                let expected = if mu == nu { Complex::int(4 * Lorentz::metric(mu)) } else { Complex::zero() };
                assert_eq!(b.gamma[mu].trace_product(&b.gamma[nu]), expected);
            }
        }
    }

    #[test]
    fn identity_suites_pass_on_weyl_basis() {
        let b = basis();
        let r = check_r_properties(&b, Tolerance::EXACT);
        assert_eq!(r.len(), 5);
        assert!(r.iter().all(|c| c.holds), "{r:?}");
        let s = check_symmetric_basis(&b, Tolerance::EXACT);
        assert_eq!(s.len(), 16);
        assert!(s.iter().all(|c| c.holds), "{s:?}");
        let g0r = &b.gamma[0] * &b.reflection;
        assert!((&g0r.transpose() - &g0r).is_zero());
        assert!((&b.reflection.transpose() + &b.reflection).is_zero());
    }

    #[test]
    fn identity_reflection_breaks_antisymmetry() {
        let b = basis().with_reflection(Matrix4::identity());
        let r = check_r_properties(&b, Tolerance::EXACT);
        assert!(!r[0].holds);
        assert!(b.validate(Tolerance::EXACT).is_err());
    }

    #[test]
    fn swapped_gammas_are_rejected() {
        let mut g = weyl_gammas::<Q>();
        g.swap(0, 1);
        let err = GammaBasis::from_parts(g, reflection_operator(), BasisConventions::default(), Tolerance::EXACT);
        assert!(matches!(err, Err(Error::RepresentationInvalid(_))));
    }

    #[test]
    fn inverse_round_trips() {
        let b = basis();
        let m = &(&b.gamma[0] + &b.gamma5) + &b.identity.scale(&Complex::new(Q::from_ratio(1, 3), Q::from_ratio(2, 1)));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix4::identity());
        assert!(Matrix4::<Q>::zero().inverse().is_none());
    }

    #[test]
    fn trace_orthogonality_of_elements() {
        let b = basis();
        let elements = b.elements();
        for (i, (_, ei)) in elements.iter().enumerate() {
            for (j, (_, ej)) in elements.iter().enumerate() {
                let tr = ei.inverse().unwrap().trace_product(ej);
                let expected = if i == j { Complex::int(4) } else { Complex::zero() };
                assert_eq!(tr, expected, "{i} {j}");
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let b = basis();
        let c = clifford_decompose(&b.identity, &b);
        assert_eq!(c.s, Complex::<Q>::one());
        assert!(CliffordCoefficients::<Q>::slots().skip(1).all(|s| c.get(s).is_zero()));

        let c = clifford_decompose(&b.gamma[1], &b);
        assert_eq!(c.v[1], Complex::<Q>::one());
        assert!(CliffordCoefficients::<Q>::slots()
            .filter(|s| *s != CliffordSlot::Vector(1))
            .all(|s| c.get(s).is_zero()));

        let c = clifford_decompose(&b.sigma[0][1], &b);
        // sigma^{01} = 1/2 (t_01 sigma^01 + t_10 sigma^10) with t_01 = -t_10 = 1.
        assert_eq!(c.t[0][1], Complex::<Q>::one());
        assert_eq!(c.t[1][0], -Complex::<Q>::one());
        for (mu, nu) in PAIRS.iter().copied().skip(1) {
            assert!(c.t[mu][nu].is_zero());
        }
        assert_eq!(c.reconstruct(&b), b.sigma[0][1]);
    }

    #[test]
    fn duality_depends_on_epsilon_sign() {
        let b = basis();
        assert!(check_duality(&b, Tolerance::EXACT).holds);
        let flipped =
            build_gamma_basis_with::<Q>(BasisConventions { epsilon: EpsilonSign::Minus, ..Default::default() })
                .unwrap();
        assert!(!check_duality(&flipped, Tolerance::EXACT).holds);
        let sigma_flipped =
            build_gamma_basis_with::<Q>(BasisConventions { sigma: SigmaSign::Minus, ..Default::default() }).unwrap();
        assert!(check_duality(&sigma_flipped, Tolerance::EXACT).holds);
    }

    #[test]
    fn float_basis_validates() {
        let b = build_gamma_basis::<f64>().unwrap();
        assert!(check_r_properties(&b, Tolerance::default()).iter().all(|c| c.holds));
        let b32 = build_gamma_basis::<f32>().unwrap();
        assert!(check_duality(&b32, Tolerance(1e-6)).holds);
    }
}
