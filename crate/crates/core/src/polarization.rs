//! Momentum-space polarization vectors of the (1/2,1/2) field, the
//! longitudinal antisymmetric-tensor potential, field strengths and their
//! massless limits.
//!
//! The helicity +-1 vectors carry a global `1/sqrt(2)`. In exact arithmetic
//! it is kept out of the stored components and recorded by the
//! `inv_sqrt2` flag instead.

use std::fmt;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lorentz::{antisymmetric_from_pairs, minkowski_dot, Grid, Vec4};
use crate::numeric::{mass_shell_energy, OnShellMomentum};
use crate::scalar::{Real, ScalarExt, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Helicity {
    Plus,
    Zero,
    Minus,
    /// The time-like mode `u ~ p`.
    Timelike,
}

impl Helicity {
    pub const ALL: [Helicity; 4] = [Helicity::Plus, Helicity::Zero, Helicity::Minus, Helicity::Timelike];
    pub const PHYSICAL: [Helicity; 3] = [Helicity::Plus, Helicity::Zero, Helicity::Minus];

    pub fn carries_inv_sqrt2(self) -> bool {
        matches!(self, Helicity::Plus | Helicity::Minus)
    }
}

impl fmt::Display for Helicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Helicity::Plus => "+1",
            Helicity::Zero => "0",
            Helicity::Minus => "-1",
            Helicity::Timelike => "0t",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum NormalizationMode<R: Real> {
    NEqualsM,
    NEqualsOne,
    Custom(R),
}

impl<R: Real> NormalizationMode<R> {
    /// `N` itself at mass `m`.
    pub fn value(&self, m: &R) -> R {
        match self {
            NormalizationMode::NEqualsM => m.clone(),
            NormalizationMode::NEqualsOne => R::one(),
            NormalizationMode::Custom(c) => c.clone(),
        }
    }

    /// `N / m`, with the `N = m` case simplified before evaluation so that it
    /// stays finite at `m = 0`.
    pub fn over_m(&self, m: &R) -> Result<R> {
        self.check()?;
        match self {
            NormalizationMode::NEqualsM => Ok(R::one()),
            _ if m.is_zero() => Err(Error::MasslessSingular),
            _ => Ok(self.value(m) / m.clone()),
        }
    }

    /// `N^2 / m`, simplified to `m` for `N = m`.
    pub fn squared_over_m(&self, m: &R) -> Result<R> {
        self.check()?;
        match self {
            NormalizationMode::NEqualsM => Ok(m.clone()),
            _ if m.is_zero() => Err(Error::MasslessSingular),
            _ => {
                let n = self.value(m);
                Ok(n.clone() * n / m.clone())
            }
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            NormalizationMode::Custom(c) if c.is_zero() => {
                Err(Error::InvalidArgument("custom normalization must be nonzero".into()))
            }
            _ => Ok(()),
        }
    }
}

impl<R: Real> fmt::Display for NormalizationMode<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizationMode::NEqualsM => f.write_str("N=m"),
            NormalizationMode::NEqualsOne => f.write_str("N=1"),
            NormalizationMode::Custom(c) => write!(f, "N={}", c.render()),
        }
    }
}

/// `u^mu(p, h)`, contravariant. When `inv_sqrt2` is set the physical vector is
/// `u / sqrt(2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarizationVector<R: Real> {
    pub u: Vec4<R>,
    pub momentum: OnShellMomentum<R>,
    pub helicity: Helicity,
    pub normalization: NormalizationMode<R>,
    pub inv_sqrt2: bool,
}

impl<R: Real> PolarizationVector<R> {
    /// `g_{mu nu} p^mu u^nu`, in the same rescaled units as `u`.
    pub fn transversality(&self) -> Complex<R> {
        minkowski_dot(&self.momentum.upper(), &self.u)
    }

    /// Components with the `1/sqrt(2)` applied, when the field has square roots.
    pub fn physical(&self) -> Option<Vec4<R>> {
        scaled(&self.u, self.inv_sqrt2)
    }
}

fn scaled<R: Real, const N: usize>(v: &[Complex<R>; N], inv_sqrt2: bool) -> Option<[Complex<R>; N]> {
    if !inv_sqrt2 {
        return Some(v.clone());
    }
    let root = R::from_int(2).sqrt_checked()?;
    let k = Complex::real(R::one() / root);
    Some(std::array::from_fn(|i| &v[i] * &k))
}

fn c<R: Real>(x: &R) -> Complex<R> {
    Complex::real(x.clone())
}

pub fn u_vector<R: Real>(
    p: &OnShellMomentum<R>,
    h: Helicity,
    n: &NormalizationMode<R>,
) -> Result<PolarizationVector<R>> {
    let m = p.mass().clone();
    let factor = c(&n.over_m(&m)?);
    let k = c(&p.energy_plus_mass());
    if k.is_zero() {
        return Err(Error::MasslessSingular);
    }
    let [p0, p1, p2, p3] = p.upper();
    let mc = c(&m);
    let i = Complex::<R>::imag_unit();
    let raw: Vec4<R> = match h {
        Helicity::Plus => {
            let pr = p.p_r();
            [pr.clone(), &mc + &p1 * &pr / &k, &i * &mc + &p2 * &pr / &k, &p3 * &pr / &k].map(|x| -x)
        }
        Helicity::Minus => {
            let pl = p.p_l();
            [pl.clone(), &mc + &p1 * &pl / &k, -(&i * &mc) + &p2 * &pl / &k, &p3 * &pl / &k]
        }
        Helicity::Zero => [p3.clone(), &p1 * &p3 / &k, &p2 * &p3 / &k, &mc + &p3 * &p3 / &k],
        Helicity::Timelike => [p0, p1, p2, p3],
    };
    Ok(PolarizationVector {
        u: raw.map(|x| x * &factor),
        momentum: p.clone(),
        helicity: h,
        normalization: n.clone(),
        inv_sqrt2: h.carries_inv_sqrt2(),
    })
}

/// Componentwise complex conjugation (the negative-energy rule).
pub fn negative_energy<R: Real>(u: &PolarizationVector<R>) -> PolarizationVector<R> {
    PolarizationVector { u: u.u.clone().map(|x| x.conj()), ..u.clone() }
}

/// `A^{mu nu}(p) = (i N^2 / m) (...)`, the longitudinal antisymmetric-tensor potential.
pub fn ast_potential<R: Real>(p: &OnShellMomentum<R>, n: &NormalizationMode<R>) -> Result<Grid<R>> {
    let m = p.mass().clone();
    let prefactor = Complex::<R>::imag_unit() * c(&n.squared_over_m(&m)?);
    let k = c(&p.energy_plus_mass());
    if k.is_zero() {
        return Err(Error::MasslessSingular);
    }
    let [_, p1, p2, p3] = p.upper();
    let entries =
        [-p2.clone(), p1.clone(), Complex::zero(), c(&m) + p.p_r() * p.p_l() / &k, &p2 * &p3 / &k, -(&p1 * &p3 / &k)];
    Ok(antisymmetric_from_pairs(entries.map(|x| x * &prefactor)))
}

/// `lambda` with `x = lambda * y` entrywise, if it exists.
pub fn proportionality<R: Real>(x: &Grid<R>, y: &Grid<R>, tol: Tolerance) -> Option<Complex<R>> {
    let xs: Vec<_> = x.iter().flatten().collect();
    let ys: Vec<_> = y.iter().flatten().collect();
    let lambda = match ys.iter().position(|v| !v.is_negligible(tol)) {
        Some(k) => xs[k] / ys[k],
        None => return xs.iter().all(|v| v.is_negligible(tol)).then(Complex::zero),
    };
    xs.iter().zip(&ys).all(|(a, b)| R::close(a, &(&lambda * *b), tol)).then_some(lambda)
}

/// Relation of the tensor potential to the helicity +1 vector
/// `w = sqrt(2) u(p, +1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AstRelation<R: Real> {
    /// `A = lambda (w wedge w*)`.
    pub lambda_w: Option<Complex<R>>,
    /// `A = lambda (Re w wedge Im w)`.
    pub lambda_re_im: Option<Complex<R>>,
}

pub fn ast_relation<R: Real>(
    p: &OnShellMomentum<R>,
    n: &NormalizationMode<R>,
    tol: Tolerance,
) -> Result<AstRelation<R>> {
    let a = ast_potential(p, n)?;
    let w = u_vector(p, Helicity::Plus, n)?.u;
    let w_conj = w.clone().map(|x| x.conj());
    let re = w.clone().map(|x| Complex::real(x.re));
    let im = w.clone().map(|x| Complex::real(x.im));
    Ok(AstRelation {
        lambda_w: proportionality(&a, &crate::lorentz::wedge(&w, &w_conj), tol),
        lambda_re_im: proportionality(&a, &crate::lorentz::wedge(&re, &im), tol),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergySign {
    Positive,
    Negative,
}

/// Magnetic and electric strengths; when `inv_sqrt2` is set the physical
/// values are these divided by `sqrt(2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldStrength3<R: Real> {
    pub b: [Complex<R>; 3],
    pub e: [Complex<R>; 3],
    pub sign: EnergySign,
    pub inv_sqrt2: bool,
}

impl<R: Real> FieldStrength3<R> {
    pub fn conj(&self) -> Self {
        FieldStrength3 { b: self.b.clone().map(|x| x.conj()), e: self.e.clone().map(|x| x.conj()), ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        FieldStrength3 { b: self.b.clone().map(|x| -x), e: self.e.clone().map(|x| -x), ..self.clone() }
    }
}

fn massive<R: Real>(p: &OnShellMomentum<R>) -> Result<R> {
    let m = p.mass().clone();
    if m.is_zero() {
        Err(Error::MasslessSingular)
    } else {
        Ok(m)
    }
}

/// The printed closed forms of `B^(+)` and `E^(+)` for `h` in {+1, 0, -1}.
pub fn strengths_closed_form<R: Real>(
    p: &OnShellMomentum<R>,
    h: Helicity,
    n: &NormalizationMode<R>,
) -> Result<FieldStrength3<R>> {
    let m = massive(p)?;
    let i = Complex::<R>::imag_unit();
    let pref = &i * c(&(n.value(&m) / (R::from_int(2) * m.clone())));
    let k = c(&p.energy_plus_mass());
    let [p0, p1, p2, p3] = p.upper();
    let (pr, pl) = (p.p_r(), p.p_l());
    let (b, e, inv_sqrt2) = match h {
        Helicity::Plus => (
            [-(&i * &p3), p3.clone(), &i * &pr].map(|x| -(&pref * x)),
            [&p0 - &p1 * &pr / &k, &i * &p0 - &p2 * &pr / &k, -(&p3 * &pr / &k)].map(|x| -(&pref * x)),
            true,
        ),
        Helicity::Zero => (
            [p2.clone(), -p1.clone(), Complex::zero()].map(|x| &pref * x),
            [-(&p1 * &p3 / &k), -(&p2 * &p3 / &k), &p0 - &p3 * &p3 / &k].map(|x| &pref * x),
            false,
        ),
        Helicity::Minus => (
            [&i * &p3, p3.clone(), -(&i * &pl)].map(|x| &pref * x),
            [&p0 - &p1 * &pl / &k, -(&i * &p0) - &p2 * &pl / &k, -(&p3 * &pl / &k)].map(|x| &pref * x),
            true,
        ),
        Helicity::Timelike => {
            return Err(Error::InvalidArgument("no closed-form strengths for the time-like mode".into()))
        }
    };
    Ok(FieldStrength3 { b, e, sign: EnergySign::Positive, inv_sqrt2 })
}

fn cross<R: Real>(a: &[Complex<R>; 3], b: &[Complex<R>; 3]) -> [Complex<R>; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn spatial<R: Real>(v: &Vec4<R>) -> [Complex<R>; 3] {
    [v[1].clone(), v[2].clone(), v[3].clone()]
}

/// `B = +-(i/2m) p x u`, `E = +-(i/2m) p_0 u -+ (i/2m) p u^0`, where the
/// negative-energy branch uses the conjugated vector.
pub fn strengths_from_u<R: Real>(
    p: &OnShellMomentum<R>,
    h: Helicity,
    n: &NormalizationMode<R>,
    sign: EnergySign,
) -> Result<FieldStrength3<R>> {
    let m = massive(p)?;
    let mut u = u_vector(p, h, n)?;
    let s = match sign {
        EnergySign::Positive => R::one(),
        EnergySign::Negative => {
            u = negative_energy(&u);
            -R::one()
        }
    };
    let pref = Complex::<R>::imag_unit() * c(&(s / (R::from_int(2) * m)));
    let [p0, p1, p2, p3] = p.upper();
    let pv = [p1, p2, p3];
    let uv = spatial(&u.u);
    let b = cross(&pv, &uv).map(|x| &pref * x);
    let e: [Complex<R>; 3] = std::array::from_fn(|j| &pref * (&p0 * &uv[j] - &pv[j] * &u.u[0]));
    Ok(FieldStrength3 { b, e, sign, inv_sqrt2: u.inv_sqrt2 })
}

/// `(h, h', value, count of 1/sqrt(2) factors)`.
pub type OrthogonalityEntry<R> = (Helicity, Helicity, Complex<R>, u8);

/// `g_{mu nu} u^mu(h) u^nu(h')*` for all helicity pairs, with the number of
/// `1/sqrt(2)` factors each entry carries.
pub fn orthogonality_table<R: Real>(
    p: &OnShellMomentum<R>,
    n: &NormalizationMode<R>,
) -> Result<Vec<OrthogonalityEntry<R>>> {
    let vectors: Vec<_> = Helicity::ALL.iter().map(|&h| u_vector(p, h, n)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for x in &vectors {
        for y in &vectors {
            let y_conj = y.u.clone().map(|v| v.conj());
            let k = u8::from(x.inv_sqrt2) + u8::from(y.inv_sqrt2);
            out.push((x.helicity, y.helicity, minkowski_dot(&x.u, &y_conj), k));
        }
    }
    Ok(out)
}

/// Which three-vector family a cross product is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CrossKind {
    U,
    B,
    E,
}

impl fmt::Display for CrossKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossKind::U => "u",
            CrossKind::B => "B",
            CrossKind::E => "E",
        })
    }
}

/// `X(h) x X(h')*` split into parts parallel and perpendicular to the
/// spatial momentum.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossProductEntry<R: Real> {
    pub kind: CrossKind,
    pub h: Helicity,
    pub h_prime: Helicity,
    pub vector: [Complex<R>; 3],
    /// Number of `1/sqrt(2)` factors not applied to `vector`.
    pub inv_sqrt2_power: u8,
    /// `c` in `V_par = c p`; absent for zero spatial momentum.
    pub parallel_coefficient: Option<Complex<R>>,
    /// `|V_par|^2 / |V|^2`; absent when either vanishes identically.
    pub parallel_fraction: Option<R>,
}

pub fn cross_product<R: Real>(x: &[Complex<R>; 3], y: &[Complex<R>; 3]) -> [Complex<R>; 3] {
    cross(x, &y.clone().map(|v| v.conj()))
}

fn norm_sq<R: Real>(v: &[Complex<R>; 3]) -> R {
    v.iter().fold(R::zero(), |acc, x| acc + x.norm_sqr())
}

pub fn cross_product_diagnostics<R: Real>(
    p: &OnShellMomentum<R>,
    n: &NormalizationMode<R>,
) -> Result<Vec<CrossProductEntry<R>>> {
    let mut families: Vec<(CrossKind, Helicity, [Complex<R>; 3], bool)> = Vec::new();
    for h in Helicity::PHYSICAL {
        let u = u_vector(p, h, n)?;
        let s = strengths_closed_form(p, h, n)?;
        families.push((CrossKind::U, h, spatial(&u.u), u.inv_sqrt2));
        families.push((CrossKind::B, h, s.b, s.inv_sqrt2));
        families.push((CrossKind::E, h, s.e, s.inv_sqrt2));
    }
    families.sort_by_key(|f| (f.0, f.1));
    let pv = spatial(&p.upper());
    let p_sq = norm_sq(&pv);
    let mut out = Vec::new();
    for (kind, h, x, sx) in &families {
        for (kind2, h2, y, sy) in &families {
            if kind != kind2 {
                continue;
            }
            let v = cross_product(x, y);
            let dot = v.iter().zip(&pv).fold(Complex::<R>::zero(), |acc, (a, b)| acc + a * b);
            let parallel_coefficient = (!p_sq.is_zero()).then(|| &dot / Complex::real(p_sq.clone()));
            let v_sq = norm_sq(&v);
            let parallel_fraction =
                (!p_sq.is_zero() && !v_sq.is_zero()).then(|| dot.norm_sqr() / (p_sq.clone() * v_sq));
            out.push(CrossProductEntry {
                kind: *kind,
                h: *h,
                h_prime: *h2,
                vector: v,
                inv_sqrt2_power: u8::from(*sx) + u8::from(*sy),
                parallel_coefficient,
                parallel_fraction,
            });
        }
    }
    Ok(out)
}

/// Which quantity a massless-limit scan follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanTarget {
    Polarization(Helicity),
    AstPotential,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LimitBehaviour {
    Convergent {
        limit: f64,
    },
    /// `|x| ~ m^-order`.
    Divergent {
        order: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentTrajectory {
    pub label: String,
    pub magnitudes: Vec<f64>,
    /// Log-log slope over the last three decades of the sequence.
    pub slope: Option<f64>,
    pub behaviour: LimitBehaviour,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitReport {
    pub target: ScanTarget,
    pub masses: Vec<f64>,
    pub components: Vec<ComponentTrajectory>,
    /// Exact values at `m = 0` for `N = m` with an integral momentum whose
    /// length is rational.
    pub exact_at_zero: Option<Vec<Complex<BigRational>>>,
}

/// `per_decade` logarithmically spaced masses from `hi` down to `lo`, inclusive.
pub fn log_mass_sequence(hi: f64, lo: f64, per_decade: usize) -> Vec<f64> {
    let decades = (hi / lo).log10();
    let steps = (decades * per_decade as f64).round() as usize;
    (0..=steps).map(|k| hi * 10f64.powf(-(k as f64) / per_decade as f64)).collect()
}

fn scan_values(p: &OnShellMomentum<f64>, target: ScanTarget, n: &NormalizationMode<f64>) -> Result<Vec<(String, f64)>> {
    Ok(match target {
        ScanTarget::Polarization(h) => {
            let u = u_vector(p, h, n)?;
            let v = u.physical().expect("floats have square roots");
            v.iter().enumerate().map(|(mu, x)| (format!("u^{mu}"), x.norm())).collect()
        }
        ScanTarget::AstPotential => {
            let a = ast_potential(p, n)?;
            crate::lorentz::PAIRS.iter().map(|&(i, j)| (format!("A^{i}{j}"), a[i][j].norm())).collect()
        }
    })
}

fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(_, y)| y <= 0.0) {
        return None;
    }
    let xs: Vec<f64> = points.iter().map(|(x, _)| x.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|(_, y)| y.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Some(sxy / sxx)
}

/// Follows the component magnitudes along a strictly decreasing mass sequence.
pub fn massless_limit_scan(
    p_spatial: [f64; 3],
    target: ScanTarget,
    n: &NormalizationMode<f64>,
    masses: &[f64],
) -> Result<LimitReport> {
    if masses.is_empty() || masses.windows(2).any(|w| w[1] >= w[0]) || masses.iter().any(|&m| m <= 0.0) {
        return Err(Error::InvalidArgument("mass sequence must be positive and strictly decreasing".into()));
    }
    let mut labels = Vec::new();
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for &m in masses {
        let p = mass_shell_energy(p_spatial, m)?;
        let values = scan_values(&p, target, n)?;
        if columns.is_empty() {
            labels = values.iter().map(|(l, _)| l.clone()).collect();
            columns = vec![Vec::with_capacity(masses.len()); values.len()];
        }
        for (col, (_, v)) in columns.iter_mut().zip(values) {
            col.push(v);
        }
    }
    let m_min = *masses.last().expect("nonempty");
    let window: Vec<usize> = (0..masses.len()).filter(|&k| masses[k] <= m_min * 1.0e3 * (1.0 + 1e-9)).collect();
    let components = labels
        .into_iter()
        .zip(columns)
        .map(|(label, magnitudes)| {
            let points: Vec<(f64, f64)> = window.iter().map(|&k| (masses[k], magnitudes[k])).collect();
            let slope = fit_slope(&points);
            let last = *magnitudes.last().expect("nonempty");
            let behaviour = match slope {
                Some(s) if s < -0.5 => LimitBehaviour::Divergent { order: -s },
                _ => LimitBehaviour::Convergent { limit: last },
            };
            ComponentTrajectory { label, magnitudes, slope, behaviour }
        })
        .collect();
    let exact_at_zero = match n {
        NormalizationMode::NEqualsM => exact_massless(p_spatial, target),
        _ => None,
    };
    Ok(LimitReport { target, masses: masses.to_vec(), components, exact_at_zero })
}

fn exact_massless(p_spatial: [f64; 3], target: ScanTarget) -> Option<Vec<Complex<BigRational>>> {
    if p_spatial.iter().any(|x| x.fract() != 0.0 || x.abs() > 1e15) {
        return None;
    }
    let spatial = p_spatial.map(|x| BigRational::from_integer((x as i64).into()));
    let p = mass_shell_energy(spatial, BigRational::zero()).ok()?;
    let n = NormalizationMode::NEqualsM;
    match target {
        ScanTarget::Polarization(h) => u_vector(&p, h, &n).ok().map(|u| u.u.to_vec()),
        ScanTarget::AstPotential => {
            ast_potential(&p, &n).ok().map(|a| crate::lorentz::PAIRS.iter().map(|&(i, j)| a[i][j].clone()).collect())
        }
    }
}

impl<R: Real> PolarizationVector<R> {
    /// `true` when `u` is the zero vector.
    pub fn is_zero(&self) -> bool {
        self.u.iter().all(|x| x.is_zero())
    }
}

/// Exact positive-energy strengths agree with the generated ones for every
/// physical helicity at `p`.
pub fn strengths_consistent<R: Real>(p: &OnShellMomentum<R>, n: &NormalizationMode<R>, tol: Tolerance) -> Result<bool> {
    for h in Helicity::PHYSICAL {
        let closed = strengths_closed_form(p, h, n)?;
        let generated = strengths_from_u(p, h, n, EnergySign::Positive)?;
        let same = |a: &[Complex<R>; 3], b: &[Complex<R>; 3]| a.iter().zip(b).all(|(x, y)| R::close(x, y, tol));
        if !(same(&closed.b, &generated.b) && same(&closed.e, &generated.e) && closed.inv_sqrt2 == generated.inv_sqrt2)
        {
            return Ok(false);
        }
    }
    Ok(true)
}
