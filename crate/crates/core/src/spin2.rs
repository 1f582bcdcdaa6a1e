//! Residuals of the spin-2 dynamical equations, the second-order equation for
//! the symmetric tensor `G` and its contraction to a vector.

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::lorentz::{zero_grid, Grid, Lorentz, Vec4};
use crate::numeric::OnShellMomentum;
use crate::residual::{Residual, ResidualBundle};
use crate::scalar::{Real, ScalarExt, Tolerance};

pub type Rank3<R> = [[[Complex<R>; 4]; 4]; 4];
pub type Rank4<R> = [[[[Complex<R>; 4]; 4]; 4]; 4];

pub fn zero_rank3<R: Real>() -> Rank3<R> {
    std::array::from_fn(|_| zero_grid())
}

pub fn zero_rank4<R: Real>() -> Rank4<R> {
    std::array::from_fn(|_| zero_rank3())
}

/// Spin-2 fields with fixed index positions:
/// `g[k][mu] = G_k^mu`, `fv[k][t][mu] = F_{kt}^mu`, `t[k][mu][nu] = T_k^{mu nu}`,
/// `r[k][t][mu][nu] = R_{kt}^{mu nu}`, `d[k][t][a][b] = D_{kt}^{ab}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spin2FieldConfig<R: Real> {
    pub g: Grid<R>,
    pub fv: Rank3<R>,
    pub t: Rank3<R>,
    pub r: Rank4<R>,
    pub d: Rank4<R>,
}

impl<R: Real> Default for Spin2FieldConfig<R> {
    fn default() -> Self {
        Spin2FieldConfig { g: zero_grid(), fv: zero_rank3(), t: zero_rank3(), r: zero_rank4(), d: zero_rank4() }
    }
}

fn anti_first<R: Real>(x: &Rank3<R>) -> bool {
    (0..4).all(|a| (0..4).all(|b| (0..4).all(|c| x[a][b][c] == -x[b][a][c].clone())))
}

fn anti_last<R: Real>(x: &Rank3<R>) -> bool {
    x.iter().all(crate::lorentz::is_antisymmetric)
}

fn anti_both<R: Real>(x: &Rank4<R>) -> bool {
    let pairs = (0..4).all(|a| (0..4).all(|b| (0..4).all(|c| (0..4).all(|d| x[a][b][c][d] == -x[b][a][c][d].clone()))));
    pairs && x.iter().all(anti_last)
}

/// Moves the second index of a rank-2 grid between positions, e.g.
/// `G_k^mu <-> G_{k mu}`.
pub fn flip_second<R: Real>(g: &Grid<R>) -> Grid<R> {
    std::array::from_fn(|k| std::array::from_fn(|mu| crate::lorentz::scale_int(&g[k][mu], Lorentz::metric(mu))))
}

impl<R: Real> Spin2FieldConfig<R> {
    pub fn validate(&self) -> Result<()> {
        let lowered = flip_second(&self.g);
        if !(0..4).all(|a| (0..4).all(|b| lowered[a][b] == lowered[b][a])) {
            return Err(Error::InvalidField("G with both indices lowered is not symmetric".into()));
        }
        if !anti_first(&self.fv) {
            return Err(Error::InvalidField("F is not antisymmetric in its first pair".into()));
        }
        if !anti_last(&self.t) {
            return Err(Error::InvalidField("T is not antisymmetric in its last pair".into()));
        }
        if !anti_both(&self.r) {
            return Err(Error::InvalidField("R is not antisymmetric in both pairs".into()));
        }
        if !anti_both(&self.d) {
            return Err(Error::InvalidField("D is not antisymmetric in both pairs".into()));
        }
        Ok(())
    }

    pub fn scale(&self, k: &Complex<R>) -> Self {
        let g = |x: &Grid<R>| -> Grid<R> { std::array::from_fn(|a| std::array::from_fn(|b| k * &x[a][b])) };
        let r3 = |x: &Rank3<R>| -> Rank3<R> { std::array::from_fn(|a| g(&x[a])) };
        let r4 = |x: &Rank4<R>| -> Rank4<R> { std::array::from_fn(|a| r3(&x[a])) };
        Spin2FieldConfig { g: g(&self.g), fv: r3(&self.fv), t: r3(&self.t), r: r4(&self.r), d: r4(&self.d) }
    }
}

/// `alpha[0..3]` are alpha_1..alpha_3, `beta[0..9]` are beta_1..beta_9.
#[derive(Debug, Clone, PartialEq)]
pub struct Spin2Coefficients<R: Real> {
    pub alpha: [Complex<R>; 3],
    pub beta: [Complex<R>; 9],
}

impl<R: Real> Spin2Coefficients<R> {
    pub fn zero() -> Self {
        Spin2Coefficients {
            alpha: std::array::from_fn(|_| Complex::zero()),
            beta: std::array::from_fn(|_| Complex::zero()),
        }
    }

    fn ab(&self, alpha: usize, beta: usize) -> Complex<R> {
        &self.alpha[alpha - 1] * &self.beta[beta - 1]
    }

    /// Whether the second-order reduction applies.
    pub fn reducible(&self) -> bool {
        !self.alpha[0].is_zero() && !self.beta[0].is_zero()
    }
}

pub const T_DIVERGENCE: &str = "t_divergence";
pub const R_DIVERGENCE: &str = "r_divergence";
pub const T_CURL: &str = "t_curl";
pub const R_CURL: &str = "r_curl";

fn eps_sum<R: Real>(f: impl Fn(usize, usize) -> Complex<R>, eps: impl Fn(usize, usize) -> i64) -> Complex<R> {
    let mut acc = Complex::zero();
    for a in 0..4 {
        for b in 0..4 {
            let e = eps(a, b);
            if e != 0 {
                acc = acc + crate::lorentz::scale_int(&f(a, b), e);
            }
        }
    }
    acc
}

/// Duals used by the spin-2 equations, each on its tilded pair only.
struct Duals<R: Real> {
    /// `T~_{k,ab} = 1/2 eps_{ab rs} T_k^{rs}`.
    t: Rank3<R>,
    /// `R~^{ab,mu nu} = 1/2 eps^{mu nu rs} R^{ab}_{rs}`.
    r: Rank4<R>,
    /// `D~_{kt,ab} = 1/2 eps_{ab rs} D_{kt}^{rs}`.
    d: Rank4<R>,
    /// `F~^{ab,mu} = 1/2 eps^{ab rs} F_{rs}^mu`.
    f: Rank3<R>,
    /// `D^{ld}_{ab}`.
    d_flipped: Rank4<R>,
}

fn duals<R: Real>(fields: &Spin2FieldConfig<R>, lorentz: &Lorentz) -> Duals<R> {
    let half = Complex::<R>::ratio(1, 2);
    let g = |mu: usize| Lorentz::metric(mu);
    let sign = |v: &Complex<R>, s: i64| crate::lorentz::scale_int(v, s);
    let t = std::array::from_fn(|k| {
        std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                &half * eps_sum(|r, s| fields.t[k][r][s].clone(), |r, s| lorentz.eps_lower([a, b, r, s]))
            })
        })
    });
    let r = std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            std::array::from_fn(|mu| {
                std::array::from_fn(|nu| {
                    // R^{ab}_{rs} from R_{ab}^{rs}: raise the first pair, lower the second.
                    let x = |r: usize, s: usize| sign(&fields.r[a][b][r][s], g(a) * g(b) * g(r) * g(s));
                    &half * eps_sum(x, |r, s| lorentz.eps_upper([mu, nu, r, s]))
                })
            })
        })
    });
    let d = std::array::from_fn(|k| {
        std::array::from_fn(|t| {
            std::array::from_fn(|a| {
                std::array::from_fn(|b| {
                    &half * eps_sum(|r, s| fields.d[k][t][r][s].clone(), |r, s| lorentz.eps_lower([a, b, r, s]))
                })
            })
        })
    });
    let f = std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            std::array::from_fn(|mu| {
                &half * eps_sum(|r, s| fields.fv[r][s][mu].clone(), |r, s| lorentz.eps_upper([a, b, r, s]))
            })
        })
    });
    let d_flipped = std::array::from_fn(|l| {
        std::array::from_fn(|dd| {
            std::array::from_fn(|a| std::array::from_fn(|b| sign(&fields.d[l][dd][a][b], g(l) * g(dd) * g(a) * g(b))))
        })
    });
    Duals { t, r, d, f, d_flipped }
}

/// The four spin-2 equations as `right - left` in momentum space. The
/// `alpha_3 beta_9` term of the R-divergence equation is taken with the
/// `(1/m) d_nu` it needs to contract its free index, matching the other
/// terms of that equation.
pub fn residual_spin2<R: Real>(
    fields: &Spin2FieldConfig<R>,
    p: &OnShellMomentum<R>,
    c: &Spin2Coefficients<R>,
    m: &R,
    lorentz: &Lorentz,
) -> Result<ResidualBundle<R>> {
    if !m.is_positive() {
        return Err(Error::MasslessSingular);
    }
    let i = Complex::<R>::imag_unit();
    let inv_m = Complex::real(R::one() / m.clone());
    let half = Complex::<R>::ratio(1, 2);
    let two = Complex::<R>::int(2);
    let mi = -i.clone();
    let d_lo: Vec4<R> = p.lower().map(|x| &mi * x);
    let d_up: Vec4<R> = p.upper().map(|x| &mi * x);
    let dual = duals(fields, lorentz);
    let eu = |idx: [usize; 4]| lorentz.eps_upper(idx);
    let el = |idx: [usize; 4]| lorentz.eps_lower(idx);

    // Pieces shared by the divergence and curl equations.
    let t_left = |k: usize, mu: usize, nu: usize| {
        &two * c.ab(2, 4) * &fields.t[k][mu][nu]
            + &i * c.ab(3, 7) * eps_sum(|a, b| dual.t[k][a][b].clone(), |a, b| eu([a, b, mu, nu]))
    };
    let r_left = |k: usize, t: usize, mu: usize, nu: usize| {
        let dd = eps_sum(|a, b| dual.d[k][t][a][b].clone(), |a, b| eu([a, b, mu, nu]));
        let rr = eps_sum(|a, b| dual.r[a][b][mu][nu].clone(), |a, b| el([a, b, k, t]));
        let mut double = Complex::<R>::zero();
        for a in 0..4 {
            for b in 0..4 {
                let e1 = eu([a, b, mu, nu]);
                if e1 == 0 {
                    continue;
                }
                let inner = eps_sum(|l, d| dual.d_flipped[l][d][a][b].clone(), |l, d| el([l, d, k, t]));
                double = double + crate::lorentz::scale_int(&inner, e1);
            }
        }
        &two * c.ab(2, 5) * &fields.r[k][t][mu][nu] + &i * c.ab(3, 8) * dd + &i * c.ab(2, 6) * rr
            - &half * c.ab(3, 9) * double
    };
    let f_dual_term = |k: usize, t: usize, mu: usize| eps_sum(|a, b| dual.f[a][b][mu].clone(), |a, b| el([a, b, k, t]));

    let t_div = Residual::from_fn(T_DIVERGENCE, vec![4, 4], |ix| {
        let (k, mu) = (ix[0], ix[1]);
        let left = (0..4).fold(Complex::<R>::zero(), |acc, nu| acc + &d_lo[nu] * t_left(k, mu, nu)) * &inv_m;
        c.ab(1, 1) * &fields.g[k][mu] - left
    });
    let r_div = Residual::from_fn(R_DIVERGENCE, vec![4, 4, 4], |ix| {
        let (k, t, mu) = (ix[0], ix[1], ix[2]);
        let left = (0..4).fold(Complex::<R>::zero(), |acc, nu| acc + &d_lo[nu] * r_left(k, t, mu, nu)) * &inv_m;
        let right = c.ab(1, 2) * &fields.fv[k][t][mu] + &i * &half * c.ab(1, 3) * f_dual_term(k, t, mu);
        right - left
    });
    let t_curl = Residual::from_fn(T_CURL, vec![4, 4, 4], |ix| {
        let (k, mu, nu) = (ix[0], ix[1], ix[2]);
        let right = c.ab(1, 1) * &inv_m * (&d_up[mu] * &fields.g[k][nu] - &d_up[nu] * &fields.g[k][mu]);
        right - t_left(k, mu, nu)
    });
    let r_curl = Residual::from_fn(R_CURL, vec![4, 4, 4, 4], |ix| {
        let (k, t, mu, nu) = (ix[0], ix[1], ix[2], ix[3]);
        let right = c.ab(1, 2) * &inv_m * (&d_up[mu] * &fields.fv[k][t][nu] - &d_up[nu] * &fields.fv[k][t][mu])
            + &i * &half
                * &inv_m
                * c.ab(1, 3)
                * (&d_up[mu] * f_dual_term(k, t, nu) - &d_up[nu] * f_dual_term(k, t, mu));
        right - r_left(k, t, mu, nu)
    });
    Ok(ResidualBundle::new(vec![t_div, r_div, t_curl, r_curl]))
}

/// `(1/m^2) [-p^mu p_nu G_k^nu + p^2 G_k^mu] - G_k^mu`.
pub fn residual_second_order<R: Real>(g: &Grid<R>, p: &OnShellMomentum<R>, m: &R) -> Result<Grid<R>> {
    if !m.is_positive() {
        return Err(Error::MasslessSingular);
    }
    let inv_m2 = Complex::real(R::one() / (m.clone() * m.clone()));
    let p_up = p.upper();
    let p_lo = p.lower();
    let p_sq = Complex::real(p.square());
    Ok(std::array::from_fn(|k| {
        let pg = (0..4).fold(Complex::<R>::zero(), |acc, nu| acc + &p_lo[nu] * &g[k][nu]);
        std::array::from_fn(|mu| &inv_m2 * (-(&p_up[mu] * &pg) + &p_sq * &g[k][mu]) - &g[k][mu])
    }))
}

/// `F_k = -i p_mu G^mu_k` (using the symmetry of `G`) and the scalar
/// `(1/m^2) (-i p_k) F^k`.
pub fn contract_to_vector<R: Real>(g: &Grid<R>, p: &OnShellMomentum<R>, m: &R) -> Result<(Vec4<R>, Complex<R>)> {
    if !m.is_positive() {
        return Err(Error::MasslessSingular);
    }
    let mi = -Complex::<R>::imag_unit();
    let p_lo = p.lower();
    let f: Vec4<R> = std::array::from_fn(|k| (0..4).fold(Complex::zero(), |acc, mu| acc + &mi * &p_lo[mu] * &g[k][mu]));
    let f_up = Lorentz::flip_vec(&f);
    let inv_m2 = Complex::real(R::one() / (m.clone() * m.clone()));
    let scalar = (0..4).fold(Complex::<R>::zero(), |acc, k| acc + &mi * &p_lo[k] * &f_up[k]) * inv_m2;
    Ok((f, scalar))
}

/// `p_nu G_k^nu` for every `k`.
pub fn p_contraction<R: Real>(g: &Grid<R>, p: &OnShellMomentum<R>) -> Vec4<R> {
    let p_lo = p.lower();
    std::array::from_fn(|k| (0..4).fold(Complex::zero(), |acc, nu| acc + &p_lo[nu] * &g[k][nu]))
}

/// (second-order residual vanishes, `p_nu G_k^nu = 0`); equal on shell.
pub fn transversality_equivalence<R: Real>(
    g: &Grid<R>,
    p: &OnShellMomentum<R>,
    m: &R,
    tol: Tolerance,
) -> Result<(bool, bool)> {
    let m_sq = m.clone() * m.clone();
    if !R::close(&Complex::real(p.square()), &Complex::real(m_sq.clone()), tol) {
        return Err(Error::OffShellMomentum { p_squared: p.square().render(), m_squared: m_sq.render() });
    }
    let residual = residual_second_order(g, p, m)?;
    let vanishes = residual.iter().flatten().all(|x| x.is_negligible(tol));
    let transverse = p_contraction(g, p).iter().all(|x| x.is_negligible(tol));
    Ok((vanishes, transverse))
}

/// The trace `G_k^k` contraction of a mixed grid.
pub fn trace<R: Real>(x: &Grid<R>) -> Complex<R> {
    (0..4).fold(Complex::zero(), |acc, k| acc + &x[k][k])
}

/// `G_k^mu = a_k b^mu` from a covariant and a contravariant vector.
pub fn outer<R: Real>(a_lower: &Vec4<R>, b_upper: &Vec4<R>) -> Grid<R> {
    std::array::from_fn(|k| std::array::from_fn(|mu| &a_lower[k] * &b_upper[mu]))
}

fn random_scalar<R: Real>(rng: &mut impl Rng) -> Complex<R> {
    let mut part = || R::from_ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    Complex::new(part(), part())
}

/// A random `G_k^mu` whose fully covariant form is symmetric. With
/// `transverse`, it is projected so that `p_nu G_k^nu = 0` (requires `m > 0`).
pub fn random_symmetric_g<R: Real>(rng: &mut impl Rng, p: &OnShellMomentum<R>, transverse: bool) -> Grid<R> {
    let mut lower = zero_grid::<R>();
    for a in 0..4 {
        for b in a..4 {
            let v = random_scalar::<R>(rng);
            lower[b][a] = v.clone();
            lower[a][b] = v;
        }
    }
    if transverse {
        // P_a^b = delta_a^b - p_a p^b / m^2 applied to both indices.
        let m_sq = Complex::real(p.mass().clone() * p.mass().clone());
        let (p_lo, p_up) = (p.lower(), p.upper());
        let proj: Grid<R> = std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                let delta = if a == b { Complex::<R>::int(1) } else { Complex::zero() };
                delta - &p_lo[a] * &p_up[b] / &m_sq
            })
        });
        lower = std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                let mut acc = Complex::<R>::zero();
                for x in 0..4 {
                    for y in 0..4 {
                        acc = acc + &proj[a][x] * &proj[b][y] * &lower[x][y];
                    }
                }
                acc
            })
        });
    }
    flip_second(&lower)
}

/// Random spin-2 fields with the declared symmetries.
pub fn random_spin2_fields<R: Real>(rng: &mut impl Rng, p: &OnShellMomentum<R>) -> Spin2FieldConfig<R> {
    let mut out = Spin2FieldConfig { g: random_symmetric_g(rng, p, false), ..Spin2FieldConfig::default() };
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                if a < b {
                    let v = random_scalar::<R>(rng);
                    out.fv[b][a][c] = -v.clone();
                    out.fv[a][b][c] = v;
                }
                if b < c {
                    let v = random_scalar::<R>(rng);
                    out.t[a][c][b] = -v.clone();
                    out.t[a][b][c] = v;
                }
            }
        }
    }
    for x in [&mut out.r, &mut out.d] {
        for a in 0..4 {
            for b in a + 1..4 {
                for c in 0..4 {
                    for d in c + 1..4 {
                        let v = random_scalar::<R>(rng);
                        x[a][b][c][d] = v.clone();
                        x[b][a][d][c] = v.clone();
                        x[b][a][c][d] = -v.clone();
                        x[a][b][d][c] = -v;
                    }
                }
            }
        }
    }
    out
}
