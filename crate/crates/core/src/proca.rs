//! Residuals of the generalized Proca system, its constraints and the
//! two-mass spin-1 system, all in momentum space with `d_mu -> -i p_mu`.

use num_complex::Complex;
use num_traits::Zero;

use crate::clifford::GammaBasis;
use crate::error::{Error, Result};
use crate::fields::{ProcaCoefficients, Spin1FieldConfig, TwoMassCoefficients};
use crate::lorentz::{scale_int, wedge, Grid, Lorentz, Position, Vec4};
use crate::numeric::OnShellMomentum;
use crate::residual::{Residual, ResidualBundle};
use crate::scalar::{Real, ScalarExt, Tolerance};

pub const PR1: &str = "antisymmetric_equation";
pub const PR2: &str = "vector_equation";
pub const SCALAR_CONSTRAINT: &str = "scalar_constraint";
pub const VECTOR_CONSTRAINT: &str = "vector_constraint";
pub const DUAL_DIVERGENCE: &str = "dual_divergence";
pub const DIVERGENCE: &str = "divergence";
pub const FIELD_STRENGTH: &str = "field_strength";
pub const PSI_DIVERGENCE: &str = "psi_divergence";

/// `X~^{mu nu} = 1/2 eps^{mu nu rho sigma} X_{rho sigma}` for a contravariant grid.
pub fn dual<R: Real>(x: &Grid<R>, basis: &GammaBasis<R>) -> Grid<R> {
    basis.lorentz.dual(x, Position::Upper)
}

fn minus_i<R: Real>() -> Complex<R> {
    -Complex::<R>::imag_unit()
}

fn real<R: Real>(x: &R) -> Complex<R> {
    Complex::real(x.clone())
}

/// `-i c_a m (p_mu A_nu - p_nu A_mu) - i c_f (p_mu F_nu - p_nu F_mu)
///  - i c_A m^2 eps_{ab mu nu} A^{ab} - 2 m c_F F_{mu nu}`.
pub fn residual_pr1<R: Real>(
    fields: &Spin1FieldConfig<R>,
    p: &OnShellMomentum<R>,
    c: &ProcaCoefficients<R>,
    lorentz: &Lorentz,
) -> ResidualBundle<R> {
    let i = Complex::<R>::imag_unit();
    let m = real(&c.m);
    let pl = p.lower();
    let pa = wedge(&pl, &fields.a);
    let pf = wedge(&pl, &fields.f);
    let a_up = Lorentz::flip_both(&fields.a2);
    let two = Complex::<R>::int(2);
    let grid: Grid<R> = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let mut eps_term = Complex::<R>::zero();
            for alpha in 0..4 {
                for beta in 0..4 {
                    let e = lorentz.eps_lower([alpha, beta, mu, nu]);
                    if e != 0 {
                        eps_term = eps_term + scale_int(&a_up[alpha][beta], e);
                    }
                }
            }
            -(&i * &c.c_a * &m * &pa[mu][nu])
                - &i * &c.c_f * &pf[mu][nu]
                - &i * &c.c_big_a * &m * &m * eps_term
                - &two * &m * &c.c_big_f * &fields.f2[mu][nu]
        })
    });
    ResidualBundle::new(vec![Residual::grid(PR1, grid)])
}

/// `c_a m^2 A_mu + c_f m F_mu - i c_A m eps_{mu nu ab} (-i p^nu) A^{ab}
///  - 2 c_F (-i p^nu) F_{mu nu}`.
pub fn residual_pr2<R: Real>(
    fields: &Spin1FieldConfig<R>,
    p: &OnShellMomentum<R>,
    c: &ProcaCoefficients<R>,
    lorentz: &Lorentz,
) -> ResidualBundle<R> {
    let i = Complex::<R>::imag_unit();
    let mi = minus_i::<R>();
    let m = real(&c.m);
    let pu = p.upper();
    let a_up = Lorentz::flip_both(&fields.a2);
    let two = Complex::<R>::int(2);
    let v: Vec4<R> = std::array::from_fn(|mu| {
        let mut eps_term = Complex::<R>::zero();
        let mut div = Complex::<R>::zero();
        for nu in 0..4 {
            let d = &mi * &pu[nu];
            div = div + &d * &fields.f2[mu][nu];
            for alpha in 0..4 {
                for beta in 0..4 {
                    let e = lorentz.eps_lower([mu, nu, alpha, beta]);
                    if e != 0 {
                        eps_term = eps_term + scale_int(&(&d * &a_up[alpha][beta]), e);
                    }
                }
            }
        }
        &c.c_a * &m * &m * &fields.a[mu] + &c.c_f * &m * &fields.f[mu]
            - &i * &c.c_big_a * &m * eps_term
            - &two * &c.c_big_f * div
    });
    ResidualBundle::new(vec![Residual::vector(PR2, v)])
}

/// The scalar constraint `m c_a (-i p^mu) A_mu + c_f (-i p^mu) F_mu` and the
/// vector constraint `m c_A (-i p^a) A_{a mu} + (i/2) c_F eps_{ab nu mu} (-i p^a) F^{b nu}`.
/// The lowercase `f_mu` of the scalar constraint is read as `F_mu`.
pub fn residual_constraints<R: Real>(
    fields: &Spin1FieldConfig<R>,
    p: &OnShellMomentum<R>,
    c: &ProcaCoefficients<R>,
    lorentz: &Lorentz,
) -> ResidualBundle<R> {
    let i = Complex::<R>::imag_unit();
    let mi = minus_i::<R>();
    let m = real(&c.m);
    let d: Vec4<R> = std::array::from_fn(|mu| &mi * &p.upper()[mu]);
    let div_a = d.iter().zip(&fields.a).fold(Complex::zero(), |acc, (x, y)| acc + x * y);
    let div_f = d.iter().zip(&fields.f).fold(Complex::zero(), |acc, (x, y)| acc + x * y);
    let scalar = &m * &c.c_a * div_a + &c.c_f * div_f;
    let f_up = Lorentz::flip_both(&fields.f2);
    let half_i = &i * Complex::<R>::ratio(1, 2);
    let vector: Vec4<R> = std::array::from_fn(|mu| {
        let mut div = Complex::<R>::zero();
        let mut eps_term = Complex::<R>::zero();
        for alpha in 0..4 {
            div = div + &d[alpha] * &fields.a2[alpha][mu];
            for beta in 0..4 {
                for nu in 0..4 {
                    let e = lorentz.eps_lower([alpha, beta, nu, mu]);
                    if e != 0 {
                        eps_term = eps_term + scale_int(&(&d[alpha] * &f_up[beta][nu]), e);
                    }
                }
            }
        }
        &m * &c.c_big_a * div + &half_i * &c.c_big_f * eps_term
    });
    ResidualBundle::new(vec![Residual::scalar(SCALAR_CONSTRAINT, scalar), Residual::vector(VECTOR_CONSTRAINT, vector)])
}

/// The four two-mass residuals, contravariant in their free indices:
/// `2c_1 (-i p_mu) F~^{mu a} - 2i c_2 (-i p_mu) A^{mu a} + m_2 Psi^a`,
/// `2c_1 (-i p_mu) F^{mu a} + 2i c_2 (-i p_mu) A~^{mu a} + m_1 Psi^a`,
/// `2c_1 (m_1 F + i m_2 F~) + 2c_2 (m_2 A + i m_1 A~) - (-i p^mu Psi^nu + i p^nu Psi^mu)`,
/// `(-i p_mu) Psi^mu`.
pub fn residual_twomass<R: Real>(
    fields: &Spin1FieldConfig<R>,
    p: &OnShellMomentum<R>,
    c: &TwoMassCoefficients<R>,
    lorentz: &Lorentz,
) -> ResidualBundle<R> {
    let i = Complex::<R>::imag_unit();
    let mi = minus_i::<R>();
    let (m1, m2) = (real(&c.m1), real(&c.m2));
    let two = Complex::<R>::int(2);
    let d_lo: Vec4<R> = std::array::from_fn(|mu| &mi * &p.lower()[mu]);
    let d_up: Vec4<R> = std::array::from_fn(|mu| &mi * &p.upper()[mu]);
    let f_up = Lorentz::flip_both(&fields.f2);
    let a_up = Lorentz::flip_both(&fields.a2);
    let f_dual = lorentz.dual(&f_up, Position::Upper);
    let a_dual = lorentz.dual(&a_up, Position::Upper);
    let psi = Lorentz::flip_vec(&fields.psi);

    let contract_first =
        |x: &Grid<R>, alpha: usize| (0..4).fold(Complex::<R>::zero(), |acc, mu| acc + &d_lo[mu] * &x[mu][alpha]);
    let dual_div: Vec4<R> = std::array::from_fn(|alpha| {
        &two * &c.c1 * contract_first(&f_dual, alpha) - &two * &i * &c.c2 * contract_first(&a_up, alpha)
            + &m2 * &psi[alpha]
    });
    let div: Vec4<R> = std::array::from_fn(|alpha| {
        &two * &c.c1 * contract_first(&f_up, alpha)
            + &two * &i * &c.c2 * contract_first(&a_dual, alpha)
            + &m1 * &psi[alpha]
    });
    let strength: Grid<R> = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            &two * &c.c1 * (&m1 * &f_up[mu][nu] + &i * &m2 * &f_dual[mu][nu])
                + &two * &c.c2 * (&m2 * &a_up[mu][nu] + &i * &m1 * &a_dual[mu][nu])
                - (&d_up[mu] * &psi[nu] - &d_up[nu] * &psi[mu])
        })
    });
    let psi_div = d_lo.iter().zip(&psi).fold(Complex::zero(), |acc, (x, y)| acc + x * y);
    ResidualBundle::new(vec![
        Residual::vector(DUAL_DIVERGENCE, dual_div),
        Residual::vector(DIVERGENCE, div),
        Residual::grid(FIELD_STRENGTH, strength),
        Residual::scalar(PSI_DIVERGENCE, psi_div),
    ])
}

/// Classical Proca configuration built from a covariant potential:
/// `F_{mu nu} = -i (p_mu A_nu - p_nu A_mu)`, all other fields zero.
pub fn proca_solution<R: Real>(a: &Vec4<R>, p: &OnShellMomentum<R>) -> Spin1FieldConfig<R> {
    let mi = minus_i::<R>();
    let w = wedge(&p.lower(), a);
    Spin1FieldConfig {
        a: a.clone(),
        f2: std::array::from_fn(|mu| std::array::from_fn(|nu| &mi * &w[mu][nu])),
        ..Spin1FieldConfig::default()
    }
}

/// Two-mass configuration `F^{mu nu} = -i/(2 c_1 m_1) (p^mu Psi^nu - p^nu Psi^mu)`
/// with `A = 0`, from a covariant `Psi`.
pub fn twomass_solution<R: Real>(
    psi: &Vec4<R>,
    p: &OnShellMomentum<R>,
    c: &TwoMassCoefficients<R>,
) -> Result<Spin1FieldConfig<R>> {
    let denom = Complex::<R>::int(2) * &c.c1 * real(&c.m1);
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let k = minus_i::<R>() / denom;
    let w = wedge(&p.lower(), psi);
    Ok(Spin1FieldConfig {
        psi: psi.clone(),
        f2: std::array::from_fn(|mu| std::array::from_fn(|nu| &k * &w[mu][nu])),
        ..Spin1FieldConfig::default()
    })
}

/// Solves `r0 + x r1 = 0` for a single scalar `x`; `None` when no such `x`
/// exists or it is not unique.
pub fn solve_affine<R: Real>(r0: &[Complex<R>], r1: &[Complex<R>], tol: Tolerance) -> Option<Complex<R>> {
    let pivot = r1.iter().position(|v| !v.is_negligible(tol))?;
    let x = -(&r0[pivot] / &r1[pivot]);
    r0.iter().zip(r1).all(|(a, b)| (a + &x * b).is_negligible(tol)).then_some(x)
}

/// The `kappa` for which `F_{mu nu} = i m kappa A~_{mu nu}` annihilates the
/// vector constraint at the given `A_{mu nu}`.
pub fn kappa_star<R: Real>(
    a2: &Grid<R>,
    p: &OnShellMomentum<R>,
    c: &ProcaCoefficients<R>,
    lorentz: &Lorentz,
    tol: Tolerance,
) -> Option<Complex<R>> {
    let i_m = Complex::<R>::imag_unit() * real(&c.m);
    let dual = lorentz.dual(a2, Position::Lower);
    let at = |kappa: Complex<R>| {
        let fields = Spin1FieldConfig {
            a2: a2.clone(),
            f2: std::array::from_fn(|mu| std::array::from_fn(|nu| &i_m * &kappa * &dual[mu][nu])),
            ..Spin1FieldConfig::default()
        };
        residual_constraints(&fields, p, c, lorentz)
            .get(VECTOR_CONSTRAINT)
            .cloned()
            .map(|r| r.values)
            .unwrap_or_default()
    };
    let r0 = at(Complex::zero());
    let r1: Vec<_> = at(Complex::int(1)).iter().zip(&r0).map(|(a, b)| a - b).collect();
    solve_affine(&r0, &r1, tol)
}

/// The `lambda` for which `F_mu = lambda m A_mu` annihilates the scalar constraint.
pub fn lambda_star<R: Real>(
    a: &Vec4<R>,
    p: &OnShellMomentum<R>,
    c: &ProcaCoefficients<R>,
    lorentz: &Lorentz,
    tol: Tolerance,
) -> Option<Complex<R>> {
    let m = real(&c.m);
    let at = |lambda: Complex<R>| {
        let fields = Spin1FieldConfig {
            a: a.clone(),
            f: std::array::from_fn(|mu| &lambda * &m * &a[mu]),
            ..Spin1FieldConfig::default()
        };
        residual_constraints(&fields, p, c, lorentz)
            .get(SCALAR_CONSTRAINT)
            .cloned()
            .map(|r| r.values)
            .unwrap_or_default()
    };
    let r0 = at(Complex::zero());
    let r1: Vec<_> = at(Complex::int(1)).iter().zip(&r0).map(|(a, b)| a - b).collect();
    solve_affine(&r0, &r1, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::{grid_map, zero_grid, PAIRS};
    use crate::numeric::mass_shell_energy;
    use crate::scalar::rational;
    use num_rational::BigRational;

    type Q = BigRational;
    type C = Complex<Q>;

    fn q(n: i64) -> Q {
        rational(n, 1)
    }

    fn p122() -> OnShellMomentum<Q> {
        mass_shell_energy([q(1), q(2), q(2)], q(4)).unwrap()
    }

    // Covariant components of the longitudinal polarization at p = (1,2,2), m = 4:
    // u^mu = (2, 2/9, 4/9, 40/9).
    fn u0_lower() -> Vec4<Q> {
        [C::int(2), C::ratio(-2, 9), C::ratio(-4, 9), C::ratio(-40, 9)]
    }

    #[test]
    fn classical_solution_satisfies_both_equations() {
        let p = p122();
        let c = ProcaCoefficients::classical(q(4));
        let l = Lorentz::default();
        let fields = proca_solution(&u0_lower(), &p);
        assert!(residual_pr1(&fields, &p, &c, &l).is_zero(Tolerance::EXACT));
        assert!(residual_pr2(&fields, &p, &c, &l).is_zero(Tolerance::EXACT));
    }

    #[test]
    fn doubled_field_strength_leaves_minus_m_times_original() {
        let p = p122();
        let c = ProcaCoefficients::classical(q(4));
        let l = Lorentz::default();
        let mut fields = proca_solution(&u0_lower(), &p);
        let original = fields.f2.clone();
        fields.f2 = grid_map(&original, |v| v * C::int(2));
        let r = residual_pr1(&fields, &p, &c, &l);
        let expected = grid_map(&original, |v| v * C::int(-4));
        assert_eq!(r.residuals[0], Residual::grid(PR1, expected));
    }

    #[test]
    fn gauge_direction_obstruction() {
        let p = p122();
        let c = ProcaCoefficients::classical(q(4));
        let l = Lorentz::default();
        let fields = proca_solution(&p.lower(), &p);
        assert_eq!(fields.f2, zero_grid());
        let r = residual_pr2(&fields, &p, &c, &l);
        let expected: Vec<C> = p.lower().iter().map(|v| v * C::int(16)).collect();
        assert_eq!(r.residuals[0].values, expected);
    }

    #[test]
    fn zero_fields_give_zero_residuals() {
        let p = p122();
        let c = ProcaCoefficients::new(C::int(1), C::int(2), C::int(3), C::int(4), q(4));
        let l = Lorentz::default();
        let z = Spin1FieldConfig::default();
        assert!(residual_pr1(&z, &p, &c, &l).is_zero(Tolerance::EXACT));
        assert!(residual_pr2(&z, &p, &c, &l).is_zero(Tolerance::EXACT));
        assert!(residual_constraints(&z, &p, &c, &l).is_zero(Tolerance::EXACT));
        let tc = TwoMassCoefficients::new(C::int(1), C::int(1), q(4), q(1));
        assert!(residual_twomass(&z, &p, &tc, &l).is_zero(Tolerance::EXACT));
    }

    #[test]
    fn transverse_potential_passes_scalar_constraint() {
        let p = p122();
        let c = ProcaCoefficients::new(C::int(1), C::int(1), C::int(1), C::int(1), q(4));
        let fields = Spin1FieldConfig { a: u0_lower(), ..Spin1FieldConfig::default() };
        let r = residual_constraints(&fields, &p, &c, &Lorentz::default());
        assert!(r.get(SCALAR_CONSTRAINT).unwrap().is_zero(Tolerance::EXACT));
    }

    #[test]
    fn proportionality_diagnostics() {
        let p = p122();
        let c = ProcaCoefficients::new(C::int(2), C::int(3), C::int(1), C::ratio(1, 2), q(4));
        let l = Lorentz::default();
        let mut a2 = zero_grid::<Q>();
        for (k, (a, b)) in PAIRS.iter().copied().enumerate() {
            a2[a][b] = C::new(q(k as i64 + 1), q(1 - k as i64));
            a2[b][a] = -a2[a][b].clone();
        }
        assert_eq!(kappa_star(&a2, &p, &c, &l, Tolerance::EXACT), Some(C::int(-2)));
        let flipped = Lorentz::new(l.epsilon.flipped());
        assert_eq!(kappa_star(&a2, &p, &c, &flipped, Tolerance::EXACT), Some(C::int(-2)));
        let a = [C::int(1), C::int(0), C::int(2), C::int(-1)];
        assert_eq!(lambda_star(&a, &p, &c, &l, Tolerance::EXACT), Some(C::ratio(-2, 3)));
    }

    #[test]
    fn twomass_reduction_and_divergence_probe() {
        let p = p122();
        let l = Lorentz::default();
        let c = TwoMassCoefficients::new(C::ratio(1, 2), C::zero(), q(4), q(0));
        let fields = twomass_solution(&u0_lower(), &p, &c).unwrap();
        assert!(residual_twomass(&fields, &p, &c, &l).is_zero(Tolerance::EXACT));

        let probe = Spin1FieldConfig { psi: p.lower(), ..Spin1FieldConfig::default() };
        let r = residual_twomass(&probe, &p, &c, &l);
        assert_eq!(r.get(PSI_DIVERGENCE).unwrap().values, vec![C::new(q(0), q(-16))]);
    }

    #[test]
    fn residuals_are_linear() {
        let p = p122();
        let c = ProcaCoefficients::new(C::int(1), C::ratio(1, 3), C::new(q(0), q(2)), C::int(-1), q(4));
        let l = Lorentz::default();
        let mut x = proca_solution(&[C::int(1), C::int(2), C::int(0), C::int(5)], &p);
        x.f = [C::int(3), C::int(-1), C::new(q(1), q(1)), C::int(0)];
        let y = proca_solution(&u0_lower(), &p);
        let (alpha, beta) = (C::new(q(2), q(-1)), C::ratio(3, 7));
        let combo = Spin1FieldConfig::linear(&alpha, &x, &beta, &y);
        for f in [residual_pr1::<Q>, residual_pr2, residual_constraints] {
            let lhs = f(&combo, &p, &c, &l).flatten();
            let rx = f(&x, &p, &c, &l).flatten();
            let ry = f(&y, &p, &c, &l).flatten();
            let rhs: Vec<C> = rx.iter().zip(&ry).map(|(a, b)| &alpha * a + &beta * b).collect();
            assert_eq!(lhs, rhs);
        }
    }
}
