//! The eight acceptance criteria, one PASS/FAIL line each.

use std::process::Command;

use bwf_core::bw::{derive_system, diff_against_paper, TargetSystem, Verdict};
use bwf_core::clifford::{
    build_gamma_basis, check_duality, check_r_properties, check_symmetric_basis, clifford_decompose, CliffordSlot,
    Matrix4,
};
use bwf_core::fields::{ExpansionSpec, ProcaCoefficients, Spin1FieldConfig, TwoMassCoefficients};
use bwf_core::lorentz::{permutation_sign, Grid, Lorentz, Vec4};
use bwf_core::numeric::{mass_shell_energy, sample_momenta};
use bwf_core::polarization::{
    ast_potential, log_mass_sequence, massless_limit_scan, strengths_closed_form, strengths_from_u, u_vector,
    EnergySign, Helicity, LimitBehaviour, NormalizationMode, ScanTarget,
};
use bwf_core::proca::{residual_pr1, residual_pr2, residual_twomass, PSI_DIVERGENCE};
use bwf_core::spin2::{contract_to_vector, random_symmetric_g, residual_second_order, transversality_equivalence};
use bwf_core::{BigRational, Complex, ExactBasis, ExactMomentum, ExactScalar, ScalarExt, Tolerance};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = BigRational;
type C = ExactScalar;
type Outcome = Result<String, String>;
type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

const EXACT: Tolerance = Tolerance::EXACT;
const METRIC: [i64; 4] = [1, -1, -1, -1];

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn momenta() -> Vec<ExactMomentum> {
    sample_momenta(12)
}

fn lower(v: &Vec4<Q>) -> Vec4<Q> {
    std::array::from_fn(|mu| &v[mu] * C::int(METRIC[mu]))
}

fn dot(a_upper: &Vec4<Q>, b_upper: &Vec4<Q>) -> C {
    (0..4).fold(C::zero(), |acc, mu| acc + &a_upper[mu] * &b_upper[mu] * C::int(METRIC[mu]))
}

/// `-i (p_mu A_nu - p_nu A_mu) * k` with both vectors covariant.
fn curl(p_lower: &Vec4<Q>, a_lower: &Vec4<Q>, k: &C) -> Grid<Q> {
    let mi = C::new(q(0), q(-1));
    std::array::from_fn(|mu| {
        std::array::from_fn(|nu| &mi * k * (&p_lower[mu] * &a_lower[nu] - &p_lower[nu] * &a_lower[mu]))
    })
}

fn criterion_1(basis: &ExactBasis) -> Outcome {
    let r_checks = check_r_properties(basis, EXACT);
    let sym_checks = check_symmetric_basis(basis, EXACT);
    ensure(r_checks.len() == 5 && sym_checks.len() == 16, || "wrong record counts".into())?;
    let failed: Vec<_> = r_checks.iter().chain(&sym_checks).filter(|c| !c.holds).map(|c| c.name.clone()).collect();
    ensure(failed.is_empty(), || format!("failed: {failed:?}"))?;

    let r = &basis.reflection;
    ensure(r.transpose() == -r, || "R^T != -R by direct transpose".into())?;
    ensure(r.adjoint() == *r && r * r == Matrix4::identity(), || "R not hermitian involution".into())?;
    let mut symmetric = 0;
    let mut antisymmetric = 0;
    for (slot, e) in basis.elements() {
        let er = &e * r;
        let expect_symmetric = matches!(slot, CliffordSlot::Vector(_) | CliffordSlot::Tensor(..));
        if expect_symmetric {
            ensure(er.transpose() == er, || format!("{slot} R not symmetric"))?;
            if let CliffordSlot::Tensor(..) = slot {
                let chiral = &(&basis.gamma5 * &e) * r;
                ensure(chiral.transpose() == chiral, || format!("gamma5 {slot} R not symmetric"))?;
            }
            symmetric += 1;
        } else {
            ensure(er.transpose() == -&er, || format!("{slot} R not antisymmetric"))?;
            antisymmetric += 1;
        }
    }
    ensure(symmetric == 10 && antisymmetric == 6, || "wrong symmetric/antisymmetric split".into())?;
    Ok("5 R properties and 16 basis verdicts hold exactly (10 symmetric, 6 antisymmetric)".into())
}

fn criterion_2(basis: &ExactBasis) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..200 {
        let mut part = || Q::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=12).into());
        let m = Matrix4::from_fn(|_, _| Complex::new(part(), part()));
        ensure(clifford_decompose(&m, basis).reconstruct(basis) == m, || format!("round trip failed on matrix {k}"))?;
    }
    ensure(check_duality(basis, EXACT).holds, || "duality identity failed".into())?;
    let half_i = C::new(q(0), Q::new(1.into(), 2.into()));
    for a in 0..4 {
        for b in 0..4 {
            if a == b {
                continue;
            }
            let lhs = &basis.gamma5 * &basis.sigma[a][b];
            let mut rhs = Matrix4::zero();
            for c in 0..4 {
                for d in 0..4 {
                    let e = permutation_sign([a, b, c, d]);
                    if e != 0 {
                        let sigma_lower = basis.sigma[c][d].scale(&C::int(METRIC[c] * METRIC[d] * e));
                        rhs = &rhs + &sigma_lower;
                    }
                }
            }
            ensure(lhs == rhs.scale(&half_i), || format!("duality fails at ({a},{b})"))?;
        }
    }
    Ok("200 random Gaussian-rational matrices reconstruct exactly; duality holds with eps^{0123} = +1".into())
}

fn criterion_3(basis: &ExactBasis) -> Outcome {
    let lorentz = Lorentz::default();
    let ps = momenta();
    ensure(ps.len() >= 12, || "fewer than 12 momenta".into())?;
    for p in &ps {
        let c = ProcaCoefficients::classical(p.mass().clone());
        let spec = ExpansionSpec::SingleMass(c.clone());
        let diff = diff_against_paper(&derive_system(&spec, p, basis, EXACT), TargetSystem::Proca, &lorentz, EXACT);
        ensure(diff.verdict == Verdict::UpToScalarPerEquation, || format!("verdict {} at {}", diff.verdict, p.key()))?;
        for h in Helicity::ALL {
            let a = lower(&u_vector(p, h, &NormalizationMode::NEqualsM).map_err(|e| e.to_string())?.u);
            let fields =
                Spin1FieldConfig { a: a.clone(), f2: curl(&p.lower(), &a, &C::one()), ..Spin1FieldConfig::default() };
            let vanishes = residual_pr1(&fields, p, &c, &lorentz).is_zero(EXACT)
                && residual_pr2(&fields, p, &c, &lorentz).is_zero(EXACT);
            let expected = h != Helicity::Timelike;
            ensure(vanishes == expected, || format!("h={h} at {}: residual zero = {vanishes}", p.key()))?;
        }
    }
    Ok(format!("{} momenta: identical-up-to-global-scalar-per-equation; h=+1,0,-1 solve, 0t fails", ps.len()))
}

fn criterion_4() -> Outcome {
    let lorentz = Lorentz::default();
    for p in momenta() {
        let m1 = p.mass().clone();
        for c1 in [C::one(), C::new(Q::new(1.into(), 3.into()), q(2))] {
            let c = TwoMassCoefficients::new(c1.clone(), C::zero(), m1.clone(), q(0));
            for h in Helicity::PHYSICAL {
                let psi = lower(&u_vector(&p, h, &NormalizationMode::NEqualsM).map_err(|e| e.to_string())?.u);
                let k = C::one() / (C::int(2) * &c1 * C::real(m1.clone()));
                let fields = Spin1FieldConfig {
                    psi: psi.clone(),
                    f2: curl(&p.lower(), &psi, &k),
                    ..Spin1FieldConfig::default()
                };
                let bundle = residual_twomass(&fields, &p, &c, &lorentz);
                ensure(bundle.residuals.len() == 4, || "expected four two-mass residuals".into())?;
                let nonzero: Vec<_> =
                    bundle.residuals.iter().filter(|r| !r.is_zero(EXACT)).map(|r| r.name.clone()).collect();
                ensure(nonzero.is_empty(), || format!("h={h} at {}: nonzero {nonzero:?}", p.key()))?;
            }
            let probe = Spin1FieldConfig { psi: p.lower(), ..Spin1FieldConfig::default() };
            let got = residual_twomass(&probe, &p, &c, &lorentz).get(PSI_DIVERGENCE).ok_or("missing residual")?.values
                [0]
            .clone();
            let expected = C::new(q(0), -(m1.clone() * m1.clone()));
            ensure(got == expected && !got.is_zero(), || {
                format!("probe at {}: {} vs {}", p.key(), got.render(), expected.render())
            })?;
        }
    }
    Ok("all four two-mass residuals vanish on the Proca family; probe Psi = p gives -i m1^2".into())
}

fn criterion_5() -> Outcome {
    let norms = [
        NormalizationMode::NEqualsM,
        NormalizationMode::NEqualsOne,
        NormalizationMode::Custom(Q::new(3.into(), 2.into())),
    ];
    let ps = momenta();
    for p in &ps {
        for n in &norms {
            for h in Helicity::PHYSICAL {
                let closed = strengths_closed_form(p, h, n).map_err(|e| e.to_string())?;
                let generated = strengths_from_u(p, h, n, EnergySign::Positive).map_err(|e| e.to_string())?;
                ensure(closed == generated, || format!("strengths differ h={h} {n} at {}", p.key()))?;
            }
            for h in Helicity::ALL {
                let u = u_vector(p, h, n).map_err(|e| e.to_string())?;
                let value = dot(&p.upper(), &u.u);
                let expected = match h {
                    Helicity::Timelike => C::real(n.value(p.mass()) * p.mass().clone()),
                    _ => C::zero(),
                };
                ensure(value == expected, || format!("p.u(h={h}) = {} at {}", value.render(), p.key()))?;
            }
        }
    }
    Ok(format!("{} momenta x 3 normalizations: strengths agree, p.u = 0 and p.u(0t) = N m exactly", ps.len()))
}

/// Least-squares slope of log|y| against log m.
fn slope(ms: &[f64], ys: &[f64]) -> f64 {
    let xs: Vec<f64> = ms.iter().map(|m| m.ln()).collect();
    let ls: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ls.iter().sum::<f64>() / n);
    let num: f64 = xs.iter().zip(&ls).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

fn criterion_6() -> Outcome {
    let directions: [[i64; 3]; 4] = [[0, 0, 1], [1, 2, 2], [3, 4, 0], [2, -3, 6]];
    let n_m = NormalizationMode::<Q>::NEqualsM;
    for d in directions {
        let p = mass_shell_energy(d.map(q), q(0)).map_err(|e| e.to_string())?;
        for h in Helicity::ALL {
            u_vector(&p, h, &n_m).map_err(|e| format!("u(h={h}) at m=0 along {d:?}: {e}"))?;
        }
        let a = ast_potential(&p, &n_m).map_err(|e| format!("A at m=0 along {d:?}: {e}"))?;
        if d[0] == 0 && d[1] == 0 {
            ensure(a.iter().flatten().all(|x| x.is_zero()), || "A does not vanish along OZ".into())?;
        }
        ensure(u_vector(&p, Helicity::Zero, &NormalizationMode::NEqualsOne).is_err(), || "N=1 finite at m=0".into())?;
    }

    let masses: Vec<f64> = log_mass_sequence(1e-3, 1e-6, 10);
    let spatial = [1.0, 2.0, 2.0];
    let mut checked = 0;
    for h in Helicity::ALL {
        let mut columns = vec![Vec::new(); 4];
        for &m in &masses {
            let p = mass_shell_energy(spatial, m).map_err(|e| e.to_string())?;
            let u = u_vector(&p, h, &NormalizationMode::NEqualsOne).map_err(|e| e.to_string())?;
            for (mu, col) in columns.iter_mut().enumerate() {
                col.push(u.u[mu].norm());
            }
        }
        for (mu, col) in columns.iter().enumerate() {
            if col.contains(&0.0) {
                continue;
            }
            let s = slope(&masses, col);
            if s < -0.5 {
                ensure((s + 1.0).abs() <= 0.01, || format!("u^{mu}(h={h}) slope {s}"))?;
                checked += 1;
            }
        }
        let report = massless_limit_scan(spatial, ScanTarget::Polarization(h), &NormalizationMode::NEqualsOne, &masses)
            .map_err(|e| e.to_string())?;
        for c in &report.components {
            if let LimitBehaviour::Divergent { order } = c.behaviour {
                ensure((order - 1.0).abs() <= 0.01, || format!("scan {} order {order}", c.label))?;
            }
        }
        let finite = massless_limit_scan(spatial, ScanTarget::Polarization(h), &NormalizationMode::NEqualsM, &masses)
            .map_err(|e| e.to_string())?;
        ensure(finite.components.iter().all(|c| matches!(c.behaviour, LimitBehaviour::Convergent { .. })), || {
            format!("N=m scan of h={h} diverges")
        })?;
    }
    let ast = massless_limit_scan(spatial, ScanTarget::AstPotential, &NormalizationMode::NEqualsOne, &masses)
        .map_err(|e| e.to_string())?;
    for c in &ast.components {
        if let LimitBehaviour::Divergent { order } = c.behaviour {
            ensure((order - 1.0).abs() <= 0.01, || format!("scan {} order {order}", c.label))?;
        }
    }
    ensure(checked > 0, || "no divergent components found with N=1".into())?;
    Ok(format!("N=m finite at m=0 and A = 0 along OZ; {checked} divergent N=1 components have slope -1 +- 0.01"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut total = 0;
    for p in momenta() {
        let m = p.mass().clone();
        let (p_lo, p_up) = (p.lower(), p.upper());
        let m2 = C::real(m.clone() * m.clone());
        let mut seen = [false; 2];
        for k in 0..100 {
            let g = random_symmetric_g(&mut rng, &p, k % 2 == 0);
            let pg: Vec4<Q> = std::array::from_fn(|a| (0..4).fold(C::zero(), |acc, nu| acc + &p_lo[nu] * &g[a][nu]));
            let transverse = pg.iter().all(|x| x.is_zero());
            let p_sq = dot(&p_up, &p_up);
            let oracle: Grid<Q> = std::array::from_fn(|a| {
                std::array::from_fn(|mu| (-(&p_up[mu] * &pg[a]) + &p_sq * &g[a][mu]) / &m2 - &g[a][mu])
            });
            let residual = residual_second_order(&g, &p, &m).map_err(|e| e.to_string())?;
            ensure(residual == oracle, || format!("second-order residual mismatch at {}", p.key()))?;
            let vanishes = residual.iter().flatten().all(|x| x.is_zero());
            ensure(vanishes == transverse, || format!("equivalence broken at {} sample {k}", p.key()))?;
            let verdict = transversality_equivalence(&g, &p, &m, EXACT).map_err(|e| e.to_string())?;
            ensure(verdict == (transverse, transverse), || "library verdict disagrees with oracle".into())?;
            seen[usize::from(transverse)] = true;

            let (f, scalar) = contract_to_vector(&g, &p, &m).map_err(|e| e.to_string())?;
            let mi = C::new(q(0), q(-1));
            ensure(f == pg.clone().map(|x| &mi * x), || "F_k != -i p_mu G_k^mu".into())?;
            let div: Vec4<Q> =
                std::array::from_fn(|a| (0..4).fold(C::zero(), |acc, mu| acc + &mi * &p_lo[mu] * &residual[a][mu]));
            ensure(div == f.clone().map(|x| -x), || "d_mu residual^mu != -F".into())?;
            let tr = (0..4).fold(C::zero(), |acc, a| acc + &residual[a][a]);
            ensure(tr == scalar, || "trace of residual != contracted scalar".into())?;
            total += 1;
        }
        ensure(seen == [true, true], || format!("only one direction exercised at {}", p.key()))?;
    }
    Ok(format!("{total} random symmetric G: equivalence holds both ways; contraction gives F_k and the scalar exactly"))
}

fn run_cli(args: &[&str], threads: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bwf"))
        .args(args)
        .args(["--format", "json", "--threads", threads])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("bwf {args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn criterion_8() -> Outcome {
    let suite: [&[&str]; 6] = [
        &["identities", "--roundtrip"],
        &["derive"],
        &["residual"],
        &["residual", "--system", "spin1-twomass"],
        &["polarization", "--scan-massless"],
        &["spin2"],
    ];
    let mut bytes = 0;
    for args in suite {
        let a = run_cli(args, "1")?;
        let b = run_cli(args, "4")?;
        let c = run_cli(args, "3")?;
        ensure(a == b && b == c, || format!("bwf {args:?} output differs across thread counts"))?;
        bytes += a.len();
    }
    Ok(format!("6 subcommands x 3 thread counts give byte-identical JSON ({bytes} bytes per run)"))
}

fn main() {
    let basis = build_gamma_basis::<Q>().expect("basis");
    let criteria: Vec<(&str, Criterion)> = vec![
        ("identity suite", Box::new(|| criterion_1(&basis))),
        ("clifford round trip and duality", Box::new(|| criterion_2(&basis))),
        ("classical reduction", Box::new(|| criterion_3(&basis))),
        ("two-mass reduction", Box::new(criterion_4)),
        ("polarization self-consistency", Box::new(criterion_5)),
        ("massless limit", Box::new(criterion_6)),
        ("spin-2 equivalence and contraction", Box::new(criterion_7)),
        ("deterministic reports", Box::new(criterion_8)),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {} FAIL {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
