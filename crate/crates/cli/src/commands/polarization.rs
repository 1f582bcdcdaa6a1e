use bwf_core::lorentz::{minkowski_dot, PAIRS};
use bwf_core::numeric::OnShellMomentum;
use bwf_core::polarization::{
    ast_potential, ast_relation, log_mass_sequence, massless_limit_scan, orthogonality_table, strengths_closed_form,
    strengths_from_u, u_vector, EnergySign, Helicity, LimitBehaviour, LimitReport, NormalizationMode, ScanTarget,
};
use bwf_core::{BigRational, Complex, Real, ScalarExt};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{magnitude, momenta, normalization, per_momentum, scalar, tolerance, vector};
use crate::config::{NormSpec, RunConfig};
use crate::report::{Record, Status};
use crate::CliError;

/// Masses from 1e-3 down to 1e-6, ten per decade.
pub fn scan_masses() -> Vec<f64> {
    log_mass_sequence(1e-3, 1e-6, 10)
}

pub const SLOPE_WINDOW: f64 = 0.01;

fn per_sample<R: Real>(
    p: &OnShellMomentum<R>,
    n: &NormalizationMode<R>,
    tol: bwf_core::Tolerance,
) -> Result<Vec<Record>, CliError> {
    let mut out = Vec::new();
    let mut table = serde_json::Map::new();
    for h in Helicity::ALL {
        let u = u_vector(p, h, n)?;
        table.insert(h.to_string(), json!({ "u": vector(&u.u), "inv_sqrt2": u.inv_sqrt2 }));
    }
    out.push(Record::new(
        "polarization vectors",
        "u^mu(p, h)",
        Status::Info,
        json!({ "norm": n.to_string(), "vectors": table }),
    ));

    let nm = Complex::real(n.value(p.mass()) * p.mass().clone());
    for h in Helicity::ALL {
        let u = u_vector(p, h, n)?;
        let dot = minkowski_dot(&p.upper(), &u.u);
        let (anchor, expected) = match h {
            Helicity::Timelike => ("p_mu u^mu(p, 0_t) = N m", nm.clone()),
            _ => ("p_mu u^mu(p, h) = 0", Complex::zero()),
        };
        out.push(Record::new(
            format!("transversality h={h}"),
            anchor,
            Status::from_bool(R::close(&dot, &expected, tol)),
            json!({ "value": scalar(&dot), "expected": scalar(&expected) }),
        ));
    }

    for h in Helicity::PHYSICAL {
        let closed = strengths_closed_form(p, h, n)?;
        let generated = strengths_from_u(p, h, n, EnergySign::Positive)?;
        let same = |a: &[Complex<R>; 3], b: &[Complex<R>; 3]| a.iter().zip(b).all(|(x, y)| R::close(x, y, tol));
        let ok =
            same(&closed.b, &generated.b) && same(&closed.e, &generated.e) && closed.inv_sqrt2 == generated.inv_sqrt2;
        out.push(Record::new(
            format!("field strengths h={h}"),
            "B = (i/2m) p x u, E = (i/2m) (p^0 u - p u^0)",
            Status::from_bool(ok),
            json!({
                "b": vector(&closed.b),
                "e": vector(&closed.e),
                "b_from_u": vector(&generated.b),
                "e_from_u": vector(&generated.e),
                "inv_sqrt2": closed.inv_sqrt2,
            }),
        ));
    }

    let entries: Vec<Value> = orthogonality_table(p, n)?
        .into_iter()
        .map(|(h, h2, v, k)| json!({ "h": h.to_string(), "h_prime": h2.to_string(), "value": scalar(&v), "inv_sqrt2_power": k }))
        .collect();
    out.push(Record::new(
        "orthogonality table",
        "g_{mu nu} u^mu(h) u^nu(h')*",
        Status::Info,
        json!({ "entries": entries }),
    ));

    let a = ast_potential(p, n)?;
    let rel = ast_relation(p, n, tol)?;
    let pairs: serde_json::Map<String, Value> =
        PAIRS.iter().map(|&(i, j)| (format!("{i}{j}"), scalar(&a[i][j]))).collect();
    out.push(Record::new(
        "antisymmetric tensor potential",
        "A^{mu nu}(p) = (i N^2 / m) (...)",
        Status::Info,
        json!({
            "entries": pairs,
            "lambda_w_wedge_w_conj": rel.lambda_w.as_ref().map(scalar),
            "lambda_re_wedge_im": rel.lambda_re_im.as_ref().map(scalar),
        }),
    ));
    Ok(out)
}

fn scan_record(report: &LimitReport, spatial: &[f64; 3], n: &NormalizationMode<f64>) -> Record {
    let target = match report.target {
        ScanTarget::Polarization(h) => format!("u(p,{h})"),
        ScanTarget::AstPotential => "A^{mu nu}".to_string(),
    };
    let components: Vec<Value> = report
        .components
        .iter()
        .map(|c| {
            let (behaviour, value) = match c.behaviour {
                LimitBehaviour::Convergent { limit } => ("convergent", json!({ "limit": magnitude(limit) })),
                LimitBehaviour::Divergent { order } => ("divergent", json!({ "order": magnitude(order) })),
            };
            json!({
                "label": c.label,
                "behaviour": behaviour,
                "detail": value,
                "slope": c.slope.map(magnitude),
                "magnitudes": c.magnitudes.iter().map(|m| magnitude(*m)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let divergent: Vec<f64> = report
        .components
        .iter()
        .filter_map(|c| match c.behaviour {
            LimitBehaviour::Divergent { order } => Some(order),
            LimitBehaviour::Convergent { .. } => None,
        })
        .collect();
    let (anchor, ok) = match n {
        NormalizationMode::NEqualsM => (
            "N = m: finite as m -> 0",
            divergent.is_empty() && report.exact_at_zero.as_ref().is_none_or(|v| !v.is_empty()),
        ),
        _ => ("N = 1: divergent components scale as 1/m", divergent.iter().all(|o| (o - 1.0).abs() <= SLOPE_WINDOW)),
    };
    let exact: Option<Vec<Value>> = report.exact_at_zero.as_ref().map(|v| v.iter().map(scalar).collect());
    Record::new(
        format!("massless scan {target}"),
        anchor,
        Status::from_bool(ok),
        json!({
            "norm": n.to_string(),
            "masses": report.masses.iter().map(|m| magnitude(*m)).collect::<Vec<_>>(),
            "divergent": divergent.len(),
            "components": components,
            "exact_at_zero": exact,
        }),
    )
    .at(format!("({:e},{:e},{:e})", spatial[0], spatial[1], spatial[2]))
}

fn scans(cfg: &RunConfig, spatial: &[[f64; 3]]) -> Result<Vec<Record>, CliError> {
    let n: NormalizationMode<f64> = normalization(cfg);
    let masses = scan_masses();
    let mut out = Vec::new();
    for s in spatial {
        let targets = Helicity::ALL.iter().map(|&h| ScanTarget::Polarization(h)).chain([ScanTarget::AstPotential]);
        for target in targets {
            out.push(scan_record(&massless_limit_scan(*s, target, &n, &masses)?, s, &n));
        }
    }
    if cfg.norm == NormSpec::M {
        let p = bwf_core::numeric::mass_shell_energy(
            [BigRational::zero(), BigRational::zero(), BigRational::one()],
            BigRational::zero(),
        )?;
        let a = ast_potential(&p, &NormalizationMode::NEqualsM)?;
        let zero = a.iter().flatten().all(|x| x.is_negligible(bwf_core::Tolerance::EXACT));
        out.push(
            Record::new(
                "tensor potential vanishes along OZ at m = 0",
                "A^{mu nu}(p) = 0 for p along OZ, N = m, m = 0",
                Status::from_bool(zero),
                json!({ "entries": PAIRS.iter().map(|&(i, j)| scalar(&a[i][j])).collect::<Vec<_>>() }),
            )
            .at(p.key()),
        );
    }
    Ok(out)
}

pub fn run<R: Real>(cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let tol = tolerance::<R>(cfg);
    let n = normalization::<R>(cfg);
    let ps = momenta::<R>(cfg, true)?;
    let mut out = per_momentum(&ps, |_, p| per_sample(p, &n, tol))?;
    if cfg.scan_massless {
        let mut spatial: Vec<[f64; 3]> = Vec::new();
        for p in &ps {
            let s = p.spatial().map(|x| x.to_f64());
            if !spatial.contains(&s) {
                spatial.push(s);
            }
        }
        out.extend(scans(cfg, &spatial)?);
    }
    Ok(out)
}
