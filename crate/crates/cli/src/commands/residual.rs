use bwf_core::fields::{ExpansionSpec, Spin1FieldConfig};
use bwf_core::lorentz::Lorentz;
use bwf_core::polarization::{u_vector, Helicity};
use bwf_core::proca::{
    proca_solution, residual_constraints, residual_pr1, residual_pr2, residual_twomass, twomass_solution,
    PSI_DIVERGENCE,
};
use bwf_core::residual::ResidualBundle;
use bwf_core::{Complex, Real, ScalarExt, Tolerance};
use serde_json::{json, Map, Value};

use super::{basis, expansion, lower, magnitude, momenta, normalization, per_momentum, scalar, tolerance};
use crate::config::RunConfig;
use crate::report::{Record, Status};
use crate::CliError;

pub const F_ASSUMPTION: &str =
    "the lowercase f_mu of the scalar constraint c_f d^mu f_mu is read as the vector field F_mu";

const PROCA_ANCHOR: &str = "A = u(p,h), F_{mu nu} = -i (p_mu A_nu - p_nu A_mu)";
const TWOMASS_ANCHOR: &str = "Psi = u(p,h), F^{mu nu} = -i/(2 c_1 m_1) (p^mu Psi^nu - p^nu Psi^mu)";

fn summary<R: Real>(bundle: &ResidualBundle<R>, tol: Tolerance) -> Value {
    let map: Map<String, Value> = bundle
        .residuals
        .iter()
        .map(|r| (r.name.clone(), json!({ "zero": r.is_zero(tol), "max_abs": magnitude(r.max_magnitude()) })))
        .collect();
    Value::Object(map)
}

fn family_record<R: Real>(
    h: Helicity,
    bundle: &ResidualBundle<R>,
    tol: Tolerance,
    anchor: &str,
    extra: Value,
) -> Record {
    let vanishes = bundle.is_zero(tol);
    let (name, ok) = match h {
        Helicity::Timelike => ("time-like mode is not a solution".to_string(), !vanishes),
        _ => (format!("solution family h={h}"), vanishes),
    };
    let mut data = json!({ "helicity": h.to_string(), "residuals": summary(bundle, tol) });
    if let (Value::Object(d), Value::Object(e)) = (&mut data, extra) {
        d.extend(e);
    }
    Record::new(name, anchor, Status::from_bool(ok), data)
}

pub fn run<R: Real>(cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let b = basis::<R>(cfg)?;
    let lorentz: Lorentz = b.lorentz;
    let tol = tolerance::<R>(cfg);
    let n = normalization::<R>(cfg);
    let ps = momenta::<R>(cfg, true)?;
    let mut out = Vec::new();
    if matches!(expansion::<R>(cfg, &ps[0]), ExpansionSpec::SingleMass(_)) {
        out.push(Record::new(
            "scalar constraint symbol",
            "c_a m d^mu A_mu + c_f d^mu f_mu = 0",
            Status::Info,
            json!({ "assumption": F_ASSUMPTION }),
        ));
    }
    out.extend(per_momentum(&ps, |_, p| {
        let spec = expansion::<R>(cfg, p);
        spec.validate()?;
        let mut records = Vec::new();
        match &spec {
            ExpansionSpec::SingleMass(c) => {
                for h in Helicity::ALL {
                    let a = lower(&u_vector(p, h, &n)?.u);
                    let fields = proca_solution(&a, p);
                    let mut bundle = residual_pr1(&fields, p, c, &lorentz);
                    bundle.residuals.extend(residual_pr2(&fields, p, c, &lorentz).residuals);
                    bundle.residuals.extend(residual_constraints(&fields, p, c, &lorentz).residuals);
                    records.push(family_record(h, &bundle, tol, PROCA_ANCHOR, json!({ "assumption": F_ASSUMPTION })));
                }
            }
            ExpansionSpec::TwoMass(c) => {
                for h in Helicity::ALL {
                    let psi = lower(&u_vector(p, h, &n)?.u);
                    let fields = twomass_solution(&psi, p, c)?;
                    let bundle = residual_twomass(&fields, p, c, &lorentz);
                    records.push(family_record(h, &bundle, tol, TWOMASS_ANCHOR, json!({})));
                }
                let probe = Spin1FieldConfig { psi: p.lower(), ..Spin1FieldConfig::default() };
                let got =
                    residual_twomass(&probe, p, c, &lorentz).get(PSI_DIVERGENCE).expect("present").values[0].clone();
                let expected = -Complex::<R>::imag_unit() * Complex::real(c.m1.clone() * c.m1.clone());
                let ok = R::close(&got, &expected, tol) && !got.is_negligible(tol);
                records.push(Record::new(
                    "divergence probe Psi = p",
                    "d_mu Psi^mu = 0",
                    Status::from_bool(ok),
                    json!({ "residual": scalar(&got), "expected": scalar(&expected) }),
                ));
            }
        }
        Ok(records)
    })?);
    Ok(out)
}
