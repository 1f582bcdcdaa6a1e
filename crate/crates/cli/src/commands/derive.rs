use bwf_core::bw::{derive_system, diff_against_paper, EquationKind, TargetSystem, Verdict};
use bwf_core::Real;
use serde_json::{json, Map, Value};

use super::{basis, expansion, momenta, per_momentum, scalar, tolerance};
use crate::config::{RunConfig, System};
use crate::report::{Record, Status};
use crate::CliError;

pub const ANCHOR: &str = "(p-slash - M) Psi = 0 = Psi (p-slash^T - M^T), Psi = Phi R";

pub fn run<R: Real>(cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let b = basis::<R>(cfg)?;
    let tol = tolerance::<R>(cfg);
    let (target, system) = match cfg.system {
        System::Spin1 => (TargetSystem::Proca, "spin1"),
        System::Spin1TwoMass => (TargetSystem::TwoMass, "spin1-twomass"),
    };
    per_momentum(&momenta::<R>(cfg, false)?, |_, p| {
        let spec = expansion::<R>(cfg, p);
        spec.validate()?;
        let derived = derive_system(&spec, p, &b, tol);
        let diff = diff_against_paper(&derived, target, &b.lorentz, tol);
        let rows: Vec<Value> = diff
            .rows
            .iter()
            .map(|r| json!({ "row": r.row, "verdict": r.verdict.to_string(), "scale": r.scale.as_ref().map(scalar) }))
            .collect();
        let mismatches: Vec<Value> = diff
            .mismatches
            .iter()
            .map(|m| {
                json!({
                    "row": m.row,
                    "component": m.component.to_string(),
                    "derived": scalar(&m.derived),
                    "expected": scalar(&m.expected),
                })
            })
            .collect();
        let diff_record = Record::new(
            "derivation diff",
            ANCHOR,
            Status::from_bool(diff.verdict != Verdict::Mismatch),
            json!({ "system": system, "verdict": diff.verdict.to_string(), "rows": rows, "mismatches": mismatches }),
        );
        let mut equations = Map::new();
        for ((kind, slot), row) in derived.canonical() {
            let entries: Map<String, Value> = row
                .into_iter()
                .filter(|(_, v)| !matches!(v.as_str(), "0" | "0e0" | "-0e0"))
                .map(|(c, v)| (c.to_string(), Value::String(v)))
                .collect();
            equations.insert(format!("{kind}/{slot}"), Value::Object(entries));
        }
        let count = |k: EquationKind| derived.equations.iter().filter(|e| e.kind == k).count();
        let dims = Record::new(
            "derived system dimensions",
            ANCHOR,
            Status::Info,
            json!({
                "system": system,
                "unknowns": derived.components.len(),
                "equations": derived.equations.len(),
                "dynamics": count(EquationKind::Dynamics),
                "constraints": count(EquationKind::Constraint),
                "rank": derived.rank(tol),
                "coefficients": equations,
            }),
        );
        Ok(vec![diff_record, dims])
    })
}
