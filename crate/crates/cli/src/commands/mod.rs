//! Subcommand runners. Each returns its records; per-momentum work runs in
//! parallel and is merged back in input order.

use bwf_core::clifford::{build_gamma_basis_with, BasisConventions, GammaBasis};
use bwf_core::fields::{ExpansionSpec, ProcaCoefficients, TwoMassCoefficients};
use bwf_core::lorentz::Vec4;
use bwf_core::numeric::{mass_shell_energy, pythagorean_momenta, sample_momenta, OnShellMomentum};
use bwf_core::polarization::NormalizationMode;
use bwf_core::scalar::convert_scalar;
use bwf_core::{BigRational, Complex, Real, ScalarExt, Tolerance};
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{CoeffSpec, Command, Mode, MomentumSource, NormSpec, RunConfig, System};
use crate::report::Record;
use crate::CliError;

mod derive;
mod identities;
mod polarization;
mod residual;
mod spin2;

/// Default sample size when neither `--momentum` nor `--bound` is given.
pub const DEFAULT_SAMPLES: usize = 12;

pub fn run_records(cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Config(format!("thread pool: {e}")))?
            .install(|| dispatch(cfg)),
        None => dispatch(cfg),
    }
}

fn dispatch(cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    match cfg.mode {
        Mode::Exact => dispatch_in::<BigRational>(cfg),
        Mode::Approx => dispatch_in::<f64>(cfg),
    }
}

fn dispatch_in<R: Real>(cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    match cfg.command {
        Command::Identities => identities::run::<R>(cfg),
        Command::Derive => derive::run::<R>(cfg),
        Command::Residual => residual::run::<R>(cfg),
        Command::Polarization => polarization::run::<R>(cfg),
        Command::Spin2 => spin2::run::<R>(cfg),
    }
}

pub(crate) fn tolerance<R: Real>(cfg: &RunConfig) -> Tolerance {
    if R::EXACT {
        Tolerance::EXACT
    } else {
        Tolerance(cfg.tolerance)
    }
}

pub(crate) fn basis<R: Real>(cfg: &RunConfig) -> Result<GammaBasis<R>, CliError> {
    let conventions = BasisConventions { epsilon: cfg.epsilon, ..BasisConventions::default() };
    Ok(build_gamma_basis_with(conventions)?)
}

fn real<R: Real>(q: &BigRational) -> R {
    R::from_big_ratio(q)
}

/// The configured momenta. With `massive`, bound-generated lists drop `m = 0`
/// and an explicit massless momentum is a config error.
pub(crate) fn momenta<R: Real>(cfg: &RunConfig, massive: bool) -> Result<Vec<OnShellMomentum<R>>, CliError> {
    let list: Vec<OnShellMomentum<R>> = match &cfg.momenta {
        MomentumSource::Explicit(items) => {
            let mut out = Vec::with_capacity(items.len());
            for [p1, p2, p3, m] in items {
                let p = mass_shell_energy([real::<R>(p1), real(p2), real(p3)], real(m))
                    .map_err(|e| CliError::Config(format!("momentum ({},{},{};m={}): {e}", p1, p2, p3, m)))?;
                if massive && p.mass().is_zero() {
                    return Err(CliError::Config(format!("{} needs m > 0, got {}", cfg.command.name(), p.key())));
                }
                out.push(p);
            }
            out
        }
        MomentumSource::Bound(b) => pythagorean_momenta(*b)
            .into_iter()
            .filter(|p| !massive || !p.mass().is_zero())
            .map(|p| p.to_field())
            .collect(),
        MomentumSource::Default => sample_momenta(DEFAULT_SAMPLES).into_iter().map(|p| p.to_field()).collect(),
    };
    if list.is_empty() {
        return Err(CliError::Config("empty momentum list".into()));
    }
    Ok(list)
}

pub(crate) fn normalization<R: Real>(cfg: &RunConfig) -> NormalizationMode<R> {
    match &cfg.norm {
        NormSpec::M => NormalizationMode::NEqualsM,
        NormSpec::One => NormalizationMode::NEqualsOne,
        NormSpec::Custom(q) => NormalizationMode::Custom(real(q)),
    }
}

/// The expansion for the configured system at the mass carried by `p`.
pub(crate) fn expansion<R: Real>(cfg: &RunConfig, p: &OnShellMomentum<R>) -> ExpansionSpec<R> {
    let m = p.mass().clone();
    let c = |k: usize| match &cfg.coeffs {
        CoeffSpec::Explicit(list) => convert_scalar::<R>(&list[k]),
        CoeffSpec::Classical => unreachable!(),
    };
    match (cfg.system, &cfg.coeffs) {
        (System::Spin1, CoeffSpec::Classical) => ExpansionSpec::SingleMass(ProcaCoefficients::classical(m)),
        (System::Spin1, CoeffSpec::Explicit(_)) => {
            ExpansionSpec::SingleMass(ProcaCoefficients::new(c(0), c(1), c(2), c(3), m))
        }
        (System::Spin1TwoMass, CoeffSpec::Classical) => {
            ExpansionSpec::TwoMass(TwoMassCoefficients::new(Complex::int(1), Complex::zero(), m, real(&cfg.m2)))
        }
        (System::Spin1TwoMass, CoeffSpec::Explicit(_)) => {
            ExpansionSpec::TwoMass(TwoMassCoefficients::new(c(0), c(1), m, real(&cfg.m2)))
        }
    }
}

/// Runs `f` for every momentum in parallel, tagging each record with the
/// momentum key and keeping the input order.
pub(crate) fn per_momentum<R, F>(momenta: &[OnShellMomentum<R>], f: F) -> Result<Vec<Record>, CliError>
where
    R: Real,
    F: Fn(usize, &OnShellMomentum<R>) -> Result<Vec<Record>, CliError> + Sync,
{
    let groups: Vec<Vec<Record>> = momenta
        .par_iter()
        .enumerate()
        .map(|(k, p)| Ok(f(k, p)?.into_iter().map(|r| r.at(p.key())).collect()))
        .collect::<Result<_, CliError>>()?;
    Ok(groups.into_iter().flatten().collect())
}

pub(crate) fn scalar<R: Real>(z: &Complex<R>) -> Value {
    json!(z.render())
}

pub(crate) fn vector<R: Real>(v: &[Complex<R>]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub(crate) fn magnitude(x: f64) -> Value {
    json!(format!("{x:e}"))
}

pub(crate) fn lower<R: Real>(v: &Vec4<R>) -> Vec4<R> {
    bwf_core::lorentz::Lorentz::flip_vec(v)
}
