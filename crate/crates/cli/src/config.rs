//! Flag and config-file parsing into a resolved [`RunConfig`].

use std::path::PathBuf;
use std::str::FromStr;

use bwf_core::lorentz::EpsilonSign;
use bwf_core::{BigRational, Complex, ExactScalar};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "bwf", version, about = "Exact checks of Bargmann-Wigner spin-1 and spin-2 field equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Reflection-operator identities and the symmetric Clifford basis
    Identities,
    /// Machine derivation of the spin-1 system and its comparison with the hand-written one
    Derive,
    /// Spin-1 residuals on the constructed solution family
    Residual,
    /// Polarization vectors, field strengths and massless-limit scans
    Polarization,
    /// Spin-2 residuals and the transversality equivalence sweep
    Spin2,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Identities => "identities",
            Command::Derive => "derive",
            Command::Residual => "residual",
            Command::Polarization => "polarization",
            Command::Spin2 => "spin2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
pub enum System {
    #[value(name = "spin1")]
    #[serde(rename = "spin1")]
    Spin1,
    #[value(name = "spin1-twomass")]
    #[serde(rename = "spin1-twomass")]
    Spin1TwoMass,
}

#[derive(Debug, Default, Args)]
pub struct Flags {
    /// exact (Gaussian rationals) or approx (f64)
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,
    /// Relative tolerance in approx mode
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Use every Pythagorean momentum with components in [-bound, bound]
    #[arg(long, global = true)]
    pub bound: Option<u32>,
    /// Explicit momentum p1,p2,p3,m (repeatable)
    #[arg(long = "momentum", global = true, allow_hyphen_values = true)]
    pub momenta: Vec<String>,
    /// Polarization normalization: m, 1 or a rational
    #[arg(long, global = true)]
    pub norm: Option<String>,
    /// Sign of eps^{0123}: + or -
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub epsilon_sign: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// JSON config file; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Seed for the random suites
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads (the report does not depend on it)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub system: Option<System>,
    /// c_a = 1, c_F = 1/2, c_f = c_A = 0 (or c_1 = 1, c_2 = 0 for two masses)
    #[arg(long, global = true)]
    pub classical: bool,
    /// Comma-separated coefficients, each `re` or `re:im`: c_a,c_f,c_A,c_F or c_1,c_2
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// Second mass of the two-mass system
    #[arg(long, global = true)]
    pub m2: Option<String>,
    /// Add the massless-limit scans to the polarization report
    #[arg(long, global = true)]
    pub scan_massless: bool,
    /// Tensor file with a G_k^mu to test against the second-order equation
    #[arg(long, global = true)]
    pub g_from: Option<PathBuf>,
    /// Add the random Clifford round-trip and the duality identity to the identity suite
    #[arg(long, global = true)]
    pub roundtrip: bool,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    mode: Option<Mode>,
    tolerance: Option<f64>,
    bound: Option<u32>,
    momentum: Option<Vec<String>>,
    norm: Option<String>,
    epsilon_sign: Option<String>,
    format: Option<Format>,
    out: Option<PathBuf>,
    seed: Option<u64>,
    threads: Option<usize>,
    system: Option<System>,
    classical: Option<bool>,
    coeffs: Option<String>,
    m2: Option<String>,
    scan_massless: Option<bool>,
    g_from: Option<PathBuf>,
    roundtrip: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MomentumSource {
    Explicit(Vec<[BigRational; 4]>),
    Bound(u32),
    Default,
}

#[derive(Debug, Clone, PartialEq)]
pub enum NormSpec {
    M,
    One,
    Custom(BigRational),
}

#[derive(Debug, Clone, PartialEq)]
pub enum CoeffSpec {
    Classical,
    Explicit(Vec<ExactScalar>),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub mode: Mode,
    pub tolerance: f64,
    pub momenta: MomentumSource,
    pub norm: NormSpec,
    pub epsilon: EpsilonSign,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub threads: Option<usize>,
    pub system: System,
    pub coeffs: CoeffSpec,
    pub m2: BigRational,
    pub scan_massless: bool,
    pub g_from: Option<PathBuf>,
    pub roundtrip: bool,
}

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Parses `a`, `a/b` or a decimal such as `-0.25`.
pub fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let t = text.trim();
    let bad = || CliError::Config(format!("not a rational number: {text:?}"));
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        let den = format!("1{}", "0".repeat(frac.len()));
        return BigRational::from_str(&format!("{digits}/{den}")).map_err(|_| bad());
    }
    match BigRational::from_str(t) {
        Ok(v) => Ok(v),
        Err(_) => Err(bad()),
    }
}

/// Parses `re` or `re:im`.
pub fn parse_complex(text: &str) -> Result<ExactScalar, CliError> {
    match text.split_once(':') {
        Some((re, im)) => Ok(Complex::new(parse_rational(re)?, parse_rational(im)?)),
        None => Ok(Complex::new(parse_rational(text)?, BigRational::zero())),
    }
}

fn parse_momentum(text: &str) -> Result<[BigRational; 4], CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Config(format!("momentum must be p1,p2,p3,m; got {text:?}")));
    }
    let values = parts.iter().map(|p| parse_rational(p)).collect::<Result<Vec<_>, _>>()?;
    let [p1, p2, p3, m]: [BigRational; 4] = values.try_into().expect("four parts");
    if m.is_negative() {
        return Err(CliError::Config(format!("mass must be non-negative in {text:?}")));
    }
    Ok([p1, p2, p3, m])
}

fn parse_norm(text: &str) -> Result<NormSpec, CliError> {
    match text.trim() {
        "m" | "M" => Ok(NormSpec::M),
        "1" => Ok(NormSpec::One),
        other => {
            let v = parse_rational(other)?;
            if v.is_zero() {
                return Err(CliError::Config("normalization must be nonzero".into()));
            }
            Ok(NormSpec::Custom(v))
        }
    }
}

fn parse_epsilon(text: &str) -> Result<EpsilonSign, CliError> {
    match text.trim() {
        "+" | "+1" | "plus" => Ok(EpsilonSign::Plus),
        "-" | "-1" | "minus" | "flipped" => Ok(EpsilonSign::Minus),
        other => Err(CliError::Config(format!("epsilon sign must be + or -, got {other:?}"))),
    }
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let file = match &cli.flags.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
                serde_json::from_str::<FileConfig>(&text)
                    .map_err(|e| CliError::Config(format!("malformed config {}: {e}", path.display())))?
            }
            None => FileConfig::default(),
        };
        Self::resolve(cli.command, &cli.flags, file)
    }

    fn resolve(command: Command, f: &Flags, file: FileConfig) -> Result<Self, CliError> {
        let momentum_texts = if f.momenta.is_empty() { file.momentum.clone() } else { Some(f.momenta.clone()) };
        let bound = f.bound.or(file.bound);
        let momenta = match (momentum_texts, bound) {
            (Some(list), _) => {
                MomentumSource::Explicit(list.iter().map(|m| parse_momentum(m)).collect::<Result<_, _>>()?)
            }
            (None, Some(b)) => MomentumSource::Bound(b),
            (None, None) => MomentumSource::Default,
        };
        let tolerance = f.tolerance.or(file.tolerance).unwrap_or(1e-12);
        if !(tolerance.is_finite() && tolerance >= 0.0) {
            return Err(CliError::Config(format!("tolerance must be a non-negative number, got {tolerance}")));
        }
        if f.classical && f.coeffs.is_some() {
            return Err(CliError::Config("--classical and --coeffs are exclusive".into()));
        }
        let coeff_text = match (f.classical, &f.coeffs) {
            (true, _) => None,
            (false, Some(text)) => Some(text.clone()),
            (false, None) if file.classical == Some(true) => None,
            (false, None) => file.coeffs.clone(),
        };
        let coeffs = match coeff_text {
            Some(text) => CoeffSpec::Explicit(text.split(',').map(parse_complex).collect::<Result<_, _>>()?),
            None => CoeffSpec::Classical,
        };
        let system = f.system.or(file.system).unwrap_or(System::Spin1);
        if let CoeffSpec::Explicit(list) = &coeffs {
            let expected = match system {
                System::Spin1 => 4,
                System::Spin1TwoMass => 2,
            };
            if list.len() != expected {
                return Err(CliError::Config(format!("expected {expected} coefficients, got {}", list.len())));
            }
        }
        let m2 = match f.m2.clone().or(file.m2) {
            Some(t) => parse_rational(&t)?,
            None => BigRational::zero(),
        };
        if m2.is_negative() {
            return Err(CliError::Config("m2 must be non-negative".into()));
        }
        if f.threads.or(file.threads) == Some(0) {
            return Err(CliError::Config("--threads must be positive".into()));
        }
        Ok(RunConfig {
            command,
            mode: f.mode.or(file.mode).unwrap_or(Mode::Exact),
            tolerance,
            momenta,
            norm: parse_norm(f.norm.as_deref().or(file.norm.as_deref()).unwrap_or("m"))?,
            epsilon: parse_epsilon(f.epsilon_sign.as_deref().or(file.epsilon_sign.as_deref()).unwrap_or("+"))?,
            format: f.format.or(file.format).unwrap_or(Format::Text),
            out: f.out.clone().or(file.out),
            seed: f.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
            threads: f.threads.or(file.threads),
            system,
            coeffs,
            m2,
            scan_massless: f.scan_massless || file.scan_massless.unwrap_or(false),
            g_from: f.g_from.clone().or(file.g_from),
            roundtrip: f.roundtrip || file.roundtrip.unwrap_or(false),
        })
    }

    /// The settings that determine the report's content. Thread count and
    /// output path are left out so they cannot change the bytes.
    pub fn echo(&self) -> Value {
        let render = |q: &BigRational| bwf_core::Real::render(q);
        let momenta = match &self.momenta {
            MomentumSource::Explicit(list) => {
                json!({ "explicit": list.iter().map(|m| m.iter().map(render).collect::<Vec<_>>().join(",")).collect::<Vec<_>>() })
            }
            MomentumSource::Bound(b) => json!({ "pythagorean_bound": b }),
            MomentumSource::Default => json!("default-sample"),
        };
        let coeffs = match &self.coeffs {
            CoeffSpec::Classical => json!("classical"),
            CoeffSpec::Explicit(list) => {
                json!(list.iter().map(bwf_core::ScalarExt::render).collect::<Vec<_>>())
            }
        };
        let norm = match &self.norm {
            NormSpec::M => "m".to_string(),
            NormSpec::One => "1".to_string(),
            NormSpec::Custom(q) => render(q),
        };
        json!({
            "command": self.command.name(),
            "mode": match self.mode { Mode::Exact => "exact", Mode::Approx => "approx" },
            "tolerance": format!("{:e}", self.tolerance),
            "momenta": momenta,
            "norm": norm,
            "epsilon_sign": match self.epsilon { EpsilonSign::Plus => "+", EpsilonSign::Minus => "-" },
            "seed": self.seed,
            "system": match self.system { System::Spin1 => "spin1", System::Spin1TwoMass => "spin1-twomass" },
            "coefficients": coeffs,
            "m2": render(&self.m2),
            "scan_massless": self.scan_massless,
            "g_from": self.g_from.as_ref().map(|p| p.display().to_string()),
            "roundtrip": self.roundtrip,
        })
    }
}
