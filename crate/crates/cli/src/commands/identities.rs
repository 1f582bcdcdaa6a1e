use bwf_core::clifford::{
    check_duality, check_r_properties, check_symmetric_basis, clifford_decompose, IdentityCheck, Matrix4,
};
use bwf_core::{Complex, Real};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{basis, tolerance};
use crate::config::RunConfig;
use crate::report::{Record, Status};
use crate::CliError;

pub const ROUNDTRIP_MATRICES: usize = 200;

fn record(check: IdentityCheck) -> Record {
    Record::new(
        check.name,
        check.formula,
        Status::from_bool(check.holds),
        json!({ "cases": check.cases, "failed_cases": check.failed_cases }),
    )
}

/// A matrix of Gaussian rationals with numerators in [-9, 9] and
/// denominators in [1, 9].
pub fn random_matrix<R: Real>(rng: &mut impl Rng) -> Matrix4<R> {
    let mut part = || R::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9));
    Matrix4::from_fn(|_, _| Complex::new(part(), part()))
}

pub fn run<R: Real>(cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let b = basis::<R>(cfg)?;
    let tol = tolerance::<R>(cfg);
    let mut out: Vec<Record> =
        check_r_properties(&b, tol).into_iter().chain(check_symmetric_basis(&b, tol)).map(record).collect();
    if cfg.roundtrip {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let failures: Vec<usize> = (0..ROUNDTRIP_MATRICES)
            .filter(|_| {
                let m = random_matrix::<R>(&mut rng);
                !clifford_decompose(&m, &b).reconstruct(&b).approx_eq(&m, tol)
            })
            .collect();
        out.push(Record::new(
            "clifford round trip",
            "M = s 1 + p gamma^5 + v_mu gamma^mu + a_mu gamma^5 gamma^mu + 1/2 t_{mu nu} sigma^{mu nu}",
            Status::from_bool(failures.is_empty()),
            json!({ "matrices": ROUNDTRIP_MATRICES, "seed": cfg.seed, "failed": failures }),
        ));
        let mut duality = record(check_duality(&b, tol));
        duality.data["epsilon_0123"] = json!(b.lorentz.epsilon.value());
        out.push(duality);
    }
    Ok(out)
}
