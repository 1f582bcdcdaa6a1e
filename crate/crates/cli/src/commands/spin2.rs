use bwf_core::lorentz::{Grid, Lorentz};
use bwf_core::scalar::convert_scalar;
use bwf_core::spin2::{
    contract_to_vector, p_contraction, random_spin2_fields, random_symmetric_g, residual_second_order, residual_spin2,
    trace, transversality_equivalence, Spin2Coefficients,
};
use bwf_core::{Complex, Real, ScalarExt, Tolerance};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use super::{magnitude, momenta, per_momentum, scalar, tolerance};
use crate::config::RunConfig;
use crate::report::{Record, Status};
use crate::tensor_file::TensorFile;
use crate::CliError;

pub const SWEEP_SAMPLES: usize = 100;

const SECOND_ORDER: &str = "(d_nu d^mu G_k^nu - d^2 G_k^mu) / m^2 = G_k^mu";

fn nonzero_entries<R: Real>(g: &Grid<R>, tol: Tolerance) -> Value {
    let map: Map<String, Value> = (0..4)
        .flat_map(|k| (0..4).map(move |mu| (k, mu)))
        .filter(|&(k, mu)| !g[k][mu].is_negligible(tol))
        .map(|(k, mu)| (format!("{k}{mu}"), scalar(&g[k][mu])))
        .collect();
    Value::Object(map)
}

pub fn run<R: Real>(cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let tol = tolerance::<R>(cfg);
    let lorentz = Lorentz::new(cfg.epsilon);
    let supplied: Option<Grid<R>> = match &cfg.g_from {
        Some(path) => {
            let file = TensorFile::load(path)?;
            if !file.is_symmetric() {
                return Err(CliError::Config(format!("{}: G must be symmetric", path.display())));
            }
            let g = file.lower_upper();
            Some(std::array::from_fn(|k| std::array::from_fn(|mu| convert_scalar(&g[k][mu]))))
        }
        None => None,
    };
    let ps = momenta::<R>(cfg, true)?;
    per_momentum(&ps, |index, p| {
        let m = p.mass().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(index as u64));
        let mut agree = 0;
        let mut transverse = 0;
        let mut contraction_ok = 0;
        let mi = -Complex::<R>::imag_unit();
        for k in 0..SWEEP_SAMPLES {
            let g = random_symmetric_g(&mut rng, p, k % 2 == 0);
            let (vanishes, is_transverse) = transversality_equivalence(&g, p, &m, tol)?;
            agree += usize::from(vanishes == is_transverse);
            transverse += usize::from(is_transverse);
            let residual = residual_second_order(&g, p, &m)?;
            let (f, s) = contract_to_vector(&g, p, &m)?;
            let p_lo = p.lower();
            let divergence_ok = (0..4).all(|kk| {
                let d = (0..4).fold(Complex::<R>::zero(), |acc, mu| acc + &mi * &p_lo[mu] * &residual[kk][mu]);
                R::close(&d, &-f[kk].clone(), tol)
            });
            contraction_ok += usize::from(divergence_ok && R::close(&trace(&residual), &s, tol));
        }
        let mut records = vec![
            Record::new(
                "transversality equivalence",
                "second-order residual = 0 <=> p_nu G_k^nu = 0",
                Status::from_bool(agree == SWEEP_SAMPLES && transverse > 0 && transverse < SWEEP_SAMPLES),
                json!({ "samples": SWEEP_SAMPLES, "agree": agree, "transverse": transverse, "seed": cfg.seed.wrapping_add(index as u64) }),
            ),
            Record::new(
                "contraction to the vector pair",
                "d_mu (residual)_k^mu = -F_k, trace(residual) = (1/m^2) d^k F_k",
                Status::from_bool(contraction_ok == SWEEP_SAMPLES),
                json!({ "samples": SWEEP_SAMPLES, "agree": contraction_ok }),
            ),
        ];

        let fields = random_spin2_fields(&mut rng, p);
        let ones = Spin2Coefficients {
            alpha: std::array::from_fn(|_| Complex::int(1)),
            beta: std::array::from_fn(|_| Complex::int(1)),
        };
        let bundle = residual_spin2(&fields, p, &ones, &m, &lorentz)?;
        let sizes: Map<String, Value> =
            bundle.residuals.iter().map(|r| (r.name.clone(), magnitude(r.max_magnitude()))).collect();
        records.push(Record::new(
            "first-order residuals at unit coefficients",
            "right - left of the four first-order equations",
            Status::Info,
            json!({ "max_abs": sizes }),
        ));

        if let Some(g) = &supplied {
            let residual = residual_second_order(g, p, &m)?;
            let zero = residual.iter().flatten().all(|x| x.is_negligible(tol));
            let minus_g = (0..4).all(|k| (0..4).all(|mu| R::close(&residual[k][mu], &-g[k][mu].clone(), tol)));
            let contraction = p_contraction(g, p);
            records.push(Record::new(
                "supplied G",
                SECOND_ORDER,
                Status::from_bool(zero),
                json!({
                    "residual": nonzero_entries(&residual, tol),
                    "residual_equals_minus_g": minus_g,
                    "transverse": contraction.iter().all(|x| x.is_negligible(tol)),
                }),
            ));
        }
        Ok(records)
    })
}
