//! JSON tensor files: explicit index arrays with entries
//! `[re_num, re_den, im_num, im_den]`.

use std::path::Path;

use bwf_core::lorentz::{zero_grid, Grid, Lorentz};
use bwf_core::{BigRational, Complex};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorFile {
    pub schema: u32,
    pub name: String,
    pub rank: usize,
    /// `"lower"` or `"upper"` per index.
    pub variance: Vec<String>,
    pub antisymmetric: bool,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub index: Vec<usize>,
    pub value: [i64; 4],
}

fn invalid(path: &Path, msg: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("tensor file {}: {msg}", path.display()))
}

impl TensorFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| invalid(path, e))?;
        let file: TensorFile = serde_json::from_str(&text).map_err(|e| invalid(path, e))?;
        file.grid().map_err(|msg| invalid(path, msg))?;
        Ok(file)
    }

    /// The rank-2 tensor as stored, after validation.
    fn grid(&self) -> Result<Grid<BigRational>, String> {
        if self.schema != 1 {
            return Err(format!("unsupported schema {}", self.schema));
        }
        if self.rank != 2 || self.variance.len() != 2 {
            return Err("only rank-2 tensors are supported".into());
        }
        if let Some(v) = self.variance.iter().find(|v| *v != "lower" && *v != "upper") {
            return Err(format!("variance must be lower or upper, got {v:?}"));
        }
        let mut grid = zero_grid::<BigRational>();
        let mut seen = [[false; 4]; 4];
        for e in &self.entries {
            let [a, b] = match e.index.as_slice() {
                &[a, b] if a < 4 && b < 4 => [a, b],
                other => return Err(format!("bad index {other:?}")),
            };
            if std::mem::replace(&mut seen[a][b], true) {
                return Err(format!("duplicate index [{a}, {b}]"));
            }
            let [rn, rd, inn, id] = e.value;
            if rd == 0 || id == 0 {
                return Err(format!("zero denominator at [{a}, {b}]"));
            }
            grid[a][b] = Complex::new(BigRational::new(rn.into(), rd.into()), BigRational::new(inn.into(), id.into()));
        }
        if self.antisymmetric {
            let lowered = self.lowered(&grid);
            if !(0..4).all(|a| (0..4).all(|b| lowered[a][b] == -lowered[b][a].clone())) {
                return Err("declared antisymmetric but is not".into());
            }
        }
        Ok(grid)
    }

    fn lowered(&self, grid: &Grid<BigRational>) -> Grid<BigRational> {
        let sign = |k: usize, mu: usize| if self.variance[k] == "upper" { Lorentz::metric(mu) } else { 1 };
        std::array::from_fn(|a| {
            std::array::from_fn(|b| bwf_core::lorentz::scale_int(&grid[a][b], sign(0, a) * sign(1, b)))
        })
    }

    /// Components in the mixed `X_k^mu` layout used for `G`.
    pub fn lower_upper(&self) -> Grid<BigRational> {
        let grid = self.grid().expect("validated on load");
        let lowered = self.lowered(&grid);
        bwf_core::spin2::flip_second(&lowered)
    }

    /// Whether the fully covariant form is symmetric.
    pub fn is_symmetric(&self) -> bool {
        let lowered = self.lowered(&self.grid().expect("validated on load"));
        (0..4).all(|a| (0..4).all(|b| lowered[a][b] == lowered[b][a]))
    }

    /// Builds a file from a mixed `X_k^mu` grid, keeping only nonzero entries.
    pub fn from_lower_upper(name: &str, g: &Grid<BigRational>) -> Result<Self, CliError> {
        let small = |q: &BigRational| -> Result<(i64, i64), CliError> {
            let n = i64::try_from(q.numer().clone()).map_err(|_| CliError::Config("entry too large".into()))?;
            let d = i64::try_from(q.denom().clone()).map_err(|_| CliError::Config("entry too large".into()))?;
            Ok((n, d))
        };
        let mut entries = Vec::new();
        for (a, row) in g.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    let (rn, rd) = small(&v.re)?;
                    let (inn, id) = small(&v.im)?;
                    entries.push(Entry { index: vec![a, b], value: [rn, rd, inn, id] });
                }
            }
        }
        Ok(TensorFile {
            schema: 1,
            name: name.to_string(),
            rank: 2,
            variance: vec!["lower".into(), "upper".into()],
            antisymmetric: false,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Grid<BigRational>, String> {
        serde_json::from_str::<TensorFile>(text).map_err(|e| e.to_string())?.grid()
    }

    #[test]
    fn rejects_bad_files() {
        let base = |entries: &str, anti: bool| {
            format!(
                r#"{{"schema":1,"name":"x","rank":2,"variance":["lower","lower"],"antisymmetric":{anti},"entries":[{entries}]}}"#
            )
        };
        assert!(parse(&base(r#"{"index":[0,1],"value":[1,1,0,1]}"#, false)).is_ok());
        assert!(parse(&base(r#"{"index":[0,1],"value":[1,1,0,1]}"#, true)).is_err());
        assert!(parse(&base(r#"{"index":[0,1],"value":[1,1,0,1]},{"index":[1,0],"value":[-1,1,0,1]}"#, true)).is_ok());
        assert!(parse(&base(r#"{"index":[0,4],"value":[1,1,0,1]}"#, false)).is_err());
        assert!(parse(&base(r#"{"index":[0,1],"value":[1,0,0,1]}"#, false)).is_err());
        assert!(parse(&base(r#"{"index":[0,1],"value":[1,1,0,1]},{"index":[0,1],"value":[1,1,0,1]}"#, false)).is_err());
    }

    #[test]
    fn round_trips_mixed_layout() {
        let mut g = zero_grid::<BigRational>();
        g[1][2] = Complex::new(BigRational::new(3.into(), 2.into()), BigRational::new((-1).into(), 1.into()));
        g[0][0] = Complex::new(BigRational::new(5.into(), 1.into()), BigRational::new(0.into(), 1.into()));
        let file = TensorFile::from_lower_upper("g", &g).unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let back: TensorFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.lower_upper(), g);
    }
}
