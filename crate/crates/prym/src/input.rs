//! Input files: quartic models and stored rank-matrix data, as JSON or TOML.

use std::path::Path;

use prym_core::canonical::canonical_vars;
use prym_core::geometry::{plane_vars, ProjPoint, QuarticModel, U3Reading};
use prym_core::poly::{Poly, Vars};
use prym_core::Prime;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

const TEST_POINT: &str = include_str!("../data/test_point.toml");

/// A 6-nodal quartic given by its node list and the forms `u2, u3, u4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub prime: u64,
    pub nodes: Vec<Vec<i64>>,
    pub u2: String,
    pub u3: String,
    pub u4: String,
}

impl ModelFile {
    /// The bundled test point over `F_101`.
    pub fn test_point() -> ModelFile {
        toml::from_str(TEST_POINT).expect("bundled fixture parses")
    }

    /// `u3` is interpreted per `reading`, or resolved from the nodes when
    /// `None`.
    pub fn build(&self, reading: Option<U3Reading>) -> CliResult<QuarticModel> {
        let prime = Prime::new(self.prime)?;
        let nodes = self
            .nodes
            .iter()
            .map(|c| {
                if c.len() != 4 {
                    return Err(CliError::Usage(format!("node {c:?} does not have 4 coordinates")));
                }
                Ok(ProjPoint::from_ints(prime, c)?)
            })
            .collect::<CliResult<Vec<_>>>()?;
        let v = plane_vars();
        let parse = |name: &str, s: &str| parse_poly(name, s, &v, prime);
        let (u2, u3, u4) = (parse("u2", &self.u2)?, parse("u3", &self.u3)?, parse("u4", &self.u4)?);
        Ok(QuarticModel::from_forms(nodes, u2, u3, u4, reading)?)
    }

    /// The file that rebuilds `model` under its own reading.
    pub fn describe(model: &QuarticModel) -> ModelFile {
        ModelFile {
            prime: model.prime().get() as u64,
            nodes: model.nodes().iter().map(ProjPoint::given_coords).collect(),
            u2: model.u2().to_string(),
            u3: model.u3_as(model.reading()).to_string(),
            u4: model.u4().to_string(),
        }
    }
}

/// Three quadrics in `y0..y4` and the ε-parts of their first-order
/// deformations, one triple per family direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankFile {
    pub prime: u64,
    pub quadrics: Vec<String>,
    pub family: Vec<Vec<String>>,
}

impl RankFile {
    pub fn parse(&self) -> CliResult<(Vec<Poly>, Vec<Vec<Poly>>)> {
        let prime = Prime::new(self.prime)?;
        let y = canonical_vars();
        let quadrics = self.quadrics.iter().map(|s| parse_poly("quadric", s, &y, prime)).collect::<CliResult<Vec<_>>>()?;
        let family = self
            .family
            .iter()
            .map(|t| t.iter().map(|s| parse_poly("family quadric", s, &y, prime)).collect())
            .collect::<CliResult<Vec<_>>>()?;
        Ok((quadrics, family))
    }
}

/// Input of the `ks-rank` stage.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum RankInput {
    Matrix(RankFile),
    Model(ModelFile),
}

fn parse_poly(name: &str, s: &str, vars: &Vars, prime: Prime) -> CliResult<Poly> {
    Poly::parse(s, vars, prime).map_err(|e| CliError::Usage(format!("{name}: {e}")))
}

/// Reads `path` as TOML if it ends in `.toml` and as JSON otherwise.
pub fn load<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })?;
    if path.extension().is_some_and(|e| e == "toml") {
        Ok(toml::from_str(&text)?)
    } else {
        Ok(serde_json::from_str(&text)?)
    }
}
