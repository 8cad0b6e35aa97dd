use std::path::Path;

use nalgebra::{Matrix2, Vector2};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::photonmix::PhotonMixture;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStateFile {
    fock_probs: Option<Vec<f64>>,
    gaussian: Option<RawGaussian>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGaussian {
    mean: [f64; 2],
    cov: [[f64; 2]; 2],
}

/// Contents of a state file: a photon-number distribution or a Gaussian
/// state.
#[derive(Clone, Debug, PartialEq)]
pub enum StateFile {
    Fock(PhotonMixture),
    Gaussian(GaussianState),
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawStateFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidMixture(format!("state file: {e}")))?;
        match (raw.fock_probs, raw.gaussian) {
            (Some(probs), None) => Ok(Self::Fock(PhotonMixture::new(probs)?)),
            (None, Some(g)) => {
                let cov = Matrix2::new(g.cov[0][0], g.cov[0][1], g.cov[1][0], g.cov[1][1]);
                Ok(Self::Gaussian(GaussianState::new(Vector2::new(g.mean[0], g.mean[1]), cov)?))
            }
            _ => Err(Error::InvalidMixture(
                "state file needs exactly one of \"fock_probs\" or \"gaussian\"".into(),
            )),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidMixture(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
