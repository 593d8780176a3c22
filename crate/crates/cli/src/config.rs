//! TOML experiment configuration. Every field is optional; the CLI documents
//! the defaults in `--help` and records the effective values in the outputs.

use std::path::Path;

use anyhow::Context;
use serde::Deserialize;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub sweep_tent: SweepTent,
    #[serde(default)]
    pub sweep_phi: SweepPhi,
    #[serde(default)]
    pub sweep_inverse: SweepInverse,
    #[serde(default)]
    pub berry_esseen: BerryEsseen,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepTent {
    pub nodes: Vec<usize>,
    pub layers: Vec<usize>,
    pub latent_dim: usize,
    pub ambient_dim: usize,
    pub samples: usize,
    /// sampling slack added to the coupling upper bound
    pub slack: f64,
}

impl Default for SweepTent {
    fn default() -> Self {
        SweepTent {
            nodes: vec![12, 20, 36, 68],
            layers: vec![2, 3],
            latent_dim: 1,
            ambient_dim: 2,
            samples: 2000,
            slack: 0.03,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepPhi {
    pub eps: Vec<f64>,
    /// grid half-width and step for the sup-error scan
    pub z_max: f64,
    pub grid_points: usize,
}

impl Default for SweepPhi {
    fn default() -> Self {
        SweepPhi {
            eps: vec![1e-1, 1e-2, 1e-3],
            z_max: 6.0,
            grid_points: 1201,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepInverse {
    pub rounds: Vec<usize>,
    pub cdf_eps: f64,
    pub grid_points: usize,
}

impl Default for SweepInverse {
    fn default() -> Self {
        SweepInverse {
            rounds: vec![4, 8, 12],
            cdf_eps: 1e-4,
            grid_points: 1000,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BerryEsseen {
    pub n: Vec<usize>,
    pub samples: usize,
}

impl Default for BerryEsseen {
    fn default() -> Self {
        BerryEsseen {
            n: vec![4, 16, 64],
            samples: 50_000,
        }
    }
}

pub fn load(path: Option<&Path>) -> anyhow::Result<Config> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading config {}", p.display()))?;
            toml::from_str(&text).with_context(|| format!("parsing config {}", p.display()))
        }
    }
}
