//! Versioned structured-text (JSON) serialization of networks.
//!
//! Format: `{version, flavor, layers: [{rows, cols, weights, bias, activation}]}`
//! with row-major weights. `activation` is either a single tag applied to all
//! units of the layer or a per-unit list. Unknown versions are rejected.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::{ActivationKind, AffineLayer, Flavor, NetError, Network};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ActivationField {
    Uniform(ActivationKind),
    PerUnit(Vec<ActivationKind>),
}

#[derive(Serialize, Deserialize)]
struct LayerDoc {
    rows: usize,
    cols: usize,
    weights: Vec<f64>,
    bias: Vec<f64>,
    activation: ActivationField,
}

#[derive(Serialize, Deserialize)]
struct NetworkDoc {
    version: u32,
    flavor: Flavor,
    layers: Vec<LayerDoc>,
}

pub fn write_network<W: Write>(net: &Network, mut w: W) -> Result<(), NetError> {
    let doc = NetworkDoc {
        version: FORMAT_VERSION,
        flavor: net.flavor(),
        layers: net
            .layers()
            .iter()
            .map(|l| LayerDoc {
                rows: l.rows,
                cols: l.cols,
                weights: l.weights.clone(),
                bias: l.bias.clone(),
                activation: if l.activations.windows(2).all(|p| p[0] == p[1]) {
                    ActivationField::Uniform(l.activations[0])
                } else {
                    ActivationField::PerUnit(l.activations.clone())
                },
            })
            .collect(),
    };
    let text = serde_json::to_string_pretty(&doc)
        .map_err(|e| NetError::Format(e.to_string()))?;
    w.write_all(text.as_bytes())?;
    w.write_all(b"\n")?;
    Ok(())
}

pub fn read_network<R: Read>(mut r: R) -> Result<Network, NetError> {
    let mut text = String::new();
    r.read_to_string(&mut text)?;
    let doc: NetworkDoc =
        serde_json::from_str(&text).map_err(|e| NetError::Format(e.to_string()))?;
    if doc.version != FORMAT_VERSION {
        return Err(NetError::UnsupportedVersion(doc.version));
    }
    let layers = doc
        .layers
        .into_iter()
        .map(|l| {
            let activations = match l.activation {
                ActivationField::Uniform(a) => vec![a; l.rows],
                ActivationField::PerUnit(v) => v,
            };
            AffineLayer::new(l.rows, l.cols, l.weights, l.bias, activations)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Network::new(layers, doc.flavor)
}
