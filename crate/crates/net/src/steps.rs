//! Replace hard-threshold units by two-ReLU ramp surrogates.

use crate::{ActivationKind, AffineLayer, Flavor, NetError, Network};

/// Replace every step unit `H(z)` by the narrow ramp
/// `(relu(z) - relu(z - delta)) / delta`, which agrees with `H` outside
/// `(0, delta]`. Each step costs two ReLU units; downstream weights absorb the
/// `1/delta` factor. The result is a pure-ReLU network computing the same
/// function except on the ramp slivers.
pub fn replace_steps(net: &Network, delta: f64) -> Result<Network, NetError> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(NetError::InvalidParameter(format!(
            "step ramp width must be positive and finite, got {delta}"
        )));
    }
    if !net.contains_steps() {
        return Ok(net.clone());
    }

    let mut layers: Vec<AffineLayer> = Vec::with_capacity(net.layer_count());
    // per old unit of the previous layer: column index in the new layer and
    // whether it was split (pair of ramp units)
    let mut col_map: Vec<(usize, bool)> = (0..net.input_dim()).map(|j| (j, false)).collect();
    let mut prev_cols = net.input_dim();

    for layer in net.layers() {
        let split: Vec<bool> = layer
            .activations
            .iter()
            .map(|&a| a == ActivationKind::Step)
            .collect();
        let new_rows = layer.rows + split.iter().filter(|&&s| s).count();

        let mut weights = vec![0.0; new_rows * prev_cols];
        let mut bias = Vec::with_capacity(new_rows);
        let mut activations = Vec::with_capacity(new_rows);
        let mut new_map = Vec::with_capacity(layer.rows);

        let mut out_r = 0;
        for r in 0..layer.rows {
            let row = layer.row(r);
            let mut expanded = vec![0.0; prev_cols];
            for (j, &(nj, was_split)) in col_map.iter().enumerate() {
                if was_split {
                    expanded[nj] += row[j] / delta;
                    expanded[nj + 1] -= row[j] / delta;
                } else {
                    expanded[nj] += row[j];
                }
            }
            if split[r] {
                weights[out_r * prev_cols..(out_r + 1) * prev_cols].copy_from_slice(&expanded);
                weights[(out_r + 1) * prev_cols..(out_r + 2) * prev_cols]
                    .copy_from_slice(&expanded);
                bias.push(layer.bias[r]);
                bias.push(layer.bias[r] - delta);
                activations.push(ActivationKind::Relu);
                activations.push(ActivationKind::Relu);
                new_map.push((out_r, true));
                out_r += 2;
            } else {
                weights[out_r * prev_cols..(out_r + 1) * prev_cols].copy_from_slice(&expanded);
                bias.push(layer.bias[r]);
                activations.push(layer.activations[r]);
                new_map.push((out_r, false));
                out_r += 1;
            }
        }
        layers.push(AffineLayer::new(new_rows, prev_cols, weights, bias, activations)?);
        prev_cols = new_rows;
        col_map = new_map;
    }
    Network::new(layers, Flavor::ReluOnly)
}
