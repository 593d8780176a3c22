//! Grid-coupling certificate for measure-spreading networks.
//!
//! A network taking `n` inputs to `d` outputs couples `U[0,1]^n` to
//! `U[0,1]^d` at box resolution `1/k` when it maps every input box of the
//! product grid (side `k^{-d_i}` in coordinate `i`, where `d_i` outputs are
//! derived from input `i`) into a single output box of side `1/k`, and
//! distinct input boxes land in distinct output boxes. Since input boxes all
//! carry equal mass and output boxes have diameter `sqrt(d)/k`, any coupling
//! that pairs points within a shared box witnesses `W <= sqrt(d)/k`.

use crate::TransportError;
use pushforge_net::Network;

/// Geometry of the coupling grid; `outputs_per_input[i]` is the number of
/// output coordinates generated from input coordinate `i`.
#[derive(Debug, Clone)]
pub struct BoxCouplingSpec {
    pub k: usize,
    pub outputs_per_input: Vec<usize>,
}

impl BoxCouplingSpec {
    pub fn output_dim(&self) -> usize {
        self.outputs_per_input.iter().sum()
    }
}

/// Verify the box-coupling property by dense sampling: `grid_per_box` points
/// per input coordinate per box. Returns `Ok(false)` when some sampled point
/// escapes its box or two input boxes collide in the output grid.
pub fn box_coupling_check(
    net: &Network,
    spec: &BoxCouplingSpec,
    grid_per_box: usize,
) -> Result<bool, TransportError> {
    let n = spec.outputs_per_input.len();
    let d = spec.output_dim();
    let k = spec.k;
    if k == 0 || grid_per_box == 0 {
        return Err(TransportError::InvalidParameter("k and grid_per_box must be positive".into()));
    }
    if net.input_dim() != n || net.output_dim() != d {
        return Err(TransportError::InvalidParameter(format!(
            "net is {}->{}, spec wants {}->{}",
            net.input_dim(),
            net.output_dim(),
            n,
            d
        )));
    }
    // boxes per input coordinate: k^{d_i}
    let mut per_coord: Vec<usize> = Vec::with_capacity(n);
    let mut total: usize = 1;
    for &di in &spec.outputs_per_input {
        if di == 0 {
            return Err(TransportError::InvalidParameter("outputs_per_input entry is 0".into()));
        }
        let c = k.checked_pow(di as u32).ok_or_else(|| {
            TransportError::InvalidParameter("coupling grid overflows".into())
        })?;
        per_coord.push(c);
        total = total.checked_mul(c).ok_or_else(|| {
            TransportError::InvalidParameter("coupling grid overflows".into())
        })?;
    }
    if total > 1_000_000 {
        return Err(TransportError::InvalidParameter(format!(
            "coupling grid has {total} boxes, refusing above 1e6"
        )));
    }

    let mut seen = vec![false; k.pow(d as u32)];
    let mut box_idx = vec![0usize; n];
    loop {
        // sample this input box on a strict-interior grid
        let mut sample_idx = vec![0usize; n];
        let mut out_box: Option<Vec<usize>> = None;
        let mut ok = true;
        'samples: loop {
            let x: Vec<f64> = (0..n)
                .map(|i| {
                    let width = 1.0 / per_coord[i] as f64;
                    (box_idx[i] as f64 + (sample_idx[i] as f64 + 0.5) / grid_per_box as f64)
                        * width
                })
                .collect();
            let y = net.eval(&x)?;
            let this: Vec<usize> = y
                .iter()
                .map(|&v| (((v * k as f64).floor()) as isize).clamp(0, k as isize - 1) as usize)
                .collect();
            match &out_box {
                None => out_box = Some(this),
                Some(prev) => {
                    if *prev != this {
                        ok = false;
                        break 'samples;
                    }
                }
            }
            // advance sample counter
            for i in 0..n {
                sample_idx[i] += 1;
                if sample_idx[i] < grid_per_box {
                    break;
                }
                sample_idx[i] = 0;
                if i == n - 1 {
                    break 'samples;
                }
            }
            if n == 0 {
                break;
            }
        }
        if !ok {
            return Ok(false);
        }
        let flat = out_box
            .unwrap()
            .iter()
            .fold(0usize, |acc, &b| acc * k + b);
        if seen[flat] {
            return Ok(false); // two input boxes collide: not injective
        }
        seen[flat] = true;

        // advance box counter
        let mut carry = true;
        for i in 0..n {
            box_idx[i] += 1;
            if box_idx[i] < per_coord[i] {
                carry = false;
                break;
            }
            box_idx[i] = 0;
        }
        if carry {
            break;
        }
    }
    Ok(true)
}
