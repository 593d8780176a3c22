//! Exact piecewise-linear trace of a scalar-in/scalar-out ReLU network.
//!
//! A ReLU network restricted to an interval is piecewise linear; this module
//! computes its breakpoints by propagating a knot list layer by layer. On each
//! layer every wire is linear between consecutive knots, so a ReLU kink can
//! only appear at a sign change of a pre-activation between two knots, and the
//! crossing point is found by exact linear interpolation.
//!
//! `merge_tol` bounds knot density: a newly found crossing closer than the
//! tolerance to an already-present knot is dropped. Networks built from
//! narrow-ramp step surrogates otherwise explode the knot count with slivers
//! of width below floating-point significance; merging them perturbs the
//! function only on a set of total length `#merges * merge_tol`.

use crate::{ActivationKind, Flavor, NetError, Network};

/// Knots `(x, f(x))` of the network on `[domain.0, domain.1]`, endpoints
/// included, collinear interior knots pruned. Linear interpolation between
/// consecutive knots reproduces the network exactly away from merged slivers.
pub fn breakpoints_1d(
    net: &Network,
    domain: (f64, f64),
    merge_tol: f64,
) -> Result<Vec<(f64, f64)>, NetError> {
    if net.input_dim() != 1 {
        return Err(NetError::DimensionMismatch {
            expected: 1,
            got: net.input_dim(),
            context: "breakpoints input dim",
        });
    }
    if net.output_dim() != 1 {
        return Err(NetError::DimensionMismatch {
            expected: 1,
            got: net.output_dim(),
            context: "breakpoints output dim",
        });
    }
    if net.flavor() != Flavor::ReluOnly || net.contains_steps() {
        return Err(NetError::WrongFlavor {
            required: Flavor::ReluOnly,
            actual: net.flavor(),
        });
    }
    let (a, b) = domain;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(NetError::InvalidParameter(
            "empty or infinite breakpoint domain".into(),
        ));
    }
    if !(merge_tol >= 0.0) {
        return Err(NetError::InvalidParameter("negative merge tolerance".into()));
    }

    let mut ts = vec![a, b];
    let mut vals: Vec<Vec<f64>> = vec![vec![a], vec![b]];

    for layer in net.layers() {
        // builder-produced layers are mostly block-diagonal; skipping zero
        // weights makes deep wide nets tractable without changing any sum
        let sparse: Vec<Vec<(usize, f64)>> = (0..layer.rows)
            .map(|r| {
                layer
                    .row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| w != 0.0)
                    .map(|(c, &w)| (c, w))
                    .collect()
            })
            .collect();
        // pre-activations at current knots; linear in between
        let pre: Vec<Vec<f64>> = vals
            .iter()
            .map(|v| {
                (0..layer.rows)
                    .map(|r| {
                        let mut acc = 0.0;
                        for &(c, w) in &sparse[r] {
                            acc += w * v[c];
                        }
                        layer.bias[r] + acc
                    })
                    .collect()
            })
            .collect();

        // ReLU kinks strictly inside intervals
        let mut crossings: Vec<f64> = Vec::new();
        for r in 0..layer.rows {
            if layer.activations[r] != ActivationKind::Relu {
                continue;
            }
            for i in 0..ts.len() - 1 {
                let (p, q) = (pre[i][r], pre[i + 1][r]);
                if p * q < 0.0 {
                    let t = ts[i] + (ts[i + 1] - ts[i]) * (p / (p - q));
                    if t > ts[i] && t < ts[i + 1] {
                        crossings.push(t);
                    }
                }
            }
        }
        crossings.sort_by(|x, y| x.partial_cmp(y).unwrap());
        crossings.dedup();

        let mut new_ts = Vec::with_capacity(ts.len() + crossings.len());
        let mut new_vals = Vec::with_capacity(ts.len() + crossings.len());
        let mut ci = 0;
        for i in 0..ts.len() {
            new_ts.push(ts[i]);
            new_vals.push(pre[i].clone());
            if i + 1 == ts.len() {
                break;
            }
            while ci < crossings.len() && crossings[ci] < ts[i + 1] {
                let t = crossings[ci];
                ci += 1;
                if t - new_ts.last().unwrap() <= merge_tol || ts[i + 1] - t <= merge_tol {
                    continue; // sliver: fold into a neighbouring knot
                }
                // every wire is linear on (ts[i], ts[i+1])
                let lam = (t - ts[i]) / (ts[i + 1] - ts[i]);
                let v: Vec<f64> = pre[i]
                    .iter()
                    .zip(&pre[i + 1])
                    .map(|(&p, &q)| p + lam * (q - p))
                    .collect();
                new_ts.push(t);
                new_vals.push(v);
            }
        }

        for v in new_vals.iter_mut() {
            for (x, &act) in v.iter_mut().zip(&layer.activations) {
                *x = act.apply(*x);
            }
        }
        ts = new_ts;
        vals = new_vals;
    }

    let knots: Vec<(f64, f64)> = ts.iter().zip(&vals).map(|(&t, v)| (t, v[0])).collect();
    Ok(prune_collinear(knots))
}

/// Drop interior knots where the slope does not change (relative tolerance
/// 1e-9 against the larger neighbouring slope magnitude).
fn prune_collinear(knots: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    if knots.len() <= 2 {
        return knots;
    }
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(knots.len());
    out.push(knots[0]);
    for i in 1..knots.len() - 1 {
        let (x0, y0) = *out.last().unwrap();
        let (x1, y1) = knots[i];
        let (x2, y2) = knots[i + 1];
        let s1 = (y1 - y0) / (x1 - x0);
        let s2 = (y2 - y1) / (x2 - x1);
        let scale = s1.abs().max(s2.abs()).max(1.0);
        if (s1 - s2).abs() > 1e-9 * scale {
            out.push(knots[i]);
        }
    }
    out.push(*knots.last().unwrap());
    out
}
