use serde::{Deserialize, Serialize};

use crate::NetError;

/// Per-unit activation applied after the affine map of a layer.
///
/// `Identity` is only legal on the final layer; `Step` (the hard threshold
/// `H(x) = 1[x > 0]`) is only legal in networks flagged [`Flavor::ReluStep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActivationKind {
    Relu,
    Step,
    Identity,
}

impl ActivationKind {
    #[inline]
    pub fn apply(self, x: f64) -> f64 {
        match self {
            ActivationKind::Relu => x.max(0.0),
            ActivationKind::Step => {
                if x > 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            ActivationKind::Identity => x,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    ReluOnly,
    ReluStep,
}

/// One affine map `x -> W x + b` followed by per-unit activations.
///
/// Weights are dense row-major: `weights[r * cols + c]` is the coefficient of
/// input `c` in output `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineLayer {
    pub rows: usize,
    pub cols: usize,
    pub weights: Vec<f64>,
    pub bias: Vec<f64>,
    pub activations: Vec<ActivationKind>,
}

impl AffineLayer {
    pub fn new(
        rows: usize,
        cols: usize,
        weights: Vec<f64>,
        bias: Vec<f64>,
        activations: Vec<ActivationKind>,
    ) -> Result<Self, NetError> {
        if weights.len() != rows * cols {
            return Err(NetError::DimensionMismatch {
                expected: rows * cols,
                got: weights.len(),
                context: "layer weights",
            });
        }
        if bias.len() != rows {
            return Err(NetError::DimensionMismatch {
                expected: rows,
                got: bias.len(),
                context: "layer bias",
            });
        }
        if activations.len() != rows {
            return Err(NetError::DimensionMismatch {
                expected: rows,
                got: activations.len(),
                context: "layer activations",
            });
        }
        if !weights.iter().chain(bias.iter()).all(|v| v.is_finite()) {
            return Err(NetError::NonFinite("layer construction"));
        }
        Ok(AffineLayer {
            rows,
            cols,
            weights,
            bias,
            activations,
        })
    }

    /// Uniform-activation convenience constructor.
    pub fn uniform(
        rows: usize,
        cols: usize,
        weights: Vec<f64>,
        bias: Vec<f64>,
        activation: ActivationKind,
    ) -> Result<Self, NetError> {
        Self::new(rows, cols, weights, bias, vec![activation; rows])
    }

    pub fn identity(dim: usize, activation: ActivationKind) -> Self {
        let mut weights = vec![0.0; dim * dim];
        for i in 0..dim {
            weights[i * dim + i] = 1.0;
        }
        AffineLayer {
            rows: dim,
            cols: dim,
            weights,
            bias: vec![0.0; dim],
            activations: vec![activation; dim],
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[f64] {
        &self.weights[r * self.cols..(r + 1) * self.cols]
    }

    /// Pre-activation output `W x + b`.
    pub fn affine(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.cols);
        let mut out = self.bias.clone();
        for r in 0..self.rows {
            let row = self.row(r);
            let mut acc = 0.0;
            for (w, v) in row.iter().zip(x.iter()) {
                acc += w * v;
            }
            out[r] += acc;
        }
        out
    }

    /// Compose with a preceding affine map: returns the layer computing
    /// `self.W (A x + b) + self.b` with `self`'s activations.
    pub fn after_affine(&self, a: &AffineLayer) -> AffineLayer {
        debug_assert_eq!(self.cols, a.rows);
        let mut weights = vec![0.0; self.rows * a.cols];
        let mut bias = self.bias.clone();
        for r in 0..self.rows {
            let row = self.row(r);
            for c in 0..a.cols {
                let mut acc = 0.0;
                for k in 0..self.cols {
                    acc += row[k] * a.weights[k * a.cols + c];
                }
                weights[r * a.cols + c] = acc;
            }
            let mut acc = 0.0;
            for k in 0..self.cols {
                acc += row[k] * a.bias[k];
            }
            bias[r] += acc;
        }
        AffineLayer {
            rows: self.rows,
            cols: a.cols,
            weights,
            bias,
            activations: self.activations.clone(),
        }
    }
}

/// Axis-aligned box domain, one `(lo, hi)` per input coordinate.
pub type BoxDomain = Vec<(f64, f64)>;

/// A layered feedforward network: a composition of affine layers with
/// pointwise activations, the final layer's activation being `Identity`.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    layers: Vec<AffineLayer>,
    flavor: Flavor,
}

impl Network {
    pub fn new(layers: Vec<AffineLayer>, flavor: Flavor) -> Result<Self, NetError> {
        if layers.is_empty() {
            return Err(NetError::InvalidParameter("network needs at least one layer".into()));
        }
        for w in layers.windows(2) {
            if w[1].cols != w[0].rows {
                return Err(NetError::DimensionMismatch {
                    expected: w[0].rows,
                    got: w[1].cols,
                    context: "adjacent layer dims",
                });
            }
        }
        let last = layers.len() - 1;
        for (i, layer) in layers.iter().enumerate() {
            for &a in &layer.activations {
                match a {
                    ActivationKind::Identity if i != last => {
                        return Err(NetError::InvalidParameter(
                            "identity activation only permitted on the final layer".into(),
                        ))
                    }
                    ActivationKind::Step if flavor != Flavor::ReluStep => {
                        return Err(NetError::InvalidParameter(
                            "step activation requires relu_step flavor".into(),
                        ))
                    }
                    _ => {}
                }
            }
        }
        if !layers[last].activations.iter().all(|&a| a == ActivationKind::Identity) {
            return Err(NetError::InvalidParameter(
                "final layer activation must be identity".into(),
            ));
        }
        Ok(Network { layers, flavor })
    }

    pub fn layers(&self) -> &[AffineLayer] {
        &self.layers
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn input_dim(&self) -> usize {
        self.layers[0].cols
    }

    pub fn output_dim(&self) -> usize {
        self.layers.last().unwrap().rows
    }

    /// Number of affine maps.
    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// Number of hidden node layers (layers before the final read-out).
    pub fn hidden_layer_count(&self) -> usize {
        self.layers.len() - 1
    }

    /// Total node count: input nodes plus every layer's output nodes.
    pub fn node_count(&self) -> usize {
        self.input_dim() + self.layers.iter().map(|l| l.rows).sum::<usize>()
    }

    pub fn hidden_unit_count(&self) -> usize {
        self.layers[..self.layers.len() - 1]
            .iter()
            .map(|l| l.rows)
            .sum()
    }

    pub fn contains_steps(&self) -> bool {
        self.layers
            .iter()
            .any(|l| l.activations.iter().any(|&a| a == ActivationKind::Step))
    }

    /// Evaluate the network at `x`.
    pub fn eval(&self, x: &[f64]) -> Result<Vec<f64>, NetError> {
        if x.len() != self.input_dim() {
            return Err(NetError::DimensionMismatch {
                expected: self.input_dim(),
                got: x.len(),
                context: "eval input",
            });
        }
        let mut cur = x.to_vec();
        for layer in &self.layers {
            let mut pre = layer.affine(&cur);
            for (v, &a) in pre.iter_mut().zip(&layer.activations) {
                *v = a.apply(*v);
                if !v.is_finite() {
                    return Err(NetError::NonFinite("eval"));
                }
            }
            cur = pre;
        }
        Ok(cur)
    }

    /// Functional composition: `result(x) = outer(self(x))`, exact.
    ///
    /// The seam (this network's final affine map and `outer`'s first) is
    /// merged into a single layer, so node counts add sub-additively.
    pub fn then(&self, outer: &Network) -> Result<Network, NetError> {
        if outer.input_dim() != self.output_dim() {
            return Err(NetError::DimensionMismatch {
                expected: self.output_dim(),
                got: outer.input_dim(),
                context: "compose seam",
            });
        }
        let mut layers: Vec<AffineLayer> =
            self.layers[..self.layers.len() - 1].to_vec();
        let seam = outer.layers[0].after_affine(self.layers.last().unwrap());
        layers.push(seam);
        layers.extend_from_slice(&outer.layers[1..]);
        let flavor = if self.flavor == Flavor::ReluStep || outer.flavor == Flavor::ReluStep {
            Flavor::ReluStep
        } else {
            Flavor::ReluOnly
        };
        Network::new(layers, flavor)
    }

    /// Interval propagation of an input box through the network.
    ///
    /// Returns per-layer post-activation bounds; the last entry bounds the
    /// network output. Bounds are valid but not tight.
    pub fn interval_bounds(&self, domain: &BoxDomain) -> Result<Vec<Vec<(f64, f64)>>, NetError> {
        if domain.len() != self.input_dim() {
            return Err(NetError::DimensionMismatch {
                expected: self.input_dim(),
                got: domain.len(),
                context: "interval domain",
            });
        }
        let mut cur: Vec<(f64, f64)> = domain.clone();
        let mut all = Vec::with_capacity(self.layers.len());
        for layer in &self.layers {
            let mut next = Vec::with_capacity(layer.rows);
            for r in 0..layer.rows {
                let row = layer.row(r);
                let mut lo = layer.bias[r];
                let mut hi = layer.bias[r];
                for (w, &(a, b)) in row.iter().zip(cur.iter()) {
                    if *w >= 0.0 {
                        lo += w * a;
                        hi += w * b;
                    } else {
                        lo += w * b;
                        hi += w * a;
                    }
                }
                let act = layer.activations[r];
                next.push((act.apply(lo).min(act.apply(hi)), act.apply(lo).max(act.apply(hi))));
            }
            all.push(next.clone());
            cur = next;
        }
        Ok(all)
    }

    /// Pad this network to `target_hidden` hidden layers by inserting carry
    /// stages before the final read-out.
    ///
    /// Each carry stage holds the pre-read-out values in ReLU units after an
    /// upward shift, so output lower bounds on `domain` must be finite; this
    /// is the carry-forward idiom for transporting finished values.
    pub fn pad_to_depth(&self, target_hidden: usize, domain: &BoxDomain) -> Result<Network, NetError> {
        let have = self.hidden_layer_count();
        if target_hidden < have {
            return Err(NetError::InvalidParameter(format!(
                "cannot pad from {have} hidden layers down to {target_hidden}"
            )));
        }
        if target_hidden == have {
            return Ok(self.clone());
        }
        let bounds = self.interval_bounds(domain)?;
        let out_bounds = bounds.last().unwrap();
        let d = self.output_dim();
        // shift so every carried value is nonnegative
        let shift: Vec<f64> = out_bounds.iter().map(|&(lo, _)| (-lo).max(0.0)).collect();

        let mut layers: Vec<AffineLayer> = self.layers[..self.layers.len() - 1].to_vec();
        // first carry stage: final affine + shift, ReLU
        let mut first = self.layers.last().unwrap().clone();
        for r in 0..d {
            first.bias[r] += shift[r];
        }
        first.activations = vec![ActivationKind::Relu; d];
        layers.push(first);
        for _ in 0..(target_hidden - have - 1) {
            layers.push(AffineLayer::identity(d, ActivationKind::Relu));
        }
        // read-out undoes the shift
        let mut last = AffineLayer::identity(d, ActivationKind::Identity);
        for r in 0..d {
            last.bias[r] = -shift[r];
        }
        layers.push(last);
        Network::new(layers, self.flavor)
    }
}

/// Evaluate `net` at `x` (free-function form of [`Network::eval`]).
pub fn eval(net: &Network, x: &[f64]) -> Result<Vec<f64>, NetError> {
    net.eval(x)
}

/// Block-diagonal stacking of equally deep networks.
///
/// The result consumes the concatenation of the nets' inputs and emits the
/// concatenation of their outputs. Nets of unequal depth must be padded first
/// (see [`Network::pad_to_depth`]).
pub fn parallel(nets: &[Network]) -> Result<Network, NetError> {
    if nets.is_empty() {
        return Err(NetError::InvalidParameter("parallel of empty list".into()));
    }
    let depth = nets[0].layer_count();
    for n in nets {
        if n.layer_count() != depth {
            return Err(NetError::InvalidParameter(
                "parallel requires equal layer counts (pad shorter nets first)".into(),
            ));
        }
    }
    let mut layers = Vec::with_capacity(depth);
    for li in 0..depth {
        let rows: usize = nets.iter().map(|n| n.layers()[li].rows).sum();
        let cols: usize = nets.iter().map(|n| n.layers()[li].cols).sum();
        let mut weights = vec![0.0; rows * cols];
        let mut bias = Vec::with_capacity(rows);
        let mut activations = Vec::with_capacity(rows);
        let mut r0 = 0;
        let mut c0 = 0;
        for n in nets {
            let l = &n.layers()[li];
            for r in 0..l.rows {
                let dst = (r0 + r) * cols + c0;
                weights[dst..dst + l.cols].copy_from_slice(l.row(r));
            }
            bias.extend_from_slice(&l.bias);
            activations.extend_from_slice(&l.activations);
            r0 += l.rows;
            c0 += l.cols;
        }
        layers.push(AffineLayer::new(rows, cols, weights, bias, activations)?);
    }
    let flavor = if nets.iter().any(|n| n.flavor() == Flavor::ReluStep) {
        Flavor::ReluStep
    } else {
        Flavor::ReluOnly
    };
    Network::new(layers, flavor)
}
