//! Exact enumeration of the convex regions on which a ReLU network is affine.
//!
//! The enumeration walks hidden units in order, branching on each unit's sign
//! and keeping a branch only while the accumulated halfspace system still has
//! a full-dimensional intersection with the domain box (checked by LP). Ties
//! (pre-activation identically zero on the region) are resolved by treating
//! the unit as inactive; zero-measure regions are dropped.

use crate::lp::{chebyshev_center, Halfspace};
use crate::{ActivationKind, Flavor, NetError, Network};

/// Hidden-unit on/off pattern, in layer-major unit order.
pub type ActivationPattern = Vec<bool>;

/// A maximal convex region together with the affine map the network computes
/// on it.
#[derive(Debug, Clone)]
pub struct PolyhedralRegion {
    /// Halfspaces `a·x <= b` cutting the region out of the domain box
    /// (domain box faces included).
    pub constraints: Vec<Halfspace>,
    /// Row-major `output_dim x input_dim` matrix of the active affine map.
    pub affine_weights: Vec<f64>,
    pub affine_bias: Vec<f64>,
    pub pattern: ActivationPattern,
    /// Chebyshev radius and center found during enumeration; the center is a
    /// strict interior point.
    pub inradius: f64,
    pub interior_point: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct RegionOptions {
    /// Cap on LP feasibility checks; exceeding it aborts with
    /// [`NetError::RegionBudget`].
    pub budget: usize,
    /// Regions with Chebyshev radius below this are considered degenerate.
    pub radius_tol: f64,
}

impl Default for RegionOptions {
    fn default() -> Self {
        RegionOptions {
            budget: 2_000_000,
            radius_tol: 1e-10,
        }
    }
}

/// Affine map tracked through the layers: `x -> W x + c` in input coordinates.
#[derive(Clone)]
struct AffineState {
    rows: usize,
    w: Vec<f64>,
    c: Vec<f64>,
}

impl AffineState {
    fn identity(dim: usize) -> Self {
        let mut w = vec![0.0; dim * dim];
        for i in 0..dim {
            w[i * dim + i] = 1.0;
        }
        AffineState {
            rows: dim,
            w,
            c: vec![0.0; dim],
        }
    }
}

struct Enumerator<'a> {
    net: &'a Network,
    dim: usize,
    opts: RegionOptions,
    lp_calls: usize,
    out: Vec<PolyhedralRegion>,
}

impl<'a> Enumerator<'a> {
    /// Pre-activation rows of `layer` applied after `state`, in input coords.
    fn pre_rows(&self, layer_idx: usize, state: &AffineState) -> AffineState {
        let layer = &self.net.layers()[layer_idx];
        let mut w = vec![0.0; layer.rows * self.dim];
        let mut c = layer.bias.clone();
        for r in 0..layer.rows {
            let row = layer.row(r);
            for j in 0..self.dim {
                let mut acc = 0.0;
                for k in 0..layer.cols {
                    acc += row[k] * state.w[k * self.dim + j];
                }
                w[r * self.dim + j] = acc;
            }
            let mut acc = 0.0;
            for k in 0..layer.cols {
                acc += row[k] * state.c[k];
            }
            c[r] += acc;
        }
        AffineState {
            rows: layer.rows,
            w,
            c,
        }
    }

    fn feasible(&mut self, constraints: &[Halfspace]) -> Result<Option<(f64, Vec<f64>)>, NetError> {
        self.lp_calls += 1;
        if self.lp_calls > self.opts.budget {
            return Err(NetError::RegionBudget {
                budget: self.opts.budget,
            });
        }
        match chebyshev_center(self.dim, constraints) {
            Some((r, center)) if r > self.opts.radius_tol => Ok(Some((r, center))),
            _ => Ok(None),
        }
    }

    fn descend(
        &mut self,
        layer_idx: usize,
        unit: usize,
        pre: &AffineState,
        state_pattern: &mut Vec<bool>,
        constraints: &mut Vec<Halfspace>,
        post_w: &mut Vec<f64>, // rows of post-activation map built so far
        post_c: &mut Vec<f64>,
    ) -> Result<(), NetError> {
        let layer = &self.net.layers()[layer_idx];
        if unit == layer.rows {
            let next = AffineState {
                rows: layer.rows,
                w: post_w.clone(),
                c: post_c.clone(),
            };
            return self.layer_done(layer_idx, next, state_pattern, constraints);
        }
        let a: Vec<f64> = pre.w[unit * self.dim..(unit + 1) * self.dim].to_vec();
        let c = pre.c[unit];
        let scale = a.iter().map(|v| v.abs()).fold(0.0, f64::max);
        if scale < 1e-14 {
            // constant pre-activation on this region: no branching
            let active = c > 0.0;
            let (w_row, c_val) = if active { (a.clone(), c) } else { (vec![0.0; self.dim], 0.0) };
            state_pattern.push(active);
            post_w.extend_from_slice(&w_row);
            post_c.push(c_val);
            self.descend(layer_idx, unit + 1, pre, state_pattern, constraints, post_w, post_c)?;
            state_pattern.pop();
            post_w.truncate(post_w.len() - self.dim);
            post_c.pop();
            return Ok(());
        }
        // inactive branch first (deterministic order): a·x + c <= 0
        for active in [false, true] {
            let hs = if active {
                Halfspace::new(a.iter().map(|v| -v).collect(), c)
            } else {
                Halfspace::new(a.clone(), -c)
            };
            constraints.push(hs);
            if self.feasible(constraints)?.is_some() {
                state_pattern.push(active);
                if active {
                    post_w.extend_from_slice(&a);
                    post_c.push(c);
                } else {
                    post_w.extend_from_slice(&vec![0.0; self.dim]);
                    post_c.push(0.0);
                }
                self.descend(layer_idx, unit + 1, pre, state_pattern, constraints, post_w, post_c)?;
                state_pattern.pop();
                post_w.truncate(post_w.len() - self.dim);
                post_c.pop();
            }
            constraints.pop();
        }
        Ok(())
    }

    fn layer_done(
        &mut self,
        layer_idx: usize,
        state: AffineState,
        pattern: &mut Vec<bool>,
        constraints: &mut Vec<Halfspace>,
    ) -> Result<(), NetError> {
        let n_layers = self.net.layer_count();
        if layer_idx + 1 == n_layers - 1 {
            // only the identity read-out remains
            let fin = self.pre_rows(n_layers - 1, &state);
            if let Some((r, center)) = self.feasible(constraints)? {
                self.out.push(PolyhedralRegion {
                    constraints: constraints.clone(),
                    affine_weights: fin.w,
                    affine_bias: fin.c,
                    pattern: pattern.clone(),
                    inradius: r,
                    interior_point: center,
                });
            }
            return Ok(());
        }
        let pre = self.pre_rows(layer_idx + 1, &state);
        let mut post_w = Vec::with_capacity(pre.rows * self.dim);
        let mut post_c = Vec::with_capacity(pre.rows);
        self.descend(layer_idx + 1, 0, &pre, pattern, constraints, &mut post_w, &mut post_c)
    }
}

/// Enumerate the affine regions of `net` over `domain`.
///
/// Regions are returned in lexicographic activation-pattern order (inactive
/// before active, layer-major), have pairwise-disjoint interiors and cover
/// the box up to measure zero.
pub fn enumerate_regions(
    net: &Network,
    domain: &[(f64, f64)],
    opts: &RegionOptions,
) -> Result<Vec<PolyhedralRegion>, NetError> {
    if net.flavor() != Flavor::ReluOnly || net.contains_steps() {
        return Err(NetError::WrongFlavor {
            required: Flavor::ReluOnly,
            actual: net.flavor(),
        });
    }
    let dim = net.input_dim();
    if dim > 3 {
        return Err(NetError::InvalidParameter(format!(
            "region enumeration supports input dim <= 3, got {dim}"
        )));
    }
    if domain.len() != dim {
        return Err(NetError::DimensionMismatch {
            expected: dim,
            got: domain.len(),
            context: "region domain",
        });
    }
    for layer in &net.layers()[..net.layer_count() - 1] {
        if layer.activations.iter().any(|&a| a != ActivationKind::Relu) {
            return Err(NetError::InvalidParameter(
                "region enumeration requires pure ReLU hidden layers".into(),
            ));
        }
    }
    let mut constraints: Vec<Halfspace> = Vec::new();
    for (j, &(lo, hi)) in domain.iter().enumerate() {
        if !(lo < hi) {
            return Err(NetError::InvalidParameter("empty domain box".into()));
        }
        let mut n = vec![0.0; dim];
        n[j] = 1.0;
        constraints.push(Halfspace::new(n.clone(), hi));
        n[j] = -1.0;
        constraints.push(Halfspace::new(n, -lo));
    }
    let mut en = Enumerator {
        net,
        dim,
        opts: opts.clone(),
        lp_calls: 0,
        out: Vec::new(),
    };
    if net.layer_count() == 1 {
        // purely affine network: a single region
        let state = AffineState::identity(dim);
        let fin = en.pre_rows(0, &state);
        if let Some((r, center)) = en.feasible(&constraints)? {
            en.out.push(PolyhedralRegion {
                constraints,
                affine_weights: fin.w,
                affine_bias: fin.c,
                pattern: Vec::new(),
                inradius: r,
                interior_point: center,
            });
        }
        return Ok(en.out);
    }
    let state = AffineState::identity(dim);
    let mut pattern = Vec::new();
    // process first hidden layer then recurse
    let pre = en.pre_rows(0, &state);
    let mut post_w = Vec::new();
    let mut post_c = Vec::new();
    en.descend(0, 0, &pre, &mut pattern, &mut constraints, &mut post_w, &mut post_c)?;
    Ok(en.out)
}
