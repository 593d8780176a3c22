//! Exact earth mover's distance between equal-size uniform-weight samples.
//!
//! W1 between two empirical measures with n atoms of weight 1/n each is a
//! min-cost perfect matching under Euclidean cost (Birkhoff: the transport
//! polytope's vertices are permutations). Solved by shortest augmenting
//! paths with dual potentials, O(n^3) worst case, fast in practice.

use crate::TransportError;

/// Hard cap on exact-matching instance size.
pub const EMD_MAX_POINTS: usize = 4096;

#[derive(Debug, Clone)]
pub struct EmpiricalDistribution {
    pub points: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
}

impl EmpiricalDistribution {
    pub fn uniform(points: Vec<Vec<f64>>) -> Result<Self, TransportError> {
        if points.is_empty() {
            return Err(TransportError::InvalidParameter("empty sample set".into()));
        }
        let dim = points[0].len();
        if dim == 0 || points.iter().any(|p| p.len() != dim) {
            return Err(TransportError::InvalidParameter(
                "inconsistent point dimensions".into(),
            ));
        }
        if points.iter().flatten().any(|v| !v.is_finite()) {
            return Err(TransportError::InvalidParameter("non-finite point".into()));
        }
        let n = points.len();
        Ok(EmpiricalDistribution {
            points,
            weights: vec![1.0 / n as f64; n],
        })
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn is_uniform(&self) -> bool {
        let w = 1.0 / self.len() as f64;
        self.weights.iter().all(|&v| (v - w).abs() < 1e-12)
    }
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Exact W1 between equal-size uniform-weight empirical distributions.
pub fn empirical_wasserstein(
    a: &EmpiricalDistribution,
    b: &EmpiricalDistribution,
) -> Result<f64, TransportError> {
    if a.len() != b.len() {
        return Err(TransportError::SizeMismatch(a.len(), b.len()));
    }
    if a.dim() != b.dim() {
        return Err(TransportError::SizeMismatch(a.dim(), b.dim()));
    }
    if a.len() > EMD_MAX_POINTS {
        return Err(TransportError::MatchingBudget(a.len(), EMD_MAX_POINTS));
    }
    if !a.is_uniform() || !b.is_uniform() {
        return Err(TransportError::InvalidParameter(
            "exact matching requires uniform weights".into(),
        ));
    }
    let n = a.len();
    let cost: Vec<f64> = a
        .points
        .iter()
        .flat_map(|p| b.points.iter().map(move |q| dist(p, q)))
        .collect();
    Ok(min_cost_matching(n, &cost) / n as f64)
}

/// Min-cost perfect matching on a dense `n x n` cost matrix (row-major),
/// Jonker-Volgenant style shortest augmenting paths. Returns the total cost.
fn min_cost_matching(n: usize, cost: &[f64]) -> f64 {
    const INF: f64 = f64::INFINITY;
    // 1-based arrays; p[j] = row matched to column j (0 = none)
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = INF;
            let mut j1 = 0usize;
            let row = &cost[(i0 - 1) * n..i0 * n];
            for j in 1..=n {
                if !used[j] {
                    let cur = row[j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    (1..=n).map(|j| cost[(p[j] - 1) * n + (j - 1)]).sum()
}
