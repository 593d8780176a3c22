//! Aggregated bound evaluation for one architecture, serializable for sweep
//! outputs.

use serde::{Deserialize, Serialize};

use crate::formulas::{
    affine_piece_bound, dimension_gap_bound, plane_distance_bound, tent_upper_bound,
    tent_upper_bound_appendix,
};
use crate::BoundError;

/// Architecture and geometry parameters the bounds are evaluated on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    /// total node budget N
    pub n_nodes: u64,
    /// hidden layer count L
    pub layers: u64,
    /// latent (input) dimension n
    pub latent_dim: u64,
    /// ambient (output) dimension d
    pub ambient_dim: u64,
    /// enclosing-ball radius l
    pub radius: f64,
    /// Lebesgue measure of the target support m_B
    pub measure: f64,
    /// affine-piece count N_A used by the gap bound
    pub pieces: f64,
}

/// Every closed-form bound evaluated on one parameter set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub params: BoundParams,
    /// space-filling upper bound (main-statement form)
    pub tent_upper: f64,
    /// space-filling upper bound (appendix form)
    pub tent_upper_appendix: f64,
    /// affine-piece count bound
    pub piece_bound: f64,
    /// plane-distance lower bound (N_A = 1)
    pub plane_lower: f64,
    /// dimension-gap lower bound at N_A = `pieces`
    pub gap_lower: f64,
    /// architecture lower bound (N_A = piece_bound, unit-cube geometry)
    pub net_lower: f64,
}

impl BoundReport {
    /// Evaluate every bound with the unit-cube defaults
    /// `l = sqrt(d)/2`, `m_B = 1`, `N_A = affine_piece_bound(N, L, n)`.
    ///
    /// Requires `n < d` (the lower bounds are about a genuine dimension gap)
    /// and `N > dL`.
    pub fn unit_cube(
        n_nodes: u64,
        layers: u64,
        latent_dim: u64,
        ambient_dim: u64,
    ) -> Result<Self, BoundError> {
        let radius = (ambient_dim as f64).sqrt() / 2.0;
        let measure = 1.0;
        let piece_bound = affine_piece_bound(n_nodes, layers, latent_dim)?;
        let tent_upper = tent_upper_bound(n_nodes, layers, latent_dim, ambient_dim)?;
        let tent_upper_appendix =
            tent_upper_bound_appendix(n_nodes, layers, latent_dim, ambient_dim)?;
        let plane_lower = plane_distance_bound(latent_dim, ambient_dim, radius, measure)?;
        let gap_lower =
            dimension_gap_bound(latent_dim, ambient_dim, radius, measure, piece_bound)?;
        let net_lower = gap_lower;
        Ok(BoundReport {
            params: BoundParams {
                n_nodes,
                layers,
                latent_dim,
                ambient_dim,
                radius,
                measure,
                pieces: piece_bound,
            },
            tent_upper,
            tent_upper_appendix,
            piece_bound,
            plane_lower,
            gap_lower,
            net_lower,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sandwich_holds_on_sweep() {
        for n_nodes in [12, 20, 36, 68, 132] {
            for layers in [2, 3] {
                let r = BoundReport::unit_cube(n_nodes, layers, 1, 2).unwrap();
                assert!(r.net_lower > 0.0);
                assert!(
                    r.net_lower <= r.tent_upper,
                    "N={n_nodes}, L={layers}: {} vs {}",
                    r.net_lower,
                    r.tent_upper
                );
                assert!(r.gap_lower <= r.plane_lower);
                assert!(r.piece_bound >= 1.0);
            }
        }
    }

    #[test]
    fn round_trips_through_serde() {
        let r = BoundReport::unit_cube(20, 2, 1, 2).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: BoundReport = serde_json::from_str(&s).unwrap();
        assert_eq!(r.params.n_nodes, back.params.n_nodes);
        assert_eq!(r.params.layers, back.params.layers);
        for (a, b) in [
            (r.tent_upper, back.tent_upper),
            (r.piece_bound, back.piece_bound),
            (r.plane_lower, back.plane_lower),
            (r.net_lower, back.net_lower),
        ] {
            assert!((a - b).abs() <= 1e-14 * a.abs().max(1.0));
        }
    }
}
