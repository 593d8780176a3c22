//! Closed-form Wasserstein bounds for ReLU generative networks, plus a
//! numerical best-L1 piecewise-linear fit of the normal CDF used to exhibit
//! the `N_A^{-4}` approximation-rate lemma.

mod error;
mod formulas;
mod gamma;
mod pwl;
mod report;

pub use error::BoundError;
pub use formulas::{
    affine_piece_bound, dimension_gap_bound, network_lower_bound, plane_distance_bound,
    tent_upper_bound, tent_upper_bound_appendix,
};
pub use gamma::ln_gamma;
pub use pwl::pwl_phi_best_l1;
pub use report::{BoundParams, BoundReport};
