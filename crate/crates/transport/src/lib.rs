//! Exact 1-D optimal transport machinery, reference probability oracles, and
//! small-instance earth mover's distance.

mod cdf;
mod coupling;
mod emd;
mod error;
pub mod normal;
pub mod oracle;
pub mod rng;
mod sampling;
mod wasserstein;

pub use cdf::{pushforward_cdf_1d, PiecewiseLinearCdf};
pub use coupling::{box_coupling_check, BoxCouplingSpec};
pub use emd::{empirical_wasserstein, EmpiricalDistribution, EMD_MAX_POINTS};
pub use error::TransportError;
pub use normal::{
    normal_cdf as normal_cdf_ref, normal_pdf, normal_quantile as normal_quantile_ref, normal_sf,
};
pub use sampling::{linspace_grid, sample_pushforward, sup_error, SourceDistribution, SourceKind};
pub use wasserstein::{wasserstein_1d, wasserstein_vs_normal};
