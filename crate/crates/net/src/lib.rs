//! Representation, evaluation, combination and exact linear-region analysis of
//! feedforward networks with ReLU and hard-threshold (step) activations.
//!
//! A [`Network`] is an ordered list of affine layers with per-unit activations.
//! Everything here is a pure function over immutable values; a `Network` can be
//! evaluated from many threads at once.

mod breakpoints;
mod error;
mod io;
mod lp;
mod network;
mod regions;
mod steps;

pub use breakpoints::breakpoints_1d;
pub use error::NetError;
pub use io::{read_network, write_network, FORMAT_VERSION};
pub use lp::{chebyshev_center, chebyshev_radius, Halfspace};
pub use network::{
    eval, parallel, ActivationKind, AffineLayer, BoxDomain, Flavor, Network,
};
pub use regions::{enumerate_regions, ActivationPattern, PolyhedralRegion, RegionOptions};
pub use steps::replace_steps;
