//! One-dimensional distributions as piecewise-linear CDFs.
//!
//! A single representation covers absolutely continuous parts (linear
//! segments), point masses (jump discontinuities, stored as paired
//! breakpoints at the same abscissa), and empirical step CDFs. `F` is 0 left
//! of the first breakpoint, 1 right of the last, right-continuous at jumps.

use crate::TransportError;
use pushforge_net::{breakpoints_1d, Network};

#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinearCdf {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl PiecewiseLinearCdf {
    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self, TransportError> {
        if breakpoints.is_empty() || breakpoints.len() != values.len() {
            return Err(TransportError::InvalidCdf(format!(
                "{} breakpoints vs {} values",
                breakpoints.len(),
                values.len()
            )));
        }
        for w in breakpoints.windows(2) {
            if !(w[0] <= w[1]) {
                return Err(TransportError::InvalidCdf("breakpoints not sorted".into()));
            }
        }
        for w in values.windows(2) {
            if !(w[0] <= w[1] + 1e-15) {
                return Err(TransportError::InvalidCdf(format!(
                    "values not nondecreasing: {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if !breakpoints.iter().chain(values.iter()).all(|v| v.is_finite()) {
            return Err(TransportError::InvalidCdf("non-finite entry".into()));
        }
        let last = *values.last().unwrap();
        if values[0] < -1e-12 || (last - 1.0).abs() > 1e-9 {
            return Err(TransportError::InvalidCdf(format!(
                "range [{}, {last}] is not [0, 1]",
                values[0]
            )));
        }
        Ok(PiecewiseLinearCdf { breakpoints, values })
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn support(&self) -> (f64, f64) {
        (self.breakpoints[0], *self.breakpoints.last().unwrap())
    }

    pub fn point_mass(x: f64) -> Self {
        PiecewiseLinearCdf {
            breakpoints: vec![x, x],
            values: vec![0.0, 1.0],
        }
    }

    pub fn uniform(a: f64, b: f64) -> Result<Self, TransportError> {
        if !(a < b) {
            return Err(TransportError::InvalidParameter(format!(
                "uniform needs a < b, got [{a}, {b}]"
            )));
        }
        Ok(PiecewiseLinearCdf {
            breakpoints: vec![a, b],
            values: vec![0.0, 1.0],
        })
    }

    /// Step CDF of a finite sample (uniform weights).
    pub fn empirical(samples: &[f64]) -> Result<Self, TransportError> {
        if samples.is_empty() {
            return Err(TransportError::InvalidParameter("empty sample".into()));
        }
        let mut s = samples.to_vec();
        s.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if !s.iter().all(|v| v.is_finite()) {
            return Err(TransportError::InvalidCdf("non-finite sample".into()));
        }
        let n = s.len() as f64;
        let mut breakpoints = Vec::with_capacity(2 * s.len());
        let mut values = Vec::with_capacity(2 * s.len());
        let mut seen = 0usize;
        let mut i = 0;
        while i < s.len() {
            let x = s[i];
            let mut j = i;
            while j < s.len() && s[j] == x {
                j += 1;
            }
            breakpoints.push(x);
            values.push(seen as f64 / n);
            seen += j - i;
            breakpoints.push(x);
            values.push(seen as f64 / n);
            i = j;
        }
        Ok(PiecewiseLinearCdf { breakpoints, values })
    }

    /// `F(x)` (right-continuous value).
    pub fn eval(&self, x: f64) -> f64 {
        let i = self.breakpoints.partition_point(|&b| b <= x);
        if i == 0 {
            return 0.0;
        }
        if i == self.breakpoints.len() {
            return *self.values.last().unwrap();
        }
        // breakpoints[i-1] <= x < breakpoints[i]
        let (x0, x1) = (self.breakpoints[i - 1], self.breakpoints[i]);
        let (y0, y1) = (self.values[i - 1], self.values[i]);
        if x == x0 || x1 == x0 {
            y0
        } else {
            y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        }
    }

    /// Left limit `F(x-)`.
    pub fn eval_left(&self, x: f64) -> f64 {
        let i = self.breakpoints.partition_point(|&b| b < x);
        if i == 0 {
            return 0.0;
        }
        if i == self.breakpoints.len() {
            return *self.values.last().unwrap();
        }
        // breakpoints[i-1] < x <= breakpoints[i]
        let (x0, x1) = (self.breakpoints[i - 1], self.breakpoints[i]);
        let (y0, y1) = (self.values[i - 1], self.values[i]);
        if x == x1 || x1 == x0 {
            self.values[i]
        } else {
            y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        }
    }

    /// Number of constant-density pieces (segments plus jumps).
    pub fn piece_count(&self) -> usize {
        self.breakpoints
            .windows(2)
            .zip(self.values.windows(2))
            .filter(|(_, v)| v[1] > v[0])
            .count()
    }
}

/// Kahan–Neumaier compensated accumulator.
#[derive(Default)]
struct Kahan {
    s: f64,
    c: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let t = self.s + x;
        self.c += if self.s.abs() >= x.abs() {
            (self.s - t) + x
        } else {
            (x - t) + self.s
        };
        self.s = t;
    }

    fn sum(&self) -> f64 {
        self.s + self.c
    }
}

/// Exact CDF of `net # U[domain]` for a univariate ReLU network.
///
/// Each affine piece of the network contributes a uniform distribution (or a
/// point mass where the slope vanishes) weighted by the input length it
/// occupies; the mixture CDF is assembled by a sweep over output coordinates.
/// `merge_tol` is forwarded to the breakpoint tracer.
pub fn pushforward_cdf_1d(
    net: &Network,
    domain: (f64, f64),
    merge_tol: f64,
) -> Result<PiecewiseLinearCdf, TransportError> {
    let knots = breakpoints_1d(net, domain, merge_tol)?;
    let total = domain.1 - domain.0;

    // events: density changes and atoms on the output axis
    let mut dens_ev: Vec<(f64, f64)> = Vec::new(); // (y, +/- density)
    let mut atoms: Vec<(f64, f64)> = Vec::new(); // (y, mass)
    for w in knots.windows(2) {
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        let mass = (x1 - x0) / total;
        if mass <= 0.0 {
            continue;
        }
        if y0 == y1 {
            atoms.push((y0, mass));
        } else {
            let (lo, hi) = if y0 < y1 { (y0, y1) } else { (y1, y0) };
            let d = mass / (hi - lo);
            dens_ev.push((lo, d));
            dens_ev.push((hi, -d));
        }
    }

    // merge coincident atoms
    atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut merged_atoms: Vec<(f64, f64)> = Vec::new();
    for (y, m) in atoms {
        match merged_atoms.last_mut() {
            Some((py, pm)) if *py == y => *pm += m,
            _ => merged_atoms.push((y, m)),
        }
    }
    dens_ev.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    // sweep over all event coordinates
    let mut coords: Vec<f64> = dens_ev
        .iter()
        .map(|&(y, _)| y)
        .chain(merged_atoms.iter().map(|&(y, _)| y))
        .collect();
    coords.sort_by(|a, b| a.partial_cmp(b).unwrap());
    coords.dedup();
    if coords.is_empty() {
        return Err(TransportError::InvalidCdf("no output mass".into()));
    }

    // compensated sums: piece densities span many orders of magnitude, and a
    // plain running sum loses enough to absolute cancellation to fail the
    // total-mass check on deep networks
    let mut breakpoints = Vec::new();
    let mut values = Vec::new();
    let mut acc = Kahan::default();
    let mut dens = Kahan::default();
    let mut di = 0;
    let mut ai = 0;
    let mut prev: Option<f64> = None;
    for &y in &coords {
        if let Some(p) = prev {
            acc.add(dens.sum() * (y - p));
        }
        breakpoints.push(y);
        values.push(acc.sum().min(1.0));
        while ai < merged_atoms.len() && merged_atoms[ai].0 == y {
            acc.add(merged_atoms[ai].1);
            ai += 1;
            breakpoints.push(y);
            values.push(acc.sum().min(1.0));
        }
        while di < dens_ev.len() && dens_ev[di].0 == y {
            dens.add(dens_ev[di].1);
            di += 1;
        }
        prev = Some(y);
    }
    // snap accumulated rounding on the final value
    let last = values.last_mut().unwrap();
    if (*last - 1.0).abs() > 1e-9 {
        return Err(TransportError::InvalidCdf(format!(
            "pushforward mass {} != 1",
            *last
        )));
    }
    *last = 1.0;
    PiecewiseLinearCdf::new(breakpoints, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pushforge_net::{ActivationKind, AffineLayer, Flavor, Network};

    #[test]
    fn uniform_eval() {
        let f = PiecewiseLinearCdf::uniform(0.0, 2.0).unwrap();
        assert_eq!(f.eval(-1.0), 0.0);
        assert_eq!(f.eval(0.5), 0.25);
        assert_eq!(f.eval(3.0), 1.0);
    }

    #[test]
    fn point_mass_jump() {
        let f = PiecewiseLinearCdf::point_mass(0.3);
        assert_eq!(f.eval(0.29), 0.0);
        assert_eq!(f.eval(0.3), 1.0);
        assert_eq!(f.eval_left(0.3), 0.0);
    }

    #[test]
    fn empirical_steps() {
        let f = PiecewiseLinearCdf::empirical(&[2.0, 1.0, 2.0, 4.0]).unwrap();
        assert_eq!(f.eval(0.0), 0.0);
        assert_eq!(f.eval(1.0), 0.25);
        assert_eq!(f.eval(2.0), 0.75);
        assert_eq!(f.eval(3.9), 0.75);
        assert_eq!(f.eval(4.0), 1.0);
    }

    #[test]
    fn identity_pushforward() {
        let net = Network::new(
            vec![AffineLayer::uniform(1, 1, vec![1.0], vec![0.0], ActivationKind::Identity)
                .unwrap()],
            Flavor::ReluOnly,
        )
        .unwrap();
        let f = pushforward_cdf_1d(&net, (0.0, 1.0), 0.0).unwrap();
        assert!((f.eval(0.25) - 0.25).abs() < 1e-15);
        assert!((f.eval(0.9) - 0.9).abs() < 1e-15);
    }

    #[test]
    fn constant_pushforward_is_point_mass() {
        let net = Network::new(
            vec![AffineLayer::uniform(1, 1, vec![0.0], vec![0.7], ActivationKind::Identity)
                .unwrap()],
            Flavor::ReluOnly,
        )
        .unwrap();
        let f = pushforward_cdf_1d(&net, (0.0, 1.0), 0.0).unwrap();
        assert_eq!(f.eval(0.69), 0.0);
        assert_eq!(f.eval(0.7), 1.0);
    }
}
