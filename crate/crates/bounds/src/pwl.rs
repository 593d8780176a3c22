//! Best L1 fit of the standard normal CDF by a continuous piecewise-linear
//! function with a prescribed number of pieces.
//!
//! Knot positions are chosen by dynamic programming over a fine grid using
//! interpolating chords, then both knot positions and knot values are
//! polished by deterministic coordinate descent. The result upper-bounds the
//! unconstrained optimum and matches its `N^{-2}` rate, which is what the
//! `N_A^{-4}` lower-bound lemma is checked against.

use crate::BoundError;
use pushforge_transport::normal_cdf_ref;

/// Best (near-optimal) `int_a^b |Phi - f|` over continuous piecewise-linear
/// `f` with `n_pieces` segments.
pub fn pwl_phi_best_l1(n_pieces: usize, interval: (f64, f64)) -> Result<f64, BoundError> {
    let (a, b) = interval;
    if n_pieces == 0 {
        return Err(BoundError::InvalidParameter("need N_A >= 1".into()));
    }
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(BoundError::InvalidParameter(format!(
            "need a < b finite, got [{a}, {b}]"
        )));
    }

    // candidate-knot grid, fine relative to the piece count
    let m = (16 * n_pieces).clamp(64, 1024);
    let grid: Vec<f64> = (0..=m).map(|i| a + (b - a) * i as f64 / m as f64).collect();

    let knots = if n_pieces == 1 {
        vec![a, b]
    } else {
        dp_knots(&grid, n_pieces)
    };
    let mut xs = knots;
    let mut vs: Vec<f64> = xs.iter().map(|&x| normal_cdf_ref(x)).collect();

    // coordinate descent: interior knot positions, then all knot values
    for _ in 0..4 {
        for i in 1..xs.len() - 1 {
            let (lo, hi) = (xs[i - 1], xs[i + 1]);
            xs[i] = golden_min(lo, hi, |x| {
                segment_cost(xs[i - 1], vs[i - 1], x, vs[i])
                    + segment_cost(x, vs[i], xs[i + 1], vs[i + 1])
            });
        }
        for i in 0..xs.len() {
            let span = 0.5 * (b - a) / n_pieces as f64 + 1e-3;
            let center = vs[i];
            vs[i] = golden_min(center - span, center + span, |v| {
                let left = if i > 0 {
                    segment_cost(xs[i - 1], vs[i - 1], xs[i], v)
                } else {
                    0.0
                };
                let right = if i + 1 < xs.len() {
                    segment_cost(xs[i], v, xs[i + 1], vs[i + 1])
                } else {
                    0.0
                };
                left + right
            });
        }
    }

    let mut total = 0.0;
    for i in 0..xs.len() - 1 {
        total += segment_cost(xs[i], vs[i], xs[i + 1], vs[i + 1]);
    }
    Ok(total)
}

/// Optimal interpolating knots over the grid: minimize the summed chord
/// errors with exactly `n_pieces` segments from the first to the last grid
/// point.
fn dp_knots(grid: &[f64], n_pieces: usize) -> Vec<f64> {
    let m = grid.len();
    let phi: Vec<f64> = grid.iter().map(|&x| normal_cdf_ref(x)).collect();
    // memoized chord costs: the DP revisits every (i, j) pair per piece count
    let costs: Vec<f64> = (0..m * m)
        .map(|ij| {
            let (i, j) = (ij / m, ij % m);
            if i < j {
                segment_cost(grid[i], phi[i], grid[j], phi[j])
            } else {
                f64::INFINITY
            }
        })
        .collect();
    let cost = |i: usize, j: usize| costs[i * m + j];

    // best[p][j] = min error covering grid[0..=j] with p segments
    let mut best = vec![f64::INFINITY; m];
    let mut prev_idx = vec![vec![0usize; m]; n_pieces + 1];
    for j in 1..m {
        best[j] = cost(0, j);
    }
    let mut table = best.clone();
    for p in 2..=n_pieces {
        let mut next = vec![f64::INFINITY; m];
        for j in p..m {
            for i in p - 1..j {
                let c = table[i] + cost(i, j);
                if c < next[j] {
                    next[j] = c;
                    prev_idx[p][j] = i;
                }
            }
        }
        table = next;
    }

    let mut idx = vec![m - 1];
    let mut p = n_pieces;
    let mut j = m - 1;
    while p > 1 {
        j = prev_idx[p][j];
        idx.push(j);
        p -= 1;
    }
    idx.push(0);
    idx.reverse();
    idx.into_iter().map(|i| grid[i]).collect()
}

/// `int_{x0}^{x1} |Phi(x) - line|` with the line through `(x0, y0), (x1, y1)`,
/// by composite Simpson on 32 subintervals (the integrand is smooth except at
/// isolated sign changes, and the budget dwarfs the quadrature error).
fn segment_cost(x0: f64, y0: f64, x1: f64, y1: f64) -> f64 {
    if !(x1 > x0) {
        return f64::INFINITY;
    }
    let slope = (y1 - y0) / (x1 - x0);
    let f = |x: f64| (normal_cdf_ref(x) - (y0 + slope * (x - x0))).abs();
    let n = 32;
    let h = (x1 - x0) / n as f64;
    let mut acc = f(x0) + f(x1);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(x0 + h * i as f64);
    }
    acc * h / 3.0
}

/// Deterministic golden-section minimizer (48 shrink steps).
fn golden_min<F: FnMut(f64) -> f64>(mut lo: f64, mut hi: f64, mut f: F) -> f64 {
    let inv_phi = 0.618_033_988_749_894_9;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..48 {
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_piece_positive_and_refinement_helps() {
        let one = pwl_phi_best_l1(1, (-2.0, 2.0)).unwrap();
        assert!(one > 1e-3);
        let two = pwl_phi_best_l1(2, (-2.0, 2.0)).unwrap();
        assert!(two < one);
    }

    #[test]
    fn many_pieces_drive_error_down() {
        let v = pwl_phi_best_l1(256, (-1.0, 1.0)).unwrap();
        assert!(v < 1e-6, "err {v}");
    }
}
