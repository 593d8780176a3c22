//! The closed-form upper and lower Wasserstein bounds. All functions are pure
//! and deterministic; repeated calls agree bit for bit.

use crate::gamma::ln_gamma;
use crate::BoundError;

fn check_dims(n: u64, d: u64) -> Result<(), BoundError> {
    if n == 0 || n > d {
        return Err(BoundError::InvalidParameter(format!(
            "need 1 <= n <= d, got n={n}, d={d}"
        )));
    }
    Ok(())
}

/// Upper bound on `W(f # U[0,1]^n, U[0,1]^d)` achieved by the space-filling
/// generator with `N` nodes and `L` hidden layers:
/// `sqrt(d) * floor((N - dL)/(nL)) ^ -floor(L / ceil((d-n)/n))`.
///
/// `d = n` returns 0 (identity embedding needs no approximation). A floor of
/// 0 in the base carries no information; the bound falls back to the trivial
/// diameter `sqrt(d)`.
pub fn tent_upper_bound(n_nodes: u64, layers: u64, n: u64, d: u64) -> Result<f64, BoundError> {
    check_dims(n, d)?;
    if layers == 0 {
        return Err(BoundError::InvalidParameter("need L >= 1".into()));
    }
    if n == d {
        return Ok(0.0);
    }
    if n_nodes <= d * layers {
        return Err(BoundError::InvalidParameter(format!(
            "need N > dL, got N={n_nodes}, dL={}",
            d * layers
        )));
    }
    let base = (n_nodes - d * layers) / (n * layers);
    let steps = (d - n).div_ceil(n);
    let exponent = layers / steps;
    let sqrt_d = (d as f64).sqrt();
    if base <= 1 {
        return Ok(sqrt_d);
    }
    Ok(sqrt_d * (base as f64).powi(-(exponent as i32)))
}

/// The appendix's final expression for the same rate:
/// `floor(((d-n)/n)(N - dL + d)/(dL)) ^ -floor(nL/d)`. Exposed separately so
/// experiments can report both forms; a floor below 1 is clamped to 1 (the
/// vacuous bound 1).
pub fn tent_upper_bound_appendix(
    n_nodes: u64,
    layers: u64,
    n: u64,
    d: u64,
) -> Result<f64, BoundError> {
    check_dims(n, d)?;
    if layers == 0 {
        return Err(BoundError::InvalidParameter("need L >= 1".into()));
    }
    if n == d {
        return Ok(0.0);
    }
    if n_nodes <= d * layers {
        return Err(BoundError::InvalidParameter(format!(
            "need N > dL, got N={n_nodes}, dL={}",
            d * layers
        )));
    }
    let base = ((d - n) as f64 / n as f64 * (n_nodes - d * layers + d) as f64
        / (d * layers) as f64)
        .floor()
        .max(1.0);
    let exponent = (n * layers) / d;
    Ok(base.powi(-(exponent as i32)))
}

/// Upper bound on the number of affine pieces of a ReLU network with `N`
/// nodes, `L` hidden layers, and input dimension `n0`:
/// `(e N / (n0 L) + e)^(n0 L)`. `L = 0` means an affine network: 1 piece.
pub fn affine_piece_bound(n_nodes: u64, layers: u64, n0: u64) -> Result<f64, BoundError> {
    if n0 == 0 {
        return Err(BoundError::InvalidParameter("need n0 >= 1".into()));
    }
    if layers == 0 {
        return Ok(1.0);
    }
    let e = std::f64::consts::E;
    let p = (n0 * layers) as f64;
    Ok((e * n_nodes as f64 / p + e).powf(p))
}

/// Lower bound on `W(U_B, U_S)` for `B` inside a ball of radius `l` and `S`
/// an `n`-plane in `R^d`:
/// `((d-n)/(d-n+1)) * (Gamma((d-n)/2+1) Gamma(n/2+1) / pi^{d/2} * l^{-n} m_B)^{1/(d-n)}`.
pub fn plane_distance_bound(n: u64, d: u64, l: f64, m_b: f64) -> Result<f64, BoundError> {
    check_dims(n, d)?;
    if n == d {
        return Err(BoundError::InvalidParameter("need n < d".into()));
    }
    if !(l > 0.0) || !(m_b > 0.0) {
        return Err(BoundError::InvalidParameter(format!(
            "need l > 0 and m_B > 0, got l={l}, m_B={m_b}"
        )));
    }
    let gap = (d - n) as f64;
    let k = gap / (gap + 1.0);
    let ln_inner = ln_gamma(gap / 2.0 + 1.0) + ln_gamma(n as f64 / 2.0 + 1.0)
        - d as f64 / 2.0 * std::f64::consts::PI.ln()
        - n as f64 * l.ln()
        + m_b.ln();
    Ok(k * (ln_inner / gap).exp())
}

/// [`plane_distance_bound`] with the target measure split over `N_A` affine
/// pieces: `m_B` is replaced by `m_B / N_A`.
pub fn dimension_gap_bound(
    n: u64,
    d: u64,
    l: f64,
    m_b: f64,
    n_pieces: f64,
) -> Result<f64, BoundError> {
    if !(n_pieces >= 1.0) {
        return Err(BoundError::InvalidParameter(format!(
            "need N_A >= 1, got {n_pieces}"
        )));
    }
    plane_distance_bound(n, d, l, m_b / n_pieces)
}

/// Lower bound on `W(f # P, U[0,1]^d)` over all ReLU generators
/// `f: [0,1]^n -> [0,1]^d` with `N` nodes and `L` hidden layers:
/// [`dimension_gap_bound`] with `N_A = affine_piece_bound(N, L, n)` and the
/// unit-cube defaults `l = sqrt(d)/2`, `m_B = 1`.
pub fn network_lower_bound(n_nodes: u64, layers: u64, n: u64, d: u64) -> Result<f64, BoundError> {
    check_dims(n, d)?;
    if n == d {
        return Err(BoundError::InvalidParameter("need n < d".into()));
    }
    let n_a = affine_piece_bound(n_nodes, layers, n)?;
    dimension_gap_bound(n, d, (d as f64).sqrt() / 2.0, 1.0, n_a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tent_upper_frozen_example() {
        // sqrt(2) * 8^{-2}
        let v = tent_upper_bound(20, 2, 1, 2).unwrap();
        assert!((v - std::f64::consts::SQRT_2 / 64.0).abs() < 1e-15);
        assert!((v - 0.022097086912079608).abs() < 1e-12);
        assert_eq!(tent_upper_bound(30, 2, 2, 2).unwrap(), 0.0);
        assert!(tent_upper_bound(4, 2, 1, 2).is_err());
        // monotone in N
        let mut prev = f64::INFINITY;
        for n_nodes in [12, 20, 36, 68] {
            let v = tent_upper_bound(n_nodes, 2, 1, 2).unwrap();
            assert!(v <= prev);
            prev = v;
        }
    }

    #[test]
    fn appendix_variant() {
        // (N=20, L=2, n=1, d=2): floor(1 * 18 / 4) = 4, exponent floor(2/2)=1
        let v = tent_upper_bound_appendix(20, 2, 1, 2).unwrap();
        assert!((v - 0.25).abs() < 1e-15);
        assert_eq!(tent_upper_bound_appendix(30, 2, 2, 2).unwrap(), 0.0);
    }

    #[test]
    fn affine_pieces_frozen_example() {
        let v = affine_piece_bound(8, 2, 1).unwrap();
        let want = (5.0 * std::f64::consts::E).powi(2);
        assert!((v - want).abs() < 1e-10);
        assert!((v - 184.726_402_5).abs() < 1e-6);
        assert_eq!(affine_piece_bound(8, 0, 1).unwrap(), 1.0);
    }

    #[test]
    fn plane_distance_frozen_example() {
        // Gamma(3/2)^2 / pi = 1/4; 0.5 * (1/4 * sqrt(2)) = sqrt(2)/8
        let v = plane_distance_bound(1, 2, std::f64::consts::SQRT_2 / 2.0, 1.0).unwrap();
        assert!((v - std::f64::consts::SQRT_2 / 8.0).abs() < 1e-13);
        // m_B exponent is 1 for d - n = 1
        let v2 = plane_distance_bound(1, 2, std::f64::consts::SQRT_2 / 2.0, 2.0).unwrap();
        assert!((v2 - 2.0 * v).abs() < 1e-13);
    }

    #[test]
    fn plane_distance_below_brute_force_disk() {
        // B = unit disk, S = x-axis: E[dist] = (4/3)/pi, checked by polar
        // quadrature; the lemma's bound must sit below it
        let bound = plane_distance_bound(1, 2, 1.0, std::f64::consts::PI).unwrap();
        let steps = 4000;
        let mut acc = 0.0;
        for i in 0..steps {
            let r = (i as f64 + 0.5) / steps as f64;
            let mut ang = 0.0;
            for j in 0..steps {
                let th: f64 = std::f64::consts::TAU * (j as f64 + 0.5) / steps as f64;
                ang += (r * th.sin()).abs();
            }
            acc += r * ang / steps as f64;
        }
        let brute = std::f64::consts::TAU * acc / steps as f64 / std::f64::consts::PI;
        assert!((brute - 4.0 / (3.0 * std::f64::consts::PI)).abs() < 1e-4);
        assert!(bound <= brute);
        assert!(bound >= 0.8 * brute, "bound {bound} vs brute {brute}");
    }

    #[test]
    fn gap_and_network_bounds() {
        let base = plane_distance_bound(1, 2, std::f64::consts::SQRT_2 / 2.0, 1.0).unwrap();
        let same = dimension_gap_bound(1, 2, std::f64::consts::SQRT_2 / 2.0, 1.0, 1.0).unwrap();
        assert!((base - same).abs() < 1e-15);
        let v = dimension_gap_bound(1, 2, std::f64::consts::SQRT_2 / 2.0, 1.0, 100.0).unwrap();
        assert!((v - 0.0017677669529663687).abs() < 1e-12);

        let mut prev = f64::INFINITY;
        for n_nodes in [12, 20, 36, 68] {
            let v = network_lower_bound(n_nodes, 2, 1, 2).unwrap();
            assert!(v > 0.0 && v < prev);
            prev = v;
        }
    }
}
