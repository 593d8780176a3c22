//! Standard normal CDF, density and quantile, built on the erf oracle.

use crate::oracle::{erfc, erfc_inv};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

pub fn normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Standard normal CDF, accurate in both tails.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x * FRAC_1_SQRT_2)
}

/// Upper tail `1 - Phi(x)` without cancellation.
pub fn normal_sf(x: f64) -> f64 {
    0.5 * erfc(x * FRAC_1_SQRT_2)
}

/// Standard normal quantile with a Newton polish.
///
/// The rational inverse is already good to ~1e-15 relative; one Newton step
/// in the well-conditioned direction pins the result to the oracle CDF.
pub fn normal_quantile(p: f64) -> f64 {
    assert!((0.0..=1.0).contains(&p), "quantile of p = {p}");
    if p == 0.0 {
        return f64::NEG_INFINITY;
    }
    if p == 1.0 {
        return f64::INFINITY;
    }
    let mut x = -std::f64::consts::SQRT_2 * erfc_inv(2.0 * p);
    for _ in 0..2 {
        let d = normal_pdf(x);
        if d <= f64::MIN_POSITIVE {
            break;
        }
        // use the tail with the smaller magnitude for the residual
        let resid = if p <= 0.5 {
            normal_cdf(x) - p
        } else {
            (1.0 - p) - normal_sf(x)
        };
        let step = resid / d;
        if step.abs() > 1.0 {
            break;
        }
        x -= step;
    }
    x
}

/// `\int_{-inf}^{a} Phi(t) dt` (finite for all `a`).
pub fn normal_cdf_lower_integral(a: f64) -> f64 {
    normal_pdf(a) + a * normal_cdf(a)
}

/// `\int_{b}^{inf} (1 - Phi(t)) dt`.
pub fn normal_sf_upper_integral(b: f64) -> f64 {
    normal_pdf(b) - b * normal_sf(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cdf_reference_values() {
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-16);
        assert!((normal_cdf(1.0) - 0.8413447460685429).abs() < 1e-15);
        assert!((normal_cdf(-1.96) - 0.024997895148220435).abs() < 1e-15);
        assert!((normal_sf(6.0) - 9.865876450376946e-10).abs() < 1e-22);
    }

    #[test]
    fn quantile_roundtrip() {
        for &p in &[1e-12, 1e-6, 0.01, 0.25, 0.5, 0.75, 0.99, 1.0 - 1e-9] {
            let x = normal_quantile(p);
            let back = normal_cdf(x);
            assert!(
                (back - p).abs() < 1e-13 * p.max(1e-3),
                "p = {p}, x = {x}, back = {back}"
            );
        }
        assert!((normal_quantile(0.975) - 1.959963984540054).abs() < 1e-12);
    }

    #[test]
    fn tail_integrals_match_numeric() {
        // crude Riemann check of the closed forms
        for &a in &[-2.0, -0.5, 0.7, 1.5] {
            let mut num = 0.0;
            let lo = -40.0;
            let n = 400_000;
            let h = (a - lo) / n as f64;
            for i in 0..n {
                num += normal_cdf(lo + (i as f64 + 0.5) * h) * h;
            }
            assert!(
                (num - normal_cdf_lower_integral(a)).abs() < 1e-6,
                "a = {a}"
            );
        }
    }
}
