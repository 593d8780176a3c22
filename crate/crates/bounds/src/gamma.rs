//! Log-gamma via the Lanczos approximation (g = 7, 9 coefficients), relative
//! error below 1e-13 on the positive half line — comfortably inside the
//! 1e-12 budget the bound formulas assume.

const G: f64 = 7.0;
const COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Gamma(z)` for `z > 0`.
pub fn ln_gamma(z: f64) -> f64 {
    assert!(z > 0.0, "ln_gamma needs z > 0, got {z}");
    if z < 0.5 {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let s = (std::f64::consts::PI * z).sin();
        return std::f64::consts::PI.ln() - s.ln() - ln_gamma(1.0 - z);
    }
    let z = z - 1.0;
    let mut x = COEF[0];
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_exact_values() {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        // integers: Gamma(n) = (n-1)!
        let mut fact = 1.0f64;
        for n in 1..=12u64 {
            let want = fact.ln();
            assert!((ln_gamma(n as f64) - want).abs() <= 1e-12 * want.abs().max(1.0));
            fact *= n as f64;
        }
        // half-integers: Gamma(1/2) = sqrt(pi), Gamma(z+1) = z Gamma(z)
        let mut g = sqrt_pi;
        let mut z = 0.5;
        while z < 10.0 {
            assert!(
                (ln_gamma(z) - g.ln()).abs() <= 1e-12 * g.ln().abs().max(1.0),
                "z={z}"
            );
            g *= z;
            z += 1.0;
        }
    }
}
