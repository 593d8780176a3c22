use pushforge_bounds::pwl_phi_best_l1;

#[test]
fn pwl_error_scales_like_inverse_fourth_power_at_least_quadratically() {
    // the fitted error must decay with log-log slope at most -2 and stay
    // above a positive multiple of N^{-4}
    let ns = [2usize, 4, 8, 16, 32, 64];
    let errs: Vec<f64> = ns
        .iter()
        .map(|&n| pwl_phi_best_l1(n, (-2.0, 2.0)).unwrap())
        .collect();

    let xs: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = errs.iter().map(|&e| e.ln()).collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let slope = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum::<f64>()
        / xs.iter().map(|x| (x - mx) * (x - mx)).sum::<f64>();
    assert!(slope <= -2.0, "log-log slope {slope}");

    let k = errs
        .iter()
        .zip(&ns)
        .map(|(&e, &n)| e * (n as f64).powi(4))
        .fold(f64::INFINITY, f64::min);
    assert!(k > 1e-4, "fitted constant {k}");

    // errors strictly decrease along the sweep
    for w in errs.windows(2) {
        assert!(w[1] < w[0], "{errs:?}");
    }
}
