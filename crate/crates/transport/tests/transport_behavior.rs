use pushforge_net::{ActivationKind, AffineLayer, Flavor, Network};
use pushforge_transport::{
    empirical_wasserstein, normal_cdf_ref, normal_quantile_ref, pushforward_cdf_1d,
    sample_pushforward, wasserstein_1d, EmpiricalDistribution, PiecewiseLinearCdf,
    SourceDistribution,
};

fn vee_net() -> Network {
    // f(x) = |2x - 1| on [0,1]; pushforward of U[0,1] is U[0,1]
    let l1 = AffineLayer::uniform(2, 1, vec![2.0, -2.0], vec![-1.0, 1.0], ActivationKind::Relu)
        .unwrap();
    let l2 =
        AffineLayer::uniform(1, 2, vec![1.0, 1.0], vec![0.0], ActivationKind::Identity).unwrap();
    Network::new(vec![l1, l2], Flavor::ReluOnly).unwrap()
}

#[test]
fn quantile_cdf_roundtrip_on_grid() {
    for i in -30..=30 {
        let x = i as f64 / 10.0;
        let back = normal_quantile_ref(normal_cdf_ref(x));
        assert!((back - x).abs() < 1e-10, "x = {x}, back = {back}");
    }
}

#[test]
fn vee_preserves_uniform() {
    let f = pushforward_cdf_1d(&vee_net(), (0.0, 1.0), 0.0).unwrap();
    let u = PiecewiseLinearCdf::uniform(0.0, 1.0).unwrap();
    let w = wasserstein_1d(&f, &u).unwrap();
    assert!(w < 1e-12, "w = {w}");
}

#[test]
fn empirical_matches_exact_in_1d() {
    // exact W between net#U[0,1] and U[0,1] vs the matching solver on samples
    let net = vee_net();
    let exact = {
        let f = pushforward_cdf_1d(&net, (0.0, 1.0), 0.0).unwrap();
        // shift output by 0.25 to make the distance nonzero
        let g = PiecewiseLinearCdf::uniform(0.25, 1.25).unwrap();
        wasserstein_1d(&f, &g).unwrap()
    };
    let n = 2000;
    let samples = sample_pushforward(&net, &SourceDistribution::uniform_box(1, 11), n).unwrap();
    let reference: Vec<Vec<f64>> = (0..n)
        .map(|i| vec![0.25 + (i as f64 + 0.5) / n as f64])
        .collect();
    let reference = EmpiricalDistribution::uniform(reference).unwrap();
    let emd = empirical_wasserstein(&samples, &reference).unwrap();
    // empirical-CDF fluctuation at n = 2000 is about n^{-1/2} ~ 0.022
    assert!(
        (emd - exact).abs() < 3.0 * 0.022,
        "emd = {emd}, exact = {exact}"
    );
}

#[test]
fn emd_1d_equals_cdf_distance_of_empiricals() {
    // for finite 1-D samples, matching cost == L1 distance of empirical CDFs
    let xs: Vec<f64> = (0..50).map(|i| ((i * 37) % 50) as f64 / 50.0).collect();
    let ys: Vec<f64> = (0..50).map(|i| ((i * 13) % 50) as f64 / 45.0).collect();
    let a = EmpiricalDistribution::uniform(xs.iter().map(|&v| vec![v]).collect()).unwrap();
    let b = EmpiricalDistribution::uniform(ys.iter().map(|&v| vec![v]).collect()).unwrap();
    let emd = empirical_wasserstein(&a, &b).unwrap();
    let fa = PiecewiseLinearCdf::empirical(&xs).unwrap();
    let fb = PiecewiseLinearCdf::empirical(&ys).unwrap();
    let w = wasserstein_1d(&fa, &fb).unwrap();
    assert!((emd - w).abs() < 1e-9, "emd = {emd}, cdf = {w}");
}

#[test]
fn dkw_check_on_vee_samples() {
    let net = vee_net();
    let n = 100_000;
    let samples = sample_pushforward(&net, &SourceDistribution::uniform_box(1, 7), n).unwrap();
    let flat: Vec<f64> = samples.points.iter().map(|p| p[0]).collect();
    let emp = PiecewiseLinearCdf::empirical(&flat).unwrap();
    let exact = pushforward_cdf_1d(&net, (0.0, 1.0), 0.0).unwrap();
    let mut sup: f64 = 0.0;
    for i in 0..=200 {
        let x = i as f64 / 200.0;
        sup = sup.max((emp.eval(x) - exact.eval(x)).abs());
    }
    assert!(sup <= 0.01, "sup-distance {sup}");
}
