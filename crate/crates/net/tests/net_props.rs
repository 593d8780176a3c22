use proptest::prelude::*;
use pushforge_net::{
    breakpoints_1d, enumerate_regions, parallel, ActivationKind, AffineLayer, Flavor, Network,
    RegionOptions,
};

fn small_relu_net(
    widths: Vec<usize>,
    params: Vec<f64>,
) -> Network {
    // widths: hidden widths for a 1 -> ... -> 1 net; params consumed in order
    let mut it = params.into_iter().cycle();
    let mut layers = Vec::new();
    let mut prev = 1;
    for &w in &widths {
        let weights: Vec<f64> = (0..w * prev).map(|_| it.next().unwrap()).collect();
        let bias: Vec<f64> = (0..w).map(|_| it.next().unwrap()).collect();
        layers.push(AffineLayer::uniform(w, prev, weights, bias, ActivationKind::Relu).unwrap());
        prev = w;
    }
    let weights: Vec<f64> = (0..prev).map(|_| it.next().unwrap()).collect();
    layers.push(
        AffineLayer::uniform(1, prev, weights, vec![it.next().unwrap()], ActivationKind::Identity)
            .unwrap(),
    );
    Network::new(layers, Flavor::ReluOnly).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn breakpoints_interpolate_eval(
        widths in prop::collection::vec(1usize..5, 1..3),
        params in prop::collection::vec(-2.0f64..2.0, 8..24),
    ) {
        let net = small_relu_net(widths, params);
        let bps = breakpoints_1d(&net, (-1.0, 1.0), 0.0).unwrap();
        prop_assert!(bps.len() >= 2);
        for w in bps.windows(2) {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            prop_assert!(x0 < x1);
            let xm = 0.5 * (x0 + x1);
            let lin = y0 + (y1 - y0) * (xm - x0) / (x1 - x0);
            let truth = net.eval(&[xm]).unwrap()[0];
            prop_assert!((lin - truth).abs() < 1e-9 * (1.0 + truth.abs()),
                "midpoint {xm}: {lin} vs {truth}");
        }
        // endpoints are exact
        let (x0, y0) = bps[0];
        prop_assert!((y0 - net.eval(&[x0]).unwrap()[0]).abs() < 1e-12);
    }

    #[test]
    fn region_count_matches_breakpoint_pieces(
        widths in prop::collection::vec(1usize..4, 1..3),
        params in prop::collection::vec(-2.0f64..2.0, 8..24),
    ) {
        let net = small_relu_net(widths, params);
        let regs = enumerate_regions(&net, &[(-1.0, 1.0)], &RegionOptions::default()).unwrap();
        prop_assert!(!regs.is_empty());
        // 1-D: full-dimensional regions partition the interval
        let mut lens: Vec<(f64, f64)> = regs
            .iter()
            .map(|r| {
                // project constraints onto the line: region is an interval
                let mut lo = -1.0f64;
                let mut hi = 1.0f64;
                for h in &r.constraints {
                    let a = h.normal[0];
                    if a > 1e-12 {
                        hi = hi.min(h.offset / a);
                    } else if a < -1e-12 {
                        lo = lo.max(h.offset / a);
                    }
                }
                (lo, hi)
            })
            .collect();
        lens.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
        let total: f64 = lens.iter().map(|&(lo, hi)| (hi - lo).max(0.0)).sum();
        prop_assert!((total - 2.0).abs() < 1e-7, "coverage {total}");
        // every region's affine map matches eval at its interior point
        for r in &regs {
            let p = r.interior_point[0];
            let lin = r.affine_bias[0] + r.affine_weights[0] * p;
            let truth = net.eval(&[p]).unwrap()[0];
            prop_assert!((lin - truth).abs() < 1e-8 * (1.0 + truth.abs()));
        }
    }

    #[test]
    fn parallel_eval_agrees(
        params_a in prop::collection::vec(-2.0f64..2.0, 8..16),
        params_b in prop::collection::vec(-2.0f64..2.0, 8..16),
        x in -1.0f64..1.0,
        y in -1.0f64..1.0,
    ) {
        let a = small_relu_net(vec![3], params_a);
        let b = small_relu_net(vec![3], params_b);
        let both = parallel(&[a.clone(), b.clone()]).unwrap();
        let got = both.eval(&[x, y]).unwrap();
        prop_assert_eq!(got[0], a.eval(&[x]).unwrap()[0]);
        prop_assert_eq!(got[1], b.eval(&[y]).unwrap()[0]);
    }
}
