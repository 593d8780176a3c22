use pushforge_net::{
    breakpoints_1d, enumerate_regions, eval, parallel, read_network, replace_steps,
    write_network, ActivationKind, AffineLayer, Flavor, Network, RegionOptions,
};

fn abs_net() -> Network {
    // |x| = relu(x) + relu(-x)
    let l1 = AffineLayer::uniform(2, 1, vec![1.0, -1.0], vec![0.0, 0.0], ActivationKind::Relu)
        .unwrap();
    let l2 =
        AffineLayer::uniform(1, 2, vec![1.0, 1.0], vec![0.0], ActivationKind::Identity).unwrap();
    Network::new(vec![l1, l2], Flavor::ReluOnly).unwrap()
}

#[test]
fn abs_eval_and_counts() {
    let net = abs_net();
    for &x in &[-2.0, -0.5, 0.0, 0.3, 1.7] {
        let y = eval(&net, &[x]).unwrap();
        assert_eq!(y, vec![x.abs()]);
    }
    assert_eq!(net.node_count(), 4); // input + 2 hidden + output
    assert_eq!(net.hidden_layer_count(), 1);
    assert_eq!(net.hidden_unit_count(), 2);
}

#[test]
fn compose_matches_sequential_eval() {
    let inner = abs_net();
    // outer: y -> relu(y - 0.5) * 2
    let l1 = AffineLayer::uniform(1, 1, vec![1.0], vec![-0.5], ActivationKind::Relu).unwrap();
    let l2 = AffineLayer::uniform(1, 1, vec![2.0], vec![0.0], ActivationKind::Identity).unwrap();
    let outer = Network::new(vec![l1, l2], Flavor::ReluOnly).unwrap();

    let comp = inner.then(&outer).unwrap();
    // seam merge: 1 + 1 hidden layers, not 3 affine maps worth of nodes
    assert_eq!(comp.hidden_layer_count(), 2);
    let mut x = -3.0;
    while x <= 3.0 {
        let a = outer.eval(&inner.eval(&[x]).unwrap()).unwrap();
        let b = comp.eval(&[x]).unwrap();
        assert_eq!(a, b, "mismatch at x = {x}");
        x += 0.0625;
    }
}

#[test]
fn parallel_is_block_diagonal() {
    let a = abs_net();
    let b = abs_net();
    let both = parallel(&[a.clone(), b.clone()]).unwrap();
    assert_eq!(both.input_dim(), 2);
    assert_eq!(both.output_dim(), 2);
    let y = both.eval(&[-1.25, 0.75]).unwrap();
    assert_eq!(y, vec![1.25, 0.75]);
}

#[test]
fn pad_to_depth_preserves_function() {
    let net = abs_net();
    let dom = vec![(-2.0, 2.0)];
    let padded = net.pad_to_depth(4, &dom).unwrap();
    assert_eq!(padded.hidden_layer_count(), 4);
    let mut x = -2.0;
    while x <= 2.0 {
        let a = net.eval(&[x]).unwrap()[0];
        let b = padded.eval(&[x]).unwrap()[0];
        assert!((a - b).abs() < 1e-12, "x = {x}: {a} vs {b}");
        x += 0.125;
    }
}

#[test]
fn io_roundtrip_is_exact() {
    let net = abs_net();
    let mut buf = Vec::new();
    write_network(&net, &mut buf).unwrap();
    let back = read_network(&buf[..]).unwrap();
    assert_eq!(&net, &back);
    let mut buf2 = Vec::new();
    write_network(&back, &mut buf2).unwrap();
    assert_eq!(buf, buf2); // deterministic bytes
}

#[test]
fn io_rejects_unknown_version() {
    let net = abs_net();
    let mut buf = Vec::new();
    write_network(&net, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap().replace("\"version\": 1", "\"version\": 99");
    assert!(read_network(text.as_bytes()).is_err());
}

#[test]
fn abs_regions() {
    let net = abs_net();
    let regs = enumerate_regions(&net, &[(-1.0, 1.0)], &RegionOptions::default()).unwrap();
    assert_eq!(regs.len(), 2);
    // inactive-first order: x <= 0 branch (pattern [false, true]) comes first
    assert_eq!(regs[0].pattern, vec![false, true]);
    assert_eq!(regs[1].pattern, vec![true, false]);
    assert!((regs[0].affine_weights[0] + 1.0).abs() < 1e-12);
    assert!((regs[1].affine_weights[0] - 1.0).abs() < 1e-12);
}

#[test]
fn regions_affine_map_matches_eval() {
    // 2-D net, one hidden layer of 3 units
    let l1 = AffineLayer::uniform(
        3,
        2,
        vec![1.0, 0.5, -0.7, 1.0, 0.3, -1.1],
        vec![-0.2, 0.1, 0.4],
        ActivationKind::Relu,
    )
    .unwrap();
    let l2 = AffineLayer::uniform(
        2,
        3,
        vec![1.0, -1.0, 0.5, 0.2, 0.9, -0.3],
        vec![0.05, -0.15],
        ActivationKind::Identity,
    )
    .unwrap();
    let net = Network::new(vec![l1, l2], Flavor::ReluOnly).unwrap();
    let dom = [(-1.0, 1.0), (-1.0, 1.0)];
    let regs = enumerate_regions(&net, &dom, &RegionOptions::default()).unwrap();
    // 3 lines cut the plane into at most 7 cells
    assert!(!regs.is_empty() && regs.len() <= 7, "{} regions", regs.len());
    for reg in &regs {
        let p = &reg.interior_point;
        let y = net.eval(p).unwrap();
        for r in 0..2 {
            let lin = reg.affine_bias[r]
                + reg.affine_weights[r * 2] * p[0]
                + reg.affine_weights[r * 2 + 1] * p[1];
            assert!((lin - y[r]).abs() < 1e-9, "region map disagrees with eval");
        }
    }
}

#[test]
fn region_budget_enforced() {
    let net = abs_net();
    let opts = RegionOptions { budget: 1, radius_tol: 1e-10 };
    assert!(enumerate_regions(&net, &[(-1.0, 1.0)], &opts).is_err());
}

#[test]
fn abs_breakpoints() {
    let net = abs_net();
    let bps = breakpoints_1d(&net, (-1.0, 1.0), 0.0).unwrap();
    assert_eq!(bps, vec![(-1.0, 1.0), (0.0, 0.0), (1.0, 1.0)]);
}

#[test]
fn breakpoints_merge_tol_drops_slivers() {
    // step surrogate with a 1e-7 ramp at 0.5 produces knots 1e-7 apart
    let l1 = AffineLayer::uniform(
        2,
        1,
        vec![1.0, 1.0],
        vec![-0.5, -0.5 - 1e-7],
        ActivationKind::Relu,
    )
    .unwrap();
    let l2 = AffineLayer::uniform(
        1,
        2,
        vec![1e7, -1e7],
        vec![0.0],
        ActivationKind::Identity,
    )
    .unwrap();
    let net = Network::new(vec![l1, l2], Flavor::ReluOnly).unwrap();
    let exact = breakpoints_1d(&net, (0.0, 1.0), 0.0).unwrap();
    assert_eq!(exact.len(), 4);
    let merged = breakpoints_1d(&net, (0.0, 1.0), 1e-5).unwrap();
    assert!(merged.len() < exact.len());
}

#[test]
fn replace_steps_matches_outside_ramp() {
    // y = 3 H(x - 0.25) - 1
    let l1 = AffineLayer::uniform(1, 1, vec![1.0], vec![-0.25], ActivationKind::Step).unwrap();
    let l2 = AffineLayer::uniform(1, 1, vec![3.0], vec![-1.0], ActivationKind::Identity).unwrap();
    let net = Network::new(vec![l1, l2], Flavor::ReluStep).unwrap();
    let delta = 1e-6;
    let relu = replace_steps(&net, delta).unwrap();
    assert_eq!(relu.flavor(), Flavor::ReluOnly);
    assert!(!relu.contains_steps());
    for &x in &[-1.0, 0.0, 0.25, 0.25 + 2e-6, 0.5, 1.0] {
        let a = net.eval(&[x]).unwrap()[0];
        let b = relu.eval(&[x]).unwrap()[0];
        assert!((a - b).abs() < 1e-9, "x = {x}: {a} vs {b}");
    }
    // inside the ramp the surrogate interpolates
    let mid = relu.eval(&[0.25 + delta / 2.0]).unwrap()[0];
    assert!((mid - 0.5).abs() < 1e-6);
}

#[test]
fn step_requires_relu_step_flavor() {
    let l1 = AffineLayer::uniform(1, 1, vec![1.0], vec![0.0], ActivationKind::Step).unwrap();
    let l2 = AffineLayer::uniform(1, 1, vec![1.0], vec![0.0], ActivationKind::Identity).unwrap();
    assert!(Network::new(vec![l1, l2], Flavor::ReluOnly).is_err());
}
