//! Command implementations: artifact writing, sweeps, and plots.

use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use anyhow::{bail, Context};

use pushforge_bounds::{network_lower_bound, tent_upper_bound, BoundReport};
use pushforge_build::{
    binary_search_inverter, box_muller_net, clamp_net, inverse_normal_cdf_net, multiplier_net,
    normal_cdf_net, space_filling_net, sum_of_uniforms_net, tent_map_net, uniform_to_normal_net,
    AccuracyCert,
};
use pushforge_net::{
    enumerate_regions, read_network, write_network, Network, RegionOptions,
};
use pushforge_transport::{
    box_coupling_check, empirical_wasserstein, normal_cdf_ref, normal_quantile_ref,
    pushforward_cdf_1d, sample_pushforward, wasserstein_1d, wasserstein_vs_normal,
    BoxCouplingSpec, EmpiricalDistribution, PiecewiseLinearCdf, SourceDistribution,
};
use pushforge_verify::{numeric_summary, run_acceptance};

use crate::config::Config;
use crate::svg::{render, PlotSpec, Series};
use crate::BuildKind;

pub struct Ctx {
    pub seed: u64,
    pub out: PathBuf,
    pub jobs: usize,
    pub cfg: Config,
}

impl Ctx {
    /// Open `name` inside the run directory for writing; refuses to clobber
    /// an existing artifact (outputs are write-once per run directory).
    fn create(&self, name: &str) -> anyhow::Result<(PathBuf, std::fs::File)> {
        std::fs::create_dir_all(&self.out)
            .with_context(|| format!("creating {}", self.out.display()))?;
        let path = self.out.join(name);
        let file = OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(&path)
            .with_context(|| {
                format!(
                    "creating {} (artifacts are write-once; use a fresh --out)",
                    path.display()
                )
            })?;
        Ok((path, file))
    }
}

pub fn load_network(path: &Path) -> anyhow::Result<Network> {
    let file =
        std::fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(read_network(file)?)
}

/// Deterministically ordered parallel map over grid points.
fn par_map<T, R, F>(jobs: usize, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let n = items.len();
    let slots: Vec<Mutex<Option<R>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(n.max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let r = f(&items[i]);
                *slots[i].lock().unwrap() = Some(r);
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().unwrap().expect("worker finished every slot"))
        .collect()
}

fn region_options() -> RegionOptions {
    let mut opts = RegionOptions::default();
    if let Ok(v) = std::env::var("PUSHFORGE_BUDGET") {
        if let Ok(budget) = v.parse::<usize>() {
            opts.budget = budget;
        }
    }
    opts
}

fn write_net_artifacts(
    ctx: &Ctx,
    label: &str,
    net: &Network,
    cert: &AccuracyCert,
) -> anyhow::Result<()> {
    let (net_path, net_file) = ctx.create(&format!("{label}.net.json"))?;
    write_network(net, net_file)?;
    let (cert_path, mut cert_file) = ctx.create(&format!("{label}.cert.json"))?;
    cert_file.write_all(serde_json::to_string_pretty(cert)?.as_bytes())?;
    cert_file.write_all(b"\n")?;
    println!(
        "wrote {} ({} nodes, {} hidden layers) and {}",
        net_path.display(),
        net.node_count(),
        net.hidden_layer_count(),
        cert_path.display()
    );
    Ok(())
}

pub fn cmd_build(ctx: &Ctx, kind: &BuildKind) -> anyhow::Result<()> {
    match kind {
        BuildKind::Tent { k } => {
            let net = tent_map_net(*k)?;
            let cert = AccuracyCert::exact(vec![(0.0, 1.0)]);
            write_net_artifacts(ctx, &format!("tent-k{k}"), &net, &cert)
        }
        BuildKind::Clamp { lo, hi, dim } => {
            if !(lo < hi) {
                bail!("clamp needs --lo < --hi");
            }
            let net = clamp_net(*dim, *lo, *hi)?;
            let cert = AccuracyCert::exact(vec![(f64::MIN, f64::MAX); *dim]);
            write_net_artifacts(ctx, &format!("clamp-{dim}d"), &net, &cert)
        }
        BuildKind::SpaceFilling { n, d, nodes, layers } => {
            let (net, plan) = space_filling_net(*n, *d, *nodes, *layers)?;
            let cert = AccuracyCert {
                target_eps: (*d as f64).sqrt() / plan.k as f64,
                domain: vec![(0.0, 1.0); *n],
                claimed_sup_error: (*d as f64).sqrt() / plan.k as f64,
                zeta: 0.0,
            };
            let label = format!("space-filling-n{n}-d{d}-N{nodes}-L{layers}");
            write_net_artifacts(ctx, &label, &net, &cert)?;
            let (plan_path, mut plan_file) = ctx.create(&format!("{label}.plan.json"))?;
            plan_file.write_all(serde_json::to_string_pretty(&plan)?.as_bytes())?;
            plan_file.write_all(b"\n")?;
            println!("wrote {} (k = {})", plan_path.display(), plan.k);
            Ok(())
        }
        BuildKind::NormalCdf { eps } => {
            let (net, cert) = normal_cdf_net(*eps)?;
            write_net_artifacts(ctx, &format!("normal-cdf-eps{eps}"), &net, &cert)
        }
        BuildKind::InverseNormalCdf { eps } => {
            let (net, cert) = inverse_normal_cdf_net(*eps)?;
            write_net_artifacts(ctx, &format!("inverse-normal-cdf-eps{eps}"), &net, &cert)
        }
        BuildKind::UniformToNormal { eps } => {
            let (net, cert) = uniform_to_normal_net(*eps)?;
            write_net_artifacts(ctx, &format!("uniform-to-normal-eps{eps}"), &net, &cert)
        }
        BuildKind::BoxMuller { eps } => {
            let (net, cert) = box_muller_net(*eps)?;
            write_net_artifacts(ctx, &format!("box-muller-eps{eps}"), &net, &cert)
        }
        BuildKind::SumOfUniforms { n } => {
            let net = sum_of_uniforms_net(*n)?;
            let cert = AccuracyCert::exact(vec![(0.0, 1.0); *n]);
            write_net_artifacts(ctx, &format!("sum-of-uniforms-n{n}"), &net, &cert)
        }
        BuildKind::Multiplier { m, eps } => {
            let (net, cert) = multiplier_net(*m, *eps)?;
            write_net_artifacts(ctx, &format!("multiplier-m{m}-eps{eps}"), &net, &cert)
        }
    }
}

fn parse_domain(spec: Option<&str>, dim: usize) -> anyhow::Result<Vec<(f64, f64)>> {
    match spec {
        None => Ok(vec![(0.0, 1.0); dim]),
        Some(s) => {
            let ranges: Vec<(f64, f64)> = s
                .split(';')
                .map(|part| -> anyhow::Result<(f64, f64)> {
                    let mut it = part.split(',');
                    let lo: f64 = it.next().context("missing lo")?.trim().parse()?;
                    let hi: f64 = it.next().context("missing hi")?.trim().parse()?;
                    if it.next().is_some() || !(lo < hi) {
                        bail!("bad range {part:?}, expected \"lo,hi\" with lo < hi");
                    }
                    Ok((lo, hi))
                })
                .collect::<anyhow::Result<_>>()?;
            if ranges.len() != dim {
                bail!("domain has {} ranges, network input dim is {dim}", ranges.len());
            }
            Ok(ranges)
        }
    }
}

pub fn cmd_regions(ctx: &Ctx, net_path: &Path, domain: Option<&str>) -> anyhow::Result<()> {
    let net = load_network(net_path)?;
    let domain = parse_domain(domain, net.input_dim())?;
    let regions = enumerate_regions(&net, &domain, &region_options())?;
    let (csv_path, file) = ctx.create("regions.csv")?;
    let mut w = csv::Writer::from_writer(file);
    let mut header = vec!["region".to_string(), "inradius".to_string()];
    for j in 0..net.input_dim() {
        header.push(format!("center_{j}"));
    }
    w.write_record(&header)?;
    for (i, r) in regions.iter().enumerate() {
        let mut rec = vec![i.to_string(), format!("{:.12e}", r.inradius)];
        for c in &r.interior_point {
            rec.push(format!("{c:.12e}"));
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    println!("{} regions; table in {}", regions.len(), csv_path.display());
    Ok(())
}

pub fn cmd_cdf(
    ctx: &Ctx,
    net_path: &Path,
    domain: (f64, f64),
    merge_tol: f64,
) -> anyhow::Result<()> {
    let net = load_network(net_path)?;
    let cdf = pushforward_cdf_1d(&net, domain, merge_tol)?;
    let (csv_path, file) = ctx.create("cdf.csv")?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(["y", "F"])?;
    for (x, v) in cdf.breakpoints().iter().zip(cdf.values()) {
        w.write_record([format!("{x:.12e}"), format!("{v:.12e}")])?;
    }
    w.flush()?;
    println!(
        "{} pieces over support [{:.6}, {:.6}]; table in {}",
        cdf.piece_count(),
        cdf.support().0,
        cdf.support().1,
        csv_path.display()
    );
    Ok(())
}

pub fn cmd_wasserstein(
    _ctx: &Ctx,
    net_path: &Path,
    target: &str,
    domain: (f64, f64),
    merge_tol: f64,
) -> anyhow::Result<()> {
    let net = load_network(net_path)?;
    let cdf = pushforward_cdf_1d(&net, domain, merge_tol)?;
    let w = match target {
        "uniform" => wasserstein_1d(&cdf, &PiecewiseLinearCdf::uniform(0.0, 1.0)?)?,
        "normal" => wasserstein_vs_normal(&cdf)?,
        other => bail!("unknown --target {other:?}, expected \"uniform\" or \"normal\""),
    };
    println!("{w:.12e}");
    Ok(())
}

pub fn cmd_sweep_tent(ctx: &Ctx) -> anyhow::Result<()> {
    let cfg = &ctx.cfg.sweep_tent;
    if cfg.nodes.is_empty() || cfg.layers.is_empty() {
        bail!("sweep-tent grid is empty (check [sweep_tent] nodes/layers in the config)");
    }
    let (n, d) = (cfg.latent_dim, cfg.ambient_dim);
    let grid: Vec<(usize, usize)> = cfg
        .layers
        .iter()
        .flat_map(|&l| cfg.nodes.iter().map(move |&nn| (l, nn)))
        .collect();

    struct Row {
        layers: usize,
        nodes: usize,
        k: Option<usize>,
        emd: Option<f64>,
        upper: Option<f64>,
        lower: Option<f64>,
        status: String,
    }

    let seed = ctx.seed;
    let samples = cfg.samples;
    let slack = cfg.slack;
    let rows = par_map(ctx.jobs, grid, |&(layers, nodes)| -> Row {
        if nodes <= d * layers {
            return Row {
                layers,
                nodes,
                k: None,
                emd: None,
                upper: None,
                lower: None,
                status: "skipped:N≤dL".into(),
            };
        }
        let work = || -> anyhow::Result<Row> {
            let (net, plan) = space_filling_net(n, d, nodes, layers)?;
            let spec = BoxCouplingSpec {
                k: plan.k,
                outputs_per_input: plan.outputs_per_input.clone(),
            };
            let coupled = box_coupling_check(&net, &spec, 3)?;
            let pushed =
                sample_pushforward(&net, &SourceDistribution::uniform_box(n, seed), samples)?;
            let target_src = SourceDistribution::uniform_box(d, seed.wrapping_add(1));
            let target = EmpiricalDistribution::uniform(
                (0..samples as u64).map(|i| target_src.draw(i)).collect(),
            )?;
            let emd = empirical_wasserstein(&pushed, &target)?;
            let upper = tent_upper_bound(nodes as u64, layers as u64, n as u64, d as u64)?;
            let lower = network_lower_bound(nodes as u64, layers as u64, n as u64, d as u64)?;
            let coupling_upper = (d as f64).sqrt() / plan.k as f64 + slack;
            let ok = coupled && emd <= coupling_upper && emd >= lower;
            Ok(Row {
                layers,
                nodes,
                k: Some(plan.k),
                emd: Some(emd),
                upper: Some(upper),
                lower: Some(lower),
                status: if ok { "ok".into() } else { "fail".into() },
            })
        };
        work().unwrap_or_else(|e| Row {
            layers,
            nodes,
            k: None,
            emd: None,
            upper: None,
            lower: None,
            status: format!("error:{e}"),
        })
    });

    let (csv_path, file) = ctx.create("sweep-tent.csv")?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record([
        "n_nodes", "layers", "latent_dim", "ambient_dim", "k", "emd", "tent_upper", "net_lower",
        "samples", "seed", "status",
    ])?;
    let fmt = |v: Option<f64>| v.map(|x| format!("{x:.12e}")).unwrap_or_default();
    for r in &rows {
        w.write_record([
            r.nodes.to_string(),
            r.layers.to_string(),
            n.to_string(),
            d.to_string(),
            r.k.map(|k| k.to_string()).unwrap_or_default(),
            fmt(r.emd),
            fmt(r.upper),
            fmt(r.lower),
            samples.to_string(),
            ctx.seed.to_string(),
            r.status.clone(),
        ])?;
    }
    w.flush()?;

    let mut series = Vec::new();
    for &layers in &cfg.layers {
        for (metric, pick) in [
            ("emd", 0usize),
            ("tent_upper", 1),
            ("net_lower", 2),
        ] {
            let points: Vec<(f64, f64)> = rows
                .iter()
                .filter(|r| r.layers == layers)
                .filter_map(|r| {
                    let y = [r.emd, r.upper, r.lower][pick]?;
                    Some((r.nodes as f64, y))
                })
                .collect();
            series.push(Series {
                name: format!("{metric} (L={layers})"),
                points,
                scatter: false,
            });
        }
    }
    let (svg_path, mut svg_file) = ctx.create("sweep-tent.svg")?;
    svg_file.write_all(
        render(
            &PlotSpec {
                title: "Space-filling sweep: measured EMD vs bounds",
                x_label: "nodes N",
                y_label: "Wasserstein distance",
                log_x: true,
                log_y: true,
            },
            &series,
        )
        .as_bytes(),
    )?;
    let failures = rows.iter().filter(|r| r.status == "fail").count();
    println!(
        "{} grid points ({} sandwich failures); {} and {}",
        rows.len(),
        failures,
        csv_path.display(),
        svg_path.display()
    );
    if failures > 0 {
        bail!("{failures} grid points violate the sandwich");
    }
    Ok(())
}

pub fn cmd_sweep_phi(ctx: &Ctx) -> anyhow::Result<()> {
    let cfg = &ctx.cfg.sweep_phi;
    if cfg.eps.is_empty() {
        bail!("sweep-phi grid is empty");
    }
    let (csv_path, file) = ctx.create("sweep-phi.csv")?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(["eps", "nodes", "hidden_layers", "sup_error"])?;
    let mut nodes_series = Vec::new();
    let mut err_series = Vec::new();
    for &eps in &cfg.eps {
        let (net, _) = normal_cdf_net(eps)?;
        let mut sup = 0.0f64;
        for i in 0..cfg.grid_points {
            let z = -cfg.z_max + 2.0 * cfg.z_max * i as f64 / (cfg.grid_points - 1) as f64;
            sup = sup.max((net.eval(&[z])?[0] - normal_cdf_ref(z)).abs());
        }
        w.write_record([
            format!("{eps:e}"),
            net.node_count().to_string(),
            net.hidden_layer_count().to_string(),
            format!("{sup:.12e}"),
        ])?;
        nodes_series.push((1.0 / eps, net.node_count() as f64));
        err_series.push((1.0 / eps, sup));
    }
    w.flush()?;
    let (svg_path, mut svg_file) = ctx.create("sweep-phi.svg")?;
    svg_file.write_all(
        render(
            &PlotSpec {
                title: "CDF network: size and sup error vs target accuracy",
                x_label: "1/eps",
                y_label: "nodes / sup error",
                log_x: true,
                log_y: true,
            },
            &[
                Series {
                    name: "nodes".into(),
                    points: nodes_series,
                    scatter: false,
                },
                Series {
                    name: "sup error".into(),
                    points: err_series,
                    scatter: false,
                },
            ],
        )
        .as_bytes(),
    )?;
    println!("{} and {}", csv_path.display(), svg_path.display());
    Ok(())
}

pub fn cmd_sweep_inverse(ctx: &Ctx) -> anyhow::Result<()> {
    let cfg = &ctx.cfg.sweep_inverse;
    if cfg.rounds.is_empty() {
        bail!("sweep-inverse grid is empty");
    }
    let (a, b) = (-2.0, 2.0);
    let (phi, _) = normal_cdf_net(cfg.cdf_eps)?;
    let lip = 1.0 / pushforge_transport::normal_pdf(2.0);
    let (csv_path, file) = ctx.create("sweep-inverse.csv")?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(["rounds", "max_error", "bound", "tested_points"])?;
    let mut err_pts = Vec::new();
    let mut bound_pts = Vec::new();
    for &t in &cfg.rounds {
        let (net, cert) = binary_search_inverter(&phi, a, b, t, cfg.cdf_eps, lip)?;
        let bound = (b - a) * 0.5f64.powi(t as i32) + cfg.cdf_eps * lip;
        let (lo, hi) = cert.domain[0];
        let dyadic = (b - a) * 0.5f64.powi(t as i32);
        let mut worst = 0.0f64;
        let mut tested = 0usize;
        for i in 0..cfg.grid_points {
            let y = lo + (hi - lo) * (i as f64 + 0.5) / cfg.grid_points as f64;
            let x_true = normal_quantile_ref(y);
            let cell = ((x_true - a) / dyadic).round();
            if (x_true - (a + cell * dyadic)).abs() < dyadic / 16.0 {
                continue;
            }
            tested += 1;
            worst = worst.max((net.eval(&[y])?[0] - x_true).abs());
        }
        w.write_record([
            t.to_string(),
            format!("{worst:.12e}"),
            format!("{bound:.12e}"),
            tested.to_string(),
        ])?;
        err_pts.push((t as f64, worst));
        bound_pts.push((t as f64, bound));
    }
    w.flush()?;
    let (svg_path, mut svg_file) = ctx.create("sweep-inverse.svg")?;
    svg_file.write_all(
        render(
            &PlotSpec {
                title: "Binary-search inverter: error vs rounds",
                x_label: "rounds t",
                y_label: "max error",
                log_x: false,
                log_y: true,
            },
            &[
                Series {
                    name: "measured".into(),
                    points: err_pts,
                    scatter: false,
                },
                Series {
                    name: "bound".into(),
                    points: bound_pts,
                    scatter: false,
                },
            ],
        )
        .as_bytes(),
    )?;
    println!("{} and {}", csv_path.display(), svg_path.display());
    Ok(())
}

pub fn cmd_boxmuller_demo(ctx: &Ctx) -> anyhow::Result<()> {
    let eps = 0.1;
    let (net, cert) = box_muller_net(eps)?;
    let x1 = (-0.5f64).exp();
    let (csv_path, file) = ctx.create("boxmuller.csv")?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(["u1", "u2", "z1", "z2", "want_z1", "want_z2"])?;
    for (input, want) in [
        ([x1, 0.0], [1.0, 0.0]),
        ([x1, 0.25], [0.0, 1.0]),
        ([x1, 0.5], [-1.0, 0.0]),
    ] {
        let z = net.eval(&input)?;
        w.write_record([
            format!("{:.12e}", input[0]),
            format!("{:.12e}", input[1]),
            format!("{:.12e}", z[0]),
            format!("{:.12e}", z[1]),
            format!("{:.12e}", want[0]),
            format!("{:.12e}", want[1]),
        ])?;
    }
    w.flush()?;
    let pushed = sample_pushforward(&net, &SourceDistribution::uniform_box(2, ctx.seed), 2000)?;
    let ref_src = SourceDistribution::standard_normal(2, ctx.seed.wrapping_add(2));
    let reference =
        EmpiricalDistribution::uniform((0..2000u64).map(|i| ref_src.draw(i)).collect())?;
    let emd = empirical_wasserstein(&pushed, &reference)?;
    let (svg_path, mut svg_file) = ctx.create("boxmuller.svg")?;
    svg_file.write_all(
        render(
            &PlotSpec {
                title: "Box-Muller pushforward sample",
                x_label: "z1",
                y_label: "z2",
                log_x: false,
                log_y: false,
            },
            &[Series {
                name: "samples".into(),
                points: pushed.points.iter().take(600).map(|p| (p[0], p[1])).collect(),
                scatter: true,
            }],
        )
        .as_bytes(),
    )?;
    println!(
        "EMD to reference normal sample: {emd:.4} (claimed {:.4}); {} and {}",
        cert.claimed_sup_error,
        csv_path.display(),
        svg_path.display()
    );
    Ok(())
}

pub fn cmd_berry_esseen(ctx: &Ctx) -> anyhow::Result<()> {
    let cfg = &ctx.cfg.berry_esseen;
    if cfg.n.is_empty() {
        bail!("berry-esseen grid is empty");
    }
    let (csv_path, file) = ctx.create("berry-esseen.csv")?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(["n", "wasserstein", "c_sqrt_n", "samples", "seed"])?;
    let mut pts = Vec::new();
    for &n in &cfg.n {
        let net = sum_of_uniforms_net(n)?;
        let src = SourceDistribution::uniform_box(n, ctx.seed.wrapping_add(n as u64));
        let mut samples = Vec::with_capacity(cfg.samples);
        for i in 0..cfg.samples as u64 {
            samples.push(net.eval(&src.draw(i))?[0]);
        }
        let cdf = PiecewiseLinearCdf::empirical(&samples)?;
        let dist = wasserstein_vs_normal(&cdf)?;
        w.write_record([
            n.to_string(),
            format!("{dist:.12e}"),
            format!("{:.12e}", dist * (n as f64).sqrt()),
            cfg.samples.to_string(),
            ctx.seed.to_string(),
        ])?;
        pts.push((n as f64, dist));
    }
    w.flush()?;
    let (svg_path, mut svg_file) = ctx.create("berry-esseen.svg")?;
    svg_file.write_all(
        render(
            &PlotSpec {
                title: "Sum of uniforms: W to standard normal",
                x_label: "n",
                y_label: "Wasserstein distance",
                log_x: true,
                log_y: true,
            },
            &[Series {
                name: "measured W".into(),
                points: pts,
                scatter: false,
            }],
        )
        .as_bytes(),
    )?;
    println!("{} and {}", csv_path.display(), svg_path.display());
    Ok(())
}

pub fn cmd_bounds(ctx: &Ctx, nodes: u64, layers: u64, n: u64, d: u64) -> anyhow::Result<()> {
    let report = BoundReport::unit_cube(nodes, layers, n, d)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    let (csv_path, file) = ctx.create("bounds.csv")?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record([
        "n_nodes", "layers", "latent_dim", "ambient_dim", "radius", "measure", "pieces",
        "tent_upper", "tent_upper_appendix", "piece_bound", "plane_lower", "gap_lower",
        "net_lower",
    ])?;
    w.write_record([
        report.params.n_nodes.to_string(),
        report.params.layers.to_string(),
        report.params.latent_dim.to_string(),
        report.params.ambient_dim.to_string(),
        format!("{:.12e}", report.params.radius),
        format!("{:.12e}", report.params.measure),
        format!("{:.12e}", report.params.pieces),
        format!("{:.12e}", report.tent_upper),
        format!("{:.12e}", report.tent_upper_appendix),
        format!("{:.12e}", report.piece_bound),
        format!("{:.12e}", report.plane_lower),
        format!("{:.12e}", report.gap_lower),
        format!("{:.12e}", report.net_lower),
    ])?;
    w.flush()?;
    println!("row written to {}", csv_path.display());
    Ok(())
}

pub fn cmd_verify(ctx: &Ctx) -> anyhow::Result<i32> {
    let outcomes = run_acceptance(ctx.seed);
    for o in &outcomes {
        println!(
            "criterion {:2} [{}] {:24} {}",
            o.index,
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
    }
    let (path, mut file) = ctx.create("verify-summary.tsv")?;
    file.write_all(numeric_summary(&outcomes).as_bytes())?;
    println!("summary written to {}", path.display());
    Ok(if outcomes.iter().all(|o| o.passed) { 0 } else { 2 })
}
