//! Minimal native SVG plotting: log- or linear-scale axes, one polyline per
//! series, decade tick marks, and a text legend. No external plotting
//! dependency.

use std::fmt::Write as _;

pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
    /// draw markers only, no connecting polyline
    pub scatter: bool,
}

pub struct PlotSpec<'a> {
    pub title: &'a str,
    pub x_label: &'a str,
    pub y_label: &'a str,
    pub log_x: bool,
    pub log_y: bool,
}

const W: f64 = 720.0;
const H: f64 = 480.0;
const ML: f64 = 70.0;
const MR: f64 = 180.0;
const MT: f64 = 40.0;
const MB: f64 = 50.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

fn transform(v: f64, log: bool) -> f64 {
    if log {
        v.max(1e-300).log10()
    } else {
        v
    }
}

/// Render the series to an SVG document string.
pub fn render(spec: &PlotSpec, series: &[Series]) -> String {
    let pts: Vec<(f64, f64)> = series
        .iter()
        .flat_map(|s| s.points.iter())
        .filter(|(x, y)| x.is_finite() && y.is_finite() && (!spec.log_x || *x > 0.0) && (!spec.log_y || *y > 0.0))
        .map(|&(x, y)| (transform(x, spec.log_x), transform(y, spec.log_y)))
        .collect();
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if !x0.is_finite() {
        x0 = 0.0;
        x1 = 1.0;
        y0 = 0.0;
        y1 = 1.0;
    }
    if x1 - x0 < 1e-12 {
        x1 = x0 + 1.0;
    }
    if y1 - y0 < 1e-12 {
        y1 = y0 + 1.0;
    }
    let pad_x = 0.04 * (x1 - x0);
    let pad_y = 0.06 * (y1 - y0);
    x0 -= pad_x;
    x1 += pad_x;
    y0 -= pad_y;
    y1 += pad_y;

    let sx = |x: f64| ML + (transform(x, spec.log_x) - x0) / (x1 - x0) * (W - ML - MR);
    let sy = |y: f64| H - MB - (transform(y, spec.log_y) - y0) / (y1 - y0) * (H - MT - MB);

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    let _ = writeln!(s, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{}</text>",
        (ML + W - MR) / 2.0,
        xml_escape(spec.title)
    );
    // frame
    let _ = writeln!(
        s,
        "<rect x=\"{ML}\" y=\"{MT}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#333\"/>",
        W - ML - MR,
        H - MT - MB
    );
    // ticks: decades when log, 5 even steps otherwise
    for (is_x, lo, hi, log) in [(true, x0, x1, spec.log_x), (false, y0, y1, spec.log_y)] {
        let ticks: Vec<f64> = if log {
            let (a, b) = (lo.floor() as i64, hi.ceil() as i64);
            (a..=b).map(|e| e as f64).filter(|e| *e >= lo && *e <= hi).collect()
        } else {
            (0..=5).map(|i| lo + (hi - lo) * i as f64 / 5.0).collect()
        };
        for t in ticks {
            let label = if log {
                format!("1e{}", t as i64)
            } else {
                format!("{t:.3}")
            };
            if is_x {
                let px = ML + (t - x0) / (x1 - x0) * (W - ML - MR);
                let _ = writeln!(
                    s,
                    "<line x1=\"{px}\" y1=\"{}\" x2=\"{px}\" y2=\"{}\" stroke=\"#999\"/>",
                    H - MB,
                    H - MB + 5.0
                );
                let _ = writeln!(
                    s,
                    "<text x=\"{px}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{label}</text>",
                    H - MB + 18.0
                );
            } else {
                let py = H - MB - (t - y0) / (y1 - y0) * (H - MT - MB);
                let _ = writeln!(
                    s,
                    "<line x1=\"{}\" y1=\"{py}\" x2=\"{ML}\" y2=\"{py}\" stroke=\"#999\"/>",
                    ML - 5.0
                );
                let _ = writeln!(
                    s,
                    "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{label}</text>",
                    ML - 8.0,
                    py + 4.0
                );
            }
        }
    }
    // axis labels
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">{}</text>",
        (ML + W - MR) / 2.0,
        H - 10.0,
        xml_escape(spec.x_label)
    );
    let _ = writeln!(
        s,
        "<text x=\"16\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">{}</text>",
        (MT + H - MB) / 2.0,
        (MT + H - MB) / 2.0,
        xml_escape(spec.y_label)
    );
    // series
    for (i, ser) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let path: Vec<String> = ser
            .points
            .iter()
            .filter(|(x, y)| x.is_finite() && y.is_finite() && (!spec.log_x || *x > 0.0) && (!spec.log_y || *y > 0.0))
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        if !ser.scatter && path.len() > 1 {
            let _ = writeln!(
                s,
                "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>",
                path.join(" ")
            );
        }
        for p in &path {
            let mut it = p.split(',');
            let (px, py) = (it.next().unwrap(), it.next().unwrap());
            let _ = writeln!(s, "<circle cx=\"{px}\" cy=\"{py}\" r=\"3\" fill=\"{color}\"/>");
        }
        // legend entry
        let ly = MT + 16.0 + 18.0 * i as f64;
        let lx = W - MR + 12.0;
        let _ = writeln!(
            s,
            "<line x1=\"{lx}\" y1=\"{ly}\" x2=\"{}\" y2=\"{ly}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            lx + 20.0
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\">{}</text>",
            lx + 26.0,
            ly + 4.0,
            xml_escape(&ser.name)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn xml_escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
