//! Small dense LP used for activation-pattern feasibility.
//!
//! Region enumeration needs one primitive: given halfspaces `a·x <= b` in a
//! low-dimensional space, the radius of the largest ball contained in their
//! intersection (the Chebyshev radius). Radius `> 0` means the pattern has a
//! full-dimensional feasible region; `None` means the system is infeasible.
//!
//! The solver is a two-phase tableau simplex with Bland's rule. Problem sizes
//! here are tiny (<= 4 variables, a few dozen constraints), so a dense
//! textbook implementation is the right tool.

/// Halfspace `normal · x <= offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace {
    pub normal: Vec<f64>,
    pub offset: f64,
}

impl Halfspace {
    pub fn new(normal: Vec<f64>, offset: f64) -> Self {
        Halfspace { normal, offset }
    }
}

const EPS: f64 = 1e-11;
const MAX_ITERS: usize = 20_000;

struct Tableau {
    rows: usize,
    cols: usize, // structural + slack columns, excluding rhs
    a: Vec<f64>, // rows x (cols + 1), last col = rhs
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, r: usize, c: usize) -> f64 {
        self.a[r * (self.cols + 1) + c]
    }
    fn rhs(&self, r: usize) -> f64 {
        self.at(r, self.cols)
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let w = self.cols + 1;
        let piv = self.at(pr, pc);
        for c in 0..w {
            self.a[pr * w + c] /= piv;
        }
        for r in 0..self.rows {
            if r == pr {
                continue;
            }
            let f = self.at(r, pc);
            if f != 0.0 {
                for c in 0..w {
                    let v = self.a[pr * w + c];
                    self.a[r * w + c] -= f * v;
                }
            }
        }
        self.basis[pr] = pc;
    }

    /// Maximize `obj · z` over the current feasible tableau. Returns the
    /// optimal objective value, or `None` if unbounded. `allowed` masks the
    /// columns eligible to enter the basis.
    fn maximize(&mut self, obj: &[f64], allowed: &[bool]) -> Option<f64> {
        for _ in 0..MAX_ITERS {
            // reduced costs: c_j - c_B B^{-1} A_j
            let mut entering = None;
            for j in 0..self.cols {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut red = obj[j];
                for r in 0..self.rows {
                    red -= obj[self.basis[r]] * self.at(r, j);
                }
                if red > EPS {
                    entering = Some(j); // Bland: first improving index
                    break;
                }
            }
            let Some(pc) = entering else {
                let mut val = 0.0;
                for r in 0..self.rows {
                    val += obj[self.basis[r]] * self.rhs(r);
                }
                return Some(val);
            };
            // ratio test, Bland tie-break on basis index
            let mut best: Option<(f64, usize, usize)> = None;
            for r in 0..self.rows {
                let coef = self.at(r, pc);
                if coef > EPS {
                    let ratio = self.rhs(r) / coef;
                    match best {
                        None => best = Some((ratio, self.basis[r], r)),
                        Some((bratio, bvar, _)) => {
                            if ratio < bratio - EPS
                                || (ratio < bratio + EPS && self.basis[r] < bvar)
                            {
                                best = Some((ratio, self.basis[r], r));
                            }
                        }
                    }
                }
            }
            let Some((_, _, pr)) = best else {
                return None; // unbounded
            };
            self.pivot(pr, pc);
        }
        None // iteration cap; treat as failure
    }
}

/// Chebyshev radius of the intersection of `halfspaces`.
///
/// Returns `None` when the intersection is empty, otherwise the largest `r`
/// such that some ball of radius `r` fits inside (0 for lower-dimensional but
/// nonempty intersections). Callers must include enough halfspaces (e.g. a
/// bounding box) to keep the radius finite.
pub fn chebyshev_radius(dim: usize, halfspaces: &[Halfspace]) -> Option<f64> {
    chebyshev_center(dim, halfspaces).map(|(r, _)| r)
}

/// Like [`chebyshev_radius`], additionally returning a center attaining it.
pub fn chebyshev_center(dim: usize, halfspaces: &[Halfspace]) -> Option<(f64, Vec<f64>)> {
    let m = halfspaces.len();
    assert!(m > 0);
    // variables: u_1..u_dim, v_1..v_dim (x = u - v), r, slack_1..slack_m,
    // artificial columns appended per-row as needed.
    let nx = 2 * dim + 1;
    let r_col = 2 * dim;
    let mut need_art = Vec::new();
    let width_noart = nx + m;
    let mut rows_data: Vec<Vec<f64>> = Vec::with_capacity(m);
    for (i, h) in halfspaces.iter().enumerate() {
        assert_eq!(h.normal.len(), dim);
        let norm = h.normal.iter().map(|v| v * v).sum::<f64>().sqrt();
        let mut row = vec![0.0; width_noart + 1];
        for j in 0..dim {
            row[j] = h.normal[j];
            row[dim + j] = -h.normal[j];
        }
        row[r_col] = norm;
        row[nx + i] = 1.0; // slack
        row[width_noart] = h.offset;
        if h.offset < 0.0 {
            for v in row.iter_mut() {
                *v = -*v;
            }
            need_art.push(i);
        }
        rows_data.push(row);
    }
    let n_art = need_art.len();
    let cols = width_noart + n_art;
    let mut a = vec![0.0; m * (cols + 1)];
    let mut basis = vec![0usize; m];
    for (i, row) in rows_data.iter().enumerate() {
        a[i * (cols + 1)..i * (cols + 1) + width_noart]
            .copy_from_slice(&row[..width_noart]);
        a[i * (cols + 1) + cols] = row[width_noart];
        basis[i] = nx + i; // slack basic by default
    }
    for (k, &i) in need_art.iter().enumerate() {
        a[i * (cols + 1) + width_noart + k] = 1.0;
        basis[i] = width_noart + k; // artificial basic (slack has coeff -1 now)
    }
    let mut tab = Tableau {
        rows: m,
        cols,
        a,
        basis,
    };

    if n_art > 0 {
        // phase 1: maximize -(sum of artificials)
        let mut obj = vec![0.0; cols];
        for k in 0..n_art {
            obj[width_noart + k] = -1.0;
        }
        let allowed = vec![true; cols];
        let val = tab.maximize(&obj, &allowed)?;
        if val < -1e-8 {
            return None; // infeasible
        }
        // drive any remaining artificials out of the basis if possible
        for r in 0..m {
            if tab.basis[r] >= width_noart {
                if let Some(pc) = (0..width_noart).find(|&c| tab.at(r, c).abs() > 1e-9) {
                    tab.pivot(r, pc);
                }
            }
        }
    }

    // phase 2: maximize r, artificials frozen out
    let mut obj = vec![0.0; cols];
    obj[r_col] = 1.0;
    let mut allowed = vec![true; cols];
    for k in 0..n_art {
        allowed[width_noart + k] = false;
    }
    let radius = match tab.maximize(&obj, &allowed) {
        Some(v) => v.max(0.0),
        None => f64::INFINITY, // radius unbounded
    };
    let mut z = vec![0.0; cols];
    for r in 0..m {
        z[tab.basis[r]] = tab.rhs(r);
    }
    let center: Vec<f64> = (0..dim).map(|j| z[j] - z[dim + j]).collect();
    Some((radius, center))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boxed(dim: usize, lo: f64, hi: f64) -> Vec<Halfspace> {
        let mut hs = Vec::new();
        for j in 0..dim {
            let mut n = vec![0.0; dim];
            n[j] = 1.0;
            hs.push(Halfspace::new(n.clone(), hi));
            n[j] = -1.0;
            hs.push(Halfspace::new(n, -lo));
        }
        hs
    }

    #[test]
    fn unit_square_radius() {
        let r = chebyshev_radius(2, &boxed(2, 0.0, 1.0)).unwrap();
        assert!((r - 0.5).abs() < 1e-9, "r = {r}");
    }

    #[test]
    fn shifted_interval() {
        let hs = boxed(1, -3.0, -1.0);
        let r = chebyshev_radius(1, &hs).unwrap();
        assert!((r - 1.0).abs() < 1e-9, "r = {r}");
    }

    #[test]
    fn halfplane_cut() {
        // unit square with x + y <= 0.5: triangle, inradius (chebyshev) known
        let mut hs = boxed(2, 0.0, 1.0);
        hs.push(Halfspace::new(vec![1.0, 1.0], 0.5));
        let r = chebyshev_radius(2, &hs).unwrap();
        // right isosceles triangle with legs 0.5: inradius (a + b - c) / 2
        let expect = (0.5 + 0.5 - 0.5f64.sqrt()) / 2.0;
        assert!((r - expect).abs() < 1e-9, "r = {r}");
    }

    #[test]
    fn infeasible_strip() {
        let mut hs = boxed(1, 0.0, 1.0);
        hs.push(Halfspace::new(vec![1.0], -0.5)); // x <= -0.5 contradicts x >= 0
        assert!(chebyshev_radius(1, &hs).is_none());
    }

    #[test]
    fn degenerate_point() {
        let mut hs = boxed(2, 0.0, 1.0);
        hs.push(Halfspace::new(vec![1.0, 0.0], 0.0)); // x <= 0 with x >= 0
        let r = chebyshev_radius(2, &hs).unwrap();
        assert!(r.abs() < 1e-9, "r = {r}");
    }
}
