//! Golden-section search and a two-dimensional Nelder–Mead simplex.

/// Iteration cap shared by both searches.
pub const MAX_ITERATIONS: usize = 10_000;

/// Default relative size at which the interval or simplex counts as converged.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum<X> {
    pub x: X,
    pub f: f64,
    pub iterations: usize,
    /// False when the iteration cap was hit; `x` is then the best point seen.
    pub converged: bool,
}

/// Golden-section search for a local minimum of `f` on `[a, b]`.
pub fn golden_section<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> Minimum<f64> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = if a <= b { (a, b) } else { (b, a) };
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        if (b - a).abs() <= tol * (c.abs() + d.abs()).max(1e-12) {
            converged = true;
            break;
        }
        iterations += 1;
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let (x, fx) = if fc < fd { (c, fc) } else { (d, fd) };
    Minimum { x, f: fx, iterations, converged }
}

/// Nelder–Mead in two dimensions with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
///
/// `f` may return `+inf` to reject a point. Convergence is declared when the
/// simplex diameter falls below `tol * (1 + |best|)` and the spread of values
/// below `tol * (1 + |f_best|)`.
pub fn nelder_mead<F: FnMut([f64; 2]) -> f64>(
    mut f: F,
    start: [f64; 2],
    step: [f64; 2],
    tol: f64,
) -> Minimum<[f64; 2]> {
    let mut pts = [start, [start[0] + step[0], start[1]], [start[0], start[1] + step[1]]];
    let mut vals = [f(pts[0]), f(pts[1]), f(pts[2])];
    let mut iterations = 0;
    let mut converged = false;

    let order = |pts: &mut [[f64; 2]; 3], vals: &mut [f64; 3]| {
        let mut idx = [0usize, 1, 2];
        // ties broken lexicographically on coordinates
        idx.sort_by(|&i, &j| {
            vals[i]
                .total_cmp(&vals[j])
                .then(pts[i][0].total_cmp(&pts[j][0]))
                .then(pts[i][1].total_cmp(&pts[j][1]))
        });
        let p = *pts;
        let v = *vals;
        for (k, &i) in idx.iter().enumerate() {
            pts[k] = p[i];
            vals[k] = v[i];
        }
    };

    while iterations < MAX_ITERATIONS {
        order(&mut pts, &mut vals);
        let diam = pts
            .iter()
            .skip(1)
            .map(|p| ((p[0] - pts[0][0]).powi(2) + (p[1] - pts[0][1]).powi(2)).sqrt())
            .fold(0.0, f64::max);
        let scale = 1.0 + pts[0][0].abs().max(pts[0][1].abs());
        let spread = (vals[2] - vals[0]).abs();
        if diam <= tol * scale && (spread <= tol * (1.0 + vals[0].abs()) || !vals[2].is_finite()) {
            converged = true;
            break;
        }
        iterations += 1;

        let centroid = [(pts[0][0] + pts[1][0]) / 2.0, (pts[0][1] + pts[1][1]) / 2.0];
        let along = |t: f64| {
            [centroid[0] + t * (pts[2][0] - centroid[0]), centroid[1] + t * (pts[2][1] - centroid[1])]
        };
        let xr = along(-1.0);
        let fr = f(xr);
        if fr < vals[0] {
            let xe = along(-2.0);
            let fe = f(xe);
            if fe < fr {
                pts[2] = xe;
                vals[2] = fe;
            } else {
                pts[2] = xr;
                vals[2] = fr;
            }
            continue;
        }
        if fr < vals[1] {
            pts[2] = xr;
            vals[2] = fr;
            continue;
        }
        let (xc, fc) = if fr < vals[2] {
            let xc = along(-0.5);
            (xc, f(xc))
        } else {
            let xc = along(0.5);
            (xc, f(xc))
        };
        if fc < vals[2].min(fr) {
            pts[2] = xc;
            vals[2] = fc;
            continue;
        }
        for k in 1..3 {
            pts[k] = [pts[0][0] + 0.5 * (pts[k][0] - pts[0][0]), pts[0][1] + 0.5 * (pts[k][1] - pts[0][1])];
            vals[k] = f(pts[k]);
        }
    }
    order(&mut pts, &mut vals);
    Minimum { x: pts[0], f: vals[0], iterations, converged }
}
