//! Classical fixed-step Runge–Kutta for small fixed-size systems.

use crate::error::{Error, Result};

pub type State<const N: usize> = [f64; N];

fn axpy<const N: usize>(y: &State<N>, h: f64, k: &State<N>) -> State<N> {
    let mut out = *y;
    for (o, ki) in out.iter_mut().zip(k) {
        *o += h * ki;
    }
    out
}

/// One classical fourth-order step from `(t, y)` to `t + h`.
pub fn rk4_step<const N: usize, F>(rhs: &mut F, t: f64, y: &State<N>, h: f64) -> State<N>
where
    F: FnMut(f64, &State<N>) -> State<N>,
{
    let k1 = rhs(t, y);
    let k2 = rhs(t + 0.5 * h, &axpy(y, 0.5 * h, &k1));
    let k3 = rhs(t + 0.5 * h, &axpy(y, 0.5 * h, &k2));
    let k4 = rhs(t + h, &axpy(y, h, &k3));
    let mut out = *y;
    for i in 0..N {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// Trajectory on the given nodes (one RK4 step per node interval).
/// Aborts with [`Error::NonFinite`] at the first non-finite state.
pub fn solve<const N: usize, F>(mut rhs: F, y0: State<N>, nodes: &[f64]) -> Result<Vec<State<N>>>
where
    F: FnMut(f64, &State<N>) -> State<N>,
{
    let mut out = Vec::with_capacity(nodes.len());
    if nodes.is_empty() {
        return Ok(out);
    }
    out.push(y0);
    let mut y = y0;
    for w in nodes.windows(2) {
        y = rk4_step(&mut rhs, w[0], &y, w[1] - w[0]);
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite { t: w[1] });
        }
        out.push(y);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Refined<const N: usize> {
    pub nodes: Vec<f64>,
    pub states: Vec<State<N>>,
    /// Max difference against the previous (half-resolution) run, on shared nodes.
    pub change: f64,
    pub converged: bool,
}

/// Uniform-grid solve on `[t0, t1]`, doubling the node count until two
/// successive trajectories differ by less than `tol` (max norm on the coarse
/// nodes) or `max_nodes` is exceeded.
pub fn solve_refined<const N: usize, F>(
    mut rhs: F,
    y0: State<N>,
    t0: f64,
    t1: f64,
    start_nodes: usize,
    tol: f64,
    max_nodes: usize,
) -> Result<Refined<N>>
where
    F: FnMut(f64, &State<N>) -> State<N>,
{
    let linspace = |n: usize| -> Vec<f64> {
        (0..n).map(|i| if i + 1 == n { t1 } else { t0 + (t1 - t0) * i as f64 / (n - 1) as f64 }).collect()
    };
    let mut n = start_nodes.max(3);
    let mut nodes = linspace(n);
    let mut states = solve(&mut rhs, y0, &nodes)?;
    loop {
        let n2 = 2 * n - 1;
        if n2 > max_nodes {
            return Ok(Refined { nodes, states, change: f64::INFINITY, converged: false });
        }
        let nodes2 = linspace(n2);
        let states2 = solve(&mut rhs, y0, &nodes2)?;
        let change = states
            .iter()
            .zip(states2.iter().step_by(2))
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
            .fold(0.0, f64::max);
        n = n2;
        nodes = nodes2;
        states = states2;
        if change < tol {
            return Ok(Refined { nodes, states, change, converged: true });
        }
    }
}
