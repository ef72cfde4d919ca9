use crate::error::{invalid, Error, Result};

/// Composite Simpson on `values` sampled with uniform spacing `h`.
/// Needs an odd number of samples (at least 3).
pub fn simpson_uniform(values: &[f64], h: f64) -> Result<f64> {
    let n = values.len();
    if n < 3 || n.is_multiple_of(2) {
        return Err(invalid("samples", format!("Simpson needs an odd count >= 3, got {n}")));
    }
    let mut odd = 0.0;
    let mut even = 0.0;
    for (i, v) in values[1..n - 1].iter().enumerate() {
        if i % 2 == 0 {
            odd += v;
        } else {
            even += v;
        }
    }
    Ok(h / 3.0 * (values[0] + 4.0 * odd + 2.0 * even + values[n - 1]))
}

/// Trapezoid rule on arbitrary (increasing) nodes.
pub fn trapezoid(nodes: &[f64], values: &[f64]) -> Result<f64> {
    if nodes.len() != values.len() {
        return Err(Error::LengthMismatch { expected: nodes.len(), got: values.len() });
    }
    Ok(nodes.windows(2).zip(values.windows(2)).map(|(t, v)| 0.5 * (t[1] - t[0]) * (v[0] + v[1])).sum())
}

/// Integral of sampled data over `[nodes[0], nodes[last]]`.
///
/// Composite Simpson when the nodes are uniform and odd in number, otherwise
/// the trapezoid rule.
pub fn integrate(nodes: &[f64], values: &[f64]) -> Result<f64> {
    if nodes.len() != values.len() {
        return Err(Error::LengthMismatch { expected: nodes.len(), got: values.len() });
    }
    if nodes.len() < 2 {
        return Ok(0.0);
    }
    let n = nodes.len();
    let h = (nodes[n - 1] - nodes[0]) / (n - 1) as f64;
    let uniform = nodes.windows(2).all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h.abs());
    if uniform && n % 2 == 1 && n >= 3 {
        simpson_uniform(values, h)
    } else {
        trapezoid(nodes, values)
    }
}

/// Composite Simpson of a function on `[a, b]` with `n` (odd) nodes.
pub fn simpson_fn<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> Result<f64> {
    let n = if n.is_multiple_of(2) { n + 1 } else { n.max(3) };
    let h = (b - a) / (n - 1) as f64;
    let values: Vec<f64> = (0..n).map(|i| f(a + i as f64 * h)).collect();
    simpson_uniform(&values, h)
}

/// Simpson with node doubling until two successive estimates agree to
/// `rel_tol`, or `max_nodes` is reached.
pub fn simpson_converged<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    start_nodes: usize,
    rel_tol: f64,
    max_nodes: usize,
) -> Result<f64> {
    let mut n = if start_nodes.is_multiple_of(2) { start_nodes + 1 } else { start_nodes.max(3) };
    let mut prev = simpson_fn(&f, a, b, n)?;
    while n < max_nodes {
        n = 2 * n - 1;
        let next = simpson_fn(&f, a, b, n)?;
        if (next - prev).abs() <= rel_tol * next.abs() {
            return Ok(next);
        }
        prev = next;
    }
    Ok(prev)
}
