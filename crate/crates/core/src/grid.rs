//! Piecewise-uniform time grids.
//!
//! A grid is a sequence of segments that tile `[0, t_f]`. Each segment is
//! sampled uniformly with an odd number of nodes, so composite Simpson applies
//! segment by segment. Neighbouring segments both carry the shared breakpoint:
//! one copy holds the left limit, the other the right limit. That is how jumps
//! in `omega^2` (bang-bang switches, cap joints) stay exact on the grid.

use std::ops::Range;

use crate::error::{invalid, Error, Result};
use crate::numerics::quadrature;

/// Default node count per protocol.
pub const DEFAULT_NODES: usize = 2001;

/// Every non-degenerate segment gets at least this many nodes.
pub const MIN_SEGMENT_NODES: usize = 201;

#[derive(Debug, Clone, PartialEq)]
pub struct GridSegment {
    pub start: f64,
    pub end: f64,
    pub range: Range<usize>,
}

impl GridSegment {
    pub fn len(&self) -> usize {
        self.range.len()
    }

    pub fn is_empty(&self) -> bool {
        self.range.is_empty()
    }

    pub fn step(&self) -> f64 {
        (self.end - self.start) / (self.len() - 1) as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    t_f: f64,
    nodes: Vec<f64>,
    segments: Vec<GridSegment>,
}

fn odd_at_least(n: usize, floor: usize) -> usize {
    let n = n.max(floor).max(3);
    if n.is_multiple_of(2) {
        n + 1
    } else {
        n
    }
}

impl TimeGrid {
    /// Single segment with `n` nodes (`n` odd, at least 3).
    pub fn uniform(t_f: f64, n: usize) -> Result<Self> {
        Self::piecewise(&[0.0, t_f], n)
    }

    /// Segments between consecutive `breaks` (which must start at 0 and be
    /// increasing). Zero-length segments are dropped. Nodes are shared out in
    /// proportion to segment length, with a floor of [`MIN_SEGMENT_NODES`]
    /// whenever there is more than one segment.
    pub fn piecewise(breaks: &[f64], n: usize) -> Result<Self> {
        if breaks.len() < 2 {
            return Err(invalid("breaks", "need at least two breakpoints"));
        }
        if breaks[0] != 0.0 {
            return Err(invalid("breaks", "grid must start at t = 0"));
        }
        let t_f = *breaks.last().unwrap();
        if !(t_f.is_finite() && t_f > 0.0) {
            return Err(invalid("t_f", format!("must be positive and finite, got {t_f}")));
        }
        if n < 3 || n.is_multiple_of(2) {
            return Err(invalid("nodes", format!("need an odd count >= 3, got {n}")));
        }
        if breaks.windows(2).any(|w| !(w[1] >= w[0])) {
            return Err(invalid("breaks", "breakpoints must be non-decreasing"));
        }
        let spans: Vec<(f64, f64)> = breaks.windows(2).map(|w| (w[0], w[1])).filter(|(a, b)| b > a).collect();
        let floor = if spans.len() > 1 { MIN_SEGMENT_NODES } else { 3 };

        let mut nodes = Vec::new();
        let mut segments = Vec::with_capacity(spans.len());
        for &(start, end) in &spans {
            let share = if spans.len() == 1 {
                n
            } else {
                ((n - 1) as f64 * (end - start) / t_f).round() as usize + 1
            };
            let count = odd_at_least(share, floor);
            let offset = nodes.len();
            let h = (end - start) / (count - 1) as f64;
            nodes.extend((0..count).map(|i| if i + 1 == count { end } else { start + i as f64 * h }));
            segments.push(GridSegment { start, end, range: offset..offset + count });
        }
        Ok(Self { t_f, nodes, segments })
    }

    pub fn t_f(&self) -> f64 {
        self.t_f
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn segments(&self) -> &[GridSegment] {
        &self.segments
    }

    /// Interior breakpoints (segment joins), excluding 0 and `t_f`.
    pub fn breakpoints(&self) -> Vec<f64> {
        self.segments.iter().skip(1).map(|s| s.start).collect()
    }

    /// `(segment index, node index)` for every node.
    pub fn iter_indexed(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.segments.iter().enumerate().flat_map(|(k, s)| s.range.clone().map(move |i| (k, i)))
    }

    /// Integral over `[0, t_f]` of samples laid out on this grid.
    pub fn integrate(&self, values: &[f64]) -> Result<f64> {
        self.check_len(values.len())?;
        self.segments.iter().map(|s| quadrature::simpson_uniform(&values[s.range.clone()], s.step())).sum()
    }

    /// Time average `(1/t_f) * integral`.
    pub fn average(&self, values: &[f64]) -> Result<f64> {
        Ok(self.integrate(values)? / self.t_f)
    }

    pub fn check_len(&self, got: usize) -> Result<()> {
        if got == self.nodes.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.nodes.len(), got })
        }
    }

    /// Per-segment derivative by second-order central differences, one-sided
    /// (second order) at segment ends.
    pub fn differentiate(&self, values: &[f64]) -> Result<Vec<f64>> {
        self.check_len(values.len())?;
        let mut out = vec![0.0; values.len()];
        for seg in &self.segments {
            let v = &values[seg.range.clone()];
            let h = seg.step();
            let m = v.len();
            let d = &mut out[seg.range.clone()];
            d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
            d[m - 1] = (3.0 * v[m - 1] - 4.0 * v[m - 2] + v[m - 3]) / (2.0 * h);
            for i in 1..m - 1 {
                d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_grid_endpoints() {
        let g = TimeGrid::uniform(2.5, 11).unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g.nodes()[0], 0.0);
        assert_eq!(*g.nodes().last().unwrap(), 2.5);
        assert!(g.nodes().windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn piecewise_drops_empty_segments_and_shares_breaks() {
        let g = TimeGrid::piecewise(&[0.0, 0.0, 1.0, 3.0], 2001).unwrap();
        assert_eq!(g.segments().len(), 2);
        let s0 = &g.segments()[0];
        let s1 = &g.segments()[1];
        assert_eq!(g.nodes()[s0.range.end - 1], 1.0);
        assert_eq!(g.nodes()[s1.range.start], 1.0);
        assert!(s0.len() % 2 == 1 && s1.len() % 2 == 1);
        assert!(s0.len() >= MIN_SEGMENT_NODES);
        assert_eq!(g.breakpoints(), vec![1.0]);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(TimeGrid::uniform(1.0, 10).is_err());
        assert!(TimeGrid::uniform(0.0, 11).is_err());
        assert!(TimeGrid::piecewise(&[0.0, 2.0, 1.0], 11).is_err());
        assert!(TimeGrid::piecewise(&[0.5, 1.0], 11).is_err());
    }

    #[test]
    fn integrates_piecewise_polynomial() {
        let g = TimeGrid::piecewise(&[0.0, 0.3, 1.0], 401).unwrap();
        let v: Vec<f64> = g.nodes().iter().map(|t| t * t * t).collect();
        assert!((g.integrate(&v).unwrap() - 0.25).abs() < 1e-14);
        assert!(matches!(g.integrate(&v[1..]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn differentiates_quadratic_exactly() {
        let g = TimeGrid::uniform(2.0, 21).unwrap();
        let v: Vec<f64> = g.nodes().iter().map(|t| 3.0 * t * t - t).collect();
        let d = g.differentiate(&v).unwrap();
        for (t, dv) in g.nodes().iter().zip(&d) {
            assert!((dv - (6.0 * t - 1.0)).abs() < 1e-11);
        }
    }
}
