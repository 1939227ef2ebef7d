//! Checkerboard graphs of alternating rational diagrams.
//!
//! The shaded regions of `R(n1, ..., nN)` with all `n_i > 0` form a hub (the
//! region shared by every odd twist) and a spine. An odd twist contributes a
//! cluster of `n_i` parallel edges between the current spine end and the hub;
//! an even twist extends the spine by a path of `n_i` edges. With an even
//! number of twists the spine end is finally merged into the hub.

use crate::error::Result;
use crate::twist::TwistVector;

pub const HUB: usize = 0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckerboardGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl CheckerboardGraph {
    /// Panics on a self-loop or an endpoint outside `0..vertex_count`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        for &(u, v) in &edges {
            assert!(u != v, "self-loop at {u}");
            assert!(u < vertex_count && v < vertex_count, "edge ({u}, {v}) out of range");
        }
        Self { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Parallel edges appear once per crossing.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![HUB];
        seen[HUB] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn checkerboard_graph(tw: &TwistVector) -> Result<CheckerboardGraph> {
    tw.require_positive()?;
    let last = tw.twist_count();
    let mut vertex_count = 2;
    let mut spine = 1;
    let mut edges = Vec::new();
    for (k, &n) in tw.iter().enumerate() {
        let twist = k + 1;
        let n = n as usize;
        if twist % 2 == 1 {
            edges.extend(std::iter::repeat_n((spine, HUB), n));
        } else {
            for step in 0..n {
                let closing = twist == last && step + 1 == n;
                let target = if closing {
                    HUB
                } else {
                    vertex_count += 1;
                    vertex_count - 1
                };
                edges.push((spine, target));
                spine = target;
            }
        }
    }
    Ok(CheckerboardGraph::new(vertex_count, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn tw(v: &[i64]) -> TwistVector {
        TwistVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trefoil_graph() {
        let g = checkerboard_graph(&tw(&[3])).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(1, 0), (1, 0), (1, 0)]);
    }

    #[test]
    fn figure_eight_graph() {
        let g = checkerboard_graph(&tw(&[2, 2])).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(1, 0), (1, 0), (1, 2), (2, 0)]);
    }

    #[test]
    fn three_twists() {
        let g = checkerboard_graph(&tw(&[2, 2, 2])).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges().len(), 6);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_non_positive() {
        assert_eq!(
            checkerboard_graph(&tw(&[2, -1])),
            Err(Error::NonPositiveTwist { index: 2, value: -1 })
        );
    }

    #[test]
    fn always_connected_and_loop_free() {
        for v in crate::twist::all_vectors(&[1, 2, 3], 5) {
            let g = checkerboard_graph(&v).unwrap();
            assert!(g.is_connected(), "{v}");
            assert_eq!(g.edges().len() as u64, v.crossing_count());
            assert!(g.edges().iter().all(|(u, w)| u != w));
        }
    }

    #[test]
    fn disconnected_detection() {
        assert!(!CheckerboardGraph::new(3, vec![(0, 1)]).is_connected());
        assert!(CheckerboardGraph::new(1, vec![]).is_connected());
    }
}
