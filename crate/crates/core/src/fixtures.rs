//! Grid discretizations used as candidate local models of `Z^2`.
//!
//! Vertex `(i, j)` is numbered `i + w·j`.

use crate::balls::{FiniteGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("degenerate {w}x{h} grid: {reason}")]
    Degenerate { w: usize, h: usize, reason: String },
}

fn degenerate(w: usize, h: usize, reason: impl ToString) -> FixtureError {
    FixtureError::Degenerate {
        w,
        h,
        reason: reason.to_string(),
    }
}

fn build(w: usize, h: usize, edges: Vec<(u32, u32)>) -> Result<FiniteGraph, FixtureError> {
    FiniteGraph::from_edges(w * h, edges).map_err(|e: GraphError| degenerate(w, h, e))
}

/// The `w × h` torus grid `Z_w × Z_h`.
pub fn torus(w: usize, h: usize) -> Result<FiniteGraph, FixtureError> {
    if w < 3 || h < 3 {
        return Err(degenerate(w, h, "both sides must be at least 3"));
    }
    let id = |i: usize, j: usize| (i % w + w * (j % h)) as u32;
    let mut edges = Vec::with_capacity(2 * w * h);
    for j in 0..h {
        for i in 0..w {
            edges.push((id(i, j), id(i + 1, j)));
            edges.push((id(i, j), id(i, j + 1)));
        }
    }
    build(w, h, edges)
}

/// Klein-bottle grid: columns wrap as on a torus, and the top row is glued
/// to the bottom row with the horizontal direction reversed,
/// `(i, h-1) – (w-1-i, 0)`.
pub fn klein(w: usize, h: usize) -> Result<FiniteGraph, FixtureError> {
    if w < 2 || !w.is_multiple_of(2) || h < 1 {
        return Err(degenerate(w, h, "width must be even and at least 2, height at least 1"));
    }
    let id = |i: usize, j: usize| (i + w * j) as u32;
    let mut edges = Vec::with_capacity(2 * w * h);
    for j in 0..h {
        for i in 0..w {
            edges.push((id(i, j), id((i + 1) % w, j)));
            if j + 1 < h {
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
    }
    for i in 0..w {
        edges.push((id(i, h - 1), id(w - 1 - i, 0)));
    }
    build(w, h, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_are_four_regular() {
        for g in [torus(8, 8).unwrap(), klein(8, 6).unwrap(), klein(10, 6).unwrap()] {
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 4));
            assert_eq!(g.edge_count(), 2 * g.vertex_count());
            assert!(g.is_connected());
        }
    }

    #[test]
    fn degenerate_sizes_rejected() {
        assert!(klein(2, 1).is_err());
        assert!(klein(7, 6).is_err());
        assert!(torus(2, 5).is_err());
    }

    #[test]
    fn seam_reverses_direction() {
        let g = klein(8, 6).unwrap();
        // (0, 5) is glued to (7, 0)
        assert!(g.has_edge(40, 7));
        assert!(!g.has_edge(40, 0));
    }
}
