//! Balls `B(v, r)`: rooted induced subgraphs within distance `r` of a root,
//! either inside a Cayley graph or inside a finite graph.

mod cayley;
mod graph;

pub use cayley::{cayley_ball, cayley_ball_with_cap, distance, distance_with_cap, BallError, DEFAULT_MAX_VERTICES};
pub use graph::{FiniteGraph, GraphError};

use crate::words::{Alphabet, Word};
use std::collections::VecDeque;
use std::fmt::Write as _;

/// A finite rooted graph with its BFS distance structure.
///
/// Vertex 0 is the root and vertices are numbered in BFS order, so the
/// vertices within distance `k` always form a prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedBall {
    radius: usize,
    dist: Vec<u32>,
    adjacency: Vec<Vec<u32>>,
    labels: Option<Vec<Word>>,
    sources: Option<Vec<u32>>,
}

impl RootedBall {
    pub(crate) fn from_parts(
        radius: usize,
        dist: Vec<u32>,
        mut adjacency: Vec<Vec<u32>>,
        labels: Option<Vec<Word>>,
        sources: Option<Vec<u32>>,
    ) -> Self {
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        let ball = RootedBall {
            radius,
            dist,
            adjacency,
            labels,
            sources,
        };
        debug_assert!(ball.check_invariants().is_ok(), "{:?}", ball.check_invariants());
        ball
    }

    /// Builds a ball from an arbitrary connected rooted graph, taking the
    /// eccentricity of the root as radius.
    pub fn from_rooted_graph(graph: &FiniteGraph, root: usize) -> Self {
        finite_ball(graph, root, graph.vertex_count())
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn dist(&self) -> &[u32] {
        &self.dist
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    /// Canonical normal forms of the vertices (Cayley balls only).
    pub fn labels(&self) -> Option<&[Word]> {
        self.labels.as_deref()
    }

    /// Vertex of the host finite graph behind each ball vertex (finite balls only).
    pub fn sources(&self) -> Option<&[u32]> {
        self.sources.as_deref()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// Number of vertices at each distance `0..=radius`.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.radius + 1];
        for &d in &self.dist {
            sizes[d as usize] += 1;
        }
        // finite balls may stop short of the nominal radius
        while sizes.len() > 1 && *sizes.last().unwrap() == 0 {
            sizes.pop();
        }
        sizes
    }

    /// Number of vertices within distance `k` of the root.
    pub fn prefix_len(&self, k: usize) -> usize {
        self.dist.partition_point(|&d| d as usize <= k)
    }

    /// The ball of radius `k ≤ radius` around the same root.
    pub fn restrict(&self, k: usize) -> RootedBall {
        let k = k.min(self.radius);
        let len = self.prefix_len(k);
        let adjacency = self.adjacency[..len]
            .iter()
            .map(|nbrs| nbrs.iter().copied().filter(|&w| (w as usize) < len).collect())
            .collect();
        RootedBall {
            radius: k,
            dist: self.dist[..len].to_vec(),
            adjacency,
            labels: self.labels.as_ref().map(|l| l[..len].to_vec()),
            sources: self.sources.as_ref().map(|s| s[..len].to_vec()),
        }
    }

    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.vertex_count();
        if n == 0 || self.dist[0] != 0 {
            return Err("root must exist at distance 0".into());
        }
        if self.adjacency.len() != n {
            return Err("adjacency length mismatch".into());
        }
        if self.dist.windows(2).any(|p| p[0] > p[1]) {
            return Err("vertices not in BFS order".into());
        }
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            let d = self.dist[u];
            if d as usize > self.radius {
                return Err(format!("vertex {u} beyond radius"));
            }
            if u > 0 && d == 0 {
                return Err(format!("second root {u}"));
            }
            let mut parent = d == 0;
            for &w in nbrs {
                let w = w as usize;
                if w >= n || w == u {
                    return Err(format!("bad neighbor {w} of {u}"));
                }
                if !self.adjacency[w].contains(&(u as u32)) {
                    return Err(format!("asymmetric edge {u}-{w}"));
                }
                if self.dist[w].abs_diff(d) > 1 {
                    return Err(format!("edge {u}-{w} skips a layer"));
                }
                parent |= self.dist[w] + 1 == d;
            }
            if !parent {
                return Err(format!("vertex {u} has no parent"));
            }
        }
        if let Some(labels) = &self.labels {
            let mut sorted: Vec<&Word> = labels.iter().collect();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err("labels not distinct".into());
            }
        }
        Ok(())
    }

    /// The graph file format followed by `root` and `dist` lines.
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.vertex_count(), edges.len());
        for (u, v) in edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out.push_str("root 0\ndist");
        for d in &self.dist {
            write!(out, " {d}").unwrap();
        }
        out.push('\n');
        out
    }

    pub fn render_labels(&self, alphabet: &Alphabet) -> Option<Vec<String>> {
        self.labels
            .as_ref()
            .map(|l| l.iter().map(|w| alphabet.render(w)).collect())
    }
}

/// Induced rooted subgraph of `graph` on the vertices within distance `r`
/// of `root`, numbered in BFS order (neighbors visited in increasing order).
///
/// # Panics
/// If `root` is not a vertex of `graph`.
pub fn finite_ball(graph: &FiniteGraph, root: usize, r: usize) -> RootedBall {
    assert!(root < graph.vertex_count(), "root {root} out of range");
    let mut local = vec![u32::MAX; graph.vertex_count()];
    let mut order = vec![root as u32];
    let mut dist = vec![0u32];
    local[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let du = dist[local[u] as usize];
        if du as usize == r {
            continue;
        }
        for &w in graph.neighbors(u) {
            let w = w as usize;
            if local[w] == u32::MAX {
                local[w] = order.len() as u32;
                order.push(w as u32);
                dist.push(du + 1);
                queue.push_back(w);
            }
        }
    }
    let adjacency = order
        .iter()
        .map(|&u| {
            graph
                .neighbors(u as usize)
                .iter()
                .filter_map(|&w| match local[w as usize] {
                    u32::MAX => None,
                    l => Some(l),
                })
                .collect()
        })
        .collect();
    let radius = if r >= graph.vertex_count() {
        *dist.last().unwrap() as usize
    } else {
        r
    };
    RootedBall::from_parts(radius, dist, adjacency, None, Some(order))
}
