use std::collections::VecDeque;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(u32),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(u32, u32),
    #[error("edge {0}-{1} leaves the vertex range 0..{2}")]
    OutOfRange(u32, u32, usize),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}

/// A finite simple graph on `0..vertex_count` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGraph {
    adjacency: Vec<Vec<u32>>,
}

impl FiniteGraph {
    pub fn empty(n: usize) -> Self {
        FiniteGraph {
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (u32, u32)>>(n: usize, edges: I) -> Result<Self, GraphError> {
        let mut g = FiniteGraph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        let n = self.vertex_count();
        if u as usize >= n || v as usize >= n {
            return Err(GraphError::OutOfRange(u, v, n));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let pos = match self.adjacency[u as usize].binary_search(&v) {
            Ok(_) => return Err(GraphError::ParallelEdge(u.min(v), u.max(v))),
            Err(p) => p,
        };
        self.adjacency[u as usize].insert(pos, v);
        let pos = self.adjacency[v as usize].binary_search(&u).unwrap_err();
        self.adjacency[v as usize].insert(pos, u);
        Ok(())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        FiniteGraph::from_edges(n, (0..n as u32).map(|i| (i, (i + 1) % n as u32))).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
        FiniteGraph::from_edges(n, edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u as u32).map(|&v| (u as u32, v)));
        }
        out
    }

    /// Connected component index of every vertex, components numbered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut comp = vec![u32::MAX; self.vertex_count()];
        let mut next = 0;
        for s in 0..self.vertex_count() {
            if comp[s] != u32::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if comp[w as usize] == u32::MAX {
                        comp[w as usize] = next;
                        queue.push_back(w as usize);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    pub fn disjoint_union(&self, other: &FiniteGraph) -> FiniteGraph {
        let shift = self.vertex_count() as u32;
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()),
        );
        FiniteGraph { adjacency }
    }

    /// `n m` followed by `m` lines `u v` with `u < v`.
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.vertex_count(), edges.len());
        for (u, v) in edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line: usize, msg: &str| GraphError::Format {
            line,
            msg: msg.to_string(),
        };
        let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing `n m` header"))?;
        let (n, m) = parse_pair(header).ok_or_else(|| bad(hline, "expected `n m`"))?;
        let mut g = FiniteGraph::empty(n as usize);
        let mut seen = 0;
        for (line, body) in lines.by_ref().take(m as usize) {
            let (u, v) = parse_pair(body).ok_or_else(|| bad(line, "expected `u v`"))?;
            if u >= v {
                return Err(bad(line, "edges must satisfy u < v"));
            }
            g.add_edge(u, v).map_err(|e| bad(line, &e.to_string()))?;
            seen += 1;
        }
        if seen != m {
            return Err(bad(hline, &format!("header promises {m} edges, found {seen}")));
        }
        if let Some((line, _)) = lines.next() {
            return Err(bad(line, "trailing content after the edge list"));
        }
        Ok(g)
    }
}

fn parse_pair(s: &str) -> Option<(u32, u32)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallels() {
        assert_eq!(FiniteGraph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            FiniteGraph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::ParallelEdge(0, 1))
        );
        assert!(matches!(
            FiniteGraph::from_edges(3, [(0, 3)]),
            Err(GraphError::OutOfRange(0, 3, 3))
        ));
    }

    #[test]
    fn graph_file_round_trip() {
        let g = FiniteGraph::cycle(5);
        let text = g.to_text();
        assert!(text.starts_with("5 5\n0 1\n0 4\n"));
        assert_eq!(FiniteGraph::parse(&text).unwrap(), g);
    }

    #[test]
    fn graph_file_errors() {
        assert!(FiniteGraph::parse("").is_err());
        assert!(FiniteGraph::parse("3 1\n1 0\n").is_err());
        assert!(FiniteGraph::parse("3 2\n0 1\n").is_err());
        assert!(FiniteGraph::parse("3 1\n0 1\n1 2\n").is_err());
        assert!(matches!(
            FiniteGraph::parse("3 2\n0 1\n0 1\n"),
            Err(GraphError::Format { line: 3, .. })
        ));
    }

    #[test]
    fn connectivity() {
        let g = FiniteGraph::cycle(4).disjoint_union(&FiniteGraph::cycle(3));
        assert!(!g.is_connected());
        assert_eq!(g.components(), [0, 0, 0, 0, 1, 1, 1]);
        assert!(FiniteGraph::cycle(6).is_connected());
    }
}
