//! Rooted isomorphisms between balls.
//!
//! Initial colours are BFS distances, so the root is a singleton cell from
//! the start. Colour refinement assigns each vertex the rank of
//! `(colour, sorted neighbour colours)` among all signatures; ranks are
//! isomorphism invariant, so the same procedure run on a disjoint union of
//! two balls yields comparable colours. Backtracking individualizes the
//! smallest vertex of the first non-singleton cell (cells ordered by
//! colour, which orders by distance first) against every candidate of the
//! same cell on the other side.

use crate::balls::RootedBall;
use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use std::cmp::Ordering;

/// A root-preserving isomorphism, `mapping[v]` being the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RootedIso {
    mapping: Vec<u32>,
}

impl RootedIso {
    pub fn identity(n: usize) -> Self {
        RootedIso {
            mapping: (0..n as u32).collect(),
        }
    }

    pub fn from_mapping(mapping: Vec<u32>) -> Self {
        RootedIso { mapping }
    }

    pub fn mapping(&self) -> &[u32] {
        &self.mapping
    }

    pub fn image(&self, v: usize) -> usize {
        self.mapping[v] as usize
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    /// `self` then `other`.
    pub fn then(&self, other: &RootedIso) -> RootedIso {
        RootedIso {
            mapping: self.mapping.iter().map(|&v| other.mapping[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> RootedIso {
        let mut inv = vec![0u32; self.mapping.len()];
        for (v, &w) in self.mapping.iter().enumerate() {
            inv[w as usize] = v as u32;
        }
        RootedIso { mapping: inv }
    }

    /// Checks that this is a rooted isomorphism `from → to` preserving
    /// adjacency, non-adjacency and distance from the root.
    pub fn is_valid(&self, from: &RootedBall, to: &RootedBall) -> bool {
        let n = from.vertex_count();
        if n != to.vertex_count() || self.mapping.len() != n || from.edge_count() != to.edge_count() {
            return false;
        }
        if n > 0 && self.mapping[0] != 0 {
            return false;
        }
        let mut hit = vec![false; n];
        for &w in &self.mapping {
            if w as usize >= n || std::mem::replace(&mut hit[w as usize], true) {
                return false;
            }
        }
        (0..n).all(|u| {
            from.dist()[u] == to.dist()[self.image(u)]
                && from
                    .neighbors(u)
                    .iter()
                    .all(|&v| to.has_edge(self.image(u), self.image(v as usize)))
        })
    }

    /// Whether every vertex within distance `radius` of the root is fixed.
    pub fn restricts_trivially(&self, ball: &RootedBall, radius: usize) -> bool {
        (0..ball.prefix_len(radius)).all(|v| self.mapping[v] as usize == v)
    }

    /// First vertex within `radius` on which two isomorphisms disagree.
    pub fn first_disagreement(&self, other: &RootedIso, ball: &RootedBall, radius: usize) -> Option<usize> {
        (0..ball.prefix_len(radius)).find(|&v| self.mapping[v] != other.mapping[v])
    }
}

/// Free-function form of [`RootedIso::restricts_trivially`].
pub fn restricts_trivially(phi: &RootedIso, ball: &RootedBall, radius: usize) -> bool {
    phi.restricts_trivially(ball, radius)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsoError {
    #[error("more than {0} rooted isomorphisms")]
    TooMany(usize),
}

/// Adjacency in compressed form, possibly of a disjoint union.
#[derive(Clone)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Csr {
    fn new(balls: &[&RootedBall]) -> Self {
        let mut offsets = vec![0];
        let mut targets = Vec::new();
        let mut shift = 0u32;
        for b in balls {
            for nbrs in b.adjacency() {
                targets.extend(nbrs.iter().map(|&w| w + shift));
                offsets.push(targets.len());
            }
            shift += b.vertex_count() as u32;
        }
        Csr { offsets, targets }
    }

    fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// Refines `colors` to the coarsest equitable partition below it and
/// returns the number of colours. Colours come out as dense ranks.
fn refine(graph: &Csr, colors: &mut Vec<u32>) -> usize {
    let n = graph.len();
    let mut order: Vec<u32> = (0..n as u32).collect();
    let mut sigs = vec![0u32; graph.targets.len()];
    let mut count = usize::MAX;
    loop {
        for v in 0..n {
            let s = &mut sigs[graph.offsets[v]..graph.offsets[v + 1]];
            for (slot, &w) in s.iter_mut().zip(graph.neighbors(v)) {
                *slot = colors[w as usize];
            }
            s.sort_unstable();
        }
        let sig = |v: u32| {
            let v = v as usize;
            (colors[v], &sigs[graph.offsets[v]..graph.offsets[v + 1]])
        };
        order.sort_unstable_by(|&a, &b| sig(a).cmp(&sig(b)));
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && sig(order[i]) != sig(order[i - 1]) {
                rank += 1;
            }
            next[order[i] as usize] = rank;
        }
        let new_count = if n == 0 { 0 } else { rank as usize + 1 };
        *colors = next;
        if new_count == count {
            return count;
        }
        count = new_count;
    }
}

/// Gives `chosen` vertices of colour `cell` a colour of their own, just
/// before the rest of the cell.
fn individualize(colors: &[u32], cell: u32, chosen: &[usize]) -> Vec<u32> {
    let mut out: Vec<u32> = colors.iter().map(|&c| 2 * c + u32::from(c == cell)).collect();
    for &v in chosen {
        out[v] -= 1;
    }
    out
}

fn initial_colors(balls: &[&RootedBall]) -> Vec<u32> {
    balls.iter().flat_map(|b| b.dist().iter().copied()).collect()
}

struct IsoSearch<'a> {
    from: &'a RootedBall,
    to: &'a RootedBall,
    graph: Csr,
    n: usize,
    limit: usize,
    first_only: bool,
    found: Vec<RootedIso>,
    overflow: bool,
}

impl IsoSearch<'_> {
    fn run(&mut self, mut colors: Vec<u32>) {
        if self.overflow || (self.first_only && !self.found.is_empty()) {
            return;
        }
        let k = refine(&self.graph, &mut colors);
        let n = self.n;
        let mut counts = vec![[0usize; 2]; k];
        for (v, &c) in colors.iter().enumerate() {
            counts[c as usize][usize::from(v >= n)] += 1;
        }
        if counts.iter().any(|c| c[0] != c[1]) {
            return;
        }
        if k == n {
            let mut by_color = vec![0u32; k];
            for v in n..2 * n {
                by_color[colors[v] as usize] = (v - n) as u32;
            }
            let phi = RootedIso::from_mapping((0..n).map(|v| by_color[colors[v] as usize]).collect());
            if phi.is_valid(self.from, self.to) {
                if self.found.len() == self.limit {
                    self.overflow = true;
                    return;
                }
                self.found.push(phi);
            }
            return;
        }
        let cell = (0..k).find(|&c| counts[c][0] > 1).unwrap() as u32;
        let x = (0..n).find(|&v| colors[v] == cell).unwrap();
        let candidates: Vec<usize> = (n..2 * n).filter(|&v| colors[v] == cell).collect();
        for y in candidates {
            self.run(individualize(&colors, cell, &[x, y]));
            if self.overflow || (self.first_only && !self.found.is_empty()) {
                return;
            }
        }
    }
}

fn quick_reject(b1: &RootedBall, b2: &RootedBall) -> bool {
    b1.vertex_count() != b2.vertex_count()
        || b1.edge_count() != b2.edge_count()
        || b1.sphere_sizes() != b2.sphere_sizes()
}

fn search(b1: &RootedBall, b2: &RootedBall, limit: usize, first_only: bool) -> Result<Vec<RootedIso>, IsoError> {
    if quick_reject(b1, b2) {
        return Ok(Vec::new());
    }
    let mut s = IsoSearch {
        from: b1,
        to: b2,
        graph: Csr::new(&[b1, b2]),
        n: b1.vertex_count(),
        limit,
        first_only,
        found: Vec::new(),
        overflow: false,
    };
    s.run(initial_colors(&[b1, b2]));
    if s.overflow {
        return Err(IsoError::TooMany(limit));
    }
    Ok(s.found)
}

/// All rooted isomorphisms `b1 → b2`, in search order.
pub fn rooted_isomorphisms(b1: &RootedBall, b2: &RootedBall) -> Vec<RootedIso> {
    search(b1, b2, usize::MAX, false).unwrap()
}

/// As [`rooted_isomorphisms`], failing once more than `limit` are found.
pub fn rooted_isomorphisms_capped(b1: &RootedBall, b2: &RootedBall, limit: usize) -> Result<Vec<RootedIso>, IsoError> {
    search(b1, b2, limit, false)
}

/// Existence-only variant: the first isomorphism found, if any.
pub fn find_rooted_isomorphism(b1: &RootedBall, b2: &RootedBall) -> Option<RootedIso> {
    search(b1, b2, usize::MAX, true).unwrap().into_iter().next()
}

pub fn rooted_automorphisms(b: &RootedBall) -> Vec<RootedIso> {
    rooted_isomorphisms(b, b)
}

/// The rooted automorphism group of a ball, by its order and a
/// generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub order: BigUint,
    pub generators: Vec<RootedIso>,
}

impl AutomorphismGroup {
    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Smallest vertex below `prefix` moved by some automorphism, with a
    /// generator moving it.
    pub fn moved_below(&self, prefix: usize) -> Option<(usize, &RootedIso)> {
        self.generators
            .iter()
            .filter_map(|g| (0..prefix).find(|&v| g.image(v) != v).map(|v| (v, g)))
            .min_by_key(|&(v, _)| v)
    }
}

struct ChainSearch<'a> {
    ball: &'a RootedBall,
    single: Csr,
    joint: Csr,
    generators: Vec<RootedIso>,
}

impl ChainSearch<'_> {
    /// Order of the pointwise stabilizer encoded by `colors`. Generators of
    /// every stabilizer in the chain are appended to `self.generators`.
    fn order(&mut self, mut colors: Vec<u32>, path: &mut Vec<usize>) -> BigUint {
        let n = self.ball.vertex_count();
        let k = refine(&self.single, &mut colors);
        if k == n {
            return BigUint::one();
        }
        let mut sizes = vec![0usize; k];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let cell = sizes.iter().position(|&c| c > 1).unwrap() as u32;
        let x = (0..n).find(|&v| colors[v] == cell).unwrap();
        path.push(x);
        let below = self.order(individualize(&colors, cell, &[x]), path);
        path.pop();

        let mut orbit = self.orbit_of(x, path);
        for y in (0..n).filter(|&y| colors[y] == cell) {
            if orbit[y] {
                continue;
            }
            let mut joint = colors.clone();
            joint.extend_from_slice(&colors);
            let mut s = IsoSearch {
                from: self.ball,
                to: self.ball,
                graph: self.joint.clone(),
                n,
                limit: usize::MAX,
                first_only: true,
                found: Vec::new(),
                overflow: false,
            };
            s.run(individualize(&joint, cell, &[x, y + n]));
            if let Some(phi) = s.found.pop() {
                self.generators.push(phi);
                orbit = self.orbit_of(x, path);
            }
        }
        below * orbit.iter().filter(|&&b| b).count()
    }

    /// Orbit of `x` under the generators fixing `path` pointwise.
    fn orbit_of(&self, x: usize, path: &[usize]) -> Vec<bool> {
        let gens: Vec<&RootedIso> = self
            .generators
            .iter()
            .filter(|g| path.iter().all(|&p| g.image(p) == p))
            .collect();
        let mut seen = vec![false; self.ball.vertex_count()];
        seen[x] = true;
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            for g in &gens {
                let w = g.image(v);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

/// Transpositions of non-root vertices with the same open or closed
/// neighbourhood, one per vertex and the next member of its twin class.
fn twin_transpositions(b: &RootedBall) -> Vec<RootedIso> {
    let n = b.vertex_count();
    let mut out = Vec::new();
    for closed in [false, true] {
        let mut keyed: Vec<(Vec<u32>, u32)> = (1..n as u32)
            .map(|v| {
                let mut nbhd = b.neighbors(v as usize).to_vec();
                if closed {
                    let pos = nbhd.binary_search(&v).unwrap_err();
                    nbhd.insert(pos, v);
                }
                (nbhd, v)
            })
            .collect();
        keyed.sort_unstable();
        for pair in keyed.windows(2) {
            if pair[0].0 == pair[1].0 {
                let mut mapping: Vec<u32> = (0..n as u32).collect();
                mapping.swap(pair[0].1 as usize, pair[1].1 as usize);
                out.push(RootedIso::from_mapping(mapping));
            }
        }
    }
    out
}

/// Rooted automorphism group through a stabilizer chain: the order is the
/// product of orbit lengths of successively individualized vertices, and
/// an automorphism is kept only when it extends an orbit.
pub fn automorphism_group(b: &RootedBall) -> AutomorphismGroup {
    let mut s = ChainSearch {
        ball: b,
        single: Csr::new(&[b]),
        joint: Csr::new(&[b, b]),
        generators: twin_transpositions(b),
    };
    let order = s.order(initial_colors(&[b]), &mut Vec::new());
    AutomorphismGroup {
        order,
        generators: s.generators,
    }
}

pub fn rooted_automorphism_count(b: &RootedBall) -> BigUint {
    automorphism_group(b).order
}

/// Exact canonical form of a rooted ball: equal keys exactly for rooted
/// isomorphic balls.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// An encoded labelling and the labelling that produced it.
type Leaf = (Vec<(u32, u32)>, Vec<u32>);

struct CanonSearch<'a> {
    graph: Csr,
    edges: &'a [(u32, u32)],
    best: Option<Leaf>,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    automorphisms: Vec<Vec<u32>>,
}

impl CanonSearch<'_> {
    fn encode(&self, labels: &[u32]) -> Vec<(u32, u32)> {
        let mut enc: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (labels[u as usize], labels[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        enc.sort_unstable();
        enc
    }

    /// `v ↦` the vertex carrying the same label in `reference`.
    fn automorphism(reference: &[u32], labels: &[u32]) -> Vec<u32> {
        let mut by_label = vec![0u32; reference.len()];
        for (v, &l) in reference.iter().enumerate() {
            by_label[l as usize] = v as u32;
        }
        labels.iter().map(|&l| by_label[l as usize]).collect()
    }

    /// Orbit representatives under the automorphisms found so far that fix
    /// `path` pointwise.
    fn orbits(&self, path: &[usize]) -> Vec<usize> {
        let n = self.graph.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for a in &self.automorphisms {
            if path.iter().any(|&p| a[p] as usize != p) {
                continue;
            }
            for (v, &w) in a.iter().enumerate() {
                let (r1, r2) = (find(&mut parent, v), find(&mut parent, w as usize));
                if r1 != r2 {
                    parent[r1] = r2;
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    /// Returns the depth to jump back to when a leaf equivalent to the
    /// first leaf shows that the current subtree repeats an explored one.
    fn run(&mut self, mut colors: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        let k = refine(&self.graph, &mut colors);
        let n = self.graph.len();
        if k == n {
            let enc = self.encode(&colors);
            let mut jump = None;
            if let Some((first_enc, first_labels)) = &self.first {
                if *first_enc == enc {
                    let a = Self::automorphism(first_labels, &colors);
                    self.automorphisms.push(a);
                    jump = Some(path.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count());
                }
            } else {
                self.first = Some((enc.clone(), colors.clone()));
                self.first_path = path.clone();
            }
            let (best_enc, best_labels) = self.best.get_or_insert_with(|| (enc.clone(), colors.clone()));
            match enc.cmp(best_enc) {
                Ordering::Less => self.best = Some((enc, colors)),
                Ordering::Equal if jump.is_none() => {
                    let a = Self::automorphism(best_labels, &colors);
                    if a.iter().enumerate().any(|(v, &w)| v != w as usize) {
                        self.automorphisms.push(a);
                    }
                }
                _ => {}
            }
            return jump;
        }
        let mut sizes = vec![0usize; k];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let cell = (0..k).find(|&c| sizes[c] > 1).unwrap() as u32;
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == cell).collect();
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        let mut seen_autos = usize::MAX;
        let mut orbit = Vec::new();
        for y in members {
            if seen_autos != self.automorphisms.len() {
                orbit = self.orbits(path);
                seen_autos = self.automorphisms.len();
            }
            if explored.iter().any(|&x| orbit[x] == orbit[y]) {
                continue;
            }
            path.push(y);
            let jump = self.run(individualize(&colors, cell, &[y]), path);
            path.pop();
            explored.push(y);
            if let Some(j) = jump {
                if j < depth {
                    return Some(j);
                }
            }
        }
        None
    }
}

/// Canonical labelling by the lexicographically smallest sorted edge list
/// over all leaves of the individualization-refinement tree, with branches
/// pruned by automorphisms found along the way.
pub fn canonical_key(b: &RootedBall) -> CanonicalKey {
    let edges = b.edges();
    let mut s = CanonSearch {
        graph: Csr::new(&[b]),
        edges: &edges,
        best: None,
        first: None,
        first_path: Vec::new(),
        automorphisms: Vec::new(),
    };
    let _ = s.run(initial_colors(&[b]), &mut Vec::new());
    let (enc, _) = s.best.expect("search reaches at least one leaf");
    let mut bytes = Vec::with_capacity(8 + 8 * enc.len());
    bytes.extend_from_slice(&(b.vertex_count() as u32).to_be_bytes());
    bytes.extend_from_slice(&(enc.len() as u32).to_be_bytes());
    for (u, v) in enc {
        bytes.extend_from_slice(&u.to_be_bytes());
        bytes.extend_from_slice(&v.to_be_bytes());
    }
    CanonicalKey(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balls::{cayley_ball, finite_ball, FiniteGraph};
    use crate::words::{standard_generating_set, FreeAbelian, GenSet};

    fn z_ball(d: usize, r: usize) -> RootedBall {
        let z = FreeAbelian::of_rank(d);
        let s = GenSet::validate(&z, standard_generating_set(d)).unwrap();
        cayley_ball(&z, &s, r).unwrap()
    }

    fn path5_center() -> RootedBall {
        z_ball(1, 2)
    }

    #[test]
    fn path_has_two_automorphisms() {
        let b = path5_center();
        let autos = rooted_automorphisms(&b);
        assert_eq!(autos.len(), 2);
        assert!(autos.contains(&RootedIso::identity(5)));
    }

    #[test]
    fn star_and_diamond() {
        assert_eq!(rooted_automorphism_count(&z_ball(2, 1)), BigUint::from(24u32));
        assert_eq!(rooted_automorphism_count(&z_ball(2, 2)), BigUint::from(8u32));
    }

    #[test]
    fn single_vertex() {
        let g = automorphism_group(&z_ball(2, 0));
        assert_eq!(g.order, BigUint::one());
        assert!(g.is_trivial());
    }

    #[test]
    fn group_order_matches_enumeration() {
        for (d, r) in [(1, 3), (2, 1), (2, 2), (2, 3), (3, 1)] {
            let b = z_ball(d, r);
            let g = automorphism_group(&b);
            assert_eq!(g.order, BigUint::from(rooted_automorphisms(&b).len()));
            assert!(g.generators.iter().all(|p| p.is_valid(&b, &b)));
        }
    }

    #[test]
    fn tree_group_order() {
        // rooted automorphisms of the 4-regular tree of radius 2: 4! * (3!)^4
        let f = crate::words::FreeGroup::of_rank(2);
        let s = GenSet::validate(&f, standard_generating_set(2)).unwrap();
        let b = cayley_ball(&f, &s, 2).unwrap();
        assert_eq!(rooted_automorphism_count(&b), BigUint::from(24u32 * 6 * 6 * 6 * 6));
    }

    #[test]
    fn restriction_of_flip() {
        let b = path5_center();
        let flip = rooted_automorphisms(&b)
            .into_iter()
            .find(|p| *p != RootedIso::identity(5))
            .unwrap();
        assert!(!restricts_trivially(&flip, &b, 1));
        assert!(restricts_trivially(&flip, &b, 0));
        assert!(restricts_trivially(&RootedIso::identity(5), &b, 2));
    }

    #[test]
    fn keys_distinguish_roots() {
        let c9 = FiniteGraph::cycle(9);
        assert_eq!(
            canonical_key(&finite_ball(&c9, 0, 2)),
            canonical_key(&finite_ball(&c9, 5, 2))
        );
        let p5 = FiniteGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_ne!(
            canonical_key(&RootedBall::from_rooted_graph(&p5, 2)),
            canonical_key(&RootedBall::from_rooted_graph(&p5, 0))
        );
        let star = FiniteGraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let wheel =
            FiniteGraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_ne!(
            canonical_key(&RootedBall::from_rooted_graph(&star, 0)),
            canonical_key(&RootedBall::from_rooted_graph(&wheel, 0))
        );
    }

    #[test]
    fn canonical_key_survives_huge_automorphism_groups() {
        // the 4-regular tree of radius 3 has an enormous rooted automorphism group
        let f = crate::words::FreeGroup::of_rank(2);
        let s = GenSet::validate(&f, standard_generating_set(2)).unwrap();
        let b = cayley_ball(&f, &s, 3).unwrap();
        let k = canonical_key(&b);
        assert_eq!(k, canonical_key(&b));
    }

    #[test]
    fn capped_enumeration() {
        assert_eq!(
            rooted_isomorphisms_capped(&z_ball(2, 1), &z_ball(2, 1), 10),
            Err(IsoError::TooMany(10))
        );
        assert!(find_rooted_isomorphism(&z_ball(2, 1), &z_ball(2, 1)).is_some());
        assert!(find_rooted_isomorphism(&z_ball(2, 1), &z_ball(1, 1)).is_none());
    }

    #[test]
    fn composition_closure() {
        let b = z_ball(2, 2);
        let autos = rooted_automorphisms(&b);
        for p in &autos {
            assert!(autos.contains(&p.inverse()));
            for q in &autos {
                assert!(autos.contains(&p.then(q)));
            }
        }
    }
}
