//! From a connected perfect finite local model back to a Schreier graph:
//! edge labels read off ball isomorphisms, the induced action of `S`, its
//! relators and the stabilizer of a base vertex.

use crate::balls::{cayley_ball_with_cap, distance_with_cap, finite_ball, BallError, FiniteGraph, RootedBall};
use crate::iso::{automorphism_group, find_rooted_isomorphism, RootedIso};
use crate::localmodel::{verify_against, Limits, Rejection};
use crate::words::{Alphabet, GenSet, Presentation, Word, WordProblem};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{HashSet, VecDeque};

/// A word over the abstract alphabet `S`, one index into the generating set
/// per letter. The formal inverse of letter `i` is `S.inverse_of(i)`.
pub type SWord = Vec<usize>;

pub fn sword_inverse(w: &[usize], s: &GenSet) -> SWord {
    w.iter().rev().map(|&i| s.inverse_of(i)).collect()
}

/// Cancels adjacent `i, inverse_of(i)` pairs.
pub fn sword_reduce(w: &[usize], s: &GenSet) -> SWord {
    let mut out: SWord = Vec::with_capacity(w.len());
    for &i in w {
        if out.last() == Some(&s.inverse_of(i)) {
            out.pop();
        } else {
            out.push(i);
        }
    }
    out
}

/// The word over the base alphabet spelled by `w`, freely reduced.
pub fn sword_expand(w: &[usize], s: &GenSet) -> Word {
    let mut out = Word::identity();
    for &i in w {
        for &l in s.get(i).letters() {
            out.push_reduced(l);
        }
    }
    out
}

pub fn render_sword(w: &[usize], s: &GenSet, alphabet: &Alphabet) -> String {
    if w.is_empty() {
        return "e".to_string();
    }
    w.iter()
        .map(|&i| format!("[{}]", alphabet.render(s.get(i))))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `labels[v][i]` is the label of the directed edge from `v` to its `i`-th
/// neighbour in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: Vec<Vec<usize>>,
    targets: Vec<Vec<u32>>,
}

impl EdgeLabeling {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize, w: usize) -> Option<usize> {
        let i = self.targets[v].binary_search(&(w as u32)).ok()?;
        Some(self.labels[v][i])
    }

    /// Every directed edge as `(v, w, label)`, sorted.
    pub fn directed_edges(&self) -> Vec<(u32, u32, usize)> {
        let mut out = Vec::new();
        for (v, (ts, ls)) in self.targets.iter().zip(&self.labels).enumerate() {
            out.extend(ts.iter().zip(ls).map(|(&w, &l)| (v as u32, w, l)));
        }
        out
    }
}

/// The orbit graph of an action of the free group on `S`: `sigma[s][v]` is
/// the vertex reached from `v` along `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchreierGraph {
    sigma: Vec<Vec<u32>>,
    #[serde(skip)]
    vertex_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    NotRegular {
        vertex: u32,
        degree: usize,
        expected: usize,
    },
    #[error("sigma for S[{0}] is not a bijection")]
    NotBijective(usize),
    #[error("sigma for S[{0}] is not the inverse of sigma for S[{1}]")]
    InverseMismatch(usize, usize),
    #[error("sigma for S[{0}] has the wrong length")]
    WrongLength(usize),
}

impl SchreierGraph {
    /// Checks that each map is a bijection of `0..vertex_count` and that
    /// the maps of `s` and `s^-1` are mutually inverse.
    pub fn new(vertex_count: usize, sigma: Vec<Vec<u32>>, s: &GenSet) -> Result<Self, ActionError> {
        for (i, m) in sigma.iter().enumerate() {
            if m.len() != vertex_count {
                return Err(ActionError::WrongLength(i));
            }
            let mut seen = vec![false; vertex_count];
            for &w in m {
                if w as usize >= vertex_count || std::mem::replace(&mut seen[w as usize], true) {
                    return Err(ActionError::NotBijective(i));
                }
            }
        }
        for i in 0..sigma.len() {
            let j = s.inverse_of(i);
            if (0..vertex_count).any(|v| sigma[j][sigma[i][v] as usize] as usize != v) {
                return Err(ActionError::InverseMismatch(i, j));
            }
        }
        Ok(SchreierGraph { sigma, vertex_count })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn generator_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self, s: usize) -> &[u32] {
        &self.sigma[s]
    }

    pub fn act(&self, v: usize, s: usize) -> usize {
        self.sigma[s][v] as usize
    }

    pub fn act_word(&self, v: usize, w: &[usize]) -> usize {
        w.iter().fold(v, |u, &s| self.act(u, s))
    }

    pub fn is_transitive(&self) -> bool {
        self.bfs_tree(0).iter().all(|p| p.is_some())
    }

    /// Underlying simple graph together with the number of loops and of
    /// surplus parallel edges that had to be dropped.
    pub fn underlying_graph(&self) -> (FiniteGraph, DropReport) {
        let mut edges = std::collections::BTreeSet::new();
        let mut loops = 0;
        let mut arcs = 0;
        for m in &self.sigma {
            for (v, &w) in m.iter().enumerate() {
                if w as usize == v {
                    loops += 1;
                } else {
                    arcs += 1;
                    edges.insert((v.min(w as usize) as u32, v.max(w as usize) as u32));
                }
            }
        }
        // each undirected edge of a multigraph shows up as two directed arcs
        let g = FiniteGraph::from_edges(self.vertex_count, edges.iter().copied()).expect("deduplicated edges");
        let report = DropReport {
            loops,
            parallel_edges: arcs / 2 - g.edge_count(),
        };
        (g, report)
    }

    /// BFS from `root` trying `S` in index order; entry `u` is
    /// `Some((parent, s))` with `sigma[s][parent] = u`, the root maps to
    /// itself with `usize::MAX`.
    fn bfs_tree(&self, root: usize) -> Vec<Option<(usize, usize)>> {
        let mut tree = vec![None; self.vertex_count];
        if self.vertex_count == 0 {
            return tree;
        }
        tree[root] = Some((root, usize::MAX));
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for s in 0..self.sigma.len() {
                let w = self.act(u, s);
                if tree[w].is_none() {
                    tree[w] = Some((u, s));
                    queue.push_back(w);
                }
            }
        }
        tree
    }
}

/// Loops and collapsed parallel edges met while passing from an action to
/// its simple orbit graph. `loops` counts pairs `(v, s)` with `σ_s(v) = v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DropReport {
    pub loops: usize,
    pub parallel_edges: usize,
}

impl DropReport {
    pub fn is_clean(&self) -> bool {
        self.loops == 0 && self.parallel_edges == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LabelFailure {
    /// Two isomorphisms `B(vertex, r) → B(e, r)` that differ within radius 2.
    Ambiguous {
        vertex: u32,
        first: RootedIso,
        second: RootedIso,
    },
    Inconsistent {
        edge: (u32, u32),
        detail: String,
    },
    /// The ball at `vertex` is not isomorphic to `B(e, r)`.
    NotAModel {
        vertex: u32,
    },
    RadiusTooSmall,
}

/// Labels every directed edge `(v, w)` by the element of `S` that the
/// isomorphism `B(v, r) → B(e, r)` sends `w` to.
///
/// All such isomorphisms at `v` are `φ ∘ α` for one `φ` and `α` ranging
/// over `Aut B(e, r)`, so they agree on radius `min(2, r)` exactly when
/// `Aut B(e, r)` fixes that radius pointwise. That is checked once on the
/// target instead of enumerating per vertex.
pub fn label_edges(g0: &FiniteGraph, target: &RootedBall, s: &GenSet) -> Result<EdgeLabeling, LabelFailure> {
    let r = target.radius();
    if r == 0 {
        return Err(LabelFailure::RadiusTooSmall);
    }
    let check = r.min(2);
    let group = automorphism_group(target);
    let moving = group.moved_below(target.prefix_len(check)).map(|(_, g)| g.clone());

    let isos: Vec<Option<RootedIso>> = (0..g0.vertex_count())
        .into_par_iter()
        .map(|v| find_rooted_isomorphism(&finite_ball(g0, v, r), target))
        .collect();
    if let Some(v) = isos.iter().position(Option::is_none) {
        return Err(LabelFailure::NotAModel { vertex: v as u32 });
    }
    let isos: Vec<RootedIso> = isos.into_iter().map(Option::unwrap).collect();
    if let (Some(alpha), Some(phi)) = (moving, isos.first()) {
        let second = phi.then(&alpha);
        debug_assert!(phi.first_disagreement(&second, &finite_ball(g0, 0, r), check).is_some());
        return Err(LabelFailure::Ambiguous {
            vertex: 0,
            first: phi.clone(),
            second,
        });
    }

    let targets: Vec<Vec<u32>> = (0..g0.vertex_count()).map(|v| g0.neighbors(v).to_vec()).collect();
    let labels: Vec<Vec<usize>> = (0..g0.vertex_count())
        .into_par_iter()
        .map(|v| {
            // the ball lists the root first, then its neighbours in sorted order
            let ball_index = |i: usize| i + 1;
            debug_assert_eq!(
                finite_ball(g0, v, r).sources().map(|src| &src[1..=targets[v].len()]),
                Some(&targets[v][..])
            );
            (0..targets[v].len())
                .map(|i| isos[v].image(ball_index(i)) - 1)
                .collect()
        })
        .collect();
    let labeling = EdgeLabeling { labels, targets };

    for (v, w, l) in labeling.directed_edges() {
        let back = labeling.label(w as usize, v as usize).expect("symmetric adjacency");
        if back != s.inverse_of(l) {
            return Err(LabelFailure::Inconsistent {
                edge: (v, w),
                detail: format!(
                    "label S[{l}] on ({v}, {w}) but S[{back}] on ({w}, {v}); expected S[{}]",
                    s.inverse_of(l)
                ),
            });
        }
    }
    Ok(labeling)
}

/// `σ_s(v)` = the neighbour of `v` along the `s`-labelled edge.
pub fn build_action(g0: &FiniteGraph, labeling: &EdgeLabeling, s: &GenSet) -> Result<SchreierGraph, ActionError> {
    let n = g0.vertex_count();
    let mut sigma = vec![vec![u32::MAX; n]; s.len()];
    for v in 0..n {
        if g0.degree(v) != s.len() {
            return Err(ActionError::NotRegular {
                vertex: v as u32,
                degree: g0.degree(v),
                expected: s.len(),
            });
        }
    }
    for (v, w, l) in labeling.directed_edges() {
        sigma[l][v as usize] = w;
    }
    SchreierGraph::new(n, sigma, s)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentOnSError {
    #[error("generator {0} or its inverse is not an element of S")]
    BaseLettersMissing(String),
    #[error(transparent)]
    Ball(#[from] BallError),
}

/// A presentation of the group on the abstract generating set `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationOnS {
    pub relators: Vec<SWord>,
    /// Largest `d(e, p)` over all prefixes `p` of all relators.
    pub r_prime: usize,
}

/// Relators over `S`: each original relator with base letters replaced by
/// their positions in `S`, then `s · w_s^-1` for every other `s`, where
/// `w_s` spells `s` in base letters. A base letter and its inverse may
/// share a position when the generator is an involution.
pub fn present_on_s<E: WordProblem>(
    presentation: &Presentation,
    s: &GenSet,
    engine: &E,
    max_vertices: usize,
) -> Result<PresentationOnS, PresentOnSError> {
    let alphabet = presentation.alphabet();
    let mut base = Vec::with_capacity(alphabet.len());
    for g in 0..alphabet.len() {
        let pos = |e: i64| s.position(engine, &Word::power(g, e));
        match (pos(1), pos(-1)) {
            (Some(p), Some(q)) => base.push([p, q]),
            _ => return Err(PresentOnSError::BaseLettersMissing(alphabet.symbol(g).to_string())),
        }
    }
    let rewrite = |w: &Word| -> SWord { w.unit_letters().map(|(g, e)| base[g][usize::from(e < 0)]).collect() };
    let mut relators: Vec<SWord> = presentation.relators().iter().map(rewrite).collect();
    let base_positions: HashSet<usize> = base.iter().flatten().copied().collect();
    for i in 0..s.len() {
        if !base_positions.contains(&i) {
            let mut rel = vec![i];
            rel.extend(sword_inverse(&rewrite(s.get(i)), s));
            relators.push(rel);
        }
    }

    let mut prefixes = HashSet::new();
    for rel in &relators {
        for k in 1..=rel.len() {
            prefixes.insert(sword_expand(&rel[..k], s));
        }
    }
    let mut prefixes: Vec<Word> = prefixes.into_iter().collect();
    prefixes.sort();
    let distances: Vec<Result<usize, BallError>> = prefixes
        .iter()
        .map(|p| distance_with_cap(engine, s, p, max_vertices))
        .collect();
    let mut r_prime = 0;
    for d in distances {
        r_prime = r_prime.max(d?);
    }
    Ok(PresentationOnS { relators, r_prime })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorViolation {
    pub relator: usize,
    pub vertex: u32,
    pub end: u32,
}

/// `Ok` iff every relator, read as a composition of `σ` maps, fixes every
/// vertex; otherwise the first violating `(relator, vertex)`.
pub fn check_factors(action: &SchreierGraph, relators: &[SWord]) -> Result<(), RelatorViolation> {
    for (i, rel) in relators.iter().enumerate() {
        for v in 0..action.vertex_count() {
            let end = action.act_word(v, rel);
            if end != v {
                return Err(RelatorViolation {
                    relator: i,
                    vertex: v as u32,
                    end: end as u32,
                });
            }
        }
    }
    Ok(())
}

/// Schreier generators of the stabilizer of `v`: `p_u · s · p_{σ_s(u)}^-1`
/// over non-tree pairs `(u, s)` of the BFS tree from `v`, freely reduced,
/// trivial and repeated words dropped. Order: `u` in BFS order, then `s`.
pub fn stabilizer(action: &SchreierGraph, v: usize, s: &GenSet) -> Vec<SWord> {
    let tree = action.bfs_tree(v);
    let mut order = Vec::with_capacity(action.vertex_count());
    let mut paths: Vec<Option<SWord>> = vec![None; action.vertex_count()];
    paths[v] = Some(Vec::new());
    order.push(v);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for g in 0..s.len() {
            let w = action.act(u, g);
            if paths[w].is_none() && tree[w] == Some((u, g)) {
                let mut p = paths[u].clone().unwrap();
                p.push(g);
                paths[w] = Some(p);
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &u in &order {
        for g in 0..s.len() {
            let w = action.act(u, g);
            if tree[w] == Some((u, g)) {
                continue;
            }
            let mut word = paths[u].clone().unwrap();
            word.push(g);
            word.extend(sword_inverse(paths[w].as_ref().unwrap(), s));
            let word = sword_reduce(&word, s);
            if !word.is_empty() && seen.insert(word.clone()) {
                out.push(word);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerGenerator {
    pub over_s: String,
    pub word: String,
    #[serde(skip)]
    pub letters: SWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ReconstructionResult {
    Success {
        /// `(v, w, S index)` for every directed edge.
        labeling: Vec<(u32, u32, usize)>,
        schreier: SchreierGraph,
        base: u32,
        index: usize,
        r_prime: usize,
        stabilizer: Vec<StabilizerGenerator>,
    },
    AmbiguousLabeling {
        vertex: u32,
        first: RootedIso,
        second: RootedIso,
    },
    LabelInconsistency {
        edge: (u32, u32),
        detail: String,
    },
    RelatorViolation {
        relator: String,
        vertex: u32,
        end: u32,
    },
    Disconnected {
        components: usize,
    },
    NotAModel {
        rejection: Rejection,
    },
}

impl ReconstructionResult {
    pub fn is_success(&self) -> bool {
        matches!(self, ReconstructionResult::Success { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ReconstructionResult::Success { .. } => "success",
            ReconstructionResult::AmbiguousLabeling { .. } => "ambiguous_labeling",
            ReconstructionResult::LabelInconsistency { .. } => "label_inconsistency",
            ReconstructionResult::RelatorViolation { .. } => "relator_violation",
            ReconstructionResult::Disconnected { .. } => "disconnected",
            ReconstructionResult::NotAModel { .. } => "not_a_model",
        }
    }
}

/// Verification, connectivity, labelling, action, relator check and
/// stabilizer of vertex 0, stopping at the first stage that fails.
pub fn reconstruct<E: WordProblem>(
    g0: &FiniteGraph,
    engine: &E,
    s: &GenSet,
    presentation: &Presentation,
    r: usize,
    limits: Limits,
) -> Result<ReconstructionResult, PresentOnSError> {
    let target = cayley_ball_with_cap(engine, s, r, limits.max_vertices)?;
    let verdict = verify_against(g0, &target);
    if let Some(rejection) = verdict.rejection {
        return Ok(ReconstructionResult::NotAModel { rejection });
    }
    if !verdict.connected {
        let components = g0.components().into_iter().max().map_or(0, |c| c as usize + 1);
        return Ok(ReconstructionResult::Disconnected { components });
    }
    let labeling = match label_edges(g0, &target, s) {
        Ok(l) => l,
        Err(LabelFailure::Ambiguous { vertex, first, second }) => {
            return Ok(ReconstructionResult::AmbiguousLabeling { vertex, first, second })
        }
        Err(LabelFailure::Inconsistent { edge, detail }) => {
            return Ok(ReconstructionResult::LabelInconsistency { edge, detail })
        }
        Err(LabelFailure::NotAModel { vertex }) => {
            return Ok(ReconstructionResult::NotAModel {
                rejection: Rejection {
                    vertex,
                    reason: "ball is not rooted isomorphic to B(e, r)".to_string(),
                },
            })
        }
        Err(LabelFailure::RadiusTooSmall) => {
            return Ok(ReconstructionResult::LabelInconsistency {
                edge: (0, 0),
                detail: "radius 0 balls carry no edges to label".to_string(),
            })
        }
    };
    let action = match build_action(g0, &labeling, s) {
        Ok(a) => a,
        Err(e) => {
            return Ok(ReconstructionResult::LabelInconsistency {
                edge: (0, 0),
                detail: e.to_string(),
            })
        }
    };
    let on_s = present_on_s(presentation, s, engine, limits.max_vertices)?;
    let alphabet = engine.alphabet();
    if let Err(v) = check_factors(&action, &on_s.relators) {
        return Ok(ReconstructionResult::RelatorViolation {
            relator: render_sword(&on_s.relators[v.relator], s, alphabet),
            vertex: v.vertex,
            end: v.end,
        });
    }
    let stabilizer = stabilizer(&action, 0, s)
        .into_iter()
        .map(|w| StabilizerGenerator {
            over_s: render_sword(&w, s, alphabet),
            word: alphabet.render(&sword_expand(&w, s)),
            letters: w,
        })
        .collect();
    Ok(ReconstructionResult::Success {
        labeling: labeling.directed_edges(),
        index: action.vertex_count(),
        schreier: action,
        base: 0,
        r_prime: on_s.r_prime,
        stabilizer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balls::cayley_ball;
    use crate::fixtures;
    use crate::words::{standard_generating_set, FreeAbelian, FreeGroup};

    fn zd(d: usize) -> (FreeAbelian, GenSet) {
        let z = FreeAbelian::of_rank(d);
        let s = GenSet::validate(&z, standard_generating_set(d)).unwrap();
        (z, s)
    }

    fn rotation(n: usize, k: usize) -> Vec<u32> {
        (0..n).map(|v| ((v + k) % n) as u32).collect()
    }

    #[test]
    fn cycles_are_ambiguous_models_of_z() {
        let (z, s) = zd(1);
        let target = cayley_ball(&z, &s, 2).unwrap();
        let c = FiniteGraph::cycle(8);
        match label_edges(&c, &target, &s) {
            Err(LabelFailure::Ambiguous { first, second, .. }) => {
                let ball = finite_ball(&c, 0, 2);
                assert!(first.is_valid(&ball, &target) && second.is_valid(&ball, &target));
                assert!(first.first_disagreement(&second, &ball, 1).is_some());
            }
            other => panic!("expected ambiguity, got {other:?}"),
        }
    }

    #[test]
    fn klein_bottle_is_ambiguous() {
        let (z, s) = zd(2);
        let p = Presentation::free_abelian(2);
        let g = fixtures::klein(8, 6).unwrap();
        let out = reconstruct(&g, &z, &s, &p, 2, Limits::default()).unwrap();
        assert_eq!(out.kind(), "ambiguous_labeling");
    }

    #[test]
    fn disconnected_union() {
        let (z, s) = zd(1);
        let p = Presentation::free(Alphabet::standard(1));
        let g = FiniteGraph::cycle(8).disjoint_union(&FiniteGraph::cycle(9));
        let out = reconstruct(&g, &z, &s, &p, 3, Limits::default()).unwrap();
        assert_eq!(out, ReconstructionResult::Disconnected { components: 2 });
    }

    #[test]
    fn rejected_graph_is_not_a_model() {
        let (z, s) = zd(1);
        let p = Presentation::free(Alphabet::standard(1));
        let out = reconstruct(&FiniteGraph::cycle(5), &z, &s, &p, 3, Limits::default()).unwrap();
        assert_eq!(out.kind(), "not_a_model");
    }

    #[test]
    fn trivial_action_on_one_vertex() {
        let (_, s) = zd(0);
        let a = SchreierGraph::new(1, Vec::new(), &s).unwrap();
        assert!(check_factors(&a, &[vec![]]).is_ok());
        assert!(stabilizer(&a, 0, &s).is_empty());
        let (_, s1) = zd(1);
        let a = SchreierGraph::new(1, vec![vec![0], vec![0]], &s1).unwrap();
        assert_eq!(stabilizer(&a, 0, &s1), [vec![0], vec![1]]);
    }

    #[test]
    fn cycle_action_with_given_labels() {
        let (_, s) = zd(1);
        let c6 = FiniteGraph::cycle(6);
        let labels: Vec<Vec<usize>> = (0..6)
            .map(|v| {
                c6.neighbors(v)
                    .iter()
                    .map(|&w| usize::from(w as usize != (v + 1) % 6))
                    .collect()
            })
            .collect();
        let targets = (0..6).map(|v| c6.neighbors(v).to_vec()).collect();
        let labeling = EdgeLabeling { labels, targets };
        let a = build_action(&c6, &labeling, &s).unwrap();
        assert_eq!(a.sigma(0), rotation(6, 1));
        assert_eq!(a.sigma(1), rotation(6, 5));
    }

    #[test]
    fn relators_on_c5() {
        let (_, s) = zd(1);
        let a = SchreierGraph::new(5, vec![rotation(5, 1), rotation(5, 4)], &s).unwrap();
        assert!(check_factors(&a, &[vec![0; 5]]).is_ok());
        let v = check_factors(&a, &[vec![0; 3]]).unwrap_err();
        assert_eq!((v.relator, v.vertex), (0, 0));
        assert_eq!(stabilizer(&a, 0, &s), [vec![0, 0, 0, 0, 0], vec![1, 1, 1, 1, 1]]);
    }

    #[test]
    fn non_regular_graph_rejected_by_action() {
        let (_, s) = zd(2);
        let p3 = FiniteGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let labeling = EdgeLabeling {
            labels: vec![vec![0], vec![2, 0], vec![2]],
            targets: (0..3).map(|v| p3.neighbors(v).to_vec()).collect(),
        };
        assert!(matches!(
            build_action(&p3, &labeling, &s),
            Err(ActionError::NotRegular { vertex: 0, .. })
        ));
    }

    #[test]
    fn presentations_on_s() {
        let (z, s) = zd(2);
        let on = present_on_s(&Presentation::free_abelian(2), &s, &z, 1000).unwrap();
        assert_eq!(on.relators, [vec![0, 1, 2, 3]]);
        assert_eq!(on.r_prime, 2);

        let f = FreeGroup::of_rank(2);
        let s = GenSet::validate(&f, standard_generating_set(2)).unwrap();
        let on = present_on_s(&Presentation::free(Alphabet::standard(2)), &s, &f, 1000).unwrap();
        assert!(on.relators.is_empty());
        assert_eq!(on.r_prime, 0);

        let x2 = Alphabet::standard(1).parse_word("x^2").unwrap();
        let z1 = FreeAbelian::of_rank(1);
        let s = GenSet::validate(&z1, vec![x2.clone(), x2.inverse()]).unwrap();
        assert!(matches!(
            present_on_s(&Presentation::free(Alphabet::standard(1)), &s, &z1, 1000),
            Err(PresentOnSError::BaseLettersMissing(_))
        ));
    }

    #[test]
    fn word_helpers() {
        let (_, s) = zd(2);
        assert_eq!(sword_reduce(&[0, 1, 3, 2, 1], &s), [1]);
        assert_eq!(sword_inverse(&[0, 1], &s), [3, 2]);
        let a = Alphabet::standard(2);
        assert_eq!(a.render(&sword_expand(&[0, 0, 1, 2], &s)), "x^2 y x^-1");
        assert_eq!(render_sword(&[0, 3], &s, &a), "[x] [y^-1]");
        assert_eq!(render_sword(&[], &s, &a), "e");
    }
}
