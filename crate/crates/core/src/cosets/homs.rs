use crate::words::{Perm, Presentation, Word};
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

pub const DEFAULT_MAX_NODES: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error("resource limit: search would visit more than {cap} generator tuples")]
    ResourceLimit { cap: u64 },
    #[error("degree must be at least 1")]
    ZeroDegree,
}

/// A transitive permutation representation: generator `g` acts on
/// `0..degree` by `images[g]`, on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FiniteQuotientHom {
    pub degree: usize,
    pub images: Vec<Perm>,
}

impl FiniteQuotientHom {
    pub fn act(&self, point: usize, w: &Word) -> usize {
        w.unit_letters().fold(point, |p, (g, e)| apply(&self.images[g], p, e))
    }

    pub fn image(&self, w: &Word) -> Perm {
        (0..self.degree).map(|p| self.act(p, w) as u32).collect()
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        (0..self.degree).all(|p| self.act(p, w) == p)
    }

    pub fn satisfies(&self, presentation: &Presentation) -> bool {
        presentation.relators().iter().all(|r| self.is_identity(r))
    }

    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.degree];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(p) = stack.pop() {
            for img in &self.images {
                for q in [img[p] as usize, inverse_point(img, p)] {
                    if !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        seen.iter().all(|&b| b)
    }
}

fn apply(p: &[u32], point: usize, e: i64) -> usize {
    if e > 0 {
        p[point] as usize
    } else {
        inverse_point(p, point)
    }
}

fn inverse_point(p: &[u32], point: usize) -> usize {
    p.iter().position(|&q| q as usize == point).unwrap()
}

/// All permutations of `0..k` in lexicographic order.
fn all_perms(k: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p: Perm = (0..k as u32).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Partitions of `k` into parts in non-increasing order.
fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            acc.push(part);
            go(rest - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// The permutation with consecutive cycles of the given lengths.
fn cycle_type_representative(parts: &[usize]) -> Perm {
    let mut p = Vec::new();
    let mut start = 0u32;
    for &len in parts {
        for i in 0..len as u32 {
            p.push(start + (i + 1) % len as u32);
        }
        start += len as u32;
    }
    p
}

fn lcm_of(parts: &[usize]) -> usize {
    parts.iter().fold(1, |acc, &x| acc.lcm(&x))
}

/// Canonical form under simultaneous conjugation: the least relabelling
/// obtained by numbering points from each start in BFS order, trying
/// generator images then preimages in generator order.
fn canonical(images: &[Perm]) -> Vec<Perm> {
    let k = images[0].len();
    let inverses: Vec<Perm> = images
        .iter()
        .map(|p| {
            let mut inv = vec![0u32; k];
            for (i, &q) in p.iter().enumerate() {
                inv[q as usize] = i as u32;
            }
            inv
        })
        .collect();
    let mut best: Option<Vec<Perm>> = None;
    for start in 0..k {
        let mut label = vec![u32::MAX; k];
        let mut order = vec![start];
        label[start] = 0;
        let mut i = 0;
        while i < order.len() {
            let p = order[i];
            for g in 0..images.len() {
                for q in [images[g][p] as usize, inverses[g][p] as usize] {
                    if label[q] == u32::MAX {
                        label[q] = order.len() as u32;
                        order.push(q);
                    }
                }
            }
            i += 1;
        }
        let relabelled: Vec<Perm> = images
            .iter()
            .map(|img| order.iter().map(|&p| label[img[p] as usize]).collect())
            .collect();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled);
        }
    }
    best.unwrap()
}

/// Every transitive action of degree `k` satisfying the relators, one per
/// conjugacy class, sorted by canonical form.
///
/// One distinguished generator runs through cycle-type representatives
/// only; every other generator through all of `Sym(k)`. For a
/// Baumslag–Solitar presentation the distinguished generator is `b`, and
/// cycle types whose order `t` has `gcd(t, m) ≠ gcd(t, n)` are skipped,
/// since `b^m` and `b^n` are conjugate.
pub fn enumerate_homs(
    presentation: &Presentation,
    k: usize,
    max_nodes: u64,
) -> Result<Vec<FiniteQuotientHom>, HomError> {
    if k == 0 {
        return Err(HomError::ZeroDegree);
    }
    let rank = presentation.rank();
    if rank == 0 {
        return Ok(if k == 1 {
            vec![FiniteQuotientHom {
                degree: 1,
                images: Vec::new(),
            }]
        } else {
            Vec::new()
        });
    }
    let bs = presentation.baumslag_solitar_params();
    let pivot = bs.map_or(0, |(_, b, _, _)| b);
    let classes: Vec<Vec<usize>> = partitions(k)
        .into_iter()
        .filter(|parts| match bs {
            Some((_, _, m, n)) => {
                let t = lcm_of(parts);
                t.gcd(&(m as usize)) == t.gcd(&(n as usize))
            }
            None => true,
        })
        .collect();
    let perms = all_perms(k);
    let others = rank - 1;
    let nodes = (classes.len() as u64).saturating_mul((perms.len() as u64).saturating_pow(others as u32));
    if nodes > max_nodes {
        return Err(HomError::ResourceLimit { cap: max_nodes });
    }

    let relators = presentation.relators();
    let tuples_per_class = (perms.len() as u64).pow(others as u32);
    let found: BTreeSet<Vec<Perm>> = classes
        .par_iter()
        .flat_map_iter(|parts| {
            let rep = cycle_type_representative(parts);
            let perms = &perms;
            (0..tuples_per_class).filter_map(move |mut code| {
                let mut images = Vec::with_capacity(rank);
                for g in 0..rank {
                    if g == pivot {
                        images.push(rep.clone());
                    } else {
                        images.push(perms[(code % perms.len() as u64) as usize].clone());
                        code /= perms.len() as u64;
                    }
                }
                let hom = FiniteQuotientHom { degree: k, images };
                let ok = relators.iter().all(|r| hom.is_identity(r)) && hom.is_transitive();
                ok.then(|| canonical(&hom.images))
            })
        })
        .collect();
    Ok(found
        .into_iter()
        .map(|images| FiniteQuotientHom { degree: k, images })
        .collect())
}
