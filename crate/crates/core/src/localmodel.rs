//! Fixing radii of Cayley balls and verification of perfect finite
//! `r`-local models.

use crate::balls::{cayley_ball_with_cap, finite_ball, BallError, FiniteGraph, RootedBall, DEFAULT_MAX_VERTICES};
use crate::iso::{automorphism_group, canonical_key, find_rooted_isomorphism, CanonicalKey, IsoError, RootedIso};
use crate::words::{GenSet, WordProblem};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocalModelError {
    #[error(transparent)]
    Ball(#[from] BallError),
    #[error(transparent)]
    Iso(#[from] IsoError),
}

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_vertices: usize,
    /// Cap on rooted isomorphisms enumerated per ball pair.
    pub max_isomorphisms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_isomorphisms: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixingRadius {
    Found(usize),
    NotFoundUpTo(usize),
}

/// An automorphism of `B(e, radius)` that moves `vertex`, a vertex of `B(e, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MovingAutomorphism {
    pub radius: usize,
    pub vertex: u32,
    pub automorphism: RootedIso,
}

impl MovingAutomorphism {
    /// Re-checks the witness against a freshly built ball.
    pub fn verify(&self, ball: &RootedBall, r: usize) -> bool {
        ball.radius() == self.radius
            && self.automorphism.is_valid(ball, ball)
            && (self.vertex as usize) < ball.prefix_len(r)
            && self.automorphism.image(self.vertex as usize) != self.vertex as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixingRadiusReport {
    pub r: usize,
    pub r0: FixingRadius,
    /// `(radius, |Aut B(e, radius)|)` per scanned radius; serialized with
    /// the order as a decimal string.
    #[serde(serialize_with = "counts_as_decimal")]
    pub automorphism_counts: Vec<(usize, BigUint)>,
    /// For the last scanned radius that failed: an automorphism moving `B(e, r)`.
    pub moving_witness: Option<MovingAutomorphism>,
}

/// Scans `r0 = r, r+1, …, bound` for the first radius at which every
/// rooted automorphism of `B(e, r0)` fixes `B(e, r)` pointwise.
///
/// The automorphism group is generated by the stabilizer-chain generators,
/// so it fixes `B(e, r)` pointwise exactly when every generator does.
pub fn fixing_radius<E: WordProblem>(
    engine: &E,
    s: &GenSet,
    r: usize,
    bound: usize,
    limits: Limits,
) -> Result<FixingRadiusReport, LocalModelError> {
    let mut counts = Vec::new();
    let mut witness = None;
    for radius in r..=bound {
        let ball = cayley_ball_with_cap(engine, s, radius, limits.max_vertices)?;
        let group = automorphism_group(&ball);
        counts.push((radius, group.order.clone()));
        match group.moved_below(ball.prefix_len(r)) {
            None => {
                return Ok(FixingRadiusReport {
                    r,
                    r0: FixingRadius::Found(radius),
                    automorphism_counts: counts,
                    moving_witness: witness,
                })
            }
            Some((v, phi)) => {
                witness = Some(MovingAutomorphism {
                    radius,
                    vertex: v as u32,
                    automorphism: phi.clone(),
                })
            }
        }
    }
    Ok(FixingRadiusReport {
        r,
        r0: FixingRadius::NotFoundUpTo(bound),
        automorphism_counts: counts,
        moving_witness: witness,
    })
}

fn counts_as_decimal<S: Serializer>(counts: &[(usize, BigUint)], ser: S) -> Result<S::Ok, S::Error> {
    let mut seq = ser.serialize_seq(Some(counts.len()))?;
    for (radius, count) in counts {
        seq.serialize_element(&(radius, count.to_string()))?;
    }
    seq.end()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelClass {
    /// Hex encoding of the canonical key shared by the class.
    pub key: String,
    pub representative: u32,
    pub size: usize,
    /// Rooted isomorphism from the representative's ball onto `B(e, r)`.
    pub witness: RootedIso,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub vertex: u32,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelVerdict {
    pub accepted: bool,
    pub radius: usize,
    pub connected: bool,
    pub classes: Vec<ModelClass>,
    pub rejection: Option<Rejection>,
}

/// Decides whether every radius-`r` ball of `g0` is rooted isomorphic to
/// `B(e, r)` in `Cay(Γ, S)`. A Cayley graph is vertex-transitive, so the
/// identity ball stands for every ball of `G`.
pub fn verify_model<E: WordProblem>(
    g0: &FiniteGraph,
    engine: &E,
    s: &GenSet,
    r: usize,
    limits: Limits,
) -> Result<ModelVerdict, LocalModelError> {
    let target = cayley_ball_with_cap(engine, s, r, limits.max_vertices)?;
    Ok(verify_against(g0, &target))
}

/// [`verify_model`] against an already built target ball.
pub fn verify_against(g0: &FiniteGraph, target: &RootedBall) -> ModelVerdict {
    let r = target.radius();
    let target_key = canonical_key(target);
    let target_sizes = target.sphere_sizes();
    let connected = g0.is_connected();

    // None: isomorphic to the target; Some(reason) otherwise
    let outcomes: Vec<Option<String>> = (0..g0.vertex_count())
        .into_par_iter()
        .map(|v| {
            let ball = finite_ball(g0, v, r);
            let sizes = ball.sphere_sizes();
            if sizes != target_sizes {
                return Some(format!("sphere sizes {sizes:?}, expected {target_sizes:?}"));
            }
            if ball.edge_count() != target.edge_count() {
                return Some(format!(
                    "{} edges in the ball, expected {}",
                    ball.edge_count(),
                    target.edge_count()
                ));
            }
            if canonical_key(&ball) != target_key {
                return Some("ball is not rooted isomorphic to B(e, r)".to_string());
            }
            None
        })
        .collect();

    if let Some((v, reason)) = outcomes
        .iter()
        .enumerate()
        .find_map(|(v, o)| o.as_ref().map(|reason| (v, reason.clone())))
    {
        return ModelVerdict {
            accepted: false,
            radius: r,
            connected,
            classes: Vec::new(),
            rejection: Some(Rejection {
                vertex: v as u32,
                reason,
            }),
        };
    }
    let classes = if g0.vertex_count() == 0 {
        Vec::new()
    } else {
        let ball = finite_ball(g0, 0, r);
        let witness = find_rooted_isomorphism(&ball, target).expect("equal canonical keys");
        vec![ModelClass {
            key: target_key.to_hex(),
            representative: 0,
            size: g0.vertex_count(),
            witness,
        }]
    };
    ModelVerdict {
        accepted: true,
        radius: r,
        connected,
        classes,
        rejection: None,
    }
}

/// Canonical key of every radius-`r` ball of `g0`, in vertex order.
pub fn ball_keys(g0: &FiniteGraph, r: usize) -> Vec<CanonicalKey> {
    (0..g0.vertex_count())
        .into_par_iter()
        .map(|v| canonical_key(&finite_ball(g0, v, r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::words::{standard_generating_set, FreeAbelian};

    fn zd(d: usize) -> (FreeAbelian, GenSet) {
        let z = FreeAbelian::of_rank(d);
        let s = GenSet::validate(&z, standard_generating_set(d)).unwrap();
        (z, s)
    }

    #[test]
    fn integers_have_no_fixing_radius() {
        let (z, s) = zd(1);
        let rep = fixing_radius(&z, &s, 1, 6, Limits::default()).unwrap();
        assert_eq!(rep.r0, FixingRadius::NotFoundUpTo(6));
        assert_eq!(
            rep.automorphism_counts,
            (1..=6).map(|k| (k, BigUint::from(2u32))).collect::<Vec<_>>()
        );
        let w = rep.moving_witness.unwrap();
        assert_eq!(w.radius, 6);
    }

    #[test]
    fn radius_zero_is_always_fixed() {
        let (z, s) = zd(2);
        let rep = fixing_radius(&z, &s, 0, 3, Limits::default()).unwrap();
        assert_eq!(rep.r0, FixingRadius::Found(0));
        assert_eq!(rep.automorphism_counts, [(0, BigUint::from(1u32))]);
        assert!(rep.moving_witness.is_none());
    }

    #[test]
    fn cycles_as_models_of_z() {
        let (z, s) = zd(1);
        let ok = verify_model(&FiniteGraph::cycle(9), &z, &s, 3, Limits::default()).unwrap();
        assert!(ok.accepted && ok.connected);
        assert_eq!(ok.classes.len(), 1);
        assert_eq!(ok.classes[0].size, 9);
        let bad = verify_model(&FiniteGraph::cycle(7), &z, &s, 3, Limits::default()).unwrap();
        assert!(!bad.accepted);
        assert_eq!(bad.rejection.unwrap().vertex, 0);
    }

    #[test]
    fn torus_accepted_for_z2() {
        let (z, s) = zd(2);
        let v = verify_model(&fixtures::torus(6, 6).unwrap(), &z, &s, 2, Limits::default()).unwrap();
        assert!(v.accepted);
        let target = crate::balls::cayley_ball(&z, &s, 2).unwrap();
        let rep = finite_ball(&fixtures::torus(6, 6).unwrap(), 0, 2);
        assert!(v.classes[0].witness.is_valid(&rep, &target));
    }

    #[test]
    fn disconnected_models_are_flagged_not_rejected() {
        let (z, s) = zd(1);
        let g = FiniteGraph::cycle(8).disjoint_union(&FiniteGraph::cycle(9));
        let v = verify_model(&g, &z, &s, 3, Limits::default()).unwrap();
        assert!(v.accepted);
        assert!(!v.connected);
    }
}
