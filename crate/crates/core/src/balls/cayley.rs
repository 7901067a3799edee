use super::RootedBall;
use crate::words::{GenSet, Word, WordProblem};
use rayon::prelude::*;
use std::collections::HashMap;

pub const DEFAULT_MAX_VERTICES: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BallError {
    #[error("resource limit: more than {cap} vertices required")]
    ResourceLimit { cap: usize },
}

/// `B(e, r)` in `Cay(Γ, S)` with the default vertex cap.
pub fn cayley_ball<E: WordProblem>(engine: &E, s: &GenSet, r: usize) -> Result<RootedBall, BallError> {
    cayley_ball_with_cap(engine, s, r, DEFAULT_MAX_VERTICES)
}

/// `B(e, r)` in `Cay(Γ, S)`.
///
/// Vertices are canonical elements discovered in BFS order: layer by
/// layer, each vertex in discovery order, its products `g·s` tried in `S`
/// order. Products of a layer are computed in parallel and assigned
/// sequentially, so the numbering does not depend on thread count.
pub fn cayley_ball_with_cap<E: WordProblem>(
    engine: &E,
    s: &GenSet,
    r: usize,
    max_vertices: usize,
) -> Result<RootedBall, BallError> {
    let gens: Vec<E::Element> = s.elements().iter().map(|w| engine.evaluate(w)).collect();
    let mut elements = vec![engine.identity()];
    let mut index: HashMap<E::Element, u32> = HashMap::from([(engine.identity(), 0)]);
    let mut dist = vec![0u32];
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new()];
    if max_vertices == 0 {
        return Err(BallError::ResourceLimit { cap: 0 });
    }
    let mut layer = 0..1usize;
    let mut depth = 0usize;
    loop {
        let products: Vec<Vec<E::Element>> = elements[layer.clone()]
            .par_iter()
            .map(|x| gens.iter().map(|g| engine.product(x, g)).collect())
            .collect();
        let next_start = elements.len();
        for (offset, prods) in products.into_iter().enumerate() {
            let u = (layer.start + offset) as u32;
            for y in prods {
                let v = match index.get(&y) {
                    Some(&v) => v,
                    None if depth < r => {
                        if elements.len() >= max_vertices {
                            return Err(BallError::ResourceLimit { cap: max_vertices });
                        }
                        let v = elements.len() as u32;
                        index.insert(y.clone(), v);
                        elements.push(y);
                        dist.push(depth as u32 + 1);
                        adjacency.push(Vec::new());
                        v
                    }
                    None => continue,
                };
                if v != u {
                    adjacency[u as usize].push(v);
                    adjacency[v as usize].push(u);
                }
            }
        }
        if depth == r {
            break;
        }
        depth += 1;
        layer = next_start..elements.len();
    }
    let labels = elements.iter().map(|x| engine.spell(x)).collect();
    Ok(RootedBall::from_parts(r, dist, adjacency, Some(labels), None))
}

/// `d(e, g)` in `Cay(Γ, S)` with the default cap on visited vertices.
pub fn distance<E: WordProblem>(engine: &E, s: &GenSet, g: &Word) -> Result<usize, BallError> {
    distance_with_cap(engine, s, g, DEFAULT_MAX_VERTICES)
}

/// Bidirectional breadth-first search from `e` and from `g`, always
/// expanding the smaller frontier by one full layer. Since `S = S^-1` both
/// sides step by right multiplication with `S`.
pub fn distance_with_cap<E: WordProblem>(
    engine: &E,
    s: &GenSet,
    g: &Word,
    max_vertices: usize,
) -> Result<usize, BallError> {
    let target = engine.evaluate(g);
    let origin = engine.identity();
    if target == origin {
        return Ok(0);
    }
    let gens: Vec<E::Element> = s.elements().iter().map(|w| engine.evaluate(w)).collect();
    let mut seen = [
        HashMap::from([(origin.clone(), 0usize)]),
        HashMap::from([(target.clone(), 0usize)]),
    ];
    let mut frontier = [vec![origin], vec![target]];
    let mut depth = [0usize; 2];
    loop {
        let side = usize::from(frontier[1].len() < frontier[0].len());
        if frontier[side].is_empty() {
            // the component of e is exhausted without meeting g
            return Err(BallError::ResourceLimit { cap: max_vertices });
        }
        let products: Vec<E::Element> = frontier[side]
            .par_iter()
            .flat_map_iter(|x| gens.iter().map(move |h| engine.product(x, h)))
            .collect();
        depth[side] += 1;
        let mut next = Vec::new();
        for y in products {
            if seen[side].contains_key(&y) {
                continue;
            }
            if let Some(&d) = seen[1 - side].get(&y) {
                return Ok(depth[side] + d);
            }
            seen[side].insert(y.clone(), depth[side]);
            next.push(y);
            if seen[0].len() + seen[1].len() > max_vertices {
                return Err(BallError::ResourceLimit { cap: max_vertices });
            }
        }
        frontier[side] = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{bs_generating_set, standard_generating_set, BaumslagSolitar, FreeAbelian, FreeGroup};

    #[test]
    fn integer_ball_is_a_path() {
        let z = FreeAbelian::of_rank(1);
        let s = GenSet::validate(&z, standard_generating_set(1)).unwrap();
        let b = cayley_ball(&z, &s, 3).unwrap();
        assert_eq!(b.vertex_count(), 7);
        assert_eq!(b.edge_count(), 6);
        assert_eq!(b.sphere_sizes(), [1, 2, 2, 2]);
    }

    #[test]
    fn free_group_ball_is_a_tree() {
        let f = FreeGroup::of_rank(2);
        let s = GenSet::validate(&f, standard_generating_set(2)).unwrap();
        let b = cayley_ball(&f, &s, 2).unwrap();
        assert_eq!(b.vertex_count(), 17);
        assert_eq!(b.edge_count(), 16);
        assert_eq!(b.sphere_sizes(), [1, 4, 12]);
    }

    #[test]
    fn first_layer_follows_s_order() {
        let g = BaumslagSolitar::new(9, 10);
        let s = GenSet::validate(&g, bs_generating_set()).unwrap();
        let b = cayley_ball(&g, &s, 1).unwrap();
        assert_eq!(b.vertex_count(), 11);
        for i in 0..10 {
            assert_eq!(&b.labels().unwrap()[i + 1], s.get(i));
        }
        // a - a^2 via s = a
        assert!(b.has_edge(1, 5));
    }

    #[test]
    fn radius_zero_and_cap() {
        let z = FreeAbelian::of_rank(2);
        let s = GenSet::validate(&z, standard_generating_set(2)).unwrap();
        assert_eq!(cayley_ball(&z, &s, 0).unwrap().vertex_count(), 1);
        assert_eq!(
            cayley_ball_with_cap(&z, &s, 3, 10),
            Err(BallError::ResourceLimit { cap: 10 })
        );
    }

    #[test]
    fn l1_distance_in_z2() {
        let z = FreeAbelian::of_rank(2);
        let s = GenSet::validate(&z, standard_generating_set(2)).unwrap();
        let g = z.alphabet().parse_word("x^3 y^4").unwrap();
        assert_eq!(distance(&z, &s, &g).unwrap(), 7);
        assert_eq!(distance(&z, &s, &Word::identity()).unwrap(), 0);
        let g = z.alphabet().parse_word("x^-1").unwrap();
        assert_eq!(distance(&z, &s, &g).unwrap(), 1);
        assert!(distance_with_cap(&z, &s, &z.alphabet().parse_word("x^40").unwrap(), 50).is_err());
    }
}
