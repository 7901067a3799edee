#![allow(dead_code)]

use lml_core::balls::RootedBall;
use lml_core::cosets::{permutation_engine, CosetTable};
use lml_core::words::{Alphabet, GenSet, Perm, PermutationGroup, Presentation, Word, WordProblem};

pub fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
    let a = Alphabet::new(gens.iter().copied()).unwrap();
    let rels = rels.iter().map(|t| a.parse_word(t).unwrap()).collect();
    Presentation::new(a, rels).unwrap()
}

pub struct RoundTrip {
    pub name: &'static str,
    pub presentation: Presentation,
    pub group: PermutationGroup,
    pub table: CosetTable,
    pub s: GenSet,
}

/// Finite groups whose regular Schreier graphs are simple, have trivially
/// fixed balls at radius 2 and are rebuilt exactly by reconstruction.
pub fn round_trips() -> Vec<RoundTrip> {
    let specs: [(&str, &[&str], &[&str]); 4] = [
        ("S4", &["x^4", "y^3", "x y x y"], &["x y"]),
        ("F20", &["x^5", "y^4", "y^-1 x y x^-2"], &["x y^2"]),
        ("F21", &["x^7", "y^3", "y^-1 x y x^-2"], &["x y", "x y^-1"]),
        ("SL23", &["x^3", "y^3", "x y x y^-1 x^-1 y^-1"], &["x y", "x y^-1"]),
    ];
    specs
        .iter()
        .map(|&(name, rels, extras)| {
            let presentation = pres(&["x", "y"], rels);
            let (group, table) = permutation_engine(&presentation, &[], 100).unwrap();
            let a = presentation.alphabet();
            let mut words: Vec<Word> = ["x", "y", "x^-1", "y^-1"]
                .iter()
                .map(|w| a.parse_word(w).unwrap())
                .collect();
            for e in extras {
                let w = a.parse_word(e).unwrap();
                let involution = group.equal(&w, &w.inverse());
                words.push(w.clone());
                if !involution {
                    words.push(w.inverse());
                }
            }
            let s = GenSet::validate(&group, words).unwrap();
            RoundTrip {
                name,
                presentation,
                group,
                table,
                s,
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sym {
    A(i8),
    B(i128),
}

/// Word problem in `BS(m, n)` by exhaustive pinching: replace
/// `a b^k a^-1` (m | k) by `b^(kn/m)` and `a^-1 b^k a` (n | k) by
/// `b^(km/n)` until none remain. By Britton's lemma the word is trivial
/// exactly when nothing is left.
pub fn pinch_is_identity(m: i128, n: i128, w: &Word) -> bool {
    let mut syms = Vec::new();
    for l in w.letters() {
        if l.generator == 0 {
            for _ in 0..l.exponent.unsigned_abs() {
                syms.push(Sym::A(l.exponent.signum() as i8));
            }
        } else {
            syms.push(Sym::B(l.exponent as i128));
        }
    }
    loop {
        let mut out: Vec<Sym> = Vec::with_capacity(syms.len());
        for s in syms.iter().copied() {
            match (out.last().copied(), s) {
                (_, Sym::B(0)) => {}
                (Some(Sym::B(x)), Sym::B(y)) => {
                    out.pop();
                    if x + y != 0 {
                        out.push(Sym::B(x + y));
                    }
                }
                (Some(Sym::A(x)), Sym::A(y)) if x == -y => {
                    out.pop();
                }
                _ => out.push(s),
            }
        }
        let mut changed = out.len() != syms.len();
        let mut i = 0;
        while i + 2 < out.len() {
            if let (Sym::A(x), Sym::B(k), Sym::A(y)) = (out[i], out[i + 1], out[i + 2]) {
                if x == -y {
                    let replaced = if x > 0 && k % m == 0 {
                        Some(k / m * n)
                    } else if x < 0 && k % n == 0 {
                        Some(k / n * m)
                    } else {
                        None
                    };
                    if let Some(j) = replaced {
                        out.splice(i..i + 3, [Sym::B(j)]);
                        changed = true;
                        continue;
                    }
                }
            }
            i += 1;
        }
        syms = out;
        if !changed {
            return syms.is_empty();
        }
    }
}

/// All rooted isomorphisms, by extending partial bijections one vertex at a
/// time and checking adjacency against the vertices already placed.
pub fn brute_force_isos(b1: &RootedBall, b2: &RootedBall) -> Vec<Vec<u32>> {
    let n = b1.vertex_count();
    if n != b2.vertex_count() || b1.edge_count() != b2.edge_count() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    extend(b1, b2, 1, &mut map, &mut used, &mut out);
    out.sort();
    out
}

fn extend(b1: &RootedBall, b2: &RootedBall, u: usize, map: &mut [u32], used: &mut [bool], out: &mut Vec<Vec<u32>>) {
    let n = map.len();
    if u == n {
        out.push(map.to_vec());
        return;
    }
    for x in 0..n {
        if used[x] || b1.degree(u) != b2.degree(x) {
            continue;
        }
        let ok = (0..u).all(|w| b1.has_edge(u, w) == b2.has_edge(x, map[w] as usize));
        if ok {
            map[u] = x as u32;
            used[x] = true;
            extend(b1, b2, u + 1, map, used, out);
            used[x] = false;
        }
    }
    map[u] = u32::MAX;
}

fn permute(p: &mut [u32], k: usize, f: &mut dyn FnMut(&[u32])) {
    if k >= p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Every permutation of `0..k`.
pub fn sym(k: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p: Vec<u32> = (0..k as u32).collect();
    permute(&mut p, 0, &mut |q| out.push(q.to_vec()));
    out
}

/// The lexicographically least simultaneous conjugate `c^-1 x c` of a tuple.
pub fn conjugacy_min(images: &[Perm]) -> Vec<Perm> {
    let k = images[0].len();
    sym(k)
        .into_iter()
        .map(|c| {
            images
                .iter()
                .map(|x| {
                    let mut y = vec![0u32; k];
                    for p in 0..k {
                        y[c[p] as usize] = c[x[p] as usize];
                    }
                    y
                })
                .collect::<Vec<Perm>>()
        })
        .min()
        .unwrap()
}

pub fn act(images: &[Perm], p: usize, w: &Word) -> usize {
    w.unit_letters().fold(p, |p, (g, e)| {
        if e > 0 {
            images[g][p] as usize
        } else {
            images[g].iter().position(|&q| q as usize == p).unwrap()
        }
    })
}

pub fn transitive(images: &[Perm]) -> bool {
    let k = images[0].len();
    let mut seen = vec![false; k];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(p) = stack.pop() {
        for img in images {
            for q in [img[p] as usize, img.iter().position(|&x| x as usize == p).unwrap()] {
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// Transitive actions of degree `k` satisfying the relators, one
/// representative per conjugacy class, by exhaustive search.
pub fn brute_force_homs(p: &Presentation, k: usize) -> Vec<Vec<Perm>> {
    let all = sym(k);
    let mut found = std::collections::BTreeSet::new();
    let rank = p.rank();
    let total = all.len().pow(rank as u32);
    for mut code in 0..total {
        let images: Vec<Perm> = (0..rank)
            .map(|_| {
                let x = all[code % all.len()].clone();
                code /= all.len();
                x
            })
            .collect();
        if transitive(&images) && p.relators().iter().all(|r| (0..k).all(|q| act(&images, q, r) == q)) {
            found.insert(conjugacy_min(&images));
        }
    }
    found.into_iter().collect()
}
