use crate::words::{Presentation, Word};
use serde::Serialize;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CosetError {
    #[error("coset enumeration did not close within {0} cosets")]
    IndexExceedsBound(usize),
    #[error("subgroup generator {0} uses a generator outside the alphabet")]
    ForeignGenerator(usize),
}

/// Column of generator `g` is `2g`, of its inverse `2g + 1`.
fn column(g: usize, e: i64) -> usize {
    2 * g + usize::from(e < 0)
}

fn columns_of(w: &Word) -> Vec<usize> {
    w.unit_letters().map(|(g, e)| column(g, e)).collect()
}

/// Action of the base generators on the right cosets of a subgroup.
/// Coset 0 is the subgroup itself; cosets are numbered in the order a
/// row-by-row, column-by-column scan from coset 0 first meets them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    generators: Vec<String>,
    /// `rows[c][2g]` is `c·g`, `rows[c][2g+1]` is `c·g^-1`.
    rows: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `c · g^sign(e)`.
    pub fn act_letter(&self, c: usize, g: usize, e: i64) -> usize {
        self.rows[c][column(g, e)] as usize
    }

    pub fn act(&self, c: usize, w: &Word) -> usize {
        w.unit_letters().fold(c, |c, (g, e)| self.act_letter(c, g, e))
    }

    /// The permutation `c ↦ c·w` of the cosets.
    pub fn permutation(&self, w: &Word) -> Vec<u32> {
        (0..self.index()).map(|c| self.act(c, w) as u32).collect()
    }

    /// Builds a table from generator permutations in the right action.
    pub fn from_permutations(generators: Vec<String>, images: &[Vec<u32>]) -> Self {
        let n = images.first().map_or(1, Vec::len);
        let mut rows = vec![vec![0u32; 2 * images.len()]; n];
        for (g, p) in images.iter().enumerate() {
            for (c, &d) in p.iter().enumerate() {
                rows[c][2 * g] = d;
                rows[d as usize][2 * g + 1] = c as u32;
            }
        }
        CosetTable { generators, rows }
    }

    /// Every relator closes from every coset, every subgroup generator
    /// closes from coset 0, and inverse columns are inverse permutations.
    pub fn is_consistent(&self, presentation: &Presentation, subgroup: &[Word]) -> bool {
        let n = self.index();
        let inverse_ok = (0..n).all(|c| {
            (0..self.rank()).all(|g| {
                let d = self.rows[c][2 * g] as usize;
                d < n && self.rows[d][2 * g + 1] as usize == c
            })
        });
        inverse_ok
            && presentation
                .relators()
                .iter()
                .all(|r| (0..n).all(|c| self.act(c, r) == c))
            && subgroup.iter().all(|w| self.act(0, w) == 0)
    }
}

struct Enumerator {
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    live: usize,
    width: usize,
    max_live: usize,
    max_total: usize,
}

impl Enumerator {
    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), usize> {
        if self.live >= self.max_live || self.table.len() >= self.max_total {
            return Err(self.max_live);
        }
        let d = self.table.len() as u32;
        self.table.push(vec![NONE; self.width]);
        self.parent.push(d);
        self.live += 1;
        self.table[c as usize][x] = d;
        self.table[d as usize][x ^ 1] = c;
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.live -= 1;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i] as usize;
            i += 1;
            for x in 0..self.width {
                let d = self.table[dead][x];
                if d == NONE {
                    continue;
                }
                self.table[d as usize][x ^ 1] = NONE;
                let mu = self.rep(dead as u32);
                let nu = self.rep(d);
                let at_mu = self.table[mu as usize][x];
                let at_nu = self.table[nu as usize][x ^ 1];
                if at_mu != NONE {
                    self.merge(nu, at_mu, &mut queue);
                } else if at_nu != NONE {
                    self.merge(mu, at_nu, &mut queue);
                } else {
                    self.table[mu as usize][x] = nu;
                    self.table[nu as usize][x ^ 1] = mu;
                }
            }
        }
    }

    /// Scans `word` from `c`, defining cosets until the scan closes.
    fn scan_and_fill(&mut self, c: u32, word: &[usize]) -> Result<(), usize> {
        if word.is_empty() {
            return Ok(());
        }
        loop {
            let (mut f, mut b) = (c, c);
            let (mut i, mut j) = (0usize, word.len());
            while i < j && self.table[f as usize][word[i]] != NONE {
                f = self.table[f as usize][word[i]];
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.table[b as usize][word[j - 1] ^ 1] != NONE {
                b = self.table[b as usize][word[j - 1] ^ 1];
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.table[f as usize][word[i]] = b;
                self.table[b as usize][word[i] ^ 1] = f;
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// Coset enumeration in the HLT style: relators are scanned and filled
/// from each live coset in order, after which the coset's row is
/// completed. Fails once more than `max_cosets` cosets are live at a time.
pub fn todd_coxeter(
    presentation: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, CosetError> {
    let rank = presentation.rank();
    if let Some(i) = subgroup
        .iter()
        .position(|w| w.letters().iter().any(|l| l.generator >= rank))
    {
        return Err(CosetError::ForeignGenerator(i));
    }
    let width = 2 * rank;
    let mut en = Enumerator {
        table: vec![vec![NONE; width]],
        parent: vec![0],
        live: 1,
        width,
        max_live: max_cosets.max(1),
        max_total: max_cosets.max(1).saturating_mul(64).max(1 << 16),
    };
    let relators: Vec<Vec<usize>> = presentation.relators().iter().map(columns_of).collect();
    let overflow = |_| CosetError::IndexExceedsBound(max_cosets);
    for w in subgroup {
        let cols = columns_of(w);
        let root = en.rep(0);
        en.scan_and_fill(root, &cols).map_err(overflow)?;
    }
    let mut c = 0;
    while c < en.table.len() {
        for rel in &relators {
            if !en.is_live(c) {
                break;
            }
            en.scan_and_fill(c as u32, rel).map_err(overflow)?;
        }
        for x in 0..width {
            if !en.is_live(c) {
                break;
            }
            if en.table[c][x] == NONE {
                en.define(c as u32, x).map_err(overflow)?;
            }
        }
        c += 1;
    }
    Ok(standardize(&mut en, presentation))
}

/// Renumbers live cosets in the order a row-major scan from coset 0 meets them.
fn standardize(en: &mut Enumerator, presentation: &Presentation) -> CosetTable {
    let mut number = vec![NONE; en.table.len()];
    let mut order = vec![0u32];
    number[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let c = order[i] as usize;
        for x in 0..en.width {
            let d = en.table[c][x];
            let d = en.rep(d) as usize;
            if number[d] == NONE {
                number[d] = order.len() as u32;
                order.push(d as u32);
            }
        }
        i += 1;
    }
    let rows = order
        .iter()
        .map(|&c| {
            (0..en.width)
                .map(|x| {
                    let d = en.table[c as usize][x];
                    number[en.rep(d) as usize]
                })
                .collect()
        })
        .collect();
    CosetTable {
        generators: presentation.alphabet().symbols().to_vec(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn s3() -> Presentation {
        let a = Alphabet::new(["s", "t"]).unwrap();
        let rels = ["s^2", "t^2", "s t s t s t"]
            .iter()
            .map(|t| a.parse_word(t).unwrap())
            .collect();
        Presentation::new(a, rels).unwrap()
    }

    #[test]
    fn integers_mod_five() {
        let p = Presentation::free(Alphabet::standard(1));
        let h = [p.alphabet().parse_word("x^5").unwrap()];
        let t = todd_coxeter(&p, &h, 100).unwrap();
        assert_eq!(t.index(), 5);
        // numbering alternates between the x and x^-1 directions
        assert_eq!(t.permutation(&Word::power(0, 1)), [1, 3, 0, 4, 2]);
        assert!(t.is_consistent(&p, &h));
    }

    #[test]
    fn s3_cosets() {
        let p = s3();
        let h = [p.alphabet().parse_word("s").unwrap()];
        let t = todd_coxeter(&p, &h, 100).unwrap();
        assert_eq!(t.index(), 3);
        assert!(t.is_consistent(&p, &h));
        let t = todd_coxeter(&p, &[], 100).unwrap();
        assert_eq!(t.index(), 6);
        assert!(t.is_consistent(&p, &[]));
    }

    #[test]
    fn whole_group_has_one_coset() {
        let p = Presentation::baumslag_solitar(9, 10);
        let h = [Word::power(0, 1), Word::power(1, 1)];
        let t = todd_coxeter(&p, &h, 10).unwrap();
        assert_eq!(t.index(), 1);
    }

    #[test]
    fn infinite_index_hits_the_bound() {
        let p = Presentation::free_abelian(2);
        let h = [Word::power(0, 3)];
        assert_eq!(todd_coxeter(&p, &h, 200), Err(CosetError::IndexExceedsBound(200)));
    }

    #[test]
    fn coincidences_collapse() {
        // x^6 = x^4 = 1 forces index 2 for the trivial subgroup of <x>
        let a = Alphabet::standard(1);
        let p = Presentation::new(
            a.clone(),
            vec![a.parse_word("x^6").unwrap(), a.parse_word("x^4").unwrap()],
        )
        .unwrap();
        let t = todd_coxeter(&p, &[], 100).unwrap();
        assert_eq!(t.index(), 2);
        assert!(t.is_consistent(&p, &[]));
    }

    #[test]
    fn from_permutations_round_trip() {
        let t = CosetTable::from_permutations(vec!["x".into()], &[vec![1, 2, 0]]);
        assert_eq!(t.rows(), [vec![1, 2], vec![2, 0], vec![0, 1]]);
    }
}
