use super::{Alphabet, BaumslagSolitar, BrittonForm, Letter, Word};
use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

/// A solvable word problem: every word evaluates to a canonical element
/// that can be hashed and compared.
pub trait WordProblem: Send + Sync {
    type Element: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn alphabet(&self) -> &Alphabet;
    fn identity(&self) -> Self::Element;
    fn evaluate(&self, w: &Word) -> Self::Element;
    fn product(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn inverse(&self, x: &Self::Element) -> Self::Element;
    /// Canonical spelling of an element as a freely reduced word.
    fn spell(&self, x: &Self::Element) -> Word;

    fn normal_form(&self, w: &Word) -> Word {
        self.spell(&self.evaluate(w))
    }

    fn is_identity(&self, w: &Word) -> bool {
        self.evaluate(w) == self.identity()
    }

    fn multiply(&self, u: &Word, v: &Word) -> Word {
        self.spell(&self.product(&self.evaluate(u), &self.evaluate(v)))
    }

    fn equal(&self, u: &Word, v: &Word) -> bool {
        self.evaluate(u) == self.evaluate(v)
    }
}

/// The free group on an alphabet; elements are freely reduced words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeGroup {
    alphabet: Alphabet,
}

impl FreeGroup {
    pub fn new(alphabet: Alphabet) -> Self {
        FreeGroup { alphabet }
    }

    pub fn of_rank(rank: usize) -> Self {
        FreeGroup::new(Alphabet::standard(rank))
    }
}

impl WordProblem for FreeGroup {
    type Element = Word;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn identity(&self) -> Word {
        Word::identity()
    }
    fn evaluate(&self, w: &Word) -> Word {
        w.free_reduce()
    }
    fn product(&self, x: &Word, y: &Word) -> Word {
        x.concat(y)
    }
    fn inverse(&self, x: &Word) -> Word {
        x.inverse()
    }
    fn spell(&self, x: &Word) -> Word {
        x.clone()
    }
}

/// `Z^d`; elements are exponent-sum vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAbelian {
    alphabet: Alphabet,
}

impl FreeAbelian {
    pub fn new(alphabet: Alphabet) -> Self {
        FreeAbelian { alphabet }
    }

    pub fn of_rank(rank: usize) -> Self {
        FreeAbelian::new(Alphabet::standard(rank))
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }
}

impl WordProblem for FreeAbelian {
    type Element = Vec<i64>;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn identity(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }
    fn evaluate(&self, w: &Word) -> Vec<i64> {
        w.exponent_sums(self.rank())
    }
    fn product(&self, x: &Vec<i64>, y: &Vec<i64>) -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }
    fn inverse(&self, x: &Vec<i64>) -> Vec<i64> {
        x.iter().map(|a| -a).collect()
    }
    fn spell(&self, x: &Vec<i64>) -> Word {
        Word::from_letters(
            x.iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(g, &e)| Letter::new(g, e))
                .collect(),
        )
    }
}

impl WordProblem for BaumslagSolitar {
    type Element = BrittonForm;

    fn alphabet(&self) -> &Alphabet {
        BaumslagSolitar::alphabet(self)
    }
    fn identity(&self) -> BrittonForm {
        BrittonForm::identity()
    }
    fn evaluate(&self, w: &Word) -> BrittonForm {
        BaumslagSolitar::normal_form(self, w)
    }
    fn product(&self, x: &BrittonForm, y: &BrittonForm) -> BrittonForm {
        BaumslagSolitar::multiply(self, x, y)
    }
    fn inverse(&self, x: &BrittonForm) -> BrittonForm {
        BaumslagSolitar::invert(self, x)
    }
    fn spell(&self, x: &BrittonForm) -> Word {
        x.to_word()
    }
}

/// A permutation of `0..degree`, acting on the right: point `p` goes to
/// `images[p]`, and `x * y` means "first `x`, then `y`".
pub type Perm = Vec<u32>;

pub(crate) fn perm_product(x: &[u32], y: &[u32]) -> Perm {
    x.iter().map(|&p| y[p as usize]).collect()
}

pub(crate) fn perm_inverse(x: &[u32]) -> Perm {
    let mut inv = vec![0u32; x.len()];
    for (p, &q) in x.iter().enumerate() {
        inv[q as usize] = p as u32;
    }
    inv
}

pub(crate) fn perm_power(x: &[u32], e: i64) -> Perm {
    let mut out = vec![0u32; x.len()];
    let mut done = vec![false; x.len()];
    let mut cycle = Vec::new();
    for start in 0..x.len() {
        if done[start] {
            continue;
        }
        cycle.clear();
        let mut p = start;
        while !done[p] {
            done[p] = true;
            cycle.push(p as u32);
            p = x[p] as usize;
        }
        let len = cycle.len() as i64;
        let shift = e.rem_euclid(len) as usize;
        for (i, &q) in cycle.iter().enumerate() {
            out[q as usize] = cycle[(i + shift) % cycle.len()];
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermutationGroupError {
    #[error("generator {0} is not a permutation of 0..{1}")]
    NotAPermutation(usize, usize),
    #[error("expected {expected} generator images, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("group order exceeds the cap of {0} elements")]
    TooLarge(usize),
}

/// A finite group given by permutation images of the alphabet's
/// generators. The whole group is enumerated at construction so every
/// element has a shortlex-minimal spelling.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    alphabet: Alphabet,
    degree: usize,
    images: Vec<Perm>,
    spellings: HashMap<Perm, Word>,
}

impl PermutationGroup {
    pub const DEFAULT_ORDER_CAP: usize = 1 << 20;

    pub fn new(alphabet: Alphabet, degree: usize, images: Vec<Perm>) -> Result<Self, PermutationGroupError> {
        Self::with_order_cap(alphabet, degree, images, Self::DEFAULT_ORDER_CAP)
    }

    pub fn with_order_cap(
        alphabet: Alphabet,
        degree: usize,
        images: Vec<Perm>,
        cap: usize,
    ) -> Result<Self, PermutationGroupError> {
        if images.len() != alphabet.len() {
            return Err(PermutationGroupError::WrongArity {
                expected: alphabet.len(),
                got: images.len(),
            });
        }
        for (g, p) in images.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = p.len() == degree
                && p.iter().all(|&q| {
                    let q = q as usize;
                    q < degree && !std::mem::replace(&mut seen[q], true)
                });
            if !ok {
                return Err(PermutationGroupError::NotAPermutation(g, degree));
            }
        }
        // shortlex BFS over letters x1, x1^-1, x2, x2^-1, ...
        let steps: Vec<(Letter, Perm)> = images
            .iter()
            .enumerate()
            .flat_map(|(g, p)| [(Letter::new(g, 1), p.clone()), (Letter::new(g, -1), perm_inverse(p))])
            .collect();
        let id: Perm = (0..degree as u32).collect();
        let mut spellings = HashMap::new();
        spellings.insert(id.clone(), Word::identity());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            let wx = spellings[&x].clone();
            for (letter, p) in &steps {
                let y = perm_product(&x, p);
                if !spellings.contains_key(&y) {
                    let mut wy = wx.clone();
                    wy.push_reduced(*letter);
                    spellings.insert(y.clone(), wy);
                    if spellings.len() > cap {
                        return Err(PermutationGroupError::TooLarge(cap));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(PermutationGroup {
            alphabet,
            degree,
            images,
            spellings,
        })
    }

    /// `Z_k^d` acting on itself by translation: generator `i` adds 1 to
    /// coordinate `i` modulo `k`.
    pub fn torus(k: usize, d: usize) -> Result<Self, PermutationGroupError> {
        let degree = k.pow(d as u32);
        let images = (0..d)
            .map(|i| {
                let stride = k.pow(i as u32);
                (0..degree)
                    .map(|p| {
                        let digit = (p / stride) % k;
                        let q = p - digit * stride + ((digit + 1) % k) * stride;
                        q as u32
                    })
                    .collect()
            })
            .collect();
        PermutationGroup::new(Alphabet::standard(d), degree, images)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.spellings.len()
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn elements(&self) -> impl Iterator<Item = &Perm> {
        self.spellings.keys()
    }
}

impl WordProblem for PermutationGroup {
    type Element = Perm;

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn identity(&self) -> Perm {
        (0..self.degree as u32).collect()
    }
    fn evaluate(&self, w: &Word) -> Perm {
        let mut x = self.identity();
        for l in w.letters() {
            x = perm_product(&x, &perm_power(&self.images[l.generator], l.exponent));
        }
        x
    }
    fn product(&self, x: &Perm, y: &Perm) -> Perm {
        perm_product(x, y)
    }
    fn inverse(&self, x: &Perm) -> Perm {
        perm_inverse(x)
    }
    fn spell(&self, x: &Perm) -> Word {
        self.spellings
            .get(x)
            .cloned()
            .expect("permutation outside the generated group")
    }
}

/// Runtime choice among the engine kinds.
#[derive(Clone, Debug)]
pub enum Engine {
    Free(FreeGroup),
    FreeAbelian(FreeAbelian),
    BaumslagSolitar(BaumslagSolitar),
    Permutation(PermutationGroup),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Free(Word),
    Abelian(Vec<i64>),
    Britton(BrittonForm),
    Perm(Perm),
}

macro_rules! dispatch {
    ($self:ident, $g:ident => $body:expr) => {
        match $self {
            Engine::Free($g) => $body,
            Engine::FreeAbelian($g) => $body,
            Engine::BaumslagSolitar($g) => $body,
            Engine::Permutation($g) => $body,
        }
    };
}

impl Engine {
    pub fn kind(&self) -> &'static str {
        match self {
            Engine::Free(_) => "free",
            Engine::FreeAbelian(_) => "free-abelian",
            Engine::BaumslagSolitar(_) => "baumslag-solitar",
            Engine::Permutation(_) => "permutation",
        }
    }
}

impl WordProblem for Engine {
    type Element = Element;

    fn alphabet(&self) -> &Alphabet {
        dispatch!(self, g => g.alphabet())
    }

    fn identity(&self) -> Element {
        match self {
            Engine::Free(g) => Element::Free(g.identity()),
            Engine::FreeAbelian(g) => Element::Abelian(g.identity()),
            Engine::BaumslagSolitar(g) => Element::Britton(WordProblem::identity(g)),
            Engine::Permutation(g) => Element::Perm(g.identity()),
        }
    }

    fn evaluate(&self, w: &Word) -> Element {
        match self {
            Engine::Free(g) => Element::Free(g.evaluate(w)),
            Engine::FreeAbelian(g) => Element::Abelian(g.evaluate(w)),
            Engine::BaumslagSolitar(g) => Element::Britton(WordProblem::evaluate(g, w)),
            Engine::Permutation(g) => Element::Perm(g.evaluate(w)),
        }
    }

    fn product(&self, x: &Element, y: &Element) -> Element {
        match (self, x, y) {
            (Engine::Free(g), Element::Free(x), Element::Free(y)) => Element::Free(g.product(x, y)),
            (Engine::FreeAbelian(g), Element::Abelian(x), Element::Abelian(y)) => Element::Abelian(g.product(x, y)),
            (Engine::BaumslagSolitar(g), Element::Britton(x), Element::Britton(y)) => {
                Element::Britton(WordProblem::product(g, x, y))
            }
            (Engine::Permutation(g), Element::Perm(x), Element::Perm(y)) => Element::Perm(g.product(x, y)),
            _ => panic!("element does not belong to the {} engine", self.kind()),
        }
    }

    fn inverse(&self, x: &Element) -> Element {
        match (self, x) {
            (Engine::Free(g), Element::Free(x)) => Element::Free(g.inverse(x)),
            (Engine::FreeAbelian(g), Element::Abelian(x)) => Element::Abelian(g.inverse(x)),
            (Engine::BaumslagSolitar(g), Element::Britton(x)) => Element::Britton(WordProblem::inverse(g, x)),
            (Engine::Permutation(g), Element::Perm(x)) => Element::Perm(g.inverse(x)),
            _ => panic!("element does not belong to the {} engine", self.kind()),
        }
    }

    fn spell(&self, x: &Element) -> Word {
        match (self, x) {
            (Engine::Free(g), Element::Free(x)) => g.spell(x),
            (Engine::FreeAbelian(g), Element::Abelian(x)) => g.spell(x),
            (Engine::BaumslagSolitar(g), Element::Britton(x)) => g.spell(x),
            (Engine::Permutation(g), Element::Perm(x)) => g.spell(x),
            _ => panic!("element does not belong to the {} engine", self.kind()),
        }
    }
}
