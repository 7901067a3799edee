//! Words over signed generator alphabets, presentations and word-problem engines.

mod britton;
mod engine;
mod genset;
mod parse;

pub use britton::{BaumslagSolitar, BrittonForm, StableSign, Syllable};
pub use engine::{Element, Engine, FreeAbelian, FreeGroup, Perm, PermutationGroup, PermutationGroupError, WordProblem};
pub use genset::{GenSet, GenSetError};
pub use parse::{ParseError, ParseErrorKind, PresentationFile};

use std::fmt;

/// A generator raised to a nonzero power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i64,
}

impl Letter {
    pub fn new(generator: usize, exponent: i64) -> Self {
        assert!(exponent != 0, "letter exponent must be nonzero");
        Letter { generator, exponent }
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            exponent: -self.exponent,
        }
    }
}

/// A finite sequence of letters. The empty word is the identity.
///
/// Words are not reduced automatically; [`Word::free_reduce`] and the
/// constructors that mention reduction produce the freely reduced form, in
/// which no two adjacent letters share a generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Raw word, kept exactly as given.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.exponent != 0));
        Word { letters }
    }

    /// Freely reduced word from an arbitrary letter sequence.
    pub fn reduced<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push_reduced(l);
        }
        w
    }

    /// `generator^exponent`, or the identity for exponent 0.
    pub fn power(generator: usize, exponent: i64) -> Self {
        if exponent == 0 {
            Word::identity()
        } else {
            Word {
                letters: vec![Letter::new(generator, exponent)],
            }
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters (syllables).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Length counted in unit letters, the sum of absolute exponents.
    pub fn unit_length(&self) -> u64 {
        self.letters.iter().map(|l| l.exponent.unsigned_abs()).sum()
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| p[0].generator != p[1].generator)
    }

    pub fn free_reduce(&self) -> Word {
        Word::reduced(self.letters.iter().copied())
    }

    /// Appends a letter, merging or cancelling against the last one.
    pub fn push_reduced(&mut self, letter: Letter) {
        match self.letters.last_mut() {
            Some(last) if last.generator == letter.generator => {
                let e = last
                    .exponent
                    .checked_add(letter.exponent)
                    .expect("word exponent overflow");
                if e == 0 {
                    self.letters.pop();
                } else {
                    last.exponent = e;
                }
            }
            _ => self.letters.push(letter),
        }
    }

    /// Exact reversal with negated exponents.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Freely reduced concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.free_reduce();
        for &l in &other.letters {
            w.push_reduced(l);
        }
        w
    }

    /// Expands into unit letters `(generator, ±1)`.
    pub fn unit_letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.letters.iter().flat_map(|l| {
            let sign = l.exponent.signum();
            (0..l.exponent.unsigned_abs()).map(move |_| (l.generator, sign))
        })
    }

    /// Exponent sum of each generator, indexed by generator.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut sums = vec![0i64; rank];
        for l in &self.letters {
            sums[l.generator] += l.exponent;
        }
        sums
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word::reduced(iter)
    }
}

/// Distinct generator symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(symbols: I) -> Result<Self, ParseError> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for (i, s) in symbols.iter().enumerate() {
            if !parse::is_symbol(s) {
                return Err(ParseError::new(0, ParseErrorKind::InvalidSymbol(s.clone())));
            }
            if symbols[..i].contains(s) {
                return Err(ParseError::new(0, ParseErrorKind::DuplicateSymbol(s.clone())));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// `x`, `x y`, `x y z`, then `x1 … xd` beyond three generators.
    pub fn standard(rank: usize) -> Self {
        let symbols = match rank {
            0..=3 => ["x", "y", "z"][..rank].iter().map(|s| s.to_string()).collect(),
            _ => (1..=rank).map(|i| format!("x{i}")).collect(),
        };
        Alphabet { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    pub fn symbol(&self, generator: usize) -> &str {
        &self.symbols[generator]
    }

    /// Parses and freely reduces a word in the `name` / `name^int` grammar.
    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        parse::parse_word(text, self)
    }

    /// Renders a word in the same grammar `parse_word` accepts.
    pub fn render(&self, w: &Word) -> String {
        WordDisplay {
            alphabet: self,
            word: w,
        }
        .to_string()
    }

    pub fn display<'a>(&'a self, w: &'a Word) -> WordDisplay<'a> {
        WordDisplay {
            alphabet: self,
            word: w,
        }
    }
}

pub struct WordDisplay<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.symbol(l.generator))?;
            if l.exponent != 1 {
                write!(f, "^{}", l.exponent)?;
            }
        }
        Ok(())
    }
}

/// A finitely presented group: generators plus relator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("relator {0} is trivial after free reduction")]
    TrivialRelator(usize),
    #[error("relator {0} uses a generator outside the alphabet")]
    ForeignGenerator(usize),
}

impl Presentation {
    /// Relators are freely reduced on the way in.
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut reduced = Vec::with_capacity(relators.len());
        for (i, r) in relators.iter().enumerate() {
            let r = r.free_reduce();
            if r.is_empty() {
                return Err(PresentationError::TrivialRelator(i));
            }
            if r.letters().iter().any(|l| l.generator >= alphabet.len()) {
                return Err(PresentationError::ForeignGenerator(i));
            }
            reduced.push(r);
        }
        Ok(Presentation {
            alphabet,
            relators: reduced,
        })
    }

    pub fn free(alphabet: Alphabet) -> Self {
        Presentation {
            alphabet,
            relators: Vec::new(),
        }
    }

    /// `⟨a, b | a b^m a^-1 b^-n⟩`.
    pub fn baumslag_solitar(m: u32, n: u32) -> Self {
        let alphabet = Alphabet::new(["a", "b"]).unwrap();
        let rel = Word::from_letters(vec![
            Letter::new(0, 1),
            Letter::new(1, m as i64),
            Letter::new(0, -1),
            Letter::new(1, -(n as i64)),
        ]);
        Presentation::new(alphabet, vec![rel]).unwrap()
    }

    /// Commutators of every generator pair.
    pub fn free_abelian(rank: usize) -> Self {
        let alphabet = Alphabet::standard(rank);
        let mut relators = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                relators.push(Word::from_letters(vec![
                    Letter::new(i, 1),
                    Letter::new(j, 1),
                    Letter::new(i, -1),
                    Letter::new(j, -1),
                ]));
            }
        }
        Presentation::new(alphabet, relators).unwrap()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    /// Recognizes the single relator `a b^m a^-1 b^-n` (either generator order).
    pub fn baumslag_solitar_params(&self) -> Option<(usize, usize, u32, u32)> {
        if self.rank() != 2 || self.relators.len() != 1 {
            return None;
        }
        let l = self.relators[0].letters();
        if l.len() != 4 {
            return None;
        }
        let (t, b) = (l[0].generator, l[1].generator);
        let shape = t != b
            && l[0].exponent == 1
            && l[2].generator == t
            && l[2].exponent == -1
            && l[3].generator == b
            && l[1].exponent > 0
            && l[3].exponent < 0;
        if !shape {
            return None;
        }
        let m = u32::try_from(l[1].exponent).ok()?;
        let n = u32::try_from(-l[3].exponent).ok()?;
        Some((t, b, m, n))
    }
}

/// The generating set used for the counterexample over `BS(m, n)`,
/// in the order `a, b, a^-1, b^-1, a^2, a^-2, ab, b^-1 a^-1, b^4, b^-4`.
pub fn bs_generating_set() -> Vec<Word> {
    let a = |e| Letter::new(0, e);
    let b = |e| Letter::new(1, e);
    vec![
        Word::from_letters(vec![a(1)]),
        Word::from_letters(vec![b(1)]),
        Word::from_letters(vec![a(-1)]),
        Word::from_letters(vec![b(-1)]),
        Word::from_letters(vec![a(2)]),
        Word::from_letters(vec![a(-2)]),
        Word::from_letters(vec![a(1), b(1)]),
        Word::from_letters(vec![b(-1), a(-1)]),
        Word::from_letters(vec![b(4)]),
        Word::from_letters(vec![b(-4)]),
    ]
}

/// All generators followed by all their inverses.
pub fn standard_generating_set(rank: usize) -> Vec<Word> {
    (0..rank)
        .map(|g| Word::power(g, 1))
        .chain((0..rank).map(|g| Word::power(g, -1)))
        .collect()
}
