use super::{Alphabet, Word, WordProblem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenSetError {
    #[error("element {0} of S is the identity")]
    IdentityInS(usize),
    #[error("the inverse of element {0} of S is missing")]
    NotSymmetric(usize),
    #[error("elements {0} and {1} of S are equal in the group")]
    DuplicateElements(usize, usize),
    #[error("element {0} of S uses a generator outside the alphabet")]
    ForeignGenerator(usize),
}

/// A symmetric generating set without the identity, kept in input order.
///
/// `inverse[i]` is the index of the element equal to `S[i]^-1`; the map is
/// an involution and may fix indices of involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    elements: Vec<Word>,
    inverse: Vec<usize>,
}

impl GenSet {
    pub fn validate<E: WordProblem>(engine: &E, words: Vec<Word>) -> Result<Self, GenSetError> {
        let rank = engine.alphabet().len();
        let mut values = Vec::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            if w.letters().iter().any(|l| l.generator >= rank) {
                return Err(GenSetError::ForeignGenerator(i));
            }
            let v = engine.evaluate(w);
            if v == engine.identity() {
                return Err(GenSetError::IdentityInS(i));
            }
            if let Some(j) = values.iter().position(|u| *u == v) {
                return Err(GenSetError::DuplicateElements(j, i));
            }
            values.push(v);
        }
        let mut inverse = Vec::with_capacity(words.len());
        for (i, v) in values.iter().enumerate() {
            let inv = engine.inverse(v);
            let j = values
                .iter()
                .position(|u| *u == inv)
                .ok_or(GenSetError::NotSymmetric(i))?;
            inverse.push(j);
        }
        Ok(GenSet {
            elements: words.iter().map(Word::free_reduce).collect(),
            inverse,
        })
    }

    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Word {
        &self.elements[i]
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn inverse_pairing(&self) -> &[usize] {
        &self.inverse
    }

    /// Index of the element equal to `w` in the group, if any.
    pub fn position<E: WordProblem>(&self, engine: &E, w: &Word) -> Option<usize> {
        let v = engine.evaluate(w);
        self.elements.iter().position(|s| engine.evaluate(s) == v)
    }

    pub fn render(&self, alphabet: &Alphabet) -> Vec<String> {
        self.elements.iter().map(|w| alphabet.render(w)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{bs_generating_set, BaumslagSolitar, FreeAbelian, PermutationGroup};

    #[test]
    fn ten_element_set_is_valid_in_bs_9_10() {
        let g = BaumslagSolitar::new(9, 10);
        let s = GenSet::validate(&g, bs_generating_set()).unwrap();
        assert_eq!(s.len(), 10);
        assert_eq!(s.inverse_pairing(), [2, 3, 0, 1, 5, 4, 7, 6, 9, 8]);
    }

    #[test]
    fn identity_rejected() {
        let g = FreeAbelian::of_rank(1);
        let a = g.alphabet().clone();
        let words = ["x", "x^-1", "x x^-1"].map(|t| a.parse_word(t).unwrap()).to_vec();
        assert_eq!(GenSet::validate(&g, words), Err(GenSetError::IdentityInS(2)));
    }

    #[test]
    fn duplicates_rejected() {
        let g = FreeAbelian::of_rank(1);
        let a = g.alphabet().clone();
        let words = ["x^2", "x x", "x^-2"].map(|t| a.parse_word(t).unwrap()).to_vec();
        assert_eq!(GenSet::validate(&g, words), Err(GenSetError::DuplicateElements(0, 1)));
    }

    #[test]
    fn asymmetric_rejected() {
        let g = FreeAbelian::of_rank(2);
        let a = g.alphabet().clone();
        let words = ["x", "x^-1", "y"].map(|t| a.parse_word(t).unwrap()).to_vec();
        assert_eq!(GenSet::validate(&g, words), Err(GenSetError::NotSymmetric(2)));
    }

    #[test]
    fn involutions_pair_with_themselves() {
        // Z_2 generated by one involution
        let g = PermutationGroup::new(Alphabet::standard(1), 2, vec![vec![1, 0]]).unwrap();
        let s = GenSet::validate(&g, vec![Word::power(0, 1)]).unwrap();
        assert_eq!(s.inverse_pairing(), [0]);
    }
}
