//! Britton normal forms for `BS(m, n) = ⟨a, b | a b^m a^-1 = b^n⟩`.
//!
//! An element is `b^t0 a^e1 b^t1 … a^el b^tl`. The form is reduced (no
//! subword `a b^(km) a^-1` or `a^-1 b^(kn) a`) and canonical: every `t_i`
//! with `i ≥ 1` is a coset representative, `0 ≤ t_i < m` after `a` and
//! `0 ≤ t_i < n` after `a^-1`, with the carry pushed to the left through
//! `a b^(qm) = b^(qn) a` and `a^-1 b^(qn) = b^(qm) a^-1`.

use super::{Alphabet, Letter, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StableSign {
    Neg,
    Pos,
}

impl StableSign {
    pub fn exponent(self) -> i64 {
        match self {
            StableSign::Pos => 1,
            StableSign::Neg => -1,
        }
    }

    fn flip(self) -> Self {
        match self {
            StableSign::Pos => StableSign::Neg,
            StableSign::Neg => StableSign::Pos,
        }
    }
}

/// `a^sign b^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub sign: StableSign,
    pub exponent: BigInt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrittonForm {
    pub head: BigInt,
    pub syllables: Vec<Syllable>,
}

impl BrittonForm {
    pub fn identity() -> Self {
        BrittonForm::default()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty() && self.head.is_zero()
    }

    /// Number of stable letters.
    pub fn stable_length(&self) -> usize {
        self.syllables.len()
    }

    /// Spelling over `a` (generator 0) and `b` (generator 1).
    ///
    /// # Panics
    /// If a `b` exponent does not fit in `i64`.
    pub fn to_word(&self) -> Word {
        let big = |t: &BigInt| t.to_i64().expect("b exponent exceeds i64");
        let mut w = Word::identity();
        if !self.head.is_zero() {
            w.push_reduced(Letter::new(1, big(&self.head)));
        }
        for s in &self.syllables {
            w.push_reduced(Letter::new(0, s.sign.exponent()));
            if !s.exponent.is_zero() {
                w.push_reduced(Letter::new(1, big(&s.exponent)));
            }
        }
        w
    }
}

fn b_power(k: &BigInt) -> String {
    if k.is_one() {
        "b".to_string()
    } else {
        format!("b^{k}")
    }
}

impl fmt::Display for BrittonForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.head.is_zero() {
            parts.push(b_power(&self.head));
        }
        for s in &self.syllables {
            parts.push(match s.sign {
                StableSign::Pos => "a".to_string(),
                StableSign::Neg => "a^-1".to_string(),
            });
            if !s.exponent.is_zero() {
                parts.push(b_power(&s.exponent));
            }
        }
        if parts.is_empty() {
            f.write_str("e")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Word-problem engine for `BS(m, n)` on the alphabet `a, b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaumslagSolitar {
    m: u32,
    n: u32,
    m_big: BigInt,
    n_big: BigInt,
    alphabet: Alphabet,
}

impl BaumslagSolitar {
    pub fn new(m: u32, n: u32) -> Self {
        assert!(m >= 1 && n >= 1, "BS(m, n) needs m, n >= 1");
        BaumslagSolitar {
            m,
            n,
            m_big: BigInt::from(m),
            n_big: BigInt::from(n),
            alphabet: Alphabet::new(["a", "b"]).unwrap(),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Canonical form of a word over `a` (generator 0) and `b` (generator 1).
    pub fn normal_form(&self, w: &Word) -> BrittonForm {
        let mut acc = Reducer::new(self, BrittonForm::identity());
        for l in w.letters() {
            match l.generator {
                0 => {
                    let sign = if l.exponent > 0 {
                        StableSign::Pos
                    } else {
                        StableSign::Neg
                    };
                    for _ in 0..l.exponent.unsigned_abs() {
                        acc.push_stable(sign);
                    }
                }
                1 => acc.push_b(&BigInt::from(l.exponent)),
                g => panic!("generator {g} outside the BS alphabet"),
            }
        }
        acc.finish()
    }

    pub fn multiply(&self, x: &BrittonForm, y: &BrittonForm) -> BrittonForm {
        let mut acc = Reducer::new(self, x.clone());
        acc.push_b(&y.head);
        for s in &y.syllables {
            acc.push_stable(s.sign);
            acc.push_b(&s.exponent);
        }
        acc.finish()
    }

    pub fn invert(&self, x: &BrittonForm) -> BrittonForm {
        let mut acc = Reducer::new(self, BrittonForm::identity());
        for s in x.syllables.iter().rev() {
            acc.push_b(&-&s.exponent);
            acc.push_stable(s.sign.flip());
        }
        acc.push_b(&-&x.head);
        acc.finish()
    }

    /// Renormalizes an arbitrary (possibly non-canonical) form.
    pub fn canonicalize(&self, x: &BrittonForm) -> BrittonForm {
        self.multiply(&BrittonForm::identity(), x)
    }
}

/// Reduced but not yet canonical form, built letter by letter.
struct Reducer<'a> {
    group: &'a BaumslagSolitar,
    form: BrittonForm,
}

impl<'a> Reducer<'a> {
    fn new(group: &'a BaumslagSolitar, form: BrittonForm) -> Self {
        Reducer { group, form }
    }

    fn top(&mut self) -> &mut BigInt {
        match self.form.syllables.last_mut() {
            Some(s) => &mut s.exponent,
            None => &mut self.form.head,
        }
    }

    fn push_b(&mut self, k: &BigInt) {
        if !k.is_zero() {
            *self.top() += k;
        }
    }

    fn push_stable(&mut self, sign: StableSign) {
        let g = self.group;
        if let Some(last) = self.form.syllables.last() {
            if last.sign != sign {
                // a b^(km) a^-1 = b^(kn) and a^-1 b^(kn) a = b^(km)
                let (div, mul) = match last.sign {
                    StableSign::Pos => (&g.m_big, &g.n_big),
                    StableSign::Neg => (&g.n_big, &g.m_big),
                };
                let (q, r) = last.exponent.div_rem(div);
                if r.is_zero() {
                    self.form.syllables.pop();
                    let carry = q * mul;
                    self.push_b(&carry);
                    return;
                }
            }
        }
        self.form.syllables.push(Syllable {
            sign,
            exponent: BigInt::zero(),
        });
    }

    fn finish(mut self) -> BrittonForm {
        let g = self.group;
        for i in (0..self.form.syllables.len()).rev() {
            let s = &mut self.form.syllables[i];
            let (div, mul) = match s.sign {
                StableSign::Pos => (&g.m_big, &g.n_big),
                StableSign::Neg => (&g.n_big, &g.m_big),
            };
            let (q, r) = s.exponent.div_mod_floor(div);
            if q.is_zero() {
                continue;
            }
            s.exponent = r;
            let carry = q * mul;
            match i {
                0 => self.form.head += carry,
                _ => self.form.syllables[i - 1].exponent += carry,
            }
        }
        self.form
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str) -> Word {
        Alphabet::new(["a", "b"]).unwrap().parse_word(text).unwrap()
    }

    #[test]
    fn relator_rewrites_to_b_power() {
        let g = BaumslagSolitar::new(9, 10);
        assert_eq!(g.normal_form(&word("a b^9 a^-1")), g.normal_form(&word("b^10")));
        assert!(g.normal_form(&word("a b^9 a^-1 b^-10")).is_identity());
        assert!(g.normal_form(&word("a^-1 b^10 a b^-9")).is_identity());
    }

    #[test]
    fn empty_word_is_identity_form() {
        let g = BaumslagSolitar::new(9, 10);
        assert_eq!(g.normal_form(&Word::identity()), BrittonForm::identity());
    }

    #[test]
    fn commutator_witness_has_four_stable_letters() {
        let g = BaumslagSolitar::new(9, 10);
        let f = g.normal_form(&word("a b a^-1 b a b^-1 a^-1 b^-1"));
        assert!(!f.is_identity());
        assert_eq!(f.stable_length(), 4);
    }

    #[test]
    fn coset_representatives_after_each_stable_letter() {
        let g = BaumslagSolitar::new(2, 3);
        // a b^5 = a b^4 b = b^6 a b
        let f = g.normal_form(&word("a b^5"));
        assert_eq!(f.to_string(), "b^6 a b");
        // a^-1 b^-1 = a^-1 b^-3 b^2 = b^-2 a^-1 b^2
        let f = g.normal_form(&word("a^-1 b^-1"));
        assert_eq!(f.to_string(), "b^-2 a^-1 b^2");
    }

    #[test]
    fn multiply_and_invert() {
        let g = BaumslagSolitar::new(9, 10);
        let x = g.normal_form(&word("a b^9 a^-1"));
        let y = g.normal_form(&word("b^-10"));
        assert!(g.multiply(&x, &y).is_identity());
        let z = g.normal_form(&word("a b a^-1 b^3 a^-1 b^7 a a"));
        assert!(g.multiply(&z, &g.invert(&z)).is_identity());
        assert!(g.multiply(&g.invert(&z), &z).is_identity());
    }

    #[test]
    fn big_exponents_do_not_overflow() {
        let g = BaumslagSolitar::new(1, 2);
        // a^k b a^-k = b^(2^k); k = 80 exceeds 64 bits
        let mut letters = vec![Letter::new(0, 80), Letter::new(1, 1), Letter::new(0, -80)];
        let f = g.normal_form(&Word::from_letters(letters.clone()));
        assert_eq!(f.head, BigInt::from(1u8) << 80);
        assert!(f.syllables.is_empty());
        letters.push(Letter::new(1, 1));
        let f2 = g.normal_form(&Word::from_letters(letters));
        assert_eq!(f2.head, (BigInt::from(1u8) << 80) + 1);
    }
}
