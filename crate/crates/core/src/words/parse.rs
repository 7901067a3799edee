use super::{Alphabet, Letter, Presentation, PresentationError, Word};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed exponent `{0}`")]
    MalformedExponent(String),
    #[error("invalid generator symbol `{0}`")]
    InvalidSymbol(String),
    #[error("duplicate generator symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("missing `gens` line")]
    MissingGens,
    #[error("repeated `{0}` line")]
    RepeatedDirective(&'static str),
    #[error("{0}")]
    Presentation(PresentationError),
}

/// Parse failure with the byte offset into the parsed text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(offset: usize, kind: ParseErrorKind) -> Self {
        ParseError { offset, kind }
    }

    fn shifted(mut self, by: usize) -> Self {
        self.offset += by;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "byte {}: {}", self.offset, self.kind)
    }
}

impl std::error::Error for ParseError {}

pub(crate) fn is_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut base = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let tok = &tail[..len];
        let at = base + start;
        base = at + len;
        rest = &tail[len..];
        Some((at, tok))
    })
}

pub(crate) fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, ParseError> {
    let mut word = Word::identity();
    for (at, tok) in tokens(text) {
        let (name, exp) = match tok.split_once('^') {
            Some((name, exp)) => (name, Some(exp)),
            None => (tok, None),
        };
        let generator = alphabet
            .index_of(name)
            .ok_or_else(|| ParseError::new(at, ParseErrorKind::UnknownGenerator(name.into())))?;
        let exponent = match exp {
            None => 1,
            Some(e) => {
                let malformed = || ParseError::new(at + name.len() + 1, ParseErrorKind::MalformedExponent(e.into()));
                // i32 range keeps exponent sums of any parsed text inside i64
                let v: i32 = e.parse().map_err(|_| malformed())?;
                if v == 0 {
                    return Err(malformed());
                }
                v as i64
            }
        };
        word.push_reduced(Letter::new(generator, exponent));
    }
    Ok(word)
}

/// Contents of a presentation file: generators, relators, and an
/// optional generating set `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationFile {
    pub presentation: Presentation,
    pub generating_set: Option<Vec<Word>>,
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut alphabet: Option<Alphabet> = None;
        let mut relators = Vec::new();
        let mut genset: Option<Vec<Word>> = None;
        let mut line_start = 0;
        for line in text.split_inclusive('\n') {
            let offset = line_start;
            line_start += line.len();
            let body = line.trim_end_matches(['\n', '\r']);
            let trimmed = body.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let lead = body.len() - trimmed.len();
            let (directive, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
            let rest_at = offset + lead + directive.len() + usize::from(!rest.is_empty());
            match directive {
                "gens" => {
                    if alphabet.is_some() {
                        return Err(ParseError::new(offset, ParseErrorKind::RepeatedDirective("gens")));
                    }
                    let syms: Vec<&str> = tokens(rest).map(|(_, t)| t).collect();
                    alphabet = Some(Alphabet::new(syms).map_err(|e| e.shifted(rest_at))?);
                }
                "rel" => {
                    let a = alphabet
                        .as_ref()
                        .ok_or(ParseError::new(offset, ParseErrorKind::MissingGens))?;
                    relators.push(parse_word(rest, a).map_err(|e| e.shifted(rest_at))?);
                }
                "S" => {
                    if genset.is_some() {
                        return Err(ParseError::new(offset, ParseErrorKind::RepeatedDirective("S")));
                    }
                    let a = alphabet
                        .as_ref()
                        .ok_or(ParseError::new(offset, ParseErrorKind::MissingGens))?;
                    let mut words = Vec::new();
                    let mut at = rest_at;
                    for part in rest.split('|') {
                        words.push(parse_word(part, a).map_err(|e| e.shifted(at))?);
                        at += part.len() + 1;
                    }
                    genset = Some(words);
                }
                other => {
                    return Err(ParseError::new(
                        offset + lead,
                        ParseErrorKind::UnknownDirective(other.into()),
                    ))
                }
            }
        }
        let alphabet = alphabet.ok_or(ParseError::new(0, ParseErrorKind::MissingGens))?;
        let presentation =
            Presentation::new(alphabet, relators).map_err(|e| ParseError::new(0, ParseErrorKind::Presentation(e)))?;
        Ok(PresentationFile {
            presentation,
            generating_set: genset,
        })
    }

    pub fn render(&self) -> String {
        let a = self.presentation.alphabet();
        let mut out = format!("gens {}\n", a.symbols().join(" "));
        for r in self.presentation.relators() {
            out.push_str(&format!("rel {}\n", a.render(r)));
        }
        if let Some(s) = &self.generating_set {
            let parts: Vec<String> = s.iter().map(|w| a.render(w)).collect();
            out.push_str(&format!("S {}\n", parts.join(" | ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn parses_relator_text() {
        let w = ab().parse_word("a b^9 a^-1 b^-10").unwrap();
        let expect: Vec<(usize, i64)> = vec![(0, 1), (1, 9), (0, -1), (1, -10)];
        let got: Vec<(usize, i64)> = w.letters().iter().map(|l| (l.generator, l.exponent)).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn empty_text_is_identity() {
        assert_eq!(ab().parse_word("").unwrap(), Word::identity());
        assert_eq!(ab().parse_word("   \t ").unwrap(), Word::identity());
    }

    #[test]
    fn parse_reduces() {
        let w = ab().parse_word("a a^-1 b").unwrap();
        assert_eq!(w, Word::power(1, 1));
    }

    #[test]
    fn error_offsets() {
        let e = ab().parse_word("a  c").unwrap_err();
        assert_eq!(e.offset, 3);
        assert_eq!(e.kind, ParseErrorKind::UnknownGenerator("c".into()));
        let e = ab().parse_word("a b^x").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(matches!(e.kind, ParseErrorKind::MalformedExponent(_)));
        assert!(ab().parse_word("b^0").is_err());
        assert!(ab().parse_word("b^").is_err());
        assert!(ab().parse_word("b^99999999999").is_err());
    }

    #[test]
    fn presentation_file_round_trip() {
        let text = "# BS(9,10)\ngens a b\nrel a b^9 a^-1 b^-10\n\nS a | b | a^-1 | b^-1 | a^2 | a^-2 | a b | b^-1 a^-1 | b^4 | b^-4\n";
        let f = PresentationFile::parse(text).unwrap();
        assert_eq!(f.presentation.relators().len(), 1);
        assert_eq!(f.generating_set.as_ref().unwrap().len(), 10);
        assert_eq!(f.generating_set.as_ref().unwrap()[6], ab().parse_word("a b").unwrap());
        let again = PresentationFile::parse(&f.render()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn presentation_file_errors() {
        let e = PresentationFile::parse("rel a\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingGens);
        let e = PresentationFile::parse("gens a b\nS a | c\n").unwrap_err();
        // "S a | c": the bad token sits at byte 9 + 6
        assert_eq!(e.offset, 15);
        let e = PresentationFile::parse("gens a a\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DuplicateSymbol("a".into()));
        let e = PresentationFile::parse("gens x\nfoo\n").unwrap_err();
        assert_eq!(e.offset, 7);
    }
}
