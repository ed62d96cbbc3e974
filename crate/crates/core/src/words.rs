//! Bracketed words: the free operated monoid on a set of letters.
//!
//! A [`Word`] is a finite sequence of [`Atom`]s, each either a letter or a
//! bracket around another word. The atom sequence is exactly the standard
//! decomposition, so structural equality is equality in the monoid.
//!
//! Text syntax: letters match `[A-Za-z][A-Za-z0-9_]*` (except the reserved
//! name `sigma`), brackets are `[` and `]`, whitespace separates atoms and the
//! token `1` denotes the empty word. The canonical rendering joins atoms with
//! single spaces, writes an empty bracket as `[]` and the empty word as `1`.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

/// Name reserved for the internal vertex decoration of forests.
pub const RESERVED_LETTER: &str = "sigma";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unclosed bracket")]
    UnclosedBracket,
    #[error("unmatched ']'")]
    UnmatchedClose,
    #[error("letter name `sigma` is reserved")]
    ReservedLetter,
    #[error("unexpected {0}")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("invalid number {0:?}")]
    InvalidNumber(String),
}

/// Syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn new(position: usize, kind: ParseErrorKind) -> Self {
        Self { position, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter name {0:?}")]
    InvalidLetter(String),
    #[error("the empty word has no standard decomposition")]
    IdentityHasNoDecomposition,
    #[error("{0} is not a product of two or more bracketed Reynolds words")]
    NotDoublePrime(String),
}

/// A generator of the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(name: &str) -> Result<Self, WordError> {
        if is_identifier(name) && name != RESERVED_LETTER {
            Ok(Self(Arc::from(name)))
        } else {
            Err(WordError::InvalidLetter(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Letter {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Letter::new(s)
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// One factor of the standard decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Letter(Letter),
    Bracket(Word),
}

impl Atom {
    pub fn size(&self) -> usize {
        match self {
            Atom::Letter(_) => 1,
            Atom::Bracket(inner) => inner.size() + 1,
        }
    }

    pub fn as_bracket(&self) -> Option<&Word> {
        match self {
            Atom::Bracket(inner) => Some(inner),
            Atom::Letter(_) => None,
        }
    }

    pub fn is_bracket(&self) -> bool {
        matches!(self, Atom::Bracket(_))
    }
}

/// Which part of the Reynolds basis a word belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordClass {
    /// Reynolds word that is not a product of two or more brackets.
    RPrime,
    /// Reynolds word that is a product of two or more brackets.
    RDoublePrime,
    NotReynolds,
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordClass::RPrime => "RPrime",
            WordClass::RDoublePrime => "RDoublePrime",
            WordClass::NotReynolds => "NotReynolds",
        })
    }
}

/// One factor `[core]` nested `height` times.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TowerFactor {
    pub core: Word,
    pub height: usize,
}

/// A product of bracket towers `[r1]^(n1) ... [rm]^(nm)` where no core is
/// itself a single bracket.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TowerFactorization {
    pub factors: Vec<TowerFactor>,
}

impl TowerFactorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of the tower heights.
    pub fn total_height(&self) -> usize {
        self.factors.iter().map(|f| f.height).sum()
    }

    pub fn reassemble(&self) -> Word {
        Word::from_atoms(
            self.factors
                .iter()
                .map(|f| Atom::Bracket(f.core.nested(f.height - 1)))
                .collect(),
        )
    }
}

/// An element of the free operated monoid.
///
/// Atoms are shared, so cloning a word is cheap regardless of its nesting.
/// A hash of the whole tree is computed once at construction; nested words
/// contribute their stored hash, which keeps hashing and most inequality
/// tests shallow.
#[derive(Clone)]
pub struct Word {
    atoms: Arc<[Atom]>,
    fingerprint: u64,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && (Arc::ptr_eq(&self.atoms, &other.atoms) || self.atoms == other.atoms)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.fingerprint);
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Word").field(&self.to_string()).finish()
    }
}

impl Default for Word {
    fn default() -> Self {
        Self::from_atoms(Vec::new())
    }
}

impl Word {
    /// The monoid identity.
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_atoms(atoms: Vec<Atom>) -> Self {
        // DefaultHasher::new() uses fixed keys, so fingerprints are stable.
        let mut hasher = DefaultHasher::new();
        atoms.hash(&mut hasher);
        Self {
            fingerprint: hasher.finish(),
            atoms: Arc::from(atoms),
        }
    }

    pub fn from_letter(letter: Letter) -> Self {
        Self::from_atoms(vec![Atom::Letter(letter)])
    }

    /// The one-atom word `[inner]`.
    pub fn bracket(inner: Word) -> Self {
        Self::from_atoms(vec![Atom::Bracket(inner)])
    }

    /// Wraps `self` in `levels` brackets.
    pub fn nested(&self, levels: usize) -> Word {
        (0..levels).fold(self.clone(), |w, _| Word::bracket(w))
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let tokens = tokenize(text)?;
        let mut cursor = TokenCursor::new(&tokens, text.len());
        let word = cursor.word()?;
        match cursor.peek() {
            None => Ok(word),
            Some(tok) => Err(ParseError::new(
                tok.position,
                match tok.kind {
                    TokenKind::RBracket => ParseErrorKind::UnmatchedClose,
                    _ => ParseErrorKind::UnexpectedToken(tok.describe()),
                },
            )),
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn into_atoms(self) -> Vec<Atom> {
        self.atoms.to_vec()
    }

    pub fn is_identity(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Number of atoms at the top level.
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut atoms = Vec::with_capacity(self.atoms.len() + other.atoms.len());
        atoms.extend_from_slice(&self.atoms);
        atoms.extend_from_slice(&other.atoms);
        Word::from_atoms(atoms)
    }

    /// Letter occurrences plus bracket pairs, at every nesting level.
    pub fn size(&self) -> usize {
        self.atoms.iter().map(Atom::size).sum()
    }

    /// Maximal bracket nesting depth.
    pub fn depth(&self) -> usize {
        self.atoms
            .iter()
            .map(|a| match a {
                Atom::Letter(_) => 0,
                Atom::Bracket(inner) => inner.depth() + 1,
            })
            .max()
            .unwrap_or(0)
    }

    /// The standard decomposition; undefined for the identity.
    pub fn standard_decomposition(&self) -> Result<&[Atom], WordError> {
        if self.atoms.is_empty() {
            Err(WordError::IdentityHasNoDecomposition)
        } else {
            Ok(&self.atoms)
        }
    }

    /// Returns the inner word if `self` is exactly one bracket atom.
    pub fn as_single_bracket(&self) -> Option<&Word> {
        match &self.atoms[..] {
            [Atom::Bracket(inner)] => Some(inner),
            _ => None,
        }
    }

    /// Two or more atoms, all of them brackets.
    pub fn is_bracket_product(&self) -> bool {
        self.atoms.len() >= 2 && self.atoms.iter().all(Atom::is_bracket)
    }

    /// No bracket anywhere directly encloses a product of two or more brackets.
    pub fn is_reynolds(&self) -> bool {
        self.atoms.iter().all(|a| match a {
            Atom::Letter(_) => true,
            Atom::Bracket(inner) => !inner.is_bracket_product() && inner.is_reynolds(),
        })
    }

    pub fn classify(&self) -> WordClass {
        if !self.is_reynolds() {
            WordClass::NotReynolds
        } else if self.is_bracket_product() {
            WordClass::RDoublePrime
        } else {
            WordClass::RPrime
        }
    }

    /// Unique factorization of an `RDoublePrime` word into bracket towers,
    /// peeling as many brackets as possible from each factor.
    pub fn tower_factorization(&self) -> Result<TowerFactorization, WordError> {
        if self.classify() != WordClass::RDoublePrime {
            return Err(WordError::NotDoublePrime(self.to_string()));
        }
        Ok(self.tower_factorization_unchecked())
    }

    /// Factorization of a word known to be a product of at least two brackets.
    pub(crate) fn tower_factorization_unchecked(&self) -> TowerFactorization {
        let factors = self
            .atoms
            .iter()
            .map(|atom| {
                let mut core = atom.as_bracket().expect("bracket product");
                let mut height = 1;
                while let Some(inner) = core.as_single_bracket() {
                    core = inner;
                    height += 1;
                }
                TowerFactor {
                    core: core.clone(),
                    height,
                }
            })
            .collect();
        TowerFactorization { factors }
    }

    /// Every letter that occurs in the word, at any depth, in order of first
    /// appearance.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<Letter>) {
        for atom in self.atoms.iter() {
            match atom {
                Atom::Letter(l) => {
                    if !out.contains(l) {
                        out.push(l.clone());
                    }
                }
                Atom::Bracket(inner) => inner.collect_letters(out),
            }
        }
    }

    fn write_atoms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match atom {
                Atom::Letter(l) => f.write_str(l.name())?,
                Atom::Bracket(inner) => {
                    f.write_str("[")?;
                    inner.write_atoms(f)?;
                    f.write_str("]")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            f.write_str("1")
        } else {
            self.write_atoms(f)
        }
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl From<Letter> for Word {
    fn from(letter: Letter) -> Self {
        Word::from_letter(letter)
    }
}

// Lexing shared with the linear-combination parser.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokenKind {
    LBracket,
    RBracket,
    Ident(String),
    Number(String),
    Star,
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub position: usize,
}

impl Token {
    pub fn describe(&self) -> String {
        match &self.kind {
            TokenKind::LBracket => "'['".into(),
            TokenKind::RBracket => "']'".into(),
            TokenKind::Ident(s) => format!("letter `{s}`"),
            TokenKind::Number(s) => format!("number `{s}`"),
            TokenKind::Star => "'*'".into(),
            TokenKind::Plus => "'+'".into(),
            TokenKind::Minus => "'-'".into(),
        }
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'[' => {
                i += 1;
                TokenKind::LBracket
            }
            b']' => {
                i += 1;
                TokenKind::RBracket
            }
            b'*' => {
                i += 1;
                TokenKind::Star
            }
            b'+' => {
                i += 1;
                TokenKind::Plus
            }
            b'-' => {
                i += 1;
                TokenKind::Minus
            }
            b'0'..=b'9' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(ParseError::new(
                        start,
                        ParseErrorKind::InvalidNumber(text[start..=i].to_string()),
                    ));
                }
                TokenKind::Number(text[start..i].to_string())
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &text[start..i];
                if name == RESERVED_LETTER {
                    return Err(ParseError::new(start, ParseErrorKind::ReservedLetter));
                }
                TokenKind::Ident(name.to_string())
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::new(start, ParseErrorKind::UnexpectedChar(ch)));
            }
        };
        tokens.push(Token {
            kind,
            position: start,
        });
    }
    Ok(tokens)
}

pub(crate) struct TokenCursor<'a> {
    tokens: &'a [Token],
    index: usize,
    end: usize,
}

impl<'a> TokenCursor<'a> {
    pub fn new(tokens: &'a [Token], end: usize) -> Self {
        Self {
            tokens,
            index: 0,
            end,
        }
    }

    pub fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.index)
    }

    pub fn peek_second(&self) -> Option<&'a Token> {
        self.tokens.get(self.index + 1)
    }

    pub fn advance(&mut self) -> Option<&'a Token> {
        let tok = self.tokens.get(self.index);
        if tok.is_some() {
            self.index += 1;
        }
        tok
    }

    pub fn end_position(&self) -> usize {
        self.end
    }

    pub fn at_word_start(&self) -> bool {
        matches!(
            self.peek().map(|t| &t.kind),
            Some(TokenKind::LBracket) | Some(TokenKind::Ident(_))
        ) || matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Number(n)) if n == "1")
    }

    /// Parses atoms until a token that cannot start an atom.
    pub fn word(&mut self) -> Result<Word, ParseError> {
        let mut atoms = Vec::new();
        while let Some(tok) = self.peek() {
            match &tok.kind {
                TokenKind::Ident(name) => {
                    self.index += 1;
                    atoms.push(Atom::Letter(Letter(Arc::from(name.as_str()))));
                }
                TokenKind::Number(n) if n == "1" => {
                    self.index += 1;
                }
                TokenKind::LBracket => {
                    self.index += 1;
                    let inner = self.word()?;
                    match self.advance() {
                        Some(Token {
                            kind: TokenKind::RBracket,
                            ..
                        }) => atoms.push(Atom::Bracket(inner)),
                        Some(other) => {
                            return Err(ParseError::new(
                                other.position,
                                ParseErrorKind::UnexpectedToken(other.describe()),
                            ))
                        }
                        None => {
                            return Err(ParseError::new(
                                tok.position,
                                ParseErrorKind::UnclosedBracket,
                            ))
                        }
                    }
                }
                _ => break,
            }
        }
        Ok(Word::from_atoms(atoms))
    }
}
