use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AlgebraError;
use crate::scalar::Scalar;
use crate::words::{tokenize, ParseError, ParseErrorKind, TokenCursor, TokenKind, Word};

/// A finite formal sum of bracketed words. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct LinComb<S> {
    terms: HashMap<Word, S>,
}

impl<S> Default for LinComb<S> {
    fn default() -> Self {
        Self {
            terms: HashMap::new(),
        }
    }
}

impl<S: Scalar> LinComb<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The identity word with coefficient one.
    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(word: Word) -> Self {
        Self::monomial(S::one(), word)
    }

    pub fn monomial(coeff: S, word: Word) -> Self {
        let mut out = Self::zero();
        out.add_term(word, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis words with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &Word) -> Option<&S> {
        self.terms.get(word)
    }

    /// Terms in arbitrary order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    /// Terms in canonical order: by word size, then by rendered word.
    pub fn terms(&self) -> Vec<(&Word, &S)> {
        let mut keyed: Vec<(usize, String, &Word, &S)> = self
            .terms
            .iter()
            .map(|(w, c)| (w.size(), w.to_string(), w, c))
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        keyed.into_iter().map(|(_, _, w, c)| (w, c)).collect()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Adds `coeff * word` in place.
    pub fn add_term(&mut self, word: Word, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    /// Adds `coeff * other` in place.
    pub fn add_scaled(&mut self, coeff: &S, other: &LinComb<S>) {
        if coeff.is_zero() {
            return;
        }
        let unit = coeff.is_one();
        for (w, c) in &other.terms {
            let term = if unit {
                c.clone()
            } else {
                coeff.clone() * c.clone()
            };
            self.add_term(w.clone(), term);
        }
    }

    pub fn add(&self, other: &LinComb<S>) -> LinComb<S> {
        let mut out = self.clone();
        out.add_scaled(&S::one(), other);
        out
    }

    pub fn sub(&self, other: &LinComb<S>) -> LinComb<S> {
        let mut out = self.clone();
        out.add_scaled(&-S::one(), other);
        out
    }

    pub fn scale(&self, coeff: &S) -> LinComb<S> {
        if coeff.is_zero() {
            return Self::zero();
        }
        if coeff.is_one() {
            return self.clone();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone() * coeff.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Bilinear extension of concatenation.
    pub fn multiply(&self, other: &LinComb<S>) -> LinComb<S> {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.clone() * b.clone());
            }
        }
        out
    }

    /// Product of several combinations, left to right; the empty product is one.
    pub fn product<'a, I>(factors: I) -> LinComb<S>
    where
        I: IntoIterator<Item = &'a LinComb<S>>,
        S: 'a,
    {
        factors
            .into_iter()
            .fold(Self::one(), |acc, f| acc.multiply(f))
    }

    /// Whether every basis word in the support is a Reynolds word.
    pub fn is_reynolds(&self) -> bool {
        self.terms.keys().all(Word::is_reynolds)
    }

    /// Parses `c1 * <word> + c2 * <word> - ...`. Coefficients are integers or
    /// `p/q`; a term without `*` has coefficient one, and a bare number other
    /// than `1` is a multiple of the identity word.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let tokens = tokenize(text)?;
        let mut cursor = TokenCursor::new(&tokens, text.len());
        let mut out = Self::zero();
        if cursor.peek().is_none() {
            return Err(ParseError::new(0, ParseErrorKind::UnexpectedEnd));
        }
        let mut first = true;
        loop {
            let mut negative = false;
            match cursor.peek().map(|t| &t.kind) {
                Some(TokenKind::Plus) if !first => {
                    cursor.advance();
                }
                Some(TokenKind::Minus) => {
                    cursor.advance();
                    negative = true;
                }
                Some(_) if first => {}
                Some(_) => {
                    let tok = cursor.peek().unwrap();
                    return Err(ParseError::new(
                        tok.position,
                        ParseErrorKind::UnexpectedToken(tok.describe()),
                    ));
                }
                None => break,
            }
            first = false;
            let (coeff, word) = parse_term::<S>(&mut cursor)?;
            out.add_term(word, if negative { -coeff } else { coeff });
        }
        Ok(out)
    }

    pub fn to_json(&self) -> LinCombJson {
        LinCombJson {
            terms: self
                .terms()
                .into_iter()
                .map(|(w, c)| JsonTerm {
                    coeff: c.to_string(),
                    word: w.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &LinCombJson) -> Result<Self, AlgebraError> {
        let mut out = Self::zero();
        for term in &json.terms {
            let (negative, magnitude) = match term.coeff.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.coeff.as_str()),
            };
            let c = S::parse_literal(magnitude)
                .ok_or_else(|| AlgebraError::Format(format!("bad coefficient {:?}", term.coeff)))?;
            let word = Word::parse(&term.word)?;
            out.add_term(word, if negative { -c } else { c });
        }
        Ok(out)
    }
}

fn parse_term<S: Scalar>(cursor: &mut TokenCursor<'_>) -> Result<(S, Word), ParseError> {
    let tok = cursor
        .peek()
        .ok_or_else(|| ParseError::new(cursor.end_position(), ParseErrorKind::UnexpectedEnd))?;
    if let TokenKind::Number(n) = &tok.kind {
        let followed_by_star =
            matches!(cursor.peek_second().map(|t| &t.kind), Some(TokenKind::Star));
        if followed_by_star || n != "1" {
            let coeff = S::parse_literal(n).ok_or_else(|| {
                ParseError::new(tok.position, ParseErrorKind::InvalidNumber(n.clone()))
            })?;
            cursor.advance();
            if !followed_by_star {
                return Ok((coeff, Word::identity()));
            }
            let star = cursor.advance().expect("peeked");
            if !cursor.at_word_start() {
                return Err(match cursor.peek() {
                    Some(t) => {
                        ParseError::new(t.position, ParseErrorKind::UnexpectedToken(t.describe()))
                    }
                    None => ParseError::new(star.position + 1, ParseErrorKind::UnexpectedEnd),
                });
            }
            return Ok((coeff, cursor.word()?));
        }
    }
    if !cursor.at_word_start() {
        return Err(match &tok.kind {
            TokenKind::RBracket => ParseError::new(tok.position, ParseErrorKind::UnmatchedClose),
            _ => ParseError::new(
                tok.position,
                ParseErrorKind::UnexpectedToken(tok.describe()),
            ),
        });
    }
    Ok((S::one(), cursor.word()?))
}

impl<S: Scalar> fmt::Display for LinComb<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (word, coeff)) in self.terms().into_iter().enumerate() {
            let negative = *coeff < S::zero();
            let magnitude = if negative {
                -coeff.clone()
            } else {
                coeff.clone()
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if magnitude.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{magnitude} * {word}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> FromStr for LinComb<S> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LinComb::parse(s)
    }
}

impl<S: Scalar> From<Word> for LinComb<S> {
    fn from(word: Word) -> Self {
        LinComb::from_word(word)
    }
}

impl<S: Scalar> Add for &LinComb<S> {
    type Output = LinComb<S>;
    fn add(self, rhs: Self) -> LinComb<S> {
        LinComb::add(self, rhs)
    }
}

impl<S: Scalar> Sub for &LinComb<S> {
    type Output = LinComb<S>;
    fn sub(self, rhs: Self) -> LinComb<S> {
        LinComb::sub(self, rhs)
    }
}

impl<S: Scalar> Mul for &LinComb<S> {
    type Output = LinComb<S>;
    fn mul(self, rhs: Self) -> LinComb<S> {
        self.multiply(rhs)
    }
}

impl<S: Scalar> Neg for &LinComb<S> {
    type Output = LinComb<S>;
    fn neg(self) -> LinComb<S> {
        self.scale(&-S::one())
    }
}

/// JSON shape: `{"terms": [{"coeff": "p/q", "word": "<word>"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinCombJson {
    pub terms: Vec<JsonTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub word: String,
}
