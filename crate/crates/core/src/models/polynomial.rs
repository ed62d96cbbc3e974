use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{ModelError, ReynoldsModel};
use crate::scalar::Scalar;

/// Sparse polynomial in `x`: exponent to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial<S> {
    coeffs: BTreeMap<u32, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0)
    }

    /// `x`
    pub fn x() -> Self {
        Self::monomial(S::one(), 1)
    }

    /// `c * x^n`
    pub fn monomial(c: S, n: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(n, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coefficient(&self, n: u32) -> S {
        self.coeffs.get(&n).cloned().unwrap_or_else(S::zero)
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &S)> {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn add_term(&mut self, n: u32, c: S) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&n) {
            Some(existing) => existing + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(n, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in &other.coeffs {
            out.add_term(*n, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (n, a) in &self.coeffs {
            out.add_term(*n, a.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (n, a) in &self.coeffs {
            for (m, b) in &other.coeffs {
                out.add_term(n + m, a.clone() * b.clone());
            }
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (n, c) in &self.coeffs {
            if *n > 0 {
                out.add_term(n - 1, c.clone() * S::from_count(*n as usize));
            }
        }
        out
    }

    /// Parses sums of terms like `3`, `x`, `1/2*x^3`, `-x^2`.
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        PolyParser::new(text).parse()
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    /// Ascending degree, `c0 + c1*x + c2*x^2`, coefficients always shown.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (n, c)) in self.coeffs.iter().enumerate() {
            let negative = *c < S::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match n {
                0 => write!(f, "{magnitude}")?,
                1 => write!(f, "{magnitude}*x")?,
                _ => write!(f, "{magnitude}*x^{n}")?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> FromStr for Polynomial<S> {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Polynomial::parse(s)
    }
}

struct PolyParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    fn error(&self, message: &str) -> ModelError {
        ModelError::PolynomialSyntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self, allow_slash: bool) -> &'a str {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_digit() || (allow_slash && c == b'/'))
        {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn parse<S: Scalar>(mut self) -> Result<Polynomial<S>, ModelError> {
        let mut out = Polynomial::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                if first {
                    return Err(self.error("empty polynomial"));
                }
                break;
            }
            let negative = if self.eat(b'-') {
                true
            } else if first || self.eat(b'+') {
                false
            } else {
                return Err(self.error("expected '+' or '-'"));
            };
            first = false;
            let (n, c) = self.term::<S>()?;
            out.add_term(n, if negative { -c } else { c });
        }
        Ok(out)
    }

    fn term<S: Scalar>(&mut self) -> Result<(u32, S), ModelError> {
        self.skip_ws();
        let mut coeff = S::one();
        let mut has_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let lit = self.digits(true);
            coeff = S::parse_literal(lit).ok_or_else(|| self.error("bad coefficient"))?;
            has_coeff = true;
            if !self.eat(b'*') {
                self.skip_ws();
                if self.peek() != Some(b'x') {
                    return Ok((0, coeff));
                }
            }
        }
        if !self.eat(b'x') {
            return Err(self.error(if has_coeff {
                "expected x"
            } else {
                "expected a term"
            }));
        }
        if self.eat(b'^') {
            self.skip_ws();
            let exp = self.digits(false);
            let n = exp.parse::<u32>().map_err(|_| self.error("bad exponent"))?;
            return Ok((n, coeff));
        }
        Ok((1, coeff))
    }
}

/// Which Reynolds operator acts on the polynomial algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolynomialOperator {
    /// `x^n -> x^n / (n + 1)`
    Averaging,
    /// `f -> sum_n (-1)^n d^n f` for the derivative `d`.
    Differential,
}

/// `k[x]` with one of the two Reynolds operators above, weight `-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialModel<S> {
    operator: PolynomialOperator,
    _scalar: std::marker::PhantomData<S>,
}

impl<S: Scalar> PolynomialModel<S> {
    /// Constructs the model without checking the identity.
    pub fn unchecked(operator: PolynomialOperator) -> Self {
        Self {
            operator,
            _scalar: std::marker::PhantomData,
        }
    }

    /// Constructs the model and checks the weight `-1` identity on all
    /// monomial pairs up to `max_degree`.
    pub fn verified(operator: PolynomialOperator, max_degree: u32) -> Result<Self, ModelError> {
        let model = Self::unchecked(operator);
        let samples: Vec<_> = (0..=max_degree)
            .map(|n| Polynomial::monomial(S::one(), n))
            .collect();
        super::verify_on(&model, &samples)?;
        Ok(model)
    }

    pub fn kind(&self) -> PolynomialOperator {
        self.operator
    }
}

impl<S: Scalar> ReynoldsModel for PolynomialModel<S> {
    type Scalar = S;
    type Element = Polynomial<S>;

    fn weight(&self) -> S {
        -S::one()
    }

    fn zero(&self) -> Polynomial<S> {
        Polynomial::zero()
    }

    fn one(&self) -> Polynomial<S> {
        Polynomial::one()
    }

    fn add(&self, a: &Polynomial<S>, b: &Polynomial<S>) -> Polynomial<S> {
        a.add(b)
    }

    fn scale(&self, c: &S, a: &Polynomial<S>) -> Polynomial<S> {
        a.scale(c)
    }

    fn mul(&self, a: &Polynomial<S>, b: &Polynomial<S>) -> Polynomial<S> {
        a.mul(b)
    }

    fn operator(&self, a: &Polynomial<S>) -> Polynomial<S> {
        match self.operator {
            PolynomialOperator::Averaging => {
                let mut out = Polynomial::zero();
                for (n, c) in a.terms() {
                    out.add_term(n, c.clone() / S::from_count(n as usize + 1));
                }
                out
            }
            PolynomialOperator::Differential => {
                let mut out = Polynomial::zero();
                let mut d = a.clone();
                let mut sign = S::one();
                while !d.is_zero() {
                    out = out.add(&d.scale(&sign));
                    d = d.derivative();
                    sign = -sign;
                }
                out
            }
        }
    }
}
