use std::collections::HashMap;
use std::sync::Arc;

use super::{AlgebraError, LinComb};
use crate::scalar::Scalar;
use crate::words::{Atom, Word};

/// The operator `P` on the free Reynolds algebra, with a memo table for
/// products of brackets.
///
/// On a Reynolds word `r` that is not a product of two or more brackets,
/// `P(r) = [r]`. On a product of bracket towers
/// `r = [r1]^(n1) ... [rm]^(nm)` it recurses on the total height:
///
/// ```text
/// P(r) = 1/(m-1) * ( sum_i P(r_i*) - r )
/// ```
///
/// where `r_i*` lowers the `i`-th tower by one level.
#[derive(Debug, Clone)]
pub struct ReynoldsOperator<S> {
    memo: HashMap<Word, Arc<LinComb<S>>>,
}

impl<S> Default for ReynoldsOperator<S> {
    fn default() -> Self {
        Self {
            memo: HashMap::new(),
        }
    }
}

impl<S: Scalar> ReynoldsOperator<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized bracket products.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn apply(&mut self, a: &LinComb<S>) -> Result<LinComb<S>, AlgebraError> {
        if let Some(bad) = a.words().find(|w| !w.is_reynolds()) {
            return Err(AlgebraError::NotReynolds(bad.to_string()));
        }
        Ok(self.apply_unchecked(a))
    }

    pub fn apply_word(&mut self, word: &Word) -> Result<LinComb<S>, AlgebraError> {
        if !word.is_reynolds() {
            return Err(AlgebraError::NotReynolds(word.to_string()));
        }
        Ok(LinComb::clone(&self.eval(word)))
    }

    /// `P^k(a)`.
    pub fn apply_power(&mut self, a: &LinComb<S>, k: usize) -> Result<LinComb<S>, AlgebraError> {
        let mut out = a.clone();
        for _ in 0..k {
            out = self.apply(&out)?;
        }
        Ok(out)
    }

    /// Callers guarantee every support word is Reynolds. Everything this
    /// module produces has that property.
    pub(crate) fn apply_unchecked(&mut self, a: &LinComb<S>) -> LinComb<S> {
        let mut out = LinComb::zero();
        for (w, c) in a.iter() {
            let image = self.eval(w);
            out.add_scaled(c, &image);
        }
        out
    }

    fn eval(&mut self, word: &Word) -> Arc<LinComb<S>> {
        if !word.is_bracket_product() {
            return Arc::new(LinComb::from_word(Word::bracket(word.clone())));
        }
        if let Some(hit) = self.memo.get(word) {
            return Arc::clone(hit);
        }

        let factors = word.tower_factorization_unchecked();
        let m = factors.len();
        let mut sum = LinComb::zero();
        for i in 0..m {
            let lowered = lower_tower(word, &factors.factors[i].core, factors.factors[i].height, i);
            let image = self.eval(&lowered);
            sum.add_scaled(&S::one(), &image);
        }
        sum.add_term(word.clone(), -S::one());
        let result = Arc::new(sum.scale(&(S::one() / S::from_count(m - 1))));
        self.memo.insert(word.clone(), Arc::clone(&result));
        result
    }
}

/// Replaces the `i`-th atom `[core]^(height)` of `word` by `[core]^(height-1)`.
/// When the tower disappears the atoms of `core` are spliced in place.
pub(crate) fn lower_tower(word: &Word, core: &Word, height: usize, i: usize) -> Word {
    let atoms = word.atoms();
    let mut out: Vec<Atom> = Vec::with_capacity(atoms.len() + core.len());
    out.extend_from_slice(&atoms[..i]);
    if height > 1 {
        out.push(Atom::Bracket(core.nested(height - 2)));
    } else {
        out.extend_from_slice(core.atoms());
    }
    out.extend_from_slice(&atoms[i + 1..]);
    Word::from_atoms(out)
}

/// Applies `P` with a fresh memo table.
pub fn apply_p<S: Scalar>(a: &LinComb<S>) -> Result<LinComb<S>, AlgebraError> {
    ReynoldsOperator::new().apply(a)
}
