//! Concrete Reynolds algebras and maps out of the free one.
//!
//! A model is an associative unital algebra over a [`Scalar`] field with a
//! linear operator `Q` satisfying the identity of some weight `lambda`:
//!
//! ```text
//! Q(u)Q(v) = Q(uQ(v)) + Q(Q(u)v) + lambda Q(Q(u)Q(v))
//! ```
//!
//! Plain Reynolds operators have weight `-1`. Models are never trusted: the
//! polynomial constructors check the identity on a grid of monomials, and
//! the checkers here report per-sample outcomes.

mod binomial;
mod polynomial;
mod universal;

pub use binomial::{binomial_identity_check, binomial_identity_special};
pub use polynomial::{Polynomial, PolynomialModel, PolynomialOperator};
pub use universal::{universal_map, universal_map_word};

use std::fmt::Debug;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Scalar;

/// Monomial degrees checked by [`averaging_model`] and [`differential_model`].
pub const DEFAULT_VERIFY_DEGREE: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("identity of weight {weight} fails for sample pair ({left}, {right})")]
    VerificationFailed {
        weight: String,
        left: usize,
        right: usize,
    },
    #[error("letter `{0}` has no assigned image")]
    UnassignedLetter(String),
    #[error("{0} is not a Reynolds word")]
    NotReynolds(String),
    #[error("binomial identity needs p >= 1 and 1 <= r <= q, got p={p}, q={q}, r={r}")]
    BinomialRange { p: u64, q: u64, r: u64 },
    #[error("polynomial syntax error at position {position}: {message}")]
    PolynomialSyntax { position: usize, message: String },
}

/// A Reynolds algebra of some weight, given by its operations.
pub trait ReynoldsModel {
    type Scalar: Scalar;
    type Element: Clone + PartialEq + Debug;

    /// The weight `lambda` the operator is declared to satisfy.
    fn weight(&self) -> Self::Scalar;
    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn scale(&self, c: &Self::Scalar, a: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn operator(&self, a: &Self::Element) -> Self::Element;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.scale(&-Self::Scalar::one(), b))
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        *a == self.zero()
    }
}

/// `k[x]` with `x^n -> x^n/(n+1)`, checked up to [`DEFAULT_VERIFY_DEGREE`].
pub fn averaging_model() -> Result<PolynomialModel<crate::Rational>, ModelError> {
    PolynomialModel::verified(PolynomialOperator::Averaging, DEFAULT_VERIFY_DEGREE)
}

/// `k[x]` with `f -> sum (-1)^n f^(n)`, checked up to [`DEFAULT_VERIFY_DEGREE`].
pub fn differential_model() -> Result<PolynomialModel<crate::Rational>, ModelError> {
    PolynomialModel::verified(PolynomialOperator::Differential, DEFAULT_VERIFY_DEGREE)
}

/// `Q(u)Q(v) - Q(uQ(v)) - Q(Q(u)v) - lambda Q(Q(u)Q(v))`.
pub fn weighted_residual<M: ReynoldsModel>(
    model: &M,
    lambda: &M::Scalar,
    u: &M::Element,
    v: &M::Element,
) -> M::Element {
    weighted_residual_by(model, |e| model.operator(e), lambda, u, v)
}

/// As [`weighted_residual`] but for an arbitrary operator on the carrier.
pub fn weighted_residual_by<M, F>(
    model: &M,
    op: F,
    lambda: &M::Scalar,
    u: &M::Element,
    v: &M::Element,
) -> M::Element
where
    M: ReynoldsModel,
    F: Fn(&M::Element) -> M::Element,
{
    let qu = op(u);
    let qv = op(v);
    let qu_qv = model.mul(&qu, &qv);
    let mut out = qu_qv.clone();
    out = model.sub(&out, &op(&model.mul(u, &qv)));
    out = model.sub(&out, &op(&model.mul(&qu, v)));
    model.sub(&out, &model.scale(lambda, &op(&qu_qv)))
}

/// Checks the declared-weight identity on every ordered pair of samples.
pub fn verify_on<M: ReynoldsModel>(model: &M, samples: &[M::Element]) -> Result<(), ModelError> {
    let lambda = model.weight();
    for (i, u) in samples.iter().enumerate() {
        for (j, v) in samples.iter().enumerate() {
            if !model.is_zero(&weighted_residual(model, &lambda, u, v)) {
                return Err(ModelError::VerificationFailed {
                    weight: lambda.to_string(),
                    left: i,
                    right: j,
                });
            }
        }
    }
    Ok(())
}

/// A model with operator `factor * Q`. If `Q` has weight `lambda` then
/// `c Q` has weight `lambda / c`; the zero operator satisfies every weight.
#[derive(Debug, Clone)]
pub struct ScaledModel<M: ReynoldsModel> {
    inner: M,
    factor: M::Scalar,
    weight: M::Scalar,
}

impl<M: ReynoldsModel> ScaledModel<M> {
    /// `factor * Q` with weight `lambda / factor`. `None` when `factor` is zero.
    pub fn new(inner: M, factor: M::Scalar) -> Option<Self> {
        if factor.is_zero() {
            return None;
        }
        let weight = inner.weight() / factor.clone();
        Some(Self {
            inner,
            factor,
            weight,
        })
    }

    /// Rescales `Q` so that the result has weight `target`. A zero target
    /// yields the zero operator unless `Q` already has weight zero.
    pub fn with_weight(inner: M, target: M::Scalar) -> Self {
        let lambda = inner.weight();
        let factor = match (target.is_zero(), lambda.is_zero()) {
            (true, true) => M::Scalar::one(),
            (true, false) => M::Scalar::zero(),
            (false, _) => lambda / target.clone(),
        };
        Self {
            inner,
            factor,
            weight: target,
        }
    }

    pub fn factor(&self) -> &M::Scalar {
        &self.factor
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: ReynoldsModel> ReynoldsModel for ScaledModel<M> {
    type Scalar = M::Scalar;
    type Element = M::Element;

    fn weight(&self) -> M::Scalar {
        self.weight.clone()
    }
    fn zero(&self) -> M::Element {
        self.inner.zero()
    }
    fn one(&self) -> M::Element {
        self.inner.one()
    }
    fn add(&self, a: &M::Element, b: &M::Element) -> M::Element {
        self.inner.add(a, b)
    }
    fn scale(&self, c: &M::Scalar, a: &M::Element) -> M::Element {
        self.inner.scale(c, a)
    }
    fn mul(&self, a: &M::Element, b: &M::Element) -> M::Element {
        self.inner.mul(a, b)
    }
    fn operator(&self, a: &M::Element) -> M::Element {
        if self.factor.is_zero() {
            return self.inner.zero();
        }
        self.inner.scale(&self.factor, &self.inner.operator(a))
    }
}

/// Outcome of [`weight_transform_check`]: sample index pairs that failed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransformReport {
    pub pairs_checked: usize,
    /// `lambda Q` at weight 1.
    pub scaled_failures: Vec<(usize, usize)>,
    /// `-Q` at weight `-lambda`.
    pub negated_failures: Vec<(usize, usize)>,
}

impl TransformReport {
    pub fn passed(&self) -> bool {
        self.scaled_failures.is_empty() && self.negated_failures.is_empty()
    }
}

/// For `Q` of weight `lambda`, checks that `lambda Q` has weight 1 and `-Q`
/// has weight `-lambda` on every ordered pair of samples.
pub fn weight_transform_check<M: ReynoldsModel>(
    model: &M,
    lambda: &M::Scalar,
    samples: &[M::Element],
) -> TransformReport {
    let one = M::Scalar::one();
    let neg_lambda = -lambda.clone();
    let scaled = |e: &M::Element| model.scale(lambda, &model.operator(e));
    let negated = |e: &M::Element| model.scale(&-one.clone(), &model.operator(e));
    let mut report = TransformReport::default();
    for (i, u) in samples.iter().enumerate() {
        for (j, v) in samples.iter().enumerate() {
            report.pairs_checked += 1;
            if !model.is_zero(&weighted_residual_by(model, scaled, &one, u, v)) {
                report.scaled_failures.push((i, j));
            }
            if !model.is_zero(&weighted_residual_by(model, negated, &neg_lambda, u, v)) {
                report.negated_failures.push((i, j));
            }
        }
    }
    report
}

/// `u Q(v) + Q(u) v + lambda Q(u) Q(v)`.
pub fn star_product<M: ReynoldsModel>(
    model: &M,
    lambda: &M::Scalar,
    u: &M::Element,
    v: &M::Element,
) -> M::Element {
    let qu = model.operator(u);
    let qv = model.operator(v);
    let out = model.add(&model.mul(u, &qv), &model.mul(&qu, v));
    model.add(&out, &model.scale(lambda, &model.mul(&qu, &qv)))
}

/// Per-property failures of [`star_checks`], as indices into the triples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StarReport {
    pub triples_checked: usize,
    /// `Q(u)Q(v) = Q(u * v)`
    pub product_failures: Vec<usize>,
    /// `(u * v) * w = u * (v * w)`
    pub associativity_failures: Vec<usize>,
    /// `(E, *, Q)` satisfies the weight-`lambda` identity.
    pub replicated_identity_failures: Vec<usize>,
    /// `Q` is multiplicative from `(E, *)` to `(E, .)`, including on triple products.
    pub homomorphism_failures: Vec<usize>,
}

impl StarReport {
    pub fn passed(&self) -> bool {
        self.product_failures.is_empty()
            && self.associativity_failures.is_empty()
            && self.replicated_identity_failures.is_empty()
            && self.homomorphism_failures.is_empty()
    }
}

/// Checks the replicated structure of a weight-`lambda` model on each triple.
pub fn star_checks<M: ReynoldsModel>(
    model: &M,
    lambda: &M::Scalar,
    triples: &[(M::Element, M::Element, M::Element)],
) -> StarReport {
    let star = |a: &M::Element, b: &M::Element| star_product(model, lambda, a, b);
    let q = |a: &M::Element| model.operator(a);
    let mut report = StarReport::default();
    for (idx, (u, v, w)) in triples.iter().enumerate() {
        report.triples_checked += 1;
        let uv = star(u, v);
        let q_uv = q(&uv);
        let qu_qv = model.mul(&q(u), &q(v));
        if q_uv != qu_qv {
            report.product_failures.push(idx);
        }

        let left = star(&uv, w);
        let right = star(u, &star(v, w));
        if left != right {
            report.associativity_failures.push(idx);
        }

        // Q(u) * Q(v) = Q(u * Q(v)) + Q(Q(u) * v) + lambda Q(Q(u) * Q(v))
        let (qu, qv) = (q(u), q(v));
        let lhs = star(&qu, &qv);
        let mut rhs = model.add(&q(&star(u, &qv)), &q(&star(&qu, v)));
        rhs = model.add(&rhs, &model.scale(lambda, &q(&star(&qu, &qv))));
        if lhs != rhs {
            report.replicated_identity_failures.push(idx);
        }

        let q_triple = q(&left);
        let product3 = model.mul(&qu_qv, &q(w));
        let q_vw = q(&star(v, w));
        if q_uv != qu_qv || q_triple != product3 || q_vw != model.mul(&q(v), &q(w)) {
            report.homomorphism_failures.push(idx);
        }
    }
    report
}
