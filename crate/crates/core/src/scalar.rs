//! The coefficient field.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, NumAssign};

/// Coefficient type for linear combinations and polynomials.
///
/// Must behave like a field of characteristic zero: the operator on the free
/// algebra divides by positive integers. Exact types (rationals) satisfy every
/// identity exactly; floating-point types only approximately.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + NumAssign
    + Neg<Output = Self>
    + FromPrimitive
    + Send
    + Sync
{
    /// The integer `n` viewed as a scalar.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("integer fits in scalar type")
    }

    /// Parses an unsigned integer literal or a `p/q` fraction.
    fn parse_literal(text: &str) -> Option<Self> {
        let (numer, denom) = match text.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (text, None),
        };
        let numer = parse_digits::<Self>(numer)?;
        match denom {
            None => Some(numer),
            Some(q) => {
                let q = parse_digits::<Self>(q)?;
                if q.is_zero() {
                    return None;
                }
                Some(numer / q)
            }
        }
    }
}

fn parse_digits<S: Scalar>(digits: &str) -> Option<S> {
    if digits.is_empty() {
        return None;
    }
    let ten = S::from_u32(10)?;
    digits.chars().try_fold(S::zero(), |acc, c| {
        let d = S::from_u32(c.to_digit(10)?)?;
        Some(acc * ten.clone() + d)
    })
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + PartialOrd
        + Debug
        + Display
        + NumAssign
        + Neg<Output = T>
        + FromPrimitive
        + Send
        + Sync
{
}
