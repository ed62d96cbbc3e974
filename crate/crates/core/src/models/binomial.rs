//! The binomial sum identity behind the derivation-induced Reynolds operator:
//!
//! ```text
//! C(p+r, r-1) + sum_{j=r}^{q} C(p+j, j) = C(p+q+1, p+1)    (p >= 1, 1 <= r <= q)
//! ```

use num_bigint::BigUint;
use num_integer::binomial;

use super::ModelError;

fn choose(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    binomial(BigUint::from(n), BigUint::from(k))
}

/// Evaluates both sides exactly and reports whether they agree.
pub fn binomial_identity_check(p: u64, q: u64, r: u64) -> Result<bool, ModelError> {
    if p < 1 || r < 1 || r > q {
        return Err(ModelError::BinomialRange { p, q, r });
    }
    let lhs = choose(p + r, r - 1) + (r..=q).map(|j| choose(p + j, j)).sum::<BigUint>();
    Ok(lhs == choose(p + q + 1, p + 1))
}

/// The `r = 1` case written as `sum_{j=0}^{q} C(p+j, j) = C(p+q+1, p+1)`.
pub fn binomial_identity_special(p: u64, q: u64) -> Result<bool, ModelError> {
    if p < 1 || q < 1 {
        return Err(ModelError::BinomialRange { p, q, r: 1 });
    }
    let lhs = (0..=q).map(|j| choose(p + j, j)).sum::<BigUint>();
    Ok(lhs == choose(p + q + 1, p + 1))
}
