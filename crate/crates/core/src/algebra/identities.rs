//! Residual checkers: each returns `LHS - RHS` of an identity, which is the
//! zero combination whenever the identity holds.

use super::operator::lower_tower;
use super::{AlgebraError, LinComb, ReynoldsOperator};
use crate::scalar::Scalar;
use crate::words::{TowerFactorization, Word};

impl<S: Scalar> ReynoldsOperator<S> {
    /// `P(r)P(s) + P(P(r)P(s)) - P(rP(s)) - P(P(r)s)`.
    pub fn reynolds_residual(
        &mut self,
        r: &LinComb<S>,
        s: &LinComb<S>,
    ) -> Result<LinComb<S>, AlgebraError> {
        let pr = self.apply(r)?;
        let ps = self.apply(s)?;
        let pr_ps = pr.multiply(&ps);
        let mut out = pr_ps.clone();
        out.add_scaled(&S::one(), &self.apply_unchecked(&pr_ps));
        out.add_scaled(&-S::one(), &self.apply_unchecked(&r.multiply(&ps)));
        out.add_scaled(&-S::one(), &self.apply_unchecked(&pr.multiply(s)));
        Ok(out)
    }

    /// `(m-1) P(prod P(u_i)) - ( sum_i P(P(u_1)..u_i..P(u_m)) - prod P(u_i) )`.
    pub fn multivariant_residual(&mut self, us: &[LinComb<S>]) -> Result<LinComb<S>, AlgebraError> {
        let m = us.len();
        if m < 2 {
            return Err(AlgebraError::TooFewArguments(m));
        }
        let images = us
            .iter()
            .map(|u| self.apply(u))
            .collect::<Result<Vec<_>, _>>()?;
        let full = LinComb::product(&images);
        let mut out = self.apply_unchecked(&full).scale(&S::from_count(m - 1));
        for i in 0..m {
            let factors = images
                .iter()
                .enumerate()
                .map(|(j, img)| if j == i { &us[j] } else { img });
            let term = LinComb::product(factors);
            out.add_scaled(&-S::one(), &self.apply_unchecked(&term));
        }
        out.add_scaled(&S::one(), &full);
        Ok(out)
    }

    /// `P(u)P(v) - sum_{n=0}^{k} (-1)^n P^{n+1}(u*v) - (-1)^{k+1} P^{k+1}(P(u)P(v))`
    /// with `u*v = uP(v) + P(u)v`.
    pub fn truncated_series_residual(
        &mut self,
        u: &LinComb<S>,
        v: &LinComb<S>,
        k: usize,
    ) -> Result<LinComb<S>, AlgebraError> {
        let pu = self.apply(u)?;
        let pv = self.apply(v)?;
        let pu_pv = pu.multiply(&pv);
        let star = u.multiply(&pv).add(&pu.multiply(v));

        let mut out = pu_pv.clone();
        let mut power = star;
        let mut sign = S::one();
        for _ in 0..=k {
            power = self.apply_unchecked(&power);
            out.add_scaled(&-sign.clone(), &power);
            sign = -sign;
        }
        // sign is now (-1)^{k+1}
        let mut tail = pu_pv;
        for _ in 0..=k {
            tail = self.apply_unchecked(&tail);
        }
        out.add_scaled(&-sign, &tail);
        Ok(out)
    }

    /// `uP(v) + P(u)v - P(u)P(v)`: the replicated product at weight -1.
    pub fn star_product(
        &mut self,
        u: &LinComb<S>,
        v: &LinComb<S>,
    ) -> Result<LinComb<S>, AlgebraError> {
        let pu = self.apply(u)?;
        let pv = self.apply(v)?;
        let mut out = u.multiply(&pv);
        out.add_scaled(&S::one(), &pu.multiply(v));
        out.add_scaled(&-S::one(), &pu.multiply(&pv));
        Ok(out)
    }

    /// For `r` a product of `m` bracket towers:
    /// `m P(rP(s)) - ( sum_i P(r_i* P(s)) - rP(s) + P(rs) )`.
    pub fn splitting_left_residual(
        &mut self,
        r: &Word,
        s: &Word,
    ) -> Result<LinComb<S>, AlgebraError> {
        let factors = towers(r)?;
        let ps = self.apply_word(s)?;
        let r_lc = LinComb::from_word(r.clone());
        let r_ps = r_lc.multiply(&ps);

        let mut out = self
            .apply_unchecked(&r_ps)
            .scale(&S::from_count(factors.len()));
        for (i, f) in factors.factors.iter().enumerate() {
            let lowered = LinComb::from_word(lower_tower(r, &f.core, f.height, i));
            out.add_scaled(&-S::one(), &self.apply_unchecked(&lowered.multiply(&ps)));
        }
        out.add_scaled(&S::one(), &r_ps);
        out.add_scaled(&-S::one(), &self.eval_word(&r.concat(s)));
        Ok(out)
    }

    /// For `s` a product of `m` bracket towers:
    /// `m P(P(r)s) - ( sum_j P(P(r) s_j*) - P(r)s + P(rs) )`.
    pub fn splitting_right_residual(
        &mut self,
        r: &Word,
        s: &Word,
    ) -> Result<LinComb<S>, AlgebraError> {
        let factors = towers(s)?;
        let pr = self.apply_word(r)?;
        let s_lc = LinComb::from_word(s.clone());
        let pr_s = pr.multiply(&s_lc);

        let mut out = self
            .apply_unchecked(&pr_s)
            .scale(&S::from_count(factors.len()));
        for (j, f) in factors.factors.iter().enumerate() {
            let lowered = LinComb::from_word(lower_tower(s, &f.core, f.height, j));
            out.add_scaled(&-S::one(), &self.apply_unchecked(&pr.multiply(&lowered)));
        }
        out.add_scaled(&S::one(), &pr_s);
        out.add_scaled(&-S::one(), &self.eval_word(&r.concat(s)));
        Ok(out)
    }

    fn eval_word(&mut self, w: &Word) -> LinComb<S> {
        self.apply_unchecked(&LinComb::from_word(w.clone()))
    }
}

fn towers(w: &Word) -> Result<TowerFactorization, AlgebraError> {
    if !w.is_reynolds() {
        return Err(AlgebraError::NotReynolds(w.to_string()));
    }
    Ok(w.tower_factorization()?)
}

/// Residual of the Reynolds identity; zero for all inputs.
pub fn reynolds_residual<S: Scalar>(
    r: &LinComb<S>,
    s: &LinComb<S>,
) -> Result<LinComb<S>, AlgebraError> {
    ReynoldsOperator::new().reynolds_residual(r, s)
}

/// Residual of the `m`-variable identity, `m >= 2`.
pub fn multivariant_residual<S: Scalar>(us: &[LinComb<S>]) -> Result<LinComb<S>, AlgebraError> {
    ReynoldsOperator::new().multivariant_residual(us)
}

pub fn truncated_series_residual<S: Scalar>(
    u: &LinComb<S>,
    v: &LinComb<S>,
    k: usize,
) -> Result<LinComb<S>, AlgebraError> {
    ReynoldsOperator::new().truncated_series_residual(u, v, k)
}

pub fn star_product_free<S: Scalar>(
    u: &LinComb<S>,
    v: &LinComb<S>,
) -> Result<LinComb<S>, AlgebraError> {
    ReynoldsOperator::new().star_product(u, v)
}

pub fn splitting_left_residual<S: Scalar>(r: &Word, s: &Word) -> Result<LinComb<S>, AlgebraError> {
    ReynoldsOperator::new().splitting_left_residual(r, s)
}

pub fn splitting_right_residual<S: Scalar>(r: &Word, s: &Word) -> Result<LinComb<S>, AlgebraError> {
    ReynoldsOperator::new().splitting_right_residual(r, s)
}
