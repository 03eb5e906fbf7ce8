//! Normal ordering of `(w·D_G)^n`.
//!
//! The operator `(w·D_G)^n` is kept as a coefficient vector `c_0..c_n` with
//! `(w·D_G)^n = Σ c_k·D_G^k`. `D_G` itself never becomes a ring element; its
//! powers are vector indices. One more factor of `w·D_G` acts by
//!
//! ```text
//! (w·D_G)(c_k·D_G^k) = w·D_G(c_k)·D_G^k + w·c_k·D_G^(k+1)
//! ```
//!
//! so `c'_k = w·(D_G(c_k) + c_{k-1})`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::grammar::Grammar;
use crate::symcore::{Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalFormError {
    #[error("multiplier `{0}` is not a single term")]
    MultiplierNotMonomial(String),
    #[error("c_{k} = {coeff} is not divisible by w^{k}")]
    NotDivisible { k: usize, coeff: String },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NormalForm {
    #[serde(rename = "n")]
    order: usize,
    #[serde(rename = "w")]
    multiplier: Polynomial,
    grammar: Grammar,
    coeffs: Vec<Polynomial>,
}

impl NormalForm {
    /// The identity operator `(w·D_G)^0 = 1`.
    pub fn identity(w: &Polynomial, grammar: &Grammar) -> NormalForm {
        NormalForm { order: 0, multiplier: w.clone(), grammar: grammar.clone(), coeffs: vec![Polynomial::one()] }
    }

    /// Left-multiplies by one more factor of `w·D_G`.
    pub fn step(&self) -> NormalForm {
        let w = &self.multiplier;
        let mut next = Vec::with_capacity(self.coeffs.len() + 1);
        for k in 0..=self.coeffs.len() {
            let mut inner = match self.coeffs.get(k) {
                Some(c) => self.grammar.derive(c),
                None => Polynomial::zero(),
            };
            if k > 0 {
                inner += &self.coeffs[k - 1];
            }
            next.push(w * &inner);
        }
        NormalForm { order: self.order + 1, multiplier: w.clone(), grammar: self.grammar.clone(), coeffs: next }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn multiplier(&self) -> &Polynomial {
        &self.multiplier
    }

    pub fn grammar(&self) -> &Grammar {
        &self.grammar
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// `c_k`, zero beyond the order.
    pub fn coeff(&self, k: usize) -> Polynomial {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Replaces `D_G` by `value`: `Σ c_k·value^k`, by Horner's rule.
    pub fn specialize_d(&self, value: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// `Σ c_k·D_G^k(target)`.
    pub fn apply(&self, target: &Polynomial) -> Polynomial {
        let iterates = self.grammar.derive_iterates(target, self.order);
        self.coeffs.iter().zip(&iterates).map(|(c, d)| c * d).sum()
    }

    /// The factorization `c_k = ξ_k·w^k` for a single-term `w`.
    ///
    /// Induction on `n` shows `w^k | c_k` whenever `w` is a single term, so
    /// `NotDivisible` only guards against a broken invariant.
    pub fn xi_coefficients(&self) -> Result<Vec<Polynomial>, NormalFormError> {
        let (wm, wc) = self
            .multiplier
            .as_monomial()
            .ok_or_else(|| NormalFormError::MultiplierNotMonomial(self.multiplier.to_string()))?;
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut wk = Monomial::one();
        let mut ck = BigInt::from(1);
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut xi = Polynomial::zero();
            for (m, a) in c.terms() {
                let (q, r) = a.div_rem(&ck);
                if !r.is_zero() || !wk.divides(m) {
                    return Err(NormalFormError::NotDivisible { k, coeff: c.to_string() });
                }
                xi.add_term(m.mul(&wk.inverse()), q);
            }
            out.push(xi);
            wk = wk.mul(wm);
            ck *= wc;
        }
        Ok(out)
    }

    /// Whether the `D_G^0` coefficient vanishes.
    pub fn constant_part_vanishes(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// Renders the nonzero coefficients as `D^1: … ; D^2: …`.
    pub fn render_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" ; ")?;
            }
            first = false;
            write!(f, "D^{k}: {c}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Expands `(w·D_G)^n` into normal form.
pub fn normal_order_power(w: &Polynomial, grammar: &Grammar, n: usize) -> NormalForm {
    let mut nf = NormalForm::identity(w, grammar);
    for _ in 0..n {
        nf = nf.step();
    }
    nf
}

/// The normal forms of `(w·D_G)^m` for every `m` in `0..=n`.
pub fn normal_order_powers(w: &Polynomial, grammar: &Grammar, n: usize) -> Vec<NormalForm> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(NormalForm::identity(w, grammar));
    for m in 0..n {
        let next = out[m].step();
        out.push(next);
    }
    out
}

/// Applies `f ↦ w·D_G(f)` to `target`, `n` times. Independent of the normal form.
pub fn apply_directly(w: &Polynomial, grammar: &Grammar, target: &Polynomial, n: usize) -> Polynomial {
    let mut cur = target.clone();
    for _ in 0..n {
        cur = w * &grammar.derive(&cur);
    }
    cur
}
