use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::symcore::{Monomial, Polynomial, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("unexpected symbol {0}")]
    UnexpectedSymbol(Symbol),
    #[error("slice {slice} is not homogeneous")]
    NotHomogeneous { slice: i32 },
    #[error("slice {slice} is not symmetric")]
    NotSymmetric { slice: i32 },
    #[error("negative exponent in {0}")]
    Laurent(String),
}

/// `f = Σ_{k,l} γ_{k,l} (xy)^l (x+y)^{d_k - 2l} z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaExpansion {
    /// `(k, l) -> γ_{k,l}`, nonzero entries only.
    pub coeffs: BTreeMap<(i32, i32), BigInt>,
    /// Degree `d_k` of each `z^k` slice in `x, y`.
    pub degrees: BTreeMap<i32, i32>,
}

impl GammaExpansion {
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn get(&self, k: i32, l: i32) -> BigInt {
        self.coeffs.get(&(k, l)).cloned().unwrap_or_default()
    }

    /// The first negative coefficient, if any.
    pub fn first_negative(&self) -> Option<((i32, i32), &BigInt)> {
        self.coeffs.iter().find(|(_, c)| c.is_negative()).map(|(k, c)| (*k, c))
    }
}

/// Expands `f` in the basis `(xy)^l (x+y)^{d-2l}` slice by slice in powers of `z`.
///
/// Each slice must be homogeneous and symmetric in `x, y`. The term with the
/// smallest `x`-degree `l` determines `γ_l`; subtracting its basis element and
/// repeating empties the slice.
pub fn gamma_expand(f: &Polynomial, z: Symbol, (x, y): (Symbol, Symbol)) -> Result<GammaExpansion, BasisError> {
    let mut out = GammaExpansion { coeffs: BTreeMap::new(), degrees: BTreeMap::new() };
    for (m, _) in f.terms() {
        if m.has_negative_exponent() {
            return Err(BasisError::Laurent(f.to_string()));
        }
        if let Some(s) = m.symbols().find(|s| *s != x && *s != y && *s != z) {
            return Err(BasisError::UnexpectedSymbol(s));
        }
    }
    let xy = &Polynomial::var(x) * &Polynomial::var(y);
    let x_plus_y = &Polynomial::var(x) + &Polynomial::var(y);
    for (k, slice) in f.slices(z) {
        let d = slice.homogeneous_degree().ok_or(BasisError::NotHomogeneous { slice: k })? as i32;
        out.degrees.insert(k, d);
        let mut rest = slice;
        while !rest.is_zero() {
            let (l, c) =
                rest.terms().map(|(m, c)| (m.exponent(x), c.clone())).min_by_key(|(e, _)| *e).expect("nonempty");
            if 2 * l > d {
                return Err(BasisError::NotSymmetric { slice: k });
            }
            let basis = &xy.pow(l as u32) * &x_plus_y.pow((d - 2 * l) as u32);
            rest -= &basis.scale(&c);
            out.coeffs.insert((k, l), c);
        }
    }
    Ok(out)
}

/// `f = Σ c_{i,j,k} e1^i e2^j e3^k` in the elementary symmetric polynomials of `x, y, z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EExpansion {
    pub coeffs: BTreeMap<(i32, i32, i32), BigInt>,
}

impl EExpansion {
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn get(&self, i: i32, j: i32, k: i32) -> BigInt {
        self.coeffs.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    pub fn first_negative(&self) -> Option<((i32, i32, i32), &BigInt)> {
        self.coeffs.iter().find(|(_, c)| c.is_negative()).map(|(k, c)| (*k, c))
    }

    /// `Σ c e1^i e2^j e3^k` with the `e`s replaced by the given symbols.
    pub fn to_polynomial(&self, e1: Symbol, e2: Symbol, e3: Symbol) -> Polynomial {
        Polynomial::from_terms(
            self.coeffs.iter().map(|(&(i, j, k), c)| (Monomial::from_pairs([(e1, i), (e2, j), (e3, k)]), c.clone())),
        )
    }
}

/// Expands a symmetric polynomial in `x, y, z` in the elementary basis.
///
/// The lexicographically leading term `c·x^a y^b z^c'` of a symmetric
/// polynomial has `a >= b >= c'`; subtracting `c·e1^{a-b} e2^{b-c'} e3^{c'}`
/// removes it without introducing larger terms. Input that is not symmetric
/// eventually exposes a leading term with `a < b` or `b < c'`.
pub fn e_expand(f: &Polynomial, (x, y, z): (Symbol, Symbol, Symbol)) -> Result<EExpansion, BasisError> {
    for (m, _) in f.terms() {
        if m.has_negative_exponent() {
            return Err(BasisError::Laurent(f.to_string()));
        }
        if let Some(s) = m.symbols().find(|s| *s != x && *s != y && *s != z) {
            return Err(BasisError::UnexpectedSymbol(s));
        }
    }
    let (px, py, pz) = (Polynomial::var(x), Polynomial::var(y), Polynomial::var(z));
    let e1 = &(&px + &py) + &pz;
    let e2 = &(&(&px * &py) + &(&px * &pz)) + &(&py * &pz);
    let e3 = &(&px * &py) * &pz;
    let mut out = EExpansion { coeffs: BTreeMap::new() };
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (a, b, c, coeff) = rest
            .terms()
            .map(|(m, c)| (m.exponent(x), m.exponent(y), m.exponent(z), c.clone()))
            .max_by(|p, q| (p.0, p.1, p.2).cmp(&(q.0, q.1, q.2)))
            .expect("nonempty");
        if a < b || b < c {
            return Err(BasisError::NotSymmetric { slice: 0 });
        }
        let basis = &(&e1.pow((a - b) as u32) * &e2.pow((b - c) as u32)) * &e3.pow(c as u32);
        rest -= &basis.scale(&coeff);
        *out.coeffs.entry((a - b, b - c, c)).or_insert_with(BigInt::zero) += coeff;
    }
    out.coeffs.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// [`e_expand`] applied to each slice in powers of `q`; keys are `(q-power, i, j, k)`.
pub fn e_expand_sliced(
    f: &Polynomial,
    q: Symbol,
    xyz: (Symbol, Symbol, Symbol),
) -> Result<BTreeMap<i32, EExpansion>, BasisError> {
    let mut out = BTreeMap::new();
    for (k, slice) in f.slices(q) {
        let e = e_expand(&slice, xyz).map_err(|err| match err {
            BasisError::NotSymmetric { .. } => BasisError::NotSymmetric { slice: k },
            other => other,
        })?;
        out.insert(k, e);
    }
    Ok(out)
}
