//! Truncated power series in `t` whose coefficients are polynomials.
//!
//! Coefficients are polynomials over the rationals, stored as an integer
//! polynomial over a common positive denominator. Every operation is exact
//! through the series order and discards anything beyond it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::symcore::{mono, sym, Monomial, Polynomial};
use crate::triangles::recurrences;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("exp needs a zero constant term")]
    NonzeroConstant,
    #[error("log needs constant term 1")]
    ConstantNotOne,
    #[error("cannot combine a {0} series with a {1} series")]
    KindMismatch(SeriesKind, SeriesKind),
    #[error("coefficient of order {order} is not integral: {value}")]
    NonIntegral { order: usize, value: String },
}

/// A polynomial with rational coefficients, `numer / denom`.
///
/// Kept in lowest terms: `denom > 0` and shares no factor with the content
/// of `numer`. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    numer: Polynomial,
    denom: BigInt,
}

impl RatPoly {
    pub fn zero() -> RatPoly {
        RatPoly { numer: Polynomial::zero(), denom: BigInt::one() }
    }

    pub fn one() -> RatPoly {
        RatPoly::from(Polynomial::one())
    }

    pub fn new(numer: Polynomial, denom: BigInt) -> RatPoly {
        assert!(!denom.is_zero(), "zero denominator");
        let mut g = denom.clone();
        for (_, c) in numer.terms() {
            g = g.gcd(c);
        }
        if denom.is_negative() {
            g = -g;
        }
        if g.is_one() {
            return RatPoly { numer, denom };
        }
        if numer.is_zero() {
            return RatPoly::zero();
        }
        let numer = Polynomial::from_terms(numer.terms().map(|(m, c)| (m.clone(), c / &g)));
        RatPoly { numer, denom: denom / g }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.denom.is_one() && self.numer == Polynomial::one()
    }

    /// The integer polynomial, if the denominator has cleared.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        self.denom.is_one().then(|| self.numer.clone())
    }

    pub fn scale(&self, numer: &BigInt, denom: &BigInt) -> RatPoly {
        RatPoly::new(self.numer.scale(numer), &self.denom * denom)
    }

    pub fn pow(&self, e: u32) -> RatPoly {
        RatPoly::new(self.numer.pow(e), num_traits::pow(self.denom.clone(), e as usize))
    }
}

impl From<Polynomial> for RatPoly {
    fn from(numer: Polynomial) -> RatPoly {
        RatPoly { numer, denom: BigInt::one() }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        if self.denom == rhs.denom {
            return RatPoly::new(&self.numer + &rhs.numer, self.denom.clone());
        }
        let l = self.denom.lcm(&rhs.denom);
        let a = self.numer.scale(&(&l / &self.denom));
        let b = rhs.numer.scale(&(&l / &rhs.denom));
        RatPoly::new(&a + &b, l)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &-rhs
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { numer: -&self.numer, denom: self.denom.clone() }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        RatPoly::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/{}", self.numer, self.denom)
        }
    }
}

/// Exponential (`Σ f_n tⁿ/n!`) or ordinary (`Σ f_n tⁿ`) generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Egf,
    Ogf,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Egf => "egf",
            SeriesKind::Ogf => "ogf",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    kind: SeriesKind,
    coeffs: Vec<RatPoly>,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub(crate) fn binom(n: usize, k: usize) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

impl TruncatedSeries {
    /// The series with the given coefficients, padded with zeros or truncated
    /// to `order + 1` entries.
    pub fn new(kind: SeriesKind, order: usize, coeffs: impl IntoIterator<Item = RatPoly>) -> TruncatedSeries {
        let mut coeffs: Vec<RatPoly> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, RatPoly::zero());
        TruncatedSeries { kind, coeffs }
    }

    pub fn from_polynomials(
        kind: SeriesKind,
        order: usize,
        coeffs: impl IntoIterator<Item = Polynomial>,
    ) -> TruncatedSeries {
        TruncatedSeries::new(kind, order, coeffs.into_iter().map(RatPoly::from))
    }

    pub fn zero(kind: SeriesKind, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(kind, order, [])
    }

    pub fn one(kind: SeriesKind, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(kind, order, [RatPoly::one()])
    }

    /// The series `t`.
    pub fn t(kind: SeriesKind, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(kind, order, [RatPoly::zero(), RatPoly::one()])
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &RatPoly {
        &self.coeffs[n]
    }

    /// All coefficients as integer polynomials, or the first order whose
    /// denominator did not clear.
    pub fn integer_coeffs(&self) -> Result<Vec<Polynomial>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(order, c)| c.to_polynomial().ok_or_else(|| SeriesError::NonIntegral { order, value: c.to_string() }))
            .collect()
    }

    fn check_kind(&self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(SeriesError::KindMismatch(self.kind, other.kind))
        }
    }

    /// Sum, truncated to the smaller order.
    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_kind(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b);
        Ok(TruncatedSeries { kind: self.kind, coeffs: coeffs.collect() })
    }

    /// Product, truncated to the smaller order. EGF coefficients combine with
    /// binomial weights, OGF coefficients by the plain Cauchy product.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_kind(other)?;
        let order = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = RatPoly::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let mut term = a * b;
                if self.kind == SeriesKind::Egf {
                    term = term.scale(&binom(n, k), &BigInt::one());
                }
                acc = &acc + &term;
            }
            coeffs.push(acc);
        }
        Ok(TruncatedSeries { kind: self.kind, coeffs })
    }

    /// Multiplies every coefficient by `c`.
    pub fn mul_coeff(&self, c: &RatPoly) -> TruncatedSeries {
        TruncatedSeries { kind: self.kind, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `t·f`, keeping the order.
    pub fn shift(&self) -> TruncatedSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(RatPoly::zero());
        for (n, a) in self.coeffs.iter().enumerate().take(self.order()) {
            coeffs.push(match self.kind {
                SeriesKind::Ogf => a.clone(),
                SeriesKind::Egf => a.scale(&BigInt::from(n + 1), &BigInt::one()),
            });
        }
        TruncatedSeries { kind: self.kind, coeffs }
    }

    /// `f(c·t)`: coefficient `n` times `cⁿ`.
    pub fn rescale(&self, c: &RatPoly) -> TruncatedSeries {
        let mut power = RatPoly::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power = &power * c;
        }
        TruncatedSeries { kind: self.kind, coeffs }
    }

    /// The same series written in the other convention: coefficient `n` is
    /// multiplied by `n!` going to EGF and divided by it going to OGF.
    pub fn to_kind(&self, kind: SeriesKind) -> TruncatedSeries {
        if kind == self.kind {
            return self.clone();
        }
        let coeffs = self.coeffs.iter().enumerate().map(|(n, a)| match kind {
            SeriesKind::Egf => a.scale(&factorial(n), &BigInt::one()),
            SeriesKind::Ogf => a.scale(&BigInt::one(), &factorial(n)),
        });
        TruncatedSeries { kind, coeffs: coeffs.collect() }
    }

    /// `exp(f)`, solved degree by degree from `g' = f'·g`.
    pub fn exp(&self) -> Result<TruncatedSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let mut g: Vec<RatPoly> = vec![RatPoly::one()];
        for n in 1..=self.order() {
            let mut acc = RatPoly::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if a.is_zero() {
                    continue;
                }
                let term = a * &g[n - k];
                acc = &acc
                    + &match self.kind {
                        SeriesKind::Egf => term.scale(&binom(n - 1, k - 1), &BigInt::one()),
                        SeriesKind::Ogf => term.scale(&BigInt::from(k), &BigInt::one()),
                    };
            }
            if self.kind == SeriesKind::Ogf {
                acc = acc.scale(&BigInt::one(), &BigInt::from(n));
            }
            g.push(acc);
        }
        Ok(TruncatedSeries { kind: self.kind, coeffs: g })
    }

    /// `log(f)` for `f` with constant term 1; inverse of [`exp`](Self::exp).
    pub fn log(&self) -> Result<TruncatedSeries, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantNotOne);
        }
        let mut b: Vec<RatPoly> = vec![RatPoly::zero()];
        for n in 1..=self.order() {
            let mut acc = match self.kind {
                SeriesKind::Egf => self.coeffs[n].clone(),
                SeriesKind::Ogf => self.coeffs[n].scale(&BigInt::from(n), &BigInt::one()),
            };
            for (k, bk) in b.iter().enumerate().take(n).skip(1) {
                let term = bk * &self.coeffs[n - k];
                acc = &acc
                    - &match self.kind {
                        SeriesKind::Egf => term.scale(&binom(n - 1, k - 1), &BigInt::one()),
                        SeriesKind::Ogf => term.scale(&BigInt::from(k), &BigInt::one()),
                    };
            }
            if self.kind == SeriesKind::Ogf {
                acc = acc.scale(&BigInt::one(), &BigInt::from(n));
            }
            b.push(acc);
        }
        Ok(TruncatedSeries { kind: self.kind, coeffs: b })
    }
}

/// One line per order: `t^n/n!: <coefficient>` (or `t^n: …` for an OGF).
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            match self.kind {
                SeriesKind::Egf => writeln!(f, "t^{n}/n!: {c}")?,
                SeriesKind::Ogf => writeln!(f, "t^{n}: {c}")?,
            }
        }
        Ok(())
    }
}

/// The Catalan numbers `C(2m, m)/(m + 1)` as an ordinary series.
pub fn catalan_series(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order).map(|m| Polynomial::constant(binom(2 * m, m) / (m + 1)));
    TruncatedSeries::from_polynomials(SeriesKind::Ogf, order, coeffs)
}

/// `exp(x·z·t·Cat(x²t/2))` as an EGF in `t`.
pub fn catalan_egf_closed_form(order: usize) -> TruncatedSeries {
    let (x, z) = (sym("x"), sym("z"));
    let half_x2 = RatPoly::new(Polynomial::term(mono(&[(x, 2)]), BigInt::one()), BigInt::from(2));
    let xz = RatPoly::from(Polynomial::term(mono(&[(x, 1), (z, 1)]), BigInt::one()));
    let inner = catalan_series(order).rescale(&half_x2).shift().mul_coeff(&xz);
    inner.to_kind(SeriesKind::Egf).exp().expect("shifted series has zero constant term")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub order: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalanEgfReport {
    pub order: usize,
    pub matched: bool,
    pub mismatch: Option<Mismatch>,
    /// `C̃_n(x,x,z)` for `n` in `0..=order`, rendered.
    pub coefficients: Vec<String>,
}

impl fmt::Display for CatalanEgfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coefficients.iter().enumerate() {
            writeln!(f, "t^{n}/n!: {c}")?;
        }
        match &self.mismatch {
            None => writeln!(f, "match through order {}", self.order),
            Some(m) => writeln!(f, "mismatch at order {}: {} != {}", m.order, m.lhs, m.rhs),
        }
    }
}

/// Compares `Σ C̃_n(x,x,z) tⁿ/n!`, built from its coefficient recurrence,
/// against the closed form `exp(x·z·t·Cat(x²t/2))` through `order`.
pub fn verify_catalan_egf(order: usize) -> CatalanEgfReport {
    let lhs: Vec<Polynomial> = (0..=order).map(recurrences::ctilde_diagonal).collect();
    let rhs = catalan_egf_closed_form(order);
    let mismatch = lhs.iter().zip(rhs.coeffs()).enumerate().find_map(|(n, (l, r))| {
        (r.to_polynomial().as_ref() != Some(l)).then(|| Mismatch { order: n, lhs: l.to_string(), rhs: r.to_string() })
    });
    CatalanEgfReport {
        order,
        matched: mismatch.is_none(),
        mismatch,
        coefficients: lhs.iter().map(ToString::to_string).collect(),
    }
}

/// The Bessel polynomial `Σ_j (n+j−1)!/(2^j (n−1−j)! j!)·z^{n−j}`; `n = 0`
/// gives 1.
pub fn bessel_polynomial(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::one();
    }
    let z = sym("z");
    let mut out = Polynomial::zero();
    for j in 0..n {
        let num = factorial(n + j - 1);
        let den = (BigInt::one() << j) * factorial(n - 1 - j) * factorial(j);
        out.add_term(Monomial::power(z, (n - j) as i32), num / den);
    }
    out
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;
    use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

    use super::*;
    use crate::symcore::poly;
    use crate::triangles::{assemble, Assembly};

    fn consts(kind: SeriesKind, order: usize, cs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_polynomials(kind, order, cs.iter().map(|&c| Polynomial::constant(c)))
    }

    #[test]
    fn exp_of_zero_and_of_t() {
        for kind in [SeriesKind::Egf, SeriesKind::Ogf] {
            assert_eq!(TruncatedSeries::zero(kind, 5).exp().unwrap(), TruncatedSeries::one(kind, 5));
        }
        let e = TruncatedSeries::t(SeriesKind::Egf, 4).exp().unwrap();
        assert_eq!(e, consts(SeriesKind::Egf, 4, &[1, 1, 1, 1, 1]));
        let e = TruncatedSeries::t(SeriesKind::Ogf, 3).exp().unwrap();
        let want = [1, 1, 2, 6].map(|d| RatPoly::new(Polynomial::one(), BigInt::from(d)));
        assert_eq!(e.coeffs(), &want);
        assert_eq!(TruncatedSeries::one(SeriesKind::Egf, 2).exp(), Err(SeriesError::NonzeroConstant));
        assert_eq!(TruncatedSeries::zero(SeriesKind::Egf, 2).log(), Err(SeriesError::ConstantNotOne));
    }

    #[test]
    fn catalan_numbers_match_segner() {
        let cat = catalan_series(12).integer_coeffs().unwrap();
        let mut segner = vec![BigInt::one()];
        for m in 0..12 {
            let next = (0..=m).map(|i| &segner[i] * &segner[m - i]).sum();
            segner.push(next);
        }
        let got: Vec<BigInt> = cat.iter().map(|c| c.as_constant().unwrap()).collect();
        assert_eq!(got, segner);
        assert_eq!(got[..6], [1, 1, 2, 5, 14, 42].map(BigInt::from));
    }

    #[test]
    fn catalan_functional_equation() {
        let n = 10;
        let cat = catalan_series(n);
        let lhs = cat.mul(&cat).unwrap().shift();
        let rhs = cat.add(&consts(SeriesKind::Ogf, n, &[-1])).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn catalan_egf_small_orders() {
        let r = verify_catalan_egf(1);
        assert!(r.matched);
        assert_eq!(r.coefficients[1], "x*z");
        let r = verify_catalan_egf(3);
        assert!(r.matched);
        assert_eq!(poly(&r.coefficients[3]), poly("x^3*z^3 + 3*x^4*z^2 + 3*x^5*z"));
        let closed = catalan_egf_closed_form(3).integer_coeffs().unwrap();
        assert_eq!(closed[3], poly("x^3*z^3 + 3*x^4*z^2 + 3*x^5*z"));
        assert!(verify_catalan_egf(10).matched);
    }

    #[test]
    fn bessel_polynomials() {
        assert_eq!(bessel_polynomial(1), poly("z"));
        assert_eq!(bessel_polynomial(3), poly("z^3 + 3*z^2 + 3*z"));
        let ones = [(sym("x"), Polynomial::one()), (sym("y"), Polynomial::one())];
        for n in 1..=10 {
            let e = assemble(Assembly::E, n).unwrap().subs(&ones).unwrap();
            assert_eq!(e, bessel_polynomial(n), "n={n}");
        }
    }

    #[test]
    fn kind_conversion_is_exact() {
        let s = consts(SeriesKind::Ogf, 6, &[3, -1, 4, 1, -5, 9, 2]);
        let e = s.to_kind(SeriesKind::Egf);
        assert_eq!(e.coeff(4).to_polynomial().unwrap(), Polynomial::constant(-120));
        assert_eq!(e.to_kind(SeriesKind::Ogf), s);
        assert!(matches!(s.mul(&e), Err(SeriesError::KindMismatch(..))));
        let back = consts(SeriesKind::Egf, 3, &[0, 1, 1, 1]).to_kind(SeriesKind::Ogf);
        assert!(matches!(back.integer_coeffs(), Err(SeriesError::NonIntegral { order: 2, .. })));
    }

    #[test]
    fn text_dump() {
        let s = consts(SeriesKind::Egf, 2, &[1, 0, 2]);
        assert_eq!(s.to_string(), "t^0/n!: 1\nt^1/n!: 0\nt^2/n!: 2\n");
    }

    fn small_series(kind: SeriesKind) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 5).prop_map(move |rows| {
            let mut coeffs = vec![RatPoly::zero()];
            for r in rows {
                let mut p = poly("x^2").scale(&BigInt::from(r[0]));
                p += &poly("x*y").scale(&BigInt::from(r[1]));
                p += &Polynomial::constant(r[2]);
                coeffs.push(RatPoly::from(p));
            }
            TruncatedSeries::new(kind, 5, coeffs)
        })
    }

    #[test]
    fn log_inverts_exp() {
        let config = Config { cases: 64, ..Config::default() };
        for kind in [SeriesKind::Egf, SeriesKind::Ogf] {
            let rng = TestRng::from_seed(RngAlgorithm::ChaCha, &[7; 32]);
            let mut runner = TestRunner::new_with_rng(config.clone(), rng);
            runner
                .run(&small_series(kind), |s| {
                    let e = s.exp().unwrap();
                    prop_assert_eq!(e.log().unwrap(), s.clone());
                    prop_assert_eq!(
                        e.to_kind(SeriesKind::Ogf),
                        s.to_kind(SeriesKind::Ogf).exp().unwrap().to_kind(SeriesKind::Ogf)
                    );
                    Ok(())
                })
                .unwrap();
        }
    }
}
