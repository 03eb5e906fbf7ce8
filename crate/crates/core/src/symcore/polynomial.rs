use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use thiserror::Error;

use super::{Monomial, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstituteError {
    #[error("cannot raise `{binding}` (image of {symbol}) to the negative power {exponent}")]
    NegativePowerOfComposite { symbol: Symbol, binding: String, exponent: i32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("pole: {symbol} appears with exponent {exponent} and is evaluated at 0")]
    Pole { symbol: Symbol, exponent: i32 },
    #[error("no value given for symbol {0}")]
    Unbound(Symbol),
}

/// A sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms live in a hash map; canonical (graded-lex, descending) order is only
/// materialized by [`Polynomial::sorted_terms`] and the renderers.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: FxHashMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Polynomial {
        Polynomial::term(Monomial::one(), c.into())
    }

    pub fn var(s: Symbol) -> Polynomial {
        Polynomial::term(Monomial::var(s), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical order: leading (graded-lex largest) term first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn coefficient_of(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant term, if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// The single `(monomial, coefficient)` pair, if there is exactly one term.
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut v: Vec<Symbol> = self.terms.keys().flat_map(|m| m.symbols()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(n, k)| (n.mul(m), k.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Term-wise power rule in `s`; exponent-zero terms vanish.
    pub fn partial_derivative(&self, s: Symbol) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(s);
            if e != 0 {
                out.add_term(m.shifted(s, -1), c * BigInt::from(e));
            }
        }
        out
    }

    /// Simultaneous substitution; unbound symbols pass through.
    ///
    /// A negative power of a bound symbol is only allowed when its image is a
    /// unit monomial (coefficient ±1), which is invertible in the Laurent ring.
    pub fn substitute(&self, bindings: &HashMap<Symbol, Polynomial>) -> Result<Polynomial, SubstituteError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let mut cache: HashMap<(Symbol, i32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            let mut free = Vec::new();
            for &(s, e) in m.pairs() {
                match bindings.get(&s) {
                    None => free.push((s, e)),
                    Some(image) => {
                        let p = match cache.entry((s, e)) {
                            Entry::Occupied(o) => o.into_mut(),
                            Entry::Vacant(v) => v.insert(power_of_image(s, image, e)?),
                        };
                        acc = &acc * &*p;
                    }
                }
            }
            if !free.is_empty() {
                acc = acc.mul_monomial(&Monomial::from_pairs(free));
            }
            out += &acc;
        }
        Ok(out)
    }

    /// Convenience: substitute from `(symbol, image)` pairs.
    pub fn subs(&self, pairs: &[(Symbol, Polynomial)]) -> Result<Polynomial, SubstituteError> {
        self.substitute(&pairs.iter().cloned().collect())
    }

    pub fn evaluate(&self, point: &HashMap<Symbol, BigRational>) -> Result<BigRational, EvalError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for &(s, e) in m.pairs() {
                let x = point.get(&s).ok_or(EvalError::Unbound(s))?;
                if e < 0 {
                    if x.is_zero() {
                        return Err(EvalError::Pole { symbol: s, exponent: e });
                    }
                    v *= num_traits::pow(x.recip(), (-e) as usize);
                } else {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Splits by powers of `s`: `self = Σ_e out[e] · s^e`, with `s` absent from each slice.
    pub fn slices(&self, s: Symbol) -> BTreeMap<i32, Polynomial> {
        let mut out: BTreeMap<i32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(s);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// The coefficient of `s^e`, as a polynomial in the remaining symbols.
    pub fn coefficient_in(&self, s: Symbol, e: i32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (rest, f) = m.split_off(s);
            if f == e {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    pub fn degree_in(&self, s: Symbol) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(s)).max()
    }

    /// The common total degree of all terms, or `None` if mixed (or zero polynomial).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Renames symbols through `f`.
    pub fn map_symbols(&self, f: impl Fn(Symbol) -> Symbol) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.map_symbols(&f), c.clone())))
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

fn power_of_image(s: Symbol, image: &Polynomial, e: i32) -> Result<Polynomial, SubstituteError> {
    if e >= 0 {
        return Ok(image.pow(e as u32));
    }
    match image.as_monomial() {
        Some((m, c)) if c.abs().is_one() => {
            let inv = Polynomial::term(m.inverse(), c.clone());
            Ok(inv.pow((-e) as u32))
        }
        _ => Err(SubstituteError::NegativePowerOfComposite { symbol: s, binding: image.to_string(), exponent: e }),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl From<Symbol> for Polynomial {
    fn from(s: Symbol) -> Self {
        Polynomial::var(s)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::term(m, BigInt::one())
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        out += small;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut terms: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        terms.reserve(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *terms.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { terms }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        if self.is_zero() {
            *self = rhs;
        } else {
            *self += &rhs;
        }
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |a, b| a * b)
    }
}
