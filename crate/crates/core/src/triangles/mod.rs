//! Coefficient triangles generated from their recurrences, the polynomial
//! families assembled from them, and expansion into γ- and e-bases.
//!
//! Every family is filled row by row by pulling from the previous row; the
//! rows are memoized in a [`Triangle`] keyed by the packed index
//! `(n, k, l, j)` (see [`TriKey`]).

mod assemble;
mod basis;
pub mod recurrences;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::symcore::Polynomial;

pub use assemble::{assemble, Assembly};
pub use basis::{e_expand, e_expand_sliced, gamma_expand, BasisError, EExpansion, GammaExpansion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{0}` has no polynomial form")]
    NoPolynomialForm(String),
    #[error("family `{family}` is defined for n >= {min}, got {n}")]
    OutOfRange { family: String, n: usize, min: usize },
}

/// `(n, k, l, j)` packed into 16-bit fields of one `u64`; sorting keys sorts
/// entries lexicographically by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriKey(pub u64);

impl TriKey {
    pub fn pack(n: usize, k: usize, l: usize, j: usize) -> TriKey {
        debug_assert!(n < 1 << 16 && k < 1 << 16 && l < 1 << 16 && j < 1 << 16);
        TriKey(((n as u64) << 48) | ((k as u64) << 32) | ((l as u64) << 16) | j as u64)
    }

    pub fn unpack(self) -> (usize, usize, usize, usize) {
        let f = |shift: u32| ((self.0 >> shift) & 0xffff) as usize;
        (f(48), f(32), f(16), f(0))
    }
}

/// The coefficient families.
///
/// Three-index families are `(n, k, l)`; `Beta` adds `j`. The classical
/// tables are two-index `(n, k)` except `Catalan`, indexed by `n` alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(x·D)^n` under `x -> y, y -> y`.
    A,
    /// `(x·D)^n` under `x -> y, y -> p·y`; entries are polynomials in `p`.
    Ap,
    /// `(xy·D)^n` under `x -> 1, y -> 1`.
    LowerA,
    /// γ-coefficients of `(u·D)^n` under `u -> v, v -> 2`.
    Gamma,
    /// `(x·D)^n` under `x -> y^2, y -> y^2`.
    C,
    /// e-coefficients of `(w·D)^n` under `u -> 3, v -> 2u, w -> v`.
    Beta,
    /// `(xy·D)^n` under `x -> y, y -> x`.
    B,
    /// `(x·D)^n` under `x -> y^2, y -> x·y`.
    E,
    /// `(x·D)^n` under `x -> y, y -> x`.
    W,
    Stirling2,
    Stirling1,
    Eulerian,
    EulerianB,
    Eulerian2,
    Lah,
    Bessel,
    Catalan,
}

pub const FAMILIES: &[Family] = &[
    Family::A,
    Family::Ap,
    Family::LowerA,
    Family::Gamma,
    Family::C,
    Family::Beta,
    Family::B,
    Family::E,
    Family::W,
    Family::Stirling2,
    Family::Stirling1,
    Family::Eulerian,
    Family::EulerianB,
    Family::Eulerian2,
    Family::Lah,
    Family::Bessel,
    Family::Catalan,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::Ap => "Ap",
            Family::LowerA => "a",
            Family::Gamma => "gamma",
            Family::C => "C",
            Family::Beta => "beta",
            Family::B => "B",
            Family::E => "E",
            Family::W => "W",
            Family::Stirling2 => "S2",
            Family::Stirling1 => "s1",
            Family::Eulerian => "eulerian",
            Family::EulerianB => "eulerianB",
            Family::Eulerian2 => "eulerian2",
            Family::Lah => "lah",
            Family::Bessel => "bessel",
            Family::Catalan => "catalan",
        }
    }

    /// Number of indices after `n`.
    pub fn arity(self) -> usize {
        match self {
            Family::Beta => 3,
            Family::A | Family::Ap | Family::LowerA | Family::Gamma | Family::C | Family::B | Family::E | Family::W => {
                2
            }
            Family::Catalan => 0,
            _ => 1,
        }
    }

    /// Index of the first row (the initial condition).
    pub fn first_row(self) -> usize {
        match self.arity() {
            2 | 3 => 1,
            _ => 0,
        }
    }

    /// Whether entries are plain integers (every family except `Ap`).
    pub fn is_integer(self) -> bool {
        self != Family::Ap
    }

    fn initial_row(self) -> Row {
        let key = match self {
            Family::A | Family::Ap | Family::LowerA | Family::Gamma | Family::C => (1, 1, 0),
            Family::Beta => (1, 0, 0),
            Family::B | Family::E | Family::W => (1, 0, 0),
            _ => (0, 0, 0),
        };
        let mut row = Row::new();
        row.insert(key, Polynomial::one());
        row
    }

    /// Computes row `n + 1` from row `n`.
    fn next_row(self, n: usize, prev: &Row) -> Row {
        let n = n as i64;
        let get = |k: i64, l: i64, j: i64| -> Option<&Polynomial> {
            if k < 0 || l < 0 || j < 0 {
                return None;
            }
            prev.get(&(k as usize, l as usize, j as usize))
        };
        let mut row = Row::new();
        let (kmax, lmax, jmax) = match self.arity() {
            3 => (n + 1, n + 1, n + 1),
            2 => (n + 1, 2 * n + 2, 0),
            1 => (2 * n + 2, 0, 0),
            _ => (0, 0, 0),
        };
        for k in 0..=kmax {
            for l in 0..=lmax {
                for j in 0..=jmax {
                    let v = self.pull(n, k, l, j, &get);
                    if !v.is_zero() {
                        row.insert((k as usize, l as usize, j as usize), v);
                    }
                }
            }
        }
        row
    }

    /// The family's recurrence: the entry of row `n + 1` at `(k, l, j)`.
    fn pull<'a>(
        self,
        n: i64,
        k: i64,
        l: i64,
        j: i64,
        get: &impl Fn(i64, i64, i64) -> Option<&'a Polynomial>,
    ) -> Polynomial {
        let mut acc = Polynomial::zero();
        let mut add = |factor: i64, src: Option<&Polynomial>| {
            if let Some(p) = src {
                if factor != 0 {
                    acc += &p.scale(&BigInt::from(factor));
                }
            }
        };
        match self {
            Family::A => {
                add(l, get(k, l, 0));
                add(n - l + 1, get(k, l - 1, 0));
                add(1, get(k - 1, l - 1, 0));
            }
            Family::Ap => {
                add(l, get(k, l, 0));
                let p = Polynomial::var(crate::symcore::sym("p"));
                add(n - l + 1, get(k, l - 1, 0).map(|src| &p * src).as_ref());
                add(1, get(k - 1, l - 1, 0));
            }
            Family::LowerA => {
                add(l, get(k, l, 0));
                add(n + k - l + 1, get(k, l - 1, 0));
                add(1, get(k - 1, l - 1, 0));
            }
            Family::Gamma => {
                add(l, get(k, l, 0));
                add(2 * (n + k - 2 * l + 2), get(k, l - 1, 0));
                add(1, get(k - 1, l - 1, 0));
            }
            Family::C => {
                add(l, get(k, l, 0));
                add(2 * n - k - l + 1, get(k, l - 1, 0));
                add(1, get(k - 1, l - 1, 0));
            }
            Family::Beta => {
                add(l + k, get(k, l, j - 1));
                add(2 * (j + 1), get(k, l - 1, j + 1));
                add(3 * (2 * n - 2 * k - 2 * j - 3 * l + 3), get(k, l - 1, j));
                add(1, get(k - 1, l, j));
            }
            Family::B => {
                add(k + 2 * l, get(k, l, 0));
                add(2 * n - k - 2 * l + 2, get(k, l - 1, 0));
                add(1, get(k - 1, l, 0));
            }
            Family::E => {
                add(k + 2 * l, get(k, l, 0));
                add(2 * n - 2 * k - 2 * l + 2, get(k, l - 1, 0));
                add(1, get(k - 1, l, 0));
            }
            Family::W => {
                add(k + 2 * l, get(k, l, 0));
                add(n - k - 2 * l + 2, get(k, l - 1, 0));
                add(1, get(k - 1, l, 0));
            }
            // Classical tables: here `n + 1` is the row being built.
            Family::Stirling2 => {
                add(k, get(k, 0, 0));
                add(1, get(k - 1, 0, 0));
            }
            Family::Stirling1 => {
                add(n, get(k, 0, 0));
                add(1, get(k - 1, 0, 0));
            }
            Family::Eulerian => {
                add(k, get(k, 0, 0));
                add(n + 1 - k + 1, get(k - 1, 0, 0));
            }
            Family::EulerianB => {
                add(1 + 2 * k, get(k, 0, 0));
                add(2 * (n + 1) - 2 * k + 1, get(k - 1, 0, 0));
            }
            Family::Eulerian2 => {
                add(k, get(k, 0, 0));
                add(2 * (n + 1) - k, get(k - 1, 0, 0));
            }
            Family::Lah => {
                add(n + k, get(k, 0, 0));
                add(1, get(k - 1, 0, 0));
            }
            Family::Bessel => {
                add(1, get(k, 0, 0));
                add(n + k, get(k - 1, 0, 0));
            }
            Family::Catalan => {
                // Cat(n+1) = 2(2n+1)/(n+2) · Cat(n), exact.
                if let Some(c) = get(0, 0, 0).and_then(Polynomial::as_constant) {
                    acc = Polynomial::constant(c * (4 * n + 2) / (n + 2));
                }
            }
        }
        acc
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = TriangleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FAMILIES.iter().copied().find(|f| f.name() == s).ok_or_else(|| TriangleError::UnknownFamily(s.to_owned()))
    }
}

/// One row, keyed by `(k, l, j)`.
pub type Row = BTreeMap<(usize, usize, usize), Polynomial>;

/// Lazily generated rows `first_row..=max_n` of a family.
pub struct TriangleRows {
    family: Family,
    max_n: usize,
    next_n: usize,
    prev: Option<Row>,
}

impl Iterator for TriangleRows {
    type Item = (usize, Row);
    fn next(&mut self) -> Option<(usize, Row)> {
        if self.next_n > self.max_n {
            return None;
        }
        let n = self.next_n;
        let row = match &self.prev {
            None => self.family.initial_row(),
            Some(prev) => self.family.next_row(n - 1, prev),
        };
        self.prev = Some(row.clone());
        self.next_n += 1;
        Some((n, row))
    }
}

pub fn triangle_rows(family: Family, max_n: usize) -> TriangleRows {
    TriangleRows { family, max_n, next_n: family.first_row(), prev: None }
}

/// A fully built family up to `max_n`.
#[derive(Clone, Debug)]
pub struct Triangle {
    family: Family,
    max_n: usize,
    entries: BTreeMap<TriKey, Polynomial>,
}

impl Triangle {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Entry as a polynomial (zero outside the support).
    pub fn entry(&self, n: usize, k: usize, l: usize, j: usize) -> Polynomial {
        self.entries.get(&TriKey::pack(n, k, l, j)).cloned().unwrap_or_default()
    }

    /// Integer entry; panics for the polynomial-valued `Ap` family.
    pub fn get(&self, n: usize, k: usize, l: usize, j: usize) -> BigInt {
        match self.entries.get(&TriKey::pack(n, k, l, j)) {
            None => BigInt::zero(),
            Some(p) => p.as_constant().unwrap_or_else(|| panic!("{} entries are not integers", self.family)),
        }
    }

    /// `get` with negative indices mapping to zero.
    pub fn get_signed(&self, n: i64, k: i64, l: i64, j: i64) -> BigInt {
        if n < 0 || k < 0 || l < 0 || j < 0 {
            BigInt::zero()
        } else {
            self.get(n as usize, k as usize, l as usize, j as usize)
        }
    }

    /// Nonzero entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize, usize), &Polynomial)> {
        self.entries.iter().map(|(key, p)| (key.unpack(), p))
    }

    /// Nonzero entries of row `n`.
    pub fn row(&self, n: usize) -> impl Iterator<Item = ((usize, usize, usize), &Polynomial)> {
        self.entries.range(TriKey::pack(n, 0, 0, 0)..TriKey::pack(n + 1, 0, 0, 0)).map(|(key, p)| {
            let (_, k, l, j) = key.unpack();
            ((k, l, j), p)
        })
    }

    /// Whether every entry of an integer family is a nonnegative integer.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|p| match p.as_constant() {
            Some(c) => !c.is_negative(),
            None => !p.has_negative_coefficient(),
        })
    }
}

pub fn build_triangle(family: Family, max_n: usize) -> Triangle {
    let mut entries = BTreeMap::new();
    for (n, row) in triangle_rows(family, max_n) {
        for ((k, l, j), v) in row {
            entries.insert(TriKey::pack(n, k, l, j), v);
        }
    }
    Triangle { family, max_n, entries }
}

/// [`build_triangle`] by family name.
pub fn build_triangle_named(name: &str, max_n: usize) -> Result<Triangle, TriangleError> {
    Ok(build_triangle(name.parse()?, max_n))
}

/// Formats an index tuple the way the family names it, e.g. `(4,2,2)`.
pub fn format_index(family: Family, n: usize, k: usize, l: usize, j: usize) -> String {
    match family.arity() {
        0 => format!("({n})"),
        1 => format!("({n},{k})"),
        2 => format!("({n},{k},{l})"),
        _ => format!("({n},{k},{j},{l})"),
    }
}

#[cfg(test)]
mod tests;
