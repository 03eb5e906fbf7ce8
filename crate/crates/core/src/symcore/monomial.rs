use std::cmp::Ordering;
use std::fmt;

use super::Symbol;

/// A power product of symbols with signed exponents.
///
/// Stored as `(symbol, exponent)` pairs sorted by symbol, with no zero
/// exponents. The `Ord` impl is graded lexicographic: higher total degree is
/// greater, ties broken by comparing exponents in symbol-table order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol) -> Monomial {
        Monomial(vec![(s, 1)])
    }

    pub fn power(s: Symbol, e: i32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(s, e)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (Symbol, i32)>>(pairs: I) -> Monomial {
        let mut v: Vec<(Symbol, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|&(s, _)| s);
        let mut out: Vec<(Symbol, i32)> = Vec::with_capacity(v.len());
        for (s, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == s => last.1 += e,
                _ => out.push((s, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, s: Symbol) -> i32 {
        match self.0.binary_search_by_key(&s, |&(t, _)| t) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn pairs(&self) -> &[(Symbol, i32)] {
        &self.0
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().map(|&(s, _)| s)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.0.iter().any(|&(_, e)| e < 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(s, e)| (s, -e)).collect())
    }

    /// Adds `delta` to the exponent of `s`.
    pub fn shifted(&self, s: Symbol, delta: i32) -> Monomial {
        self.mul(&Monomial::power(s, delta))
    }

    /// The monomial with `s` removed, together with the removed exponent.
    pub fn split_off(&self, s: Symbol) -> (Monomial, i32) {
        let e = self.exponent(s);
        let rest = self.0.iter().copied().filter(|&(t, _)| t != s).collect();
        (Monomial(rest), e)
    }

    /// Renames symbols through `f`; used for symmetry tests.
    pub fn map_symbols(&self, f: impl Fn(Symbol) -> Symbol) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(s, e)| (f(s), e)))
    }

    /// Whether `other / self` has only non-negative exponents.
    pub fn divides(&self, other: &Monomial) -> bool {
        !other.mul(&self.inverse()).has_negative_exponent()
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (ea, eb) = match (a.get(i), b.get(j)) {
                (Some(&(sa, ea)), Some(&(sb, eb))) if sa == sb => {
                    i += 1;
                    j += 1;
                    (ea, eb)
                }
                (Some(&(sa, ea)), Some(&(sb, _))) if sa < sb => {
                    i += 1;
                    (ea, 0)
                }
                (Some(&(_, ea)), None) => {
                    i += 1;
                    (ea, 0)
                }
                (_, Some(&(_, eb))) => {
                    j += 1;
                    (0, eb)
                }
                (None, None) => unreachable!(),
            };
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        Ordering::Equal
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &(s, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::sym;

    fn m(pairs: &[(&str, i32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(n, e)| (sym(n), e)))
    }

    #[test]
    fn from_pairs_is_canonical() {
        assert_eq!(m(&[("y", 1), ("x", 2), ("y", -1)]), m(&[("x", 2)]));
        assert!(m(&[("x", 0)]).is_one());
    }

    #[test]
    fn graded_lex_order() {
        // x^3 y > x^2 y^2 > x y^3 > x^3
        let a = m(&[("x", 3), ("y", 1)]);
        let b = m(&[("x", 2), ("y", 2)]);
        let c = m(&[("x", 1), ("y", 3)]);
        let d = m(&[("x", 3)]);
        assert!(a > b && b > c && c > d);
        assert!(m(&[("x", 1)]) > m(&[("y", 1)]));
        assert!(m(&[("y", 1)]) > m(&[("z", 1)]));
        assert!(m(&[("x", 1), ("z", 1)]) > m(&[("y", 2)]));
        assert_eq!(a.cmp(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn multiplication_merges_and_cancels() {
        let a = m(&[("x", 2), ("y", -1)]);
        let b = m(&[("y", 1), ("z", 1)]);
        assert_eq!(a.mul(&b), m(&[("x", 2), ("z", 1)]));
        assert!(a.mul(&a.inverse()).is_one());
    }
}
