use std::fmt;
use std::str::FromStr;

use super::{build_triangle, recurrences, Family, Triangle, TriangleError};
use crate::symcore::{sym, Monomial, Polynomial, Symbol};

/// The assembled polynomial families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Assembly {
    /// `Σ A_{n,k,l} x^l y^{n-l} z^k`
    A,
    /// `Σ A_{n,k,l}(p) x^l y^{n-l} q^k`
    Apq,
    /// `Σ a_{n,k,l} x^l y^{n+k-l} z^k`
    LowerA,
    /// `Σ γ(n,k,l) u^l v^{n+k-2l} z^k`
    Gamma,
    /// `Σ C_{n,k,l} x^l y^{2n-k-l} z^k`
    Ctilde,
    /// `Σ β_{n,k,j,l} u^{2n-2k-2j-3l} v^j w^{l+k} q^k`
    Beta,
    /// `Σ B_{n,k,l} x^{k+2l} y^{2n-k-2l} z^k`
    B,
    /// `Σ E_{n,k,l} x^{k+2l} y^{2n-2k-2l} z^k`
    E,
    /// `Σ W_{n,k,l} x^{k+2l} y^{n-k-2l} z^k`
    W,
    Ax,
    Axq,
    Bx,
    /// Second-order Eulerian polynomial `Σ C_{n,l} x^l`.
    Cx,
    /// `C_n(x, y, z)`, `n >= 1`.
    Cxyz,
    Fx,
    Tx,
    /// `C̃_n(x, x, z)`.
    CtildeDiagonal,
}

pub const ASSEMBLIES: &[Assembly] = &[
    Assembly::A,
    Assembly::Apq,
    Assembly::LowerA,
    Assembly::Gamma,
    Assembly::Ctilde,
    Assembly::Beta,
    Assembly::B,
    Assembly::E,
    Assembly::W,
    Assembly::Ax,
    Assembly::Axq,
    Assembly::Bx,
    Assembly::Cx,
    Assembly::Cxyz,
    Assembly::Fx,
    Assembly::Tx,
    Assembly::CtildeDiagonal,
];

impl Assembly {
    pub fn name(self) -> &'static str {
        match self {
            Assembly::A => "A",
            Assembly::Apq => "Apq",
            Assembly::LowerA => "a",
            Assembly::Gamma => "gamma",
            Assembly::Ctilde => "Ctilde",
            Assembly::Beta => "beta",
            Assembly::B => "B",
            Assembly::E => "E",
            Assembly::W => "W",
            Assembly::Ax => "Ax",
            Assembly::Axq => "Axq",
            Assembly::Bx => "Bx",
            Assembly::Cx => "Cx",
            Assembly::Cxyz => "Cxyz",
            Assembly::Fx => "Fx",
            Assembly::Tx => "Tx",
            Assembly::CtildeDiagonal => "Ctilde_xxz",
        }
    }

    /// The triangle a multivariate assembly is read from.
    pub fn source(self) -> Option<Family> {
        Some(match self {
            Assembly::A => Family::A,
            Assembly::Apq => Family::Ap,
            Assembly::LowerA => Family::LowerA,
            Assembly::Gamma => Family::Gamma,
            Assembly::Ctilde => Family::C,
            Assembly::Beta => Family::Beta,
            Assembly::B => Family::B,
            Assembly::E => Family::E,
            Assembly::W => Family::W,
            Assembly::Cx => Family::Eulerian2,
            _ => return None,
        })
    }

    /// Reads row `n` of `tri` (built for [`Assembly::source`]) as a polynomial.
    /// Row 0 of every triangle-backed family is the empty product `1`.
    pub fn from_triangle(self, tri: &Triangle, n: usize) -> Polynomial {
        assert_eq!(Some(tri.family()), self.source(), "{} is not read from {}", self.name(), tri.family());
        assert!(n <= tri.max_n(), "row {n} was not built");
        if n == 0 {
            return Polynomial::one();
        }
        let n = n as i32;
        let mut out = Polynomial::zero();
        for ((k, l, j), entry) in tri.row(n as usize) {
            let (k, l, j) = (k as i32, l as i32, j as i32);
            let exps: Vec<(&str, i32)> = match self {
                Assembly::A | Assembly::Apq => {
                    let t = if self == Assembly::A { "z" } else { "q" };
                    vec![("x", l), ("y", n - l), (t, k)]
                }
                Assembly::LowerA => vec![("x", l), ("y", n + k - l), ("z", k)],
                Assembly::Gamma => vec![("u", l), ("v", n + k - 2 * l), ("z", k)],
                Assembly::Ctilde => vec![("x", l), ("y", 2 * n - k - l), ("z", k)],
                Assembly::Beta => vec![("u", 2 * n - 2 * k - 2 * j - 3 * l), ("v", j), ("w", l + k), ("q", k)],
                Assembly::B => vec![("x", k + 2 * l), ("y", 2 * n - k - 2 * l), ("z", k)],
                Assembly::E => vec![("x", k + 2 * l), ("y", 2 * n - 2 * k - 2 * l), ("z", k)],
                Assembly::W => vec![("x", k + 2 * l), ("y", n - k - 2 * l), ("z", k)],
                Assembly::Cx => vec![("x", k)],
                _ => unreachable!(),
            };
            let m = Monomial::from_pairs(exps.into_iter().map(|(s, e)| (sym(s), e)));
            out += &entry.mul_monomial(&m);
        }
        out
    }

    pub fn first_index(self) -> usize {
        if self == Assembly::Cxyz {
            1
        } else {
            0
        }
    }

    pub fn variables(self) -> Vec<Symbol> {
        let names: &[&str] = match self {
            Assembly::A | Assembly::LowerA | Assembly::Ctilde | Assembly::Cxyz => &["x", "y", "z"],
            Assembly::B | Assembly::E | Assembly::W => &["x", "y", "z"],
            Assembly::Apq => &["p", "q", "x", "y"],
            Assembly::Gamma => &["u", "v", "z"],
            Assembly::Beta => &["u", "v", "w", "q"],
            Assembly::Axq => &["x", "q"],
            Assembly::CtildeDiagonal => &["x", "z"],
            _ => &["x"],
        };
        names.iter().map(|s| sym(s)).collect()
    }
}

impl fmt::Display for Assembly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Assembly {
    type Err = TriangleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ASSEMBLIES.iter().copied().find(|a| a.name() == s).ok_or_else(|| TriangleError::NoPolynomialForm(s.to_owned()))
    }
}

/// The polynomial of `family` at index `n`.
pub fn assemble(family: Assembly, n: usize) -> Result<Polynomial, TriangleError> {
    if n < family.first_index() {
        return Err(TriangleError::OutOfRange { family: family.name().to_owned(), n, min: family.first_index() });
    }
    Ok(match family {
        Assembly::Ax => recurrences::eulerian_x(n),
        Assembly::Axq => recurrences::eulerian_xq(n),
        Assembly::Bx => recurrences::eulerian_b_x(n),
        Assembly::Cxyz => recurrences::stirling_trivariate(n),
        Assembly::Fx => recurrences::flag_ascent_plateau_x(n),
        Assembly::Tx => recurrences::up_down_runs_x(n),
        Assembly::CtildeDiagonal => recurrences::ctilde_diagonal(n),
        other => {
            let src = other.source().expect("triangle-backed");
            let tri = build_triangle(src, n.max(1));
            other.from_triangle(&tri, n)
        }
    })
}
