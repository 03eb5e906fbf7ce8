//! Sparse multivariate (Laurent) polynomials over the integers.

mod json;
mod monomial;
mod parse;
mod polynomial;
mod symbol;

pub use monomial::Monomial;
pub use parse::{parse, ParseError};
pub use polynomial::{EvalError, Polynomial, SubstituteError};
pub use symbol::{sym, Symbol};

/// Parses a polynomial literal, panicking on malformed input. Intended for
/// fixed literals in code and tests.
pub fn poly(text: &str) -> Polynomial {
    parse(text).unwrap_or_else(|e| panic!("bad polynomial literal {text:?}: {e}"))
}

/// The monomial `∏ s^e` over the given pairs.
pub fn mono(pairs: &[(Symbol, i32)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().copied())
}

#[cfg(test)]
mod tests;
