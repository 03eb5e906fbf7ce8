//! Normal ordering for powers of grammar-induced derivations.
//!
//! A context-free grammar `G` (a map from symbols to polynomials) induces a
//! derivation `D_G`. This crate expands `(w·D_G)^n` into the normal form
//! `Σ c_k·D_G^k`, generates the coefficient triangles those expansions
//! produce, and checks every such identity against brute-force enumeration
//! of the combinatorial objects it counts.

pub mod exec;
pub mod grammar;
pub mod normord;
pub mod oracle;
pub mod series;
pub mod symcore;
pub mod triangles;
pub mod verify;

pub use grammar::Grammar;
pub use normord::NormalForm;
pub use symcore::{parse, poly, sym, Monomial, Polynomial, Symbol};
