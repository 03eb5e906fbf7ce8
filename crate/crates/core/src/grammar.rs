//! Context-free grammars and the derivations they induce.
//!
//! A grammar maps symbols to (Laurent) polynomials. Its formal derivative
//! `D_G` is the unique derivation that is linear, obeys the Leibniz rule and
//! sends each symbol `s` to `rule(s)`; symbols without a rule are constants.
//! On a polynomial this is the chain rule `D_G(f) = Σ_s rule(s)·∂f/∂s`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::symcore::{parse, ParseError, Polynomial, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("clause `{clause}`: expected `symbol -> polynomial`")]
    MalformedClause { clause: String },
    #[error("clause `{clause}`: `{lhs}` is not a symbol")]
    BadSymbol { clause: String, lhs: String },
    #[error("symbol {0} has more than one rule")]
    DuplicateRule(Symbol),
    #[error("clause `{clause}`: {source}")]
    Polynomial {
        clause: String,
        #[source]
        source: ParseError,
    },
    #[error("unknown preset grammar `{0}`")]
    UnknownPreset(String),
}

#[derive(Clone, Default, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<Symbol, Polynomial>,
}

/// Built-in grammars, by name, in rule-string form.
pub const PRESETS: &[(&str, &str)] = &[
    ("stirling-dual", "a -> a*b; b -> b"),
    ("dumont-eulerian", "a -> a*b; b -> a*b"),
    ("shift", "x -> 1"),
    ("eulerian", "x -> y; y -> y"),
    ("full-binary", "x -> 1; y -> 1"),
    ("pq-eulerian", "x -> y; y -> p*y"),
    ("second-order", "x -> y^2; y -> y^2"),
    ("dumont-stirling", "x -> x*y*z; y -> x*y*z; z -> x*y*z"),
    ("full-ternary", "x -> 1; y -> 1; z -> 1"),
    ("elementary", "u -> 3; v -> 2*u; w -> v"),
    ("elementary-binary", "u -> v; v -> 2"),
    ("type-b", "x -> x*y^2; y -> x^2*y"),
    ("swap", "x -> y; y -> x"),
    ("type-b-second", "x -> y^2; y -> x*y"),
    ("exponential", "a -> a"),
];

impl Grammar {
    pub fn new() -> Grammar {
        Grammar::default()
    }

    pub fn from_rules<I: IntoIterator<Item = (Symbol, Polynomial)>>(rules: I) -> Grammar {
        Grammar { rules: rules.into_iter().collect() }
    }

    pub fn preset(name: &str) -> Result<Grammar, GrammarError> {
        PRESETS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| text.parse().expect("preset rule strings are well formed"))
            .ok_or_else(|| GrammarError::UnknownPreset(name.to_owned()))
    }

    /// Looks up a preset by name, falling back to parsing `spec` as a rule string.
    pub fn resolve(spec: &str) -> Result<Grammar, GrammarError> {
        match Grammar::preset(spec.trim()) {
            Ok(g) => Ok(g),
            Err(_) if spec.contains("->") => spec.parse(),
            Err(e) => Err(e),
        }
    }

    pub fn rule(&self, s: Symbol) -> Option<&Polynomial> {
        self.rules.get(&s)
    }

    pub fn rules(&self) -> impl Iterator<Item = (Symbol, &Polynomial)> {
        self.rules.iter().map(|(s, p)| (*s, p))
    }

    pub fn with_rule(mut self, s: Symbol, image: Polynomial) -> Grammar {
        self.rules.insert(s, image);
        self
    }

    /// Applies `D_G` once.
    pub fn derive(&self, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (s, image) in &self.rules {
            let partial = f.partial_derivative(*s);
            if !partial.is_zero() {
                out += &(&partial * image);
            }
        }
        out
    }

    /// Applies `D_G` `n` times.
    pub fn derive_power(&self, f: &Polynomial, n: usize) -> Polynomial {
        let mut cur = f.clone();
        for _ in 0..n {
            cur = self.derive(&cur);
        }
        cur
    }

    /// `f, D_G f, …, D_G^n f`.
    pub fn derive_iterates(&self, f: &Polynomial, n: usize) -> Vec<Polynomial> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(f.clone());
        for i in 0..n {
            let next = self.derive(&out[i]);
            out.push(next);
        }
        out
    }
}

impl FromStr for Grammar {
    type Err = GrammarError;

    /// Parses `"x -> y^2; y -> x*y"`. Whitespace is insignificant and empty
    /// clauses (e.g. a trailing `;`) are skipped.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut rules = BTreeMap::new();
        for clause in text.split(';') {
            let clause = clause.trim();
            if clause.is_empty() {
                continue;
            }
            let (lhs, rhs) =
                clause.split_once("->").ok_or_else(|| GrammarError::MalformedClause { clause: clause.to_owned() })?;
            let lhs = lhs.trim();
            if !Symbol::is_valid_name(lhs) {
                return Err(GrammarError::BadSymbol { clause: clause.to_owned(), lhs: lhs.to_owned() });
            }
            let image = parse(rhs).map_err(|source| GrammarError::Polynomial { clause: clause.to_owned(), source })?;
            let s = Symbol::new(lhs);
            if rules.insert(s, image).is_some() {
                return Err(GrammarError::DuplicateRule(s));
            }
        }
        Ok(Grammar { rules })
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, p)) in self.rules.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{s}->{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grammar{{{self}}}")
    }
}

impl Serialize for Grammar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.rules.len()))?;
        for (s, p) in &self.rules {
            map.serialize_entry(s.name(), p)?;
        }
        map.end()
    }
}
