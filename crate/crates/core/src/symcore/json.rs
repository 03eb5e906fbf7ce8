//! JSON form: `{"terms": [{"monomial": {"x": 2}, "coeff": "4"}, ...]}`,
//! terms in canonical order, coefficients as decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, Polynomial, Symbol};

struct MonomialRepr<'a>(&'a Monomial);

impl Serialize for MonomialRepr<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.pairs().len()))?;
        for &(s, e) in self.0.pairs() {
            map.serialize_entry(s.name(), &e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    monomial: MonomialRepr<'a>,
    coeff: String,
}

#[derive(Serialize)]
struct PolyOut<'a> {
    terms: Vec<TermOut<'a>>,
}

#[derive(Deserialize)]
struct TermIn {
    monomial: BTreeMap<String, i32>,
    coeff: String,
}

#[derive(Deserialize)]
struct PolyIn {
    terms: Vec<TermIn>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| TermOut { monomial: MonomialRepr(m), coeff: c.to_string() })
            .collect();
        PolyOut { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyIn::deserialize(deserializer)?;
        let mut p = Polynomial::zero();
        for t in raw.terms {
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            let mut pairs = Vec::with_capacity(t.monomial.len());
            for (name, e) in t.monomial {
                if !Symbol::is_valid_name(&name) {
                    return Err(D::Error::custom(format!("invalid symbol name `{name}`")));
                }
                pairs.push((Symbol::new(&name), e));
            }
            p.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(p)
    }
}
