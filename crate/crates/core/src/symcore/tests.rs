use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;

fn x() -> Polynomial {
    Polynomial::var(sym("x"))
}
fn y() -> Polynomial {
    Polynomial::var(sym("y"))
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Schoolbook product over explicit term lists, independent of the hash-map path.
fn schoolbook(a: &[(Vec<(Symbol, i32)>, i64)], b: &[(Vec<(Symbol, i32)>, i64)]) -> Polynomial {
    let mut acc: Vec<(Monomial, i64)> = Vec::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut pairs = ma.clone();
            pairs.extend(mb.iter().copied());
            let m = Monomial::from_pairs(pairs);
            match acc.iter_mut().find(|(n, _)| *n == m) {
                Some(slot) => slot.1 += ca * cb,
                None => acc.push((m, ca * cb)),
            }
        }
    }
    Polynomial::from_terms(acc.into_iter().map(|(m, c)| (m, BigInt::from(c))))
}

#[test]
fn arithmetic_examples() {
    assert_eq!((&x() + &y()) * (&x() - &y()), poly("x^2 - y^2"));
    let p = poly("3*x^2*y - 7*z + 11");
    assert_eq!(&p + &Polynomial::zero(), p);

    let (sx, sy, sz) = (sym("x"), sym("y"), sym("z"));
    let lhs = vec![(vec![(sx, 1), (sy, 1)], 1), (vec![(sy, 1), (sz, 1)], 1), (vec![(sz, 1), (sx, 1)], 1)];
    let rhs = vec![(vec![(sx, 1), (sy, 1), (sz, 1)], 1)];
    let expected = schoolbook(&lhs, &rhs);
    assert_eq!(poly("(x*y+y*z+z*x)*(x*y*z)"), expected);
    assert_eq!(expected, poly("x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"));
}

#[test]
fn partial_derivative_examples() {
    let (sx, sz) = (sym("x"), sym("z"));
    assert_eq!(poly("x^2*y").partial_derivative(sx), poly("2*x*y"));
    assert!(poly("x + y").partial_derivative(sz).is_zero());
    assert_eq!(poly("x*y^2 - x^3").partial_derivative(sx), poly("y^2 - 3*x^2"));
    // Laurent: d/dy y^-1 = -y^-2
    assert_eq!(poly("y^-1").partial_derivative(sym("y")), poly("-y^-2"));
}

#[test]
fn substitute_examples() {
    let (u, v) = (sym("u"), sym("v"));
    let b: HashMap<_, _> = [(u, poly("x*y")), (v, poly("x+y"))].into_iter().collect();
    assert_eq!(poly("u*v").substitute(&b).unwrap(), poly("x^2*y + x*y^2"));

    let f = poly("3*u^2 - v + w");
    assert_eq!(f.substitute(&HashMap::new()).unwrap(), f);

    let b: HashMap<_, _> = [(u, poly("x+y+z")), (v, poly("x*y+x*z+y*z"))].into_iter().collect();
    let g = poly("u^2*v").substitute(&b).unwrap();
    let ones: HashMap<_, _> = ["x", "y", "z"].iter().map(|n| (sym(n), rat(1))).collect();
    assert_eq!(g.evaluate(&ones).unwrap(), rat(27));

    // simultaneous, not sequential
    let swap: HashMap<_, _> = [(sym("x"), y()), (sym("y"), x())].into_iter().collect();
    assert_eq!(poly("x^2*y").substitute(&swap).unwrap(), poly("x*y^2"));
}

#[test]
fn substitute_rejects_negative_power_of_composite() {
    let b: HashMap<_, _> = [(sym("u"), poly("x+y"))].into_iter().collect();
    let err = poly("u^-1").substitute(&b).unwrap_err();
    assert!(matches!(err, SubstituteError::NegativePowerOfComposite { exponent: -1, .. }));
    // a unit monomial image is fine
    let b: HashMap<_, _> = [(sym("u"), poly("x*y^-1"))].into_iter().collect();
    assert_eq!(poly("u^-2").substitute(&b).unwrap(), poly("x^-2*y^2"));
}

#[test]
fn coefficient_and_evaluate() {
    let p = poly("x*y^3 + 4*x^2*y^2 + x^3*y");
    assert_eq!(p.coefficient_of(&mono(&[(sym("x"), 2), (sym("y"), 2)])), BigInt::from(4));
    assert_eq!(p.coefficient_of(&mono(&[(sym("x"), 5)])), BigInt::from(0));

    let at = |a: i64, b: i64| -> HashMap<Symbol, BigRational> {
        [(sym("x"), rat(a)), (sym("y"), rat(b))].into_iter().collect()
    };
    assert_eq!(poly("x^2 - y^2").evaluate(&at(3, 3)).unwrap(), rat(0));
    assert_eq!(poly("7*x^2*y^2 + 4*x^3*y").evaluate(&at(1, 1)).unwrap(), rat(11));
    assert_eq!(poly("x*y^-1").evaluate(&at(1, 2)).unwrap(), BigRational::new(1.into(), 2.into()));
    assert!(matches!(poly("x*y^-1").evaluate(&at(1, 0)), Err(EvalError::Pole { exponent: -1, .. })));
    let only_x: HashMap<_, _> = [(sym("x"), rat(1))].into_iter().collect();
    assert!(matches!(poly("x*y").evaluate(&only_x), Err(EvalError::Unbound(_))));
}

#[test]
fn canonical_render_examples() {
    assert_eq!(poly("x^2 - y^2").to_string(), "x^2 - y^2");
    assert_eq!(Polynomial::zero().to_string(), "0");
    assert_eq!(poly("x*y^3 + 4*x^2*y^2 + x^3*y").to_string(), "x^3*y + 4*x^2*y^2 + x*y^3");
    assert_eq!(poly("-x + 1").to_string(), "-x + 1");
    assert_eq!(poly("-5").to_string(), "-5");
    assert_eq!(poly("2*x*y^-1").to_string(), "2*x*y^-1");
}

#[test]
fn slices_and_degrees() {
    let p = poly("x*z^2 + y*z^2 + 3*z + 4");
    let s = p.slices(sym("z"));
    assert_eq!(s[&2], poly("x + y"));
    assert_eq!(s[&1], poly("3"));
    assert_eq!(s[&0], poly("4"));
    assert_eq!(p.degree_in(sym("z")), Some(2));
    assert_eq!(poly("x^2 + x*y").homogeneous_degree(), Some(2));
    assert_eq!(poly("x^2 + y").homogeneous_degree(), None);
}

#[test]
fn pow_matches_repeated_product() {
    let p = poly("x + 2*y - 1");
    let mut acc = Polynomial::one();
    for e in 0..6 {
        assert_eq!(p.pow(e), acc);
        acc = &acc * &p;
    }
}

pub(crate) fn arb_poly() -> impl Strategy<Value = Polynomial> {
    let names = ["x", "y", "z", "u", "v"];
    let term = (proptest::collection::vec((0usize..5, 0i32..=6), 0..4), -1000i64..=1000);
    proptest::collection::vec(term, 0..6).prop_map(move |terms| {
        Polynomial::from_terms(terms.into_iter().map(|(pairs, c)| {
            (Monomial::from_pairs(pairs.into_iter().map(|(i, e)| (sym(names[i]), e))), BigInt::from(c))
        }))
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn leibniz(a in arb_poly(), b in arb_poly()) {
        for s in ["x", "y", "w"] {
            let s = sym(s);
            let lhs = (&a * &b).partial_derivative(s);
            let rhs = &(&a.partial_derivative(s) * &b) + &(&a * &b.partial_derivative(s));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn render_parse_round_trip(a in arb_poly()) {
        prop_assert_eq!(parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn substitute_is_a_homomorphism(a in arb_poly(), b in arb_poly()) {
        let bind: HashMap<_, _> = [
            (sym("x"), poly("u + 2*v")),
            (sym("y"), poly("x*y - 1")),
            (sym("u"), poly("x")),
        ].into_iter().collect();
        let lhs = (&a * &b).substitute(&bind).unwrap();
        let rhs = &a.substitute(&bind).unwrap() * &b.substitute(&bind).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
