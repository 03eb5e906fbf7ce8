use num_bigint::BigInt;

use super::*;
use crate::symcore::{poly, sym};

fn b(n: i64) -> BigInt {
    BigInt::from(n)
}

fn ones(names: &[&str]) -> Vec<(crate::symcore::Symbol, Polynomial)> {
    names.iter().map(|s| (sym(s), Polynomial::one())).collect()
}

#[test]
fn key_packing_round_trips() {
    let key = TriKey::pack(12, 3, 40, 7);
    assert_eq!(key.unpack(), (12, 3, 40, 7));
    assert!(TriKey::pack(2, 9, 9, 9) < TriKey::pack(3, 0, 0, 0));
}

#[test]
fn worked_entries() {
    assert_eq!(build_triangle(Family::A, 4).get(4, 2, 2, 0), b(7));
    assert_eq!(build_triangle(Family::LowerA, 4).get(4, 1, 2, 0), b(11));
    let beta = build_triangle(Family::Beta, 4);
    assert_eq!(beta.get(4, 1, 1, 1), b(8));
    assert_eq!(beta.get(4, 1, 2, 0), b(6));
    assert_eq!(beta.get(4, 1, 0, 3), b(1));
    let eb = build_triangle(Family::EulerianB, 2);
    assert_eq!([0, 1, 2].map(|k| eb.get(2, k, 0, 0)), [b(1), b(6), b(1)]);
}

#[test]
fn diagonal_is_stirling_second_kind() {
    let a = build_triangle(Family::A, 10);
    let s2 = build_triangle(Family::Stirling2, 10);
    for n in 1..=10 {
        for k in 1..=n {
            assert_eq!(a.get(n, k, k, 0), s2.get(n, k, 0, 0), "n={n} k={k}");
        }
    }
}

#[test]
fn first_columns_are_classical() {
    let a = build_triangle(Family::A, 11);
    let e = build_triangle(Family::Eulerian, 10);
    let c = build_triangle(Family::C, 11);
    let e2 = build_triangle(Family::Eulerian2, 10);
    let bt = build_triangle(Family::B, 11);
    let eb = build_triangle(Family::EulerianB, 10);
    for n in 1..=10 {
        for l in 0..=2 * n {
            assert_eq!(a.get(n + 1, 1, l, 0), e.get(n, l, 0, 0));
            assert_eq!(c.get(n + 1, 1, l, 0), e2.get(n, l, 0, 0));
        }
    }
    for n in 0..=10 {
        for l in 0..=n {
            assert_eq!(bt.get(n + 1, 1, l, 0), eb.get(n, l, 0, 0), "n={n} l={l}");
        }
    }
}

#[test]
fn classical_rows() {
    let row = |f: Family, n: usize| -> Vec<BigInt> {
        let t = build_triangle(f, n);
        (0..=2 * n).map(|k| t.get(n, k, 0, 0)).collect::<Vec<_>>()
    };
    assert_eq!(row(Family::Stirling2, 4)[..5], [0, 1, 7, 6, 1].map(b));
    assert_eq!(row(Family::Stirling1, 4)[..5], [0, 6, 11, 6, 1].map(b));
    assert_eq!(row(Family::Eulerian, 4)[..5], [0, 1, 11, 11, 1].map(b));
    assert_eq!(row(Family::Eulerian2, 3)[..4], [0, 1, 8, 6].map(b));
    assert_eq!(row(Family::Lah, 4)[..5], [0, 24, 36, 12, 1].map(b));
    assert_eq!(row(Family::Bessel, 3)[..4], [1, 6, 15, 15].map(b));
    let cat = build_triangle(Family::Catalan, 8);
    let cats: Vec<BigInt> = (0..=8).map(|n| cat.get(n, 0, 0, 0)).collect();
    assert_eq!(cats, [1, 1, 2, 5, 14, 42, 132, 429, 1430].map(b));
}

#[test]
fn polynomial_entries_in_p() {
    let ap = build_triangle(Family::Ap, 4);
    assert_eq!(ap.entry(4, 1, 2, 0), poly("4*p"));
    assert_eq!(ap.entry(4, 1, 3, 0), poly("p^2"));
    assert!(ap.is_nonnegative());
}

#[test]
fn integer_families_are_nonnegative() {
    for &f in FAMILIES {
        assert!(build_triangle(f, 7).is_nonnegative(), "{f}");
    }
}

#[test]
fn rows_stream_matches_built_triangle() {
    let t = build_triangle(Family::Beta, 6);
    for (n, row) in triangle_rows(Family::Beta, 6) {
        let built: Vec<_> = t.row(n).map(|(key, p)| (key, p.clone())).collect();
        let streamed: Vec<_> = row.into_iter().collect();
        assert_eq!(built, streamed, "n={n}");
    }
}

#[test]
fn family_names_round_trip() {
    for &f in FAMILIES {
        assert_eq!(f.name().parse::<Family>().unwrap(), f);
    }
    assert!(matches!("Z".parse::<Family>(), Err(TriangleError::UnknownFamily(_))));
    assert!(matches!("S2".parse::<Assembly>(), Err(TriangleError::NoPolynomialForm(_))));
    assert!(matches!(assemble(Assembly::Cxyz, 0), Err(TriangleError::OutOfRange { .. })));
}

#[test]
fn assembled_examples() {
    let b3 = assemble(Assembly::B, 3).unwrap().subs(&ones(&["y", "z"])).unwrap();
    assert_eq!(b3, poly("x + 3*x^2 + 7*x^3 + 3*x^4 + x^5"));
    assert_eq!(assemble(Assembly::Tx, 2).unwrap(), poly("x + x^2"));
    assert_eq!(assemble(Assembly::A, 0).unwrap(), Polynomial::one());
    assert_eq!(assemble(Assembly::A, 3).unwrap(), poly("(x*y^2 + x^2*y)*z + 3*x^2*y*z^2 + x^3*z^3"));
    assert_eq!(assemble(Assembly::Cx, 3).unwrap(), poly("x + 8*x^2 + 6*x^3"));
    let rising = |n: usize| (0..n).map(|i| &poly("z") + &Polynomial::constant(i as i64)).product();
    for n in 1..=8 {
        let a = assemble(Assembly::A, n).unwrap().subs(&ones(&["x", "y"])).unwrap();
        assert_eq!(a, rising(n), "n={n}");
        let w = assemble(Assembly::W, n).unwrap().subs(&ones(&["x", "y"])).unwrap();
        assert_eq!(w, rising(n), "n={n}");
    }
}

#[test]
fn lah_row_sums_of_lower_a() {
    let lah = build_triangle(Family::Lah, 8);
    for n in 1..=8 {
        let a = assemble(Assembly::LowerA, n).unwrap().subs(&ones(&["x", "y"])).unwrap();
        for k in 1..=n {
            assert_eq!(a.coefficient_in(sym("z"), k as i32), Polynomial::constant(lah.get(n, k, 0, 0)));
        }
    }
}

#[test]
fn assembled_families_satisfy_their_polynomial_recurrences() {
    for n in 0..=8 {
        assert_eq!(assemble(Assembly::A, n).unwrap(), recurrences::binary_forest_xyz(n), "A n={n}");
        assert_eq!(assemble(Assembly::LowerA, n).unwrap(), recurrences::full_binary_forest_xyz(n));
        assert_eq!(assemble(Assembly::Ctilde, n).unwrap(), recurrences::ctilde_xyz(n), "C n={n}");
        assert_eq!(assemble(Assembly::Beta, n).unwrap(), recurrences::beta_uvwq(n), "beta n={n}");
        assert_eq!(assemble(Assembly::B, n).unwrap(), recurrences::type_b_xyz(n), "B n={n}");
        assert_eq!(assemble(Assembly::E, n).unwrap(), recurrences::type_b_second_xyz(n), "E n={n}");
        assert_eq!(assemble(Assembly::W, n).unwrap(), recurrences::swap_xyz(n), "W n={n}");
    }
}

#[test]
fn gamma_examples() {
    let (x, y, z) = (sym("x"), sym("y"), sym("z"));
    let g = gamma_expand(&poly("x*y^3 + 4*x^2*y^2 + x^3*y"), z, (x, y)).unwrap();
    assert_eq!(g.get(0, 1), b(1));
    assert_eq!(g.get(0, 2), b(2));
    assert_eq!(g.coeffs.len(), 2);
    let g = gamma_expand(&poly("x^2 + y^2"), z, (x, y)).unwrap();
    assert_eq!((g.get(0, 0), g.get(0, 1)), (b(1), b(-2)));
    assert!(!g.is_nonnegative());
    assert!(matches!(gamma_expand(&poly("x^2*z + y*z"), z, (x, y)), Err(BasisError::NotHomogeneous { slice: 1 })));
    assert!(matches!(gamma_expand(&poly("x*y^2"), z, (x, y)), Err(BasisError::NotSymmetric { .. })));
}

#[test]
fn lower_a_is_partial_gamma_positive() {
    let gamma = build_triangle(Family::Gamma, 8);
    let (x, y, z) = (sym("x"), sym("y"), sym("z"));
    for n in 1..=8 {
        let g = gamma_expand(&assemble(Assembly::LowerA, n).unwrap(), z, (x, y)).unwrap();
        assert!(g.is_nonnegative());
        for (&(k, l), c) in &g.coeffs {
            assert_eq!(*c, gamma.get(n, k as usize, l as usize, 0), "n={n} k={k} l={l}");
        }
        assert_eq!(g.coeffs.len(), gamma.row(n).count());
    }
}

#[test]
fn e_examples() {
    let (x, y, z) = (sym("x"), sym("y"), sym("z"));
    let e = e_expand(&poly("x*y*z"), (x, y, z)).unwrap();
    assert_eq!(e.coeffs.into_iter().collect::<Vec<_>>(), vec![((0, 0, 1), b(1))]);
    let e = e_expand(&poly("x*y^2*z^2 + x^2*y*z^2 + x^2*y^2*z"), (x, y, z)).unwrap();
    assert_eq!(e.coeffs.into_iter().collect::<Vec<_>>(), vec![((0, 1, 1), b(1))]);
    let e = e_expand(&poly("x^2 + y^2 + z^2"), (x, y, z)).unwrap();
    assert_eq!((e.get(2, 0, 0), e.get(0, 1, 0)), (b(1), b(-2)));
    assert!(e.first_negative().is_some());
    assert!(matches!(e_expand(&poly("x^2 + y"), (x, y, z)), Err(BasisError::NotSymmetric { .. })));
    assert!(matches!(e_expand(&poly("x + w"), (x, y, z)), Err(BasisError::UnexpectedSymbol(_))));
}

#[test]
fn bessel_diagonal() {
    let bes = build_triangle(Family::Bessel, 10);
    for n in 0..=10usize {
        let lhs = assemble(Assembly::CtildeDiagonal, n + 1).unwrap();
        let mut rhs = Polynomial::zero();
        for j in 0..=n {
            let m = crate::symcore::mono(&[(sym("x"), (n + 1 + j) as i32), (sym("z"), (n + 1 - j) as i32)]);
            rhs.add_term(m, bes.get(n, j, 0, 0));
        }
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn format_index_per_arity() {
    assert_eq!(format_index(Family::Beta, 4, 1, 1, 1), "(4,1,1,1)");
    assert_eq!(format_index(Family::A, 4, 2, 2, 0), "(4,2,2)");
    assert_eq!(format_index(Family::Lah, 4, 2, 0, 0), "(4,2)");
    assert_eq!(format_index(Family::Catalan, 4, 0, 0, 0), "(4)");
}
