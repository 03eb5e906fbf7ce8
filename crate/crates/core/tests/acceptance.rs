//! Acceptance run: one line per criterion, exit status 1 if any fails.
//!
//! Criteria 1-7 run the identity checks at their full caps; criterion 8 runs
//! the algebraic property suites on 1000 seeded random cases each.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use normgram::normord::{apply_directly, normal_order_power};
use normgram::verify::{run_all, CheckResult, Profile, REGISTRY};
use normgram::{parse, sym, Grammar, Monomial, Polynomial, Symbol};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const CRITERIA: &[(&str, &[&str])] = &[
    ("golden expansions", &["golden_expansions"]),
    ("binary forests, A triangle and normal order agree for n <= 9", &["eulerian_forest_triple"]),
    ("exc/cdes/cyc permutation statistics for n <= 8", &["pq_eulerian_cycles"]),
    (
        "full binary forests, list partitions, Lah numbers, partial gamma-positivity",
        &["full_binary_forests", "list_partitions", "lah_numbers", "partial_gamma_positivity"],
    ),
    (
        "second-order Eulerian family, Catalan EGF, Bessel, Stirling permutations and lists, beta",
        &[
            "ternary_forest_triple",
            "second_order_eulerian_grammar",
            "ctilde_diagonal_recurrence",
            "catalan_egf",
            "bessel_numbers",
            "dumont_recurrence",
            "stirling_permutation_trivariate",
            "full_ternary_forests",
            "stirling_lists",
            "beta_recurrence",
            "partial_e_positivity",
        ],
    ),
    (
        "type B Eulerian family, flag ascent-plateaus, Bessel polynomials, up-down runs",
        &[
            "type_b_eulerian_numbers",
            "type_b_eulerian_polynomial",
            "type_b_swap_grammar",
            "type_b_second_grammar",
            "flag_ascent_plateau",
            "ascent_plateaus",
            "bessel_polynomial_e",
            "up_down_runs",
            "swap_grammar_runs",
        ],
    ),
    (
        "Stirling grammars, exponential surrogate, Dumont grammar, A_n specializations",
        &[
            "stirling2_dual_grammar",
            "stirling2_normal_order",
            "exponential_surrogate",
            "dumont_eulerian_grammar",
            "eulerian_specializations",
        ],
    ),
];

const CASES: u32 = 1000;

type Suite = fn() -> Result<(), String>;

fn runner(seed: u8) -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

fn xyz() -> [Symbol; 3] {
    [sym("x"), sym("y"), sym("z")]
}

/// Up to `terms` terms in x, y, z with exponents in `lo..=hi`.
fn polynomial(terms: usize, lo: i32, hi: i32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-6i64..=6, prop::array::uniform3(lo..=hi)), 0..=terms).prop_map(|ts| {
        let vars = xyz();
        Polynomial::from_terms(
            ts.into_iter().map(|(c, e)| (Monomial::from_pairs(vars.iter().copied().zip(e)), BigInt::from(c))),
        )
    })
}

fn grammar() -> impl Strategy<Value = Grammar> {
    prop::array::uniform3(polynomial(2, 0, 2)).prop_map(|images| Grammar::from_rules(xyz().into_iter().zip(images)))
}

fn ring_axioms() -> Result<(), String> {
    let p = || polynomial(4, -2, 3);
    runner(1)
        .run(&(p(), p(), p()), |(a, b, c)| {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &Polynomial::one(), a.clone());
            prop_assert_eq!(&a + &Polynomial::zero(), a.clone());
            let neg = -&a;
            prop_assert!((&a + &neg).is_zero());
            prop_assert_eq!(&a - &b, &a + &(-&b));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn leibniz() -> Result<(), String> {
    let p = || polynomial(4, -1, 3);
    runner(2)
        .run(&(grammar(), p(), p()), |(g, f, h)| {
            let lhs = g.derive(&(&f * &h));
            let rhs = &(&g.derive(&f) * &h) + &(&f * &g.derive(&h));
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn round_trip() -> Result<(), String> {
    runner(3)
        .run(&polynomial(6, -3, 4), |f| {
            let text = f.to_string();
            prop_assert_eq!(parse(&text).map_err(|e| TestCaseError::fail(e.to_string()))?, f);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn path_independence() -> Result<(), String> {
    runner(4)
        .run(&(grammar(), polynomial(2, 0, 2), polynomial(3, 0, 2), 0usize..=3), |(g, w, f, n)| {
            let nf = normal_order_power(&w, &g, n);
            prop_assert_eq!(nf.apply(&f), apply_directly(&w, &g, &f, n));
            if n > 0 {
                let stepped = normal_order_power(&w, &g, n - 1).step();
                prop_assert_eq!(stepped.coeffs(), nf.coeffs());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let results = run_all(Profile::Full);
    let mut all_ok = true;

    let covered: BTreeSet<&str> = CRITERIA.iter().flat_map(|(_, ids)| ids.iter().copied()).collect();
    let registered: BTreeSet<&str> = REGISTRY.iter().map(|c| c.id).collect();
    if covered != registered {
        println!("criteria and registry disagree: {:?}", covered.symmetric_difference(&registered).collect::<Vec<_>>());
        all_ok = false;
    }

    for (i, (name, ids)) in CRITERIA.iter().enumerate() {
        let mine: Vec<&CheckResult> = results.iter().filter(|r| ids.contains(&r.check_id.as_str())).collect();
        let failed: Vec<&&CheckResult> = mine.iter().filter(|r| !r.passed()).collect();
        let ok = failed.is_empty() && mine.len() == ids.len();
        all_ok &= ok;
        println!("criterion {} {}: {name} ({} checks)", i + 1, if ok { "PASS" } else { "FAIL" }, mine.len());
        for r in failed {
            println!("    {r}");
        }
    }

    let suites: [(&str, Suite); 4] = [
        ("ring axioms", ring_axioms),
        ("Leibniz rule", leibniz),
        ("parse/render round trip", round_trip),
        ("normal form path independence", path_independence),
    ];
    let mut failures = Vec::new();
    for (name, suite) in suites {
        if let Err(e) = suite() {
            failures.push(format!("{name}: {e}"));
        }
    }
    let ok = failures.is_empty();
    all_ok &= ok;
    println!(
        "criterion 8 {}: property suites, {CASES} seeded cases each ({} suites)",
        if ok { "PASS" } else { "FAIL" },
        suites.len()
    );
    for f in failures {
        println!("    {f}");
    }

    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
