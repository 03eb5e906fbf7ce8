//! The identity suite.
//!
//! Each registered check computes the same polynomial along at least two
//! independent paths (normal ordering, coefficient recurrence, polynomial
//! recurrence, closed form, brute-force enumeration) and compares them
//! exactly, one `n` at a time.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::exec::Strategy;
use crate::grammar::Grammar;
use crate::normord::{apply_directly, normal_order_power};
use crate::oracle::{Flavor, ObjectKind, Oracle, Stat};
use crate::series::{bessel_polynomial, catalan_egf_closed_form};
use crate::symcore::{mono, poly, sym, Polynomial, Symbol};
use crate::triangles::{assemble, build_triangle, e_expand_sliced, gamma_expand, recurrences, Assembly, Family};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown profile `{0}` (expected quick or full)")]
    UnknownProfile(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(VerifyError::UnknownProfile(s.to_owned())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first disagreement found by a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {}: {} != {}", self.n, self.label, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub n_range: [usize; 2],
    pub status: Status,
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [lo, hi] = self.n_range;
        match &self.witness {
            None => write!(f, "pass {} n={lo}..={hi}", self.check_id),
            Some(w) => write!(f, "FAIL {} n={lo}..={hi}: {w}", self.check_id),
        }
    }
}

type Outcome = Result<(), Witness>;

/// A registered identity.
pub struct Check {
    pub id: &'static str,
    /// The identity being checked, in words.
    pub claim: &'static str,
    pub min_n: usize,
    pub quick: usize,
    pub full: usize,
    run: fn(&Ctx, usize) -> Outcome,
}

impl Check {
    pub fn cap(&self, profile: Profile) -> usize {
        match profile {
            Profile::Quick => self.quick,
            Profile::Full => self.full,
        }
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check").field("id", &self.id).field("full", &self.full).finish()
    }
}

struct Ctx {
    oracle: Oracle,
}

impl Ctx {
    fn tally(&self, n: usize, kind: ObjectKind, assignment: &[(Stat, &str)]) -> Result<Polynomial, Witness> {
        let a: Vec<(Stat, Symbol)> = assignment.iter().map(|(t, s)| (*t, sym(s))).collect();
        self.oracle.tally(kind, n, &a).map_err(|e| error(n, kind.name(), e))
    }
}

fn error(n: usize, label: &str, e: impl fmt::Display) -> Witness {
    Witness { n, label: label.to_owned(), lhs: format!("error: {e}"), rhs: String::new() }
}

fn eq(n: usize, label: &str, lhs: &Polynomial, rhs: &Polynomial) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness { n, label: label.to_owned(), lhs: lhs.to_string(), rhs: rhs.to_string() })
    }
}

fn holds(n: usize, label: &str, ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Witness { n, label: label.to_owned(), lhs: detail(), rhs: String::new() })
    }
}

fn asm(n: usize, family: Assembly) -> Result<Polynomial, Witness> {
    assemble(family, n).map_err(|e| error(n, family.name(), e))
}

fn grammar(name: &str) -> Grammar {
    Grammar::preset(name).expect("built-in preset")
}

/// `(w·D_G)^n` with `D_G` specialized to the symbol `at`.
fn normal(w: &str, g: &str, n: usize, at: &str) -> Polynomial {
    normal_order_power(&poly(w), &grammar(g), n).specialize_d(&Polynomial::var(sym(at)))
}

fn subs(f: &Polynomial, pairs: &[(&str, &str)]) -> Polynomial {
    let pairs: Vec<(Symbol, Polynomial)> = pairs.iter().map(|(s, p)| (sym(s), poly(p))).collect();
    f.subs(&pairs).expect("substitution of polynomial images")
}

/// `Σ_k coeff(k)·Π s^e`, skipping zero coefficients.
fn collect(terms: impl IntoIterator<Item = (BigInt, Vec<(&'static str, i32)>)>) -> Polynomial {
    let mut out = Polynomial::zero();
    for (c, exps) in terms {
        let pairs: Vec<(Symbol, i32)> = exps.into_iter().map(|(s, e)| (sym(s), e)).collect();
        out.add_term(mono(&pairs), c);
    }
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn rising(n: usize) -> Polynomial {
    (0..n).map(|i| &poly("z") + &Polynomial::constant(i as i64)).product()
}

fn symmetric_in_xyz(f: &Polynomial) -> bool {
    let swaps = [[("x", "y"), ("y", "x")], [("y", "z"), ("z", "y")]];
    swaps.iter().all(|s| subs(f, s) == *f)
}

const GOLDEN: &[(usize, &str, &str, &[&str])] = &[
    (2, "x", "eulerian", &["x*y", "x^2"]),
    (3, "x", "eulerian", &["x*y^2 + x^2*y", "3*x^2*y", "x^3"]),
    (4, "x", "eulerian", &["x*y^3 + 4*x^2*y^2 + x^3*y", "7*x^2*y^2 + 4*x^3*y", "6*x^3*y", "x^4"]),
    (2, "x", "pq-eulerian", &["x*y", "x^2"]),
    (3, "x", "pq-eulerian", &["x*y^2 + p*x^2*y", "3*x^2*y", "x^3"]),
    (4, "x", "pq-eulerian", &["x*y^3 + 4*p*x^2*y^2 + p^2*x^3*y", "7*x^2*y^2 + 4*p*x^3*y", "6*x^3*y", "x^4"]),
    (2, "x*y", "full-binary", &["x*y^2 + x^2*y", "x^2*y^2"]),
    (3, "x*y", "full-binary", &["x*y^3 + 4*x^2*y^2 + x^3*y", "3*x^2*y^3 + 3*x^3*y^2", "x^3*y^3"]),
    (
        4,
        "x*y",
        "full-binary",
        &[
            "x*y^4 + 11*x^2*y^3 + 11*x^3*y^2 + x^4*y",
            "7*x^2*y^4 + 22*x^3*y^3 + 7*x^4*y^2",
            "6*x^3*y^4 + 6*x^4*y^3",
            "x^4*y^4",
        ],
    ),
    (2, "u", "elementary-binary", &["u*v", "u^2"]),
    (3, "u", "elementary-binary", &["u*v^2 + 2*u^2", "3*u^2*v", "u^3"]),
    (2, "w", "elementary", &["w*v", "w^2"]),
    (3, "w", "elementary", &["(v^2 + 2*w*u)*w", "3*v*w^2", "w^3"]),
];

const BETA: &[&str] = &[
    "w*q",
    "v*w*q + w^2*q^2",
    "(v^2*w + 2*u*w^2)*q + 3*v*w^2*q^2 + w^3*q^3",
    "(v^3*w + 8*u*v*w^2 + 6*w^3)*q + (7*v^2*w^2 + 8*u*w^3)*q^2 + 6*v*w^3*q^3 + w^4*q^4",
];

fn golden_expansions(_: &Ctx, n: usize) -> Outcome {
    for (m, w, g, coeffs) in GOLDEN {
        if *m != n {
            continue;
        }
        let got = normal_order_power(&poly(w), &grammar(g), n).render_text();
        let want =
            coeffs.iter().enumerate().map(|(k, c)| format!("D^{}: {}", k + 1, poly(c))).collect::<Vec<_>>().join(" ; ");
        if got != want {
            return Err(Witness { n, label: format!("({w}·D)^{n} under {g}"), lhs: got, rhs: want });
        }
    }
    if let Some(b) = BETA.get(n.wrapping_sub(1)) {
        let want = poly(b);
        eq(n, "beta from (w·D)^n", &normal("w", "elementary", n, "q"), &want)?;
        eq(n, "beta triangle", &asm(n, Assembly::Beta)?, &want)?;
    }
    if n == 3 {
        let b3 = subs(&normal("x*y", "swap", 3, "z"), &[("y", "1"), ("z", "1")]);
        eq(n, "B_3(x,1,1)", &b3, &poly("x + 3*x^2 + 7*x^3 + 3*x^4 + x^5"))?;
    }
    Ok(())
}

fn stirling2_dual_grammar(_: &Ctx, n: usize) -> Outcome {
    let s2 = build_triangle(Family::Stirling2, n);
    let lhs = grammar("stirling-dual").derive_power(&poly("a"), n);
    let rhs = collect((0..=n).map(|k| (s2.get(n, k, 0, 0), vec![("a", 1), ("b", k as i32)])));
    eq(n, "D^n(a)", &lhs, &rhs)
}

fn stirling2_normal_order(_: &Ctx, n: usize) -> Outcome {
    let s2 = build_triangle(Family::Stirling2, n);
    let rhs = collect((0..=n).map(|k| (s2.get(n, k, 0, 0), vec![("x", k as i32), ("d", k as i32)])));
    eq(n, "(x·D)^n", &normal("x", "shift", n, "d"), &rhs)
}

fn exponential_surrogate(_: &Ctx, n: usize) -> Outcome {
    let s1 = build_triangle(Family::Stirling1, n);
    let rhs = collect((0..=n).map(|k| (s1.get(n, k, 0, 0), vec![("a", n as i32), ("d", k as i32)])));
    eq(n, "(a·D)^n", &normal("a", "exponential", n, "d"), &rhs)
}

/// `Σ_k <n,k> s^k t^{n+1-k}`.
fn eulerian_homogenized(n: usize, s: &'static str, t: &'static str) -> Polynomial {
    let e = build_triangle(Family::Eulerian, n);
    collect((0..=n).map(|k| (e.get(n, k, 0, 0), vec![(s, k as i32), (t, (n + 1 - k) as i32)])))
}

fn dumont_eulerian_grammar(_: &Ctx, n: usize) -> Outcome {
    let g = grammar("dumont-eulerian");
    let rhs = eulerian_homogenized(n, "a", "b");
    eq(n, "D^n(a)", &g.derive_power(&poly("a"), n), &rhs)?;
    eq(n, "D^n(b)", &g.derive_power(&poly("b"), n), &rhs)?;
    let rhs = eulerian_homogenized(n, "x", "y");
    for (w, name) in [("x", "eulerian"), ("x*y", "full-binary")] {
        let g = grammar(name);
        for target in ["x", "y"] {
            let lhs = apply_directly(&poly(w), &g, &poly(target), n);
            eq(n, &format!("({w}·D)^n({target}) under {name}"), &lhs, &rhs)?;
        }
    }
    Ok(())
}

fn eulerian_forest_triple(ctx: &Ctx, n: usize) -> Outcome {
    let nf = normal("x", "eulerian", n, "z");
    eq(n, "normal order vs A triangle", &nf, &asm(n, Assembly::A)?)?;
    let forests =
        ctx.tally(n, ObjectKind::Forests(Flavor::Binary), &[(Stat::Wx, "x"), (Stat::Wy, "y"), (Stat::Trees, "z")])?;
    eq(n, "normal order vs binary forests", &nf, &forests)
}

fn eulerian_specializations(_: &Ctx, n: usize) -> Outcome {
    let a_tri = build_triangle(Family::A, n + 1);
    let s2 = build_triangle(Family::Stirling2, n);
    let diag = collect((1..=n).map(|k| (a_tri.get(n, k, k, 0), vec![("z", k as i32)])));
    let stir = collect((1..=n).map(|k| (s2.get(n, k, 0, 0), vec![("z", k as i32)])));
    eq(n, "A_{n,k,k} vs S(n,k)", &diag, &stir)?;

    let a = asm(n, Assembly::A)?;
    let ya = &poly("y") * &subs(&a, &[("z", "1")]);
    eq(n, "y·A_n(x,y,1)", &ya, &eulerian_homogenized(n, "x", "y"))?;

    let s1 = build_triangle(Family::Stirling1, n);
    let a11z = subs(&a, &[("x", "1"), ("y", "1")]);
    eq(n, "A_n(1,1,z) rising factorial", &a11z, &rising(n))?;
    let unsigned = collect((1..=n).map(|k| (s1.get(n, k, 0, 0), vec![("z", k as i32)])));
    eq(n, "A_n(1,1,z) Stirling first kind", &a11z, &unsigned)?;

    let ax = recurrences::eulerian_x(n);
    eq(n, "A_n(x,1,1)", &subs(&a, &[("y", "1"), ("z", "1")]), &ax)?;
    eq(n, "x·A_n(1,x,1)", &(&poly("x") * &subs(&a, &[("x", "1"), ("y", "x"), ("z", "1")])), &ax)?;
    let next = asm(n + 1, Assembly::A)?.partial_derivative(sym("z"));
    eq(n, "∂_z A_{n+1} at y=1, z=0", &subs(&next, &[("y", "1"), ("z", "0")]), &ax)
}

fn pq_eulerian_cycles(ctx: &Ctx, n: usize) -> Outcome {
    let nf = normal("x", "pq-eulerian", n, "q");
    eq(n, "normal order vs A(p) triangle", &nf, &asm(n, Assembly::Apq)?)?;
    let perms = ctx.tally(n, ObjectKind::Permutations, &[(Stat::Exc, "e"), (Stat::Cdes, "p"), (Stat::Cyc, "q")])?;
    // x^{n-exc} y^{exc}
    let xn = Polynomial::var(sym("x")).pow(n as u32);
    let perms = subs(&(&perms * &xn), &[("e", "y*x^-1")]);
    eq(n, "normal order vs permutations", &nf, &perms)?;
    let p1 = subs(&nf, &[("p", "1")]);
    eq(n, "p = 1", &p1, &subs(&asm(n, Assembly::A)?, &[("z", "q")]))?;
    let axq = subs(&p1, &[("x", "1"), ("y", "x")]);
    eq(n, "exc/cyc polynomial recurrence", &axq, &recurrences::eulerian_xq(n))
}

fn full_binary_forests(ctx: &Ctx, n: usize) -> Outcome {
    let nf = normal("x*y", "full-binary", n, "z");
    eq(n, "normal order vs a triangle", &nf, &asm(n, Assembly::LowerA)?)?;
    eq(n, "normal order vs recurrence", &nf, &recurrences::full_binary_forest_xyz(n))?;
    let forests =
        ctx.tally(n, ObjectKind::Forests(Flavor::FullBinary), &[(Stat::Wx, "x"), (Stat::Wy, "y"), (Stat::Trees, "z")])?;
    eq(n, "normal order vs full binary forests", &nf, &forests)
}

fn lah_numbers(_: &Ctx, n: usize) -> Outcome {
    let a11z = subs(&asm(n, Assembly::LowerA)?, &[("x", "1"), ("y", "1")]);
    let closed = collect((1..=n).map(|k| {
        let c = crate::series::binom(n - 1, k - 1) * factorial(n) / factorial(k);
        (c, vec![("z", k as i32)])
    }));
    eq(n, "a_n(1,1,z) closed form", &a11z, &closed)?;
    let lah = build_triangle(Family::Lah, n);
    let tri = collect((1..=n).map(|k| (lah.get(n, k, 0, 0), vec![("z", k as i32)])));
    eq(n, "a_n(1,1,z) Lah triangle", &a11z, &tri)
}

fn list_partitions(ctx: &Ctx, n: usize) -> Outcome {
    let lists = ctx.tally(n, ObjectKind::ListPartitions, &[(Stat::Asc, "x"), (Stat::Des, "y"), (Stat::Bk, "z")])?;
    eq(n, "a triangle vs list partitions", &asm(n, Assembly::LowerA)?, &lists)
}

fn partial_gamma_positivity(ctx: &Ctx, n: usize) -> Outcome {
    let a = asm(n, Assembly::LowerA)?;
    let g = gamma_expand(&a, sym("z"), (sym("x"), sym("y"))).map_err(|e| error(n, "gamma expansion", e))?;
    holds(n, "gamma coefficients nonnegative", g.is_nonnegative(), || format!("{:?}", g.first_negative()))?;
    let gamma_tri = build_triangle(Family::Gamma, n);
    let from_expansion = collect(g.coeffs.iter().map(|(&(k, l), c)| (c.clone(), vec![("u", l), ("z", k)])));
    let from_triangle = collect(
        gamma_tri
            .row(n)
            .map(|((k, l, _), c)| (c.as_constant().expect("integer entry"), vec![("u", l as i32), ("z", k as i32)])),
    );
    eq(n, "gamma expansion vs gamma triangle", &from_expansion, &from_triangle)?;
    let uv = normal("u", "elementary-binary", n, "z");
    eq(n, "(u·D)^n vs gamma triangle", &uv, &asm(n, Assembly::Gamma)?)?;
    eq(n, "(u·D)^n at u=xy, v=x+y", &subs(&uv, &[("u", "x*y"), ("v", "x + y")]), &a)?;
    let lists = ctx.tally(n, ObjectKind::ListPartitions, &[(Stat::Bk, "z"), (Stat::Val, "q"), (Stat::Dd, "d")])?;
    let no_dd = lists.coefficient_in(sym("d"), 0);
    let by_valleys = collect(g.coeffs.iter().map(|(&(k, l), c)| (c.clone(), vec![("z", k), ("q", l - k)])));
    eq(n, "gamma(n,k,k+i) vs valleys without double descents", &by_valleys, &no_dd)
}

fn second_order_eulerian_grammar(_: &Ctx, n: usize) -> Outcome {
    let e2 = build_triangle(Family::Eulerian2, n);
    let rhs = collect((0..=n).map(|l| (e2.get(n, l, 0, 0), vec![("x", l as i32), ("y", (2 * n + 1 - l) as i32)])));
    let lhs = apply_directly(&poly("x"), &grammar("second-order"), &poly("x"), n);
    eq(n, "(x·D)^n(x)", &lhs, &rhs)?;
    let c = build_triangle(Family::C, n + 1);
    let col = collect((0..=2 * n + 1).map(|l| (c.get(n + 1, 1, l, 0), vec![("x", l as i32)])));
    eq(n, "C_{n+1,1,l} vs second-order Eulerian", &col, &asm(n, Assembly::Cx)?)
}

fn ternary_forest_triple(ctx: &Ctx, n: usize) -> Outcome {
    let nf = normal("x", "second-order", n, "z");
    eq(n, "normal order vs C triangle", &nf, &asm(n, Assembly::Ctilde)?)?;
    let forests =
        ctx.tally(n, ObjectKind::Forests(Flavor::Ternary), &[(Stat::Wx, "x"), (Stat::Wy, "y"), (Stat::Trees, "z")])?;
    eq(n, "normal order vs ternary forests", &nf, &forests)
}

fn ctilde_diagonal_recurrence(_: &Ctx, n: usize) -> Outcome {
    let diag = subs(&asm(n, Assembly::Ctilde)?, &[("y", "x")]);
    eq(n, "C̃_n(x,x,z)", &diag, &recurrences::ctilde_diagonal(n))
}

fn catalan_egf(_: &Ctx, n: usize) -> Outcome {
    let closed = catalan_egf_closed_form(n);
    let c = closed.coeff(n);
    let lhs = recurrences::ctilde_diagonal(n);
    match c.to_polynomial() {
        Some(p) => eq(n, "t^n/n! coefficient", &lhs, &p),
        None => Err(Witness { n, label: "t^n/n! coefficient".into(), lhs: lhs.to_string(), rhs: c.to_string() }),
    }
}

fn bessel_numbers(_: &Ctx, n: usize) -> Outcome {
    let lhs = recurrences::ctilde_diagonal(n + 1);
    let closed = collect((0..=n).map(|j| {
        let b = factorial(n + j) / ((BigInt::one() << j) * factorial(n - j) * factorial(j));
        (b, vec![("x", (n + 1 + j) as i32), ("z", (n + 1 - j) as i32)])
    }));
    eq(n, "C̃_{n+1}(x,x,z) closed form", &lhs, &closed)?;
    let bes = build_triangle(Family::Bessel, n);
    let tri =
        collect((0..=n).map(|j| (bes.get(n, j, 0, 0), vec![("x", (n + 1 + j) as i32), ("z", (n + 1 - j) as i32)])));
    eq(n, "C̃_{n+1}(x,x,z) Bessel triangle", &lhs, &tri)
}

fn dumont_recurrence(_: &Ctx, n: usize) -> Outcome {
    let rec = recurrences::stirling_trivariate(n);
    let lhs = grammar("dumont-stirling").derive_power(&poly("x"), n);
    eq(n, "D^n(x) vs recurrence", &lhs, &rec)?;
    holds(n, "symmetric in x, y, z", symmetric_in_xyz(&rec), || rec.to_string())
}

fn stirling_permutation_trivariate(ctx: &Ctx, n: usize) -> Outcome {
    let c = grammar("dumont-stirling").derive_power(&poly("x"), n);
    let perms =
        ctx.tally(n, ObjectKind::StirlingPermutations, &[(Stat::Asc, "x"), (Stat::Des, "y"), (Stat::Plat, "z")])?;
    eq(n, "grammar vs Stirling permutations", &c, &perms)?;
    let trees = ctx.tally(
        n,
        ObjectKind::Forests(Flavor::FullTernary),
        &[(Stat::Wx, "x"), (Stat::Wy, "y"), (Stat::Wz, "z"), (Stat::Trees, "q")],
    )?;
    eq(n, "grammar vs ternary increasing trees", &c, &trees.coefficient_in(sym("q"), 1))?;
    holds(n, "symmetric in x, y, z", symmetric_in_xyz(&c), || c.to_string())?;
    eq(n, "C_n(x,1,1)", &subs(&c, &[("y", "1"), ("z", "1")]), &asm(n, Assembly::Cx)?)
}

fn full_ternary_forests(ctx: &Ctx, n: usize) -> Outcome {
    let forests = ctx.tally(
        n,
        ObjectKind::Forests(Flavor::FullTernary),
        &[(Stat::Wx, "x"), (Stat::Wy, "y"), (Stat::Wz, "z"), (Stat::Trees, "q")],
    )?;
    eq(n, "normal order vs full ternary forests", &normal("x*y*z", "full-ternary", n, "q"), &forests)
}

fn stirling_lists(ctx: &Ctx, n: usize) -> Outcome {
    let nf = normal("x*y*z", "full-ternary", n, "q");
    let lists = ctx.tally(
        n,
        ObjectKind::StirlingLists,
        &[(Stat::Asc, "x"), (Stat::Plat, "y"), (Stat::Des, "z"), (Stat::Bk, "q")],
    )?;
    eq(n, "normal order vs Stirling lists", &nf, &lists)?;
    eq(n, "q^1 coefficient", &nf.coefficient_in(sym("q"), 1), &recurrences::stirling_trivariate(n))
}

/// `Σ_k q^k·β-part` read off the elementary expansion of `(xyz·D)^n`.
fn eta_in_elementary_basis(n: usize) -> Result<(Polynomial, bool), Witness> {
    let eta = normal("x*y*z", "full-ternary", n, "q");
    let slices =
        e_expand_sliced(&eta, sym("q"), (sym("x"), sym("y"), sym("z"))).map_err(|e| error(n, "e-expansion", e))?;
    let mut out = Polynomial::zero();
    let mut nonneg = true;
    for (k, e) in &slices {
        nonneg &= e.is_nonnegative();
        let part = e.to_polynomial(sym("u"), sym("v"), sym("w"));
        out += &part.mul_monomial(&mono(&[(sym("q"), *k)]));
    }
    Ok((out, nonneg))
}

fn beta_recurrence(_: &Ctx, n: usize) -> Outcome {
    let beta = asm(n, Assembly::Beta)?;
    eq(n, "(w·D)^n vs beta triangle", &normal("w", "elementary", n, "q"), &beta)?;
    eq(n, "beta polynomial recurrence", &recurrences::beta_uvwq(n), &beta)?;
    let (eta, _) = eta_in_elementary_basis(n)?;
    eq(n, "e-expansion of (xyz·D)^n", &eta, &beta)
}

fn partial_e_positivity(_: &Ctx, n: usize) -> Outcome {
    let tri = build_triangle(Family::Beta, n);
    holds(n, "beta entries nonnegative", tri.row(n).all(|(_, c)| !c.has_negative_coefficient()), || {
        "negative beta entry".into()
    })?;
    let (eta, nonneg) = eta_in_elementary_basis(n)?;
    holds(n, "e-coefficients nonnegative", nonneg, || eta.to_string())?;
    eq(n, "e-expansion vs beta triangle", &eta, &asm(n, Assembly::Beta)?)
}

const SIGNED_ENUM_MAX: usize = 7;

fn type_b_eulerian_numbers(ctx: &Ctx, n: usize) -> Outcome {
    let b = build_triangle(Family::B, n + 1);
    let eb = build_triangle(Family::EulerianB, n);
    let col = collect((0..=n).map(|l| (b.get(n + 1, 1, l, 0), vec![("x", l as i32)])));
    let row = collect((0..=n).map(|l| (eb.get(n, l, 0, 0), vec![("x", l as i32)])));
    eq(n, "B_{n+1,1,l} vs B(n,l)", &col, &row)?;
    if n <= SIGNED_ENUM_MAX {
        let signed = ctx.tally(n, ObjectKind::SignedPermutations, &[(Stat::DesB, "x")])?;
        eq(n, "B(n,l) vs signed permutations", &row, &signed)?;
    }
    Ok(())
}

/// `x·y^{2n+1}·B_n(x²/y²)`.
fn type_b_homogenized(n: usize) -> Polynomial {
    let bn = recurrences::eulerian_b_x(n);
    let h = subs(&bn, &[("x", "x^2*y^-2")]);
    &h * &Polynomial::from(mono(&[(sym("x"), 1), (sym("y"), 2 * n as i32 + 1)]))
}

fn type_b_swap_grammar(_: &Ctx, n: usize) -> Outcome {
    let rhs = type_b_homogenized(n);
    eq(n, "D_G^n(xy)", &grammar("type-b").derive_power(&poly("x*y"), n), &rhs)?;
    eq(n, "(xy·D)^n(xy) under swap", &apply_directly(&poly("x*y"), &grammar("swap"), &poly("x*y"), n), &rhs)?;
    let nf = normal("x*y", "swap", n, "z");
    eq(n, "normal order vs B triangle", &nf, &asm(n, Assembly::B)?)?;
    eq(n, "normal order vs recurrence", &nf, &recurrences::type_b_xyz(n))
}

fn type_b_second_grammar(_: &Ctx, n: usize) -> Outcome {
    let rhs = type_b_homogenized(n);
    let lhs = apply_directly(&poly("x"), &grammar("type-b-second"), &poly("x*y"), n);
    eq(n, "(x·D)^n(xy)", &lhs, &rhs)?;
    let nf = normal("x", "type-b-second", n, "z");
    eq(n, "normal order vs E triangle", &nf, &asm(n, Assembly::E)?)?;
    eq(n, "normal order vs recurrence", &nf, &recurrences::type_b_second_xyz(n))
}

fn type_b_eulerian_polynomial(_: &Ctx, n: usize) -> Outcome {
    let b = build_triangle(Family::B, n + 1);
    let col = collect((0..=n).map(|l| (b.get(n + 1, 1, l, 0), vec![("x", l as i32)])));
    eq(n, "B_n(x)", &recurrences::eulerian_b_x(n), &col)
}

fn ascent_plateaus(ctx: &Ctx, n: usize) -> Outcome {
    let e = build_triangle(Family::E, n + 1);
    let col = collect((0..=n).map(|l| (e.get(n + 1, 1, l, 0), vec![("x", l as i32)])));
    let ap = ctx.tally(n, ObjectKind::StirlingPermutations, &[(Stat::Ap, "x")])?;
    eq(n, "E_{n+1,1,l} vs ascent-plateaus", &col, &ap)
}

fn flag_ascent_plateau(ctx: &Ctx, n: usize) -> Outcome {
    let bx11 = subs(&asm(n, Assembly::B)?, &[("y", "1"), ("z", "1")]);
    let f = recurrences::flag_ascent_plateau_x(n);
    eq(n, "B_n(x,1,1) vs F_n(x)", &bx11, &f)?;
    let fap = ctx.tally(n, ObjectKind::StirlingPermutations, &[(Stat::Fap, "x")])?;
    eq(n, "F_n(x) vs flag ascent-plateaus", &f, &fap)
}

fn bessel_polynomial_e(_: &Ctx, n: usize) -> Outcome {
    let e11z = subs(&asm(n, Assembly::E)?, &[("x", "1"), ("y", "1")]);
    eq(n, "E_n(1,1,z)", &e11z, &bessel_polynomial(n))?;
    let c11z = subs(&asm(n, Assembly::Ctilde)?, &[("x", "1"), ("y", "1")]);
    eq(n, "C̃_n(1,1,z)", &c11z, &bessel_polynomial(n))
}

fn up_down_runs(ctx: &Ctx, n: usize) -> Outcome {
    let runs = ctx.tally(n, ObjectKind::Permutations, &[(Stat::Udrun, "x")])?;
    eq(n, "T_n(x)", &recurrences::up_down_runs_x(n), &runs)
}

const UDRUN_ENUM_MAX: usize = 8;

fn swap_grammar_runs(ctx: &Ctx, n: usize) -> Outcome {
    let nf = normal("x", "swap", n, "z");
    let w = asm(n, Assembly::W)?;
    eq(n, "normal order vs W triangle", &nf, &w)?;
    eq(n, "normal order vs recurrence", &nf, &recurrences::swap_xyz(n))?;
    let w11z = subs(&w, &[("x", "1"), ("y", "1")]);
    eq(n, "W_n(1,1,z) rising factorial", &w11z, &rising(n))?;
    let s1 = build_triangle(Family::Stirling1, n);
    let unsigned = collect((0..=n).map(|k| (s1.get(n, k, 0, 0), vec![("z", k as i32)])));
    eq(n, "W_n(1,1,z) Stirling first kind", &w11z, &unsigned)?;
    let wxy1 = subs(&w, &[("z", "1")]);
    let yn = Polynomial::from(mono(&[(sym("y"), n as i32)]));
    let t = recurrences::up_down_runs_x(n);
    eq(n, "W_n(x,y,1) vs y^n T_n(x/y)", &wxy1, &(&subs(&t, &[("x", "x*y^-1")]) * &yn))?;
    if n <= UDRUN_ENUM_MAX {
        let runs = ctx.tally(n, ObjectKind::Permutations, &[(Stat::Udrun, "x")])?;
        eq(n, "W_n(x,y,1) vs up-down runs", &wxy1, &(&subs(&runs, &[("x", "x*y^-1")]) * &yn))?;
    }
    Ok(())
}

macro_rules! check {
    ($id:ident, $min:expr, $quick:expr, $full:expr, $claim:expr) => {
        Check { id: stringify!($id), claim: $claim, min_n: $min, quick: $quick, full: $full, run: $id }
    };
}

/// Every registered check, sorted by id.
pub static REGISTRY: &[Check] = &[
    check!(ascent_plateaus, 1, 6, 7, "E_{n+1,1,l} counts Stirling permutations of order n with l ascent-plateaus"),
    check!(bessel_numbers, 0, 10, 10, "C̃_{n+1}(x,x,z) = Σ_j (n+j)!/(2^j (n-j)! j!) x^{n+1+j} z^{n+1-j}"),
    check!(bessel_polynomial_e, 1, 10, 10, "E_n(1,1,z) = C̃_n(1,1,z) is the Bessel polynomial"),
    check!(beta_recurrence, 1, 5, 6, "(w·D)^n under {u->3, v->2u, w->v} = beta triangle = e-expansion of (xyz·D)^n"),
    check!(catalan_egf, 0, 6, 10, "Σ C̃_n(x,x,z) t^n/n! = exp(xzt·Cat(x²t/2))"),
    check!(ctilde_diagonal_recurrence, 0, 10, 10, "C̃_n(x,x,z) from the C triangle satisfies its diagonal recurrence"),
    check!(
        dumont_eulerian_grammar,
        1,
        8,
        8,
        "D^n(a) = D^n(b) = b^{n+1} A_n(a/b) under {a->ab, b->ab}, with its x/y restatements"
    ),
    check!(
        dumont_recurrence,
        1,
        10,
        10,
        "C_{n+1} = xyz(∂x+∂y+∂z)C_n agrees with D^n(x) under {x,y,z->xyz}, and C_n is symmetric"
    ),
    check!(eulerian_forest_triple, 1, 6, 9, "(x·D)^n under {x->y, y->y} = A triangle = binary forest tallies"),
    check!(
        eulerian_specializations,
        1,
        8,
        8,
        "A_n(x,y,z) specializes to Stirling, Eulerian and rising-factorial polynomials"
    ),
    check!(exponential_surrogate, 0, 10, 10, "(a·D)^n under {a->a} = a^n Σ s(n,k) D^k"),
    check!(flag_ascent_plateau, 1, 6, 7, "B_n(x,1,1) = F_n(x) = Σ x^fap over Stirling permutations"),
    check!(full_binary_forests, 1, 5, 6, "(xy·D)^n under {x->1, y->1} = a triangle = full binary forest tallies"),
    check!(full_ternary_forests, 1, 5, 6, "(xyz·D)^n under {x,y,z->1} = full ternary forest tallies"),
    check!(golden_expansions, 1, 4, 4, "displayed low-order expansions, reproduced verbatim"),
    check!(lah_numbers, 1, 10, 10, "a_n(1,1,z) = Σ C(n-1,k-1) n!/k! z^k"),
    check!(list_partitions, 1, 5, 6, "a_{n,k,l} counts partitions of [n] into k lists with l ascents"),
    check!(partial_e_positivity, 1, 6, 8, "η_n is partial e-positive with coefficients β"),
    check!(
        partial_gamma_positivity,
        1,
        5,
        6,
        "a_n is partial γ-positive; γ(n,k,k+i) counts valleys without double descents"
    ),
    check!(pq_eulerian_cycles, 1, 7, 8, "(x·D)^n under {x->y, y->py} at D=q = Σ x^{n-exc} y^exc p^cdes q^cyc"),
    check!(
        second_order_eulerian_grammar,
        1,
        9,
        9,
        "(x·D)^n(x) = y^{2n+1} C_n(x/y) under {x->y², y->y²}, and C_{n+1,1,l} = C_{n,l}"
    ),
    check!(stirling2_dual_grammar, 0, 10, 10, "D^n(a) = a Σ S(n,k) b^k under {a->ab, b->b}"),
    check!(stirling2_normal_order, 0, 10, 10, "(x·D)^n = Σ S(n,k) x^k D^k under {x->1}"),
    check!(stirling_lists, 1, 4, 5, "(xyz·D)^n at D=q = Σ over Stirling-list partitions; its q coefficient is C_n"),
    check!(
        stirling_permutation_trivariate,
        1,
        5,
        6,
        "C_n(x,y,z) = Σ x^asc y^des z^plat over Stirling permutations = ternary tree leaf tallies"
    ),
    check!(
        swap_grammar_runs,
        1,
        8,
        10,
        "(x·D)^n under {x->y, y->x} = W triangle; W_n(1,1,z) rising; W_n(x,y,1) = y^n T_n(x/y)"
    ),
    check!(ternary_forest_triple, 1, 5, 7, "(x·D)^n under {x->y², y->y²} = C triangle = ternary forest tallies"),
    check!(type_b_eulerian_numbers, 0, 7, 9, "B_{n+1,1,l} = B(n,l) = des_B distribution over signed permutations"),
    check!(type_b_eulerian_polynomial, 0, 9, 9, "B_n(x) = Σ B_{n+1,1,l} x^l"),
    check!(
        type_b_second_grammar,
        1,
        8,
        8,
        "(x·D)^n(xy) = x y^{2n+1} B_n(x²/y²) under {x->y², y->xy}; normal order = E triangle"
    ),
    check!(
        type_b_swap_grammar,
        1,
        8,
        8,
        "(xy·D)^n(xy) = x y^{2n+1} B_n(x²/y²) under {x->y, y->x}; normal order = B triangle"
    ),
    check!(up_down_runs, 0, 8, 8, "T_n(x) recurrence = Σ x^udrun over permutations"),
];

pub fn find_check(id: &str) -> Result<&'static Check, VerifyError> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| VerifyError::UnknownCheck(id.to_owned()))
}

fn execute(check: &Check, n_max: usize, strategy: Strategy) -> CheckResult {
    let ctx = Ctx { oracle: Oracle::new(strategy) };
    let hi = n_max.min(check.full);
    let witness = (check.min_n..=hi).find_map(|n| (check.run)(&ctx, n).err());
    CheckResult {
        check_id: check.id.to_owned(),
        n_range: [check.min_n, hi],
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        witness,
    }
}

/// Runs one check for every `n` from its minimum up to `n_max`, clamped to the
/// check's full cap.
pub fn run_check(id: &str, n_max: usize) -> Result<CheckResult, VerifyError> {
    run_check_with(id, n_max, Strategy::default())
}

pub fn run_check_with(id: &str, n_max: usize, strategy: Strategy) -> Result<CheckResult, VerifyError> {
    Ok(execute(find_check(id)?, n_max, strategy))
}

/// Runs every check at its cap for `profile`, sorted by id.
pub fn run_all(profile: Profile) -> Vec<CheckResult> {
    run_all_with(profile, Strategy::default())
}

pub fn run_all_with(profile: Profile, strategy: Strategy) -> Vec<CheckResult> {
    let checks: Vec<&Check> = REGISTRY.iter().collect();
    let mut out = strategy.map(&checks, |c| execute(c, c.cap(profile), strategy));
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    out
}

/// The results as a JSON array.
pub fn report_json(results: &[CheckResult]) -> String {
    serde_json::to_string_pretty(results).expect("results serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    const MANIFEST: &[&str] = &[
        "ascent_plateaus",
        "bessel_numbers",
        "bessel_polynomial_e",
        "beta_recurrence",
        "catalan_egf",
        "ctilde_diagonal_recurrence",
        "dumont_eulerian_grammar",
        "dumont_recurrence",
        "eulerian_forest_triple",
        "eulerian_specializations",
        "exponential_surrogate",
        "flag_ascent_plateau",
        "full_binary_forests",
        "full_ternary_forests",
        "golden_expansions",
        "lah_numbers",
        "list_partitions",
        "partial_e_positivity",
        "partial_gamma_positivity",
        "pq_eulerian_cycles",
        "second_order_eulerian_grammar",
        "stirling2_dual_grammar",
        "stirling2_normal_order",
        "stirling_lists",
        "stirling_permutation_trivariate",
        "swap_grammar_runs",
        "ternary_forest_triple",
        "type_b_eulerian_numbers",
        "type_b_eulerian_polynomial",
        "type_b_second_grammar",
        "type_b_swap_grammar",
        "up_down_runs",
    ];

    #[test]
    fn registry_matches_manifest() {
        let ids: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        assert_eq!(ids, MANIFEST);
        for c in REGISTRY {
            assert!(c.min_n <= c.quick && c.quick <= c.full, "{}", c.id);
            assert!(!c.claim.is_empty());
        }
    }

    #[test]
    fn quick_profile_passes() {
        let results = run_all(Profile::Quick);
        assert!(results.len() >= 25);
        for r in &results {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn single_checks() {
        let r = run_check("eulerian_forest_triple", 6).unwrap();
        assert!(r.passed());
        assert_eq!(r.n_range, [1, 6]);
        let r = run_check("pq_eulerian_cycles", 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.n_range, [1, 1]);
        assert_eq!(run_check("lah_numbers", 99).unwrap().n_range, [1, 10]);
        assert!(matches!(run_check("nope", 3), Err(VerifyError::UnknownCheck(_))));
        assert_eq!("full".parse::<Profile>().unwrap(), Profile::Full);
    }

    #[test]
    fn failures_carry_witnesses() {
        let bogus = Check {
            id: "bogus",
            claim: "x = y",
            min_n: 2,
            quick: 3,
            full: 3,
            run: |_, n| eq(n, "x vs y", &poly("x"), &poly("y")),
        };
        let r = execute(&bogus, 3, Strategy::Sequential);
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert_eq!((w.n, w.lhs.as_str(), w.rhs.as_str()), (2, "x", "y"));
    }

    #[test]
    fn report_is_json_array() {
        let r = run_check("lah_numbers", 3).unwrap();
        let json = report_json(&[r]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v[0]["check_id"], "lah_numbers");
        assert_eq!(v[0]["status"], "pass");
        assert_eq!(v[0]["n_range"], serde_json::json!([1, 3]));
        assert!(v[0]["witness"].is_null());
    }
}
