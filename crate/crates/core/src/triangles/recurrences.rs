//! Polynomial-level recurrences, each iterated from its initial polynomial.
//!
//! These are independent of the coefficient triangles and are used both to
//! assemble the univariate families and to cross-check the assembled
//! multivariate ones.

use num_bigint::BigInt;

use crate::symcore::{poly, sym, Polynomial};

fn v(name: &str) -> Polynomial {
    Polynomial::var(sym(name))
}

fn c(n: i64) -> Polynomial {
    Polynomial::constant(BigInt::from(n))
}

fn d(p: &Polynomial, s: &str) -> Polynomial {
    p.partial_derivative(sym(s))
}

/// Iterates `step(n, f_n) = f_{n+1}` from `f_{start} = init` up to index `n`.
fn iterate(init: Polynomial, start: usize, n: usize, step: impl Fn(i64, &Polynomial) -> Polynomial) -> Polynomial {
    assert!(n >= start, "index {n} below the initial index {start}");
    let mut cur = init;
    for m in start..n {
        cur = step(m as i64, &cur);
    }
    cur
}

/// Eulerian polynomial in `x`: `A_n = n·x·A_{n-1} + x(1-x)·A'_{n-1}`, `A_0 = 1`.
pub fn eulerian_x(n: usize) -> Polynomial {
    let x = v("x");
    iterate(Polynomial::one(), 0, n, |m, a| {
        &(&x * a).scale(&BigInt::from(m + 1)) + &(&(&x * &(&c(1) - &x)) * &d(a, "x"))
    })
}

/// Cycle-counting Eulerian polynomial in `x, q`:
/// `A_{n+1} = (n·x + q)·A_n + x(1-x)·∂_x A_n`, from `A_0 = 1`.
pub fn eulerian_xq(n: usize) -> Polynomial {
    let (x, q) = (v("x"), v("q"));
    iterate(Polynomial::one(), 0, n, |m, a| {
        &(&(&x.scale(&BigInt::from(m)) + &q) * a) + &(&(&x * &(&c(1) - &x)) * &d(a, "x"))
    })
}

/// Type-B Eulerian polynomial:
/// `B_n = (1 + (2n-1)x)·B_{n-1} + 2x(1-x)·B'_{n-1}`, `B_0 = 1`.
pub fn eulerian_b_x(n: usize) -> Polynomial {
    let x = v("x");
    iterate(Polynomial::one(), 0, n, |m, b| {
        let lin = &c(1) + &x.scale(&BigInt::from(2 * (m + 1) - 1));
        &(&lin * b) + &(&(&x * &(&c(1) - &x)).scale(&BigInt::from(2)) * &d(b, "x"))
    })
}

/// Flag ascent-plateau polynomial:
/// `F_{n+1} = (x + 2n·x^2)·F_n + x(1-x^2)·F'_n`, `F_0 = 1`.
pub fn flag_ascent_plateau_x(n: usize) -> Polynomial {
    let x = v("x");
    let x2 = x.pow(2);
    iterate(Polynomial::one(), 0, n, |m, f| {
        let lin = &x + &x2.scale(&BigInt::from(2 * m));
        &(&lin * f) + &(&(&x * &(&c(1) - &x2)) * &d(f, "x"))
    })
}

/// Up-down run polynomial:
/// `T_{n+1} = x(1 + n·x)·T_n + x(1-x^2)·T'_n`, `T_0 = 1`.
pub fn up_down_runs_x(n: usize) -> Polynomial {
    let x = v("x");
    let x2 = x.pow(2);
    iterate(Polynomial::one(), 0, n, |m, t| {
        let lin = &x + &x2.scale(&BigInt::from(m));
        &(&lin * t) + &(&(&x * &(&c(1) - &x2)) * &d(t, "x"))
    })
}

/// Trivariate second-order Eulerian polynomial:
/// `C_{n+1} = xyz·(∂_x + ∂_y + ∂_z)·C_n`, from `C_1 = xyz`. Requires `n >= 1`.
pub fn stirling_trivariate(n: usize) -> Polynomial {
    let xyz = &(&v("x") * &v("y")) * &v("z");
    iterate(xyz.clone(), 1, n, |_, p| &xyz * &(&(&d(p, "x") + &d(p, "y")) + &d(p, "z")))
}

/// `C̃_n(x, x, z)`:
/// `C̃_{n+1} = (xz + 2n·x^2)·C̃_n - x^2·z·∂_z C̃_n`, from `1`.
pub fn ctilde_diagonal(n: usize) -> Polynomial {
    let (x, z) = (v("x"), v("z"));
    let x2 = x.pow(2);
    iterate(Polynomial::one(), 0, n, |m, p| {
        let lin = &(&x * &z) + &x2.scale(&BigInt::from(2 * m));
        &(&lin * p) - &(&(&x2 * &z) * &d(p, "z"))
    })
}

/// `A_{n+1} = x(n + z)·A_n + x(y - x)·∂_x A_n`, `A_0 = 1`.
pub fn binary_forest_xyz(n: usize) -> Polynomial {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    iterate(Polynomial::one(), 0, n, |m, a| &(&(&x * &(&c(m) + &z)) * a) + &(&(&x * &(&y - &x)) * &d(a, "x")))
}

/// `a_{n+1} = x(n + yz)·a_n + x(y - x)·∂_x a_n + xz·∂_z a_n`, `a_0 = 1`.
pub fn full_binary_forest_xyz(n: usize) -> Polynomial {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    iterate(Polynomial::one(), 0, n, |m, a| {
        let t1 = &(&x * &(&c(m) + &(&y * &z))) * a;
        let t2 = &(&x * &(&y - &x)) * &d(a, "x");
        let t3 = &(&x * &z) * &d(a, "z");
        &(&t1 + &t2) + &t3
    })
}

/// `C̃_{n+1} = (xz + 2n·xy)·C̃_n + xy(y - x)·∂_x C̃_n - xyz·∂_z C̃_n`, `C̃_0 = 1`.
pub fn ctilde_xyz(n: usize) -> Polynomial {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    let xy = &x * &y;
    iterate(Polynomial::one(), 0, n, |m, p| {
        let t1 = &(&(&x * &z) + &xy.scale(&BigInt::from(2 * m))) * p;
        let t2 = &(&xy * &(&y - &x)) * &d(p, "x");
        let t3 = &(&xy * &z) * &d(p, "z");
        &(&t1 + &t2) - &t3
    })
}

/// `β_{n+1} = wq·β_n + 3w·∂_u β_n + 2uw·∂_v β_n + vw·∂_w β_n`, `β_0 = 1`.
pub fn beta_uvwq(n: usize) -> Polynomial {
    let (u, vv, w, q) = (v("u"), v("v"), v("w"), v("q"));
    iterate(Polynomial::one(), 0, n, |_, b| {
        let t1 = &(&w * &q) * b;
        let t2 = &w.scale(&BigInt::from(3)) * &d(b, "u");
        let t3 = &(&u * &w).scale(&BigInt::from(2)) * &d(b, "v");
        let t4 = &(&vv * &w) * &d(b, "w");
        &(&(&t1 + &t2) + &t3) + &t4
    })
}

/// `B_{n+1} = (xyz + 2n·x^2)·B_n + x(y^2 - x^2)·∂_x B_n`, `B_0 = 1`.
pub fn type_b_xyz(n: usize) -> Polynomial {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    let x2 = x.pow(2);
    iterate(Polynomial::one(), 0, n, |m, b| {
        let lin = &(&(&x * &y) * &z) + &x2.scale(&BigInt::from(2 * m));
        &(&lin * b) + &(&(&x * &(&y.pow(2) - &x2)) * &d(b, "x"))
    })
}

/// `E_{n+1} = (xz + 2n·x^2)·E_n + x(y^2 - x^2)·∂_x E_n - x^2·z·∂_z E_n`, `E_0 = 1`.
pub fn type_b_second_xyz(n: usize) -> Polynomial {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    let x2 = x.pow(2);
    iterate(Polynomial::one(), 0, n, |m, e| {
        let lin = &(&x * &z) + &x2.scale(&BigInt::from(2 * m));
        let t2 = &(&x * &(&y.pow(2) - &x2)) * &d(e, "x");
        let t3 = &(&x2 * &z) * &d(e, "z");
        &(&(&lin * e) + &t2) - &t3
    })
}

/// `W_{n+1} = x(z + n·x/y)·W_n + xy(1 - x^2/y^2)·∂_x W_n`, `W_0 = 1`.
///
/// The intermediate terms are Laurent in `y`; the result is a polynomial.
pub fn swap_xyz(n: usize) -> Polynomial {
    let (x, y, z) = (v("x"), v("y"), v("z"));
    let x_over_y = poly("x*y^-1");
    let xy = &x * &y;
    iterate(Polynomial::one(), 0, n, |m, w| {
        let lin = &x * &(&z + &x_over_y.scale(&BigInt::from(m)));
        let fac = &xy * &(&c(1) - &x_over_y.pow(2));
        &(&lin * w) + &(&fac * &d(w, "x"))
    })
}
