use std::sync::Arc;

use super::{gamma, gamma_composed, ytilde, ztilde, DeformedGenerator, DeformedKind};
use crate::daha_finite::{FiniteGenerator, FiniteKind};
use crate::field::QtScalar;
use crate::ops::Op;
use crate::polyring::{as_polys, plus_monomials, Monomial, Poly};
use crate::suite::{Report, Suite};
use crate::symfunc::{expand_in_vars, h_scaled};

fn dgen(kind: DeformedKind, k: usize) -> Op<Poly> {
    DeformedGenerator::new(kind, k).expect("generator index in range").op()
}

fn fgen(kind: FiniteKind, k: usize) -> Op<Poly> {
    FiniteGenerator::new(kind, k).expect("generator index in range").op()
}

fn lift(k: usize) -> Op<Poly> {
    Op::new("iota", move |f: &Poly| Ok(f.clone().with_rank(k)))
}

fn pi() -> Op<Poly> {
    Op::new("pi", |f: &Poly| f.set_var_zero(f.rank()))
}

/// Smallest `t`-adic order among the coefficients, `None` for zero.
pub fn commutator_t_order(f: &Poly) -> Option<i64> {
    f.terms().map(|(_, _, c)| c.t_order().expect("nonzero coefficient")).min()
}

/// `[Ỹ_1, Ỹ_2] f` at the rank of `f`.
fn ytilde_commutator(f: &Poly) -> Poly {
    let a = ytilde(&ytilde(f, 2).unwrap(), 1).unwrap();
    let b = ytilde(&ytilde(f, 1).unwrap(), 2).unwrap();
    a.sub(&b)
}

/// `g(x_1..x_r) m_λ[x_{r+1}, ..., x_m]`.
fn truncated_input(g: &Poly, lambda: &[u32], m: usize) -> Poly {
    let vars: Vec<usize> = (g.rank() + 1..=m).collect();
    let sym = expand_in_vars(&crate::symfunc::SymFunc::m(lambda), &vars, m);
    g.clone().with_rank(m).mul(&sym)
}

/// Fixed almost-symmetric inputs `(g, λ)` used by the growth check.
fn growth_inputs() -> Vec<(Poly, Vec<u32>)> {
    let x = |e: &[i32]| Poly::monomial(e.len(), Monomial::from_exps(e));
    vec![
        (x(&[1]), vec![]),
        (x(&[0, 1]), vec![]),
        (x(&[1]), vec![1]),
        (x(&[0, 1]), vec![1]),
        (x(&[0, 2]), vec![]),
        (x(&[0, 2]), vec![1]),
        (x(&[1, 2]), vec![]),
        (x(&[0, 3]), vec![]),
        (Poly::one(0), vec![2]),
        (x(&[1, 1]), vec![1]),
    ]
}

/// `t^m T_m^{-1} ... T_1^{-1} x_1^n = Σ_{i<n} x_{m+1}^{n-i} h_i[(1-t)(x_1 + ... + x_m)]`, for
/// `m ≤ max_m` and `1 ≤ n ≤ max_n`; returns the failing pairs.
pub fn finite_hecke_lemma(max_m: usize, max_n: u32) -> Vec<String> {
    let mut failures = Vec::new();
    let one_minus_t = QtScalar::one().sub_ref(&QtScalar::t());
    for m in 0..=max_m {
        let rank = m + 1;
        let vars: Vec<usize> = (1..=m).collect();
        for n in 1..=max_n {
            let mut lhs = Poly::monomial(rank, Monomial::power(1, n as i32));
            for j in 1..=m {
                lhs = lhs.hecke_t_inv(j).expect("index in range");
            }
            let lhs = lhs.scale(&QtScalar::t_pow(m as i64));
            let mut rhs = Poly::zero(rank);
            for i in 0..n {
                let h = expand_in_vars(&h_scaled(i, &one_minus_t), &vars, rank);
                rhs = rhs.add(&h.mul_monomial(&Monomial::power(rank, (n - i) as i32)));
            }
            if lhs != rhs {
                failures.push(format!("m={m} n={n}: {lhs} vs {rhs}"));
            }
        }
    }
    failures
}

/// Relations of the deformed DAHA on plus monomials of degree at most `d`.
pub fn deformed(k: usize, d: usize) -> Suite {
    assert!(k >= 3, "the deformed suite needs rank at least 3");
    let inputs = Arc::new(as_polys(k, &plus_monomials(k, d)));
    let lower = Arc::new(as_polys(k - 1, &plus_monomials(k - 1, d)));
    let mut s = Suite::new("deformed", k, d);
    let t = |i| fgen(FiniteKind::T(i), k);
    let ti = |i| fgen(FiniteKind::Tinv(i), k);
    let x = |i| fgen(FiniteKind::X(i), k);
    let y = |i| fgen(FiniteKind::Y(i), k);
    let yt = |i| dgen(DeformedKind::Ytilde(i), k);
    let w = dgen(DeformedKind::Varpi, k);
    let g = dgen(DeformedKind::Gamma, k);

    s.equation("gamma closed form = varpi^2 T - T1 varpi^2", "gamma closed form", &inputs, |f| Ok(gamma(f)), gamma_composed);

    s.op_equation(format!("gamma T{} = -t gamma", k - 1), "gamma relations", &inputs, Op::word(&[g.clone(), t(k - 1)]), g.scaled(QtScalar::t().neg_ref()));
    s.op_equation("T1 gamma = gamma", "gamma relations", &inputs, Op::word(&[t(1), g.clone()]), g.clone());
    for p in [k - 2, k - 1] {
        s.vanishes(format!("gamma varpi^{p} gamma = 0"), "gamma relations", &inputs, Op::word(&[g.clone(), w.pow(p), g.clone()]));
    }
    s.vanishes(format!("gamma varpi^{k} = 0"), "gamma relations", &inputs, Op::word(&[g.clone(), w.pow(k)]));
    for i in 1..k - 1 {
        s.op_equation(format!("varpi T{i} = T{} varpi", i + 1), "varpi relations", &inputs, Op::word(&[w.clone(), t(i)]), Op::word(&[t(i + 1), w.clone()]));
    }
    for i in 1..k {
        s.op_equation(format!("varpi X{i} = X{} varpi", i + 1), "varpi relations", &inputs, Op::word(&[w.clone(), x(i)]), Op::word(&[x(i + 1), w.clone()]));
    }

    for i in 1..k {
        s.op_equation(
            format!("t^-1 T{i} Y~{i} T{i} = Y~{}", i + 1),
            "deformed Y recursion",
            &inputs,
            Op::word(&[t(i), yt(i), t(i)]).scaled(QtScalar::t_pow(-1)),
            yt(i + 1),
        );
    }

    for i in 1..k {
        s.op_equation(
            format!("pi Y~{i} iota = Y~{i} (rank {})", k - 1),
            "deformed Y consistency",
            &lower,
            Op::word(&[pi(), yt(i), lift(k)]),
            dgen(DeformedKind::Ytilde(i), k - 1),
        );
        s.equation(
            format!("pi Z~{i} = Z~{i} pi"),
            "stable Z consistency",
            &inputs,
            move |f: &Poly| ztilde(f, i)?.set_var_zero(k),
            move |f: &Poly| ztilde(&f.set_var_zero(k)?, i),
        );
    }

    let mut tail: Vec<Op<Poly>> = vec![g.clone()];
    tail.extend((1..k).rev().map(ti));
    tail.extend((2..k).rev().map(ti));
    s.op_equation(
        "[Y~1, Y~2] = t^(2k-1) gamma T^-1 words",
        "deformed commutator",
        &inputs,
        Op::commutator(&yt(1), &yt(2)),
        Op::word(&tail).scaled(QtScalar::t_pow(2 * k as i64 - 1)),
    );

    s.op_equation("Y~1 T1 X1 = X2 Y~1 T1", "cross relation", &inputs, Op::word(&[yt(1), t(1), x(1)]), Op::word(&[x(2), yt(1), t(1)]));
    for i in 1..=k {
        for j in (1..k).filter(|&j| j + 1 < i || j > i + 1) {
            s.op_equation(format!("T{j} Y~{i} = Y~{i} T{j}"), "far commutation", &inputs, Op::word(&[t(j), yt(i)]), Op::word(&[yt(i), t(j)]));
        }
    }
    for i in 1..=k {
        s.op_equation(
            format!("Y~{i} X{i} = t^k Y{i} X{i}"),
            "deformed vs Cherednik",
            &inputs,
            Op::word(&[yt(i), x(i)]),
            Op::word(&[y(i), x(i)]).scaled(QtScalar::t_pow(k as i64)),
        );
    }

    let window: Vec<usize> = (k..=k + 3).collect();
    let cases = growth_inputs().len();
    s.custom("t-order of [Y~1, Y~2] grows with the rank", "commutator limit", cases, move || {
        growth_failures(&window, d)
    });
    s
}

/// Slack allowed below the rank in the growth check.
const GROWTH_SLACK: i64 = 1;

fn growth_failures(window: &[usize], d: usize) -> Vec<String> {
    let mut failures = Vec::new();
    for (g, lambda) in growth_inputs() {
        let degree = g.terms().map(|(m, _, _)| m.degree()).max().unwrap_or(0) + lambda.iter().sum::<u32>() as i64;
        if degree as usize > d.max(1) {
            continue;
        }
        let orders: Vec<Option<i64>> = window
            .iter()
            .map(|&m| commutator_t_order(&ytilde_commutator(&truncated_input(&g, &lambda, m))))
            .collect();
        let as_key = |o: &Option<i64>| o.unwrap_or(i64::MAX);
        let monotone = orders.windows(2).all(|p| as_key(&p[0]) <= as_key(&p[1]));
        let above = window.iter().zip(&orders).all(|(&m, o)| as_key(o) > m as i64 - GROWTH_SLACK);
        if !monotone || !above {
            failures.push(format!("{g} * m{lambda:?}: orders {orders:?} over ranks {window:?}"));
        }
    }
    failures
}

pub fn suite_deformed(k: usize, d: usize) -> Report {
    deformed(k, d).run()
}
