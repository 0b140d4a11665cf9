use std::sync::Arc;

use super::{apply_limit_t, apply_limit_t_inv, apply_limit_x, apply_limit_y, AlmostSym};
use crate::daha_deformed::{commutator_t_order, ytilde};
use crate::field::QtScalar;
use crate::ops::Op;
use crate::polyring::{plus_monomials, Monomial, Poly};
use crate::suite::{Report, Suite};
use crate::symfunc::{Partition, SymFunc};

fn t(i: usize) -> Op<AlmostSym> {
    Op::new(format!("T{i}"), move |f: &AlmostSym| apply_limit_t(i, f))
}

fn t_inv(i: usize) -> Op<AlmostSym> {
    Op::new(format!("T{i}^-1"), move |f: &AlmostSym| apply_limit_t_inv(i, f))
}

fn x(i: usize) -> Op<AlmostSym> {
    Op::new(format!("X{i}"), move |f: &AlmostSym| apply_limit_x(i, f))
}

fn y(i: usize) -> Op<AlmostSym> {
    Op::new(format!("Y{i}"), move |f: &AlmostSym| apply_limit_y(i, f))
}

/// Products `x^a · m_λ[tail_k]` with `|a| ≤ d` and `|λ| ≤ d`.
pub fn spanning_set(k: usize, d: usize) -> Vec<AlmostSym> {
    let mut out = Vec::new();
    for lambda in Partition::up_to(d as u32) {
        let sym = SymFunc::m(&lambda.to_vec());
        for m in plus_monomials(k, d) {
            out.push(AlmostSym::product(k, &m, &sym));
        }
    }
    out
}

/// Every relation of the stable limit DAHA on the rank-`k` spanning set, with indices up to
/// `k + 1`, together with cross-checks against the deformed operators at finite rank.
pub fn stable_relations(k: usize, d: usize) -> Suite {
    assert!(k >= 2, "the stable suite needs rank at least 2");
    let inputs = Arc::new(spanning_set(k, d));
    let top = k + 1;
    let mut s = Suite::new("stable", k, d);
    let one = Op::identity();

    for i in 1..=top {
        let quad = t(i).minus(&one).after(&t(i).plus(&one.scaled(QtScalar::t())));
        s.vanishes(format!("(T{i}-1)(T{i}+t) = 0"), "quadratic relation", &inputs, quad);
        if i < top {
            let j = i + 1;
            s.op_equation(format!("T{i} T{j} T{i} = T{j} T{i} T{j}"), "T relations", &inputs, Op::word(&[t(i), t(j), t(i)]), Op::word(&[t(j), t(i), t(j)]));
            s.op_equation(
                format!("t T{i}^-1 X{i} T{i}^-1 = X{j}"),
                "X relations",
                &inputs,
                Op::word(&[t_inv(i), x(i), t_inv(i)]).scaled(QtScalar::t()),
                x(j),
            );
            s.op_equation(
                format!("t^-1 T{i} Y{i} T{i} = Y{j}"),
                "Y relations",
                &inputs,
                Op::word(&[t(i), y(i), t(i)]).scaled(QtScalar::t_pow(-1)),
                y(j),
            );
        }
        for j in i + 2..=top {
            s.op_equation(format!("T{i} T{j} = T{j} T{i}"), "T relations", &inputs, Op::word(&[t(i), t(j)]), Op::word(&[t(j), t(i)]));
        }
        for j in (1..=top).filter(|&j| j != i && j != i + 1) {
            s.op_equation(format!("T{i} X{j} = X{j} T{i}"), "X relations", &inputs, Op::word(&[t(i), x(j)]), Op::word(&[x(j), t(i)]));
            s.op_equation(format!("T{i} Y{j} = Y{j} T{i}"), "Y relations", &inputs, Op::word(&[t(i), y(j)]), Op::word(&[y(j), t(i)]));
        }
        for j in i + 1..=top {
            s.vanishes(format!("[X{i}, X{j}] = 0"), "X relations", &inputs, Op::commutator(&x(i), &x(j)));
            s.vanishes(format!("[Y{i}, Y{j}] = 0"), "Y relations", &inputs, Op::commutator(&y(i), &y(j)));
        }
    }
    s.op_equation("Y1 T1 X1 = X2 Y1 T1", "XY cross relation", &inputs, Op::word(&[y(1), t(1), x(1)]), Op::word(&[x(2), y(1), t(1)]));

    let window: Vec<usize> = (k + 2..=k + 4).collect();
    for i in 1..=top {
        let w = window.clone();
        s.equation(
            format!("Pi_m Y{i} X{i} = Y~{i} X{i} Pi_m on m={}..{}", w[0], w[2]),
            "Y as a limit on x-multiples",
            &inputs,
            move |f: &AlmostSym| {
                let xf = apply_limit_x(i, f)?;
                let lhs = apply_limit_y(i, &xf)?;
                let mut diff = Poly::zero(0);
                for &m in &w {
                    diff = diff.add(&lhs.truncate_rank(m)?.sub(&ytilde(&xf.truncate_rank(m)?, i)?));
                }
                Ok(diff)
            },
            |_f: &AlmostSym| Ok(Poly::zero(0)),
        );
    }

    let (set, w) = (inputs.clone(), window);
    s.custom("t-order of Pi_m Y1 F - Y~1 Pi_m F grows", "Y as a limit", inputs.len(), move || {
        let mut failures = Vec::new();
        for f in set.iter() {
            let orders: Vec<Option<i64>> = w
                .iter()
                .map(|&m| {
                    let lhs = apply_limit_y(1, f).unwrap().truncate_rank(m).unwrap();
                    commutator_t_order(&lhs.sub(&ytilde(&f.truncate_rank(m).unwrap(), 1).unwrap()))
                })
                .collect();
            if !strictly_growing(&orders) {
                failures.push(format!("{f}: orders {orders:?} over m={w:?}"));
            }
        }
        failures
    });

    let mut probes: Vec<AlmostSym> = inputs.to_vec();
    probes.push(AlmostSym::from_poly(&Poly::monomial(2, Monomial::from_exps(&[0, 2]))));
    let ranks: Vec<usize> = (k.max(3) + 1..=k.max(3) + 3).collect();
    s.custom("[Y~1, Y~2] is nonzero at finite rank with growing t-order", "commutator limit", probes.len(), move || {
        let mut failures = Vec::new();
        let mut witnessed = false;
        for f in probes.iter() {
            let truncated: Vec<Poly> = ranks.iter().map(|&m| f.truncate_rank(m).unwrap()).filter(|p| !p.is_zero()).collect();
            let orders: Vec<Option<i64>> = truncated
                .iter()
                .map(|p| {
                    let a = ytilde(&ytilde(p, 2).unwrap(), 1).unwrap();
                    let b = ytilde(&ytilde(p, 1).unwrap(), 2).unwrap();
                    commutator_t_order(&a.sub(&b))
                })
                .collect();
            witnessed |= orders.len() == ranks.len() && orders.iter().all(Option::is_some);
            if !strictly_growing(&orders) {
                failures.push(format!("{f}: orders {orders:?} over m={ranks:?}"));
            }
        }
        if !witnessed {
            failures.push(format!("no probe has a nonzero commutator at every m in {ranks:?}"));
        }
        failures
    });
    s
}

/// Each order at least one above the previous; zero results count as `+∞`.
fn strictly_growing(orders: &[Option<i64>]) -> bool {
    orders.windows(2).all(|p| match (p[0], p[1]) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(a), Some(b)) => b > a,
    })
}

pub fn suite_stable_relations(k: usize, d: usize) -> Report {
    stable_relations(k, d).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spanning_set_size() {
        assert_eq!(spanning_set(2, 2).len(), 6 * 4);
        assert_eq!(spanning_set(3, 0).len(), 1);
    }

    #[test]
    fn small_stable_suites_pass() {
        let r = suite_stable_relations(2, 0);
        assert!(r.pass, "{r}");
        let r = suite_stable_relations(2, 1);
        assert!(r.pass, "{r}");
    }
}
