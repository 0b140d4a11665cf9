use std::marker::PhantomData;
use std::sync::Arc;

use super::{plus_commutator, star_commutator, y_word, z_word, Arrow, DyckRep, Loop, StandardRep, VElement};
use crate::field::QtScalar;
use crate::ops::{Linear, Op};
use crate::polyring::plus_monomials;
use crate::suite::{Report, Suite};
use crate::symfunc::{Partition, SymFunc};

/// Operator words for a representation `R`.
struct Words<R>(PhantomData<R>);

impl<R: DyckRep> Words<R> {
    fn arrow(a: Arrow) -> Op<R::Elem> {
        let name = match a {
            Arrow::Dplus => "d+",
            Arrow::Dminus => "d-",
            Arrow::DplusStar => "d+*",
        };
        Op::new(name, move |f: &R::Elem| R::arrow(a, f))
    }

    fn lp(g: Loop) -> Op<R::Elem> {
        let name = match g {
            Loop::T(i) => format!("T{i}"),
            Loop::Tinv(i) => format!("T{i}^-1"),
            Loop::Y(i) => format!("y{i}"),
            Loop::Z(i) => format!("z{i}"),
        };
        Op::new(name, move |f: &R::Elem| R::act(g, f))
    }

    fn t(i: usize) -> Op<R::Elem> {
        Self::lp(Loop::T(i))
    }

    fn ti(i: usize) -> Op<R::Elem> {
        Self::lp(Loop::Tinv(i))
    }

    fn y(i: usize) -> Op<R::Elem> {
        Self::lp(Loop::Y(i))
    }

    fn z(i: usize) -> Op<R::Elem> {
        Self::lp(Loop::Z(i))
    }

    fn dp() -> Op<R::Elem> {
        Self::arrow(Arrow::Dplus)
    }

    fn dm() -> Op<R::Elem> {
        Self::arrow(Arrow::Dminus)
    }

    fn ds() -> Op<R::Elem> {
        Self::arrow(Arrow::DplusStar)
    }

    fn comm_plus() -> Op<R::Elem> {
        Op::new("[d+,d-]", plus_commutator::<R>)
    }

    fn comm_star() -> Op<R::Elem> {
        Op::new("[d+*,d-]", star_commutator::<R>)
    }

    /// `T_a T_{a+1} ... T_b` as a word, empty when `a > b`.
    fn t_run(a: usize, b: usize, inverse: bool) -> Vec<Op<R::Elem>> {
        (a..=b).map(|i| if inverse { Self::ti(i) } else { Self::t(i) }).collect()
    }
}

/// Products `y^a · m_λ[X]` at node `k` with `|a| ≤ d` and `|λ| ≤ d`.
pub fn spanning_set(k: usize, d: usize) -> Vec<VElement> {
    let mut out = Vec::new();
    for lambda in Partition::up_to(d as u32) {
        let sym = SymFunc::m(&lambda.to_vec());
        for m in plus_monomials(k, d) {
            out.push(VElement::product(k, &m, &sym));
        }
    }
    out
}

/// The defining relations of the double Dyck path algebra, the properties of its loops and
/// the loop words, checked on the spanning sets of every node `k ≤ kmax` of `R`.
pub fn dyck_relations<R: DyckRep>(name: &str, kmax: usize, d: usize) -> Suite {
    let (t, ti, y, z) = (Words::<R>::t, Words::<R>::ti, Words::<R>::y, Words::<R>::z);
    let (dp, dm, ds) = (Words::<R>::dp, Words::<R>::dm, Words::<R>::ds);
    let (comm_plus, comm_star, t_run) = (Words::<R>::comm_plus, Words::<R>::comm_star, Words::<R>::t_run);
    let mut s = Suite::new(name, kmax, d);
    let one = Op::identity();
    let tq = QtScalar::t();
    for k in 0..=kmax {
        let inputs = Arc::new(R::spanning_set(k, d));
        let at = |name: String| format!("{name} (node {k})");

        for i in 1..k {
            let quad = t(i).minus(&one).after(&t(i).plus(&one.scaled(tq.clone())));
            s.vanishes(at(format!("(T{i}-1)(T{i}+t) = 0")), "T relations", &inputs, quad);
            if i + 1 < k {
                let j = i + 1;
                s.op_equation(at(format!("T{i} T{j} T{i} = T{j} T{i} T{j}")), "T relations", &inputs, Op::word(&[t(i), t(j), t(i)]), Op::word(&[t(j), t(i), t(j)]));
            }
            for j in i + 2..k {
                s.op_equation(at(format!("T{i} T{j} = T{j} T{i}")), "T relations", &inputs, Op::word(&[t(i), t(j)]), Op::word(&[t(j), t(i)]));
            }
        }

        if k >= 2 {
            s.op_equation(at(format!("d- d- T{} = d- d-", k - 1)), "d- relations", &inputs, Op::word(&[dm(), dm(), t(k - 1)]), Op::word(&[dm(), dm()]));
            s.op_equation(
                at(format!("d- [d+,d-] T{} = t [d+,d-] d-", k - 1)),
                "d- relations",
                &inputs,
                Op::word(&[dm(), comm_plus(), t(k - 1)]),
                Op::word(&[comm_plus(), dm()]).scaled(tq.clone()),
            );
            s.op_equation(
                at(format!("t d- [d+*,d-] = [d+*,d-] d- T{}", k - 1)),
                "d+* relations",
                &inputs,
                Op::word(&[dm(), comm_star()]).scaled(tq.clone()),
                Op::word(&[comm_star(), dm(), t(k - 1)]),
            );
        }
        for i in 1..k.saturating_sub(1) {
            s.op_equation(at(format!("T{i} d- = d- T{i}")), "d- relations", &inputs, Op::word(&[t(i), dm()]), Op::word(&[dm(), t(i)]));
        }

        s.op_equation(at("T1 d+ d+ = d+ d+".into()), "d+ relations", &inputs, Op::word(&[t(1), dp(), dp()]), Op::word(&[dp(), dp()]));
        s.op_equation(at("T1 d+* d+* = d+* d+*".into()), "d+* relations", &inputs, Op::word(&[t(1), ds(), ds()]), Op::word(&[ds(), ds()]));
        for i in 1..k {
            let j = i + 1;
            s.op_equation(at(format!("d+ T{i} = T{j} d+")), "d+ relations", &inputs, Op::word(&[dp(), t(i)]), Op::word(&[t(j), dp()]));
            s.op_equation(at(format!("d+* T{i} = T{j} d+*")), "d+* relations", &inputs, Op::word(&[ds(), t(i)]), Op::word(&[t(j), ds()]));
            s.op_equation(at(format!("d+ z{i} = z{j} d+")), "d+ and d+* cross relations", &inputs, Op::word(&[dp(), z(i)]), Op::word(&[z(j), dp()]));
            s.op_equation(at(format!("d+* y{i} = y{j} d+*")), "d+ and d+* cross relations", &inputs, Op::word(&[ds(), y(i)]), Op::word(&[y(j), ds()]));
        }
        if k >= 1 {
            s.op_equation(
                at("T1 [d+,d-] d+ = t d+ [d+,d-]".into()),
                "d- relations",
                &inputs,
                Op::word(&[t(1), comm_plus(), dp()]),
                Op::word(&[dp(), comm_plus()]).scaled(tq.clone()),
            );
            s.op_equation(
                at("t [d+*,d-] d+* = T1 d+* [d+*,d-]".into()),
                "d+* relations",
                &inputs,
                Op::word(&[comm_star(), ds()]).scaled(tq.clone()),
                Op::word(&[t(1), ds(), comm_star()]),
            );
        }
        let c = QtScalar::qt_monomial(1, k as i64 + 1).neg_ref();
        s.op_equation(at(format!("z1 d+ = -q t^{} y1 d+*", k + 1)), "z1 d+ relation", &inputs, Op::word(&[z(1), dp()]), Op::word(&[y(1), ds()]).scaled(c));

        for i in 1..=k {
            let (yi, zi) = (y(i), z(i));
            s.equation(at(format!("y{i} = commutator word")), "loop words", &inputs, move |f: &R::Elem| y_word::<R>(i, f), move |f: &R::Elem| yi.apply(f));
            s.equation(at(format!("z{i} = star commutator word")), "loop words", &inputs, move |f: &R::Elem| z_word::<R>(i, f), move |f: &R::Elem| zi.apply(f));
            for j in (1..k).filter(|&j| j != i && j + 1 != i) {
                s.op_equation(at(format!("y{i} T{j} = T{j} y{i}")), "y loops", &inputs, Op::word(&[y(i), t(j)]), Op::word(&[t(j), y(i)]));
                s.op_equation(at(format!("z{i} T{j} = T{j} z{i}")), "z loops", &inputs, Op::word(&[z(i), t(j)]), Op::word(&[t(j), z(i)]));
            }
            if i < k {
                let j = i + 1;
                s.op_equation(at(format!("t T{i}^-1 y{i} T{i}^-1 = y{j}")), "y loops", &inputs, Op::word(&[ti(i), y(i), ti(i)]).scaled(tq.clone()), y(j));
                s.op_equation(at(format!("t^-1 T{i} z{i} T{i} = z{j}")), "z loops", &inputs, Op::word(&[t(i), z(i), t(i)]).scaled(QtScalar::t_pow(-1)), z(j));
                s.op_equation(at(format!("y{i} d- = d- y{i}")), "y loops and arrows", &inputs, Op::word(&[y(i), dm()]), Op::word(&[dm(), y(i)]));
                s.op_equation(at(format!("z{i} d- = d- z{i}")), "z loops and arrows", &inputs, Op::word(&[z(i), dm()]), Op::word(&[dm(), z(i)]));
            }
            for j in i + 1..=k {
                s.vanishes(at(format!("[y{i}, y{j}] = 0")), "y loops", &inputs, Op::commutator(&y(i), &y(j)));
                s.vanishes(at(format!("[z{i}, z{j}] = 0")), "z loops", &inputs, Op::commutator(&z(i), &z(j)));
            }

            let mut lhs = t_run(1, i, false);
            lhs.push(y(i));
            lhs.extend(t_run(1, i, true).into_iter().rev());
            lhs.push(dp());
            s.op_equation(at(format!("d+ y{i} = T1..T{i} y{i} T{i}^-1..T1^-1 d+")), "y loops and arrows", &inputs, Op::word(&[dp(), y(i)]), Op::word(&lhs));

            let mut rhs = t_run(1, i, true);
            rhs.push(z(i));
            rhs.extend(t_run(1, i, false).into_iter().rev());
            rhs.push(ds());
            s.op_equation(at(format!("d+* z{i} = T1^-1..T{i}^-1 z{i} T{i}..T1 d+*")), "z loops and arrows", &inputs, Op::word(&[ds(), z(i)]), Op::word(&rhs));
        }
    }

    let probes = Arc::new(R::spanning_set(1, d.max(1)));
    s.witness("[d+,d-] acts nontrivially", "y loops", &probes, plus_commutator::<R>, |f: &R::Elem| Ok(f.sub_v(f)));
    s
}

/// [`dyck_relations`] on `V_•`.
pub fn atq_relations(kmax: usize, d: usize) -> Suite {
    dyck_relations::<StandardRep>("atq", kmax, d)
}

pub fn suite_atq(kmax: usize, d: usize) -> Report {
    atq_relations(kmax, d).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_atq_suites_pass() {
        let r = suite_atq(1, 1);
        assert!(r.pass, "{r}");
        let r = suite_atq(2, 1);
        assert!(r.pass, "{r}");
        let r = suite_atq(3, 1);
        assert!(r.pass, "{r}");
    }
}
