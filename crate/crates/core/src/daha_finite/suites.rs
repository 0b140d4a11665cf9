use std::sync::Arc;

use super::{FiniteGenerator, FiniteKind};
use crate::field::QtScalar;
use crate::ops::Op;
use crate::polyring::{as_polys, laurent_box, minus_monomials, plus_monomials, Poly};
use crate::suite::{Report, Suite};

fn gen(kind: FiniteKind, k: usize) -> Op<Poly> {
    FiniteGenerator::new(kind, k).expect("generator index in range").op()
}

fn word(ops: &[Op<Poly>]) -> Op<Poly> {
    Op::word(ops)
}

fn scalar_t(e: i64) -> QtScalar {
    QtScalar::t_pow(e)
}

/// `(A - 1)(A + t) = 0`.
fn quadratic(a: &Op<Poly>) -> Op<Poly> {
    let one = Op::identity();
    a.minus(&one).after(&a.plus(&one.scaled(QtScalar::t())))
}

/// Every defining relation of the rank-`k` DAHA and the `ω̃` presentation, on Laurent monomials
/// with exponents in `[-d, d]`.
pub fn finite_relations(k: usize, d: usize) -> Suite {
    assert!(k >= 2, "the finite relation suite needs rank at least 2");
    let inputs = Arc::new(as_polys(k, &laurent_box(k, d)));
    let mut s = Suite::new("finite", k, d);
    let t = |i| gen(FiniteKind::T(i), k);
    let ti = |i| gen(FiniteKind::Tinv(i), k);
    let x = |i| gen(FiniteKind::X(i), k);
    let xi = |i| gen(FiniteKind::Xinv(i), k);
    let y = |i| gen(FiniteKind::Y(i), k);
    let yi = |i| gen(FiniteKind::Yinv(i), k);
    let w = gen(FiniteKind::Omega, k);
    let wi = gen(FiniteKind::OmegaInv, k);
    let wt = gen(FiniteKind::OmegaTilde, k);
    let wti = gen(FiniteKind::OmegaTildeInv, k);
    let one = Op::identity();

    for i in 1..k {
        s.op_equation(format!("T{i} T{i}^-1 = 1"), "Hecke inverse", &inputs, word(&[t(i), ti(i)]), one.clone());
        s.op_equation(format!("T{i}^-1 T{i} = 1"), "Hecke inverse", &inputs, word(&[ti(i), t(i)]), one.clone());
        s.vanishes(format!("(T{i}-1)(T{i}+t) = 0"), "quadratic relation", &inputs, quadratic(&t(i)));
        if i + 1 < k {
            let j = i + 1;
            s.op_equation(
                format!("T{i} T{j} T{i} = T{j} T{i} T{j}"),
                "braid relation",
                &inputs,
                word(&[t(i), t(j), t(i)]),
                word(&[t(j), t(i), t(j)]),
            );
        }
        for j in (i + 2)..k {
            s.op_equation(format!("T{i} T{j} = T{j} T{i}"), "far commutation", &inputs, word(&[t(i), t(j)]), word(&[t(j), t(i)]));
        }
        s.op_equation(
            format!("t T{i}^-1 X{i} T{i}^-1 = X{}", i + 1),
            "X relations",
            &inputs,
            word(&[ti(i), x(i), ti(i)]).scaled(QtScalar::t()),
            x(i + 1),
        );
        s.op_equation(
            format!("t^-1 T{i} Y{i} T{i} = Y{}", i + 1),
            "Y relations",
            &inputs,
            word(&[t(i), y(i), t(i)]).scaled(scalar_t(-1)),
            y(i + 1),
        );
        for j in (1..=k).filter(|&j| j != i && j != i + 1) {
            s.op_equation(format!("T{i} X{j} = X{j} T{i}"), "X relations", &inputs, word(&[t(i), x(j)]), word(&[x(j), t(i)]));
            s.op_equation(format!("T{i} Y{j} = Y{j} T{i}"), "Y relations", &inputs, word(&[t(i), y(j)]), word(&[y(j), t(i)]));
        }
    }
    for i in 1..=k {
        s.op_equation(format!("X{i} X{i}^-1 = 1"), "X relations", &inputs, word(&[x(i), xi(i)]), one.clone());
        s.op_equation(format!("Y{i} Y{i}^-1 = 1"), "Y relations", &inputs, word(&[y(i), yi(i)]), one.clone());
        s.op_equation(format!("Y{i}^-1 Y{i} = 1"), "Y relations", &inputs, word(&[yi(i), y(i)]), one.clone());
        for j in (i + 1)..=k {
            s.op_equation(format!("X{i} X{j} = X{j} X{i}"), "X relations", &inputs, word(&[x(i), x(j)]), word(&[x(j), x(i)]));
            s.op_equation(format!("Y{i} Y{j} = Y{j} Y{i}"), "Y relations", &inputs, word(&[y(i), y(j)]), word(&[y(j), y(i)]));
        }
    }
    s.op_equation("Y1 T1 X1 = X2 Y1 T1", "XY cross relation", &inputs, word(&[y(1), t(1), x(1)]), word(&[x(2), y(1), t(1)]));
    let xs: Vec<Op<Poly>> = (1..=k).map(x).collect();
    let all_x = word(&xs);
    s.op_equation(
        "Y1 X1...Xk = q X1...Xk Y1",
        "determinant relation",
        &inputs,
        y(1).after(&all_x),
        all_x.after(&y(1)).scaled(QtScalar::q()),
    );

    // ω-conjugation and the affine generator T0 = ω T1 ω^-1.
    s.op_equation("w w^-1 = 1", "omega relations", &inputs, word(&[w.clone(), wi.clone()]), one.clone());
    s.op_equation("w^-1 w = 1", "omega relations", &inputs, word(&[wi.clone(), w.clone()]), one.clone());
    let t0 = word(&[w.clone(), t(1), wi.clone()]).renamed("T0");
    for i in 2..k {
        s.op_equation(format!("w T{i} w^-1 = T{}", i - 1), "omega relations", &inputs, word(&[w.clone(), t(i), wi.clone()]), t(i - 1));
    }
    for i in 2..k - 1 {
        s.op_equation(format!("T{i} T0 = T0 T{i}"), "affine relations", &inputs, word(&[t(i), t0.clone()]), word(&[t0.clone(), t(i)]));
    }
    s.op_equation(format!("w T0 w^-1 = T{}", k - 1), "omega relations", &inputs, word(&[w.clone(), t0.clone(), wi.clone()]), t(k - 1));
    s.vanishes("(T0-1)(T0+t) = 0", "affine relations", &inputs, quadratic(&t0));
    if k >= 3 {
        for j in [1, k - 1] {
            s.op_equation(
                format!("T0 T{j} T0 = T{j} T0 T{j}"),
                "affine relations",
                &inputs,
                word(&[t0.clone(), t(j), t0.clone()]),
                word(&[t(j), t0.clone(), t(j)]),
            );
        }
    }
    for i in 1..k {
        s.op_equation(format!("w X{} w^-1 = X{i}", i + 1), "omega X relations", &inputs, word(&[w.clone(), x(i + 1), wi.clone()]), x(i));
    }
    s.op_equation(
        format!("w X1 w^-1 = q^-1 X{k}"),
        "omega X relations",
        &inputs,
        word(&[w.clone(), x(1), wi.clone()]),
        x(k).scaled(QtScalar::q_pow(-1)),
    );

    // The ω̃ presentation.
    let tis_down: Vec<Op<Poly>> = (1..k).rev().map(ti).collect();
    let mut rhs = vec![xi(k)];
    rhs.extend(tis_down.iter().cloned());
    s.op_equation(
        format!("t^{} T{}...T1 X1^-1 = X{k}^-1 T{}^-1...T1^-1", 1 - k as i64, k - 1, k - 1),
        "omega-tilde presentation",
        &inputs,
        wt.scaled(scalar_t(1 - k as i64)),
        word(&rhs),
    );
    s.op_equation("w~ w~^-1 = 1", "omega-tilde presentation", &inputs, word(&[wt.clone(), wti.clone()]), one.clone());
    s.op_equation("w~^-1 w~ = 1", "omega-tilde presentation", &inputs, word(&[wti.clone(), wt.clone()]), one.clone());
    let tt0 = word(&[wt.clone(), t(1), wti.clone()]).renamed("T0~");
    s.op_equation(
        format!("w~^-1 T{} w~ = w~ T1 w~^-1", k - 1),
        "omega-tilde presentation",
        &inputs,
        word(&[wti.clone(), t(k - 1), wt.clone()]),
        tt0.clone(),
    );
    let mut closed = vec![x(1), xi(k)];
    closed.extend((1..k).map(ti));
    closed.extend((1..k - 1).rev().map(ti));
    s.op_equation(
        format!("w~ T1 w~^-1 = t^{} X1 X{k}^-1 T1^-1...T{}^-1...T1^-1", k - 1, k - 1),
        "omega-tilde presentation",
        &inputs,
        tt0.clone(),
        word(&closed).scaled(scalar_t(k as i64 - 1)),
    );
    for i in 2..k {
        s.op_equation(format!("w~ T{i} w~^-1 = T{}", i - 1), "omega-tilde relations", &inputs, word(&[wt.clone(), t(i), wti.clone()]), t(i - 1));
    }
    for i in 2..k - 1 {
        s.op_equation(format!("T{i} T0~ = T0~ T{i}"), "omega-tilde relations", &inputs, word(&[t(i), tt0.clone()]), word(&[tt0.clone(), t(i)]));
    }
    if k >= 3 {
        for j in [1, k - 1] {
            s.op_equation(
                format!("T0~ T{j} T0~ = T{j} T0~ T{j}"),
                "omega-tilde relations",
                &inputs,
                word(&[tt0.clone(), t(j), tt0.clone()]),
                word(&[t(j), tt0.clone(), t(j)]),
            );
        }
    }
    s.vanishes("(T0~-1)(T0~+t) = 0", "omega-tilde relations", &inputs, quadratic(&tt0));
    s.op_equation(format!("w~ T0~ w~^-1 = T{}", k - 1), "omega-tilde relations", &inputs, word(&[wt.clone(), tt0.clone(), wti.clone()]), t(k - 1));

    // The endomorphism sending Y1 to X1 Y1 and Y2 to T1 T1 X2 Y2.
    let a1 = word(&[x(1), y(1)]);
    let a2 = word(&[t(1), t(1), x(2), y(2)]);
    s.vanishes("[X1 Y1, T1 T1 X2 Y2] = 0", "endomorphism image commutes", &inputs, Op::commutator(&a1, &a2));
    s
}

pub fn suite_finite_relations(k: usize, d: usize) -> Report {
    finite_relations(k, d).run()
}

fn pi_plus() -> Op<Poly> {
    Op::new("pi", |f: &Poly| f.set_var_zero(f.rank()))
}

fn pi_minus() -> Op<Poly> {
    Op::new("pi", |f: &Poly| f.set_inv_var_zero(f.rank()))
}

/// Compatibility of the rank-lowering maps with the generators, on plus monomials and on
/// minus monomials of degree at most `d`.
pub fn projection_compat(k: usize, d: usize) -> Suite {
    assert!(k >= 3, "the projection suite needs rank at least 3");
    let plus = Arc::new(as_polys(k, &plus_monomials(k, d)));
    let minus = Arc::new(as_polys(k, &minus_monomials(k, d)));
    let mut s = Suite::new("projection", k, d);
    let g = |kind| gen(kind, k);
    let h = |kind| gen(kind, k - 1);
    let probe = Arc::new(as_polys(k, &plus_monomials(k, d.max(1))));
    let swap = Op::new(format!("s{}", k - 1), move |f: &Poly| Ok(f.swap_vars(k - 1, k)));

    let (pi, anchor) = (pi_plus(), "plus projection");
    for i in 1..k - 1 {
        s.op_equation(format!("+: pi T{i} = T{i} pi"), anchor, &plus, word(&[pi.clone(), g(FiniteKind::T(i))]), word(&[h(FiniteKind::T(i)), pi.clone()]));
    }
    s.op_equation(
        format!("+: pi T{}^-1 = pi s{}", k - 1, k - 1),
        anchor,
        &plus,
        word(&[pi.clone(), g(FiniteKind::Tinv(k - 1))]),
        word(&[pi.clone(), swap.clone()]),
    );
    let (lhs, rhs) = (word(&[pi.clone(), g(FiniteKind::T(k - 1))]), word(&[pi.clone(), swap.clone()]));
    s.witness(
        format!("+: pi T{} != pi s{}", k - 1, k - 1),
        "plus side needs the inverse",
        &probe,
        move |f| lhs.apply(f),
        move |f| rhs.apply(f),
    );
    let mut killed = vec![pi.clone()];
    killed.extend((1..k).rev().map(|i| g(FiniteKind::Tinv(i))));
    killed.push(g(FiniteKind::OmegaTildeInv));
    s.vanishes(format!("+: pi T{}^-1...T1^-1 w~^-1 = 0", k - 1), anchor, &plus, word(&killed));
    s.op_equation(
        format!("+: pi w~^-1 T{} = w~^-1 pi", k - 1),
        anchor,
        &plus,
        word(&[pi.clone(), g(FiniteKind::OmegaTildeInv), g(FiniteKind::T(k - 1))]),
        word(&[h(FiniteKind::OmegaTildeInv), pi.clone()]),
    );
    s.op_equation(
        format!("+: pi w^-1 T{} = w^-1 pi", k - 1),
        anchor,
        &plus,
        word(&[pi.clone(), g(FiniteKind::OmegaInv), g(FiniteKind::T(k - 1))]),
        word(&[h(FiniteKind::OmegaInv), pi.clone()]),
    );
    for i in 1..k {
        s.op_equation(format!("+: pi X{i} = X{i} pi"), anchor, &plus, word(&[pi.clone(), g(FiniteKind::X(i))]), word(&[h(FiniteKind::X(i)), pi.clone()]));
    }
    s.vanishes(format!("+: pi X{k} = 0"), anchor, &plus, word(&[pi.clone(), g(FiniteKind::X(k))]));
    for i in 1..k {
        s.op_equation(
            format!("+: pi t^{k} Y{i} X{i} = t^{} Y{i} X{i} pi", k - 1),
            "stable Y X product",
            &plus,
            word(&[pi.clone(), g(FiniteKind::Y(i)), g(FiniteKind::X(i))]).scaled(scalar_t(k as i64)),
            word(&[h(FiniteKind::Y(i)), h(FiniteKind::X(i)), pi.clone()]).scaled(scalar_t(k as i64 - 1)),
        );
    }
    let (lhs, rhs) = (word(&[pi.clone(), g(FiniteKind::Y(1))]), word(&[h(FiniteKind::Y(1)), pi.clone()]));
    s.witness(
        format!("+: pi Y1 != Y1 pi (rank {k} to {})", k - 1),
        "Y1 does not descend",
        &probe,
        move |f| lhs.apply(f),
        move |f| rhs.apply(f),
    );

    let (pi, anchor) = (pi_minus(), "minus projection");
    let normalized = |r: usize| gen(FiniteKind::OmegaTilde, r).scaled(scalar_t(1 - r as i64)).renamed("w~");
    for i in 1..k - 1 {
        s.op_equation(format!("-: pi T{i} = T{i} pi"), anchor, &minus, word(&[pi.clone(), g(FiniteKind::T(i))]), word(&[h(FiniteKind::T(i)), pi.clone()]));
    }
    s.op_equation(
        format!("-: pi T{} = pi s{}", k - 1, k - 1),
        anchor,
        &minus,
        word(&[pi.clone(), g(FiniteKind::T(k - 1))]),
        word(&[pi.clone(), swap]),
    );
    s.vanishes("-: pi w~ = 0", anchor, &minus, word(&[pi.clone(), normalized(k)]));
    s.op_equation(
        format!("-: pi T{} w~ = w~ pi", k - 1),
        anchor,
        &minus,
        word(&[pi.clone(), g(FiniteKind::T(k - 1)), normalized(k)]),
        word(&[normalized(k - 1), pi.clone()]),
    );
    for i in 1..k {
        s.op_equation(
            format!("-: pi X{i}^-1 = X{i}^-1 pi"),
            anchor,
            &minus,
            word(&[pi.clone(), g(FiniteKind::Xinv(i))]),
            word(&[h(FiniteKind::Xinv(i)), pi.clone()]),
        );
    }
    s.vanishes(format!("-: pi X{k}^-1 = 0"), anchor, &minus, word(&[pi.clone(), g(FiniteKind::Xinv(k))]));
    for i in 1..k {
        s.op_equation(format!("-: pi Y{i} = Y{i} pi"), "minus Y compatibility", &minus, word(&[pi.clone(), g(FiniteKind::Y(i))]), word(&[h(FiniteKind::Y(i)), pi.clone()]));
        s.op_equation(
            format!("-: pi Y{i}^-1 = Y{i}^-1 pi"),
            "minus Y compatibility",
            &minus,
            word(&[pi.clone(), g(FiniteKind::Yinv(i))]),
            word(&[h(FiniteKind::Yinv(i)), pi.clone()]),
        );
    }
    s
}

pub fn suite_projection_compat(k: usize, d: usize) -> Report {
    projection_compat(k, d).run()
}
