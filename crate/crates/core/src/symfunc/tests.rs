use super::*;
use crate::polyring::xmono;
use proptest::prelude::*;

fn one_minus_t() -> QtScalar {
    &QtScalar::one() - &QtScalar::t()
}

fn mixed_x(exps: &[i32], p: &[u32], c: QtScalar) -> Mixed {
    Mixed::term(exps.len(), Monomial::from_exps(exps), Partition::new(p), c)
}

/// Power sum `Σ x_i^n` written out directly.
fn brute_p(n: i32, vars: usize) -> Poly {
    let mut out = Poly::zero(vars);
    for i in 1..=vars {
        out = out.add(&Poly::monomial(vars, Monomial::power(i, n)));
    }
    out
}

/// `e_n` as a sum over `n`-subsets.
fn brute_e(n: usize, vars: usize) -> Poly {
    let mut out = Poly::zero(vars);
    for mask in 0u32..(1 << vars) {
        if mask.count_ones() as usize == n {
            let m = Monomial::from_pairs((0..vars).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1, 1)));
            out.add_term(m, (), QtScalar::one());
        }
    }
    out
}

/// `h_n` as a sum over all monomials of degree `n`.
fn brute_h(n: i32, vars: usize) -> Poly {
    fn rec(v: usize, vars: usize, left: i32, cur: &mut Vec<i32>, out: &mut Poly) {
        if v == vars {
            if left == 0 {
                out.add_term(Monomial::from_exps(cur), (), QtScalar::one());
            }
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(v + 1, vars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Poly::zero(vars);
    rec(0, vars, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn convert_basis_examples() {
    let m1 = SymFunc::m(&[1]);
    let view = convert_basis(&m1, Basis::PowerSum);
    assert_eq!(view.coeffs.len(), 1);
    assert_eq!(view.coeffs[&Partition::new(&[1])], QtScalar::one());

    let h2 = SymFunc::m(&[2]).add(&SymFunc::m(&[1, 1]));
    assert_eq!(h2, SymFunc::h(&[2]));
    let e_view = convert_basis(&h2, Basis::Elementary);
    assert_eq!(e_view.coeffs[&Partition::new(&[1, 1])], QtScalar::one());
    assert_eq!(e_view.coeffs[&Partition::new(&[2])], QtScalar::int(-1));
    assert_eq!(e_view.coeffs.len(), 2);

    let m_view = convert_basis(&SymFunc::p(&[2]), Basis::Monomial);
    assert_eq!(m_view.coeffs.len(), 1);
    assert_eq!(m_view.coeffs[&Partition::new(&[2])], QtScalar::one());
}

#[test]
fn transitions_match_brute_force_expansions() {
    let vars = 4;
    for n in 1..=4usize {
        assert_eq!(expand_to_vars(&SymFunc::e(&[n as u32]), vars), brute_e(n, vars));
        assert_eq!(expand_to_vars(&SymFunc::h(&[n as u32]), vars), brute_h(n as i32, vars));
        assert_eq!(expand_to_vars(&SymFunc::p(&[n as u32]), vars), brute_p(n as i32, vars));
    }
    let p21 = brute_p(2, vars).mul(&brute_p(1, vars));
    assert_eq!(expand_to_vars(&SymFunc::p(&[2, 1]), vars), p21);
}

#[test]
fn plethysm_examples() {
    let h2 = SymFunc::h(&[2]);
    let a = AlphabetExpr::finite(vec![(one_minus_t(), Monomial::var(1))]);
    assert_eq!(plethysm_substitute(&h2, &a, 1), mixed_x(&[2], &[], one_minus_t()));

    let b = AlphabetExpr::finite(vec![(one_minus_t().neg_ref(), Monomial::var(1))]);
    let tt = &QtScalar::t() * &(&QtScalar::t() - &QtScalar::one());
    assert_eq!(plethysm_substitute(&h2, &b, 1), mixed_x(&[2], &[], tt));

    let c = AlphabetExpr::x().plus(QtScalar::q(), Monomial::var(1));
    let got = plethysm_substitute(&h2, &c, 1);
    let expect = SymFunc::h(&[2])
        .to_mixed(1)
        .add(&SymFunc::h(&[1]).to_mixed(1).mul_monomial(&Monomial::var(1)).scale(&QtScalar::q()))
        .add(&mixed_x(&[2], &[], QtScalar::q_pow(2)));
    assert_eq!(got, expect);
}

#[test]
fn h_of_expr_examples() {
    let any = AlphabetExpr::x().plus(QtScalar::t(), Monomial::var(2));
    assert_eq!(h_of_expr(0, &any, 2), Mixed::one(2));

    let a = AlphabetExpr::x().plus(QtScalar::q(), Monomial::var(1)).times(&one_minus_t());
    let got = h_of_expr(1, &a, 1);
    let expect = mixed_x(&[0], &[1], one_minus_t()).add(&mixed_x(&[1], &[], &one_minus_t() * &QtScalar::q()));
    assert_eq!(got, expect);

    let b = AlphabetExpr::finite(vec![(one_minus_t(), Monomial::var(1))]);
    assert_eq!(h_of_expr(3, &b, 1), mixed_x(&[3], &[], one_minus_t()));

    let c = AlphabetExpr::finite(vec![(one_minus_t().neg_ref(), Monomial::var(1))]);
    let coeff = &QtScalar::t_pow(2) * &(&QtScalar::t() - &QtScalar::one());
    assert_eq!(h_of_expr(3, &c, 1), mixed_x(&[3], &[], coeff));
}

#[test]
fn newton_recurrence_agrees_with_transition_matrices() {
    let a = AlphabetExpr::x()
        .plus(QtScalar::q(), Monomial::var(1))
        .times(&one_minus_t());
    for n in 0..=5 {
        assert_eq!(h_of_expr(n, &a, 1), plethysm_substitute(&SymFunc::h(&[n]), &a, 1));
    }
}

#[test]
fn expand_examples() {
    let got = expand_to_vars(&SymFunc::m(&[2, 1]), 2);
    assert_eq!(got, xmono(&[2, 1]).add(&xmono(&[1, 2])));
    assert!(expand_to_vars(&SymFunc::m(&[1, 1, 1]), 2).is_zero());
    let e2 = expand_to_vars(&SymFunc::m(&[1, 1]), 3);
    assert_eq!(e2, xmono(&[1, 1, 0]).add(&xmono(&[1, 0, 1])).add(&xmono(&[0, 1, 1])));
}

#[test]
fn vertex_examples() {
    let one_minus_t = one_minus_t();
    for n in 0..=5 {
        assert_eq!(vertex_b(n, &SymFunc::one()), h_scaled(n, &one_minus_t));
        let a = AlphabetExpr::scaled_x(one_minus_t.clone());
        let via_newton = SymFunc::from_mixed(&h_of_expr(n, &a, 0)).unwrap();
        assert_eq!(vertex_b(n, &SymFunc::one()), via_newton);
    }
    assert_eq!(vertex_b(0, &SymFunc::p(&[1])), SymFunc::p(&[1]).scale(&QtScalar::t()));
    assert!(vertex_b(1, &SymFunc::zero()).is_zero());
}

#[test]
fn exp_pair_examples() {
    for n in 0..=4u32 {
        let p = mixed_x(&[n as i32], &[], QtScalar::one());
        let got = SymFunc::from_mixed(&exp_pair_ct(&p, 1).unwrap()).unwrap();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(got, SymFunc::e(&[n]).scale(&QtScalar::int(sign)));
    }
    let vp = mixed_x(&[1], &[1], QtScalar::one());
    let got = SymFunc::from_mixed(&exp_pair_ct(&vp, 1).unwrap()).unwrap();
    assert_eq!(got, SymFunc::e(&[1]).mul(&SymFunc::p(&[1])).neg());
}

#[test]
fn printing() {
    let f = SymFunc::m(&[2, 1]).add(&SymFunc::m(&[1]).scale(&one_minus_t()));
    assert_eq!(f.to_string(), "m[2,1] + (1-t)*m[1]");
    assert_eq!(SymFunc::p(&[2]).fmt_in(Basis::PowerSum), "p[2]");
    let g = mixed_x(&[2, 1], &[2, 1], QtScalar::one());
    assert_eq!(fmt_mixed(&g, 'x', Basis::PowerSum), "x1^2*x2*p[2,1]");
}

fn vertex_commutator(n: u32, f: &SymFunc) -> SymFunc {
    let p1 = SymFunc::p(&[1]);
    p1.mul(&vertex_b(n, f)).sub(&vertex_b(n, &p1.mul(f)))
}

#[test]
fn vertex_recursion_on_low_degrees() {
    for deg in 0..=5u32 {
        for lambda in Partition::all(deg) {
            let f = SymFunc::basis_element(Basis::Monomial, &lambda);
            for n in 0..=4 {
                assert_eq!(vertex_commutator(n, &f), vertex_b(n + 1, &f), "n={n} F=m{lambda:?}");
            }
        }
    }
}

fn scalar_strategy() -> impl Strategy<Value = QtScalar> {
    prop_oneof![
        (-2i64..=2).prop_map(QtScalar::int),
        (0i64..=2, 0i64..=2).prop_map(|(a, b)| QtScalar::qt_monomial(a, b)),
        Just(one_minus_t()),
    ]
}

fn alphabet_strategy() -> impl Strategy<Value = AlphabetExpr> {
    (
        scalar_strategy(),
        prop::collection::vec((scalar_strategy(), 1usize..=2, 1i32..=2), 0..=2),
    )
        .prop_map(|(a, ts)| AlphabetExpr {
            x_coeff: a,
            monomial_terms: ts.into_iter().map(|(c, v, e)| (c, Monomial::power(v, e))).collect(),
        })
}

fn symfunc_strategy(max_deg: u32) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((0..=max_deg, 0usize..8, scalar_strategy()), 0..=3).prop_map(|ts| {
        let mut f = SymFunc::zero();
        for (d, i, c) in ts {
            let all = Partition::all(d);
            let lambda = &all[i % all.len()];
            f = f.add(&SymFunc::basis_element(Basis::Monomial, lambda).scale(&c));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn convolution(a in alphabet_strategy(), b in alphabet_strategy(), n in 0u32..=6) {
        let sum = AlphabetExpr {
            x_coeff: a.x_coeff.add_ref(&b.x_coeff),
            monomial_terms: a.monomial_terms.iter().chain(b.monomial_terms.iter()).cloned().collect(),
        };
        let lhs = h_of_expr(n, &sum, 2);
        let mut rhs = Mixed::zero(2);
        for i in 0..=n {
            rhs = rhs.add(&h_of_expr(i, &a, 2).mul(&h_of_expr(n - i, &b, 2)));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_round_trips(f in symfunc_strategy(5)) {
        for basis in [Basis::Monomial, Basis::Homogeneous, Basis::Elementary, Basis::PowerSum] {
            let view = convert_basis(&f, basis);
            prop_assert_eq!(SymFunc::from_expansion(&view), f.clone());
        }
    }

    #[test]
    fn expansion_is_a_ring_map(f in symfunc_strategy(3), g in symfunc_strategy(3)) {
        let lhs = expand_to_vars(&f.mul(&g), 3);
        let rhs = expand_to_vars(&f, 3).mul(&expand_to_vars(&g, 3));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn finite_plethysm_matches_expansion(f in symfunc_strategy(4), m in 1usize..=3) {
        let via_pleth = plethysm_substitute(&f, &AlphabetExpr::vars(1..=m), m);
        let via_orbits = expand_to_vars(&f, m);
        let as_mixed = Mixed::from_terms(m, via_orbits.into_terms().map(|(mo, _, c)| (mo, Partition::empty(), c)));
        prop_assert_eq!(via_pleth, as_mixed);
    }
}
