use daha_lab::asym::{apply_limit_y, suite_stable_relations, AlmostSym};
use daha_lab::polyring::{Monomial, Poly};
use daha_lab::symfunc::SymFunc;

#[test]
fn stable_suites_pass_at_degree_two() {
    for k in [2, 3] {
        let r = suite_stable_relations(k, 2);
        assert!(r.pass, "{r}");
    }
}

#[test]
fn limit_y_acts_nontrivially_on_tails() {
    let f = AlmostSym::product(2, &Monomial::from_exps(&[0, 1]), &SymFunc::m(&[1]));
    let a = apply_limit_y(1, &apply_limit_y(2, &f).unwrap()).unwrap();
    let b = apply_limit_y(2, &apply_limit_y(1, &f).unwrap()).unwrap();
    assert!(!a.is_zero());
    assert!(a.sub(&b).is_zero());
    let g = AlmostSym::from_poly(&Poly::monomial(2, Monomial::from_exps(&[1, 1])));
    assert!(!apply_limit_y(2, &g).unwrap().is_zero());
}
