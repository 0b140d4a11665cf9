use daha_lab::ddpa::{apply_arrow, apply_loop, suite_atq, Arrow, Loop, VElement};
use daha_lab::polyring::Monomial;
use daha_lab::symfunc::SymFunc;

#[test]
fn atq_relations_hold_up_to_node_three() {
    let r = suite_atq(3, 2);
    println!("{} identities in {} ms", r.identities.len(), r.elapsed_ms);
    assert!(r.pass, "{r}");
}

#[test]
fn z_loops_act_on_symmetric_tails() {
    let f = VElement::product(1, &Monomial::one(), &SymFunc::p(&[1]));
    let g = apply_loop(Loop::Z(1), &f).unwrap();
    assert!(!g.is_zero());
    let back = apply_arrow(Arrow::Dminus, &apply_arrow(Arrow::Dplus, &VElement::one(0)).unwrap()).unwrap();
    assert_eq!(back, VElement::product(0, &Monomial::one(), &SymFunc::e(&[1])));
}
