use daha_lab::asym::{apply_limit_y, AlmostSym};
use daha_lab::ddpa::{apply_loop, Loop};
use daha_lab::pbullet_phi::{phi_map, suite_isom, suite_quiverrep};
use daha_lab::polyring::Monomial;
use daha_lab::symfunc::SymFunc;

#[test]
fn quiver_relations_hold() {
    for (k, d) in [(2, 2), (3, 1), (3, 2)] {
        let r = suite_quiverrep(k, d);
        println!("quiverrep ({k},{d}): {} identities in {} ms", r.identities.len(), r.elapsed_ms);
        assert!(r.pass, "{r}");
    }
}

#[test]
fn phi_is_an_isomorphism_of_representations() {
    for (k, d) in [(2, 2), (3, 2)] {
        let r = suite_isom(k, d);
        println!("isom ({k},{d}): {} identities in {} ms", r.identities.len(), r.elapsed_ms);
        assert!(r.pass, "{r}");
    }
}

#[test]
fn phi_carries_y_to_z_on_tails() {
    let f = AlmostSym::product(2, &Monomial::var(2), &SymFunc::m(&[2]));
    let lhs = phi_map(&apply_limit_y(2, &f).unwrap());
    let rhs = apply_loop(Loop::Z(2), &phi_map(&f)).unwrap();
    assert_eq!(lhs, rhs);
    assert!(!lhs.is_zero());
}
