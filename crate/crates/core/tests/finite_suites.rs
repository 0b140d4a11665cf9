use daha_lab::daha_finite::{suite_finite_relations, suite_projection_compat};

#[test]
fn finite_relations_on_laurent_boxes() {
    for (k, d) in [(2, 2), (3, 2), (2, 0)] {
        let r = suite_finite_relations(k, d);
        assert!(r.pass, "{r}");
    }
}

#[test]
fn projection_compatibility() {
    for (k, d) in [(3, 3), (4, 3), (3, 0), (4, 1)] {
        let r = suite_projection_compat(k, d);
        assert!(r.pass, "{r}");
    }
}
