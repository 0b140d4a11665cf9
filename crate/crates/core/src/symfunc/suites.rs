use std::sync::Arc;

use super::{h_scaled, vertex_b, Basis, Partition, SymFunc};
use crate::field::QtScalar;
use crate::suite::{Report, Suite};

/// `[p_1, 𝓑_n] = 𝓑_{n+1}` on `m_λ` with `|λ| ≤ d`, `n ≤ nmax`, and `𝓑_n · 1 = h_n[(1-t)X]`
/// for `n ≤ nmax + 1`.
pub fn vertex_relations(nmax: u32, d: u32) -> Suite {
    let mut s = Suite::new("vertex", nmax as usize, d as usize);
    let inputs: Vec<SymFunc> = Partition::up_to(d).iter().map(|l| SymFunc::basis_element(Basis::Monomial, l)).collect();
    let inputs = Arc::new(inputs);
    for n in 0..=nmax {
        s.equation(
            format!("[p1, B{n}] = B{}", n + 1),
            "vertex operator commutator",
            &inputs,
            move |f: &SymFunc| {
                let p1 = SymFunc::p(&[1]);
                Ok(p1.mul(&vertex_b(n, f)).sub(&vertex_b(n, &p1.mul(f))))
            },
            move |f: &SymFunc| Ok(vertex_b(n + 1, f)),
        );
    }
    let one = Arc::new(vec![SymFunc::one()]);
    for n in 0..=nmax + 1 {
        s.equation(
            format!("B{n} 1 = h{n}[(1-t)X]"),
            "vertex operator on 1",
            &one,
            move |f: &SymFunc| Ok(vertex_b(n, f)),
            move |f: &SymFunc| Ok(f.mul(&h_scaled(n, &QtScalar::one().sub_ref(&QtScalar::t())))),
        );
    }
    s
}

pub fn suite_vertex(nmax: u32, d: u32) -> Report {
    vertex_relations(nmax, d).run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_vertex_suite_passes() {
        let r = suite_vertex(2, 2);
        assert!(r.pass, "{r}");
        assert_eq!(r.identities.len(), 3 + 4);
    }
}
