//! The quiver arrows `∂_k`, `∂_k^*`, `∂_k^-` on the filtration `𝒫(k)^+` of the almost
//! symmetric polynomials, and the node-wise isomorphism `Φ` onto `V_•`.

mod suites;

pub use suites::{isom, quiverrep, regrouped_minus, suite_isom, suite_quiverrep, tail_split_input};

use std::collections::HashMap;

use crate::asym::{apply_limit_t, apply_limit_t_inv, apply_limit_x, apply_limit_y, AlmostSym};
use crate::daha_finite::omega_inv;
use crate::ddpa::{Arrow, DyckRep, Loop, VElement};
use crate::error::{Error, Result};
use crate::field::QtScalar;
use crate::polyring::Monomial;
use crate::symfunc::{vertex_b, Mixed, Partition, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PArrowKind {
    Partial,
    PartialStar,
    PartialMinus,
}

/// An arrow leaving node `node`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PArrow {
    pub kind: PArrowKind,
    pub node: usize,
}

impl PArrow {
    pub fn new(kind: PArrowKind, node: usize) -> PArrow {
        PArrow { kind, node }
    }

    pub fn target(&self) -> Option<usize> {
        match self.kind {
            PArrowKind::PartialMinus => self.node.checked_sub(1),
            _ => Some(self.node + 1),
        }
    }
}

pub fn apply_parrow(a: PArrow, f: &AlmostSym) -> Result<AlmostSym> {
    if f.rank() != a.node {
        return Err(Error::NodeMismatch { expected: a.node, got: f.rank() });
    }
    let k = a.node;
    match a.kind {
        PArrowKind::Partial => {
            let mut g = f.embed_rank(k + 1)?.body().mul_monomial(&Monomial::var(k + 1));
            for i in (1..=k).rev() {
                g = g.hecke_t(i)?;
            }
            Ok(AlmostSym::new(g.neg()))
        }
        PArrowKind::PartialStar => Ok(AlmostSym::new(omega_inv(f.embed_rank(k + 1)?.body()))),
        PArrowKind::PartialMinus => {
            if k == 0 {
                return Err(Error::EmptyRankForDminus);
            }
            Ok(AlmostSym::new(partial_minus(f.body(), k)))
        }
    }
}

/// `f x_k^n G[tail_k] ↦ f 𝓑_n(G)[tail_{k-1}]`.
fn partial_minus(body: &Mixed, k: usize) -> Mixed {
    let mut cache: HashMap<(u32, Partition), SymFunc> = HashMap::new();
    let mut out = Mixed::zero(k - 1);
    for (m, lambda, c) in body.terms() {
        let n = m.exp(k) as u32;
        let b = cache
            .entry((n, lambda.clone()))
            .or_insert_with(|| vertex_b(n, &SymFunc::from_p_coeffs([(lambda.clone(), QtScalar::one())])));
        let rest = m.with(k, 0);
        for (mu, a) in b.p_coeffs() {
            out.add_term(rest.clone(), mu.clone(), a.mul_ref(c));
        }
    }
    out
}

/// `Π_i (t^{λ_i} - 1)`, the factor relating `p_λ[tail]` and `p_λ[X]`.
fn tail_factor(lambda: &Partition) -> QtScalar {
    lambda
        .parts()
        .fold(QtScalar::one(), |acc, n| acc.mul_ref(&QtScalar::t_pow(n as i64).sub_ref(&QtScalar::one())))
}

/// `x_i ↦ y_i`, `p_n[tail_k] ↦ p_n[X]/(t^n - 1)`.
pub fn phi_map(f: &AlmostSym) -> VElement {
    let body = Mixed::from_terms(
        f.rank(),
        f.body()
            .terms()
            .map(|(m, lambda, c)| (m.clone(), lambda.clone(), c.div_ref(&tail_factor(lambda)).expect("nonzero factor"))),
    );
    VElement::new(body).expect("almost symmetric elements have nonnegative exponents")
}

/// The inverse of [`phi_map`].
pub fn phi_inv(f: &VElement) -> AlmostSym {
    AlmostSym::new(Mixed::from_terms(
        f.rank(),
        f.body()
            .terms()
            .map(|(m, lambda, c)| (m.clone(), lambda.clone(), c.mul_ref(&tail_factor(lambda)))),
    ))
}

fn loop_index(i: usize, bound: usize, rank: usize) -> Result<()> {
    if i == 0 || i > bound {
        Err(Error::IndexOutOfRank { index: i, rank })
    } else {
        Ok(())
    }
}

/// The representation on `𝒫_•`: arrows `∂`, `∂^*`, `∂^-`, loops `𝒯_i`, `𝒳_i`, `𝒴_i`.
pub struct AlmostSymRep;

impl DyckRep for AlmostSymRep {
    type Elem = AlmostSym;

    fn node(f: &AlmostSym) -> usize {
        f.rank()
    }

    fn arrow(a: Arrow, f: &AlmostSym) -> Result<AlmostSym> {
        let kind = match a {
            Arrow::Dplus => PArrowKind::Partial,
            Arrow::DplusStar => PArrowKind::PartialStar,
            Arrow::Dminus => PArrowKind::PartialMinus,
        };
        apply_parrow(PArrow::new(kind, f.rank()), f)
    }

    fn act(g: Loop, f: &AlmostSym) -> Result<AlmostSym> {
        let k = f.rank();
        match g {
            Loop::T(i) => {
                loop_index(i, k.saturating_sub(1), k)?;
                apply_limit_t(i, f)
            }
            Loop::Tinv(i) => {
                loop_index(i, k.saturating_sub(1), k)?;
                apply_limit_t_inv(i, f)
            }
            Loop::Y(i) => {
                loop_index(i, k, k)?;
                apply_limit_x(i, f)
            }
            Loop::Z(i) => {
                loop_index(i, k, k)?;
                apply_limit_y(i, f)
            }
        }
    }

    fn spanning_set(k: usize, d: usize) -> Vec<AlmostSym> {
        crate::asym::spanning_set(k, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ddpa::apply_arrow;
    use crate::symfunc::h_scaled;
    use proptest::prelude::*;

    fn x(exps: &[i32]) -> AlmostSym {
        AlmostSym::product(exps.len(), &Monomial::from_exps(exps), &SymFunc::one())
    }

    fn arrow(kind: PArrowKind, f: &AlmostSym) -> AlmostSym {
        apply_parrow(PArrow::new(kind, f.rank()), f).unwrap()
    }

    #[test]
    fn partial_examples() {
        assert_eq!(arrow(PArrowKind::Partial, &AlmostSym::one(0)), x(&[1]).scale(&QtScalar::int(-1)));
        assert_eq!(arrow(PArrowKind::PartialStar, &x(&[1])), x(&[0, 1]));
        let one_minus_t = QtScalar::one().sub_ref(&QtScalar::t());
        for n in 0..=4 {
            let got = arrow(PArrowKind::PartialMinus, &x(&[n]));
            let expect = AlmostSym::product(0, &Monomial::one(), &h_scaled(n as u32, &one_minus_t));
            assert_eq!(got, expect, "n={n}");
        }
    }

    #[test]
    fn partial_minus_fixes_lower_tails() {
        for k in 1..=3 {
            for lambda in Partition::up_to(3) {
                let g = AlmostSym::product(k - 1, &Monomial::var(1).pow(if k > 1 { 1 } else { 0 }), &SymFunc::m(&lambda.to_vec()));
                let lifted = g.embed_rank(k).unwrap();
                assert_eq!(arrow(PArrowKind::PartialMinus, &lifted), g, "k={k} λ={lambda:?}");
            }
        }
    }

    #[test]
    fn node_mismatch_is_reported() {
        let err = apply_parrow(PArrow::new(PArrowKind::Partial, 2), &x(&[1])).unwrap_err();
        assert_eq!(err, Error::NodeMismatch { expected: 2, got: 1 });
        let err = apply_parrow(PArrow::new(PArrowKind::PartialMinus, 0), &AlmostSym::one(0)).unwrap_err();
        assert_eq!(err, Error::EmptyRankForDminus);
        assert_eq!(PArrow::new(PArrowKind::PartialMinus, 0).target(), None);
    }

    #[test]
    fn phi_examples() {
        let y1 = VElement::product(1, &Monomial::var(1), &SymFunc::one());
        assert_eq!(phi_map(&x(&[1])), y1);
        let f = AlmostSym::product(1, &Monomial::var(1), &SymFunc::m(&[1]));
        let c = QtScalar::t().sub_ref(&QtScalar::one());
        assert_eq!(phi_map(&f), VElement::product(1, &Monomial::var(1), &SymFunc::p(&[1]).scale(&c.inv().unwrap())));
        assert_eq!(phi_map(&AlmostSym::one(0)), VElement::one(0));
        assert_eq!(phi_inv(&y1), x(&[1]));
        let p1 = VElement::product(0, &Monomial::one(), &SymFunc::p(&[1]));
        assert_eq!(phi_inv(&p1), AlmostSym::product(0, &Monomial::one(), &SymFunc::m(&[1]).scale(&c)));
    }

    #[test]
    fn phi_intertwines_spot_values() {
        let got = phi_map(&apply_limit_y(1, &x(&[1])).unwrap());
        let y1 = VElement::product(1, &Monomial::var(1), &SymFunc::one());
        assert_eq!(got, y1.scale(&QtScalar::qt_monomial(1, 1)));
        let lhs = phi_map(&arrow(PArrowKind::Partial, &AlmostSym::one(0)));
        assert_eq!(lhs, apply_arrow(Arrow::Dplus, &VElement::one(0)).unwrap());
    }

    fn spanning_element() -> impl Strategy<Value = AlmostSym> {
        (0usize..=3, 0usize..=2).prop_flat_map(|(k, d)| {
            let set = crate::asym::spanning_set(k, d);
            (0..set.len()).prop_map(move |i| set[i].clone())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn phi_round_trips(f in spanning_element()) {
            prop_assert_eq!(phi_inv(&phi_map(&f)), f);
        }

        #[test]
        fn phi_is_multiplicative(f in spanning_element(), g in spanning_element()) {
            let (f, g) = f.aligned(&g);
            prop_assert_eq!(phi_map(&f.mul(&g)), phi_map(&f).mul(&phi_map(&g)));
        }
    }
}
