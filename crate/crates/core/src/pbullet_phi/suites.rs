use std::sync::Arc;

use super::{apply_parrow, phi_inv, phi_map, AlmostSymRep, PArrow, PArrowKind};
use crate::asym::{apply_limit_t, apply_limit_y, spanning_set, AlmostSym};
use crate::daha_finite::omega_tilde_inv;
use crate::ddpa::{apply_arrow, apply_loop, dyck_relations, Arrow, Loop, VElement};
use crate::error::Result;
use crate::field::QtScalar;
use crate::polyring::Monomial;
use crate::suite::{Report, Suite};
use crate::symfunc::{h_of_expr, plethysm_mixed, AlphabetExpr, Mixed, SymFunc};

fn arrow(kind: PArrowKind, f: &AlmostSym) -> Result<AlmostSym> {
    apply_parrow(PArrow::new(kind, f.rank()), f)
}

fn one_minus_t() -> QtScalar {
    QtScalar::one().sub_ref(&QtScalar::t())
}

/// `f(x_1..x_{k-1}) x_k^n G[tail_{k-1}]` as an element of node `k`.
pub fn tail_split_input(f: &Monomial, n: u32, g: &SymFunc, k: usize) -> AlmostSym {
    let lower = AlmostSym::product(k - 1, f, g).embed_rank(k).expect("rank grows");
    AlmostSym::new(lower.body().mul_monomial(&Monomial::power(k, n as i32)))
}

/// `F` at node `k` rewritten as `Σ f x_k^n G[tail_{k-1}]`, one `(f, n, G)` per term.
fn regroup(f: &AlmostSym) -> Vec<(Monomial, u32, Mixed)> {
    let k = f.rank();
    let unsplit = AlphabetExpr::x().plus(QtScalar::int(-1), Monomial::var(k));
    plethysm_mixed(f.body(), &unsplit, k)
        .terms()
        .map(|(m, lambda, c)| {
            let g = Mixed::term(k, Monomial::one(), lambda.clone(), c.clone());
            (m.with(k, 0), m.exp(k) as u32, g)
        })
        .collect()
}

/// `∂_k^-` through the regrouped form: `Σ f x_k^n G[tail_{k-1}] ↦ Σ f G h_n[(1-t) tail_{k-1}]`.
pub fn regrouped_minus(f: &AlmostSym) -> Result<AlmostSym> {
    let k = f.rank();
    let mut out = Mixed::zero(k - 1);
    let x = AlphabetExpr::scaled_x(one_minus_t());
    for (m, n, g) in regroup(f) {
        let g = Mixed::from_terms(k - 1, g.into_terms());
        out = out.add(&g.mul(&h_of_expr(n, &x, k - 1)).mul_monomial(&m));
    }
    Ok(AlmostSym::new(out))
}

/// `Σ f(x_2..x_k) G[tail_k + q x_1] (h_n[(1-t)(tail_k + q x_1)] - h_n[(1-t) tail_k])` over the
/// regrouped form of `F`.
fn star_commutator_rhs(f: &AlmostSym) -> Result<AlmostSym> {
    let k = f.rank();
    let shifted = AlphabetExpr::x().plus(QtScalar::q(), Monomial::var(1));
    let mut out = Mixed::zero(k);
    for (m, n, g) in regroup(f) {
        let h = h_of_expr(n, &shifted.times(&one_minus_t()), k).sub(&h_of_expr(n, &AlphabetExpr::scaled_x(one_minus_t()), k));
        let moved = m.rename(|i| i + 1);
        out = out.add(&plethysm_mixed(&g, &shifted, k).mul(&h).mul_monomial(&moved));
    }
    Ok(AlmostSym::new(out))
}

/// The double Dyck path algebra relations on `𝒫_•` with `(T, d_+, d_+^*, d_-, y, z)` acting as
/// `(𝒯, ∂, ∂^*, ∂^-, 𝒳, 𝒴)`, plus the commutator formulas for `∂^-`.
pub fn quiverrep(kmax: usize, d: usize) -> Suite {
    assert!(kmax >= 2, "the quiver suite needs at least three nodes");
    let mut s = Suite::new("quiverrep", kmax, d);
    s.extend(dyck_relations::<AlmostSymRep>("quiverrep", kmax, d));
    for k in 1..=kmax {
        let inputs = Arc::new(spanning_set(k, d));
        let lower = Arc::new(spanning_set(k - 1, d));
        let at = |name: &str| format!("{name} (node {k})");

        s.equation(
            at("d_{k-1} d-_k - d-_{k+1} d_k = (t-1) omega~^-1"),
            "d and d- commutator",
            &inputs,
            |f: &AlmostSym| {
                let a = arrow(PArrowKind::Partial, &arrow(PArrowKind::PartialMinus, f)?)?;
                let b = arrow(PArrowKind::PartialMinus, &arrow(PArrowKind::Partial, f)?)?;
                Ok(a.sub(&b))
            },
            move |f: &AlmostSym| {
                let c = QtScalar::t().sub_ref(&QtScalar::one()).mul_ref(&QtScalar::t_pow(k as i64 - 1));
                Ok(AlmostSym::new(omega_tilde_inv(f.body())?.scale(&c)))
            },
        );
        s.equation(
            at("d- matches the regrouped form"),
            "d- on regrouped elements",
            &inputs,
            |f: &AlmostSym| arrow(PArrowKind::PartialMinus, f),
            regrouped_minus,
        );
        s.equation(
            at("d- fixes elements of the previous node"),
            "d- on regrouped elements",
            &lower,
            move |f: &AlmostSym| arrow(PArrowKind::PartialMinus, &f.embed_rank(k)?),
            |f: &AlmostSym| Ok(f.clone()),
        );
        s.equation(
            at("[d*, d-] F = f(x2..) G[X+qx1] (h_n[(1-t)(X+qx1)] - h_n[(1-t)X])"),
            "d* and d- commutator",
            &inputs,
            |f: &AlmostSym| {
                let a = arrow(PArrowKind::PartialStar, &arrow(PArrowKind::PartialMinus, f)?)?;
                let b = arrow(PArrowKind::PartialMinus, &arrow(PArrowKind::PartialStar, f)?)?;
                Ok(a.sub(&b))
            },
            star_commutator_rhs,
        );
        s.equation(
            at("[d*, d-] = (1-t) t^-k Y1 T1 ... T(k-1)"),
            "d* and d- commutator",
            &inputs,
            |f: &AlmostSym| star_commutator_rhs(f),
            move |f: &AlmostSym| {
                let mut g = f.clone();
                for j in (1..k).rev() {
                    g = apply_limit_t(j, &g)?;
                }
                let c = one_minus_t().mul_ref(&QtScalar::t_pow(-(k as i64)));
                Ok(apply_limit_y(1, &g)?.scale(&c))
            },
        );
    }
    s
}

pub fn suite_quiverrep(kmax: usize, d: usize) -> Report {
    quiverrep(kmax, d).run()
}

type PFn = Arc<dyn Fn(&AlmostSym) -> Result<AlmostSym> + Send + Sync>;
type VFn = Arc<dyn Fn(&VElement) -> Result<VElement> + Send + Sync>;

fn intertwines(s: &mut Suite, name: String, anchor: &str, inputs: &Arc<Vec<AlmostSym>>, p: PFn, v: VFn) {
    s.equation(name, anchor, inputs, move |f: &AlmostSym| Ok(phi_map(&p(f)?)), move |f: &AlmostSym| v(&phi_map(f)));
}

/// `Φ ∘ op = op ∘ Φ` for the six operator families, and `Φ^{-1} Φ = id`.
pub fn isom(kmax: usize, d: usize) -> Suite {
    assert!(kmax >= 2, "the isomorphism suite needs at least three nodes");
    let mut s = Suite::new("isom", kmax, d);
    for k in 0..=kmax {
        let inputs = Arc::new(spanning_set(k, d));
        let at = |name: String| format!("{name} (node {k})");
        s.equation(at("phi^-1 phi = id".into()), "phi is invertible", &inputs, |f: &AlmostSym| Ok(phi_inv(&phi_map(f))), |f: &AlmostSym| Ok(f.clone()));

        let mut arrows = vec![(Arrow::Dplus, PArrowKind::Partial, "d"), (Arrow::DplusStar, PArrowKind::PartialStar, "d*")];
        if k >= 1 {
            arrows.push((Arrow::Dminus, PArrowKind::PartialMinus, "d-"));
        }
        for (a, kind, label) in arrows {
            intertwines(&mut s, at(format!("phi {label} = {label} phi")), "arrows", &inputs, Arc::new(move |f| arrow(kind, f)), Arc::new(move |f| apply_arrow(a, f)));
        }
        for i in 1..k {
            intertwines(&mut s, at(format!("phi T{i} = T{i} phi")), "T loops", &inputs, Arc::new(move |f| apply_limit_t(i, f)), Arc::new(move |f| apply_loop(Loop::T(i), f)));
        }
        for i in 1..=k {
            intertwines(&mut s, at(format!("phi X{i} = y{i} phi")), "y loops", &inputs, Arc::new(move |f| crate::asym::apply_limit_x(i, f)), Arc::new(move |f| apply_loop(Loop::Y(i), f)));
            intertwines(&mut s, at(format!("phi Y{i} = z{i} phi")), "z loops", &inputs, Arc::new(move |f| apply_limit_y(i, f)), Arc::new(move |f| apply_loop(Loop::Z(i), f)));
        }
    }
    s
}

pub fn suite_isom(kmax: usize, d: usize) -> Report {
    isom(kmax, d).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::h_scaled;

    #[test]
    fn regrouped_minus_on_pure_powers() {
        for n in 0..=3u32 {
            let f = tail_split_input(&Monomial::one(), n, &SymFunc::one(), 1);
            let expect = AlmostSym::product(0, &Monomial::one(), &h_scaled(n, &one_minus_t()));
            assert_eq!(regrouped_minus(&f).unwrap(), expect);
        }
    }

    #[test]
    fn tail_split_inputs_carry_the_lower_tail() {
        let f = tail_split_input(&Monomial::var(1), 2, &SymFunc::p(&[1]), 2);
        let got = arrow(PArrowKind::PartialMinus, &f).unwrap();
        let expect = AlmostSym::product(1, &Monomial::var(1), &SymFunc::p(&[1]).mul(&h_scaled(2, &one_minus_t())));
        assert_eq!(got, expect);
    }

    #[test]
    fn small_suites_pass() {
        let r = suite_quiverrep(2, 0);
        assert!(r.pass, "{r}");
        let r = suite_quiverrep(2, 1);
        assert!(r.pass, "{r}");
        let r = suite_isom(2, 1);
        assert!(r.pass, "{r}");
    }
}
