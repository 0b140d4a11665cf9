//! The standard representation `V_k = Q(q,t)[y_1..y_k] ⊗ Sym[X]` of the double Dyck path
//! algebra: the arrows `d_+`, `d_-`, `d_+^*` and the loops `T_i`, `y_i`, `z_i`.

mod suites;

pub use suites::{atq_relations, dyck_relations, spanning_set, suite_atq};

use std::fmt;

use crate::daha_finite::omega_inv;
use crate::error::{Error, Result};
use crate::field::QtScalar;
use crate::ops::Linear;
use crate::polyring::Monomial;
use crate::symfunc::{exp_pair_ct, fmt_mixed, plethysm_mixed, AlphabetExpr, Basis, Mixed, SymFunc};

/// An element of `V_k`; symmetric functions are stored in power sums of `X`.
#[derive(Clone, PartialEq, Eq)]
pub struct VElement {
    body: Mixed,
}

impl VElement {
    pub fn new(body: Mixed) -> Result<VElement> {
        if body.terms().any(|(m, _, _)| !m.is_plus()) {
            return Err(Error::SignatureViolation("y-exponents must be nonnegative".into()));
        }
        Ok(VElement { body })
    }

    pub fn zero(rank: usize) -> VElement {
        VElement { body: Mixed::zero(rank) }
    }

    pub fn one(rank: usize) -> VElement {
        VElement { body: Mixed::one(rank) }
    }

    /// `y^m · G[X]` at node `rank`.
    pub fn product(rank: usize, m: &Monomial, g: &SymFunc) -> VElement {
        VElement::new(Mixed::from_terms(
            rank,
            g.p_coeffs().iter().map(|(p, c)| (m.clone(), p.clone(), c.clone())),
        ))
        .expect("nonnegative monomial")
    }

    pub fn rank(&self) -> usize {
        self.body.rank()
    }

    pub fn body(&self) -> &Mixed {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn add(&self, o: &VElement) -> VElement {
        VElement { body: self.body.add(&o.body) }
    }

    pub fn sub(&self, o: &VElement) -> VElement {
        VElement { body: self.body.sub(&o.body) }
    }

    pub fn mul(&self, o: &VElement) -> VElement {
        VElement { body: self.body.mul(&o.body) }
    }

    pub fn scale(&self, c: &QtScalar) -> VElement {
        VElement { body: self.body.scale(c) }
    }
}

impl fmt::Display for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_mixed(&self.body, 'y', Basis::PowerSum))
    }
}

impl fmt::Debug for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[node {}] {self}", self.rank())
    }
}

impl Linear for VElement {
    fn add_v(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_v(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn scale_v(&self, c: &QtScalar) -> Self {
        self.scale(c)
    }
    fn is_zero_v(&self) -> bool {
        self.is_zero()
    }
    fn same_value(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }
    fn coefficients(&self) -> Vec<(String, QtScalar)> {
        self.body.coefficient_list()
    }
    fn describe(&self) -> String {
        format!("{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arrow {
    Dplus,
    Dminus,
    DplusStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Loop {
    T(usize),
    Tinv(usize),
    Y(usize),
    Z(usize),
}

/// `X ↦ X + c·y_j`.
fn shift_x(f: &Mixed, c: QtScalar, j: usize) -> Mixed {
    plethysm_mixed(f, &AlphabetExpr::x().plus(c, Monomial::var(j)), j.max(f.rank()))
}

fn t_minus_one() -> QtScalar {
    QtScalar::t().sub_ref(&QtScalar::one())
}

pub fn apply_arrow(a: Arrow, f: &VElement) -> Result<VElement> {
    let k = f.rank();
    match a {
        Arrow::Dminus => {
            if k == 0 {
                return Err(Error::EmptyRankForDminus);
            }
            let shifted = shift_x(&f.body, t_minus_one().neg_ref(), k);
            Ok(VElement { body: exp_pair_ct(&shifted, k)? })
        }
        Arrow::Dplus => {
            let mut g = shift_x(&f.body, t_minus_one(), k + 1).mul_monomial(&Monomial::var(k + 1));
            for i in (1..=k).rev() {
                g = g.hecke_t(i)?;
            }
            Ok(VElement { body: g.neg() })
        }
        Arrow::DplusStar => Ok(VElement {
            body: omega_inv(&shift_x(&f.body, t_minus_one(), k + 1)),
        }),
    }
}

fn check_index(i: usize, bound: usize, rank: usize) -> Result<()> {
    if i == 0 || i > bound {
        Err(Error::IndexOutOfRank { index: i, rank })
    } else {
        Ok(())
    }
}

pub fn apply_loop(g: Loop, f: &VElement) -> Result<VElement> {
    let k = f.rank();
    match g {
        Loop::T(i) => {
            check_index(i, k.saturating_sub(1), k)?;
            Ok(VElement { body: f.body.hecke_t(i)? })
        }
        Loop::Tinv(i) => {
            check_index(i, k.saturating_sub(1), k)?;
            Ok(VElement { body: f.body.hecke_t_inv(i)? })
        }
        Loop::Y(i) => {
            check_index(i, k, k)?;
            Ok(VElement { body: f.body.mul_monomial(&Monomial::var(i)) })
        }
        Loop::Z(i) => {
            check_index(i, k, k)?;
            z_word::<StandardRep>(i, f)
        }
    }
}

/// A representation of the double Dyck path algebra on a family of nodes.
pub trait DyckRep: 'static {
    type Elem: Linear;
    fn node(f: &Self::Elem) -> usize;
    fn arrow(a: Arrow, f: &Self::Elem) -> Result<Self::Elem>;
    /// Loops `T_i`, `T_i^{-1}`, `y_i`, `z_i` at the node of `f`.
    fn act(g: Loop, f: &Self::Elem) -> Result<Self::Elem>;
    fn spanning_set(k: usize, d: usize) -> Vec<Self::Elem>;
}

/// The representation on `V_•`.
pub struct StandardRep;

impl DyckRep for StandardRep {
    type Elem = VElement;
    fn node(f: &VElement) -> usize {
        f.rank()
    }
    fn arrow(a: Arrow, f: &VElement) -> Result<VElement> {
        apply_arrow(a, f)
    }
    fn act(g: Loop, f: &VElement) -> Result<VElement> {
        apply_loop(g, f)
    }
    fn spanning_set(k: usize, d: usize) -> Vec<VElement> {
        suites::spanning_set(k, d)
    }
}

fn t_word<R: DyckRep>(f: &R::Elem, run: impl Iterator<Item = usize>, inverse: bool) -> Result<R::Elem> {
    let mut g = f.clone();
    for j in run {
        g = R::act(if inverse { Loop::Tinv(j) } else { Loop::T(j) }, &g)?;
    }
    Ok(g)
}

/// `[d_+, d_-]` at the node of `f`.
pub fn plus_commutator<R: DyckRep>(f: &R::Elem) -> Result<R::Elem> {
    let a = R::arrow(Arrow::Dplus, &R::arrow(Arrow::Dminus, f)?)?;
    let b = R::arrow(Arrow::Dminus, &R::arrow(Arrow::Dplus, f)?)?;
    Ok(a.sub_v(&b))
}

/// `[d_+^*, d_-]` at the node of `f`.
pub fn star_commutator<R: DyckRep>(f: &R::Elem) -> Result<R::Elem> {
    let a = R::arrow(Arrow::DplusStar, &R::arrow(Arrow::Dminus, f)?)?;
    let b = R::arrow(Arrow::Dminus, &R::arrow(Arrow::DplusStar, f)?)?;
    Ok(a.sub_v(&b))
}

/// `y_1 = [d_+, d_-] T_{k-1} ... T_1 / (t^{k-1}(t-1))`, `y_{i+1} = t T_i^{-1} y_i T_i^{-1}`.
pub fn y_word<R: DyckRep>(i: usize, f: &R::Elem) -> Result<R::Elem> {
    let k = R::node(f);
    check_index(i, k, k)?;
    if i == 1 {
        let g = t_word::<R>(f, 1..k, false)?;
        let c = QtScalar::t_pow(k as i64 - 1).mul_ref(&t_minus_one()).inv()?;
        return Ok(plus_commutator::<R>(&g)?.scale_v(&c));
    }
    let j = i - 1;
    let g = R::act(Loop::Tinv(j), f)?;
    let g = y_word::<R>(j, &g)?;
    Ok(R::act(Loop::Tinv(j), &g)?.scale_v(&QtScalar::t()))
}

/// `z_1 = t^k/(1-t) [d_+^*, d_-] T_{k-1}^{-1} ... T_1^{-1}`, `z_{i+1} = t^{-1} T_i z_i T_i`.
pub fn z_word<R: DyckRep>(i: usize, f: &R::Elem) -> Result<R::Elem> {
    let k = R::node(f);
    check_index(i, k, k)?;
    if i == 1 {
        let g = t_word::<R>(f, 1..k, true)?;
        let c = QtScalar::t_pow(k as i64).div_ref(&QtScalar::one().sub_ref(&QtScalar::t()))?;
        return Ok(star_commutator::<R>(&g)?.scale_v(&c));
    }
    let j = i - 1;
    let g = R::act(Loop::T(j), f)?;
    let g = z_word::<R>(j, &g)?;
    Ok(R::act(Loop::T(j), &g)?.scale_v(&QtScalar::t_pow(-1)))
}
