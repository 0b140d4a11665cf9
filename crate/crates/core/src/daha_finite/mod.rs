//! The standard representation of the finite-rank DAHA on Laurent polynomials.

mod eigen;
mod macdonald;
mod suites;

pub use eigen::{eigenvalue, eigenvalue_e, EigenCounting};
pub use macdonald::{compositions, macdonald_ns};
pub use suites::{finite_relations, projection_compat, suite_finite_relations, suite_projection_compat};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::QtScalar;
use crate::ops::Op;
use crate::polyring::{LPoly, Monomial, Poly, Signature, Tail};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteKind {
    T(usize),
    Tinv(usize),
    X(usize),
    Xinv(usize),
    Omega,
    OmegaInv,
    OmegaTilde,
    OmegaTildeInv,
    Y(usize),
    Yinv(usize),
}

/// A generator of the rank-`k` DAHA together with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGenerator {
    pub kind: FiniteKind,
    pub rank: usize,
}

impl FiniteGenerator {
    pub fn new(kind: FiniteKind, rank: usize) -> Result<FiniteGenerator> {
        let bad = |index| Err(Error::IndexOutOfRank { index, rank });
        match kind {
            FiniteKind::T(i) | FiniteKind::Tinv(i) if i == 0 || i >= rank => bad(i),
            FiniteKind::X(i) | FiniteKind::Xinv(i) | FiniteKind::Y(i) | FiniteKind::Yinv(i)
                if i == 0 || i > rank =>
            {
                bad(i)
            }
            _ if rank == 0 => bad(0),
            _ => Ok(FiniteGenerator { kind, rank }),
        }
    }

    /// Whether the generator maps polynomials with nonnegative exponents to such polynomials.
    pub fn preserves_plus(&self) -> bool {
        !matches!(self.kind, FiniteKind::Xinv(_) | FiniteKind::OmegaTilde)
    }

    pub fn apply<T: Tail>(&self, f: &LPoly<T>) -> Result<LPoly<T>> {
        let k = self.rank;
        if f.max_var() > k {
            return Err(Error::RankViolation { index: f.max_var(), rank: k });
        }
        let f = if f.rank() == k { f.clone() } else { f.clone().with_rank(k) };
        match self.kind {
            FiniteKind::T(i) => f.hecke_t(i),
            FiniteKind::Tinv(i) => f.hecke_t_inv(i),
            FiniteKind::X(i) => Ok(f.mul_monomial(&Monomial::var(i))),
            FiniteKind::Xinv(i) => Ok(f.mul_monomial(&Monomial::power(i, -1))),
            FiniteKind::Omega => Ok(omega(&f)),
            FiniteKind::OmegaInv => Ok(omega_inv(&f)),
            FiniteKind::OmegaTilde => omega_tilde(&f),
            FiniteKind::OmegaTildeInv => omega_tilde_inv(&f),
            FiniteKind::Y(i) => cherednik_y(&f, i),
            FiniteKind::Yinv(i) => cherednik_y_inv(&f, i),
        }
    }

    pub fn op(self) -> Op<Poly> {
        Op::new(self.to_string(), move |f: &Poly| self.apply(f))
    }
}

impl fmt::Display for FiniteGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FiniteKind::T(i) => write!(f, "T{i}"),
            FiniteKind::Tinv(i) => write!(f, "T{i}^-1"),
            FiniteKind::X(i) => write!(f, "X{i}"),
            FiniteKind::Xinv(i) => write!(f, "X{i}^-1"),
            FiniteKind::Omega => write!(f, "w"),
            FiniteKind::OmegaInv => write!(f, "w^-1"),
            FiniteKind::OmegaTilde => write!(f, "w~"),
            FiniteKind::OmegaTildeInv => write!(f, "w~^-1"),
            FiniteKind::Y(i) => write!(f, "Y{i}"),
            FiniteKind::Yinv(i) => write!(f, "Y{i}^-1"),
        }
    }
}

/// Applies `g` to `f`, where `sig` is the module `f` is declared to live in.
pub fn apply_finite_generator(g: &FiniteGenerator, f: &Poly, sig: Signature) -> Result<Poly> {
    if sig == Signature::Plus {
        f.require_plus("the plus module")?;
        if !g.preserves_plus() {
            return Err(Error::SignatureViolation(format!("{g} does not preserve the plus module")));
        }
    }
    g.apply(f)
}

/// `f(q^{-1} x_k, x_1, ..., x_{k-1})`.
pub fn omega<T: Tail>(f: &LPoly<T>) -> LPoly<T> {
    let k = f.rank();
    f.map_monomials(k, |m| {
        let e1 = m.exp(1);
        let moved = Monomial::from_pairs(m.pairs().map(|(i, e)| (if i == 1 { k } else { i - 1 }, e)));
        (moved, QtScalar::q_pow(-(e1 as i64)))
    })
}

/// `f(x_2, ..., x_k, q x_1)`.
pub fn omega_inv<T: Tail>(f: &LPoly<T>) -> LPoly<T> {
    let k = f.rank();
    f.map_monomials(k, |m| {
        let ek = m.exp(k);
        let moved = Monomial::from_pairs(m.pairs().map(|(i, e)| (if i == k { 1 } else { i + 1 }, e)));
        (moved, QtScalar::q_pow(ek as i64))
    })
}

/// `T_{k-1} ... T_1 x_1^{-1} f`.
pub fn omega_tilde<T: Tail>(f: &LPoly<T>) -> Result<LPoly<T>> {
    let mut g = f.mul_monomial(&Monomial::power(1, -1));
    for i in 1..f.rank() {
        g = g.hecke_t(i)?;
    }
    Ok(g)
}

/// `x_1 T_1^{-1} ... T_{k-1}^{-1} f`, the inverse of [`omega_tilde`].
pub fn omega_tilde_inv<T: Tail>(f: &LPoly<T>) -> Result<LPoly<T>> {
    let mut g = f.clone();
    for i in (1..f.rank()).rev() {
        g = g.hecke_t_inv(i)?;
    }
    Ok(g.mul_monomial(&Monomial::var(1)))
}

/// `Y_i = t^{1-i} T_{i-1} ... T_1 ω^{-1} T_{k-1}^{-1} ... T_i^{-1}`.
pub fn cherednik_y<T: Tail>(f: &LPoly<T>, i: usize) -> Result<LPoly<T>> {
    let k = f.rank();
    let mut g = f.clone();
    for j in i..k {
        g = g.hecke_t_inv(j)?;
    }
    g = omega_inv(&g);
    for j in 1..i {
        g = g.hecke_t(j)?;
    }
    Ok(g.scale(&QtScalar::t_pow(1 - i as i64)))
}

/// `Y_i^{-1} = t^{i-1} T_i ... T_{k-1} ω T_1^{-1} ... T_{i-1}^{-1}`.
pub fn cherednik_y_inv<T: Tail>(f: &LPoly<T>, i: usize) -> Result<LPoly<T>> {
    let k = f.rank();
    let mut g = f.clone();
    for j in (1..i).rev() {
        g = g.hecke_t_inv(j)?;
    }
    g = omega(&g);
    for j in (i..k).rev() {
        g = g.hecke_t(j)?;
    }
    Ok(g.scale(&QtScalar::t_pow(i as i64 - 1)))
}
