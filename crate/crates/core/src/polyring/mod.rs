//! Sparse Laurent polynomials, the symmetric group action and Demazure–Lusztig operators.

mod monomial;
mod poly;

pub use monomial::Monomial;
pub use poly::{join_terms, LPoly, Poly, Signature, Tail};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Ring arithmetic; the smaller rank is promoted.
pub fn poly_arith<T: Tail>(a: &LPoly<T>, b: &LPoly<T>, op: PolyOp) -> LPoly<T> {
    match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    }
}

pub fn demazure_lusztig<T: Tail>(i: usize, dir: i32, f: &LPoly<T>) -> Result<LPoly<T>> {
    f.demazure_lusztig(i, dir)
}

pub fn set_var_zero<T: Tail>(k: usize, f: &LPoly<T>) -> Result<LPoly<T>> {
    f.set_var_zero(k)
}

pub fn project_pr<T: Tail>(i: usize, f: &LPoly<T>) -> LPoly<T> {
    f.project_pr(i)
}

pub fn constant_term<T: Tail>(i: usize, f: &LPoly<T>) -> LPoly<T> {
    f.constant_term(i)
}

/// Shorthand `x^exps` as a rank-`exps.len()` polynomial.
pub fn xmono(exps: &[i32]) -> Poly {
    Poly::monomial(exps.len(), Monomial::from_exps(exps))
}

/// Exponent vectors of length `rank` with entries in `lo..=hi` and total in `min..=max`.
fn exponent_vectors(rank: usize, lo: i32, hi: i32, min: i64, max: i64) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rank);
    fn rec(rank: usize, lo: i32, hi: i32, min: i64, max: i64, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == rank {
            let s: i64 = cur.iter().map(|&e| e as i64).sum();
            if (min..=max).contains(&s) {
                out.push(cur.clone());
            }
            return;
        }
        for e in lo..=hi {
            cur.push(e);
            rec(rank, lo, hi, min, max, cur, out);
            cur.pop();
        }
    }
    rec(rank, lo, hi, min, max, &mut cur, &mut out);
    out
}

/// All monomials `x^a` with `0 ≤ a_i` and `|a| ≤ d`.
pub fn plus_monomials(rank: usize, d: usize) -> Vec<Monomial> {
    exponent_vectors(rank, 0, d as i32, 0, d as i64)
        .iter()
        .map(|e| Monomial::from_exps(e))
        .collect()
}

/// All monomials `x^a` with `a_i ≤ 0` and `|a| ≤ d`.
pub fn minus_monomials(rank: usize, d: usize) -> Vec<Monomial> {
    plus_monomials(rank, d).iter().map(Monomial::inv).collect()
}

/// All Laurent monomials with every exponent in `[-d, d]`.
pub fn laurent_box(rank: usize, d: usize) -> Vec<Monomial> {
    let d = d as i32;
    exponent_vectors(rank, -d, d, i64::MIN, i64::MAX)
        .iter()
        .map(|e| Monomial::from_exps(e))
        .collect()
}

/// The monomials as rank-`rank` polynomials.
pub fn as_polys(rank: usize, ms: &[Monomial]) -> Vec<Poly> {
    ms.iter().map(|m| Poly::monomial(rank, m.clone())).collect()
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;
    use proptest::prelude::*;

    use crate::field::QtScalar;

    pub fn small_scalar() -> impl Strategy<Value = QtScalar> {
        prop_oneof![
            (-3i64..=3).prop_map(QtScalar::int),
            (0i64..=2, -1i64..=2).prop_map(|(a, b)| QtScalar::qt_monomial(a, b)),
            Just(&QtScalar::one() - &QtScalar::t()),
        ]
    }

    /// Polynomials of the given rank with exponents in `lo..=hi`.
    pub fn poly_strategy(rank: usize, lo: i32, hi: i32, max_terms: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(
            (prop::collection::vec(lo..=hi, rank), small_scalar()),
            0..=max_terms,
        )
        .prop_map(move |ts| {
            Poly::from_terms(
                rank,
                ts.into_iter().map(|(e, c)| (Monomial::from_exps(&e), (), c)),
            )
        })
    }
}
