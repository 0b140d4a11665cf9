//! Almost-symmetric polynomials: a polynomial in `x_1..x_k` times symmetric functions of the
//! tail `x_{k+1} + x_{k+2} + ...`, with the limit operators acting on them.

mod limit;
mod suites;

pub use limit::{default_slope, limit_verify, SequenceGen};
pub use suites::{spanning_set, stable_relations, suite_stable_relations};

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::QtScalar;
use crate::ops::Linear;
use crate::polyring::{Monomial, Poly};
use crate::symfunc::{fmt_mixed, h_of_expr, plethysm_mixed, AlphabetExpr, Basis, Mixed, Partition, SymFunc};

/// An element of the rank-`k` almost-symmetric module. Tails are stored in power sums of
/// `x_{k+1} + x_{k+2} + ...`, where `k` is the rank of the underlying mixed polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct AlmostSym {
    body: Mixed,
}

impl AlmostSym {
    pub fn new(body: Mixed) -> AlmostSym {
        AlmostSym { body }
    }

    pub fn zero(rank: usize) -> AlmostSym {
        AlmostSym::new(Mixed::zero(rank))
    }

    pub fn one(rank: usize) -> AlmostSym {
        AlmostSym::new(Mixed::one(rank))
    }

    pub fn from_poly(f: &Poly) -> AlmostSym {
        AlmostSym::new(Mixed::from_terms(
            f.rank(),
            f.terms().map(|(m, _, c)| (m.clone(), Partition::empty(), c.clone())),
        ))
    }

    /// `x^m · G[tail_rank]`.
    pub fn product(rank: usize, m: &Monomial, g: &SymFunc) -> AlmostSym {
        AlmostSym::new(Mixed::from_terms(
            rank,
            g.p_coeffs().iter().map(|(p, c)| (m.clone(), p.clone(), c.clone())),
        ))
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

    /// The same element presented at rank `k2`.
    pub fn embed_rank(&self, k2: usize) -> Result<AlmostSym> {
        let k = self.rank();
        if k2 < k {
            return Err(Error::RankDecrease { from: k, to: k2 });
        }
        let mut body = self.body.clone();
        for j in k + 1..=k2 {
            let split = AlphabetExpr::x().plus(QtScalar::one(), Monomial::var(j));
            body = plethysm_mixed(&body, &split, j);
        }
        Ok(AlmostSym::new(body))
    }

    /// `Π_m F`: every tail expanded into `x_{k+1}, ..., x_m`.
    pub fn truncate_rank(&self, m: usize) -> Result<Poly> {
        let k = self.rank();
        if m < k {
            return Err(Error::RankTooSmall { rank: k, to: m });
        }
        let expanded = plethysm_mixed(&self.body, &AlphabetExpr::vars(k + 1..=m), m);
        Ok(Poly::from_terms(
            m,
            expanded.terms().map(|(mono, p, c)| {
                debug_assert!(p.is_empty());
                (mono.clone(), (), c.clone())
            }),
        ))
    }

    /// Both elements at the larger of the two ranks.
    pub fn aligned(&self, o: &AlmostSym) -> (AlmostSym, AlmostSym) {
        let r = self.rank().max(o.rank());
        (self.embed_rank(r).unwrap(), o.embed_rank(r).unwrap())
    }

    pub fn add(&self, o: &AlmostSym) -> AlmostSym {
        let (a, b) = self.aligned(o);
        AlmostSym::new(a.body.add(&b.body))
    }

    pub fn sub(&self, o: &AlmostSym) -> AlmostSym {
        let (a, b) = self.aligned(o);
        AlmostSym::new(a.body.sub(&b.body))
    }

    pub fn mul(&self, o: &AlmostSym) -> AlmostSym {
        let (a, b) = self.aligned(o);
        AlmostSym::new(a.body.mul(&b.body))
    }

    pub fn scale(&self, c: &QtScalar) -> AlmostSym {
        AlmostSym::new(self.body.scale(c))
    }

    fn at_least(&self, r: usize) -> AlmostSym {
        self.embed_rank(r.max(self.rank())).unwrap()
    }
}

impl fmt::Display for AlmostSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_mixed(&self.body, 'x', Basis::Monomial))
    }
}

impl fmt::Debug for AlmostSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[rank {}] {self}", self.rank())
    }
}

impl Linear for AlmostSym {
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
    fn align(&self, o: &Self) -> (Self, Self) {
        self.aligned(o)
    }
}

/// `𝒯_i F`; the identity when both `x_i` and `x_{i+1}` lie in the tail.
pub fn apply_limit_t(i: usize, f: &AlmostSym) -> Result<AlmostSym> {
    if i == 0 {
        return Err(Error::IndexOutOfRank { index: 0, rank: f.rank() });
    }
    if i > f.rank() {
        return Ok(f.clone());
    }
    Ok(AlmostSym::new(f.at_least(i + 1).body.hecke_t(i)?))
}

/// `𝒯_i^{-1} F`.
pub fn apply_limit_t_inv(i: usize, f: &AlmostSym) -> Result<AlmostSym> {
    if i == 0 {
        return Err(Error::IndexOutOfRank { index: 0, rank: f.rank() });
    }
    if i > f.rank() {
        return Ok(f.clone());
    }
    Ok(AlmostSym::new(f.at_least(i + 1).body.hecke_t_inv(i)?))
}

/// `𝒳_i F = x_i F`.
pub fn apply_limit_x(i: usize, f: &AlmostSym) -> Result<AlmostSym> {
    if i == 0 {
        return Err(Error::IndexOutOfRank { index: 0, rank: f.rank() });
    }
    Ok(AlmostSym::new(f.at_least(i).body.mul_monomial(&Monomial::var(i))))
}

/// `𝒴_1 𝒯_1 ... 𝒯_{k-1} F` at the rank `k` of `F`, term by term from
/// `f x_k^n G[x_k + tail_k] ↦ t^k/(1-t) f(x_2..x_k) G[tail_k + q x_1] (h_n[(1-t)(tail_k + q x_1)] - h_n[(1-t) tail_k])`.
pub fn y1_closed_form(f: &AlmostSym) -> AlmostSym {
    let f = f.at_least(1);
    let k = f.rank();
    let one_minus_t = QtScalar::one().sub_ref(&QtScalar::t());
    let unsplit = AlphabetExpr::x().plus(QtScalar::int(-1), Monomial::var(k));
    let regrouped = plethysm_mixed(&f.body, &unsplit, k);
    let shifted_tail = AlphabetExpr::x().plus(QtScalar::q(), Monomial::var(1));
    let inner = AlphabetExpr::scaled_x(one_minus_t.clone());
    let outer = shifted_tail.times(&one_minus_t);
    let prefactor = QtScalar::t_pow(k as i64).div_ref(&one_minus_t).unwrap();

    let mut h_diff: HashMap<u32, Mixed> = HashMap::new();
    let mut g_image: HashMap<Partition, Mixed> = HashMap::new();
    let mut out = Mixed::zero(k);
    for (m, lambda, c) in regrouped.terms() {
        let n = m.exp(k) as u32;
        if n == 0 {
            continue;
        }
        let h = h_diff
            .entry(n)
            .or_insert_with(|| h_of_expr(n, &outer, k).sub(&h_of_expr(n, &inner, k)))
            .clone();
        let g = g_image
            .entry(lambda.clone())
            .or_insert_with(|| plethysm_mixed(&Mixed::term(k, Monomial::one(), lambda.clone(), QtScalar::one()), &shifted_tail, k))
            .clone();
        let moved = m.with(k, 0).rename(|i| i + 1);
        let term = g.mul(&h).mul_monomial(&moved).scale(&c.mul_ref(&prefactor));
        out = out.add(&term);
    }
    AlmostSym::new(out)
}

/// `𝒴_1 F = closed form of 𝒯_{k-1}^{-1} ... 𝒯_1^{-1} F`, and `𝒴_{i+1} = t^{-1} 𝒯_i 𝒴_i 𝒯_i`.
pub fn apply_limit_y(i: usize, f: &AlmostSym) -> Result<AlmostSym> {
    if i == 0 {
        return Err(Error::IndexOutOfRank { index: 0, rank: f.rank() });
    }
    if i == 1 {
        let mut g = f.at_least(1);
        for j in 1..g.rank() {
            g = apply_limit_t_inv(j, &g)?;
        }
        return Ok(y1_closed_form(&g));
    }
    let j = i - 1;
    let g = apply_limit_t(j, f)?;
    let g = apply_limit_y(j, &g)?;
    Ok(apply_limit_t(j, &g)?.scale(&QtScalar::t_pow(-1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha_deformed::ytilde;
    use crate::polyring::xmono;
    use proptest::prelude::*;

    fn qt(a: i64, b: i64) -> QtScalar {
        QtScalar::qt_monomial(a, b)
    }

    fn tail(rank: usize, parts: &[u32]) -> AlmostSym {
        AlmostSym::product(rank, &Monomial::one(), &SymFunc::m(parts))
    }

    fn x(exps: &[i32]) -> AlmostSym {
        AlmostSym::from_poly(&xmono(exps))
    }

    fn omt() -> QtScalar {
        QtScalar::one().sub_ref(&QtScalar::t())
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(tail(0, &[1]).embed_rank(1).unwrap(), x(&[1]).add(&tail(1, &[1])));
        assert_eq!(x(&[1]).embed_rank(3).unwrap(), AlmostSym::from_poly(&xmono(&[1]).with_rank(3)));
        let expect = x(&[2])
            .mul(&tail(1, &[1]))
            .add(&x(&[1]).mul(&tail(1, &[2])))
            .add(&tail(1, &[2, 1]));
        assert_eq!(tail(0, &[2, 1]).embed_rank(1).unwrap(), expect);
        assert_eq!(
            x(&[1, 0]).embed_rank(1).unwrap_err(),
            Error::RankDecrease { from: 2, to: 1 }
        );
    }

    #[test]
    fn truncation_examples() {
        let f = x(&[1]).mul(&tail(1, &[1]));
        assert_eq!(f.truncate_rank(3).unwrap(), xmono(&[1, 1, 0]).add(&xmono(&[1, 0, 1])));
        assert_eq!(tail(0, &[1, 1]).truncate_rank(2).unwrap(), xmono(&[1, 1]));
        let g = x(&[2, 0]).add(&x(&[0, 1]).mul(&tail(2, &[1])));
        assert_eq!(g.truncate_rank(2).unwrap(), xmono(&[2, 0]));
        assert_eq!(g.truncate_rank(1).unwrap_err(), Error::RankTooSmall { rank: 2, to: 1 });
    }

    #[test]
    fn limit_t_and_x_examples() {
        let f = x(&[1]).mul(&tail(1, &[2]));
        assert_eq!(apply_limit_t(5, &f).unwrap(), f);
        assert_eq!(apply_limit_t(1, &x(&[1])).unwrap(), x(&[0, 1]).add(&x(&[1, 0]).scale(&omt())));
        let p = tail(0, &[1]);
        assert!(apply_limit_t(1, &p).unwrap().sub(&p).is_zero());
        assert_eq!(apply_limit_x(1, &AlmostSym::one(0)).unwrap(), x(&[1]));
        assert_eq!(apply_limit_x(2, &x(&[1])).unwrap(), x(&[1, 1]));
        let expect = x(&[2]).add(&x(&[1]).mul(&tail(1, &[1])));
        assert_eq!(apply_limit_x(1, &p).unwrap(), expect);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(y1_closed_form(&x(&[1])), x(&[1]).scale(&qt(1, 1)));
        assert!(y1_closed_form(&AlmostSym::one(1)).is_zero());
        assert!(y1_closed_form(&AlmostSym::one(3)).is_zero());
        let expect = x(&[2])
            .scale(&qt(2, 1))
            .add(&x(&[1]).mul(&tail(1, &[1])).scale(&qt(1, 1).mul_ref(&omt())));
        assert!(y1_closed_form(&x(&[2])).sub(&expect).is_zero());
    }

    #[test]
    fn limit_y_examples() {
        assert!(apply_limit_y(1, &x(&[1])).unwrap().sub(&x(&[1]).scale(&qt(1, 1))).is_zero());
        assert!(apply_limit_y(1, &AlmostSym::one(0)).unwrap().is_zero());
        let expect = x(&[0, 1]).scale(&qt(1, 1)).add(&x(&[1, 0]).scale(&qt(1, 1).mul_ref(&omt())));
        let got = apply_limit_y(2, &x(&[0, 1])).unwrap();
        assert!(got.sub(&expect).is_zero(), "{got}");
    }

    #[test]
    fn limit_y_is_a_finite_rank_limit_on_x_multiples() {
        let samples = [
            x(&[0, 1]),
            tail(2, &[1]),
            x(&[1, 0]).mul(&tail(2, &[2])),
            x(&[0, 2]).add(&tail(2, &[1, 1])),
        ];
        for f in &samples {
            for i in 1..=3 {
                let xf = apply_limit_x(i, f).unwrap();
                let lhs = apply_limit_y(i, &xf).unwrap();
                for m in 5..=6 {
                    let pf = xf.truncate_rank(m).unwrap();
                    assert_eq!(lhs.truncate_rank(m).unwrap(), ytilde(&pf, i).unwrap(), "i={i} m={m} f={f}");
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn truncation_ignores_embedding(
            f in crate::polyring::testing::poly_strategy(2, 0, 2, 3),
            lambda in prop::sample::select(vec![vec![], vec![1], vec![2], vec![1, 1]]),
            extra in 0usize..=2,
        ) {
            let g = AlmostSym::from_poly(&f).mul(&tail(2, &lambda));
            let e = g.embed_rank(2 + extra).unwrap();
            prop_assert_eq!(e.truncate_rank(5).unwrap(), g.truncate_rank(5).unwrap());
        }
    }
}
