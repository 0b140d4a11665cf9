//! The deformed DAHA acting on polynomials: `ϖ`, `γ`, the deformed Cherednik operators `Ỹ_i`,
//! their correction terms `W_i` and the stable operators `Z̃_i = Ỹ_i - W_i`.

mod suites;

pub use suites::{commutator_t_order, deformed, finite_hecke_lemma, suite_deformed};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::QtScalar;
use crate::ops::Op;
use crate::polyring::{Monomial, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeformedKind {
    Varpi,
    Gamma,
    Ytilde(usize),
    W(usize),
    Ztilde(usize),
}

/// Which power of `t` multiplies `W_1` on a monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WExponent {
    /// `t^{j}` for the largest active variable `x_j`.
    #[default]
    LargestIndex,
    /// `t^{e}` for the exponent `e` of the largest active variable.
    Displayed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DeformedGenerator {
    pub kind: DeformedKind,
    pub rank: usize,
}

impl DeformedGenerator {
    pub fn new(kind: DeformedKind, rank: usize) -> Result<DeformedGenerator> {
        match kind {
            DeformedKind::Ytilde(i) | DeformedKind::W(i) | DeformedKind::Ztilde(i) if i == 0 || i > rank => {
                Err(Error::IndexOutOfRank { index: i, rank })
            }
            DeformedKind::Gamma if rank < 2 => Err(Error::IndexOutOfRank { index: 1, rank }),
            _ if rank == 0 => Err(Error::IndexOutOfRank { index: 0, rank }),
            _ => Ok(DeformedGenerator { kind, rank }),
        }
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        let k = self.rank;
        if f.max_var() > k {
            return Err(Error::RankViolation { index: f.max_var(), rank: k });
        }
        f.require_plus("the deformed DAHA module")?;
        let f = if f.rank() == k { f.clone() } else { f.clone().with_rank(k) };
        match self.kind {
            DeformedKind::Varpi => Ok(varpi(&f)),
            DeformedKind::Gamma => Ok(gamma(&f)),
            DeformedKind::Ytilde(i) => ytilde(&f, i),
            DeformedKind::W(i) => w_op(&f, i, WExponent::default()),
            DeformedKind::Ztilde(i) => ztilde(&f, i),
        }
    }

    pub fn op(self) -> Op<Poly> {
        Op::new(self.to_string(), move |f: &Poly| self.apply(f))
    }
}

impl fmt::Display for DeformedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DeformedKind::Varpi => write!(f, "varpi"),
            DeformedKind::Gamma => write!(f, "gamma"),
            DeformedKind::Ytilde(i) => write!(f, "Y~{i}"),
            DeformedKind::W(i) => write!(f, "W{i}"),
            DeformedKind::Ztilde(i) => write!(f, "Z~{i}"),
        }
    }
}

pub fn apply_deformed_generator(g: &DeformedGenerator, f: &Poly) -> Result<Poly> {
    g.apply(f)
}

/// `pr_1 f(x_2, ..., x_k, q x_1)`.
pub fn varpi(f: &Poly) -> Poly {
    let k = f.rank();
    let mut out = Poly::zero(k);
    for (m, _, c) in f.terms() {
        let ek = m.exp(k);
        if ek == 0 {
            continue;
        }
        let moved = Monomial::from_pairs(m.pairs().map(|(i, e)| (if i == k { 1 } else { i + 1 }, e)));
        out.add_term(moved, (), c.mul_ref(&QtScalar::q_pow(ek as i64)));
    }
    out
}

/// `ϖ² T_{k-1} - T_1 ϖ²`, composed from its definition.
pub fn gamma_composed(f: &Poly) -> Result<Poly> {
    let k = f.rank();
    let a = varpi(&varpi(&f.hecke_t(k - 1)?));
    let b = varpi(&varpi(f)).hecke_t(1)?;
    Ok(a.sub(&b))
}

/// `γ_k` on a single monomial by its closed form.
pub fn gamma_closed(k: usize, m: &Monomial) -> Poly {
    let (a, b) = (m.exp(k - 1), m.exp(k));
    let (n, sign) = match (a, b) {
        (0, 0) => return Poly::zero(k),
        (_, 0) => (a, QtScalar::one().sub_ref(&QtScalar::t())),
        (0, _) => (b, QtScalar::t().sub_ref(&QtScalar::one())),
        _ => return Poly::zero(k),
    };
    let shifted = Monomial::from_pairs((1..k.saturating_sub(1)).map(|i| (i + 2, m.exp(i))));
    let c = sign.mul_ref(&QtScalar::q_pow(n as i64));
    Poly::from_terms(
        k,
        (1..n).map(|j| (Monomial::from_pairs([(1, n - j), (2, j)]).mul(&shifted), (), c.clone())),
    )
}

/// `γ_k f` by the closed form, term by term.
pub fn gamma(f: &Poly) -> Poly {
    let k = f.rank();
    let mut out = Poly::zero(k);
    for (m, _, c) in f.terms() {
        out = out.add(&gamma_closed(k, m).scale(c));
    }
    out
}

/// `Ỹ_i = t^{1-i+k} T_{i-1} ... T_1 ϖ T_{k-1}^{-1} ... T_i^{-1}`.
pub fn ytilde(f: &Poly, i: usize) -> Result<Poly> {
    let k = f.rank();
    let mut g = f.clone();
    for j in i..k {
        g = g.hecke_t_inv(j)?;
    }
    g = varpi(&g);
    for j in 1..i {
        g = g.hecke_t(j)?;
    }
    Ok(g.scale(&QtScalar::t_pow(1 - i as i64 + k as i64)))
}

/// `W_1` on a single monomial.
pub fn w_first_monomial(k: usize, m: &Monomial, exponent: WExponent) -> Poly {
    if m.is_one() || m.exp(1) != 0 {
        return Poly::zero(k);
    }
    let top = m.max_var();
    let e = m.exp(top);
    let tpow = match exponent {
        WExponent::LargestIndex => top as i64,
        WExponent::Displayed => e as i64,
    };
    let c = QtScalar::t_pow(tpow)
        .sub_ref(&QtScalar::t_pow(tpow - 1))
        .mul_ref(&QtScalar::q_pow(e as i64));
    Poly::term(k, m.with(top, 0).mul(&Monomial::power(1, e)), (), c)
}

/// `W_i = t^{1-i} T_{i-1} ... T_1 W_1 T_1 ... T_{i-1}`.
pub fn w_op(f: &Poly, i: usize, exponent: WExponent) -> Result<Poly> {
    let k = f.rank();
    let mut g = f.clone();
    for j in (1..i).rev() {
        g = g.hecke_t(j)?;
    }
    let mut h = Poly::zero(k);
    for (m, _, c) in g.terms() {
        h = h.add(&w_first_monomial(k, m, exponent).scale(c));
    }
    for j in 1..i {
        h = h.hecke_t(j)?;
    }
    Ok(h.scale(&QtScalar::t_pow(1 - i as i64)))
}

/// `Z̃_i = Ỹ_i - W_i`.
pub fn ztilde(f: &Poly, i: usize) -> Result<Poly> {
    Ok(ytilde(f, i)?.sub(&w_op(f, i, WExponent::default())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::xmono;
    use proptest::prelude::*;

    fn g(kind: DeformedKind, k: usize) -> DeformedGenerator {
        DeformedGenerator::new(kind, k).unwrap()
    }

    fn qt(a: i64, b: i64) -> QtScalar {
        QtScalar::qt_monomial(a, b)
    }

    #[test]
    fn generator_examples() {
        for k in 2..=5 {
            let mut e = vec![0; k];
            e[0] = 1;
            let x1 = xmono(&e);
            assert_eq!(g(DeformedKind::Ytilde(1), k).apply(&x1).unwrap(), x1.scale(&qt(1, 1)));
            assert!(g(DeformedKind::Ytilde(1), k).apply(&Poly::one(k)).unwrap().is_zero());
        }
        assert!(g(DeformedKind::W(1), 2).apply(&xmono(&[1, 2])).unwrap().is_zero());
        let tm1 = QtScalar::t().sub_ref(&QtScalar::one());
        let got = gamma_composed(&xmono(&[0, 0, 2])).unwrap();
        assert_eq!(got, xmono(&[1, 1, 0]).scale(&tm1.mul_ref(&qt(2, 0))));
    }

    #[test]
    fn gamma_closed_examples() {
        assert!(gamma_closed(3, &Monomial::from_exps(&[0, 1, 1])).is_zero());
        let omt = QtScalar::one().sub_ref(&QtScalar::t());
        assert_eq!(
            gamma_closed(3, &Monomial::from_exps(&[0, 2, 0])),
            xmono(&[1, 1, 0]).scale(&omt.mul_ref(&qt(2, 0)))
        );
        let expect = xmono(&[2, 1, 0, 0]).add(&xmono(&[1, 2, 0, 0])).scale(&omt.neg_ref().mul_ref(&qt(3, 0)));
        assert_eq!(gamma_closed(4, &Monomial::from_exps(&[0, 0, 0, 3])), expect);
        assert!(gamma_closed(3, &Monomial::one()).is_zero());
    }

    #[test]
    fn w_first_examples() {
        let k = 3;
        let got = w_op(&xmono(&[0, 2, 1]), 1, WExponent::LargestIndex).unwrap();
        let c = qt(0, 3).sub_ref(&qt(0, 2)).mul_ref(&qt(1, 0));
        assert_eq!(got, xmono(&[1, 2, 0]).scale(&c));
        let got = w_op(&xmono(&[0, 2, 1]), 1, WExponent::Displayed).unwrap();
        let c = qt(0, 1).sub_ref(&QtScalar::one()).mul_ref(&qt(1, 0));
        assert_eq!(got, xmono(&[1, 2, 0]).scale(&c));
        assert!(w_op(&Poly::one(k), 1, WExponent::LargestIndex).unwrap().is_zero());
    }

    #[test]
    fn projected_ytilde_needs_largest_index() {
        let f = xmono(&[0, 1]);
        let projected = ytilde(&f, 1).unwrap().set_var_zero(2).unwrap();
        let expect = xmono(&[1]).scale(&qt(0, 2).sub_ref(&qt(0, 1)).mul_ref(&qt(1, 0)));
        assert_eq!(projected, expect);
        assert_eq!(w_op(&f, 1, WExponent::LargestIndex).unwrap().set_var_zero(2).unwrap(), expect);
    }

    #[test]
    fn errors() {
        assert_eq!(
            DeformedGenerator::new(DeformedKind::Ytilde(4), 3),
            Err(Error::IndexOutOfRank { index: 4, rank: 3 })
        );
        let e = g(DeformedKind::Varpi, 2).apply(&xmono(&[-1, 0])).unwrap_err();
        assert_eq!(e.kind(), "SignatureViolation");
        let e = g(DeformedKind::Varpi, 2).apply(&xmono(&[0, 0, 1])).unwrap_err();
        assert_eq!(e.kind(), "RankViolation");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn w_first_kills_multiples_of_x1(f in crate::polyring::testing::poly_strategy(4, 0, 2, 4)) {
            let g = f.mul_monomial(&Monomial::var(1));
            prop_assert!(w_op(&g, 1, WExponent::LargestIndex).unwrap().is_zero());
        }

        #[test]
        fn gamma_forms_agree(f in crate::polyring::testing::poly_strategy(4, 0, 3, 4)) {
            prop_assert_eq!(gamma(&f), gamma_composed(&f).unwrap());
        }
    }
}
