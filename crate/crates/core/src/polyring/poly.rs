use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::QtScalar;

/// The extra key carried next to the finite monomial: nothing for plain polynomials,
/// a power-sum partition for elements with a symmetric tail.
pub trait Tail: Clone + Ord + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    fn unit() -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Tail for () {
    fn unit() -> Self {}
    fn mul(&self, _: &Self) -> Self {}
    fn is_unit(&self) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Signature {
    Plus,
    Laurent,
}

/// Sparse Laurent polynomial in `x_1..x_rank` whose coefficients are `QtScalar`s, optionally
/// tensored with a tail key.
#[derive(Clone, PartialEq, Eq)]
pub struct LPoly<T: Tail> {
    rank: usize,
    terms: BTreeMap<(Monomial, T), QtScalar>,
}

/// A plain polynomial.
pub type Poly = LPoly<()>;

impl<T: Tail> LPoly<T> {
    pub fn zero(rank: usize) -> Self {
        LPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, QtScalar::one())
    }

    pub fn constant(rank: usize, c: QtScalar) -> Self {
        Self::term(rank, Monomial::one(), T::unit(), c)
    }

    pub fn monomial(rank: usize, m: Monomial) -> Self {
        Self::term(rank, m, T::unit(), QtScalar::one())
    }

    pub fn var(rank: usize, i: usize) -> Self {
        Self::monomial(rank, Monomial::var(i))
    }

    pub fn term(rank: usize, m: Monomial, tail: T, c: QtScalar) -> Self {
        assert!(m.max_var() <= rank, "variable beyond rank");
        let mut p = Self::zero(rank);
        p.add_term(m, tail, c);
        p
    }

    pub fn from_terms(rank: usize, it: impl IntoIterator<Item = (Monomial, T, QtScalar)>) -> Self {
        let mut p = Self::zero(rank);
        for (m, t, c) in it {
            assert!(m.max_var() <= rank, "variable beyond rank");
            p.add_term(m, t, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T, &QtScalar)> {
        self.terms.iter().map(|((m, t), c)| (m, t, c))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, T, QtScalar)> {
        self.terms.into_iter().map(|((m, t), c)| (m, t, c))
    }

    pub fn coeff(&self, m: &Monomial, t: &T) -> QtScalar {
        self.terms
            .get(&(m.clone(), t.clone()))
            .cloned()
            .unwrap_or_else(QtScalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, t: T, c: QtScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((m, t)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Reinterprets the element in a larger variable block.
    pub fn with_rank(mut self, rank: usize) -> Self {
        assert!(
            self.terms.keys().all(|(m, _)| m.max_var() <= rank),
            "variable beyond rank"
        );
        self.rank = rank;
        self
    }

    pub fn max_var(&self) -> usize {
        self.terms.keys().map(|(m, _)| m.max_var()).max().unwrap_or(0)
    }

    pub fn signature(&self) -> Signature {
        if self.terms.keys().all(|(m, _)| m.pairs().all(|(_, e)| e > 0)) {
            Signature::Plus
        } else {
            Signature::Laurent
        }
    }

    pub fn require_plus(&self, what: &str) -> Result<()> {
        match self.signature() {
            Signature::Plus => Ok(()),
            Signature::Laurent => Err(Error::SignatureViolation(format!(
                "{what} needs nonnegative exponents"
            ))),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (mut big, small) = if self.len() >= o.len() {
            (self.clone(), o)
        } else {
            (o.clone(), self)
        };
        big.rank = self.rank.max(o.rank);
        for (m, t, c) in small.terms() {
            big.add_term(m.clone(), t.clone(), c.clone());
        }
        big
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        LPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &QtScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        if c.is_one() {
            return self.clone();
        }
        LPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.clone(), a.mul_ref(c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.rank.max(o.rank));
        for ((m1, t1), c1) in &self.terms {
            for ((m2, t2), c2) in &o.terms {
                out.add_term(m1.mul(m2), t1.mul(t2), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let rank = self.rank.max(m.max_var());
        LPoly {
            rank,
            terms: self
                .terms
                .iter()
                .map(|((a, t), c)| ((a.mul(m), t.clone()), c.clone()))
                .collect(),
        }
    }

    /// Applies a map sending each monomial to a scalar multiple of a monomial.
    pub fn map_monomials(&self, rank: usize, f: impl Fn(&Monomial) -> (Monomial, QtScalar)) -> Self {
        let mut out = Self::zero(rank);
        for ((m, t), c) in &self.terms {
            let (m2, s) = f(m);
            debug_assert!(m2.max_var() <= rank);
            out.add_term(m2, t.clone(), c.mul_ref(&s));
        }
        out
    }

    /// Linear extension of a map on `(monomial, tail)` pairs.
    pub fn flat_map_terms(&self, rank: usize, f: impl Fn(&Monomial, &T) -> Result<Self>) -> Result<Self> {
        let mut out = Self::zero(rank);
        for ((m, t), c) in &self.terms {
            let img = f(m, t)?;
            for (m2, t2, c2) in img.into_terms() {
                out.add_term(m2, t2, c2.mul_ref(c));
            }
        }
        out.rank = out.rank.max(out.max_var());
        Ok(out)
    }

    pub fn filter_terms(&self, rank: usize, keep: impl Fn(&Monomial, &T) -> bool) -> Self {
        LPoly {
            rank,
            terms: self
                .terms
                .iter()
                .filter(|((m, t), _)| keep(m, t))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QtScalar) -> QtScalar) -> Self {
        let mut out = Self::zero(self.rank);
        for ((m, t), c) in &self.terms {
            out.add_term(m.clone(), t.clone(), f(c));
        }
        out
    }

    fn check_index(&self, i: usize, need: usize) -> Result<()> {
        if i == 0 || need > self.rank {
            Err(Error::IndexOutOfRank {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// The transposition `x_i <-> x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.rank);
        for ((m, t), c) in &self.terms {
            out.terms.insert((m.swap(i, j), t.clone()), c.clone());
        }
        out
    }

    /// Exact quotient `f / (x_i - x_j)`; fails with a remainder.
    pub fn divided_difference(&self, i: usize, j: usize) -> Result<Self> {
        type Group = BTreeMap<i32, QtScalar>;
        let mut groups: BTreeMap<(Monomial, T, i32), Group> = BTreeMap::new();
        for ((m, t), c) in &self.terms {
            let (a, b) = (m.exp(i), m.exp(j));
            let rest = m.with(i, 0).with(j, 0);
            groups
                .entry((rest, t.clone(), a + b))
                .or_default()
                .insert(a, c.clone());
        }
        let mut out = Self::zero(self.rank);
        for ((rest, t, d), g) in groups {
            let (&lo, _) = g.first_key_value().unwrap();
            let (&hi, _) = g.last_key_value().unwrap();
            let mut s = QtScalar::zero();
            let mut e = hi;
            while e > lo {
                if let Some(c) = g.get(&e) {
                    s = s.add_ref(c);
                }
                if !s.is_zero() {
                    let m = rest.with(i, e - 1).with(j, d - e);
                    out.add_term(m, t.clone(), s.clone());
                }
                e -= 1;
            }
            s = s.add_ref(&g[&lo]);
            if !s.is_zero() {
                return Err(Error::InexactDivision { i, j });
            }
        }
        Ok(out)
    }

    /// `T_i f = s_i f + (1-t) x_i (f - s_i f)/(x_i - x_{i+1})`.
    pub fn hecke_t(&self, i: usize) -> Result<Self> {
        self.check_index(i, i + 1)?;
        let s = self.swap_vars(i, i + 1);
        let anti = self.sub(&s);
        if anti.is_zero() {
            return Ok(s);
        }
        let dd = anti.divided_difference(i, i + 1)?;
        let one_minus_t = &QtScalar::one() - &QtScalar::t();
        Ok(s.add(&dd.mul_monomial(&Monomial::var(i)).scale(&one_minus_t)))
    }

    /// `T_i^{-1} = t^{-1}(T_i + t - 1)`.
    pub fn hecke_t_inv(&self, i: usize) -> Result<Self> {
        let ti = self.hecke_t(i)?;
        let t_minus_1 = &QtScalar::t() - &QtScalar::one();
        Ok(ti
            .add(&self.scale(&t_minus_1))
            .scale(&QtScalar::t_pow(-1)))
    }

    /// `dir = +1` applies `T_i`, `dir = -1` applies `T_i^{-1}`.
    pub fn demazure_lusztig(&self, i: usize, dir: i32) -> Result<Self> {
        if dir >= 0 {
            self.hecke_t(i)
        } else {
            self.hecke_t_inv(i)
        }
    }

    /// Substitutes `x_k = 0`; the rank drops by one when `k` is the last variable.
    pub fn set_var_zero(&self, k: usize) -> Result<Self> {
        if self.terms.keys().any(|(m, _)| m.exp(k) < 0) {
            return Err(Error::NegativeExponentAtZero { var: k });
        }
        let rank = if k == self.rank { k - 1 } else { self.rank };
        Ok(self.filter_terms(rank, |m, _| m.exp(k) == 0))
    }

    /// Substitutes `x_k^{-1} = 0` on the minus side.
    pub fn set_inv_var_zero(&self, k: usize) -> Result<Self> {
        if self.terms.keys().any(|(m, _)| m.exp(k) > 0) {
            return Err(Error::SignatureViolation(format!(
                "positive exponent of x{k} on the minus side"
            )));
        }
        let rank = if k == self.rank { k - 1 } else { self.rank };
        Ok(self.filter_terms(rank, |m, _| m.exp(k) == 0))
    }

    /// Keeps the terms divisible by `x_i`.
    pub fn project_pr(&self, i: usize) -> Self {
        self.filter_terms(self.rank, |m, _| m.exp(i) >= 1)
    }

    /// The part of `x_i`-degree zero.
    pub fn constant_term(&self, i: usize) -> Self {
        self.filter_terms(self.rank, |m, _| m.exp(i) == 0)
    }

    /// Every coefficient, keyed by a printable label, for numerical re-checks.
    pub fn coefficient_list(&self) -> Vec<(String, QtScalar)> {
        self.terms
            .iter()
            .map(|((m, t), c)| (format!("{m:?}|{t:?}"), c.clone()))
            .collect()
    }
}

impl Poly {
    /// Polynomial with `x_i` in place of each variable, printed with the given letter.
    pub fn fmt_with(&self, letter: char) -> String {
        let mut items: Vec<(&Monomial, &QtScalar)> = self.terms.iter().map(|((m, _), c)| (m, c)).collect();
        items.sort_by(|a, b| a.0.print_cmp(b.0));
        join_terms(items.into_iter().map(|(m, c)| (c.clone(), m.fmt_with(letter))))
    }
}

/// Joins `(coefficient, body)` pairs into `a + b - c`; an empty body stands for `1`.
pub fn join_terms(items: impl IntoIterator<Item = (QtScalar, String)>) -> String {
    let mut out = String::new();
    for (c, body) in items {
        let (neg, cbody) = c.signed_body();
        let piece = if body.is_empty() {
            cbody
        } else if cbody == "1" {
            body
        } else {
            format!("{cbody}*{body}")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with('x'))
    }
}

impl<T: Tail> fmt::Debug for LPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[rank {}] ", self.rank)?;
        let mut first = true;
        for ((m, t), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if t.is_unit() {
                write!(f, "({c})*{m:?}")?;
            } else {
                write!(f, "({c})*{m:?}*{t:?}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
