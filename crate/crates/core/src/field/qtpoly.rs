//! Sparse polynomials in `q` and `t` with integer coefficients.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::int::Int;

/// Packed exponent pair: the `t` exponent in the high half, the `q` exponent in the low half.
///
/// Sorting keys ascending therefore sorts terms lexicographically with `t > q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Exp2(u32);

impl Exp2 {
    pub const ONE: Exp2 = Exp2(0);

    pub fn new(q: u32, t: u32) -> Exp2 {
        assert!(q < 1 << 16 && t < 1 << 16, "exponent overflow in Q(q,t)");
        Exp2((t << 16) | q)
    }
    pub fn q(self) -> u32 {
        self.0 & 0xffff
    }
    pub fn t(self) -> u32 {
        self.0 >> 16
    }
    fn add(self, o: Exp2) -> Exp2 {
        Exp2::new(self.q() + o.q(), self.t() + o.t())
    }
    fn divides(self, o: Exp2) -> bool {
        self.q() <= o.q() && self.t() <= o.t()
    }
    fn sub(self, o: Exp2) -> Exp2 {
        Exp2::new(self.q() - o.q(), self.t() - o.t())
    }
    fn min(self, o: Exp2) -> Exp2 {
        Exp2::new(self.q().min(o.q()), self.t().min(o.t()))
    }
}

/// A polynomial in `Z[q, t]`, terms sorted ascending by exponent, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QtPoly {
    terms: Vec<(Exp2, Int)>,
}

impl QtPoly {
    pub fn zero() -> QtPoly {
        QtPoly { terms: Vec::new() }
    }

    pub fn one() -> QtPoly {
        QtPoly::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> QtPoly {
        QtPoly::monomial(c, Exp2::ONE)
    }

    pub fn monomial(c: Int, e: Exp2) -> QtPoly {
        if c.is_zero() {
            QtPoly::zero()
        } else {
            QtPoly { terms: vec![(e, c)] }
        }
    }

    pub fn q() -> QtPoly {
        QtPoly::monomial(Int::ONE, Exp2::new(1, 0))
    }

    pub fn t() -> QtPoly {
        QtPoly::monomial(Int::ONE, Exp2::new(0, 1))
    }

    /// Builds from arbitrary `(q_exp, t_exp, coeff)` triples, merging duplicates.
    pub fn from_terms(raw: impl IntoIterator<Item = (u32, u32, i64)>) -> QtPoly {
        QtPoly::from_unsorted(
            raw.into_iter()
                .map(|(a, b, c)| (Exp2::new(a, b), Int::from(c)))
                .collect(),
        )
    }

    fn from_unsorted(mut v: Vec<(Exp2, Int)>) -> QtPoly {
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Exp2, Int)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = lc.add(&c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        QtPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Exp2, Int)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Exp2::ONE && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Exp2::ONE)
    }

    /// Leading term in lex order with `t > q`.
    pub fn leading(&self) -> Option<&(Exp2, Int)> {
        self.terms.last()
    }

    pub fn neg(&self) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn add(&self, o: &QtPoly) -> QtPoly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &QtPoly) -> QtPoly {
        self.merge(o, true)
    }

    fn merge(&self, o: &QtPoly, negate: bool) -> QtPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate {
                    a[i].1.sub(&b[j].1)
                } else {
                    a[i].1.add(&b[j].1)
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        QtPoly { terms: out }
    }

    pub fn mul(&self, o: &QtPoly) -> QtPoly {
        if self.is_zero() || o.is_zero() {
            return QtPoly::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].1, o.terms[0].0);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].1, self.terms[0].0);
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                v.push((ea.add(*eb), ca.mul(cb)));
            }
        }
        QtPoly::from_unsorted(v)
    }

    pub fn mul_term(&self, c: &Int, e: Exp2) -> QtPoly {
        if c.is_zero() {
            return QtPoly::zero();
        }
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(ea, ca)| (ea.add(e), ca.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> QtPoly {
        self.mul_term(c, Exp2::ONE)
    }

    /// Gcd of the integer coefficients, always nonnegative.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exp2 {
        let mut it = self.terms.iter();
        let Some(first) = it.next() else {
            return Exp2::ONE;
        };
        it.fold(first.0, |acc, (e, _)| acc.min(*e))
    }

    /// Divides every coefficient by `c` exactly.
    pub fn div_int(&self, c: &Int) -> QtPoly {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (*e, a.div_exact(c).expect("inexact integer division")))
                .collect(),
        }
    }

    /// Divides by a monomial that is known to divide every term.
    pub fn div_monomial(&self, e: Exp2) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(a, c)| (a.sub(e), c.clone())).collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `Z[q,t]`.
    pub fn div_exact(&self, d: &QtPoly) -> Option<QtPoly> {
        if d.is_zero() {
            return None;
        }
        if d.terms.len() == 1 {
            let (de, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if !de.divides(*e) {
                    return None;
                }
                out.push((e.sub(*de), c.div_exact(dc)?));
            }
            return Some(QtPoly { terms: out });
        }
        let (le, lc) = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.leading().cloned() {
            if !le.divides(re) {
                return None;
            }
            let qc = rc.div_exact(&lc)?;
            let qe = re.sub(le);
            rem = rem.sub(&d.mul_term(&qc, qe));
            quot.push((qe, qc));
        }
        Some(QtPoly::from_unsorted(quot))
    }

    /// Lowest power of `t` appearing; `None` for the zero polynomial.
    pub fn t_order(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.t()).min()
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.t()).max().unwrap_or(0)
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.q()).max().unwrap_or(0)
    }

    /// Substitutes `q -> q^n`, `t -> t^n`.
    pub fn raise(&self, n: u32) -> QtPoly {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp2::new(e.q() * n, e.t() * n), c.clone()))
                .collect(),
        }
    }

    /// Exact value at a rational point.
    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let term = BigRational::from_integer(c.to_big()) * pow_rat(q0, e.q()) * pow_rat(t0, e.t());
            acc += term;
        }
        acc
    }

    /// Reassembles as dense rows indexed by `t`-degree, each a dense vector in `q`.
    pub(crate) fn to_dense(&self) -> Vec<Vec<Int>> {
        let dt = self.degree_t() as usize;
        let mut rows: Vec<Vec<Int>> = vec![Vec::new(); dt + 1];
        for (e, c) in &self.terms {
            let row = &mut rows[e.t() as usize];
            let qi = e.q() as usize;
            if row.len() <= qi {
                row.resize(qi + 1, Int::ZERO);
            }
            row[qi] = c.clone();
        }
        rows
    }

    pub(crate) fn from_dense(rows: &[Vec<Int>]) -> QtPoly {
        let mut v = Vec::new();
        for (ti, row) in rows.iter().enumerate() {
            for (qi, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    v.push((Exp2::new(qi as u32, ti as u32), c.clone()));
                }
            }
        }
        QtPoly::from_unsorted(v)
    }

    /// Whether `q` does not occur.
    pub fn is_free_of_q(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.q() == 0)
    }

    /// Whether `t` does not occur.
    pub fn is_free_of_t(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.t() == 0)
    }

    /// Writes terms in ascending order, e.g. `1-t`, `q-t`, `2*q^2*t+3`.
    pub fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            let mono = fmt_qt_monomial(e.q() as i64, e.t() as i64);
            match (a.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{a}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// `q^a*t^b` with unit exponents elided; empty for `a = b = 0`.
pub fn fmt_qt_monomial(a: i64, b: i64) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("q", a), ("t", b)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

pub(crate) fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}
