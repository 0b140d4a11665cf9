use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::gcd::gcd;
use super::int::Int;
use super::qtpoly::{fmt_qt_monomial, Exp2, QtPoly};
use crate::error::{Error, Result};

/// An element of `Q(q, t)` kept as a reduced fraction of integer polynomials.
///
/// Canonical form: `gcd(num, den) = 1` in `Z[q,t]` (so integer contents are coprime too) and the
/// leading coefficient of `den` in lex order `t > q` is positive. Dividing both sides by that
/// coefficient gives the monic rational form, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QtScalar {
    num: QtPoly,
    den: QtPoly,
}

impl QtScalar {
    pub fn zero() -> QtScalar {
        QtScalar {
            num: QtPoly::zero(),
            den: QtPoly::one(),
        }
    }

    pub fn one() -> QtScalar {
        QtScalar::from_poly(QtPoly::one())
    }

    pub fn int(v: i64) -> QtScalar {
        QtScalar::from_poly(QtPoly::constant(Int::from(v)))
    }

    pub fn from_int(v: Int) -> QtScalar {
        QtScalar::from_poly(QtPoly::constant(v))
    }

    pub fn from_poly(p: QtPoly) -> QtScalar {
        QtScalar {
            num: p,
            den: QtPoly::one(),
        }
    }

    pub fn q() -> QtScalar {
        QtScalar::from_poly(QtPoly::q())
    }

    pub fn t() -> QtScalar {
        QtScalar::from_poly(QtPoly::t())
    }

    /// `q^a t^b` for any integers `a`, `b`.
    pub fn qt_monomial(a: i64, b: i64) -> QtScalar {
        let num = Exp2::new(a.max(0) as u32, b.max(0) as u32);
        let den = Exp2::new((-a).max(0) as u32, (-b).max(0) as u32);
        QtScalar {
            num: QtPoly::monomial(Int::ONE, num),
            den: QtPoly::monomial(Int::ONE, den),
        }
    }

    pub fn q_pow(a: i64) -> QtScalar {
        QtScalar::qt_monomial(a, 0)
    }

    pub fn t_pow(b: i64) -> QtScalar {
        QtScalar::qt_monomial(0, b)
    }

    /// Builds `num / den` and normalizes.
    pub fn ratio(num: QtPoly, den: QtPoly) -> Result<QtScalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QtScalar::normalized(num, den))
    }

    fn normalized(num: QtPoly, den: QtPoly) -> QtScalar {
        if num.is_zero() {
            return QtScalar::zero();
        }
        let g = gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if d.leading().is_some_and(|(_, c)| c.is_negative()) {
            n = n.neg();
            d = d.neg();
        }
        QtScalar { num: n, den: d }
    }

    pub fn numerator(&self) -> &QtPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add_ref(&self, o: &QtScalar) -> QtScalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return QtScalar::from_poly(self.num.add(&o.num));
            }
            return QtScalar::normalized(self.num.add(&o.num), self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&o.num.mul(&a));
        let den = self.den.mul(&b);
        QtScalar::normalized(num, den)
    }

    pub fn neg_ref(&self) -> QtScalar {
        QtScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub_ref(&self, o: &QtScalar) -> QtScalar {
        self.add_ref(&o.neg_ref())
    }

    pub fn mul_ref(&self, o: &QtScalar) -> QtScalar {
        if self.is_zero() || o.is_zero() {
            return QtScalar::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return QtScalar::from_poly(self.num.mul(&o.num));
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        QtScalar { num, den }
    }

    pub fn inv(&self) -> Result<QtScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(QtScalar { num, den })
    }

    pub fn div_ref(&self, o: &QtScalar) -> Result<QtScalar> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<QtScalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = QtScalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        Ok(acc)
    }

    /// The substitution `q -> q^n`, `t -> t^n` used by power-sum plethysm.
    pub fn raise(&self, n: u32) -> QtScalar {
        if n == 1 || self.is_zero() {
            return self.clone();
        }
        QtScalar::normalized(self.num.raise(n), self.den.raise(n))
    }

    /// Order of vanishing at `t = 0`.
    pub fn t_order(&self) -> Result<i64> {
        match (self.num.t_order(), self.den.t_order()) {
            (Some(a), Some(b)) => Ok(a as i64 - b as i64),
            _ => Err(Error::UndefinedOrder),
        }
    }

    /// Exact value at `(q0, t0)`.
    pub fn eval_at(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0, t0);
        if d.is_zero() {
            return Err(Error::PoleAtPoint {
                q: q0.to_string(),
                t: t0.to_string(),
            });
        }
        Ok(self.num.eval(q0, t0) / d)
    }

    /// Splits into the sign and a printable body for the absolute value; the body is `"1"` for `±1`.
    pub fn signed_body(&self) -> (bool, String) {
        if self.is_zero() {
            return (false, "0".into());
        }
        let (sn, cn, mn, pn) = split_for_display(&self.num);
        let (sd, cd, md, pd) = split_for_display(&self.den);
        let negative = sn != sd;
        let mut parts: Vec<String> = Vec::new();
        let cn = cn.abs();
        let cd = cd.abs();
        if !cd.is_one() {
            parts.push(format!("{cn}/{cd}"));
        } else if !cn.is_one() {
            parts.push(cn.to_string());
        }
        let mono = fmt_qt_monomial(
            mn.q() as i64 - md.q() as i64,
            mn.t() as i64 - md.t() as i64,
        );
        if !mono.is_empty() {
            parts.push(mono);
        }
        if !pn.is_one() {
            parts.push(format!("({pn})"));
        }
        let mut body = if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        };
        if !pd.is_one() {
            body.push_str(&format!("/({pd})"));
        }
        (negative, body)
    }
}

/// Factor `p = sign * c * m * P` with `c > 0`, `m` a monomial and `P` primitive whose
/// first printed (lowest) term is positive.
fn split_for_display(p: &QtPoly) -> (bool, Int, Exp2, QtPoly) {
    let c = p.content();
    let m = p.monomial_content();
    let rest = p.div_monomial(m).div_int(&c);
    let negative = rest.terms().first().is_some_and(|(_, a)| a.is_negative());
    let rest = if negative { rest.neg() } else { rest };
    (negative, c, m, rest)
}

impl fmt::Display for QtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, body) = self.signed_body();
        if neg {
            write!(f, "-")?;
        }
        write!(f, "{body}")
    }
}

impl fmt::Debug for QtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Default for QtScalar {
    fn default() -> Self {
        QtScalar::zero()
    }
}

impl From<i64> for QtScalar {
    fn from(v: i64) -> QtScalar {
        QtScalar::int(v)
    }
}

impl Add for &QtScalar {
    type Output = QtScalar;
    fn add(self, o: &QtScalar) -> QtScalar {
        self.add_ref(o)
    }
}

impl Sub for &QtScalar {
    type Output = QtScalar;
    fn sub(self, o: &QtScalar) -> QtScalar {
        self.sub_ref(o)
    }
}

impl Mul for &QtScalar {
    type Output = QtScalar;
    fn mul(self, o: &QtScalar) -> QtScalar {
        self.mul_ref(o)
    }
}

/// Panics on a zero divisor; use [`QtScalar::div_ref`] for a checked division.
impl Div for &QtScalar {
    type Output = QtScalar;
    fn div(self, o: &QtScalar) -> QtScalar {
        self.div_ref(o).expect("division by zero")
    }
}

impl Neg for &QtScalar {
    type Output = QtScalar;
    fn neg(self) -> QtScalar {
        self.neg_ref()
    }
}

impl Add for QtScalar {
    type Output = QtScalar;
    fn add(self, o: QtScalar) -> QtScalar {
        self.add_ref(&o)
    }
}

impl Sub for QtScalar {
    type Output = QtScalar;
    fn sub(self, o: QtScalar) -> QtScalar {
        self.sub_ref(&o)
    }
}

impl Mul for QtScalar {
    type Output = QtScalar;
    fn mul(self, o: QtScalar) -> QtScalar {
        self.mul_ref(&o)
    }
}

impl Neg for QtScalar {
    type Output = QtScalar;
    fn neg(self) -> QtScalar {
        self.neg_ref()
    }
}
