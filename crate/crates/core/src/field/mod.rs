//! The coefficient field `Q(q, t)`.

mod gcd;
mod int;
mod qtpoly;
mod scalar;

pub use gcd::gcd;
pub use int::Int;
pub use qtpoly::{Exp2, QtPoly};
pub use scalar::QtScalar;

use num_rational::BigRational;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic with a checked division.
pub fn qt_arith(a: &QtScalar, b: &QtScalar, op: ArithOp) -> Result<QtScalar> {
    Ok(match op {
        ArithOp::Add => a.add_ref(b),
        ArithOp::Sub => a.sub_ref(b),
        ArithOp::Mul => a.mul_ref(b),
        ArithOp::Div => a.div_ref(b)?,
    })
}

pub fn t_order(a: &QtScalar) -> Result<i64> {
    a.t_order()
}

pub fn eval_at(a: &QtScalar, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
    a.eval_at(q0, t0)
}

/// Shorthand for a rational number `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;
    use proptest::prelude::*;

    pub fn poly_strategy(max_terms: usize, max_deg: u32) -> impl Strategy<Value = QtPoly> {
        prop::collection::vec((0..=max_deg, 0..=max_deg, -4i64..=4), 0..=max_terms)
            .prop_map(QtPoly::from_terms)
    }

    pub fn scalar_strategy() -> impl Strategy<Value = QtScalar> {
        (poly_strategy(3, 2), poly_strategy(3, 2)).prop_map(|(n, d)| {
            let d = if d.is_zero() { QtPoly::one() } else { d };
            QtScalar::ratio(n, d).unwrap()
        })
    }

    pub fn nonzero_scalar_strategy() -> impl Strategy<Value = QtScalar> {
        scalar_strategy().prop_filter("nonzero", |s| !s.is_zero())
    }
}
