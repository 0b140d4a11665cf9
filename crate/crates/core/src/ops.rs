//! Composable linear operators on module elements.

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::field::QtScalar;
use crate::polyring::{LPoly, Tail};
use crate::symfunc::SymFunc;

/// The vector-space structure the operator algebra needs.
pub trait Linear: Clone + Send + Sync + 'static {
    fn add_v(&self, o: &Self) -> Self;
    fn sub_v(&self, o: &Self) -> Self;
    fn scale_v(&self, c: &QtScalar) -> Self;
    fn is_zero_v(&self) -> bool;
    /// Value equality, ignoring bookkeeping such as the declared rank.
    fn same_value(&self, o: &Self) -> bool;
    fn coefficients(&self) -> Vec<(String, QtScalar)>;
    fn describe(&self) -> String;
    /// Both values rewritten in a common presentation, so their coefficient listings line up.
    fn align(&self, o: &Self) -> (Self, Self) {
        (self.clone(), o.clone())
    }
}

impl<T: Tail> Linear for LPoly<T> {
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
        self.coefficient_list()
    }
    fn describe(&self) -> String {
        format!("{self:?}")
    }
}

impl Linear for SymFunc {
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
        self == o
    }
    fn coefficients(&self) -> Vec<(String, QtScalar)> {
        self.coefficient_list()
    }
    fn describe(&self) -> String {
        format!("{self:?}")
    }
}

type OpFn<A> = dyn Fn(&A) -> Result<A> + Send + Sync;

/// A named operator `A -> A`. Words compose right to left, as written.
pub struct Op<A> {
    name: String,
    f: Arc<OpFn<A>>,
}

impl<A> Clone for Op<A> {
    fn clone(&self) -> Self {
        Op {
            name: self.name.clone(),
            f: self.f.clone(),
        }
    }
}

impl<A> fmt::Debug for Op<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl<A: Linear> Op<A> {
    pub fn new(name: impl Into<String>, f: impl Fn(&A) -> Result<A> + Send + Sync + 'static) -> Op<A> {
        Op {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn identity() -> Op<A> {
        Op::new("1", |a: &A| Ok(a.clone()))
    }

    pub fn zero() -> Op<A> {
        Op::new("0", |a: &A| Ok(a.sub_v(a)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, a: &A) -> Result<A> {
        (self.f)(a)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Op<A>) -> Op<A> {
        let (f, g) = (self.f.clone(), first.f.clone());
        Op {
            name: format!("{} {}", self.name, first.name),
            f: Arc::new(move |a| f(&g(a)?)),
        }
    }

    /// The product `ops[0] ∘ ops[1] ∘ ... ∘ ops[n-1]`.
    pub fn word(ops: &[Op<A>]) -> Op<A> {
        match ops.split_last() {
            None => Op::identity(),
            Some((last, rest)) => rest.iter().rev().fold(last.clone(), |acc, o| o.after(&acc)),
        }
    }

    pub fn plus(&self, o: &Op<A>) -> Op<A> {
        let (f, g) = (self.f.clone(), o.f.clone());
        Op {
            name: format!("({} + {})", self.name, o.name),
            f: Arc::new(move |a| Ok(f(a)?.add_v(&g(a)?))),
        }
    }

    pub fn minus(&self, o: &Op<A>) -> Op<A> {
        let (f, g) = (self.f.clone(), o.f.clone());
        Op {
            name: format!("({} - {})", self.name, o.name),
            f: Arc::new(move |a| Ok(f(a)?.sub_v(&g(a)?))),
        }
    }

    pub fn scaled(&self, c: QtScalar) -> Op<A> {
        let f = self.f.clone();
        Op {
            name: format!("({c})*{}", self.name),
            f: Arc::new(move |a| Ok(f(a)?.scale_v(&c))),
        }
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Op<A>, b: &Op<A>) -> Op<A> {
        a.after(b).minus(&b.after(a)).renamed(format!("[{}, {}]", a.name, b.name))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Op<A> {
        self.name = name.into();
        self
    }

    /// Applies `n` times.
    pub fn pow(&self, n: usize) -> Op<A> {
        Op::word(&vec![self.clone(); n]).renamed(format!("{}^{n}", self.name))
    }
}
