use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use super::AlmostSym;
use crate::error::{Error, Result};
use crate::field::QtScalar;
use crate::polyring::{Monomial, Poly};
use crate::suite::{IdentityReport, Report};
use crate::symfunc::{expand_to_vars, SymFunc};

type Rule = dyn Fn(usize) -> Result<Poly> + Send + Sync;

/// A family `m ↦ f_m ∈ 𝒫_m⁺`.
#[derive(Clone)]
pub struct SequenceGen {
    pub name: String,
    rule: Arc<Rule>,
}

impl SequenceGen {
    pub fn new(name: impl Into<String>, rule: impl Fn(usize) -> Result<Poly> + Send + Sync + 'static) -> SequenceGen {
        SequenceGen {
            name: name.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn at(&self, m: usize) -> Result<Poly> {
        (self.rule)(m)
    }

    /// `(1 + t + ... + t^m) e_i[x_1..x_m]`, converging to `e_i[X]/(1-t)`.
    pub fn geometric_e(i: u32) -> (SequenceGen, AlmostSym) {
        let gen = SequenceGen::new(format!("geometric e{i}"), move |m| {
            let s = (0..=m as i64).fold(QtScalar::zero(), |acc, j| acc.add_ref(&QtScalar::t_pow(j)));
            Ok(expand_to_vars(&SymFunc::e(&[i]), m).scale(&s))
        });
        let limit = QtScalar::one().div_ref(&QtScalar::one().sub_ref(&QtScalar::t())).unwrap();
        (gen, AlmostSym::product(0, &Monomial::one(), &SymFunc::e(&[i]).scale(&limit)))
    }

    /// `t^m e_i[x_1..x_m]`, converging to 0.
    pub fn decaying_e(i: u32) -> (SequenceGen, AlmostSym) {
        let gen = SequenceGen::new(format!("decaying e{i}"), move |m| {
            Ok(expand_to_vars(&SymFunc::e(&[i]), m).scale(&QtScalar::t_pow(m as i64)))
        });
        (gen, AlmostSym::zero(0))
    }

    /// `e_i[x_1..x_m]` paired with the wrong candidate 0.
    pub fn constant_e(i: u32) -> (SequenceGen, AlmostSym) {
        let gen = SequenceGen::new(format!("constant e{i}"), move |m| Ok(expand_to_vars(&SymFunc::e(&[i]), m)));
        (gen, AlmostSym::zero(0))
    }
}

impl fmt::Debug for SequenceGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SequenceGen({})", self.name)
    }
}

/// `m ↦ m - c` with `c = rank + d`.
pub fn default_slope(rank: usize, d: usize) -> impl Fn(usize) -> i64 {
    let c = (rank + d) as i64;
    move |m| m as i64 - c
}

/// Smallest `t`-adic order among the coefficients; `None` stands for the zero polynomial.
fn min_t_order(f: &Poly) -> Result<Option<i64>> {
    let mut best: Option<i64> = None;
    for (_, _, c) in f.terms() {
        let o = c.t_order()?;
        best = Some(best.map_or(o, |b| b.min(o)));
    }
    Ok(best)
}

fn show(o: Option<i64>) -> String {
    o.map_or_else(|| "inf".to_string(), |v| v.to_string())
}

/// Checks that `gen(m) - Π_m candidate` has every `t`-order at least `slope(m)` and that the
/// minimum order strictly increases over the window. A zero difference counts as order `+∞`.
pub fn limit_verify(gen: &SequenceGen, candidate: &AlmostSym, window: (usize, usize), slope: &dyn Fn(usize) -> i64) -> Result<Report> {
    let start = Instant::now();
    let (m0, m1) = window;
    let points = if m1 >= m0 { m1 - m0 + 1 } else { 0 };
    if points < 3 {
        return Err(Error::WindowTooSmall(points));
    }
    let mut identities = Vec::new();
    let mut orders = Vec::new();
    for m in m0..=m1 {
        let d = gen.at(m)?.sub(&candidate.truncate_rank(m)?);
        let o = min_t_order(&d)?;
        let bound = slope(m);
        let failures = match o {
            Some(v) if v < bound => vec![format!("order {v} below {bound} at m={m}")],
            _ => vec![],
        };
        identities.push(IdentityReport {
            name: format!("t-order at m={m} is at least {bound}"),
            anchor: "limit definition".to_string(),
            cases: 1,
            failures,
        });
        orders.push(o);
    }
    let key = |o: &Option<i64>| o.unwrap_or(i64::MAX);
    let increasing = orders
        .windows(2)
        .all(|p| key(&p[0]) < key(&p[1]) || (p[0].is_none() && p[1].is_none()));
    let listed: Vec<String> = orders.iter().map(|o| show(*o)).collect();
    identities.push(IdentityReport {
        name: "minimum t-order strictly increases".to_string(),
        anchor: "limit definition".to_string(),
        cases: points,
        failures: if increasing {
            vec![]
        } else {
            vec![format!("orders [{}] over m={m0}..{m1}", listed.join(", "))]
        },
    });
    let pass = identities.iter().all(|i| i.failures.is_empty());
    Ok(Report {
        suite: format!("limit {}", gen.name),
        rank: candidate.rank(),
        degree: 0,
        identities,
        pass,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn by_m(m: usize) -> i64 {
        m as i64
    }

    #[test]
    fn geometric_and_decaying_sequences_converge() {
        for i in 1..=2 {
            let (g, c) = SequenceGen::geometric_e(i);
            assert!(limit_verify(&g, &c, (3, 6), &by_m).unwrap().pass);
            let (g, c) = SequenceGen::decaying_e(i);
            assert!(limit_verify(&g, &c, (3, 6), &by_m).unwrap().pass);
        }
    }

    #[test]
    fn constant_sequence_does_not_tend_to_zero() {
        let (g, c) = SequenceGen::constant_e(1);
        let r = limit_verify(&g, &c, (3, 6), &by_m).unwrap();
        assert!(!r.pass);
        assert_eq!(r.failed().count(), 5);
    }

    #[test]
    fn small_window_is_rejected() {
        let (g, c) = SequenceGen::decaying_e(1);
        assert_eq!(limit_verify(&g, &c, (3, 4), &by_m).unwrap_err(), Error::WindowTooSmall(2));
    }

    #[test]
    fn exact_candidate_passes_with_default_slope() {
        let g = SequenceGen::new("e2", |m| Ok(expand_to_vars(&SymFunc::e(&[2]), m)));
        let c = AlmostSym::product(0, &Monomial::one(), &SymFunc::e(&[2]));
        assert!(limit_verify(&g, &c, (2, 5), &default_slope(0, 2)).unwrap().pass);
    }
}
