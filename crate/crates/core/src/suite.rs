//! Identity checks over finite spanning sets, run in parallel, reported as JSON.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::field::QtScalar;
use crate::ops::{Linear, Op};

/// Failure witnesses kept per identity.
pub const MAX_FAILURES: usize = 20;

const MAX_WITNESS_CHARS: usize = 400;

pub type Listing = Vec<(String, QtScalar)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub anchor: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub rank: usize,
    pub degree: usize,
    pub identities: Vec<IdentityReport>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON form without the timing field, for reproducibility comparisons.
    pub fn stable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("elapsed_ms");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn failed(&self) -> impl Iterator<Item = &IdentityReport> {
        self.identities.iter().filter(|i| !i.failures.is_empty())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} (rank {}, degree {}): {} in {} ms",
            self.suite,
            self.rank,
            self.degree,
            if self.pass { "PASS" } else { "FAIL" },
            self.elapsed_ms
        )?;
        for id in &self.identities {
            let status = if id.failures.is_empty() { "ok" } else { "FAILED" };
            writeln!(f, "  [{status}] {} ({} cases) {}", id.name, id.cases, id.anchor)?;
            for w in &id.failures {
                writeln!(f, "      {w}")?;
            }
        }
        Ok(())
    }
}

/// One identity family, checked case by case.
pub trait Checkable: Send + Sync {
    fn name(&self) -> &str;
    fn anchor(&self) -> &str;
    fn cases(&self) -> usize;
    /// A failure witness for case `idx`, if any.
    fn check_case(&self, idx: usize) -> Option<String>;
    /// Both sides of case `idx` as coefficient listings, when the check is an equation.
    fn sides(&self, _idx: usize) -> Option<Result<(Listing, Listing)>> {
        None
    }
    fn is_equation(&self) -> bool {
        false
    }

    fn run(&self) -> IdentityReport {
        let mut failures: Vec<(usize, String)> = (0..self.cases())
            .into_par_iter()
            .filter_map(|i| self.check_case(i).map(|w| (i, w)))
            .collect();
        failures.sort_by_key(|(i, _)| *i);
        let total = failures.len();
        let mut failures: Vec<String> = failures.into_iter().take(MAX_FAILURES).map(|(_, w)| w).collect();
        if total > MAX_FAILURES {
            failures.push(format!("... {} more", total - MAX_FAILURES));
        }
        IdentityReport {
            name: self.name().to_string(),
            anchor: self.anchor().to_string(),
            cases: self.cases(),
            failures,
        }
    }
}

fn clip(s: String) -> String {
    if s.chars().count() <= MAX_WITNESS_CHARS {
        s
    } else {
        let mut out: String = s.chars().take(MAX_WITNESS_CHARS).collect();
        out.push_str("...");
        out
    }
}

type SideFn<I, O> = Arc<dyn Fn(&I) -> Result<O> + Send + Sync>;

/// `lhs(f) = rhs(f)` for every input `f`.
pub struct Equation<I, O> {
    name: String,
    anchor: String,
    inputs: Arc<Vec<I>>,
    lhs: SideFn<I, O>,
    rhs: SideFn<I, O>,
}

impl<I: Linear, O: Linear> Equation<I, O> {
    fn eval(&self, idx: usize) -> Result<(O, O)> {
        let f = &self.inputs[idx];
        Ok(((self.lhs)(f)?, (self.rhs)(f)?))
    }
}

impl<I: Linear, O: Linear> Checkable for Equation<I, O> {
    fn name(&self) -> &str {
        &self.name
    }
    fn anchor(&self) -> &str {
        &self.anchor
    }
    fn cases(&self) -> usize {
        self.inputs.len()
    }
    fn check_case(&self, idx: usize) -> Option<String> {
        let input = || self.inputs[idx].describe();
        match self.eval(idx) {
            Ok((l, r)) if l.same_value(&r) => None,
            Ok((l, r)) => Some(clip(format!("at {}: lhs - rhs = {}", input(), l.sub_v(&r).describe()))),
            Err(e) => Some(clip(format!("at {}: {e}", input()))),
        }
    }
    fn is_equation(&self) -> bool {
        true
    }
    fn sides(&self, idx: usize) -> Option<Result<(Listing, Listing)>> {
        Some(self.eval(idx).map(|(l, r)| {
            let (l, r) = l.align(&r);
            (l.coefficients(), r.coefficients())
        }))
    }
}

/// Passes when at least one input separates `lhs` from `rhs`.
pub struct Witness<I, O> {
    inner: Equation<I, O>,
}

impl<I: Linear, O: Linear> Checkable for Witness<I, O> {
    fn name(&self) -> &str {
        &self.inner.name
    }
    fn anchor(&self) -> &str {
        &self.inner.anchor
    }
    fn cases(&self) -> usize {
        self.inner.cases()
    }
    fn check_case(&self, idx: usize) -> Option<String> {
        self.inner.check_case(idx)
    }
    fn run(&self) -> IdentityReport {
        let found = (0..self.cases()).into_par_iter().any(|i| matches!(self.inner.eval(i), Ok((l, r)) if !l.same_value(&r)));
        IdentityReport {
            name: self.name().to_string(),
            anchor: self.anchor().to_string(),
            cases: self.cases(),
            failures: if found {
                vec![]
            } else {
                vec![format!("no separating input among {} cases", self.cases())]
            },
        }
    }
}

/// A check computed as a whole, returning its failure list.
pub struct Custom {
    name: String,
    anchor: String,
    cases: usize,
    run: Arc<dyn Fn() -> Vec<String> + Send + Sync>,
}

impl Checkable for Custom {
    fn name(&self) -> &str {
        &self.name
    }
    fn anchor(&self) -> &str {
        &self.anchor
    }
    fn cases(&self) -> usize {
        self.cases
    }
    fn check_case(&self, _idx: usize) -> Option<String> {
        let f = (self.run)();
        (!f.is_empty()).then(|| f.join("; "))
    }
    fn run(&self) -> IdentityReport {
        IdentityReport {
            name: self.name.clone(),
            anchor: self.anchor.clone(),
            cases: self.cases,
            failures: (self.run)().into_iter().map(clip).collect(),
        }
    }
}

/// A named collection of checks at a given size.
pub struct Suite {
    pub name: String,
    pub rank: usize,
    pub degree: usize,
    pub checks: Vec<Box<dyn Checkable>>,
}

impl Suite {
    pub fn new(name: impl Into<String>, rank: usize, degree: usize) -> Suite {
        Suite {
            name: name.into(),
            rank,
            degree,
            checks: Vec::new(),
        }
    }

    /// `lhs = rhs` as operators on `inputs`.
    pub fn op_equation<A: Linear>(&mut self, name: impl Into<String>, anchor: &str, inputs: &Arc<Vec<A>>, lhs: Op<A>, rhs: Op<A>) {
        self.equation(name, anchor, inputs, move |f| lhs.apply(f), move |f| rhs.apply(f));
    }

    pub fn equation<I: Linear, O: Linear>(
        &mut self,
        name: impl Into<String>,
        anchor: &str,
        inputs: &Arc<Vec<I>>,
        lhs: impl Fn(&I) -> Result<O> + Send + Sync + 'static,
        rhs: impl Fn(&I) -> Result<O> + Send + Sync + 'static,
    ) {
        self.checks.push(Box::new(Equation {
            name: name.into(),
            anchor: anchor.to_string(),
            inputs: inputs.clone(),
            lhs: Arc::new(lhs),
            rhs: Arc::new(rhs),
        }));
    }

    /// `op = 0` on `inputs`.
    pub fn vanishes<A: Linear>(&mut self, name: impl Into<String>, anchor: &str, inputs: &Arc<Vec<A>>, op: Op<A>) {
        self.op_equation(name, anchor, inputs, op, Op::zero());
    }

    pub fn witness<I: Linear, O: Linear>(
        &mut self,
        name: impl Into<String>,
        anchor: &str,
        inputs: &Arc<Vec<I>>,
        lhs: impl Fn(&I) -> Result<O> + Send + Sync + 'static,
        rhs: impl Fn(&I) -> Result<O> + Send + Sync + 'static,
    ) {
        self.checks.push(Box::new(Witness {
            inner: Equation {
                name: name.into(),
                anchor: anchor.to_string(),
                inputs: inputs.clone(),
                lhs: Arc::new(lhs),
                rhs: Arc::new(rhs),
            },
        }));
    }

    pub fn custom(&mut self, name: impl Into<String>, anchor: &str, cases: usize, run: impl Fn() -> Vec<String> + Send + Sync + 'static) {
        self.checks.push(Box::new(Custom {
            name: name.into(),
            anchor: anchor.to_string(),
            cases,
            run: Arc::new(run),
        }));
    }

    /// `(check, case)` for every case that compares two computed sides.
    pub fn equation_cases(&self) -> Vec<(usize, usize)> {
        self.checks
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_equation())
            .flat_map(|(i, c)| (0..c.cases()).map(move |j| (i, j)))
            .collect()
    }

    /// Whether both sides of a case agree coefficient by coefficient after evaluating at
    /// `q = q0`, `t = t0`. `None` for checks without two sides.
    pub fn agrees_at(&self, check: usize, case: usize, q0: &BigRational, t0: &BigRational) -> Option<Result<bool>> {
        let sides = self.checks[check].sides(case)?;
        Some(sides.and_then(|(lhs, rhs)| {
            let mut diff: BTreeMap<String, BigRational> = BTreeMap::new();
            for (key, c) in lhs {
                *diff.entry(key).or_insert_with(BigRational::zero) += c.eval_at(q0, t0)?;
            }
            for (key, c) in rhs {
                *diff.entry(key).or_insert_with(BigRational::zero) -= c.eval_at(q0, t0)?;
            }
            Ok(diff.values().all(Zero::is_zero))
        }))
    }

    pub fn extend(&mut self, other: Suite) {
        self.checks.extend(other.checks);
    }

    pub fn run(&self) -> Report {
        let start = Instant::now();
        let identities: Vec<IdentityReport> = self.checks.par_iter().map(|c| c.run()).collect();
        let pass = identities.iter().all(|i| i.failures.is_empty());
        Report {
            suite: self.name.clone(),
            rank: self.rank,
            degree: self.degree,
            identities,
            pass,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// Runs on a dedicated pool of `jobs` threads; `None` uses the global pool.
    pub fn run_with_jobs(&self, jobs: Option<usize>) -> Report {
        match jobs {
            None => self.run(),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("thread pool")
                .install(|| self.run()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{xmono, Poly};

    fn inputs() -> Arc<Vec<Poly>> {
        Arc::new(vec![xmono(&[1, 0]), xmono(&[0, 1]), xmono(&[1, 1])])
    }

    #[test]
    fn report_records_failures_and_witnesses() {
        let mut s = Suite::new("demo", 2, 1);
        let t1: Op<Poly> = Op::new("T1", |f: &Poly| f.hecke_t(1));
        let t1inv: Op<Poly> = Op::new("T1^-1", |f: &Poly| f.hecke_t_inv(1));
        s.op_equation("inverse", "inverse pair", &inputs(), t1.after(&t1inv), Op::identity());
        s.op_equation("not identity", "deliberately false", &inputs(), t1.clone(), Op::identity());
        s.witness("T1 moves something", "witness", &inputs(), move |f| t1.apply(f), |f: &Poly| Ok(f.clone()));
        let r = s.run();
        assert!(!r.pass);
        assert!(r.identities[0].failures.is_empty());
        assert_eq!(r.identities[1].failures.len(), 2);
        assert!(r.identities[2].failures.is_empty());
        assert_eq!(r.identities[1].cases, 3);
        let json = r.stable_json();
        assert!(json.contains("\"suite\": \"demo\""));
        assert!(!json.contains("elapsed_ms"));
        assert_eq!(s.run_with_jobs(Some(1)).stable_json(), json);
    }

    #[test]
    fn evaluated_sides_follow_the_exact_verdict() {
        let mut s = Suite::new("demo", 2, 1);
        let t1: Op<Poly> = Op::new("T1", |f: &Poly| f.hecke_t(1));
        let t1inv: Op<Poly> = Op::new("T1^-1", |f: &Poly| f.hecke_t_inv(1));
        s.op_equation("inverse", "inverse pair", &inputs(), t1.after(&t1inv), Op::identity());
        s.op_equation("not identity", "deliberately false", &inputs(), t1, Op::identity());
        s.custom("opaque", "custom", 1, Vec::new);
        assert_eq!(s.equation_cases().len(), 6);
        let (q0, t0) = (crate::field::rat(2, 3), crate::field::rat(-5, 7));
        for (c, i) in s.equation_cases() {
            let agrees = s.agrees_at(c, i, &q0, &t0).unwrap().unwrap();
            assert_eq!(agrees, s.checks[c].check_case(i).is_none(), "check {c} case {i}");
        }
        assert!(!s.agrees_at(1, 0, &q0, &t0).unwrap().unwrap());
        assert!(s.agrees_at(2, 0, &q0, &t0).is_none());
    }
}
