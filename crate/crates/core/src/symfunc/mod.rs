//! Symmetric functions stored in the power-sum basis, plethysm with affine alphabets,
//! and the Hall–Littlewood vertex operators.

mod basis;
mod partition;
mod suites;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

pub use basis::{transition, Basis};
pub use partition::Partition;
pub use suites::{suite_vertex, vertex_relations};

use crate::error::{Error, Result};
use crate::field::QtScalar;
use crate::polyring::{join_terms, LPoly, Monomial, Poly};

/// Polynomial in finitely many variables with symmetric-function coefficients, the tails
/// written in power sums.
pub type Mixed = LPoly<Partition>;

/// A symmetric function of finite support, stored in power sums.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymFunc {
    coeffs: BTreeMap<Partition, QtScalar>,
}

/// Coordinates of a symmetric function in a chosen basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub coeffs: BTreeMap<Partition, QtScalar>,
}

impl SymFunc {
    pub fn zero() -> SymFunc {
        SymFunc::default()
    }

    pub fn one() -> SymFunc {
        SymFunc::constant(QtScalar::one())
    }

    pub fn constant(c: QtScalar) -> SymFunc {
        SymFunc::from_p_coeffs([(Partition::empty(), c)])
    }

    pub fn from_p_coeffs(it: impl IntoIterator<Item = (Partition, QtScalar)>) -> SymFunc {
        let mut f = SymFunc::zero();
        for (p, c) in it {
            f.add_term(p, c);
        }
        f
    }

    fn add_term(&mut self, p: Partition, c: QtScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(p.clone()).or_insert_with(QtScalar::zero);
        *slot = slot.add_ref(&c);
        if slot.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    /// The basis element `B_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> SymFunc {
        if basis == Basis::PowerSum {
            return SymFunc::from_p_coeffs([(lambda.clone(), QtScalar::one())]);
        }
        let tr = transition(basis, lambda.weight());
        SymFunc::from_p_coeffs(tr.to_p[lambda].iter().cloned())
    }

    pub fn from_expansion(e: &BasisExpansion) -> SymFunc {
        let mut f = SymFunc::zero();
        for (lambda, c) in &e.coeffs {
            f = f.add(&SymFunc::basis_element(e.basis, lambda).scale(c));
        }
        f
    }

    pub fn p(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::PowerSum, &Partition::new(parts))
    }

    pub fn m(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::Monomial, &Partition::new(parts))
    }

    pub fn h(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::Homogeneous, &Partition::new(parts))
    }

    pub fn e(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::Elementary, &Partition::new(parts))
    }

    pub fn p_coeffs(&self) -> &BTreeMap<Partition, QtScalar> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(Partition::weight).max().unwrap_or(0)
    }

    pub fn add(&self, o: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in &o.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &SymFunc) -> SymFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&QtScalar::int(-1))
    }

    pub fn scale(&self, c: &QtScalar) -> SymFunc {
        SymFunc::from_p_coeffs(self.coeffs.iter().map(|(p, a)| (p.clone(), a.mul_ref(c))))
    }

    pub fn mul(&self, o: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (p1, c1) in &self.coeffs {
            for (p2, c2) in &o.coeffs {
                out.add_term(p1.union(p2), c1.mul_ref(c2));
            }
        }
        out
    }

    /// Coordinates in `basis`.
    pub fn expand_in(&self, basis: Basis) -> BTreeMap<Partition, QtScalar> {
        let mut out: BTreeMap<Partition, QtScalar> = BTreeMap::new();
        if basis == Basis::PowerSum {
            return self.coeffs.clone();
        }
        let mut by_weight: BTreeMap<u32, Vec<(&Partition, &QtScalar)>> = BTreeMap::new();
        for (p, c) in &self.coeffs {
            by_weight.entry(p.weight()).or_default().push((p, c));
        }
        for (n, items) in by_weight {
            let tr = transition(basis, n);
            for (mu, c) in items {
                for (lambda, a) in &tr.from_p[mu] {
                    let slot = out.entry(lambda.clone()).or_insert_with(QtScalar::zero);
                    *slot = slot.add_ref(&a.mul_ref(c));
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn to_mixed(&self, rank: usize) -> Mixed {
        Mixed::from_terms(
            rank,
            self.coeffs
                .iter()
                .map(|(p, c)| (Monomial::one(), p.clone(), c.clone())),
        )
    }

    /// The symmetric function of a mixed element with no finite variables.
    pub fn from_mixed(f: &Mixed) -> Option<SymFunc> {
        let mut out = SymFunc::zero();
        for (m, p, c) in f.terms() {
            if !m.is_one() {
                return None;
            }
            out.add_term(p.clone(), c.clone());
        }
        Some(out)
    }

    pub fn fmt_in(&self, basis: Basis) -> String {
        let coeffs = self.expand_in(basis);
        join_terms(
            sorted_partitions(coeffs.keys())
                .into_iter()
                .map(|p| (coeffs[p].clone(), fmt_partition(basis, p))),
        )
    }

    /// Every coefficient in power sums, for numerical re-checks.
    pub fn coefficient_list(&self) -> Vec<(String, QtScalar)> {
        self.coeffs
            .iter()
            .map(|(p, c)| (format!("{p:?}"), c.clone()))
            .collect()
    }
}

fn sorted_partitions<'a>(it: impl Iterator<Item = &'a Partition>) -> Vec<&'a Partition> {
    let mut v: Vec<&Partition> = it.collect();
    v.sort_by(|a, b| b.weight().cmp(&a.weight()).then_with(|| b.cmp(a)));
    v
}

/// `m[2,1]`; empty for the unit partition.
pub fn fmt_partition(basis: Basis, p: &Partition) -> String {
    if p.is_empty() {
        return String::new();
    }
    let parts: Vec<String> = p.parts().map(|x| x.to_string()).collect();
    format!("{}[{}]", basis.letter(), parts.join(","))
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_in(Basis::Monomial))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_in(Basis::PowerSum))
    }
}

/// Prints a mixed element term by term, each tail written in `basis`.
pub fn fmt_mixed(f: &Mixed, letter: char, basis: Basis) -> String {
    let mut groups: BTreeMap<Monomial, SymFunc> = BTreeMap::new();
    for (m, p, c) in f.terms() {
        groups
            .entry(m.clone())
            .or_default()
            .add_term(p.clone(), c.clone());
    }
    let mut monos: Vec<&Monomial> = groups.keys().collect();
    monos.sort_by(|a, b| a.print_cmp(b));
    let mut items = Vec::new();
    for m in monos {
        let coeffs = groups[m].expand_in(basis);
        let mono = m.fmt_with(letter);
        for p in sorted_partitions(coeffs.keys()) {
            let sym = fmt_partition(basis, p);
            let body = match (mono.is_empty(), sym.is_empty()) {
                (true, _) => sym,
                (_, true) => mono.clone(),
                _ => format!("{mono}*{sym}"),
            };
            items.push((coeffs[p].clone(), body));
        }
    }
    join_terms(items)
}

pub fn convert_basis(f: &SymFunc, target: Basis) -> BasisExpansion {
    BasisExpansion {
        basis: target,
        coeffs: f.expand_in(target),
    }
}

/// An affine alphabet `a·X + Σ c_j·x^{m_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphabetExpr {
    pub x_coeff: QtScalar,
    pub monomial_terms: Vec<(QtScalar, Monomial)>,
}

impl AlphabetExpr {
    /// The bare alphabet `X`.
    pub fn x() -> AlphabetExpr {
        AlphabetExpr::scaled_x(QtScalar::one())
    }

    pub fn scaled_x(a: QtScalar) -> AlphabetExpr {
        AlphabetExpr {
            x_coeff: a,
            monomial_terms: Vec::new(),
        }
    }

    /// A sum of monomials with no `X` part.
    pub fn finite(terms: Vec<(QtScalar, Monomial)>) -> AlphabetExpr {
        AlphabetExpr {
            x_coeff: QtScalar::zero(),
            monomial_terms: terms,
        }
    }

    /// `x_i + x_{i+1} + ... + x_j`.
    pub fn vars(range: impl IntoIterator<Item = usize>) -> AlphabetExpr {
        AlphabetExpr::finite(
            range
                .into_iter()
                .map(|i| (QtScalar::one(), Monomial::var(i)))
                .collect(),
        )
    }

    pub fn plus(mut self, c: QtScalar, m: Monomial) -> AlphabetExpr {
        self.monomial_terms.push((c, m));
        self
    }

    /// Multiplies the whole alphabet by a scalar.
    pub fn times(&self, c: &QtScalar) -> AlphabetExpr {
        AlphabetExpr {
            x_coeff: self.x_coeff.mul_ref(c),
            monomial_terms: self
                .monomial_terms
                .iter()
                .map(|(a, m)| (a.mul_ref(c), m.clone()))
                .collect(),
        }
    }

    fn max_var(&self) -> usize {
        self.monomial_terms.iter().map(|(_, m)| m.max_var()).max().unwrap_or(0)
    }

    /// `p_n[A]`, raising `q` and `t` to the `n`-th power inside every coefficient.
    pub fn power_sum_image(&self, n: u32, rank: usize) -> Mixed {
        let rank = rank.max(self.max_var());
        let mut out = Mixed::zero(rank);
        out.add_term(Monomial::one(), Partition::single(n), self.x_coeff.raise(n));
        for (c, m) in &self.monomial_terms {
            out.add_term(m.pow(n as i32), Partition::empty(), c.raise(n));
        }
        out
    }
}

/// Substitutes `A` for the alphabet of `f`; the result lives in the variables of `A` and,
/// through its `X` part, in power sums of `X`.
pub fn plethysm_substitute(f: &SymFunc, a: &AlphabetExpr, ambient_rank: usize) -> Mixed {
    plethysm_mixed(&f.to_mixed(ambient_rank), a, ambient_rank)
}

/// Substitutes `A` into the tail of every term of a mixed element, keeping finite parts.
pub fn plethysm_mixed(f: &Mixed, a: &AlphabetExpr, ambient_rank: usize) -> Mixed {
    let rank = ambient_rank.max(f.rank()).max(a.max_var());
    let mut images: HashMap<u32, Mixed> = HashMap::new();
    let mut power_cache: HashMap<Partition, Mixed> = HashMap::new();
    let mut out = Mixed::zero(rank);
    for (m, lambda, c) in f.terms() {
        let img = power_cache
            .entry(lambda.clone())
            .or_insert_with(|| {
                let mut acc = Mixed::one(rank);
                for part in lambda.parts() {
                    let pn = images
                        .entry(part)
                        .or_insert_with(|| a.power_sum_image(part, rank));
                    acc = acc.mul(pn);
                }
                acc
            })
            .clone();
        for (m2, p2, c2) in img.into_terms() {
            out.add_term(m.mul(&m2), p2, c2.mul_ref(c));
        }
    }
    out
}

/// `h_n[A]` by the Newton recurrence `n h_n = Σ_{m=1}^n p_m[A] h_{n-m}[A]`.
pub fn h_of_expr(n: u32, a: &AlphabetExpr, ambient_rank: usize) -> Mixed {
    let rank = ambient_rank.max(a.max_var());
    let p: Vec<Mixed> = (1..=n).map(|m| a.power_sum_image(m, rank)).collect();
    let mut h: Vec<Mixed> = vec![Mixed::one(rank)];
    for k in 1..=n {
        let mut acc = Mixed::zero(rank);
        for m in 1..=k {
            acc = acc.add(&p[(m - 1) as usize].mul(&h[(k - m) as usize]));
        }
        let inv = QtScalar::one().div_ref(&QtScalar::int(k as i64)).unwrap();
        h.push(acc.scale(&inv));
    }
    h.pop().unwrap()
}

/// `F[x_1, ..., x_m]`.
pub fn expand_to_vars(f: &SymFunc, m: usize) -> Poly {
    expand_in_vars(f, &(1..=m).collect::<Vec<_>>(), m)
}

/// `F[x_{v_1} + ... + x_{v_r}]` via monomial orbit sums.
pub fn expand_in_vars(f: &SymFunc, vars: &[usize], rank: usize) -> Poly {
    let mut out = Poly::zero(rank);
    for (lambda, c) in f.expand_in(Basis::Monomial) {
        if lambda.len() > vars.len() {
            continue;
        }
        let mut counts: Vec<(u32, u32)> = lambda.multiplicities();
        let zeros = (vars.len() - lambda.len()) as u32;
        if zeros > 0 {
            counts.push((0, zeros));
        }
        let mut exps = vec![0i32; vars.len()];
        orbit(&mut counts, 0, &mut exps, &mut |e| {
            let mono = Monomial::from_pairs(vars.iter().zip(e.iter()).map(|(&v, &x)| (v, x)));
            out.add_term(mono, (), c.clone());
        });
    }
    out
}

fn orbit(counts: &mut [(u32, u32)], pos: usize, exps: &mut [i32], emit: &mut impl FnMut(&[i32])) {
    if pos == exps.len() {
        emit(exps);
        return;
    }
    for k in 0..counts.len() {
        if counts[k].1 == 0 {
            continue;
        }
        counts[k].1 -= 1;
        exps[pos] = counts[k].0 as i32;
        orbit(counts, pos + 1, exps, emit);
        counts[k].1 += 1;
    }
}

type HCache = RwLock<HashMap<(u32, QtScalar), SymFunc>>;

/// `h_n[a·X] = Σ_{|μ|=n} p_μ Π_i a(q^{μ_i}, t^{μ_i}) / z_μ`, cached.
pub fn h_scaled(n: u32, a: &QtScalar) -> SymFunc {
    static CACHE: OnceLock<HCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (n, a.clone());
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut out = SymFunc::zero();
    for mu in Partition::all(n) {
        let mut c = QtScalar::one().div_ref(&QtScalar::from_int(mu.z().into())).unwrap();
        for part in mu.parts() {
            c = c.mul_ref(&a.raise(part));
        }
        out.add_term(mu, c);
    }
    cache.write().unwrap().insert(key, out.clone());
    out
}

/// `𝓑_n F = (F[X - z^{-1}] Exp[(1-t) z X])|_{z^n}`.
pub fn vertex_b(n: u32, f: &SymFunc) -> SymFunc {
    let shift = AlphabetExpr::x().plus(QtScalar::int(-1), Monomial::power(1, -1));
    let shifted = plethysm_substitute(f, &shift, 1);
    let one_minus_t = &QtScalar::one() - &QtScalar::t();
    let mut out = SymFunc::zero();
    for (m, lambda, c) in shifted.terms() {
        let j = -m.exp(1);
        debug_assert!(j >= 0);
        let h = h_scaled(n + j as u32, &one_minus_t);
        let base = SymFunc::from_p_coeffs([(lambda.clone(), c.clone())]);
        out = out.add(&base.mul(&h));
    }
    out
}

/// Constant term in `x_v` of `P · Exp[-x_v^{-1} X]`, i.e. `Σ_n (-1)^n e_n[X] · [x_v^n] P`.
pub fn exp_pair_ct(p: &Mixed, v: usize) -> Result<Mixed> {
    let rank = if v == p.rank() { v - 1 } else { p.rank() };
    let minus_one = QtScalar::int(-1);
    let mut out = Mixed::zero(rank);
    for (m, lambda, c) in p.terms() {
        let e = m.exp(v);
        if e < 0 {
            return Err(Error::SignatureViolation(format!(
                "negative power of x{v} in exponential pairing"
            )));
        }
        let rest = m.with(v, 0);
        for (mu, a) in h_scaled(e as u32, &minus_one).p_coeffs() {
            out.add_term(rest.clone(), lambda.union(mu), a.mul_ref(c));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
