//! Exact transition matrices between power sums and the monomial, complete and elementary bases.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::Partition;
use crate::field::QtScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    PowerSum,
    Homogeneous,
    Elementary,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::PowerSum => 'p',
            Basis::Homogeneous => 'h',
            Basis::Elementary => 'e',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        match c {
            'm' => Some(Basis::Monomial),
            'p' => Some(Basis::PowerSum),
            'h' => Some(Basis::Homogeneous),
            'e' => Some(Basis::Elementary),
            _ => None,
        }
    }
}

type Row = Vec<(Partition, QtScalar)>;

/// Both directions of the change of basis in one weight.
pub struct Transition {
    /// `B_λ = Σ to_p[λ][μ] p_μ`.
    pub to_p: HashMap<Partition, Row>,
    /// `p_μ = Σ from_p[μ][λ] B_λ`.
    pub from_p: HashMap<Partition, Row>,
}

type Cache = RwLock<HashMap<(Basis, u32), Arc<Transition>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Cached transition data for `basis` in weight `n`.
pub fn transition(basis: Basis, n: u32) -> Arc<Transition> {
    if let Some(t) = cache().read().unwrap().get(&(basis, n)) {
        return t.clone();
    }
    let built = Arc::new(build(basis, n));
    cache()
        .write()
        .unwrap()
        .entry((basis, n))
        .or_insert(built)
        .clone()
}

type Matrix = Vec<Vec<BigRational>>;

fn build(basis: Basis, n: u32) -> Transition {
    let parts = Partition::all(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let size = parts.len();
    let (to_p, from_p): (Matrix, Matrix) = match basis {
        Basis::PowerSum => (identity(size), identity(size)),
        Basis::Monomial => {
            let r = p_in_m(&parts, &index);
            (invert(&r), r)
        }
        Basis::Homogeneous | Basis::Elementary => {
            let signed = basis == Basis::Elementary;
            let a = product_basis_in_p(&parts, &index, signed);
            let inv = invert(&a);
            (a, inv)
        }
    };
    Transition {
        to_p: rows(&parts, &to_p),
        from_p: rows(&parts, &from_p),
    }
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

fn rows(parts: &[Partition], m: &Matrix) -> HashMap<Partition, Row> {
    parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let row = parts
                .iter()
                .enumerate()
                .filter(|(j, _)| !m[i][*j].is_zero())
                .map(|(j, q)| (q.clone(), rat_to_scalar(&m[i][j])))
                .collect();
            (p.clone(), row)
        })
        .collect()
}

pub(crate) fn rat_to_scalar(r: &BigRational) -> QtScalar {
    let n = QtScalar::from_int(r.numer().clone().into());
    let d = QtScalar::from_int(r.denom().clone().into());
    n.div_ref(&d).expect("nonzero denominator")
}

/// Coefficient of `m_λ` in `p_μ`: the number of ways to drop the parts of `μ` into the
/// `ℓ(λ)` slots so that slot `i` sums to `λ_i`.
fn p_in_m(parts: &[Partition], index: &HashMap<Partition, usize>) -> Matrix {
    let size = parts.len();
    let mut m = vec![vec![BigRational::zero(); size]; size];
    for (i, mu) in parts.iter().enumerate() {
        for lambda in parts {
            let target: Vec<u32> = lambda.to_vec();
            let mut slots = vec![0u32; target.len()];
            let c = count_fillings(&mu.to_vec(), 0, &target, &mut slots);
            if c > 0 {
                m[i][index[lambda]] = BigRational::from_integer(c.into());
            }
        }
    }
    m
}

fn count_fillings(mu: &[u32], k: usize, target: &[u32], slots: &mut [u32]) -> u64 {
    if k == mu.len() {
        return u64::from(slots == target);
    }
    let mut total = 0;
    for s in 0..slots.len() {
        if slots[s] + mu[k] <= target[s] {
            slots[s] += mu[k];
            total += count_fillings(mu, k + 1, target, slots);
            slots[s] -= mu[k];
        }
    }
    total
}

/// Rows `h_λ` (or `e_λ`) in power-sum coordinates, from `h_n = Σ p_μ / z_μ`
/// and `e_n = Σ (-1)^{n-ℓ(μ)} p_μ / z_μ`.
fn product_basis_in_p(parts: &[Partition], index: &HashMap<Partition, usize>, signed: bool) -> Matrix {
    let size = parts.len();
    let mut m = vec![vec![BigRational::zero(); size]; size];
    for (i, lambda) in parts.iter().enumerate() {
        let mut acc: HashMap<Partition, BigRational> = HashMap::new();
        acc.insert(Partition::empty(), BigRational::one());
        for part in lambda.parts() {
            let mut next: HashMap<Partition, BigRational> = HashMap::new();
            for mu in Partition::all(part) {
                let mut c = BigRational::new(1.into(), mu.z());
                if signed && (part as usize - mu.len()) % 2 == 1 {
                    c = -c;
                }
                for (nu, a) in &acc {
                    *next.entry(nu.union(&mu)).or_insert_with(BigRational::zero) += a * &c;
                }
            }
            acc = next;
        }
        for (nu, c) in acc {
            m[i][index[&nu]] = c;
        }
    }
    m
}

/// Gauss–Jordan inverse over the rationals.
fn invert(a: &Matrix) -> Matrix {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("transition matrix is invertible");
        aug.swap(col, piv);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (x, y) in aug[r].iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(row: &Row, p: &[u32]) -> QtScalar {
        let key = Partition::new(p);
        row.iter()
            .find(|(q, _)| *q == key)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(QtScalar::zero)
    }

    #[test]
    fn power_sums_in_monomials() {
        let t = transition(Basis::Monomial, 2);
        let p11 = &t.from_p[&Partition::new(&[1, 1])];
        assert_eq!(coeff(p11, &[2]), QtScalar::one());
        assert_eq!(coeff(p11, &[1, 1]), QtScalar::int(2));
        let p2 = &t.from_p[&Partition::new(&[2])];
        assert_eq!(coeff(p2, &[2]), QtScalar::one());
        assert_eq!(coeff(p2, &[1, 1]), QtScalar::zero());
    }

    #[test]
    fn h2_in_power_sums() {
        let t = transition(Basis::Homogeneous, 2);
        let h2 = &t.to_p[&Partition::new(&[2])];
        let half = QtScalar::one().div_ref(&QtScalar::int(2)).unwrap();
        assert_eq!(coeff(h2, &[2]), half);
        assert_eq!(coeff(h2, &[1, 1]), half);
        let e = transition(Basis::Elementary, 2);
        let e2 = &e.to_p[&Partition::new(&[2])];
        assert_eq!(coeff(e2, &[2]), half.neg_ref());
    }
}
