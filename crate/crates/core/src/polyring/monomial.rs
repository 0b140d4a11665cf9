use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A Laurent monomial stored as sorted `(variable, exponent)` pairs with nonzero exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[(u16, i32); 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(i: usize) -> Monomial {
        Monomial::power(i, 1)
    }

    pub fn power(i: usize, e: i32) -> Monomial {
        assert!(i >= 1, "variables are indexed from 1");
        let mut m = Monomial::one();
        m.set(i, e);
        m
    }

    /// Builds from a dense exponent vector `[e1, e2, ...]`.
    pub fn from_exps(exps: &[i32]) -> Monomial {
        Monomial(
            exps.iter()
                .enumerate()
                .filter(|(_, e)| **e != 0)
                .map(|(i, e)| (i as u16 + 1, *e))
                .collect(),
        )
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i32)>) -> Monomial {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m.set(v, m.exp(v) + e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.0.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn exp(&self, i: usize) -> i32 {
        match self.0.binary_search_by_key(&(i as u16), |p| p.0) {
            Ok(pos) => self.0[pos].1,
            Err(_) => 0,
        }
    }

    pub fn set(&mut self, i: usize, e: i32) {
        let key = i as u16;
        match self.0.binary_search_by_key(&key, |p| p.0) {
            Ok(pos) => {
                if e == 0 {
                    self.0.remove(pos);
                } else {
                    self.0[pos].1 = e;
                }
            }
            Err(pos) => {
                if e != 0 {
                    self.0.insert(pos, (key, e));
                }
            }
        }
    }

    pub fn with(&self, i: usize, e: i32) -> Monomial {
        let mut m = self.clone();
        m.set(i, e);
        m
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = SmallVec::with_capacity(self.0.len() + o.0.len());
        let (mut a, mut b) = (0, 0);
        while a < self.0.len() && b < o.0.len() {
            let (va, ea) = self.0[a];
            let (vb, eb) = o.0[b];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    a += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    b += 1;
                }
                Ordering::Equal => {
                    if ea + eb != 0 {
                        out.push((va, ea + eb));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[a..]);
        out.extend_from_slice(&o.0[b..]);
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, n: i32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * n)).collect())
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    pub fn max_var(&self) -> usize {
        self.0.last().map_or(0, |p| p.0 as usize)
    }

    pub fn min_var(&self) -> usize {
        self.0.first().map_or(0, |p| p.0 as usize)
    }

    pub fn is_plus(&self) -> bool {
        self.0.iter().all(|p| p.1 > 0)
    }

    pub fn is_minus(&self) -> bool {
        self.0.iter().all(|p| p.1 < 0)
    }

    pub fn swap(&self, i: usize, j: usize) -> Monomial {
        let (a, b) = (self.exp(i), self.exp(j));
        let mut m = self.clone();
        m.set(i, b);
        m.set(j, a);
        m
    }

    /// Sends `x_v` to `x_{f(v)}`; `f` must be injective on the support.
    pub fn rename(&self, f: impl Fn(usize) -> usize) -> Monomial {
        let mut v: SmallVec<[(u16, i32); 4]> =
            self.0.iter().map(|&(i, e)| (f(i as usize) as u16, e)).collect();
        v.sort_unstable_by_key(|p| p.0);
        Monomial(v)
    }

    /// Print order: higher total degree first, then larger exponents on higher-index variables.
    pub fn print_cmp(&self, o: &Monomial) -> Ordering {
        o.degree().cmp(&self.degree()).then_with(|| {
            let top = self.max_var().max(o.max_var());
            for v in (1..=top).rev() {
                let c = o.exp(v).cmp(&self.exp(v));
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }

    /// Writes the monomial with the given variable letter, e.g. `x1^2*x3^-1`; empty for `1`.
    pub fn fmt_with(&self, letter: char) -> String {
        let mut parts = Vec::with_capacity(self.0.len());
        for &(v, e) in &self.0 {
            if e == 1 {
                parts.push(format!("{letter}{v}"));
            } else {
                parts.push(format!("{letter}{v}^{e}"));
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.fmt_with('x'))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_cancels_and_merges() {
        let a = Monomial::from_exps(&[1, -2, 0, 3]);
        let b = Monomial::from_exps(&[0, 2, 1]);
        let c = a.mul(&b);
        assert_eq!(c, Monomial::from_exps(&[1, 0, 1, 3]));
        assert_eq!(c.degree(), 5);
        assert_eq!(a.mul(&a.inv()), Monomial::one());
    }

    #[test]
    fn print_order_matches_graded_reverse_index() {
        let x1 = Monomial::var(1);
        let x2 = Monomial::var(2);
        assert_eq!(x2.print_cmp(&x1), Ordering::Less);
        let x1sq = Monomial::power(1, 2);
        assert_eq!(x1sq.print_cmp(&x2), Ordering::Less);
        assert_eq!(Monomial::from_exps(&[1, 0, 1]).fmt_with('x'), "x1*x3");
        assert_eq!(Monomial::from_exps(&[-1, 2]).fmt_with('y'), "y1^-1*y2^2");
    }

    #[test]
    fn swap_and_rename() {
        let m = Monomial::from_exps(&[2, 0, 1]);
        assert_eq!(m.swap(1, 2), Monomial::from_exps(&[0, 2, 1]));
        assert_eq!(m.rename(|v| v + 1), Monomial::from_exps(&[0, 2, 0, 1]));
    }
}
