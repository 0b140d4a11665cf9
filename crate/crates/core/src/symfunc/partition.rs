use std::fmt;

use num_bigint::BigInt;
use smallvec::SmallVec;

use crate::polyring::Tail;

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(SmallVec<[u16; 6]>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(SmallVec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn new(parts: &[u32]) -> Partition {
        let mut v: SmallVec<[u16; 6]> = parts.iter().filter(|&&p| p > 0).map(|&p| p as u16).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn single(n: u32) -> Partition {
        Partition::new(&[n])
    }

    pub fn parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&p| p as u32)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.parts().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts().sum()
    }

    pub fn union(&self, o: &Partition) -> Partition {
        let mut v: SmallVec<[u16; 6]> = self.0.iter().chain(o.0.iter()).copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Removes one copy of the part `a`, if present.
    pub fn remove_part(&self, a: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p as u32 == a)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }

    /// Distinct parts in decreasing order.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.parts().collect();
        v.dedup();
        v
    }

    /// Multiplicities `(part, count)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for p in self.parts() {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for (p, m) in self.multiplicities() {
            for j in 1..=m {
                acc *= BigInt::from(p) * BigInt::from(j);
            }
        }
        acc
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(cur));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of weight at most `n`.
    pub fn up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }
}

impl Tail for Partition {
    fn unit() -> Self {
        Partition::empty()
    }
    fn mul(&self, o: &Self) -> Self {
        self.union(o)
    }
    fn is_unit(&self) -> bool {
        self.is_empty()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::all(3)[0], Partition::new(&[3]));
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::new(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(Partition::new(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(Partition::new(&[3]).z(), BigInt::from(3));
    }

    #[test]
    fn union_and_removal() {
        let a = Partition::new(&[2, 1]);
        let b = Partition::new(&[3, 1]);
        assert_eq!(a.union(&b), Partition::new(&[3, 2, 1, 1]));
        assert_eq!(a.remove_part(2), Some(Partition::new(&[1])));
        assert_eq!(a.remove_part(5), None);
        assert_eq!(Partition::new(&[2, 2, 1]).distinct_parts(), vec![2, 1]);
    }
}
