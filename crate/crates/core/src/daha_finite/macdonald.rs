use std::collections::HashMap;

use super::{cherednik_y, eigenvalue};
use crate::error::{Error, Result};
use crate::field::{gcd, QtPoly, QtScalar};
use crate::polyring::{Monomial, Poly};

/// All exponent vectors of length `k` summing to `d`.
pub fn compositions(d: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The nonsymmetric Macdonald polynomial `E_λ` in `k` variables, normalized so that the
/// coefficient of `x^λ` is 1.
pub fn macdonald_ns(k: usize, lambda: &[u32]) -> Result<Poly> {
    if lambda.len() != k {
        return Err(Error::Usage(format!("composition of length {} for rank {k}", lambda.len())));
    }
    let d: u32 = lambda.iter().sum();
    let basis: Vec<Monomial> = compositions(d, k)
        .iter()
        .map(|c| Monomial::from_exps(&c.iter().map(|&e| e as i32).collect::<Vec<_>>()))
        .collect();
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = basis.len();
    let mut rows: Vec<Vec<QtScalar>> = Vec::new();
    for i in 1..=k {
        let e = eigenvalue(lambda, i)?;
        let mut block = vec![vec![QtScalar::zero(); n]; n];
        for (col, m) in basis.iter().enumerate() {
            let image = cherednik_y(&Poly::monomial(k, m.clone()), i)?;
            for (mm, _, c) in image.terms() {
                block[index[mm]][col] = c.clone();
            }
            block[col][col] = block[col][col].sub_ref(&e);
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    let kernel = kernel_vector(rows, n)?;
    let target = index[&Monomial::from_exps(&lambda.iter().map(|&e| e as i32).collect::<Vec<_>>())];
    let lead = kernel[target].clone();
    if lead.is_zero() {
        return Err(Error::NonGenericEigenspace { dim: 1 });
    }
    let lead_inv = lead.inv()?;
    Ok(Poly::from_terms(
        k,
        basis
            .into_iter()
            .zip(kernel)
            .map(|(m, c)| (m, (), c.mul_ref(&lead_inv))),
    ))
}

/// Clears denominators row by row so elimination runs over `Z[q,t]`.
fn to_polynomial_row(row: &[QtScalar]) -> Vec<QtPoly> {
    let mut l = QtPoly::one();
    for c in row.iter().filter(|c| !c.is_zero()) {
        let d = c.denominator();
        let g = gcd(&l, d);
        l = l.mul(&d.div_exact(&g).expect("gcd divides"));
    }
    row.iter()
        .map(|c| {
            if c.is_zero() {
                QtPoly::zero()
            } else {
                let cof = l.div_exact(c.denominator()).expect("lcm is a multiple");
                c.numerator().mul(&cof)
            }
        })
        .collect()
}

fn primitive(row: Vec<QtPoly>) -> Vec<QtPoly> {
    let mut g: Option<QtPoly> = None;
    for c in row.iter().filter(|c| !c.is_zero()) {
        g = Some(match g {
            None => c.clone(),
            Some(g) => gcd(&g, c),
        });
        if g.as_ref().is_some_and(|g| g.is_one()) {
            return row;
        }
    }
    match g {
        Some(g) if !g.is_one() => row
            .into_iter()
            .map(|c| if c.is_zero() { c } else { c.div_exact(&g).expect("content divides") })
            .collect(),
        _ => row,
    }
}

/// A spanning vector of the kernel, which must be one-dimensional.
fn kernel_vector(rows: Vec<Vec<QtScalar>>, n: usize) -> Result<Vec<QtScalar>> {
    let mut m: Vec<Vec<QtPoly>> = rows.iter().map(|r| primitive(to_polynomial_row(r))).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            let updated: Vec<QtPoly> = row
                .iter()
                .zip(&pivot_row)
                .map(|(x, y)| pivot_row[col].mul(x).sub(&a.mul(y)))
                .collect();
            *row = primitive(updated);
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let dim = n - pivots.len();
    if dim != 1 {
        return Err(Error::NonGenericEigenspace { dim });
    }
    let free = (0..n).find(|c| !pivots.contains(c)).expect("one free column");
    let mut v = vec![QtScalar::zero(); n];
    v[free] = QtScalar::one();
    for (ri, &pc) in pivots.iter().enumerate().rev() {
        let row = &m[ri];
        let mut s = QtScalar::zero();
        for c in (pc + 1)..n {
            if !row[c].is_zero() && !v[c].is_zero() {
                s = s.add_ref(&QtScalar::from_poly(row[c].clone()).mul_ref(&v[c]));
            }
        }
        v[pc] = s.neg_ref().div_ref(&QtScalar::from_poly(row[pc].clone()))?;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha_finite::cherednik_y;
    use crate::polyring::xmono;

    fn q_one_minus_t_over(den: QtScalar) -> QtScalar {
        QtScalar::q().mul_ref(&(&QtScalar::one() - &QtScalar::t())).div_ref(&den).unwrap()
    }

    #[test]
    fn rank_two_and_three_examples() {
        let e = macdonald_ns(2, &[0, 1]).unwrap();
        let c = q_one_minus_t_over(&QtScalar::q() - &QtScalar::t());
        assert_eq!(e, xmono(&[0, 1]).add(&xmono(&[1, 0]).scale(&c)));
        assert_eq!(e.to_string(), "x2 + q*(1-t)/(q-t)*x1");
        let e = macdonald_ns(3, &[0, 1, 0]).unwrap();
        let c = q_one_minus_t_over(&QtScalar::q() - &QtScalar::t_pow(2));
        assert_eq!(e, xmono(&[0, 1, 0]).add(&xmono(&[1, 0, 0]).scale(&c)));
        assert_eq!(macdonald_ns(2, &[1, 0]).unwrap(), xmono(&[1, 0]));
    }

    #[test]
    fn eigenvalues_match_for_small_compositions() {
        for k in 1..=3usize {
            for d in 0..=3u32 {
                for lambda in compositions(d, k) {
                    let e = macdonald_ns(k, &lambda).unwrap();
                    for i in 1..=k {
                        let ev = eigenvalue(&lambda, i).unwrap();
                        assert_eq!(cherednik_y(&e, i).unwrap(), e.scale(&ev), "{lambda:?} Y{i}");
                    }
                }
            }
        }
    }

    #[test]
    fn composition_listing() {
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 2), vec![vec![0, 0]]);
    }
}
