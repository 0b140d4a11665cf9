//! Polynomial gcd over `Z[q, t]` by recursive primitive remainder sequences.

use super::int::Int;
use super::qtpoly::{Exp2, QtPoly};

type Uni = Vec<Int>;

fn trim(v: &mut Uni) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn uni_is_zero(v: &Uni) -> bool {
    v.is_empty()
}

fn uni_content(v: &Uni) -> Int {
    v.iter().fold(Int::ZERO, |g, c| g.gcd(c))
}

fn uni_scale(v: &Uni, c: &Int) -> Uni {
    let mut out: Uni = v.iter().map(|a| a.mul(c)).collect();
    trim(&mut out);
    out
}

fn uni_sub(a: &Uni, b: &Uni) -> Uni {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or(Int::ZERO);
        let y = b.get(i).cloned().unwrap_or(Int::ZERO);
        out.push(x.sub(&y));
    }
    trim(&mut out);
    out
}

fn uni_mul(a: &Uni, b: &Uni) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(&mut out);
    out
}

fn uni_shift(a: &Uni, s: usize) -> Uni {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::ZERO; s];
    out.extend(a.iter().cloned());
    out
}

fn uni_div_int(v: &Uni, c: &Int) -> Uni {
    v.iter().map(|a| a.div_exact(c).expect("content divides")).collect()
}

/// Exact division in `Z[x]`.
fn uni_div_exact(a: &Uni, b: &Uni) -> Option<Uni> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let lb = b.last().unwrap();
    let mut quot = vec![Int::ZERO; a.len() - b.len() + 1];
    while !rem.is_empty() && rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap().div_exact(lb)?;
        let sub = uni_shift(&uni_scale(b, &c), shift);
        rem = uni_sub(&rem, &sub);
        quot[shift] = c;
    }
    if rem.is_empty() {
        trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Primitive part with positive leading coefficient.
fn uni_primitive(v: &Uni) -> Uni {
    if v.is_empty() {
        return Vec::new();
    }
    let mut c = uni_content(v);
    if v.last().unwrap().is_negative() {
        c = c.neg();
    }
    uni_div_int(v, &c)
}

fn uni_prem(a: &Uni, b: &Uni) -> Uni {
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        r = uni_sub(&uni_scale(&r, &lb), &uni_shift(&uni_scale(b, &lr), shift));
    }
    r
}

/// Gcd in `Z[x]`, positive leading coefficient.
fn uni_gcd(a: &Uni, b: &Uni) -> Uni {
    if uni_is_zero(a) {
        return uni_primitive_keep_content(b);
    }
    if uni_is_zero(b) {
        return uni_primitive_keep_content(a);
    }
    let c = uni_content(a).gcd(&uni_content(b));
    let (mut x, mut y) = (uni_primitive(a), uni_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![c];
        }
        let r = uni_prem(&x, &y);
        x = y;
        y = uni_primitive(&r);
    }
    uni_scale(&x, &c)
}

fn uni_primitive_keep_content(v: &Uni) -> Uni {
    if v.last().is_some_and(|c| c.is_negative()) {
        v.iter().map(|c| c.neg()).collect()
    } else {
        v.clone()
    }
}

/// Bivariate polynomials as dense vectors in `t` of dense polynomials in `q`.
type Biv = Vec<Uni>;

fn biv_trim(v: &mut Biv) {
    for row in v.iter_mut() {
        trim(row);
    }
    while v.last().is_some_and(|r| r.is_empty()) {
        v.pop();
    }
}

fn biv_content(v: &Biv) -> Uni {
    let mut g: Uni = Vec::new();
    for row in v {
        if row.is_empty() {
            continue;
        }
        g = uni_gcd(&g, row);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn biv_div_uni(v: &Biv, c: &Uni) -> Biv {
    v.iter()
        .map(|row| {
            if row.is_empty() {
                Vec::new()
            } else {
                uni_div_exact(row, c).expect("content divides row")
            }
        })
        .collect()
}

fn biv_primitive(v: &Biv) -> Biv {
    let c = biv_content(v);
    let mut out = biv_div_uni(v, &c);
    if out
        .last()
        .and_then(|r| r.last())
        .is_some_and(|c| c.is_negative())
    {
        for row in out.iter_mut() {
            for c in row.iter_mut() {
                *c = c.neg();
            }
        }
    }
    out
}

fn biv_prem(a: &Biv, b: &Biv) -> Biv {
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        let mut next: Biv = vec![Vec::new(); r.len()];
        for (i, row) in r.iter().enumerate() {
            next[i] = uni_mul(row, &lb);
        }
        for (i, row) in b.iter().enumerate() {
            let s = uni_mul(row, &lr);
            next[i + shift] = uni_sub(&next[i + shift], &s);
        }
        biv_trim(&mut next);
        r = next;
    }
    r
}

/// Gcd of two polynomials with no monomial factor and unit integer content.
fn primitive_gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
    if a.is_constant() || b.is_constant() {
        return QtPoly::one();
    }
    if a.is_free_of_t() && b.is_free_of_t() {
        let ua = a.to_dense().swap_remove(0);
        let ub = b.to_dense().swap_remove(0);
        return QtPoly::from_dense(&[uni_gcd(&ua, &ub)]);
    }
    let mut x = a.to_dense();
    let mut y = b.to_dense();
    biv_trim(&mut x);
    biv_trim(&mut y);
    let cx = biv_content(&x);
    let cy = biv_content(&y);
    let cg = uni_gcd(&cx, &cy);
    x = biv_primitive(&x);
    y = biv_primitive(&y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let g = loop {
        if y.is_empty() {
            break x;
        }
        if y.len() == 1 {
            break vec![vec![Int::ONE]];
        }
        let r = biv_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { biv_primitive(&r) };
    };
    let scaled: Biv = g.iter().map(|row| uni_mul(row, &cg)).collect();
    QtPoly::from_dense(&scaled)
}

/// Gcd in `Z[q, t]`, normalized to a positive leading coefficient (lex, `t > q`).
pub fn gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
    if a.is_zero() {
        return positive(b);
    }
    if b.is_zero() {
        return positive(a);
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = Exp2::new(ma.q().min(mb.q()), ma.t().min(mb.t()));
    let ca = a.content();
    let cb = b.content();
    let ic = ca.gcd(&cb);
    if a.is_monomial() || b.is_monomial() {
        return QtPoly::monomial(ic, mono);
    }
    let pa = a.div_monomial(ma).div_int(&ca);
    let pb = b.div_monomial(mb).div_int(&cb);
    let g = primitive_gcd(&pa, &pb);
    positive(&g.mul_term(&ic, mono))
}

fn positive(p: &QtPoly) -> QtPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(raw: &[(u32, u32, i64)]) -> QtPoly {
        QtPoly::from_terms(raw.iter().copied())
    }

    #[test]
    fn univariate_gcd() {
        let a = p(&[(0, 0, 1), (0, 2, -1)]);
        let b = p(&[(0, 0, 1), (0, 1, 1)]);
        assert_eq!(gcd(&a, &b), b);
        let c = p(&[(0, 0, 1), (0, 1, -1)]);
        assert_eq!(gcd(&b, &c), QtPoly::one());
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        let f = p(&[(1, 0, 1), (0, 1, -1)]);
        let g = p(&[(1, 0, 1), (0, 2, -1)]);
        let h = p(&[(2, 0, 3), (0, 1, 1), (1, 3, -2)]);
        let a = f.mul(&g).mul(&p(&[(0, 0, 2)]));
        let b = f.mul(&h).mul(&p(&[(0, 0, 4), (0, 1, 2)]));
        let got = gcd(&a, &b);
        assert_eq!(got, f.neg().scale(&Int::from(2)));
    }

    #[test]
    fn gcd_with_monomials() {
        let a = p(&[(1, 2, 6)]);
        let b = p(&[(1, 1, 4), (2, 3, 2)]);
        assert_eq!(gcd(&a, &b), p(&[(1, 1, 2)]));
    }
}
