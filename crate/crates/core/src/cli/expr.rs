//! Expressions such as `x1^2*x2 + (1-t)/(q-t)*m[2,1]`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' '-'? int)?
//! atom   := int | 'q' | 't' | 'x' int | 'y' int | sym | '(' expr ')'
//! sym    := ('m' | 'p' | 'h' | 'e') '[' int (',' int)* ']'
//! ```
//! Division is only by scalars.

use std::fmt;
use std::str::FromStr;

use crate::asym::AlmostSym;
use crate::ddpa::VElement;
use crate::error::{Error, Result};
use crate::field::QtScalar;
use crate::polyring::{Monomial, Poly};
use crate::symfunc::{Basis, Mixed, Partition, SymFunc};

/// Which module an expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Laurent polynomials in `x_1..x_k`, acted on by the finite and deformed DAHA.
    Finite,
    /// Almost symmetric `𝒫(k)^+`: `x`-monomials times symmetric functions of the tail.
    AlmostSym,
    /// `V_k`: `y`-monomials times symmetric functions of `X`.
    Dyck,
}

impl Side {
    fn letter(self) -> char {
        match self {
            Side::Dyck => 'y',
            _ => 'x',
        }
    }

    fn has_tails(self) -> bool {
        self != Side::Finite
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "P" | "p" | "finite" => Ok(Side::Finite),
            "S" | "s" | "asym" => Ok(Side::AlmostSym),
            "V" | "v" | "dyck" => Ok(Side::Dyck),
            _ => Err(Error::Usage(format!("unknown side '{s}', expected P, S or V"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Side::Finite => "P",
            Side::AlmostSym => "S",
            Side::Dyck => "V",
        };
        write!(f, "{s}")
    }
}

/// A parsed element on one of the three sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Finite(Poly),
    AlmostSym(AlmostSym),
    Dyck(VElement),
}

impl Element {
    pub fn side(&self) -> Side {
        match self {
            Element::Finite(_) => Side::Finite,
            Element::AlmostSym(_) => Side::AlmostSym,
            Element::Dyck(_) => Side::Dyck,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Element::Finite(f) => f.rank(),
            Element::AlmostSym(f) => f.rank(),
            Element::Dyck(f) => f.rank(),
        }
    }

    /// The canonical printed form, with tails in `basis`.
    pub fn print(&self, basis: Basis) -> String {
        match self {
            Element::Finite(f) => f.to_string(),
            Element::AlmostSym(f) => crate::symfunc::fmt_mixed(f.body(), 'x', basis),
            Element::Dyck(f) => crate::symfunc::fmt_mixed(f.body(), 'y', basis),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = match self {
            Element::Dyck(_) => Basis::PowerSum,
            _ => Basis::Monomial,
        };
        write!(f, "{}", self.print(basis))
    }
}

/// Parses `text` as an element of `side` at rank `rank`.
pub fn parse_expr(text: &str, side: Side, rank: usize) -> Result<Element> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, side, rank };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    let v = v.with_rank(rank);
    match side {
        Side::Finite => Ok(Element::Finite(Poly::from_terms(rank, v.into_terms().map(|(m, _, c)| (m, (), c))))),
        Side::AlmostSym => {
            if v.terms().any(|(m, _, _)| !m.is_plus()) {
                return Err(Error::SignatureViolation("almost symmetric elements have nonnegative exponents".into()));
            }
            Ok(Element::AlmostSym(AlmostSym::new(v)))
        }
        Side::Dyck => Ok(Element::Dyck(VElement::new(v)?)),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    side: Side,
    rank: usize,
}

impl Parser<'_> {
    fn syntax(&self, message: &str) -> Error {
        Error::Syntax { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse().map_err(|_| Error::Syntax { offset: start, message: "integer too large".into() })
    }

    fn expr(&mut self) -> Result<Mixed> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Mixed> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                let c = scalar_of(&d).ok_or(Error::Syntax { offset: at, message: "division by a non-scalar".into() })?;
                acc = acc.scale(&c.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Mixed> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Mixed> {
        let at = self.pos;
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        let n = self.int()? as i64;
        let n = if negative { -n } else { n };
        power(&base, n).ok_or(Error::Syntax { offset: at, message: "negative power of a non-monomial".into() })
    }

    fn atom(&mut self) -> Result<Mixed> {
        let c = self.peek().ok_or_else(|| self.syntax("unexpected end of input"))?;
        let start = self.pos;
        if c == b'(' {
            self.pos += 1;
            let v = self.expr()?;
            self.expect(b')')?;
            return Ok(v);
        }
        if c.is_ascii_digit() {
            let n = self.int()?;
            return Ok(Mixed::constant(self.rank, QtScalar::int(n as i64)));
        }
        if !c.is_ascii_alphabetic() {
            return Err(self.syntax("expected a term"));
        }
        self.pos += 1;
        match c {
            b'q' => Ok(Mixed::constant(self.rank, QtScalar::q())),
            b't' => Ok(Mixed::constant(self.rank, QtScalar::t())),
            b'x' | b'y' if c as char == self.side.letter() => {
                let i = self.int()? as usize;
                if i == 0 || i > self.rank {
                    return Err(Error::RankViolation { index: i, rank: self.rank });
                }
                Ok(Mixed::monomial(self.rank, Monomial::var(i)))
            }
            b'm' | b'p' | b'h' | b'e' if self.side.has_tails() && self.peek() == Some(b'[') => {
                self.pos += 1;
                let mut parts = vec![self.int()? as u32];
                while self.eat(b',') {
                    parts.push(self.int()? as u32);
                }
                self.expect(b']')?;
                let basis = Basis::from_letter(c as char).expect("basis letter");
                let sym = SymFunc::basis_element(basis, &Partition::new(&parts));
                Ok(sym.to_mixed(self.rank))
            }
            _ => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_alphanumeric() {
                    end += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..end]).into_owned();
                Err(Error::UnknownSymbol { name, offset: start })
            }
        }
    }
}

/// The value of a constant element.
fn scalar_of(f: &Mixed) -> Option<QtScalar> {
    let mut out = QtScalar::zero();
    for (m, lambda, c) in f.terms() {
        if !m.is_one() || !lambda.is_empty() {
            return None;
        }
        out = out.add_ref(c);
    }
    Some(out)
}

/// `f^n`; negative powers only for single terms without tails.
fn power(f: &Mixed, n: i64) -> Option<Mixed> {
    if n >= 0 {
        let mut acc = Mixed::one(f.rank());
        for _ in 0..n {
            acc = acc.mul(f);
        }
        return Some(acc);
    }
    let mut it = f.terms();
    let (m, lambda, c) = it.next()?;
    if it.next().is_some() || !lambda.is_empty() {
        return None;
    }
    let c = c.pow(n).ok()?;
    Some(Mixed::term(f.rank(), m.pow(n as i32), Partition::empty(), c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qt(a: i64, b: i64) -> QtScalar {
        QtScalar::qt_monomial(a, b)
    }

    #[test]
    fn parses_sums_with_tails() {
        let got = parse_expr("x1^2*x2 + (1-t)*m[2,1]", Side::AlmostSym, 2).unwrap();
        let one_minus_t = QtScalar::one().sub_ref(&QtScalar::t());
        let expect = AlmostSym::product(2, &Monomial::from_exps(&[2, 1]), &SymFunc::one())
            .add(&AlmostSym::product(2, &Monomial::one(), &SymFunc::m(&[2, 1]).scale(&one_minus_t)));
        assert_eq!(got, Element::AlmostSym(expect));

        let got = parse_expr("y1*p[2]", Side::Dyck, 1).unwrap();
        assert_eq!(got, Element::Dyck(VElement::product(1, &Monomial::var(1), &SymFunc::p(&[2]))));

        assert_eq!(parse_expr("x3", Side::AlmostSym, 2).unwrap_err(), Error::RankViolation { index: 3, rank: 2 });
    }

    #[test]
    fn coefficients_and_laurent_powers() {
        let got = parse_expr("q*(1-t)/(q-t)*x1 - 2/3*q^-1*t*x2^-1", Side::Finite, 2).unwrap();
        let c1 = QtScalar::q().mul_ref(&QtScalar::one().sub_ref(&QtScalar::t())).div_ref(&QtScalar::q().sub_ref(&QtScalar::t())).unwrap();
        let c2 = QtScalar::int(-2).div_ref(&QtScalar::int(3)).unwrap().mul_ref(&qt(-1, 1));
        let mut expect = Poly::zero(2);
        expect.add_term(Monomial::var(1), (), c1);
        expect.add_term(Monomial::power(2, -1), (), c2);
        assert_eq!(got, Element::Finite(expect));
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_expr("x1 + * x2", Side::Finite, 2).unwrap_err() {
            Error::Syntax { offset, .. } => assert_eq!(offset, 5),
            e => panic!("{e:?}"),
        }
        assert_eq!(parse_expr("x1 + z2", Side::Finite, 2).unwrap_err(), Error::UnknownSymbol { name: "z2".into(), offset: 5 });
        assert_eq!(parse_expr("y1", Side::Finite, 2).unwrap_err(), Error::UnknownSymbol { name: "y1".into(), offset: 0 });
        assert_eq!(parse_expr("m[1]", Side::Finite, 2).unwrap_err().kind(), "UnknownSymbol");
        assert_eq!(parse_expr("x1/x2", Side::Finite, 2).unwrap_err().kind(), "SyntaxError");
        assert_eq!(parse_expr("(x1", Side::Finite, 2).unwrap_err().kind(), "SyntaxError");
        assert_eq!(parse_expr("x1^-1", Side::AlmostSym, 2).unwrap_err().kind(), "SignatureViolation");
        assert_eq!(parse_expr("1/(1-1)", Side::Finite, 1).unwrap_err(), Error::DivisionByZero);
    }

    fn coefficient() -> impl Strategy<Value = QtScalar> {
        (-3i64..=3, -2i64..=2, -2i64..=2, 0i64..=2).prop_map(|(c, a, b, d)| {
            let den = QtScalar::one().sub_ref(&QtScalar::t_pow(d + 1)).add_ref(&QtScalar::q());
            QtScalar::int(c).mul_ref(&qt(a, b)).div_ref(&den).unwrap()
        })
    }

    fn element(side: Side) -> impl Strategy<Value = Element> {
        let term = (prop::collection::vec(0i32..=2, 2), 0usize..4, coefficient());
        prop::collection::vec(term, 0..4).prop_map(move |terms| {
            let tails = [vec![], vec![1], vec![2], vec![2, 1]];
            let mut body = Mixed::zero(2);
            for (e, l, c) in terms {
                let sym = if side == Side::Finite { SymFunc::one() } else { SymFunc::m(&tails[l]) };
                for (p, a) in sym.p_coeffs() {
                    body.add_term(Monomial::from_exps(&e), p.clone(), a.mul_ref(&c));
                }
            }
            match side {
                Side::Finite => Element::Finite(Poly::from_terms(2, body.into_terms().map(|(m, _, c)| (m, (), c)))),
                Side::AlmostSym => Element::AlmostSym(AlmostSym::new(body)),
                Side::Dyck => Element::Dyck(VElement::new(body).unwrap()),
            }
        })
    }

    proptest! {
        #[test]
        fn printing_round_trips(side in prop::sample::select(vec![Side::Finite, Side::AlmostSym, Side::Dyck]).prop_flat_map(element)) {
            for basis in [Basis::Monomial, Basis::PowerSum, Basis::Homogeneous, Basis::Elementary] {
                let text = side.print(basis);
                let back = parse_expr(&text, side.side(), 2).unwrap();
                prop_assert_eq!(&back, &side, "{}", text);
            }
        }
    }
}
