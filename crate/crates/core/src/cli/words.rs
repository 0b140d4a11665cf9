//! Operator words such as `T(1) Y(2)` or `d- ∘ d+`, composed right to left.
//!
//! | side | generators |
//! |------|------------|
//! | `P`  | `T(i)`, `X(i)`, `Y(i)`, `omega`, `omegatilde` (each with optional `^-1`), `varpi`, `gamma`, `Y~(i)`, `W(i)`, `Z~(i)` |
//! | `S`  | `T(i)`, `T(i)^-1`, `X(i)`, `Y(i)`, `d`, `d*`, `d-` |
//! | `V`  | `T(i)`, `T(i)^-1`, `y(i)`, `z(i)`, `d+`, `d+*`, `d-` |

use super::expr::{Element, Side};
use crate::asym::{apply_limit_t, apply_limit_t_inv, apply_limit_x, apply_limit_y};
use crate::daha_deformed::{DeformedGenerator, DeformedKind};
use crate::daha_finite::{FiniteGenerator, FiniteKind};
use crate::ddpa::{apply_arrow, apply_loop, Arrow, Loop};
use crate::error::{Error, Result};
use crate::pbullet_phi::{apply_parrow, PArrow, PArrowKind};

/// One generator of an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Finite(FiniteKind),
    Deformed(DeformedKind),
    LimitT(usize),
    LimitTinv(usize),
    LimitX(usize),
    LimitY(usize),
    Partial(PArrowKind),
    Arrow(Arrow),
    Loop(Loop),
}

/// A parsed word; `letters[0]` is applied last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpWord {
    pub side: Side,
    pub letters: Vec<Generator>,
}

struct Token<'a> {
    name: &'a str,
    arg: Option<usize>,
    inverse: bool,
    offset: usize,
}

fn tokens(text: &str) -> Result<Vec<Token<'_>>> {
    let mut out = Vec::new();
    let mut start = None;
    let bytes: Vec<(usize, char)> = text.char_indices().chain([(text.len(), ' ')]).collect();
    for &(i, c) in &bytes {
        let sep = c.is_whitespace() || c == '∘';
        match (start, sep) {
            (None, false) => start = Some(i),
            (Some(s), true) => {
                out.push(token(&text[s..i], s)?);
                start = None;
            }
            _ => {}
        }
    }
    if out.is_empty() {
        return Err(Error::Syntax { offset: 0, message: "empty operator word".into() });
    }
    Ok(out)
}

fn token(text: &str, offset: usize) -> Result<Token<'_>> {
    let syntax = |at: usize, message: &str| Error::Syntax { offset: offset + at, message: message.into() };
    let (body, inverse) = match text.strip_suffix("^-1") {
        Some(b) => (b, true),
        None => (text, false),
    };
    let (name, arg) = match body.find('(') {
        None => (body, None),
        Some(open) => {
            let inner = body[open + 1..].strip_suffix(')').ok_or_else(|| syntax(body.len(), "expected ')'"))?;
            let arg = inner.trim().parse::<usize>().map_err(|_| syntax(open + 1, "expected an integer argument"))?;
            (&body[..open], Some(arg))
        }
    };
    if name.is_empty() {
        return Err(syntax(0, "expected a generator name"));
    }
    Ok(Token { name, arg, inverse, offset })
}

fn generator(side: Side, tok: &Token<'_>) -> Result<Generator> {
    use Generator as G;
    let unknown = || Error::UnknownSymbol { name: tok.name.to_string(), offset: tok.offset };
    let needs_arg = || Error::Syntax { offset: tok.offset + tok.name.len(), message: format!("{} takes an index argument", tok.name) };
    let i = tok.arg;
    let g = match (side, tok.name, i, tok.inverse) {
        (Side::Finite, "T", Some(i), false) => G::Finite(FiniteKind::T(i)),
        (Side::Finite, "T", Some(i), true) => G::Finite(FiniteKind::Tinv(i)),
        (Side::Finite, "X", Some(i), false) => G::Finite(FiniteKind::X(i)),
        (Side::Finite, "X", Some(i), true) => G::Finite(FiniteKind::Xinv(i)),
        (Side::Finite, "Y", Some(i), false) => G::Finite(FiniteKind::Y(i)),
        (Side::Finite, "Y", Some(i), true) => G::Finite(FiniteKind::Yinv(i)),
        (Side::Finite, "omega", None, false) => G::Finite(FiniteKind::Omega),
        (Side::Finite, "omega", None, true) => G::Finite(FiniteKind::OmegaInv),
        (Side::Finite, "omegatilde", None, false) => G::Finite(FiniteKind::OmegaTilde),
        (Side::Finite, "omegatilde", None, true) => G::Finite(FiniteKind::OmegaTildeInv),
        (Side::Finite, "varpi", None, false) => G::Deformed(DeformedKind::Varpi),
        (Side::Finite, "gamma", None, false) => G::Deformed(DeformedKind::Gamma),
        (Side::Finite, "Y~", Some(i), false) => G::Deformed(DeformedKind::Ytilde(i)),
        (Side::Finite, "W", Some(i), false) => G::Deformed(DeformedKind::W(i)),
        (Side::Finite, "Z~", Some(i), false) => G::Deformed(DeformedKind::Ztilde(i)),

        (Side::AlmostSym, "T", Some(i), false) => G::LimitT(i),
        (Side::AlmostSym, "T", Some(i), true) => G::LimitTinv(i),
        (Side::AlmostSym, "X", Some(i), false) => G::LimitX(i),
        (Side::AlmostSym, "Y", Some(i), false) => G::LimitY(i),
        (Side::AlmostSym, "d", None, false) => G::Partial(PArrowKind::Partial),
        (Side::AlmostSym, "d*", None, false) => G::Partial(PArrowKind::PartialStar),
        (Side::AlmostSym, "d-", None, false) => G::Partial(PArrowKind::PartialMinus),

        (Side::Dyck, "T", Some(i), false) => G::Loop(Loop::T(i)),
        (Side::Dyck, "T", Some(i), true) => G::Loop(Loop::Tinv(i)),
        (Side::Dyck, "y", Some(i), false) => G::Loop(Loop::Y(i)),
        (Side::Dyck, "z", Some(i), false) => G::Loop(Loop::Z(i)),
        (Side::Dyck, "d+", None, false) => G::Arrow(Arrow::Dplus),
        (Side::Dyck, "d+*", None, false) => G::Arrow(Arrow::DplusStar),
        (Side::Dyck, "d-", None, false) => G::Arrow(Arrow::Dminus),

        (_, "T" | "X" | "Y" | "Y~" | "W" | "Z~" | "y" | "z", None, _) if known(side, tok.name) => return Err(needs_arg()),
        _ => return Err(unknown()),
    };
    Ok(g)
}

fn known(side: Side, name: &str) -> bool {
    match side {
        Side::Finite => matches!(name, "T" | "X" | "Y" | "Y~" | "W" | "Z~"),
        Side::AlmostSym => matches!(name, "T" | "X" | "Y"),
        Side::Dyck => matches!(name, "T" | "y" | "z"),
    }
}

/// Parses an operator word for `side`.
pub fn parse_word(text: &str, side: Side) -> Result<OpWord> {
    let letters = tokens(text)?.iter().map(|t| generator(side, t)).collect::<Result<Vec<_>>>()?;
    Ok(OpWord { side, letters })
}

fn mismatch(g: Generator, e: &Element) -> Error {
    Error::Usage(format!("{g:?} does not act on the {} side", e.side()))
}

/// Applies a single generator at the element's current rank.
pub fn apply_generator(g: Generator, e: &Element) -> Result<Element> {
    use Generator as G;
    match (g, e) {
        (G::Finite(kind), Element::Finite(f)) => Ok(Element::Finite(FiniteGenerator::new(kind, f.rank())?.apply(f)?)),
        (G::Deformed(kind), Element::Finite(f)) => Ok(Element::Finite(DeformedGenerator::new(kind, f.rank())?.apply(f)?)),
        (G::LimitT(i), Element::AlmostSym(f)) => {
            limit_index(i, f.rank().saturating_sub(1), f.rank())?;
            Ok(Element::AlmostSym(apply_limit_t(i, f)?))
        }
        (G::LimitTinv(i), Element::AlmostSym(f)) => {
            limit_index(i, f.rank().saturating_sub(1), f.rank())?;
            Ok(Element::AlmostSym(apply_limit_t_inv(i, f)?))
        }
        (G::LimitX(i), Element::AlmostSym(f)) => {
            limit_index(i, f.rank(), f.rank())?;
            Ok(Element::AlmostSym(apply_limit_x(i, f)?))
        }
        (G::LimitY(i), Element::AlmostSym(f)) => {
            limit_index(i, f.rank(), f.rank())?;
            Ok(Element::AlmostSym(apply_limit_y(i, f)?))
        }
        (G::Partial(kind), Element::AlmostSym(f)) => Ok(Element::AlmostSym(apply_parrow(PArrow::new(kind, f.rank()), f)?)),
        (G::Arrow(a), Element::Dyck(f)) => Ok(Element::Dyck(apply_arrow(a, f)?)),
        (G::Loop(l), Element::Dyck(f)) => Ok(Element::Dyck(apply_loop(l, f)?)),
        _ => Err(mismatch(g, e)),
    }
}

fn limit_index(i: usize, bound: usize, rank: usize) -> Result<()> {
    if i == 0 || i > bound {
        Err(Error::IndexOutOfRank { index: i, rank })
    } else {
        Ok(())
    }
}

impl OpWord {
    /// Applies the rightmost letter first.
    pub fn apply(&self, e: &Element) -> Result<Element> {
        if e.side() != self.side {
            return Err(Error::Usage(format!("a {} word cannot act on a {} element", self.side, e.side())));
        }
        self.letters.iter().rev().try_fold(e.clone(), |acc, &g| apply_generator(g, &acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::expr::parse_expr;

    fn run(side: Side, rank: usize, word: &str, expr: &str) -> Result<String> {
        let e = parse_expr(expr, side, rank)?;
        Ok(parse_word(word, side)?.apply(&e)?.to_string())
    }

    #[test]
    fn finite_words() {
        assert_eq!(run(Side::Finite, 2, "Y(1)", "x1").unwrap(), "q*t^-1*x1");
        assert_eq!(run(Side::Finite, 2, "T(1)^-1 T(1)", "x1^2 - q*x2").unwrap(), "x1^2 - q*x2");
        assert_eq!(run(Side::Finite, 2, "X(1)^-1 ∘ X(1)", "x2").unwrap(), "x2");
        assert_eq!(run(Side::Finite, 2, "omega^-1 omega", "x1*x2^3").unwrap(), "x1*x2^3");
    }

    #[test]
    fn arrows_change_rank() {
        assert_eq!(run(Side::AlmostSym, 0, "d", "1").unwrap(), "-x1");
        assert_eq!(run(Side::Dyck, 0, "d- d+", "1").unwrap(), "p[1]");
        assert_eq!(run(Side::Dyck, 1, "d+*", "y1").unwrap(), "y2");
        let e = parse_expr("1", Side::Dyck, 0).unwrap();
        let got = parse_word("d+ d+", Side::Dyck).unwrap().apply(&e).unwrap();
        assert_eq!(got.rank(), 2);
    }

    #[test]
    fn word_errors() {
        assert_eq!(parse_word("T(1) Q(2)", Side::Finite).unwrap_err(), Error::UnknownSymbol { name: "Q".into(), offset: 5 });
        assert_eq!(parse_word("d+", Side::AlmostSym).unwrap_err().kind(), "UnknownSymbol");
        assert_eq!(parse_word("T(x)", Side::Finite).unwrap_err().kind(), "SyntaxError");
        assert_eq!(parse_word("T", Side::Dyck).unwrap_err().kind(), "SyntaxError");
        assert_eq!(parse_word("  ", Side::Dyck).unwrap_err().kind(), "SyntaxError");
        assert_eq!(run(Side::Finite, 2, "T(2)", "x1").unwrap_err(), Error::IndexOutOfRank { index: 2, rank: 2 });
        assert_eq!(run(Side::Dyck, 0, "d-", "1").unwrap_err(), Error::EmptyRankForDminus);
        assert_eq!(run(Side::AlmostSym, 1, "T(1)", "x1").unwrap_err(), Error::IndexOutOfRank { index: 1, rank: 1 });
    }
}
