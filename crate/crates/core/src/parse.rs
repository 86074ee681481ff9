//! Text input: polynomials in `x0, x1, ...`, Hilbert polynomials in `t`, and
//! polynomials over a named parameter alphabet.
//!
//! ```text
//! list   := expr (',' expr)*
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor | '/' number)*
//! factor := atom ['^' integer]
//! atom   := number | name | '(' expr ')'
//! ```
//! Names are `x<digits>`, `t`, or identifiers followed by bracket groups
//! such as `C[x0^2][x1*x2]`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Alphabet, FieldPoly, Monomial, ParamPoly, Rational, Ring};
use crate::error::{Error, Result};
use crate::hilbert::HilbertPoly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(text: &str, base: usize) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let at = base + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, at));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(text[start..i].parse().unwrap()), at));
        } else if c == 'x' && bytes.get(i + 1).is_some_and(|b| b.is_ascii_digit()) {
            // x<digits> stops at the digits so that `x0x1` reads as two names
            let start = i;
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Name(text[start..i].to_string()), at));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            while i < bytes.len() && bytes[i] == b'[' {
                match text[i..].find(']') {
                    Some(k) => i += k + 1,
                    None => return Err(err(base + i, "unclosed '['")),
                }
            }
            out.push((Tok::Name(text[start..i].to_string()), at));
        } else {
            return Err(err(at, format!("unexpected character '{}'", c)));
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    resolve: &'a F,
}

impl<F: Fn(&str) -> Option<usize>> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn expr(&mut self) -> Result<FieldPoly> {
        let mut acc = FieldPoly::zero();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<FieldPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.at();
                    let d = self.factor()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(err(at, "division only by non-zero numbers"));
                    }
                    let inv = d.leading_coeff().unwrap().recip();
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Name(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<FieldPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.at();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| err(at, "exponent too large"))?;
                    if e > u16::MAX as u32 {
                        return Err(err(at, "exponent too large"));
                    }
                    return Ok(base.pow(e));
                }
                _ => return Err(err(at, "expected integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FieldPoly> {
        let at = self.at();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(FieldPoly::constant(Rational::from_integer(n)))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                match (self.resolve)(&name) {
                    Some(i) => Ok(FieldPoly::var(i)),
                    None => Err(err(at, format!("unknown variable '{}'", name))),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(err(self.at(), "expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(t) => Err(err(at, format!("unexpected token {:?}", t))),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

/// Splits at top-level commas, returning pieces with their byte offsets.
fn split_list(text: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((&text[start..i], start));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((&text[start..], start));
    out
}

/// Parses one polynomial, resolving names through `resolve`.
pub fn parse_poly_with(
    text: &str,
    resolve: &impl Fn(&str) -> Option<usize>,
) -> Result<FieldPoly> {
    parse_at(text, 0, resolve)
}

fn parse_at(
    text: &str,
    base: usize,
    resolve: &impl Fn(&str) -> Option<usize>,
) -> Result<FieldPoly> {
    let toks = lex(text, base)?;
    if toks.is_empty() {
        return Err(err(base, "empty polynomial"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: base + text.len(),
        resolve,
    };
    let f = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.at(), "trailing input"));
    }
    Ok(f)
}

/// Comma-separated list; an empty or blank string gives an empty list.
pub fn parse_list_with(
    text: &str,
    resolve: &impl Fn(&str) -> Option<usize>,
) -> Result<Vec<FieldPoly>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_list(text)
        .into_iter()
        .map(|(piece, off)| parse_at(piece, off, resolve))
        .collect()
}

fn x_index(name: &str) -> Option<usize> {
    name.strip_prefix('x')?.parse().ok()
}

/// Polynomials in `x0 .. x{nvars-1}` (no homogeneity requirement).
pub fn parse_polys(text: &str, nvars: usize) -> Result<Vec<FieldPoly>> {
    parse_list_with(text, &|n: &str| x_index(n).filter(|&i| i < nvars))
}

/// Parses an ideal: homogeneous generators in `x0, x1, ...`. Without an
/// explicit `nvars` the ring has one variable past the largest index used.
pub fn parse_ideal(text: &str, nvars: Option<usize>) -> Result<(Ring, Vec<FieldPoly>)> {
    let limit = nvars.unwrap_or(usize::MAX);
    let gens = parse_list_with(text, &|n: &str| x_index(n).filter(|&i| i < limit))?;
    for (g, (piece, off)) in gens.iter().zip(split_list(text)) {
        if !g.is_homogeneous() {
            let lead = piece.len() - piece.trim_start().len();
            return Err(Error::NonHomogeneous(format!(
                "'{}' at offset {}",
                piece.trim(),
                off + lead
            )));
        }
    }
    let n = nvars.unwrap_or_else(|| gens.iter().map(|g| g.span()).max().unwrap_or(0));
    Ok((Ring::new(n), gens))
}

/// A single term such as `x0^2*x3`.
pub fn parse_monomial(text: &str, nvars: usize) -> Result<Monomial> {
    let p = parse_poly_with(text, &|n: &str| x_index(n).filter(|&i| i < nvars))?;
    match p.terms() {
        [(m, c)] if c == &Rational::from_integer(1.into()) => Ok(m.clone()),
        _ => Err(err(0, format!("'{}' is not a term", text))),
    }
}

/// A polynomial in the ring variables whose coefficients involve the
/// parameters of `params`, e.g. `x0^2 + a*x0*x1`.
pub fn parse_param_poly(text: &str, ring: &Ring, params: &Alphabet) -> Result<ParamPoly> {
    let n = ring.nvars();
    let f = parse_poly_with(text, &|name: &str| {
        ring.names()
            .iter()
            .position(|v| v == name)
            .or_else(|| params.get(name).map(|k| n + k))
    })?;
    let terms = f.terms().iter().map(|(m, c)| {
        let mut x = Monomial::one();
        let mut a = Monomial::one();
        for (v, e) in m.support() {
            if v < n {
                x = x.mul(&Monomial::var_pow(v, e));
            } else {
                a = a.mul(&Monomial::var_pow(v - n, e));
            }
        }
        (x, FieldPoly::term(a, c.clone()))
    });
    Ok(ParamPoly::from_terms(terms.collect::<Vec<_>>()))
}

/// A polynomial in the parameters of `params` only.
pub fn parse_in_alphabet(text: &str, params: &Alphabet) -> Result<FieldPoly> {
    parse_poly_with(text, &|name: &str| params.get(name))
}

/// A single term in the variables of `ring`.
pub fn parse_term_in(text: &str, ring: &Ring) -> Result<Monomial> {
    let p = parse_poly_with(text, &|name: &str| ring.names().iter().position(|v| v == name))?;
    match p.terms() {
        [(m, c)] if c == &Rational::from_integer(1.into()) => Ok(m.clone()),
        _ => Err(err(0, format!("'{}' is not a term", text))),
    }
}

/// A Hilbert polynomial in `t`, e.g. `t^2+4t+1`.
pub fn parse_hilbert_poly(text: &str) -> Result<HilbertPoly> {
    let p = parse_poly_with(text, &|n: &str| (n == "t").then_some(0))?;
    let deg = p.degree() as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponent(0) as usize] = c.clone();
    }
    let hp = HilbertPoly::new(coeffs);
    if !hp.is_numerical() {
        return Err(err(0, format!("{} is not integer valued", hp)));
    }
    Ok(hp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_of_the_running_example() {
        let (ring, g) = parse_ideal("x0^2, x0*x1 + x1^2, x0*x2", None).unwrap();
        assert_eq!(ring.nvars(), 3);
        assert_eq!(g.len(), 3);
        assert_eq!(g[1].to_string(), "x0*x1 + x1^2");
        let (ring, g) = parse_ideal("x0^2, x0*x1 + x1^2, x0*x2", Some(4)).unwrap();
        assert_eq!((ring.nvars(), g.len()), (4, 3));
    }

    #[test]
    fn empty_and_errors() {
        assert!(parse_ideal("", None).unwrap().1.is_empty());
        assert!(matches!(
            parse_ideal("x0 + 1", None),
            Err(Error::NonHomogeneous(_))
        ));
        match parse_ideal("x0 + $", None) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{:?}", other),
        }
        assert!(matches!(
            parse_ideal("x0, x5", Some(3)),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(parse_ideal("x0 +", None).is_err());
    }

    #[test]
    fn implicit_products_and_rationals() {
        let g = parse_polys("x0^2x1 - 1/2 x1x2 + 3/4*x2^3", 3).unwrap();
        assert_eq!(g[0].to_string(), "x0^2*x1 + 3/4*x2^3 - 1/2*x1*x2");
        let h = parse_hilbert_poly("t^2+4t+1").unwrap();
        assert_eq!(h, HilbertPoly::from_ints(&[1, 4, 1]));
        assert!(parse_hilbert_poly("t/2").is_err());
        assert_eq!(parse_hilbert_poly("(t+1)(t+2)/2").unwrap(), HilbertPoly::binomial(2, 2));
    }

    #[test]
    fn bracket_names() {
        let names = ["C[x0^2][x1*x2]".to_string(), "a".to_string()];
        let r = |n: &str| names.iter().position(|m| m == n);
        let p = parse_poly_with("2*C[x0^2][x1*x2]*a - a^2", &r).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn print_parse_round_trip() {
        let g = parse_polys("x0^2 - 1/3*x0*x3 + 7*x2^2, x1", 4).unwrap();
        let text: Vec<String> = g.iter().map(|p| p.to_string()).collect();
        let again = parse_polys(&text.join(", "), 4).unwrap();
        assert_eq!(g, again);
    }
}
