//! Polynomial literals: `T^2+2*T+1`, `(u+1)*T+u`, `x^2 - (T^2 - 1)`.
//!
//! Sums, differences, products (explicit `*` or juxtaposition), nonnegative
//! integer powers and parentheses over integers and the variables `T`, `u`
//! (generator of `F_q` over `F_p`) and, for field equations, `x`.

use super::bipoly::BiPoly;
use super::field::{FqElem, FqField};
use super::poly::FqPoly;
use super::FfError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, FfError> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(&d) = chars.peek() {
                    let Some(v) = d.to_digit(10) else { break };
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(v as u64))
                        .ok_or_else(|| FfError::Parse(format!("integer too large in {s:?}")))?;
                    chars.next();
                }
                out.push(Tok::Num(n));
            }
            'T' | 'u' | 'x' => {
                out.push(Tok::Ident(c));
                chars.next();
            }
            '+' => {
                out.push(Tok::Plus);
                chars.next();
            }
            '-' | '\u{2212}' => {
                out.push(Tok::Minus);
                chars.next();
            }
            '*' => {
                out.push(Tok::Star);
                chars.next();
            }
            '^' => {
                out.push(Tok::Caret);
                chars.next();
            }
            '(' => {
                out.push(Tok::LParen);
                chars.next();
            }
            ')' => {
                out.push(Tok::RParen);
                chars.next();
            }
            other => return Err(FfError::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a FqField,
    allow_x: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<BiPoly, FfError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, FfError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.power()?);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<BiPoly, FfError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Num(e)) => Ok(base.pow(e)),
                other => Err(FfError::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<BiPoly, FfError> {
        let f = self.field;
        match self.bump() {
            Some(Tok::Num(n)) => {
                let c = FqElem(n % f.characteristic());
                Ok(BiPoly::constant(FqPoly::constant(f, c)))
            }
            Some(Tok::Ident('T')) => Ok(BiPoly::constant(FqPoly::var(f))),
            Some(Tok::Ident('u')) => match f.generator() {
                Some(u) => Ok(BiPoly::constant(FqPoly::constant(f, u))),
                None => Err(FfError::Parse(format!("`u` is not defined over the prime field {f}"))),
            },
            Some(Tok::Ident('x')) if self.allow_x => Ok(BiPoly::var(f)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    other => Err(FfError::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(FfError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_with(field: &FqField, s: &str, allow_x: bool) -> Result<BiPoly, FfError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(FfError::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0, field, allow_x };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(FfError::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

/// Parses a polynomial in `T` over `field`.
pub fn parse_poly(field: &FqField, s: &str) -> Result<FqPoly, FfError> {
    let bi = parse_with(field, s, false)?;
    Ok(bi.coeff(0))
}

/// Parses a polynomial in `x` with coefficients in `F_q[T]`.
pub fn parse_bipoly(field: &FqField, s: &str) -> Result<BiPoly, FfError> {
    parse_with(field, s, true)
}

fn needs_parens(s: &str) -> bool {
    s.contains('+') || s.contains('-')
}

fn monomial(var: &str, i: usize) -> String {
    match i {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{i}"),
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Canonical rendering, highest degree first; `parse_poly` inverts it.
pub fn format_poly(f: &FqPoly, var: &str) -> String {
    let field = f.field();
    let mut terms = Vec::new();
    for (i, &c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = monomial(var, i);
        let cs = field.format_elem(c);
        terms.push(if mono.is_empty() {
            cs
        } else if c == FqElem::ONE {
            mono
        } else if needs_parens(&cs) {
            format!("({cs})*{mono}")
        } else {
            format!("{cs}*{mono}")
        });
    }
    join_terms(terms)
}

pub fn format_bipoly(g: &BiPoly) -> String {
    let mut terms = Vec::new();
    for (i, c) in g.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = monomial("x", i);
        let cs = format_poly(c, "T");
        terms.push(if mono.is_empty() {
            cs
        } else if c.is_one() {
            mono
        } else if needs_parens(&cs) {
            format!("({cs})*{mono}")
        } else {
            format!("{cs}*{mono}")
        });
    }
    join_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_prime_field_literals() {
        let f3 = FqField::prime(3).unwrap();
        let p = parse_poly(&f3, "T^2+2*T+1").unwrap();
        assert_eq!(p, FqPoly::from_ints(&f3, &[1, 2, 1]));
        assert_eq!(parse_poly(&f3, "(T+1)^2").unwrap(), p);
        assert_eq!(parse_poly(&f3, "-T").unwrap().to_string(), "2*T");
        assert_eq!(parse_poly(&f3, "T\u{2212}1").unwrap().to_string(), "T+2");
    }

    #[test]
    fn parses_extension_coefficients() {
        let f4 = FqField::new(2, 2).unwrap();
        let p = parse_poly(&f4, "(u+1)*T+u").unwrap();
        assert_eq!(p.to_string(), "(u+1)*T+u");
        assert_eq!(parse_poly(&f4, "u*u").unwrap().to_string(), "u+1");
        let f9 = FqField::new(3, 2).unwrap();
        let p = parse_poly(&f9, "2*u*T^2+(u+2)").unwrap();
        assert_eq!(parse_poly(&f9, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn parses_field_equations() {
        let f5 = FqField::prime(5).unwrap();
        let g = parse_bipoly(&f5, "x^2 - (T^2 - 1)").unwrap();
        assert_eq!(g.deg(), 2);
        assert_eq!(g.coeff(0), FqPoly::from_ints(&f5, &[1, 0, -1]));
        assert_eq!(g.to_string(), "x^2+4*T^2+1");
        assert_eq!(parse_bipoly(&f5, &g.to_string()).unwrap(), g);
        let h = parse_bipoly(&f5, "x^3 + (T+1)*x + 2T").unwrap();
        assert_eq!(h.to_string(), "x^3+(T+1)*x+2*T");
    }

    #[test]
    fn rejects_malformed_input() {
        let f3 = FqField::prime(3).unwrap();
        assert!(parse_poly(&f3, "").is_err());
        assert!(parse_poly(&f3, "T+").is_err());
        assert!(parse_poly(&f3, "(T+1").is_err());
        assert!(parse_poly(&f3, "u*T").is_err());
        assert!(parse_poly(&f3, "x+1").is_err());
        assert!(parse_poly(&f3, "T^").is_err());
        assert!(parse_poly(&f3, "T$").is_err());
    }
}
