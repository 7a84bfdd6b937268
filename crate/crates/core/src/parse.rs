//! The ideal text format.
//!
//! ```text
//! ring x, y, z
//! ideal x^4, x^3 y, x y^3, y^4, x^2 y^2 z
//! ```
//!
//! Layout is free: tokens may be split across lines arbitrarily. Factors of
//! a monomial are juxtaposed or joined by `*`; `^1` is optional; `1` is the
//! unit monomial and `0` the zero ideal. `#` starts a comment.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{self, Monomial};
use crate::ring::RingSignature;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Comma,
    Caret,
    Star,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<(Vec<Token>, (usize, usize))> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let tok = match c {
            ',' => Tok::Comma,
            '^' => Tok::Caret,
            '*' => Tok::Star,
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    col += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                let v = s
                    .parse::<u64>()
                    .map_err(|_| err(l0, c0, format!("integer `{s}` out of range")))?;
                Tok::Int(v)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i + 1 < chars.len()
                    && (chars[i + 1].is_ascii_alphanumeric()
                        || chars[i + 1] == '_'
                        || chars[i + 1] == '\'')
                {
                    i += 1;
                    col += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => return Err(err(l0, c0, format!("unexpected character `{other}`"))),
        };
        out.push(Token {
            tok,
            line: l0,
            column: c0,
        });
        i += 1;
        col += 1;
    }
    Ok((out, (line, col)))
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    eof: (usize, usize),
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        let (toks, eof) = tokenize(src)?;
        Ok(Parser { toks, pos: 0, eof })
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map(|t| (t.line, t.column)).unwrap_or(self.eof)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(err(l, c, message))
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Token {
                tok: Tok::Ident(s), ..
            }) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail(format!("expected `{kw}`")),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn ring(&mut self) -> Result<RingSignature> {
        let mut vars: Vec<(String, usize, usize)> = Vec::new();
        loop {
            match self.next() {
                Some(Token {
                    tok: Tok::Ident(s),
                    line,
                    column,
                }) if s != "ideal" => {
                    if vars.iter().any(|(v, _, _)| *v == s) {
                        return Err(err(line, column, format!("variable `{s}` listed twice")));
                    }
                    vars.push((s, line, column));
                }
                _ => {
                    self.pos -= 1;
                    return self.fail("expected a variable name");
                }
            }
            match self.peek() {
                Some(Token {
                    tok: Tok::Comma, ..
                }) => self.pos += 1,
                _ => break,
            }
        }
        let names: Vec<&str> = vars.iter().map(|(v, _, _)| v.as_str()).collect();
        RingSignature::new(&names).map_err(|e| {
            let (_, l, c) = &vars[0];
            err(*l, *c, e.to_string())
        })
    }

    fn monomial(&mut self, ring: &RingSignature) -> Result<Vec<u32>> {
        let mut exps = vec![0u32; ring.len()];
        if let Some(Token {
            tok: Tok::Int(v),
            line,
            column,
        }) = self.peek().cloned()
        {
            self.pos += 1;
            if v != 1 {
                return Err(err(line, column, format!("`{v}` is not a monomial")));
            }
            return Ok(exps);
        }
        let mut factors = 0;
        loop {
            match self.peek().cloned() {
                Some(Token {
                    tok: Tok::Ident(name),
                    line,
                    column,
                }) => {
                    self.pos += 1;
                    let v = ring
                        .index_of(&name)
                        .ok_or_else(|| err(line, column, format!("unknown variable `{name}`")))?;
                    let mut e: u64 = 1;
                    if matches!(
                        self.peek(),
                        Some(Token {
                            tok: Tok::Caret,
                            ..
                        })
                    ) {
                        self.pos += 1;
                        match self.next() {
                            Some(Token {
                                tok: Tok::Int(k), ..
                            }) => e = k,
                            _ => {
                                self.pos -= 1;
                                return self.fail("expected an exponent after `^`");
                            }
                        }
                    }
                    if e > monomial::MAX_EXPONENT as u64 {
                        return Err(err(line, column, "exponent too large"));
                    }
                    exps[v] = monomial::checked_add(exps[v], e as u32)
                        .map_err(|_| err(line, column, "exponent too large"))?;
                    factors += 1;
                }
                Some(Token { tok: Tok::Star, .. }) if factors > 0 => {
                    self.pos += 1;
                    if !matches!(
                        self.peek(),
                        Some(Token {
                            tok: Tok::Ident(_),
                            ..
                        })
                    ) {
                        return self.fail("expected a variable after `*`");
                    }
                }
                _ => break,
            }
        }
        if factors == 0 {
            return self.fail("expected a monomial");
        }
        Ok(exps)
    }

    fn generators(&mut self, ring: &RingSignature) -> Result<MonomialIdeal> {
        if let Some(Token {
            tok: Tok::Int(0), ..
        }) = self.peek()
        {
            self.pos += 1;
            return Ok(MonomialIdeal::zero(ring));
        }
        let mut rows = Vec::new();
        loop {
            rows.push(self.monomial(ring)?);
            match self.peek() {
                Some(Token {
                    tok: Tok::Comma, ..
                }) => self.pos += 1,
                _ => break,
            }
        }
        MonomialIdeal::from_exponents(ring, &rows)
    }

    fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.fail("unexpected trailing input")
        }
    }
}

/// Parses a complete ideal file (`ring ...` then `ideal ...`).
pub fn parse_ideal_file(src: &str) -> Result<MonomialIdeal> {
    let mut p = Parser::new(src)?;
    p.keyword("ring")?;
    let ring = p.ring()?;
    p.keyword("ideal")?;
    let ideal = p.generators(&ring)?;
    p.finish()?;
    Ok(ideal)
}

/// Canonical text form of an ideal; `parse_ideal_file` inverts it.
pub fn format_ideal_file(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = if ideal.is_zero() {
        vec!["0".into()]
    } else {
        ideal.generators().map(|g| g.to_string()).collect()
    };
    format!(
        "ring {}\nideal {}\n",
        ideal.ring().variables().join(", "),
        gens.join(", ")
    )
}

pub fn parse_ring(src: &str) -> Result<RingSignature> {
    let mut p = Parser::new(src)?;
    let ring = p.ring()?;
    p.finish()?;
    Ok(ring)
}

/// Parses a comma-separated generator list over a known ring.
pub fn parse_ideal_in(ring: &RingSignature, src: &str) -> Result<MonomialIdeal> {
    let mut p = Parser::new(src)?;
    let ideal = p.generators(ring)?;
    p.finish()?;
    Ok(ideal)
}

pub fn parse_monomial_in(ring: &RingSignature, src: &str) -> Result<Monomial> {
    let mut p = Parser::new(src)?;
    let exps = p.monomial(ring)?;
    p.finish()?;
    Monomial::new(ring, exps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_the_reference_file() {
        let src = "ring x, y, z\nideal x^4, x^3 y, x y^3, y^4, x^2 y^2 z\n";
        let i = parse_ideal_file(src).unwrap();
        assert_eq!(i.len(), 5);
        assert_eq!(i.ring().variables(), &["x", "y", "z"]);
        let again = parse_ideal_file(&format_ideal_file(&i)).unwrap();
        assert_eq!(again, i);
    }

    #[test]
    fn layout_is_free() {
        let a = parse_ideal_file("ring x,y ideal x^2*y,\n  y^3 # comment\n").unwrap();
        let b = parse_ideal_file("ring x, y\nideal x^2 y, y^3").unwrap();
        assert_eq!(a, b);
        let c = parse_ideal_file("ring x,y\nideal x^2y").unwrap();
        assert_eq!(c.row(0), &[2, 1]);
    }

    #[test]
    fn unit_and_zero() {
        assert!(parse_ideal_file("ring x\nideal 1").unwrap().is_unit());
        assert!(parse_ideal_file("ring x\nideal 0").unwrap().is_zero());
        let z = parse_ideal_file("ring x\nideal 0").unwrap();
        assert_eq!(format_ideal_file(&z), "ring x\nideal 0\n");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_ideal_file("ring x, y\nideal x^") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 9)),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_ideal_file("ring x, y\nideal x, w^2") {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => {
                assert_eq!((line, column), (2, 10));
                assert!(message.contains("unknown variable"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_ideal_file("ideal x"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ideal_file("ring x\nideal 2"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ideal_file("ring x, x\nideal x"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ideal_file("ring x\nideal x, "),
            Err(Error::Parse { .. })
        ));
    }

    proptest! {
        #[test]
        fn print_parse_is_canonical(rows in proptest::collection::vec(proptest::collection::vec(0u32..5, 3), 1..6)) {
            let ring = RingSignature::new(&["a", "b", "c"]).unwrap();
            let i = MonomialIdeal::from_exponents(&ring, &rows).unwrap();
            let text = format_ideal_file(&i);
            let back = parse_ideal_file(&text).unwrap();
            prop_assert_eq!(&back, &i);
            prop_assert_eq!(format_ideal_file(&back), text);
        }
    }
}
