//! Recursive-descent parser for polynomials over F_p[t].
//!
//! Grammar: `expr := term (('+' | '-') term)*`, `term := unary ('*' unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' integer)?`,
//! `atom := integer | identifier | '(' expr ')'`. The identifier `t` is the
//! function-field variable; integer literals are reduced mod p.

use crate::error::{Error, Result};
use crate::ffalg::{var_list, MultiPoly, PrimeField, UniPoly, VarList};

/// Exponents above this are rejected as overflow.
pub const MAX_EXPONENT: u64 = u16::MAX as u64;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
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

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
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
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, line: l0, column: c0 });
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Num(s), line: l0, column: c0 });
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Ident(s), line: l0, column: c0 });
        } else {
            return Err(err(l0, c0, format!("unexpected character '{c}'")));
        }
        col += i - start;
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    field: PrimeField,
    vars: &'a VarList,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn constant(&self, c: UniPoly) -> MultiPoly<UniPoly> {
        MultiPoly::constant(c, self.vars.clone())
    }

    fn expr(&mut self) -> Result<MultiPoly<UniPoly>> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<UniPoly>> {
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly<UniPoly>> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly<UniPoly>> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.next();
        let t = self.next();
        match t.tok {
            Tok::Num(s) => {
                let e: u64 = s.parse().map_err(|_| Error::ExponentOverflow)?;
                if e > MAX_EXPONENT {
                    return Err(Error::ExponentOverflow);
                }
                Ok(base.pow(e as u32))
            }
            _ => Err(err(caret.line, caret.column, "expected an exponent after '^'")),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly<UniPoly>> {
        let t = self.next();
        match t.tok {
            Tok::Num(s) => {
                let p = self.field.p() as u128;
                let v = s.bytes().fold(0u128, |acc, d| (acc * 10 + (d - b'0') as u128) % p);
                Ok(self.constant(UniPoly::from_raw(self.field, vec![v as u64])))
            }
            Tok::Ident(name) => {
                if name == "t" {
                    return Ok(self.constant(UniPoly::t(self.field)));
                }
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(MultiPoly::var(self.field, self.vars.clone(), i)),
                    None => Err(Error::UnknownVariable(name)),
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(err(close.line, close.column, "expected ')'"));
                }
                Ok(inner)
            }
            Tok::End => Err(err(t.line, t.column, "unexpected end of input")),
            other => Err(err(t.line, t.column, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(s) => format!("number {s}"),
        Tok::Ident(s) => format!("identifier {s}"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

/// Parses `text` with the given variable list.
pub fn parse_poly(text: &str, field: PrimeField, vars: &VarList) -> Result<MultiPoly<UniPoly>> {
    if vars.iter().any(|v| v == "t") {
        return Err(Error::Invalid("'t' is reserved for the function-field variable".into()));
    }
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, field, vars };
    let out = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return Err(err(t.line, t.column, format!("unexpected {}", describe(&t.tok))));
    }
    Ok(out)
}

/// Identifiers other than `t`, in natural order (`x2` before `x10`).
pub fn collect_vars(texts: &[&str]) -> Result<Vec<String>> {
    let mut names = Vec::new();
    for text in texts {
        for tok in lex(text)? {
            if let Tok::Ident(s) = tok.tok {
                if s != "t" && !names.contains(&s) {
                    names.push(s);
                }
            }
        }
    }
    names.sort_by_key(|a| natural_key(a));
    Ok(names)
}

fn natural_key(s: &str) -> (String, u64, usize) {
    let digits = s.len() - s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (stem, num) = s.split_at(s.len() - digits);
    (stem.to_string(), num.parse().unwrap_or(0), digits)
}

/// Parses with variables discovered from the text itself.
pub fn parse_poly_auto(text: &str, field: PrimeField) -> Result<MultiPoly<UniPoly>> {
    let vars = var_list(&collect_vars(&[text])?);
    parse_poly(text, field, &vars)
}
