//! Object expressions:
//!
//! ```text
//! P(i)  P(i,j)  Pk(k,i,j)  shift(X,k,l)  sum(X,Y,...)
//! act(s1,s2^-1,garside,X)  cone(X,Y[,m])  coneid(X)
//! ```
//!
//! `cone(X,Y,m)` is the cone of the `m`-th basis map of `Hom(X,Y)` (default 0).

use crate::braid::{apply_word, BraidWord};
use crate::complex::{cone, ChainMap, ProjComplex};
use crate::error::{Error, Result};
use crate::homotopy::{hom, reduce};
use crate::stability::tau_k_complex;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Open,
    Close,
    Comma,
    Caret,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '(' | ')' | ',' | '^' => {
                out.push((
                    i,
                    match c {
                        '(' => Tok::Open,
                        ')' => Tok::Close,
                        ',' => Tok::Comma,
                        _ => Tok::Caret,
                    },
                ));
                i += 1;
            }
            '-' | '0'..='9' => {
                let st = i;
                i += 1;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let v = s[st..i]
                    .parse()
                    .map_err(|_| Error::Parse { pos: st, msg: format!("bad integer '{}'", &s[st..i]) })?;
                out.push((st, Tok::Int(v)));
            }
            c if c.is_ascii_alphabetic() => {
                let st = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                out.push((st, Tok::Ident(s[st..i].to_string())));
            }
            _ => return Err(Error::Parse { pos: i, msg: format!("unexpected character '{c}'") }),
        }
    }
    Ok(out)
}

struct Parser {
    n: usize,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            let want = match t {
                Tok::Open => "'('",
                Tok::Close => "')'",
                Tok::Comma => "','",
                Tok::Caret => "'^'",
                Tok::Ident(_) | Tok::Int(_) => "a token",
            };
            self.err(format!("expected {want}"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn index(&mut self) -> Result<usize> {
        let at = self.here();
        let v = self.int()?;
        usize::try_from(v).map_err(|_| Error::Parse { pos: at, msg: format!("index {v} must be nonnegative") })
    }

    fn at_err<T>(&self, at: usize, e: Error) -> Result<T> {
        Err(Error::Parse { pos: at, msg: e.to_string() })
    }

    fn expr(&mut self) -> Result<ProjComplex> {
        let at = self.here();
        let name = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return self.err("expected an object"),
        };
        self.pos += 1;
        self.expect(Tok::Open)?;
        let out = match name.as_str() {
            "P" => {
                let i = self.index()?;
                if self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    let j = self.index()?;
                    tau_k_complex(self.n, 0, i, j).or_else(|e| self.at_err(at, e))?
                } else {
                    ProjComplex::proj(self.n, i, 0, 0).or_else(|e| self.at_err(at, e))?
                }
            }
            "Pk" => {
                let k = self.index()?;
                self.expect(Tok::Comma)?;
                let i = self.index()?;
                self.expect(Tok::Comma)?;
                let j = self.index()?;
                tau_k_complex(self.n, k, i, j).or_else(|e| self.at_err(at, e))?
            }
            "shift" => {
                let x = self.expr()?;
                self.expect(Tok::Comma)?;
                let k = self.int()? as i32;
                self.expect(Tok::Comma)?;
                let l = self.int()? as i32;
                x.shift(k, l)
            }
            "sum" => {
                let mut acc = self.expr()?;
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    acc = acc.direct_sum(&self.expr()?)?;
                }
                acc
            }
            "act" => {
                let mut letters = Vec::new();
                loop {
                    let is_letter = match (self.peek(), self.toks.get(self.pos + 1).map(|t| &t.1)) {
                        (Some(Tok::Ident(s)), next) => {
                            next != Some(&Tok::Open) && (s == "garside" || s.starts_with('s'))
                        }
                        _ => false,
                    };
                    if !is_letter {
                        break;
                    }
                    let lat = self.here();
                    let Some(Tok::Ident(s)) = self.peek().cloned() else { unreachable!() };
                    self.pos += 1;
                    let mut tok = s;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        tok = format!("{tok}^{}", self.int()?);
                    }
                    let w =
                        BraidWord::parse(&tok, self.n).map_err(|e| Error::Parse { pos: lat, msg: e.to_string() })?;
                    letters.extend_from_slice(w.letters());
                    self.expect(Tok::Comma)?;
                }
                let x = self.expr()?;
                apply_word(&BraidWord::new(self.n, letters)?, &x)?
            }
            "cone" => {
                let x = reduce(&self.expr()?);
                self.expect(Tok::Comma)?;
                let y = reduce(&self.expr()?);
                let mut m = 0;
                if self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    m = self.index()?;
                }
                let h = hom(&x, &y, 0, 0);
                let Some(f) = h.basis.get(m) else {
                    return Err(Error::Parse {
                        pos: at,
                        msg: format!("Hom space has dimension {}, no map {m}", h.dim),
                    });
                };
                cone(f).object
            }
            "coneid" => {
                let x = self.expr()?;
                cone(&ChainMap::identity(&x)).object
            }
            other => return Err(Error::Parse { pos: at, msg: format!("unknown constructor '{other}'") }),
        };
        self.expect(Tok::Close)?;
        Ok(out)
    }
}

/// Parses and evaluates an object expression (unreduced).
pub fn parse_object(text: &str, n: usize) -> Result<ProjComplex> {
    let toks = lex(text)?;
    let mut p = Parser { n, toks, pos: 0, end: text.len() };
    let x = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(x)
}
