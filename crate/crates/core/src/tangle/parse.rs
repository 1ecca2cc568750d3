//! Text syntax for tangle expressions and ribbon braids.
//!
//! ```text
//! expr  := "u" | "(id N)" | "(cap I N)" | "(cup I N)" | "(p I J N)"
//!        | "(comp SLOT expr expr)" | "(act expr BRAID)"
//! BRAID := "rb(" N ")[" (("e"|"e'"|"t"|"t'") K)* "]"
//! ```
//!
//! The `Display` impls of [`TangleExpr`] and [`RibbonBraid`] print exactly this
//! grammar with single spaces.

use crate::error::{Error, Result};
use crate::ribbon_braid::{Letter, RibbonBraid};
use crate::tangle::{infer_type, Generator, TangleExpr};

/// Parse and type-check an expression.
pub fn parse_expr(text: &str) -> Result<TangleExpr> {
    let mut s = Scanner::new(text);
    let e = s.expr()?;
    s.end()?;
    infer_type(&e)?;
    Ok(e)
}

pub(crate) struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn word(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .find(|c: char| !(c.is_ascii_alphabetic() || c == '\''))
            .unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected a keyword");
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected a non-negative integer");
        }
        let n = rest[..len].parse().or_else(|_| self.err("integer too large"))?;
        self.pos += len;
        Ok(n)
    }

    pub(crate) fn end(&mut self) -> Result<()> {
        if self.peek().is_some() {
            self.err("unexpected trailing input")
        } else {
            Ok(())
        }
    }

    pub(crate) fn expr(&mut self) -> Result<TangleExpr> {
        match self.peek() {
            Some('(') => {}
            Some('u') => {
                let start = self.pos;
                if self.word()? == "u" {
                    return Ok(TangleExpr::Gen(Generator::Unit));
                }
                self.pos = start;
                return self.err("expected `u` or `(`");
            }
            _ => return self.err("expected `u` or `(`"),
        }
        self.expect('(')?;
        let start = self.pos;
        let head = self.word()?;
        let e = match head {
            "id" => TangleExpr::id(self.number()?),
            "cap" => {
                let i = self.number()?;
                TangleExpr::cap(i, self.number()?)
            }
            "cup" => {
                let i = self.number()?;
                TangleExpr::cup(i, self.number()?)
            }
            "p" => {
                let i = self.number()?;
                let j = self.number()?;
                TangleExpr::pin(i, j, self.number()?)
            }
            "comp" => {
                let slot = self.number()?;
                let a = self.expr()?;
                let b = self.expr()?;
                TangleExpr::comp(a, slot, b)
            }
            "act" => {
                let a = self.expr()?;
                let b = self.braid()?;
                TangleExpr::act(a, b)
            }
            _ => {
                self.pos = start;
                return self.err(format!("unknown form `{head}`"));
            }
        };
        self.expect(')')?;
        Ok(e)
    }

    pub(crate) fn braid(&mut self) -> Result<RibbonBraid> {
        self.skip_ws();
        if !self.rest().starts_with("rb") {
            return self.err("expected `rb(`");
        }
        self.pos += 2;
        self.expect('(')?;
        let n = self.number()?;
        self.expect(')')?;
        self.expect('[')?;
        let mut word = Vec::new();
        loop {
            if self.peek() == Some(']') {
                self.pos += 1;
                break;
            }
            let at = self.pos;
            let w = self.word()?;
            let k = self.number()?;
            let letter = match w {
                "e" => Letter::E(k),
                "e'" => Letter::EInv(k),
                "t" => Letter::T(k),
                "t'" => Letter::TInv(k),
                _ => {
                    self.pos = at;
                    return self.err(format!("unknown braid letter `{w}`"));
                }
            };
            word.push(letter);
        }
        RibbonBraid::from_word(n, &word)
    }
}
