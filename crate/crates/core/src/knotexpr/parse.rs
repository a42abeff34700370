//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! E := unknot | torus(n,n) | seifert([[n,..],..]) | mirror(E) | sum(E,E)
//!    | cable(n,n,E) | wh(E,n) | satellite(E,E,n)
//! ```

use super::{KnotExpr, KnotExprError};
use num_bigint::BigInt;

use crate::algebra::IntMatrix;
use crate::seifert::{SeifertError, SeifertMatrix};

pub(super) fn parse(src: &str) -> Result<KnotExpr, KnotExprError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error("trailing input"));
    }
    e.validate()?;
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> KnotExprError {
        KnotExprError::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), KnotExprError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<&str, KnotExprError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.error("expected an expression"));
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn big(&mut self) -> Result<BigInt, KnotExprError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return Err(self.error("expected an integer"));
        }
        self.pos = end;
        self.src[start..end].parse().map_err(|_| self.error("bad integer"))
    }

    fn int(&mut self) -> Result<i64, KnotExprError> {
        let start = self.pos;
        let n = self.big()?;
        i64::try_from(n).map_err(|_| KnotExprError::Parse {
            offset: start,
            message: "integer out of range".into(),
        })
    }

    fn expr(&mut self) -> Result<KnotExpr, KnotExprError> {
        let start = self.pos;
        let name = self.ident()?.to_ascii_lowercase();
        if name == "unknot" {
            return Ok(KnotExpr::Unknot);
        }
        self.expect('(')?;
        let e = match name.as_str() {
            "torus" => {
                let p = self.int()?;
                self.expect(',')?;
                KnotExpr::Torus(p, self.int()?)
            }
            "seifert" => KnotExpr::Seifert(self.matrix()?),
            "mirror" => KnotExpr::mirror(self.expr()?),
            "sum" => {
                let a = self.expr()?;
                self.expect(',')?;
                KnotExpr::sum(a, self.expr()?)
            }
            "cable" => {
                let r = self.int()?;
                self.expect(',')?;
                let s = self.int()?;
                self.expect(',')?;
                KnotExpr::cable(r, s, self.expr()?)
            }
            "wh" => {
                let e = self.expr()?;
                self.expect(',')?;
                KnotExpr::whitehead(e, self.int()?)
            }
            "satellite" => {
                let p = self.expr()?;
                self.expect(',')?;
                let c = self.expr()?;
                self.expect(',')?;
                KnotExpr::satellite(p, c, self.int()?)
            }
            _ => {
                return Err(KnotExprError::Parse {
                    offset: start,
                    message: format!("unknown constructor '{name}'"),
                })
            }
        };
        self.expect(')')?;
        Ok(e)
    }

    fn matrix(&mut self) -> Result<SeifertMatrix, KnotExprError> {
        let start = self.pos;
        self.expect('[')?;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        if self.peek() != Some(']') {
            loop {
                self.expect('[')?;
                let mut row = Vec::new();
                if self.peek() != Some(']') {
                    loop {
                        row.push(self.big()?);
                        if self.peek() == Some(',') {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                }
                self.expect(']')?;
                rows.push(row);
                if self.peek() == Some(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(']')?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(KnotExprError::Parse {
                offset: start,
                message: "Seifert matrix rows must all have length equal to the row count".into(),
            });
        }
        let m = IntMatrix::from_big_rows(rows).map_err(SeifertError::from)?;
        Ok(SeifertMatrix::new(m)?)
    }
}
