//! Text form of polynomials in the matrix variables:
//!
//! ```text
//! poly    := ['-'] term (('+'|'-') term)*
//! term    := coeff | coeff '*' factors | factors
//! factors := factor ('*' factor)*
//! factor  := var ['^' uint]
//! var     := 'x[' uint ',' uint ']'
//! coeff   := uint | uint '/' uint        (fractions over Q only)
//! ```
//!
//! Whitespace is ignored everywhere.

use std::sync::Arc;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

struct Parser<'a, F: Field> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing<F>>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.err(format!("expected `{}`, found `{}`", c as char, d as char)),
            None => self.err(format!("expected `{}`, found end of input", c as char)),
        }
    }

    fn uint(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.src.get(self.pos) {
                Some(&d) => self.err(format!("expected an integer, found `{}`", d as char)),
                None => self.err("expected an integer, found end of input"),
            };
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let at = self.pos;
        self.uint()?
            .parse()
            .map_err(|_| Error::Syntax { pos: at, msg: "integer too large".into() })
    }

    /// Parses `x[i,j]` and returns the variable index and sign.
    fn var(&mut self) -> Result<(usize, bool)> {
        self.expect(b'x')?;
        self.expect(b'[')?;
        let i = self.small_uint()?;
        self.expect(b',')?;
        let j = self.small_uint()?;
        self.expect(b']')?;
        self.ring.table().resolve(i, j)
    }

    fn factors(&mut self, exps: &mut [u32], negated: &mut bool) -> Result<()> {
        loop {
            let (k, neg) = self.var()?;
            let mut e = 1u32;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let at = self.pos;
                e = self
                    .uint()?
                    .parse()
                    .map_err(|_| Error::Syntax { pos: at, msg: "exponent too large".into() })?;
            }
            exps[k] += e;
            if neg && e % 2 == 1 {
                *negated = !*negated;
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(());
            }
        }
    }

    fn term(&mut self) -> Result<(Monomial, F::Elem)> {
        let field = self.ring.field();
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut negated = false;
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    Some(self.uint()?)
                } else {
                    None
                };
                let c = field.parse_elem(num, den)?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.factors(&mut exps, &mut negated)?;
                }
                c
            }
            Some(b'x') => {
                self.factors(&mut exps, &mut negated)?;
                field.one()
            }
            Some(c) => return self.err(format!("expected a term, found `{}`", c as char)),
            None => return self.err("expected a term, found end of input"),
        };
        let coeff = if negated { field.neg(&coeff) } else { coeff };
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn poly(&mut self) -> Result<Polynomial<F>> {
        let field = self.ring.field();
        let mut terms = Vec::new();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negative = true;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negative { field.neg(&c) } else { c }));
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(c) => return self.err(format!("unexpected `{}`", c as char)),
                None => break,
            }
            self.pos += 1;
        }
        Ok(self.ring.from_terms(terms))
    }
}

/// Parses a polynomial over `ring`.
pub fn parse_poly<F: Field>(text: &str, ring: &Arc<PolyRing<F>>) -> Result<Polynomial<F>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    p.poly()
}

/// Canonical text: terms in descending order, explicit signs between them.
pub fn print_poly<F: Field>(f: &Polynomial<F>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let ring = f.ring();
    let field = ring.field();
    let mut out = String::new();
    for (idx, (m, c)) in f.terms().iter().enumerate() {
        let (negative, mag) = field.format_elem(c);
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&format_term(ring, m, &mag));
    }
    out
}

fn format_term<F: Field>(ring: &PolyRing<F>, m: &Monomial, mag: &str) -> String {
    let mut factors: Vec<String> = Vec::new();
    if mag != "1" || m.is_one() {
        factors.push(mag.to_string());
    }
    for (k, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => factors.push(ring.table().name(k)),
            _ => factors.push(format!("{}^{e}", ring.table().name(k))),
        }
    }
    factors.join("*")
}

/// Prints a bare monomial, `1` for the empty product.
pub fn print_monomial<F: Field>(ring: &PolyRing<F>, m: &Monomial) -> String {
    format_term(ring, m, "1")
}
