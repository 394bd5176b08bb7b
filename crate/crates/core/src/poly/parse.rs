//! Text form of polynomials over `F_p`.
//!
//! ```text
//! poly    := sign? term (sign term)*
//! term    := coeff ('*' varpow)* | varpow ('*' varpow)*
//! varpow  := var ('^' exp)?
//! var     := [a-z][0-9]*
//! coeff   := integer          (reduced mod p)
//! ```
//!
//! Whitespace is ignored. Printing uses the same grammar with coefficients
//! in `(-p/2, p/2]` and terms in descending grevlex order, so
//! `parse(print(f)) == f`.

use alloc::borrow::ToOwned;
use alloc::format;
use core::fmt;

use super::{Monomial, MonomialOrder, Poly, Vars};
use crate::error::{Error, Result};
use crate::scalar::{Fp, Prime};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_owned() })
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        // safe: all ASCII digits
        let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        s.parse::<u64>().or_else(|_| self.err("integer out of range"))
    }

    fn var(&mut self, vars: &Vars) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_lowercase) {
            return self.err("expected variable");
        }
        self.pos += 1;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        vars.index_of(name)
            .ok_or_else(|| Error::Parse { pos: start, msg: format!("unknown variable {name}") })
    }

    fn varpow(&mut self, vars: &Vars, m: &mut Monomial) -> Result<()> {
        let i = self.var(vars)?;
        let mut e = 1u64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.integer()?;
        }
        let total = m.exp(i) as u64 + e;
        if total > u16::MAX as u64 {
            return self.err("exponent too large");
        }
        m.set_exp(i, total as u16);
        Ok(())
    }

    fn term(&mut self, vars: &Vars, prime: Prime) -> Result<(Monomial, Fp)> {
        let mut m = Monomial::ONE;
        let mut c = Fp::one(prime);
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let v = self.integer()?;
                c = Fp::new(prime, (v % prime.get() as u64) as i64);
            }
            Some(b) if b.is_ascii_lowercase() => self.varpow(vars, &mut m)?,
            _ => return self.err("expected term"),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.varpow(vars, &mut m)?;
        }
        Ok((m, c))
    }
}

impl Poly {
    pub fn parse(src: &str, vars: &Vars, prime: Prime) -> Result<Poly> {
        let mut p = Parser { src: src.as_bytes(), pos: 0 };
        let mut out = Poly::zero(vars, prime);
        let mut first = true;
        loop {
            let neg = match p.peek() {
                Some(b'+') => {
                    p.pos += 1;
                    false
                }
                Some(b'-') => {
                    p.pos += 1;
                    true
                }
                None if !first => break,
                _ if first => false,
                _ => return p.err("expected '+' or '-'"),
            };
            let (m, c) = p.term(vars, prime)?;
            out.add_term(m, if neg { -c } else { c });
            first = false;
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms(MonomialOrder::Grevlex).iter().enumerate() {
            let v = c.symmetric();
            let sign = if v < 0 { "-" } else if k > 0 { "+" } else { "" };
            write!(f, "{sign}")?;
            let mag = v.unsigned_abs();
            let mut need_star = false;
            if mag != 1 || m.degree() == 0 {
                write!(f, "{mag}")?;
                need_star = true;
            }
            for (i, name) in self.vars.names().iter().enumerate() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                if need_star {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}
