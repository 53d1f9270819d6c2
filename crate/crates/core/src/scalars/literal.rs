//! Scalar literals.
//!
//! ```text
//! sum   ::= ['+'|'-'] term (('+'|'-') term)*
//! term  ::= coeff ('*' factor)* | factor ('*' factor)*
//! coeff ::= rat | rat 'i' | 'i' | '(' ['-'] rat ('+'|'-') rat 'i' ')'
//! factor::= 'q' ['^' int] | IDENT ['^' int]
//! ```

use num_rational::Rational64;

use super::{GaussRational, Monomial, Ring, Scalar};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

type PResult<T> = std::result::Result<T, String>;

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: &str) -> PResult<T> {
        Err(format!("{msg} at offset {}", self.pos))
    }

    fn uint(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| format!("number too large at offset {start}"))
    }

    fn int(&mut self) -> PResult<i32> {
        let braced = self.eat(b'{') || self.eat(b'(');
        let neg = self.eat(b'-');
        let n = self.uint()?;
        if braced && !(self.eat(b'}') || self.eat(b')')) {
            return self.err("unclosed exponent");
        }
        let n = i32::try_from(n).map_err(|_| "exponent too large".to_string())?;
        Ok(if neg { -n } else { n })
    }

    fn rat(&mut self) -> PResult<Rational64> {
        let n = self.uint()?;
        if self.eat(b'/') {
            let d = self.uint()?;
            if d == 0 {
                return self.err("zero denominator");
            }
            Ok(Rational64::new(n, d))
        } else {
            Ok(Rational64::from_integer(n))
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if start < self.s.len() && (self.s[start].is_ascii_alphabetic() || self.s[start] == b'_') {
            self.pos += 1;
            while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                self.pos += 1;
            }
            Some(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
        } else {
            None
        }
    }

    /// A lone `i` right after a number, not the start of a longer identifier.
    fn eat_imag_suffix(&mut self) -> bool {
        let save = self.pos;
        if self.ident() == Some("i") {
            true
        } else {
            self.pos = save;
            false
        }
    }

    fn coeff(&mut self) -> PResult<Option<GaussRational>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let re = if self.eat(b'-') { -self.rat()? } else { self.rat()? };
                let neg = if self.eat(b'-') {
                    true
                } else if self.eat(b'+') {
                    false
                } else {
                    return self.err("expected '+' or '-' in complex coefficient");
                };
                let im = self.rat()?;
                if !self.eat_imag_suffix() {
                    return self.err("expected 'i'");
                }
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(Some(GaussRational::new(re, if neg { -im } else { im })))
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rat()?;
                if self.eat_imag_suffix() {
                    Ok(Some(GaussRational::new(Rational64::from_integer(0), r)))
                } else {
                    Ok(Some(GaussRational::new(r, Rational64::from_integer(0))))
                }
            }
            _ => {
                let save = self.pos;
                if self.ident() == Some("i") {
                    Ok(Some(GaussRational::I))
                } else {
                    self.pos = save;
                    Ok(None)
                }
            }
        }
    }

    fn factor(&mut self, ring: &Ring, mono: &mut Monomial) -> PResult<()> {
        let at = self.pos;
        let Some(name) = self.ident() else {
            return self.err("expected 'q' or a phase variable");
        };
        let exp = if self.eat(b'^') { self.int()? } else { 1 };
        if name == "q" {
            mono.q += exp;
        } else if let Some(j) = ring.index_of(name) {
            mono.phases[j] += exp;
        } else {
            return Err(format!("unknown phase variable '{name}' at offset {at}"));
        }
        Ok(())
    }

    fn term(&mut self, ring: &Ring) -> PResult<(Monomial, GaussRational)> {
        let mut mono = Monomial::one(ring.arity());
        let coeff = match self.coeff()? {
            Some(c) => c,
            None => {
                self.factor(ring, &mut mono)?;
                GaussRational::ONE
            }
        };
        while self.eat(b'*') {
            self.factor(ring, &mut mono)?;
        }
        Ok((mono, coeff))
    }
}

pub(super) fn parse(ring: &Ring, text: &str) -> PResult<Scalar> {
    let mut c = Cursor { s: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut neg = if c.eat(b'-') {
        true
    } else {
        c.eat(b'+');
        false
    };
    loop {
        let (m, k) = c.term(ring)?;
        terms.push((m, if neg { k.neg() } else { k }));
        if c.eat(b'+') {
            neg = false;
        } else if c.eat(b'-') {
            neg = true;
        } else {
            break;
        }
    }
    if c.peek().is_some() {
        return c.err("unexpected trailing input");
    }
    Ok(Scalar::from_terms(ring.arity(), terms))
}

fn format_monomial(ring: &Ring, m: &Monomial, out: &mut String) {
    if m.q != 0 {
        out.push_str(&format!("*q^{}", m.q));
    }
    for (j, &e) in m.phases.iter().enumerate() {
        if e != 0 {
            out.push_str(&format!("*{}^{}", ring.phases[j], e));
        }
    }
}

pub(super) fn format(ring: &Ring, s: &Scalar) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in s.terms().iter().enumerate() {
        if k == 0 {
            out.push_str(&c.to_string());
        } else if c.is_negative_simple() {
            out.push_str(" - ");
            out.push_str(&c.neg().to_string());
        } else {
            out.push_str(" + ");
            out.push_str(&c.to_string());
        }
        format_monomial(ring, m, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let r = Ring::new(["u"]).unwrap();
        for text in ["0", "1", "-1*q^-1", "1*q^1 - 1*q^-1", "(1-2i)*q^2*u^-4", "3/4i*u^1 + 2"] {
            let s = r.parse(text).unwrap();
            let printed = r.format(&s);
            assert_eq!(r.parse(&printed).unwrap(), s, "{text} -> {printed}");
        }
        assert_eq!(r.format(&r.parse("q - q^-1").unwrap()), "-1*q^-1 + 1*q^1");
        assert_eq!(r.format(&r.parse("-q*u^4").unwrap()), "-1*q^1*u^4");
    }

    #[test]
    fn lenient_forms() {
        let r = Ring::new(["u"]).unwrap();
        assert_eq!(r.parse("q").unwrap(), r.q_pow(1));
        assert_eq!(r.parse("q^{-1}").unwrap(), r.q_pow(-1));
        assert_eq!(r.parse("i").unwrap(), Scalar::from_gauss(1, GaussRational::I));
        assert_eq!(r.parse("u*u").unwrap(), Scalar::phase(1, 0, 2));
        assert_eq!(r.parse("2*q - 2*q").unwrap(), r.zero());
    }

    #[test]
    fn rejects_garbage() {
        let r = Ring::new(["u"]).unwrap();
        assert!(r.parse("w").is_err());
        assert!(r.parse("1/0").is_err());
        assert!(r.parse("(1+2)").is_err());
        assert!(r.parse("2 q").is_err());
    }
}
