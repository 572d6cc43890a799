//! Parser for the textual form produced by `Display` on [`RatFunc`].
//!
//! Grammar: `+ - * / ^ ( )`, integer literals, the variables `u`, `z`,
//! `x<m>` and the roots of unity `zeta<d>`. Exponents are (possibly
//! negative) integers.

use num_bigint::BigInt;
use num_traits::One;

use super::cyclotomic::Cyclotomic;
use super::poly::Var;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let r = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(r)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc + &t } else { acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let t = self.unary()?;
            acc = if c == b'*' {
                acc * &t
            } else {
                acc.div(&t).map_err(|_| Error::Parse { pos: at, msg: "division by zero".into() })?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.exponent()?;
            return base.pow(e).map_err(|_| Error::Parse { pos: at, msg: "negative power of zero".into() });
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected integer exponent"));
        }
        let e: i32 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
        }
        Ok(if neg { -e } else { e })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let r = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(r)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(RatFunc::rational(super::ring::Q::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_owned();
                let idx = self.digits();
                match (name.as_str(), idx.as_str()) {
                    ("u", "") => Ok(RatFunc::var(Var::U)),
                    ("z", "") => Ok(RatFunc::var(Var::Z)),
                    ("x", m) if !m.is_empty() => {
                        let m: u32 = m.parse().map_err(|_| self.err("bad variable index"))?;
                        if m == 0 {
                            return Ok(RatFunc::one());
                        }
                        Ok(RatFunc::var(Var::X(m)))
                    }
                    ("zeta", d) if !d.is_empty() => {
                        let d: u32 = d.parse().map_err(|_| self.err("bad root-of-unity order"))?;
                        if d == 0 {
                            return Err(Error::Parse { pos: start, msg: "zeta0 is undefined".into() });
                        }
                        Ok(RatFunc::constant(Cyclotomic::root_of_unity(d, 1)))
                    }
                    _ => Err(Error::Parse { pos: start, msg: format!("unknown symbol '{name}{idx}'") }),
                }
            }
            _ => Err(self.err("expected number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::poly::Poly;
    use crate::scalars::ring::q_frac;
    use proptest::prelude::*;

    #[test]
    fn parses_rendered_forms() {
        let f = parse_ratfunc("(u - 1)/(u + 1)").unwrap();
        assert_eq!(f.to_string(), "(u - 1)/(u + 1)");
        let g = parse_ratfunc("3/2*u^-1*z^-1 + (1 + zeta3)*x1").unwrap();
        assert_eq!(g, parse_ratfunc(&g.to_string()).unwrap());
        assert_eq!(parse_ratfunc("-1/2").unwrap(), RatFunc::rational(q_frac(-1, 2)));
        assert_eq!(parse_ratfunc("u^(-2)").unwrap(), RatFunc::var(Var::U).pow(-2).unwrap());
    }

    #[test]
    fn reports_position() {
        match parse_ratfunc("u + * z") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_ratfunc("w").is_err());
        assert!(parse_ratfunc("1/(u-u)").is_err());
    }

    fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
        let term = (-4i64..5, 0u32..4, -2i32..3, -2i32..3, 0i32..2).prop_map(|(c, k, a, b, x)| {
            let coeff = crate::scalars::Cyclotomic::root_of_unity(3, k as i64).scale(&crate::scalars::q(c));
            let m = crate::scalars::Monomial::from_exponents(&[a, b, x]);
            Poly::term(coeff, m)
        });
        let poly = prop::collection::vec(term, 1..4).prop_map(|ts| ts.into_iter().fold(Poly::default(), |a, t| a + &t));
        (poly.clone(), poly).prop_filter_map("nonzero den", |(n, d)| RatFunc::new(n, d).ok())
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(f in arb_ratfunc()) {
            let back = parse_ratfunc(&f.to_string()).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn canonical_preserves_class(f in arb_ratfunc()) {
            let c = f.canonical();
            prop_assert_eq!(&c, &f);
            prop_assert_eq!(c.canonical().to_string(), c.to_string());
        }
    }
}
