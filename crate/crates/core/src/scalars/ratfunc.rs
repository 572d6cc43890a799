use std::fmt;

use num_traits::{One, Zero};

use super::cyclotomic::Cyclotomic;
use super::poly::{Monomial, Poly, Var};
use super::ring::{forward_ring_ops, Field, Ring, Q};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials over a cyclotomic field.
///
/// No multivariate gcd is maintained; equality is decided by
/// cross-multiplication. [`RatFunc::canonical`] removes monomial content,
/// divides out the denominator when it divides exactly, reduces univariate
/// quotients by their gcd and makes the denominator's leading coefficient 1.
#[derive(Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunc { num, den }.light())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn rational(c: Q) -> Self {
        Self::from_poly(Poly::rational(c))
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(Poly::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn constant_value(&self) -> Option<Cyclotomic> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(n * &d.inv())
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Cheap normalization applied after every operation: zero numerators
    /// get a unit denominator, monomial content moves into the numerator
    /// and constant denominators are absorbed.
    fn light(mut self) -> Self {
        if self.num.is_zero() {
            self.den = Poly::one();
            return self;
        }
        let m = self.den.min_monomial();
        if !m.is_one() {
            let inv = m.inverse();
            self.num = self.num.mul_monomial(&inv);
            self.den = self.den.mul_monomial(&inv);
        }
        if let Some(c) = self.den.constant_value() {
            if !c.is_one() {
                self.num = self.num.scale(&c.inv());
            }
            self.den = Poly::one();
        }
        self
    }

    /// Full canonical form; idempotent.
    pub fn canonical(&self) -> Self {
        let mut r = self.clone().light();
        if r.den.is_one() {
            return r;
        }
        if let Some(qt) = r.num.exact_div(&r.den) {
            return RatFunc::from_poly(qt);
        }
        let vars = r.vars();
        if vars.len() == 1 {
            r = r.reduce_univariate(vars[0]);
            if r.den.is_one() {
                return r;
            }
        }
        let lc = r.den.leading_term().unwrap().1.clone();
        if !lc.is_one() {
            let inv = lc.inv();
            r.num = r.num.scale(&inv);
            r.den = r.den.scale(&inv);
        }
        r
    }

    fn reduce_univariate(self, v: Var) -> Self {
        let to_upoly = |p: &Poly| -> (i32, UPoly<Cyclotomic>) {
            let (lo, hi) = p.degree_range(v);
            let mut c = vec![Cyclotomic::zero(); (hi - lo + 1) as usize];
            for (m, a) in p.terms() {
                c[(m.exponent(v) - lo) as usize] = a.clone();
            }
            (lo, UPoly::new(c))
        };
        let from_upoly = |lo: i32, p: &UPoly<Cyclotomic>| -> Poly {
            p.coeffs()
                .iter()
                .enumerate()
                .fold(Poly::zero(), |acc, (k, c)| acc + &Poly::term(c.clone(), Monomial::var(v, lo + k as i32)))
        };
        let (nlo, n) = to_upoly(&self.num);
        let (dlo, d) = to_upoly(&self.den);
        let g = n.gcd(&d);
        if g.degree() == Some(0) {
            return self;
        }
        let n2 = n.exact_div(&g).unwrap();
        let d2 = d.exact_div(&g).unwrap();
        RatFunc { num: from_upoly(nlo, &n2), den: from_upoly(dlo, &d2) }.light()
    }

    /// Divide numerator and denominator by `f` as often as both allow.
    /// Monomials always divide a Laurent polynomial, so they are left to
    /// the monomial normalization.
    pub fn cancel_factor(&self, f: &Poly) -> Self {
        let mut r = self.clone();
        if f.is_zero() || f.is_monomial() {
            return r.light();
        }
        loop {
            match (r.num.exact_div(f), r.den.exact_div(f)) {
                (Some(n), Some(d)) => {
                    r.num = n;
                    r.den = d;
                }
                _ => return r.light(),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality by cross-multiplication.
    pub fn eq_ratfunc(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.clone() * &o.den == o.num.clone() * &self.den
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc { num: self.num.clone() + &o.num, den: self.den.clone() }.light();
        }
        if o.den.is_one() {
            return RatFunc { num: self.num.clone() + &(o.num.clone() * &self.den), den: self.den.clone() }.light();
        }
        if self.den.is_one() {
            return RatFunc { num: self.num.clone() * &o.den + &o.num, den: o.den.clone() }.light();
        }
        let num = self.num.clone() * &o.den + &(o.num.clone() * &self.den);
        RatFunc { num, den: self.den.clone() * &o.den }.light()
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let den = if self.den.is_one() {
            o.den.clone()
        } else if o.den.is_one() {
            self.den.clone()
        } else {
            self.den.clone() * &o.den
        };
        RatFunc { num: self.num.clone() * &o.num, den }.light()
    }

    fn neg_ref(&self) -> Self {
        RatFunc { num: -self.num.clone(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc { num: base.num.pow(k), den: base.den.pow(k) }.light())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }.light()
    }

    /// Exact substitution `v ← value`.
    pub fn substitute(&self, v: Var, value: &RatFunc) -> Result<RatFunc> {
        let (nn, nd) = substitute_poly(&self.num, v, value);
        let (dn, dd) = substitute_poly(&self.den, v, value);
        if dn.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunc::new(nn * &dd, nd * &dn)?.canonical())
    }

    /// Simultaneous substitution of several variables.
    pub fn substitute_all(&self, subs: &[(Var, RatFunc)]) -> Result<RatFunc> {
        let mut r = self.clone();
        for (v, val) in subs {
            r = r.substitute(*v, val)?;
        }
        Ok(r)
    }
}

/// `p(v ← a/b)` as a pair (numerator, denominator) over a common denominator
/// `a^{-emin} b^{emax}`.
fn substitute_poly(p: &Poly, v: Var, value: &RatFunc) -> (Poly, Poly) {
    let (emin, emax) = p.degree_range(v);
    if emin == 0 && emax == 0 {
        return (p.clone(), Poly::one());
    }
    let (a, b) = (&value.num, &value.den);
    let lo = emin.min(0);
    let hi = emax.max(0);
    // value^e = a^e b^-e = a^(e-lo) b^(hi-e) / (a^-lo b^hi)
    let apow: Vec<Poly> = (0..=(hi - lo)).scan(Poly::one(), |acc, k| {
        let cur = acc.clone();
        if k < hi - lo {
            *acc = acc.clone() * a;
        }
        Some(cur)
    }).collect();
    let bpow: Vec<Poly> = (0..=(hi - lo)).scan(Poly::one(), |acc, k| {
        let cur = acc.clone();
        if k < hi - lo {
            *acc = acc.clone() * b;
        }
        Some(cur)
    }).collect();
    let mut num = Poly::zero();
    for (m, c) in p.terms() {
        let e = m.exponent(v);
        let rest = Poly::term(c.clone(), m.with_exponent(v, 0));
        num = num + &(rest * &apow[(e - lo) as usize] * &bpow[(hi - e) as usize]);
    }
    let den = apow[(-lo) as usize].clone() * &bpow[hi as usize];
    (num, den)
}

forward_ring_ops!(RatFunc);

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        self.eq_ratfunc(o)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
}

impl Ring for RatFunc {
    fn from_int(n: i64) -> Self {
        RatFunc::int(n)
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        RatFunc::inv(self).expect("inverse of zero rational function")
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Cyclotomic> for RatFunc {
    fn from(c: Cyclotomic) -> Self {
        RatFunc::constant(c)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders the canonical form: `num` or `(num)/(den)`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        if c.den.is_one() {
            write!(f, "{}", c.num)
        } else {
            write!(f, "({})/({})", c.num, c.den)
        }
    }
}
