use num_traits::{One, Zero};

use super::ring::{forward_ring_ops, Field, Ring};

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> UPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// Evaluate at a point by Horner's rule.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn add_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + &o.coeff(k)).collect())
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - &o.coeff(k)).collect())
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Self::new(out)
    }

    fn neg_ref(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<C: Field> UPoly<C> {
    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.coeffs[dd].inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - &(c.clone() * b);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.inv()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (qt, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub_ref(&qt.mul_ref(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub_ref(&qt.mul_ref(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            Some(lc) => {
                let inv = lc.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Exact quotient, if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (qt, r) = self.div_rem(divisor);
        r.is_zero().then_some(qt)
    }
}

forward_ring_ops!(UPoly<C>, C: Ring);

impl<C: Ring> Zero for UPoly<C> {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for UPoly<C> {
    fn one() -> Self {
        UPoly { coeffs: vec![C::one()] }
    }
}

impl<C: Ring> Ring for UPoly<C> {
    fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }
}
