use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational with an inline fast path.
///
/// Invariant: a value whose reduced numerator and denominator both fit in
/// `i64` is always `Small`, with `den > 0` and `gcd(num, den) = 1`. The
/// representation is therefore unique, so derived equality and hashing are
/// value equality and value hashing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Q(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Q {
    /// `n / d` for `d ≠ 0`, reduced.
    fn from_i128(mut n: i128, mut d: i128) -> Q {
        debug_assert!(d != 0);
        if n == 0 {
            return Q(Repr::Small(0, 1));
        }
        if d < 0 {
            // Magnitudes stay below 2^127 for all callers.
            n = -n;
            d = -d;
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        let (n, d) = (n / g, d / g);
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Q(Repr::Small(a, b)),
            _ => Q(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Q {
        // `r` is reduced with a positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) => Q(Repr::Small(a, b)),
            _ => Q(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(a, b) => BigRational::new_raw(BigInt::from(*a), BigInt::from(*b)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn from_integer(n: BigInt) -> Q {
        Q::from_big(BigRational::from_integer(n))
    }

    /// `n / d`; panics if `d = 0`.
    pub fn new(n: BigInt, d: BigInt) -> Q {
        Q::from_big(BigRational::new(n, d))
    }

    pub fn from_i64(n: i64) -> Q {
        Q(Repr::Small(n, 1))
    }

    pub fn ratio(n: i64, d: i64) -> Q {
        assert!(d != 0, "zero denominator");
        Q::from_i128(n as i128, d as i128)
    }

    pub fn recip(&self) -> Q {
        match &self.0 {
            Repr::Small(a, b) => {
                assert!(*a != 0, "inverse of zero rational");
                Q::from_i128(*b as i128, *a as i128)
            }
            Repr::Big(r) => Q::from_big(r.recip()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(a, _) => *a < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Q {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    fn add_q(&self, o: &Q) -> Q {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Q::from_i128(a + c, b)
                } else {
                    Q::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Q::from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul_q(&self, o: &Q) -> Q {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => Q::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128),
            _ => Q::from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg_q(&self) -> Q {
        match &self.0 {
            Repr::Small(a, b) => Q::from_i128(-(*a as i128), *b as i128),
            Repr::Big(r) => Q::from_big(-r.clone()),
        }
    }
}

impl Zero for Q {
    fn zero() -> Q {
        Q(Repr::Small(0, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Q {
    fn one() -> Q {
        Q(Repr::Small(1, 1))
    }
    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }
}

impl Ord for Q {
    fn cmp(&self, o: &Q) -> Ordering {
        match (&self.0, &o.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, o: &Q) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(a, 1) => write!(f, "{a}"),
            Repr::Small(a, b) => write!(f, "{a}/{b}"),
            Repr::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Q> for &Q {
            type Output = Q;
            fn $m(self, o: &Q) -> Q {
                $body(self, o)
            }
        }
        impl $tr<&Q> for Q {
            type Output = Q;
            fn $m(self, o: &Q) -> Q {
                $body(&self, o)
            }
        }
        impl $tr<Q> for Q {
            type Output = Q;
            fn $m(self, o: Q) -> Q {
                $body(&self, &o)
            }
        }
        impl $tr<Q> for &Q {
            type Output = Q;
            fn $m(self, o: Q) -> Q {
                $body(self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &Q, b: &Q| a.add_q(b));
binop!(Sub, sub, |a: &Q, b: &Q| a.add_q(&b.neg_q()));
binop!(Mul, mul, |a: &Q, b: &Q| a.mul_q(b));
binop!(Div, div, |a: &Q, b: &Q| a.mul_q(&b.recip()));

impl AddAssign<&Q> for Q {
    fn add_assign(&mut self, o: &Q) {
        *self = self.add_q(o);
    }
}

impl AddAssign<Q> for Q {
    fn add_assign(&mut self, o: Q) {
        *self = self.add_q(&o);
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        self.neg_q()
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        self.neg_q()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_is_reduced() {
        let a = Q::ratio(2, -4);
        assert_eq!(a, Q::ratio(-1, 2));
        assert_eq!(&a + &Q::ratio(1, 2), Q::zero());
        assert_eq!(Q::ratio(3, 4) * Q::ratio(4, 3), Q::one());
        assert_eq!(Q::ratio(-3, 7).recip(), Q::ratio(-7, 3));
        assert_eq!(Q::ratio(1, 6).to_string(), "1/6");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Q::from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        assert_eq!(-Q::from_i64(i64::MIN), Q::from_big(BigRational::from_integer(-BigInt::from(i64::MIN))));
    }

    #[test]
    fn agrees_with_bigrational() {
        let vals = [(1, 3), (-5, 7), (i64::MAX, 3), (7, i64::MAX - 1), (-1, 1)];
        for &(a, b) in &vals {
            for &(c, d) in &vals {
                let (x, y) = (Q::ratio(a, b), Q::ratio(c, d));
                let (bx, by) = (x.to_big(), y.to_big());
                assert_eq!((&x + &y).to_big(), &bx + &by);
                assert_eq!((&x - &y).to_big(), &bx - &by);
                assert_eq!((&x * &y).to_big(), &bx * &by);
                assert_eq!(x.cmp(&y), bx.cmp(&by));
            }
        }
    }
}
