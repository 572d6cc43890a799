use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use super::rational::Q;

pub fn q(n: i64) -> Q {
    Q::from_i64(n)
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::ratio(n, d)
}

/// Commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_int(n: i64) -> Self;
}

pub trait Field: Ring {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.clone() * &other.inv()
    }
}

impl Ring for Q {
    fn from_int(n: i64) -> Self {
        q(n)
    }
}

impl Field for Q {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational");
        self.recip()
    }
}

/// Implements the by-value and by-reference operator combinations for a type
/// that provides `add_ref`, `sub_ref`, `mul_ref` and `neg_ref` inherent methods.
macro_rules! forward_ring_ops {
    ($t:ty $(, $g:ident : $b:path)*) => {
        impl<$($g: $b),*> std::ops::Add<&$t> for $t {
            type Output = $t;
            fn add(self, o: &$t) -> $t { self.add_ref(o) }
        }
        impl<$($g: $b),*> std::ops::Add<$t> for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t { self.add_ref(&o) }
        }
        impl<$($g: $b),*> std::ops::Add<&$t> for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t { self.add_ref(o) }
        }
        impl<$($g: $b),*> std::ops::Sub<&$t> for $t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t { self.sub_ref(o) }
        }
        impl<$($g: $b),*> std::ops::Sub<$t> for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t { self.sub_ref(&o) }
        }
        impl<$($g: $b),*> std::ops::Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t { self.sub_ref(o) }
        }
        impl<$($g: $b),*> std::ops::Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t { self.mul_ref(o) }
        }
        impl<$($g: $b),*> std::ops::Mul<$t> for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t { self.mul_ref(&o) }
        }
        impl<$($g: $b),*> std::ops::Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t { self.mul_ref(o) }
        }
        impl<$($g: $b),*> std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t { self.neg_ref() }
        }
        impl<$($g: $b),*> std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t { self.neg_ref() }
        }
    };
}
pub(crate) use forward_ring_ops;
