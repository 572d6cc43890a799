use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::ring::{forward_ring_ops, q, Field, Ring, Q};
use super::upoly::UPoly;

/// The `d`-th cyclotomic polynomial, memoized.
///
/// Computed as `x^d - 1` divided by `Φ_e` for every proper divisor `e` of `d`.
pub fn cyclotomic_polynomial(d: u32) -> Arc<UPoly<Q>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<UPoly<Q>>>>> = OnceLock::new();
    assert!(d >= 1, "cyclotomic polynomial of order zero");
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = UPoly::monomial(q(1), d as usize) - &UPoly::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p.exact_div(&cyclotomic_polynomial(e)).expect("Φ_e divides x^d - 1");
        }
    }
    let p = Arc::new(p);
    cache.write().unwrap().insert(d, p.clone());
    p
}

/// Degree of `Φ_d`, i.e. Euler's totient.
pub fn totient(d: u32) -> usize {
    (1..=d).filter(|k| k.gcd(&d) == 1).count()
}

/// Element of `ℚ(ζ_d)` stored as a residue of `ℚ[x]/Φ_d(x)` with `ζ_d = x`.
///
/// Rational elements are always stored with order 1 so that each field
/// element of `ℚ` has a single representation; mixed-order arithmetic
/// promotes both operands to the field of the least common multiple.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Q>,
}

impl Cyclotomic {
    pub fn rational(c: Q) -> Self {
        Cyclotomic { order: 1, coeffs: vec![c] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(q(n))
    }

    /// `ζ_d^k`, reduced modulo `Φ_d`.
    pub fn root_of_unity(d: u32, k: i64) -> Self {
        assert!(d >= 1, "root of unity of order zero");
        let e = k.rem_euclid(d as i64) as usize;
        Self::from_poly(d, UPoly::monomial(q(1), e))
    }

    /// Reduce a polynomial in `ζ_order` and canonicalize.
    pub fn from_poly(order: u32, p: UPoly<Q>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.degree().unwrap();
        let r = if p.degree().is_some_and(|k| k >= deg) { p.div_rem(&phi).1 } else { p };
        let mut coeffs: Vec<Q> = (0..deg).map(|k| r.coeff(k)).collect();
        if coeffs.iter().skip(1).all(Zero::is_zero) {
            coeffs.truncate(1);
            return Cyclotomic { order: 1, coeffs };
        }
        Cyclotomic { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients on the power basis `1, ζ, …, ζ^{φ(d)-1}`.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<&Q> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    pub fn to_poly(&self) -> UPoly<Q> {
        UPoly::new(self.coeffs.clone())
    }

    /// Representative polynomial in `ζ_target` where `order | target`.
    fn lift_poly(&self, target: u32) -> UPoly<Q> {
        debug_assert_eq!(target % self.order, 0);
        let step = (target / self.order) as usize;
        if step == 1 {
            return self.to_poly();
        }
        let mut v = vec![q(0); step * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        UPoly::new(v)
    }

    fn aligned(&self, o: &Self) -> (u32, UPoly<Q>, UPoly<Q>) {
        let order = self.order.lcm(&o.order);
        (order, self.lift_poly(order), o.lift_poly(order))
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.order == o.order {
            let coeffs: Vec<Q> = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
            return Self::canonical(self.order, coeffs);
        }
        let (order, a, b) = self.aligned(o);
        Self::from_poly(order, a + &b)
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if let Some(c) = o.as_rational() {
            return self.scale(c);
        }
        if let Some(c) = self.as_rational() {
            return o.scale(c);
        }
        let (order, a, b) = self.aligned(o);
        Self::from_poly(order, a * &b)
    }

    fn neg_ref(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn canonical(order: u32, coeffs: Vec<Q>) -> Self {
        if order != 1 && coeffs.iter().skip(1).all(Zero::is_zero) {
            return Cyclotomic { order: 1, coeffs: vec![coeffs[0].clone()] };
        }
        Cyclotomic { order, coeffs }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut b = base;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&b);
            }
            b = b.mul_ref(&b);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn is_negative_rational(&self) -> bool {
        self.as_rational().is_some_and(|c| c.is_negative())
    }
}

forward_ring_ops!(Cyclotomic);

impl PartialEq for Cyclotomic {
    fn eq(&self, o: &Self) -> bool {
        if self.order == o.order {
            return self.coeffs == o.coeffs;
        }
        if self.order == 1 || o.order == 1 {
            // Canonical form: a non-rational order>1 element never equals a rational.
            return false;
        }
        let (order, a, b) = self.aligned(o);
        Self::from_poly(order, a - &b).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::rational(q(0))
    }
    fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::rational(q(1))
    }
}

impl Ring for Cyclotomic {
    fn from_int(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl Field for Cyclotomic {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in cyclotomic field");
        if let Some(c) = self.as_rational() {
            return Self::rational(c.recip());
        }
        let phi = cyclotomic_polynomial(self.order);
        let (g, s, _) = self.to_poly().ext_gcd(&phi);
        debug_assert_eq!(g, UPoly::one());
        Self::from_poly(self.order, s)
    }
}

impl From<Q> for Cyclotomic {
    fn from(c: Q) -> Self {
        Self::rational(c)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_rational() {
            return write!(f, "{c}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let root = match k {
                0 => String::new(),
                1 => format!("zeta{}", self.order),
                _ => format!("zeta{}^{}", self.order, k),
            };
            let mag = c.abs();
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            f.write_str(sep)?;
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&root)?;
            } else {
                write!(f, "{mag}*{root}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ring::q_frac;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials_multiply_to_xd_minus_one() {
        for d in 1..=24u32 {
            let mut prod = UPoly::<Q>::one();
            for e in 1..=d {
                if d % e == 0 {
                    prod = prod * &*cyclotomic_polynomial(e);
                }
            }
            assert_eq!(prod, UPoly::monomial(q(1), d as usize) - &UPoly::one(), "d = {d}");
            assert_eq!(cyclotomic_polynomial(d).degree().unwrap(), totient(d));
        }
    }

    #[test]
    fn roots_of_unity_basics() {
        assert_eq!(Cyclotomic::root_of_unity(1, 5), Cyclotomic::one());
        assert_eq!(Cyclotomic::root_of_unity(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::root_of_unity(4, 2), Cyclotomic::from_int(-1));
        for d in 2..=12u32 {
            let sum = (0..d as i64)
                .map(|k| Cyclotomic::root_of_unity(d, k))
                .fold(Cyclotomic::zero(), |a, b| a + &b);
            assert!(sum.is_zero(), "d = {d}");
            assert_eq!(Cyclotomic::root_of_unity(d, 1).pow(d as i64), Cyclotomic::one());
        }
    }

    #[test]
    fn mixed_orders_promote() {
        // ζ_6^2 = ζ_3 and ζ_4 * ζ_4 = -1.
        assert_eq!(Cyclotomic::root_of_unity(6, 2), Cyclotomic::root_of_unity(3, 1));
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.clone() * &i, Cyclotomic::from_int(-1));
        let w = Cyclotomic::root_of_unity(3, 1);
        let prod = w.clone() * &i;
        assert_eq!(prod.order(), 12);
        assert_eq!(prod, Cyclotomic::root_of_unity(12, 7));
    }

    #[test]
    fn display() {
        let w = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(w.to_string(), "zeta3");
        assert_eq!((w.clone() * &w).to_string(), "-1 - zeta3");
        assert_eq!(Cyclotomic::rational(q_frac(-1, 2)).to_string(), "-1/2");
    }

    fn arb_cyc() -> impl Strategy<Value = Cyclotomic> {
        (prop::sample::select(vec![1u32, 3, 4, 5, 6, 8]), prop::collection::vec(-5i64..5, 8)).prop_map(
            |(d, cs)| {
                let p = UPoly::new(cs.into_iter().map(q).collect());
                Cyclotomic::from_poly(d, p)
            },
        )
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
            prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
            prop_assert_eq!(a.clone() * &b, b.clone() * &a);
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * &a.inv(), Cyclotomic::one());
            }
        }
    }
}
