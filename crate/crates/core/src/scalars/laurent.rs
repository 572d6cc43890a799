use std::fmt;

use num_traits::{One, Zero};

use super::ring::{forward_ring_ops, q, Ring, Q};
use super::upoly::UPoly;

/// Laurent polynomial in `u` over `ℚ`; the coefficient ring of the algebra.
///
/// `coeffs[k]` is the coefficient of `u^(low + k)`; both ends are nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<Q>,
}

impl Laurent {
    pub fn new(low: i32, mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Laurent { low: low + lead as i32, coeffs }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(0, vec![c])
    }

    /// `c · u^k`
    pub fn monomial(c: Q, k: i32) -> Self {
        Self::new(k, vec![c])
    }

    pub fn u() -> Self {
        Self::monomial(q(1), 1)
    }

    /// `u - 1`
    pub fn u_minus_one() -> Self {
        Self::new(0, vec![q(-1), q(1)])
    }

    /// `u^{-1} - 1`
    pub fn u_inv_minus_one() -> Self {
        Self::new(-1, vec![q(1), q(-1)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Q)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn low_degree(&self) -> i32 {
        self.low
    }

    pub fn high_degree(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `self · u^shift` as an ordinary polynomial; requires a nonnegative result.
    pub fn to_upoly_shifted(&self, shift: i32) -> UPoly<Q> {
        if self.is_zero() {
            return UPoly::zero();
        }
        let low = self.low + shift;
        assert!(low >= 0, "negative power after shift");
        let mut v = vec![q(0); low as usize];
        v.extend(self.coeffs.iter().cloned());
        UPoly::new(v)
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high_degree().max(o.high_degree());
        let mut v = vec![q(0); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[(self.low - low) as usize + k] += c;
        }
        for (k, c) in o.coeffs.iter().enumerate() {
            v[(o.low - low) as usize + k] += c;
        }
        Self::new(low, v)
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![q(0); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(self.low + o.low, v)
    }

    fn neg_ref(&self) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

forward_ring_ops!(Laurent);

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Self::constant(q(1))
    }
}

impl Ring for Laurent {
    fn from_int(n: i64) -> Self {
        Self::constant(q(n))
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            f.write_str(sep)?;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("u")?;
                    } else {
                        write!(f, "u^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_pair() {
        // u · u^{-1} = 1 and (u - 1)(u^{-1} - 1) = 2 - u - u^{-1}
        let a = Laurent::u() * &Laurent::monomial(q(1), -1);
        assert_eq!(a, Laurent::one());
        let b = Laurent::u_minus_one() * &Laurent::u_inv_minus_one();
        assert_eq!(b, Laurent::new(-1, vec![q(-1), q(2), q(-1)]));
        assert_eq!(b.to_string(), "-u + 2 - u^-1");
    }

    #[test]
    fn trims_both_ends() {
        let a = Laurent::new(-2, vec![q(0), q(3), q(0)]);
        assert_eq!(a.low_degree(), -1);
        assert_eq!(a.high_degree(), -1);
        assert!((a.clone() - &a).is_zero());
    }
}
