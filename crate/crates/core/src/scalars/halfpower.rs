use std::fmt;

use super::poly::Var;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// `r · λ^{half/2}` for a fixed `λ`, with all integer powers of `λ` folded
/// into `r`.
///
/// `λ` is carried explicitly so that substitutions (e.g. the Jones
/// specialization, under which `λ_D` becomes `u`) act on it consistently.
#[derive(Clone, Debug)]
pub struct HalfPowerValue {
    r: RatFunc,
    half: bool,
    lambda: RatFunc,
}

impl HalfPowerValue {
    pub fn new(r: RatFunc, half: bool, lambda: RatFunc) -> Self {
        HalfPowerValue { r, half, lambda }
    }

    /// `r · λ^{k/2}` for any integer `k`.
    pub fn with_power(r: RatFunc, k: i32, lambda: RatFunc) -> Result<Self> {
        let folded = r * &lambda.pow(k.div_euclid(2))?;
        Ok(HalfPowerValue { r: folded, half: k.rem_euclid(2) == 1, lambda })
    }

    pub fn rational_part(&self) -> &RatFunc {
        &self.r
    }

    pub fn half_flag(&self) -> bool {
        self.half
    }

    pub fn lambda(&self) -> &RatFunc {
        &self.lambda
    }

    /// Multiply by `λ^{k/2}`.
    pub fn mul_sqrt_lambda(&self, k: i32) -> Result<Self> {
        Self::with_power(self.r.clone(), k + self.half as i32, self.lambda.clone())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        HalfPowerValue { r: self.r.clone() * c, half: self.half, lambda: self.lambda.clone() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check_lambda(o)?;
        let k = self.half as i32 + o.half as i32;
        Self::with_power(self.r.clone() * &o.r, k, self.lambda.clone())
    }

    /// Sum of two values with the same half-power parity.
    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_lambda(o)?;
        if self.half != o.half {
            return Err(Error::ContextMismatch("adding values of different sqrt(lambda) parity".into()));
        }
        Ok(HalfPowerValue { r: self.r.clone() + &o.r, half: self.half, lambda: self.lambda.clone() })
    }

    pub fn substitute(&self, v: Var, value: &RatFunc) -> Result<Self> {
        Ok(HalfPowerValue {
            r: self.r.substitute(v, value)?,
            half: self.half,
            lambda: self.lambda.substitute(v, value)?,
        })
    }

    /// Canonical form of the rational part; `extra` is a factor worth trying
    /// to cancel (typically the numerator of `λ`).
    pub fn canonical(&self) -> Self {
        let lam_num = self.lambda.canonical().num().clone();
        HalfPowerValue {
            r: self.r.cancel_factor(&lam_num).canonical(),
            half: self.half,
            lambda: self.lambda.canonical(),
        }
    }

    fn check_lambda(&self, o: &Self) -> Result<()> {
        if self.lambda != o.lambda {
            return Err(Error::ContextMismatch("values carry different lambda".into()));
        }
        Ok(())
    }
}

impl PartialEq for HalfPowerValue {
    fn eq(&self, o: &Self) -> bool {
        self.half == o.half && self.lambda == o.lambda && self.r == o.r
    }
}

impl fmt::Display for HalfPowerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        if c.half && !c.r.is_zero() {
            // A formal lambda is named; a specialized one is written out.
            if c.lambda.vars().contains(&Var::Z) {
                write!(f, "{} * sqrt(lambda_D)", c.r)
            } else {
                write!(f, "{} * sqrt({})", c.r, c.lambda)
            }
        } else {
            write!(f, "{}", c.r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn lam() -> RatFunc {
        RatFunc::var(Var::Z) + &RatFunc::int(2)
    }

    #[test]
    fn two_halves_fold_one_lambda() {
        let a = HalfPowerValue::new(RatFunc::var(Var::U), true, lam());
        let b = HalfPowerValue::new(RatFunc::one(), true, lam());
        let p = a.mul(&b).unwrap();
        assert!(!p.half_flag());
        assert_eq!(p.rational_part(), &(RatFunc::var(Var::U) * &lam()));
    }

    #[test]
    fn folding_is_idempotent() {
        let v = HalfPowerValue::with_power(RatFunc::one(), -3, lam()).unwrap();
        assert!(v.half_flag());
        let w = v.mul_sqrt_lambda(0).unwrap();
        assert_eq!(v, w);
        assert_eq!(v.canonical(), v);
        assert_eq!(v.mul_sqrt_lambda(3).unwrap(), HalfPowerValue::new(RatFunc::one(), false, lam()));
    }

    #[test]
    fn parity_mismatch_cannot_add() {
        let a = HalfPowerValue::new(RatFunc::one(), true, lam());
        let b = HalfPowerValue::new(RatFunc::one(), false, lam());
        assert!(a.add(&b).is_err());
    }
}
