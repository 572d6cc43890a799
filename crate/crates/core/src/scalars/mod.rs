//! Exact coefficient tower: `ℚ → ℚ(ζ_d) → ℚ(ζ_d)[u^±, z^±, x_m^±] → fractions`,
//! plus the `√λ` half-power wrapper used by the invariants.

mod cyclotomic;
mod halfpower;
mod laurent;
mod poly;
mod ratfunc;
mod rational;
mod ring;
mod text;
mod upoly;

pub use cyclotomic::{cyclotomic_polynomial, totient, Cyclotomic};
pub use halfpower::HalfPowerValue;
pub use laurent::Laurent;
pub use poly::{Monomial, Poly, Var};
pub use ratfunc::RatFunc;
pub use ring::{q, q_frac, Field, Ring, Q};
pub use text::parse_ratfunc;
pub use upoly::UPoly;

/// `ζ_d^k`.
pub fn make_root_of_unity(d: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(d, k)
}

/// `a = b` as rational functions.
pub fn ratfunc_eq(a: &RatFunc, b: &RatFunc) -> bool {
    a.eq_ratfunc(b)
}

/// `f(var ← value)`.
pub fn substitute(f: &RatFunc, var: Var, value: &RatFunc) -> crate::Result<RatFunc> {
    f.substitute(var, value)
}
