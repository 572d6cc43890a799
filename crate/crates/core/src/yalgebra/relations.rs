use std::fmt;
use std::str::FromStr;

use super::Element;
use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::scalars::{q, Laurent, UPoly, Q};

use super::generators::map_to_algebra;

/// Named identities checked by normal-form (or polynomial) equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `g³ = u g² + g − u`.
    Cubic,
    /// `(g − 1)(g² − (u−1)g − u) = 0`, and the polynomial identity behind it.
    CubicFactorization,
    /// `g⁻¹ − g = (u⁻¹ − 1) p`.
    Gipi,
    /// `g² = 1 + (u − 1) p`.
    QuadraticP,
    /// Images under `η` of the singular braid monoid relations.
    EtaRelations,
    /// `x⁴ + m x³ + (m−2) x² + m(m−1) x − (m−1) = (x² + m x − 1)(x² + m − 1)`.
    BmwQuinticFactorization,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::Cubic,
        Relation::CubicFactorization,
        Relation::Gipi,
        Relation::QuadraticP,
        Relation::EtaRelations,
        Relation::BmwQuinticFactorization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Cubic => "cubic",
            Relation::CubicFactorization => "cubic_factorization",
            Relation::Gipi => "gipi",
            Relation::QuadraticP => "quadratic_p",
            Relation::EtaRelations => "eta_relations",
            Relation::BmwQuinticFactorization => "bmw_quintic_factorization",
        }
    }

    /// Check in `Y_{d,n}` for every applicable index.
    pub fn verify(self, d: u32, n: usize) -> Result<bool> {
        if n < 2 {
            return Err(Error::InvalidArgument("relations need n ≥ 2".into()));
        }
        let u = || Laurent::u();
        let one = Element::unit(d, n);
        let all = |f: &dyn Fn(usize) -> Result<bool>| -> Result<bool> {
            for i in 1..n {
                if !f(i)? {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        match self {
            Relation::Cubic => all(&|i| {
                let g = Element::gen_g(d, n, i)?;
                let g2 = g.multiply(&g)?;
                let g3 = g2.multiply(&g)?;
                let rhs = g2.scale(&u()).add(&g)?.sub(&one.scale(&u()))?;
                Ok(g3 == rhs)
            }),
            Relation::CubicFactorization => {
                let lhs = (UPoly::x() - UPoly::constant(upoly_u(1, 0)))
                    * (UPoly::x().pow(2)
                        - UPoly::x().scale(&upoly_u(-1, 1))
                        - UPoly::constant(upoly_u(0, 1)));
                let rhs = UPoly::x().pow(3) - UPoly::x().pow(2).scale(&upoly_u(0, 1)) - UPoly::x()
                    + UPoly::constant(upoly_u(0, 1));
                if lhs != rhs {
                    return Ok(false);
                }
                all(&|i| {
                    let g = Element::gen_g(d, n, i)?;
                    let left = g.sub(&one)?;
                    let right =
                        g.multiply(&g)?.sub(&g.scale(&Laurent::u_minus_one()))?.sub(&one.scale(&u()))?;
                    Ok(left.multiply(&right)?.is_zero())
                })
            }
            Relation::Gipi => all(&|i| {
                let lhs = Element::inverse_g(d, n, i)?.sub(&Element::gen_g(d, n, i)?)?;
                let rhs = Element::p(d, n, i)?.scale(&Laurent::u_inv_minus_one());
                Ok(lhs == rhs)
            }),
            Relation::QuadraticP => all(&|i| {
                let g = Element::gen_g(d, n, i)?;
                let rhs = one.add(&Element::p(d, n, i)?.scale(&Laurent::u_minus_one()))?;
                Ok(g.multiply(&g)? == rhs)
            }),
            Relation::EtaRelations => {
                for (lhs, rhs) in singular_relations(n) {
                    if map_to_algebra(&lhs, d) != map_to_algebra(&rhs, d) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Relation::BmwQuinticFactorization => {
                // Coefficients in ℚ[m]; m is the inner variable.
                let m = |a: i64, b: i64| UPoly::new(vec![q(a), q(b)]);
                let c = UPoly::constant;
                let x = UPoly::<UPoly<Q>>::x();
                let quartic = x.pow(4)
                    + x.pow(3).scale(&m(0, 1))
                    + x.pow(2).scale(&m(-2, 1))
                    + x.scale(&(m(0, 1) * m(-1, 1)))
                    - c(m(-1, 1));
                let factors = (x.pow(2) + x.scale(&m(0, 1)) - c(m(1, 0))) * (x.pow(2) + c(m(-1, 1)));
                Ok(quartic == factors)
            }
        }
    }
}

/// `a + b·u` as an element of `ℚ[u]`.
fn upoly_u(a: i64, b: i64) -> UPoly<Q> {
    UPoly::new(vec![q(a), q(b)])
}

/// Pairs of singular braid words that must have equal `η`-images.
fn singular_relations(n: usize) -> Vec<(BraidWord, BraidWord)> {
    let s = |i| Letter::Sigma { i, inverse: false };
    let x = |i| Letter::Tau { i };
    let w = |ls: Vec<Letter>| BraidWord::new(n, ls).expect("indices in range");
    let mut out = Vec::new();
    for i in 1..n {
        out.push((w(vec![s(i), x(i)]), w(vec![x(i), s(i)])));
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                out.push((w(vec![s(i), x(j)]), w(vec![x(j), s(i)])));
                out.push((w(vec![x(i), x(j)]), w(vec![x(j), x(i)])));
            }
            if i.abs_diff(j) == 1 {
                out.push((w(vec![s(i), s(j), x(i)]), w(vec![x(j), s(i), s(j)])));
            }
        }
    }
    out
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| Error::UnknownRelation(s.to_owned()))
    }
}

/// Check the named identity in `Y_{d,n}`.
pub fn verify_relation(name: &str, d: u32, n: usize) -> Result<bool> {
    name.parse::<Relation>()?.verify(d, n)
}

/// Every defining relation of `Y_{d,n}(u)` for all applicable indices, each
/// built from generators by plain multiplication. Returns `(label, holds)`.
pub fn defining_relations(d: u32, n: usize) -> Result<Vec<(String, bool)>> {
    let g = |i| Element::gen_g(d, n, i);
    let t = |j, k| Element::gen_t(d, n, j, k);
    let mut out = Vec::new();
    let one = Element::unit(d, n);
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) == 1 {
                let l = g(i)?.multiply(&g(j)?)?.multiply(&g(i)?)?;
                let r = g(j)?.multiply(&g(i)?)?.multiply(&g(j)?)?;
                out.push((format!("g{i} g{j} g{i} = g{j} g{i} g{j}"), l == r));
            } else if i.abs_diff(j) > 1 {
                let l = g(i)?.multiply(&g(j)?)?;
                let r = g(j)?.multiply(&g(i)?)?;
                out.push((format!("g{i} g{j} = g{j} g{i}"), l == r));
            }
        }
    }
    for i in 1..=n {
        let mut p = one.clone();
        for _ in 0..d {
            p = p.multiply(&t(i, 1)?)?;
        }
        out.push((format!("t{i}^{d} = 1"), p == one));
        for j in 1..=n {
            let l = t(i, 1)?.multiply(&t(j, 1)?)?;
            let r = t(j, 1)?.multiply(&t(i, 1)?)?;
            out.push((format!("t{i} t{j} = t{j} t{i}"), l == r));
        }
    }
    for i in 1..n {
        for j in 1..=n {
            let sj = if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            };
            let l = t(j, 1)?.multiply(&g(i)?)?;
            let r = g(i)?.multiply(&t(sj, 1)?)?;
            out.push((format!("t{j} g{i} = g{i} t{sj}"), l == r));
        }
        // e_i from its definition, using only t-products.
        let mut e = Element::zero(d, n);
        for s in 0..d as i64 {
            e = e.add(&t(i, s)?.multiply(&t(i + 1, d as i64 - s)?)?)?;
        }
        let e = e.scale(&Laurent::constant(Q::new(1.into(), (d as i64).into())));
        let gi = g(i)?;
        let quad = one
            .add(&e.scale(&Laurent::u_minus_one()))?
            .add(&e.multiply(&gi)?.scale(&Laurent::u_minus_one()))?;
        out.push((format!("g{i}^2 = 1 + (u-1) e{i} + (u-1) e{i} g{i}"), gi.multiply(&gi)? == quad));
        let k = Laurent::u_inv_minus_one();
        let inv = gi.add(&e.scale(&k))?.add(&e.multiply(&gi)?.scale(&k))?;
        out.push((format!("g{i} g{i}^-1 = 1"), gi.multiply(&inv)? == one && inv.multiply(&gi)? == one));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_relations_hold() {
        for d in 1..=3 {
            for r in Relation::ALL {
                assert!(r.verify(d, 3).unwrap(), "{r} at d={d}");
            }
        }
        assert!(verify_relation("eta_relations", 2, 4).unwrap());
    }

    #[test]
    fn unknown_name_errors() {
        assert!(matches!(verify_relation("quartic", 2, 3), Err(Error::UnknownRelation(_))));
    }

    #[test]
    fn defining_relations_hold_small() {
        for d in 1..=3 {
            for n in 1..=3 {
                for (label, ok) in defining_relations(d, n).unwrap() {
                    assert!(ok, "{label} fails at d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn hecke_relation_only_at_d1() {
        // h² = (u-1)h + u characterises the d = 1 quotient.
        for d in 1..=3u32 {
            let g = Element::gen_g(d, 2, 1).unwrap();
            let rhs = g.scale(&Laurent::u_minus_one()).add(&Element::unit(d, 2).scale(&Laurent::u())).unwrap();
            assert_eq!(g.multiply(&g).unwrap() == rhs, d == 1);
        }
    }
}
