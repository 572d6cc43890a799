use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::cyclotomic::Cyclotomic;
use super::laurent::Laurent;
use super::ring::{forward_ring_ops, Field, Ring, Q};

/// Indeterminates of the coefficient tower, in monomial-order priority.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    U,
    Z,
    /// Formal framing parameter `x_m`, `m ≥ 1`.
    X(u32),
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::U => 0,
            Var::Z => 1,
            Var::X(m) => {
                assert!(m >= 1, "framing parameter index starts at 1");
                m as usize + 1
            }
        }
    }

    pub fn from_index(k: usize) -> Var {
        match k {
            0 => Var::U,
            1 => Var::Z,
            m => Var::X(m as u32 - 1),
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::U => "u".into(),
            Var::Z => "z".into(),
            Var::X(m) => format!("x{m}"),
        }
    }
}

/// Exponent vector indexed by [`Var::index`], trailing zeros trimmed.
///
/// Ordered graded-lexicographically: total degree first, then lexicographic
/// with `u > z > x1 > …`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[i32; 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, e: i32) -> Self {
        let mut m = SmallVec::from_elem(0, v.index() + 1);
        m[v.index()] = e;
        Monomial(m).trimmed()
    }

    pub fn from_exponents(e: &[i32]) -> Self {
        Monomial(SmallVec::from_slice(e)).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0.get(v.index()).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = SmallVec::with_capacity(n);
        for k in 0..n {
            v.push(self.0.get(k).copied().unwrap_or(0) + o.0.get(k).copied().unwrap_or(0));
        }
        Monomial(v).trimmed()
    }

    pub fn inverse(&self) -> Self {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn with_exponent(&self, v: Var, e: i32) -> Self {
        let mut m = self.0.clone();
        if m.len() <= v.index() {
            m.resize(v.index() + 1, 0);
        }
        m[v.index()] = e;
        Monomial(m).trimmed()
    }

    fn divides(&self, o: &Self) -> bool {
        (0..self.0.len()).all(|k| self.0[k] <= o.0.get(k).copied().unwrap_or(0))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let n = self.0.len().max(o.0.len());
            for k in 0..n {
                let (a, b) = (self.0.get(k).copied().unwrap_or(0), o.0.get(k).copied().unwrap_or(0));
                if a != b {
                    return a.cmp(&b);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            f.write_str(&Var::from_index(k).name())?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Sparse Laurent polynomial in `u, z, x1, …` with coefficients in a
/// cyclotomic field.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl Poly {
    pub fn constant(c: Cyclotomic) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn rational(c: Q) -> Self {
        Self::constant(Cyclotomic::rational(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Cyclotomic::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Cyclotomic, m: Monomial) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Embed a Laurent polynomial in `u`.
    pub fn from_laurent(l: &Laurent) -> Self {
        let mut p = Poly::default();
        for (k, c) in l.terms() {
            p.terms.insert(Monomial::var(Var::U, k), Cyclotomic::rational(c.clone()));
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Variables that occur with a nonzero exponent.
    pub fn vars(&self) -> Vec<Var> {
        let mut used = Vec::new();
        for m in self.terms.keys() {
            for (k, &e) in m.exponents().iter().enumerate() {
                if e != 0 && !used.contains(&k) {
                    used.push(k);
                }
            }
        }
        used.sort_unstable();
        used.into_iter().map(Var::from_index).collect()
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn min_monomial(&self) -> Monomial {
        let width = self.terms.keys().map(|m| m.exponents().len()).max().unwrap_or(0);
        let mut v = vec![i32::MAX; width];
        for m in self.terms.keys() {
            for (k, slot) in v.iter_mut().enumerate() {
                *slot = (*slot).min(m.exponents().get(k).copied().unwrap_or(0));
            }
        }
        if self.terms.is_empty() {
            return Monomial::one();
        }
        Monomial::from_exponents(&v)
    }

    /// Minimum and maximum exponent of `v` (0,0 for the zero polynomial).
    pub fn degree_range(&self, v: Var) -> (i32, i32) {
        let mut it = self.terms.keys().map(|m| m.exponent(v));
        match it.next() {
            None => (0, 0),
            Some(first) => it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, a)| (k.clone(), a.clone() * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    fn add_term(&mut self, m: Monomial, c: Cyclotomic) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn add_ref(&self, o: &Self) -> Self {
        let (mut acc, other) = if self.len() >= o.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), c.clone());
        }
        acc
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let mut acc = self.clone();
        for (m, c) in &o.terms {
            acc.add_term(m.clone(), -c.clone());
        }
        acc
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let mut acc = Poly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                acc.add_term(m1.mul(m2), c1.clone() * c2);
            }
        }
        acc
    }

    fn neg_ref(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    /// Exact quotient in the Laurent ring, if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        // Monomials are units: shift both to ordinary polynomials and divide there.
        let sf = self.min_monomial().inverse();
        let sg = divisor.min_monomial().inverse();
        let mut rem = self.mul_monomial(&sf);
        let g = divisor.mul_monomial(&sg);
        let (lm, lc) = g.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let lc_inv = lc.inv();
        let mut quot = Poly::default();
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&rm) {
                return None;
            }
            let qm = rm.mul(&lm.inverse());
            let qc = rc * &lc_inv;
            rem = rem.sub_ref(&g.mul_monomial(&qm).scale(&qc));
            quot.add_term(qm, qc);
        }
        // self·sf = quot·divisor·sg  ⇒  self = quot·divisor·(sg/sf)
        Some(quot.mul_monomial(&sg.mul(&sf.inverse())))
    }

    /// Replace every coefficient-level occurrence of `v` by `value`.
    pub fn eval_var(&self, v: Var, value: &Poly) -> Poly {
        let mut acc = Poly::zero();
        let mut powers: BTreeMap<i32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = Poly::term(c.clone(), m.with_exponent(v, 0));
            let pw = powers
                .entry(e)
                .or_insert_with(|| {
                    assert!(e >= 0, "negative power in polynomial substitution");
                    value.pow(e as u32)
                })
                .clone();
            acc = acc.add_ref(&rest.mul_ref(&pw));
        }
        acc
    }
}

forward_ring_ops!(Poly);

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Cyclotomic::one())
    }
}

impl Ring for Poly {
    fn from_int(n: i64) -> Self {
        Poly::constant(Cyclotomic::from_int(n))
    }
}

impl From<Cyclotomic> for Poly {
    fn from(c: Cyclotomic) -> Self {
        Poly::constant(c)
    }
}

impl From<&Laurent> for Poly {
    fn from(l: &Laurent) -> Self {
        Poly::from_laurent(l)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms in descending graded-lex order, e.g. `2*u^2*z - 1/2*z^-1 + (1 + zeta3)*x1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_rational();
            let mag = if neg { -c.clone() } else { c.clone() };
            let sep = match (k == 0, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            f.write_str(sep)?;
            let coeff = if mag.as_rational().is_some() { mag.to_string() } else { format!("({mag})") };
            if m.is_one() {
                f.write_str(&coeff)?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ring::q;

    fn u() -> Poly {
        Poly::var(Var::U)
    }
    fn z() -> Poly {
        Poly::var(Var::Z)
    }

    #[test]
    fn grlex_rendering() {
        let p = u() * &u() * &z() - &(z() * &Poly::rational(q(3))) + &Poly::var(Var::X(2)) + &Poly::one();
        assert_eq!(p.to_string(), "u^2*z - 3*z + x2 + 1");
    }

    #[test]
    fn exact_division() {
        let f = (u() + &z()) * &(u() - &Poly::one());
        assert_eq!(f.exact_div(&(u() + &z())), Some(u() - &Poly::one()));
        assert_eq!(f.exact_div(&(u() + &Poly::one())), None);
        // Laurent: (u^-1 + z) / (1 + u z) = u^-1
        let g = Poly::term(Cyclotomic::one(), Monomial::var(Var::U, -1)) + &z();
        let h = Poly::one() + &(u() * &z());
        assert_eq!(g.exact_div(&h), Some(Poly::term(Cyclotomic::one(), Monomial::var(Var::U, -1))));
    }

    #[test]
    fn eval_var_substitutes() {
        let f = u() * &u() + &z();
        let got = f.eval_var(Var::U, &(z() + &Poly::one()));
        assert_eq!(got, z() * &z() + &(z() * &Poly::rational(q(3))) + &Poly::one());
    }
}
