//! Fraction-free row echelon form over `ℚ[u]`, used for span membership
//! over `ℚ(u)`.

use num_traits::{One, Zero};

use crate::scalars::{UPoly, Q};

pub(crate) type Row = Vec<UPoly<Q>>;

#[derive(Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Row)>,
}

impl Echelon {
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` modulo the span; zero iff `v` lies in it.
    pub(crate) fn reduce(&self, mut v: Row) -> Row {
        for (p, r) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let (a, b) = (r[*p].clone(), v[*p].clone());
            for (vi, ri) in v.iter_mut().zip(r) {
                if ri.is_zero() && vi.is_zero() {
                    continue;
                }
                *vi = a.clone() * &*vi - &(b.clone() * ri);
            }
            primitive(&mut v);
        }
        v
    }

    /// Add `v` to the span; returns false if it was already inside.
    pub(crate) fn insert(&mut self, v: Row) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|c| !c.is_zero()) {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }
}

pub(crate) fn is_zero_row(v: &Row) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Divide by the monic gcd of the entries.
fn primitive(v: &mut Row) {
    let mut g = UPoly::zero();
    for c in v.iter() {
        if !c.is_zero() {
            g = if g.is_zero() { c.monic() } else { g.gcd(c) };
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for c in v.iter_mut() {
        if !c.is_zero() {
            *c = c.exact_div(&g).expect("gcd divides every entry");
        }
    }
}
