//! Brute-force reference for `d = 1`: the Iwahori–Hecke algebra `H_n(u)`
//! on the permutation basis, with the Markov trace obtained by solving the
//! trace axioms as a linear system. Shares only the scalar types with the
//! library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use yhecke::scalars::{HalfPowerValue, RatFunc, Var};

/// One-line permutation, 0-based: `p[k] = w(k)`.
pub type Perm = Vec<usize>;

pub fn u() -> RatFunc {
    RatFunc::var(Var::U)
}

pub fn z() -> RatFunc {
    RatFunc::var(Var::Z)
}

fn length(p: &Perm) -> usize {
    (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

/// `s_i ∘ w`: swap the values `i` and `i+1`.
fn left_s(i: usize, w: &Perm) -> Perm {
    w.iter().map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v }).collect()
}

/// `w ∘ s_i`: swap the entries at positions `i` and `i+1`.
fn right_s(w: &Perm, i: usize) -> Perm {
    let mut p = w.clone();
    p.swap(i, i + 1);
    p
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, rest: &mut Vec<usize>, out: &mut Vec<Perm>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            prefix.push(v);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// A word `s_{i1} ⋯ s_{ik}` (1-based indices) of minimal length for `w`.
pub fn reduced_word(w: &Perm) -> Vec<usize> {
    // Peel descents off the right: w = w' s_i with ℓ(w') < ℓ(w).
    let mut p = w.clone();
    let mut rev = Vec::new();
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        rev.push(i + 1);
        p = right_s(&p, i);
    }
    rev.reverse();
    rev
}

#[derive(Clone, Debug)]
pub struct Hecke {
    pub n: usize,
    pub terms: BTreeMap<Perm, RatFunc>,
}

impl Hecke {
    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0..n).collect(), RatFunc::one());
        Hecke { n, terms }
    }

    fn add(&mut self, w: Perm, c: RatFunc) {
        let e = self.terms.entry(w).or_insert_with(RatFunc::zero);
        *e = e.clone() + &c;
    }

    fn cleaned(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    /// `T_i · self`, `1 ≤ i < n`, by `T_s T_w = T_{sw}` or
    /// `u T_{sw} + (u−1) T_w`.
    pub fn left_t(&self, i: usize) -> Self {
        let mut out = Hecke { n: self.n, terms: BTreeMap::new() };
        for (w, c) in &self.terms {
            let sw = left_s(i - 1, w);
            if length(&sw) > length(w) {
                out.add(sw, c.clone());
            } else {
                out.add(sw, u() * c);
                out.add(w.clone(), (u() - &RatFunc::one()) * c);
            }
        }
        out.cleaned()
    }

    /// `self · T_i`.
    pub fn right_t(&self, i: usize) -> Self {
        let mut out = Hecke { n: self.n, terms: BTreeMap::new() };
        for (w, c) in &self.terms {
            let ws = right_s(w, i - 1);
            if length(&ws) > length(w) {
                out.add(ws, c.clone());
            } else {
                out.add(ws, u() * c);
                out.add(w.clone(), (u() - &RatFunc::one()) * c);
            }
        }
        out.cleaned()
    }

    fn scale(&self, a: &RatFunc) -> Self {
        Hecke { n: self.n, terms: self.terms.iter().map(|(w, c)| (w.clone(), c.clone() * a)).collect() }.cleaned()
    }

    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add(w.clone(), c.clone());
        }
        out.cleaned()
    }

    /// `T_i^{-1} · self = (u⁻¹ T_i + (u⁻¹ − 1)) · self`.
    pub fn left_t_inv(&self, i: usize) -> Self {
        let ui = u().inv().unwrap();
        self.left_t(i).scale(&ui).plus(&self.scale(&(ui - &RatFunc::one())))
    }

    /// Product of generator letters `(i, inverse)`, leftmost first.
    pub fn word(n: usize, letters: &[(usize, bool)]) -> Self {
        let mut h = Hecke::one(n);
        for &(i, inv) in letters.iter().rev() {
            h = if inv { h.left_t_inv(i) } else { h.left_t(i) };
        }
        h
    }

    pub fn basis(n: usize, w: &Perm) -> Self {
        Hecke::word(n, &reduced_word(w).into_iter().map(|i| (i, false)).collect::<Vec<_>>())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Hecke { n: self.n, terms: BTreeMap::new() };
        for (w, c) in &o.terms {
            let mut part = self.clone();
            for i in reduced_word(w) {
                part = part.right_t(i);
            }
            out = out.plus(&part.scale(c));
        }
        out
    }
}

/// Exact Gaussian elimination; returns the unique solution.
fn solve(mut rows: Vec<(Vec<RatFunc>, RatFunc)>, unknowns: usize) -> Vec<RatFunc> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k].0[col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].0[col].inv().unwrap();
        let (pr, pb) = (rows[r].0.iter().map(|c| c.clone() * &inv).collect::<Vec<_>>(), rows[r].1.clone() * &inv);
        rows[r] = (pr.clone(), pb.clone());
        for k in 0..rows.len() {
            if k != r && !rows[k].0[col].is_zero() {
                let f = rows[k].0[col].clone();
                for j in 0..unknowns {
                    rows[k].0[j] = rows[k].0[j].clone() - &(f.clone() * &pr[j]);
                }
                rows[k].1 = rows[k].1.clone() - &(f * &pb);
            }
        }
        pivots.push(col);
        r += 1;
    }
    assert_eq!(pivots.len(), unknowns, "trace axioms must determine the trace");
    for row in &rows[r..] {
        assert!(row.1.is_zero(), "inconsistent trace axioms");
    }
    let mut x = vec![RatFunc::zero(); unknowns];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = rows[k].1.clone();
    }
    x
}

/// The Markov trace on `H_n(u)` as values on the permutation basis, solved
/// from `tr(1) = 1`, `tr(T_w T_{m}) = z tr(T_w)` for `w ∈ S_m ⊂ S_n`, and
/// `tr(T_i X) = tr(X T_i)` for all basis `X` and generators `T_i`.
pub struct OcneanuOracle {
    pub n: usize,
    index: BTreeMap<Perm, usize>,
    values: Vec<RatFunc>,
}

impl OcneanuOracle {
    pub fn new(n: usize) -> Self {
        let perms = all_perms(n);
        let index: BTreeMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        let m = perms.len();
        let row_of = |h: &Hecke| -> Vec<RatFunc> {
            let mut r = vec![RatFunc::zero(); m];
            for (w, c) in &h.terms {
                r[index[w]] = r[index[w]].clone() + c;
            }
            r
        };
        let mut rows = Vec::new();
        rows.push((row_of(&Hecke::one(n)), RatFunc::one()));
        for w in &perms {
            let tw = Hecke::basis(n, w);
            // Markov: w ∈ S_m for every m above its last moved point.
            let top = (0..n).rev().find(|&k| w[k] != k).unwrap_or(0);
            for m in (top + 1)..n {
                let lhs = row_of(&tw.right_t(m));
                let rhs = row_of(&tw);
                rows.push((lhs.into_iter().zip(rhs).map(|(a, b)| a - &(b * &z())).collect(), RatFunc::zero()));
            }
            for i in 1..n {
                let a = row_of(&tw.left_t(i));
                let b = row_of(&tw.right_t(i));
                rows.push((a.into_iter().zip(b).map(|(x, y)| x - &y).collect(), RatFunc::zero()));
            }
        }
        let values = solve(rows, m);
        OcneanuOracle { n, index, values }
    }

    pub fn trace(&self, h: &Hecke) -> RatFunc {
        assert_eq!(h.n, self.n);
        h.terms.iter().fold(RatFunc::zero(), |acc, (w, c)| acc + &(c.clone() * &self.values[self.index[w]]))
    }
}

/// `λ = (z + 1 − u)/(u z)`.
pub fn lambda() -> RatFunc {
    (z() + &RatFunc::one() - &u()).div(&(u() * &z())).unwrap()
}

/// `z^{-(n-1)} λ^{(ε−n+1)/2} tr(T(β))` for a classical braid given as
/// letters `(i, inverse)` on `n` strands.
pub fn homflypt_oracle(oracle: &OcneanuOracle, letters: &[(usize, bool)]) -> HalfPowerValue {
    let n = oracle.n;
    let eps: i64 = letters.iter().map(|&(_, inv)| if inv { -1 } else { 1 }).sum();
    let k = eps - n as i64 + 1;
    let tr = oracle.trace(&Hecke::word(n, letters));
    let r = tr.div(&z().pow(n as i32 - 1).unwrap()).unwrap() * &lambda().pow(k.div_euclid(2) as i32).unwrap();
    HalfPowerValue::new(r, k.rem_euclid(2) == 1, lambda())
}
