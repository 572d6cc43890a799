//! `Y_{d,n}(u)` in split normal form.
//!
//! Every element is a sparse combination of words `t_1^{a_1}⋯t_n^{a_n}·g_w`
//! with `a ∈ (ℤ/d)^n`, `w ∈ S_n`. Permutations are stored in one-line form
//! (0-based, `perm[i] = w(i)`); products compose right-to-left. Products are
//! computed by right multiplication with single generators:
//!
//! * `t^a g_w · t_j^k = t^a t_{w(j)}^k · g_w`
//! * `t^a g_w · g_i = t^a g_{w s_i}` when `w(i) < w(i+1)`
//! * otherwise, with `w' = w s_i`,
//!   `g_w g_i = g_{w'} + (u-1) g_{w'} e_i + (u-1) g_w e_i`, and each
//!   `e_i` on the right is expanded into `d` framing monomials moved left
//!   through `g`.

mod generators;
mod relations;

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalars::{q, q_frac, Laurent};

pub use generators::{map_to_algebra, quotient_generator, QuotientKind};
pub use relations::{defining_relations, verify_relation, Relation};

pub(crate) type Small = SmallVec<[u8; 8]>;

/// `t_1^{a_1}⋯t_n^{a_n} · g_w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisWord {
    framing: Small,
    perm: Small,
}

impl BasisWord {
    pub fn identity(n: usize) -> Self {
        BasisWord { framing: SmallVec::from_elem(0, n), perm: (0..n as u8).collect() }
    }

    /// From a framing vector (residues mod `d`) and a 0-based one-line permutation.
    pub fn new(framing: &[u8], perm: &[u8]) -> Self {
        assert_eq!(framing.len(), perm.len());
        debug_assert!({
            let mut seen = vec![false; perm.len()];
            perm.iter().all(|&p| (p as usize) < perm.len() && !std::mem::replace(&mut seen[p as usize], true))
        });
        BasisWord { framing: SmallVec::from_slice(framing), perm: SmallVec::from_slice(perm) }
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    pub fn framing(&self) -> &[u8] {
        &self.framing
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    /// Coxeter length (number of inversions).
    pub fn length(&self) -> usize {
        let p = &self.perm;
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
    }

    /// Reduced word `[i_1, …, i_m]` (0-based generator indices) with
    /// `w = s_{i_1}⋯s_{i_m}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.perm.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for i in 0..p.len().saturating_sub(1) {
                if p[i] > p[i + 1] {
                    p.swap(i, i + 1);
                    rev.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    pub(crate) fn from_parts(framing: Small, perm: Small) -> Self {
        BasisWord { framing, perm }
    }
}

impl fmt::Debug for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `t(a_1,…,a_n)·g[w(1) … w(n)]` with 1-based permutation entries.
impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.framing.iter().map(|x| x.to_string()).collect();
        let w: Vec<String> = self.perm.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "t({})·g[{}]", a.join(","), w.join(" "))
    }
}

/// Element of `Y_{d,n}(u)` with coefficients in `ℚ[u, u⁻¹]`.
#[derive(Clone, PartialEq)]
pub struct Element {
    d: u32,
    n: usize,
    terms: FxHashMap<BasisWord, Laurent>,
}

impl Element {
    pub fn zero(d: u32, n: usize) -> Self {
        assert!(d >= 1 && n >= 1, "Y_{{d,n}} needs d, n ≥ 1");
        assert!(d <= 255, "framing residues are stored as bytes");
        Element { d, n, terms: FxHashMap::default() }
    }

    pub fn unit(d: u32, n: usize) -> Self {
        Self::word(d, BasisWord::identity(n))
    }

    pub fn word(d: u32, w: BasisWord) -> Self {
        Self::term(d, w, Laurent::one())
    }

    pub fn term(d: u32, w: BasisWord, c: Laurent) -> Self {
        let mut e = Self::zero(d, w.strands());
        e.add_term(w, c);
        e
    }

    /// `g_i`, `1 ≤ i ≤ n-1`.
    pub fn gen_g(d: u32, n: usize, i: usize) -> Result<Self> {
        check_g(n, i)?;
        let mut w = BasisWord::identity(n);
        w.perm.swap(i - 1, i);
        Ok(Self::word(d, w))
    }

    /// `t_j^k`, `1 ≤ j ≤ n`, `k` reduced mod `d`.
    pub fn gen_t(d: u32, n: usize, j: usize, k: i64) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange(format!("t_{j} on {n} strands")));
        }
        let mut w = BasisWord::identity(n);
        w.framing[j - 1] = k.rem_euclid(d as i64) as u8;
        Ok(Self::word(d, w))
    }

    /// `g_i⁻¹ = g_i + (u⁻¹-1) e_i + (u⁻¹-1) e_i g_i`.
    pub fn inverse_g(d: u32, n: usize, i: usize) -> Result<Self> {
        check_g(n, i)?;
        Ok(Self::unit(d, n).mul_g_inverse(i - 1))
    }

    /// `e_i^{(k)} = (1/d) Σ_s t_i^{k+s} t_{i+1}^{-s}`; `k = 0` gives `e_i`.
    pub fn idempotent_e(d: u32, n: usize, i: usize, k: i64) -> Result<Self> {
        check_g(n, i)?;
        let mut e = Self::zero(d, n);
        let c = Laurent::constant(q_frac(1, d as i64));
        for s in 0..d as i64 {
            let mut w = BasisWord::identity(n);
            w.framing[i - 1] = (k + s).rem_euclid(d as i64) as u8;
            w.framing[i] = (-s).rem_euclid(d as i64) as u8;
            e.add_term(w, c.clone());
        }
        Ok(e)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// Number of basis words with nonzero coefficient.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &BasisWord) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_else(Laurent::zero)
    }

    /// Terms sorted by (framing vector, permutation).
    pub fn sorted_terms(&self) -> Vec<(&BasisWord, &Laurent)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, w: BasisWord, c: Laurent) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
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

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.d != o.d || self.n != o.n {
            return Err(Error::ContextMismatch(format!(
                "Y_{{{},{}}} vs Y_{{{},{}}}",
                self.d, self.n, o.d, o.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&Laurent::constant(q(-1))))
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        let mut r = Self::zero(self.d, self.n);
        if c.is_zero() {
            return r;
        }
        for (w, a) in &self.terms {
            r.terms.insert(w.clone(), a.clone() * c);
        }
        r
    }

    /// The same element in `Y_{d,m}`, `m ≥ n`.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.n);
        let mut r = Self::zero(self.d, m);
        for (w, c) in &self.terms {
            let mut f = w.framing.clone();
            let mut p = w.perm.clone();
            for k in self.n..m {
                f.push(0);
                p.push(k as u8);
            }
            r.terms.insert(BasisWord { framing: f, perm: p }, c.clone());
        }
        r
    }

    /// Right multiplication by `t_j^k`, `j` 0-based.
    pub(crate) fn mul_t0(&self, j: usize, k: u8) -> Self {
        if k == 0 {
            return self.clone();
        }
        let d = self.d as u8;
        let mut r = Self::zero(self.d, self.n);
        for (w, c) in &self.terms {
            let mut w2 = w.clone();
            let slot = w.perm[j] as usize;
            w2.framing[slot] = ((w2.framing[slot] as u32 + k as u32) % d as u32) as u8;
            r.terms.insert(w2, c.clone());
        }
        r
    }

    /// Right multiplication by a framing monomial `t^b`.
    pub(crate) fn mul_framing(&self, b: &[u8]) -> Self {
        if b.iter().all(|&x| x == 0) {
            return self.clone();
        }
        let d = self.d;
        let mut r = Self::zero(self.d, self.n);
        for (w, c) in &self.terms {
            let mut w2 = w.clone();
            for (j, &bj) in b.iter().enumerate() {
                let slot = w.perm[j] as usize;
                w2.framing[slot] = ((w2.framing[slot] as u32 + bj as u32) % d) as u8;
            }
            r.terms.insert(w2, c.clone());
        }
        r
    }

    /// Right multiplication by `g_i`, `i` 0-based.
    pub(crate) fn mul_g0(&self, i: usize) -> Self {
        let d = self.d;
        let mut r = Self::zero(d, self.n);
        let coef = Laurent::u_minus_one().scale(&q_frac(1, d as i64));
        for (w, c) in &self.terms {
            let mut swapped = w.clone();
            swapped.perm.swap(i, i + 1);
            if w.perm[i] < w.perm[i + 1] {
                r.add_term(swapped, c.clone());
                continue;
            }
            // w' = w s_i is `swapped`; the quadratic relation expands.
            let cc = c.clone() * &coef;
            let (p_i, p_i1) = (swapped.perm[i] as usize, swapped.perm[i + 1] as usize);
            for s in 0..d {
                let mut f = w.framing.clone();
                f[p_i] = ((f[p_i] as u32 + s) % d) as u8;
                f[p_i1] = ((f[p_i1] as u32 + d - s) % d) as u8;
                r.add_term(BasisWord { framing: f.clone(), perm: swapped.perm.clone() }, cc.clone());
                r.add_term(BasisWord { framing: f, perm: w.perm.clone() }, cc.clone());
            }
            r.add_term(swapped, c.clone());
        }
        r
    }

    /// Right multiplication by `e_i^{(k)}`, `i` 0-based.
    pub(crate) fn mul_e0(&self, i: usize, k: u32) -> Self {
        let d = self.d;
        let mut r = Self::zero(d, self.n);
        let inv_d = q_frac(1, d as i64);
        for s in 0..d {
            let mut b: Small = SmallVec::from_elem(0, self.n);
            b[i] = ((k + s) % d) as u8;
            b[i + 1] = ((d - s) % d) as u8;
            for (w, c) in self.mul_framing(&b).terms {
                r.add_term(w, c.scale(&inv_d));
            }
        }
        r
    }

    /// Right multiplication by `g_i⁻¹`, `i` 0-based.
    pub(crate) fn mul_g_inverse(&self, i: usize) -> Self {
        let k = Laurent::u_inv_minus_one();
        let e = self.mul_e0(i, 0);
        let mut r = self.mul_g0(i);
        for (w, c) in e.mul_g0(i).terms.into_iter().chain(e.terms) {
            r.add_term(w, c * &k);
        }
        r
    }

    /// Right multiplication by the basis word `t^b g_v`.
    pub(crate) fn mul_word(&self, w: &BasisWord) -> Self {
        let mut r = self.mul_framing(&w.framing);
        for i in w.reduced_word() {
            r = r.mul_g0(i);
        }
        r
    }

    /// Product in split normal form.
    pub fn multiply(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut acc = Self::zero(self.d, self.n);
        for (w, c) in &o.terms {
            for (w2, c2) in self.mul_word(w).terms {
                acc.add_term(w2, c2 * c);
            }
        }
        Ok(acc)
    }

    /// All `d^n · n!` split-basis words.
    pub fn basis(d: u32, n: usize) -> Vec<BasisWord> {
        let perms = permutations(n);
        let mut out = Vec::with_capacity(perms.len() * (d as usize).pow(n as u32));
        for f in framings(d, n) {
            for p in &perms {
                out.push(BasisWord { framing: f.clone(), perm: p.clone() });
            }
        }
        out
    }

    /// Random element with `terms` basis words and small integer Laurent coefficients.
    pub fn random<R: Rng>(d: u32, n: usize, terms: usize, rng: &mut R) -> Self {
        let mut e = Self::zero(d, n);
        for _ in 0..terms {
            let framing: Small = (0..n).map(|_| rng.gen_range(0..d) as u8).collect();
            let mut perm: Small = (0..n as u8).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let low = rng.gen_range(-1..=1);
            let coeffs = (0..rng.gen_range(1..=2)).map(|_| q(rng.gen_range(-3..=3))).collect();
            e.add_term(BasisWord { framing, perm }, Laurent::new(low, coeffs));
        }
        e
    }
}

fn check_g(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("g_{i} on {n} strands")));
    }
    Ok(())
}

pub(crate) fn permutations(n: usize) -> Vec<Small> {
    fn rec(prefix: &mut Small, used: &mut [bool], out: &mut Vec<Small>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                prefix.push(k as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut SmallVec::new(), &mut vec![false; n], &mut out);
    out
}

pub(crate) fn framings(d: u32, n: usize) -> Vec<Small> {
    let mut out: Vec<Small> = vec![SmallVec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f| {
                (0..d).map(move |a| {
                    let mut g = f.clone();
                    g.push(a as u8);
                    g
                })
            })
            .collect();
    }
    out
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Deterministic rendering, terms sorted by (framing, permutation).
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.sorted_terms().into_iter().map(|(w, c)| format!("({c})·{w}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

pub fn gen_g(d: u32, n: usize, i: usize) -> Result<Element> {
    Element::gen_g(d, n, i)
}

pub fn gen_t(d: u32, n: usize, j: usize, k: i64) -> Result<Element> {
    Element::gen_t(d, n, j, k)
}

pub fn unit(d: u32, n: usize) -> Element {
    Element::unit(d, n)
}

pub fn multiply(a: &Element, b: &Element) -> Result<Element> {
    a.multiply(b)
}

pub fn inverse_g(d: u32, n: usize, i: usize) -> Result<Element> {
    Element::inverse_g(d, n, i)
}

pub fn idempotent_e(d: u32, n: usize, i: usize, k: i64) -> Result<Element> {
    Element::idempotent_e(d, n, i, k)
}
