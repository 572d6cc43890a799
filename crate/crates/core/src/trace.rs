//! The Markov trace on the tower `Y_{d,1} ⊂ Y_{d,2} ⊂ ⋯`.
//!
//! The trace is evaluated word by word. For `t^a g_w` on `n` strands let
//! `k = w⁻¹(n)`:
//!
//! * `k = n`: the top strand is isolated, so `tr = x_{a_n} · tr(rest)`.
//! * `k < n`: `g_w = g_v · g_{n-1} g_{n-2} ⋯ g_k` with `v ∈ S_{n-1}`, and
//!   `t_n^{a_n}` travels to the right end as `t_k^{a_n}`. Writing the word
//!   as `A · g_{n-1} · B` with `A, B ∈ Y_{d,n-1}`, conjugation invariance and
//!   the Markov property give `tr(A g_{n-1} B) = tr(B A g_{n-1}) = z tr(BA)
//!   = z tr(AB)`; `AB` is renormalized and the recursion continues.
//!
//! Values are kept as [`Poly`] in `u^{±1}`, `z` and the framing parameters
//! (formal `x_m`, or constants once specialized).

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::esystem::ESolution;
use crate::scalars::{Cyclotomic, Poly, RatFunc, Var};
use crate::yalgebra::{BasisWord, Element};

/// The values `x_0 = 1, x_1, …, x_{d-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceParams {
    d: u32,
    xs: Vec<Poly>,
    generic: bool,
}

impl TraceParams {
    /// Formal parameters `x_1, …, x_{d-1}`.
    pub fn generic(d: u32) -> Self {
        assert!(d >= 1);
        let xs = (0..d).map(|m| if m == 0 { Poly::one() } else { Poly::var(Var::X(m)) }).collect();
        TraceParams { d, xs, generic: true }
    }

    /// Specialized parameters given as `x_1, …, x_{d-1}`.
    pub fn specialized(d: u32, params: &[Cyclotomic]) -> Result<Self> {
        Self::from_polys(d, params.iter().cloned().map(Poly::constant).collect())
    }

    /// Parameters that may depend on `u` (or be any polynomial).
    pub fn from_polys(d: u32, params: Vec<Poly>) -> Result<Self> {
        if d == 0 || params.len() + 1 != d as usize {
            return Err(Error::InvalidArgument(format!("expected {} framing parameters for d = {d}", d.max(1) - 1)));
        }
        let mut xs = vec![Poly::one()];
        xs.extend(params);
        Ok(TraceParams { d, xs, generic: false })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_generic(&self) -> bool {
        self.generic
    }

    /// `x_m`, index taken mod `d`.
    pub fn x(&self, m: i64) -> &Poly {
        &self.xs[m.rem_euclid(self.d as i64) as usize]
    }
}

/// Trace evaluator with a memo table of word values; reusable across calls
/// with the same parameters.
pub struct Tracer {
    params: TraceParams,
    memo: FxHashMap<BasisWord, Poly>,
    z: Poly,
}

impl Tracer {
    pub fn new(params: TraceParams) -> Self {
        Tracer { params, memo: FxHashMap::default(), z: Poly::var(Var::Z) }
    }

    pub fn params(&self) -> &TraceParams {
        &self.params
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn trace(&mut self, e: &Element) -> Result<Poly> {
        if e.d() != self.params.d {
            return Err(Error::ContextMismatch(format!("element over d = {} traced with d = {}", e.d(), self.params.d)));
        }
        let mut acc = Poly::zero();
        for (w, c) in e.terms() {
            acc = acc + &(Poly::from_laurent(c) * &self.trace_word(w));
        }
        Ok(acc)
    }

    pub fn trace_word(&mut self, w: &BasisWord) -> Poly {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let v = self.compute(w);
        self.memo.insert(w.clone(), v.clone());
        v
    }

    fn compute(&mut self, w: &BasisWord) -> Poly {
        let n = w.strands();
        let (f, p) = (w.framing(), w.perm());
        let top = n - 1;
        let x_top = self.params.x(f[top] as i64).clone();
        if n == 1 {
            return x_top;
        }
        let k = p.iter().position(|&x| x as usize == top).expect("permutation");
        if k == top {
            let rest = BasisWord::new(&f[..top], &p[..top]);
            return x_top * &self.trace_word(&rest);
        }
        let vp: SmallVec<[u8; 8]> = p[..k].iter().chain(&p[k + 1..]).copied().collect();
        let mut ab = Element::word(self.params.d, BasisWord::new(&f[..top], &vp));
        for j in (k..top - 1).rev() {
            ab = ab.mul_g0(j);
        }
        ab = ab.mul_t0(k, f[top]);
        let mut acc = Poly::zero();
        for (w2, c) in ab.terms() {
            acc = acc + &(Poly::from_laurent(c) * &self.trace_word(w2));
        }
        acc * &self.z
    }
}

/// `tr(e)` with the given parameters.
pub fn juyumaya_trace(e: &Element, p: &TraceParams) -> Result<RatFunc> {
    Ok(RatFunc::from_poly(Tracer::new(p.clone()).trace(e)?))
}

/// The trace at `d = 1`, where it is the Ocneanu trace with `z` in the role of `ζ`.
pub fn ocneanu_trace(e: &Element) -> Result<RatFunc> {
    if e.d() != 1 {
        return Err(Error::InvalidArgument(format!("the Ocneanu trace needs d = 1, got {}", e.d())));
    }
    juyumaya_trace(e, &TraceParams::generic(1))
}

pub fn specialized_params(sol: &ESolution) -> TraceParams {
    TraceParams::specialized(sol.d(), sol.params()).expect("solution has d-1 parameters")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::esystem::{build_solution, enumerate_solutions};
    use crate::scalars::{parse_ratfunc, q_frac};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tr(e: &Element, p: &TraceParams) -> RatFunc {
        juyumaya_trace(e, p).unwrap()
    }

    #[test]
    fn unit_and_markov_basics() {
        for d in 1..=3 {
            let p = TraceParams::generic(d);
            assert_eq!(tr(&Element::unit(d, 3), &p), RatFunc::one());
            assert_eq!(tr(&Element::gen_g(d, 2, 1).unwrap(), &p), RatFunc::var(Var::Z));
        }
        let h = Element::gen_g(1, 2, 1).unwrap();
        assert_eq!(ocneanu_trace(&h).unwrap(), RatFunc::var(Var::Z));
        let h2 = h.multiply(&h).unwrap();
        assert_eq!(ocneanu_trace(&h2).unwrap(), parse_ratfunc("(u-1)*z + u").unwrap());
        assert!(ocneanu_trace(&Element::unit(2, 1)).is_err());
    }

    #[test]
    fn g1g2g1_at_d1() {
        let g = |i| Element::gen_g(1, 3, i).unwrap();
        let w = g(1).multiply(&g(2)).unwrap().multiply(&g(1)).unwrap();
        assert_eq!(ocneanu_trace(&w).unwrap(), parse_ratfunc("(u-1)*z^2 + u*z").unwrap());
    }

    #[test]
    fn trace_of_e_is_e_sum() {
        for d in 1..=4u32 {
            let p = TraceParams::generic(d);
            let e = Element::idempotent_e(d, 2, 1, 0).unwrap();
            let mut expected = Poly::zero();
            for s in 0..d as i64 {
                expected = expected + &(p.x(s).clone() * p.x(-s));
            }
            let expected = RatFunc::from_poly(expected.scale(&Cyclotomic::rational(q_frac(1, d as i64))));
            assert_eq!(tr(&e, &p), expected);
        }
    }

    #[test]
    fn specialized_e_is_reciprocal_size() {
        for d in 1..=4 {
            for sol in enumerate_solutions(d).unwrap() {
                let p = specialized_params(&sol);
                let e = Element::idempotent_e(d, 2, 1, 0).unwrap();
                assert_eq!(tr(&e, &p), RatFunc::rational(q_frac(1, sol.size() as i64)), "{sol}");
            }
        }
        let p = specialized_params(&build_solution(2, &[0, 1]).unwrap());
        assert!(p.x(1).is_zero());
    }

    #[test]
    fn markov_and_framing_rules_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in 1..=3 {
            let p = TraceParams::generic(d);
            let mut t = Tracer::new(p.clone());
            for n in 1..=3 {
                for _ in 0..5 {
                    let a = Element::random(d, n, 3, &mut rng);
                    let base = t.trace(&a).unwrap();
                    let up = a.embed(n + 1);
                    let ag = up.multiply(&Element::gen_g(d, n + 1, n).unwrap()).unwrap();
                    assert_eq!(t.trace(&ag).unwrap(), base.clone() * &Poly::var(Var::Z));
                    for m in 0..d as i64 {
                        let at = up.multiply(&Element::gen_t(d, n + 1, n + 1, m).unwrap()).unwrap();
                        assert_eq!(t.trace(&at).unwrap(), base.clone() * p.x(m));
                    }
                }
            }
        }
    }

    #[test]
    fn top_generator_lemma() {
        // tr(A g_n B) = z tr(AB) for A, B below the top strand.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for d in 1..=3 {
            let mut t = Tracer::new(TraceParams::generic(d));
            for n in 1..=3 {
                for _ in 0..4 {
                    let a = Element::random(d, n, 2, &mut rng);
                    let b = Element::random(d, n, 2, &mut rng);
                    let g = Element::gen_g(d, n + 1, n).unwrap();
                    let agb = a.embed(n + 1).multiply(&g).unwrap().multiply(&b.embed(n + 1)).unwrap();
                    let ab = a.multiply(&b).unwrap();
                    assert_eq!(t.trace(&agb).unwrap(), t.trace(&ab).unwrap() * &Poly::var(Var::Z));
                }
            }
        }
    }

    #[test]
    fn conjugation_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 1..=3 {
            let mut t = Tracer::new(TraceParams::generic(d));
            for n in 2..=3 {
                for _ in 0..3 {
                    let a = Element::random(d, n, 3, &mut rng);
                    let base = t.trace(&a).unwrap();
                    for i in 1..n {
                        let g = Element::gen_g(d, n, i).unwrap();
                        let gi = Element::inverse_g(d, n, i).unwrap();
                        let c = g.multiply(&a).unwrap().multiply(&gi).unwrap();
                        assert_eq!(t.trace(&c).unwrap(), base);
                    }
                    let tj = Element::gen_t(d, n, 1, 1).unwrap();
                    let tji = Element::gen_t(d, n, 1, -1).unwrap();
                    assert_eq!(t.trace(&tj.multiply(&a).unwrap().multiply(&tji).unwrap()).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn e_condition_fails_generically() {
        for d in 2..=3 {
            let p = TraceParams::generic(d);
            let alpha = Element::gen_t(d, 2, 1, 1).unwrap();
            let e = Element::idempotent_e(d, 2, 1, 0).unwrap();
            let lhs = tr(&alpha.multiply(&e).unwrap(), &p);
            let rhs = tr(&e, &p) * &tr(&alpha, &p);
            assert_ne!(lhs, rhs);
        }
    }

    #[test]
    fn context_mismatch_is_reported() {
        let mut t = Tracer::new(TraceParams::generic(2));
        assert!(matches!(t.trace(&Element::unit(3, 2)), Err(Error::ContextMismatch(_))));
        assert!(TraceParams::specialized(3, &[]).is_err());
    }
}
