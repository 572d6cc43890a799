//! Trace-passing checks for the Temperley–Lieb-type quotients of `Y_{d,n}`
//! and inclusions between their defining ideals.
//!
//! The trace vanishes on the two-sided ideal generated by `G` iff it
//! vanishes on `a·G·b` for all basis words `a, b`. Since `tr(a G b) =
//! tr(b a G)` and the products `b a` span the algebra, it is enough to
//! check `tr(w·G) = 0` for every basis word `w`. These traces are computed
//! once per `(kind, d, n)` with formal parameters and then specialized.

mod grid;
mod linalg;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::esystem::enumerate_solutions;
use crate::scalars::{q_frac, Cyclotomic, Poly, RatFunc, UPoly, Var, Q};
use crate::trace::{TraceParams, Tracer};
use crate::yalgebra::{quotient_generator, BasisWord, Element, QuotientKind};

pub use grid::{jones_z_sample, parameter_grid, GridEntry};
use linalg::{is_zero_row, Echelon, Row};

/// Largest split basis the vanishing check will enumerate.
pub const DEFAULT_BUDGET: usize = 2_000;
/// Largest number of `(a, b)` pairs for the exhaustive check.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 10_000;

/// Trace parameters: `z` and `x_1, …, x_{d-1}` as functions of `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientParams {
    pub z: RatFunc,
    pub x: Vec<RatFunc>,
}

impl QuotientParams {
    pub fn new(z: RatFunc, x: Vec<RatFunc>) -> Self {
        QuotientParams { z, x }
    }

    pub fn from_cyclotomic(z: RatFunc, x: &[Cyclotomic]) -> Self {
        QuotientParams { z, x: x.iter().cloned().map(RatFunc::constant).collect() }
    }

    /// `x_0 = 1, x_1, …`.
    pub fn full_x(&self) -> Vec<RatFunc> {
        std::iter::once(RatFunc::one()).chain(self.x.iter().cloned()).collect()
    }

    fn substitutions(&self) -> Vec<(Var, RatFunc)> {
        let mut s: Vec<(Var, RatFunc)> =
            self.x.iter().enumerate().map(|(m, v)| (Var::X(m as u32 + 1), v.clone())).collect();
        s.push((Var::Z, self.z.clone()));
        s
    }

    /// Value of a formal trace polynomial at these parameters.
    pub fn evaluate(&self, p: &Poly) -> Result<RatFunc> {
        RatFunc::from_poly(p.clone()).substitute_all(&self.substitutions())
    }

    pub fn to_record(&self) -> ParamsRecord {
        ParamsRecord { z: self.z.to_string(), x: self.x.iter().map(|v| v.to_string()).collect() }
    }
}

#[derive(Clone, Debug)]
pub struct QuotientCheck {
    pub kind: QuotientKind,
    pub d: u32,
    pub params: QuotientParams,
    pub n: usize,
    /// Upper bound on the size `d^n · n!` of the enumerated basis.
    pub budget: usize,
}

impl QuotientCheck {
    pub fn new(kind: QuotientKind, d: u32, params: QuotientParams) -> Self {
        QuotientCheck { kind, d, params, n: 3, budget: DEFAULT_BUDGET }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidArgument(format!("quotient checks need n ≥ 3, got {}", self.n)));
        }
        if self.params.x.len() + 1 != self.d as usize {
            return Err(Error::InvalidArgument(format!("expected {} framing parameters", self.d - 1)));
        }
        let size = basis_size(self.d, self.n);
        if size > self.budget {
            return Err(Error::Budget(format!("basis of Y_{{{},{}}} has {size} words, budget {}", self.d, self.n, self.budget)));
        }
        Ok(())
    }
}

fn basis_size(d: u32, n: usize) -> usize {
    (d as usize).saturating_pow(n as u32).saturating_mul((1..=n).product())
}

#[derive(Clone, Debug, Serialize)]
pub struct ParamsRecord {
    pub z: String,
    pub x: Vec<String>,
}

/// A pair `(a, b)` with `tr(a·G·b) ≠ 0`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Witness {
    pub a: String,
    pub b: String,
    pub value: String,
}

/// JSON `{kind, d, params, verdict, witness?}`.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub kind: String,
    pub d: u32,
    pub params: ParamsRecord,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

type TraceTable = Arc<Vec<(BasisWord, Poly)>>;
type TraceCache = Mutex<HashMap<(QuotientKind, u32, usize), TraceTable>>;

/// Distinct formal values `tr(w·G)` over basis words `w`, each with the
/// first word producing it.
pub fn ideal_traces(kind: QuotientKind, d: u32, n: usize) -> Result<TraceTable> {
    static CACHE: OnceLock<TraceCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(kind, d, n)) {
        return Ok(t.clone());
    }
    let gen = quotient_generator(kind, d, n, 1)?;
    let basis = Element::basis(d, n);
    let values: Vec<Poly> = basis
        .par_iter()
        .map_init(
            || Tracer::new(TraceParams::generic(d)),
            |tracer, w| tracer.trace(&Element::word(d, w.clone()).multiply(&gen).expect("same context")),
        )
        .collect::<Result<_>>()?;
    let mut seen: FxHashMap<String, ()> = FxHashMap::default();
    let mut table = Vec::new();
    for (w, p) in basis.into_iter().zip(values) {
        if p.is_zero() {
            continue;
        }
        if seen.insert(p.to_string(), ()).is_none() {
            table.push((w, p));
        }
    }
    let table = Arc::new(table);
    cache.lock().unwrap().insert((kind, d, n), table.clone());
    Ok(table)
}

/// Does the specialized trace vanish on the ideal generated by the
/// quotient generator at position 1?
pub fn trace_vanishes_on_ideal(check: &QuotientCheck) -> Result<QuotientReport> {
    check.validate()?;
    let table = ideal_traces(check.kind, check.d, check.n)?;
    let mut witness = None;
    for (w, p) in table.iter() {
        let v = check.params.evaluate(p)?;
        if !v.is_zero() {
            witness = Some(Witness { a: w.to_string(), b: "1".into(), value: v.to_string() });
            break;
        }
    }
    Ok(report(check, witness))
}

/// The same question decided over every pair `(a, b)` of basis words.
pub fn trace_vanishes_exhaustive(check: &QuotientCheck) -> Result<QuotientReport> {
    check.validate()?;
    let (d, n) = (check.d, check.n);
    let basis = Element::basis(d, n);
    if basis.len() * basis.len() > EXHAUSTIVE_PAIR_LIMIT {
        return Err(Error::Budget(format!("{} pairs exceed {}", basis.len() * basis.len(), EXHAUSTIVE_PAIR_LIMIT)));
    }
    let gen = quotient_generator(check.kind, d, n, 1)?;
    let found = basis
        .par_iter()
        .map_init(
            || Tracer::new(TraceParams::generic(d)),
            |tracer, a| -> Result<Option<Witness>> {
                let left = Element::word(d, a.clone()).multiply(&gen)?;
                for b in &basis {
                    let p = tracer.trace(&left.multiply(&Element::word(d, b.clone()))?)?;
                    if p.is_zero() {
                        continue;
                    }
                    let v = check.params.evaluate(&p)?;
                    if !v.is_zero() {
                        return Ok(Some(Witness { a: a.to_string(), b: b.to_string(), value: v.to_string() }));
                    }
                }
                Ok(None)
            },
        )
        .collect::<Result<Vec<_>>>()?;
    Ok(report(check, found.into_iter().flatten().next()))
}

fn report(check: &QuotientCheck, witness: Option<Witness>) -> QuotientReport {
    QuotientReport {
        kind: check.kind.to_string(),
        d: check.d,
        params: check.params.to_record(),
        verdict: witness.is_none(),
        witness,
    }
}

fn u() -> RatFunc {
    RatFunc::var(Var::U)
}

/// `−1/(u+1)`.
pub fn z_jones() -> RatFunc {
    (-RatFunc::one()).div(&(u() + &RatFunc::one())).expect("nonzero")
}

/// The closed-form conditions under which the trace passes to the quotient.
pub fn admissible(kind: QuotientKind, d: u32, params: &QuotientParams) -> Result<bool> {
    if params.x.len() + 1 != d as usize {
        return Err(Error::InvalidArgument(format!("expected {} framing parameters", d - 1)));
    }
    let z = &params.z;
    match kind {
        QuotientKind::Ytl => {
            let Some(sol) = enumerate_solutions(d)?.into_iter().find(|s| {
                s.params().iter().zip(&params.x).all(|(a, b)| RatFunc::constant(a.clone()) == *b)
            }) else {
                return Ok(false);
            };
            Ok(match sol.size() {
                1 => *z == z_jones() || *z == RatFunc::int(-1),
                2 => *z == RatFunc::rational(q_frac(-1, 2)),
                _ => false,
            })
        }
        QuotientKind::Ftl => {
            let y = fourier_ratfunc(&params.full_x());
            let dz = RatFunc::int(d as i64) * z;
            let mut d1 = Vec::new();
            let mut d2 = Vec::new();
            let mut support = Vec::new();
            let u1 = u() + &RatFunc::one();
            for (k, yk) in y.iter().enumerate() {
                if !yk.is_zero() {
                    support.push(k);
                }
                if *yk == -dz.clone() {
                    d1.push(k);
                }
                if *yk == -(dz.clone() * &u1) {
                    d2.push(k);
                }
            }
            let mut union: Vec<usize> = d1.iter().chain(&d2).copied().collect();
            union.sort_unstable();
            let disjoint = union.windows(2).all(|w| w[0] != w[1]);
            if !disjoint || union != support {
                return Ok(false);
            }
            let den = RatFunc::int(d1.len() as i64) + &(u1 * &RatFunc::int(d2.len() as i64));
            Ok(*z == (-RatFunc::one()).div(&den)?)
        }
        QuotientKind::Ctl => {
            let x = params.full_x();
            let s = x.iter().fold(RatFunc::zero(), |a, b| a + b);
            let tp = TraceParams::generic(d);
            let mut tracer = Tracer::new(tp);
            let mut sum_e = Poly::zero();
            let mut sum_t = Poly::zero();
            for k in 0..d as i64 {
                let e1k = Element::idempotent_e(d, 3, 1, k)?;
                sum_e = sum_e + &tracer.trace(&e1k)?;
                let e2 = Element::idempotent_e(d, 3, 2, 0)?;
                sum_t = sum_t + &tracer.trace(&e1k.multiply(&e2)?)?;
            }
            let sum_e = params.evaluate(&sum_e)?;
            let sum_t = params.evaluate(&sum_t)?;
            let lhs = (u() + &RatFunc::one()) * z * z * &s + &((u() + &RatFunc::int(2)) * z * &sum_e) + &sum_t;
            Ok(lhs.is_zero())
        }
    }
}

/// `y_k = Σ_m x_m ζ^{−km}` for values in `ℚ(ζ)(u)`.
pub fn fourier_ratfunc(x: &[RatFunc]) -> Vec<RatFunc> {
    let d = x.len() as u32;
    (0..d)
        .map(|k| {
            x.iter().enumerate().fold(RatFunc::zero(), |acc, (m, xm)| {
                acc + &(xm.clone() * &RatFunc::constant(Cyclotomic::root_of_unity(d, -((k as i64) * m as i64))))
            })
        })
        .collect()
}

/// `x_m = (1/d) Σ_k y_k ζ^{km}`.
pub fn inverse_fourier_ratfunc(y: &[RatFunc]) -> Vec<RatFunc> {
    let d = y.len() as u32;
    let inv = Cyclotomic::rational(q_frac(1, d as i64));
    (0..d)
        .map(|m| {
            y.iter()
                .enumerate()
                .fold(RatFunc::zero(), |acc, (k, yk)| {
                    acc + &yk.scale(&Cyclotomic::root_of_unity(d, (k as i64) * m as i64))
                })
                .scale(&inv)
        })
        .collect()
}

/// Is `a` in the two-sided ideal generated by `b`? Decided over `ℚ(u)` by
/// closing `span{b}` under left and right multiplication by the algebra
/// generators.
pub fn ideal_inclusion(a: &Element, b: &Element) -> Result<bool> {
    if a.d() != b.d() || a.strands() != b.strands() {
        return Err(Error::ContextMismatch("elements of different algebras".into()));
    }
    let (d, n) = (b.d(), b.strands());
    if basis_size(d, n) > DEFAULT_BUDGET {
        return Err(Error::Budget(format!("Y_{{{d},{n}}} is too large for elimination")));
    }
    let basis = Element::basis(d, n);
    let index: FxHashMap<BasisWord, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let to_row = |e: &Element| -> Row {
        let shift = e.terms().map(|(_, c)| c.low_degree()).min().unwrap_or(0);
        let mut row = vec![UPoly::<Q>::zero(); basis.len()];
        for (w, c) in e.terms() {
            row[index[w]] = c.to_upoly_shifted(-shift);
        }
        row
    };
    let mut gens = Vec::new();
    for i in 1..n {
        gens.push(Element::gen_g(d, n, i)?);
    }
    if d > 1 {
        for j in 1..=n {
            gens.push(Element::gen_t(d, n, j, 1)?);
        }
    }
    let mut ech = Echelon::default();
    let mut queue = Vec::new();
    if ech.insert(to_row(b)) {
        queue.push(b.clone());
    }
    while let Some(v) = queue.pop() {
        if ech.rank() == basis.len() {
            break;
        }
        for g in &gens {
            for p in [g.multiply(&v)?, v.multiply(g)?] {
                if ech.insert(to_row(&p)) {
                    queue.push(p);
                }
            }
        }
    }
    Ok(is_zero_row(&ech.reduce(to_row(a))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::esystem::build_solution;

    fn ytl(d: u32, x: &[Cyclotomic], z: RatFunc) -> QuotientCheck {
        QuotientCheck::new(QuotientKind::Ytl, d, QuotientParams::from_cyclotomic(z, x))
    }

    #[test]
    fn ytl_examples() {
        assert!(trace_vanishes_on_ideal(&ytl(1, &[], z_jones())).unwrap().verdict);
        for m in 0..2 {
            let x = [Cyclotomic::root_of_unity(2, m)];
            assert!(trace_vanishes_on_ideal(&ytl(2, &x, RatFunc::int(-1))).unwrap().verdict);
        }
        let r = trace_vanishes_on_ideal(&ytl(2, &[Cyclotomic::from_int(5)], z_jones())).unwrap();
        assert!(!r.verdict);
        assert!(r.witness.is_some());
        let x3 = build_solution(3, &[1]).unwrap();
        assert!(admissible(QuotientKind::Ytl, 3, &QuotientParams::from_cyclotomic(z_jones(), x3.params())).unwrap());
    }

    #[test]
    fn ftl_corollary_values_pass() {
        for d in 1..=3 {
            for sol in enumerate_solutions(d).unwrap() {
                let k = RatFunc::int(sol.size() as i64);
                for z in [
                    (-RatFunc::one()).div(&(k.clone() * &(u() + &RatFunc::one()))).unwrap(),
                    (-RatFunc::one()).div(&k).unwrap(),
                ] {
                    let p = QuotientParams::from_cyclotomic(z, sol.params());
                    assert!(admissible(QuotientKind::Ftl, d, &p).unwrap(), "{sol}");
                    let c = QuotientCheck::new(QuotientKind::Ftl, d, p);
                    assert!(trace_vanishes_on_ideal(&c).unwrap().verdict, "{sol}");
                }
            }
        }
    }

    #[test]
    fn exhaustive_agrees_with_one_sided() {
        for (kind, d) in [(QuotientKind::Ytl, 1), (QuotientKind::Ftl, 2), (QuotientKind::Ctl, 2)] {
            for e in parameter_grid(kind, d).into_iter().take(4) {
                let c = QuotientCheck::new(kind, d, e.params.clone());
                let one = trace_vanishes_on_ideal(&c).unwrap().verdict;
                let all = trace_vanishes_exhaustive(&c).unwrap().verdict;
                assert_eq!(one, all, "{kind} d={d} {}", e.label);
            }
        }
    }

    #[test]
    fn ideal_chain() {
        for d in 1..=2 {
            let g = quotient_generator(QuotientKind::Ytl, d, 3, 1).unwrap();
            let r = quotient_generator(QuotientKind::Ftl, d, 3, 1).unwrap();
            let c = quotient_generator(QuotientKind::Ctl, d, 3, 1).unwrap();
            assert!(ideal_inclusion(&r, &g).unwrap());
            assert!(ideal_inclusion(&c, &r).unwrap());
        }
        let g = quotient_generator(QuotientKind::Ytl, 1, 3, 1).unwrap();
        assert!(!ideal_inclusion(&Element::unit(1, 3), &g).unwrap());
    }

    #[test]
    fn grids_match_trace_checks() {
        for kind in [QuotientKind::Ytl, QuotientKind::Ftl, QuotientKind::Ctl] {
            for d in 1..=3 {
                for e in parameter_grid(kind, d) {
                    assert_eq!(admissible(kind, d, &e.params).unwrap(), e.constructed_conforming, "{kind} d={d} {}", e.label);
                    let c = QuotientCheck::new(kind, d, e.params.clone());
                    assert_eq!(trace_vanishes_on_ideal(&c).unwrap().verdict, e.constructed_conforming, "{kind} d={d} {}", e.label);
                }
            }
        }
    }

    #[test]
    fn jones_sample_has_two_roots() {
        let hits: Vec<bool> = jones_z_sample()
            .into_iter()
            .map(|z| trace_vanishes_on_ideal(&ytl(1, &[], z)).unwrap().verdict)
            .collect();
        assert_eq!(hits.len(), 100);
        assert_eq!(hits.iter().filter(|&&h| h).count(), 2);
        assert!(hits[0] && hits[1]);
    }

    #[test]
    fn budget_is_enforced() {
        let mut c = ytl(1, &[], z_jones());
        c.n = 4;
        c.budget = 10;
        assert!(matches!(trace_vanishes_on_ideal(&c), Err(Error::Budget(_))));
    }
}
