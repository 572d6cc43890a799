//! Link invariants from the specialized traces `tr_D`.
//!
//! For a braid `α` on `n` strands with exponent sum `ε`,
//! `value = z^{-(n-1)} · λ_D^{(ε-n+1)/2} · tr_D(image(α))` where the image
//! is taken under `γ` (framed), `δ` (classical) or `η` (singular). The
//! square root of `λ_D` is never formed; its parity is carried by
//! [`HalfPowerValue`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::Serialize;

use crate::braid::{BraidKind, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::esystem::{build_solution, ESolution};
use crate::scalars::{q_frac, Cyclotomic, HalfPowerValue, RatFunc, Var};
use crate::trace::{specialized_params, Tracer};
use crate::yalgebra::{map_to_algebra, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `Γ_D` on framed braids.
    Framed,
    /// `Δ_D` on classical braids.
    Classical,
    /// `H_D` on singular braids.
    Singular,
}

impl Family {
    pub fn accepts(self, kind: BraidKind) -> bool {
        match self {
            Family::Framed => kind != BraidKind::Singular,
            Family::Classical => kind == BraidKind::Classical,
            Family::Singular => kind != BraidKind::Framed,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Framed => "framed",
            Family::Classical => "classical",
            Family::Singular => "singular",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "framed" => Ok(Family::Framed),
            "classical" => Ok(Family::Classical),
            "singular" => Ok(Family::Singular),
            _ => Err(Error::InvalidArgument(format!("unknown family '{s}'"))),
        }
    }
}

/// `λ_D = (|D| z + 1 − u) / (|D| u z)`.
pub fn lambda_d(size_d: usize) -> RatFunc {
    assert!(size_d >= 1);
    let k = RatFunc::int(size_d as i64);
    let (u, z) = (RatFunc::var(Var::U), RatFunc::var(Var::Z));
    let num = k.clone() * &z + &RatFunc::one() - &u;
    let den = k * &u * &z;
    num.div(&den).expect("nonzero denominator")
}

/// `z = −1/((u+1)|D|)`, under which `λ_D = u`.
pub fn jones_z(size_d: usize) -> RatFunc {
    let den = (RatFunc::var(Var::U) + &RatFunc::one()) * &RatFunc::int(size_d as i64);
    (-RatFunc::one()).div(&den).expect("nonzero denominator")
}

/// Parameters identifying the regime a value lives in.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantMeta {
    pub family: Family,
    pub d: u32,
    pub subset: Vec<u32>,
    /// `Some(z)` once `z` has been specialized.
    pub z_value: Option<RatFunc>,
}

#[derive(Clone, Debug)]
pub struct InvariantRequest {
    pub braid: BraidWord,
    pub family: Family,
    pub d: u32,
    pub subset: Vec<u32>,
    pub z_value: Option<RatFunc>,
}

#[derive(Clone, Debug)]
pub struct InvariantValue {
    value: HalfPowerValue,
    meta: InvariantMeta,
    n: usize,
    epsilon: i64,
}

impl InvariantValue {
    pub fn value(&self) -> &HalfPowerValue {
        &self.value
    }

    pub fn meta(&self) -> &InvariantMeta {
        &self.meta
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }

    /// Exact equality; values from different regimes are not comparable.
    pub fn same_as(&self, o: &Self) -> Result<bool> {
        if self.meta != o.meta {
            return Err(Error::ContextMismatch(format!(
                "{} d={} D={:?} vs {} d={} D={:?}",
                self.meta.family, self.meta.d, self.meta.subset, o.meta.family, o.meta.d, o.meta.subset
            )));
        }
        Ok(self.value == o.value)
    }

    pub fn to_record(&self) -> InvariantRecord {
        InvariantRecord {
            family: self.meta.family,
            d: self.meta.d,
            subset: self.meta.subset.clone(),
            n: self.n,
            epsilon: self.epsilon,
            z: self.meta.z_value.as_ref().map(|z| z.to_string()),
            value: self.value.to_string(),
        }
    }
}

impl PartialEq for InvariantValue {
    fn eq(&self, o: &Self) -> bool {
        self.meta == o.meta && self.value == o.value
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// JSON form `{family, d, D, n, epsilon, value}` (plus `z` when specialized).
#[derive(Clone, Debug, Serialize)]
pub struct InvariantRecord {
    pub family: Family,
    pub d: u32,
    #[serde(rename = "D")]
    pub subset: Vec<u32>,
    pub n: usize,
    pub epsilon: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    pub value: String,
}

/// Evaluator caching one [`Tracer`] per `(d, D)`. Not shared across threads;
/// parallel callers use one engine per worker.
#[derive(Default)]
pub struct InvariantEngine {
    tracers: HashMap<(u32, Vec<u32>), (ESolution, Tracer)>,
}

impl InvariantEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn tracer(&mut self, d: u32, subset: &[u32]) -> Result<&mut (ESolution, Tracer)> {
        // Callers usually pass the normalized subset; skip rebuilding then.
        let raw = (d, subset.to_vec());
        if self.tracers.contains_key(&raw) {
            return Ok(self.tracers.get_mut(&raw).expect("present"));
        }
        let sol = build_solution(d, subset)?;
        let key = (d, sol.subset().to_vec());
        Ok(self.tracers.entry(key).or_insert_with(|| {
            let t = Tracer::new(specialized_params(&sol));
            (sol, t)
        }))
    }

    pub fn invariant(&mut self, req: &InvariantRequest) -> Result<InvariantValue> {
        let b = &req.braid;
        if !req.family.accepts(b.kind()) {
            return Err(Error::IncompatibleKind(format!("{} braid for the {} invariant", b.kind(), req.family)));
        }
        let image = map_to_algebra(b, req.d);
        let (n, epsilon) = (b.strands(), b.epsilon());
        let (subset, mut value) = self.image_value(req.d, &req.subset, &image, epsilon, true)?;
        if let Some(z) = &req.z_value {
            value = value.substitute(Var::Z, z)?.canonical();
        }
        Ok(InvariantValue {
            value,
            meta: InvariantMeta { family: req.family, d: req.d, subset, z_value: req.z_value.clone() },
            n,
            epsilon,
        })
    }

    /// `z^{-(n-1)} λ_D^{(ε-n+1)/2} tr_D(image)` with the normalized subset.
    /// Skips canonicalization unless `canonical`; equality does not need it.
    fn image_value(
        &mut self,
        d: u32,
        subset: &[u32],
        image: &Element,
        epsilon: i64,
        canonical: bool,
    ) -> Result<(Vec<u32>, HalfPowerValue)> {
        let n = image.strands();
        let (sol, tracer) = self.tracer(d, subset)?;
        let tr = tracer.trace(image)?;
        let r = RatFunc::from_poly(tr).div(&RatFunc::var(Var::Z).pow(n as i32 - 1)?)?;
        let k = i32::try_from(epsilon - n as i64 + 1).map_err(|_| Error::InvalidArgument("word too long".into()))?;
        let v = HalfPowerValue::with_power(r, k, lambda_d(sol.size()))?;
        Ok((sol.subset().to_vec(), if canonical { v.canonical() } else { v }))
    }

    pub fn formal(&mut self, family: Family, b: &BraidWord, d: u32, subset: &[u32]) -> Result<InvariantValue> {
        self.invariant(&InvariantRequest { braid: b.clone(), family, d, subset: subset.to_vec(), z_value: None })
    }

    /// `P = Δ` at `d = 1`, in `(u, z)` with `z` in the role of `ζ`.
    pub fn homflypt(&mut self, b: &BraidWord) -> Result<InvariantValue> {
        self.formal(Family::Classical, b, 1, &[0])
    }

    /// `V(u)`: the Homflypt value at `z = −1/(u+1)`.
    pub fn jones(&mut self, b: &BraidWord) -> Result<InvariantValue> {
        self.invariant(&InvariantRequest {
            braid: b.clone(),
            family: Family::Classical,
            d: 1,
            subset: vec![0],
            z_value: Some(jones_z(1)),
        })
    }

    /// `𝒱_D(u)`: `Γ_D` at `z = −1/((u+1)|D|)`.
    pub fn framed_jones(&mut self, b: &BraidWord, d: u32, subset: &[u32]) -> Result<InvariantValue> {
        let sol = build_solution(d, subset)?;
        self.invariant(&InvariantRequest {
            braid: b.clone(),
            family: Family::Framed,
            d,
            subset: sol.subset().to_vec(),
            z_value: Some(jones_z(sol.size())),
        })
    }

    /// Exact equality of the invariants of two braids.
    pub fn compare_links(&mut self, a: &BraidWord, b: &BraidWord, family: Family, d: u32, subset: &[u32]) -> Result<bool> {
        let va = self.formal(family, a, d, subset)?;
        let vb = self.formal(family, b, d, subset)?;
        va.same_as(&vb)
    }

    /// Evaluate both sides of a local skein relation at position `i`
    /// appended to `base`, and compare.
    pub fn verify_skein(&mut self, kind: SkeinKind, base: &BraidWord, i: usize, d: u32, subset: &[u32]) -> Result<bool> {
        let family = kind.family();
        if !family.accepts(base.kind()) {
            return Err(Error::IncompatibleKind(format!("{} base braid for the {kind} skein relation", base.kind())));
        }
        let n = base.strands();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("skein position {i} on {n} strands")));
        }
        self.verify_skein_image(kind, &map_to_algebra(base, d), base.epsilon(), i, d, subset)
    }

    /// [`Self::verify_skein`] for a base given by its algebra image and
    /// exponent sum; the terms are `image · (local letters)`.
    pub(crate) fn verify_skein_image(
        &mut self,
        kind: SkeinKind,
        image: &Element,
        epsilon: i64,
        i: usize,
        d: u32,
        subset: &[u32],
    ) -> Result<bool> {
        let sigma = |inverse| Letter::Sigma { i, inverse };
        let mut eval = |ls: &[Letter]| -> Result<HalfPowerValue> {
            let ext = ls.iter().fold(image.clone(), |acc, l| acc.mul_letter(l));
            let eps = epsilon + ls.iter().map(Letter::exponent).sum::<i64>();
            Ok(self.image_value(d, subset, &ext, eps, false)?.1)
        };
        let lam = |v: HalfPowerValue, k: i32| v.mul_sqrt_lambda(k);
        let um1 = RatFunc::var(Var::U).inv()? - &RatFunc::one();
        match kind {
            SkeinKind::Framed => {
                let lhs = lam(eval(&[sigma(true)])?, 1)?;
                let mut rhs = lam(eval(&[sigma(false)])?, -1)?;
                let c = um1.scale(&Cyclotomic::rational(q_frac(1, d as i64)));
                for s in 0..d as i64 {
                    let ts = [Letter::Framing { j: i, k: s }, Letter::Framing { j: i + 1, k: d as i64 - s }];
                    let ls = eval(&ts)?.scale(&c);
                    let lsx = lam(eval(&[ts[0], ts[1], sigma(false)])?, -1)?.scale(&c);
                    rhs = rhs.add(&ls)?.add(&lsx)?;
                }
                Ok(lhs == rhs)
            }
            SkeinKind::Cubic => {
                let lhs = lam(eval(&[sigma(true)])?, 1)?;
                let u_inv = RatFunc::var(Var::U).inv()?;
                let lpp = lam(eval(&[sigma(false), sigma(false)])?, -2)?.scale(&(-u_inv.clone()));
                let lp = lam(eval(&[sigma(false)])?, -1)?;
                let l0 = eval(&[])?.scale(&u_inv);
                Ok(lhs == lpp.add(&lp)?.add(&l0)?)
            }
            SkeinKind::Singular => {
                let lhs = lam(eval(&[sigma(true)])?, 1)?.add(&lam(eval(&[sigma(false)])?, -1)?.scale(&RatFunc::int(-1)))?;
                let rhs = lam(eval(&[Letter::Tau { i }])?, -1)?.scale(&um1);
                Ok(lhs == rhs)
            }
        }
    }
}

/// The three local relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkeinKind {
    /// `√λ Γ(L₋) = Γ(L₊)/√λ + (u⁻¹−1)/d Σ Γ(L_s) + (u⁻¹−1)/(d√λ) Σ Γ(L_{s×})`.
    Framed,
    /// `√λ Δ(L₋) = −Δ(L₊₊)/(uλ) + Δ(L₊)/√λ + Δ(L₀)/u`.
    Cubic,
    /// `√λ H(L₋) − H(L₊)/√λ = (u⁻¹−1)/√λ · H(L_×)`.
    Singular,
}

impl SkeinKind {
    pub const ALL: [SkeinKind; 3] = [SkeinKind::Framed, SkeinKind::Cubic, SkeinKind::Singular];

    pub fn family(self) -> Family {
        match self {
            SkeinKind::Framed => Family::Framed,
            SkeinKind::Cubic => Family::Classical,
            SkeinKind::Singular => Family::Singular,
        }
    }
}

impl fmt::Display for SkeinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SkeinKind::Framed => "framed",
            SkeinKind::Cubic => "cubic",
            SkeinKind::Singular => "singular",
        })
    }
}

impl FromStr for SkeinKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "framed" => Ok(SkeinKind::Framed),
            "cubic" => Ok(SkeinKind::Cubic),
            "singular" => Ok(SkeinKind::Singular),
            _ => Err(Error::InvalidArgument(format!("unknown skein relation '{s}'"))),
        }
    }
}

pub fn invariant(req: &InvariantRequest) -> Result<InvariantValue> {
    InvariantEngine::new().invariant(req)
}

pub fn homflypt(b: &BraidWord) -> Result<InvariantValue> {
    InvariantEngine::new().homflypt(b)
}

pub fn jones(b: &BraidWord) -> Result<InvariantValue> {
    InvariantEngine::new().jones(b)
}

pub fn framed_jones(b: &BraidWord, d: u32, subset: &[u32]) -> Result<InvariantValue> {
    InvariantEngine::new().framed_jones(b, d, subset)
}

pub fn verify_skein(kind: SkeinKind, base: &BraidWord, i: usize, d: u32, subset: &[u32]) -> Result<bool> {
    InvariantEngine::new().verify_skein(kind, base, i, d, subset)
}

pub fn compare_links(a: &BraidWord, b: &BraidWord, family: Family, d: u32, subset: &[u32]) -> Result<bool> {
    InvariantEngine::new().compare_links(a, b, family, d, subset)
}
