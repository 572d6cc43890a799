//! Solutions of the E-system `E^{(m)} = x_m E`, indexed by non-empty
//! subsets `D ⊆ ℤ/d`, and the discrete Fourier transform on `ℤ/d`.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{q, q_frac, Cyclotomic, Q};

/// `x_m = (1/|D|) Σ_{k∈D} ζ_d^{km}`, `m = 0..d-1`; `x_0 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ESolution {
    d: u32,
    subset: Vec<u32>,
    x: Vec<Cyclotomic>,
}

impl ESolution {
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Sorted residues of `D`.
    pub fn subset(&self) -> &[u32] {
        &self.subset
    }

    /// `x_0, …, x_{d-1}`.
    pub fn x(&self) -> &[Cyclotomic] {
        &self.x
    }

    /// The free parameters `x_1, …, x_{d-1}`.
    pub fn params(&self) -> &[Cyclotomic] {
        &self.x[1..]
    }

    pub fn size(&self) -> usize {
        self.subset.len()
    }
}

impl fmt::Display for ESolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.subset.iter().map(|k| k.to_string()).collect();
        let x: Vec<String> = self.x.iter().enumerate().skip(1).map(|(m, v)| format!("x{m} = {v}")).collect();
        write!(f, "d={} D={{{}}}", self.d, d.join(","))?;
        if !x.is_empty() {
            write!(f, ": {}", x.join(", "))?;
        }
        Ok(())
    }
}

/// Serializable view: each `x_m` as its coefficient vector in the power
/// basis of `ℚ(ζ_order)`.
#[derive(Serialize)]
pub struct SolutionRecord {
    pub d: u32,
    #[serde(rename = "D")]
    pub subset: Vec<u32>,
    pub x: Vec<String>,
    pub coefficients: Vec<CyclotomicRecord>,
}

#[derive(Serialize)]
pub struct CyclotomicRecord {
    pub order: u32,
    pub coeffs: Vec<String>,
}

impl From<&ESolution> for SolutionRecord {
    fn from(s: &ESolution) -> Self {
        SolutionRecord {
            d: s.d,
            subset: s.subset.clone(),
            x: s.x.iter().map(|v| v.to_string()).collect(),
            coefficients: s
                .x
                .iter()
                .map(|v| CyclotomicRecord { order: v.order(), coeffs: v.coeffs().iter().map(|c| c.to_string()).collect() })
                .collect(),
        }
    }
}

pub fn build_solution(d: u32, subset: &[u32]) -> Result<ESolution> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    let mut set: Vec<u32> = subset.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(&k) = set.iter().find(|&&k| k >= d) {
        return Err(Error::IndexOutOfRange(format!("residue {k} not in Z/{d}")));
    }
    let inv = q_frac(1, set.len() as i64);
    let x: Vec<Cyclotomic> = (0..d)
        .map(|m| {
            set.iter()
                .fold(Cyclotomic::zero(), |acc, &k| acc + &Cyclotomic::root_of_unity(d, (k * m) as i64))
                .scale(&inv)
        })
        .collect();
    if esystem_residual(&x).iter().any(|r| !r.is_zero()) {
        return Err(Error::InvalidArgument(format!("subset {set:?} gives a nonzero residual")));
    }
    Ok(ESolution { d, subset: set, x })
}

/// `E = (1/d) Σ_s x_s x_{d-s}`.
pub fn e_value(x: &[Cyclotomic]) -> Cyclotomic {
    e_shift(x, 0)
}

/// `E^{(m)} = (1/d) Σ_s x_{m+s} x_{d-s}`, indices mod `d`.
pub fn e_shift(x: &[Cyclotomic], m: usize) -> Cyclotomic {
    let d = x.len();
    (0..d)
        .fold(Cyclotomic::zero(), |acc, s| acc + &(x[(m + s) % d].clone() * &x[(d - s) % d]))
        .scale(&q_frac(1, d as i64))
}

/// `E^{(m)} − x_m E` for `m = 1..d-1`. Expects `x_0 = 1`.
pub fn esystem_residual(x: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let e = e_value(x);
    (1..x.len()).map(|m| e_shift(x, m) - &(x[m].clone() * &e)).collect()
}

/// All `2^d − 1` solutions, ordered by subset bitmask.
pub fn enumerate_solutions(d: u32) -> Result<Vec<ESolution>> {
    if d == 0 || d > 20 {
        return Err(Error::InvalidArgument(format!("d = {d} out of supported range 1..=20")));
    }
    let sols: Vec<ESolution> = (1u32..(1 << d))
        .into_par_iter()
        .map(|mask| {
            let set: Vec<u32> = (0..d).filter(|k| mask >> k & 1 == 1).collect();
            build_solution(d, &set)
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<ESolution> = Vec::with_capacity(sols.len());
    for s in sols {
        if !out.iter().any(|o| o.x == s.x) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Transform `y_k = Σ_m x_m ζ^{−km}` with its support.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierData {
    pub y: Vec<Cyclotomic>,
    pub support: Vec<u32>,
}

pub fn fourier_transform(x: &[Cyclotomic]) -> FourierData {
    let d = x.len() as u32;
    let y: Vec<Cyclotomic> = (0..d)
        .map(|k| {
            x.iter().enumerate().fold(Cyclotomic::zero(), |acc, (m, xm)| {
                acc + &(xm.clone() * &Cyclotomic::root_of_unity(d, -((k as i64) * m as i64)))
            })
        })
        .collect();
    let support = (0..d).filter(|&k| !y[k as usize].is_zero()).collect();
    FourierData { y, support }
}

/// `x_m = (1/d) Σ_k y_k ζ^{km}`.
pub fn inverse_fourier(y: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let d = y.len() as u32;
    (0..d)
        .map(|m| {
            y.iter()
                .enumerate()
                .fold(Cyclotomic::zero(), |acc, (k, yk)| {
                    acc + &(yk.clone() * &Cyclotomic::root_of_unity(d, (k as i64) * m as i64))
                })
                .scale(&q_frac(1, d as i64))
        })
        .collect()
}

/// `E_D = 1/|D|`.
pub fn e_d_value(sol: &ESolution) -> Q {
    q_frac(1, sol.size() as i64)
}

/// `Σ_k x_k` over `ℤ/d`.
pub fn x_sum(x: &[Cyclotomic]) -> Cyclotomic {
    x.iter().fold(Cyclotomic::zero(), |a, b| a + b)
}

/// `(1, 0, …, 0)`.
pub fn unit_vector(d: u32) -> Vec<Cyclotomic> {
    let mut v = vec![Cyclotomic::zero(); d as usize];
    v[0] = Cyclotomic::one();
    v
}

/// Integer vector as cyclotomic constants.
pub fn rational_vector(xs: &[i64]) -> Vec<Cyclotomic> {
    xs.iter().map(|&a| Cyclotomic::rational(q(a))).collect()
}
