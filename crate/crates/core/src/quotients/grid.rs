//! Parameter grids mixing sets built to satisfy the passing conditions with
//! sets built to violate them.

use num_traits::{One, Zero};

use super::{inverse_fourier_ratfunc, u, z_jones, QuotientParams};
use crate::esystem::{enumerate_solutions, rational_vector};
use crate::scalars::{q_frac, Cyclotomic, RatFunc};
use crate::yalgebra::QuotientKind;

#[derive(Clone, Debug)]
pub struct GridEntry {
    pub params: QuotientParams,
    /// True when the set was built from the closed-form conditions.
    pub constructed_conforming: bool,
    pub label: String,
}

fn entry(z: RatFunc, x: Vec<RatFunc>, ok: bool, label: String) -> GridEntry {
    GridEntry { params: QuotientParams::new(z, x), constructed_conforming: ok, label }
}

fn consts(x: &[Cyclotomic]) -> Vec<RatFunc> {
    x.iter().cloned().map(RatFunc::constant).collect()
}

fn neg_inv(r: RatFunc) -> RatFunc {
    (-RatFunc::one()).div(&r).expect("nonzero")
}

/// Grid for one `(kind, d)`; `d ≤ 4`.
pub fn parameter_grid(kind: QuotientKind, d: u32) -> Vec<GridEntry> {
    match kind {
        QuotientKind::Ytl => ytl_grid(d),
        QuotientKind::Ftl => ftl_grid(d),
        QuotientKind::Ctl => ctl_grid(d),
    }
}

fn ytl_grid(d: u32) -> Vec<GridEntry> {
    let mut out = Vec::new();
    let half = RatFunc::rational(q_frac(-1, 2));
    for sol in enumerate_solutions(d).expect("small d") {
        let x = consts(sol.params());
        let tag = format!("D={:?}", sol.subset());
        match sol.size() {
            1 => {
                out.push(entry(z_jones(), x.clone(), true, format!("{tag} z=-1/(u+1)")));
                out.push(entry(RatFunc::int(-1), x.clone(), true, format!("{tag} z=-1")));
                out.push(entry(u(), x.clone(), false, format!("{tag} z=u")));
                out.push(entry(half.clone(), x, false, format!("{tag} z=-1/2")));
            }
            2 => {
                out.push(entry(half.clone(), x.clone(), true, format!("{tag} z=-1/2")));
                out.push(entry(z_jones(), x.clone(), false, format!("{tag} z=-1/(u+1)")));
                out.push(entry(RatFunc::int(-1), x, false, format!("{tag} z=-1")));
            }
            _ => out.push(entry(z_jones(), x, false, format!("{tag} z=-1/(u+1)"))),
        }
    }
    if d > 1 {
        let mut x = vec![RatFunc::zero(); d as usize - 1];
        x[0] = RatFunc::int(5);
        out.push(entry(z_jones(), x, false, "x1=5".into()));
    }
    out.push(entry(RatFunc::int(3), vec![RatFunc::one(); d as usize - 1], false, "x=1 z=3".into()));
    out
}

/// Disjoint `(D1, D2)`, not both empty, with the matching `z` and the
/// framing parameters recovered by the inverse transform.
fn ftl_grid(d: u32) -> Vec<GridEntry> {
    let mut out = Vec::new();
    let u1 = u() + &RatFunc::one();
    let dd = RatFunc::int(d as i64);
    // Each residue is absent (0), in D1 (1) or in D2 (2).
    for code in 1..3u32.pow(d) {
        let digits: Vec<u32> = (0..d).map(|k| code / 3u32.pow(k) % 3).collect();
        let n1 = digits.iter().filter(|&&c| c == 1).count() as i64;
        let n2 = digits.iter().filter(|&&c| c == 2).count() as i64;
        let z = neg_inv(RatFunc::int(n1) + &(u1.clone() * &RatFunc::int(n2)));
        let y: Vec<RatFunc> = digits
            .iter()
            .map(|&c| match c {
                0 => RatFunc::zero(),
                1 => -(dd.clone() * &z),
                _ => -(dd.clone() * &z * &u1),
            })
            .collect();
        let x = inverse_fourier_ratfunc(&y);
        debug_assert!(x[0].is_one());
        let label = format!("D1/D2 code {digits:?}");
        out.push(entry(z.clone(), x[1..].to_vec(), true, label.clone()));
        out.push(entry(z * &RatFunc::int(2), x[1..].to_vec(), false, format!("{label} z doubled")));
    }
    if d > 1 {
        let mut x = vec![RatFunc::zero(); d as usize - 1];
        x[0] = RatFunc::int(5);
        out.push(entry(z_jones(), x, false, "x1=5".into()));
    }
    out
}

/// Framing vectors with `S = Σ x_k`; `z` taken from the roots of
/// `S((u+1)z + S/d)(z + S/d)`.
fn ctl_grid(d: u32) -> Vec<GridEntry> {
    let mut vectors: Vec<(String, Vec<RatFunc>)> = enumerate_solutions(d)
        .expect("small d")
        .into_iter()
        .map(|s| (format!("D={:?}", s.subset()), consts(s.x())))
        .collect();
    let mut extra: Vec<i64> = vec![1];
    extra.extend((1..d as i64).map(|m| m + 1));
    vectors.push((format!("x={extra:?}"), consts(&rational_vector(&extra))));
    if d > 1 {
        let mut alt = vec![1i64];
        alt.extend((1..d as i64).map(|m| if m == 1 { -1 } else { 0 }));
        vectors.push((format!("x={alt:?}"), consts(&rational_vector(&alt))));
    }
    let dd = RatFunc::int(d as i64);
    let u1 = u() + &RatFunc::one();
    let mut out = Vec::new();
    for (tag, x) in vectors {
        let s = x.iter().fold(RatFunc::zero(), |a, b| a + b);
        let params = x[1..].to_vec();
        if s.is_zero() {
            out.push(entry(z_jones(), params.clone(), true, format!("{tag} S=0 z=-1/(u+1)")));
            out.push(entry(RatFunc::int(7), params, true, format!("{tag} S=0 z=7")));
            continue;
        }
        let sd = s.div(&dd).expect("d > 0");
        let z1 = -(sd.div(&u1).expect("nonzero"));
        let z2 = -sd.clone();
        out.push(entry(z1, params.clone(), true, format!("{tag} z=-S/(d(u+1))")));
        out.push(entry(z2, params.clone(), true, format!("{tag} z=-S/d")));
        out.push(entry(sd.clone() * &RatFunc::int(-2), params.clone(), false, format!("{tag} z=-2S/d")));
        out.push(entry(u(), params.clone(), false, format!("{tag} z=u")));
        out.push(entry(sd, params, false, format!("{tag} z=S/d")));
    }
    out
}

/// One hundred `z` values for the classical Temperley–Lieb check at `d = 1`;
/// exactly the first two satisfy the passing condition.
pub fn jones_z_sample() -> Vec<RatFunc> {
    let mut out = vec![RatFunc::int(-1), z_jones()];
    for k in 1..=49 {
        out.push(RatFunc::rational(q_frac(k, 3)));
        out.push(neg_inv(u() + &RatFunc::int(1 + k)).scale(&Cyclotomic::from_int(k)));
    }
    out
}
