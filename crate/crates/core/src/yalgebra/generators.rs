use std::fmt;
use std::str::FromStr;

use num_traits::One;
use smallvec::SmallVec;

use super::{BasisWord, Element, Small};
use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::scalars::Laurent;

/// Generators of the three Temperley–Lieb-type ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientKind {
    /// Steinberg element `g_{i,i+1}`.
    Ytl,
    /// `r_{i,i+1} = e_i e_{i+1} g_{i,i+1}`.
    Ftl,
    /// `c_{i,i+1} = Σ_{α,β,γ} t_i^α t_{i+1}^β t_{i+2}^γ g_{i,i+1}`.
    Ctl,
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuotientKind::Ytl => "ytl",
            QuotientKind::Ftl => "ftl",
            QuotientKind::Ctl => "ctl",
        })
    }
}

impl FromStr for QuotientKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ytl" => Ok(QuotientKind::Ytl),
            "ftl" => Ok(QuotientKind::Ftl),
            "ctl" => Ok(QuotientKind::Ctl),
            _ => Err(Error::InvalidArgument(format!("unknown quotient kind '{s}'"))),
        }
    }
}

impl Element {
    /// `p_i = e_i (1 + g_i)`.
    pub fn p(d: u32, n: usize, i: usize) -> Result<Self> {
        Ok(Element::unit(d, n).mul_p0(i_checked(n, i)?))
    }

    /// Right multiplication by `p_i`, `i` 0-based.
    pub(crate) fn mul_p0(&self, i: usize) -> Self {
        let e = self.mul_e0(i, 0);
        let eg = e.mul_g0(i);
        e.add(&eg).expect("same context")
    }

    /// Right multiplication by the image of one braid letter.
    pub(crate) fn mul_letter(&self, l: &Letter) -> Self {
        match *l {
            Letter::Sigma { i, inverse: false } => self.mul_g0(i - 1),
            Letter::Sigma { i, inverse: true } => self.mul_g_inverse(i - 1),
            Letter::Framing { j, k } => self.mul_t0(j - 1, k.rem_euclid(self.d as i64) as u8),
            Letter::Tau { i } => self.mul_p0(i - 1),
        }
    }
}

fn i_checked(n: usize, i: usize) -> Result<usize> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("index {i} on {n} strands")));
    }
    Ok(i - 1)
}

/// Image of a braid word: `σ_i ↦ g_i`, `t_j^s ↦ t_j^{s mod d}`, `τ_i ↦ p_i`.
pub fn map_to_algebra(b: &BraidWord, d: u32) -> Element {
    b.letters().iter().fold(Element::unit(d, b.strands()), |acc, l| acc.mul_letter(l))
}

/// `g_{i,i+1}`, `r_{i,i+1}` or `c_{i,i+1}` in `Y_{d,n}`.
pub fn quotient_generator(kind: QuotientKind, d: u32, n: usize, i: usize) -> Result<Element> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("quotient generators need n ≥ 3, got {n}")));
    }
    if i == 0 || i + 2 > n {
        return Err(Error::IndexOutOfRange(format!("g_{{{i},{}}} on {n} strands", i + 1)));
    }
    let i0 = i - 1;
    // Σ over the parabolic subgroup ⟨s_i, s_{i+1}⟩, each word with coefficient 1.
    let mut steinberg = Element::zero(d, n);
    for p in super::permutations(3) {
        let mut perm: Small = (0..n as u8).collect();
        for k in 0..3 {
            perm[i0 + k] = (i0 as u8) + p[k];
        }
        steinberg.add_term(BasisWord::from_parts(SmallVec::from_elem(0, n), perm), Laurent::one());
    }
    Ok(match kind {
        QuotientKind::Ytl => steinberg,
        QuotientKind::Ftl => {
            let e = Element::unit(d, n).mul_e0(i0, 0).mul_e0(i0 + 1, 0);
            e.multiply(&steinberg)?
        }
        QuotientKind::Ctl => {
            let mut sum = Element::zero(d, n);
            for f in super::framings(d, 3) {
                let mut b: Small = SmallVec::from_elem(0, n);
                b[i0..i0 + 3].copy_from_slice(&f);
                let t = Element::word(d, BasisWord::from_parts(b, (0..n as u8).collect()));
                sum = sum.add(&t)?;
            }
            sum.multiply(&steinberg)?
        }
    })
}
