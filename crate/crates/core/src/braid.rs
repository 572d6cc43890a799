//! Braid words for the classical braid groups `B_n`, framed braid groups
//! `F_n` (and their modular quotients `F_{d,n}`) and singular braid monoids
//! `SB_n`.
//!
//! Words are kept as free sequences of letters: no group-level
//! normalization happens here, so Markov-move invariance can be tested on
//! the raw inputs.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `σ_i` (or `σ_i^{-1}` when `inverse`), `1 ≤ i ≤ n-1`.
    Sigma { i: usize, inverse: bool },
    /// `t_j^k`, `1 ≤ j ≤ n`.
    Framing { j: usize, k: i64 },
    /// Elementary singular braid `τ_i`.
    Tau { i: usize },
}

impl Letter {
    /// Contribution to the exponent sum: `σ^{±1}` gives `±1`, `τ` gives `+1`.
    pub fn exponent(&self) -> i64 {
        match self {
            Letter::Sigma { inverse: false, .. } | Letter::Tau { .. } => 1,
            Letter::Sigma { inverse: true, .. } => -1,
            Letter::Framing { .. } => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraidKind {
    Classical,
    Framed,
    Singular,
}

impl fmt::Display for BraidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BraidKind::Classical => "classical",
            BraidKind::Framed => "framed",
            BraidKind::Singular => "singular",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

#[derive(Clone, Debug)]
pub enum MarkovMove {
    /// `β · b · β⁻¹`; `β` must be invertible (no `τ` letters).
    Conjugate(BraidWord),
    /// `b · σ_n` on `n + 1` strands.
    StabilizePos,
    /// `b · σ_n⁻¹` on `n + 1` strands.
    StabilizeNeg,
    /// Multiply the framing of strand `j` by `t_j^k` (at the end of the word).
    /// Preserves the image in `F_{d,n}` iff `d | k`.
    FramingShift { j: usize, k: i64 },
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        let n = n.max(1);
        for l in &letters {
            let ok = match *l {
                Letter::Sigma { i, .. } | Letter::Tau { i } => i >= 1 && i < n,
                Letter::Framing { j, .. } => j >= 1 && j <= n,
            };
            if !ok {
                return Err(Error::IndexOutOfRange(format!("letter {} on {n} strands", LetterFmt(l))));
            }
        }
        if letters.iter().any(|l| matches!(l, Letter::Framing { .. }))
            && letters.iter().any(|l| matches!(l, Letter::Tau { .. }))
        {
            return Err(Error::IncompatibleKind("a word mixing framings and singular crossings".into()));
        }
        Ok(BraidWord { n, letters })
    }

    /// The trivial braid on `n` strands.
    pub fn identity(n: usize) -> Self {
        BraidWord { n: n.max(1), letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Smallest kind containing the word.
    pub fn kind(&self) -> BraidKind {
        if self.letters.iter().any(|l| matches!(l, Letter::Tau { .. })) {
            BraidKind::Singular
        } else if self.letters.iter().any(|l| matches!(l, Letter::Framing { .. })) {
            BraidKind::Framed
        } else {
            BraidKind::Classical
        }
    }

    /// Exponent sum: `σ^{±1}` count `±1`, each `τ` counts `+1`, framings `0`.
    pub fn epsilon(&self) -> i64 {
        self.letters.iter().map(Letter::exponent).sum()
    }

    /// Same word on more strands.
    pub fn with_strands(&self, n: usize) -> Result<Self> {
        BraidWord::new(n, self.letters.clone())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord::new(self.n.max(other.n), letters)
    }

    pub fn push(&self, l: Letter) -> Result<Self> {
        let mut letters = self.letters.clone();
        letters.push(l);
        BraidWord::new(self.n, letters)
    }

    /// Group inverse; fails on singular words.
    pub fn inverse(&self) -> Result<Self> {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| match *l {
                Letter::Sigma { i, inverse } => Ok(Letter::Sigma { i, inverse: !inverse }),
                Letter::Framing { j, k } => Ok(Letter::Framing { j, k: -k }),
                Letter::Tau { .. } => Err(Error::InvalidMove("singular braids are not invertible".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { n: self.n, letters })
    }

    /// Reduce framing exponents mod `d`, dropping trivial framings.
    pub fn reduce_framings(&self, d: u32) -> Self {
        let letters = self
            .letters
            .iter()
            .filter_map(|l| match *l {
                Letter::Framing { j, k } => {
                    let k = k.rem_euclid(d as i64);
                    (k != 0).then_some(Letter::Framing { j, k })
                }
                other => Some(other),
            })
            .collect();
        BraidWord { n: self.n, letters }
    }

    pub fn apply_move(&self, m: &MarkovMove) -> Result<Self> {
        match m {
            MarkovMove::Conjugate(beta) => {
                if beta.n > self.n {
                    return Err(Error::InvalidMove(format!(
                        "conjugating braid has {} strands, word has {}",
                        beta.n, self.n
                    )));
                }
                if self.kind() == BraidKind::Singular && beta.kind() == BraidKind::Framed {
                    return Err(Error::InvalidMove("framed conjugator for a singular braid".into()));
                }
                let inv = beta.inverse()?;
                let mut letters = beta.letters.clone();
                letters.extend_from_slice(&self.letters);
                letters.extend_from_slice(&inv.letters);
                BraidWord::new(self.n, letters)
            }
            MarkovMove::StabilizePos | MarkovMove::StabilizeNeg => {
                let inverse = matches!(m, MarkovMove::StabilizeNeg);
                let mut letters = self.letters.clone();
                letters.push(Letter::Sigma { i: self.n, inverse });
                BraidWord::new(self.n + 1, letters)
            }
            MarkovMove::FramingShift { j, k } => {
                if self.kind() == BraidKind::Singular {
                    return Err(Error::InvalidMove("framing shift on a singular braid".into()));
                }
                self.push(Letter::Framing { j: *j, k: *k })
            }
        }
    }

    /// Random word of the given kind with `len` letters on `n` strands.
    /// Framing exponents are drawn from `-max_k..=max_k`. On one strand only
    /// framings exist, so other kinds give the empty word.
    pub fn random<R: rand::Rng>(kind: BraidKind, n: usize, len: usize, max_k: i64, rng: &mut R) -> Self {
        let n = n.max(1);
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            let roll = rng.gen_range(0..3);
            let l = match kind {
                _ if n == 1 && kind != BraidKind::Framed => break,
                BraidKind::Framed if n == 1 || roll == 0 => {
                    Letter::Framing { j: rng.gen_range(1..=n), k: rng.gen_range(-max_k..=max_k) }
                }
                BraidKind::Singular if roll == 0 => Letter::Tau { i: rng.gen_range(1..n) },
                _ => Letter::Sigma { i: rng.gen_range(1..n), inverse: rng.gen_bool(0.5) },
            };
            letters.push(l);
        }
        BraidWord { n, letters }
    }

    /// Parse the whitespace-separated token grammar: `s<i>`, `-s<i>`,
    /// `t<j>` / `t<j>^<k>`, `x<i>`, optional leading `n=<int>`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header_n = None;
        let mut letters = Vec::new();
        let mut max_needed = 1usize;
        for (pos, tok) in tokens(text) {
            let perr = |msg: &str| Error::Parse { pos, msg: format!("{msg} in '{tok}'") };
            if let Some(rest) = tok.strip_prefix("n=") {
                if !letters.is_empty() || header_n.is_some() {
                    return Err(perr("strand header must come first"));
                }
                let n: usize = rest.parse().map_err(|_| perr("bad strand count"))?;
                if n == 0 {
                    return Err(perr("strand count must be positive"));
                }
                header_n = Some(n);
                continue;
            }
            let index = |s: &str| -> Result<usize> {
                let i: usize = s.parse().map_err(|_| perr("bad index"))?;
                if i == 0 {
                    return Err(Error::IndexOutOfRange(format!("'{tok}': indices start at 1")));
                }
                Ok(i)
            };
            let letter = if let Some(rest) = tok.strip_prefix("-s") {
                let i = index(rest)?;
                max_needed = max_needed.max(i + 1);
                Letter::Sigma { i, inverse: true }
            } else if let Some(rest) = tok.strip_prefix('s') {
                let i = index(rest)?;
                max_needed = max_needed.max(i + 1);
                Letter::Sigma { i, inverse: false }
            } else if let Some(rest) = tok.strip_prefix('x') {
                let i = index(rest)?;
                max_needed = max_needed.max(i + 1);
                Letter::Tau { i }
            } else if let Some(rest) = tok.strip_prefix('t') {
                let (js, ks) = match rest.split_once('^') {
                    Some((a, b)) => (a, Some(b)),
                    None => (rest, None),
                };
                let j = index(js)?;
                let k = match ks {
                    Some(ks) => ks.parse::<i64>().map_err(|_| perr("bad framing exponent"))?,
                    None => 1,
                };
                max_needed = max_needed.max(j);
                Letter::Framing { j, k }
            } else {
                return Err(perr("unknown token"));
            };
            letters.push(letter);
        }
        let n = match header_n {
            Some(n) if n < max_needed => {
                return Err(Error::IndexOutOfRange(format!("word needs {max_needed} strands, header says {n}")))
            }
            Some(n) => n,
            None => max_needed,
        };
        BraidWord::new(n, letters)
    }

    fn default_strands(&self) -> usize {
        self.letters
            .iter()
            .map(|l| match *l {
                Letter::Sigma { i, .. } | Letter::Tau { i } => i + 1,
                Letter::Framing { j, .. } => j,
            })
            .max()
            .unwrap_or(1)
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let base = text.as_ptr() as usize;
    text.split_whitespace().map(move |t| (t.as_ptr() as usize - base, t))
}

struct LetterFmt<'a>(&'a Letter);

impl fmt::Display for LetterFmt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self.0 {
            Letter::Sigma { i, inverse: false } => write!(f, "s{i}"),
            Letter::Sigma { i, inverse: true } => write!(f, "-s{i}"),
            Letter::Framing { j, k: 1 } => write!(f, "t{j}"),
            Letter::Framing { j, k } => write!(f, "t{j}^{k}"),
            Letter::Tau { i } => write!(f, "x{i}"),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LetterFmt(self).fmt(f)
    }
}

/// Renders in the parse grammar; the `n=` header is emitted only when the
/// strand count differs from the one the letters imply.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.n != self.default_strands() {
            parts.push(format!("n={}", self.n));
        }
        parts.extend(self.letters.iter().map(|l| l.to_string()));
        f.write_str(&parts.join(" "))
    }
}

impl std::str::FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BraidWord::parse(s)
    }
}

pub fn epsilon(b: &BraidWord) -> i64 {
    b.epsilon()
}

pub fn apply_move(b: &BraidWord, m: &MarkovMove) -> Result<BraidWord> {
    b.apply_move(m)
}
