//! Seeded verification suites behind `verify --what …`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::braid::{BraidKind, BraidWord, Letter, MarkovMove};
use crate::error::Result;
use crate::esystem::{enumerate_solutions, ESolution};
use crate::invariants::{Family, InvariantEngine, SkeinKind};
use crate::quotients::{admissible, parameter_grid, trace_vanishes_on_ideal, QuotientCheck};
use crate::yalgebra::{defining_relations, map_to_algebra, Element, QuotientKind, Relation};

/// Outcome of one suite: how many checks ran and which failed.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: impl Into<String>) -> Self {
        SuiteReport { name: name.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    fn merge(&mut self, o: SuiteReport) {
        self.checks += o.checks;
        self.failures.extend(o.failures);
    }
}

/// Defining relations and named identities of `Y_{d,n}`.
pub fn relations_suite(d: u32, n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(format!("relations d={d} n={n}"));
    for (label, ok) in defining_relations(d, n)? {
        r.record(ok, || label);
    }
    if n >= 2 {
        for rel in Relation::ALL {
            let ok = rel.verify(d, n)?;
            r.record(ok, || rel.name().to_owned());
        }
    }
    Ok(r)
}

/// One sampled Markov case: a base braid and the moved braid.
#[derive(Clone, Debug)]
pub struct MarkovCase {
    pub family: Family,
    pub subset: Vec<u32>,
    pub base: BraidWord,
    pub moved: BraidWord,
}

fn kind_of(f: Family) -> BraidKind {
    match f {
        Family::Framed => BraidKind::Framed,
        Family::Classical => BraidKind::Classical,
        Family::Singular => BraidKind::Singular,
    }
}

/// `samples` cases per family: base words on at most 3 strands of length at
/// most `max_len`, then 1 to 3 random conjugations, stabilizations of either
/// sign (up to 4 strands) and, for framed braids, framing shifts by
/// multiples of `d`.
pub fn markov_cases(d: u32, samples: usize, max_len: usize, seed: u64) -> Result<Vec<MarkovCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sols = enumerate_solutions(d)?;
    let mut out = Vec::new();
    for family in [Family::Framed, Family::Classical, Family::Singular] {
        let kind = kind_of(family);
        let conj_kind = if family == Family::Framed { BraidKind::Framed } else { BraidKind::Classical };
        for _ in 0..samples {
            let sol = sols.choose(&mut rng).expect("nonempty");
            let n = rng.gen_range(1..=3);
            let len = rng.gen_range(0..=max_len);
            let base = BraidWord::random(kind, n, len, d as i64, &mut rng);
            let mut moved = base.clone();
            for _ in 0..rng.gen_range(1..=3) {
                let m = match rng.gen_range(0..4) {
                    0 | 1 => {
                        let l = rng.gen_range(1..=2);
                        MarkovMove::Conjugate(BraidWord::random(conj_kind, moved.strands(), l, d as i64, &mut rng))
                    }
                    _ if moved.strands() < 4 => {
                        if rng.gen_bool(0.5) {
                            MarkovMove::StabilizePos
                        } else {
                            MarkovMove::StabilizeNeg
                        }
                    }
                    _ if family == Family::Framed => MarkovMove::FramingShift {
                        j: rng.gen_range(1..=moved.strands()),
                        k: d as i64 * rng.gen_range(-1..=1),
                    },
                    _ => MarkovMove::Conjugate(BraidWord::random(conj_kind, moved.strands(), 1, d as i64, &mut rng)),
                };
                moved = moved.apply_move(&m)?;
            }
            out.push(MarkovCase { family, subset: sol.subset().to_vec(), base, moved });
        }
    }
    Ok(out)
}

/// Invariance of all three families under sampled Markov move sequences.
pub fn markov_suite(d: u32, samples: usize, max_len: usize, seed: u64) -> Result<SuiteReport> {
    let cases = markov_cases(d, samples, max_len, seed)?;
    let results: Vec<(bool, String)> = cases
        .par_iter()
        .map_init(InvariantEngine::new, |eng, c| -> Result<(bool, String)> {
            let a = eng.formal(c.family, &c.base, d, &c.subset)?;
            let b = eng.formal(c.family, &c.moved, d, &c.subset)?;
            Ok((a == b, format!("{} D={:?}: [{}] vs [{}]", c.family, c.subset, c.base, c.moved)))
        })
        .collect::<Result<_>>()?;
    let mut r = SuiteReport::new(format!("markov d={d}"));
    for (ok, label) in results {
        r.record(ok, || label);
    }
    Ok(r)
}

/// Which base braids a skein suite runs over.
#[derive(Clone, Copy, Debug)]
pub enum SkeinBases {
    /// Every freely reduced word of length at most the bound, one per
    /// distinct `(image, exponent sum)`.
    Exhaustive(usize),
    /// Random words of length at most `max_len`.
    Random { samples: usize, max_len: usize, seed: u64 },
}

fn alphabet(kind: SkeinKind, n: usize) -> Vec<Letter> {
    let mut a = Vec::new();
    for i in 1..n {
        a.push(Letter::Sigma { i, inverse: false });
        a.push(Letter::Sigma { i, inverse: true });
        if kind == SkeinKind::Singular {
            a.push(Letter::Tau { i });
        }
    }
    if kind == SkeinKind::Framed {
        for j in 1..=n {
            a.push(Letter::Framing { j, k: 1 });
        }
    }
    a
}

fn cancels(a: &Letter, b: &Letter) -> bool {
    matches!((a, b), (Letter::Sigma { i, inverse: x }, Letter::Sigma { i: j, inverse: y }) if i == j && x != y)
}

/// Freely reduced words over the relation's alphabet, deduplicated by the
/// data the skein check depends on.
pub fn exhaustive_bases(kind: SkeinKind, d: u32, n: usize, max_len: usize) -> Vec<BraidWord> {
    exhaustive_images(kind, d, n, max_len).into_iter().map(|(b, _)| b).collect()
}

/// Breadth-first over word length, keeping each base with its image. A word
/// whose `(image, ε)` was already reached is pruned with its extensions:
/// they repeat the extensions of the earlier, no longer, word.
fn exhaustive_images(kind: SkeinKind, d: u32, n: usize, max_len: usize) -> Vec<(BraidWord, Element)> {
    let alpha = alphabet(kind, n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut layer = vec![(Vec::<Letter>::new(), Element::unit(d, n))];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for (w, img) in layer {
            let b = BraidWord::new(n, w.clone()).expect("letters in range");
            if !seen.insert((img.to_string(), b.epsilon())) {
                continue;
            }
            if len < max_len {
                for l in &alpha {
                    if w.last().is_some_and(|p| cancels(p, l)) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(*l);
                    next.push((v, img.mul_letter(l)));
                }
            }
            out.push((b, img));
        }
        layer = next;
    }
    out
}

fn skein_kind_braid(kind: SkeinKind) -> BraidKind {
    kind_of(kind.family())
}

/// The framed, cubic and singular skein relations for every solution `D`
/// at the given `d`, on `n` strands.
pub fn skein_suite(d: u32, n: usize, bases: SkeinBases) -> Result<SuiteReport> {
    let sols: Vec<ESolution> = enumerate_solutions(d)?;
    let mut report = SuiteReport::new(format!("skein d={d} n={n}"));
    if n < 2 {
        return Ok(report);
    }
    for kind in SkeinKind::ALL {
        let words: Vec<(BraidWord, Element)> = match bases {
            SkeinBases::Exhaustive(l) => exhaustive_images(kind, d, n, l),
            SkeinBases::Random { samples, max_len, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (kind as u64 + 1).wrapping_mul(0x9e37_79b9));
                (0..samples)
                    .map(|_| {
                        let len = rng.gen_range(0..=max_len);
                        let b = BraidWord::random(skein_kind_braid(kind), n, len, d as i64, &mut rng);
                        let img = map_to_algebra(&b, d);
                        (b, img)
                    })
                    .collect()
            }
        };
        let mut jobs: Vec<(&(BraidWord, Element), usize, &ESolution)> = Vec::new();
        for w in &words {
            for i in 1..n {
                jobs.extend(sols.iter().map(|s| (w, i, s)));
            }
        }
        let results: Vec<(bool, String)> = jobs
            .par_iter()
            .map_init(InvariantEngine::new, |eng, (w, i, s)| -> Result<(bool, String)> {
                let (b, img) = w;
                let ok = eng.verify_skein_image(kind, img, b.epsilon(), *i, d, s.subset())?;
                Ok((ok, format!("{kind} at i={i} D={:?} base [{b}]", s.subset())))
            })
            .collect::<Result<_>>()?;
        let mut part = SuiteReport::default();
        for (ok, label) in results {
            part.record(ok, || label);
        }
        report.merge(part);
    }
    Ok(report)
}

/// Closed-form conditions against direct trace evaluation over the
/// parameter grids of all three quotients.
pub fn quotients_suite(d: u32, n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(format!("quotients d={d} n={n}"));
    for kind in [QuotientKind::Ytl, QuotientKind::Ftl, QuotientKind::Ctl] {
        for e in parameter_grid(kind, d) {
            let adm = admissible(kind, d, &e.params)?;
            let mut check = QuotientCheck::new(kind, d, e.params.clone());
            check.n = n;
            let van = trace_vanishes_on_ideal(&check)?.verdict;
            r.record(adm == van && adm == e.constructed_conforming, || {
                format!("{kind} {}: admissible={adm} vanishes={van}", e.label)
            });
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markov_cases_are_deterministic() {
        let a = markov_cases(2, 5, 6, 9).unwrap();
        let b = markov_cases(2, 5, 6, 9).unwrap();
        assert_eq!(a.len(), 15);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.moved, y.moved);
            assert!(x.moved.strands() <= 4);
        }
    }

    #[test]
    fn small_suites_pass() {
        assert!(markov_suite(2, 4, 5, 1).unwrap().passed());
        assert!(relations_suite(2, 3).unwrap().passed());
        let r = skein_suite(2, 2, SkeinBases::Exhaustive(2)).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checks > 0);
    }

    #[test]
    fn exhaustive_bases_dedupe() {
        let b = exhaustive_bases(SkeinKind::Cubic, 1, 2, 3);
        // s1^k for k in -3..=3.
        assert_eq!(b.len(), 7);
    }
}
