//! Duplication traces and their normal form: nonincreasing step lengths,
//! every step of length two or three copying pairwise-distinct symbols.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{distinct_count, duplicate_slice, DuplicationStep, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuplicationTrace {
    pub start: Word,
    pub steps: Vec<DuplicationStep>,
}

impl DuplicationTrace {
    pub fn new(start: Word, steps: Vec<DuplicationStep>) -> Self {
        DuplicationTrace { start, steps }
    }

    /// The final word, or an error naming the first step that does not fit.
    pub fn replay(&self) -> Result<Word> {
        let end = replay_slice(self.start.as_slice(), &self.steps)?;
        Ok(self.start.with_symbols(end))
    }

    /// True when lengths never increase and every step of length >= 2
    /// duplicates pairwise-distinct symbols.
    pub fn is_normal(&self) -> Result<bool> {
        let mut cur = self.start.as_slice().to_vec();
        let mut prev = usize::MAX;
        for &s in &self.steps {
            check_step(&cur, s)?;
            if s.length > prev || !distinct_factor(&cur, s) {
                return Ok(false);
            }
            prev = s.length;
            cur = duplicate_slice(&cur, s);
        }
        Ok(true)
    }
}

fn check_step(cur: &[Symbol], s: DuplicationStep) -> Result<()> {
    if s.length == 0 || s.length > 3 || !s.fits(cur.len()) {
        return Err(Error::InvalidTrace(format!(
            "step (i={}, k={}) on a word of length {}",
            s.index,
            s.length,
            cur.len()
        )));
    }
    Ok(())
}

fn replay_slice(start: &[Symbol], steps: &[DuplicationStep]) -> Result<Vec<Symbol>> {
    let mut cur = start.to_vec();
    for &s in steps {
        check_step(&cur, s)?;
        cur = duplicate_slice(&cur, s);
    }
    Ok(cur)
}

fn distinct_factor(cur: &[Symbol], s: DuplicationStep) -> bool {
    let f = &cur[s.index..s.index + s.length];
    distinct_count(f) == f.len()
}

fn st(index: usize, length: usize) -> DuplicationStep {
    DuplicationStep::new(index, length)
}

/// Replaces a short duplication followed by a longer one (`k1 < k2`) with
/// steps of nonincreasing length, listed in application order.
fn reorder(first: DuplicationStep, second: DuplicationStep) -> Vec<DuplicationStep> {
    let (i1, i2) = (first.index, second.index);
    match (first.length, second.length) {
        (1, 3) => {
            if i2 + 2 <= i1 {
                vec![st(i2, 3), st(i1 + 3, 1)]
            } else if i2 + 1 == i1 {
                vec![st(i1 - 1, 2), st(i1, 1), st(i1 + 3, 1)]
            } else if i2 == i1 {
                vec![st(i1, 2), st(i1, 1), st(i1 + 3, 1)]
            } else {
                vec![st(i2 - 1, 3), st(i1, 1)]
            }
        }
        (2, 3) => {
            if i2 < i1 {
                vec![st(i2, 3), st(i1 + 3, 2)]
            } else if i2 == i1 {
                vec![st(i1, 2), st(i1, 2), st(i1 + 2, 1)]
            } else if i2 == i1 + 1 {
                vec![st(i1, 2), st(i1, 2), st(i1 + 3, 1)]
            } else {
                vec![st(i2 - 2, 3), st(i1, 2)]
            }
        }
        (1, 2) => {
            if i2 < i1 {
                vec![st(i2, 2), st(i1 + 2, 1)]
            } else if i2 == i1 {
                vec![st(i1, 1), st(i1, 1), st(i1, 1)]
            } else {
                vec![st(i2 - 1, 2), st(i1, 1)]
            }
        }
        _ => unreachable!("reorder needs k1 < k2 <= 3"),
    }
}

/// Splits a length-2 or length-3 duplication of a factor with a repeated
/// symbol into two shorter ones.
fn split(cur: &[Symbol], s: DuplicationStep) -> Vec<DuplicationStep> {
    let i = s.index;
    let f = &cur[i..i + s.length];
    match *f {
        [a, b] if a == b => vec![st(i, 1), st(i, 1)],
        [a, b, c] if a == c && a != b => vec![st(i + 1, 2), st(i + 2, 1)],
        [a, b, c] if a == b && b != c => vec![st(i + 1, 2), st(i + 3, 1)],
        [a, b, c] if b == c && a != b => vec![st(i, 2), st(i + 1, 1)],
        [_, _, _] => vec![st(i, 2), st(i, 1)],
        _ => unreachable!("split needs a factor with a repeated symbol"),
    }
}

/// Rewrites a trace into normal form without changing its final word.
pub fn normalize_trace(trace: &DuplicationTrace) -> Result<DuplicationTrace> {
    let start = trace.start.as_slice();
    let target = replay_slice(start, &trace.steps)?;
    let mut steps = trace.steps.clone();
    // each rewrite strictly lowers the multiset of lengths in a well-founded
    // order or moves a shorter step later, so this terminates; the cap only
    // guards against a broken rule
    let cap = 64 * (steps.len() + 1) * (steps.len() + 1) * 3;
    for _ in 0..cap {
        let mut cur = start.to_vec();
        let mut rewrite = None;
        for j in 0..steps.len() {
            let s = steps[j];
            if s.length >= 2 && !distinct_factor(&cur, s) {
                rewrite = Some((j, 1, split(&cur, s), cur));
                break;
            }
            if j + 1 < steps.len() && s.length < steps[j + 1].length {
                rewrite = Some((j, 2, reorder(s, steps[j + 1]), cur));
                break;
            }
            cur = duplicate_slice(&cur, s);
        }
        let Some((j, width, replacement, before)) = rewrite else {
            debug_assert_eq!(replay_slice(start, &steps)?, target);
            return Ok(DuplicationTrace::new(trace.start.clone(), steps));
        };
        if replay_slice(&before, &replacement)? != replay_slice(&before, &steps[j..j + width])? {
            return Err(Error::InvalidTrace(format!(
                "rewrite of steps {:?} changed the word",
                &steps[j..j + width]
            )));
        }
        steps.splice(j..j + width, replacement);
    }
    Err(Error::InvalidTrace("normalization did not converge".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn all_words(len: usize) -> Vec<Vec<Symbol>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..3).map(move |c| {
                        let mut v = v.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn examples() {
        let t = DuplicationTrace::new(w("012"), vec![st(0, 1), st(0, 3)]);
        let n = normalize_trace(&t).unwrap();
        assert_eq!(n.replay().unwrap(), t.replay().unwrap());
        assert!(n.is_normal().unwrap());

        let t = DuplicationTrace::new(w("012"), vec![st(0, 3)]);
        assert_eq!(normalize_trace(&t).unwrap(), t);

        let t = DuplicationTrace::new(w("00"), vec![st(0, 2)]);
        let n = normalize_trace(&t).unwrap();
        assert_eq!(n.steps, vec![st(0, 1), st(0, 1)]);
    }

    #[test]
    fn invalid_trace() {
        let t = DuplicationTrace::new(w("01"), vec![st(0, 3)]);
        assert!(matches!(normalize_trace(&t), Err(Error::InvalidTrace(_))));
    }

    /// Every rewrite rule, on every placement over short ternary words.
    #[test]
    fn rules_preserve_words_exhaustively() {
        for len in 1..=7 {
            for x in all_words(len) {
                for k1 in 1..=3usize {
                    for i1 in 0..=len.saturating_sub(k1) {
                        if i1 + k1 > len {
                            continue;
                        }
                        let s1 = st(i1, k1);
                        let y = duplicate_slice(&x, s1);
                        if k1 >= 2 && !distinct_factor(&x, s1) {
                            let r = split(&x, s1);
                            assert_eq!(replay_slice(&x, &r).unwrap(), y, "split {x:?} {s1:?}");
                        }
                        for k2 in k1 + 1..=3 {
                            for i2 in 0..(y.len() + 1).saturating_sub(k2) {
                                let s2 = st(i2, k2);
                                let z = duplicate_slice(&y, s2);
                                let r = reorder(s1, s2);
                                assert_eq!(
                                    replay_slice(&x, &r).unwrap(),
                                    z,
                                    "reorder {x:?} {s1:?} {s2:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
